import math

import numpy as np
import pytest

from delaunay.conics import ConicSpec
from delaunay.errors import AssemblyError, ValidationError
from delaunay.mesh import (
    Mesh,
    assemble_composite_nodoid,
    boundary_loops,
    composite_reference_volume,
    discrete_volume,
    euler_characteristic,
    plan_composite_nodoid,
    sample_parameters,
    tessellate,
)
from delaunay.roulettes import roulette_arclength
from delaunay.surfgeom import PatchDomain, SurfaceSpec, surface_normal, surface_point


def test_minimal_closed_grid():
    mesh = tessellate(SurfaceSpec.of("catenary", None, 1.0), PatchDomain(-1, 1), 2, 3)
    assert len(mesh.vertices) == 6
    assert mesh.closed_in_v
    assert len(mesh.faces) == 3
    assert boundary_loops(mesh) == 2


def test_grid_size_validation():
    spec = SurfaceSpec.of("catenary", None, 1.0)
    with pytest.raises(ValidationError):
        tessellate(spec, PatchDomain(-1, 1), 1, 8)
    with pytest.raises(ValidationError):
        tessellate(spec, PatchDomain(-1, 1), 4, 2)


@pytest.mark.parametrize("kind", ["catenary", "undulary2", "nodary1"])
def test_vertices_and_normals_are_exact(kind):
    spec = SurfaceSpec.of(kind, None if kind == "catenary" else 1.5, 0.8)
    patch = PatchDomain(-1.3, 0.9, 0.2, 4.0)
    nt, nv = 7, 5
    mesh = tessellate(spec, patch, nt, nv)
    ts = np.linspace(patch.t1, patch.t2, nt)
    vs = np.linspace(patch.v1, patch.v2, nv)
    for i, t in enumerate(ts):
        for j, v in enumerate(vs):
            k = i * nv + j
            assert tuple(mesh.vertices[k]) == tuple(surface_point(spec, t, v))
            assert tuple(mesh.normals[k]) == tuple(surface_normal(spec, t, v))
    assert np.allclose(np.linalg.norm(mesh.normals, axis=1), 1.0, atol=1e-12)


def test_open_patch_is_a_disc():
    mesh = tessellate(SurfaceSpec.of("undulary1", 2, 1), PatchDomain(0, 2, 0, 3), 6, 9)
    assert not mesh.closed_in_v
    assert euler_characteristic(mesh) == 1
    assert boundary_loops(mesh) == 1


def test_closed_patch_is_an_annulus():
    mesh = tessellate(SurfaceSpec.of("nodary2", 1, 1), PatchDomain(-1, 1), 5, 8)
    assert euler_characteristic(mesh) == 0
    assert boundary_loops(mesh) == 2


def test_face_winding_agrees_with_normals():
    spec = SurfaceSpec.of("nodary1", 1.2, 0.7)
    mesh = tessellate(spec, PatchDomain(-1, 1.5), 12, 16)
    p = mesh.vertices
    for face in mesh.faces:
        geo = np.cross(p[face[1]] - p[face[0]], p[face[3]] - p[face[0]])
        assert np.dot(geo, mesh.normals[face[0]]) > 0


def test_mesh_rejects_bad_faces():
    with pytest.raises(ValidationError):
        Mesh(np.zeros((3, 3)), np.zeros((3, 3)), [(0, 1, 3)])
    with pytest.raises(ValidationError):
        Mesh(np.zeros((3, 3)), np.zeros((2, 3)), [])


def test_arclength_sampling_is_uniform_in_length():
    spec = SurfaceSpec.of("nodary1", 1, 1).roulette
    ts = sample_parameters(spec, -4.0, 4.0, 9, "arclength")
    lengths = np.diff([roulette_arclength(spec, -4.0, t) for t in ts])
    assert np.allclose(lengths, lengths[0], rtol=1e-10)
    assert ts[0] == -4.0 and ts[-1] == 4.0
    backwards = sample_parameters(spec, 4.0, -4.0, 9, "arclength")
    assert np.allclose(backwards, ts[::-1])
    with pytest.raises(ValidationError):
        sample_parameters(spec, 0, 1, 5, "chebyshev")


def test_closed_mesh_discrete_volume():
    # a closed composite has no boundary, so the divergence sum is its volume
    conic = ConicSpec.hyperbola(1.0, 1.0)
    plan = plan_composite_nodoid(conic, 14.0, 1, closed=True)
    mesh = assemble_composite_nodoid(conic, 14.0, 1, closed=True, nt=200, nv=128, sampling="arclength")
    ref = composite_reference_volume(plan)
    assert discrete_volume(mesh) == pytest.approx(ref, rel=2e-3)


def test_composite_gap_follows_closed_form():
    conic = ConicSpec.hyperbola(1.0, 1.0)
    c = conic.c
    for T in (13.0, 15.0):
        plan = plan_composite_nodoid(conic, T, 1)
        # f2 - f1 = 2 a b / sqrt(c^2 cosh^2 T - a^2)
        assert plan.join_gap == pytest.approx(2 / math.sqrt((c * math.cosh(T)) ** 2 - 1), rel=1e-6)


def test_composite_gap_too_large():
    with pytest.raises(AssemblyError) as info:
        assemble_composite_nodoid(ConicSpec.hyperbola(1.0, 1.0), 2.0, 1)
    assert info.value.gap > 1e-5


def test_composite_validation():
    with pytest.raises(ValidationError):
        plan_composite_nodoid(ConicSpec.ellipse(2.0, 1.0), 8.0, 1)
    with pytest.raises(ValidationError):
        plan_composite_nodoid(ConicSpec.hyperbola(1.0, 1.0), 8.0, 0)
    with pytest.raises(ValidationError):
        plan_composite_nodoid(ConicSpec.hyperbola(1.0, 1.0), -1.0, 1)


def test_composite_pieces_chain_axially():
    conic = ConicSpec.hyperbola(1.0, 1.0)
    plan = plan_composite_nodoid(conic, 13.0, 2)
    from delaunay.roulettes import roulette_eval

    ends = []
    for spec, ta, tb, off in plan.pieces:
        ga = roulette_eval(spec.roulette, ta).g + off
        gb = roulette_eval(spec.roulette, tb).g + off
        assert gb > ga
        ends.append((ga, gb))
    for (_, prev_end), (start, _) in zip(ends, ends[1:]):
        assert start == pytest.approx(prev_end, abs=1e-12)


def test_composite_topology():
    conic = ConicSpec.hyperbola(1.0, 1.0)
    open_mesh = assemble_composite_nodoid(conic, 13.0, 2, closed=False, nt=16, nv=8)
    assert boundary_loops(open_mesh) == 2
    closed_mesh = assemble_composite_nodoid(conic, 13.0, 4, closed=True, nt=16, nv=8)
    assert boundary_loops(closed_mesh) == 0
    assert euler_characteristic(closed_mesh) == 0
    assert np.allclose(np.linalg.norm(closed_mesh.normals, axis=1), 1.0, atol=1e-12)
