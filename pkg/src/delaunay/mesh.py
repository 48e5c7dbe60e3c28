"""Quad meshes of Delaunay surfaces and chained composite nodoids.

Every vertex is an exact evaluation of the surface, never an interpolant,
and every normal comes from the closed-form normal of the piece it sits on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .conics import ConicKind, ConicSpec
from .errors import AssemblyError, ValidationError
from .numerics import find_root_1d
from .roulettes import RouletteKind, RouletteSpec, roulette_arclength, roulette_eval
from .surfgeom import PatchDomain, SurfaceSpec, surface_normal, volume_of_revolution

TWO_PI = 2.0 * math.pi
SEAM_TOL = 1e-12


@dataclass
class Mesh:
    """Vertices, unit normals (one per vertex) and quad/triangle faces (0-based)."""

    vertices: np.ndarray = field(default_factory=lambda: np.zeros((0, 3)))
    normals: np.ndarray = field(default_factory=lambda: np.zeros((0, 3)))
    faces: list[tuple[int, ...]] = field(default_factory=list)
    closed_in_v: bool = False

    def __post_init__(self):
        self.vertices = np.asarray(self.vertices, dtype=float).reshape(-1, 3)
        self.normals = np.asarray(self.normals, dtype=float).reshape(-1, 3)
        if len(self.vertices) != len(self.normals):
            raise ValidationError("need exactly one normal per vertex")
        n = len(self.vertices)
        for face in self.faces:
            if len(face) < 3 or min(face) < 0 or max(face) >= n:
                raise ValidationError(f"bad face {face!r} for {n} vertices")


class _Ring(NamedTuple):
    """One parallel: where it sits and how to evaluate its normal."""

    t: float
    spec: SurfaceSpec
    g: float
    f: float
    sign: float


def sample_parameters(
    spec: RouletteSpec, t1: float, t2: float, count: int, sampling: str = "uniform"
) -> np.ndarray:
    """``count`` parameters from ``t1`` to ``t2`` (either direction).

    ``"arclength"`` spaces them evenly in meridian arc length by inverting
    the closed-form arc length; ``"uniform"`` spaces them evenly in ``t``.
    """
    if count < 2:
        raise ValidationError(f"need at least 2 samples, got {count}")
    if sampling == "uniform":
        return np.linspace(t1, t2, count)
    if sampling != "arclength":
        raise ValidationError(f"unknown sampling {sampling!r}")
    lo, hi = min(t1, t2), max(t1, t2)
    total = roulette_arclength(spec, lo, hi)
    ts = [lo]
    for k in range(1, count - 1):
        target = total * k / (count - 1)
        root = find_root_1d(lambda t: roulette_arclength(spec, lo, t) - target, ts[-1], hi, tol=1e-14)
        ts.append(root.root)
    ts.append(hi)
    ts = np.asarray(ts)
    return ts if t1 <= t2 else ts[::-1].copy()


def _v_grid(v1: float, v2: float, nv: int) -> tuple[np.ndarray, bool]:
    closed = abs((v2 - v1) - TWO_PI) <= SEAM_TOL
    if closed:
        return v1 + (v2 - v1) * np.arange(nv) / nv, True
    return np.linspace(v1, v2, nv), False


def _revolve(rings: list[_Ring], vs: np.ndarray, closed_in_v: bool, close_chain: bool) -> Mesh:
    nv = len(vs)
    verts = np.empty((len(rings) * nv, 3))
    norms = np.empty_like(verts)
    for i, ring in enumerate(rings):
        for j, v in enumerate(vs):
            k = i * nv + j
            # identical arithmetic to surface_point so vertices are exact
            verts[k] = (ring.f * math.cos(v), ring.f * math.sin(v), ring.g)
            n = surface_normal(ring.spec, ring.t, v)
            norms[k] = (ring.sign * n.x, ring.sign * n.y, ring.sign * n.z)
    faces = []
    ncols = nv if closed_in_v else nv - 1
    nrows = len(rings) if close_chain else len(rings) - 1
    for i in range(nrows):
        i2 = (i + 1) % len(rings)
        for j in range(ncols):
            j2 = (j + 1) % nv
            faces.append((i * nv + j, i2 * nv + j, i2 * nv + j2, i * nv + j2))
    return Mesh(verts, norms, faces, closed_in_v)


def tessellate(
    spec: SurfaceSpec,
    patch: PatchDomain,
    nt: int,
    nv: int,
    sampling: str = "uniform",
) -> Mesh:
    """``nt x nv`` grid of surface points with exact normals and quad faces.

    When the patch spans a full turn the seam is stitched and each ring has
    ``nv`` distinct vertices; otherwise both v-edges are kept.  Faces are
    wound so their geometric normal agrees with :func:`surface_normal`.
    """
    if nt < 2 or nv < 3:
        raise ValidationError(f"need nt >= 2 and nv >= 3, got nt={nt}, nv={nv}")
    ts = sample_parameters(spec.roulette, patch.t1, patch.t2, nt, sampling)
    rings = []
    for t in ts:
        g, f = roulette_eval(spec.roulette, float(t))
        rings.append(_Ring(float(t), spec, g, f, 1.0))
    vs, closed = _v_grid(patch.v1, patch.v2, nv)
    return _revolve(rings, vs, closed, close_chain=False)


def mesh_edges(mesh: Mesh) -> dict[tuple[int, int], int]:
    """Undirected edges with the number of faces using each."""
    edges: dict[tuple[int, int], int] = {}
    for face in mesh.faces:
        for k in range(len(face)):
            a, b = face[k], face[(k + 1) % len(face)]
            key = (a, b) if a < b else (b, a)
            edges[key] = edges.get(key, 0) + 1
    return edges


def euler_characteristic(mesh: Mesh) -> int:
    return len(mesh.vertices) - len(mesh_edges(mesh)) + len(mesh.faces)


def boundary_loops(mesh: Mesh) -> int:
    """Number of closed loops formed by edges that touch a single face."""
    adj: dict[int, list[int]] = {}
    for (a, b), count in mesh_edges(mesh).items():
        if count == 1:
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
    seen: set[int] = set()
    loops = 0
    for start in adj:
        if start in seen:
            continue
        loops += 1
        stack = [start]
        while stack:
            node = stack.pop()
            if node in seen:
                continue
            seen.add(node)
            stack.extend(adj[node])
    return loops


def discrete_volume(mesh: Mesh) -> float:
    """Signed volume by the divergence theorem, faces fanned into triangles."""
    p = mesh.vertices
    by_arity: dict[int, list[tuple[int, ...]]] = {}
    for face in mesh.faces:
        by_arity.setdefault(len(face), []).append(face)
    total = 0.0
    for arity, faces in by_arity.items():
        idx = np.asarray(faces)
        p0 = p[idx[:, 0]]
        for k in range(1, arity - 1):
            total += float(np.einsum("ij,ij->", p0, np.cross(p[idx[:, k]], p[idx[:, k + 1]])))
    return total / 6.0


@dataclass(frozen=True)
class CompositePlan:
    """Pieces of a chained nodoid and their measured joins.

    ``pieces`` lists ``(roulette spec, t_start, t_end, g_offset)``; the
    second-focus arcs run from ``T`` down to ``-T`` so that the axial
    coordinate keeps increasing along the chain.
    """

    pieces: tuple[tuple[SurfaceSpec, float, float, float], ...]
    join_gap: float
    closing_gap: float
    closed: bool


def plan_composite_nodoid(
    conic: ConicSpec,
    T: float,
    periods: int,
    closed: bool = False,
    join_tol: float = 1e-5,
) -> CompositePlan:
    """Lay out ``periods`` copies of (first-focus arc, reversed second-focus arc).

    Each piece is translated along the axis so it starts where the previous
    one ended.  The radii there differ by ``|f1(T) - f2(T)|``, which equals
    ``2ab / sqrt(c^2 cosh^2 T - a^2)`` and so decays like ``exp(-T)``; it
    must not exceed ``join_tol``.
    """
    if conic.kind is not ConicKind.HYPERBOLA:
        raise ValidationError("composite nodoids need a hyperbola")
    if not (math.isfinite(T) and T > 0):
        raise ValidationError(f"T must be positive, got {T!r}")
    if periods < 1:
        raise ValidationError(f"periods must be >= 1, got {periods!r}")
    s1 = SurfaceSpec(RouletteSpec(conic, RouletteKind.NODARY1))
    s2 = SurfaceSpec(RouletteSpec(conic, RouletteKind.NODARY2))
    g1a, f1a = roulette_eval(s1.roulette, -T)
    g1b, f1b = roulette_eval(s1.roulette, T)
    g2a, f2a = roulette_eval(s2.roulette, T)
    g2b, f2b = roulette_eval(s2.roulette, -T)
    gap = max(abs(f1b - f2a), abs(f2b - f1a))
    if gap > join_tol:
        raise AssemblyError(f"radial gap {gap:.3g} at the joins exceeds join_tol={join_tol:g}", gap)
    pieces = []
    offset = 0.0 - g1a
    for _ in range(periods):
        pieces.append((s1, -T, T, offset))
        offset += g1b - g2a
        pieces.append((s2, T, -T, offset))
        offset += g2b - g1a
    closing_gap = abs(f2b - f1a) if closed else 0.0
    return CompositePlan(tuple(pieces), gap, closing_gap, closed)


def _plan_rings(plan: CompositePlan, nt: int, sampling: str) -> list[_Ring]:
    rings = []
    for spec, ta, tb, offset in plan.pieces:
        sign = 1.0 if ta < tb else -1.0
        for t in sample_parameters(spec.roulette, ta, tb, nt, sampling):
            g, f = roulette_eval(spec.roulette, float(t))
            rings.append(_Ring(float(t), spec, g + offset, f, sign))
    return rings


def assemble_composite_nodoid(
    conic: ConicSpec,
    T: float,
    periods: int,
    closed: bool = False,
    join_tol: float = 1e-5,
    nt: int = 64,
    nv: int = 32,
    sampling: str = "uniform",
) -> Mesh:
    """Revolve a chained nodoid profile into one mesh.

    Both end rings of every join are kept and connected by a band of zero
    axial length, so each vertex stays an exact point of its own piece.
    ``closed=True`` adds a band from the last ring back to the first, which
    leaves a surface without boundary.
    """
    if nt < 2 or nv < 3:
        raise ValidationError(f"need nt >= 2 and nv >= 3, got nt={nt}, nv={nv}")
    plan = plan_composite_nodoid(conic, T, periods, closed, join_tol)
    rings = _plan_rings(plan, nt, sampling)
    vs, _ = _v_grid(0.0, TWO_PI, nv)
    return _revolve(rings, vs, True, close_chain=closed)


def composite_reference_volume(plan: CompositePlan) -> float:
    """Signed ``pi * int f^2 dg`` along the chain, matching :func:`discrete_volume`'s sign.

    Pieces contribute their volumes of revolution (reversed arcs negated);
    the closing band is a straight segment, whose frustum volume is exact.
    The sign follows the face winding, whose normal points towards the axis
    where the chain moves forward, hence the overall minus.
    """
    total = 0.0
    for spec, ta, tb, _ in plan.pieces:
        if ta < tb:
            total += volume_of_revolution(spec, ta, tb, 1e-12, 1e-12)
        else:
            total -= volume_of_revolution(spec, tb, ta, 1e-12, 1e-12)
    if plan.closed:
        first_spec, ta, _, off0 = plan.pieces[0]
        last_spec, _, tb, off1 = plan.pieces[-1]
        g0, f0 = roulette_eval(first_spec.roulette, ta)
        g1, f1 = roulette_eval(last_spec.roulette, tb)
        dg = (g0 + off0) - (g1 + off1)
        total += math.pi * dg * (f0 * f0 + f0 * f1 + f1 * f1) / 3.0
    return -total

