"""Delaunay surfaces (catenoids, unduloids, nodoids) from roulettes of conic foci."""

from ._kernels import active as active_backend
from ._kernels import available_backends, use_backend
from .conics import ConicKind, ConicSpec, conic_arclength, conic_foci, conic_point, conic_tangent, pedal_foot
from .errors import (
    AssemblyError,
    BracketError,
    ConvergenceError,
    DegenerateError,
    DelaunayError,
    QuadratureError,
    SingularJacobianError,
    ValidationError,
)
from .export import ProfileSample, sample_profile, write_obj, write_profile_csv
from .mesh import Mesh, assemble_composite_nodoid, discrete_volume, tessellate
from .roulettes import (
    RouletteKind,
    RoulettePair,
    RouletteSpec,
    family_constant_length,
    roulette_arclength,
    roulette_by_rolling,
    roulette_eval,
    roulette_jet,
    roulette_profile,
)
from .solver import FitKind, FitRequest, FitResult, constant_volume_family, fit_catenoid, fit_nodoid, fit_unduloid
from .surfgeom import (
    CurvatureBundle,
    PatchDomain,
    SurfaceKind,
    SurfaceSpec,
    curvatures_closed_form,
    curvatures_generic,
    gauss_bonnet_residual,
    lateral_area,
    surface_normal,
    surface_point,
    total_curvature,
    total_curvature_numeric,
    volume_of_revolution,
)

__version__ = "0.1.0"
