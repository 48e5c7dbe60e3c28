"""Text serialization: OBJ meshes and CSV meridian profiles.

Numbers are written with 17 significant digits so every float64 survives a
round trip, and output depends on nothing but the inputs.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from typing import BinaryIO, Iterable, TextIO

from .errors import ValidationError
from .mesh import Mesh, sample_parameters
from .roulettes import roulette_eval
from .surfgeom import SurfaceSpec, curvatures_closed_form

FLOAT_FMT = "%.17g"


@dataclass(frozen=True)
class ProfileSample:
    t: float
    g: float
    f: float
    H: float
    K: float

    def __post_init__(self):
        if not self.f > 0:
            raise ValidationError(f"profile radius must be positive, got f={self.f!r}")


def sample_profile(
    spec: SurfaceSpec,
    t_min: float,
    t_max: float,
    samples: int,
    sampling: str = "uniform",
) -> list[ProfileSample]:
    """Meridian points with the closed-form mean and Gaussian curvature."""
    if samples == 1:
        ts = [t_min]
    else:
        ts = sample_parameters(spec.roulette, t_min, t_max, samples, sampling)
    out = []
    for t in ts:
        t = float(t)
        g, f = roulette_eval(spec.roulette, t)
        bundle = curvatures_closed_form(spec, t)
        out.append(ProfileSample(t, g, f, bundle.H, bundle.K))
    return out


def _emit(sink: BinaryIO | TextIO, text: str) -> None:
    if isinstance(sink, io.TextIOBase):
        sink.write(text)
    else:
        sink.write(text.encode("ascii"))


def _fmt(*values: float) -> str:
    return " ".join(FLOAT_FMT % (float(x) + 0.0) for x in values)


def write_obj(mesh: Mesh, sink: BinaryIO | TextIO) -> None:
    """``v``, ``vn`` and ``f i//i ...`` lines (1-based), nothing else."""
    lines = [f"v {_fmt(*p)}\n" for p in mesh.vertices]
    lines += [f"vn {_fmt(*n)}\n" for n in mesh.normals]
    lines += ["f " + " ".join(f"{i + 1}//{i + 1}" for i in face) + "\n" for face in mesh.faces]
    _emit(sink, "".join(lines))


def write_profile_csv(samples: Iterable[ProfileSample], sink: BinaryIO | TextIO) -> None:
    """Header ``t,g,f,H,K`` followed by one row per sample."""
    lines = ["t,g,f,H,K\n"]
    for s in samples:
        lines.append(",".join(FLOAT_FMT % (x + 0.0) for x in (s.t, s.g, s.f, s.H, s.K)) + "\n")
    _emit(sink, "".join(lines))


def read_obj_vertices(data: bytes | str) -> list[tuple[float, float, float]]:
    """Vertex positions of an OBJ text; used to check round trips."""
    if isinstance(data, bytes):
        data = data.decode("ascii")
    out = []
    for line in data.splitlines():
        parts = line.split()
        if parts and parts[0] == "v":
            out.append(tuple(float(x) for x in parts[1:4]))
    return out
