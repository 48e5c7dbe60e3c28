"""Compare the compiled and pure-Python kernel backends.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]

Each workload runs once per backend to warm up, then ``--repeat`` times; the
best wall time is reported together with the largest difference between the
two backends' results.
"""

import argparse
import time

import numpy as np

from delaunay import available_backends, use_backend
from delaunay.conics import ConicSpec
from delaunay.mesh import tessellate
from delaunay.roulettes import RouletteSpec, roulette_profile
from delaunay.solver import FitRequest, fit_nodoid
from delaunay.surfgeom import PatchDomain, SurfaceSpec, total_curvature_numeric, volume_of_revolution

NODARY = RouletteSpec(ConicSpec.hyperbola(1.3, 0.7), "nodary2")
UNDULARY = SurfaceSpec.of("undulary1", 2.0, 1.0)


def profile_work():
    g, f = roulette_profile(NODARY, np.linspace(-3.0, 3.0, 2001))
    return np.concatenate([g, f])


def integrate_work():
    vals = []
    for k in range(50):
        t = 0.5 + 0.1 * k
        vals.append(volume_of_revolution(UNDULARY, -t, t, 1e-12, 1e-12))
        vals.append(total_curvature_numeric(UNDULARY, PatchDomain(-t, t)))
    return np.asarray(vals)


def mesh_work():
    return tessellate(SurfaceSpec(NODARY), PatchDomain(-2.0, 2.0), 96, 48).vertices.ravel()


def fit_work():
    r = fit_nodoid(FitRequest("nodoid", 1.0, 1.0, 1.0))
    return np.asarray([r.conic.a, r.conic.b])


WORKLOADS = [
    ("profile, 2001 points", profile_work),
    ("volume + total curvature x50", integrate_work),
    ("mesh 96x48", mesh_work),
    ("nodoid fit", fit_work),
]


def best_time(fn, repeat):
    fn()
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - start)
    return min(times), out


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = available_backends()
    if "compiled" not in backends:
        print("compiled backend not built; only timing the python kernels")
    print(f"{'workload':32s}" + "".join(f"{b:>12s}" for b in backends) + f"{'speedup':>10s}{'max diff':>12s}")
    for name, fn in WORKLOADS:
        times, outs = [], []
        for b in backends:
            use_backend(b)
            t, out = best_time(fn, args.repeat)
            times.append(t)
            outs.append(out)
        row = f"{name:32s}" + "".join(f"{t * 1e3:10.1f}ms" for t in times)
        if len(times) == 2:
            diff = float(np.max(np.abs(outs[0] - outs[1])))
            row += f"{times[1] / times[0]:9.1f}x{diff:12.1e}"
        print(row)
    use_backend(backends[0])


if __name__ == "__main__":
    main()
