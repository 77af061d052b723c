"""Compare the compiled and pure-Python convolution kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each workload is a product of characters that the package actually forms;
both backends must return identical maps.
"""

from __future__ import annotations

import argparse
import time

from spinfactor import kernels
from spinfactor.charalg import adjoint_character, irreducible_character
from spinfactor.rootsys import root_system


def workloads():
    b3 = root_system("B3")
    f4 = root_system("F4")
    g2 = root_system("G2")
    a4 = root_system("A4")
    yield "G2 V(2,2) x V(2,2)", irreducible_character(g2, (2, 2)), irreducible_character(g2, (2, 2))
    yield "B3 V(rho) x V(rho)", irreducible_character(b3, b3.rho), irreducible_character(b3, b3.rho)
    yield "A4 V(rho) x adjoint", irreducible_character(a4, a4.rho), adjoint_character(a4)
    yield "F4 V(0,0,1,1) x adjoint", irreducible_character(f4, (0, 0, 1, 1)), adjoint_character(f4)


def best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if kernels.BACKEND != "compiled":
        print("compiled extension not available; only the python backend will run")
    print(f"{'workload':28s} {'terms':>14s} {'python s':>10s} {'compiled s':>11s} {'speedup':>8s}")
    for name, a, b in workloads():
        x, y = dict(a.terms), dict(b.terms)
        ref = kernels.convolve(x, y, backend="python")
        t_py = best_of(lambda: kernels.convolve(x, y, backend="python"), args.repeat)
        if kernels.BACKEND == "compiled":
            assert kernels.convolve(x, y, backend="compiled") == ref
            t_c = best_of(lambda: kernels.convolve(x, y, backend="compiled"), args.repeat)
            ratio = f"{t_py / t_c:7.1f}x"
            t_c_s = f"{t_c:11.4f}"
        else:
            t_c_s, ratio = f"{'-':>11s}", f"{'-':>8s}"
        terms = f"{len(x)}x{len(y)}"
        print(f"{name:28s} {terms:>14s} {t_py:10.4f} {t_c_s} {ratio}")


if __name__ == "__main__":
    main()
