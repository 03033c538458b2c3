"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Both backends are imported directly, so this runs regardless of which one
``aztec_spectra.kernels`` picked.  Every case also asserts the two agree.
"""

from __future__ import annotations

import argparse
import time

from aztec_spectra import _purepy
from aztec_spectra.graphs import adjacency_matrix, checkerboard
from aztec_spectra.trees import laplacian

try:
    from aztec_spectra import _ckernels
except ImportError:
    _ckernels = None


def _cases():
    oc13 = checkerboard(13, 13, "odd")
    adj13 = adjacency_matrix(oc13).to_lists()
    lap13 = laplacian(oc13).minor(oc13.order - 1).to_lists()
    weighted = adjacency_matrix(checkerboard(7, 7, "even"), "signed-uv").to_lists()
    big = checkerboard(25, 25, "odd")
    bits = []
    for row in adjacency_matrix(big).to_lists():
        bits.append(sum(1 << j for j, x in enumerate(row) if x & 1))
    oc55 = checkerboard(5, 5, "odd")
    return [
        ("berkowitz OC13x13 (int, 84x84)", "berkowitz", (adj13,)),
        ("berkowitz EC7x7 (u,v weights)", "berkowitz", (weighted,)),
        ("bareiss Laplacian minor OC13x13", "bareiss_det", (lap13,)),
        (f"det_gf2 OC25x25 ({big.order}x{big.order})", "det_gf2", (bits, big.order)),
        ("tree_profiles OC5x5 (768 trees)", "tree_profiles", (oc55.order, list(oc55.edges), 10**6)),
    ]


def _best(fn, args, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled extension not built; only the pure-Python timings are shown")
    print(f"{'case':<36} {'pure (s)':>10} {'cython (s)':>11} {'speedup':>8}")
    for label, name, fargs in _cases():
        tp, rp = _best(getattr(_purepy, name), fargs, args.repeat)
        if _ckernels is None:
            print(f"{label:<36} {tp:>10.4f} {'-':>11} {'-':>8}")
            continue
        tc, rc = _best(getattr(_ckernels, name), fargs, args.repeat)
        if rp != rc:
            raise SystemExit(f"backends disagree on {label}")
        print(f"{label:<36} {tp:>10.4f} {tc:>11.4f} {tp / tc:>7.1f}x")


if __name__ == "__main__":
    main()
