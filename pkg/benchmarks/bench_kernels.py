"""Compare the compiled and pure-Python orbit kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Two tables: level sizes only (the hot loop) and full coset data with
reduced words. Each case runs both backends, checks that they agree, and
prints the best wall time of each.
"""
import argparse
import time

from flaghodge import _core
from flaghodge.rootsys import LeviSpec, build_root_system, coset_length_counts, parabolic_coset_data

COUNT_CASES = [
    ("E", 7, ()),
    ("E", 6, ()),
    ("A", 8, ()),
    ("B", 7, (1,)),
]

CASES = [
    ("E", 6, ()),
    ("E", 7, (1, 2, 3, 4, 5, 6)),
    ("E", 7, (2, 3, 4, 5)),
    ("B", 6, ()),
    ("D", 6, (1,)),
    ("F", 4, ()),
]


def _best(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t)
    return min(times), result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _core._fast is None:
        raise SystemExit("compiled backend not built; reinstall with Cython available")
    header = f"{'case':<22}{'cosets':>10}{'python s':>12}{'cython s':>12}{'speedup':>10}"
    for title, cases, fn in (("level sizes", COUNT_CASES, coset_length_counts),
                             ("coset data with words", CASES, parabolic_coset_data)):
        print(f"\n{title}\n{header}")
        for t, r, nodes in cases:
            rs = build_root_system(t, r)
            levi = LeviSpec(nodes)
            py_t, py = _best(lambda: fn(rs, levi, budget=10**8, backend="python"), args.repeat)
            cy_t, cy = _best(lambda: fn(rs, levi, budget=10**8, backend="cython"), args.repeat)
            assert py == cy, f"backends disagree on {t}{r} {nodes}"
            size = sum(py) if fn is coset_length_counts else len(py)
            label = f"{t}{r} / {{{','.join(map(str, nodes)) or '-'}}}"
            print(f"{label:<22}{size:>10}{py_t:>12.3f}{cy_t:>12.3f}{py_t / cy_t:>9.1f}x")


if __name__ == "__main__":
    main()
