"""Time the compiled and pure-Python kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat N]

Also runs the end-to-end index computation on a few catalog algebras
under each backend (the backend is chosen per subprocess via
LIECLASS_PURE_PYTHON).
"""
import argparse
import os
import random
import subprocess
import sys
import timeit

from lieclass.kernels import backends


def _matrix(rng, n, bound):
    rows = []
    for _ in range(n):
        rows.append([rng.randint(-bound, bound) for _ in range(n)])
    # make it rank deficient so elimination walks every column
    rows[-1] = [a + b for a, b in zip(rows[0], rows[1])]
    return rows


def _form(rng, dim, deg, terms):
    out = {}
    for _ in range(terms):
        idx = rng.sample(range(dim), deg)
        m = 0
        for i in idx:
            m |= 1 << i
        out[m] = rng.randint(-5, 5) or 1
    return out


def _poly(rng, nvars, terms, bits=8):
    out = {}
    for _ in range(terms):
        exps = [rng.randint(0, 2) for _ in range(nvars)]
        key = sum(exps)
        for e in exps:
            key = (key << bits) | e
        out[key] = rng.randint(-9, 9) or 1
    return out


def cases(seed=0):
    rng = random.Random(seed)
    mats = [_matrix(rng, 12, 9) for _ in range(20)]
    big = [_matrix(rng, 10, 10**12) for _ in range(5)]
    f2 = [_form(rng, 12, 2, 20) for _ in range(10)]
    f3 = [_form(rng, 12, 3, 30) for _ in range(10)]
    polys = [(_poly(rng, 6, 12), _poly(rng, 6, 12)) for _ in range(10)]
    return {
        "int_rank 12x12": lambda k: [k.int_rank(m, 12) for m in mats],
        "int_rank 10x10 bigint": lambda k: [k.int_rank(m, 10) for m in big],
        "int_rref 12x12": lambda k: [k.int_rref(m, 12) for m in mats],
        "wedge_masks 2^3 dim 12": lambda k: [k.wedge_masks(a, b) for a, b in zip(f2, f3)],
        "ipoly_mul": lambda k: [k.ipoly_mul(a, b) for a, b in polys],
        "ipoly_exact_div": lambda k: [k.ipoly_exact_div(k.ipoly_mul(a, b), b, _guard(6)) for a, b in polys],
    }


def _guard(nvars, bits=8):
    g = 0
    for _ in range(nvars + 1):
        g = (g << bits) | (1 << (bits - 1))
    return g


END_TO_END = "from lieclass import build, index; import time; t=time.perf_counter(); " \
             "[index(build(e, p).algebra) for e, p in [('Q', {'n': 10}), ('strict_decreasing', {'l': 4}), ('kaplan7', {})]]; " \
             "print(time.perf_counter()-t)"


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    found = backends()
    names = sorted(found)
    if "cython" not in found:
        print("compiled kernels not available; timing the pure-Python backend only")
    print(f"{'kernel':28s}" + "".join(f"{n:>12s}" for n in names) + ("     speedup" if len(names) > 1 else ""))
    for label, fn in cases().items():
        ref = fn(found["python"])
        row = []
        for n in names:
            if fn(found[n]) != ref:
                raise SystemExit(f"backend {n} disagrees on {label}")
            row.append(min(timeit.repeat(lambda: fn(found[n]), number=1, repeat=args.repeat)))
        line = f"{label:28s}" + "".join(f"{t * 1e3:10.2f}ms" for t in row)
        if len(row) > 1:
            line += f"{row[1] / row[0]:11.1f}x" if names[0] == "cython" else ""
        print(line)
    print()
    for n in names:
        env = dict(os.environ, LIECLASS_PURE_PYTHON="1" if n == "python" else "0")
        out = subprocess.run([sys.executable, "-c", END_TO_END], env=env, capture_output=True, text=True, check=True)
        print(f"index(Q10, n1 l=4, kaplan7) [{n}]: {float(out.stdout) * 1e3:.1f}ms")


if __name__ == "__main__":
    main()
