"""Compare the compiled and pure-Python kernels.

Runs each backend in its own subprocess (the backend is fixed at import)
and reports kernel micro-timings plus end-to-end evaluation time on a
fixed random corpus.  Also checks that both backends agree on every value.

    python benchmarks/bench_kernels.py [--count 40] [--max-crossings 6]
"""

import argparse
import json
import os
import subprocess
import sys
import timeit

WORKER = r"""
import json, random, sys, time, timeit
from rp3skein import _kernels
from rp3skein.checks import corpus
from rp3skein.homfly import homfly
from rp3skein.kauffman import kauffman

count, maxc = int(sys.argv[1]), int(sys.argv[2])
rng = random.Random(0)

def rand_poly(n, nvars):
    return {tuple(rng.randint(-6, 6) for _ in range(nvars)): rng.randint(-9, 9) or 1
            for _ in range(n)}

p, q = rand_poly(60, 4), rand_poly(40, 4)
row = {e: c for e, c in rand_poly(30, 1).items()}
sigma_row = {}
for (e,), c in row.items():
    sigma_row[e + 2] = sigma_row.get(e + 2, 0) + c
    sigma_row[e] = sigma_row.get(e, 0) - c
sigma_row = {e: c for e, c in sigma_row.items() if c}

micro = {
    "poly_mul": min(timeit.repeat(lambda: _kernels.poly_mul(p, q), number=50, repeat=5)) / 50,
    "poly_add": min(timeit.repeat(lambda: _kernels.poly_add(p, q, -1), number=2000, repeat=5)) / 2000,
    "poly_shift": min(timeit.repeat(lambda: _kernels.poly_shift(p, (1, -1, 2, 0), 3),
                                    number=2000, repeat=5)) / 2000,
    "divide_by_s2_minus_1": min(timeit.repeat(lambda: _kernels.divide_by_s2_minus_1(sigma_row),
                                              number=2000, repeat=5)) / 2000,
}
diagrams = [d for d in corpus(29, count, maxc)]
t0 = time.perf_counter()
values = []
for d in diagrams:
    values.append(str(homfly(d)) if d.oriented else "-")
    values.append(str(kauffman(d.as_unoriented())))
total = time.perf_counter() - t0
print(json.dumps({"backend": _kernels.BACKEND, "micro": micro, "total": total, "values": values}))
"""


def run(pure, count, maxc):
    env = dict(os.environ)
    if pure:
        env["RP3SKEIN_PURE_PYTHON"] = "1"
    else:
        env.pop("RP3SKEIN_PURE_PYTHON", None)
    out = subprocess.run([sys.executable, "-c", WORKER, str(count), str(maxc)],
                         env=env, capture_output=True, text=True)
    if out.returncode:
        sys.exit(f"benchmark worker failed:\n{out.stderr}")
    return json.loads(out.stdout)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=40)
    ap.add_argument("--max-crossings", type=int, default=6)
    args = ap.parse_args()
    fast = run(False, args.count, args.max_crossings)
    slow = run(True, args.count, args.max_crossings)
    if fast["backend"] != "cython":
        print("compiled kernels are not built; run `pip install -e . --no-build-isolation` first")
    print(f"{'kernel':24s}{'python':>12s}{fast['backend']:>12s}{'speedup':>10s}")
    for name, t in slow["micro"].items():
        f = fast["micro"][name]
        print(f"{name:24s}{t * 1e6:10.1f}us{f * 1e6:10.1f}us{t / f:9.2f}x")
    print(f"{'end-to-end corpus':24s}{slow['total']:11.2f}s{fast['total']:11.2f}s"
          f"{slow['total'] / fast['total']:9.2f}x")
    same = fast["values"] == slow["values"]
    print(f"values identical across backends: {same}")
    return 0 if same else 1


if __name__ == "__main__":
    sys.exit(main())
