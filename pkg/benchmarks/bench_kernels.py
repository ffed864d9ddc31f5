"""Timing comparison between the compiled kernel extension and the pure
Python fallback.

Two views:

  * microbenchmarks call the kernel functions directly on random inputs,
    with both backends loaded side by side in one process;
  * the end-to-end battery runs a fixed operator workload in a child
    process per backend (selection happens at import time, so each backend
    needs a fresh interpreter; the fallback is forced with DUNKLOPS_PURE=1).

Usage: python3 benchmarks/bench_kernels.py [--repeat N] [--skip-e2e]
"""

import argparse
import os
import random
import subprocess
import sys
import time

from dunklops import _kernels as pure

try:
    from dunklops import _kernels_cy as compiled
except ImportError:
    compiled = None

RADICANDS = (1, 2, 3, 5, 6)


def rand_fe(rng, terms=3):
    out = {}
    for _ in range(rng.randrange(1, terms + 1)):
        t = pure.g_make(rng.randrange(-9, 10), rng.randrange(-9, 10), rng.randrange(1, 9))
        if t != pure.G_ZERO:
            out[rng.choice(RADICANDS)] = t
    return out


def rand_poly(rng, nvars=4, terms=12, degree=5):
    out = {}
    while len(out) < terms:
        mono = tuple(rng.randrange(degree + 1) for _ in range(nvars))
        fe = rand_fe(rng)
        if fe:
            out[mono] = fe
    return out


def time_op(fn, args_list, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        for args in args_list:
            fn(*args)
        dt = (time.perf_counter() - t0) / len(args_list)
        best = dt if best is None else min(best, dt)
    return best


def micro_table(repeat):
    rng = random.Random(20240)
    polys = [rand_poly(rng) for _ in range(40)]
    pairs = [(polys[i], polys[(i + 1) % len(polys)]) for i in range(len(polys))]
    perm = (1, 2, 3, 0)
    signs = (1, -1, 1, -1)
    composes = [(p, perm, signs) for p in polys]
    diffs = [(p, i % 4) for i, p in enumerate(polys)]
    evals = [
        (p, tuple(rand_fe(rng, 1) or {1: pure.g_make(1, 0, 1)} for _ in range(4)))
        for p in polys
    ]
    # exact-divisible inputs: multiply by the form first
    divisible = []
    for p in polys:
        shifted = pure.p_mul(
            p,
            {
                (1, 0, 0, 0): {1: pure.g_make(1, 0, 1)},
                (0, 1, 0, 0): {1: pure.g_make(-1, 0, 1)},
            },
        )
        divisible.append((shifted, 0, 1))

    cases = [
        ("p_mul", pairs),
        ("p_add", pairs),
        ("p_compose", composes),
        ("p_diff", diffs),
        ("p_div_linear", divisible),
        ("p_eval", evals),
    ]
    rows = []
    for name, args_list in cases:
        t_pure = time_op(getattr(pure, name), args_list, repeat)
        if compiled is None:
            rows.append((name, None, t_pure))
        else:
            t_comp = time_op(getattr(compiled, name), args_list, repeat)
            rows.append((name, t_comp, t_pure))
    return rows


WORKLOAD = r"""
import time
from fractions import Fraction
import dunklops._rand as rnd
from dunklops._backend import BACKEND
from dunklops.dirac import DiracContext, dirac_square_residual
from dunklops.dunkl import DunklContext, dunkl_apply
from dunklops.polyring import RationalSection, SectionVector
from dunklops.rootsys import Multiplicity, system_from_name

t0 = time.perf_counter()
for name, trials in (("A2", 40), ("A3", 20)):
    system = system_from_name(name)
    ctx = DunklContext(system, Multiplicity(system, Fraction(3, 2)))
    rng = rnd.rng_for(7, f"bench:{name}")
    for _ in range(trials):
        xi = rnd.random_direction(rng, system)
        eta = rnd.random_direction(rng, system)
        f = rnd.random_polynomial(rng, system.ambient_dim, 5)
        ab = dunkl_apply(ctx, eta, dunkl_apply(ctx, xi, f))
        ba = dunkl_apply(ctx, xi, dunkl_apply(ctx, eta, f))
        assert (ab - ba).is_zero
system = system_from_name("A2")
ctx = DunklContext(system, Multiplicity(system, 2))
dctx = DiracContext(ctx)
rng = rnd.rng_for(8, "bench:square")
for _ in range(10):
    F = SectionVector([
        RationalSection.from_poly(rnd.random_polynomial(rng, 3, 4))
        for _ in range(dctx.internal_dim)
    ])
    assert dirac_square_residual(dctx, F).is_zero
print(f"{BACKEND} {time.perf_counter() - t0:.3f}")
"""


def end_to_end():
    results = {}
    for backend, env_extra in (("compiled", {}), ("pure", {"DUNKLOPS_PURE": "1"})):
        env = dict(os.environ, **env_extra)
        proc = subprocess.run(
            [sys.executable, "-c", WORKLOAD], env=env, capture_output=True, text=True
        )
        if proc.returncode != 0:
            sys.stderr.write(proc.stderr)
            raise SystemExit(f"workload failed under the {backend} backend")
        reported, seconds = proc.stdout.split()
        results[backend] = (reported, float(seconds))
    return results


def fmt_us(seconds):
    return f"{seconds * 1e6:9.1f}us"


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5, help="timing repetitions")
    parser.add_argument(
        "--skip-e2e", action="store_true", help="microbenchmarks only"
    )
    args = parser.parse_args(argv)

    if compiled is None:
        print("compiled extension not available; pure backend only\n")
    print("kernel microbenchmarks (best of %d, per call)" % args.repeat)
    header = f"  {'op':<14}{'compiled':>12}{'pure':>12}{'speedup':>10}"
    print(header)
    for name, t_comp, t_pure in micro_table(args.repeat):
        if t_comp is None:
            print(f"  {name:<14}{'-':>12}{fmt_us(t_pure):>12}{'-':>10}")
        else:
            print(
                f"  {name:<14}{fmt_us(t_comp):>12}{fmt_us(t_pure):>12}"
                f"{t_pure / t_comp:>9.1f}x"
            )

    if args.skip_e2e:
        return 0
    print("\nend-to-end operator battery (one process per backend)")
    results = end_to_end()
    base = results["compiled"][1]
    for backend in ("compiled", "pure"):
        reported, seconds = results[backend]
        assert reported == backend, f"child selected {reported}, wanted {backend}"
        note = "" if backend == "compiled" else f"  ({seconds / base:.1f}x slower)"
        print(f"  {backend:<10}{seconds:8.3f}s{note}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
