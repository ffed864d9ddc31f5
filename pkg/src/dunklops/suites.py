"""Verification suites: each one exercises a family of operator identities on
deterministic random inputs and returns OperatorReports.

An identity the theory asserts unconditionally is tagged asserted; runs that
only observe behaviour outside the stated scalar claims (commutators and
squares under a nontrivial internal twist) are tagged measured and can never
fail a verification run. The twisted runs do come out exactly zero; the tag
records the strength of the claim being checked, not the observed outcome.
"""

import time
from fractions import Fraction

from .calogero import ExplicitOperator, OperatorReport, crosscheck_generic, permutation_matrices
from .clifford import flat_dirac_apply, make_generators
from .dirac import DiracContext, dirac_dunkl_apply, dirac_square_residual
from .dunkl import DunklContext, OrthonormalBasis, commutator
from .inner import (
    DEFAULT_SEED,
    GaussianTestFn,
    adjoint_residual_derivative,
    skew_residual,
    _bridge,
)
from .polyring import SectionVector
from .reps import builtin_rep, check_equivariance, twisted_commutator
from .rootsys import enumerate_group
from ._rand import random_direction, random_polynomial, random_vector_field, rng_for

__all__ = [
    "SUITE_NAMES",
    "run_suites",
    "suite_commutativity",
    "suite_adjoint",
    "suite_skew",
    "suite_square",
    "suite_crosscheck",
    "suite_equivariance",
    "suite_clifford",
]

SUITE_NAMES = (
    "commutativity",
    "adjoint",
    "skew",
    "square",
    "crosscheck",
    "equivariance",
    "clifford",
)

# exhaustive group sweeps stop here; |W| is factorial in the rank
EXHAUSTIVE_RANK_CAP = 4


def _resolve_rep(system, rep_name):
    return builtin_rep(system, rep_name or "trivial")


def suite_commutativity(system, k, rep_name=None, seed=DEFAULT_SEED, trials=12, degree=4):
    """[T_xi, T_eta] f = 0. Scalar family asserted; twisted runs measured."""
    t0 = time.perf_counter()
    ctx = DunklContext(system, Fraction(k))
    rep = _resolve_rep(system, rep_name)
    scalar = rep.dim == 1 and rep.is_trivial
    rng = rng_for(seed, f"commutativity:A{system.rank}:{k}:{rep.name}")
    nv = system.ambient_dim
    for t in range(trials):
        xi = random_direction(rng, system)
        eta = random_direction(rng, system)
        if scalar:
            f = random_polynomial(rng, nv, degree)
            res = commutator(ctx, xi, eta, f)
            witness = f"xi={xi}, eta={eta}, f={f}"
        else:
            F = random_vector_field(rng, nv, rep.dim, degree)
            res = twisted_commutator(ctx, rep, xi, eta, F)
            witness = f"xi={xi}, eta={eta}, F={F}"
        if not res.is_zero:
            return [
                OperatorReport(
                    identity=_commut_name(system, k, rep, scalar),
                    status="residual",
                    ok=False,
                    asserted=scalar,
                    witness=witness,
                    residual=str(res),
                    seconds=time.perf_counter() - t0,
                    seed=seed,
                )
            ]
    return [
        OperatorReport(
            identity=_commut_name(system, k, rep, scalar),
            status="exact-zero",
            ok=True,
            asserted=scalar,
            residual="0",
            seconds=time.perf_counter() - t0,
            seed=seed,
            data={"trials": trials, "degree": degree},
        )
    ]


def _commut_name(system, k, rep, scalar):
    kind = "deformed derivatives" if scalar else f"twisted family ({rep.name})"
    return f"commutators of the {kind} vanish, A{system.rank}, k={Fraction(k)}"


def _tfn(rng, n, degree):
    return GaussianTestFn(random_polynomial(rng, n, degree, terms=4, coeff_bound=3))


def suite_adjoint(
    system, k, seed=DEFAULT_SEED, trials=8, degree=3, mc_samples=200_000
):
    """Adjoint of the plain directional derivative under the weighted pairing."""
    t0 = time.perf_counter()
    ctx = DunklContext(system, Fraction(k))
    n = system.rank
    rng = rng_for(seed, f"adjoint:A{n}:{k}")
    exact = ctx.k.doubled_is_even_nonneg
    basis = OrthonormalBasis.standard(system)
    identity = f"derivative adjoint formula, A{n}, k={Fraction(k)}"
    worst = None
    for t in range(trials):
        f = _tfn(rng, n, degree)
        g = _tfn(rng, n, degree)
        xi = basis.vectors[int(rng.integers(0, n))]
        if exact:
            res = adjoint_residual_derivative(ctx, xi, f, g, basis=basis)
            if not res.is_zero:
                return [
                    OperatorReport(
                        identity=identity,
                        status="residual",
                        ok=False,
                        witness=f"f={f}, g={g}",
                        residual=str(res),
                        seconds=time.perf_counter() - t0,
                        seed=seed,
                    )
                ]
        else:
            ests = adjoint_residual_derivative(
                ctx, xi, f, g, basis=basis, method="mc",
                samples=mc_samples, seed=seed,
            )
            for est in ests:
                if not est.within(0.0, 4.0):
                    return [
                        OperatorReport(
                            identity=identity,
                            status="out-of-tolerance",
                            ok=False,
                            witness=f"f={f}, g={g}",
                            residual=f"{est.mean:.3e} +- {est.stderr:.1e}",
                            path="mc",
                            samples=est.samples,
                            seconds=time.perf_counter() - t0,
                            seed=seed,
                        )
                    ]
                if worst is None or abs(est.mean) / max(est.stderr, 1e-300) > worst[0]:
                    worst = (abs(est.mean) / max(est.stderr, 1e-300), est)
    report = OperatorReport(
        identity=identity,
        status="exact-zero" if exact else "within-tolerance",
        ok=True,
        residual="0" if exact else f"worst |mean|/stderr = {worst[0]:.2f}",
        path="exact" if exact else "mc",
        samples=None if exact else mc_samples,
        seconds=time.perf_counter() - t0,
        seed=seed,
        data={"trials": trials, "degree": degree},
    )
    return [report]


def suite_skew(
    system,
    k,
    rep_name=None,
    seed=DEFAULT_SEED,
    trials=6,
    degree=2,
    mc_samples=200_000,
):
    """Pairing identities for the three operator families.

    The scalar families are skew; the contraction pairs symmetrically (its
    internal generators are themselves anti-Hermitian). The drift identity
    has no wall boundary terms in this global Gaussian-damped class, which
    the report states explicitly.
    """
    ctx = DunklContext(system, Fraction(k))
    rep = _resolve_rep(system, rep_name)
    n = system.rank
    exact = ctx.k.doubled_is_even_nonneg
    basis = OrthonormalBasis.standard(system)
    dctx = DiracContext(ctx, basis=basis, rep=rep)
    rng = rng_for(seed, f"skew:A{n}:{k}:{rep.name}")
    reports = []
    for tag in ("drift", "dunkl", "dirac"):
        t0 = time.perf_counter()
        form = (
            "<Df,g> - <f,Dg>" if tag == "dirac" else f"<{tag} f,g> + <f,{tag} g>"
        )
        identity = f"{tag} pairing identity {form} = 0, A{n}, k={Fraction(k)}"
        data = {"trials": trials, "degree": degree}
        if tag == "drift":
            data["note"] = (
                "wall boundary terms vanish identically on the "
                "Gaussian-damped polynomial class"
            )
        if tag == "dirac":
            data["rep"] = rep.name
        failed = None
        worst = None
        for t in range(trials):
            if tag == "dirac":
                f = [_tfn(rng, n, degree) for _ in range(dctx.internal_dim)]
                g = [_tfn(rng, n, degree) for _ in range(dctx.internal_dim)]
                xi = None
                witness = "f=(%s), g=(%s)" % (
                    ", ".join(map(str, f)),
                    ", ".join(map(str, g)),
                )
            else:
                f = _tfn(rng, n, degree)
                g = _tfn(rng, n, degree)
                xi = basis.vectors[int(rng.integers(0, n))]
                witness = f"f={f}, g={g}"
            if exact:
                res = skew_residual(
                    ctx, tag, f, g, xi=xi, basis=basis, rep=rep
                )
                if not res.is_zero:
                    failed = (witness, str(res), "residual", None)
                    break
            else:
                ests = skew_residual(
                    ctx, tag, f, g, xi=xi, basis=basis, rep=rep,
                    method="mc", samples=mc_samples, seed=seed,
                )
                for est in ests:
                    if not est.within(0.0, 4.0):
                        failed = (
                            witness,
                            f"{est.mean:.3e} +- {est.stderr:.1e}",
                            "out-of-tolerance",
                            est.samples,
                        )
                        break
                    score = abs(est.mean) / max(est.stderr, 1e-300)
                    if worst is None or score > worst[0]:
                        worst = (score, est)
                if failed:
                    break
        if failed:
            witness, residual, status, samples = failed
            reports.append(
                OperatorReport(
                    identity=identity,
                    status=status,
                    ok=False,
                    witness=witness,
                    residual=residual,
                    path="exact" if exact else "mc",
                    samples=samples,
                    seconds=time.perf_counter() - t0,
                    seed=seed,
                    data=data,
                )
            )
            continue
        reports.append(
            OperatorReport(
                identity=identity,
                status="exact-zero" if exact else "within-tolerance",
                ok=True,
                residual="0" if exact else f"worst |mean|/stderr = {worst[0]:.2f}",
                path="exact" if exact else "mc",
                samples=None if exact else mc_samples,
                seconds=time.perf_counter() - t0,
                seed=seed,
                data=data,
            )
        )
    return reports


def suite_square(system, k, rep_name=None, seed=DEFAULT_SEED, trials=10, degree=4):
    """The contraction squares to minus the family's Laplacian; at k = 0 it
    reduces to the flat operator."""
    t0 = time.perf_counter()
    ctx = DunklContext(system, Fraction(k))
    rep = _resolve_rep(system, rep_name)
    asserted = rep.dim == 1 and rep.is_trivial
    dctx = DiracContext(ctx, rep=rep)
    rng = rng_for(seed, f"square:A{system.rank}:{k}:{rep.name}")
    nv = system.ambient_dim
    identity = (
        f"square identity D^2 = -Laplacian, A{system.rank}, "
        f"k={Fraction(k)}, rep={rep.name}"
    )
    reports = []
    bad = None
    for t in range(trials):
        F = random_vector_field(rng, nv, dctx.internal_dim, degree)
        res = dirac_square_residual(dctx, F)
        if not res.is_zero:
            bad = (str(F), str(res))
            break
    if bad:
        reports.append(
            OperatorReport(
                identity=identity,
                status="residual",
                ok=False,
                asserted=asserted,
                witness=bad[0],
                residual=bad[1],
                seconds=time.perf_counter() - t0,
                seed=seed,
            )
        )
    else:
        reports.append(
            OperatorReport(
                identity=identity,
                status="exact-zero",
                ok=True,
                asserted=asserted,
                residual="0",
                seconds=time.perf_counter() - t0,
                seed=seed,
                data={"trials": trials, "degree": degree},
            )
        )
    if Fraction(k) == 0 and rep.dim == 1 and rep.is_trivial:
        reports.append(_flat_reduction_report(system, seed, trials, degree))
    return reports


def _flat_reduction_report(system, seed, trials, degree):
    t0 = time.perf_counter()
    ctx = DunklContext(system, Fraction(0))
    dctx = DiracContext(ctx)
    n = system.rank
    gens = dctx.gens
    br = _bridge(dctx.basis)
    rng = rng_for(seed, f"flat:A{n}")
    identity = f"k=0 reduction to the flat contraction, A{n}"
    for t in range(trials):
        G = random_vector_field(rng, n, dctx.internal_dim, degree)
        flat = flat_dirac_apply(gens, G)
        lifted = SectionVector(
            [br.to_ambient(c.as_polynomial()) for c in G.components]
        )
        full = dirac_dunkl_apply(dctx, lifted)
        flat_lifted = SectionVector(
            [br.to_ambient(c.as_polynomial()) for c in flat.components]
        )
        if not (full - flat_lifted).is_zero:
            return OperatorReport(
                identity=identity,
                status="residual",
                ok=False,
                witness=str(G),
                residual=str(full - flat_lifted),
                seconds=time.perf_counter() - t0,
                seed=seed,
            )
    return OperatorReport(
        identity=identity,
        status="exact-zero",
        ok=True,
        residual="0",
        seconds=time.perf_counter() - t0,
        seed=seed,
        data={"trials": trials, "degree": degree},
    )


def suite_crosscheck(system, k, rep_name=None, seed=DEFAULT_SEED, trials=50, degree=3):
    """Transcribed coordinate displays against the generic operator."""
    rank = system.rank
    if rank < 2:
        return [
            OperatorReport(
                identity="transcribed displays vs generic operator",
                status="skipped",
                ok=True,
                asserted=False,
                seconds=0.0,
                data={"note": "no transcribed display exists at rank one"},
            )
        ]
    rep_name = rep_name or "trivial"
    ops = []
    if rep_name == "trivial":
        if rank == 2:
            ops.append(ExplicitOperator("a2_trivial", k=k))
        ops.append(ExplicitOperator("an_trivial", rank=rank, k=k))
    elif rep_name == "sign":
        if rank == 2:
            ops.append(ExplicitOperator("a2_sign", k=k))
        ops.append(ExplicitOperator("an_sign", rank=rank, k=k))
    elif rep_name == "irrep2d":
        if rank != 2:
            raise ValueError("the two-dimensional display is a rank-2 form")
        ops.append(ExplicitOperator("a2_irrep2d", k=k))
    elif rep_name == "permutation":
        ops.append(
            ExplicitOperator(
                "an_rep", rank=rank, k=k,
                rep_matrices=permutation_matrices(rank),
            )
        )
    else:
        raise ValueError(f"no transcribed display for rep {rep_name!r}")
    if rank >= 3:
        # exercise a direction beyond the default e1 - e2
        ops.append(
            ExplicitOperator(
                ops[-1].variant, rank=rank, k=k, direction=(2, rank + 1),
                rep_matrices=permutation_matrices(rank)
                if rep_name == "permutation" else None,
            )
        )
    return [
        crosscheck_generic(op, trials=trials, degree=degree, seed=seed)
        for op in ops
    ]


def suite_equivariance(system, k, rep_name=None, seed=DEFAULT_SEED, trials=4, degree=3):
    """Symmetrized fields satisfy the glue rule for every group element."""
    t0 = time.perf_counter()
    rep = _resolve_rep(system, rep_name)
    identity = f"glue rule F(wx) = rho(w)F(x), A{system.rank}, rep={rep.name}"
    if system.rank > EXHAUSTIVE_RANK_CAP:
        return [
            OperatorReport(
                identity=identity,
                status="skipped",
                ok=True,
                asserted=False,
                seconds=0.0,
                data={
                    "note": f"group sweep capped at rank {EXHAUSTIVE_RANK_CAP}"
                },
            )
        ]
    group = enumerate_group(system)
    rng = rng_for(seed, f"equivariance:A{system.rank}:{rep.name}")
    nv = system.ambient_dim
    for t in range(trials):
        F = random_vector_field(rng, nv, rep.dim, degree)
        sym = None
        for w in group:
            piece = F.compose_signed(w.perm, w.signs).matrix_action(
                rep.of(w.inverse())
            )
            sym = piece if sym is None else sym + piece
        if sym.is_zero:
            continue
        for w in group:
            if not check_equivariance(rep, sym, w):
                return [
                    OperatorReport(
                        identity=identity,
                        status="failed",
                        ok=False,
                        witness=f"F={sym}, w={w.word}",
                        seconds=time.perf_counter() - t0,
                        seed=seed,
                    )
                ]
    return [
        OperatorReport(
            identity=identity,
            status="checked",
            ok=True,
            residual="0",
            seconds=time.perf_counter() - t0,
            seed=seed,
            data={"trials": trials, "group_order": len(group)},
        )
    ]


def suite_clifford(system, k=0, rep_name=None, seed=DEFAULT_SEED, max_n=None):
    """Generator relations for the internal algebra at this rank (and every
    smaller one)."""
    t0 = time.perf_counter()
    top = max_n or system.rank
    identity = f"internal generator relations up to n={top}"
    dims = {}
    try:
        for n in range(1, top + 1):
            dims[str(n)] = make_generators(n).dim  # construction verifies the relations
    except (ValueError, ArithmeticError) as exc:
        return [
            OperatorReport(
                identity=identity,
                status="failed",
                ok=False,
                witness=str(exc),
                seconds=time.perf_counter() - t0,
            )
        ]
    return [
        OperatorReport(
            identity=identity,
            status="checked",
            ok=True,
            seconds=time.perf_counter() - t0,
            data={"dims": dims},
        )
    ]


_SUITE_FUNCS = {
    "commutativity": suite_commutativity,
    "adjoint": suite_adjoint,
    "skew": suite_skew,
    "square": suite_square,
    "crosscheck": suite_crosscheck,
    "equivariance": suite_equivariance,
    "clifford": suite_clifford,
}


def run_suites(
    names,
    system,
    k,
    rep_name=None,
    seed=DEFAULT_SEED,
    mc_samples=200_000,
    degree_cap=None,
):
    """Run the named suites in canonical order; returns (reports, timings)."""
    expanded = []
    for name in names:
        if name == "all":
            expanded = list(SUITE_NAMES)
            break
        if name not in SUITE_NAMES:
            raise ValueError(f"unknown suite {name!r}")
        if name not in expanded:
            expanded.append(name)
    expanded.sort(key=SUITE_NAMES.index)
    reports = []
    timings = {}
    for name in expanded:
        t0 = time.perf_counter()
        kwargs = {"seed": seed}
        if name == "adjoint":
            kwargs["mc_samples"] = mc_samples
        if name == "skew":
            kwargs.update(mc_samples=mc_samples, rep_name=rep_name)
        if name in ("commutativity", "square", "crosscheck", "equivariance"):
            kwargs["rep_name"] = rep_name
        if degree_cap is not None and name in (
            "commutativity", "adjoint", "skew", "square", "crosscheck", "equivariance"
        ):
            kwargs["degree"] = degree_cap
        out = _SUITE_FUNCS[name](system, k, **kwargs)
        reports.extend(out)
        timings[name] = time.perf_counter() - t0
    return reports, timings
