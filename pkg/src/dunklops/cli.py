"""Command line front end.

    dunklops verify --group A2 --k 1 --rep trivial --suite all --out report.json
    dunklops apply dunkl "x" --group A1 --k 1
    dunklops schema

`verify` runs the selected suites and writes a JSON report; the exit code is
0 only when every asserted identity holds (measured-only entries never fail
a run). `apply` evaluates one operator on a parsed polynomial expression and
prints the normalized result; the direction is the first simple root. Exit
codes: 0 success, 1 identity failure, 2 usage or input error.

A config file (`--config path`) holds key=value lines mirroring the flags
(`suite` takes a comma-separated list); explicit flags win over the file.
"""

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .algebra import ScalarParseError
from .dirac import DiracContext
from .dunkl import DunklContext, drift_apply, dunkl_apply
from .inner import DEFAULT_SEED
from .polyring import PoleError, RationalSection, SectionVector, parse_poly
from .reps import builtin_rep, twisted_dunkl_apply
from .rootsys import system_from_name
from .suites import SUITE_NAMES, run_suites

__all__ = [
    "RunConfig",
    "REPORT_SCHEMA",
    "build_document",
    "cmd_verify",
    "cmd_apply",
    "cmd_schema",
    "main",
]

APPLY_TAGS = ("dunkl", "drift", "twisted-dunkl", "dirac")


@dataclass
class RunConfig:
    group: str
    k: Fraction
    rep: str = None
    suites: tuple = ("all",)
    seed: int = DEFAULT_SEED
    mc_samples: int = 200_000
    out: str = None
    degree_cap: int = None

    def echo(self):
        return {
            "group": self.group,
            "k": str(self.k),
            "rep": self.rep,
            "suites": list(self.suites),
            "seed": self.seed,
            "mc_samples": self.mc_samples,
            "degree_cap": self.degree_cap,
        }


REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "dunklops verification report",
    "type": "object",
    "required": ["version", "config", "reports", "summary", "wall_clock"],
    "properties": {
        "version": {"const": __version__},
        "config": {
            "type": "object",
            "required": ["group", "k", "suites", "seed"],
            "properties": {
                "group": {"type": "string", "pattern": "^A[1-6]$"},
                "k": {"type": "string"},
                "rep": {"type": ["string", "null"]},
                "suites": {
                    "type": "array",
                    "minItems": 1,
                    "items": {"type": "string"},
                },
                "seed": {"type": "integer"},
                "mc_samples": {"type": "integer", "minimum": 1},
                "degree_cap": {"type": ["integer", "null"]},
            },
        },
        "reports": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["identity", "status", "ok", "asserted", "path", "seconds"],
                "properties": {
                    "identity": {"type": "string"},
                    "status": {"type": "string"},
                    "ok": {"type": "boolean"},
                    "asserted": {"type": "boolean"},
                    "witness": {"type": "string"},
                    "residual": {"type": "string"},
                    "path": {"enum": ["exact", "mc"]},
                    "samples": {"type": "integer"},
                    "seed": {"type": "integer"},
                    "seconds": {"type": "number"},
                    "data": {"type": "object"},
                },
            },
        },
        "summary": {
            "type": "object",
            "required": ["passed", "failed", "measured"],
            "properties": {
                "passed": {"type": "integer", "minimum": 0},
                "failed": {"type": "integer", "minimum": 0},
                "measured": {"type": "integer", "minimum": 0},
            },
        },
        "wall_clock": {
            "type": "object",
            "additionalProperties": {"type": "number"},
        },
    },
}


def build_document(config, reports, timings):
    passed = sum(1 for r in reports if r.asserted and r.ok)
    failed = sum(1 for r in reports if r.asserted and not r.ok)
    measured = sum(1 for r in reports if not r.asserted)
    return {
        "version": __version__,
        "config": config.echo(),
        "reports": [r.to_dict() for r in reports],
        "summary": {"passed": passed, "failed": failed, "measured": measured},
        "wall_clock": {name: round(t, 6) for name, t in timings.items()},
    }


def cmd_verify(config):
    system = system_from_name(config.group)
    reports, timings = run_suites(
        config.suites,
        system,
        config.k,
        rep_name=config.rep,
        seed=config.seed,
        mc_samples=config.mc_samples,
        degree_cap=config.degree_cap,
    )
    doc = build_document(config, reports, timings)
    text = json.dumps(doc, sort_keys=True, indent=2)
    if config.out:
        with open(config.out, "w") as fh:
            fh.write(text + "\n")
        summary = doc["summary"]
        print(
            f"wrote {config.out}: {summary['passed']} passed, "
            f"{summary['failed']} failed, {summary['measured']} measured"
        )
    else:
        print(text)
    return doc, (0 if doc["summary"]["failed"] == 0 else 1)


def _first_simple_root(system):
    return system.simple_roots[0].vector


def _split_components(expr):
    parts = [p.strip() for p in expr.split(",")]
    if any(not p for p in parts):
        raise ScalarParseError("empty component in input expression")
    return parts


def cmd_apply(config, tag, expr):
    """Evaluate one operator application and return the printed string."""
    if tag not in APPLY_TAGS:
        raise ValueError(
            f"unknown operator tag {tag!r} (expected one of {', '.join(APPLY_TAGS)})"
        )
    system = system_from_name(config.group)
    ctx = DunklContext(system, config.k)
    nv = system.ambient_dim
    xi = _first_simple_root(system)
    if tag == "dunkl":
        f = parse_poly(expr, nv)
        out = dunkl_apply(ctx, xi, f)
    elif tag == "drift":
        f = RationalSection.from_poly(parse_poly(expr, nv))
        out = drift_apply(ctx, xi, f)
    elif tag == "twisted-dunkl":
        rep = builtin_rep(system, config.rep or "trivial")
        parts = _split_components(expr)
        if len(parts) != rep.dim:
            raise ValueError(
                f"rep {rep.name!r} needs {rep.dim} comma-separated components"
            )
        F = SectionVector([parse_poly(p, nv) for p in parts])
        result = twisted_dunkl_apply(ctx, rep, xi, F)
        out = result.components[0] if rep.dim == 1 else result
    else:
        rep = builtin_rep(system, config.rep or "trivial")
        dctx = DiracContext(ctx, rep=rep)
        parts = _split_components(expr)
        if len(parts) != dctx.internal_dim:
            raise ValueError(
                f"the contraction needs {dctx.internal_dim} comma-separated components"
            )
        F = SectionVector([parse_poly(p, nv) for p in parts])
        from .dirac import dirac_dunkl_apply

        out = dirac_dunkl_apply(dctx, F)
    text = str(out)
    print(text)
    return text


def cmd_schema():
    text = json.dumps(REPORT_SCHEMA, sort_keys=True, indent=2)
    print(text)
    return text


def _parse_config_file(path):
    values = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value")
            key, val = line.split("=", 1)
            key = key.strip().replace("-", "_")
            if key not in (
                "group", "k", "rep", "suite", "seed",
                "mc_samples", "out", "degree_cap",
            ):
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
            values[key] = val.strip()
    return values


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="dunklops",
        description="exact verification harness for reflection-deformed operators",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--group", help="Coxeter system, A1..A6")
        p.add_argument("--k", help="multiplicity, a rational like 1 or 1/2")
        p.add_argument(
            "--rep", help="representation: trivial, sign, permutation, irrep2d"
        )
        p.add_argument("--config", help="key=value config file; flags win")

    v = sub.add_parser("verify", help="run verification suites")
    common(v)
    v.add_argument(
        "--suite",
        help=f"comma-separated subset of {{{','.join(SUITE_NAMES)},all}}",
    )
    v.add_argument("--seed", help="base RNG seed (default %d)" % DEFAULT_SEED)
    v.add_argument("--mc-samples", help="Monte Carlo sample count")
    v.add_argument("--out", help="write the JSON report here")
    v.add_argument("--degree-cap", help="degree bound for random inputs")

    a = sub.add_parser("apply", help="apply one operator to an expression")
    common(a)
    a.add_argument("tag", choices=APPLY_TAGS, help="operator to apply")
    a.add_argument(
        "expr",
        help="polynomial expression; comma-separated components for "
        "matrix-valued operators (direction: first simple root)",
    )

    sub.add_parser("schema", help="print the report schema")
    return parser


def _assemble_config(args):
    file_vals = {}
    if getattr(args, "config", None):
        file_vals = _parse_config_file(args.config)

    def pick(flag_name, file_key, default=None):
        val = getattr(args, flag_name, None)
        if val is not None:
            return val
        return file_vals.get(file_key, default)

    group = pick("group", "group")
    if not group:
        raise ValueError("--group is required (A1..A6)")
    k_text = pick("k", "k")
    if k_text is None:
        raise ValueError("--k is required (a rational such as 1 or 1/2)")
    try:
        k = Fraction(str(k_text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad --k value {k_text!r}: {exc}") from None
    suites_text = pick("suite", "suite", "all")
    suites = tuple(s.strip() for s in str(suites_text).split(",") if s.strip())
    if not suites:
        raise ValueError("--suite must name at least one suite")
    try:
        seed = int(pick("seed", "seed", DEFAULT_SEED))
        mc_samples = int(pick("mc_samples", "mc_samples", 200_000))
    except ValueError as exc:
        raise ValueError(f"bad numeric option: {exc}") from None
    cap_text = pick("degree_cap", "degree_cap")
    degree_cap = None
    if cap_text is not None:
        try:
            degree_cap = int(cap_text)
        except ValueError:
            raise ValueError(f"bad --degree-cap value {cap_text!r}") from None
        if degree_cap < 1:
            raise ValueError("--degree-cap must be at least 1")
    if mc_samples < 1:
        raise ValueError("--mc-samples must be positive")
    return RunConfig(
        group=str(group),
        k=k,
        rep=pick("rep", "rep"),
        suites=suites,
        seed=seed,
        mc_samples=mc_samples,
        out=pick("out", "out"),
        degree_cap=degree_cap,
    )


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "schema":
        cmd_schema()
        return 0
    try:
        config = _assemble_config(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.command == "verify":
        try:
            _, code = cmd_verify(config)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        return code
    try:
        cmd_apply(config, args.tag, args.expr)
    except (ScalarParseError, PoleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
