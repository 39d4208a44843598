"""Command-line interface.

Three subcommands:

* ``eval``: evaluate one special function at a point and print the value
  (plus the certified tail bound and term count for series results).
* ``verify``: check one identity, either at a single parameter point or on
  the built-in default grid, and emit a report.
* ``grid``: sweep parameter grids described by an INI config file (or the
  built-in defaults) across identities.

Exit codes: 0 success / all points confirmed, 1 usage error, 2 domain or
pole or overflow error, 3 convergence failure or non-finite sample, 4 at
least one verification verdict other than BOTH_AGREE / CONFIRMED_CORRECTED.
Reports are deterministic; see :mod:`kstruve.report`.
"""

from __future__ import annotations

import argparse
import configparser
import itertools
import math
import os
import re
import sys
from dataclasses import dataclass

from .errors import (
    ConvergenceError,
    DomainError,
    NonFiniteSampleError,
    OverflowRangeError,
    UsageError,
)
from .gamma import gamma, k_gamma
from .identities import IDENTITIES, TheoremParams, default_grid, verify_grid
from .quadrature import lavoie_trottier_check
from .report import PASSING, emit_csv, emit_json, emit_table, format_number, record
from .struve import StruveParams, k_struve, struve_h, struve_l
from .wright import WrightSpec, wright_eval

CONFIG_ENV = "KSTRUVE_CONFIG"

_EXIT_OK = 0
_EXIT_USAGE = 1
_EXIT_DOMAIN = 2
_EXIT_CONVERGENCE = 3
_EXIT_REFUTED = 4

_PARAM_KEYS = ("alpha", "mu", "nu", "c", "k", "y")
_MAX_GRID_POINTS = 10000


@dataclass(frozen=True)
class RunConfig:
    """One resolved verification run: an identity plus its parameter grid."""

    identity: str
    points: tuple[TheoremParams, ...]
    tol: float = 1e-10
    threshold: float = 1e-6
    strict: bool = True

    def __post_init__(self):
        if self.identity not in IDENTITIES:
            raise UsageError(f"unknown identity {self.identity!r}")
        if len(self.points) > _MAX_GRID_POINTS:
            raise UsageError(
                f"grid for {self.identity} has {len(self.points)} points "
                f"(limit {_MAX_GRID_POINTS})"
            )
        for name in ("tol", "threshold"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
                raise UsageError(f"{name} must be a positive number, got {value!r}")


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems as exceptions, not sys.exit(2)."""

    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="kstruve", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate a special function at a point")
    evsub = ev.add_subparsers(dest="function", required=True)

    p = evsub.add_parser("gamma", help="Euler gamma")
    p.add_argument("x", type=float)
    p = evsub.add_parser("kgamma", help="k-gamma Gamma_k(z)")
    p.add_argument("z", type=float)
    p.add_argument("k", type=float)
    for name, help_text in (
        ("struve_h", "Struve H_nu(x)"),
        ("struve_l", "modified Struve L_nu(x)"),
    ):
        p = evsub.add_parser(name, help=help_text)
        p.add_argument("--nu", type=float, required=True)
        p.add_argument("--x", type=float, required=True)
        p.add_argument("--tol", type=float, default=1e-12)
    p = evsub.add_parser("kstruve", help="generalized k-Struve S[k,nu,c](x)")
    p.add_argument("--nu", type=float, required=True)
    p.add_argument("--c", type=float, default=1.0)
    p.add_argument("--k", type=float, default=1.0)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-12)
    p = evsub.add_parser("wright", help="Fox-Wright p Psi q at real z")
    p.add_argument(
        "--upper",
        nargs=2,
        type=float,
        action="append",
        metavar=("A", "ALPHA"),
        default=None,
        help="upper pair (a, alpha); repeatable",
    )
    p.add_argument(
        "--lower",
        nargs=2,
        type=float,
        action="append",
        metavar=("B", "BETA"),
        default=None,
        help="lower pair (b, beta); repeatable",
    )
    p.add_argument("--z", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-12)

    vf = sub.add_parser("verify", help="verify an identity numerically")
    vf.add_argument("identity", choices=("lavoie",) + IDENTITIES)
    vf.add_argument("--alpha", type=float)
    vf.add_argument("--beta", type=float, help="lavoie only")
    vf.add_argument("--mu", type=float)
    vf.add_argument("--nu", type=float)
    vf.add_argument("--c", type=float)
    vf.add_argument("--k", type=float)
    vf.add_argument("--y", type=float, default=1.0)
    vf.add_argument("--grid", choices=("default",), help="sweep the built-in grid")
    _add_report_flags(vf)

    gr = sub.add_parser("grid", help="sweep identity grids from a config file")
    gr.add_argument("--config", help=f"INI path (default: ${CONFIG_ENV} or built-ins)")
    _add_report_flags(gr)
    return parser


def _add_report_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tol", type=float, default=1e-10, help="quadrature tolerance")
    p.add_argument("--threshold", type=float, default=1e-6, help="agreement threshold")
    p.add_argument("--relaxed", action="store_true", help="accept nu > -3k/2 instead of nu > 3k/2")
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.add_argument("--out", help="write the report to this file instead of stdout")


def _emit(records: list[dict], fmt: str, out: str | None, stdout) -> None:
    emitter = {"json": emit_json, "csv": emit_csv, "table": emit_table}[fmt]
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            emitter(records, handle)
    else:
        emitter(records, stdout)


def _params_dict(p: TheoremParams) -> dict:
    return {"alpha": p.alpha, "mu": p.mu, "nu": p.nu, "c": p.c, "k": p.k, "y": p.y}


def _cmd_eval(args, stdout) -> int:
    if args.function == "gamma":
        stdout.write(format_number(gamma(args.x)) + "\n")
        return _EXIT_OK
    if args.function == "kgamma":
        stdout.write(format_number(k_gamma(args.z, args.k)) + "\n")
        return _EXIT_OK
    if args.function == "struve_h":
        result = struve_h(args.nu, args.x, tol=args.tol)
    elif args.function == "struve_l":
        result = struve_l(args.nu, args.x, tol=args.tol)
    elif args.function == "kstruve":
        params = StruveParams(nu=args.nu, c=args.c, k=args.k)
        result = k_struve(params, args.x, tol=args.tol)
    else:
        spec = WrightSpec(
            upper=tuple(tuple(pair) for pair in (args.upper or ())),
            lower=tuple(tuple(pair) for pair in (args.lower or ())),
        )
        result = wright_eval(spec, args.z, tol=args.tol)
    stdout.write(format_number(result.value) + "\n")
    stdout.write(f"error_bound={result.error_bound!r} terms_used={result.terms_used}\n")
    return _EXIT_OK


def _single_point(args) -> TheoremParams:
    missing = [n for n in ("alpha", "mu", "nu") if getattr(args, n) is None]
    if missing:
        raise UsageError(
            f"verify {args.identity} needs --{' --'.join(missing)} (or --grid default)"
        )
    c = args.c
    k = args.k
    if c is None:
        c = -1.0 if args.identity == "corollary2" else 1.0
    if k is None:
        k = 1.0
    return TheoremParams(alpha=args.alpha, mu=args.mu, nu=args.nu, c=c, k=k, y=args.y)


def _run_configs(configs, fmt, out, stdout) -> int:
    records: list[dict] = []
    for config in configs:
        pairs = verify_grid(
            config.identity,
            config.points,
            tol=config.tol,
            threshold=config.threshold,
            strict=config.strict,
        )
        records += [record(config.identity, _params_dict(p), rep) for p, rep in pairs]
    _emit(records, fmt, out, stdout)
    ok = all(rec["verdict"] in {v.value for v in PASSING} for rec in records)
    return _EXIT_OK if ok else _EXIT_REFUTED


def _cmd_verify(args, stdout) -> int:
    if args.identity == "lavoie":
        if args.alpha is None or args.beta is None:
            raise UsageError("verify lavoie needs --alpha and --beta")
        report = lavoie_trottier_check(args.alpha, args.beta, tol=args.tol)
        records = [record("lavoie", {"alpha": args.alpha, "beta": args.beta}, report)]
        _emit(records, args.format, args.out, stdout)
        ok = all(rec["verdict"] in {v.value for v in PASSING} for rec in records)
        return _EXIT_OK if ok else _EXIT_REFUTED
    if args.grid == "default":
        points = default_grid(args.identity)
    else:
        points = [_single_point(args)]
    config = RunConfig(
        identity=args.identity,
        points=tuple(points),
        tol=args.tol,
        threshold=args.threshold,
        strict=not args.relaxed,
    )
    return _run_configs([config], args.format, args.out, stdout)


def _parse_config(path: str) -> list[tuple[str, list[TheoremParams]]]:
    parser = configparser.ConfigParser()
    loaded = parser.read(path)
    if not loaded:
        raise UsageError(f"config file {path!r} not found or unreadable")
    plan: list[tuple[str, list[TheoremParams]]] = []
    for section in parser.sections():
        if section not in IDENTITIES:
            raise UsageError(
                f"config section [{section}] is not one of {IDENTITIES}; "
                "use 'verify lavoie' for the scalar identity"
            )
        values: dict[str, list[float]] = {}
        for key, raw in parser.items(section):
            if key not in _PARAM_KEYS:
                raise UsageError(f"unknown key {key!r} in section [{section}]")
            tokens = [tok for tok in re.split(r"[,\s]+", raw.strip()) if tok]
            if not tokens:
                raise UsageError(f"empty value for {key!r} in section [{section}]")
            try:
                values[key] = [float(tok) for tok in tokens]
            except ValueError:
                raise UsageError(f"non-numeric value for {key!r} in section [{section}]") from None
        if section == "corollary1":
            values.setdefault("c", [1.0])
            values.setdefault("k", [1.0])
        elif section == "corollary2":
            values.setdefault("c", [-1.0])
            values.setdefault("k", [1.0])
        axes = [
            values.get("alpha", [0.5, 1.0, 2.0]),
            values.get("mu", [0.25, 1.0]),
            values.get("nu", [2.0, 3.0]),
            values.get("c", [1.0]),
            values.get("k", [0.5, 1.0]),
            values.get("y", [1.0]),
        ]
        count = 1
        for axis in axes:
            count *= len(axis)
        if count > _MAX_GRID_POINTS:
            raise UsageError(
                f"section [{section}] expands to {count} points (limit {_MAX_GRID_POINTS})"
            )
        points = [
            TheoremParams(alpha=a, mu=m, nu=n, c=c, k=k, y=y)
            for a, m, n, c, k, y in itertools.product(*axes)
        ]
        plan.append((section, points))
    if not plan:
        raise UsageError(f"config file {path!r} has no identity sections")
    return plan


def _cmd_grid(args, stdout) -> int:
    path = args.config or os.environ.get(CONFIG_ENV)
    if path:
        plan = _parse_config(path)
    else:
        plan = [(which, default_grid(which)) for which in ("theorem1", "theorem2")]
    configs = [
        RunConfig(
            identity=which,
            points=tuple(points),
            tol=args.tol,
            threshold=args.threshold,
            strict=not args.relaxed,
        )
        for which, points in plan
    ]
    return _run_configs(configs, args.format, args.out, stdout)


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "eval":
            return _cmd_eval(args, stdout)
        if args.command == "verify":
            return _cmd_verify(args, stdout)
        return _cmd_grid(args, stdout)
    except UsageError as exc:
        stderr.write(f"usage error: {exc}\n")
        return _EXIT_USAGE
    except (OverflowRangeError, DomainError) as exc:
        stderr.write(f"domain error: {exc}\n")
        return _EXIT_DOMAIN
    except (ConvergenceError, NonFiniteSampleError) as exc:
        stderr.write(f"convergence error: {exc}\n")
        return _EXIT_CONVERGENCE


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
