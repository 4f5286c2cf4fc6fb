"""Command-line front end.

Examples::

    semismall hilbert 2 --input p2.json --mode poincare
    semismall parabolic 1 1 2 --format json
    semismall wreath 1 2
    semismall series goettsche --mode euler --trunc-t 6
    semismall projector A 2
    semismall validate descriptor.json
    semismall selfcheck
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from typing import Sequence

from . import __version__
from .correspondences import (
    IntersectionMatrixError,
    ade_intersection_matrix,
    check_orthogonality,
    invert,
    is_idempotent,
    load_intersection_matrix,
    mumford_projector,
)
from .decompositions import (
    DEFAULT_S_BOUND,
    DEFAULT_T_BOUND,
    DescriptorError,
    check_semismall,
    fibre_product_dim_bound,
    goettsche_series,
    hilbert_strata,
    load_descriptor,
    motive_series,
    nested_strata,
    parabolic_series,
    parabolic_strata,
    relevant_strata,
    wreath_class_oracle,
    wreath_rank_table,
    wreath_strata,
)
from .decompositions import io as out
from .motives import (
    HodgeDataError,
    HodgeDatum,
    MotiveSum,
    RankOnlyError,
    load_hodge_datum,
    projective_space,
    realize,
    realize_euler,
)
from .series import format_rational

MODES = ("poincare", "hodge", "euler", "motive")
FORMATS = ("plain", "json", "csv")


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    args: argparse.Namespace
    inputs: list[str] = field(default_factory=list)
    trunc_t: int = DEFAULT_T_BOUND
    trunc_s: int = DEFAULT_S_BOUND
    mode: str | None = None
    fmt: str = "plain"
    literal_monomials: bool = False

    def __post_init__(self):
        if self.trunc_t < 0 or self.trunc_s < 0:
            raise UsageError("truncation bounds must be nonnegative")


def _common_options() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--input", action="append", default=[], metavar="HODGE_JSON",
                   help="Hodge datum file; the surface (dim 2) is X, the curve (dim 1) is D")
    p.add_argument("--trunc-t", type=int, default=DEFAULT_T_BOUND, metavar="N")
    p.add_argument("--trunc-s", type=int, default=DEFAULT_S_BOUND, metavar="N")
    p.add_argument("--mode", choices=MODES, default=None)
    p.add_argument("--format", dest="fmt", choices=FORMATS, default="plain")
    p.add_argument("--literal-monomials", action="store_true",
                   help="label fibre components by bare monomials (documentation only)")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(prog="semismall", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hilbert", parents=[common], help="Hilbert scheme of n points")
    p.add_argument("n", type=int)
    p = sub.add_parser("nested", parents=[common], help="nested Hilbert scheme X^[n,n+1]")
    p.add_argument("n", type=int)
    p = sub.add_parser("parabolic", parents=[common], help="parabolic Hilbert scheme of type (n, h, l)")
    p.add_argument("n", type=int)
    p.add_argument("h", type=int)
    p.add_argument("l", type=int, nargs="*")
    p = sub.add_parser("wreath", parents=[common], help="ADE resolution Hilbert scheme / wreath orbifold")
    p.add_argument("r", type=int, help="number of exceptional curves")
    p.add_argument("n", type=int)
    p = sub.add_parser("series", parents=[common], help="closed-form generating function")
    p.add_argument("kind", choices=("goettsche", "parabolic"))
    p.add_argument("--h", type=int, default=1, help="filtration depth for the parabolic series")
    p = sub.add_parser("projector", parents=[common], help="Mumford projector of an ADE configuration")
    p.add_argument("kind", nargs="?", choices=("A", "D", "E"))
    p.add_argument("rank", nargs="?", type=int)
    p.add_argument("--matrix", metavar="MATRIX_JSON", help="intersection matrix file instead of an ADE type")
    p = sub.add_parser("validate", parents=[common], help="semismallness of a map descriptor")
    p.add_argument("descriptor")
    sub.add_parser("selfcheck", parents=[common], help="run the full cross-check matrix")
    return parser


def _atoms(cfg: RunConfig) -> tuple[HodgeDatum, HodgeDatum]:
    data = [load_hodge_datum(path) for path in cfg.inputs]
    surfaces = [d for d in data if d.dim == 2]
    curves = [d for d in data if d.dim == 1]
    if len(surfaces) > 1 or len(curves) > 1:
        raise UsageError("give at most one surface and one curve via --input")
    if len(surfaces) + len(curves) != len(data):
        raise UsageError("--input atoms must be surfaces (dim 2) or curves (dim 1)")
    X = surfaces[0] if surfaces else projective_space(2)
    D = curves[0] if curves else projective_space(1)
    return X, D


def _emit_decomposition(cfg: RunConfig, records, label: str, default_mode: str) -> list[str]:
    mode = cfg.mode or default_mode
    relevant = [r for r in records if r.relevant]
    motive = MotiveSum((r.cover, 1) for r in relevant)
    realized = {} if mode == "motive" else {mode: realize(motive, mode)}
    if cfg.fmt == "csv":
        return [out.strata_csv(records).rstrip("\n")]
    if cfg.fmt == "json":
        return [out.dumps(out.decomposition_json(records, realized)).rstrip("\n")]
    lines = [f"{label} = {motive}"]
    lines += [f"{m}: {p}" for m, p in realized.items()]
    return lines


def cmd_hilbert(cfg):
    X, _ = _atoms(cfg)
    n = cfg.args.n
    return _emit_decomposition(cfg, hilbert_strata(n, X), f"[{X.name}^[{n}]]", "poincare"), 0


def cmd_nested(cfg):
    X, _ = _atoms(cfg)
    n = cfg.args.n
    return _emit_decomposition(cfg, nested_strata(n, X), f"[{X.name}^[{n},{n + 1}]]", "poincare"), 0


def cmd_parabolic(cfg):
    X, D = _atoms(cfg)
    a = cfg.args
    if len(a.l) != a.h:
        raise UsageError(f"parabolic needs exactly h = {a.h} lengths l1..lh, got {len(a.l)}")
    records = parabolic_strata(a.n, a.h, a.l, X, D)
    label = f"[Hilb({X.name},{D.name};{a.n},{a.h},({','.join(map(str, a.l))}))]"
    lines = _emit_decomposition(cfg, records, label, "poincare")
    if cfg.fmt == "plain":
        lines.append(f"strata: {len(records)}, relevant: {sum(r.relevant for r in records)}")
    return lines, 0


def cmd_wreath(cfg):
    a = cfg.args
    mode = cfg.mode or "euler"
    if mode not in ("euler", "motive"):
        raise RankOnlyError(
            f"the wreath decomposition has open (affine quotient) pieces: mode {mode!r} "
            "is not certified; use --mode euler (rank-only)"
        )
    records = wreath_strata(a.r, a.n, literal_monomials=cfg.literal_monomials)
    rank = realize_euler(MotiveSum((r.cover, 1) for r in records))
    oracle = wreath_class_oracle(a.r, a.n)
    table = wreath_rank_table(a.r, a.n, literal_monomials=cfg.literal_monomials)
    status = 0 if cfg.literal_monomials or rank == oracle else 1
    if cfg.fmt == "csv":
        return [out.strata_csv(records).rstrip("\n")], status
    if cfg.fmt == "json":
        payload = out.decomposition_json(records, {"euler": rank})
        payload["rank_table"] = [
            {"i": i, "nu": list(nu.parts), "count": c} for (i, nu), c in sorted(table.items())
        ]
        payload["oracle"] = oracle
        payload["literal_monomials"] = cfg.literal_monomials
        return [out.dumps(payload).rstrip("\n")], status
    lines = [f"i={i} nu={nu}: {c}" for (i, nu), c in sorted(table.items())]
    lines.append(f"rank: {rank}")
    lines.append(f"conjugacy classes of G_{a.n} (|G_*| = {a.r + 1}): {oracle}")
    if cfg.literal_monomials:
        lines.append("labelling: literal monomials (documentation only, not certified)")
    return lines, status


def cmd_series(cfg):
    X, D = _atoms(cfg)
    a = cfg.args
    mode = cfg.mode or "poincare"
    if a.kind == "goettsche":
        h, bounds = 0, (cfg.trunc_t,)
    else:
        if a.h < 1:
            raise UsageError("--h must be positive")
        h, bounds = a.h, (cfg.trunc_t,) + (cfg.trunc_s,) * a.h
    names = ("t",) + tuple(f"s{k}" for k in range(1, h + 1))
    if mode == "motive":
        coeffs = motive_series(X, D if h else None, h, bounds)
        if cfg.fmt == "json":
            return [out.dumps(out.motive_series_json(coeffs)).rstrip("\n")], 0
        return [f"{_deg(names, e)}: {M}" for e, M in sorted(coeffs.items())], 0
    s = goettsche_series(X, cfg.trunc_t, mode) if h == 0 else parabolic_series(X, D, h, bounds, mode)
    if cfg.fmt == "json":
        return [out.dumps(out.series_json(s)).rstrip("\n")], 0
    if cfg.fmt == "csv":
        return ["degree,coefficient"] + [f'"{_deg(names, e)}","{p}"' for e, p in s.items()], 0
    return [f"{_deg(names, e)}: {p}" for e, p in s.items()], 0


def _deg(names, e) -> str:
    return "*".join(f"{v}^{k}" for v, k in zip(names, e) if k) or "1"


def _fmt_matrix(m) -> list[str]:
    return ["  [" + ", ".join(format_rational(x) for x in row) + "]" for row in m]


def cmd_projector(cfg):
    a = cfg.args
    if a.matrix:
        M = load_intersection_matrix(a.matrix)
        name = a.matrix
    else:
        if a.kind is None or a.rank is None:
            raise UsageError("projector needs a type and rank (e.g. 'A 2') or --matrix FILE")
        M = ade_intersection_matrix(a.kind, a.rank)
        name = f"{a.kind}{a.rank}"
    lam = invert(M)
    P = mumford_projector(M)
    idem = is_idempotent(P)
    orth = check_orthogonality(lam, M)
    status = 0 if idem and orth else 1
    if cfg.fmt == "json":
        payload = {
            "configuration": name,
            "intersection_matrix": M.to_json(),
            "lambda": [[format_rational(x) for x in row] for row in lam],
            "projector": {
                "diagonal": format_rational(P.diagonal),
                "off": [[format_rational(x) for x in row] for row in P.off],
            },
            "idempotent": idem,
            "orthogonality": orth,
        }
        return [out.dumps(payload).rstrip("\n")], status
    lines = [f"configuration: {name}", "M ="] + _fmt_matrix(M.matrix)
    if len(lam) == 1:
        lines.append(f"Lambda = {format_rational(lam[0][0])}")
    else:
        lines += ["Lambda ="] + _fmt_matrix(lam)
    lines.append(f"P = {P}")
    lines.append(f"P idempotent: {str(idem).lower()}")
    lines.append(f"Lambda.M = I: {str(orth).lower()}")
    return lines, status


def cmd_validate(cfg):
    d = load_descriptor(cfg.args.descriptor)
    verdict = check_semismall(d)
    payload = {
        "verdict": verdict.value,
        "relevant_strata": [list(s) for s in relevant_strata(d)],
    }
    status = 0
    if verdict.value != "neither":
        payload["self_fibre_product_bound"] = fibre_product_dim_bound(d, d)
    else:
        status = 1
    if cfg.fmt == "json":
        return [out.dumps(payload).rstrip("\n")], status
    lines = [f"verdict: {verdict.value}", f"relevant strata: {payload['relevant_strata']}"]
    if "self_fibre_product_bound" in payload:
        lines.append(f"dim X x_Y X <= {payload['self_fibre_product_bound']} (dim {d.dim})")
    return lines, status


def cmd_selfcheck(cfg):
    from .selfcheck import run

    lines, failed = [], 0
    for name, ok, detail, secs in run():
        lines.append(f"{'PASS' if ok else 'FAIL'}  {name}  ({secs:.2f}s)  {detail}")
        failed += not ok
        print(lines[-1], flush=True)
    summary = f"{failed} failed" if failed else "all checks passed"
    print(summary)
    return [], 1 if failed else 0


COMMANDS = {
    "hilbert": cmd_hilbert,
    "nested": cmd_nested,
    "parabolic": cmd_parabolic,
    "wreath": cmd_wreath,
    "series": cmd_series,
    "projector": cmd_projector,
    "validate": cmd_validate,
    "selfcheck": cmd_selfcheck,
}


def run(cfg: RunConfig) -> tuple[list[str], int]:
    return COMMANDS[cfg.command](cfg)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(
            command=args.command,
            args=args,
            inputs=args.input,
            trunc_t=args.trunc_t,
            trunc_s=args.trunc_s,
            mode=args.mode,
            fmt=args.fmt,
            literal_monomials=args.literal_monomials,
        )
        lines, status = run(cfg)
    except RankOnlyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (UsageError, HodgeDataError, IntersectionMatrixError, DescriptorError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if lines:
        print("\n".join(lines))
    return status


if __name__ == "__main__":
    sys.exit(main())
