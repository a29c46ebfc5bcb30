"""Command-line front end.

Exit codes: 0 success, 1 theorem hypotheses fail, 2 parse/argument error,
3 resource limit, 4 ghost vertex, 5 verdict mismatch (a bug or counterexample).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import masks
from .complexes import SimplicialComplex, glue_simplex, join, k2r_family, wedge
from .double import h_ranks, hh_ranks
from .errors import (
    BadSigma,
    BoundaryMissing,
    FaceAlreadyPresent,
    GhostVertex,
    MachhError,
    NotApplicable,
    NotAVertex,
    NotInSubset,
    ResourceLimit,
    VertexOutOfRange,
)
from .fields import RATIONALS, Field, prime_field
from .oracle import oracle_hh_rows
from .serialization import (
    ParseError,
    complex_to_dict,
    load_complex,
    render_json,
    render_table_csv,
    render_table_pretty,
    result_document,
)
from .theorem import verify_theorem1

DEFAULT_MAX_M = 22


@dataclass
class RunConfig:
    field: Field
    threads: int
    max_m: int
    fmt: str
    verify_exact: bool
    out: str | None


def _parse_field(spec: str) -> Field:
    if spec == "q":
        return RATIONALS
    if spec.startswith("gf:"):
        try:
            p = int(spec[3:])
        except ValueError:
            raise ParseError(f"bad field spec {spec!r}")
        try:
            return prime_field(p)
        except ValueError as exc:
            raise ParseError(str(exc))
    raise ParseError(f"bad field spec {spec!r} (use q or gf:<odd prime>)")


def _default_threads() -> str:
    return os.environ.get("MACHH_THREADS", "1")


def _parse_threads(spec: str) -> int:
    if spec == "auto":
        return os.cpu_count() or 1
    try:
        n = int(spec)
    except ValueError:
        raise ParseError(f"bad thread count {spec!r}")
    if n < 1:
        raise ParseError("thread count must be >= 1")
    return n


def _parse_vertex_list(spec: str) -> list[int]:
    try:
        return [int(x) for x in spec.split(",") if x.strip() != ""]
    except ValueError:
        raise ParseError(f"bad vertex list {spec!r}")


def _config(args) -> RunConfig:
    max_m = args.max_m
    if max_m < 1 or max_m > masks.MAX_GROUND_SET:
        raise ParseError(f"--max-m must be in 1..{masks.MAX_GROUND_SET}")
    return RunConfig(
        field=_parse_field(args.field),
        threads=_parse_threads(args.threads),
        max_m=max_m,
        fmt=args.format,
        verify_exact=args.verify_exact,
        out=args.out,
    )


def _emit(text: str, out: str | None) -> None:
    """Write the finished document; never leaves a partial file behind."""
    if out is None:
        sys.stdout.write(text)
        return
    tmp = Path(out).with_suffix(Path(out).suffix + ".tmp")
    tmp.write_text(text)
    tmp.replace(out)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="machh",
        description="Ordinary and double cohomology ranks of moment-angle complexes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--field", default="q", help="q (exact rationals) or gf:<odd prime>")
        p.add_argument("--threads", default=_default_threads(), help="worker count or 'auto'")
        p.add_argument("--max-m", type=int, default=DEFAULT_MAX_M, help="resource cap on m")
        p.add_argument("--out", default=None, help="write output to this path")
        p.add_argument(
            "--format", choices=["json", "csv", "table"], default="json", help="output format"
        )
        p.add_argument(
            "--verify-exact",
            action="store_true",
            help="recompute final ranks over the rationals when using gf:<p>",
        )

    p_hh = sub.add_parser("hh", help="bigraded double cohomology ranks of a complex file")
    p_hh.add_argument("input")
    common(p_hh)

    p_h = sub.add_parser("h", help="bigraded ordinary cohomology ranks of a complex file")
    p_h.add_argument("input")
    common(p_h)

    p_con = sub.add_parser("construct", help="build complexes and write them as JSON")
    con_sub = p_con.add_subparsers(dest="kind", required=True)
    p_k2r = con_sub.add_parser("k2r", help="member of the even-rank family")
    p_k2r.add_argument("--r", type=int, required=True)
    common(p_k2r)
    p_join = con_sub.add_parser("join", help="simplicial join of two complex files")
    p_join.add_argument("a")
    p_join.add_argument("b")
    common(p_join)
    p_wedge = con_sub.add_parser("wedge", help="one-point union of two complex files")
    p_wedge.add_argument("a")
    p_wedge.add_argument("b")
    p_wedge.add_argument("--at-a", type=int, required=True, help="vertex of the first complex")
    p_wedge.add_argument("--at-b", type=int, required=True, help="vertex of the second complex")
    common(p_wedge)
    p_glue = con_sub.add_parser("glue", help="add one simplex whose boundary is present")
    p_glue.add_argument("a")
    p_glue.add_argument("--face", required=True, help="comma-separated vertices")
    common(p_glue)

    p_chk = sub.add_parser("check-thm1", help="verify the simplex-gluing rank theorem")
    p_chk.add_argument("input")
    p_chk.add_argument("sigma", help="comma-separated vertices of the glued simplex")
    common(p_chk)

    p_lad = sub.add_parser("ladder", help="even-rank family: computed vs expected totals")
    p_lad.add_argument("--r-max", type=int, required=True)
    common(p_lad)

    p_orc = sub.add_parser("oracle", help=argparse.SUPPRESS)
    p_orc.add_argument("input")
    common(p_orc)

    return parser


def _cmd_ranks(args, want_hh: bool) -> int:
    cfg = _config(args)
    K = load_complex(args.input)
    if K.m > cfg.max_m:
        raise ResourceLimit(f"m = {K.m} exceeds --max-m {cfg.max_m}")
    h = h_ranks(K, cfg.field, cfg.threads, cfg.max_m)
    hh = hh_ranks(K, cfg.field, cfg.threads, cfg.max_m) if want_hh else None
    doc = result_document(K.m, cfg.field.name, h=h, hh=hh)
    if want_hh and cfg.verify_exact and cfg.field is not RATIONALS:
        exact = hh_ranks(K, RATIONALS, cfg.threads, cfg.max_m)
        if exact.entries != hh.entries:
            sys.stderr.write("VerificationMismatch: gf ranks differ from exact rational ranks\n")
            return 5
        doc["verified_exact"] = True
    if cfg.fmt == "json":
        text = render_json(doc)
    elif cfg.fmt == "csv":
        text = render_table_csv(hh if want_hh else h)
    else:
        text = render_table_pretty(hh if want_hh else h, "hh" if want_hh else "h")
    _emit(text, cfg.out)
    return 0


def _cmd_construct(args) -> int:
    cfg = _config(args)
    meta = None
    if args.kind == "k2r":
        if args.r < 1:
            raise ParseError("--r must be >= 1")
        built = k2r_family(args.r)
        K = built.complex
        meta = {"non_edge": list(built.non_edge)}
    elif args.kind == "join":
        K = join(load_complex(args.a), load_complex(args.b))
    elif args.kind == "wedge":
        K = wedge(load_complex(args.a), args.at_a, load_complex(args.b), args.at_b)
    else:
        A = load_complex(args.a)
        K = glue_simplex(A, masks.mask_of(_parse_vertex_list(args.face), A.m))
    _emit(render_json(complex_to_dict(K, meta)), cfg.out)
    return 0


def _cmd_check_thm1(args) -> int:
    cfg = _config(args)
    K = load_complex(args.input)
    sigma = masks.mask_of(_parse_vertex_list(args.sigma), K.m)
    result = verify_theorem1(K, sigma, cfg.field, cfg.threads, cfg.max_m)
    rep = result.report
    doc = {
        "sigma": list(masks.vertices(sigma)),
        "n": rep.n,
        "conditions": list(rep.conditions),
        "applicable": rep.applicable,
        "witnessing_J": list(masks.vertices(rep.witnessing_J))
        if rep.witnessing_J is not None
        else None,
        "predicted_delta": rep.predicted_delta,
        "relabeling": list(rep.relabeling),
        "rank_before": result.rank_before,
        "rank_after": result.rank_after,
        "rows_before": {str(p): r for p, r in result.rows_before.items()},
        "rows_after": {str(p): r for p, r in result.rows_after.items()},
        "verdict": "pass" if result.verdict else "fail",
    }
    _emit(render_json(doc), cfg.out)
    if not result.verdict:
        sys.stderr.write("VerdictMismatch: observed rank changes disagree with the theorem\n")
        return 5
    return 0


def _cmd_ladder(args) -> int:
    cfg = _config(args)
    if args.r_max < 1:
        raise ParseError("--r-max must be >= 1")
    rows = []
    all_pass = True
    for r in range(1, args.r_max + 1):
        built = k2r_family(r)
        K = built.complex
        if K.m > cfg.max_m:
            raise ResourceLimit(f"family member r={r} needs m={K.m} > --max-m {cfg.max_m}")
        rank = hh_ranks(K, cfg.field, cfg.threads, cfg.max_m).total()
        ok = rank == 2 * r
        all_pass = all_pass and ok
        rows.append({"r": r, "m": K.m, "rank": rank, "expected": 2 * r, "pass": ok})
    if cfg.fmt == "json":
        text = render_json({"rows": rows, "all_pass": all_pass})
    elif cfg.fmt == "csv":
        lines = ["r,m,rank,expected,pass"]
        lines += [f"{x['r']},{x['m']},{x['rank']},{x['expected']},{str(x['pass']).lower()}" for x in rows]
        text = "\n".join(lines) + "\n"
    else:
        lines = ["r  m  rank expected pass"]
        lines += [f"{x['r']:<2} {x['m']:<2} {x['rank']:<4} {x['expected']:<8} {x['pass']}" for x in rows]
        text = "\n".join(lines) + "\n"
    _emit(text, cfg.out)
    return 0 if all_pass else 5


def _cmd_oracle(args) -> int:
    cfg = _config(args)
    K = load_complex(args.input)
    rows = oracle_hh_rows(K)
    doc = {
        "m": K.m,
        "hh_rows": {str(p): r for p, r in rows.items()},
        "hh_total": sum(rows.values()),
    }
    _emit(render_json(doc), cfg.out)
    return 0


def _run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "hh":
        return _cmd_ranks(args, want_hh=True)
    if args.command == "h":
        return _cmd_ranks(args, want_hh=False)
    if args.command == "construct":
        return _cmd_construct(args)
    if args.command == "check-thm1":
        return _cmd_check_thm1(args)
    if args.command == "ladder":
        return _cmd_ladder(args)
    return _cmd_oracle(args)


def main(argv=None) -> int:
    try:
        return _run(argv)
    except NotApplicable as exc:
        sys.stderr.write(f"NotApplicable: {exc}\n")
        return 1
    except GhostVertex as exc:
        sys.stderr.write(f"GhostVertex: {exc}\n")
        return 4
    except ResourceLimit as exc:
        sys.stderr.write(f"ResourceLimit: {exc}\n")
        return 3
    except (
        ParseError,
        VertexOutOfRange,
        BadSigma,
        NotAVertex,
        NotInSubset,
        FaceAlreadyPresent,
        BoundaryMissing,
        ValueError,
    ) as exc:
        sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
        return 2
    except MachhError as exc:  # anything else from the library is a bug
        sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
        return 5


if __name__ == "__main__":
    raise SystemExit(main())
