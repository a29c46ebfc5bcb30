"""Input/result file formats. All vertex labels are 1-based in I/O."""

from __future__ import annotations

import json
from pathlib import Path

from . import masks
from .complexes import SimplicialComplex
from .double import BigradedRankTable
from .errors import MachhError


class ParseError(MachhError):
    """Malformed input document."""


def complex_from_dict(doc: dict) -> SimplicialComplex:
    if not isinstance(doc, dict):
        raise ParseError("top-level value must be an object")
    m = doc.get("m")
    facets = doc.get("facets")
    if not isinstance(m, int):
        raise ParseError('"m" must be an integer')
    if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
        raise ParseError('"facets" must be a list of vertex lists')
    labels = doc.get("labels")
    if labels is not None and (
        not isinstance(labels, list)
        or len(labels) != m
        or not all(isinstance(x, str) for x in labels)
    ):
        raise ParseError('"labels" must be a list of m strings')
    return SimplicialComplex.from_facets(m, facets)


def load_complex(path: str | Path) -> SimplicialComplex:
    try:
        doc = json.loads(Path(path).read_text())
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc}") from exc
    return complex_from_dict(doc)


def complex_to_dict(K: SimplicialComplex, meta: dict | None = None) -> dict:
    doc = {
        "m": K.m,
        "facets": [list(masks.vertices(f)) for f in K.facets],
    }
    if meta:
        doc["meta"] = meta
    return doc


def bidegree_key(neg_k: int, two_l: int) -> str:
    return f"({neg_k},{two_l})"


def table_to_json_dict(table: BigradedRankTable) -> dict:
    return {
        bidegree_key(neg_k, two_l): r
        for (neg_k, two_l), r in sorted(table.entries.items())
    }


def result_document(
    m: int,
    field_name: str,
    h: BigradedRankTable | None = None,
    hh: BigradedRankTable | None = None,
) -> dict:
    doc: dict = {"m": m, "field": field_name}
    if h is not None:
        doc["h"] = table_to_json_dict(h)
    if hh is not None:
        doc["hh"] = table_to_json_dict(hh)
        doc["hh_total"] = hh.total()
        doc["hh_rows"] = {str(p): r for p, r in hh.rows().items()}
        doc["euler_hh"] = hh.euler_characteristic()
    return doc


def render_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def render_table_csv(table: BigradedRankTable) -> str:
    lines = ["k,l,rank"]
    for (neg_k, two_l), r in sorted(table.entries.items(), key=lambda e: (-e[0][0], e[0][1])):
        lines.append(f"{-neg_k},{two_l // 2},{r}")
    return "\n".join(lines) + "\n"


def render_table_pretty(table: BigradedRankTable, title: str) -> str:
    lines = [title, "bidegree   rank"]
    for (neg_k, two_l), r in sorted(table.entries.items()):
        lines.append(f"{bidegree_key(neg_k, two_l):<10} {r}")
    lines.append(f"total      {table.total()}")
    return "\n".join(lines) + "\n"
