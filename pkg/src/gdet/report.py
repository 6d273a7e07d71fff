"""Machine-readable records (JSON schema ``gdet/1``), CSV spectra and text.

Integers always travel as decimal strings so arbitrarily large determinants
survive any JSON consumer.
"""

from __future__ import annotations

import csv
import io
import json
from enum import Enum

from .detengine import FactoredDeterminant
from .groupring import GroupSpec, RingElement
from .laws import LambdaReport, Verdict
from .parse import format_element
from .search import SearchReport
from .witnesses import Witness

SCHEMA = "gdet/1"

__all__ = [
    "SCHEMA",
    "jsonable",
    "group_record",
    "element_record",
    "det_record",
    "factor_record",
    "witness_record",
    "verdict_record",
    "lambda_record",
    "search_record",
    "emit_json",
    "spectrum_csv",
    "render_text",
]


def jsonable(obj):
    """Recursively convert to JSON types with integers as decimal strings."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, GroupSpec):
        return group_record(obj)
    if isinstance(obj, RingElement):
        return element_record(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    return obj


def group_record(G: GroupSpec) -> dict:
    return {"family": G.family.value, "n": str(G.n), "name": G.name}


def element_record(a: RingElement) -> dict:
    return {
        "f": [str(c) for c in a.f.coeffs],
        "g": None if a.g is None else [str(c) for c in a.g.coeffs],
        "text": format_element(a),
    }


def _base(kind: str, command: dict | None) -> dict:
    out = {"schema": SCHEMA, "kind": kind}
    if command is not None:
        out["command"] = jsonable(command)
    return out


def det_record(a: RingElement, value: int, oracle: dict | None = None, command: dict | None = None) -> dict:
    out = _base("det", command)
    out.update(value=str(value), group=group_record(a.group), element=element_record(a))
    if oracle is not None:
        out["oracle"] = jsonable(oracle)
        out["agree"] = all(v == value for v in oracle.values())
    return out


def factor_record(a: RingElement, fd: FactoredDeterminant, command: dict | None = None) -> dict:
    out = _base("factor", command)
    out.update(
        value=str(fd.total),
        group=group_record(a.group),
        element=element_record(a),
        parts={str(d): str(v) for d, v in sorted(fd.parts.items())},
    )
    return out


def witness_record(w: Witness, recomputed: int | None = None, command: dict | None = None) -> dict:
    out = _base("witness", command)
    out.update(
        group=group_record(w.group),
        f=[str(c) for c in w.element.f.coeffs],
        g=None if w.element.g is None else [str(c) for c in w.element.g.coeffs],
        text=format_element(w.element),
        claimed=str(w.claimed),
        anchor=w.anchor,
        params=jsonable(w.params),
    )
    if w.valuation is not None:
        out["valuation"] = {"p": str(w.valuation[0]), "exponent": str(w.valuation[1])}
    if recomputed is not None:
        out["recomputed"] = str(recomputed)
        out["verified"] = recomputed == w.claimed
    return out


def verdict_record(v: Verdict, value: int, context: dict, command: dict | None = None) -> dict:
    out = _base("classify", command)
    out.update(jsonable(context))
    out.update(
        value=str(value),
        status=v.status.value,
        code=v.code,
        reason=v.message,
        decomposition=jsonable(v.decomposition),
    )
    return out


def lambda_record(r: LambdaReport, command: dict | None = None) -> dict:
    out = _base("lambda", command)
    out.update(
        group=group_record(r.group),
        value=str(r.value),
        exact=r.exact,
        p0=str(r.p0),
        note=r.note,
        certificate=jsonable(r.certificate),
        witness=None if r.witness is None else witness_record(r.witness),
    )
    return out


def search_record(r: SearchReport, command: dict | None = None) -> dict:
    s = r.spec
    out = _base("search", command)
    out.update(
        group=group_record(s.group),
        spec={
            "coeff_min": str(s.lo),
            "coeff_max": str(s.coeff_bound),
            "mode": s.mode,
            "value_cap": None if s.value_cap is None else str(s.value_cap),
            "budget": None if s.budget is None else str(s.budget),
            "sampling": s.sampling,
            "seed": str(s.seed),
            "frontier_p": None if s.frontier_p is None else str(s.frontier_p),
            "screen": s.screen,
        },
        best_value=None if r.best_value is None else str(r.best_value),
        best_element=None if r.best_element is None else element_record(r.best_element),
        exhausted=r.exhausted,
        elements_visited=str(r.elements_visited),
        spectrum=[
            {"value": str(e.value), "multiplicity": str(e.multiplicity), "example": [str(c) for c in e.example]}
            for e in r.spectrum
        ],
        violations=[str(v) for v in r.violations],
    )
    return out


def emit_json(record: dict) -> bytes:
    return (json.dumps(record, separators=(",", ":")) + "\n").encode()


def spectrum_csv(r: SearchReport) -> bytes:
    N = r.spec.group.x_modulus
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["value", "multiplicity", "example_f", "example_g"])
    for e in r.spectrum:
        f, g = e.example[:N], e.example[N:]
        w.writerow([e.value, e.multiplicity, " ".join(map(str, f)), " ".join(map(str, g))])
    return buf.getvalue().encode()


def _text_lines(rec: dict) -> list[str]:
    kind = rec["kind"]
    if kind == "det":
        lines = [rec["value"]]
        if "oracle" in rec:
            lines.append("oracle " + " ".join(f"{k}={v}" for k, v in rec["oracle"].items()))
            lines.append("agree" if rec["agree"] else "MISMATCH")
        return lines
    if kind == "factor":
        return [rec["value"]] + [f"M_{d} = {v}" for d, v in rec["parts"].items()]
    if kind == "witness":
        lines = [
            f"{rec['group']['name']}: {rec['text']}",
            f"claimed {rec['claimed']} ({rec['anchor']})",
        ]
        if "valuation" in rec:
            lines.append(f"asserted {rec['valuation']['p']}^{rec['valuation']['exponent']} || det")
        if "recomputed" in rec:
            lines.append(f"recomputed {rec['recomputed']}: {'ok' if rec['verified'] else 'MISMATCH'}")
        return lines
    if kind == "classify":
        lines = [f"{rec['status']} {rec['code']}: {rec['reason']}"]
        if rec.get("decomposition"):
            lines.append("decomposition " + " ".join(f"{k}={v}" for k, v in rec["decomposition"].items()))
        return lines
    if kind == "lambda":
        tag = "" if rec["exact"] else " (upper bound)"
        lines = [rec["value"] + tag, f"p0 = {rec['p0']}; {rec['note']}"]
        for c in rec["certificate"]:
            lines.append(f"  {c['value']:>4} excluded: {c['code']}")
        if rec["witness"]:
            lines.append(f"witness det {rec['witness']['claimed']}: {rec['witness']['anchor']}")
        return lines
    if kind == "search":
        lines = [
            f"{rec['group']['name']} {rec['spec']['mode']} over [{rec['spec']['coeff_min']}, {rec['spec']['coeff_max']}]",
            f"visited {rec['elements_visited']} exhausted={rec['exhausted']}",
        ]
        if rec["best_value"] is not None:
            lines.append(f"best {rec['best_value']} at {rec['best_element']['text']}")
        if rec["spectrum"]:
            lines.append("values " + " ".join(e["value"] for e in rec["spectrum"]))
        if rec["violations"]:
            lines.append("LAW VIOLATIONS " + " ".join(rec["violations"]))
        return lines
    if kind == "selftest":
        return [f"criterion {c['id']}: {'PASS' if c['passed'] else 'FAIL'} {c['name']} ({c['detail']})" for c in rec["criteria"]]
    return [json.dumps(rec)]


def render_text(rec: dict) -> bytes:
    return ("\n".join(_text_lines(rec)) + "\n").encode()
