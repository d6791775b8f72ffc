"""Assembly of analysis reports shared by the service and the CLI.

Reports are plain dicts of JSON-serializable values with witnesses given
as sorted label lists, so the same structure can be rendered as text,
returned from the HTTP API, or dumped as stable JSON.
"""

from __future__ import annotations

from typing import Optional

from . import predicates
from .exminors import is_excluded_series_minor
from .gf2 import ElementSet
from .matroid import BinaryMatroid
from .recognizer import RecognitionReport, recognize_regular_cd

CIRCUIT_PRINT_CAP = 64

# series-minor scans grow exponentially with size, so the optional
# excluded-series-minor verdict is limited to inputs this small
EXMINOR_ANALYZE_CAP = 12


def _labels(m: BinaryMatroid, s: ElementSet) -> list[str]:
    return sorted(m.label_set(s))


def _pair(m: BinaryMatroid, pair) -> list[list[str]]:
    return [_labels(m, pair[0]), _labels(m, pair[1])]


def circuits_report(m: BinaryMatroid) -> dict:
    members = m.circuits().members
    shown = members[:CIRCUIT_PRINT_CAP]
    return {
        "size": m.size,
        "rank": m.rank,
        "corank": m.corank,
        "circuit_count": len(members),
        "circuits": [_labels(m, c) for c in shown],
        "truncated": len(members) > len(shown),
    }


def recognize_report(m: BinaryMatroid) -> dict:
    if not predicates.is_regular(m):
        return {
            "applicable": False,
            "reason": "not regular",
            "excluded_minor": predicates.is_regular(m).witness,
        }
    return {"applicable": True, **_recognition_dict(m, recognize_regular_cd(m))}


def _recognition_dict(m: BinaryMatroid, rec: RecognitionReport) -> dict:
    comps = []
    for c in rec.components:
        comps.append(
            {
                "elements": sorted(c.elements),
                "is_circuit_difference": c.is_circuit_difference,
                "base": c.base,
                "series_classes": (
                    {k: sorted(v) for k, v in c.series_classes.items()}
                    if c.series_classes is not None
                    else None
                ),
                "violating_pair": (
                    [sorted(c.violating_pair[0]), sorted(c.violating_pair[1])]
                    if c.violating_pair is not None
                    else None
                ),
            }
        )
    return {
        "is_circuit_difference": rec.is_circuit_difference,
        "empty": rec.empty,
        "components": comps,
    }


def analyze_report(m: BinaryMatroid) -> dict:
    report: dict = {
        "size": m.size,
        "rank": m.rank,
        "corank": m.corank,
        "labels": list(m.labels),
        "connected": m.is_connected(),
        "components": sorted(_labels(m, c) for c in m.components()),
        "loops": _labels(m, m.loops()),
        "coloops": _labels(m, m.coloops()),
        "cosimple": m.is_cosimple(),
    }
    report.update(circuits_report(m))

    preds: dict[str, bool] = {}
    witnesses: dict[str, object] = {}

    cd = predicates.is_circuit_difference(m)
    preds["circuit_difference"] = cd.value
    if cd.witness is not None:
        witnesses["circuit_difference"] = _pair(m, cd.witness)

    skew = predicates.skew_circuit_pair(m)
    preds["has_skew_circuits"] = skew is not None
    if skew is not None:
        witnesses["has_skew_circuits"] = _pair(m, skew)

    cc = predicates.is_circuit_complementary(m)
    preds["circuit_complementary"] = cc.value
    if cc.witness is not None:
        witnesses["circuit_complementary"] = _labels(m, cc.witness)

    hc = predicates.is_hyperplane_complementary(m)
    preds["hyperplane_complementary"] = hc.value
    if hc.witness is not None:
        witnesses["hyperplane_complementary"] = _labels(m, hc.witness)

    if m.is_connected() and m.size:
        unb = predicates.is_unbreakable(m)
        preds["unbreakable"] = unb.value
        if unb.witness is not None:
            witnesses["unbreakable"] = _labels(m, unb.witness)

    reg = predicates.is_regular(m)
    preds["regular"] = reg.value
    if reg.witness is not None:
        witnesses["regular"] = reg.witness

    gra = predicates.is_graphic(m)
    preds["graphic"] = gra.value
    if gra.witness is not None:
        witnesses["graphic"] = gra.witness

    if m.size <= EXMINOR_ANALYZE_CAP and m.is_connected():
        preds["excluded_series_minor"] = is_excluded_series_minor(m)

    report["predicates"] = preds
    report["witnesses"] = witnesses
    report["recognition"] = recognize_report(m) if reg.value else None
    return report


def _fmt_set(labels: list[str]) -> str:
    return "{" + ",".join(labels) + "}"


def _fmt_witness(value) -> str:
    if isinstance(value, list) and value and isinstance(value[0], list):
        return ", ".join(_fmt_set(v) for v in value)
    if isinstance(value, list):
        return _fmt_set(value)
    return str(value)


def render_circuits(report: dict) -> str:
    lines = [
        f"size: {report['size']}",
        f"rank: {report['rank']}",
        f"corank: {report['corank']}",
        f"circuits: {report['circuit_count']}",
    ]
    for c in report["circuits"]:
        lines.append("  " + _fmt_set(c))
    if report["truncated"]:
        lines.append(f"  ... ({report['circuit_count'] - len(report['circuits'])} more)")
    return "\n".join(lines)


def render_recognition(rec: Optional[dict], indent: str = "") -> str:
    if rec is None:
        return indent + "recognition: skipped (not regular)"
    if not rec.get("applicable", True):
        return indent + f"recognition: not applicable ({rec['reason']})"
    lines = [indent + f"recognition: circuit-difference = {rec['is_circuit_difference']}"]
    for comp in rec["components"]:
        head = indent + f"  component {_fmt_set(comp['elements'])}: "
        if comp["is_circuit_difference"]:
            lines.append(head + f"base {comp['base']}")
            for base_elt, cls in sorted((comp["series_classes"] or {}).items()):
                lines.append(indent + f"    series class of {base_elt}: {_fmt_set(cls)}")
        else:
            pair = comp["violating_pair"]
            lines.append(head + "violating pair " + _fmt_witness(pair))
    return "\n".join(lines)


def render_analyze(report: dict) -> str:
    lines = [
        f"size: {report['size']}",
        f"rank: {report['rank']}",
        f"corank: {report['corank']}",
        f"connected: {report['connected']}",
        f"components: {len(report['components'])}",
        f"cosimple: {report['cosimple']}",
    ]
    if report["loops"]:
        lines.append(f"loops: {_fmt_set(report['loops'])}")
    if report["coloops"]:
        lines.append(f"coloops: {_fmt_set(report['coloops'])}")
    lines.append(f"circuits: {report['circuit_count']}")
    for c in report["circuits"]:
        lines.append("  " + _fmt_set(c))
    if report["truncated"]:
        lines.append(f"  ... ({report['circuit_count'] - len(report['circuits'])} more)")
    for name, value in report["predicates"].items():
        line = f"{name.replace('_', '-')}: {value}"
        if name in report["witnesses"]:
            line += f"  (witness: {_fmt_witness(report['witnesses'][name])})"
        lines.append(line)
    lines.append(render_recognition(report["recognition"]))
    return "\n".join(lines)
