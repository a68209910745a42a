"""Text and JSON rendering of command results

Text output carries no timings, so it is byte-identical across runs;
JSON output keeps timings under "timings_ms".
"""
import json
from typing import Any, Dict, List, Sequence


class ReportFormatter:
    """Render result dicts produced by the commands"""

    @staticmethod
    def to_json(data: Dict[str, Any]) -> str:
        return json.dumps(data, indent=2, ensure_ascii=False)

    @staticmethod
    def _m(value: Any) -> str:
        return str(value)

    @staticmethod
    def kappa(result: Dict[str, Any]) -> str:
        lines = [
            f"f = {result['f']}",
            f"curve multiplicity = {result['curve_multiplicity']}",
            f"genericity point = {','.join(result['genericity_point'])}",
            f"kappa = {result['kappa']}",
        ]
        if result.get("smooth"):
            lines.append("smooth curve: Ann^(1) reported without the multiplicity criterion")
        if not result.get("holonomic", True):
            lines.append("warning: characteristic ideal is not of dimension 2")
        lines.append("trace:")
        for row in result["trace"]:
            lines.append(f"  d={row['d']} m={ReportFormatter._m(row['m'])} "
                         f"generators={len(row['generators'])} dim={row['char_dimension']}")
        lines.append("annihilator:")
        lines.extend(f"  {g}" for g in result["annihilator"])
        return "\n".join(lines)

    @staticmethod
    def generators(title: str, gens: Sequence[str]) -> str:
        lines = [title]
        lines.extend(f"  {g}" for g in gens)
        return "\n".join(lines)

    @staticmethod
    def char_ideal(result: Dict[str, Any]) -> str:
        lines = [ReportFormatter.generators(f"gr(Ann^({result['d']})):", result["char_ideal"]),
                 f"dimension = {result['dimension']}"]
        if "point" in result:
            lines.append(f"point = {','.join(result['point'])}")
            lines.append(ReportFormatter.generators("restricted:", result["restricted"]))
            lines.append(f"m = {ReportFormatter._m(result['m'])}")
        return "\n".join(lines)

    @staticmethod
    def experiment(rows: List[Dict[str, Any]]) -> str:
        """Aligned table: p, q, kappa, m^(d) sequence (or the error)"""
        header = ["p", "q", "kappa", "m^(d)"]
        body = []
        for row in rows:
            if row.get("error"):
                body.append([str(row["p"]), str(row["q"]), "-", f"error {row['error']['code']}: "
                                                                 f"{row['error']['message']}"])
            else:
                body.append([str(row["p"]), str(row["q"]), str(row["kappa"]),
                             ",".join(ReportFormatter._m(m) for m in row["m_trace"])])
        widths = [max(len(r[i]) for r in [header] + body) for i in range(len(header))]
        lines = []
        for r in [header] + body:
            lines.append("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())
        return "\n".join(lines)

    @staticmethod
    def error_text(error: Dict[str, Any]) -> str:
        return f"error: {error['message']}"

    @staticmethod
    def error_json(error: Dict[str, Any]) -> str:
        return ReportFormatter.to_json({"error": error})
