"""Per-graph centralization report and its json / csv / markdown renderings."""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field

from . import indices as ix
from .graph import Graph, degrees, graph_hash, is_connected

REPORT_SCHEMA = "vntheil.report/1"
DEFAULT_P_GRID = (0.5, 2.0, 3.0)
LN2 = math.log(2.0)


@dataclass(frozen=True)
class ReportConfig:
    k_grid: tuple[float, ...] = ix.DEFAULT_K_GRID
    p_grid: tuple[float, ...] = DEFAULT_P_GRID
    k_max: float = ix.DEFAULT_K_MAX


@dataclass
class CentralizationReport:
    name: str
    hash: str
    n: int
    m: int
    connected: bool
    degree_theil: dict[float, float]
    t_q: float
    generalized_theil: dict[float, float]
    c_d: float
    c_b: float
    jain: float
    neg_log_jain: float
    verdict: ix.CaseVerdict | None = None
    units: str = field(default="nats")

    def rows(self, bits: bool = False) -> list[tuple[str, object]]:
        """Flat ``(field, value)`` pairs shared by every output format.

        ``bits`` rescales the information-valued fields by ``1/ln 2``.
        """
        s = 1.0 / LN2 if bits else 1.0
        out: list[tuple[str, object]] = [
            ("graph", self.name),
            ("hash", self.hash),
            ("n", self.n),
            ("m", self.m),
            ("connected", self.connected),
            ("units", "bits" if bits else self.units),
        ]
        out += [(f"T_d[k={_num(k)}]", v * s) for k, v in self.degree_theil.items()]
        out.append(("T_Q", self.t_q * s))
        out += [(f"T_Q[p={_num(p)}]", v * s) for p, v in self.generalized_theil.items()]
        out += [("C_D", self.c_d), ("C_B", self.c_b), ("jain", self.jain), ("neg_log_jain", self.neg_log_jain * s)]
        v = self.verdict
        if v is not None:
            crossing = v.crossing_k.value if isinstance(v.crossing_k, ix.Crossing) else v.crossing_k
            out += [
                ("case", v.case),
                ("threshold", v.threshold * s),
                ("max_degree_multiplicity", v.max_degree_multiplicity),
                ("sufficient_condition", v.sufficient_condition_holds),
                ("crossing_k", crossing),
            ]
        return out


def build_report(g: Graph, config: ReportConfig = ReportConfig(), name: str = "") -> CentralizationReport:
    d = degrees(g)
    connected = is_connected(g)
    jain = ix.jain_index(d)
    return CentralizationReport(
        name=name or "graph",
        hash=graph_hash(g),
        n=g.n,
        m=g.m,
        connected=connected,
        degree_theil={float(k): ix.degree_theil(g, k) for k in config.k_grid},
        t_q=ix.von_neumann_theil(g),
        generalized_theil={float(p): ix.generalized_theil(g, p) for p in config.p_grid},
        c_d=ix.freeman_degree_centralization(g),
        c_b=ix.freeman_betweenness_centralization(g),
        jain=jain,
        neg_log_jain=-math.log(jain),
        verdict=ix.classify_case(g, config.k_max) if connected else None,
    )


# --- formatting ----------------------------------------------------------------

def _num(x) -> str:
    return format(float(x), "g")


def fmt_value(v) -> str:
    """12 significant digits for floats; lowercase booleans; empty for None."""
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return format(v, ".12g")
    return str(v)


def json_value(v):
    if isinstance(v, float) and not isinstance(v, bool):
        return float(format(v, ".12g"))
    return v


def render_rows_json(rows, schema: str) -> str:
    obj = {"schema": schema}
    obj.update((k, json_value(v)) for k, v in rows)
    return json.dumps(obj, indent=2) + "\n"


def render_rows_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["field", "value"])
    for k, v in rows:
        w.writerow([k, fmt_value(v)])
    return buf.getvalue()


def render_rows_md(rows) -> str:
    lines = ["| field | value |", "|---|---|"]
    lines += [f"| {k} | {fmt_value(v)} |" for k, v in rows]
    return "\n".join(lines) + "\n"


def render_table(header: list[str], records: list[list], fmt: str) -> str:
    """Multi-row table for orderings and perturbation studies."""
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        for r in records:
            w.writerow([fmt_value(v) for v in r])
        return buf.getvalue()
    if fmt == "md":
        lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
        lines += ["| " + " | ".join(fmt_value(v) for v in r) + " |" for r in records]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown table format {fmt!r}")


def render_report(report: CentralizationReport, fmt: str = "json", bits: bool = False) -> str:
    rows = report.rows(bits=bits)
    if fmt == "json":
        return render_rows_json(rows, REPORT_SCHEMA)
    if fmt == "csv":
        return render_rows_csv(rows)
    if fmt == "md":
        return render_rows_md(rows)
    raise ValueError(f"unknown output format {fmt!r}")
