"""One-shot structural analysis of a single graph with per-stage timing.

Stages that would exceed their exact-search limits are recorded as skipped
instead of failing the whole run.  A disagreement between the exact game
solver and the polynomial classifier is emitted as a defect record and never
silently reconciled.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field

from .games import (
    DEFAULT_BOARD_LIMIT,
    DEFAULT_RG_BOARD_LIMIT,
    outcome_rg_exact,
    outcome_srg_classifier,
    system_outcome,
    vertex_cover_system,
)
from .graphs import DEFAULT_ISO_LIMIT, Graph, classify_shape, require_connected
from .resolving import (
    DEFAULT_COVER_LIMIT,
    DEFAULT_DIM_LIMIT,
    is_resolving_set,
    is_strong_resolving_set,
    metric_dimension,
    min_vertex_cover,
    strong_resolving_graph,
)


@dataclass
class AnalysisReport:
    source: str
    n: int
    m: int
    diameter: int
    sr_core_order: int
    sr_core_size: int
    sr_shape: str
    sdim: int | None = None
    sdim_witness: tuple[int, ...] | None = None
    dim: int | None = None
    dim_witness: tuple[int, ...] | None = None
    outcome_exact: str | None = None
    outcome_classifier: str | None = None
    outcome_resolving: str | None = None
    skipped: dict[str, str] = field(default_factory=dict)
    defects: list[str] = field(default_factory=list)
    millis: dict[str, float] = field(default_factory=dict)

    def to_json_obj(self) -> dict:
        return asdict(self)


def analyze(g: Graph, source: str = "<memory>",
            exact_limit: int = DEFAULT_BOARD_LIMIT,
            rg_limit: int = DEFAULT_RG_BOARD_LIMIT,
            dim_limit: int = DEFAULT_DIM_LIMIT,
            cover_limit: int = DEFAULT_COVER_LIMIT,
            iso_limit: int = DEFAULT_ISO_LIMIT,
            include_resolving_game: bool = False) -> AnalysisReport:
    dm = require_connected(g, "analyze")

    stages: dict[str, float] = {}

    def timed(name: str, fn):
        t0 = time.perf_counter()
        value = fn()
        stages[name] = (time.perf_counter() - t0) * 1000.0
        return value

    sr = timed("sr-graph", lambda: strong_resolving_graph(g))
    shape = timed("sr-shape", lambda: classify_shape(sr.core, iso_limit))
    shape_text = str(shape) if shape.exact else f"{shape} (shape-level only)"
    report = AnalysisReport(
        source=source, n=g.n, m=g.m, diameter=dm.diameter,
        sr_core_order=sr.core.n, sr_core_size=sr.core.m, sr_shape=shape_text,
        millis=stages,
    )

    if sr.core.n <= cover_limit:
        size, cover = timed("sdim", lambda: min_vertex_cover(sr.core, cover_limit))
        witness = tuple(sorted(sr.to_parent[v] for v in cover))
        if not is_strong_resolving_set(g, witness):
            report.defects.append(
                f"sdim witness {witness} failed strong-resolving re-validation")
        report.sdim = size
        report.sdim_witness = witness
    else:
        report.skipped["sdim"] = f"limit: core order {sr.core.n} > {cover_limit}"

    if g.n <= dim_limit:
        size, witness_set = timed("dim", lambda: metric_dimension(g, dim_limit))
        witness = tuple(sorted(witness_set))
        if not is_resolving_set(g, witness):
            report.defects.append(
                f"dim witness {witness} failed resolving re-validation")
        report.dim = size
        report.dim_witness = witness
    else:
        report.skipped["dim"] = f"limit: order {g.n} > {dim_limit}"

    report.outcome_classifier = str(timed("outcome-classifier",
                                          lambda: outcome_srg_classifier(sr)))
    if sr.core.n <= exact_limit:
        report.outcome_exact = str(timed(
            "outcome-exact",
            lambda: system_outcome(vertex_cover_system(sr.core), exact_limit)))
        if report.outcome_exact != report.outcome_classifier:
            report.defects.append(
                f"classifier {report.outcome_classifier} disagrees with exact "
                f"solver {report.outcome_exact}")
    else:
        report.skipped["outcome-exact"] = f"limit: core order {sr.core.n} > {exact_limit}"

    if include_resolving_game:
        if g.n <= rg_limit:
            report.outcome_resolving = str(timed(
                "outcome-resolving", lambda: outcome_rg_exact(g, rg_limit)))
        else:
            report.skipped["outcome-resolving"] = f"limit: order {g.n} > {rg_limit}"

    return report


def render_report(r: AnalysisReport) -> str:
    lines = [
        f"graph       {r.source}",
        f"order/size  n={r.n} m={r.m} diameter={r.diameter}",
        f"sr graph    order={r.sr_core_order} size={r.sr_core_size} shape={r.sr_shape}",
    ]
    if r.sdim is not None:
        lines.append(f"sdim        {r.sdim}  witness={list(r.sdim_witness)}")
    if r.dim is not None:
        lines.append(f"dim         {r.dim}  witness={list(r.dim_witness)}")
    outcome = r.outcome_exact if r.outcome_exact is not None else "-"
    lines.append(f"outcome     exact={outcome} classifier={r.outcome_classifier}")
    if r.outcome_resolving is not None:
        lines.append(f"resolving   outcome={r.outcome_resolving}")
    for stage, reason in sorted(r.skipped.items()):
        lines.append(f"skipped     {stage}: {reason}")
    for defect in r.defects:
        lines.append(f"DEFECT      {defect}")
    total = sum(r.millis.values())
    lines.append(f"timing      total={total:.1f}ms "
                 + " ".join(f"{k}={v:.1f}" for k, v in r.millis.items()))
    return "\n".join(lines)
