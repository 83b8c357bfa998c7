"""Assembly of the full analysis report.

The report is a plain dict with a stable key order so that JSON output
is deterministic byte for byte (modulo the version field):

    version, input_digest, validation, condition_I, irreducible,
    irrational_cycle, g_minimal, simple_O, purely_infinite_O,
    fullshift { F_simple, uniformly_distributed }, k_theory, ideals,
    warnings
"""

from __future__ import annotations

import hashlib

from . import __version__
from .errors import CapExceeded, GraphValidationError
from .fileformat import SystemDocument
from .ideals import enumerate_invariant_saturated, hasse_edges
from .ktheory import graph_k_groups
from .verdicts import (
    condition_I,
    crossed_product_simplicity,
    fullshift_core_simplicity,
    fullshift_uniform_distribution,
    graph_minimality,
    irrational_cycle,
    is_irreducible,
    pure_infiniteness,
)

__all__ = ["analyze_document", "input_digest"]


def input_digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def _not_applicable(reason: str) -> dict:
    return {"verdict": "Unknown", "certificate": None, "criterion": reason}


def analyze_document(
    doc: SystemDocument,
    source_text: str | None = None,
    ideal_cap: int | None = None,
) -> tuple[dict, bool]:
    """Build the full report; returns (report, ok).

    ok is False when graph validation failed, in which case only the
    validation section carries content.
    """
    report: dict = {"version": __version__}
    if source_text is not None:
        report["input_digest"] = input_digest(source_text)
    warnings: list[str] = []
    try:
        graph = doc.graph()
    except GraphValidationError as exc:
        report["validation"] = {"ok": False, **exc.witness()}
        report["warnings"] = warnings
        return report, False
    report["validation"] = {
        "ok": True,
        "vertices": list(graph.vertices),
        "alphabet": list(graph.alphabet),
        "edge_count": len(graph.edges),
    }

    angles = doc.angles
    report["condition_I"] = condition_I(graph).to_json()
    report["irreducible"] = is_irreducible(graph).to_json()
    report["irrational_cycle"] = irrational_cycle(graph, angles).to_json()
    report["g_minimal"] = graph_minimality(graph, angles).to_json()
    report["simple_O"] = crossed_product_simplicity(graph, angles).to_json()
    report["purely_infinite_O"] = pure_infiniteness(graph, angles).to_json()

    if graph.vertex_count == 1 and len(graph.alphabet) >= 2:
        ordered = [angles[s] for s in graph.alphabet]
        labels = list(graph.alphabet)
        report["fullshift"] = {
            "F_simple": fullshift_core_simplicity(ordered, labels).to_json(),
            "uniformly_distributed": fullshift_uniform_distribution(
                ordered, labels
            ).to_json(),
        }
    else:
        reason = (
            "full-shift analysis applies to single-vertex graphs with at "
            "least two symbols"
        )
        report["fullshift"] = {
            "F_simple": _not_applicable(reason),
            "uniformly_distributed": _not_applicable(reason),
        }

    report["k_theory"] = graph_k_groups(graph).to_json()

    try:
        kwargs = {} if ideal_cap is None else {"cap": ideal_cap}
        subsets = enumerate_invariant_saturated(graph, **kwargs)
        report["ideals"] = {
            "invariant_saturated": [s.names(graph) for s in subsets],
            "count": len(subsets),
            "hasse": [list(pair) for pair in hasse_edges(subsets)],
        }
    except CapExceeded as exc:
        report["ideals"] = None
        warnings.append(f"ideal lattice skipped: {exc}")

    report["warnings"] = warnings
    return report, True
