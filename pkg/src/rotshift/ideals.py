"""Invariant ideals of the vertex algebra and the induced quotients.

The diagonal algebra spanned by the vertex projections has its ideals
indexed by vertex subsets W.  The subsets that matter are the

* invariant ones: every edge leaving W stays inside W (the ideal is
  carried into itself by every symbol action), and
* saturated ones: any vertex all of whose successors lie in W already
  belongs to W (nothing outside the ideal is silently annihilated into
  it).

Invariant saturated subsets form a finite lattice; each proper one
induces a quotient system on the surviving vertices whose alphabet is
the set of symbols still labeling an edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import CapExceeded, GraphValidationError, NotInvariantSaturated
from .graph import LabeledGraph, validate_graph

__all__ = [
    "IdealSubset",
    "classify_subset",
    "enumerate_invariant_saturated",
    "hasse_edges",
    "QuotientSystem",
    "quotient_system",
    "MAX_IDEAL_VERTICES",
]

MAX_IDEAL_VERTICES = 20


@dataclass(frozen=True)
class IdealSubset:
    vertices: frozenset[int]
    invariant: bool
    saturated: bool

    def names(self, graph: LabeledGraph) -> list[str]:
        return graph.vertex_names(self.vertices)


def _out_neighbors(graph: LabeledGraph) -> list[set[int]]:
    succ: list[set[int]] = [set() for _ in graph.vertices]
    for i, edges in enumerate(graph.out_edges):
        for j, _symbol in edges:
            succ[i].add(j)
    return succ


def classify_subset(graph: LabeledGraph, subset: Iterable[int]) -> IdealSubset:
    """Decide invariance and saturation of a vertex subset.

    The empty set and the full set are always both.  (Essentiality
    guarantees nobody has an empty successor set, which would otherwise
    make the empty set non-saturated.)
    """
    w = frozenset(subset)
    succ = _out_neighbors(graph)
    invariant = all(succ[i] <= w for i in w)
    saturated = all(i in w for i in range(graph.vertex_count) if succ[i] <= w)
    return IdealSubset(w, invariant, saturated)


def enumerate_invariant_saturated(
    graph: LabeledGraph, cap: int = MAX_IDEAL_VERTICES
) -> list[IdealSubset]:
    """All invariant saturated vertex subsets, smallest first.

    Sorted by size, then lexicographically on the sorted index tuples.
    Exhaustive over the 2^n subsets, hence the vertex cap.
    """
    n = graph.vertex_count
    if n > cap:
        raise CapExceeded("ideal enumeration vertex count", n, cap)
    succ = _out_neighbors(graph)
    found: list[IdealSubset] = []
    for size in range(n + 1):
        for combo in combinations(range(n), size):
            w = frozenset(combo)
            if all(succ[i] <= w for i in w) and all(
                i in w for i in range(n) if succ[i] <= w
            ):
                found.append(IdealSubset(w, True, True))
    return found


def hasse_edges(subsets: list[IdealSubset]) -> list[tuple[int, int]]:
    """Cover relations (i, j) meaning subsets[i] < subsets[j] with nothing between."""
    covers = []
    for i, a in enumerate(subsets):
        for j, b in enumerate(subsets):
            if not a.vertices < b.vertices:
                continue
            if any(a.vertices < c.vertices < b.vertices for c in subsets):
                continue
            covers.append((i, j))
    return covers


@dataclass(frozen=True)
class QuotientSystem:
    """The system induced on the complement of an invariant saturated subset."""

    graph: LabeledGraph
    surviving_alphabet: tuple[str, ...]
    removed: tuple[str, ...]
    warning: str | None


def quotient_system(graph: LabeledGraph, subset: Iterable[int]) -> QuotientSystem:
    """Restrict the graph to the vertices outside the subset.

    Only edges with both endpoints surviving are kept; the surviving
    alphabet collects the labels that still occur.  Requires the subset
    to be invariant, saturated and proper.  The result is revalidated;
    by invariance and saturation it always passes (every surviving
    vertex keeps an outgoing and an incoming edge), but a warning is
    carried instead of trusting that argument blindly.
    """
    w = frozenset(subset)
    check = classify_subset(graph, w)
    if not (check.invariant and check.saturated):
        raise NotInvariantSaturated(
            f"subset {sorted(w)} is not invariant+saturated "
            f"(invariant={check.invariant}, saturated={check.saturated})"
        )
    if len(w) == graph.vertex_count:
        raise NotInvariantSaturated("the full vertex set leaves an empty quotient")
    vi = graph.vertex_index
    survivors = [v for v in graph.vertices if vi[v] not in w]
    edges = [e for e in graph.edges if vi[e.src] not in w and vi[e.dst] not in w]
    used = []
    for s in graph.alphabet:
        if any(e.symbol == s for e in edges):
            used.append(s)
    removed = tuple(s for s in graph.alphabet if s not in used)
    warning = None
    try:
        q = validate_graph(survivors, edges, used)
    except GraphValidationError as exc:
        # fall back to an unvalidated container so the caller can inspect it
        warning = f"quotient fails validation: {exc}"
        q = LabeledGraph(tuple(survivors), tuple(used), tuple(edges))
    return QuotientSystem(
        graph=q, surviving_alphabet=tuple(used), removed=removed, warning=warning
    )
