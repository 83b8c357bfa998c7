"""Exact verdicts about the rotation-decorated graph system.

Each decision procedure returns a VerdictReport: a three-valued verdict
(Yes / No / Unknown), a machine-checkable certificate whenever the
verdict is definite, and a criterion tag naming the mathematical fact
the verdict rests on.  Unknown verdicts name the hypothesis that could
not be established; the package never guesses past what the underlying
sufficient conditions cover.

Decisions implemented:

* condition (I): every vertex emits at least two distinct one-sided
  infinite label sequences.  Decided by a deterministic support walk
  per vertex; failing vertices get their unique eventually periodic
  label sequence as the certificate.
* irreducibility: the underlying digraph is strongly connected,
  equivalently no proper nonempty vertex subset is forward closed.
* irrational cycle: some closed path has an irrational total rotation
  angle.  Decided exactly by spanning-tree potentials per strongly
  connected component; all cycle angles are rational iff every edge
  defect (edge angle minus potential difference) is rational.
* minimality of the decorated system: dense orbits in the disjoint
  union of circle fibers.  Irreducible + irrational cycle gives Yes;
  a reducible graph or all-rational cycles give No with witnesses.
* simplicity / pure infiniteness of the associated algebra, through
  the sufficient criteria that condition (I) supports.
* full shifts: simplicity of the gauge-fixed core and uniform
  distribution of the angle sums, decided by pairwise differences.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm
from typing import Mapping, Sequence

from .angles import ExactAngle
from .errors import FewerThanTwoAngles
from .graph import Edge, LabeledGraph
from .subshift import forward_support

__all__ = [
    "VerdictReport",
    "condition_I",
    "is_irreducible",
    "irrational_cycle",
    "graph_minimality",
    "crossed_product_simplicity",
    "pure_infiniteness",
    "fullshift_core_simplicity",
    "fullshift_uniform_distribution",
    "check_angle_assignment",
]

YES = "Yes"
NO = "No"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class VerdictReport:
    verdict: str
    certificate: dict | None
    criterion: str
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self):
        assert self.verdict in (YES, NO, UNKNOWN)
        if self.verdict in (YES, NO):
            assert self.certificate is not None, "definite verdicts need a certificate"

    @property
    def is_yes(self) -> bool:
        return self.verdict == YES

    @property
    def is_no(self) -> bool:
        return self.verdict == NO

    def to_json(self) -> dict:
        out = {"verdict": self.verdict, "certificate": self.certificate, "criterion": self.criterion}
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def check_angle_assignment(graph: LabeledGraph, angles: Mapping[str, ExactAngle]) -> None:
    missing = [s for s in graph.alphabet if s not in angles]
    if missing:
        raise KeyError(f"angle assignment misses symbols {missing}")


# ---------------------------------------------------------------------------
# condition (I)


def condition_I(graph: LabeledGraph) -> VerdictReport:
    """Does every vertex emit at least two distinct infinite label words?

    Walk the support sets starting from a single vertex.  If at some
    depth two symbols are simultaneously readable, both extend to
    infinite words (the graph is essential), so the vertex branches.
    If exactly one symbol is readable forever the walk is eventually
    periodic in the finite lattice of supports, and the vertex emits a
    single infinite sequence: that sequence is the failure certificate.
    """
    criterion = "condition (I): two distinct infinite label words from every vertex"
    branching: dict[str, dict] = {}
    failures: dict[str, dict] = {}
    for start in range(graph.vertex_count):
        support = frozenset({start})
        trail: list[str] = []
        seen: dict[frozenset[int], int] = {support: 0}
        while True:
            available = [
                s for s in graph.alphabet if forward_support(graph, support, s)
            ]
            if len(available) >= 2:
                branching[graph.vertices[start]] = {
                    "depth": len(trail),
                    "symbols": available[:2],
                }
                break
            symbol = available[0]  # essential graphs always offer a continuation
            support = forward_support(graph, support, symbol)
            trail.append(symbol)
            if support in seen:
                cut = seen[support]
                failures[graph.vertices[start]] = {
                    "prefix": trail[:cut],
                    "period": trail[cut:],
                }
                break
            seen[support] = len(trail)
    if failures:
        return VerdictReport(NO, {"unique_word": failures}, criterion)
    return VerdictReport(YES, {"branching": branching}, criterion)


# ---------------------------------------------------------------------------
# irreducibility


def _closure(graph: LabeledGraph, start: int) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w, _s in graph.out_edges[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def _bfs_edge_path(
    graph: LabeledGraph, src: int, dst: int, allowed: set[int] | None = None
) -> list[Edge] | None:
    """Shortest edge path src -> dst, optionally confined to a vertex set."""
    if src == dst:
        return []
    prev: dict[int, tuple[int, Edge]] = {}
    queue = [src]
    seen = {src}
    while queue:
        nxt: list[int] = []
        for v in queue:
            for w, symbol in graph.out_edges[v]:
                if allowed is not None and w not in allowed:
                    continue
                if w in seen:
                    continue
                seen.add(w)
                prev[w] = (v, Edge(graph.vertices[v], graph.vertices[w], symbol))
                if w == dst:
                    path = []
                    x = dst
                    while x != src:
                        p, e = prev[x]
                        path.append(e)
                        x = p
                    path.reverse()
                    return path
                nxt.append(w)
        queue = nxt
    return None


def is_irreducible(graph: LabeledGraph) -> VerdictReport:
    """Strong connectivity of the underlying digraph.

    No-certificate: the forward closure of the first vertex that cannot
    reach everything; it is a proper nonempty forward-closed subset, so
    the fibers above it form a closed invariant region.  Yes-certificate:
    a single closed walk visiting every vertex.
    """
    criterion = "irreducibility: the transition digraph is strongly connected"
    n = graph.vertex_count
    for v in range(n):
        closure = _closure(graph, v)
        if len(closure) != n:
            return VerdictReport(
                NO,
                {"forward_closed": graph.vertex_names(closure)},
                criterion,
                notes=("every edge leaving the witness set lands back inside it",),
            )
    # build one closed walk covering all vertices
    walk: list[Edge] = []
    cur = 0
    for target in range(1, n):
        seg = _bfs_edge_path(graph, cur, target)
        assert seg is not None
        walk.extend(seg)
        cur = target
    seg = _bfs_edge_path(graph, cur, 0)
    assert seg is not None
    walk.extend(seg)
    if not walk:
        # single vertex: use any loop (essentiality provides one)
        j, symbol = graph.out_edges[0][0]
        walk = [Edge(graph.vertices[0], graph.vertices[j], symbol)]
    return VerdictReport(
        YES, {"covering_closed_walk": [list(e) for e in walk]}, criterion
    )


def strongly_connected_components(graph: LabeledGraph) -> list[int]:
    """Component id per vertex (Kosaraju, iterative)."""
    n = graph.vertex_count
    adj: list[list[int]] = [[] for _ in range(n)]
    radj: list[list[int]] = [[] for _ in range(n)]
    for i, outs in enumerate(graph.out_edges):
        for j, _s in outs:
            adj[i].append(j)
            radj[j].append(i)
    order: list[int] = []
    seen = [False] * n
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        stack: list[tuple[int, int]] = [(s, 0)]
        while stack:
            v, i = stack[-1]
            if i < len(adj[v]):
                stack[-1] = (v, i + 1)
                w = adj[v][i]
                if not seen[w]:
                    seen[w] = True
                    stack.append((w, 0))
            else:
                order.append(v)
                stack.pop()
    comp = [-1] * n
    c = 0
    for v in reversed(order):
        if comp[v] != -1:
            continue
        comp[v] = c
        frontier = [v]
        while frontier:
            x = frontier.pop()
            for w in radj[x]:
                if comp[w] == -1:
                    comp[w] = c
                    frontier.append(w)
        c += 1
    return comp


# ---------------------------------------------------------------------------
# irrational cycles


def _walk_angle(walk: Sequence[Edge], angles: Mapping[str, ExactAngle], zero: ExactAngle) -> ExactAngle:
    total = zero
    for e in walk:
        total = total + angles[e.symbol]
    return total


def irrational_cycle(graph: LabeledGraph, angles: Mapping[str, ExactAngle]) -> VerdictReport:
    """Is there a closed path whose total rotation angle is irrational?

    Within each strongly connected component fix a root and a spanning
    tree of potentials (exact angle of the tree path from the root).
    The defect of an edge is its angle minus the potential difference
    of its endpoints; the angle of any closed walk equals the sum of
    the defects of its edges, so irrational cycles exist iff some edge
    inside a component has an irrational defect.  In that case one of
    two explicit closed walks through that edge's endpoints must be
    irrational and is returned as the certificate.  Otherwise every
    cycle angle is rational with denominator dividing the reported one.
    """
    criterion = "irrational total rotation along some closed path"
    check_angle_assignment(graph, angles)
    context = next(iter(angles.values())).context if angles else None
    zero = ExactAngle.zero(context) if context is not None else ExactAngle.zero()
    comp = strongly_connected_components(graph)
    n = graph.vertex_count
    vi = graph.vertex_index

    potentials: dict[int, ExactAngle] = {}
    roots: list[int] = []
    denominator = 1

    for cid in sorted(set(comp)):
        members = [v for v in range(n) if comp[v] == cid]
        allowed = set(members)
        root = min(members)
        roots.append(root)
        # BFS arborescence and tree potentials
        pot: dict[int, ExactAngle] = {root: zero}
        parent_edge: dict[int, Edge] = {}
        queue = [root]
        while queue:
            frontier: list[int] = []
            for v in queue:
                for w, symbol in graph.out_edges[v]:
                    if w in allowed and w not in pot:
                        pot[w] = pot[v] + angles[symbol]
                        parent_edge[w] = Edge(
                            graph.vertices[v], graph.vertices[w], symbol
                        )
                        frontier.append(w)
            queue = frontier
        potentials.update(pot)

        def tree_path(v: int) -> list[Edge]:
            path: list[Edge] = []
            while v != root:
                e = parent_edge[v]
                path.append(e)
                v = vi[e.src]
            path.reverse()
            return path

        for e in graph.edges:
            u, w = vi[e.src], vi[e.dst]
            if u not in allowed or w not in allowed:
                continue
            defect = pot[u] + angles[e.symbol] - pot[w]
            if defect.is_rational():
                denominator = lcm(denominator, defect.rational_denominator())
                continue
            # the defect carries a generator: at least one of these two
            # closed walks at the root has an irrational angle
            back = _bfs_edge_path(graph, w, root, allowed)
            assert back is not None
            walk_a = tree_path(u) + [e] + back
            walk_b = tree_path(w) + back
            for walk in (walk_a, walk_b):
                if not walk:
                    continue
                total = _walk_angle(walk, angles, zero)
                if not total.is_rational():
                    return VerdictReport(
                        YES,
                        {
                            "cycle": [list(edge) for edge in walk],
                            "angle": str(total),
                            "base_vertex": graph.vertices[root],
                        },
                        criterion,
                    )
            raise AssertionError("one of the two closed walks must be irrational")

    return VerdictReport(
        NO,
        {
            "cycle_denominator": denominator,
            "potentials": {graph.vertices[v]: str(a) for v, a in potentials.items()},
            "roots": [graph.vertices[r] for r in roots],
        },
        criterion,
        notes=(
            "every closed path rotates by a rational angle whose denominator "
            "divides cycle_denominator",
        ),
    )


# ---------------------------------------------------------------------------
# minimality and the algebra verdicts


def graph_minimality(graph: LabeledGraph, angles: Mapping[str, ExactAngle]) -> VerdictReport:
    """Minimality of the decorated action on the union of circle fibers.

    Three exact cases:
    * not strongly connected: No; the fibers over a forward-closed
      proper subset form a closed invariant set.
    * strongly connected with an irrational cycle: Yes; running the
      cycle acts as an irrational rotation on its base fiber and strong
      connectivity spreads its dense orbit everywhere.
    * strongly connected, all cycle angles rational: No; each orbit
      meets each fiber in finitely many points (at most the cycle
      denominator per reachable coset).  This case is a derived
      strengthening of the sufficient Yes test and is flagged as such.
    """
    criterion = "minimality of the rotation action over the transition graph"
    irr = is_irreducible(graph)
    if irr.is_no:
        return VerdictReport(
            NO,
            dict(irr.certificate),
            criterion,
            notes=(
                "the circle fibers over the forward-closed subset form a "
                "proper closed invariant set",
            ),
        )
    cyc = irrational_cycle(graph, angles)
    if cyc.is_yes:
        return VerdictReport(YES, dict(cyc.certificate), criterion)
    certificate = dict(cyc.certificate)
    certificate["derived"] = True
    q = certificate["cycle_denominator"]
    return VerdictReport(
        NO,
        certificate,
        criterion,
        notes=(
            "derived case: with all cycle angles rational, any orbit meets "
            f"each fiber in at most {q} points per reachable coset, so no "
            "orbit is dense",
        ),
    )


def crossed_product_simplicity(
    graph: LabeledGraph, angles: Mapping[str, ExactAngle]
) -> VerdictReport:
    """Simplicity of the algebra of the decorated system.

    Under condition (I) simplicity is equivalent to minimality of the
    decorated action, given a faithful invariant probability measure on
    the fibers; Lebesgue measure on each circle is preserved by every
    rotation, so that hypothesis holds automatically here.  Without
    condition (I) the equivalence is unavailable and the verdict is
    Unknown.
    """
    criterion = "simplicity equals minimality under condition (I)"
    ci = condition_I(graph)
    if not ci.is_yes:
        return VerdictReport(
            UNKNOWN,
            None,
            criterion,
            notes=(
                "missing hypothesis: condition (I); the uniqueness argument "
                "behind the equivalence does not apply",
            ),
        )
    gm = graph_minimality(graph, angles)
    notes = (
        "condition (I) holds; Lebesgue measure on the circle fibers is a "
        "faithful invariant probability measure",
    )
    if gm.is_yes:
        return VerdictReport(YES, dict(gm.certificate), criterion, notes=notes)
    return VerdictReport(NO, dict(gm.certificate), criterion, notes=notes + tuple(gm.notes))


def pure_infiniteness(graph: LabeledGraph, angles: Mapping[str, ExactAngle]) -> VerdictReport:
    """Sufficient test for simple pure infiniteness.

    condition (I) + irreducibility + an irrational cycle force the
    algebra to be simple and purely infinite.  The test is one-sided:
    when any hypothesis fails the verdict is Unknown, not No.
    """
    criterion = (
        "pure infiniteness from condition (I), irreducibility and an irrational cycle"
    )
    ci = condition_I(graph)
    if not ci.is_yes:
        return VerdictReport(
            UNKNOWN, None, criterion, notes=("missing hypothesis: condition (I)",)
        )
    irr = is_irreducible(graph)
    if not irr.is_yes:
        return VerdictReport(
            UNKNOWN, None, criterion, notes=("missing hypothesis: irreducibility",)
        )
    cyc = irrational_cycle(graph, angles)
    if not cyc.is_yes:
        return VerdictReport(
            UNKNOWN,
            None,
            criterion,
            notes=(
                "missing hypothesis: an irrational cycle; the sufficient "
                "test is silent when every cycle angle is rational",
            ),
        )
    return VerdictReport(
        YES,
        {
            "condition_I": ci.certificate,
            "irreducible": True,
            "cycle": cyc.certificate,
        },
        criterion,
    )


# ---------------------------------------------------------------------------
# full shifts


def _pairwise_differences(angles: Sequence[ExactAngle], labels: Sequence[str]):
    n = len(angles)
    if n < 2:
        raise FewerThanTwoAngles(n)
    for i in range(n):
        for j in range(i + 1, n):
            yield i, j, labels[i], labels[j], angles[i] - angles[j]


def _fullshift_difference_verdict(
    angles: Sequence[ExactAngle], labels: Sequence[str] | None, criterion: str, notes_yes, notes_no
) -> VerdictReport:
    if labels is None:
        labels = [f"s{i + 1}" for i in range(len(angles))]
    denominator = 1
    for i, j, li, lj, diff in _pairwise_differences(angles, labels):
        if not diff.is_rational():
            return VerdictReport(
                YES,
                {"pair": [li, lj], "difference": str(diff)},
                criterion,
                notes=notes_yes,
            )
        denominator = lcm(denominator, diff.rational_denominator())
    return VerdictReport(
        NO,
        {"common_denominator": denominator},
        criterion,
        notes=notes_no(denominator),
    )


def fullshift_core_simplicity(
    angles: Sequence[ExactAngle], labels: Sequence[str] | None = None
) -> VerdictReport:
    """Simplicity of the gauge-fixed core of a decorated full shift.

    Decided by the pairwise angle differences: the core is simple iff
    some difference is irrational, which is also equivalent to uniform
    distribution of the level sums and to real rank zero.  The core
    always carries a unique tracial state.
    """
    criterion = "core simplicity: some pairwise angle difference is irrational"
    return _fullshift_difference_verdict(
        angles,
        labels,
        criterion,
        notes_yes=(
            "equivalently: the angle sums are uniformly distributed and the "
            "core has real rank zero; the core carries a unique trace",
        ),
        notes_no=lambda q: (
            f"all pairwise differences are rational with common denominator {q}; "
            "the core is not simple, not real rank zero, and the sums are not "
            "uniformly distributed; it still carries a unique trace",
        ),
    )


def fullshift_uniform_distribution(
    angles: Sequence[ExactAngle], labels: Sequence[str] | None = None
) -> VerdictReport:
    """Uniform distribution of the n-fold angle sums with multiplicity.

    Equivalent to core simplicity.  A No verdict reports the exponential
    sum level at which equidistribution fails outright: at that level
    the normalized sum has modulus one.
    """
    criterion = "uniform distribution of the level sums of the angles"
    return _fullshift_difference_verdict(
        angles,
        labels,
        criterion,
        notes_yes=(
            "the normalized exponential sums of every nonzero level tend to "
            "zero; equivalent to core simplicity and real rank zero",
        ),
        notes_no=lambda q: (
            f"at level {q} every angle multiple coincides mod 1, so the "
            "normalized exponential sum has modulus 1 at every word length",
        ),
    )
