"""Shared builders for the test suite.

Everything here is deliberately written against the public constructors
only.  The brute-force helpers (word search, simple cycle enumeration)
reimplement their questions from scratch so they can serve as oracles
for the package's cleverer routines.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from rotshift.angles import EMPTY_CONTEXT, ExactAngle, GeneratorContext
from rotshift.errors import GraphValidationError
from rotshift.graph import Edge, LabeledGraph, full_shift_graph, validate_graph

GCTX = GeneratorContext(("g",))


def rat(p, q=1, ctx=GCTX):
    return ExactAngle.make(ctx, Fraction(p, q))


def gen(c=1, p=0, q=1, ctx=GCTX):
    """Angle p/q + c*g."""
    return ExactAngle.make(ctx, Fraction(p, q), {"g": Fraction(c)})


def build(vertices, edges, alphabet=None) -> LabeledGraph:
    if alphabet is None:
        alphabet = tuple(dict.fromkeys(e[2] for e in edges))
    return validate_graph(tuple(vertices), tuple(edges), tuple(alphabet))


def goldenmean():
    """Golden mean shift on two vertices; loop a carries the generator."""
    graph = build(
        ("v1", "v2"),
        (("v1", "v1", "a"), ("v1", "v2", "b"), ("v2", "v1", "c")),
        ("a", "b", "c"),
    )
    angles = {"a": gen(1), "b": rat(0), "c": rat(0)}
    return graph, angles


def reducible3():
    """v1 feeds v2 feeds v3, loops at both ends, no way back."""
    graph = build(
        ("v1", "v2", "v3"),
        (
            ("v1", "v1", "a"),
            ("v1", "v2", "b"),
            ("v2", "v3", "c"),
            ("v3", "v3", "d"),
        ),
        ("a", "b", "c", "d"),
    )
    angles = {"a": rat(0), "b": rat(0), "c": rat(0), "d": gen(1)}
    return graph, angles


def fullshift(angle_list, ctx=GCTX):
    """Full shift on len(angle_list) symbols s1..sn with the given angles."""
    n = len(angle_list)
    graph = full_shift_graph(n)
    angles = {f"s{i+1}": a for i, a in enumerate(angle_list)}
    return graph, angles


def two_cycle(angle_ab, angle_ba):
    """Two vertices joined in a single directed 2-cycle."""
    graph = build(
        ("v1", "v2"),
        (("v1", "v2", "a"), ("v2", "v1", "b")),
        ("a", "b"),
    )
    return graph, {"a": angle_ab, "b": angle_ba}


# ---------------------------------------------------------------------------
# exhaustive catalogs and random generators


def enumerate_left_resolving(n_vertices: int, n_symbols: int):
    """Yield every valid graph on exactly these vertices and symbols.

    Left-resolving means each (target, symbol) pair admits at most one
    source, so the whole class is swept by choosing, for every such
    pair, either "no edge" or a source vertex.  validate_graph then
    filters to essential graphs using the full alphabet.
    """
    vertices = tuple(f"v{i+1}" for i in range(n_vertices))
    symbols = tuple("abcde"[:n_symbols])
    pairs = list(itertools.product(range(n_vertices), range(n_symbols)))
    for assignment in itertools.product(range(n_vertices + 1), repeat=len(pairs)):
        edges = []
        for (target, sym), choice in zip(pairs, assignment):
            if choice:
                edges.append((vertices[choice - 1], vertices[target], symbols[sym]))
        try:
            yield validate_graph(vertices, tuple(edges), symbols)
        except GraphValidationError:
            continue


def random_graph(rng: random.Random, max_vertices=6, max_symbols=3) -> LabeledGraph:
    """A random valid graph, by rejection sampling over source choices."""
    for _ in range(2000):
        n = rng.randint(1, max_vertices)
        k = rng.randint(1, max_symbols)
        vertices = tuple(f"v{i+1}" for i in range(n))
        symbols = tuple("abcde"[:k])
        edges = []
        for target in range(n):
            for sym in range(k):
                choice = rng.randint(0, n)
                if choice:
                    edges.append((vertices[choice - 1], vertices[target], symbols[sym]))
        try:
            return validate_graph(vertices, tuple(edges), symbols)
        except GraphValidationError:
            continue
    raise RuntimeError("rejection sampling failed to find a valid graph")


def random_angles(rng: random.Random, graph: LabeledGraph, ctx=GCTX):
    """Random exact angle per symbol: small rational plus optional g term."""
    out = {}
    for s in graph.alphabet:
        p = rng.randint(0, 5)
        q = rng.randint(1, 6)
        c = rng.choice([-2, -1, 0, 0, 1, 2])
        out[s] = ExactAngle.make(ctx, Fraction(p, q), {"g": Fraction(c)})
    return out


# ---------------------------------------------------------------------------
# brute-force reference computations (kept independent of the package)


def brute_count_words(graph: LabeledGraph, start_name: str, length: int, stop_at=2) -> int:
    """How many distinct label words of the given length leave a vertex.

    Depth-first over label words, tracking the set of endpoints of all
    paths realizing the current prefix by scanning the raw edge list.
    Stops as soon as stop_at words are complete.
    """
    by_source: dict[tuple[str, str], list[str]] = {}
    for src, dst, sym in ((e.src, e.dst, e.symbol) for e in graph.edges):
        by_source.setdefault((src, sym), []).append(dst)

    found = 0

    def walk(states: frozenset[str], depth: int) -> None:
        nonlocal found
        if found >= stop_at:
            return
        if depth == length:
            found += 1
            return
        for sym in graph.alphabet:
            nxt = frozenset(
                d for s in states for d in by_source.get((s, sym), ())
            )
            if nxt:
                walk(nxt, depth + 1)

    walk(frozenset({start_name}), 0)
    return found


def brute_admissible(graph: LabeledGraph, word) -> bool:
    """Word admissibility by scanning raw edges, no supports, no matrices."""
    states = set(graph.vertices)
    for sym in word:
        states = {e.dst for e in graph.edges if e.src in states and e.symbol == sym}
        if not states:
            return False
    return True


def simple_cycles(graph: LabeledGraph):
    """Every vertex-simple directed cycle, as a list of Edge tuples.

    Each cycle is produced exactly once, rooted at its smallest vertex
    index.  Parallel edges with different labels give distinct cycles,
    which matters because the decoration depends on labels.
    """
    index = {v: i for i, v in enumerate(graph.vertices)}
    out_by_vertex: dict[int, list[Edge]] = {i: [] for i in range(len(graph.vertices))}
    for e in graph.edges:
        out_by_vertex[index[e.src]].append(e)

    cycles = []

    def extend(root: int, current: int, path: list[Edge], visited: set[int]):
        for e in out_by_vertex[current]:
            t = index[e.dst]
            if t == root:
                cycles.append(path + [e])
            elif t > root and t not in visited:
                extend(root, t, path + [e], visited | {t})

    for root in range(len(graph.vertices)):
        extend(root, root, [], {root})
    return cycles


def cycle_angle(cycle, angles):
    total = None
    for e in cycle:
        total = angles[e.symbol] if total is None else total + angles[e.symbol]
    return total
