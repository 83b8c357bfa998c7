"""The sofic language presented by a labeled graph.

A word is admissible exactly when some path in the graph reads it.
Everything here is computed through *support walks*: starting from a
set of vertices, each symbol maps the set to the endpoints of the
correspondingly labeled edges leaving it.  A word is admissible iff the
walk from the full vertex set stays nonempty, which agrees with the
independent criterion "the product of the symbol matrices is nonzero"
(see oracles.matrix_product_admissible for that second route).

The same walk, started once per word length and deduplicated, yields a
finite leveled presentation of the language (build_level_graph): level
l holds the distinct supports of length-l words, and the labeled
transitions between consecutive levels record how supports evolve.

Rotation decorations act on the circle fiber over each vertex by
automorphisms, so they can never kill a path: the decorated system has
the same admissible words as the base graph.  decorated_admissible_words
recomputes the language through the decorated machinery (tracking the
accumulated angle per vertex) so that the equality can be checked
rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .angles import EMPTY_CONTEXT, ExactAngle
from .errors import CapExceeded
from .graph import LabeledGraph

__all__ = [
    "forward_support",
    "is_admissible",
    "admissible_words",
    "LevelGraph",
    "build_level_graph",
    "decorated_admissible_words",
    "decorated_subshift_equals_base",
    "MAX_WORD_LENGTH",
    "MAX_LEVELS",
]

MAX_WORD_LENGTH = 12
MAX_LEVELS = 16
SUBSET_GUARD = 2**20


def forward_support(graph: LabeledGraph, support: Iterable[int], symbol: str) -> frozenset[int]:
    """Endpoints of symbol-labeled edges leaving the given vertex set.

    Monotone in the support and distributes over unions; the empty set
    is absorbing.
    """
    succ = graph.successors
    out: set[int] = set()
    for i in support:
        out.update(succ.get((i, symbol), ()))
    return frozenset(out)


def full_support(graph: LabeledGraph) -> frozenset[int]:
    return frozenset(range(graph.vertex_count))


def is_admissible(graph: LabeledGraph, word: Sequence[str]) -> bool:
    """Support walk from the full vertex set; nonempty end means a path reads the word."""
    support = full_support(graph)
    for symbol in word:
        if symbol not in graph.symbol_index:
            raise KeyError(f"symbol {symbol!r} not in alphabet {graph.alphabet}")
        support = forward_support(graph, support, symbol)
        if not support:
            return False
    return True


def admissible_words(
    graph: LabeledGraph, length: int, cap: int = MAX_WORD_LENGTH
) -> list[tuple[str, ...]]:
    """All admissible words of exactly the given length, lexicographically
    sorted in the declared alphabet order.  length 0 yields the empty word."""
    if length > cap:
        raise CapExceeded("word length", length, cap)
    if length < 0:
        raise ValueError("negative word length")
    words: list[tuple[str, ...]] = []

    def extend(prefix: tuple[str, ...], support: frozenset[int]):
        if len(prefix) == length:
            words.append(prefix)
            return
        for symbol in graph.alphabet:
            img = forward_support(graph, support, symbol)
            if img:
                extend(prefix + (symbol,), img)

    extend((), full_support(graph))
    return words


@dataclass(frozen=True)
class LevelGraph:
    """Leveled presentation of the language by word supports.

    levels[l] lists the distinct supports of admissible length-l words
    (level 0 is the single full support).  transitions[l] maps each
    symbol to a 0/1 matrix of shape (len(levels[l]), len(levels[l+1]))
    recording which support maps to which under that symbol.  Every
    level vertex has at least one outgoing transition because the
    underlying graph is essential.
    """

    graph: LabeledGraph
    levels: tuple[tuple[frozenset[int], ...], ...]
    transitions: tuple[dict[str, tuple[tuple[int, ...], ...]], ...]

    @property
    def level_sizes(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.levels)

    def level_names(self, l: int) -> list[list[str]]:
        return [self.graph.vertex_names(s) for s in self.levels[l]]


def build_level_graph(graph: LabeledGraph, depth: int, cap: int = MAX_LEVELS) -> LevelGraph:
    if depth > cap:
        raise CapExceeded("level depth", depth, cap)
    if depth < 0:
        raise ValueError("negative depth")
    levels: list[tuple[frozenset[int], ...]] = [(full_support(graph),)]
    transitions: list[dict[str, tuple[tuple[int, ...], ...]]] = []
    for _ in range(depth):
        current = levels[-1]
        images: dict[frozenset[int], int] = {}
        arrows: dict[str, dict[int, list[int]]] = {s: {} for s in graph.alphabet}
        ordered: list[frozenset[int]] = []
        for idx, support in enumerate(current):
            for symbol in graph.alphabet:
                img = forward_support(graph, support, symbol)
                if not img:
                    continue
                if img not in images:
                    if len(ordered) >= SUBSET_GUARD:
                        raise CapExceeded("distinct supports per level", len(ordered) + 1, SUBSET_GUARD)
                    images[img] = len(ordered)
                    ordered.append(img)
                arrows[symbol].setdefault(idx, []).append(images[img])
        matrices: dict[str, tuple[tuple[int, ...], ...]] = {}
        for symbol in graph.alphabet:
            rows = []
            for idx in range(len(current)):
                row = [0] * len(ordered)
                for j in arrows[symbol].get(idx, ()):
                    row[j] = 1
                rows.append(tuple(row))
            matrices[symbol] = tuple(rows)
        levels.append(tuple(ordered))
        transitions.append(matrices)
    return LevelGraph(graph=graph, levels=tuple(levels), transitions=tuple(transitions))


def decorated_forward(
    graph: LabeledGraph,
    state: Mapping[int, ExactAngle],
    symbol: str,
    angles: Mapping[str, ExactAngle],
) -> dict[int, ExactAngle]:
    """One decorated step: push each fiber through the symbol's edges,
    rotating the carried function by the symbol's angle.

    Left-resolving makes the result well-defined: a vertex has at most
    one incoming edge with this label, so no two source fibers collide.
    """
    theta = angles[symbol]
    out: dict[int, ExactAngle] = {}
    succ = graph.successors
    for i, acc in state.items():
        for j in succ.get((i, symbol), ()):
            assert j not in out, "left-resolving violated"
            out[j] = acc + theta
    return out


def decorated_admissible_words(
    graph: LabeledGraph,
    angles: Mapping[str, ExactAngle],
    length: int,
    cap: int = MAX_WORD_LENGTH,
) -> list[tuple[str, ...]]:
    """Admissible words of the rotation-decorated system.

    The decorated system acts on circle-valued functions over the
    vertices; a word survives iff the decorated walk keeps at least one
    fiber alive.  Rotations are invertible so this is provably the same
    language as the base graph's; computing it anyway is the point.
    """
    if length > cap:
        raise CapExceeded("word length", length, cap)
    missing = [s for s in graph.alphabet if s not in angles]
    if missing:
        raise KeyError(f"no angle assigned to symbols {missing}")
    context = next(iter(angles.values())).context if angles else EMPTY_CONTEXT
    zero = ExactAngle.zero(context)
    start = {i: zero for i in range(graph.vertex_count)}
    words: list[tuple[str, ...]] = []

    def extend(prefix: tuple[str, ...], state: dict[int, ExactAngle]):
        if len(prefix) == length:
            words.append(prefix)
            return
        for symbol in graph.alphabet:
            nxt = decorated_forward(graph, state, symbol, angles)
            if nxt:
                extend(prefix + (symbol,), nxt)

    extend((), start)
    return words


def decorated_subshift_equals_base(
    graph: LabeledGraph,
    angles: Mapping[str, ExactAngle],
    max_length: int,
    decorated_graph: LabeledGraph | None = None,
) -> tuple[bool, tuple[str, ...] | None]:
    """Compare the decorated language against the base language.

    Returns (True, None) when they agree for every word length up to
    max_length, else (False, first counterexample word) with words
    ordered by length then lexicographically.  decorated_graph lets a
    test harness run the decorated walk on a tampered graph to confirm
    the comparison actually bites.
    """
    other = decorated_graph if decorated_graph is not None else graph
    for length in range(max_length + 1):
        base = admissible_words(graph, length)
        deco = decorated_admissible_words(other, angles, length)
        if base != deco:
            diff = set(base).symmetric_difference(deco)
            witness = min(diff, key=graph.word_sort_key)
            return False, witness
        # sorted order must agree as well; admissible enumeration is
        # already lexicographic for both routes
    return True, None
