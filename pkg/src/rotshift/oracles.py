"""Independent oracles backing the exact decision procedures.

Every exact verdict elsewhere in the package has a second, deliberately
separate route here: floating-point orbit expansion for minimality,
exponential sums for uniform distribution, raw matrix products for
admissibility, determinant-certified recomputation for the Smith normal
form.  None of these share code with the implementations they check;
keeping the two routes independent is what gives the cross-validation
its teeth.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from itertools import combinations
from math import floor, gcd
from typing import Mapping, Sequence

from .errors import StepCapExceeded
from .graph import LabeledGraph
from .intlinalg import IntMatrix, SmithDecomposition

__all__ = [
    "OrbitSample",
    "orbit_density",
    "weyl_sums",
    "matrix_product_admissible",
    "snf_certify",
    "integer_determinant",
    "invariant_factors_via_minors",
    "MAX_ORBIT_STEPS",
]

MAX_ORBIT_STEPS = 1_000_000


# ---------------------------------------------------------------------------
# orbit expansion


@dataclass(frozen=True)
class OrbitSample:
    """Result of a breadth-first orbit expansion over the circle fibers.

    points maps each vertex to the circle points visited in its fiber
    (one representative per dedup cell of width epsilon/4).  gap maps
    each vertex to the largest distance from an epsilon-grid point to
    the nearest visited point (0.5, the circle diameter, for an empty
    fiber).  dense is True when every fiber's gap is below epsilon.
    """

    epsilon: float
    steps_used: int
    points: dict[str, tuple[float, ...]]
    gap: dict[str, float]
    dense: bool


def _circle_distance(x: float, y: float) -> float:
    d = abs(x - y) % 1.0
    return min(d, 1.0 - d)


def orbit_density(
    graph: LabeledGraph,
    theta: Mapping[str, float],
    start_vertex: str,
    start_point: float,
    steps: int,
    epsilon: float,
) -> OrbitSample:
    """Expand the orbit of one point under all edge rotations.

    States are (vertex, circle point); each edge out of the current
    vertex adds its angle to the point.  Cells of width epsilon/4 keep
    one representative per fiber, bounding memory at about 4/epsilon
    points per vertex.  Expansion stops when the queue drains or after
    the requested number of dequeued states.
    """
    if steps > MAX_ORBIT_STEPS:
        raise StepCapExceeded("orbit steps", steps, MAX_ORBIT_STEPS)
    if not 0 < epsilon < 1:
        raise ValueError("epsilon must lie in (0, 1)")
    for s in graph.alphabet:
        if s not in theta:
            raise KeyError(f"no numeric angle for symbol {s!r}")
    cell = epsilon / 4.0
    ncells = int(floor(1.0 / cell)) + 1
    vi = graph.vertex_index
    start = vi[start_vertex]
    seen: list[dict[int, float]] = [dict() for _ in graph.vertices]

    def cell_of(p: float) -> int:
        return min(int(p / cell), ncells - 1)

    p0 = start_point % 1.0
    seen[start][cell_of(p0)] = p0
    queue: list[tuple[int, float]] = [(start, p0)]
    head = 0
    used = 0
    while head < len(queue) and used < steps:
        v, p = queue[head]
        head += 1
        used += 1
        for w, symbol in graph.out_edges[v]:
            q = (p + theta[symbol]) % 1.0
            c = cell_of(q)
            if c not in seen[w]:
                seen[w][c] = q
                queue.append((w, q))

    points = {
        graph.vertices[i]: tuple(sorted(seen[i].values())) for i in range(len(seen))
    }
    gap: dict[str, float] = {}
    grid_count = int(floor(1.0 / epsilon)) + 1
    for name, pts in points.items():
        if not pts:
            gap[name] = 0.5
            continue
        worst = 0.0
        for k in range(grid_count):
            g = k * epsilon
            best = min(_circle_distance(g, p) for p in pts)
            worst = max(worst, best)
        gap[name] = worst
    dense = all(g < epsilon for g in gap.values())
    return OrbitSample(
        epsilon=epsilon, steps_used=used, points=points, gap=gap, dense=dense
    )


# ---------------------------------------------------------------------------
# exponential sums


def weyl_sums(theta: Sequence[float], n: int, lmax: int) -> list[tuple[int, float]]:
    """Normalized exponential sums over all words of length n.

    For each level l = 1..lmax returns |(1/N^n) * sum over words of
    e^{2 pi i l (sum of word angles)}|.  The sum over words factors into
    the n-th power of the single-letter sum, which is what makes the
    exact evaluation cheap:  value(l) = |sum_k e^{2 pi i l theta_k} / N| ** n.
    """
    if n < 0 or lmax < 1:
        raise ValueError("need n >= 0 and lmax >= 1")
    big_n = len(theta)
    if big_n == 0:
        raise ValueError("empty angle list")
    out = []
    for l in range(1, lmax + 1):
        s = sum(cmath.exp(2j * cmath.pi * l * t) for t in theta)
        out.append((l, abs(s / big_n) ** n))
    return out


# ---------------------------------------------------------------------------
# admissibility through matrix products


def matrix_product_admissible(graph: LabeledGraph, word: Sequence[str]) -> bool:
    """A word is admissible iff the product of its symbol matrices is nonzero.

    Rebuilds the 0/1 matrices from the edge list on the spot; shares no
    code with the support-walk decision route.
    """
    n = graph.vertex_count
    vi = graph.vertex_index
    mats: dict[str, list[list[int]]] = {s: [[0] * n for _ in range(n)] for s in graph.alphabet}
    for e in graph.edges:
        mats[e.symbol][vi[e.src]][vi[e.dst]] = 1
    prod = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for s in word:
        m = mats[s]
        prod = [
            [sum(prod[i][k] * m[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)
        ]
        if all(x == 0 for row in prod for x in row):
            return False
    return any(x != 0 for row in prod for x in row)


# ---------------------------------------------------------------------------
# exact linear-algebra certification


def integer_determinant(m: IntMatrix) -> int:
    """Exact determinant by fraction-free Gaussian elimination (Bareiss)."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = [list(r) for r in m.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def snf_certify(m: IntMatrix, dec: SmithDecomposition) -> bool:
    """Check a claimed Smith decomposition from scratch.

    Verifies U*m*V == D exactly, D diagonal with nonnegative entries in
    a divisibility chain, and |det U| == |det V| == 1 via the
    independent fraction-free determinant.
    """
    u, d, v = dec.u, dec.d, dec.v
    if u.rows != m.rows or u.cols != m.rows:
        return False
    if v.rows != m.cols or v.cols != m.cols:
        return False
    if d.rows != m.rows or d.cols != m.cols:
        return False
    if u.mul(m).mul(v).entries != d.entries:
        return False
    diag = []
    for i in range(d.rows):
        for j in range(d.cols):
            if i != j and d[i, j] != 0:
                return False
        if i < d.cols:
            diag.append(d[i, i])
    if any(x < 0 for x in diag):
        return False
    nonzero = [x for x in diag if x != 0]
    if len(nonzero) != sum(1 for x in diag[: len(nonzero)] if x != 0):
        # zeros must come after all nonzero entries
        return False
    for x, y in zip(nonzero, nonzero[1:]):
        if y % x != 0:
            return False
    if abs(integer_determinant(u)) != 1:
        return False
    if abs(integer_determinant(v)) != 1:
        return False
    return True


def invariant_factors_via_minors(m: IntMatrix) -> list[int]:
    """Invariant factors through determinantal divisors.

    d_k = gcd of all k x k minors; the k-th invariant factor is
    d_k / d_{k-1}.  Exponential in the matrix size, which is fine for
    the cross-validation sizes this oracle is used at.  Returns the
    nonzero invariant factors in divisibility order.
    """
    rows, cols = m.rows, m.cols
    factors = []
    prev = 1
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for rsel in combinations(range(rows), k):
            for csel in combinations(range(cols), k):
                sub = IntMatrix.from_rows(
                    [[m[i, j] for j in csel] for i in rsel]
                )
                g = gcd(g, integer_determinant(sub))
                # gcd(0, x) = |x|; keep scanning until nonzero stabilizes
        if g == 0:
            break
        factors.append(g // prev)
        prev = g
    return factors
