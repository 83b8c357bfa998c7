"""Exact integer linear algebra: Smith normal form and abelian groups.

Everything runs over Python's unbounded integers; no floating point is
involved anywhere.  The Smith normal form returned here is certified
separately by oracles.snf_certify, which re-multiplies the factors and
recomputes the unimodularity determinants through an independent exact
routine.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

__all__ = [
    "IntMatrix",
    "smith_normal_form",
    "SmithDecomposition",
    "AbelianGroupPresentation",
    "cokernel",
    "kernel_rank",
]


@dataclass(frozen=True)
class IntMatrix:
    """Immutable dense integer matrix."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        widths = {len(r) for r in self.entries}
        if len(widths) > 1:
            raise ValueError("ragged rows")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        return cls(tuple(tuple(int(x) for x in r) for r in rows))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(tuple(tuple(0 for _ in range(cols)) for _ in range(rows)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries[ij[0]][ij[1]]

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} * {other.rows}x{other.cols}")
        ot = other.entries
        out = []
        for row in self.entries:
            out.append(
                tuple(
                    sum(row[k] * ot[k][j] for k in range(self.cols))
                    for j in range(other.cols)
                )
            )
        return IntMatrix(tuple(out))

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.entries))) if self.entries else self

    def sub_from_identity(self) -> "IntMatrix":
        """I - M for a square matrix M."""
        if self.rows != self.cols:
            raise ValueError("not square")
        return IntMatrix(
            tuple(
                tuple((1 if i == j else 0) - self.entries[i][j] for j in range(self.cols))
                for i in range(self.rows)
            )
        )

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


@dataclass(frozen=True)
class SmithDecomposition:
    """U * M * V = D with U, V unimodular and D diagonal with a
    divisibility chain d1 | d2 | ... on its nonnegative diagonal."""

    u: IntMatrix
    d: IntMatrix
    v: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        n = min(self.d.rows, self.d.cols)
        return tuple(self.d[i, i] for i in range(n))

    @property
    def rank(self) -> int:
        return sum(1 for x in self.diagonal if x != 0)


def smith_normal_form(m: IntMatrix) -> SmithDecomposition:
    """Diagonalize an integer matrix by unimodular row and column moves.

    Pivot selection always takes a least-magnitude nonzero entry of the
    remaining block, which keeps coefficient growth tame at the sizes
    this package works with.
    """
    a = m.to_lists()
    nrows, ncols = m.rows, m.cols
    u = IntMatrix.identity(nrows).to_lists()
    v = IntMatrix.identity(ncols).to_lists()

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def row_addmul(i, j, q):
        # row_i += q * row_j
        a[i] = [x + q * y for x, y in zip(a[i], a[j])]
        u[i] = [x + q * y for x, y in zip(u[i], u[j])]

    def row_negate(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    def col_swap(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def col_addmul(i, j, q):
        # col_i += q * col_j
        for row in a:
            row[i] += q * row[j]
        for row in v:
            row[i] += q * row[j]

    t = 0
    limit = min(nrows, ncols)
    while t < limit:
        pivot = None
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                x = a[i][j]
                if x != 0 and (best is None or abs(x) < best):
                    best = abs(x)
                    pivot = (i, j)
        if pivot is None:
            break
        row_swap(t, pivot[0])
        col_swap(t, pivot[1])

        while True:
            # clear the pivot column
            dirty = False
            for i in range(t + 1, nrows):
                if a[i][t] == 0:
                    continue
                q = a[i][t] // a[t][t]
                row_addmul(i, t, -q)
                if a[i][t] != 0:
                    # remainder is strictly smaller; promote it to pivot
                    row_swap(t, i)
                    dirty = True
            # clear the pivot row
            for j in range(t + 1, ncols):
                if a[t][j] == 0:
                    continue
                q = a[t][j] // a[t][t]
                col_addmul(j, t, -q)
                if a[t][j] != 0:
                    col_swap(t, j)
                    dirty = True
            if dirty:
                continue
            if all(a[i][t] == 0 for i in range(t + 1, nrows)) and all(
                a[t][j] == 0 for j in range(t + 1, ncols)
            ):
                break

        # divisibility: the pivot must divide every remaining entry
        violation = None
        for i in range(t + 1, nrows):
            for j in range(t + 1, ncols):
                if a[i][j] % a[t][t] != 0:
                    violation = i
                    break
            if violation is not None:
                break
        if violation is not None:
            row_addmul(t, violation, 1)
            continue  # redo this pivot position

        if a[t][t] < 0:
            row_negate(t)
        t += 1

    return SmithDecomposition(
        u=IntMatrix.from_rows(u), d=IntMatrix.from_rows(a), v=IntMatrix.from_rows(v)
    )


@dataclass(frozen=True)
class AbelianGroupPresentation:
    """A finitely generated abelian group in invariant-factor form.

    torsion is the chain of invariant factors >= 2 (each dividing the
    next); free_rank counts the Z summands.
    """

    torsion: tuple[int, ...]
    free_rank: int

    def __post_init__(self):
        for x in self.torsion:
            if x < 2:
                raise ValueError(f"torsion factor {x} < 2")
        for x, y in zip(self.torsion, self.torsion[1:]):
            if y % x != 0:
                raise ValueError(f"invariant factors not a chain: {x} does not divide {y}")
        if self.free_rank < 0:
            raise ValueError("negative free rank")

    def is_trivial(self) -> bool:
        return not self.torsion and self.free_rank == 0

    def direct_sum_free(self, extra_rank: int) -> "AbelianGroupPresentation":
        return AbelianGroupPresentation(self.torsion, self.free_rank + extra_rank)

    def torsion_order(self) -> int:
        """Order of the torsion subgroup."""
        n = 1
        for x in self.torsion:
            n *= x
        return n

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{x}" for x in self.torsion)
        return " + ".join(parts) if parts else "0"


def cokernel(m: IntMatrix) -> AbelianGroupPresentation:
    """Z^rows / (column space of m), from the Smith diagonal.

    Unimodular row or column scrambles of m leave the result unchanged.
    """
    snf = smith_normal_form(m)
    torsion = tuple(x for x in snf.diagonal if x >= 2)
    free = m.rows - snf.rank
    return AbelianGroupPresentation(torsion, free)


def kernel_rank(m: IntMatrix) -> int:
    """Rank of the integer kernel of m viewed as a map Z^cols -> Z^rows."""
    return m.cols - smith_normal_form(m).rank
