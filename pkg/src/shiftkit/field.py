"""Exact linear algebra over a prime field Z/p.

Elements are plain Python ints reduced into ``0..p-1``; products of two
61-bit residues exceed 64 bits, so machine-word vector libraries are not
usable here and all arithmetic stays in native big ints.  The default
modulus is the Mersenne prime 2^61 - 1; any prime below 2^62 is accepted.

Matrices are immutable once built.  ``RowEchelonAccumulator`` is the one
mutable object and supports a single writer.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .complexes import iter_vertices

DEFAULT_PRIME = (1 << 61) - 1
MAX_PRIME = 1 << 62

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(m: int) -> bool:
    """Deterministic Miller-Rabin, exact for all m < 3.3e24."""
    if m < 2:
        return False
    for q in _MR_BASES:
        if m % q == 0:
            return m == q
    d = m - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(r - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def check_prime(p: int) -> int:
    if p >= MAX_PRIME:
        raise ValueError(f"modulus must be below 2^62, got {p}")
    if not is_prime(p):
        raise ValueError(f"modulus must be prime, got {p}")
    return p


def _det_in_place(rows: list[list[int]], p: int) -> int:
    """Determinant by elimination; destroys ``rows``."""
    m = len(rows)
    det = 1
    for col in range(m):
        pivot = next((r for r in range(col, m) if rows[r][col]), None)
        if pivot is None:
            return 0
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = p - det
        a = rows[col][col]
        det = det * a % p
        inv = pow(a, -1, p)
        base = rows[col]
        for r in range(col + 1, m):
            c = rows[r][col]
            if c:
                factor = c * inv % p
                rows[r] = [(x - factor * y) % p for x, y in zip(rows[r], base)]
    return det


class FieldMatrix:
    """An immutable matrix over Z/p with 0-indexed entry access."""

    __slots__ = ("p", "rows")

    def __init__(self, rows: Iterable[Iterable[int]], p: int = DEFAULT_PRIME):
        self.p = p
        self.rows = tuple(tuple(int(x) % p for x in row) for row in rows)
        if self.rows:
            width = len(self.rows[0])
            if any(len(r) != width for r in self.rows):
                raise ValueError("ragged rows")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @classmethod
    def identity(cls, n: int, p: int = DEFAULT_PRIME) -> "FieldMatrix":
        return cls(([int(i == j) for j in range(n)] for i in range(n)), p)

    def entry(self, i: int, j: int) -> int:
        return self.rows[i][j]

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "FieldMatrix":
        return FieldMatrix(
            ((self.rows[i][j] for j in col_idx) for i in row_idx), self.p
        )

    def minor(self, row_face: int, col_face: int) -> int:
        """Determinant of the square submatrix picked out by two faces.

        Faces use 1-based vertex labels: vertex ``v`` selects row/column
        ``v - 1``.  The empty-by-empty minor is 1.

        Args:
            row_face: mask of selected rows.
            col_face: mask of selected columns.

        Returns:
            The minor as a residue in ``0..p-1``.
        """
        ri = [v - 1 for v in iter_vertices(row_face)]
        ci = [v - 1 for v in iter_vertices(col_face)]
        if len(ri) != len(ci):
            raise ValueError("minor requires equally many rows and columns")
        if not ri:
            return 1
        sub = [[self.rows[i][j] for j in ci] for i in ri]
        return _det_in_place(sub, self.p)

    def det(self) -> int:
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        if self.nrows == 0:
            return 1
        return _det_in_place([list(r) for r in self.rows], self.p)

    def rank(self) -> int:
        acc = RowEchelonAccumulator(self.ncols, self.p)
        for row in self.rows:
            acc.insert(row)
        return acc.rank

    def is_nonsingular(self) -> bool:
        return self.nrows == self.ncols and self.det() != 0

    def __matmul__(self, other: "FieldMatrix") -> "FieldMatrix":
        if self.p != other.p or self.ncols != other.nrows:
            raise ValueError("shape or modulus mismatch")
        p = self.p
        cols = list(zip(*other.rows)) if other.rows else []
        return FieldMatrix(
            ([sum(a * b for a, b in zip(row, col)) % p for col in cols] for row in self.rows),
            p,
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldMatrix) and self.p == other.p and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.p, self.rows))

    def __repr__(self) -> str:
        return f"FieldMatrix({self.nrows}x{self.ncols} mod {self.p})"


# ----------------------------------------------------------------------
# matrix specifications

@dataclass(frozen=True)
class GenericSpec:
    """Dense matrix with fresh uniform residues drawn from ``seed``."""

    seed: int = 0


@dataclass(frozen=True)
class BlockGenericSpec:
    """Block-diagonal matrix: a random k x k block, a random l x l block,
    zeros on the off-diagonal blocks."""

    k: int
    l: int
    seed: int = 0


@dataclass(frozen=True)
class ExplicitSpec:
    """A caller-supplied square matrix, validated nonsingular at use."""

    entries: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "ExplicitSpec":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))


MatrixSpec = Union[GenericSpec, BlockGenericSpec, ExplicitSpec]


def realize(spec: MatrixSpec, n: int, p: int = DEFAULT_PRIME) -> FieldMatrix:
    """Produce the concrete n x n matrix described by ``spec``.

    Random variants are drawn deterministically from their seed and are
    redrawn until nonsingular; an explicit singular matrix is an error.
    """
    check_prime(p)
    if isinstance(spec, GenericSpec):
        rng = random.Random(spec.seed)
        while True:
            m = FieldMatrix(
                ([rng.randrange(p) for _ in range(n)] for _ in range(n)), p
            )
            if m.is_nonsingular():
                return m
    if isinstance(spec, BlockGenericSpec):
        if spec.k < 0 or spec.l < 0 or spec.k + spec.l != n:
            raise ValueError("block sizes must be nonnegative and sum to n")
        rng = random.Random(spec.seed)
        while True:
            rows = [[0] * n for _ in range(n)]
            for i in range(spec.k):
                for j in range(spec.k):
                    rows[i][j] = rng.randrange(p)
            for i in range(spec.k, n):
                for j in range(spec.k, n):
                    rows[i][j] = rng.randrange(p)
            m = FieldMatrix(rows, p)
            if m.is_nonsingular():
                return m
    if isinstance(spec, ExplicitSpec):
        if len(spec.entries) != n or any(len(r) != n for r in spec.entries):
            raise ValueError(f"explicit matrix must be {n}x{n}")
        m = FieldMatrix(spec.entries, p)
        if not m.is_nonsingular():
            raise ValueError("explicit matrix is singular mod p")
        return m
    raise TypeError(f"unknown matrix spec {spec!r}")


class RowEchelonAccumulator:
    """Incremental reduced row echelon basis over Z/p.

    ``insert`` reduces an incoming vector against the basis; a vector that
    survives is normalized, back-substituted into the stored rows and kept.
    The stored rows therefore always have distinct pivots and zeros in one
    another's pivot columns, so the membership test is exact.
    """

    __slots__ = ("p", "width", "_pivots", "_rows")

    def __init__(self, width: int, p: int = DEFAULT_PRIME):
        self.p = p
        self.width = width
        self._pivots: list[int] = []
        self._rows: list[list[int]] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(self._pivots)

    def insert(self, vec: Sequence[int]) -> bool:
        """Reduce ``vec`` and keep it if independent.

        Returns:
            True when the vector extended the span, False when it was
            already dependent (in particular for the zero vector).
        """
        if len(vec) != self.width:
            raise ValueError("vector width mismatch")
        p = self.p
        v = [int(x) % p for x in vec]
        for pivot, row in zip(self._pivots, self._rows):
            c = v[pivot]
            if c:
                v = [(a - c * b) % p for a, b in zip(v, row)]
        pivot = next((j for j, x in enumerate(v) if x), None)
        if pivot is None:
            return False
        inv = pow(v[pivot], -1, p)
        v = [a * inv % p for a in v]
        for i, row in enumerate(self._rows):
            c = row[pivot]
            if c:
                self._rows[i] = [(a - c * b) % p for a, b in zip(row, v)]
        # keep pivot lists sorted so reduction sweeps stay echelon-shaped
        at = next(
            (i for i, q in enumerate(self._pivots) if q > pivot), len(self._pivots)
        )
        self._pivots.insert(at, pivot)
        self._rows.insert(at, v)
        return True
