"""Simplicial complexes on a vertex set [n], stored as bitmask face families.

Vertex ``v`` corresponds to bit ``v - 1``, so a face is a single int and
subset tests, closures and symmetric differences are word operations.
Ambient size is capped at 64 so every face fits in one machine word.

All values are immutable after construction and safe to share freely.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Mapping

MAX_VERTICES = 64


def iter_vertices(mask: int) -> Iterator[int]:
    """Yield the 1-based vertex labels packed into ``mask``, ascending."""
    mask = int(mask)
    while mask:
        low = mask & -mask
        yield low.bit_length()
        mask ^= low


def vertex_tuple(mask: int) -> tuple[int, ...]:
    return tuple(iter_vertices(mask))


def lex_sorted(masks: Iterable[int]) -> list:
    """Sort same-or-mixed-size masks by (cardinality, lex order)."""
    return sorted(masks, key=lambda m: (int(m).bit_count(), vertex_tuple(m)))


class Face(int):
    """A vertex subset packed into an int bitmask.

    ``Face`` subclasses ``int``: it hashes and compares like its mask, so
    faces and raw masks mix freely as dict keys.  ``Face(0)`` is the empty
    face.  The binary operators act as set operations (``-`` is set
    difference, not integer subtraction).
    """

    __slots__ = ()

    @classmethod
    def of(cls, *vertices: int) -> "Face":
        return cls.from_vertices(vertices)

    @classmethod
    def from_vertices(cls, vertices: Iterable[int]) -> "Face":
        mask = 0
        for v in vertices:
            if not 1 <= int(v) <= MAX_VERTICES:
                raise ValueError(f"vertex {v} outside 1..{MAX_VERTICES}")
            mask |= 1 << (int(v) - 1)
        return cls(mask)

    @property
    def vertices(self) -> tuple[int, ...]:
        return vertex_tuple(self)

    @property
    def min_vertex(self) -> int:
        if not self:
            raise ValueError("empty face has no vertices")
        return (int(self) & -int(self)).bit_length()

    @property
    def max_vertex(self) -> int:
        if not self:
            raise ValueError("empty face has no vertices")
        return int(self).bit_length()

    def __iter__(self) -> Iterator[int]:
        return iter_vertices(self)

    def __len__(self) -> int:
        return int(self).bit_count()

    def __contains__(self, vertex: int) -> bool:
        return vertex >= 1 and bool((int(self) >> (vertex - 1)) & 1)

    def __or__(self, other):
        return Face(int(self) | int(other))

    def __and__(self, other):
        return Face(int(self) & int(other))

    def __xor__(self, other):
        return Face(int(self) ^ int(other))

    def __sub__(self, other):
        return Face(int(self) & ~int(other))

    def __repr__(self) -> str:
        return "Face.of(%s)" % ", ".join(map(str, self))


EMPTY_FACE = Face(0)


def lex_less(s: int, t: int) -> bool:
    """Strict lex order on equal-cardinality faces.

    ``S < T`` iff the smallest vertex in the symmetric difference lies in
    ``S``.  Raises ``ValueError`` on a cardinality mismatch; the order is
    only defined between faces of the same size.
    """
    s, t = int(s), int(t)
    if s.bit_count() != t.bit_count():
        raise ValueError("lex order compares faces of equal cardinality")
    d = s ^ t
    return bool(d) and bool(s & (d & -d))


def lex_leq(s: int, t: int) -> bool:
    return int(s) == int(t) or lex_less(s, t)


def dominates(s: int, t: int) -> bool:
    """Componentwise order on sorted vertex vectors: ``S`` dominates iff
    each of its sorted entries is <= the corresponding entry of ``T``.

    This is the partial order whose down-closure defines shiftedness; it
    refines to lex (``dominates(S, T)`` implies ``S`` is lex-<= ``T``).
    """
    sv, tv = vertex_tuple(s), vertex_tuple(t)
    if len(sv) != len(tv):
        raise ValueError("domination compares faces of equal cardinality")
    return all(a <= b for a, b in zip(sv, tv))


def init_segment(s: int, j: int) -> Face:
    """The ``j`` lex-least (i.e. smallest-labelled) vertices of ``s``."""
    s = int(s)
    if j < 0 or j > s.bit_count():
        raise ValueError("init length must lie in 0..|S|")
    mask = 0
    for _ in range(j):
        low = s & -s
        mask |= low
        s ^= low
    return Face(mask)


def interval(s: int, i: int, n: int) -> list:
    """All faces ``T`` of size ``|S| + i`` inside ``[n]`` whose ``|S|``
    smallest vertices are exactly ``S``, in lex order.

    The extra ``i`` vertices therefore all exceed ``max(S)``.  An interval
    that does not fit inside ``[n]`` is empty; ``i <= 0`` is an error.
    """
    if i <= 0:
        raise ValueError("interval height must be positive")
    s = int(s)
    lo = s.bit_length() + 1  # max(S) + 1, or 1 for the empty face
    out = []
    for extra in itertools.combinations(range(lo, n + 1), i):
        m = s
        for v in extra:
            m |= 1 << (v - 1)
        out.append(Face(m))
    return out


def iter_k_subsets(n: int, k: int) -> Iterator[int]:
    """Masks of all k-subsets of [n] in lex order."""
    for bits in itertools.combinations(range(n), k):
        m = 0
        for b in bits:
            m |= 1 << b
        yield m


class SimplicialComplex:
    """A downward-closed family of faces with ambient vertex set [n].

    Faces are grouped by cardinality and lex-sorted within each group.
    The empty face is present exactly when the complex has any face at
    all; the complex with no faces ("void") is permitted and is distinct
    from the complex whose only face is empty.

    Instances are immutable, hashable on ``(n, faces)``, and validate
    downward closure on construction.
    """

    __slots__ = ("n", "_faces", "_by_size")

    def __init__(self, n: int, faces: Iterable[int] = ()):
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"ambient size must lie in 0..{MAX_VERTICES}")
        face_set = {int(f) for f in faces}
        if face_set:
            face_set.add(0)
        top = 1 << n
        for m in face_set:
            if m < 0 or m >= top:
                raise ValueError("vertex label out of 1..n")
            probe = m
            while probe:
                low = probe & -probe
                if (m ^ low) not in face_set:
                    raise ValueError("face family is not downward closed")
                probe ^= low
        self.n = n
        self._faces = frozenset(face_set)
        groups: dict[int, list] = {}
        for m in face_set:
            groups.setdefault(m.bit_count(), []).append(m)
        size_max = max(groups) if groups else -1
        self._by_size = tuple(
            tuple(Face(m) for m in sorted(groups.get(k, ()), key=vertex_tuple))
            for k in range(size_max + 1)
        )

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def from_facets(cls, n: int, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Downward closure of the given facets.

        ``from_facets(n, [])`` has no faces at all, while a single empty
        facet yields the complex ``{[]}``.
        """
        faces: set[int] = set()
        for facet in facets:
            m = int(facet) if isinstance(facet, int) else int(Face.from_vertices(facet))
            if m >= (1 << n):
                raise ValueError("vertex label out of 1..n")
            if m in faces:
                continue
            # enumerate all submasks of m, including 0
            sub = m
            while True:
                faces.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & m
        return cls(n, faces)

    @classmethod
    def empty(cls, n: int) -> "SimplicialComplex":
        return cls(n, ())

    @classmethod
    def point(cls, n: int = 1) -> "SimplicialComplex":
        return cls.from_facets(n, [[1]])

    @classmethod
    def complete(cls, n: int, ambient: int | None = None) -> "SimplicialComplex":
        """The full simplex on [n], optionally inside a larger ambient set."""
        ambient = n if ambient is None else ambient
        if ambient < n:
            raise ValueError("ambient size smaller than vertex count")
        return cls(ambient, range(1 << n))

    # ------------------------------------------------------------------
    # queries

    @property
    def is_void(self) -> bool:
        return not self._faces

    @property
    def dim(self) -> int:
        """Max face cardinality minus one; {[]} has dim -1, void dim -2."""
        return len(self._by_size) - 2

    @property
    def f_vector(self) -> tuple[int, ...]:
        """Face counts ``(f_-1, f_0, ..., f_dim)``; empty for the void complex."""
        return tuple(len(g) for g in self._by_size)

    @property
    def num_vertices(self) -> int:
        return len(self._by_size[1]) if len(self._by_size) > 1 else 0

    @property
    def support(self) -> Face:
        """Union of all faces, as a mask."""
        m = 0
        for g in self._by_size:
            for f in g:
                m |= int(f)
        return Face(m)

    def faces_of_size(self, k: int) -> tuple:
        if k < 0 or k >= len(self._by_size):
            return ()
        return self._by_size[k]

    def all_faces(self) -> Iterator[Face]:
        for g in self._by_size:
            yield from g

    def face_set(self) -> frozenset:
        return self._faces

    def facets(self) -> list:
        out = []
        for g in self._by_size:
            for f in g:
                m = int(f)
                has_cover = any(
                    (m | (1 << b)) in self._faces
                    for b in range(self.n)
                    if not (m >> b) & 1
                )
                if not has_cover:
                    out.append(f)
        return lex_sorted(out)

    def __contains__(self, face: int) -> bool:
        return int(face) in self._faces

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SimplicialComplex)
            and self.n == other.n
            and self._faces == other._faces
        )

    def __hash__(self) -> int:
        return hash((self.n, self._faces))

    def __repr__(self) -> str:
        shown = ", ".join("{%s}" % ",".join(map(str, f)) for f in self.facets())
        return f"SimplicialComplex(n={self.n}, facets=[{shown}])"

    def is_shifted(self) -> bool:
        """Whether the family is closed downward under the domination order.

        Checking single-vertex swaps (replace a vertex by a smaller absent
        one) is equivalent: these moves generate the order.
        """
        for g in self._by_size[1:] if self._faces else ():
            for f in g:
                m = int(f)
                for v in iter_vertices(m):
                    bit = 1 << (v - 1)
                    for w in range(1, v):
                        wbit = 1 << (w - 1)
                        if m & wbit:
                            continue
                        if (m ^ bit) | wbit not in self._faces:
                            return False
        return True

    # ------------------------------------------------------------------
    # relabelings

    def permuted(self, pi: Mapping[int, int]) -> "SimplicialComplex":
        """Apply a vertex permutation of [n] to every face."""
        if sorted(pi) != list(range(1, self.n + 1)) or sorted(pi.values()) != list(
            range(1, self.n + 1)
        ):
            raise ValueError("permutation must be a bijection of 1..n")
        faces = []
        for f in self.all_faces():
            m = 0
            for v in f:
                m |= 1 << (pi[v] - 1)
            faces.append(m)
        return SimplicialComplex(self.n, faces)

    def relabeled(self, offset: int, ambient: int | None = None) -> "SimplicialComplex":
        """Shift every vertex label up by ``offset``."""
        if offset < 0:
            raise ValueError("offset must be nonnegative")
        ambient = self.n + offset if ambient is None else ambient
        return SimplicialComplex(ambient, (int(f) << offset for f in self._faces))

    def compacted(self) -> tuple["SimplicialComplex", tuple[int, ...]]:
        """Relabel the support onto an initial segment; returns the new
        complex and the old labels in their new order."""
        old = vertex_tuple(self.support)
        code = {v: i + 1 for i, v in enumerate(old)}
        faces = []
        for f in self._faces:
            m = 0
            for v in iter_vertices(f):
                m |= 1 << (code[v] - 1)
            faces.append(m)
        return SimplicialComplex(len(old), faces), old

    def with_ambient(self, n: int) -> "SimplicialComplex":
        return SimplicialComplex(n, self._faces)
