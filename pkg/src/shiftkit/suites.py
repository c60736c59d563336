"""Named verification suites shared by the command line and the tests.

Each suite draws its instances from a seed, checks one named property per
instance, and returns :class:`Check` records.  Nothing in here asserts;
callers decide how to surface failures.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .complexes import Face, SimplicialComplex, interval, vertex_tuple
from .engine import (
    exterior_shift,
    image_dim_complete,
    image_dim_complete_direct,
    kernel_intersection_dim,
    lex_tail_count,
    membership_via_kernels,
    shifted,
)
from .field import DEFAULT_PRIME, ExplicitSpec, FieldMatrix, GenericSpec, realize
from .homology import (
    betti_direct,
    betti_from_shifted,
    boundary_matrix,
    is_near_cone,
    sarkaria_maps,
    wedge,
    wedge_elements,
)
from .operators import (
    clique_sum_shift,
    cone,
    disjoint_union,
    disjoint_union_shift,
    intersection,
    join_top_count_check,
    lex_compare,
    link,
    near_cone_analyze,
    near_cone_decomposition_check,
    near_cone_iterated_check,
    shifted_union_recursive,
    suspension,
    union,
)
from .sampling import (
    glue,
    random_complex,
    random_near_cone,
    random_permutation,
    random_shifted,
)


@dataclass
class Check:
    label: str
    ok: bool
    detail: str = ""


def _stream(seed: int, tag: str) -> random.Random:
    # one independent, reproducible stream per suite
    return random.Random(f"{seed}:{tag}")


def _seed32(rng: random.Random) -> int:
    return rng.randrange(1 << 32)


def _fmt(faces) -> str:
    return " ".join("".join(map(str, vertex_tuple(f))) for f in sorted(faces))


# ----------------------------------------------------------------------
# fixed counterexample


def suite_counterexample(
    *, trials: int = 1, max_n: int = 6, seed: int = 0, p: int = DEFAULT_PRIME
) -> list:
    """Two disjoint edges: shifting the suspension and suspending the
    shift disagree, by exactly one triangle each way, and the former is
    lexicographically smaller."""
    B = SimplicialComplex.from_facets(4, [Face.of(1, 2), Face.of(3, 4)])
    left = shifted(suspension(B), seed=seed, p=p)
    right = shifted(suspension(shifted(B, seed=seed, p=p)), seed=seed, p=p)
    only_left = set(left.all_faces()) - set(right.all_faces())
    only_right = set(right.all_faces()) - set(left.all_faces())
    rel = lex_compare(left, right)
    return [
        Check("shift-of-suspension-extra", only_left == {Face.of(1, 2, 6)}, _fmt(only_left)),
        Check("suspension-of-shift-extra", only_right == {Face.of(1, 3, 4)}, _fmt(only_right)),
        Check("f-vectors-agree", left.f_vector == right.f_vector, str(left.f_vector)),
        Check("strictly-lex-smaller", rel == "less", rel),
    ]


# ----------------------------------------------------------------------
# unions and sums


def suite_union_eq1(
    *, trials: int = 10, max_n: int = 9, seed: int = 0, p: int = DEFAULT_PRIME
) -> list:
    """Interval counts over every small base: one window above the
    overlap's dimension, the union's shift splits additively into the
    operands' shifts."""
    rng = _stream(seed, "union-eq1")
    out = []
    for t in range(trials):
        n = rng.randint(2, max_n)
        K = random_complex(rng, n)
        L = random_complex(rng, n)
        depth = max(intersection(K, L).dim, -1) + 2
        DM = shifted(union(K, L), seed=_seed32(rng), p=p)
        DK = shifted(K, seed=_seed32(rng), p=p)
        DL = shifted(L, seed=_seed32(rng), p=p)
        bad = ""
        bases = 0
        for size in range(4):
            for comb in combinations(range(1, n + 1), size):
                A = Face.from_vertices(comb)
                window = interval(A, depth, n)
                if not window:
                    continue
                bases += 1
                lhs = sum(1 for S in window if S in DM)
                rhs = sum(1 for S in window if S in DK)
                rhs += sum(1 for S in window if S in DL)
                if lhs != rhs:
                    bad = f"A={comb} {lhs}!={rhs}"
                    break
            if bad:
                break
        detail = bad or f"n={n} depth={depth} bases={bases}"
        out.append(Check(f"pair-{t:02d}", not bad, detail))
    return out


def suite_disjoint_union(
    *, trials: int = 10, max_n: int = 9, seed: int = 0, p: int = DEFAULT_PRIME
) -> list:
    """The gap rule applied to the parts' shifts reproduces the shift of
    the disjoint union."""
    rng = _stream(seed, "disjoint-union")
    out = []
    for t in range(trials):
        na = rng.randint(1, max(1, max_n // 2))
        nb = rng.randint(1, max(1, max_n - na))
        K = random_complex(rng, na)
        L = random_complex(rng, nb)
        direct = shifted(disjoint_union(K, L), seed=_seed32(rng), p=p)
        DK = shifted(K, seed=_seed32(rng), p=p)
        DL = shifted(L, seed=_seed32(rng), p=p)
        rule = disjoint_union_shift(DK, DL)
        out.append(
            Check(f"pair-{t:02d}", direct == rule, f"n={na}+{nb} f={direct.f_vector}")
        )
    return out


def sqcup_agree(
    DA: SimplicialComplex,
    DB: SimplicialComplex,
    *,
    seed: int = 0,
    p: int = DEFAULT_PRIME,
) -> bool:
    """For already-shifted operands: direct shift of the disjoint union,
    the gap rule, and the link/antistar recursion all agree."""
    direct = shifted(disjoint_union(DA, DB), seed=seed, p=p)
    return direct == disjoint_union_shift(DA, DB) == shifted_union_recursive(DA, DB)


def suite_sqcup(
    *, trials: int = 10, max_n: int = 10, seed: int = 0, p: int = DEFAULT_PRIME
) -> list:
    """Three routes to the shift of a disjoint union of shifted complexes."""
    rng = _stream(seed, "sqcup")
    out = []
    for t in range(trials):
        na = rng.randint(1, max(1, max_n // 2))
        nb = rng.randint(1, max(1, max_n - na))
        DA = random_shifted(rng, na, p=p)
        DB = random_shifted(rng, nb, p=p)
        ok = sqcup_agree(DA, DB, seed=_seed32(rng), p=p)
        out.append(Check(f"pair-{t:02d}", ok, f"n={na}+{nb}"))
    return out


def suite_clique_sum(
    *, trials: int = 10, max_n: int = 9, seed: int = 0, p: int = DEFAULT_PRIME
) -> list:
    """Gluing along a shared full simplex: the gap rule with the shared
    simplex's counts subtracted matches the direct shift."""
    rng = _stream(seed, "clique-sum")
    out = []
    for t in range(trials):
        na = rng.randint(1, max(2, max_n - 2))
        A = random_complex(rng, na)
        d = rng.randint(-1, min(A.dim, 2))
        sigma = rng.choice(A.faces_of_size(d + 1))
        fresh = rng.randint(0 if d >= 0 else 1, max(1, max_n - na))
        nb = d + 1 + fresh
        B = SimplicialComplex.from_facets(
            nb,
            list(random_complex(rng, nb).facets()) + [Face((1 << (d + 1)) - 1)],
        )
        glued = glue(A, B, sigma)
        direct = shifted(glued, seed=_seed32(rng), p=p)
        rule = clique_sum_shift(
            shifted(A, seed=_seed32(rng), p=p),
            shifted(B, seed=_seed32(rng), p=p),
            d,
            n=glued.n,
        )
        out.append(
            Check(
                f"glue-{t:02d}",
                direct == rule,
                f"d={d} sigma={vertex_tuple(sigma)} n={glued.n}",
            )
        )
    return out


# ----------------------------------------------------------------------
# cones and near cones


def suite_cone(
    *, trials: int = 10, max_n: int = 9, seed: int = 0, p: int = DEFAULT_PRIME
) -> list:
    """Shifting commutes with coning; cones decompose along the apex and
    carry no reduced homology."""
    rng = _stream(seed, "cone")
    out = []
    for t in range(trials):
        n = rng.randint(1, max(1, max_n - 1))
        K = random_complex(rng, n)
        C = cone(K)
        DC = shifted(C, seed=_seed32(rng), p=p)
        DK = shifted(K, seed=_seed32(rng), p=p)
        ok = DC == cone(DK)
        ok = ok and near_cone_decomposition_check(C, 1, seed=_seed32(rng), p=p)
        ok = ok and not any(betti_from_shifted(DC))
        out.append(Check(f"cone-{t:02d}", ok, f"n={n + 1} f={DC.f_vector}"))
    return out


def _explicit_apex_check(rng: random.Random, K: SimplicialComplex, p: int) -> bool:
    """Apex decomposition through an explicit matrix: the first row is all
    nonzero and the lower-right block (the row projections away from the
    apex coordinate) is invertible, which is all the decomposition needs."""
    n = K.n
    while True:
        rows = [[rng.randrange(p) for _ in range(n)] for _ in range(n)]
        rows[0] = [1 + rng.randrange(p - 1) for _ in range(n)]
        X = FieldMatrix(rows, p)
        sub = FieldMatrix([r[1:] for r in rows[1:]], p)
        if X.is_nonsingular() and (n == 1 or sub.is_nonsingular()):
            break
    res = exterior_shift(K, ExplicitSpec.from_rows(rows), p=p)
    through = {f for f in res.shifted.all_faces() if int(f) & 1}
    lk = link(K, Face.of(1))
    small = SimplicialComplex(n - 1, {Face(int(f) >> 1) for f in lk.all_faces()})
    res_sub = exterior_shift(small, ExplicitSpec.from_rows(sub.rows), p=p)
    expect = {Face((int(g) << 1) | 1) for g in res_sub.shifted.all_faces()}
    return through == expect


def suite_near_cone(
    *, trials: int = 10, max_n: int = 9, seed: int = 0, p: int = DEFAULT_PRIME
) -> list:
    """Near cones: apex decomposition of the shift, the iterated version
    along a greedy certificate, and the explicit-matrix variant."""
    rng = _stream(seed, "near-cone")
    out = []
    for t in range(trials):
        n = rng.randint(2, max_n)
        K = random_near_cone(rng, n)
        cert = near_cone_analyze(K)
        ok = is_near_cone(K, 1) and cert.depth >= 1
        ok = ok and near_cone_decomposition_check(K, 1, seed=_seed32(rng), p=p)
        ok = ok and near_cone_iterated_check(K, cert, seed=_seed32(rng), p=p)
        ok = ok and _explicit_apex_check(rng, K, p)
        out.append(Check(f"nc-{t:02d}", ok, f"n={n} depth={cert.depth}"))
    # shifted complexes admit a full apex chain, one apex per vertex
    for t in range(max(1, trials // 5)):
        D = random_shifted(rng, rng.randint(2, max_n), p=p)
        cert = near_cone_analyze(D)
        ok = cert.depth == D.num_vertices
        ok = ok and near_cone_iterated_check(D, cert, seed=_seed32(rng), p=p)
        out.append(Check(f"full-chain-{t:02d}", ok, f"depth={cert.depth}"))
    return out


# ----------------------------------------------------------------------
# invariants of the shift itself


def suite_idempotence(
    *, trials: int = 10, max_n: int = 9, seed: int = 0, p: int = DEFAULT_PRIME
) -> list:
    """Shifting is idempotent, seed-independent, and blind to relabeling."""
    rng = _stream(seed, "idempotence")
    out = []
    for t in range(trials):
        n = rng.randint(1, max_n)
        K = random_complex(rng, n)
        s1, s2 = _seed32(rng), _seed32(rng)
        D = shifted(K, seed=s1, p=p)
        ok = D.is_shifted()
        ok = ok and shifted(D, seed=s2, p=p) == D
        ok = ok and shifted(K, seed=s2, p=p) == D
        for _ in range(5):
            pi = random_permutation(rng, n)
            if shifted(K.permuted(pi), seed=_seed32(rng), p=p) != D:
                ok = False
                break
        out.append(Check(f"inst-{t:02d}", ok, f"n={n} f={D.f_vector}"))
    return out


def suite_betti(
    *, trials: int = 10, max_n: int = 9, seed: int = 0, p: int = DEFAULT_PRIME
) -> list:
    """The shift preserves the face-count vector and every reduced rank,
    and the combinatorial count on the output matches the rank route."""
    rng = _stream(seed, "betti")
    out = []
    for t in range(trials):
        n = rng.randint(1, max_n)
        K = random_complex(rng, n)
        D = shifted(K, seed=_seed32(rng), p=p)
        ok = D.f_vector == K.f_vector
        ok = ok and betti_direct(K, p) == betti_from_shifted(D) == betti_direct(D, p)
        out.append(Check(f"inst-{t:02d}", ok, f"n={n} betti={betti_from_shifted(D)}"))
    return out


# ----------------------------------------------------------------------
# kernel oracles


def suite_kernel_dims(
    *, trials: int = 10, max_n: int = 8, seed: int = 0, p: int = DEFAULT_PRIME
) -> list:
    """Membership and interval counts read off joint kernels of stacked
    contraction maps, never the greedy scan; plus the closed form for the
    stacked image on a full simplex."""
    rng = _stream(seed, "kernel-dims")
    out = []
    for t in range(trials):
        n = rng.randint(2, max_n)
        K = random_complex(rng, n, max_size=4)
        res = exterior_shift(K, GenericSpec(_seed32(rng)), p=p)
        D = res.shifted
        A = realize(GenericSpec(res.seed_used), n, p)
        # the interval of height i above S must fit inside [n]
        sizes = [k for k in range(1, min(len(K.f_vector), n)) if K.f_vector[k]]
        size = rng.choice(sizes)
        S = Face.from_vertices(rng.sample(range(1, n + 1), size))
        ok = membership_via_kernels(K, A, S) == (S in D)
        # triple equality: full label range, labels of K only, and the
        # lex tail of the shifted family all give one number
        strict = kernel_intersection_dim(K, A, S, strict=True)
        ok = ok and strict == kernel_intersection_dim(K, A, S, first_k_only=True)
        ok = ok and strict == lex_tail_count(D, S)
        i = rng.randint(1, max(1, min(2, n - size)))
        lo = kernel_intersection_dim(K, A, S, strict=True, extra=i)
        hi = kernel_intersection_dim(K, A, S, strict=False, extra=i)
        count = sum(1 for T in interval(S, i, n) if T in D)
        ok = ok and lo - hi == count
        out.append(Check(f"inst-{t:02d}", ok, f"n={n} S={vertex_tuple(S)} i={i}"))
    for h in range(1, 6):
        n = h + 2
        A = realize(GenericSpec(seed + h), n, p)
        cells = 0
        bad = ""
        for size in range(1, n + 1):
            for comb in combinations(range(1, n + 1), size):
                S = Face.from_vertices(comb)
                cells += 1
                if image_dim_complete(h, n, S) != image_dim_complete_direct(h, n, S, A):
                    bad = f"S={comb}"
                    break
            if bad:
                break
        out.append(Check(f"complete-image-h{h}", not bad, bad or f"{cells} cells"))
    return out


# ----------------------------------------------------------------------
# chain-level equivalences on near cones


def _column_element(M: FieldMatrix, faces, j: int) -> dict:
    return {int(f): M.entry(i, j) for i, f in enumerate(faces) if M.entry(i, j)}


def _wedge_multiplicative(
    rng: random.Random, K: SimplicialComplex, U: dict, p: int
) -> bool:
    """U applied to a decomposable element equals the wedge of the two
    factor images, on a handful of random splits."""
    splittable = [f for f in K.all_faces() if len(f) >= 2]
    if not splittable:
        return True
    index = {
        k: {int(f): i for i, f in enumerate(K.faces_of_size(k))}
        for k in range(len(K.f_vector))
    }
    for _ in range(min(5, len(splittable))):
        W = rng.choice(splittable)
        verts = list(W)
        S = Face.from_vertices(rng.sample(verts, rng.randint(1, len(verts) - 1)))
        T = Face(int(W) ^ int(S))
        sign, _ = wedge(S, T)
        ks, kt, kw = len(S), len(T), len(W)
        us = _column_element(U[ks], K.faces_of_size(ks), index[ks][int(S)])
        ut = _column_element(U[kt], K.faces_of_size(kt), index[kt][int(T)])
        uw = _column_element(U[kw], K.faces_of_size(kw), index[kw][int(W)])
        want = {m: sign * c % p for m, c in uw.items()}
        if wedge_elements(us, ut, p) != want:
            return False
    return True


def suite_sarkaria(
    *, trials: int = 10, max_n: int = 8, seed: int = 0, p: int = DEFAULT_PRIME
) -> list:
    """The two change-of-basis maps on a near cone interlace the three
    contraction operators degree by degree, and the first one respects
    wedges."""
    rng = _stream(seed, "sarkaria")
    out = []
    for t in range(trials):
        n = rng.randint(2, max_n)
        K = random_near_cone(rng, n)
        alphas = {v: 1 + rng.randrange(p - 1) for v in K.support}
        U, Dm = sarkaria_maps(K, alphas, p)
        ok = True
        for level in range(1, len(K.f_vector)):
            B = boundary_matrix(K, {1: 1}, level, p)
            E = boundary_matrix(K, None, level, p)
            F = boundary_matrix(K, alphas, level, p)
            ok = ok and U[level - 1] @ B == E @ U[level]
            ok = ok and Dm[level - 1] @ E == F @ Dm[level]
        ok = ok and _wedge_multiplicative(rng, K, U, p)
        out.append(Check(f"nc-{t:02d}", ok, f"n={n} dim={K.dim}"))
    return out


# ----------------------------------------------------------------------
# joins


def suite_join_top(
    *, trials: int = 10, max_n: int = 10, seed: int = 0, p: int = DEFAULT_PRIME
) -> list:
    """Top faces of a join's shift avoiding an initial label segment
    factor as a product over the operands."""
    rng = _stream(seed, "join-top")
    out = []
    for t in range(trials):
        na = rng.randint(1, max(1, max_n // 2))
        nb = rng.randint(1, max(1, max_n - na))
        K = random_complex(rng, na, max_size=2)
        L = random_complex(rng, nb, max_size=2)
        i = rng.randint(0, 3)
        lhs, rhs = join_top_count_check(K, L, i, seed=_seed32(rng), p=p)
        out.append(Check(f"pair-{t:02d}", lhs == rhs, f"i={i} {lhs}=={rhs}"))
    return out


# ----------------------------------------------------------------------
# conjecture exploration


def conjecture_scan(
    *, trials: int = 50, max_n: int = 8, seed: int = 0, p: int = DEFAULT_PRIME
) -> dict:
    """Tally the lex relation between the shift of a suspension and the
    suspension of the shift over random complexes.

    ``greater`` and ``incomparable`` outcomes are violations of the
    conjectured ordering; up to five witnesses are kept as facet lists.
    """
    rng = _stream(seed, "conjecture")
    tallies = {"equal": 0, "less": 0, "greater": 0, "incomparable": 0}
    witnesses = []
    for _ in range(trials):
        n = rng.randint(1, max_n)
        K = random_complex(rng, n)
        s = _seed32(rng)
        left = shifted(suspension(K), seed=s, p=p)
        right = shifted(suspension(shifted(K, seed=s, p=p)), seed=s, p=p)
        rel = lex_compare(left, right)
        tallies[rel] += 1
        if rel in ("greater", "incomparable") and len(witnesses) < 5:
            witnesses.append([list(vertex_tuple(f)) for f in K.facets()])
    return {
        "trials": trials,
        "max_n": max_n,
        "tallies": tallies,
        "violations": tallies["greater"] + tallies["incomparable"],
        "witnesses": witnesses,
    }


SUITES = {
    "betti": suite_betti,
    "clique-sum": suite_clique_sum,
    "cone": suite_cone,
    "counterexample": suite_counterexample,
    "disjoint-union": suite_disjoint_union,
    "idempotence": suite_idempotence,
    "join-top": suite_join_top,
    "kernel-dims": suite_kernel_dims,
    "near-cone": suite_near_cone,
    "sarkaria": suite_sarkaria,
    "sqcup": suite_sqcup,
    "union-eq1": suite_union_eq1,
}
