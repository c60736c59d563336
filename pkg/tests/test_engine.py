"""Shift engine: frozen instances, path agreement, kernel-route oracle."""

import random
from itertools import combinations

import pytest

from shiftkit import (
    BlockGenericSpec,
    ExplicitSpec,
    Face,
    GenericSpec,
    SimplicialComplex,
    exterior_shift,
    image_dim_complete,
    image_dim_complete_direct,
    iter_k_subsets,
    kernel_intersection_dim,
    lex_tail_count,
    membership_via_kernels,
    realize,
    shifted,
)
from shiftkit.engine import _WedgeTables, compound_row
from shiftkit.sampling import random_complex

P = 10007


def faces_by_name(K, k):
    return sorted("".join(map(str, sorted(f.vertices))) for f in K.faces_of_size(k))


def octahedron():
    # join of three disjoint pairs {1,4}, {2,5}, {3,6}: the missing edges
    # straddle a 3+3 split of the labels
    non = {frozenset((1, 4)), frozenset((2, 5)), frozenset((3, 6))}
    edges = [list(e) for e in combinations(range(1, 7), 2) if frozenset(e) not in non]
    return SimplicialComplex.from_facets(6, edges)


def k33():
    return SimplicialComplex.from_facets(6, [[i, j] for i in (1, 2, 3) for j in (4, 5, 6)])


def test_two_disjoint_edges_frozen():
    B = SimplicialComplex.from_facets(4, [[1, 2], [3, 4]])
    D = shifted(B)
    assert D.f_vector == (1, 4, 2)
    assert faces_by_name(D, 2) == ["12", "13"]
    assert D.is_shifted()


def test_octahedron_generic_shift_frozen():
    D = shifted(octahedron())
    # every edge on six vertices except the triangle at the top labels
    expect = sorted(
        "".join(map(str, e))
        for e in combinations(range(1, 7), 2)
        if set(e) not in ({4, 5}, {4, 6}, {5, 6})
    )
    assert faces_by_name(D, 2) == expect
    assert Face.of(4, 5) not in D.face_set()


def test_octahedron_block_shift_differs_after_reshifting():
    G = octahedron()
    res = exterior_shift(G, BlockGenericSpec(3, 3, 0))
    assert res.validated.f_vector_preserved
    assert not res.validated.is_shifted
    assert res.retries == 0
    # the two generic blocks shift each triangle in place, so the family
    # keeps the top-label triangle and is not shifted
    assert Face.of(4, 5) in res.shifted.face_set()
    again = shifted(res.shifted)
    assert Face.of(4, 5) in again.face_set()
    assert again != shifted(G)


def test_k33_generic_shift_frozen():
    D = shifted(k33())
    assert faces_by_name(D, 2) == [
        "12", "13", "14", "15", "16", "23", "24", "25", "34",
    ]
    assert Face.of(3, 4) in D.face_set()


def test_void_complex_rejected():
    with pytest.raises(ValueError, match="no faces"):
        exterior_shift(SimplicialComplex(3, []))


def test_trivial_fixed_points():
    empty_only = SimplicialComplex(3, [0])
    assert shifted(empty_only) == empty_only.with_ambient(3)
    pt = SimplicialComplex.point(1)
    assert shifted(pt) == pt


def test_identity_matrix_returns_input_family():
    # each compound row of the identity hits a single column, so the greedy
    # scan keeps exactly the faces already present
    B = SimplicialComplex.from_facets(4, [[1, 2], [3, 4]])
    eye = [[1 if i == j else 0 for j in range(4)] for i in range(4)]
    res = exterior_shift(B, ExplicitSpec(eye), p=P)
    assert res.shifted == B
    assert res.seed_used is None
    assert not res.validated.is_shifted
    assert res.validated.f_vector_preserved


def test_compound_rows_match_reference_path():
    rng = random.Random(4021)
    for _ in range(25):
        K = random_complex(rng, rng.randint(2, 6))
        A = realize(GenericSpec(rng.randrange(2**32)), K.n, P)
        tables = _WedgeTables(K, P)
        for k in range(1, len(K.f_vector)):
            cols = K.faces_of_size(k)
            for mask in iter_k_subsets(K.n, k):
                assert tuple(tables.row(A, mask)) == compound_row(A, mask, cols)


def test_fast_and_reference_shifts_agree():
    rng = random.Random(991)
    for _ in range(10):
        K = random_complex(rng, rng.randint(2, 6))
        if K.is_void:
            continue
        spec = GenericSpec(rng.randrange(2**16))
        fast = exterior_shift(K, spec, p=P)
        slow = exterior_shift(K, spec, p=P, use_fast=False)
        assert fast.shifted == slow.shifted


def test_kernel_route_reconstructs_the_shift():
    # membership decided purely by kernel dimensions must rebuild the same
    # family the greedy scan produced, size by size
    rng = random.Random(2718)
    for _ in range(12):
        K = random_complex(rng, rng.randint(2, 6))
        if K.is_void:
            continue
        res = exterior_shift(K, GenericSpec(rng.randrange(2**20)))
        A = realize(GenericSpec(res.seed_used), K.n)
        for k in range(1, len(K.f_vector)):
            via_kernels = {
                mask
                for mask in iter_k_subsets(K.n, k)
                if membership_via_kernels(K, A, mask)
            }
            assert via_kernels == {int(f) for f in res.shifted.faces_of_size(k)}


def test_idempotent_and_seed_independent():
    rng = random.Random(555)
    for _ in range(8):
        K = random_complex(rng, rng.randint(2, 6))
        if K.is_void:
            continue
        D = shifted(K)
        assert shifted(D) == D
        assert shifted(K, seed=1) == D


def test_strict_vs_nonstrict_kernel_gap_is_membership():
    K = k33()
    res = exterior_shift(K)
    A = realize(GenericSpec(res.seed_used), K.n)
    D = res.shifted
    for mask in iter_k_subsets(K.n, 2):
        below = kernel_intersection_dim(K, A, mask, strict=True)
        at = kernel_intersection_dim(K, A, mask, strict=False)
        assert below - at in (0, 1)
        assert (below > at) == (mask in {int(f) for f in D.faces_of_size(2)})


def test_lex_tail_count_frozen():
    D = shifted(k33())
    assert lex_tail_count(D, int(Face.of(1, 2))) == 9
    assert lex_tail_count(D, int(Face.of(2, 5))) == 2
    assert lex_tail_count(D, int(Face.of(2, 6))) == 1
    assert lex_tail_count(D, int(Face.of(3, 4))) == 1
    assert lex_tail_count(D, int(Face.of(3, 5))) == 0


def test_image_dim_closed_form_matches_rank():
    A = realize(GenericSpec(17), 5, P)
    for h in range(2, 6):
        for s in (1, 2):
            if s >= h:
                continue
            for S in iter_k_subsets(5, s):
                assert image_dim_complete(h, 5, S) == image_dim_complete_direct(
                    h, 5, S, A
                )
