import itertools

import pytest

from detcodes.errors import InvalidParameterError, ResourceLimitError
from detcodes.gfield import (
    GfMatrix,
    canonical_rep,
    field_new,
    matrices_iter,
    partial_trace,
    rank,
)
from detcodes.qcombin import mu

FIELD_ORDERS = [2, 3, 4, 5, 7, 8, 9, 16]


@pytest.mark.parametrize("q", FIELD_ORDERS)
def test_field_axioms_exhaustive(q):
    f = field_new(q)
    add, mul, neg, inv = f.add, f.mul, f.neg, f.inv
    elems = range(q)
    for a in elems:
        assert add[a, 0] == a and mul[a, 1] == a and mul[a, 0] == 0
        assert add[a, neg[a]] == 0
        if a:
            assert mul[a, inv[a]] == 1
        for b in elems:
            assert add[a, b] == add[b, a]
            assert mul[a, b] == mul[b, a]
            for c in elems:
                assert add[add[a, b], c] == add[a, add[b, c]]
                assert mul[mul[a, b], c] == mul[a, mul[b, c]]
                assert mul[a, add[b, c]] == add[mul[a, b], mul[a, c]]


def test_field_rejects_bad_order():
    with pytest.raises(InvalidParameterError):
        field_new(6)
    with pytest.raises(InvalidParameterError):
        field_new(2048)


def test_smallest_irreducible_gf4():
    # x^2 + x + 1 is the only monic irreducible quadratic over GF(2)
    assert field_new(4).irreducible == (1, 1, 1)


def test_rank_counts_invariant_under_modulus_choice():
    # GF(8) has two monic irreducible cubics; rank statistics cannot depend
    # on which one backs the tables.
    for mod in ([1, 1, 0, 1], [1, 0, 1, 1]):
        f = field_new(8, irreducible=mod)
        counts = [0, 0, 0]
        for M in matrices_iter(2, 2, f):
            counts[rank(M, f)] += 1
        assert counts == [mu(t, 2, 2, 8) for t in range(3)]
    with pytest.raises(InvalidParameterError):
        field_new(8, irreducible=[1, 1, 1, 1])  # reducible


@pytest.mark.parametrize("q", [2, 3, 4])
def test_rank_matches_mu(q):
    f = field_new(q)
    for ell, m in ((1, 2), (2, 2), (2, 3)):
        counts = [0] * (ell + 1)
        for M in matrices_iter(ell, m, f):
            counts[rank(M, f)] += 1
        assert counts == [mu(t, ell, m, q) for t in range(ell + 1)]


def test_rank_transpose_invariant():
    f = field_new(3)
    for M in matrices_iter(2, 3, f):
        assert rank(M, f) == rank(M.transpose(), f)


def test_partial_trace():
    f = field_new(2)
    M = GfMatrix(2, 2, (1, 0, 1, 1))
    assert partial_trace(M, 0, f) == 0
    assert partial_trace(M, 1, f) == 1
    assert partial_trace(M, 2, f) == 0  # 1 + 1 = 0 in GF(2)
    with pytest.raises(InvalidParameterError):
        partial_trace(M, 3, f)


def test_matrices_iter_order_and_partition():
    f = field_new(3)
    full = [M.entries for M in matrices_iter(2, 2, f)]
    assert len(full) == 3**4
    assert full == sorted(full)
    parts = [
        M.entries for d in range(3) for M in matrices_iter(2, 2, f, prefix=(d,))
    ]
    assert parts == full


def test_matrices_iter_guard():
    f = field_new(2)
    with pytest.raises(ResourceLimitError):
        next(matrices_iter(3, 3, f, guard=100))


def test_canonical_rep():
    f = field_new(3)
    M = GfMatrix(1, 2, (2, 1))
    C = canonical_rep(M, f)
    assert C.entries[0] == 1
    # all nonzero scalings share one representative
    for lam in (1, 2):
        scaled = GfMatrix(1, 2, tuple(int(f.mul[lam, x]) for x in M.entries))
        assert canonical_rep(scaled, f) == C
    with pytest.raises(InvalidParameterError):
        canonical_rep(GfMatrix(1, 2, (0, 0)), f)


def test_projective_classes_partition_nonzero_matrices():
    q = 4
    f = field_new(q)
    reps = set()
    nonzero = 0
    for M in matrices_iter(1, 3, f):
        if M.is_zero():
            continue
        nonzero += 1
        reps.add(canonical_rep(M, f).entries)
    assert nonzero == q**3 - 1
    assert len(reps) == (q**3 - 1) // (q - 1)


def test_gfmatrix_shape_validation():
    with pytest.raises(InvalidParameterError):
        GfMatrix(2, 2, (1, 2, 3))
    f = field_new(2)
    with pytest.raises(InvalidParameterError):
        rank(GfMatrix(1, 1, (5,)), f)
