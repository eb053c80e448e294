import numpy as np
import pytest

from detcodes.codes import build_code
from detcodes.errors import (
    InternalConsistencyError,
    InvalidParameterError,
    ResourceLimitError,
)
from detcodes.gfield import GfMatrix, field_new
from detcodes.oracle import (
    codeword_weight_direct,
    codeword_weights_all,
    count_by_rank,
    count_nonzero_trace,
    count_slice,
    dual_min_distance_exhaustive,
    enumeration_stats,
    ghw_exhaustive,
    projective_points,
    rref_bases,
    support_weight,
)
from detcodes.qcombin import Params, gaussian_binomial, mu, projective_count
from detcodes.spectrum import w_hat, wfrak_hat


def test_count_by_rank_known_values():
    assert count_by_rank(Params(2, 2, 2)).counts == (1, 9, 6)
    hist = count_by_rank(Params(3, 2, 2))
    assert hist.counts == tuple(mu(t, 2, 2, 3) for t in range(3))


def test_count_nonzero_trace_known():
    assert count_nonzero_trace(1, 1, Params(2, 2, 2)) == 4
    for r in (1, 2):
        for t in (1, 2):
            params = Params(3, 2, 3)
            assert count_nonzero_trace(r, t, params) == 2 * wfrak_hat(r, t, params)


def test_count_slice_known():
    params = Params(2, 2, 2)
    assert count_slice(1, 1, 1, params) == (6, 4)
    assert count_slice(1, 0, 1, params) == (3, 0)


def test_enumeration_guard():
    with pytest.raises(ResourceLimitError):
        enumeration_stats(Params(2, 5, 6), guard=1000)


def test_enumeration_parallel_merge_identical():
    # thread partitioning must not change any count
    from detcodes import oracle

    oracle._stats_memo.clear()
    a = enumeration_stats(Params(3, 2, 2), jobs=1)
    oracle._stats_memo.clear()
    b = enumeration_stats(Params(3, 2, 2), jobs=3)
    assert np.array_equal(a[0], b[0]) and np.array_equal(a[1], b[1])


def test_projective_points():
    params = Params(2, 2, 3)
    field = field_new(2)
    for t in (1, 2):
        pts = list(projective_points(t, params, field))
        assert len(pts) == projective_count(t, 2, 3, 2)
        for M in pts:
            lead = next(x for x in M.entries if x)
            assert lead == 1
        assert [M.entries for M in pts] == sorted(M.entries for M in pts)


def test_codeword_weight_direct_matches_formula():
    params = Params(2, 2, 3)
    field = field_new(2)
    # rank-1 and rank-2 coefficient matrices
    f1 = GfMatrix(2, 3, (1, 0, 0, 0, 0, 0))
    f2 = GfMatrix(2, 3, (1, 0, 0, 0, 1, 0))
    for t in (1, 2):
        assert codeword_weight_direct(f1, t, params, field) == w_hat(1, t, params)
        assert codeword_weight_direct(f2, t, params, field) == w_hat(2, t, params)


def test_support_weight_routes_and_validation():
    field = field_new(2)
    assert support_weight([(1, 0, 1, 0), (0, 1, 1, 0)], field) == 3
    with pytest.raises(InvalidParameterError):
        support_weight([(1, 0), (1, 0)], field)  # dependent


def test_rref_bases_counts():
    for q in (2, 3):
        for k in range(1, 5):
            for s in range(1, k + 1):
                bases = list(rref_bases(k, s, q))
                assert len(bases) == gaussian_binomial(k, s, q)
                # all distinct row spaces: RREF is a canonical form
                assert len({b.tobytes() for b in bases}) == len(bases)
    with pytest.raises(ResourceLimitError):
        next(rref_bases(30, 15, 2, guard=10**6))


def test_ghw_exhaustive_small():
    code = build_code(1, Params(2, 2, 2))
    assert [ghw_exhaustive(code, s) for s in (1, 2, 3, 4)] == [4, 6, 8, 9]


def test_codeword_weights_all_total():
    code = build_code(2, Params(2, 2, 2))
    dist = codeword_weights_all(code)
    assert sum(dist.values()) == 2**4
    assert dist[0] == 1


def test_dual_min_distance_exhaustive():
    for ell, m in ((2, 2), (2, 3)):
        code = build_code(1, Params(2, ell, m))
        assert dual_min_distance_exhaustive(code) == 3
