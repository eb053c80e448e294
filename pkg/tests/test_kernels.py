import numpy as np
import pytest

from detcodes.errors import InvalidParameterError
from detcodes.gfield import GfMatrix, field_new, matrices_iter, partial_trace, rank
from detcodes.kernels import HAVE_NUMBA, default_backend, slice_stats
from detcodes.qcombin import mu

CASES = [(2, 2, 2), (2, 2, 3), (3, 2, 2), (4, 2, 2), (2, 3, 3)]


def reference_stats(q, ell, m):
    """Independent per-matrix recount using the plain matrix primitives."""
    f = field_new(q)
    card = np.zeros((ell + 1, ell + 1, ell + 1), dtype=np.int64)
    nz = np.zeros_like(card)
    for M in matrices_iter(ell, m, f):
        t = rank(M, f)
        for r in range(1, ell + 1):
            s = rank(GfMatrix(r, m, M.entries[: r * m]), f)
            card[r, s, t] += 1
            if partial_trace(M, min(r, m), f) != 0:
                nz[r, s, t] += 1
    return card, nz


@pytest.mark.parametrize("q,ell,m", CASES)
def test_backends_match_reference(q, ell, m):
    f = field_new(q)
    ref_card, ref_nz = reference_stats(q, ell, m)
    backends = ["numpy"] + (["numba"] if HAVE_NUMBA else [])
    for backend in backends:
        card, nz = slice_stats(ell, m, f, backend=backend)
        assert np.array_equal(card, ref_card), backend
        assert np.array_equal(nz, ref_nz), backend


@pytest.mark.skipif(not HAVE_NUMBA, reason="numba not installed")
def test_backends_bit_identical():
    f = field_new(3)
    a = slice_stats(2, 3, f, backend="numba")
    b = slice_stats(2, 3, f, backend="numpy")
    assert np.array_equal(a[0], b[0]) and np.array_equal(a[1], b[1])


def test_partition_merge():
    f = field_new(2)
    total = 2 ** (2 * 3)
    full = slice_stats(2, 3, f)
    for njobs in (2, 3, 5):
        bounds = [total * i // njobs for i in range(njobs + 1)]
        card = sum(slice_stats(2, 3, f, a, b)[0] for a, b in zip(bounds, bounds[1:]))
        nz = sum(slice_stats(2, 3, f, a, b)[1] for a, b in zip(bounds, bounds[1:]))
        assert np.array_equal(card, full[0]) and np.array_equal(nz, full[1])


def test_totals():
    for q, ell, m in CASES:
        f = field_new(q)
        card, nz = slice_stats(ell, m, f)
        assert card[ell].sum() == q ** (ell * m)
        # full-height slice ranks agree with the rank distribution
        for t in range(ell + 1):
            assert card[ell, :, t].sum() == mu(t, ell, m, q)
        # nonzero-trace counts never exceed cardinalities
        assert (nz <= card).all()


def test_bad_range_and_backend():
    f = field_new(2)
    with pytest.raises(InvalidParameterError):
        slice_stats(2, 2, f, 5, 3)
    with pytest.raises(InvalidParameterError):
        slice_stats(2, 2, f, backend="fortran")
    with pytest.raises(InvalidParameterError):
        slice_stats(3, 2, f)  # more rows than columns is unsupported


def test_default_backend_env(monkeypatch):
    monkeypatch.setenv("DETCODE_BACKEND", "numpy")
    assert default_backend() == "numpy"
    monkeypatch.setenv("DETCODE_BACKEND", "cuda")
    with pytest.raises(InvalidParameterError):
        default_backend()
