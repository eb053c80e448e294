"""Hot enumeration kernels.

The one expensive operation in this package is the exhaustive sweep over all
q^(ell*m) matrices that classifies each matrix by total rank t, by the rank s
of its first r rows, and by whether its r-th partial trace is nonzero, for
every r at once.  Everything the brute-force oracle reports is an exact-count
reduction of the (card, nz) arrays produced here.

Two interchangeable backends exist:

* ``numba`` - a per-matrix @njit loop (default when numba imports cleanly);
* ``numpy`` - batched Gaussian elimination over chunks of matrices.

Select explicitly with the DETCODE_BACKEND environment variable ("numba" or
"numpy").  Both backends are bit-identical; ``bench/benchmark.py`` compares
their throughput.

Counts are accumulated in int64, which is safe because the enumeration guard
caps the number of matrices well below 2^63.
"""

from __future__ import annotations

import os

import numpy as np

from .errors import InvalidParameterError
from .gfield import FieldTables

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAVE_NUMBA = False


def _slice_stats_python(ell, m, q, add, neg, mul, inv, start, stop, card, nz):
    n = ell * m
    pows = np.empty(n, dtype=np.int64)
    acc = 1
    for pos in range(n - 1, -1, -1):
        pows[pos] = acc
        acc *= q
    ent = np.empty((ell, m), dtype=np.int64)
    row = np.empty(m, dtype=np.int64)
    basis = np.empty((ell, m), dtype=np.int64)
    pivcol = np.empty(ell, dtype=np.int64)
    prefix_rank = np.empty(ell, dtype=np.int64)
    tau_nz = np.empty(ell, dtype=np.int64)
    for idx in range(start, stop):
        rem = idx
        for pos in range(n):
            d = rem // pows[pos]
            rem -= d * pows[pos]
            ent[pos // m, pos % m] = d
        rnk = 0
        tr = 0
        for i in range(ell):
            tr = add[tr, ent[i, i]]
            for k in range(m):
                row[k] = ent[i, k]
            for b in range(rnk):
                j = pivcol[b]
                c = row[j]
                if c != 0:
                    for k in range(j, m):
                        row[k] = add[row[k], neg[mul[c, basis[b, k]]]]
            piv = -1
            for k in range(m):
                if row[k] != 0:
                    piv = k
                    break
            if piv >= 0:
                cinv = inv[row[piv]]
                for k in range(m):
                    basis[rnk, k] = mul[cinv, row[k]]
                pivcol[rnk] = piv
                rnk += 1
            prefix_rank[i] = rnk
            tau_nz[i] = 1 if tr != 0 else 0
        t = rnk
        for i in range(ell):
            card[i + 1, prefix_rank[i], t] += 1
            nz[i + 1, prefix_rank[i], t] += tau_nz[i]


if HAVE_NUMBA:
    _slice_stats_numba = numba.njit(cache=True)(_slice_stats_python)


def _slice_stats_numpy(ell, m, q, add, neg, mul, inv, start, stop, card, nz,
                       chunk=1 << 15):
    n = ell * m
    pows = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    for lo in range(start, stop, chunk):
        hi = min(lo + chunk, stop)
        idx = np.arange(lo, hi, dtype=np.int64)
        B = idx.shape[0]
        ent = (idx[:, None] // pows[None, :]) % q  # (B, n)
        ent = ent.reshape(B, ell, m)
        which = np.arange(B)
        basis = np.zeros((B, ell, m), dtype=np.int64)
        pivcol = np.zeros((B, ell), dtype=np.int64)
        rnk = np.zeros(B, dtype=np.int64)
        tr = np.zeros(B, dtype=np.int64)
        prefix_rank = np.empty((B, ell), dtype=np.int64)
        tau_nz = np.empty((B, ell), dtype=np.int64)
        for i in range(ell):
            tr = add[tr, ent[:, i, i]]
            tau_nz[:, i] = tr != 0
            row = ent[:, i, :].copy()
            for b in range(min(i, ell)):
                active = rnk > b
                j = np.where(active, pivcol[:, b], 0)
                c = np.where(active, row[which, j], 0)
                hit = c != 0
                if hit.any():
                    reduced = add[row, neg[mul[c[:, None], basis[:, b, :]]]]
                    row = np.where(hit[:, None], reduced, row)
            nzmask = row != 0
            has = nzmask.any(axis=1)
            piv = nzmask.argmax(axis=1)
            lead = row[which, piv]
            cinv = inv[np.where(has, lead, 1)]
            norm = mul[cinv[:, None], row]
            sel = np.flatnonzero(has)
            basis[sel, rnk[sel], :] = norm[sel]
            pivcol[sel, rnk[sel]] = piv[sel]
            rnk += has
            prefix_rank[:, i] = rnk
        t = rnk
        side = ell + 1
        for i in range(ell):
            flat = (i + 1) * side * side + prefix_rank[:, i] * side + t
            np.add.at(card.reshape(-1), flat, 1)
            np.add.at(nz.reshape(-1), flat, tau_nz[:, i])


def default_backend() -> str:
    env = os.environ.get("DETCODE_BACKEND")
    if env:
        if env not in ("numba", "numpy"):
            raise InvalidParameterError(
                f"DETCODE_BACKEND must be 'numba' or 'numpy', got {env!r}"
            )
        if env == "numba" and not HAVE_NUMBA:
            raise InvalidParameterError("DETCODE_BACKEND=numba but numba is unavailable")
        return env
    return "numba" if HAVE_NUMBA else "numpy"


def slice_stats(
    ell: int,
    m: int,
    field: FieldTables,
    start: int = 0,
    stop: int | None = None,
    backend: str | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """Sweep matrix indices [start, stop) of the lexicographic enumeration.

    Returns (card, nz), both of shape (ell+1, ell+1, ell+1) indexed
    [r, s, t]: card counts matrices of rank t whose first r rows have rank s,
    nz counts the subset with nonzero r-th partial trace.  Partition results
    merge by plain addition.
    """
    if not 1 <= ell <= m:
        raise InvalidParameterError(f"need 1 <= ell <= m, got ell={ell}, m={m}")
    q = field.q
    total = q ** (ell * m)
    if stop is None:
        stop = total
    if not 0 <= start <= stop <= total:
        raise InvalidParameterError(f"bad index range [{start}, {stop}) of {total}")
    if backend is None:
        backend = default_backend()
    card = np.zeros((ell + 1, ell + 1, ell + 1), dtype=np.int64)
    nz = np.zeros_like(card)
    add = np.ascontiguousarray(field.add)
    mul = np.ascontiguousarray(field.mul)
    neg = np.ascontiguousarray(field.neg)
    inv = np.ascontiguousarray(field.inv)
    if backend == "numba":
        _slice_stats_numba(ell, m, q, add, neg, mul, inv, start, stop, card, nz)
    elif backend == "numpy":
        _slice_stats_numpy(ell, m, q, add, neg, mul, inv, start, stop, card, nz)
    else:
        raise InvalidParameterError(f"unknown backend {backend!r}")
    return card, nz
