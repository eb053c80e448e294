"""Brute-force ground truth.

Every quantity the formula engine computes in closed form is recomputed here
by direct enumeration: rank histograms, partial-trace counts, rank-slice
statistics, codeword weights, subcode support weights and exhaustive
generalized Hamming weights.  The only algebra shared with the formula side
is field arithmetic itself; no q-analog identities are used.

Enumerations refuse to start (ResourceLimitError) rather than estimate when
a guard would be exceeded.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import (
    InternalConsistencyError,
    InvalidParameterError,
    ResourceLimitError,
)
from .gfield import DEFAULT_ENUM_GUARD, FieldTables, GfMatrix, field_new, rank
from .qcombin import Params, exact_div, gaussian_binomial

DEFAULT_SUBSPACE_GUARD = 10**6

_stats_memo: dict[tuple[int, int, int], tuple[np.ndarray, np.ndarray]] = {}


def _check_enum_guard(q: int, ell: int, m: int, guard: int) -> None:
    total = q ** (ell * m)
    if total > guard:
        raise ResourceLimitError(
            f"enumerating {total} = {q}^{ell * m} matrices exceeds the "
            f"enumeration guard {guard}"
        )


def enumeration_stats(
    params: Params,
    guard: int = DEFAULT_ENUM_GUARD,
    field: FieldTables | None = None,
    jobs: int = 1,
) -> tuple[np.ndarray, np.ndarray]:
    """Full-sweep slice statistics (card, nz) for all q^(ell*m) matrices.

    See kernels.slice_stats for the array layout.  Results are memoized per
    (q, ell, m); parallel partitioned runs merge by addition, so the result
    is identical for any job count.
    """
    q, ell, m = params.q, params.ell, params.m
    key = (q, ell, m)
    if key in _stats_memo:
        return _stats_memo[key]
    _check_enum_guard(q, ell, m, guard)
    if field is None:
        field = field_new(q)
    total = q ** (ell * m)
    if jobs <= 1:
        out = kernels.slice_stats(ell, m, field)
    else:
        bounds = [total * i // jobs for i in range(jobs + 1)]
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            parts = list(
                pool.map(
                    lambda se: kernels.slice_stats(ell, m, field, se[0], se[1]),
                    zip(bounds, bounds[1:]),
                )
            )
        card = sum(p[0] for p in parts)
        nz = sum(p[1] for p in parts)
        out = (card, nz)
    _stats_memo[key] = out
    return out


@dataclass(frozen=True)
class RankHistogram:
    params: Params
    counts: tuple[int, ...]  # indexed by rank 0..ell


def count_by_rank(params: Params, guard: int = DEFAULT_ENUM_GUARD) -> RankHistogram:
    """Exhaustive rank histogram of all ell x m matrices over GF(q)."""
    card, _ = enumeration_stats(params, guard)
    ell = params.ell
    # at r = ell the prefix rank equals the total rank
    counts = tuple(int(card[ell, :, t].sum()) for t in range(ell + 1))
    return RankHistogram(params, counts)


def count_nonzero_trace(
    r: int, t: int, params: Params, guard: int = DEFAULT_ENUM_GUARD
) -> int:
    """Exhaustive count of rank-t matrices with nonzero r-th partial trace."""
    if not 1 <= r <= params.ell or not 0 <= t <= params.ell:
        raise InvalidParameterError(f"need 1 <= r <= ell, 0 <= t <= ell; got {r}, {t}")
    _, nz = enumeration_stats(params, guard)
    return int(nz[r, :, t].sum())


def count_slice(
    r: int, s: int, t: int, params: Params, guard: int = DEFAULT_ENUM_GUARD
) -> tuple[int, int]:
    """Exhaustive (cardinality, nonzero-trace count) of the (r, s)-slice at rank t."""
    ell = params.ell
    if not 1 <= r <= ell or not 0 <= s <= ell or not 0 <= t <= ell:
        raise InvalidParameterError(f"bad slice key r={r}, s={s}, t={t}")
    card, nz = enumeration_stats(params, guard)
    return int(card[r, s, t]), int(nz[r, s, t])


def projective_points(
    t: int,
    params: Params,
    field: FieldTables,
    guard: int = DEFAULT_ENUM_GUARD,
):
    """Canonical representatives of the projective rank-<=t locus, in
    lexicographic order (leading nonzero entry scaled to 1)."""
    q, ell, m = params.q, params.ell, params.m
    _check_enum_guard(q, ell, m, guard)
    for entries in itertools.product(range(q), repeat=ell * m):
        lead = next((x for x in entries if x), None)
        if lead != 1:
            continue
        M = GfMatrix(ell, m, entries)
        if rank(M, field) <= t:
            yield M


def codeword_weight_direct(
    f: GfMatrix,
    t: int,
    params: Params,
    field: FieldTables | None = None,
    guard: int = DEFAULT_ENUM_GUARD,
) -> int:
    """Hamming weight of the codeword of the linear form with coefficient
    matrix f, by evaluating it at every canonical projective point."""
    if field is None:
        field = field_new(params.q)
    if (f.rows, f.cols) != (params.ell, params.m):
        raise InvalidParameterError("coefficient matrix shape mismatch")
    add, mul = field.add, field.mul
    weight = 0
    for M in projective_points(t, params, field, guard):
        acc = 0
        for a, b in zip(f.entries, M.entries):
            acc = add[acc, mul[a, b]]
        if acc:
            weight += 1
    return weight


def _span_words(basis: np.ndarray, field: FieldTables) -> np.ndarray:
    """All q^s words spanned by the rows of basis, as an array (q^s, n).
    The first row is the zero word."""
    q = field.q
    add, mul = field.add, field.mul
    n = basis.shape[1]
    words = np.zeros((1, n), dtype=np.int64)
    scalars = np.arange(q, dtype=np.int64)
    for b in basis:
        scaled = mul[scalars[:, None], b[None, :]]  # (q, n)
        words = add[words[:, None, :], scaled[None, :, :]].reshape(-1, n)
    return words


def _gf_rank_rows(rows: np.ndarray, field: FieldTables) -> int:
    return rank(
        GfMatrix(rows.shape[0], rows.shape[1], tuple(int(x) for x in rows.ravel())),
        field,
    )


def support_weight(basis, field: FieldTables) -> int:
    """Support weight of the subcode spanned by `basis`.

    Computed two ways: as the union of the basis supports and via the
    average-weight identity sum_w / (q^s - q^(s-1)); the routes must agree.
    """
    arr = np.asarray([list(b) for b in basis], dtype=np.int64)
    if arr.ndim != 2 or arr.shape[0] == 0:
        raise InvalidParameterError("basis must be a nonempty list of equal-length words")
    s = arr.shape[0]
    if _gf_rank_rows(arr, field) != s:
        raise InvalidParameterError("basis vectors are linearly dependent")
    direct = int((arr != 0).any(axis=0).sum())
    q = field.q
    words = _span_words(arr, field)
    total = int((words != 0).sum())
    averaged = exact_div(total, q**s - q ** (s - 1), "support_weight average")
    if direct != averaged:
        raise InternalConsistencyError(
            f"support weight routes disagree: union {direct}, average {averaged}"
        )
    return direct


def rref_bases(k: int, s: int, q: int, guard: int = DEFAULT_SUBSPACE_GUARD):
    """Yield the reduced-row-echelon generator matrix (as an (s, k) array) of
    every s-dimensional subspace of GF(q)^k, each exactly once."""
    count = gaussian_binomial(k, s, q)
    if count > guard:
        raise ResourceLimitError(
            f"{count} subspaces of dimension {s} exceed the subspace guard {guard}"
        )
    for pivots in itertools.combinations(range(k), s):
        free = [
            (i, j)
            for i in range(s)
            for j in range(pivots[i] + 1, k)
            if j not in pivots
        ]
        base = np.zeros((s, k), dtype=np.int64)
        for i, p in enumerate(pivots):
            base[i, p] = 1
        for vals in itertools.product(range(q), repeat=len(free)):
            mat = base.copy()
            for (i, j), v in zip(free, vals):
                mat[i, j] = v
            yield mat


def ghw_exhaustive(code, s: int, guard: int = DEFAULT_SUBSPACE_GUARD) -> int:
    """Minimum support weight over all s-dimensional subcodes, by exhausting
    canonical reduced-echelon bases of subspaces of the message space."""
    field = code.field
    G = code.generator  # (k, n)
    k = G.shape[0]
    if not 1 <= s <= k:
        raise InvalidParameterError(f"need 1 <= s <= k={k}, got {s}")
    add, mul = field.add, field.mul
    best = None
    for coeffs in rref_bases(k, s, field.q, guard):
        # basis codewords: rows of coeffs (s, k) times G (k, n)
        words = np.zeros((s, G.shape[1]), dtype=np.int64)
        for j in range(k):
            col = coeffs[:, j]
            if col.any():
                words = add[words, mul[col[:, None], G[j][None, :]]]
        supp = int((words != 0).any(axis=0).sum())
        if best is None or supp < best:
            best = supp
    return best


def codeword_weights_all(code) -> dict[int, int]:
    """Exhaustive weight distribution {weight: count} over all q^k codewords."""
    words = _span_words(code.generator, code.field)
    weights = (words != 0).sum(axis=1)
    vals, counts = np.unique(weights, return_counts=True)
    return {int(v): int(c) for v, c in zip(vals, counts)}


def dual_min_distance_exhaustive(code, guard: int = DEFAULT_ENUM_GUARD) -> int:
    """Minimum weight of the dual code, by enumerating all dual codewords."""
    field = code.field
    q = field.q
    G = code.generator
    k, n = G.shape
    if q ** (n - k) > guard:
        raise ResourceLimitError(
            f"enumerating {q ** (n - k)} dual codewords exceeds guard {guard}"
        )
    add, mul, neg, inv = field.add, field.mul, field.neg, field.inv
    # reduced row echelon form of G
    R = G.copy()
    pivots = []
    row_i = 0
    for col in range(n):
        piv = next((r for r in range(row_i, k) if R[r, col]), None)
        if piv is None:
            continue
        R[[row_i, piv]] = R[[piv, row_i]]
        R[row_i] = mul[inv[R[row_i, col]], R[row_i]]
        for r in range(k):
            if r != row_i and R[r, col]:
                R[r] = add[R[r], neg[mul[R[r, col], R[row_i]]]]
        pivots.append(col)
        row_i += 1
        if row_i == k:
            break
    if row_i != k:
        raise InternalConsistencyError("generator matrix is not full rank")
    nonpivots = [j for j in range(n) if j not in pivots]
    basis = np.zeros((len(nonpivots), n), dtype=np.int64)
    for b, j in enumerate(nonpivots):
        basis[b, j] = 1
        for i, p in enumerate(pivots):
            basis[b, p] = neg[R[i, j]]
    words = _span_words(basis, field)
    weights = (words != 0).sum(axis=1)
    return int(weights[1:].min())
