"""Construction of the determinantal evaluation code and its parameters:
generator matrix over a fixed point ordering, weight distribution, minimum
distance, minimum-weight codeword count, dual distance and the generalized
Hamming weight table with per-entry provenance.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import oracle
from .errors import InternalConsistencyError, InvalidParameterError
from .gfield import DEFAULT_ENUM_GUARD, FieldTables, GfMatrix, field_new
from .qcombin import Params, exact_div, mu, nu, projective_count
from .spectrum import _w_hat, weight_table

GHW_FORMULA_LOW = "formula-low"
GHW_FORMULA_M_PLUS_1 = "formula-m-plus-1"
GHW_FORMULA_HIGH = "formula-high"
GHW_REED_MULLER = "reed-muller"
GHW_EXHAUSTIVE = "exhaustive"
GHW_UNAVAILABLE = "unavailable"


@dataclass(frozen=True)
class Code:
    """The evaluation code over the canonical, lexicographically sorted
    point list of the projective rank-<=t locus."""

    params: Params
    t: int
    field: FieldTables
    points: tuple[GfMatrix, ...]
    generator: np.ndarray  # (k, n), row (i, j) evaluates X_ij

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def k(self) -> int:
        return self.params.ell * self.params.m


def build_code(
    t: int,
    params: Params,
    field: FieldTables | None = None,
    guard: int = DEFAULT_ENUM_GUARD,
) -> Code:
    """Enumerate canonical projective points of rank <= t and fill the
    generator matrix.  Deterministic: points come out already sorted because
    the underlying enumeration is lexicographic."""
    if not 1 <= t <= params.ell:
        raise InvalidParameterError(f"need 1 <= t <= ell, got t={t}")
    if field is None:
        field = field_new(params.q)
    points = tuple(oracle.projective_points(t, params, field, guard))
    expected = projective_count(t, params.ell, params.m, params.q)
    if len(points) != expected:
        raise InternalConsistencyError(
            f"point count {len(points)} != projective count {expected}"
        )
    # generator row for X_ij holds the (i, j) entry of every point
    gen = np.array([M.entries for M in points], dtype=np.int64).T.copy()
    return Code(params, t, field, points, gen)


def weight_distribution(t: int, params: Params) -> dict[int, int]:
    """{weight: codeword count}.  The count at weight w_hat_r is mu_r, with
    ranks of equal weight merged; no codeword enumeration involved."""
    wt = weight_table(t, params)
    dist: dict[int, int] = {0: 1}
    for r in range(1, params.ell + 1):
        w = wt.w[r]
        dist[w] = dist.get(w, 0) + mu(r, params.ell, params.m, params.q)
    return dist


def min_distance(t: int, params: Params) -> int:
    if not 1 <= t <= params.ell:
        raise InvalidParameterError(f"need 1 <= t <= ell, got t={t}")
    q, ell, m = params.q, params.ell, params.m
    return q ** (ell + m - 2) * nu(t - 1, ell - 1, m - 1, q)


def min_weight_count(t: int, params: Params) -> int:
    """Number of minimum-weight codewords: mu_1 for t < ell; for t = ell all
    q^(ell*m) - 1 nonzero codewords share the single nonzero weight."""
    if not 1 <= t <= params.ell:
        raise InvalidParameterError(f"need 1 <= t <= ell, got t={t}")
    q, ell, m = params.q, params.ell, params.m
    if t == ell:
        return q ** (ell * m) - 1
    return mu(1, ell, m, q)


@dataclass(frozen=True)
class GhwEntry:
    s: int
    value: int | None
    method: str
    cross_checks: tuple[tuple[str, int], ...] = ()


def _ghw_candidates(s: int, t: int, params: Params) -> list[tuple[str, int]]:
    q, ell, m = params.q, params.ell, params.m
    n_hat = projective_count(t, ell, m, q)
    if t == ell:
        val = n_hat - sum(q**i for i in range(ell * m - s))
        return [(GHW_REED_MULLER, val)]
    out = []
    if 1 <= s <= m:
        val = exact_div(q**s - 1, q - 1) * q ** (ell + m - s - 1) * nu(
            t - 1, ell - 1, m - 1, q
        )
        out.append((GHW_FORMULA_LOW, val))
    if s == m + 1 and ell >= 2:
        w1 = _w_hat(1, t, ell, m, q)
        w2 = _w_hat(2, t, ell, m, q)
        val = exact_div(
            (q**m + q**2 - q - 1) * w1 + (q - 1) * (q**m - q) * w2,
            q ** (m + 1) - q**m,
            "ghw m+1",
        )
        out.append((GHW_FORMULA_M_PLUS_1, val))
    if (ell - t) * m <= s <= ell * m:
        val = n_hat - sum(q**i for i in range(ell * m - s))
        out.append((GHW_FORMULA_HIGH, val))
    return out


def ghw(
    s: int,
    t: int,
    params: Params,
    field: FieldTables | None = None,
    exhaustive: bool = False,
    subspace_guard: int = oracle.DEFAULT_SUBSPACE_GUARD,
    enum_guard: int = DEFAULT_ENUM_GUARD,
    code: Code | None = None,
) -> GhwEntry:
    """The s-th generalized Hamming weight, dispatched by formula regime.

    All applicable formulas are evaluated and must agree exactly.  With
    `exhaustive` set (or when no formula applies and the guards allow it)
    the subcode search runs as well and is held to the same standard.
    """
    ell, m = params.ell, params.m
    if not 1 <= s <= ell * m:
        raise InvalidParameterError(f"need 1 <= s <= ell*m = {ell * m}, got s={s}")
    if not 1 <= t <= ell:
        raise InvalidParameterError(f"need 1 <= t <= ell, got t={t}")
    candidates = _ghw_candidates(s, t, params)
    values = {v for _, v in candidates}
    if len(values) > 1:
        raise InternalConsistencyError(
            f"GHW regimes disagree at s={s}, t={t}: {candidates}"
        )
    run_oracle = exhaustive or not candidates
    if run_oracle:
        try:
            if code is None:
                code = build_code(t, params, field, enum_guard)
            ex = oracle.ghw_exhaustive(code, s, subspace_guard)
            candidates = candidates + [(GHW_EXHAUSTIVE, ex)]
            if values and ex not in values:
                raise InternalConsistencyError(
                    f"exhaustive GHW {ex} disagrees with formulas {sorted(values)} "
                    f"at s={s}, t={t}"
                )
        except oracle.ResourceLimitError:
            if not candidates:
                return GhwEntry(s, None, GHW_UNAVAILABLE)
    if not candidates:
        return GhwEntry(s, None, GHW_UNAVAILABLE)
    method, value = candidates[0]
    return GhwEntry(s, value, method, tuple(candidates[1:]))


def ghw_table(
    t: int,
    params: Params,
    field: FieldTables | None = None,
    exhaustive: bool = False,
    subspace_guard: int = oracle.DEFAULT_SUBSPACE_GUARD,
    enum_guard: int = DEFAULT_ENUM_GUARD,
) -> list[GhwEntry]:
    code = None
    if exhaustive:
        try:
            code = build_code(t, params, field, enum_guard)
        except oracle.ResourceLimitError:
            code = None
    return [
        ghw(s, t, params, field, exhaustive, subspace_guard, enum_guard, code)
        for s in range(1, params.ell * params.m + 1)
    ]


def dual_min_distance(
    t: int,
    params: Params,
    verify: bool = False,
    field: FieldTables | None = None,
    guard: int = DEFAULT_ENUM_GUARD,
) -> int:
    """The dual code has minimum distance exactly 3.

    With `verify`, confirm on the constructed code that no generator column
    is zero, no two columns are proportional (so no dual word of weight 1 or
    2), and exhibit three collinear points (a dual word of weight 3)."""
    if not 1 <= t <= params.ell:
        raise InvalidParameterError(f"need 1 <= t <= ell, got t={t}")
    if not verify:
        return 3
    if field is None:
        field = field_new(params.q)
    code = build_code(t, params, field, guard)
    G = code.generator
    n = G.shape[1]
    if not (G != 0).any(axis=0).all():
        raise InternalConsistencyError("generator has a zero column")
    # distinct projective points: columns are pairwise independent
    cols = set()
    inv, mul = field.inv, field.mul
    for j in range(n):
        col = G[:, j]
        lead = col[np.flatnonzero(col)[0]]
        canon = tuple(int(x) for x in mul[inv[lead], col])
        if canon in cols:
            raise InternalConsistencyError(f"columns proportional at {j}")
        cols.add(canon)
    # exhibit three collinear points: P, Q, P + lambda*Q for some lambda != 0
    add = field.add
    point_index = {M.entries: i for i, M in enumerate(code.points)}
    for i, P in enumerate(code.points):
        for j in range(i + 1, n):
            Q = code.points[j]
            for lam in range(1, field.q):
                comb = tuple(
                    int(add[a, mul[lam, b]]) for a, b in zip(P.entries, Q.entries)
                )
                if not any(comb):
                    continue
                lead = next(x for x in comb if x)
                canon = tuple(int(mul[inv[lead], x]) for x in comb)
                if canon in point_index:
                    return 3
    raise InternalConsistencyError("no three collinear points found")


def export_document(code: Code) -> dict:
    """JSON-ready description of the code: parameters, field, points and
    generator rows.  Big counts are decimal strings; entries are small ints."""
    params, t = code.params, code.t
    field = code.field
    dist = weight_distribution(t, params)
    return {
        "version": "1",
        "params": {
            "q": str(params.q),
            "ell": str(params.ell),
            "m": str(params.m),
            "t": str(t),
        },
        "field": {
            "p": str(field.p),
            "e": str(field.e),
            "irreducible": [str(c) for c in field.irreducible],
        },
        "n": str(code.n),
        "k": str(code.k),
        "min_distance": str(min_distance(t, params)),
        "min_weight_count": str(min_weight_count(t, params)),
        "dual_min_distance": str(dual_min_distance(t, params)),
        "weight_distribution": {str(w): str(c) for w, c in sorted(dist.items())},
        "points": [[int(x) for x in M.entries] for M in code.points],
        "generator": [[int(x) for x in row] for row in code.generator],
    }
