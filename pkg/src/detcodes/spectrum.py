"""Closed forms for the weight spectra of determinantal codes.

Everything here is exact integer arithmetic.  Alternating sums may go
negative in intermediate values; only final counts and weights are
nonnegative.  Three independent routes exist to the same quantities (the
alternating eigenvalue sum, its factorial-ratio rewrite, and the rank-slice
decomposition) and the check_* predicates plus the test suite compare them
against one another and against brute-force enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParameterError
from .qcombin import (
    Params,
    binom2,
    exact_div,
    gaussian_binomial,
    gaussian_factorial_ratio,
    mu,
    nu,
)

# ---------------------------------------------------------------------------
# int-level implementations (q, ell, m as plain integers)
# ---------------------------------------------------------------------------


def _p_delsarte(t: int, r: int, ell: int, m: int, q: int) -> int:
    return sum(
        (1 if (t - i) % 2 == 0 else -1)  # t - i may be negative
        * q ** (i * m + binom2(t - i))
        * gaussian_binomial(ell - i, ell - t, q)
        * gaussian_binomial(ell - r, i, q)
        for i in range(ell + 1)
    )


def _p_alternative(t: int, r: int, ell: int, m: int, q: int) -> int:
    out = 0
    for s in range(r + 1):
        # for s > t the accompanying binomial vanishes; skip before forming
        # the (then non-integral) factorial ratio
        gb = gaussian_binomial(ell - r, t - s, q)
        if gb == 0:
            continue
        out += (
            q ** binom2(s)
            * (-1) ** s
            * gaussian_factorial_ratio(m - s, m - t, q)
            * q ** (s * (ell - r))
            * q ** binom2(t - s)
            * gaussian_binomial(r, s, q)
            * gb
        )
    return out


def _wfrak_hat(r: int, t: int, ell: int, m: int, q: int) -> int:
    if t == 0 or r == 0:
        return 0
    return exact_div(mu(t, ell, m, q) - _p_delsarte(t, r, ell, m, q), q, "wfrak_hat")


def _w_hat(r: int, t: int, ell: int, m: int, q: int) -> int:
    return sum(_wfrak_hat(r, s, ell, m, q) for s in range(1, t + 1))


def _slice_cardinality(r: int, s: int, t: int, ell: int, m: int, q: int) -> int:
    if s > t:
        return 0
    return (
        gaussian_factorial_ratio(m, m - t, q)
        * q ** (s * (ell - r))
        * q ** binom2(s)
        * q ** binom2(t - s)
        * gaussian_binomial(r, s, q)
        * gaussian_binomial(ell - r, t - s, q)
    )


def _slice_weight(r: int, s: int, t: int, ell: int, m: int, q: int) -> int:
    if s > t:
        return 0
    body = (
        q ** binom2(s)
        * (
            gaussian_factorial_ratio(m, m - t, q)
            - (-1) ** s * gaussian_factorial_ratio(m - s, m - t, q)
        )
        * q ** (s * (ell - r))
        * q ** binom2(t - s)
        * gaussian_binomial(r, s, q)
        * gaussian_binomial(ell - r, t - s, q)
    )
    return exact_div((q - 1) * body, q, "slice_weight")


def _a_quantity(r: int, t: int, ell: int, m: int, q: int) -> int:
    if t == 0:
        return 0
    return q**t * _wfrak_hat(r - 1, t, ell - 1, m - 1, q) + q ** (t - 1) * (
        mu(t, ell - 1, m, q) - mu(t, ell - 1, m - 1, q)
    )


# ---------------------------------------------------------------------------
# public API (Params-based)
# ---------------------------------------------------------------------------


def p_delsarte(t: int, r: int, params: Params) -> int:
    """Association-scheme eigenvalue P_t(r) as the alternating sum over i."""
    _check_tr(t, r, params)
    return _p_delsarte(t, r, params.ell, params.m, params.q)


def p_alternative(t: int, r: int, params: Params) -> int:
    """P_t(r) via the factorial-ratio sum over ranks of the leading rows."""
    _check_tr(t, r, params)
    return _p_alternative(t, r, params.ell, params.m, params.q)


def _check_tr(t: int, r: int, params: Params) -> None:
    if not 0 <= t <= params.ell or not 0 <= r <= params.ell:
        raise InvalidParameterError(
            f"need 0 <= t, r <= ell={params.ell}, got t={t}, r={r}"
        )


def wfrak_hat(r: int, t: int, params: Params) -> int:
    """Rank-t matrices with nonzero r-th partial trace, divided by q-1."""
    _check_tr(t, r, params)
    return _wfrak_hat(r, t, params.ell, params.m, params.q)


def w_hat(r: int, t: int, params: Params) -> int:
    """Weight of any codeword whose coefficient matrix has rank r."""
    if not 1 <= t <= params.ell or not 0 <= r <= params.ell:
        raise InvalidParameterError(
            f"need 1 <= t <= ell and 0 <= r <= ell, got t={t}, r={r}"
        )
    return _w_hat(r, t, params.ell, params.m, params.q)


def slice_cardinality(r: int, s: int, t: int, params: Params) -> int:
    """Number of rank-t matrices whose first r rows have rank s."""
    if not 1 <= r <= params.ell or not 0 <= s or not 0 <= t <= params.ell:
        raise InvalidParameterError(f"bad slice key r={r}, s={s}, t={t}")
    return _slice_cardinality(r, s, t, params.ell, params.m, params.q)


def slice_weight(r: int, s: int, t: int, params: Params) -> int:
    """Matrices in the (r, s)-slice of rank t with nonzero r-th partial trace."""
    if not 1 <= r <= params.ell or s < 1 or not 0 <= t <= params.ell:
        raise InvalidParameterError(f"bad slice key r={r}, s={s}, t={t}")
    return _slice_weight(r, s, t, params.ell, params.m, params.q)


def a_quantity(r: int, t: int, params: Params) -> int:
    """The quantity A(r, t) driving the weight recursion, defined for t < ell."""
    if not 1 <= r <= params.ell or not 0 <= t < params.ell:
        raise InvalidParameterError(f"need 1 <= r <= ell, 0 <= t < ell; got r={r}, t={t}")
    return _a_quantity(r, t, params.ell, params.m, params.q)


@dataclass(frozen=True)
class WeightTable:
    """The ell+1 codeword weights of the code at a given t, indexed by the
    rank of the coefficient matrix."""

    params: Params
    t: int
    w: tuple[int, ...]


def weight_table(t: int, params: Params) -> WeightTable:
    if not 1 <= t <= params.ell:
        raise InvalidParameterError(f"need 1 <= t <= ell, got t={t}")
    w = tuple(_w_hat(r, t, params.ell, params.m, params.q) for r in range(params.ell + 1))
    return WeightTable(params, t, w)


def check_identity_sum(r: int, params: Params) -> bool:
    """Does sum_{s=1}^{ell} P_s(r) equal -1?"""
    if not 1 <= r <= params.ell:
        raise InvalidParameterError(f"need 1 <= r <= ell, got r={r}")
    ell, m, q = params.ell, params.m, params.q
    return sum(_p_delsarte(s, r, ell, m, q) for s in range(1, ell + 1)) == -1


def check_keyrec(r: int, t: int, params: Params) -> bool:
    """Recursion tying wfrak_hat at (ell, m) to A-quantities one size down."""
    if not 1 <= r <= params.ell or not 1 <= t < params.ell:
        raise InvalidParameterError(f"need 1 <= r <= ell, 1 <= t < ell; got r={r}, t={t}")
    ell, m, q = params.ell, params.m, params.q
    lhs = _wfrak_hat(r, t, ell, m, q)
    rhs = (
        _a_quantity(r, t, ell, m, q)
        - _a_quantity(r, t - 1, ell, m, q)
        + q ** (m - 1) * mu(t - 1, ell - 1, m, q)
    )
    return lhs == rhs


def check_slice_recursions(r: int, s: int, t: int, params: Params) -> bool:
    """Row-deletion recursion for slice weights, plus its transposed analogs.

    The row form relates (ell, m) to (ell-1, m) with factor q^m - q^(t-1).
    Transposing swaps the roles of rows and columns: the first-r-ROWS slice
    statistic of the transpose is the first-r-COLUMNS statistic of the
    original, so the column form with factor q^ell - q^(t-1) is evaluated on
    slice weights with the row/column arguments exchanged.  (Read with
    unswapped row slices the column form is false, e.g. q=2, ell=2, m=3,
    r=2, s=1, t=2 gives 0 versus 12.)  The aggregate weight, summed over s,
    satisfies the column recursion without any swap; that is checked too.
    """
    ell, m, q = params.ell, params.m, params.q
    if not 1 <= r <= ell or not 1 <= s <= t <= ell:
        raise InvalidParameterError(f"bad slice key r={r}, s={s}, t={t}")
    ok = True
    if ell > r:
        lhs = _slice_weight(r, s, t, ell, m, q)
        rhs = q**t * _slice_weight(r, s, t, ell - 1, m, q) + (
            q**m - q ** (t - 1)
        ) * _slice_weight(r, s, t - 1, ell - 1, m, q)
        ok = ok and lhs == rhs
    if m > r:
        # column slices: swap the row/column arguments
        lhs = _slice_weight(r, s, t, m, ell, q)
        rhs = q**t * _slice_weight(r, s, t, m - 1, ell, q) + (
            q**ell - q ** (t - 1)
        ) * _slice_weight(r, s, t - 1, m - 1, ell, q)
        ok = ok and lhs == rhs
        # aggregate column recursion, no swap needed
        lhs = (q - 1) * _wfrak_hat(r, t, ell, m, q)
        rhs = q**t * (q - 1) * _wfrak_hat(r, t, ell, m - 1, q) + (
            q**ell - q ** (t - 1)
        ) * (q - 1) * _wfrak_hat(r, t - 1, ell, m - 1, q)
        ok = ok and lhs == rhs
    return ok


@dataclass(frozen=True)
class ConjectureVerdict:
    """Observed ordering evidence for the distinct-weights conjecture.

    Reports, never asserts: a False field is a reportable discovery."""

    params: Params
    t: int
    weights: tuple[int, ...]  # values for r = 1..ell
    in_range: bool  # 1 < t < ell, the conjectured range
    distinct: bool
    initial_increasing: bool  # w_1 < ... < w_{ell-t+1}
    interleaved: bool  # w_r strictly between w_{r-2} and w_{r-1} beyond that
    ordering: tuple[int, ...]  # ranks r sorted by increasing weight

    @property
    def holds(self) -> bool:
        return self.distinct and self.initial_increasing and self.interleaved

    def describe(self) -> str:
        return " < ".join(
            f"w[{r}]={w}" for r, w in zip(self.ordering, sorted(self.weights))
        )


def _verdict(
    values: tuple[int, ...], t: int, params: Params, in_range: bool
) -> ConjectureVerdict:
    ell = params.ell
    distinct = len(set(values)) == len(values)
    head = values[: ell - t + 1]
    initial = all(a < b for a, b in zip(head, head[1:]))
    inter = True
    for r in range(ell - t + 2, ell + 1):
        w = values[r - 1]
        w1 = values[r - 2]
        w2 = values[r - 3] if r - 3 >= 0 else 0  # w_0 = 0
        lo, hi = min(w1, w2), max(w1, w2)
        inter = inter and lo < w < hi
    ordering = tuple(r for _, r in sorted((w, r) for r, w in enumerate(values, 1)))
    return ConjectureVerdict(
        params=params,
        t=t,
        weights=values,
        in_range=in_range,
        distinct=distinct,
        initial_increasing=initial,
        interleaved=inter,
        ordering=ordering,
    )


def conjecture_report(t: int, params: Params) -> ConjectureVerdict:
    """Evidence for the ordering conjecture on the code weights w_hat."""
    if not 1 <= t <= params.ell:
        raise InvalidParameterError(f"need 1 <= t <= ell, got t={t}")
    values = tuple(
        _w_hat(r, t, params.ell, params.m, params.q) for r in range(1, params.ell + 1)
    )
    return _verdict(values, t, params, in_range=1 < t < params.ell)


def conjecture_report_rank_counts(t: int, params: Params) -> ConjectureVerdict:
    """The analogous scan for the per-rank nonzero-trace counts."""
    if not 1 <= t <= params.ell:
        raise InvalidParameterError(f"need 1 <= t <= ell, got t={t}")
    q = params.q
    values = tuple(
        (q - 1) * _wfrak_hat(r, t, params.ell, params.m, q)
        for r in range(1, params.ell + 1)
    )
    # the analogous claims are stated for the whole range 1 <= t <= ell
    return _verdict(values, t, params, in_range=True)
