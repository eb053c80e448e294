"""Exact q-analog combinatorics: Gaussian binomials and factorials, rank
counts of matrices over GF(q), and projective point counts.

All values are plain Python integers, so arithmetic is exact at any size.
Divisions that occur inside these operations must leave no remainder; a
nonzero remainder raises InternalConsistencyError because it can only come
from a programming error, not from user input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalConsistencyError, InvalidParameterError


def prime_power_decompose(q: int) -> tuple[int, int]:
    """Return (p, e) with q = p**e, p prime, or raise InvalidParameterError."""
    if q < 2:
        raise InvalidParameterError(f"q must be >= 2, got {q}")
    p = None
    n = q
    for d in range(2, q + 1):
        if d * d > n:
            p = n
            break
        if n % d == 0:
            p = d
            break
    e = 0
    n = q
    while n % p == 0:
        n //= p
        e += 1
    if n != 1:
        raise InvalidParameterError(f"q={q} is not a prime power")
    return p, e


@dataclass(frozen=True)
class Params:
    """Validated parameter tuple (q, ell, m[, t]) with 1 <= t <= ell <= m.

    t is optional so the same value can drive operations that sweep over t.
    """

    q: int
    ell: int
    m: int
    t: int | None = None

    def __post_init__(self):
        prime_power_decompose(self.q)
        if not 1 <= self.ell <= self.m:
            raise InvalidParameterError(
                f"need 1 <= ell <= m, got ell={self.ell}, m={self.m}"
            )
        if self.t is not None and not 1 <= self.t <= self.ell:
            raise InvalidParameterError(
                f"need 1 <= t <= ell, got t={self.t}, ell={self.ell}"
            )

    def with_t(self, t: int) -> "Params":
        return Params(self.q, self.ell, self.m, t)


def binom2(x: int) -> int:
    """x*(x-1)/2, extended polynomially to negative x (binom2(-1) == 1)."""
    return x * (x - 1) // 2


def exact_div(num: int, den: int, what: str = "") -> int:
    quot, rem = divmod(num, den)
    if rem != 0:
        raise InternalConsistencyError(
            f"inexact division {num}/{den}" + (f" in {what}" if what else "")
        )
    return quot


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """The q-binomial coefficient [n choose k]_q.

    Zero whenever k < 0, n < 0 or k > n, matching the usual conventions.
    """
    if q < 2:
        raise InvalidParameterError(f"q must be >= 2, got {q}")
    if k < 0 or n < 0 or k > n:
        return 0
    num = 1
    den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return exact_div(num, den, "gaussian_binomial")


def gaussian_factorial(n: int, q: int) -> int:
    """The Gaussian factorial [n]_q! = prod_{i=1}^{n} (q^i - 1)."""
    if q < 2:
        raise InvalidParameterError(f"q must be >= 2, got {q}")
    if n < 0:
        raise InvalidParameterError(f"n must be >= 0, got {n}")
    out = 1
    for i in range(1, n + 1):
        out *= q**i - 1
    return out


def gaussian_factorial_ratio(n: int, d: int, q: int) -> int:
    """[n]_q! / [d]_q! for n >= d, computed as the product of the top factors."""
    if d > n:
        raise InvalidParameterError(f"ratio needs n >= d, got n={n}, d={d}")
    out = 1
    for i in range(d + 1, n + 1):
        out *= q**i - 1
    return out


def mu(t: int, ell: int, m: int, q: int) -> int:
    """Number of ell x m matrices over GF(q) of rank exactly t."""
    if ell < 0 or m < 0:
        raise InvalidParameterError(f"ell, m must be >= 0, got {ell}, {m}")
    if t < 0 or t > min(ell, m):
        return 0
    out = gaussian_binomial(m, t, q)
    for i in range(t):
        out *= q**ell - q**i
    return out


def nu(t: int, ell: int, m: int, q: int) -> int:
    """Number of ell x m matrices over GF(q) of rank at most t."""
    return sum(mu(s, ell, m, q) for s in range(t + 1))


def projective_count(t: int, ell: int, m: int, q: int) -> int:
    """Number of projective points spanned by nonzero matrices of rank <= t."""
    if not 1 <= t <= ell <= m:
        raise InvalidParameterError(
            f"need 1 <= t <= ell <= m, got t={t}, ell={ell}, m={m}"
        )
    return exact_div(nu(t, ell, m, q) - 1, q - 1, "projective_count")
