"""Finite fields GF(q) via dense lookup tables, plus small dense-matrix
primitives over them (rank, partial trace, exhaustive enumeration, projective
canonical forms).

Elements are indices 0..q-1.  For q = p^e the index encodes the coefficient
vector of a residue polynomial, constant term in the lowest base-p digit, so
index 0 is the additive and index 1 the multiplicative identity.  The modulus
is the lexicographically smallest monic irreducible of degree e over GF(p)
(coefficients compared low-degree-first), which makes every table
deterministic across runs and platforms.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameterError, ResourceLimitError
from .qcombin import prime_power_decompose

MAX_FIELD_ORDER = 1024
DEFAULT_ENUM_GUARD = 1 << 26


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], mod: list[int], p: int) -> list[int]:
    a = _poly_trim(a[:])
    dm = len(mod) - 1
    # trim before the degree test: a stale zero top coefficient would make
    # shift negative and wrap around via negative indexing
    while len(a) - 1 >= dm:
        shift = len(a) - 1 - dm
        c = a[-1]  # mod is monic
        for i, mi in enumerate(mod):
            a[i + shift] = (a[i + shift] - c * mi) % p
        _poly_trim(a)
    return a


def _poly_mul_mod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_mod(out, mod, p)


def _is_irreducible(poly: list[int], p: int) -> bool:
    """Trial division by all monic polynomials of degree 1..deg/2."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            div = list(low) + [1]
            # remainder of poly mod div
            rem = _poly_trim(poly[:])
            while len(rem) - 1 >= d:
                shift = len(rem) - 1 - d
                c = rem[-1]
                for i, mi in enumerate(div):
                    rem[i + shift] = (rem[i + shift] - c * mi) % p
                _poly_trim(rem)
            if not rem:
                return False
    return True


def _smallest_irreducible(p: int, e: int) -> list[int]:
    """Lexicographically smallest monic irreducible of degree e over GF(p)."""
    if e == 1:
        return [0, 1]
    for low in itertools.product(range(p), repeat=e):
        poly = list(low) + [1]
        if _is_irreducible(poly, p):
            return poly
    raise InvalidParameterError(f"no irreducible of degree {e} over GF({p})")


def _idx_to_poly(idx: int, p: int, e: int) -> list[int]:
    return [(idx // p**i) % p for i in range(e)]


def _poly_to_idx(poly: list[int], p: int) -> int:
    return sum(c * p**i for i, c in enumerate(poly))


@dataclass(frozen=True)
class FieldTables:
    """Precomputed arithmetic tables for GF(q)."""

    q: int
    p: int
    e: int
    irreducible: tuple[int, ...]  # coefficients low-degree-first, monic
    add: np.ndarray  # (q, q) int64
    mul: np.ndarray  # (q, q) int64
    neg: np.ndarray  # (q,) int64
    inv: np.ndarray  # (q,) int64, entry 0 unused

    def add_(self, a: int, b: int) -> int:
        return int(self.add[a, b])

    def sub_(self, a: int, b: int) -> int:
        return int(self.add[a, self.neg[b]])

    def mul_(self, a: int, b: int) -> int:
        return int(self.mul[a, b])

    def inv_(self, a: int) -> int:
        if a == 0:
            raise InvalidParameterError("0 has no multiplicative inverse")
        return int(self.inv[a])


def field_new(q: int, irreducible: list[int] | None = None) -> FieldTables:
    """Build GF(q) tables.  q must be a prime power <= 1024.

    An explicit irreducible polynomial (low-degree-first, monic, degree e)
    may be supplied to exercise count-invariance under a different modulus.
    """
    p, e = prime_power_decompose(q)
    if q > MAX_FIELD_ORDER:
        raise InvalidParameterError(f"q={q} exceeds supported maximum {MAX_FIELD_ORDER}")

    if irreducible is None:
        mod = _smallest_irreducible(p, e)
    else:
        mod = list(irreducible)
        if len(mod) != e + 1 or mod[-1] != 1 or not _is_irreducible(mod, p):
            raise InvalidParameterError(f"not a monic irreducible of degree {e}: {mod}")

    if e == 1:
        idx = np.arange(q, dtype=np.int64)
        add = (idx[:, None] + idx[None, :]) % q
        mul = (idx[:, None] * idx[None, :]) % q
        neg = (-idx) % q
        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = [pow(int(a), q - 2, q) for a in range(1, q)]
        return FieldTables(q, p, e, tuple(mod), add, mul, neg, inv)

    # addition / negation: digitwise mod p
    digits = np.array([_idx_to_poly(i, p, e) for i in range(q)], dtype=np.int64)
    pw = p ** np.arange(e, dtype=np.int64)
    add = (((digits[:, None, :] + digits[None, :, :]) % p) * pw).sum(axis=2)
    neg = (((-digits) % p) * pw).sum(axis=1)

    # multiplication via exp/log over a generator of the unit group
    def times(a: int, b: int) -> int:
        return _poly_to_idx(
            _poly_mul_mod(_idx_to_poly(a, p, e), _idx_to_poly(b, p, e), mod, p), p
        )

    gen = None
    for cand in range(2, q):
        x, order = cand, 1
        while x != 1:
            x = times(x, cand)
            order += 1
        if order == q - 1:
            gen = cand
            break
    assert gen is not None, "unit group of a finite field is cyclic"

    exp = np.zeros(q - 1, dtype=np.int64)
    log = np.zeros(q, dtype=np.int64)
    x = 1
    for i in range(q - 1):
        exp[i] = x
        log[x] = i
        x = times(x, gen)

    mul = np.zeros((q, q), dtype=np.int64)
    nz = np.arange(1, q)
    mul[1:, 1:] = exp[(log[nz][:, None] + log[nz][None, :]) % (q - 1)]
    inv = np.zeros(q, dtype=np.int64)
    inv[nz] = exp[(-log[nz]) % (q - 1)]
    return FieldTables(q, p, e, tuple(mod), add, mul, neg, inv)


@dataclass(frozen=True)
class GfMatrix:
    """Dense matrix of GF(q) element indices, row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise InvalidParameterError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def is_zero(self) -> bool:
        return not any(self.entries)

    def transpose(self) -> "GfMatrix":
        ent = tuple(
            self.entries[i * self.cols + j]
            for j in range(self.cols)
            for i in range(self.rows)
        )
        return GfMatrix(self.cols, self.rows, ent)


def _check_entries(M: GfMatrix, field: FieldTables) -> None:
    if any(not 0 <= x < field.q for x in M.entries):
        raise InvalidParameterError(f"matrix entries out of range for GF({field.q})")


def rank(M: GfMatrix, field: FieldTables) -> int:
    """Rank of M over GF(q) by row elimination."""
    _check_entries(M, field)
    add, mul, neg, inv = field.add, field.mul, field.neg, field.inv
    basis: list[list[int]] = []
    pivots: list[int] = []
    for i in range(M.rows):
        row = list(M.row(i))
        for b, j in zip(basis, pivots):
            c = row[j]
            if c:
                for k in range(j, M.cols):
                    row[k] = add[row[k], neg[mul[c, b[k]]]]
        piv = next((k for k, x in enumerate(row) if x), None)
        if piv is not None:
            cinv = inv[row[piv]]
            basis.append([int(mul[cinv, x]) for x in row])
            pivots.append(piv)
    return len(basis)


def partial_trace(M: GfMatrix, r: int, field: FieldTables) -> int:
    """m_11 + ... + m_rr in GF(q); r = 0 gives the empty sum 0."""
    if not 0 <= r <= min(M.rows, M.cols):
        raise InvalidParameterError(f"r={r} out of range for {M.rows}x{M.cols} matrix")
    _check_entries(M, field)
    out = 0
    for i in range(r):
        out = int(field.add[out, M.at(i, i)])
    return out


def matrices_iter(
    ell: int,
    m: int,
    field: FieldTables,
    guard: int = DEFAULT_ENUM_GUARD,
    prefix: tuple[int, ...] = (),
):
    """Yield every ell x m matrix over GF(q) in row-major lexicographic order
    of entry indices.

    `prefix` fixes the leading row-major entries, so disjoint prefixes
    partition the full enumeration for parallel runs.
    """
    q = field.q
    n = ell * m
    if len(prefix) > n:
        raise InvalidParameterError("prefix longer than the matrix")
    total = q ** (n - len(prefix))
    if total > guard:
        raise ResourceLimitError(
            f"enumeration of {total} matrices exceeds guard {guard}"
        )
    for tail in itertools.product(range(q), repeat=n - len(prefix)):
        yield GfMatrix(ell, m, prefix + tail)


def canonical_rep(M: GfMatrix, field: FieldTables) -> GfMatrix:
    """Scale M so its first nonzero entry (row-major) becomes 1.

    Two nonzero matrices are projectively equivalent iff they share a
    canonical representative.
    """
    _check_entries(M, field)
    lead = next((x for x in M.entries if x), None)
    if lead is None:
        raise InvalidParameterError("zero matrix has no canonical representative")
    if lead == 1:
        return M
    lam = field.inv[lead]
    mul = field.mul
    return GfMatrix(M.rows, M.cols, tuple(int(mul[lam, x]) for x in M.entries))
