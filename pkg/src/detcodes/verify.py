"""Property suites driven by the CLI `verify` subcommand.

Every check is exact; a failing entry always carries both the expected and
the actual value as decimal strings.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from . import codes, oracle
from .cache import ResultCache
from .errors import InvalidParameterError
from .gfield import DEFAULT_ENUM_GUARD, field_new
from .qcombin import (
    Params,
    binom2,
    gaussian_binomial,
    gaussian_factorial,
    mu,
    nu,
)
from .spectrum import (
    _a_quantity,
    _p_alternative,
    _p_delsarte,
    _slice_cardinality,
    _slice_weight,
    _w_hat,
    _wfrak_hat,
    check_identity_sum,
    check_keyrec,
    check_slice_recursions,
)

SUITES = ("qanalog", "spectra", "identities", "oracle", "codes", "all")


@dataclass
class CheckResult:
    check_id: str
    point: dict
    passed: bool
    expected: str
    actual: str


@dataclass
class CheckReport:
    suite: str
    checks: list[CheckResult] = dc_field(default_factory=list)

    def add(self, check_id: str, point: dict, expected, actual) -> None:
        self.checks.append(
            CheckResult(check_id, point, expected == actual, str(expected), str(actual))
        )

    @property
    def n_passed(self) -> int:
        return sum(c.passed for c in self.checks)

    @property
    def n_failed(self) -> int:
        return len(self.checks) - self.n_passed

    @property
    def ok(self) -> bool:
        return self.n_failed == 0

    def extend(self, other: "CheckReport") -> None:
        self.checks.extend(other.checks)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": str(self.n_passed),
            "failed": str(self.n_failed),
            "checks": [
                {
                    "check": c.check_id,
                    "point": {k: str(v) for k, v in c.point.items()},
                    "passed": c.passed,
                    "expected": c.expected,
                    "actual": c.actual,
                }
                for c in self.checks
            ],
        }


def _lm_grid(max_m: int):
    for ell in range(1, max_m + 1):
        for m in range(ell, max_m + 1):
            yield ell, m


def suite_qanalog(q_list=(2, 3, 4, 5), max_m=6, **_) -> CheckReport:
    rep = CheckReport("qanalog")
    for q in q_list:
        for n in range(1, 9):
            for k in range(1, n + 1):
                lhs = gaussian_binomial(n, k, q)
                rhs = q**k * gaussian_binomial(n - 1, k, q) + gaussian_binomial(
                    n - 1, k - 1, q
                )
                rep.add("pascal", {"q": q, "n": n, "k": k}, lhs, rhs)
    for q in q_list:
        for ell, m in _lm_grid(min(max_m, 6)):
            for t in range(0, ell + 1):
                ref = mu(t, ell, m, q)
                alt1 = (
                    q ** binom2(t)
                    * gaussian_binomial(m, t, q)
                    * gaussian_factorial(ell, q)
                    // gaussian_factorial(ell - t, q)
                )
                alt2 = (
                    q ** binom2(t)
                    * gaussian_binomial(ell, t, q)
                    * gaussian_factorial(m, q)
                    // gaussian_factorial(m - t, q)
                )
                point = {"q": q, "ell": ell, "m": m, "t": t}
                rep.add("mu-forms-1", point, ref, alt1)
                rep.add("mu-forms-2", point, ref, alt2)
            rep.add(
                "mu-sum",
                {"q": q, "ell": ell, "m": m},
                q ** (ell * m),
                sum(mu(t, ell, m, q) for t in range(ell + 1)),
            )
            for t in range(1, ell):
                rep.add(
                    "mu-rank-recursion",
                    {"q": q, "ell": ell, "m": m, "t": t},
                    mu(t, ell, m, q),
                    q**t * mu(t, ell - 1, m, q)
                    + (q**m - q ** (t - 1)) * mu(t - 1, ell - 1, m, q),
                )
    return rep


def suite_identities(q_list=(2, 3, 4), max_m=5, **_) -> CheckReport:
    rep = CheckReport("identities")
    for q in q_list:
        for ell, m in _lm_grid(max_m):
            params = Params(q, ell, m)
            for t in range(0, ell + 1):
                for r in range(0, ell + 1):
                    rep.add(
                        "p-equality",
                        {"q": q, "ell": ell, "m": m, "t": t, "r": r},
                        _p_delsarte(t, r, ell, m, q),
                        _p_alternative(t, r, ell, m, q),
                    )
            for r in range(1, ell + 1):
                rep.add(
                    "sum-is-minus-one",
                    {"q": q, "ell": ell, "m": m, "r": r},
                    True,
                    check_identity_sum(r, params),
                )
    return rep


def suite_spectra(q_list=(2, 3), max_m=5, **_) -> CheckReport:
    rep = CheckReport("spectra")
    for q in q_list:
        for ell, m in _lm_grid(max_m):
            params = Params(q, ell, m)
            for t in range(1, ell + 1):
                for r in range(1, ell + 1):
                    point = {"q": q, "ell": ell, "m": m, "t": t, "r": r}
                    rep.add(
                        "slice-weight-sum",
                        point,
                        (q - 1) * _wfrak_hat(r, t, ell, m, q),
                        sum(
                            _slice_weight(r, s, t, ell, m, q)
                            for s in range(1, min(r, t) + 1)
                        ),
                    )
                    rep.add(
                        "slice-card-sum",
                        point,
                        mu(t, ell, m, q),
                        sum(_slice_cardinality(r, s, t, ell, m, q) for s in range(r + 1)),
                    )
                    if t < ell:
                        rep.add(
                            "w-hat-via-a-quantity",
                            point,
                            _w_hat(r, t, ell, m, q),
                            _a_quantity(r, t, ell, m, q)
                            + q ** (m - 1) * nu(t - 1, ell - 1, m, q),
                        )
                        rep.add(
                            "keyrec",
                            point,
                            True,
                            check_keyrec(r, t, params),
                        )
                    for s in range(1, t + 1):
                        rep.add(
                            "slice-recursions",
                            {**point, "s": s},
                            True,
                            check_slice_recursions(r, s, t, params),
                        )
                # difference law and strict minimality of w_1
                if t < ell:
                    for r in range(1, ell + 1):
                        for s in range(1, r + 1):
                            rep.add(
                                "difference-law",
                                {"q": q, "ell": ell, "m": m, "t": t, "r": r, "s": s},
                                _w_hat(r, t, ell, m, q) - _w_hat(s, t, ell, m, q),
                                q**t
                                * (
                                    _wfrak_hat(r - 1, t, ell - 1, m - 1, q)
                                    - _wfrak_hat(s - 1, t, ell - 1, m - 1, q)
                                ),
                            )
                    for r in range(2, ell + 1):
                        rep.add(
                            "w1-minimal",
                            {"q": q, "ell": ell, "m": m, "t": t, "r": r},
                            True,
                            _w_hat(1, t, ell, m, q) < _w_hat(r, t, ell, m, q),
                        )
                # compact minimum form
                rep.add(
                    "w1-compact",
                    {"q": q, "ell": ell, "m": m, "t": t},
                    _w_hat(1, t, ell, m, q),
                    q ** (ell + m - 2) * nu(t - 1, ell - 1, m - 1, q),
                )
                # slice weight at r = ell, s = t (closed form)
                sign = 1 if t % 2 == 0 else -1
                rep.add(
                    "full-prefix-slice",
                    {"q": q, "ell": ell, "m": m, "t": t},
                    _slice_weight(ell, t, t, ell, m, q),
                    (q - 1)
                    * (mu(t, ell, m, q) - sign * q ** binom2(t) * gaussian_binomial(ell, t, q))
                    // q,
                )
    return rep


def _cached_stats(params: Params, guard: int, cache: ResultCache | None, jobs: int):
    if cache is not None:
        hit = cache.get("enum_stats", q=params.q, l=params.ell, m=params.m)
        if hit is not None:
            card = np.array([[[int(x) for x in row] for row in pl] for pl in hit["card"]],
                            dtype=np.int64)
            nz = np.array([[[int(x) for x in row] for row in pl] for pl in hit["nz"]],
                          dtype=np.int64)
            return card, nz
    card, nz = oracle.enumeration_stats(params, guard, jobs=jobs)
    if cache is not None:
        cache.put(
            "enum_stats",
            {
                "card": [[[str(x) for x in row] for row in pl] for pl in card],
                "nz": [[[str(x) for x in row] for row in pl] for pl in nz],
            },
            q=params.q,
            l=params.ell,
            m=params.m,
        )
    return card, nz


def oracle_grid(q_list=(2, 3), max_m=3):
    """The formula/oracle equivalence grid: small full grid plus the two
    larger binary cases."""
    grid = [(q, ell, m) for q in q_list for ell, m in _lm_grid(max_m)]
    for m in (4, 5):
        if 2 in q_list and (2, 4, m) not in grid:
            grid.append((2, 4, m))
    return grid


def suite_oracle(
    q_list=(2, 3),
    max_m=3,
    guard=DEFAULT_ENUM_GUARD,
    cache: ResultCache | None = None,
    jobs: int = 1,
    **_,
) -> CheckReport:
    rep = CheckReport("oracle")
    for q, ell, m in oracle_grid(q_list, max_m):
        params = Params(q, ell, m)
        card, nz = _cached_stats(params, guard, cache, jobs)
        for t in range(0, ell + 1):
            rep.add(
                "rank-count",
                {"q": q, "ell": ell, "m": m, "t": t},
                mu(t, ell, m, q),
                int(card[ell, :, t].sum()),
            )
        for r in range(1, ell + 1):
            for t in range(0, ell + 1):
                point = {"q": q, "ell": ell, "m": m, "r": r, "t": t}
                rep.add(
                    "nonzero-trace",
                    point,
                    (q - 1) * _wfrak_hat(r, t, ell, m, q),
                    int(nz[r, :, t].sum()),
                )
                for s in range(0, min(r, t) + 1):
                    rep.add(
                        "slice-cardinality",
                        {**point, "s": s},
                        _slice_cardinality(r, s, t, ell, m, q),
                        int(card[r, s, t]),
                    )
                    if 1 <= s <= t:
                        rep.add(
                            "slice-weight",
                            {**point, "s": s},
                            _slice_weight(r, s, t, ell, m, q),
                            int(nz[r, s, t]),
                        )
    return rep


def suite_codes(
    q_list=(2,),
    max_m=3,
    guard=DEFAULT_ENUM_GUARD,
    **_,
) -> CheckReport:
    rep = CheckReport("codes")
    small = [(2, 2, 2), (2, 2, 3)]
    for q, ell, m in small:
        if q not in q_list:
            continue
        params = Params(q, ell, m)
        fld = field_new(q)
        for t in range(1, ell + 1):
            point = {"q": q, "ell": ell, "m": m, "t": t}
            code = codes.build_code(t, params, fld, guard)
            dist = codes.weight_distribution(t, params)
            actual = oracle.codeword_weights_all(code)
            rep.add("weight-distribution", point, dist, actual)
            rep.add("distribution-total", point, q ** (ell * m), sum(dist.values()))
            rep.add(
                "min-distance",
                point,
                codes.min_distance(t, params),
                min(w for w in actual if w > 0),
            )
            rep.add(
                "min-weight-count",
                point,
                codes.min_weight_count(t, params),
                actual[min(w for w in actual if w > 0)],
            )
            if t == 1:
                rep.add(
                    "dual-distance",
                    point,
                    3,
                    oracle.dual_min_distance_exhaustive(code, guard),
                )
        # exhaustive GHW arbitration on the smallest code
        if (ell, m) == (2, 2):
            code = codes.build_code(1, params, fld, guard)
            got = [oracle.ghw_exhaustive(code, s) for s in range(1, 5)]
            rep.add("ghw-exhaustive", {"q": q, "ell": ell, "m": m, "t": 1},
                    [4, 6, 8, 9], got)
            formula = [codes.ghw(s, 1, params, fld).value for s in range(1, 5)]
            rep.add("ghw-formula-match", {"q": q, "ell": ell, "m": m, "t": 1},
                    got, formula)
    # regime overlap at s = m for t = ell - 1
    for q in q_list:
        for ell, m in _lm_grid(4):
            if ell < 2:
                continue
            t = ell - 1
            params = Params(q, ell, m)
            cands = dict(codes._ghw_candidates(m, t, params))
            rep.add(
                "ghw-overlap",
                {"q": q, "ell": ell, "m": m, "t": t, "s": m},
                cands.get(codes.GHW_FORMULA_LOW),
                cands.get(codes.GHW_FORMULA_HIGH),
            )
    # GHW monotonicity wherever adjacent values are available
    for q in q_list:
        for ell, m in _lm_grid(3):
            params = Params(q, ell, m)
            for t in range(1, ell + 1):
                table = codes.ghw_table(t, params)
                for a, b in zip(table, table[1:]):
                    if a.value is not None and b.value is not None:
                        rep.add(
                            "ghw-monotone",
                            {"q": q, "ell": ell, "m": m, "t": t, "s": b.s},
                            True,
                            a.value < b.value,
                        )
    return rep


_SUITE_FUNCS = {
    "qanalog": suite_qanalog,
    "identities": suite_identities,
    "spectra": suite_spectra,
    "oracle": suite_oracle,
    "codes": suite_codes,
}


def run_suite(
    name: str,
    q_list=None,
    max_m=None,
    guard=DEFAULT_ENUM_GUARD,
    cache: ResultCache | None = None,
    jobs: int = 1,
) -> CheckReport:
    if name not in SUITES:
        raise InvalidParameterError(f"unknown suite {name!r}; choose from {SUITES}")
    names = [s for s in SUITES if s != "all"] if name == "all" else [name]
    rep = CheckReport(name)
    for n in names:
        kwargs = {"guard": guard, "cache": cache, "jobs": jobs}
        if q_list is not None:
            kwargs["q_list"] = q_list
        if max_m is not None:
            kwargs["max_m"] = max_m
        rep.extend(_SUITE_FUNCS[n](**kwargs))
    return rep
