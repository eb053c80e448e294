import json

import pytest

from detcodes.codes import (
    GHW_FORMULA_HIGH,
    GHW_FORMULA_LOW,
    GHW_FORMULA_M_PLUS_1,
    GHW_REED_MULLER,
    GHW_UNAVAILABLE,
    build_code,
    dual_min_distance,
    export_document,
    ghw,
    ghw_table,
    min_distance,
    min_weight_count,
    weight_distribution,
)
from detcodes.errors import InvalidParameterError
from detcodes.oracle import codeword_weights_all, ghw_exhaustive
from detcodes.qcombin import Params, mu, projective_count


def test_build_code_shape():
    code = build_code(1, Params(2, 2, 2))
    assert (code.n, code.k) == (9, 4)
    assert code.generator.shape == (4, 9)
    code = build_code(2, Params(3, 2, 2))
    assert code.n == projective_count(2, 2, 2, 3)


def test_build_code_validation():
    with pytest.raises(InvalidParameterError):
        build_code(0, Params(2, 2, 2))
    with pytest.raises(InvalidParameterError):
        build_code(3, Params(2, 2, 2))


@pytest.mark.parametrize("ell,m", [(2, 2), (2, 3)])
def test_weight_distribution_exhaustive(ell, m):
    params = Params(2, ell, m)
    for t in (1, 2):
        dist = weight_distribution(t, params)
        assert dist == codeword_weights_all(build_code(t, params))
        assert sum(dist.values()) == 2 ** (ell * m)


def test_min_distance_and_count():
    params = Params(2, 2, 2)
    for t in (1, 2):
        dist = weight_distribution(t, params)
        d = min(w for w in dist if w > 0)
        assert min_distance(t, params) == d
        assert min_weight_count(t, params) == dist[d]
    assert min_weight_count(1, params) == mu(1, 2, 2, 2)
    assert min_weight_count(2, params) == 2**4 - 1
    assert min_distance(1, Params(2, 4, 5)) == 128
    assert min_distance(2, Params(2, 4, 5)) == 13568


def test_ghw_methods_and_agreement():
    params = Params(2, 2, 2)
    table = ghw_table(1, params, exhaustive=True)
    assert [e.value for e in table] == [4, 6, 8, 9]
    assert [e.method for e in table] == [
        GHW_FORMULA_LOW,
        GHW_FORMULA_LOW,
        GHW_FORMULA_M_PLUS_1,
        GHW_FORMULA_HIGH,
    ]
    for e in table:
        assert ("exhaustive", e.value) in e.cross_checks or e.cross_checks == ()
        ex = ghw_exhaustive(build_code(1, params), e.s)
        assert ex == e.value


def test_ghw_full_rank_is_affine_type():
    params = Params(2, 2, 2)
    table = ghw_table(2, params)
    assert all(e.method == GHW_REED_MULLER for e in table)
    n = projective_count(2, 2, 2, 2)
    assert table[-1].value == n
    code = build_code(2, params)
    for e in table:
        assert ghw_exhaustive(code, e.s) == e.value


def test_ghw_gap_unavailable():
    # for t=1, ell=3, m=4 the regimes leave s in (m+1, (ell-t)m) uncovered
    params = Params(2, 3, 4)
    table = ghw_table(1, params)
    methods = {e.s: e.method for e in table}
    assert methods[5] == GHW_FORMULA_M_PLUS_1
    assert methods[6] == GHW_UNAVAILABLE and methods[7] == GHW_UNAVAILABLE
    assert methods[8] == GHW_FORMULA_HIGH
    values = [e.value for e in table if e.value is not None]
    assert values == sorted(values)  # strict monotonicity where defined
    assert len(set(values)) == len(values)


def test_ghw_overlap_value():
    # regimes overlap at s = m when t = ell - 1
    entry = ghw(3, 1, Params(2, 2, 3))
    assert entry.value == 14
    assert dict([(entry.method, entry.value)] + list(entry.cross_checks)) == {
        GHW_FORMULA_LOW: 14,
        GHW_FORMULA_HIGH: 14,
    }


def test_ghw_validation():
    with pytest.raises(InvalidParameterError):
        ghw(0, 1, Params(2, 2, 2))
    with pytest.raises(InvalidParameterError):
        ghw(5, 1, Params(2, 2, 2))


def test_dual_min_distance():
    assert dual_min_distance(1, Params(2, 2, 2)) == 3
    assert dual_min_distance(1, Params(2, 2, 3), verify=True) == 3
    assert dual_min_distance(2, Params(2, 2, 2), verify=True) == 3


def test_export_document_json_safe():
    code = build_code(1, Params(2, 2, 2))
    doc = export_document(code)
    text = json.dumps(doc, sort_keys=True)
    back = json.loads(text)
    assert back["n"] == "9" and back["k"] == "4"
    assert back["min_distance"] == "4"
    assert back["weight_distribution"] == {"0": "1", "4": "9", "6": "6"}
    assert len(back["points"]) == 9
    assert len(back["generator"]) == 4 and len(back["generator"][0]) == 9
