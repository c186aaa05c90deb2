import json
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from esu import (
    InvalidParametersError,
    ModelParams,
    coupling_c,
    curvature,
    load_params,
    mode_frequency,
    ricci_scalar,
)

from conftest import params_with_c


def test_coupling_c_conformal_massless():
    assert coupling_c(ModelParams(a=1.0, m=0.0, xi=1 / 6)) == pytest.approx(0.0, abs=1e-15)


def test_coupling_c_arithmetic():
    assert coupling_c(ModelParams(a=2.0, m=1.0, xi=0.0)) == 3.0


def test_c_at_minus_one_rejected():
    with pytest.raises(InvalidParametersError):
        ModelParams(a=1.0, m=0.0, xi=0.0)


@pytest.mark.parametrize(
    "kw",
    [dict(a=0.0), dict(a=-1.0), dict(m=-0.1), dict(kappa=0.0), dict(a=float("nan")), dict(Lambda=float("inf"))],
)
def test_invalid_construction(kw):
    with pytest.raises(InvalidParametersError):
        ModelParams(**kw)


def test_params_are_immutable():
    p = ModelParams()
    with pytest.raises(AttributeError):
        p.a = 2.0


@pytest.mark.parametrize("c,n,expected", [(0.0, 3, 4.0), (3.0, 0, 2.0), (1.0, 1, math.sqrt(5.0))])
def test_mode_frequency_examples(c, n, expected):
    assert mode_frequency(params_with_c(c), n) == pytest.approx(expected, rel=1e-15)


def test_mode_frequency_rejects_negative_index():
    with pytest.raises(InvalidParametersError):
        mode_frequency(ModelParams(), -1)


def test_ricci_scalar():
    assert ricci_scalar(ModelParams(a=1.0)) == 6.0
    assert ricci_scalar(ModelParams(a=2.0)) == 1.5
    values = [ricci_scalar(ModelParams(a=a)) for a in (1, 10, 100, 1000)]
    assert all(x > y for x, y in zip(values, values[1:]))


def test_curvature_g00_is_half_r():
    cd = curvature(ModelParams(a=1.7))
    assert cd.R > 0 and cd.G00 == pytest.approx(cd.R / 2)


@given(
    c=st.floats(-0.999, 50.0),
    a=st.floats(0.1, 10.0),
    n=st.integers(0, 10_000),
)
def test_frequency_identities(c, a, n):
    p = params_with_c(c, a=a)
    l_n, l_next = p.l(n), p.l(n + 1)
    assert l_next > l_n > 0
    assert l_n**2 - (n + 1) ** 2 == pytest.approx(c, abs=1e-9 * (n + 1) ** 2)


@given(m=st.floats(0.0, 3.0), a=st.floats(0.2, 5.0), xi=st.floats(0.01, 1.0))
def test_lowest_frequency_matches_m2_plus_xi_r(m, a, xi):
    p = ModelParams(a=a, m=m, xi=xi)
    assert p.l(0) ** 2 == pytest.approx(a * a * (m * m + xi * p.R), rel=1e-12)


@given(c=st.floats(-0.999, 20.0), n=st.integers(0, 5000))
def test_large_n_asymptotics(c, n):
    k = n + 1
    if k < math.sqrt(abs(c)):
        return
    p = params_with_c(c)
    assert abs(p.l(n) - k - c / (2 * k)) <= c * c / (2 * k**3) + 1e-12 * k


def test_json_roundtrip(tmp_path):
    p = ModelParams(a=2.0, Lambda=0.3, m=0.5, xi=0.1, kappa=2.0).replace(alpha=(1, 2, 3, 4, 5))
    path = tmp_path / "p.json"
    path.write_text(json.dumps(p.to_dict()))
    assert load_params(path) == p


def test_json_defaults_renorm_to_zero():
    p = ModelParams.from_dict({"a": 1, "Lambda": 0, "m": 0, "xi": 0.2, "kappa": 1})
    assert p.renorm.alpha == (0.0,) * 5 and p.renorm.beta == (0.0,) * 3


@pytest.mark.parametrize(
    "doc",
    [
        {"a": 1, "Lambda": 0, "m": 0, "xi": 0.2},
        {"a": 1, "Lambda": 0, "m": 0, "xi": 0.2, "kappa": 1, "mass": 2},
        {"a": 1, "Lambda": 0, "m": 0, "xi": 0.2, "kappa": 1, "alpha": [1, 2]},
        {"a": "x", "Lambda": 0, "m": 0, "xi": 0.2, "kappa": 1},
    ],
)
def test_json_rejects_bad_documents(doc):
    with pytest.raises(InvalidParametersError):
        ModelParams.from_dict(doc)
