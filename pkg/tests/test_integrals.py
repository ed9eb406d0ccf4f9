import json
import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nonelem.integrals import (
    ANTIDERIVATIVES,
    Case,
    FormulaDoc,
    antiderivative,
    ci_antiderivative,
    decode_number,
    decompose,
    ei_antiderivative,
    ei_beta1,
    emit_formula,
    encode_number,
    fmt_number,
    form_from_structured,
    primitive,
)
from nonelem.series import DomainError, Family, IntegralSpec, build_series, eval_form, integrate_termwise
from nonelem.special import PFQParams, pfq
from nonelem.selftest import FIXTURE_GRID

GRID = [IntegralSpec(*row) for row in FIXTURE_GRID]


class TestDecompose:
    def test_exp_eps_zero(self):
        d = decompose("exp", 2, 2)
        assert (d.m, d.epsilon, d.case) == (1, 0, Case.EPS_ZERO)

    def test_exp_general(self):
        d = decompose("exp", "2.7", 1)
        assert (d.m, d.epsilon, d.case) == (2, F(7, 10), Case.GENERAL)

    def test_cos_eps_one(self):
        d = decompose("cos", 3, 1)
        assert (d.m, d.epsilon, d.case) == (1, 1, Case.EPS_ONE)

    def test_sin_canonical_epsilon(self):
        d = decompose("sin", "1.5", 2)
        assert (d.m, d.epsilon, d.case) == (0, F(3, 2), Case.GENERAL)

    def test_float_snapping(self):
        d = decompose("exp", 0.1 * 3 * 10, 1.5)
        assert d.case is Case.EPS_ZERO and d.m == 2 and d.epsilon == 0

    def test_as_dict(self):
        assert decompose("exp", "2.7", 1).as_dict() == {"m": 2, "epsilon": "7/10", "case": "General"}

    @pytest.mark.parametrize("alpha,beta", [(1, 1), (0.5, 1), (2, 0.5)])
    def test_rejects_out_of_regime(self, alpha, beta):
        with pytest.raises(ValueError):
            decompose("sin", alpha, beta)

    @given(
        st.sampled_from(list(Family)),
        st.floats(min_value=1.0 + 1e-9, max_value=60.0),
        st.floats(min_value=1.0, max_value=8.0),
    )
    def test_reconstruction(self, family, alpha, beta):
        d = decompose(family, alpha, beta)
        step = beta if family is Family.EXP else 2 * beta
        assert d.m >= 0
        assert 0 <= d.epsilon < step
        assert abs(d.m * step + d.epsilon - alpha) <= 1e-12 * max(1.0, alpha)

    @given(st.integers(2, 400), st.integers(1, 40), st.integers(10, 40))
    def test_reconstruction_exact(self, a_num, b_num, den):
        alpha, beta = F(a_num, 10) + 1, F(b_num + den, den)
        d = decompose("cos", alpha, beta)
        assert d.m * 2 * beta + d.epsilon == alpha
        assert 0 <= d.epsilon < 2 * beta


class TestAntiderivatives:
    @pytest.mark.parametrize("spec", GRID, ids=str)
    @pytest.mark.parametrize("x", [0.5, 1.0, 2.0, 7.5])
    def test_thin_veneer(self, spec, x):
        direct = eval_form(integrate_termwise(build_series(spec)), x)
        via_api = ANTIDERIVATIVES[spec.family](spec.lam, spec.beta, spec.alpha, x)
        assert via_api == direct

    def test_exp_example_value(self):
        res = ei_antiderivative(-1, 2, 2, 1.0)
        hyp = pfq(PFQParams((1, 0.5), (3, 1.5)), -1.0).value
        assert res.value == pytest.approx(1 / 3 - 1 - 0.5 * hyp, rel=1e-15)
        assert res.value == pytest.approx(-1.1183919908070501, rel=1e-14)

    def test_cos_head(self):
        form = primitive("cos", 1, 1, 3)
        assert form.power_terms[0].coef == F(-1, 4)
        assert form.power_terms[0].exponent == -4

    def test_exp_head_fragments(self):
        form = primitive("exp", -1, 1, "2.7")
        pairs = {(t.coef, t.exponent) for t in form.power_terms}
        assert (F(-10, 17), F(-17, 10)) in pairs
        assert (F(5, 7), F(-7, 10)) in pairs

    def test_alpha_must_exceed_one(self):
        with pytest.raises(ValueError):
            ci_antiderivative(1, 1, 1, 1.0)

    def test_domain(self):
        with pytest.raises(DomainError):
            ei_antiderivative(-1, 2, 2, 0.0)

    def test_primitive_cached(self):
        assert primitive("exp", -1, 2, 2) is primitive("exp", "-1", "2", "2")

    def test_int_and_float_cached_separately(self):
        a = primitive("exp", 1, 1, 2)
        b = primitive("exp", 1.0, 1.0, 2.0)
        assert a is not b
        assert isinstance(a.log_coef, F) and isinstance(b.log_coef, float)


class TestBetaOne:
    @pytest.mark.parametrize("alpha", [2, "2.7", 3])
    @pytest.mark.parametrize("x", [0.5, 1.0, 2.0])
    @pytest.mark.parametrize("lam", [1, -1])
    def test_same_as_general(self, lam, alpha, x):
        assert ei_beta1(lam, alpha, x) == ei_antiderivative(lam, 1, alpha, x)

    def test_log_coefficient(self):
        assert primitive("exp", 1, 1, 2).log_coef == F(1, 2)

    def test_example_tail(self):
        tail = primitive("exp", -1, 1, "2.7").tail
        assert tail.t0_coef == F(-5, 156)
        assert tail.pfq == PFQParams((1, F(13, 10)), (5, F(23, 10)))


class TestNumbers:
    @pytest.mark.parametrize("v,text", [
        (F(3), "3"), (F(-1, 4), "-1/4"), (F(7, 10), "0.7"), (F(1, 3), "1/3"), (F(27, 10), "2.7"), (2.5, "2.5"),
    ])
    def test_fmt(self, v, text):
        assert fmt_number(v) == text

    def test_fmt_decimal_power_of_two(self):
        assert fmt_number(F(-1, 2), decimal=True) == "-0.5"

    @pytest.mark.parametrize("v", [F(-5, 156), F(13, 10), F(3), 0.3, -2.7])
    def test_encode_round_trip(self, v):
        back = decode_number(json.loads(json.dumps(encode_number(v))))
        assert back == v and type(back) is type(v if isinstance(v, float) else F(v))


class TestEmitFormula:
    def test_cos_text(self):
        doc = emit_formula(IntegralSpec("cos", 1, 1, 3))
        assert doc.text == "F(x) = -x^-4/4 + x^-2/4 + ln|x|/24 - (x^2/1440)*2F3(1, 1; 7/2, 4, 2; -x^2/4) + C"
        assert doc.dumps() == doc.text

    def test_exp_text(self):
        doc = emit_formula(IntegralSpec("exp", -1, 2, 2))
        assert doc.text == "F(x) = x^-3/3 - x^-1 - (x/2)*2F2(1, 1/2; 3, 3/2; -x^2) + C"

    def test_exp_fractional_parameters(self):
        doc = emit_formula(IntegralSpec("exp", -1, 1, "2.7"))
        assert "2F2(1, 1.3; 5, 2.3; -x)" in doc.text
        assert "(x^1.3/31.2)" in doc.text

    def test_bad_format(self):
        with pytest.raises(ValueError):
            emit_formula(IntegralSpec("cos", 1, 1, 3), "latex")

    def test_json_schema(self):
        doc = emit_formula(IntegralSpec("cos", 1, 1, 3), "json").structured
        assert {"family", "lambda", "beta", "alpha", "head", "log_coef", "tail"} <= set(doc)
        assert doc["head"][0] == {"coef_float": -0.25, "exponent": "-4", "coef_num": -1, "coef_den": 4}
        assert doc["log_coef"] == "1/24"
        tail = doc["tail"]
        assert (tail["p"], tail["q"]) == (2, 3)
        assert tail["a"] == ["1", "1"] and tail["b"] == ["7/2", "4", "2"]
        assert tail["t0"] == "-1/1440" and tail["arg_scale"] == "-1/4"
        assert doc["decomposition"] == {"m": 1, "epsilon": "1", "case": "EpsOne"}

    @pytest.mark.parametrize("spec", GRID + [IntegralSpec("exp", -1.0, 1.0, 2.7)], ids=str)
    def test_json_round_trip(self, spec):
        doc = emit_formula(spec, "json")
        payload = doc.dumps()
        again = FormulaDoc.loads(payload)
        assert again.dumps() == payload
        assert again.text == doc.text
        _, form = form_from_structured(json.loads(payload))
        assert form == primitive(spec.family, spec.lam, spec.beta, spec.alpha)

    @pytest.mark.parametrize("spec", GRID, ids=str)
    @pytest.mark.parametrize("x", [0.5, 1.0, 2.0])
    def test_structured_reevaluation(self, spec, x):
        _, form = form_from_structured(json.loads(emit_formula(spec, "json").dumps()))
        assert eval_form(form, x).value == pytest.approx(antiderivative(spec, x).value, rel=1e-12)

    @settings(max_examples=40)
    @given(
        st.sampled_from(list(Family)),
        st.integers(-30, 30).filter(bool),
        st.integers(10, 40),
        st.integers(11, 80),
    )
    def test_round_trip_property(self, family, lam, beta, alpha):
        spec = IntegralSpec(family, F(lam, 10), F(beta, 10), F(alpha, 10))
        payload = emit_formula(spec, "json").dumps()
        _, form = form_from_structured(json.loads(payload))
        assert form == primitive(spec.family, spec.lam, spec.beta, spec.alpha)
        assert math.isfinite(eval_form(form, 0.9).value)
