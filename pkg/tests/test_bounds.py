import json

import mpmath
import pytest

from kisslat.bounds import REGISTRY, constant, family_bound_m, m_scan
from kisslat.bounds import formulas as fm
from kisslat.bounds.report import ag_rate_report

PRINTED = {
    "e_s.s3_half": ("0.1201", 5e-5),
    "e_s.s3_half_per_symbol": ("0.001877", 5e-7),
    "effective.m5": ("0.033727", 1e-6),
    "effective.m6": ("0.033700", 1e-6),
    "effective.m7": ("0.0317709", 1e-6),
    "improved.m5": ("0.033800", 1e-6),
    "improved.m6": ("0.033715", 1e-6),
    "improved.m7": ("0.031774", 1e-6),
    "liminf.delta0": ("0.6506627", 1e-6),
    "liminf.bound": ("0.021937", 1e-5),
    "liminf.minimax": ("0.021937", 1e-5),
    "gs_variant.per_symbol": ("0.001874", 5e-7),
    "drinfeld.per_symbol": ("0.001877", 5e-7),
    "tilde_family.m7": ("0.020715", 1e-5),
}


@pytest.mark.parametrize("name", sorted(PRINTED))
def test_printed_constants(name):
    want, tol = PRINTED[name]
    r = constant(name)
    assert abs(mpmath.mpf(r.value) - mpmath.mpf(want)) <= tol
    assert r.passes


def test_every_registered_constant_evaluates():
    for name in REGISTRY:
        r = constant(name)
        assert mpmath.isfinite(mpmath.mpf(r.value))
        assert r.passes in (True, None)


def test_e3_full_value():
    assert abs(fm.e_s(3, mpmath.mpf("0.5")) - mpmath.mpf("0.120137")) < 1e-6


def test_m_scan_threshold():
    above = [r.inputs["m"] for r in m_scan() if r.details["above_threshold"]]
    assert above == [5, 6, 7]


def test_liminf_root_is_unique_and_accurate():
    d0, b, changes = fm.liminf_root()
    assert changes == 1
    assert abs(fm.liminf_equation(d0)) < 1e-9


def test_bisection_exit_conditions():
    f = lambda x: x**3 - 2
    lo, hi = mpmath.mpf(1), mpmath.mpf(2)
    root = fm.bisect(f, lo, hi, tol=mpmath.mpf("1e-11"))
    assert abs(f(root)) < 1e-9
    assert abs(root - mpmath.cbrt(2)) < 1e-10
    with pytest.raises(ValueError):
        fm.bisect(f, 2, 3)


def test_e_s_zeros():
    lo, hi = fm.e_s_zeros(3)
    assert lo < 0.5 < hi
    assert abs(fm.e_s(3, lo)) < 1e-9 and abs(fm.e_s(3, hi)) < 1e-9
    with pytest.raises(ValueError):
        fm.e_s_zeros(2)


def test_entropy_is_concave():
    xs = [mpmath.mpf(i) / 1001 for i in range(1, 1001)]
    h = [fm.entropy(x) for x in xs]
    assert all(h[i - 1] - 2 * h[i] + h[i + 1] <= 0 for i in range(1, len(h) - 1))
    assert fm.entropy(mpmath.mpf(1) / 2) == 1
    assert fm.entropy(0) == 0 == fm.entropy(1)


def test_finite_length_family_bound():
    N = 5 * 2**22
    full = family_bound_m(5, asymptotic_only=False, N=N)
    asym = family_bound_m(5)
    with fm.workprec():
        gap = mpmath.mpf(asym.value) - mpmath.mpf(full.value)
        assert abs(gap - (2 + 2 * mpmath.log(N, 2)) / N) < 1e-25
    assert mpmath.mpf(full.value) > 0


def test_precision_env(monkeypatch):
    monkeypatch.setenv("KF_PRECISION_BITS", "64")
    assert fm.precision_bits() == 64
    assert fm.precision_bits(200) == 200
    low = constant("liminf.delta0")
    monkeypatch.delenv("KF_PRECISION_BITS")
    high = constant("liminf.delta0", 256)
    assert abs(mpmath.mpf(low.value) - mpmath.mpf(high.value)) < 1e-12


def test_reports_are_byte_stable():
    a = constant("effective.m6").to_json()
    b = constant("effective.m6").to_json()
    assert a == b and json.loads(a)["passes"] is True


def test_tilde_family_m8_exceeds_m7():
    v7 = mpmath.mpf(constant("tilde_family.m7").value)
    v8 = mpmath.mpf(constant("tilde_family.m8").value)
    assert v8 > v7 and abs(v8 - mpmath.mpf("0.0207185")) < 1e-6


def test_packing_helpers():
    # E8: min norm 2 (Cartan), det 1 -> center density 1/16
    with fm.workprec():
        _packing_checks()


def _packing_checks():
    assert abs(fm.center_density(2, 1, 8) - mpmath.mpf(1) / 16) < 1e-30
    # GV at q = 2, d = 0.11 is about 0.5
    assert abs(fm.gilbert_varshamov(2, mpmath.mpf("0.11")) - (1 - fm.entropy(mpmath.mpf("0.11")))) < 1e-30


def test_ag_rate_report_carries_note():
    r = ag_rate_report(64)
    assert "without" in r.details["note"]
