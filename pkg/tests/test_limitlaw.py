import math

import numpy as np
import pytest

from ginibre_radius import (DomainError, GuardError, LawKind, LogRadiusSample, Estimator,
                            Regime, RegimeKind, a_norm, b_norm, gumbel_constants_theorem2a,
                            normalizers_theorem1, radial_law_theorem2b, regime_of,
                            sample_batch_repr, standardize_theorem1, standardize_theorem2a,
                            validate_spec)
from scipy.stats import rankdata


def fake(values):
    return [LogRadiusSample(float(v), i, Estimator.REPRESENTATION, 0) for i, v in enumerate(values)]


def test_a_b_examples():
    assert b_norm(math.exp(4)) == pytest.approx(0.5, abs=1e-15)
    # mpmath reference values at 40 digits
    assert a_norm(100.0) == pytest.approx(1.0060979533347029, abs=1e-12)
    assert b_norm(100.0) == pytest.approx(0.46599060178465608, abs=1e-12)


@pytest.mark.parametrize("f", [a_norm, b_norm])
def test_a_b_domain(f):
    for y in (1.0, 0.5, -2.0):
        with pytest.raises(DomainError):
            f(y)


def test_normalizers_finite():
    spec = validate_spec([4, 6, 5, 4])
    norms = normalizers_theorem1(spec, Regime.finite(37 / 60))
    assert norms.center == pytest.approx(2.2341765026477007, abs=1e-12)
    assert norms.scale == pytest.approx(0.5 * math.sqrt(37 / 60), abs=1e-15)
    assert norms.scale == pytest.approx(0.39264063297965822, abs=1e-12)
    assert (norms.a_n, norms.b_n) == (0.0, 1.0)


def test_normalizers_zero_guard():
    square = validate_spec([8] * 9)
    assert square.delta_n == 1.0
    with pytest.raises(DomainError):
        normalizers_theorem1(square, Regime.zero())
    assert normalizers_theorem1(square, Regime.finite(1.0)).a_n == 0.0


def test_normalizers_zero_regime():
    spec = validate_spec([200, 200])
    assert spec.delta_n == pytest.approx(0.005, abs=1e-18)
    norms = normalizers_theorem1(spec, Regime.zero())
    assert norms.a_n == a_norm(1 / spec.delta_n)
    assert norms.b_n == b_norm(1 / spec.delta_n)


def test_standardize_theorem1_identities():
    spec = validate_spec([4, 6, 5, 4])
    norms = normalizers_theorem1(spec, Regime.finite(spec.delta_n))
    assert standardize_theorem1(fake([norms.center]), norms)[0] == pytest.approx(0.0, abs=1e-15)
    zspec = validate_spec([200, 200])
    znorms = normalizers_theorem1(zspec, Regime.zero())
    v = standardize_theorem1(fake([znorms.center + znorms.scale * znorms.a_n]), znorms)
    assert v[0] == pytest.approx(0.0, abs=1e-12)


def test_standardize_is_elementwise():
    spec = validate_spec([6, 8, 6])
    norms = normalizers_theorem1(spec, Regime.finite(0.3))
    values = np.array([1.0, 2.5, 0.3, 1.7])
    perm = np.array([2, 0, 3, 1])
    assert np.array_equal(standardize_theorem1(fake(values[perm]), norms),
                          standardize_theorem1(fake(values), norms)[perm])
    consts = gumbel_constants_theorem2a(spec)
    assert np.array_equal(standardize_theorem2a(fake(values[perm]), consts),
                          standardize_theorem2a(fake(values), consts)[perm])


def test_gumbel_constants_examples():
    spec = validate_spec([100, 100])
    c = gumbel_constants_theorem2a(spec)
    assert c.alpha_n == pytest.approx(42.919320525786945, abs=1e-10)
    assert c.beta_n == pytest.approx(2.1590520269755175, abs=1e-12)
    assert c.log_scale_center == pytest.approx(0.5 * math.log(100), abs=1e-15)


def test_gumbel_constants_delta_inverse_e(monkeypatch):
    spec = validate_spec([3, 3])
    monkeypatch.setattr(type(spec), "delta_n", property(lambda self: math.exp(-1)))
    c = gumbel_constants_theorem2a(spec)
    assert c.alpha_n == pytest.approx(2 * math.exp(0.5), abs=1e-14)
    assert c.beta_n == pytest.approx(1 - 0.5 * math.log(2 * math.pi), abs=1e-14)
    assert c.beta_n == pytest.approx(0.081061, abs=1e-6)


def test_gumbel_constants_guard_and_center():
    with pytest.raises(DomainError):
        gumbel_constants_theorem2a(validate_spec([4] * 5))
    c = gumbel_constants_theorem2a(validate_spec([200, 200]))
    assert c.log_scale_center == pytest.approx(2.649158683274018, abs=1e-12)


def test_standardize_theorem2a_identities():
    c = gumbel_constants_theorem2a(validate_spec([50, 60, 50]))
    v = standardize_theorem2a(fake([c.log_scale_center, c.log_scale_center + math.log(2)]), c)
    assert v[0] == pytest.approx(-c.beta_n, abs=1e-12)
    assert v[1] == pytest.approx(c.alpha_n - c.beta_n, abs=1e-10)


def test_alpha_n_scale_relation():
    for dims in ([10, 10], [30, 40, 35, 30], [64] * 5, [500, 900, 500]):
        spec = validate_spec(dims)
        c = gumbel_constants_theorem2a(spec)
        assert c.alpha_n * math.sqrt(spec.delta_n) / 2 == pytest.approx(
            math.sqrt(-math.log(spec.delta_n)), abs=1e-12)


def test_square_reduction():
    for n, m in [(16, 4), (32, 128), (8, 2048), (10, 3), (7, 7)]:
        spec = validate_spec([n] * (m + 1))
        ratio = m / n
        assert spec.delta_n == pytest.approx(ratio, abs=1e-12)
        norms = normalizers_theorem1(spec, Regime.finite(ratio))
        assert norms.scale == pytest.approx(0.5 * math.sqrt(ratio), abs=1e-12)


def test_constants_are_pure():
    spec = validate_spec([30, 41, 33, 30])
    assert normalizers_theorem1(spec, Regime.zero()) == normalizers_theorem1(spec, Regime.zero())
    assert gumbel_constants_theorem2a(spec) == gumbel_constants_theorem2a(spec)


def test_theorem1_and_2a_rank_consistency():
    spec = validate_spec([100, 120, 100])
    samples = sample_batch_repr(spec, 500, 4)
    v1 = standardize_theorem1(samples, normalizers_theorem1(spec, Regime.zero()))
    v2 = standardize_theorem2a(samples, gumbel_constants_theorem2a(spec))
    assert np.array_equal(rankdata(v1), rankdata(v2))


def test_radial_law():
    law = radial_law_theorem2b(4.0)
    assert law.kind is LawKind.RADIAL
    assert law.cdf(1e-8) < 1e-12
    assert law.cdf(1.0) == pytest.approx(0.8402087756035921, abs=1e-12)
    assert law.cdf(0.5) < law.cdf(1.0) < law.cdf(2.0)
    with pytest.raises(DomainError):
        radial_law_theorem2b(1e-8)


def test_regime_heuristic():
    assert regime_of(validate_spec([200, 200])).kind is RegimeKind.ALPHA_ZERO
    four = validate_spec([8] * 33)
    assert four.delta_n == 4.0
    assert regime_of(four) == Regime.finite(4.0)
    assert regime_of(validate_spec([4] * 101)).kind is RegimeKind.ALPHA_INFINITE
    assert regime_of(four, Regime.finite(4.0)) == Regime.finite(4.0)


def test_regime_guard():
    with pytest.raises(GuardError):
        regime_of(validate_spec([4] * 5), Regime.zero())
    assert regime_of(validate_spec([4] * 5), Regime.infinite()).kind is RegimeKind.ALPHA_INFINITE


def test_regime_laws():
    assert Regime.zero().limit_law().kind is LawKind.GUMBEL
    assert Regime.infinite().limit_law().kind is LawKind.NORMAL
    law = Regime.finite(2.0).limit_law()
    assert law.kind is LawKind.PHI_ALPHA and law.alpha == 2.0
    with pytest.raises(DomainError):
        Regime.finite(0.0)
