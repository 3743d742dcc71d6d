"""Distribution families: closed forms against independent oracles.

The quadrature-backed incomplete moments are cross-checked two ways:
against special-function closed forms (regularized upper gamma for Frechet,
normal cdf for log-normal) and against dense trapezoid integration, so the
implementation route and the oracle routes stay independent.
"""

import math

import numpy as np
import pytest
from scipy.special import gammainc, gammaincc, ndtr

from zenga import (
    Frechet,
    LogNormal,
    Pareto,
    lambda_profile,
    parse_distribution,
    truncate,
    uniform_open,
)
from zenga.errors import (
    DegeneracyError,
    DomainError,
    InfiniteMeanError,
    UnsupportedFamilyError,
)

P_POINTS = np.array([0.001, 0.01, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99, 0.999])


def _trapezoid_moment(dist, lo, hi, nodes=1_000_001):
    t = np.linspace(lo, hi, nodes)
    return float(np.trapezoid(t * dist.pdf(t), t))


# -- parameter validation ----------------------------------------------------


def test_parameter_validation():
    for bad in (0.0, -1.0, math.nan, math.inf):
        with pytest.raises(DomainError):
            Pareto(bad, 1.0)
        with pytest.raises(DomainError):
            Pareto(2.0, bad)
        with pytest.raises(DomainError):
            Frechet(bad)
        with pytest.raises(DomainError):
            LogNormal(0.0, bad)
    with pytest.raises(DomainError):
        LogNormal(math.inf, 1.0)
    assert LogNormal(-2.0, 0.5).mu == -2.0


# -- means -------------------------------------------------------------------


def test_means_closed_forms():
    assert Pareto(2.0, 1.0).mean() == 2.0
    assert Pareto(1.5, 2.0).mean() == pytest.approx(6.0, rel=1e-15)
    assert Frechet(2.0).mean() == pytest.approx(math.sqrt(math.pi), rel=1e-15)
    assert LogNormal(0.0, 1.0).mean() == pytest.approx(math.exp(0.5), rel=1e-15)
    for dist in (Pareto(1.0, 1.0), Pareto(0.8, 1.0), Frechet(1.0), Frechet(0.5)):
        with pytest.raises(InfiniteMeanError):
            dist.mean()
    assert not Pareto(1.0, 1.0).has_finite_mean
    assert LogNormal(0.0, 1.0).has_finite_mean


def test_frechet_mean_against_trapezoid():
    fr = Frechet(2.0)
    # the integrand tail decays like t**-2, integrate far out and accept 1e-3
    approx = _trapezoid_moment(fr, 0.0, 2000.0)
    assert approx == pytest.approx(fr.mean(), abs=2e-3)


# -- cdf / sf / quantile ------------------------------------------------------


@pytest.mark.parametrize(
    "dist", [Pareto(2.0, 1.0), Pareto(1.5, 7.0), Frechet(2.0), LogNormal(0.0, 1.0)]
)
def test_quantile_cdf_roundtrip(dist):
    for p in P_POINTS:
        x = dist.quantile(float(p))
        assert dist.cdf(x) == pytest.approx(float(p), abs=1e-12)
        assert dist.cdf(x) + dist.sf(x) == pytest.approx(1.0, abs=1e-12)
    xs = dist.quantile(P_POINTS)
    assert np.all(np.diff(xs) > 0.0)


def test_cdf_left_of_support():
    assert Pareto(2.0, 3.0).cdf(2.9) == 0.0
    assert Pareto(2.0, 3.0).sf(2.9) == 1.0
    assert Frechet(2.0).cdf(0.0) == 0.0
    assert Frechet(2.0).cdf(-1.0) == 0.0
    assert LogNormal(0.0, 1.0).cdf(0.0) == 0.0
    assert LogNormal(0.0, 1.0).sf(-5.0) == 1.0
    assert Frechet(2.0).pdf(0.0) == 0.0
    assert LogNormal(0.0, 1.0).pdf(-1.0) == 0.0


def test_quantile_domain_errors():
    d = Pareto(2.0, 1.0)
    for bad in (0.0, 1.0, -0.5, 1.5):
        with pytest.raises(DomainError):
            d.quantile(bad)
    with pytest.raises(DomainError):
        d.cdf(math.nan)


def test_pareto_known_points():
    d = Pareto(2.0, 1.0)
    assert d.cdf(2.0) == pytest.approx(0.75, rel=1e-15)
    assert d.sf(2.0) == pytest.approx(0.25, rel=1e-15)
    assert d.quantile(0.75) == pytest.approx(2.0, rel=1e-15)
    fr = Frechet(2.0)
    assert fr.cdf(1.0) == pytest.approx(math.exp(-1.0), rel=1e-15)
    ln = LogNormal(0.0, 1.0)
    assert ln.cdf(1.0) == pytest.approx(0.5, rel=1e-15)


# -- incomplete first moment ---------------------------------------------------


def test_pareto_incomplete_moment_hand_values():
    d = Pareto(2.0, 1.0)
    # Q(x) = 1 - (x/x0)**(1-alpha): Q(2) = 1/2, Q(3) = 2/3, Q(1) = 0
    assert d.incomplete_moment(1.0) == 0.0
    assert d.incomplete_moment(0.5) == 0.0
    assert d.incomplete_moment(2.0) == pytest.approx(0.5, rel=1e-15)
    assert d.incomplete_moment(3.0) == pytest.approx(2.0 / 3.0, rel=1e-15)
    with pytest.raises(InfiniteMeanError):
        Pareto(1.0, 1.0).incomplete_moment(2.0)


def test_pareto_incomplete_moment_against_trapezoid():
    d = Pareto(2.5, 1.5)
    for x in (2.0, 5.0, 40.0):
        oracle = _trapezoid_moment(d, d.x0, x) / d.mean()
        assert d.incomplete_moment(x) == pytest.approx(oracle, abs=1e-7)


def test_frechet_incomplete_moment_against_gamma_closed_form():
    for alpha in (1.5, 2.0, 4.0):
        fr = Frechet(alpha)
        for x in (0.3, 0.8, 2.0, 10.0, 100.0):
            # Q(x) = Gamma_upper(1 - 1/alpha, x**-alpha) / Gamma(1 - 1/alpha):
            # substituting u = t**-alpha in the partial first moment turns it
            # into the upper incomplete gamma integral.
            oracle = float(gammaincc(1.0 - 1.0 / alpha, x**-alpha))
            assert fr.incomplete_moment(x) == pytest.approx(oracle, abs=1e-9)


def test_frechet_incomplete_moment_against_trapezoid():
    fr = Frechet(2.0)
    for x in (0.8, 2.0, 10.0):
        oracle = _trapezoid_moment(fr, 0.0, x) / fr.mean()
        assert fr.incomplete_moment(x) == pytest.approx(oracle, abs=1e-7)


def test_lognormal_incomplete_moment_against_normal_closed_form():
    for mu, sigma in ((0.0, 1.0), (1.0, 0.5), (-0.5, 2.0)):
        ln = LogNormal(mu, sigma)
        for x in (0.2, 1.0, 3.0, 20.0):
            # Q(x) = Phi((log x - mu - sigma**2) / sigma)
            oracle = float(ndtr((math.log(x) - mu - sigma**2) / sigma))
            assert ln.incomplete_moment(x) == pytest.approx(oracle, abs=1e-9)


def test_incomplete_moment_monotone_and_bounded():
    fr = Frechet(2.0)
    xs = [0.2, 0.5, 1.0, 2.0, 5.0, 50.0]
    qs = [fr.incomplete_moment(x) for x in xs]
    assert all(0.0 <= q <= 1.0 for q in qs)
    assert all(b >= a for a, b in zip(qs, qs[1:]))


# -- theoretical inequality curve ----------------------------------------------


def test_pareto_lambda_is_exactly_constant():
    for alpha in (1.5, 2.0, 4.0):
        for x0 in (1.0, 7.0):
            d = Pareto(alpha, x0)
            for p in (0.01, 0.3, 0.99):
                assert d.lambda_p(p) == 1.0 / alpha
            for x in (x0 * 1.01, x0 * 5.0, x0 * 100.0):
                assert d.lambda_x(x) == 1.0 / alpha


def _frechet_lambda_oracle(alpha: float, x: float) -> float:
    # 1 - Q(x) is the regularized lower incomplete gamma of x**-alpha.
    tail_share = float(gammainc(1.0 - 1.0 / alpha, x**-alpha))
    sf = -math.expm1(-(x**-alpha))
    return 1.0 - math.log(tail_share) / math.log(sf)


def test_frechet_lambda_x_against_closed_form_oracle():
    fr = Frechet(2.0)
    for x in (2.0, 10.0, 100.0, 1000.0):
        assert fr.lambda_x(x) == pytest.approx(_frechet_lambda_oracle(2.0, x), abs=1e-8)


def test_frechet_lambda_p_composes_quantile():
    fr = Frechet(2.0)
    for p in (0.5, 0.9, 0.999):
        oracle = _frechet_lambda_oracle(2.0, fr.quantile(p))
        assert fr.lambda_p(p) == pytest.approx(oracle, abs=1e-8)


def test_lambda_errors():
    with pytest.raises(InfiniteMeanError):
        Pareto(1.0, 1.0).lambda_p(0.5)
    with pytest.raises(InfiniteMeanError):
        Frechet(0.9).lambda_p(0.5)
    with pytest.raises(DomainError):
        Pareto(2.0, 1.0).lambda_p(0.0)
    with pytest.raises(DomainError):
        Pareto(2.0, 1.0).lambda_p(1.0)
    with pytest.raises(DomainError):
        Pareto(2.0, 1.0).lambda_x(0.5)
    # survival floor: Pareto(2,1) has sf(1e10) = 1e-20 < 1e-15
    with pytest.raises(DegeneracyError):
        Pareto(2.0, 1.0).lambda_x(1e10)
    with pytest.raises(DomainError):
        LogNormal(0.0, 1.0).lambda_x(-2.0)


def test_lambda_profile_shapes_and_validation():
    fr = Frechet(2.0)
    prof = lambda_profile(fr, [10.0, 100.0, 1000.0])
    assert prof.shape == (3,)
    # drift toward 1/alpha is monotone on this grid
    assert abs(prof[2] - 0.5) < abs(prof[1] - 0.5) < abs(prof[0] - 0.5)
    with pytest.raises(DomainError):
        lambda_profile(fr, [])
    with pytest.raises(DomainError):
        lambda_profile(fr, [1.0, 1.0, 2.0])
    with pytest.raises(DomainError):
        lambda_profile(fr, [3.0, 2.0])
    with pytest.raises(DomainError):
        lambda_profile(fr, [[1.0, 2.0]])


def test_lognormal_profile_keeps_drifting():
    # control family: no power-tail plateau, the profile keeps falling
    prof = lambda_profile(LogNormal(0.0, 1.0), [2.0, 5.0, 20.0, 100.0])
    assert np.all(np.diff(prof) < 0.0)
    assert prof[0] - prof[-1] > 0.2


# -- sampling -------------------------------------------------------------------


def test_sample_is_inverse_transform_of_the_stream():
    for dist in (Pareto(2.0, 1.0), Frechet(2.0), LogNormal(0.0, 1.0)):
        x = dist.sample(512, 77)
        assert np.array_equal(x, dist.quantile(uniform_open(77, 512)))
        assert np.array_equal(x, dist.sample(512, 77))
        assert not np.array_equal(x, dist.sample(512, 78))


def test_sample_medians_near_theory():
    # medians rather than means: two of these families have infinite variance
    n = 100_000
    assert np.median(Pareto(2.0, 1.0).sample(n, 5)) == pytest.approx(math.sqrt(2.0), abs=0.02)
    assert np.median(Frechet(2.0).sample(n, 6)) == pytest.approx(math.log(2.0) ** -0.5, abs=0.02)
    assert np.median(LogNormal(0.0, 1.0).sample(n, 7)) == pytest.approx(1.0, abs=0.02)


def test_sample_respects_support():
    x = Pareto(2.0, 3.0).sample(10_000, 11)
    assert x.min() >= 3.0
    assert np.all(Frechet(2.0).sample(10_000, 12) > 0.0)
    with pytest.raises(DomainError):
        Pareto(2.0, 1.0).sample(0, 1)
    with pytest.raises(DomainError):
        Pareto(2.0, 1.0).sample(10, -4)


# -- spec strings, parsing, truncation --------------------------------------------


def test_spec_string_roundtrip():
    for dist in (Pareto(2.0, 1.0), Pareto(1.5, 7.25), Frechet(3.0), LogNormal(-0.5, 2.0)):
        assert parse_distribution(dist.spec_string()) == dist
    assert Pareto(2.0, 1.0).spec_string() == "pareto:2,1"
    assert str(Frechet(2.0)) == "frechet:2"


def test_parse_accepts_spacing_and_case():
    assert parse_distribution(" Pareto: 2 , 1 ") == Pareto(2.0, 1.0)
    assert parse_distribution("FRECHET:2.5") == Frechet(2.5)


def test_parse_rejects_junk():
    bad = [
        "bogus:1",
        "pareto",
        "pareto:",
        "pareto:2",
        "pareto:2,1,9",
        "pareto:a,b",
        "frechet:2,3",
        "lognormal:0",
        "pareto:nan,1",
        "pareto:2,inf",
        "",
        ":2,1",
    ]
    for text in bad:
        with pytest.raises(DomainError):
            parse_distribution(text)
    with pytest.raises(DomainError):
        parse_distribution(42)


def test_truncate_closure():
    assert truncate(Pareto(2.0, 1.0), 3.0) == Pareto(2.0, 3.0)
    tiny = 1.0 + 1e-12
    assert truncate(Pareto(2.0, 1.0), tiny) == Pareto(2.0, tiny)
    with pytest.raises(DomainError):
        truncate(Pareto(2.0, 1.0), 1.0)
    with pytest.raises(DomainError):
        truncate(Pareto(2.0, 1.0), 0.5)
    with pytest.raises(DomainError):
        truncate(Pareto(2.0, 1.0), math.inf)
    with pytest.raises(UnsupportedFamilyError):
        truncate(Frechet(2.0), 3.0)
    with pytest.raises(UnsupportedFamilyError):
        truncate(LogNormal(0.0, 1.0), 3.0)


def test_truncation_matches_conditional_survival():
    # Pr[X > x | X > x2] = (x/x2)**-alpha: the truncated family is the
    # conditional law, so its sf must equal the ratio of parent sfs.
    parent = Pareto(2.5, 1.0)
    child = truncate(parent, 4.0)
    for x in (4.5, 10.0, 123.0):
        assert child.sf(x) == pytest.approx(parent.sf(x) / parent.sf(4.0), rel=1e-12)
    assert child.tail_index == parent.tail_index
