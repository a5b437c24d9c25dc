import math
from fractions import Fraction

import numpy as np
import pytest
from scipy import integrate as si
from scipy.stats import binom as binom_dist

from kernel_entropy import catalog
from kernel_entropy.basis import DomainError


def _p(n, k, x):
    return binom_dist.pmf(k, n, x)


def _quad(f, a, b):
    return si.quad(f, a, b, epsabs=1e-14, epsrel=1e-13, limit=200)[0]


def _kernel_sv(K, a, b, atoms=()):
    """S and V of x -> int K(t) f(t) dt + sum w_i f(t_i)."""
    S = _quad(lambda t: K(t) ** 2, a, b) + sum(w * w for _, w in atoms)
    m1 = _quad(lambda t: t * K(t), a, b) + sum(w * t for t, w in atoms)
    m2 = _quad(lambda t: t * t * K(t), a, b) + sum(w * t * t for t, w in atoms)
    return S, m2 - m1 * m1


@pytest.mark.parametrize("n,x", [(1, 0.3), (4, 0.0), (4, 0.55), (9, 0.9)])
def test_kantorovich(n, x):
    def K(t):
        k = min(int(t * (n + 1)), n)
        return (n + 1) * _p(n, k, x)
    S = sum((n + 1) * _p(n, k, x) ** 2 for k in range(n + 1))
    m1 = sum(_p(n, k, x) * (2 * k + 1) / (2 * (n + 1)) for k in range(n + 1))
    m2 = sum(_p(n, k, x) * ((k + 1) ** 3 - k**3) / (3 * (n + 1) ** 2) for k in range(n + 1))
    got = catalog.kantorovich_sv(n, x)
    assert got[0] == pytest.approx(S, rel=1e-13)
    assert got[1] == pytest.approx(m2 - m1 * m1, rel=1e-12, abs=1e-15)


def test_kantorovich_at_origin():
    assert catalog.kantorovich_sv(5, 0.0) == pytest.approx((6.0, 1 / 12 / 36))


@pytest.mark.parametrize("r", [0.01, 1 / (8 * math.pi), 1.0])
def test_gauss_weierstrass(r):
    K = catalog.gauss_weierstrass_kernel(r)
    w = 40 * math.sqrt(r)
    S, V = _kernel_sv(K, -w, w)
    assert catalog.gauss_weierstrass_sv(r) == pytest.approx((S, V), rel=1e-12)
    assert catalog.convolution_sv(K, (-w, w)) == pytest.approx((S, V), rel=1e-12)


def test_gauss_weierstrass_unit_energy():
    assert catalog.gauss_weierstrass_sv(1 / (8 * math.pi))[0] == pytest.approx(1.0, rel=1e-15)


def test_convolution_mass_deficit():
    K = catalog.gauss_weierstrass_kernel(1.0)
    with pytest.raises(ValueError, match="mass"):
        catalog.convolution_sv(K, (-1.0, 1.0))


@pytest.mark.parametrize("n,x", [(1, 0.5), (3, 0.2), (8, 2.5)])
def test_post_widder(n, x):
    c = (n / x) ** n / math.factorial(n - 1)
    K = lambda t: c * t ** (n - 1) * math.exp(-n * t / x)  # noqa: E731
    S, V = _kernel_sv(K, 0.0, 60 * x)
    assert catalog.post_widder_sv(n, x) == pytest.approx((S, V), rel=1e-10)


def test_post_widder_domain():
    with pytest.raises(DomainError):
        catalog.post_widder_sv(2, 0.0)


def test_durrmeyer_first_coefficients():
    assert catalog.durrmeyer_coeffs(1).coeffs == [Fraction(4, 3), Fraction(2, 3), Fraction(4, 3)]


@pytest.mark.parametrize("n", [1, 2, 5, 12])
def test_durrmeyer_coeff_sequence(n):
    seq = catalog.durrmeyer_coeffs(n)
    assert seq.is_symmetric and seq.is_positive
    assert len(seq.second_differences()) == 2 * n - 1


@pytest.mark.parametrize("n,x", [(1, 0.25), (3, 0.0), (3, 0.4), (7, 0.85)])
def test_durrmeyer_against_kernel(n, x):
    K = lambda t: (n + 1) * sum(_p(n, k, x) * _p(n, k, t) for k in range(n + 1))  # noqa: E731
    S, V = _kernel_sv(K, 0.0, 1.0)
    assert catalog.durrmeyer_sv(n, x) == pytest.approx((S, V), rel=1e-11)


@pytest.mark.parametrize("n,x", [(1, 0.3), (2, 0.7), (4, 0.0), (6, 0.45)])
def test_genuine_bd_against_kernel(n, x):
    def K(t):
        if n == 1:
            return 0.0
        return (n - 1) * sum(_p(n, k, x) * _p(n - 2, k - 1, t) for k in range(1, n))
    atoms = [(0.0, (1 - x) ** n), (1.0, x**n)]
    S, V = _kernel_sv(K, 0.0, 1.0, atoms)
    assert catalog.genuine_bd_sv(n, x) == pytest.approx((S, V), rel=1e-11, abs=1e-15)


def test_descriptor_validation():
    with pytest.raises(ValueError):
        catalog.OperatorDescriptor("nope")
    with pytest.raises(DomainError):
        catalog.OperatorDescriptor("durrmeyer", n=0)
    with pytest.raises(DomainError):
        catalog.OperatorDescriptor("gauss_weierstrass")
    with pytest.raises(ValueError):
        catalog.OperatorDescriptor("convolution", kernel=lambda s: s, window=(1.0, 0.0))
    assert catalog.baskakov(3, 0).label == "baskakov(n=3,c=0)"


def test_profile_shape_and_values():
    prof = catalog.profile(catalog.baskakov(3, -1), 0.0, 1.0, 5)
    np.testing.assert_allclose(prof.column("x"), [0, 0.25, 0.5, 0.75, 1])
    assert prof.points[0].S == 1.0 and prof.points[-1].S == 1.0
    np.testing.assert_allclose(prof.column("tsallis"), 1 - prof.column("S"))
    with pytest.raises(ValueError):
        catalog.EntropyProfile(prof.descriptor, prof.points[::-1])


def test_grid_rules():
    assert list(catalog.grid(2.0, 2.0, 1)) == [2.0]
    with pytest.raises(ValueError):
        catalog.grid(1.0, 0.0, 3)
