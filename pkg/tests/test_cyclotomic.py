"""Exact cyclotomic arithmetic: canonical form, conjugation, float embedding."""

import cmath
import math
import random
from fractions import Fraction

import pytest

from kzlab.cyclotomic import (
    AlphaParam,
    CyclotomicNumber,
    cyclotomic_polynomial,
    root_of_unity,
)
from kzlab.errors import InexactInput

# Euler phi for the conductors used below, computed by hand.
PHI = {1: 1, 3: 2, 4: 2, 5: 4, 7: 6, 8: 4, 9: 6, 11: 10, 12: 4, 15: 8, 16: 8, 20: 8, 24: 8}

KNOWN_POLYS = {
    1: (-1, 1),
    2: (1, 1),
    3: (1, 1, 1),
    4: (1, 0, 1),
    6: (1, -1, 1),
    8: (1, 0, 0, 0, 1),
    9: (1, 0, 0, 1, 0, 0, 1),
    12: (1, 0, -1, 0, 1),
}


@pytest.mark.parametrize("n,coeffs", sorted(KNOWN_POLYS.items()))
def test_cyclotomic_polynomial_known_values(n, coeffs):
    assert cyclotomic_polynomial(n) == coeffs


@pytest.mark.parametrize("n,phi", sorted(PHI.items()))
def test_cyclotomic_polynomial_degree(n, phi):
    assert len(cyclotomic_polynomial(n)) - 1 == phi


def test_root_of_unity_basics():
    assert root_of_unity(1, 0) == CyclotomicNumber(1)
    i = root_of_unity(4, 1)
    assert i * i == CyclotomicNumber(-1)
    assert abs(i.approx_complex() - 1j) < 1e-15
    assert root_of_unity(12, 2) ** 3 == CyclotomicNumber(-1)


@pytest.mark.parametrize("n", [1, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 16, 20, 24])
def test_root_of_unity_power_identity(n):
    for a in range(n):
        z = root_of_unity(n, a)
        assert z ** n == CyclotomicNumber(1)


@pytest.mark.parametrize("n", [4, 5, 6, 8, 9, 10, 12, 15])
def test_root_of_unity_primitive_order(n):
    for a in range(n):
        z = root_of_unity(n, a)
        order = n // math.gcd(a, n) if a else 1
        for m in range(1, n + 1):
            assert (z ** m == CyclotomicNumber(1)) == (m % order == 0)


def test_canonical_form_is_conductor_minimal():
    # same value reached through different conductors: identical data, hash
    a = root_of_unity(12, 3)
    b = root_of_unity(4, 1)
    assert a == b
    assert a.conductor == b.conductor == 4
    assert hash(a) == hash(b)
    # zeta_6 lives in Q(zeta_3)
    z6 = root_of_unity(6, 1)
    assert z6.conductor == 3
    assert z6 == -(root_of_unity(3, 1) ** 2)
    # dict lookups see through the construction route
    assert {a: "hit"}[b] == "hit"


def test_demotion_after_cancellation():
    z3, z4 = root_of_unity(3, 1), root_of_unity(4, 1)
    s = z3 + z4
    assert s.conductor == 12
    back = s - z4
    assert back == z3
    assert back.conductor == 3
    assert (s - s).is_zero()
    assert (z4 + z4.conj()).is_zero()


def test_rational_fast_paths():
    x = CyclotomicNumber(Fraction(3, 7))
    y = CyclotomicNumber("2/7")
    assert (x + y) == CyclotomicNumber(Fraction(5, 7))
    assert (x * y).rational_value() == Fraction(6, 49)
    assert x.conductor == 1 and x.is_rational()
    z = root_of_unity(5, 1)
    assert (CyclotomicNumber(0) * z).is_zero()
    # sum over all 5th roots is -1 (power-basis reduction at work)
    total = sum((root_of_unity(5, a) for a in range(1, 5)), CyclotomicNumber(0))
    assert total == CyclotomicNumber(-1)


def test_field_inverse():
    rng = random.Random(7)
    for n in (3, 4, 5, 8, 12):
        for _ in range(5):
            coeffs = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(PHI[n])]
            x = sum((root_of_unity(n, j) * CyclotomicNumber(c)
                     for j, c in enumerate(coeffs)), CyclotomicNumber(0))
            if x.is_zero():
                continue
            assert x * x.inverse() == CyclotomicNumber(1)
            assert (1 / x) * x == CyclotomicNumber(1)
    with pytest.raises(ZeroDivisionError):
        CyclotomicNumber(0).inverse()


def test_conjugation_involution_and_multiplicativity():
    rng = random.Random(11)
    samples = []
    for n in (3, 4, 5, 7, 8, 12):
        for _ in range(4):
            x = sum((root_of_unity(n, j) * rng.randint(-3, 3)
                     for j in range(PHI[n])), CyclotomicNumber(0))
            samples.append(x)
    for x in samples:
        assert x.conj().conj() == x
    for x in samples[:10]:
        for y in samples[10:18]:
            assert (x * y).conj() == x.conj() * y.conj()
            assert (x + y).conj() == x.conj() + y.conj()


def test_approx_complex_against_direct_sum():
    # float embedding within 1e-12 * (1 + sum |coeffs|) of the defining sum
    rng = random.Random(3)
    for n in (3, 4, 5, 8, 9, 12, 15):
        for _ in range(8):
            coeffs = [Fraction(rng.randint(-1000, 1000)) for _ in range(PHI[n])]
            x = sum((root_of_unity(n, j) * CyclotomicNumber(c)
                     for j, c in enumerate(coeffs)), CyclotomicNumber(0))
            direct = sum(float(c) * cmath.exp(2j * cmath.pi * j / n)
                         for j, c in enumerate(coeffs))
            bound = 1e-12 * (1 + sum(abs(float(c)) for c in coeffs))
            assert abs(x.approx_complex() - direct) <= bound


def test_approx_complex_respects_operations():
    rng = random.Random(5)
    xs = []
    for n in (5, 8, 12):
        for _ in range(4):
            xs.append(sum((root_of_unity(n, j) * rng.randint(-9, 9)
                           for j in range(PHI[n])), CyclotomicNumber(0)))
    for x in xs:
        assert abs(x.conj().approx_complex() - x.approx_complex().conjugate()) < 1e-12
    for x in xs[:6]:
        for y in xs[6:]:
            ax, ay = x.approx_complex(), y.approx_complex()
            assert abs((x + y).approx_complex() - (ax + ay)) < 1e-12
            assert abs((x * y).approx_complex() - ax * ay) < 1e-10 * (1 + abs(ax) * abs(ay))


def test_known_float_values():
    z8 = root_of_unity(8, 1)
    expected = complex(math.sqrt(2) / 2, math.sqrt(2) / 2)
    assert abs(z8.approx_complex() - expected) < 1e-14
    half = (root_of_unity(6, 1) + root_of_unity(6, 5)) * CyclotomicNumber(Fraction(1, 2))
    assert half == CyclotomicNumber(Fraction(1, 2))


def test_real_and_imag_parts():
    z = root_of_unity(12, 1)
    re, im = z.real_part(), z.imag_part()
    assert re + root_of_unity(4, 1) * im == z
    assert re.conj() == re and im.conj() == im
    assert abs(re.approx_complex() - math.cos(math.pi / 6)) < 1e-14
    assert abs(im.approx_complex() - 0.5) < 1e-14


def test_immutability_and_hash_consistency():
    x = root_of_unity(5, 2)
    with pytest.raises(AttributeError):
        x._n = 3
    y = root_of_unity(5, 1) * root_of_unity(5, 1)
    assert x == y and hash(x) == hash(y)


def test_float_input_rejected():
    with pytest.raises(InexactInput):
        CyclotomicNumber(0.5)
    with pytest.raises(InexactInput):
        AlphaParam.make(0.25)


def test_json_round_trip():
    x = root_of_unity(12, 1) * CyclotomicNumber(Fraction(-3, 2)) + CyclotomicNumber(2)
    data = x.to_json_dict()
    assert data["conductor"] == 12
    assert all(isinstance(s, str) for s in data["coeffs"])
    assert CyclotomicNumber.from_json_dict(data) == x


def test_alpha_param():
    a = AlphaParam.make(Fraction(1, 4))
    assert a.conductor == 4
    assert a.rho == root_of_unity(4, 1)
    assert a.zeta == root_of_unity(4, 3)
    assert a.rho * a.zeta == CyclotomicNumber(1)
    b = AlphaParam.from_rk(2, 3)  # 2/6 reduces to 1/3
    assert b.alpha == Fraction(1, 3) and b.conductor == 3
    c = AlphaParam.make("3/10")
    assert c.conductor == 10
    assert c.rho.conductor == 5  # Q(zeta_10) = Q(zeta_5)
    assert abs(c.rho.approx_complex() - cmath.exp(2j * cmath.pi * 0.3)) < 1e-14


@pytest.mark.parametrize("bad", [Fraction(0), Fraction(1, 2), Fraction(3, 5), Fraction(-1, 4)])
def test_alpha_param_range(bad):
    with pytest.raises(ValueError):
        AlphaParam.make(bad)


def test_alpha_param_conjugation_identities():
    for a, b in [(1, 4), (1, 6), (1, 3), (2, 5), (3, 10), (1, 12), (5, 12)]:
        p = AlphaParam.make(Fraction(a, b))
        assert p.rho.conj() == p.zeta
        assert p.zeta.conj() == p.rho
        assert p.rho * p.rho.conj() == CyclotomicNumber(1)
        assert abs(p.rho.approx_complex() - cmath.exp(2j * cmath.pi * a / b)) < 1e-13
