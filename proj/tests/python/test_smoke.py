"""Smoke tests for the compiled goldprod extension."""

from fractions import Fraction

import pytest

import goldprod


def test_mobius_range():
    assert goldprod.mobius_range(10) == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]


def test_totient_range():
    assert goldprod.totient_range(10) == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4]


def test_dirichlet_convolution():
    # sum_{d|n} phi(d) = n
    assert goldprod.dirichlet_one_convolve(goldprod.totient_range(6)) == [1, 2, 3, 4, 5, 6]
    # sum_{d|n} mu(d) = [n == 1]
    assert goldprod.dirichlet_one_convolve(goldprod.mobius_range(6)) == [1, 0, 0, 0, 0, 0]


def test_totient_from_mobius():
    assert goldprod.totient_from_mobius(1) == 1
    assert goldprod.totient_from_mobius(10) == 4
    assert goldprod.totient_from_mobius(12) == 4


def test_verify_divisor_sums():
    report = goldprod.verify_divisor_sums(2000)
    assert report["pass"] is True
    assert report["phi_identity_ok"] is True
    assert report["mu_identity_ok"] is True
    assert report["limit"] == 2000


def test_tau_power_components():
    assert goldprod.tau_power(0) == (Fraction(1), Fraction(0))
    assert goldprod.tau_power(1) == (Fraction(1, 2), Fraction(1, 2))
    assert goldprod.tau_power(2) == (Fraction(3, 2), Fraction(1, 2))
    assert goldprod.tau_power(-2) == (Fraction(3, 2), Fraction(-1, 2))


def test_tau_power_multiplication_is_exact():
    def mul(p, q):
        a1, b1 = p
        a2, b2 = q
        return (a1 * a2 + 5 * b1 * b2, a1 * b2 + b1 * a2)

    for j, k in [(3, 4), (-7, 11), (25, -25), (100, 100)]:
        assert goldprod.tau_power(j + k) == mul(goldprod.tau_power(j), goldprod.tau_power(k))


def test_tau_decimal():
    assert goldprod.tau_decimal(1, digits=10) == "1.618033989"
    assert goldprod.tau_decimal(-1, digits=10) == "0.6180339887"


def test_lemma1():
    report = goldprod.lemma1("phi", "1/2", 64)
    assert report["pass"] is True
    assert report["identity"] == "lemma1_phi"
    assert report["target"].startswith("1.0000")
    golden = goldprod.lemma1("mu", "1/tau", 64)
    assert golden["pass"] is True
    assert golden["identity"] == "lemma2_mu"


def test_lemma2():
    report = goldprod.lemma2(50, prec_bits=192, digits=40)
    assert report["pass"] is True
    assert report["phi_sum"]["target"].startswith("1.618033988749894848")
    assert report["mu_sum"]["target"].startswith("0.618033988749894848")
    assert report["reciprocal_product"]["pass"] is True


def test_theorem():
    log_report = goldprod.theorem_log_sum(50)
    assert log_report["pass"] is True
    assert log_report["target"].startswith("1.0000")

    prod_report = goldprod.theorem_product(60, prec_bits=192, digits=40)
    assert prod_report["pass"] is True
    # P_60 carries e to ~12 digits (the tail is ~2e-12); the target is e itself.
    assert prod_report["partial"].startswith("2.718281828")
    assert prod_report["target"].startswith("2.71828182845904523536")


def test_special_product():
    report = goldprod.special_product("exp_x", "1/2", 64)
    assert report["pass"] is True
    assert report["rhs"].startswith("1.6487212707")


def test_general_identity():
    report = goldprod.general_identity(goldprod.mobius_range(32), "1/3", "1", 32)
    assert report["pass"] is True


def test_formal_coefficients():
    assert goldprod.formal_coefficients("phi", 12) == [Fraction(1)] * 12
    mu = goldprod.formal_coefficients("mu", 12)
    assert mu[0] == Fraction(1)
    assert mu[1:] == [Fraction(0)] * 11
    ones = goldprod.formal_coefficients("one", 4)
    assert ones == [Fraction(1), Fraction(1), Fraction(2, 3), Fraction(3, 4)]


def test_errors_surface_as_value_errors():
    with pytest.raises(ValueError):
        goldprod.mobius_range(0)
    with pytest.raises(ValueError):
        goldprod.lemma1("bogus", "1/2", 8)
    with pytest.raises(ValueError):
        goldprod.lemma1("phi", "3/2", 8)
    with pytest.raises(ValueError):
        goldprod.special_product("exp_x", "1/tau", 8)
