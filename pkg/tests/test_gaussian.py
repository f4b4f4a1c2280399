"""Field arithmetic in Q(i): axioms, exact square roots, unit orders."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curvact.gaussian import GaussianRational, gr, sqrt_fraction, sqrt_gaussian

small_fractions = st.fractions(
    min_value=Fraction(-20), max_value=Fraction(20), max_denominator=12
)
gaussians = st.builds(GaussianRational, small_fractions, small_fractions)
nonzero_gaussians = gaussians.filter(lambda x: not x.is_zero())


@given(gaussians, gaussians, gaussians)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(nonzero_gaussians)
def test_multiplicative_inverse(a):
    assert a * a.inverse() == gr(1)
    assert (1 / a) * a == gr(1)


@given(gaussians, gaussians)
def test_norm_multiplicative(a, b):
    assert (a * b).norm() == a.norm() * b.norm()


@given(gaussians)
def test_conjugate_norm(a):
    assert a * a.conjugate() == GaussianRational(a.norm(), Fraction(0))


@given(nonzero_gaussians, st.integers(min_value=-6, max_value=6))
def test_integer_powers(a, e):
    direct = gr(1)
    base = a if e >= 0 else a.inverse()
    for _ in range(abs(e)):
        direct = direct * base
    assert a**e == direct


def test_unit_orders():
    assert gr(1).unit_order() == 1
    assert gr(-1).unit_order() == 2
    assert gr(0, 1).unit_order() == 4
    assert gr(0, -1).unit_order() == 4
    assert gr(2).unit_order() is None
    # modulus one but not a root of unity of Q(i)
    assert gr("3/5", "4/5").norm() == 1
    assert gr("3/5", "4/5").unit_order() is None


def test_sqrt_fraction():
    assert sqrt_fraction(Fraction(9, 4)) == Fraction(3, 2)
    assert sqrt_fraction(Fraction(0)) == 0
    assert sqrt_fraction(Fraction(2)) is None
    assert sqrt_fraction(Fraction(-1)) is None


@settings(max_examples=200)
@given(gaussians)
def test_sqrt_of_squares(a):
    root = sqrt_gaussian(a * a)
    assert root is not None
    assert root == a or root == -a


def test_sqrt_specific_values():
    assert sqrt_gaussian(gr(-9)) == gr(0, 3)
    assert sqrt_gaussian(gr(0, 2)) in (gr(1, 1), gr(-1, -1))
    # i itself has no square root in Q(i)
    assert sqrt_gaussian(gr(0, 1)) is None
    assert sqrt_gaussian(gr(2)) is None
    assert sqrt_gaussian(gr(-3)) is None


@given(gaussians)
def test_json_round_trip(a):
    assert GaussianRational.from_json(a.to_json()) == a


def test_json_strings_are_fractions():
    doc = gr("3/2", "-7").to_json()
    assert doc == {"re": "3/2", "im": "-7"}
