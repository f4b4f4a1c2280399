"""Projective points, subspaces, wedge powers, and exact transform classification."""

import random

import pytest

from curvact.errors import DegenerateInputError, DimensionMismatchError
from curvact.gaussian import gr
from curvact.projective import (
    PnPoint,
    ProjTransform,
    apply,
    characteristic_polynomial,
    classify_transform,
    fixed_points,
    modulus_grouped_eigenspaces,
    orbit_sample,
    span,
    wedge_power,
)


def rand_transform(rng, n, height=3):
    while True:
        rows = [
            [gr(rng.randint(-height, height), rng.randint(-height, height)) for _ in range(n + 1)]
            for _ in range(n + 1)
        ]
        try:
            return ProjTransform(tuple(tuple(r) for r in rows))
        except DegenerateInputError:
            continue


def rand_point(rng, n, height=4):
    while True:
        try:
            return PnPoint(tuple(gr(rng.randint(-height, height)) for _ in range(n + 1)))
        except DegenerateInputError:
            continue


class TestApply:
    def test_identity(self):
        x = PnPoint((gr(2), gr(-1), gr(5)))
        assert apply(ProjTransform.identity(2), x) == x

    def test_diagonal(self):
        t = ProjTransform.diagonal([4, 2, 1])
        assert apply(t, PnPoint((gr(1), gr(1), gr(1)))) == PnPoint((gr(1), gr("1/2"), gr("1/4")))

    def test_antidiagonal(self):
        j2 = ProjTransform(((gr(0), gr(0), gr(1)), (gr(0), gr(1), gr(0)), (gr(1), gr(0), gr(0))))
        assert apply(j2, PnPoint((gr(1), gr(0), gr(0)))) == PnPoint((gr(0), gr(0), gr(1)))

    def test_dimension_checked(self):
        with pytest.raises(DimensionMismatchError):
            apply(ProjTransform.identity(2), PnPoint((gr(1), gr(0))))

    def test_composition_property(self):
        rng = random.Random(23)
        for _ in range(200):
            n = rng.choice([1, 2, 3])
            a, b = rand_transform(rng, n), rand_transform(rng, n)
            x = rand_point(rng, n)
            assert apply(a.compose(b), x) == apply(a, apply(b, x))


class TestSpan:
    def test_single_point(self):
        s = span([PnPoint((gr(1), gr(0), gr(0)))])
        assert s.dim == 0

    def test_three_points_on_a_line(self):
        pts = [PnPoint((gr(1), gr(0), gr(0))), PnPoint((gr(0), gr(1), gr(0))),
               PnPoint((gr(1), gr(1), gr(0)))]
        s = span(pts)
        assert s.dim == 1
        assert s.contains(PnPoint((gr(5), gr(-2), gr(0))))
        assert not s.contains(PnPoint((gr(0), gr(0), gr(1))))

    def test_full_space(self):
        pts = [PnPoint(tuple(gr(1 if i == j else 0) for j in range(4))) for i in range(4)]
        assert span(pts).dim == 3


class TestWedge:
    def test_identity(self):
        for n, k in [(2, 1), (3, 1), (3, 2)]:
            assert wedge_power(ProjTransform.identity(n), k).is_identity()

    def test_diagonal(self):
        t = ProjTransform.diagonal([gr(2), gr(3), gr(5)])
        assert wedge_power(t, 1) == ProjTransform.diagonal([gr(6), gr(10), gr(15)])

    def test_multiplicative(self):
        rng = random.Random(41)
        for _ in range(25):
            a, b = rand_transform(rng, 2), rand_transform(rng, 2)
            lhs = wedge_power(a.compose(b), 1)
            rhs = wedge_power(a, 1).compose(wedge_power(b, 1))
            assert lhs == rhs

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            wedge_power(ProjTransform.identity(2), 2)


class TestClassify:
    def test_finite_elliptic(self):
        t = ProjTransform.diagonal([gr(1), gr(0, 1), gr(-1)])
        # oracle: the fourth power is scalar, lower powers are not
        assert not t.power(2).is_identity() and t.power(4).is_identity()
        c = classify_transform(t)
        assert (c.infinite, c.order, c.elliptic) == (False, 4, True)

    def test_infinite_nonelliptic(self):
        t = ProjTransform.diagonal([gr(2), gr(1), gr(1)])
        for m in range(1, 21):
            assert not t.power(m).is_identity()
        c = classify_transform(t)
        assert (c.infinite, c.elliptic) == (True, False)

    def test_infinite_elliptic(self):
        # 3/5 + 4/5 i has modulus exactly 1 but is not a fourth root of unity
        t = ProjTransform.diagonal([gr("3/5", "4/5"), gr(1), gr(1)])
        for m in range(1, 21):
            assert not t.power(m).is_identity()
        c = classify_transform(t)
        assert (c.infinite, c.elliptic) == (True, True)

    def test_nondiagonalizable_is_infinite(self):
        t = ProjTransform(((gr(1), gr(1)), (gr(0), gr(1))))
        c = classify_transform(t)
        assert (c.infinite, c.elliptic) == (True, False)

    def test_companion_of_cubic_is_projectively_finite(self):
        # the companion matrix C of x^3 - 2 satisfies C^3 = 2*Id, so it has
        # projective order 3 even though its spectrum avoids Q(i); the power
        # test must find this without any located eigenvalue
        t = ProjTransform(((gr(0), gr(0), gr(2)), (gr(1), gr(0), gr(0)), (gr(0), gr(1), gr(0))))
        c = classify_transform(t, bound=24)
        assert (c.infinite, c.order, c.elliptic) == (False, 3, True)

    def test_nonsplit_spectrum_is_undecided(self):
        # sqrt(2) block plus a fixed coordinate: infinite order, but no pair of
        # Q(i)-eigenvalues witnesses it, so the verdict is an honest Undecided
        t = ProjTransform(((gr(0), gr(2), gr(0)), (gr(1), gr(0), gr(0)), (gr(0), gr(0), gr(1))))
        c = classify_transform(t, bound=24)
        assert c.infinite is None and c.bound == 24 and c.elliptic is None

    def test_conjugation_invariance(self):
        rng = random.Random(9)
        samples = [
            ProjTransform.diagonal([gr(1), gr(0, 1), gr(-1)]),
            ProjTransform.diagonal([gr(2), gr(1), gr(1)]),
            ProjTransform.diagonal([gr("3/5", "4/5"), gr(1), gr(1)]),
        ]
        for t in samples:
            base = classify_transform(t)
            for _ in range(8):
                h = rand_transform(rng, 2)
                conj = h.compose(t).compose(h.inverse())
                c = classify_transform(conj)
                assert (c.infinite, c.order, c.elliptic) == (base.infinite, base.order, base.elliptic)

    def test_finite_order_fixes_sampled_points(self):
        rng = random.Random(31)
        t = ProjTransform.diagonal([gr(0, 1), gr(-1), gr(1)])
        c = classify_transform(t)
        assert c.infinite is False
        p = t.power(c.order)
        for _ in range(20):
            x = rand_point(rng, 2)
            assert apply(p, x) == x


class TestFixedPoints:
    def test_identity(self):
        eigs, residual = fixed_points(ProjTransform.identity(3))
        assert len(eigs) == 1 and eigs[0][1].dim == 3
        assert residual.is_constant()

    def test_distinct_diagonal(self):
        t = ProjTransform.diagonal([gr(4), gr(2), gr(1)])
        eigs, residual = fixed_points(t)
        # canonical scaling divides the lift by 4
        values = sorted((lam * gr(4) for lam, _ in eigs), key=lambda x: x.re)
        assert values == [gr(1), gr(2), gr(4)]
        assert all(space.dim == 0 for _, space in eigs)
        assert residual.is_constant()
        for lam, space in eigs:
            pt = space.points()[0]
            assert apply(t, pt) == pt

    def test_rotation_block(self):
        t = ProjTransform(((gr(0), gr(-1), gr(0)), (gr(1), gr(0), gr(0)), (gr(0), gr(0), gr(1))))
        eigs, residual = fixed_points(t)
        # the canonical lift rescales the matrix by -1, so eigenvalues are
        # {i, -i, 1} times that common factor
        assert {str(lam * gr(-1)) for lam, _ in eigs} == {"1*i", "-1*i", "1"}
        assert residual.is_constant()
        for lam, space in eigs:
            assert space.dim == 0
            assert apply(t, space.points()[0]) == space.points()[0]

    def test_characteristic_polynomial_monic(self):
        rng = random.Random(2)
        for _ in range(20):
            t = rand_transform(rng, rng.choice([1, 2, 3]))
            chi = characteristic_polynomial(t)
            assert chi.degree == t.dim + 1
            assert chi.coeff(t.dim + 1) == gr(1)


class TestInvariantStructure:
    def test_modulus_groups_are_invariant(self):
        t = ProjTransform.diagonal([gr(2), gr(-2), gr(1)])
        groups = modulus_grouped_eigenspaces(t)
        assert len(groups) == 2
        for _, subspace in groups:
            for pt in subspace.points():
                assert subspace.contains(apply(t, pt))

    def test_orbit_sampling_distinct_for_infinite_order(self):
        t = ProjTransform.diagonal([gr(2), gr(1), gr(1)])
        q = PnPoint((gr(1), gr(1), gr(1)))
        pts = orbit_sample(t, q, 12)
        assert len(set(pts)) == 12
