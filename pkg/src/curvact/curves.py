"""Parametrized rational curves in projective n-space.

A CurveMap is a primitive (n+1)-tuple of homogeneous bivariate polynomials of
one common degree: the parametrization [z, w] -> [psi_0 : ... : psi_n].
Primitivity (coordinate gcd 1) is enforced on construction; use
CurveMap.primitive to build one from a raw tuple while capturing the factor
that was removed. Zero coordinates are allowed (padded curves living in a
coordinate subspace), but the map may not be constant.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .errors import DegenerateInputError, DimensionMismatchError
from .gaussian import ONE, ZERO, GaussianRational
from .poly import HomogPoly, P1Point, poly_gcd_many, divide_exact
from .projective import MobiusTransform, PnPoint, ProjSubspace, ProjTransform, span_of_rows


@dataclass(frozen=True, slots=True)
class CurveMap:
    coords: tuple[HomogPoly, ...]

    def __post_init__(self) -> None:
        coords = tuple(self.coords)
        if len(coords) < 2:
            raise DimensionMismatchError("a curve needs at least two coordinates")
        nonzero = [p for p in coords if not p.is_zero()]
        if not nonzero:
            raise DegenerateInputError("all coordinates vanish")
        d = nonzero[0].degree
        if any(p.degree != d for p in nonzero):
            raise ValueError("coordinates must share one degree")
        # normalize zero coordinates to the common degree
        coords = tuple(p if not p.is_zero() else HomogPoly.zero(d) for p in coords)
        g = poly_gcd_many(nonzero)
        if g.degree != 0:
            raise ValueError("coordinates share a factor; use CurveMap.primitive")
        if linalg.rank(self._coefficient_rows(coords, d)) < 2:
            raise DegenerateInputError("the map is constant (a single point)")
        object.__setattr__(self, "coords", coords)

    @staticmethod
    def _coefficient_rows(coords, degree) -> linalg.Matrix:
        return tuple(
            tuple(p.coeff(e) for e in range(degree + 1)) for p in coords
        )

    @staticmethod
    def primitive(coords) -> tuple["CurveMap", HomogPoly]:
        """Divide out the common factor; returns (curve, removed gcd)."""
        coords = tuple(coords)
        nonzero = [p for p in coords if not p.is_zero()]
        if not nonzero:
            raise DegenerateInputError("all coordinates vanish")
        g = poly_gcd_many(nonzero)
        if g.degree == 0:
            return CurveMap(coords), HomogPoly.constant(ONE)
        reduced = tuple(
            divide_exact(p, g) if not p.is_zero() else HomogPoly.zero(p.degree - g.degree)
            for p in coords
        )
        return CurveMap(reduced), g

    # -- geometry ------------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.coords) - 1

    @property
    def degree(self) -> int:
        return self.coords[0].degree

    def evaluate(self, t: P1Point) -> PnPoint:
        return PnPoint(tuple(p.eval_point(t) for p in self.coords))

    def coefficient_matrix(self) -> linalg.Matrix:
        """Rows = coordinates, columns = monomials z^e w^(d-e), e ascending."""
        return self._coefficient_rows(self.coords, self.degree)

    def span(self) -> ProjSubspace:
        """The smallest projective subspace containing the image."""
        return span_of_rows(self.n, linalg.transpose(self.coefficient_matrix()))

    def is_degenerate(self) -> bool:
        return self.span().dim < self.n

    def transform(self, t: ProjTransform) -> "CurveMap":
        """The curve g∘psi; stays primitive because g is invertible."""
        if t.dim != self.n:
            raise DimensionMismatchError("transform dimension disagrees with the curve")
        rows = []
        for row in t.matrix:
            acc = HomogPoly.zero(self.degree)
            for c, p in zip(row, self.coords):
                if not c.is_zero() and not p.is_zero():
                    acc = acc + p.scale(c)
            rows.append(acc)
        return CurveMap(tuple(rows))

    def reparametrize(self, m: MobiusTransform) -> "CurveMap":
        """The curve psi∘m for a Möbius transformation m of the parameter line."""
        if m.dim != 1:
            raise DimensionMismatchError("reparametrization must be a Möbius transformation")
        (a, b), (c, d) = m.matrix
        return CurveMap(tuple(p.compose_linear(a, b, c, d) for p in self.coords))

    def proportional(self, other: "CurveMap") -> bool:
        """Exact equality as projective maps (coordinatewise up to one scalar)."""
        if self.n != other.n:
            return False
        anchor = next(
            (i for i in range(self.n + 1)
             if not self.coords[i].is_zero() and not other.coords[i].is_zero()),
            None,
        )
        if anchor is None:
            return False
        p0, q0 = self.coords[anchor], other.coords[anchor]
        for p, q in zip(self.coords, other.coords):
            if p.is_zero() != q.is_zero():
                return False
            if p.is_zero():
                continue
            if not (p * q0) == (q * p0):
                return False
        return True

    # -- serialization ---------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "degree": self.degree,
            "coordinates": [p.to_json() for p in self.coords],
        }

    @staticmethod
    def from_json(obj: dict) -> "CurveMap":
        coords = tuple(HomogPoly.from_json(p) for p in obj["coordinates"])
        curve = CurveMap(coords)
        if curve.n != obj["n"] or curve.degree != obj["degree"]:
            raise ValueError("declared shape disagrees with the coordinates")
        return curve

    def __str__(self) -> str:
        return "[" + " : ".join(str(p) for p in self.coords) + "]"


def fiber_parameters(
    curve: CurveMap, q: PnPoint
) -> tuple[list[tuple[P1Point, int]], HomogPoly]:
    """Exact preimage parameters of q under the curve, with multiplicities.

    Roots of the gcd of the cross-product polynomials q_i psi_j - q_j psi_i;
    the residual carries preimages that are not Q(i)-rational. An empty result
    with trivial residual certifies that q is not on the curve.
    """
    if q.dim != curve.n:
        raise DimensionMismatchError("point and curve live in different spaces")
    from .poly import linear_roots, poly_gcd

    cross: list[HomogPoly] = []
    for i in range(curve.n + 1):
        for j in range(i + 1, curve.n + 1):
            p = curve.coords[j].scale(q.coords[i]) - curve.coords[i].scale(q.coords[j])
            if not p.is_zero():
                cross.append(p)
    if not cross:
        raise DegenerateInputError("cross-product system vanished identically")
    g = cross[0].monic()
    for p in cross[1:]:
        if g.degree == 0:
            break
        g = poly_gcd(g, p)
    if g.degree == 0:
        return [], HomogPoly.constant(ONE)
    return linear_roots(g)


def curves_coincide(a: CurveMap, b: CurveMap) -> bool:
    """Same coordinates up to scalar — identical parametrizations, not just images."""
    return a.proportional(b)
