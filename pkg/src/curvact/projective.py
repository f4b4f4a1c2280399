"""Points, subspaces, and transformations of projective n-space over Q(i).

Transformations carry an exact (n+1)x(n+1) matrix normalized so the first
nonzero entry in row-major order is 1, which makes projective equality plain
structural equality. Order and ellipticity verdicts are exact whenever the
characteristic polynomial splits over Q(i); otherwise the classification
reports an honest Undecided rather than guessing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import linalg
from .errors import DegenerateInputError, DimensionMismatchError
from .gaussian import ONE, ZERO, GaussianRational, gr
from .linalg import Matrix
from .poly import HomogPoly, P1Point, linear_roots


@dataclass(frozen=True, slots=True)
class PnPoint:
    """Homogeneous coordinates, scaled so the first nonzero entry is 1."""

    coords: tuple[GaussianRational, ...]

    def __post_init__(self) -> None:
        cs = tuple(GaussianRational.of(c) for c in self.coords)
        lead = next((c for c in cs if not c.is_zero()), None)
        if lead is None:
            raise DegenerateInputError("the zero tuple is not a projective point")
        inv = lead.inverse()
        object.__setattr__(self, "coords", tuple(c * inv for c in cs))

    @property
    def dim(self) -> int:
        return len(self.coords) - 1

    def to_json(self) -> dict:
        return {"coords": [c.to_json() for c in self.coords]}

    @staticmethod
    def from_json(obj: dict) -> "PnPoint":
        return PnPoint(tuple(GaussianRational.from_json(c) for c in obj["coords"]))

    def __str__(self) -> str:
        return "[" + ", ".join(str(c) for c in self.coords) + "]"


def _canonical_matrix(rows: Matrix) -> Matrix:
    lead = next((x for row in rows for x in row if not x.is_zero()), None)
    if lead is None:
        raise DegenerateInputError("zero matrix")
    inv = lead.inverse()
    return tuple(tuple(x * inv for x in row) for row in rows)


@dataclass(frozen=True, slots=True)
class ProjTransform:
    """An element of PGL(n+1, Q(i)); the stored lift is canonically scaled."""

    matrix: Matrix

    def __post_init__(self) -> None:
        rows = linalg.matrix(self.matrix)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise DimensionMismatchError("transform matrix must be square")
        canon = _canonical_matrix(rows)
        if linalg.det(canon).is_zero():
            raise DegenerateInputError("transform matrix is singular")
        object.__setattr__(self, "matrix", canon)

    @staticmethod
    def identity(n: int) -> "ProjTransform":
        return ProjTransform(linalg.identity(n + 1))

    @staticmethod
    def diagonal(entries: Sequence) -> "ProjTransform":
        es = [GaussianRational.of(e) for e in entries]
        size = len(es)
        return ProjTransform(
            tuple(
                tuple(es[i] if i == j else ZERO for j in range(size))
                for i in range(size)
            )
        )

    @property
    def dim(self) -> int:
        return len(self.matrix) - 1

    def compose(self, other: "ProjTransform") -> "ProjTransform":
        """self after other (matrix product self * other)."""
        if self.dim != other.dim:
            raise DimensionMismatchError("composing transforms of different dimensions")
        return ProjTransform(linalg.mat_mul(self.matrix, other.matrix))

    def inverse(self) -> "ProjTransform":
        return ProjTransform(linalg.inverse(self.matrix))

    def power(self, n: int) -> "ProjTransform":
        if n < 0:
            return self.inverse().power(-n)
        result = linalg.identity(self.dim + 1)
        base = self.matrix
        e = n
        while e:
            if e & 1:
                result = linalg.mat_mul(result, base)
            base = linalg.mat_mul(base, base)
            e >>= 1
        return ProjTransform(result)

    def is_identity(self) -> bool:
        return linalg.is_scalar_matrix(self.matrix)

    def determinant(self) -> GaussianRational:
        return linalg.det(self.matrix)

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "rows": [[c.to_json() for c in row] for row in self.matrix],
        }

    @staticmethod
    def from_json(obj: dict) -> "ProjTransform":
        rows = tuple(
            tuple(GaussianRational.from_json(c) for c in row) for row in obj["rows"]
        )
        t = ProjTransform(rows)
        if t.dim != obj["dim"]:
            raise ValueError("declared dimension disagrees with the matrix")
        return t

    def __str__(self) -> str:
        return "[" + "; ".join(", ".join(str(x) for x in row) for row in self.matrix) + "]"


# A Möbius transformation is just a projective transformation of the line.
MobiusTransform = ProjTransform


def apply(t: ProjTransform, x: PnPoint) -> PnPoint:
    if t.dim != x.dim:
        raise DimensionMismatchError(f"transform of dim {t.dim} applied to point of dim {x.dim}")
    return PnPoint(linalg.mat_vec(t.matrix, x.coords))


def apply_mobius(m: MobiusTransform, t: P1Point) -> P1Point:
    if m.dim != 1:
        raise DimensionMismatchError("a Möbius transformation must be 2x2")
    image = linalg.mat_vec(m.matrix, t.coords())
    return P1Point(image[0], image[1])


@dataclass(frozen=True, slots=True)
class ProjSubspace:
    """A projective subspace, stored by the canonical RREF basis of its lift."""

    ambient: int
    basis: tuple[tuple[GaussianRational, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.basis) - 1

    def contains(self, x: PnPoint) -> bool:
        if x.dim != self.ambient:
            raise DimensionMismatchError("point lives in a different ambient space")
        stacked = self.basis + (x.coords,)
        return linalg.rank(stacked) == len(self.basis)

    def contains_subspace(self, other: "ProjSubspace") -> bool:
        stacked = self.basis + other.basis
        return linalg.rank(stacked) == len(self.basis)

    def points(self) -> list[PnPoint]:
        return [PnPoint(row) for row in self.basis]

    def to_json(self) -> dict:
        return {
            "ambient": self.ambient,
            "basis": [[c.to_json() for c in row] for row in self.basis],
        }


def span(points: Iterable[PnPoint]) -> ProjSubspace:
    pts = list(points)
    if not pts:
        raise DegenerateInputError("span of an empty point set")
    ambient = pts[0].dim
    if any(p.dim != ambient for p in pts):
        raise DimensionMismatchError("points live in different ambient spaces")
    reduced, pivots = linalg.rref(tuple(p.coords for p in pts))
    return ProjSubspace(ambient, reduced[: len(pivots)])


def span_of_rows(ambient: int, rows: Iterable[Sequence[GaussianRational]]) -> ProjSubspace:
    reduced, pivots = linalg.rref(tuple(tuple(r) for r in rows))
    return ProjSubspace(ambient, reduced[: len(pivots)])


# ---------------------------------------------------------------------------
# wedge powers
# ---------------------------------------------------------------------------

def wedge_power(t: ProjTransform, k: int) -> ProjTransform:
    """The induced transform on wedge coordinates of order k (basis e_I, I lex-sorted).

    Entry (I, J) is the (k+1)x(k+1) minor of the lift with rows I and columns J.
    """
    n = t.dim
    if not 1 <= k + 1 <= n:
        raise ValueError(f"wedge order {k} out of range for dimension {n}")
    index_sets = list(itertools.combinations(range(n + 1), k + 1))
    rows = []
    for rows_i in index_sets:
        row = []
        for cols_j in index_sets:
            sub = tuple(
                tuple(t.matrix[i][j] for j in cols_j) for i in rows_i
            )
            row.append(linalg.det(sub))
        rows.append(tuple(row))
    return ProjTransform(tuple(rows))


# ---------------------------------------------------------------------------
# spectral classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class TransformClass:
    """Order and ellipticity verdict; None marks an honest Undecided."""

    order: int | None            # the finite order, when known finite
    infinite: bool | None        # True = infinite, False = finite, None = undecided
    elliptic: bool | None
    bound: int | None = None     # the power-test bound used when undecided

    @staticmethod
    def finite(order: int, elliptic: bool) -> "TransformClass":
        return TransformClass(order=order, infinite=False, elliptic=elliptic)

    @staticmethod
    def infinite_order(elliptic: bool | None) -> "TransformClass":
        return TransformClass(order=None, infinite=True, elliptic=elliptic)

    @staticmethod
    def undecided(bound: int, elliptic: bool | None) -> "TransformClass":
        return TransformClass(order=None, infinite=None, elliptic=elliptic, bound=bound)

    def to_json(self) -> dict:
        if self.infinite is False:
            order = {"kind": "finite", "order": self.order}
        elif self.infinite is True:
            order = {"kind": "infinite"}
        else:
            order = {"kind": "undecided", "bound": self.bound}
        return {"order": order, "elliptic": self.elliptic}


def characteristic_polynomial(t: ProjTransform) -> HomogPoly:
    """det(x*Id - lift) as a homogeneous polynomial in (x, y), monic in x."""
    size = t.dim + 1
    samples = []
    for r in range(size + 1):
        x = gr(r)
        shifted = tuple(
            tuple(
                (x if i == j else ZERO) - t.matrix[i][j]
                for j in range(size)
            )
            for i in range(size)
        )
        samples.append((x, linalg.det(shifted)))
    coeffs = linalg.interpolate(samples)
    coeffs += [ZERO] * (size + 1 - len(coeffs))
    return HomogPoly.from_pairs(size, list(enumerate(coeffs)))


def eigen_decomposition(
    t: ProjTransform,
) -> tuple[list[tuple[GaussianRational, int, list[tuple[GaussianRational, ...]]]], HomogPoly]:
    """Q(i)-eigenvalues with algebraic multiplicity and kernel bases, plus the residual factor."""
    chi = characteristic_polynomial(t)
    roots, residual = linear_roots(chi)
    size = t.dim + 1
    out = []
    for point, mult in roots:
        if point.b.is_zero():
            raise AssertionError("a monic characteristic polynomial cannot vanish at infinity")
        lam = point.a / point.b
        shifted = tuple(
            tuple(t.matrix[i][j] - (lam if i == j else ZERO) for j in range(size))
            for i in range(size)
        )
        kernel = linalg.nullspace(shifted)
        out.append((lam, mult, kernel))
    out.sort(key=lambda item: (item[0].re, item[0].im))
    return out, residual


def fixed_points(
    t: ProjTransform,
) -> tuple[list[tuple[GaussianRational, ProjSubspace]], HomogPoly]:
    """All Q(i)-eigenvalues with exact eigenspaces, plus the unfactored residual."""
    eigs, residual = eigen_decomposition(t)
    return [
        (lam, span_of_rows(t.dim, kernel)) for lam, _, kernel in eigs
    ], residual


def classify_transform(t: ProjTransform, bound: int = 360) -> TransformClass:
    eigs, residual = eigen_decomposition(t)
    size = t.dim + 1
    split = residual.is_constant()
    located = [lam for lam, _, _ in eigs]

    if split:
        diagonalizable = sum(len(kern) for _, _, kern in eigs) == size
        if not diagonalizable:
            return TransformClass.infinite_order(elliptic=False)
        base = located[0]
        orders = []
        for lam in located:
            o = (lam / base).unit_order()
            if o is None:
                elliptic = all(lam.norm() == base.norm() for lam in located)
                return TransformClass.infinite_order(elliptic=elliptic)
            orders.append(o)
        order = 1
        for o in orders:
            order = order * o // _gcd_int(order, o)
        assert linalg.is_scalar_matrix(t.power(order).matrix), "finite order must have a scalar power"
        return TransformClass.finite(order, elliptic=True)

    # residual of degree >= 2: the spectrum does not split over Q(i)
    infinite_witness = any(
        (a / b).unit_order() is None
        for a, b in itertools.combinations(located, 2)
    ) if len(located) >= 2 else False
    norm_witness = len({lam.norm() for lam in located}) > 1
    if infinite_witness:
        return TransformClass.infinite_order(elliptic=False if norm_witness else None)
    for n in range(1, bound + 1):
        if linalg.is_scalar_matrix(t.power(n).matrix):
            return TransformClass.finite(n, elliptic=True)
    return TransformClass.undecided(bound, elliptic=False if norm_witness else None)


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


# ---------------------------------------------------------------------------
# invariant-subspace lattice and orbit sampling
# ---------------------------------------------------------------------------

def modulus_grouped_eigenspaces(
    t: ProjTransform,
) -> list[tuple[object, ProjSubspace]]:
    """Invariant subspaces spanned by eigenspaces of equal eigenvalue modulus.

    This realizes the located part of the invariant pair (K, L) attached to a
    non-elliptic transform; spectra that do not split over Q(i) contribute
    nothing here and are reported Undecided by classify_transform instead.
    """
    eigs, _ = eigen_decomposition(t)
    groups: dict = {}
    for lam, _, kernel in eigs:
        groups.setdefault(lam.norm(), []).extend(kernel)
    return [
        (norm, span_of_rows(t.dim, rows))
        for norm, rows in sorted(groups.items())
    ]


def orbit_sample(t: ProjTransform, q: PnPoint, count: int) -> list[PnPoint]:
    """The first `count` points q, t(q), t^2(q), ...; canonical, so duplicates compare equal."""
    out = [q]
    for _ in range(count - 1):
        out.append(apply(t, out[-1]))
    return out
