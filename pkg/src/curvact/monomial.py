"""Monomial curves, their torus and full automorphism groups, and the
irreducible (n+1)-dimensional representation of 2x2 matrices.

The monomial curve of an exponent tuple k = (k_1 > ... > k_m >= 1) in
n-dimensional projective space (n >= m) is

    [z^k1, z^k2 w^(k1-k2), ..., z^km w^(k1-km), w^k1, 0, ..., 0].

The two-parameter diagonal torus acting as (z, w) -> (alpha z, beta w) always
preserves it; the anti-diagonal identity J_n joins in exactly when the gap
sequence of k reads the same in both directions (the symmetric case).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .curves import CurveMap
from .errors import DegenerateInputError
from .gaussian import ONE, ZERO, GaussianRational, gr
from .poly import HomogPoly
from .projective import MobiusTransform, ProjTransform


@dataclass(frozen=True, slots=True)
class ExponentTuple:
    k: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        k = tuple(int(x) for x in self.k)
        if not k:
            raise ValueError("empty exponent tuple")
        if any(b <= 0 for b in k) or any(a <= b for a, b in zip(k, k[1:])):
            raise ValueError("exponents must be strictly decreasing positive integers")
        if self.n < len(k):
            raise ValueError("ambient dimension smaller than the tuple length")
        object.__setattr__(self, "k", k)

    @property
    def length(self) -> int:
        return len(self.k)

    @property
    def top(self) -> int:
        return self.k[0]

    def is_proper(self) -> bool:
        return math.gcd(*self.k) == 1

    def is_symmetric(self) -> bool:
        """Gap palindrome test; tuples of length < 3 are never symmetric."""
        if not self.is_proper():
            raise DegenerateInputError("symmetry is defined for co-prime tuples only")
        m = self.length
        if m < 3:
            return False
        ext = self.k + (0,)
        return all(
            ext[m - j - 1] - ext[m - j] == ext[j] - ext[j + 1]
            for j in range(0, m - 1)
        )

    def reversed_gaps(self) -> "ExponentTuple":
        """The tuple of the same curve with the two marked parameters swapped."""
        k1 = self.k[0]
        rev = (k1,) + tuple(k1 - self.k[m] for m in range(self.length - 1, 0, -1))
        return ExponentTuple(rev, self.n)

    def canonical(self) -> "ExponentTuple":
        rev = self.reversed_gaps()
        return self if self.k <= rev.k else rev

    def reduced(self) -> tuple["ExponentTuple", int]:
        """Divide out the exponent gcd; returns (proper tuple, multiplier)."""
        g = math.gcd(*self.k)
        if g == 1:
            return self, 1
        return ExponentTuple(tuple(x // g for x in self.k), self.n), g

    def to_json(self) -> dict:
        return {"k": list(self.k), "n": self.n}

    @staticmethod
    def from_json(obj: dict) -> "ExponentTuple":
        return ExponentTuple(tuple(obj["k"]), obj["n"])

    def __str__(self) -> str:
        return f"({', '.join(str(x) for x in self.k)}) in P^{self.n}"


def make_monomial_curve(k: ExponentTuple) -> CurveMap:
    """The parametrization [z^k1, ..., z^km w^(k1-km), w^k1, 0, ...]; degree k1."""
    d = k.top
    coords = [HomogPoly.monomial(d, e) for e in k.k]
    coords.append(HomogPoly.monomial(d, 0))
    coords.extend(HomogPoly.zero(d) for _ in range(k.n - k.length))
    return CurveMap(tuple(coords))


def vk_element(k: ExponentTuple, alpha, beta) -> ProjTransform:
    """The diagonal torus element with psi(alpha z, beta w) = g . psi(z, w)."""
    a, b = GaussianRational.of(alpha), GaussianRational.of(beta)
    if a.is_zero() or b.is_zero():
        raise DegenerateInputError("torus parameters must be nonzero")
    d = k.top
    entries = [a**e * b ** (d - e) for e in k.k]
    entries.append(b**d)
    entries.extend(ONE for _ in range(k.n - k.length))
    return ProjTransform.diagonal(entries)


def jn(n: int) -> ProjTransform:
    """The anti-diagonal identity on n+1 coordinates (an involution up to scale)."""
    if n < 1:
        raise ValueError("need n >= 1")
    size = n + 1
    return ProjTransform(
        tuple(
            tuple(ONE if i + j == size - 1 else ZERO for j in range(size))
            for i in range(size)
        )
    )


PARAMETER_SWAP = MobiusTransform(((ZERO, ONE), (ONE, ZERO)))


# ---------------------------------------------------------------------------
# the irreducible representation of 2x2 matrices on degree-n forms
# ---------------------------------------------------------------------------

def iota(n: int, m: MobiusTransform) -> ProjTransform:
    """The (n+1)x(n+1) image of a 2x2 matrix under the symmetric-power map.

    Entry (row m, column j, both 1-based) is

        C(n, j-1)/C(n, m-1) * sum_k C(n+1-j, k) C(j-1, m-1-k)
                                    a^(n+1-j-k) b^(j-m+k) c^k d^(m-1-k)

    where the sum runs over the full support of the binomials,
    max(0, m-j) <= k <= min(m-1, n+1-j); terms outside it are identically
    zero. Satisfies iota(M1 M2) = iota(M1) iota(M2) up to scale and
    iota(M)∘xi = xi∘M on the curve of degree-n monomials.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if m.dim != 1:
        raise ValueError("iota consumes 2x2 matrices")
    (a, b), (c, d) = m.matrix
    rows = []
    for row in range(1, n + 2):
        out = []
        for col in range(1, n + 2):
            lo = max(0, row - col)
            hi = min(row - 1, n + 1 - col)
            total = ZERO
            for k in range(lo, hi + 1):
                ea, eb, ec, ed = n + 1 - col - k, col - row + k, k, row - 1 - k
                assert min(ea, eb, ec, ed) >= 0, "exponent left the binomial support"
                weight = math.comb(n + 1 - col, k) * math.comb(col - 1, row - 1 - k)
                total = total + a**ea * b**eb * c**ec * d**ed * gr(weight)
            prefactor = Fraction(math.comb(n, col - 1), math.comb(n, row - 1))
            out.append(total * gr(prefactor))
        rows.append(tuple(out))
    return ProjTransform(tuple(rows))


def rational_normal_tuple(n: int) -> ExponentTuple:
    return ExponentTuple(tuple(range(n, 0, -1)), n)


# ---------------------------------------------------------------------------
# automorphism group description
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class AutomorphismGroupDescription:
    """The invariance group of a monomial curve, described by generators.

    torus_exponents lists the diagonal exponent pattern: entry (p, q) means
    the diagonal slot alpha^p beta^q. The anti-diagonal identity joins the
    torus exactly for symmetric tuples. applicability records whether the
    completeness theorem's hypothesis (proper tuple of full length with
    k_1 > n) holds; when it does not, the description is a verified subgroup
    but makes no completeness claim.
    """

    tuple: ExponentTuple
    torus_exponents: tuple[tuple[int, int], ...]
    includes_antidiagonal: bool
    applicability: bool
    verified: bool

    def to_json(self) -> dict:
        return {
            "tuple": self.tuple.to_json(),
            "torus_exponents": [list(e) for e in self.torus_exponents],
            "includes_antidiagonal": self.includes_antidiagonal,
            "applicability": self.applicability,
            "verified": self.verified,
        }


def automorphism_group(k: ExponentTuple) -> AutomorphismGroupDescription:
    """Generators of the invariance group, each checked symbolically."""
    if not k.is_proper():
        raise DegenerateInputError("automorphism description needs a proper tuple")
    symmetric = k.is_symmetric()
    applicable = k.length == k.n and k.top > k.n
    curve = make_monomial_curve(k)
    d = k.top
    exps = tuple((e, d - e) for e in k.k) + ((0, d),) + tuple((0, 0) for _ in range(k.n - k.length))

    # verify a generic torus element and, if claimed, the anti-diagonal
    sample = vk_element(k, gr(2), gr(3))
    torus_ok = curve.transform(sample).proportional(
        curve.reparametrize(MobiusTransform.diagonal([gr(2), gr(3)])))
    anti_ok = True
    if symmetric:
        anti_ok = curve.transform(jn(k.n)).proportional(curve.reparametrize(PARAMETER_SWAP))
    return AutomorphismGroupDescription(
        tuple=k,
        torus_exponents=exps,
        includes_antidiagonal=symmetric,
        applicability=applicable,
        verified=torus_ok and anti_ok,
    )
