"""Homogeneous bivariate polynomials over the Gaussian rationals.

A HomogPoly is a polynomial in z, w all of whose terms share one total
degree. Terms are stored sparsely as (z-exponent, coefficient) pairs sorted
by ascending z-exponent, with the w-exponent implied (ew = degree - ez) and
zero coefficients never stored. The zero polynomial keeps an explicit degree
and an empty term list, so arithmetic stays degree-checked.

Root extraction returns only Q(i)-rational roots as points of the projective
line, together with a residual factor that has no Q(i) roots; monomial and
quadratic factors are resolved natively, anything of higher degree is
factored exactly over Q(i) through sympy's number-field machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import DegenerateInputError
from .gaussian import ONE, ZERO, GaussianRational, gr, sqrt_gaussian


@dataclass(frozen=True, slots=True)
class P1Point:
    """A point of the projective line, scaled so the first nonzero entry is 1."""

    a: GaussianRational
    b: GaussianRational

    def __post_init__(self) -> None:
        a, b = GaussianRational.of(self.a), GaussianRational.of(self.b)
        if a.is_zero() and b.is_zero():
            raise DegenerateInputError("[0, 0] is not a point of P^1")
        scale = a if not a.is_zero() else b
        object.__setattr__(self, "a", a / scale)
        object.__setattr__(self, "b", b / scale)

    def coords(self) -> tuple[GaussianRational, GaussianRational]:
        return (self.a, self.b)

    def vanishing_form(self) -> "HomogPoly":
        """The monic linear form b*z - a*w whose projective zero is this point."""
        p = HomogPoly.from_pairs(1, [(1, self.b), (0, -self.a)])
        return p.monic()

    def to_json(self) -> dict:
        return {"a": self.a.to_json(), "b": self.b.to_json()}

    @staticmethod
    def from_json(obj: dict) -> "P1Point":
        return P1Point(GaussianRational.from_json(obj["a"]), GaussianRational.from_json(obj["b"]))

    def __str__(self) -> str:
        return f"[{self.a}, {self.b}]"


P1_ZERO = P1Point(ZERO, ONE)     # parameter 0, the point [0, 1]
P1_INFINITY = P1Point(ONE, ZERO)  # parameter infinity, the point [1, 0]


@dataclass(frozen=True, slots=True)
class HomogPoly:
    degree: int
    coeffs: tuple[tuple[int, GaussianRational], ...]

    # -- construction ------------------------------------------------------

    @staticmethod
    def zero(degree: int = 0) -> "HomogPoly":
        return HomogPoly(degree, ())

    @staticmethod
    def constant(value) -> "HomogPoly":
        c = GaussianRational.of(value) if not isinstance(value, GaussianRational) else value
        if c.is_zero():
            return HomogPoly.zero(0)
        return HomogPoly(0, ((0, c),))

    @staticmethod
    def monomial(degree: int, ez: int, coeff=ONE) -> "HomogPoly":
        c = GaussianRational.of(coeff)
        if not 0 <= ez <= degree:
            raise ValueError(f"z-exponent {ez} out of range for degree {degree}")
        if c.is_zero():
            return HomogPoly.zero(degree)
        return HomogPoly(degree, ((ez, c),))

    @staticmethod
    def from_pairs(degree: int, pairs: Iterable[tuple[int, GaussianRational]]) -> "HomogPoly":
        acc: dict[int, GaussianRational] = {}
        for ez, c in pairs:
            if not 0 <= ez <= degree:
                raise ValueError(f"z-exponent {ez} out of range for degree {degree}")
            acc[ez] = acc.get(ez, ZERO) + c
        items = tuple(sorted((e, c) for e, c in acc.items() if not c.is_zero()))
        return HomogPoly(degree, items)

    # -- basics ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return self.degree == 0 or self.is_zero()

    def terms(self) -> Iterator[tuple[int, int, GaussianRational]]:
        for ez, c in self.coeffs:
            yield ez, self.degree - ez, c

    def coeff(self, ez: int) -> GaussianRational:
        for e, c in self.coeffs:
            if e == ez:
                return c
        return ZERO

    def min_z_exp(self) -> int:
        if self.is_zero():
            raise DegenerateInputError("zero polynomial has no support")
        return self.coeffs[0][0]

    def max_z_exp(self) -> int:
        if self.is_zero():
            raise DegenerateInputError("zero polynomial has no support")
        return self.coeffs[-1][0]

    def min_w_exp(self) -> int:
        return self.degree - self.max_z_exp()

    def leading_coeff(self) -> GaussianRational:
        """Coefficient of the highest z-power (the canonical leading term)."""
        if self.is_zero():
            return ZERO
        return self.coeffs[-1][1]

    # -- arithmetic --------------------------------------------------------

    def _check_degree(self, other: "HomogPoly") -> int:
        if self.is_zero():
            return other.degree
        if other.is_zero():
            return self.degree
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        return self.degree

    def __add__(self, other: "HomogPoly") -> "HomogPoly":
        d = self._check_degree(other)
        return HomogPoly.from_pairs(d, list(self.coeffs) + list(other.coeffs))

    def __sub__(self, other: "HomogPoly") -> "HomogPoly":
        return self + (-other)

    def __neg__(self) -> "HomogPoly":
        return HomogPoly(self.degree, tuple((e, -c) for e, c in self.coeffs))

    def scale(self, factor) -> "HomogPoly":
        f = GaussianRational.of(factor) if not isinstance(factor, GaussianRational) else factor
        if f.is_zero():
            return HomogPoly.zero(self.degree)
        return HomogPoly(self.degree, tuple((e, c * f) for e, c in self.coeffs))

    def __mul__(self, other: "HomogPoly") -> "HomogPoly":
        d = self.degree + other.degree
        if self.is_zero() or other.is_zero():
            return HomogPoly.zero(d)
        acc: dict[int, GaussianRational] = {}
        for e1, c1 in self.coeffs:
            for e2, c2 in other.coeffs:
                e = e1 + e2
                acc[e] = acc.get(e, ZERO) + c1 * c2
        return HomogPoly(d, tuple(sorted((e, c) for e, c in acc.items() if not c.is_zero())))

    def __pow__(self, exponent: int) -> "HomogPoly":
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = HomogPoly.constant(ONE)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def monic(self) -> "HomogPoly":
        lead = self.leading_coeff()
        if lead.is_zero() or lead.is_one():
            return self
        return self.scale(lead.inverse())

    def proportional(self, other: "HomogPoly") -> bool:
        """Exact equality up to a nonzero scalar of Q(i)."""
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        if self.degree != other.degree or len(self.coeffs) != len(other.coeffs):
            return False
        ratio = other.coeffs[0][1] / self.coeffs[0][1]
        return all(
            e1 == e2 and c1 * ratio == c2
            for (e1, c1), (e2, c2) in zip(self.coeffs, other.coeffs)
        )

    # -- evaluation and calculus --------------------------------------------

    def eval(self, z, w) -> GaussianRational:
        zv, wv = GaussianRational.of(z), GaussianRational.of(w)
        total = ZERO
        for ez, ew, c in self.terms():
            total = total + c * zv**ez * wv**ew
        return total

    def eval_point(self, t: P1Point) -> GaussianRational:
        return self.eval(t.a, t.b)

    def dz(self) -> "HomogPoly":
        if self.degree == 0:
            return HomogPoly.zero(0)
        return HomogPoly.from_pairs(
            self.degree - 1,
            [(e - 1, c * gr(e)) for e, c in self.coeffs if e > 0],
        )

    def dw(self) -> "HomogPoly":
        if self.degree == 0:
            return HomogPoly.zero(0)
        return HomogPoly.from_pairs(
            self.degree - 1,
            [(e, c * gr(self.degree - e)) for e, c in self.coeffs if e < self.degree],
        )

    def compose_linear(self, a, b, c, d) -> "HomogPoly":
        """Substitute z -> a*z + b*w, w -> c*z + d*w."""
        fz = HomogPoly.from_pairs(1, [(1, GaussianRational.of(a)), (0, GaussianRational.of(b))])
        fw = HomogPoly.from_pairs(1, [(1, GaussianRational.of(c)), (0, GaussianRational.of(d))])
        if self.is_zero():
            return HomogPoly.zero(self.degree)
        # cache powers of the two linear forms
        zp: list[HomogPoly] = [HomogPoly.constant(ONE)]
        wp: list[HomogPoly] = [HomogPoly.constant(ONE)]
        for _ in range(self.degree):
            zp.append(zp[-1] * fz)
            wp.append(wp[-1] * fw)
        total = HomogPoly.zero(self.degree)
        for ez, ew, coef in self.terms():
            total = total + (zp[ez] * wp[ew]).scale(coef)
        return total

    # -- chart bridges -------------------------------------------------------

    def univariate_z(self) -> list[GaussianRational]:
        """Coefficient list of p(t, 1) indexed by power of t."""
        u = [ZERO] * (self.degree + 1)
        for ez, c in self.coeffs:
            u[ez] = c
        return _trim(u)

    def univariate_w(self) -> list[GaussianRational]:
        """Coefficient list of p(1, u) indexed by power of u."""
        u = [ZERO] * (self.degree + 1)
        for ez, c in self.coeffs:
            u[self.degree - ez] = c
        return _trim(u)

    @staticmethod
    def homogenize(coeffs: Sequence[GaussianRational], degree: int) -> "HomogPoly":
        """Interpret coeffs as p(t) = sum c_r t^r and return sum c_r z^r w^(degree-r)."""
        if len(_trim(list(coeffs))) - 1 > degree:
            raise ValueError("degree too small to homogenize")
        return HomogPoly.from_pairs(degree, [(r, c) for r, c in enumerate(coeffs)])

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "terms": [
                {"ez": ez, "ew": ew, "re": str(c.re), "im": str(c.im)}
                for ez, ew, c in self.terms()
            ],
        }

    @staticmethod
    def from_json(obj: dict) -> "HomogPoly":
        d = obj["degree"]
        pairs = []
        for t in obj["terms"]:
            if t["ez"] + t["ew"] != d:
                raise ValueError("term exponents do not sum to the degree")
            pairs.append((t["ez"], GaussianRational(Fraction(t["re"]), Fraction(t["im"]))))
        return HomogPoly.from_pairs(d, pairs)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        bits = []
        for ez, ew, c in self.terms():
            mono = "".join(
                [f"z^{ez}" if ez > 1 else "z" if ez == 1 else "",
                 f"w^{ew}" if ew > 1 else "w" if ew == 1 else ""]
            )
            bits.append(f"({c}){mono}" if mono else f"({c})")
        return " + ".join(bits)


# ---------------------------------------------------------------------------
# univariate helpers (coefficient lists over Q(i), index = power)
# ---------------------------------------------------------------------------

def _trim(u: list[GaussianRational]) -> list[GaussianRational]:
    while u and u[-1].is_zero():
        u.pop()
    return u


def _udeg(u: list[GaussianRational]) -> int:
    return len(u) - 1


def _umul(u: list[GaussianRational], v: list[GaussianRational]) -> list[GaussianRational]:
    if not u or not v:
        return []
    out = [ZERO] * (len(u) + len(v) - 1)
    for i, a in enumerate(u):
        if a.is_zero():
            continue
        for j, b in enumerate(v):
            out[i + j] = out[i + j] + a * b
    return _trim(out)


def _umonic(u: list[GaussianRational]) -> list[GaussianRational]:
    if not u:
        return u
    lead = u[-1]
    if lead.is_one():
        return u
    inv = lead.inverse()
    return [c * inv for c in u]


def _udivmod(
    u: list[GaussianRational], v: list[GaussianRational]
) -> tuple[list[GaussianRational], list[GaussianRational]]:
    if not v:
        raise ZeroDivisionError("univariate division by zero")
    r = list(u)
    q = [ZERO] * max(0, len(u) - len(v) + 1)
    inv = v[-1].inverse()
    while len(r) >= len(v) and r:
        k = len(r) - len(v)
        factor = r[-1] * inv
        q[k] = factor
        for j, b in enumerate(v):
            r[k + j] = r[k + j] - factor * b
        r = _trim(r)
    return _trim(q), r


def _ugcd(u: list[GaussianRational], v: list[GaussianRational]) -> list[GaussianRational]:
    a, b = list(u), list(v)
    while b:
        _, r = _udivmod(a, b)
        a, b = b, _umonic(r)
    return _umonic(a)


def _uderiv(u: list[GaussianRational]) -> list[GaussianRational]:
    return _trim([u[r] * gr(r) for r in range(1, len(u))])


def _ueval(u: list[GaussianRational], x: GaussianRational) -> GaussianRational:
    total = ZERO
    for c in reversed(u):
        total = total * x + c
    return total


def _uroot_order(u: list[GaussianRational], x: GaussianRational) -> int:
    """Multiplicity of x as a root of u (0 if not a root)."""
    order = 0
    cur = list(u)
    while cur:
        # synthetic division by (t - x)
        quotient = [ZERO] * (len(cur) - 1)
        carry = ZERO
        for r in range(len(cur) - 1, 0, -1):
            carry = cur[r] + carry * x if r == len(cur) - 1 else cur[r] + carry * x
            quotient[r - 1] = carry
        remainder = cur[0] + carry * x
        if not remainder.is_zero():
            return order
        order += 1
        cur = _trim(quotient)
    return order


# ---------------------------------------------------------------------------
# gcd, valuation, roots
# ---------------------------------------------------------------------------

def _strip_monomials(p: HomogPoly) -> tuple[int, int, list[GaussianRational]]:
    """Write p = z^vz * w^vw * core and return (vz, vw, core as univariate in t)."""
    vz = p.min_z_exp()
    vw = p.min_w_exp()
    core = [ZERO] * (p.max_z_exp() - vz + 1)
    for ez, c in p.coeffs:
        core[ez - vz] = c
    return vz, vw, core


def poly_gcd(p: HomogPoly, q: HomogPoly) -> HomogPoly:
    """Monic-normalized greatest common divisor in Q(i)[z, w]."""
    if p.is_zero() and q.is_zero():
        raise DegenerateInputError("gcd of two zero polynomials")
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    vz1, vw1, u1 = _strip_monomials(p)
    vz2, vw2, u2 = _strip_monomials(q)
    core = _ugcd(u1, u2)
    vz, vw = min(vz1, vz2), min(vw1, vw2)
    d = vz + vw + _udeg(core)
    g = HomogPoly.from_pairs(d, [(vz + r, c) for r, c in enumerate(core)])
    return g.monic()


def poly_gcd_many(polys: Iterable[HomogPoly]) -> HomogPoly:
    g: HomogPoly | None = None
    for p in polys:
        if p.is_zero():
            continue
        g = p.monic() if g is None else poly_gcd(g, p)
        if g.degree == 0:
            return g
    if g is None:
        raise DegenerateInputError("gcd of an all-zero family")
    return g


def divide_exact(p: HomogPoly, q: HomogPoly) -> HomogPoly:
    """p / q when q divides p exactly; raises ValueError otherwise."""
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return HomogPoly.zero(p.degree - q.degree)
    vz1, vw1, u1 = _strip_monomials(p)
    vz2, vw2, u2 = _strip_monomials(q)
    if vz2 > vz1 or vw2 > vw1:
        raise ValueError("not an exact division (monomial factor)")
    quot, rem = _udivmod(u1, u2)
    if rem:
        raise ValueError("not an exact division")
    vz, vw = vz1 - vz2, vw1 - vw2
    return HomogPoly.from_pairs(vz + vw + _udeg(quot), [(vz + r, c) for r, c in enumerate(quot)])


def valuation_at(p: HomogPoly, t: P1Point) -> int:
    """Largest power of the linear form vanishing at t that divides p."""
    if p.is_zero():
        raise DegenerateInputError("valuation of the zero polynomial")
    if t == P1_ZERO:
        return p.min_z_exp()
    if t == P1_INFINITY:
        return p.min_w_exp()
    # canonical [1, b]: order of b as a root of p(1, u)
    return _uroot_order(p.univariate_w(), t.b)


def _quadratic_roots(u: list[GaussianRational]) -> list[tuple[GaussianRational, int]] | None:
    """Roots of a degree-2 coefficient list over Q(i); None if irrational."""
    c, b, a = u[0], u[1], u[2]
    disc = b * b - gr(4) * a * c
    s = sqrt_gaussian(disc)
    if s is None:
        return None
    two_a = gr(2) * a
    if s.is_zero():
        return [(-b / two_a, 2)]
    return [((-b + s) / two_a, 1), ((-b - s) / two_a, 1)]


def _fraction_from_sympy(x) -> Fraction:
    return Fraction(int(x.p), int(x.q))


def _gr_from_sympy(expr) -> GaussianRational:
    import sympy

    re_, im_ = expr.as_real_imag()
    return GaussianRational(_fraction_from_sympy(sympy.Rational(re_)), _fraction_from_sympy(sympy.Rational(im_)))


def _sympy_factor_roots(
    u: list[GaussianRational],
) -> tuple[list[tuple[GaussianRational, int]], list[GaussianRational]]:
    """Q(i)-roots (with multiplicity) and nonlinear residual, via sympy over QQ_I."""
    import sympy

    t = sympy.Symbol("t")
    expr = sympy.Integer(0)
    for r, c in enumerate(u):
        expr += (sympy.Rational(c.re.numerator, c.re.denominator)
                 + sympy.Rational(c.im.numerator, c.im.denominator) * sympy.I) * t**r
    _, factors = sympy.Poly(expr, t, domain="QQ_I").factor_list()
    roots: list[tuple[GaussianRational, int]] = []
    residual: list[GaussianRational] = [ONE]
    for fac, mult in factors:
        cs = fac.all_coeffs()  # descending
        if fac.degree() == 1:
            root = _gr_from_sympy(sympy.together(-cs[1] / cs[0]))
            roots.append((root, mult))
        else:
            fc = [_gr_from_sympy(sympy.nsimplify(c)) for c in reversed(cs)]
            for _ in range(mult):
                residual = _umul(residual, fc)
    return roots, residual


def linear_roots(p: HomogPoly) -> tuple[list[tuple[P1Point, int]], HomogPoly]:
    """All Q(i)-rational roots of p on P^1 with multiplicities, plus the residual.

    The product of the returned linear factors (with multiplicity) times the
    residual equals p up to a nonzero scalar; the residual has no further
    Q(i)-rational roots.
    """
    if p.is_zero():
        raise DegenerateInputError("roots of the zero polynomial")
    found: list[tuple[P1Point, int]] = []
    vz, vw, core = _strip_monomials(p)
    if vz:
        found.append((P1_ZERO, vz))
    if vw:
        found.append((P1_INFINITY, vw))
    e = _udeg(core)
    if e == 0:
        return found, HomogPoly.constant(ONE)
    if e == 1:
        root = -core[0] / core[1]
        found.append((P1Point(root, ONE), 1))
        return found, HomogPoly.constant(ONE)
    if e == 2:
        pair = _quadratic_roots(core)
        if pair is None:
            return found, HomogPoly.homogenize(_umonic(core), 2)
        for root, mult in pair:
            found.append((P1Point(root, ONE), mult))
        return found, HomogPoly.constant(ONE)
    roots, residual = _sympy_factor_roots(core)
    for root, mult in roots:
        found.append((P1Point(root, ONE), mult))
    res = HomogPoly.homogenize(_umonic(residual), _udeg(residual)) if _udeg(residual) > 0 \
        else HomogPoly.constant(ONE)
    return found, res


def squarefree_part(p: HomogPoly) -> HomogPoly:
    """The radical of p (each irreducible factor once), monic-normalized."""
    if p.is_zero():
        raise DegenerateInputError("squarefree part of the zero polynomial")
    vz, vw, core = _strip_monomials(p)
    rad = [ONE]
    if _udeg(core) > 0:
        g = _ugcd(core, _uderiv(core))
        rad, rem = _udivmod(core, g)
        assert not rem
    d = (vz > 0) + (vw > 0) + _udeg(rad)
    return HomogPoly.from_pairs(
        d, [((1 if vz > 0 else 0) + r, c) for r, c in enumerate(rad)]
    ).monic()
