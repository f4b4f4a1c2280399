"""Associated curves, ramification profiles, and Plücker-formula invariants.

The order-j associated curve of a parametrization is the tuple of
(j+1)x(j+1) Wronskian minors of the coordinate functions and their first j
derivatives. Everything is computed in the affine chart w = 1, homogenized to
the degree pinned down by the chart z = 1, and the two charts are compared;
disagreement would mean a bug, so it is asserted on every computation.

The common factor removed when primitivizing the order-j wedge carries all
ramification: its valuation v_j at a parameter gives the local exponents via
alpha_j = v_j - v_(j-1) + j, hence the ramification indices
s_j = v_(j+1) - 2 v_j + v_(j-1). Summed over all parameters (including the
non-rational ones) the same numbers are just degree differences of those gcd
factors, which keeps every global invariant exact whether or not the W-locus
splits over Q(i).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from . import linalg
from .curves import CurveMap
from .errors import (
    DegenerateCurveError,
    DegenerateInputError,
    InversionAmbiguousError,
    PluckerInconsistencyError,
)
from .gaussian import ONE, ZERO, GaussianRational, gr
from .poly import (
    HomogPoly,
    P1Point,
    _trim,
    _udeg,
    _ugcd,
    _umul,
    divide_exact,
    linear_roots,
    poly_gcd_many,
    valuation_at,
)
from .projective import MobiusTransform, PnPoint

Uni = list  # univariate coefficient list over GaussianRational


def point_sort_key(t: P1Point):
    return (t.a.re, t.a.im, t.b.re, t.b.im)


# ---------------------------------------------------------------------------
# wedge tables
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class WedgeData:
    order: int
    raw_degree: int                     # degree of the homogeneous minor tuple
    minors: tuple[HomogPoly, ...]       # lex-ordered by index set
    gcd: HomogPoly                      # monic common factor (all ramification)
    primitive: tuple[HomogPoly, ...]

    @property
    def degree(self) -> int:
        """r_j: the degree of the primitive associated map."""
        return self.raw_degree - self.gcd.degree


def _uadd(u: Uni, v: Uni) -> Uni:
    out = [ZERO] * max(len(u), len(v))
    for i, c in enumerate(u):
        out[i] = out[i] + c
    for i, c in enumerate(v):
        out[i] = out[i] + c
    return _trim(out)


def _uscale(u: Uni, c: GaussianRational) -> Uni:
    if c.is_zero():
        return []
    return [x * c for x in u]


def _uderive(u: Uni) -> Uni:
    return _trim([u[r] * gr(r) for r in range(1, len(u))])


def _minor_tables(rows: list[list[Uni]], n_cols: int) -> list[dict[tuple[int, ...], Uni]]:
    """All maximal minors of the top (r+1) derivative rows, for every r.

    tables[r] maps a sorted column tuple of size r+1 to the determinant of the
    submatrix formed by rows 0..r; built by cofactor expansion along the last
    row so the whole family costs one pass.
    """
    tables: list[dict[tuple[int, ...], Uni]] = []
    first = {(i,): rows[0][i] for i in range(n_cols)}
    tables.append(first)
    for r in range(1, len(rows)):
        prev = tables[-1]
        cur: dict[tuple[int, ...], Uni] = {}
        for cols in itertools.combinations(range(n_cols), r + 1):
            acc: Uni = []
            for p, c in enumerate(cols):
                entry = rows[r][c]
                if not entry:
                    continue
                sub = prev[cols[:p] + cols[p + 1:]]
                if not sub:
                    continue
                term = _umul(entry, sub)
                if (r + p) % 2:
                    term = _uscale(term, gr(-1))
                acc = _uadd(acc, term)
            cur[cols] = acc
        tables.append(cur)
    return tables


@lru_cache(maxsize=256)
def _wedge_tables(curve: CurveMap) -> tuple[tuple[WedgeData, ...], int]:
    """Wedge data for orders 0..n, stopping at the first identically-zero order.

    Returns (data for the non-vanishing orders, first vanishing order); the
    latter is n+1 for a non-degenerate curve.
    """
    n = curve.n
    fz = [p.univariate_z() for p in curve.coords]
    fw = [p.univariate_w() for p in curve.coords]
    rows_z: list[list[Uni]] = [fz]
    rows_w: list[list[Uni]] = [fw]
    for _ in range(n):
        rows_z.append([_uderive(u) for u in rows_z[-1]])
        rows_w.append([_uderive(u) for u in rows_w[-1]])
    tz = _minor_tables(rows_z, n + 1)
    tw = _minor_tables(rows_w, n + 1)

    out: list[WedgeData] = []
    for j in range(n + 1):
        index_sets = list(itertools.combinations(range(n + 1), j + 1))
        mz = [tz[j][s] for s in index_sets]
        mw = [tw[j][s] for s in index_sets]
        if all(not u for u in mz):
            assert all(not u for u in mw), "charts disagree about a vanishing wedge"
            return tuple(out), j
        assert any(u for u in mw), "charts disagree about a vanishing wedge"
        delta = max(_udeg(u) for u in mz if u)
        vanish_at_infinity = min(
            next(r for r, c in enumerate(u) if not c.is_zero()) for u in mw if u
        )
        d_full = delta + vanish_at_infinity
        # the chart-matching degree is forced: (j+1)d - j(j+1)
        assert d_full == (j + 1) * curve.degree - j * (j + 1), "wedge degree bookkeeping broke"
        homog = tuple(HomogPoly.homogenize(u, d_full) for u in mz)
        other = tuple(
            HomogPoly.from_pairs(d_full, [(d_full - r, c) for r, c in enumerate(u)])
            for u in mw
        )
        _assert_tuple_proportional(homog, other)
        g = poly_gcd_many([p for p in homog if not p.is_zero()])
        primitive = tuple(
            divide_exact(p, g) if not p.is_zero() else HomogPoly.zero(d_full - g.degree)
            for p in homog
        )
        out.append(WedgeData(j, d_full, homog, g, primitive))
    return tuple(out), n + 1


def _assert_tuple_proportional(a: tuple[HomogPoly, ...], b: tuple[HomogPoly, ...]) -> None:
    anchor = next(i for i, p in enumerate(a) if not p.is_zero())
    assert not b[anchor].is_zero(), "chart cross-check failed (support mismatch)"
    pa, pb = a[anchor], b[anchor]
    for p, q in zip(a, b):
        assert p.is_zero() == q.is_zero(), "chart cross-check failed (support mismatch)"
        if not p.is_zero():
            assert p * pb == q * pa, "chart cross-check failed"


def associated_curve(curve: CurveMap, j: int) -> CurveMap:
    """The order-j associated curve in lex wedge coordinates (primitive)."""
    n = curve.n
    if not 0 <= j <= n - 1:
        raise ValueError(f"associated order {j} out of range for ambient {n}")
    wedges, vanish = _wedge_tables(curve)
    if j >= vanish or wedges[j].degree == 0:
        # the wedge either vanished identically or froze to a constant
        # osculating plane; both mean the image spans too small a subspace
        raise DegenerateCurveError(
            f"order-{j} wedge degenerates (image spans a proper subspace)",
            span=curve.span(),
        )
    return CurveMap(wedges[j].primitive)


def wedge_gcds(curve: CurveMap) -> tuple[WedgeData, ...]:
    """Wedge data for all orders 0..n; degenerate curves are rejected."""
    wedges, vanish = _wedge_tables(curve)
    if vanish <= curve.n:
        raise DegenerateCurveError(
            f"order-{vanish} wedge vanishes identically (degenerate image)",
            span=curve.span(),
        )
    return wedges


# ---------------------------------------------------------------------------
# ramification
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class RamificationProfile:
    parameter: P1Point
    alpha: tuple[int, ...]
    s: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.alpha[0] != 0:
            raise ValueError("local exponents must start at 0")
        if any(a >= b for a, b in zip(self.alpha, self.alpha[1:])):
            raise ValueError("local exponents must strictly increase")
        if tuple(b - a - 1 for a, b in zip(self.alpha, self.alpha[1:])) != self.s:
            raise ValueError("ramification indices disagree with the exponents")

    def is_wpoint(self) -> bool:
        return any(self.s)

    def is_simple(self) -> bool:
        return sum(self.s) == 1

    def to_json(self) -> dict:
        return {
            "parameter": self.parameter.to_json(),
            "alpha": list(self.alpha),
            "s": list(self.s),
        }


def ramification_profile(curve: CurveMap, t: P1Point) -> RamificationProfile:
    """Local exponents and ramification indices at one parameter."""
    wedges = wedge_gcds(curve)
    n = curve.n
    v = [0] * (n + 1)
    for j in range(1, n + 1):
        g = wedges[j].gcd
        v[j] = valuation_at(g, t) if g.degree > 0 else 0
    alpha = tuple(v[j] - (v[j - 1] if j > 0 else 0) + j for j in range(n + 1))
    s = tuple(alpha[j + 1] - alpha[j] - 1 for j in range(n))
    return RamificationProfile(t, alpha, s)


def local_vanishing_orders(curve: CurveMap, t: P1Point) -> tuple[int, ...]:
    """Definitional route to the alpha list: achievable vanishing orders of
    linear coordinate combinations at t, read from rank jumps of the local
    Taylor coefficient matrix. Used to validate ramification_profile."""
    # move t to the parameter origin [0, 1]
    other = (ONE, ZERO) if not t.b.is_zero() else (ZERO, ONE)
    mob = MobiusTransform(((other[0], t.a), (other[1], t.b)))
    local = curve.reparametrize(mob)
    d = local.degree
    rows = [
        tuple(p.coeff(e) for p in local.coords) for e in range(d + 1)
    ]
    orders: list[int] = []
    rank = 0
    for e in range(d + 1):
        new_rank = linalg.rank(tuple(rows[: e + 1]))
        if new_rank > rank:
            orders.append(e)
            rank = new_rank
        if rank == curve.n + 1:
            break
    if rank != curve.n + 1:
        raise DegenerateCurveError("coordinates are linearly dependent", span=curve.span())
    return tuple(orders)


# ---------------------------------------------------------------------------
# global invariants
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class CurveInvariants:
    degrees: tuple[int, ...]            # r_0 .. r_(n-1)
    s_totals: tuple[int, ...]           # s_0 .. s_(n-1), summed over all parameters
    genus: int
    wpoints: tuple[P1Point, ...]
    wpoint_residual: HomogPoly          # unlocated part of the W-locus
    profiles: tuple[RamificationProfile, ...]
    only_simple_wpoints: bool

    def to_json(self) -> dict:
        return {
            "r": list(self.degrees),
            "s_totals": list(self.s_totals),
            "genus": self.genus,
            "wpoints": [t.to_json() for t in self.wpoints],
            "wpoint_residual": self.wpoint_residual.to_json(),
            "profiles": [p.to_json() for p in self.profiles],
            "only_simple_wpoints": self.only_simple_wpoints,
        }


def curve_invariants(curve: CurveMap) -> CurveInvariants:
    """Degrees, total ramification, genus, and the W-point locus.

    The genus is recomputed from the Plücker relation at every order and must
    come out a consistent integer equal to zero; anything else raises, since
    it can only mean a bug or a non-reduced image.
    """
    wedges = wedge_gcds(curve)
    n = curve.n
    r = [wedges[j].degree for j in range(n)]
    gdeg = [0] + [wedges[j].gcd.degree for j in range(1, n + 1)]
    s_totals = [
        gdeg[j + 1] - 2 * gdeg[j] + (gdeg[j - 1] if j > 0 else 0) for j in range(n)
    ]
    genus: int | None = None
    for kk in range(n):
        left = (r[kk - 1] if kk > 0 else 0) - 2 * r[kk] + (r[kk + 1] if kk + 1 < n else 0)
        twice = left + 2 + s_totals[kk]
        if twice % 2:
            raise PluckerInconsistencyError(f"odd genus candidate at order {kk}")
        g = twice // 2
        if genus is None:
            genus = g
        elif genus != g:
            raise PluckerInconsistencyError(
                f"genus disagrees across orders: {genus} vs {g} at order {kk}"
            )
    assert genus is not None
    if genus != 0:
        raise PluckerInconsistencyError(f"computed genus {genus} for a rational parametrization")

    locus = HomogPoly.constant(ONE)
    for j in range(1, n + 1):
        if wedges[j].gcd.degree > 0:
            locus = locus * wedges[j].gcd
    if locus.degree == 0:
        wpoints: tuple[P1Point, ...] = ()
        residual = HomogPoly.constant(ONE)
    else:
        roots, residual = linear_roots(locus)
        wpoints = tuple(sorted({t for t, _ in roots}, key=point_sort_key))
    profiles = tuple(ramification_profile(curve, t) for t in wpoints)
    only_simple = residual.degree == 0 and all(p.is_simple() for p in profiles)
    return CurveInvariants(
        degrees=tuple(r),
        s_totals=tuple(s_totals),
        genus=genus,
        wpoints=wpoints,
        wpoint_residual=residual,
        profiles=profiles,
        only_simple_wpoints=only_simple,
    )


# ---------------------------------------------------------------------------
# singular parameters (cusps and nodes)
# ---------------------------------------------------------------------------

BiPoly = dict[tuple[int, int], GaussianRational]  # (s-exp, t-exp) -> coeff


def _bi_product(p: HomogPoly, q: HomogPoly) -> BiPoly:
    """p(s) * q(t) as a bihomogeneous polynomial."""
    out: BiPoly = {}
    for es, cs in p.coeffs:
        for et, ct in q.coeffs:
            out[(es, et)] = out.get((es, et), ZERO) + cs * ct
    return {k: v for k, v in out.items() if not v.is_zero()}


def _bi_sub(a: BiPoly, b: BiPoly) -> BiPoly:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, ZERO) - v
    return {k: v for k, v in out.items() if not v.is_zero()}


def _bi_divide_diagonal(g: BiPoly) -> BiPoly:
    """Exact division by s1*t2 - s2*t1 (valid for antisymmetrized products)."""
    rest = dict(g)
    quotient: BiPoly = {}
    while rest:
        es, et = max(rest)  # lex order: highest s-exponent, then t-exponent
        c = rest[(es, et)]
        if es == 0:
            raise ValueError("division by the diagonal form is not exact")
        key = (es - 1, et)
        quotient[key] = quotient.get(key, ZERO) + c
        # subtract c * (s1 t2 - s2 t1) * s^(es-1) t^et  [bidegree bookkeeping
        # is implicit: s2/t2 exponents are determined by the bidegree]
        rest[(es, et)] = rest.get((es, et), ZERO) - c
        rest[(es - 1, et + 1)] = rest.get((es - 1, et + 1), ZERO) + c
        rest = {k: v for k, v in rest.items() if not v.is_zero()}
    return quotient


def _bi_eval_s(q: BiPoly, bideg_s: int, a: GaussianRational, b: GaussianRational) -> Uni:
    """Evaluate the s-slot at (a, b); returns a t-coefficient list."""
    out: dict[int, GaussianRational] = {}
    for (es, et), c in q.items():
        out[et] = out.get(et, ZERO) + c * a**es * b ** (bideg_s - es)
    size = max(out) + 1 if out else 0
    u = [ZERO] * size
    for et, c in out.items():
        u[et] = c
    return _trim(u)


def _sylvester_det(u: Uni, v: Uni, deg_u: int, deg_v: int) -> GaussianRational:
    """Resultant of two coefficient lists with declared formal degrees."""
    a = list(u) + [ZERO] * (deg_u + 1 - len(u))
    b = list(v) + [ZERO] * (deg_v + 1 - len(v))
    size = deg_u + deg_v
    rows = []
    for i in range(deg_v):
        row = [ZERO] * size
        for j, c in enumerate(reversed(a)):
            row[i + j] = c
        rows.append(tuple(row))
    for i in range(deg_u):
        row = [ZERO] * size
        for j, c in enumerate(reversed(b)):
            row[i + j] = c
        rows.append(tuple(row))
    return linalg.det(tuple(rows))


@dataclass(frozen=True, slots=True)
class SingularData:
    cusps: tuple[P1Point, ...]
    cusp_residual: HomogPoly
    nodes: tuple[tuple[P1Point, P1Point], ...]
    node_candidate_residual: HomogPoly

    def parameters(self) -> tuple[P1Point, ...]:
        seen: list[P1Point] = list(self.cusps)
        for a, b in self.nodes:
            seen.extend((a, b))
        return tuple(sorted(set(seen), key=point_sort_key))

    def is_empty(self) -> bool:
        return not self.cusps and not self.nodes and self.cusp_residual.degree == 0

    def to_json(self) -> dict:
        return {
            "cusps": [t.to_json() for t in self.cusps],
            "cusp_residual": self.cusp_residual.to_json(),
            "nodes": [[a.to_json(), b.to_json()] for a, b in self.nodes],
            "node_candidate_residual": self.node_candidate_residual.to_json(),
        }


def singular_parameters(curve: CurveMap, detect_nodes: bool = True) -> SingularData:
    """Cusp parameters (where the derivative drops) and node parameter pairs.

    Cusps are the zeros of the order-1 wedge gcd (s_0 > 0 there). Nodes come
    from the double-point system psi_i(s) psi_j(t) - psi_j(s) psi_i(t) = 0
    with the diagonal divided out: a resultant of two of the reduced forms
    yields candidate parameters, each then verified exactly against the full
    system. Candidates outside Q(i) are reported through the residual.
    """
    wedges = wedge_gcds(curve)
    g1 = wedges[1].gcd
    if g1.degree == 0:
        cusps: tuple[P1Point, ...] = ()
        cusp_residual = HomogPoly.constant(ONE)
    else:
        roots, cusp_residual = linear_roots(g1)
        cusps = tuple(sorted({t for t, _ in roots}, key=point_sort_key))

    if not detect_nodes:
        return SingularData(cusps, cusp_residual, (), HomogPoly.constant(ONE))

    d = curve.degree
    live = [i for i in range(curve.n + 1) if not curve.coords[i].is_zero()]
    reduced: list[BiPoly] = []
    for i, j in itertools.combinations(live, 2):
        g = _bi_sub(
            _bi_product(curve.coords[i], curve.coords[j]),
            _bi_product(curve.coords[j], curve.coords[i]),
        )
        if g:
            reduced.append(_bi_divide_diagonal(g))
    if len(reduced) < 2:
        raise InversionAmbiguousError(
            "fewer than two independent cross-product forms; the map looks like a multiple cover"
        )

    resultant = _node_resultant(reduced, d)
    if resultant is None:
        raise InversionAmbiguousError(
            "all double-point resultants vanish identically; the map looks like a multiple cover"
        )
    if resultant.degree == 0:
        return SingularData(cusps, cusp_residual, (), HomogPoly.constant(ONE))
    candidates, node_residual = linear_roots(resultant)
    pairs: set[tuple[P1Point, P1Point]] = set()
    for a, _ in candidates:
        partners = _partner_parameters(reduced, d, a)
        for b in partners:
            if b == a:
                continue
            if curve.evaluate(a) == curve.evaluate(b):
                pairs.add(tuple(sorted((a, b), key=point_sort_key)))
    nodes = tuple(sorted(pairs, key=lambda ab: (point_sort_key(ab[0]), point_sort_key(ab[1]))))
    return SingularData(cusps, cusp_residual, nodes, node_residual)


def _node_resultant(reduced: list[BiPoly], d: int) -> HomogPoly | None:
    """Resultant in t of two reduced double-point forms, as a polynomial in s.

    Computed by evaluation and interpolation: the Sylvester determinant with
    formal t-degree d-1 on both sides is correct even where leading
    coefficients vanish. Returns None when every tried pair is identically
    dependent (a genuinely non-birational situation).
    """
    deg_t = d - 1
    target = 2 * deg_t * deg_t
    for (qa, qb) in itertools.combinations(reduced[: min(len(reduced), 4)], 2):
        samples = []
        x = 0
        while len(samples) < target + 1:
            a = gr(x)
            ua = _bi_eval_s(qa, deg_t, a, ONE)
            ub = _bi_eval_s(qb, deg_t, a, ONE)
            samples.append((a, _sylvester_det(ua, ub, deg_t, deg_t)))
            x = -x if x > 0 else -x + 1
        coeffs = linalg.interpolate(samples)
        if coeffs:
            return HomogPoly.from_pairs(target, list(enumerate(coeffs)))
    return None


def _partner_parameters(reduced: list[BiPoly], d: int, a: P1Point) -> list[P1Point]:
    """Q(i)-parameters b solving the full double-point system at s = a."""
    g: Uni | None = None
    for q in reduced:
        u = _bi_eval_s(q, d - 1, a.a, a.b)
        if not u:
            continue
        g = u if g is None else _ugcd(g, u)
        if _udeg(g) == 0:
            return []
    if g is None:
        # every reduced form vanishes at s = a: a is paired with all parameters
        raise InversionAmbiguousError("the double-point system degenerates at a sample")
    roots, _ = linear_roots(HomogPoly.homogenize(g, _udeg(g)))
    return [t for t, _ in roots]
