"""Dense exact linear algebra over Q(i) on small matrices.

Matrices are immutable tuples of tuples of GaussianRational. Sizes in this
package never exceed a few dozen rows (wedge coordinates of P^5), so plain
Gaussian elimination over the exact field is the right tool; no pivoting
strategy beyond "first nonzero" is needed.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .gaussian import ONE, ZERO, GaussianRational

Matrix = tuple[tuple[GaussianRational, ...], ...]
Vector = tuple[GaussianRational, ...]


def matrix(rows: Iterable[Iterable]) -> Matrix:
    out = tuple(tuple(GaussianRational.of(x) for x in row) for row in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise ValueError("ragged matrix")
    return out


def identity(n: int) -> Matrix:
    return tuple(
        tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)
    )


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if len(a[0]) != len(b):
        raise ValueError("inner dimensions disagree")
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum((x * y for x, y in zip(row, col)), ZERO) for col in bt)
        for row in a
    )


def mat_vec(a: Matrix, v: Sequence[GaussianRational]) -> Vector:
    if len(a[0]) != len(v):
        raise ValueError("dimension mismatch")
    return tuple(sum((x * y for x, y in zip(row, v)), ZERO) for row in a)


def mat_scale(a: Matrix, s: GaussianRational) -> Matrix:
    return tuple(tuple(x * s for x in row) for row in a)


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def rref(a: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns (canonical for the row space)."""
    rows = [list(r) for r in a]
    n_rows, n_cols = len(rows), len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if not rows[i][c].is_zero()), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(n_rows):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return tuple(tuple(row) for row in rows), tuple(pivots)


def rank(a: Matrix) -> int:
    return len(rref(a)[1])


def det(a: Matrix) -> GaussianRational:
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    rows = [list(r) for r in a]
    result = ONE
    for c in range(n):
        pivot = next((i for i in range(c, n) if not rows[i][c].is_zero()), None)
        if pivot is None:
            return ZERO
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            result = -result
        result = result * rows[c][c]
        inv = rows[c][c].inverse()
        for i in range(c + 1, n):
            if rows[i][c].is_zero():
                continue
            f = rows[i][c] * inv
            rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return result


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    aug = [list(row) + list(identity(n)[i]) for i, row in enumerate(a)]
    reduced, pivots = rref(tuple(tuple(r) for r in aug))
    if pivots[:n] != tuple(range(n)):
        raise ValueError("matrix is singular")
    return tuple(row[n:] for row in reduced)


def nullspace(a: Matrix) -> list[Vector]:
    """A basis of the right kernel, from the canonical RREF parametrization."""
    reduced, pivots = rref(a)
    n_cols = len(a[0])
    free = [c for c in range(n_cols) if c not in pivots]
    basis: list[Vector] = []
    for f in free:
        v = [ZERO] * n_cols
        v[f] = ONE
        for r, p in enumerate(pivots):
            v[p] = -reduced[r][f]
        basis.append(tuple(v))
    return basis


def interpolate(
    samples: Sequence[tuple[GaussianRational, GaussianRational]]
) -> list[GaussianRational]:
    """Newton interpolation through exact sample pairs; ascending coefficients."""
    xs = [x for x, _ in samples]
    diffs = [y for _, y in samples]
    n = len(samples)
    # divided-difference table, kept in place
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            diffs[i] = (diffs[i] - diffs[i - 1]) / (xs[i] - xs[i - level])
    # expand the Newton form by Horner: p = d_k + (t - x_k) * p
    result: list[GaussianRational] = [diffs[n - 1]]
    for i in range(n - 2, -1, -1):
        shifted = [ZERO] + result
        result = [
            shifted[r] - (xs[i] * result[r] if r < len(result) else ZERO)
            for r in range(len(shifted))
        ]
        result[0] = result[0] + diffs[i]
    while result and result[-1].is_zero():
        result.pop()
    return result


def is_scalar_matrix(a: Matrix) -> bool:
    n = len(a)
    d = a[0][0]
    for i in range(n):
        for j in range(n):
            if i == j:
                if a[i][j] != d:
                    return False
            elif not a[i][j].is_zero():
                return False
    return not d.is_zero()
