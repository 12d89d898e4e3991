"""Integer and rational linear algebra for Laplacians of trees.

Everything in this module is exact: ranks come from fraction-free
elimination, characteristic polynomials from a division-free recurrence,
and eigenvalue multiplicities from repeated exact polynomial division.
No floating point enters any code path here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ZeroPolynomial
from .trees import Tree

__all__ = [
    "LambdaParam",
    "IntPolynomial",
    "laplacian",
    "rational_nullity",
    "char_poly",
    "cyclotomic",
    "minimal_poly_lambda",
    "root_multiplicity",
    "multiplicity_exact",
    "poly_mul",
    "poly_divmod",
]


@dataclass(frozen=True)
class LambdaParam:
    """An extremal eigenvalue 2*(1 - cos((2b+1)*pi/(2q+1))).

    Two parameter pairs describe the same eigenvalue exactly when the
    reduced ratio (2b+1)/(2q+1) agrees, so equality and hashing go through
    ``ratio`` alone.  Both numerator and denominator of the reduced ratio
    are odd, and the ratio sits strictly between 0 and 1.
    """

    q: int = field(compare=False)
    b: int = field(compare=False)
    ratio: Fraction = field(init=False, compare=True)

    def __post_init__(self):
        if self.q < 1:
            raise ValueError(f"q must be >= 1, got {self.q}")
        if not 0 <= self.b < self.q:
            raise ValueError(f"b must lie in [0, q), got b={self.b}, q={self.q}")
        object.__setattr__(self, "ratio", Fraction(2 * self.b + 1, 2 * self.q + 1))

    @property
    def value(self) -> float:
        """Floating approximation of the eigenvalue, in (0, 4)."""
        r = self.ratio
        return 2.0 * (1.0 - math.cos(math.pi * r.numerator / r.denominator))

    def __repr__(self):
        return f"LambdaParam(q={self.q}, b={self.b}, ratio={self.ratio})"


def _trim(coeffs) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients low degree first; () is zero."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def __call__(self, x):
        # Horner; works for int, Fraction and float arguments alike.
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def poly_mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return IntPolynomial(())
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return IntPolynomial(tuple(out))


def poly_divmod(p: IntPolynomial, d: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
    """Long division by a monic divisor; stays in integer coefficients."""
    if d.degree < 0:
        raise ZeroDivisionError("polynomial division by zero")
    if d.coeffs[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(p.coeffs)
    dd = d.degree
    if p.degree < dd:
        return IntPolynomial(()), p
    quot = [0] * (p.degree - dd + 1)
    for k in range(p.degree - dd, -1, -1):
        c = rem[k + dd]
        if c:
            quot[k] = c
            for j, dj in enumerate(d.coeffs):
                rem[k + j] -= c * dj
    return IntPolynomial(tuple(quot)), IntPolynomial(tuple(rem))


def laplacian(tree: Tree, signless: bool = False) -> tuple[tuple[int, ...], ...]:
    """Laplacian D - A (or D + A when ``signless``), row i <-> label i+1."""
    n = tree.n
    off = 1 if signless else -1
    rows = [[0] * n for _ in range(n)]
    for v in range(1, n + 1):
        rows[v - 1][v - 1] = len(tree.adjacency[v])
        for w in tree.adjacency[v]:
            rows[v - 1][w - 1] = off
    return tuple(tuple(r) for r in rows)


def _bareiss_rank(rows: list[list[int]]) -> int:
    # Fraction-free elimination with first-nonzero column pivoting.  The
    # updated entries are minors of the input, so the divisions are exact.
    m = len(rows)
    if m == 0:
        return 0
    ncols = len(rows[0])
    prev = 1
    rank = 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, m) if rows[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        for i in range(r + 1, m):
            ri = rows[i]
            f = ri[c]
            rr = rows[r]
            for j in range(c + 1, ncols):
                num = pv * ri[j] - f * rr[j]
                qt, rm = divmod(num, prev)
                assert rm == 0, "fraction-free update must divide exactly"
                ri[j] = qt
            ri[c] = 0
        prev = pv
        rank += 1
        r += 1
        if r == m:
            break
    return rank


def rational_nullity(matrix, lam) -> int:
    """Exact nullity of M - lam*I for a rational shift ``lam``.

    Scales by the denominator first (b*M - a*I has the same kernel), then
    runs integer fraction-free elimination.
    """
    lam = Fraction(lam)
    a, b = lam.numerator, lam.denominator
    n = len(matrix)
    rows = [
        [b * matrix[i][j] - (a if i == j else 0) for j in range(n)]
        for i in range(n)
    ]
    return n - _bareiss_rank(rows)


def char_poly(matrix) -> IntPolynomial:
    """Characteristic polynomial det(xI - M), division-free.

    Samuelson-Berkowitz recurrence: grow one leading principal submatrix at
    a time, multiplying the running coefficient vector by a Toeplitz matrix
    whose entries are -R M^k S for the new border row R and column S.
    """
    n = len(matrix)
    coeffs = [1]  # char poly of the empty matrix, highest degree first
    for k in range(n):
        a = matrix[k][k]
        row = [matrix[k][j] for j in range(k)]
        col = [matrix[i][k] for i in range(k)]
        t = [1, -a]
        v = col[:]
        for j in range(k):
            t.append(-sum(row[i] * v[i] for i in range(k)))
            if j < k - 1:
                v = [
                    sum(matrix[i][l] * v[l] for l in range(k))
                    for i in range(k)
                ]
        new = [0] * (k + 2)
        for i in range(k + 2):
            acc = 0
            for j in range(max(0, i - len(t) + 1), min(i, k) + 1):
                acc += t[i - j] * coeffs[j]
            new[i] = acc
        coeffs = new
    return IntPolynomial(tuple(reversed(coeffs)))


_CYCLOTOMIC_CACHE: dict[int, IntPolynomial] = {}


def cyclotomic(m: int) -> IntPolynomial:
    """The m-th cyclotomic polynomial, by exact division of x^m - 1."""
    if m < 1:
        raise ValueError(f"index must be >= 1, got {m}")
    cached = _CYCLOTOMIC_CACHE.get(m)
    if cached is not None:
        return cached
    if m == 1:
        result = IntPolynomial((-1, 1))
    else:
        num = IntPolynomial((-1,) + (0,) * (m - 1) + (1,))
        den = IntPolynomial((1,))
        for d in range(1, m):
            if m % d == 0:
                den = poly_mul(den, cyclotomic(d))
        result, rem = poly_divmod(num, den)
        assert rem.degree < 0, "cyclotomic division must be exact"
    _CYCLOTOMIC_CACHE[m] = result
    return result


def minimal_poly_lambda(param: LambdaParam) -> IntPolynomial:
    """Monic minimal polynomial of the extremal eigenvalue over the integers.

    With lam = 2 - 2cos(r*pi/s) for the reduced ratio r/s, the number
    2cos(r*pi/s) is zeta + 1/zeta for a primitive 2s-th root of unity zeta,
    so its minimal polynomial psi comes from folding the (palindromic)
    cyclotomic polynomial of index 2s, and the answer is +-psi(2 - x) made
    monic.  Degree is phi(2s)/2.
    """
    r = param.ratio
    s = r.denominator
    phi = cyclotomic(2 * s)
    deg = phi.degree
    assert deg % 2 == 0
    h = deg // 2

    # Fold the palindrome: repeatedly strip a_k * x^h * (x + 1/x)^k.
    work = list(phi.coeffs)
    psi = [0] * (h + 1)
    for k in range(h, -1, -1):
        a = work[h + k]
        psi[k] = a
        for i in range(k + 1):
            work[h + k - 2 * i] -= a * math.comb(k, i)
    assert not any(work), "cyclotomic polynomial must fold exactly"

    # Compose psi(2 - x) by Horner over integer polynomials.
    two_minus_x = IntPolynomial((2, -1))
    acc = IntPolynomial((psi[h],))
    for k in range(h - 1, -1, -1):
        acc = poly_mul(acc, two_minus_x)
        acc = IntPolynomial((acc.coeffs[0] + psi[k],) + acc.coeffs[1:])
    if acc.coeffs[-1] < 0:
        acc = IntPolynomial(tuple(-c for c in acc.coeffs))
    assert acc.coeffs[-1] == 1
    return acc


def root_multiplicity(p: IntPolynomial, mu: IntPolynomial) -> int:
    """How many times the monic factor ``mu`` divides ``p`` exactly."""
    if p.degree < 0:
        raise ZeroPolynomial("multiplicity undefined for the zero polynomial")
    count = 0
    current = p
    while current.degree >= mu.degree:
        quot, rem = poly_divmod(current, mu)
        if rem.degree >= 0:
            break
        count += 1
        current = quot
    return count


def multiplicity_exact(tree: Tree, param: LambdaParam) -> int:
    """Exact Laplacian multiplicity of the extremal eigenvalue."""
    return root_multiplicity(char_poly(laplacian(tree)), minimal_poly_lambda(param))
