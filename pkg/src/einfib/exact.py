"""Exact arithmetic: quadratic surds, polynomials over Q, certified root isolation.

Everything here is built on ``fractions.Fraction``; no floating point enters
any computation that feeds a certificate.  Floats appear only in ``__float__``
conveniences for display.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rat = Union[Fraction, int]


def _frac(x: Rat) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Write n = m**2 * d with d squarefree, n >= 0.  Returns (m, d)."""
    if n < 0:
        raise ValueError("radicand must be nonnegative")
    if n == 0:
        return 0, 0
    m, d = 1, 1
    rem = n
    p = 2
    while p * p <= rem:
        if rem % p == 0:
            e = 0
            while rem % p == 0:
                rem //= p
                e += 1
            m *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    d *= rem
    return m, d


@dataclass(frozen=True)
class QuadraticSurd:
    """A number a + coef*sqrt(d) with a, coef rational and d a squarefree
    nonnegative integer.  d == 0 iff coef == 0 (rational values)."""

    a: Fraction
    coef: Fraction
    d: int

    @staticmethod
    def of(a: Rat, coef: Rat = 0, rad: int = 0) -> "QuadraticSurd":
        """Build a + coef*sqrt(rad), normalizing the radicand to squarefree."""
        a = _frac(a)
        coef = _frac(coef)
        if rad < 0:
            raise ValueError("negative radicand")
        m, d = squarefree_decompose(rad)
        coef = coef * m
        if d == 1:  # perfect square radicand
            return QuadraticSurd(a + coef, Fraction(0), 0)
        if d == 0 or coef == 0:
            return QuadraticSurd(a, Fraction(0), 0)
        return QuadraticSurd(a, coef, d)

    @staticmethod
    def rational(a: Rat) -> "QuadraticSurd":
        return QuadraticSurd(_frac(a), Fraction(0), 0)

    @staticmethod
    def sqrt(q: Rat) -> "QuadraticSurd":
        """Exact square root of a nonnegative rational."""
        q = _frac(q)
        if q < 0:
            raise ValueError("negative radicand")
        mn, dn = squarefree_decompose(q.numerator)
        md, dd = squarefree_decompose(q.denominator)
        # sqrt(q) = (mn/md) * sqrt(dn/dd) = (mn/(md*dd)) * sqrt(dn*dd)
        return QuadraticSurd.of(0, Fraction(mn, md * dd), dn * dd)

    # -- arithmetic -------------------------------------------------------

    def _compat(self, other: "QuadraticSurd") -> int:
        if self.d and other.d and self.d != other.d:
            raise ValueError("surds from different quadratic fields")
        return self.d or other.d

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            return QuadraticSurd(self.a + other, self.coef, self.d)
        d = self._compat(other)
        coef = self.coef + other.coef
        return QuadraticSurd(self.a + other.a, coef, d if coef else 0)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticSurd(-self.a, -self.coef, self.d)

    def __sub__(self, other):
        return self + (-other if isinstance(other, QuadraticSurd) else QuadraticSurd.rational(-_frac(other)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _frac(other)
            return QuadraticSurd(self.a * other, self.coef * other, self.d if self.coef * other else 0)
        d = self._compat(other)
        a = self.a * other.a + self.coef * other.coef * d
        coef = self.a * other.coef + self.coef * other.a
        return QuadraticSurd(a, coef, d if coef else 0)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadraticSurd":
        return QuadraticSurd(self.a, -self.coef, self.d)

    def norm(self) -> Fraction:
        """Field norm a**2 - coef**2 * d."""
        return self.a * self.a - self.coef * self.coef * self.d

    def inverse(self) -> "QuadraticSurd":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("surd is zero or degenerate")
        conj = self.conjugate()
        return QuadraticSurd(conj.a / n, conj.coef / n, conj.d if conj.coef else 0)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _frac(other)
            return QuadraticSurd(self.a / other, self.coef / other, self.d)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    # -- predicates -------------------------------------------------------

    def is_rational(self) -> bool:
        return self.coef == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not rational")
        return self.a

    def sign(self) -> int:
        """Exact sign of a + coef*sqrt(d)."""
        if self.coef == 0:
            return (self.a > 0) - (self.a < 0)
        if self.a == 0:
            return 1 if self.coef > 0 else -1
        # compare a with -coef*sqrt(d); both nonzero
        if self.a > 0 and self.coef > 0:
            return 1
        if self.a < 0 and self.coef < 0:
            return -1
        # opposite signs: sign decided by |a|^2 vs coef^2 d
        lhs = self.a * self.a
        rhs = self.coef * self.coef * self.d
        if lhs == rhs:
            return 0
        big_is_a = lhs > rhs
        return (1 if self.a > 0 else -1) if big_is_a else (1 if self.coef > 0 else -1)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.coef == 0 and self.a == other
        if not isinstance(other, QuadraticSurd):
            return NotImplemented
        return self.a == other.a and self.coef == other.coef and self.d == other.d

    def __hash__(self):
        if self.coef == 0:
            return hash(self.a)
        return hash((self.a, self.coef, self.d))

    def __lt__(self, other):
        diff = self - (other if isinstance(other, QuadraticSurd) else QuadraticSurd.rational(_frac(other)))
        return diff.sign() < 0

    def __le__(self, other):
        diff = self - (other if isinstance(other, QuadraticSurd) else QuadraticSurd.rational(_frac(other)))
        return diff.sign() <= 0

    def __gt__(self, other):
        return not self <= other

    def __ge__(self, other):
        return not self < other

    def __float__(self):
        return float(self.a) + float(self.coef) * math.sqrt(self.d)

    def __repr__(self):
        if self.coef == 0:
            return f"{self.a}"
        return f"({self.a} + {self.coef}*sqrt({self.d}))"

    # -- numerics ---------------------------------------------------------

    def bracket(self, width: Fraction) -> tuple[Fraction, Fraction]:
        """Rational interval [lo, hi] containing the value, hi - lo <= width."""
        if self.coef == 0:
            return self.a, self.a
        lo, hi = _sqrt_bracket(Fraction(self.d), width / abs(self.coef))
        if self.coef > 0:
            return self.a + self.coef * lo, self.a + self.coef * hi
        return self.a + self.coef * hi, self.a + self.coef * lo

    def decimal(self, digits: int) -> str:
        lo, hi = self.bracket(Fraction(1, 10 ** (digits + 2)))
        return format_decimal((lo + hi) / 2, digits)


def _sqrt_bracket(q: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    """Rational bracket of sqrt(q), q >= 0, by bisection."""
    if q == 0:
        return Fraction(0), Fraction(0)
    lo = Fraction(0)
    hi = max(q, Fraction(1))
    while hi - lo > width:
        mid = (lo + hi) / 2
        if mid * mid <= q:
            lo = mid
        else:
            hi = mid
    return lo, hi


def format_decimal(value: Fraction, digits: int) -> str:
    """Round to `digits` decimal places, ties away from zero."""
    scaled = value * 10 ** digits
    n = scaled.numerator
    d = scaled.denominator
    q, r = divmod(abs(n), d)
    if 2 * r >= d:
        q += 1
    sign = "-" if n < 0 and q != 0 else ""
    s = str(q).rjust(digits + 1, "0")
    if digits == 0:
        return sign + s
    return f"{sign}{s[:-digits]}.{s[-digits:]}"


# ---------------------------------------------------------------------------
# polynomials over Q


@dataclass(frozen=True)
class Polynomial:
    """Univariate polynomial over Q, coefficients lowest degree first."""

    coeffs: tuple[Fraction, ...]

    @staticmethod
    def of(coeffs: Iterable[Rat]) -> "Polynomial":
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return Polynomial(tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        if self.is_zero():
            raise ValueError("zero polynomial")
        return self.coeffs[-1]

    def __call__(self, x):
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return Fraction(0)
        return acc

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
        b = list(other.coeffs) + [Fraction(0)] * (n - len(other.coeffs))
        return Polynomial.of(x + y for x, y in zip(a, b))

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            other = Polynomial.of([other])
        if self.is_zero() or other.is_zero():
            return Polynomial(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial.of(out)

    __rmul__ = __mul__

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero():
            raise ZeroDivisionError
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        dv = other.coeffs
        while len(rem) >= len(dv):
            k = len(rem) - len(dv)
            f = rem[-1] / dv[-1]
            q[k] = f
            for i, c in enumerate(dv):
                rem[k + i] -= f * c
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) < len(dv):
                break
        return Polynomial.of(q), Polynomial.of(rem)

    def derivative(self) -> "Polynomial":
        return Polynomial.of(i * c for i, c in enumerate(self.coeffs) if i)

    def primitive_integer(self) -> "Polynomial":
        """Scale to integer coefficients, content 1, positive leading coeff."""
        if self.is_zero():
            return self
        lcm = 1
        for c in self.coeffs:
            lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
        ints = [int(c * lcm) for c in self.coeffs]
        g = 0
        for v in ints:
            g = math.gcd(g, v)
        ints = [v // g for v in ints]
        if ints[-1] < 0:
            ints = [-v for v in ints]
        return Polynomial.of(ints)

    def squarefree_part(self) -> "Polynomial":
        g = _poly_gcd(self, self.derivative())
        if g.degree <= 0:
            return self
        q, _ = self.divmod(g)
        return q

    def eval_surd(self, x: QuadraticSurd) -> QuadraticSurd:
        acc = QuadraticSurd.rational(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_interval(self, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
        """Interval extension by Horner with interval arithmetic."""
        alo = ahi = Fraction(0)
        for c in reversed(self.coeffs):
            cands = (alo * lo, alo * hi, ahi * lo, ahi * hi)
            alo, ahi = min(cands) + c, max(cands) + c
        return alo, ahi

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        terms = [f"{c}*x^{i}" for i, c in enumerate(self.coeffs) if c]
        return "Poly(" + " + ".join(terms) + ")"


def _poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    while not b.is_zero():
        _, r = a.divmod(b)
        a, b = b, r
    if a.is_zero():
        return a
    return Polynomial.of([c / a.leading() for c in a.coeffs])


def sturm_sequence(p: Polynomial) -> list[Polynomial]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        _, r = seq[-2].divmod(seq[-1])
        seq.append(-r)
    seq.pop()
    return seq


def _variations(values: Sequence[Fraction]) -> int:
    signs = [(v > 0) - (v < 0) for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _variations_at(seq: Sequence[Polynomial], x: Fraction) -> int:
    return _variations([p(x) for p in seq])


def count_real_roots(p: Polynomial, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of p in (lo, hi]."""
    sf = p.squarefree_part()
    seq = sturm_sequence(sf)
    return _variations_at(seq, lo) - _variations_at(seq, hi)


def root_bound(p: Polynomial) -> Fraction:
    """Cauchy bound: all real roots lie in [-M, M]."""
    lead = abs(p.leading())
    m = max((abs(c) for c in p.coeffs[:-1]), default=Fraction(0))
    return 1 + m / lead


@dataclass
class IsolatedRoot:
    """A certified real root of `poly` (squarefree): the unique root in (lo, hi),
    with poly(lo) and poly(hi) nonzero of opposite signs."""

    poly: Polynomial
    lo: Fraction
    hi: Fraction

    def refine(self, width: Fraction) -> None:
        slo = self.poly(self.lo)
        while self.hi - self.lo > width:
            mid = (self.lo + self.hi) / 2
            v = self.poly(mid)
            if v == 0:
                # hit the root exactly: shrink a hair around it
                eps = min((self.hi - self.lo) / 4, width / 2)
                self.lo, self.hi = mid - eps, mid + eps
                slo = self.poly(self.lo)
                continue
            if (v > 0) == (slo > 0):
                self.lo = mid
            else:
                self.hi = mid

    def sign(self) -> int:
        """Sign of the root itself (root is nonzero unless interval pins 0)."""
        if self.lo >= 0:
            return 1
        if self.hi <= 0:
            return -1
        self.refine(min(abs(self.lo), abs(self.hi)) / 2 or Fraction(1, 2))
        if self.lo >= 0:
            return 1
        if self.hi <= 0:
            return -1
        return 0

    def decimal(self, digits: int) -> str:
        self.refine(Fraction(1, 10 ** (digits + 2)))
        return format_decimal((self.lo + self.hi) / 2, digits)

    def __float__(self):
        self.refine(Fraction(1, 10 ** 17))
        return float((self.lo + self.hi) / 2)

    def contains(self, value) -> bool:
        """Exact membership test for a rational or quadratic-surd value."""
        if isinstance(value, (int, Fraction)):
            value = QuadraticSurd.rational(value)
        if self.poly.eval_surd(value).sign() != 0:
            return False
        return (value - self.lo).sign() > 0 and (value - self.hi).sign() < 0


def isolate_real_roots(p: Polynomial) -> list[IsolatedRoot]:
    """Certified isolation of all distinct real roots via Sturm bisection."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    sf = p.squarefree_part()
    if sf.degree == 0:
        return []
    seq = sturm_sequence(sf)
    bound = root_bound(sf)
    lo, hi = -bound, bound
    # make sure endpoints are not roots
    while sf(lo) == 0:
        lo -= 1
    while sf(hi) == 0:
        hi += 1

    out: list[IsolatedRoot] = []

    def walk(a: Fraction, b: Fraction, va: int, vb: int) -> None:
        count = va - vb
        if count == 0:
            return
        if count == 1 and sf(a) * sf(b) < 0:
            out.append(IsolatedRoot(sf, a, b))
            return
        mid = (a + b) / 2
        while sf(mid) == 0:
            mid = (a + mid) / 2
        vm = _variations_at(seq, mid)
        walk(a, mid, va, vm)
        walk(mid, b, vm, vb)

    walk(lo, hi, _variations_at(seq, lo), _variations_at(seq, hi))
    out.sort(key=lambda r: r.lo)
    return out


def solve_quadratic(a2: Rat, a1: Rat, a0: Rat) -> list[QuadraticSurd]:
    """Exact roots of a2 x^2 + a1 x + a0 (a2 != 0), empty if no real roots.
    A double root is returned once."""
    a2, a1, a0 = _frac(a2), _frac(a1), _frac(a0)
    if a2 == 0:
        raise ValueError("not a quadratic")
    disc = a1 * a1 - 4 * a2 * a0
    if disc < 0:
        return []
    root = QuadraticSurd.sqrt(disc)
    if disc == 0:
        return [QuadraticSurd.rational(-a1 / (2 * a2))]
    lo = (QuadraticSurd.rational(-a1) - root) / (2 * a2)
    hi = (QuadraticSurd.rational(-a1) + root) / (2 * a2)
    return [lo, hi]


# ---------------------------------------------------------------------------
# resultants of bivariate polynomials (entries are Polynomial in the kept var)


def resultant(p: list[Polynomial], q: list[Polynomial]) -> Polynomial:
    """Resultant with respect to the eliminated variable y.

    `p` and `q` are polynomials in y whose coefficients (ascending in y) are
    Polynomial objects in the kept variable x.  Uses the Sylvester matrix with
    fraction-free Bareiss elimination; exact over Q[x]."""
    while p and p[-1].is_zero():
        p = p[:-1]
    while q and q[-1].is_zero():
        q = q[:-1]
    m, n = len(p) - 1, len(q) - 1
    if m < 0 or n < 0:
        return Polynomial(())
    size = m + n
    if size == 0:
        return Polynomial.of([1])
    zero = Polynomial(())
    mat: list[list[Polynomial]] = []
    for i in range(n):
        row = [zero] * size
        for j, c in enumerate(reversed(p)):
            row[i + j] = c
        mat.append(row)
    for i in range(m):
        row = [zero] * size
        for j, c in enumerate(reversed(q)):
            row[i + j] = c
        mat.append(row)

    # Bareiss fraction-free elimination
    sign = 1
    prev = Polynomial.of([1])
    for k in range(size - 1):
        if mat[k][k].is_zero():
            for r in range(k + 1, size):
                if not mat[r][k].is_zero():
                    mat[k], mat[r] = mat[r], mat[k]
                    sign = -sign
                    break
            else:
                return Polynomial(())
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                num = mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]
                quo, rem = num.divmod(prev)
                assert rem.is_zero(), "Bareiss division not exact"
                mat[i][j] = quo
            mat[i][k] = zero
        prev = mat[k][k]
    det = mat[size - 1][size - 1]
    return det if sign == 1 else -det
