"""Root systems of the compact simple Lie algebras in exact rational coordinates.

Roots live in a rational ambient space; the invariant inner product is the
Killing form, normalized so that a long root alpha has |alpha|^2 = 1/h* where
h* is the dual Coxeter number.  With this normalization the Casimir operator
of the whole algebra acts as the identity on itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import gcd
from typing import Iterable

# All coordinates are plain integers: every system is embedded with a factor-2
# scale (so the half-integer coordinates of the E and F families clear), which
# keeps the hot coordinate arithmetic in machine ints.  The Killing
# normalization absorbs the scale, so no public value changes.
Coord = tuple[int, ...]

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")

_RANK_RANGE = {
    "A": (1, None),
    "B": (1, None),
    "C": (2, None),
    "D": (2, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        lo, hi = _RANK_RANGE[self.family]
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise ValueError(f"invalid rank {self.rank} for family {self.family}")

    def __str__(self):
        return f"{self.family}{self.rank}"


def dual_coxeter(t: SimpleType) -> int:
    n = t.rank
    if t.family == "A":
        return n + 1
    if t.family == "B":
        return 2 * n - 1 if n >= 2 else 2  # B1 = A1
    if t.family == "C":
        return n + 1
    if t.family == "D":
        return 2 * n - 2 if n >= 3 else 2  # D2 = A1 + A1, per-ideal value
    if t.family == "E":
        return {6: 12, 7: 18, 8: 30}[n]
    return 9 if t.family == "F" else 4


def _e(i: int, dim: int, scale: int = 2) -> Coord:
    v = [0] * dim
    v[i] = scale
    return tuple(v)


def _add(a: Coord, b: Coord) -> Coord:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: Coord, b: Coord) -> Coord:
    return tuple(x - y for x, y in zip(a, b))


def _neg(a: Coord) -> Coord:
    return tuple(-x for x in a)


def _dot(a: Coord, b: Coord) -> int:
    return sum(x * y for x, y in zip(a, b))


def _raw_roots(t: SimpleType) -> set[Coord]:
    fam, n = t.family, t.rank
    roots: set[Coord] = set()
    if fam == "A":
        dim = n + 1
        for i in range(dim):
            for j in range(dim):
                if i != j:
                    roots.add(_sub(_e(i, dim), _e(j, dim)))
    elif fam in ("B", "C", "D"):
        dim = n
        for i, j in combinations(range(n), 2):
            for si in (1, -1):
                for sj in (1, -1):
                    roots.add(_add(_e(i, dim, 2 * si), _e(j, dim, 2 * sj)))
        if fam == "B":
            for i in range(n):
                roots.add(_e(i, dim, 2))
                roots.add(_e(i, dim, -2))
        elif fam == "C":
            for i in range(n):
                roots.add(_e(i, dim, 4))
                roots.add(_e(i, dim, -4))
    elif fam == "G":
        # rank 2 in the zero-sum hyperplane of R^3
        dim = 3
        for i, j in combinations(range(3), 2):
            roots.add(_sub(_e(i, dim), _e(j, dim)))
            roots.add(_sub(_e(j, dim), _e(i, dim)))
        for i in range(3):
            j, k = [x for x in range(3) if x != i]
            long = _sub(_add(_e(j, dim), _e(k, dim)), _e(i, dim, 4))
            roots.add(long)
            roots.add(_neg(long))
    elif fam == "F":
        dim = 4
        for i, j in combinations(range(4), 2):
            for si in (1, -1):
                for sj in (1, -1):
                    roots.add(_add(_e(i, dim, 2 * si), _e(j, dim, 2 * sj)))
        for i in range(4):
            roots.add(_e(i, dim, 2))
            roots.add(_e(i, dim, -2))
        for signs in range(16):
            roots.add(tuple((-1) ** (signs >> k & 1) for k in range(4)))
    elif fam == "E":
        dim = 8
        e8: set[Coord] = set()
        for i, j in combinations(range(8), 2):
            for si in (1, -1):
                for sj in (1, -1):
                    e8.add(_add(_e(i, dim, 2 * si), _e(j, dim, 2 * sj)))
        for signs in range(256):
            if bin(signs).count("1") % 2 == 0:
                e8.add(tuple((-1) ** (signs >> k & 1) for k in range(8)))
        if n == 8:
            roots = e8
        else:
            # E7: orthogonal complement of the highest root; E6: of an A2
            theta = _add(_e(6, dim), _e(7, dim))
            beta = tuple([1] * 6 + [-1] * 2)
            ortho = [theta] if n == 7 else [theta, beta]
            roots = {r for r in e8 if all(_dot(r, v) == 0 for v in ortho)}
    return roots


class RootSystem:
    """An irreducible root system with the Killing-normalized inner product."""

    def __init__(self, simple_type: SimpleType):
        self.simple_type = simple_type
        self.roots = frozenset(_raw_roots(simple_type))
        self._root_set = self.roots
        maxsq = max(_dot(r, r) for r in self.roots)
        self.killing_scale = Fraction(1, dual_coxeter(simple_type) * maxsq)
        self.positive_roots = tuple(
            sorted((r for r in self.roots if _positivity_key(r) > 0), key=_positivity_key)
        )
        self.simple_roots = tuple(simple_roots_of(self.positive_roots))
        self.rank = simple_type.rank
        self.highest_root = max(self.positive_roots, key=lambda r: (_height(r, self.simple_roots), _positivity_key(r)))
        # packed-integer view of the roots: encode(v) = sum (v_i + 32) * 64^i,
        # injective while |coords| < 32 (coordinates stay below 8 even along
        # root strings), and encode(a + b) = encode(a) + encode(b) - _enc_zero.
        # Turns the root-string walks into int adds plus set lookups.
        dim = len(next(iter(self.roots)))
        self._enc_zero = sum(32 << (6 * i) for i in range(dim))
        self._enc_set = frozenset(self.encode(r) for r in self.roots)

    def encode(self, v: Coord) -> int:
        return sum((x + 32) << (6 * i) for i, x in enumerate(v))

    def is_root(self, v: Coord) -> bool:
        return v in self._root_set

    def inner(self, a: Coord, b: Coord) -> Fraction:
        """Killing form of the corresponding coroot vectors, B(h_a, h_b)."""
        return self.killing_scale * _dot(a, b)

    def norm_sq(self, a: Coord) -> Fraction:
        return self.inner(a, a)

    def root_string(self, alpha: Coord, phi: Coord) -> tuple[int, int]:
        """The alpha-string through phi: phi + n*alpha is a root for p <= n <= q
        (p <= 0 <= q).  alpha and phi must be roots with phi != ±alpha."""
        if alpha not in self._root_set or phi not in self._root_set:
            raise ValueError("root_string arguments must be roots")
        if phi == alpha or phi == _neg(alpha):
            raise ValueError("string through ±alpha itself is undefined")
        q = 0
        cur = _add(phi, alpha)
        while cur in self._root_set:
            q += 1
            cur = _add(cur, alpha)
        # p + q = -2(phi,alpha)/(alpha,alpha), the Cartan integer
        num, den = -2 * _dot(phi, alpha), _dot(alpha, alpha)
        assert num % den == 0
        p = num // den - q
        return p, q

    def d_value(self, alpha: Coord, phi: Coord) -> int:
        """d = q - p - 2pq for the alpha-string through phi; d = 2 for alpha = ±phi
        (the exact contribution of the ±phi pair to a Casimir sum)."""
        if phi == alpha or phi == _neg(alpha):
            return 2
        p, q = self.root_string(alpha, phi)
        return q - p - 2 * p * q

    def __repr__(self):
        return f"RootSystem({self.simple_type}, {len(self.roots)} roots)"


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int) -> RootSystem:
    return RootSystem(SimpleType(family, rank))


def _positivity_key(r: Coord) -> int:
    """Injective linear functional on the bounded root coordinates: positive
    on exactly one root of each ±pair.  Coordinates are integers in [-8, 8],
    so base 17 makes the functional injective."""
    acc = 0
    for x in r:
        acc = acc * 17 + x
    return acc


def _height(r: Coord, simple: tuple[Coord, ...]) -> Fraction:
    # coordinate sum in the simple-root basis, via exact linear solve
    coeffs = _in_basis(r, simple)
    return sum(coeffs, Fraction(0))


def _in_basis(v: Coord, basis: tuple[Coord, ...]) -> list[Fraction]:
    """Solve v = sum c_i basis_i by least-squares-free Gaussian elimination
    (basis is linearly independent; v lies in its span)."""
    dim = len(v)
    k = len(basis)
    # fraction-free integer Gauss-Jordan (entries are integers); rows are
    # gcd-reduced after each cross-multiplied elimination to stay small
    aug = [[basis[j][i] for j in range(k)] + [v[i]] for i in range(dim)]
    row = 0
    pivots = []
    for col in range(k):
        piv = next((r for r in range(row, dim) if aug[r][col] != 0), None)
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        pr = aug[row]
        g = pr[col]
        for r in range(dim):
            if r != row and aug[r][col] != 0:
                f = aug[r][col]
                new = [g * x - f * y for x, y in zip(aug[r], pr)]
                gg = gcd(*new)
                aug[r] = [x // gg for x in new] if gg > 1 else new
        pivots.append(col)
        row += 1
    sol = [Fraction(0)] * k
    for r, col in enumerate(pivots):
        sol[col] = Fraction(aug[r][k], aug[r][col])
    # consistency check over a common denominator, in integers
    den = 1
    for c in sol:
        den = den * c.denominator // gcd(den, c.denominator)
    num = [int(c * den) for c in sol]
    for i in range(dim):
        if sum(num[j] * basis[j][i] for j in range(k)) != v[i] * den:
            raise ValueError("vector not in span of basis")
    return sol


def simple_roots_of(positive: Iterable[Coord]) -> list[Coord]:
    """Simple roots = positive roots that are not the sum of two positive roots."""
    pos = set(positive)
    simple = []
    for r in pos:
        if not any(_sub(r, a) in pos for a in pos if a != r):
            simple.append(r)
    simple.sort(key=_positivity_key)
    return simple
