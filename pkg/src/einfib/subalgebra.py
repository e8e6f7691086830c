"""Maximal-rank regular subalgebras: closed root subsets, ideal identification,
extended/ordinary Dynkin-diagram node deletion, and bisymmetric triples.

A regular subalgebra of maximal rank is determined by a symmetric, additively
closed subset S of the ambient root system together with the full Cartan
subalgebra; its semisimple part splits into ideals (connected components of S
under non-orthogonality) and the complement of their span is central torus.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from .roots import (
    Coord,
    RootSystem,
    SimpleType,
    _add,
    _dot,
    _in_basis,
    _neg,
    _positivity_key,
    _sub,
    simple_roots_of,
)


def close_under_addition(system: RootSystem, generators) -> frozenset[Coord]:
    """Smallest symmetric subset of the root system containing the generators
    and closed under root addition."""
    cur = set()
    for g in generators:
        if not system.is_root(g):
            raise ValueError("generator is not a root")
        cur.add(g)
        cur.add(_neg(g))
    frontier = set(cur)
    while frontier:
        new = set()
        for a in frontier:
            for b in cur:
                s = _add(a, b)
                if s in system._root_set and s not in cur:
                    new.add(s)
                    new.add(_neg(s))
        cur |= new
        frontier = new
    return frozenset(cur)


def is_closed_subsystem(system: RootSystem, subset) -> bool:
    s = set(subset)
    if any(_neg(a) not in s for a in s):
        return False
    roots = system._root_set
    for a, b in combinations(s, 2):
        c = _add(a, b)
        if c in roots and c not in s:
            return False
    return True


def _span_rank(vectors) -> int:
    # fraction-free integer elimination: coordinates are integers, and only
    # the rank is needed, so cross-multiplied rows (reduced by their gcd to
    # keep entries small) suffice
    basis: list[tuple[list[int], int]] = []  # (row, pivot index)
    for v in vectors:
        row = list(v)
        for b, piv in basis:
            if row[piv] != 0:
                f, g = row[piv], b[piv]
                row = [g * x - f * y for x, y in zip(row, b)]
        piv = next((i for i, x in enumerate(row) if x != 0), -1)
        if piv >= 0:
            g = gcd(*row) if len(row) > 1 else abs(row[0])
            if g > 1:
                row = [x // g for x in row]
            basis.append((row, piv))
    return len(basis)


@dataclass(frozen=True)
class Ideal:
    """A simple ideal of a regular subalgebra: its type and its roots, plus the
    squared Killing length of its long roots inside the ambient algebra."""

    simple_type: SimpleType
    roots: frozenset[Coord]
    long_norm_sq: Fraction
    simple_roots: tuple[Coord, ...]


def identify_component(system: RootSystem, comp: frozenset[Coord]) -> SimpleType:
    """Identify the isomorphism type of a connected closed subsystem."""
    rank = _span_rank(comp)
    count = len(comp)
    norms = {_dot(r, r) for r in comp}
    if len(norms) == 1:
        if count == rank * (rank + 1):
            return SimpleType("A", rank)
        if count == 2 * rank * (rank - 1) and rank >= 4:
            return SimpleType("D", rank)
        if (rank, count) in ((6, 72), (7, 126), (8, 240)):
            return SimpleType("E", rank)
    elif len(norms) == 2:
        big, small = max(norms), min(norms)
        ratio = Fraction(big, small)
        n_long = sum(1 for r in comp if _dot(r, r) == big)
        if ratio == 3:
            return SimpleType("G", 2)
        if ratio == 2:
            if rank == 4 and count == 48:
                return SimpleType("F", 4)
            if count == 2 * rank * rank:
                # B_n has 2n(n-1) long roots, C_n has 2n short+long swapped
                return SimpleType("B" if n_long == 2 * rank * (rank - 1) else "C", rank)
    raise ValueError(f"unrecognized component: rank {rank}, {count} roots, {len(norms)} lengths")


@dataclass(frozen=True)
class RegularSubalgebra:
    system: RootSystem
    roots: frozenset[Coord]
    ideals: tuple[Ideal, ...]
    torus_corank: int  # dimension of the central torus

    @property
    def rank(self) -> int:
        return self.system.rank

    def contains(self, other: "RegularSubalgebra") -> bool:
        return other.roots <= self.roots

    def describe(self) -> str:
        parts = [str(i.simple_type) for i in self.ideals]
        parts += ["R"] * self.torus_corank
        return "+".join(parts) if parts else "torus"


def subsystem_from_roots(system: RootSystem, subset) -> RegularSubalgebra:
    """Build a RegularSubalgebra from a symmetric additively closed root subset."""
    roots = frozenset(subset)
    if not is_closed_subsystem(system, roots):
        raise ValueError("subset is not symmetric/additively closed")
    # connected components under non-orthogonality
    remaining = set(roots)
    ideals = []
    while remaining:
        seed = remaining.pop()
        comp = {seed, _neg(seed)}
        frontier = set(comp)
        while frontier:
            nxt = {r for r in remaining if any(_dot(r, f) != 0 for f in frontier)}
            remaining -= nxt
            comp |= nxt
            frontier = nxt
        comp = frozenset(comp)
        st = identify_component(system, comp)
        long_norm = system.killing_scale * max(_dot(r, r) for r in comp)
        pos = sorted((r for r in comp if _positivity_key(r) > 0), key=_positivity_key)
        ideals.append(Ideal(st, comp, long_norm, tuple(simple_roots_of(pos))))
    ideals.sort(key=lambda i: (-i.long_norm_sq, -len(i.roots), min(_positivity_key(r) for r in i.roots)))
    corank = system.rank - _span_rank(roots) if roots else system.rank
    return RegularSubalgebra(system, roots, tuple(ideals), corank)


def borel_de_siebenthal(system: RootSystem, keep_nodes) -> frozenset[Coord]:
    """Roots generated by a subset of the extended Dynkin diagram
    (simple roots plus the lowest root); keep_nodes indexes that list,
    index len(simple)=rank selecting the lowest root."""
    nodes = list(system.simple_roots) + [_neg(system.highest_root)]
    gens = [nodes[i] for i in keep_nodes]
    return close_under_addition(system, gens)


def _component_extended_nodes(system: RootSystem, ideal: Ideal) -> list[Coord]:
    """Extended diagram nodes of one ideal: its simple roots plus its lowest root."""
    pos = [r for r in ideal.roots if _positivity_key(r) > 0]
    highest = max(pos, key=lambda r: (sum(_in_basis(r, ideal.simple_roots)), _positivity_key(r)))
    return list(ideal.simple_roots) + [_neg(highest)]


def break_ideal(system: RootSystem, ideal: Ideal, drop: int, extended: bool) -> frozenset[Coord]:
    """Delete one node from the (extended) Dynkin diagram of an ideal and return
    the roots generated by the remaining nodes (possibly empty)."""
    nodes = _component_extended_nodes(system, ideal) if extended else list(ideal.simple_roots)
    gens = [v for i, v in enumerate(nodes) if i != drop]
    if not gens:
        return frozenset()
    return close_under_addition(system, gens)


@dataclass(frozen=True)
class TripleDecomposition:
    """A bisymmetric triple g ⊃ k ⊃ l of maximal rank: n = g ⊖ k (horizontal),
    p_a = (broken ideal a of k) ⊖ l (vertical), one part per broken ideal."""

    system: RootSystem
    k: RegularSubalgebra
    l: RegularSubalgebra
    broken_ideals: tuple[tuple[Ideal, ...], ...]  # one group of k-ideals per p_part
    p_parts: tuple[frozenset[Coord], ...]
    n_roots: frozenset[Coord]

    @property
    def fiber_type(self) -> str:
        return "I" if len(self.p_parts) == 1 else "II"

    def n_components(self) -> tuple[frozenset[Coord], ...]:
        return module_components(self.system, self.l.roots, self.n_roots)

    def validate(self) -> None:
        sys = self.system
        assert self.l.roots < self.k.roots, "l must be a proper subalgebra of k"
        assert is_closed_subsystem(sys, self.k.roots)
        assert is_closed_subsystem(sys, self.l.roots)
        assert check_symmetric_pair(sys.roots, self.k.roots), "(g,k) not symmetric"
        assert check_symmetric_pair(self.k.roots, self.l.roots), "(k,l) not symmetric"
        union = set(self.l.roots) | set(self.n_roots)
        for part in self.p_parts:
            assert part, "empty vertical part"
            union |= part
        assert union == set(sys.roots)
        assert len(self.p_parts) in (1, 2), "bisymmetric triples have s = 1 or 2"


def check_symmetric_pair(ambient_roots, sub_roots) -> bool:
    """(g,k) is a symmetric pair iff [n,n] ⊆ k on the root level:
    the sum of two horizontal roots is never horizontal."""
    amb = set(ambient_roots)
    sub = set(sub_roots)
    horiz = amb - sub
    for a in horiz:
        for b in horiz:
            c = _add(a, b)
            if c in amb and c not in sub:
                return False
    return True


def module_components(system: RootSystem, l_roots, target) -> tuple[frozenset[Coord], ...]:
    """Connected components of `target` under translation by roots of l:
    the root supports of the irreducible Ad L-submodules."""
    # breadth-first flood fill in the packed-integer root encoding
    steps = [system.encode(a) - system._enc_zero for a in l_roots]
    remaining = {system.encode(r): r for r in target}
    comps = []
    while remaining:
        seed_enc, seed = remaining.popitem()
        comp = {seed}
        frontier = [seed_enc]
        while frontier:
            cur = frontier.pop()
            for step in steps:
                s = cur + step
                r = remaining.pop(s, None)
                if r is not None:
                    comp.add(r)
                    frontier.append(s)
        comps.append(frozenset(comp))
    return tuple(sorted(comps, key=lambda c: min(_positivity_key(r) for r in c)))
