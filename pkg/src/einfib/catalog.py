"""Catalog of maximal-rank bisymmetric triples (g, k, l).

Each entry realizes one family of triples: g simple, k a maximal-rank
symmetric subalgebra, l a maximal-rank subalgebra of k with K/L a (product of)
symmetric space(s).  Classical families are realized by explicit coordinate
blocks; exceptional ones by single-node deletions of (extended) Dynkin
diagrams, located by matching the isomorphism type of the result.

Vertical parts p_a are grouped by the broken *factor* of k as the catalog
labels it (e.g. an so_4 factor counts as one factor although it splits into
two su_2 ideals), matching how the source tables organize Type II data.
"""

from __future__ import annotations

import itertools

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterator, Optional

from .roots import RootSystem, SimpleType, build_root_system, _neg
from .subalgebra import (
    Ideal,
    RegularSubalgebra,
    TripleDecomposition,
    break_ideal,
    close_under_addition,
    subsystem_from_roots,
)


class DomainError(ValueError):
    """Parameters outside the valid domain of a catalog triple."""


# decompositions are immutable, so instantiated triples are shared
_BUILD_CACHE: dict = {}


# --------------------------------------------------------------------------
# classical coordinate blocks


def _u_block(dim, idxs):
    return {_unit_diff(dim, i, j) for i in idxs for j in idxs if i != j}


def _unit_diff(dim, i, j):
    v = [0] * dim
    v[i], v[j] = 2, -2
    return tuple(v)


def _pm_pairs(dim, idxs):
    out = set()
    for i, j in combinations(sorted(idxs), 2):
        for si in (1, -1):
            for sj in (1, -1):
                v = [0] * dim
                v[i], v[j] = 2 * si, 2 * sj
                out.add(tuple(v))
    return out


def _units(dim, idxs, scale=2):
    out = set()
    for i in idxs:
        v = [0] * dim
        v[i] = scale
        out.add(tuple(v))
        v = list(v)
        v[i] = -scale
        out.add(tuple(v))
    return out


def _d_block(dim, idxs):
    return _pm_pairs(dim, idxs)


def _b_block(dim, idxs):
    return _pm_pairs(dim, idxs) | _units(dim, idxs, 2)


def _c_block(dim, idxs):
    return _pm_pairs(dim, idxs) | _units(dim, idxs, 4)


# --------------------------------------------------------------------------
# assembling decompositions


def _decomposition(system, k_roots, l_roots, broken_factors):
    """broken_factors: list of (factor_roots, l_part_of_factor); p_a is their
    difference, ordered as given (the order fixes gamma_1 vs gamma_2)."""
    k = subsystem_from_roots(system, frozenset(k_roots))
    l = subsystem_from_roots(system, frozenset(l_roots))
    p_parts = []
    broken = []
    for factor_roots, kept in broken_factors:
        part = frozenset(factor_roots) - frozenset(kept)
        if not part:
            raise DomainError("factor not actually broken")
        p_parts.append(part)
        broken.append(tuple(i for i in k.ideals if i.roots & part))
    n_roots = frozenset(system.roots) - frozenset(k_roots)
    return TripleDecomposition(system, k, l, tuple(broken), tuple(p_parts), n_roots)


# --------------------------------------------------------------------------
# exceptional machinery: signature-matched diagram deletions

Sig = tuple[tuple[str, int, bool], ...]  # (family, rank, has_long_roots_of_g)


def _signature(system: RootSystem, sub: RegularSubalgebra) -> tuple[Sig, int]:
    g_long = system.norm_sq(system.highest_root)
    types = tuple(
        sorted(
            (i.simple_type.family, i.simple_type.rank, i.long_norm_sq == g_long)
            for i in sub.ideals
        )
    )
    return types, sub.torus_corank


def _deletion_candidates(system: RootSystem) -> Iterator[frozenset]:
    ext = list(system.simple_roots) + [_neg(system.highest_root)]
    for drop in range(len(ext)):
        gens = [v for i, v in enumerate(ext) if i != drop]
        yield close_under_addition(system, gens)
    for drop in range(len(system.simple_roots)):
        gens = [v for i, v in enumerate(system.simple_roots) if i != drop]
        if gens:
            yield close_under_addition(system, gens)


_SUBALGEBRA_CACHE: dict = {}


def find_symmetric_subalgebra(system: RootSystem, types: Sig, corank: int) -> RegularSubalgebra:
    """Locate a maximal-rank subalgebra of the given isomorphism type among
    single-node deletions of the (extended) Dynkin diagram of g."""
    want = tuple(sorted(types))
    key = (system.simple_type, want, corank)
    if key in _SUBALGEBRA_CACHE:
        return _SUBALGEBRA_CACHE[key]
    for roots in _deletion_candidates(system):
        if roots == system.roots:
            continue
        sub = subsystem_from_roots(system, roots)
        if _signature(system, sub) == (want, corank):
            _SUBALGEBRA_CACHE[key] = sub
            return sub
    raise ValueError(f"no subalgebra {want} + {corank} torus found in {system.simple_type}")


def _ideal_break_candidates(system: RootSystem, ideal: Ideal) -> Iterator[frozenset]:
    n_ext = len(ideal.simple_roots) + 1
    for drop in range(n_ext):
        yield break_ideal(system, ideal, drop, extended=True)
    for drop in range(len(ideal.simple_roots)):
        yield break_ideal(system, ideal, drop, extended=False)


def break_ideal_matches(system: RootSystem, ideal: Ideal, types: Sig, corank_gain: int) -> Iterator[frozenset]:
    """All single-node-deletion breaks of an ideal matching the given type.

    Distinct matches need not be conjugate inside g (e.g. the two chiralities
    of a u(8) inside the so(16) of e8), so callers that care pick via a
    selector; the first match is the default."""
    want = tuple(sorted(types))
    rank = len(ideal.simple_roots)
    seen = set()
    for roots in _ideal_break_candidates(system, ideal):
        if roots == ideal.roots or roots in seen:
            continue
        seen.add(roots)
        if not roots:
            if not want and corank_gain == rank:
                yield roots
            continue
        sub = subsystem_from_roots(system, roots)
        types_got, _ = _signature(system, sub)
        corank_got = rank - (system.rank - sub.torus_corank)
        if types_got == want and corank_got == corank_gain:
            yield roots


def break_ideal_to(system: RootSystem, ideal: Ideal, types: Sig, corank_gain: int) -> frozenset:
    """Break one simple ideal into the given type by a single node deletion."""
    for roots in break_ideal_matches(system, ideal, types, corank_gain):
        return roots
    raise ValueError(f"cannot break {ideal.simple_type} into {tuple(sorted(types))} + {corank_gain}")


def _find_ideal(k: RegularSubalgebra, system: RootSystem, family: str, rank: int, long: bool) -> Ideal:
    g_long = system.norm_sq(system.highest_root)
    for ideal in k.ideals:
        if (
            ideal.simple_type.family == family
            and ideal.simple_type.rank == rank
            and (ideal.long_norm_sq == g_long) == long
        ):
            return ideal
    raise ValueError(f"no ideal {family}{rank} (long={long}) in {k.describe()}")


# --------------------------------------------------------------------------
# triple specifications


@dataclass(frozen=True)
class TripleSpec:
    id: str
    family: str  # family of g: A/B/C/D/E/F/G
    params: tuple[str, ...]
    fiber_type: str  # 'I' or 'II'
    builder: Callable[..., TripleDecomposition]
    domain: Callable[..., Optional[str]]  # returns error message or None
    sweep: Callable[[int], Iterator[dict]]  # yields param dicts, bound by max n
    description: str = ""
    four_symmetric: Optional[Callable[..., Optional[bool]]] = None

    def check(self, **kw) -> None:
        missing = [p for p in self.params if p not in kw]
        extra = [p for p in kw if p not in self.params]
        if missing or extra:
            raise DomainError(f"{self.id}: parameters are {self.params}")
        err = self.domain(**kw)
        if err:
            raise DomainError(f"{self.id}: {err}")

    def build(self, **kw) -> TripleDecomposition:
        self.check(**kw)
        key = (self.id, tuple(sorted(kw.items())))
        if key not in _BUILD_CACHE:
            _BUILD_CACHE[key] = self.builder(**kw)
        return _BUILD_CACHE[key]


CATALOG: dict[str, TripleSpec] = {}


def _register(spec: TripleSpec) -> None:
    CATALOG[spec.id] = spec


def get(triple_id: str) -> TripleSpec:
    if triple_id not in CATALOG:
        raise KeyError(f"unknown triple id {triple_id!r}")
    return CATALOG[triple_id]


def enumerate_triples(family: Optional[str] = None) -> list[TripleSpec]:
    specs = sorted(CATALOG.values(), key=lambda s: s.id)
    if family is None:
        return specs
    return [s for s in specs if s.family == family]


# -- classical: su_n -------------------------------------------------------


def _build_cpan1(n, p, l):
    sys = build_root_system("A", n - 1)
    dim = n
    blk1, blk2 = range(p), range(p, n)
    k_roots = _u_block(dim, blk1) | _u_block(dim, blk2)
    l_roots = _u_block(dim, range(l)) | _u_block(dim, range(l, p)) | _u_block(dim, blk2)
    return _decomposition(sys, k_roots, l_roots, [(_u_block(dim, blk1), l_roots)])


_register(TripleSpec(
    id="cpan1", family="A", params=("n", "p", "l"), fiber_type="I",
    builder=_build_cpan1,
    domain=lambda n, p, l: None if (n >= 3 and 2 <= p <= n - 1 and 1 <= l <= p - 1) else "need n>=3, 2<=p<=n-1, 1<=l<=p-1",
    sweep=lambda mx: ({"n": n, "p": p, "l": l} for n in range(3, mx + 1) for p in range(2, n) for l in range(1, p)),
    description="su(n) > su(p)+su(n-p)+R > su(l)+su(p-l)+R+su(n-p)+R",
    four_symmetric=lambda n, p, l: False if p == 2 * l else None,
))


def _build_cpan3(n, p, l, s):
    sys = build_root_system("A", n - 1)
    dim = n
    blk1, blk2 = range(p), range(p, n)
    k_roots = _u_block(dim, blk1) | _u_block(dim, blk2)
    l_roots = (
        _u_block(dim, range(l)) | _u_block(dim, range(l, p))
        | _u_block(dim, range(p, p + s)) | _u_block(dim, range(p + s, n))
    )
    return _decomposition(
        sys, k_roots, l_roots,
        [(_u_block(dim, blk1), l_roots), (_u_block(dim, blk2), l_roots)],
    )


_register(TripleSpec(
    id="cpan3", family="A", params=("n", "p", "l", "s"), fiber_type="II",
    builder=_build_cpan3,
    domain=lambda n, p, l, s: None if (n >= 4 and 2 <= p <= n - 2 and 1 <= l <= p - 1 and 1 <= s <= n - p - 1) else "need 2<=p<=n-2, 1<=l<p, 1<=s<n-p",
    sweep=lambda mx: ({"n": n, "p": p, "l": l, "s": s} for n in range(4, mx + 1) for p in range(2, n - 1) for l in range(1, p) for s in range(1, n - p)),
    description="su(n) > su(p)+su(n-p)+R > su(l)+su(p-l)+su(s)+su(n-p-s)+R^3",
    four_symmetric=lambda n, p, l, s: (l != s) if (p == 2 * l and n - p == 2 * s) else None,
))


# -- classical: so_{2n+1} --------------------------------------------------


def _bn_k(n, p):
    sys = build_root_system("B", n)
    blk1, blk2 = range(p), range(p, n)
    k_roots = _b_block(n, blk1) | _d_block(n, blk2)
    return sys, blk1, blk2, k_roots


def _build_cpbn1(n, p, l):
    sys, blk1, blk2, k_roots = _bn_k(n, p)
    l_roots = _b_block(n, range(l)) | _d_block(n, range(l, p)) | _d_block(n, blk2)
    return _decomposition(sys, k_roots, l_roots, [(_b_block(n, blk1), l_roots)])


_register(TripleSpec(
    id="cpbn1", family="B", params=("n", "p", "l"), fiber_type="I",
    builder=_build_cpbn1,
    domain=lambda n, p, l: None if (n >= 2 and 1 <= p <= n - 1 and 0 <= l <= p - 1) else "need 1<=p<=n-1, 0<=l<=p-1",
    sweep=lambda mx: ({"n": n, "p": p, "l": l} for n in range(2, mx + 1) for p in range(1, n) for l in range(0, p)),
    description="so(2n+1) > so(2p+1)+so(2(n-p)) > so(2l+1)+so(2(p-l))+so(2(n-p))",
))


def _build_cpbn2(n, p, s):
    sys, blk1, blk2, k_roots = _bn_k(n, p)
    l_roots = _b_block(n, blk1) | _d_block(n, range(p, p + s)) | _d_block(n, range(p + s, n))
    return _decomposition(sys, k_roots, l_roots, [(_d_block(n, blk2), l_roots)])


_register(TripleSpec(
    id="cpbn2", family="B", params=("n", "p", "s"), fiber_type="I",
    builder=_build_cpbn2,
    domain=lambda n, p, s: None if (1 <= p <= n - 2 and 1 <= s <= n - p - 1) else "need 1<=p<=n-2, 1<=s<=n-p-1",
    sweep=lambda mx: ({"n": n, "p": p, "s": s} for n in range(3, mx + 1) for p in range(1, n - 1) for s in range(1, n - p)),
    description="so(2n+1) > so(2p+1)+so(2(n-p)) > so(2p+1)+so(2s)+so(2(n-p-s))",
    four_symmetric=lambda n, p, s: True if n - p == 2 * s else None,
))


def _build_cpbn3(n, p):
    sys, blk1, blk2, k_roots = _bn_k(n, p)
    l_roots = _b_block(n, blk1) | _u_block(n, blk2)
    return _decomposition(sys, k_roots, l_roots, [(_d_block(n, blk2), l_roots)])


_register(TripleSpec(
    id="cpbn3", family="B", params=("n", "p"), fiber_type="I",
    builder=_build_cpbn3,
    domain=lambda n, p: None if (1 <= p <= n - 2) else "need 1<=p<=n-2 (so the so(2(n-p)) factor has rank >= 2)",
    sweep=lambda mx: ({"n": n, "p": p} for n in range(3, mx + 1) for p in range(1, n - 1)),
    description="so(2n+1) > so(2p+1)+so(2(n-p)) > so(2p+1)+u(n-p)",
    four_symmetric=lambda n, p: False,
))


def _build_cpbn4(n, p, l):
    sys, blk1, blk2, k_roots = _bn_k(n, p)
    l_roots = _b_block(n, range(l)) | _d_block(n, range(l, p)) | _u_block(n, blk2)
    return _decomposition(
        sys, k_roots, l_roots,
        [(_b_block(n, blk1), l_roots), (_d_block(n, blk2), l_roots)],
    )


_register(TripleSpec(
    id="cpbn4", family="B", params=("n", "p", "l"), fiber_type="II",
    builder=_build_cpbn4,
    domain=lambda n, p, l: None if (1 <= p <= n - 2 and 0 <= l <= p - 1) else "need 1<=p<=n-2, 0<=l<=p-1",
    sweep=lambda mx: ({"n": n, "p": p, "l": l} for n in range(3, mx + 1) for p in range(1, n - 1) for l in range(0, p)),
    description="so(2n+1) > so(2p+1)+so(2(n-p)) > so(2l+1)+so(2(p-l))+u(n-p)",
))


def _build_cpbn5(n, p, l, s):
    sys, blk1, blk2, k_roots = _bn_k(n, p)
    l_roots = (
        _b_block(n, range(l)) | _d_block(n, range(l, p))
        | _d_block(n, range(p, p + s)) | _d_block(n, range(p + s, n))
    )
    return _decomposition(
        sys, k_roots, l_roots,
        [(_b_block(n, blk1), l_roots), (_d_block(n, blk2), l_roots)],
    )


_register(TripleSpec(
    id="cpbn5", family="B", params=("n", "p", "l", "s"), fiber_type="II",
    builder=_build_cpbn5,
    domain=lambda n, p, l, s: None if (1 <= p <= n - 2 and 0 <= l <= p - 1 and 1 <= s <= n - p - 1) else "need 1<=p<=n-2, 0<=l<p, 1<=s<n-p",
    sweep=lambda mx: ({"n": n, "p": p, "l": l, "s": s} for n in range(3, mx + 1) for p in range(1, n - 1) for l in range(0, p) for s in range(1, n - p)),
    description="so(2n+1) > so(2p+1)+so(2(n-p)) > so(2l+1)+so(2(p-l))+so(2s)+so(2(n-p-s))",
))


# -- classical: so_{2n} ----------------------------------------------------


def _build_cpdn1(n, p):
    sys = build_root_system("D", n)
    k_roots = _u_block(n, range(n))
    l_roots = _u_block(n, range(p)) | _u_block(n, range(p, n))
    return _decomposition(sys, k_roots, l_roots, [(k_roots, l_roots)])


_register(TripleSpec(
    id="cpdn1", family="D", params=("n", "p"), fiber_type="I",
    builder=_build_cpdn1,
    domain=lambda n, p: None if (n >= 3 and 1 <= p <= n - 1) else "need n>=3, 1<=p<=n-1",
    sweep=lambda mx: ({"n": n, "p": p} for n in range(3, mx + 1) for p in range(1, n)),
    description="so(2n) > u(n) > u(p)+u(n-p)",
))


def _dn_k(n, p):
    sys = build_root_system("D", n)
    blk1, blk2 = range(p), range(p, n)
    k_roots = _d_block(n, blk1) | _d_block(n, blk2)
    return sys, blk1, blk2, k_roots


def _build_cpdn2(n, p, l):
    sys, blk1, blk2, k_roots = _dn_k(n, p)
    l_roots = _d_block(n, range(l)) | _d_block(n, range(l, p)) | _d_block(n, blk2)
    return _decomposition(sys, k_roots, l_roots, [(_d_block(n, blk1), l_roots)])


_register(TripleSpec(
    id="cpdn2", family="D", params=("n", "p", "l"), fiber_type="I",
    builder=_build_cpdn2,
    domain=lambda n, p, l: None if (n >= 4 and 2 <= p <= n // 2 and 1 <= l <= p - 1) else "need 2<=p<=n/2, 1<=l<=p-1",
    sweep=lambda mx: ({"n": n, "p": p, "l": l} for n in range(4, mx + 1) for p in range(2, n // 2 + 1) for l in range(1, p)),
    description="so(2n) > so(2p)+so(2(n-p)) > so(2l)+so(2(p-l))+so(2(n-p))",
    four_symmetric=lambda n, p, l: False if p == 2 * l else None,
))


def _build_cpdn5(n, p):
    sys, blk1, blk2, k_roots = _dn_k(n, p)
    l_roots = _u_block(n, blk1) | _d_block(n, blk2)
    return _decomposition(sys, k_roots, l_roots, [(_d_block(n, blk1), l_roots)])


_register(TripleSpec(
    id="cpdn5", family="D", params=("n", "p"), fiber_type="I",
    builder=_build_cpdn5,
    domain=lambda n, p: None if (n >= 4 and 2 <= p <= n // 2) else "need n>=4, 2<=p<=n/2",
    sweep=lambda mx: ({"n": n, "p": p} for n in range(4, mx + 1) for p in range(2, n // 2 + 1)),
    description="so(2n) > so(2p)+so(2(n-p)) > u(p)+so(2(n-p))",
    four_symmetric=lambda n, p: True,
))


def _build_cpdn4(n, p, l, s):
    sys, blk1, blk2, k_roots = _dn_k(n, p)
    l_roots = (
        _d_block(n, range(l)) | _d_block(n, range(l, p))
        | _d_block(n, range(p, p + s)) | _d_block(n, range(p + s, n))
    )
    return _decomposition(
        sys, k_roots, l_roots,
        [(_d_block(n, blk1), l_roots), (_d_block(n, blk2), l_roots)],
    )


_register(TripleSpec(
    id="cpdn4", family="D", params=("n", "p", "l", "s"), fiber_type="II",
    builder=_build_cpdn4,
    domain=lambda n, p, l, s: None if (2 <= p <= n - 2 and 1 <= l <= p - 1 and 1 <= s <= n - p - 1) else "need 2<=p<=n-2, 1<=l<p, 1<=s<n-p",
    sweep=lambda mx: ({"n": n, "p": p, "l": l, "s": s} for n in range(4, mx + 1) for p in range(2, n - 1) for l in range(1, p) for s in range(1, n - p)),
    description="so(2n) > so(2p)+so(2(n-p)) > so(2l)+so(2(p-l))+so(2s)+so(2(n-p-s))",
    four_symmetric=lambda n, p, l, s: True if (p == 2 * l and n - p == 2 * s and l == s) else None,
))


def _build_cpdn7(n, p):
    sys, blk1, blk2, k_roots = _dn_k(n, p)
    l_roots = _u_block(n, blk1) | _u_block(n, blk2)
    return _decomposition(
        sys, k_roots, l_roots,
        [(_d_block(n, blk1), l_roots), (_d_block(n, blk2), l_roots)],
    )


_register(TripleSpec(
    id="cpdn7", family="D", params=("n", "p"), fiber_type="II",
    builder=_build_cpdn7,
    domain=lambda n, p: None if (2 <= p <= n - 2) else "need 2<=p<=n-2",
    sweep=lambda mx: ({"n": n, "p": p} for n in range(4, mx + 1) for p in range(2, n - 1)),
    description="so(2n) > so(2p)+so(2(n-p)) > u(p)+u(n-p)",
    four_symmetric=lambda n, p: False if n == 2 * p else None,
))


def _build_cpdn8(n, p, l):
    sys, blk1, blk2, k_roots = _dn_k(n, p)
    l_roots = _d_block(n, range(l)) | _d_block(n, range(l, p)) | _u_block(n, blk2)
    return _decomposition(
        sys, k_roots, l_roots,
        [(_d_block(n, blk1), l_roots), (_d_block(n, blk2), l_roots)],
    )


_register(TripleSpec(
    id="cpdn8", family="D", params=("n", "p", "l"), fiber_type="II",
    builder=_build_cpdn8,
    domain=lambda n, p, l: None if (2 <= p <= n - 2 and 1 <= l <= p - 1) else "need 2<=p<=n-2, 1<=l<=p-1",
    sweep=lambda mx: ({"n": n, "p": p, "l": l} for n in range(4, mx + 1) for p in range(2, n - 1) for l in range(1, p)),
    description="so(2n) > so(2p)+so(2(n-p)) > so(2l)+so(2(p-l))+u(n-p)",
    four_symmetric=lambda n, p, l: False if (n == 2 * p and p == 2 * l) else None,
))


# -- classical: sp_n -------------------------------------------------------


def _build_cpcn1(n, p):
    sys = build_root_system("C", n)
    k_roots = _u_block(n, range(n))
    l_roots = _u_block(n, range(p)) | _u_block(n, range(p, n))
    return _decomposition(sys, k_roots, l_roots, [(k_roots, l_roots)])


_register(TripleSpec(
    id="cpcn1", family="C", params=("n", "p"), fiber_type="I",
    builder=_build_cpcn1,
    domain=lambda n, p: None if (n >= 2 and 1 <= p <= n - 1) else "need 1<=p<=n-1",
    sweep=lambda mx: ({"n": n, "p": p} for n in range(2, mx + 1) for p in range(1, n)),
    description="sp(n) > u(n) > u(p)+u(n-p)",
))


def _cn_k(n, p):
    sys = build_root_system("C", n)
    blk1, blk2 = range(p), range(p, n)
    k_roots = _c_block(n, blk1) | _c_block(n, blk2)
    return sys, blk1, blk2, k_roots


def _build_cpcn2(n, p, l):
    sys, blk1, blk2, k_roots = _cn_k(n, p)
    l_roots = _c_block(n, range(l)) | _c_block(n, range(l, p)) | _c_block(n, blk2)
    return _decomposition(sys, k_roots, l_roots, [(_c_block(n, blk1), l_roots)])


_register(TripleSpec(
    id="cpcn2", family="C", params=("n", "p", "l"), fiber_type="I",
    builder=_build_cpcn2,
    domain=lambda n, p, l: None if (2 <= p <= n - 1 and 1 <= l <= p - 1) else "need 2<=p<=n-1, 1<=l<=p-1",
    sweep=lambda mx: ({"n": n, "p": p, "l": l} for n in range(3, mx + 1) for p in range(2, n) for l in range(1, p)),
    description="sp(n) > sp(p)+sp(n-p) > sp(l)+sp(p-l)+sp(n-p)",
    four_symmetric=lambda n, p, l: False if p == 2 * l else None,
))


def _build_cpcn5(n, p):
    sys, blk1, blk2, k_roots = _cn_k(n, p)
    l_roots = _u_block(n, blk1) | _c_block(n, blk2)
    return _decomposition(sys, k_roots, l_roots, [(_c_block(n, blk1), l_roots)])


_register(TripleSpec(
    id="cpcn5", family="C", params=("n", "p"), fiber_type="I",
    builder=_build_cpcn5,
    domain=lambda n, p: None if (1 <= p <= n - 1) else "need 1<=p<=n-1",
    sweep=lambda mx: ({"n": n, "p": p} for n in range(2, mx + 1) for p in range(1, n)),
    description="sp(n) > sp(p)+sp(n-p) > u(p)+sp(n-p)",
    four_symmetric=lambda n, p: True,
))


def _build_cpcn4(n, p, l, s):
    sys, blk1, blk2, k_roots = _cn_k(n, p)
    l_roots = (
        _c_block(n, range(l)) | _c_block(n, range(l, p))
        | _c_block(n, range(p, p + s)) | _c_block(n, range(p + s, n))
    )
    return _decomposition(
        sys, k_roots, l_roots,
        [(_c_block(n, blk1), l_roots), (_c_block(n, blk2), l_roots)],
    )


_register(TripleSpec(
    id="cpcn4", family="C", params=("n", "p", "l", "s"), fiber_type="II",
    builder=_build_cpcn4,
    domain=lambda n, p, l, s: None if (2 <= p <= n - 2 and 1 <= l <= p - 1 and 1 <= s <= n - p - 1) else "need 2<=p<=n-2, 1<=l<p, 1<=s<n-p",
    sweep=lambda mx: ({"n": n, "p": p, "l": l, "s": s} for n in range(4, mx + 1) for p in range(2, n - 1) for l in range(1, p) for s in range(1, n - p)),
    description="sp(n) > sp(p)+sp(n-p) > sp(l)+sp(p-l)+sp(s)+sp(n-p-s)",
    four_symmetric=lambda n, p, l, s: False if (p == 2 * l and n - p == 2 * s and l == s) else None,
))


def _build_cpcn7(n, p):
    sys, blk1, blk2, k_roots = _cn_k(n, p)
    l_roots = _u_block(n, blk1) | _u_block(n, blk2)
    return _decomposition(
        sys, k_roots, l_roots,
        [(_c_block(n, blk1), l_roots), (_c_block(n, blk2), l_roots)],
    )


_register(TripleSpec(
    id="cpcn7", family="C", params=("n", "p"), fiber_type="II",
    builder=_build_cpcn7,
    domain=lambda n, p: None if (1 <= p <= n - 1) else "need 1<=p<=n-1",
    sweep=lambda mx: ({"n": n, "p": p} for n in range(2, mx + 1) for p in range(1, n)),
    description="sp(n) > sp(p)+sp(n-p) > u(p)+u(n-p)",
))


def _build_cpcn8(n, p, l):
    sys, blk1, blk2, k_roots = _cn_k(n, p)
    l_roots = _c_block(n, range(l)) | _c_block(n, range(l, p)) | _u_block(n, blk2)
    return _decomposition(
        sys, k_roots, l_roots,
        [(_c_block(n, blk1), l_roots), (_c_block(n, blk2), l_roots)],
    )


_register(TripleSpec(
    id="cpcn8", family="C", params=("n", "p", "l"), fiber_type="II",
    builder=_build_cpcn8,
    domain=lambda n, p, l: None if (2 <= p <= n - 1 and 1 <= l <= p - 1 and n - p >= 1) else "need 2<=p<=n-1, 1<=l<=p-1",
    sweep=lambda mx: ({"n": n, "p": p, "l": l} for n in range(3, mx + 1) for p in range(2, n) for l in range(1, p)),
    description="sp(n) > sp(p)+sp(n-p) > sp(l)+sp(p-l)+u(n-p)",
    four_symmetric=lambda n, p, l: False if (n == 2 * p and p == 2 * l) else None,
))


# -- exceptional helpers ---------------------------------------------------

L, S = True, False  # long / short flag in signatures


def _exceptional(system: RootSystem, k: RegularSubalgebra, breaks, select=None) -> TripleDecomposition:
    """breaks: ordered list of (ideal, target_types, corank_gain).

    When a break admits several non-conjugate realizations, `select` (a
    predicate on the finished TripleDecomposition) picks one; the catalog
    row fixes the intended conjugacy class that way."""

    def build_with(choices):
        l_roots = set(k.roots)
        factors = []
        for (ideal, _, _), new in zip(breaks, choices):
            l_roots -= ideal.roots
            l_roots |= new
            factors.append((ideal.roots, new))
        return _decomposition(system, k.roots, frozenset(l_roots), factors)

    if select is None:
        return build_with([break_ideal_to(system, ideal, types, gain)
                           for ideal, types, gain in breaks])
    for choices in itertools.product(*(
            list(break_ideal_matches(system, ideal, types, gain))
            for ideal, types, gain in breaks)):
        decomp = build_with(choices)
        if select(decomp):
            return decomp
    raise ValueError("no break realization satisfies the selector")


def _simple_exceptional(id, g_family, g_rank, k_types, k_corank, break_list, fiber_type,
                        description, four_symmetric=None, select=None):
    """break_list: list of ((family, rank, long), target_types, corank_gain)."""

    def builder():
        sys = build_root_system(g_family, g_rank)
        k = find_symmetric_subalgebra(sys, k_types, k_corank)
        breaks = [(_find_ideal(k, sys, *sel), types, gain) for sel, types, gain in break_list]
        return _exceptional(sys, k, breaks, select=select)

    _register(TripleSpec(
        id=id, family=g_family, params=(), fiber_type=fiber_type,
        builder=builder, domain=lambda: None, sweep=lambda mx: iter([{}]),
        description=description,
        four_symmetric=None if four_symmetric is None else (lambda: four_symmetric),
    ))


def _param_exceptional(id, g_family, g_rank, k_types, k_corank, break_map, fiber_type,
                       description, valid_p, four_symmetric=None):
    """break_map: p -> list of (ideal_selector, target_types, corank_gain)."""

    def builder(p):
        sys = build_root_system(g_family, g_rank)
        k = find_symmetric_subalgebra(sys, k_types, k_corank)
        breaks = [(_find_ideal(k, sys, *sel), types, gain) for sel, types, gain in break_map[p]]
        return _exceptional(sys, k, breaks)

    _register(TripleSpec(
        id=id, family=g_family, params=("p",), fiber_type=fiber_type,
        builder=builder,
        domain=lambda p: None if p in valid_p else f"p must be one of {sorted(valid_p)}",
        sweep=lambda mx: ({"p": p} for p in sorted(valid_p)),
        description=description,
        four_symmetric=None if four_symmetric is None else (lambda p: four_symmetric(p)),
    ))


# -- F4 ---------------------------------------------------------------------

_F4_B4 = ((("B", 4, L),), 0)
_F4_C3A1 = ((("C", 3, L), ("A", 1, L)), 0)

_param_exceptional(
    "cpf41", "F", 4, *_F4_B4,
    break_map={
        1: [(("B", 4, L), (("D", 4, L),), 0)],
        3: [(("B", 4, L), (("A", 1, S), ("A", 3, L)), 0)],
        5: [(("B", 4, L), (("B", 2, L), ("A", 1, L), ("A", 1, L)), 0)],
        7: [(("B", 4, L), (("B", 3, L),), 1)],
    },
    fiber_type="I", description="f4 > so(9) > so(p)+so(9-p), p odd",
    valid_p={1, 3, 5, 7}, four_symmetric=lambda p: {1: False, 7: True}.get(p),
)

_simple_exceptional(
    "cpf42", "F", 4, *_F4_C3A1,
    break_list=[(("A", 1, L), (), 1)],
    fiber_type="I", description="f4 > sp(3)+su(2) > sp(3)+R", four_symmetric=True,
)
_simple_exceptional(
    "cpf43", "F", 4, *_F4_C3A1,
    break_list=[(("C", 3, L), (("A", 2, S),), 1)],
    fiber_type="I", description="f4 > sp(3)+su(2) > u(3)+su(2)",
)
_simple_exceptional(
    "cpf44", "F", 4, *_F4_C3A1,
    break_list=[(("C", 3, L), (("B", 2, L), ("A", 1, L)), 0)],
    fiber_type="I", description="f4 > sp(3)+su(2) > sp(2)+su(2)+su(2)",
)
_simple_exceptional(
    "cpf45", "F", 4, *_F4_C3A1,
    break_list=[(("C", 3, L), (("A", 2, S),), 1), (("A", 1, L), (), 1)],
    fiber_type="II", description="f4 > sp(3)+su(2) > u(3)+R",
)
_simple_exceptional(
    "cpf46", "F", 4, *_F4_C3A1,
    break_list=[(("C", 3, L), (("B", 2, L), ("A", 1, L)), 0), (("A", 1, L), (), 1)],
    fiber_type="II", description="f4 > sp(3)+su(2) > su(2)+sp(2)+R",
)

# -- G2 ---------------------------------------------------------------------

_G2_K = ((("A", 1, L), ("A", 1, S)), 0)

_simple_exceptional(
    "cpg21", "G", 2, *_G2_K,
    break_list=[(("A", 1, L), (), 1)],
    fiber_type="I", description="g2 > su(2)+su(2) > R+su(2)", four_symmetric=True,
)
_simple_exceptional(
    "cpg22", "G", 2, *_G2_K,
    break_list=[(("A", 1, S), (), 1)],
    fiber_type="I", description="g2 > su(2)+su(2) > su(2)+R", four_symmetric=True,
)
_simple_exceptional(
    "cpg23", "G", 2, *_G2_K,
    break_list=[(("A", 1, L), (), 1), (("A", 1, S), (), 1)],
    fiber_type="II", description="g2 > su(2)+su(2) > R+R", four_symmetric=False,
)

# -- E8 ---------------------------------------------------------------------

_E8_D8 = ((("D", 8, L),), 0)
_E8_E7A1 = ((("E", 7, L), ("A", 1, L)), 0)

_param_exceptional(
    "cpe81", "E", 8, *_E8_D8,
    break_map={
        1: [(("D", 8, L), (("D", 7, L),), 1)],
        2: [(("D", 8, L), (("A", 1, L), ("A", 1, L), ("D", 6, L)), 0)],
        3: [(("D", 8, L), (("A", 3, L), ("D", 5, L)), 0)],
        4: [(("D", 8, L), (("D", 4, L), ("D", 4, L)), 0)],
    },
    fiber_type="I", description="e8 > so(16) > so(2p)+so(16-2p)",
    valid_p={1, 2, 3, 4}, four_symmetric=lambda p: True,
)
_simple_exceptional(
    "cpe82", "E", 8, *_E8_D8,
    break_list=[(("D", 8, L), (("A", 7, L),), 1)],
    fiber_type="I", description="e8 > so(16) > u(8)",
    # the two u(8) chiralities are not conjugate inside e8; the catalog row is
    # the one whose isotropy module splits into five l-components
    select=lambda d: len(d.n_components()) == 5,
)
_simple_exceptional(
    "cpe83", "E", 8, *_E8_E7A1,
    break_list=[(("A", 1, L), (), 1)],
    fiber_type="I", description="e8 > e7+su(2) > e7+R", four_symmetric=False,
)
_simple_exceptional(
    "cpe84", "E", 8, *_E8_E7A1,
    break_list=[(("E", 7, L), (("E", 6, L),), 1)],
    fiber_type="I", description="e8 > e7+su(2) > e6+R+su(2)",
)
_simple_exceptional(
    "cpe85", "E", 8, *_E8_E7A1,
    break_list=[(("E", 7, L), (("E", 6, L),), 1), (("A", 1, L), (), 1)],
    fiber_type="II", description="e8 > e7+su(2) > e6+R+R",
)
_simple_exceptional(
    "cpe86", "E", 8, *_E8_E7A1,
    break_list=[(("E", 7, L), (("D", 6, L), ("A", 1, L)), 0)],
    fiber_type="I", description="e8 > e7+su(2) > so(12)+su(2)+su(2)",
)
_simple_exceptional(
    "cpe87", "E", 8, *_E8_E7A1,
    break_list=[(("E", 7, L), (("D", 6, L), ("A", 1, L)), 0), (("A", 1, L), (), 1)],
    fiber_type="II", description="e8 > e7+su(2) > so(12)+su(2)+R",
)
_simple_exceptional(
    "cpe88", "E", 8, *_E8_E7A1,
    break_list=[(("E", 7, L), (("A", 7, L),), 0)],
    fiber_type="I", description="e8 > e7+su(2) > su(8)+su(2)",
)
_simple_exceptional(
    "cpe89", "E", 8, *_E8_E7A1,
    break_list=[(("E", 7, L), (("A", 7, L),), 0), (("A", 1, L), (), 1)],
    fiber_type="II", description="e8 > e7+su(2) > su(8)+R",
)

# -- E7 ---------------------------------------------------------------------

_E7_D6A1 = ((("D", 6, L), ("A", 1, L)), 0)
_E7_A7 = ((("A", 7, L),), 0)
_E7_E6R = ((("E", 6, L),), 1)

_simple_exceptional(
    "cpe71", "E", 7, *_E7_D6A1,
    break_list=[(("A", 1, L), (), 1)],
    fiber_type="I", description="e7 > so(12)+su(2) > so(12)+R", four_symmetric=True,
)
_simple_exceptional(
    "cpe72", "E", 7, *_E7_D6A1,
    break_list=[(("D", 6, L), (("A", 5, L),), 1)],
    fiber_type="I", description="e7 > so(12)+su(2) > u(6)+su(2)",
)
_simple_exceptional(
    "cpe73", "E", 7, *_E7_D6A1,
    break_list=[(("D", 6, L), (("A", 5, L),), 1), (("A", 1, L), (), 1)],
    fiber_type="II", description="e7 > so(12)+su(2) > u(6)+R",
)
_param_exceptional(
    "cpe74", "E", 7, *_E7_D6A1,
    break_map={
        2: [(("D", 6, L), (("D", 5, L),), 1)],
        4: [(("D", 6, L), (("A", 1, L), ("A", 1, L), ("D", 4, L)), 0)],
        6: [(("D", 6, L), (("A", 3, L), ("A", 3, L)), 0)],
    },
    fiber_type="I", description="e7 > so(12)+su(2) > so(p)+so(12-p)+su(2)",
    valid_p={2, 4, 6}, four_symmetric=lambda p: {2: False, 4: False}.get(p),
)
_param_exceptional(
    "cpe75", "E", 7, *_E7_D6A1,
    break_map={
        2: [(("D", 6, L), (("D", 5, L),), 1), (("A", 1, L), (), 1)],
        4: [(("D", 6, L), (("A", 1, L), ("A", 1, L), ("D", 4, L)), 0), (("A", 1, L), (), 1)],
        6: [(("D", 6, L), (("A", 3, L), ("A", 3, L)), 0), (("A", 1, L), (), 1)],
    },
    fiber_type="II", description="e7 > so(12)+su(2) > so(p)+so(12-p)+R",
    valid_p={2, 4, 6}, four_symmetric=lambda p: p in (2, 6),
)
_simple_exceptional(
    "cpe76", "E", 7, *_E7_E6R,
    break_list=[(("E", 6, L), (("D", 5, L),), 1)],
    fiber_type="I", description="e7 > e6+R > so(10)+R+R",
)
_simple_exceptional(
    "cpe77", "E", 7, *_E7_E6R,
    break_list=[(("E", 6, L), (("A", 5, L), ("A", 1, L)), 0)],
    fiber_type="I", description="e7 > e6+R > su(6)+su(2)+R",
)
_param_exceptional(
    "cpe78", "E", 7, *_E7_A7,
    break_map={
        1: [(("A", 7, L), (("A", 6, L),), 1)],
        2: [(("A", 7, L), (("A", 1, L), ("A", 5, L)), 1)],
        3: [(("A", 7, L), (("A", 2, L), ("A", 4, L)), 1)],
        4: [(("A", 7, L), (("A", 3, L), ("A", 3, L)), 1)],
    },
    fiber_type="I", description="e7 > su(8) > su(p)+su(8-p)+R",
    valid_p={1, 2, 3, 4}, four_symmetric=lambda p: {1: False}.get(p),
)

# -- E6 ---------------------------------------------------------------------

_E6_D5R = ((("D", 5, L),), 1)
_E6_A5A1 = ((("A", 5, L), ("A", 1, L)), 0)

_simple_exceptional(
    "cpe61", "E", 6, *_E6_D5R,
    break_list=[(("D", 5, L), (("A", 4, L),), 1)],
    fiber_type="I", description="e6 > so(10)+R > u(5)+R",
)
_param_exceptional(
    "cpe62", "E", 6, *_E6_D5R,
    break_map={
        2: [(("D", 5, L), (("D", 4, L),), 1)],
        4: [(("D", 5, L), (("A", 1, L), ("A", 1, L), ("A", 3, L)), 0)],
    },
    fiber_type="I", description="e6 > so(10)+R > so(p)+so(10-p)+R+R",
    valid_p={2, 4}, four_symmetric=lambda p: {2: True}.get(p),
)
_simple_exceptional(
    "cpe63", "E", 6, *_E6_A5A1,
    break_list=[(("A", 1, L), (), 1)],
    fiber_type="I", description="e6 > su(6)+su(2) > su(6)+R", four_symmetric=True,
)
_param_exceptional(
    "cpe64", "E", 6, *_E6_A5A1,
    break_map={
        1: [(("A", 5, L), (("A", 4, L),), 1)],
        2: [(("A", 5, L), (("A", 1, L), ("A", 3, L)), 1)],
        3: [(("A", 5, L), (("A", 2, L), ("A", 2, L)), 1)],
    },
    fiber_type="I", description="e6 > su(6)+su(2) > su(p)+su(6-p)+R+su(2)",
    valid_p={1, 2, 3}, four_symmetric=lambda p: True if p == 1 else None,
)
_param_exceptional(
    "cpe65", "E", 6, *_E6_A5A1,
    break_map={
        1: [(("A", 5, L), (("A", 4, L),), 1), (("A", 1, L), (), 1)],
        2: [(("A", 5, L), (("A", 1, L), ("A", 3, L)), 1), (("A", 1, L), (), 1)],
        3: [(("A", 5, L), (("A", 2, L), ("A", 2, L)), 1), (("A", 1, L), (), 1)],
    },
    fiber_type="II", description="e6 > su(6)+su(2) > su(p)+su(6-p)+R+R",
    valid_p={1, 2, 3}, four_symmetric=lambda p: True if p == 1 else None,
)
