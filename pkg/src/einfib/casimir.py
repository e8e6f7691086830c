"""Casimir eigenvalues on root vectors via root strings.

All eigenvalues are exact rationals in the Killing normalization.  For a
subset S of roots (symmetric under negation) and a root phi, the Casimir
operator of the subspace spanned by the E_alpha, alpha in S, acts on E_phi
with eigenvalue (1/2) * sum_{alpha in S+} d_{alpha,phi} |alpha|^2, where
d = q - p - 2pq comes from the alpha-string through phi and the alpha = ±phi
pair contributes |alpha|^2 exactly (d = 2).  Operators that include the full
Cartan subalgebra (C_k for maximal-rank k, C_g) pick up an extra |phi|^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .roots import Coord, RootSystem, SimpleType, dual_coxeter, _add, _dot, _neg, _positivity_key
from .subalgebra import Ideal, TripleDecomposition, module_components


def _pos_pairs(system: RootSystem, subset):
    """Per ±pair of `subset`: [(root, packed encoding, squared length)]
    together with the sum sigma of the chosen representatives."""
    pairs = [
        (a, system.encode(a), _dot(a, a)) for a in subset if _positivity_key(a) > 0
    ]
    sigma = tuple(sum(col) for col in zip(*(a for a, _, _ in pairs)))
    return pairs, sigma


def _string_sum_raw(system: RootSystem, pos_data, phi: Coord) -> int:
    """Integer sum of d_{alpha,phi} * <alpha,alpha> over one root per ±pair;
    multiply by killing_scale/2 for the Casimir string sum.

    Hot loop of every eigenvalue sweep, so it works in the packed-integer
    root encoding and uses d = c + 2q(1 + c + q) (c the Cartan integer
    2(phi,alpha)/(alpha,alpha), q the up-string length): the c-terms sum to
    2(phi, sigma) in closed form, and the remainder only touches the pairs
    with phi + alpha a root.  The lone exception alpha = -phi (d = 2 but
    c = -2, q = 0) is patched explicitly; alpha = +phi needs none (c = 2,
    q = 0 already gives d = 2)."""
    pairs, sigma = pos_data
    enc = system._enc_set
    zero = system._enc_zero
    pe = system.encode(phi)
    mirror = 2 * zero - pe  # encoding of -phi
    total = 2 * _dot(phi, sigma)
    for alpha, ae, aa in pairs:
        if ae == mirror:
            total += 4 * aa
            continue
        step = ae - zero
        cur = pe + step
        if cur not in enc:
            continue
        q = 1
        cur += step
        while cur in enc:
            q += 1
            cur += step
        c = 2 * _dot(phi, alpha) // aa
        total += 2 * q * (1 + c + q) * aa
    return total


def string_sum(system: RootSystem, subset, phi: Coord) -> Fraction:
    """(1/2) sum over one root per ±pair of `subset` of d_{alpha,phi}|alpha|^2."""
    return system.killing_scale * _string_sum_raw(system, _pos_pairs(system, subset), phi) / 2


def b_eigenvalue(system: RootSystem, pa_roots, phi: Coord) -> Fraction:
    """Eigenvalue of the Casimir operator of the vertical part p_a on E_phi,
    phi horizontal (phi not in ±p_a)."""
    if phi in pa_roots:
        raise ValueError("phi must be horizontal")
    return string_sum(system, pa_roots, phi)


def c_k_on_n(system: RootSystem, k_roots, phi: Coord) -> Fraction:
    """Eigenvalue of C_k (k of maximal rank, so containing the Cartan) on a
    horizontal root vector E_phi."""
    if phi in k_roots:
        raise ValueError("phi must lie outside k")
    return system.norm_sq(phi) + string_sum(system, k_roots, phi)


def gamma_rootsum(system: RootSystem, k_roots, phi: Coord) -> Fraction:
    """Eigenvalue of C_k on E_phi for phi a root of k (direct root-string oracle)."""
    if phi not in k_roots:
        raise ValueError("phi must be a root of k")
    return system.norm_sq(phi) + string_sum(system, k_roots, phi)


def casimir_identity(system: RootSystem, phi: Coord) -> Fraction:
    """Eigenvalue of the whole-algebra Casimir on E_phi; equals 1 identically."""
    return gamma_rootsum(system, system.roots, phi)


def length_ratio_delta(system: RootSystem, ideal: Ideal) -> Fraction:
    """delta_a: squared length of a long root of g over that of a long root of
    the ideal k_a, both measured in g."""
    g_long = system.norm_sq(system.highest_root)
    return g_long / ideal.long_norm_sq


def gamma_panyushev(system: RootSystem, ideal: Ideal) -> Fraction:
    """Eigenvalue of C_k on the ideal k_a: h*(k_a) / (delta_a h*(g))."""
    delta = length_ratio_delta(system, ideal)
    return Fraction(dual_coxeter(ideal.simple_type)) / (delta * dual_coxeter(system.simple_type))


@dataclass(frozen=True)
class CasimirReport:
    """All Casimir eigenvalues entering the Einstein equations of a triple.

    gammas[a]      eigenvalue of C_k on the broken ideal k_a
    b_values[a]    per-n-component eigenvalues of C_{p_a} on n (tuple over
                   the Ad L-components of n, in a fixed canonical order)
    c_kn           eigenvalue of C_k on n (constant; 1/2 for symmetric bases)
    r              (1/2)(1/2 + c_kn)
    """

    gammas: tuple[Fraction, ...]
    deltas: tuple[Fraction, ...]
    b_values: tuple[tuple[Fraction, ...], ...]
    c_kn: Fraction
    r: Fraction

    @property
    def s(self) -> int:
        return len(self.gammas)

    def b_distinct(self, a: int) -> tuple[Fraction, ...]:
        return tuple(sorted(set(self.b_values[a])))

    def b_scalar(self, a: int) -> bool:
        return len(set(self.b_values[a])) == 1


# reports are pure functions of the (immutable) decomposition; keeping the
# decomposition in the value pins its id, so the key stays valid
_REPORT_CACHE: dict = {}


def casimir_report(decomp: TripleDecomposition) -> CasimirReport:
    cached = _REPORT_CACHE.get(id(decomp))
    if cached is not None:
        return cached[1]
    report = _casimir_report(decomp)
    _REPORT_CACHE[id(decomp)] = (decomp, report)
    return report


def _casimir_report(decomp: TripleDecomposition) -> CasimirReport:
    sys = decomp.system
    gammas = []
    deltas = []
    for group in decomp.broken_ideals:
        # a broken factor may consist of several simple k-ideals (e.g. an
        # so(4) factor); C_k must have a single eigenvalue across the group
        per_ideal = {(gamma_panyushev(sys, i), length_ratio_delta(sys, i)) for i in group}
        if len(per_ideal) != 1:
            raise AssertionError(f"C_k not scalar on grouped factor {group}")
        gamma, delta = per_ideal.pop()
        gammas.append(gamma)
        deltas.append(delta)
        # cross-check against the direct root-sum oracle on one root per ideal
        for ideal in group:
            phi = next(iter(ideal.roots))
            direct = gamma_rootsum(sys, decomp.k.roots, phi)
            if direct != gamma:
                raise AssertionError(
                    f"gamma oracle mismatch on {ideal.simple_type}: "
                    f"panyushev {gamma} vs rootsum {direct}"
                )
    comps = decomp.n_components()
    half_scale = sys.killing_scale / 2
    b_values = []
    for part in decomp.p_parts:
        pairs = _pos_pairs(sys, part)
        per_comp = []
        for comp in comps:
            vals = {_string_sum_raw(sys, pairs, phi) for phi in comp}
            if len(vals) != 1:
                raise AssertionError("b eigenvalue not constant on a component")
            per_comp.append(half_scale * vals.pop())
        b_values.append(tuple(per_comp))
    k_pairs = _pos_pairs(sys, decomp.k.roots)
    ckn_vals = {
        (2 * _dot(phi, phi) + _string_sum_raw(sys, k_pairs, phi))
        for phi in decomp.n_roots
    }
    if len(ckn_vals) != 1:
        raise AssertionError("C_k not scalar on n")
    c_kn = half_scale * ckn_vals.pop()
    r = Fraction(1, 2) * (Fraction(1, 2) + c_kn)
    return CasimirReport(tuple(gammas), tuple(deltas), tuple(b_values), c_kn, r)


def scalarity_test(report: CasimirReport) -> str:
    """Can lambda_1 C_{p_1} + ... + lambda_s C_{p_s} be scalar on n with all
    lambda_a > 0?  Returns 'scalar-each', 'jointly-scalar-only', or 'fails'.

    'scalar-each' means every C_{p_a} is individually scalar on n (the only
    situation occurring in the catalog; the joint test covers s = 2)."""
    if all(report.b_scalar(a) for a in range(report.s)):
        return "scalar-each"
    if report.s == 1:
        return "fails"
    if report.s != 2:
        raise ValueError("joint scalarity implemented for s <= 2 only")
    b1, b2 = report.b_values
    diffs = [(b1[j] - b1[0], b2[j] - b2[0]) for j in range(1, len(b1))]
    diffs = [d for d in diffs if d != (0, 0)]
    # need lambda > 0 with lambda.d = 0 for all d: all diffs parallel, with
    # the two coordinates of opposite signs
    d0 = diffs[0]
    if any(a * d0[1] != b * d0[0] for a, b in diffs):
        return "fails"
    if d0[0] != 0 and d0[1] != 0 and (d0[0] > 0) != (d0[1] > 0):
        return "jointly-scalar-only"
    return "fails"
