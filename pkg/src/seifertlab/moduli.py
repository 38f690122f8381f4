"""Critical-locus combinatorics for the stable SL(2,C) character variety.

For a Seifert-fibered integral homology sphere Y over C = S^2(alpha_1..n),
the non-minimal part of the critical locus is a disjoint union of complex
projective spaces CP^e, one for each lattice vector (e; beta_1..beta_n) of
non-negative integers with beta_i < alpha_i and orbifold degree < -chi(C).
Each such component carries:

  * a Morse-Bott index 2*m, where m = h^0(L^(-1) K^2) for the divisor bundle
    L determined by the vector; equivalently (and computed independently)

        m = -chi(C) - deg(e;beta) - 1 + sum_i {(beta_i + 1)/alpha_i}

    with {x} the fractional part, an exact non-negative integer;
  * an ambient component of complex dimension 2*(e + m);
  * a label (l0_power, k) with k in {0,1} expressing the divisor bundle as
    L0^(-2) N^k K for L0 = N^l0_power.

Summing T^(2m) * P_T(CP^e) over the vectors gives the excess of the SL(2,C)
Poincare polynomial over the SU(2) one; the hat-normalized variant shifts
each CP^e summand by T^(-2e) instead.  The SU(2) summand itself is an opaque
optional input, but its Euler characteristic is always -2 * casson.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConsistencyError
from .exact import LaurentPoly, cp_poincare, euler_eval, frac_part, hat_normalize
from .orbifold import (
    LineBundleData,
    Orbifold,
    canonical_bundle,
    dual,
    h0,
    normalize,
    orbifold_euler_char,
    power,
    tensor,
)
from .seifert import SeifertData, bundle_log, n_bundle, validate_homology_sphere

__all__ = [
    "EVector",
    "ZComponent",
    "ModuliReport",
    "AssembledPoly",
    "enumerate_e_vectors",
    "exponent_closed_form",
    "exponent_via_bundles",
    "solve_L0_k",
    "z_decomposition",
    "excess_poincare",
    "sl2c_euler",
    "sl2c_poincare",
    "hp_poincare",
    "moduli_report",
]


@dataclass(frozen=True)
class EVector:
    """Lattice vector (e; beta_1..beta_n) with its exact orbifold degree."""

    e: int
    betas: tuple[int, ...]
    degree: Fraction

    def as_tuple(self) -> tuple[int, ...]:
        return (self.e,) + self.betas


@dataclass(frozen=True)
class ZComponent:
    """One connected piece of the critical locus.

    Either the SU(2) locus (kind "su2", index 0) or a CP^e divisor component
    (kind "cpe") carrying its Morse-Bott index, the complex dimension of the
    ambient moduli component, the divisor bundle, and the (l0_power, k) label.
    """

    kind: str
    vector: EVector | None = None
    morse_index: int = 0
    ambient_dim_c: int | None = None
    divisor_bundle: LineBundleData | None = None
    l0_power: int | None = None
    parity_k: int | None = None

    def as_dict(self) -> dict:
        if self.kind == "su2":
            return {"kind": "su2"}
        return {
            "kind": "cpe",
            "e": self.vector.e,
            "vector": list(self.vector.betas),
            "morse_index": self.morse_index,
            "ambient_dim_c": self.ambient_dim_c,
            "l0_power": self.l0_power,
            "k": self.parity_k,
        }


def enumerate_e_vectors(C: Orbifold) -> list[EVector]:
    """All vectors (e; beta) with e >= 0, 0 <= beta_i < alpha_i, deg < -chi(C).

    The bound -chi(C) makes the set finite (possibly empty).  The scan runs
    in integers scaled by A = prod alpha_i, pruning each residue slot as soon
    as the partial degree hits the bound.  Output is sorted by degree, then
    lexicographically by (e, beta_1, ..., beta_n).
    """
    alphas = C.alphas
    A = 1
    for a in alphas:
        A *= a
    cofactors = [A // a for a in alphas]
    # limit = -chi(C) * A as an exact integer
    limit = (C.n - 2) * A - sum(cofactors)
    found: list[EVector] = []
    if limit <= 0:
        return found

    def scan(i: int, acc: int, betas: list[int]):
        if i == C.n:
            found.append(
                EVector(e=betas[0], betas=tuple(betas[1:]), degree=Fraction(acc, A))
            )
            return
        step = cofactors[i]
        for beta in range(alphas[i]):
            nxt = acc + beta * step
            if nxt >= limit:
                break
            scan(i + 1, nxt, betas + [beta])

    e = 0
    while e * A < limit:
        scan(0, e * A, [e])
        e += 1
    found.sort(key=lambda v: (v.degree, v.as_tuple()))
    return found


def _check_enumerated(C: Orbifold, v: EVector) -> None:
    if v.e < 0 or len(v.betas) != C.n:
        raise ValueError(f"vector {v.as_tuple()} malformed for this orbifold")
    if any(not 0 <= b < a for b, a in zip(v.betas, C.alphas)):
        raise ValueError(f"vector {v.as_tuple()} has residues out of range")
    if v.degree >= -orbifold_euler_char(C):
        raise ValueError(f"vector {v.as_tuple()} violates the degree bound")


def exponent_closed_form(C: Orbifold, v: EVector) -> int:
    """Morse-Bott half-index from the closed formula (exact rational arithmetic).

    Computes -chi(C) - deg(v) - 1 + sum_i {(beta_i + 1)/alpha_i} and checks
    that the result is a non-negative integer; failure of integrality would
    mean corrupted input or a bug, never a property of valid data.
    """
    _check_enumerated(C, v)
    value = -orbifold_euler_char(C) - v.degree - 1
    for b, a in zip(v.betas, C.alphas):
        value += frac_part(Fraction(b + 1, a))
    if value.denominator != 1 or value < 0:
        raise ConsistencyError(
            f"exponent {value} for vector {v.as_tuple()} is not a non-negative integer"
        )
    return int(value)


def exponent_via_bundles(C: Orbifold, v: EVector) -> int:
    """Morse-Bott half-index as the section count h^0(L^(-1) K^2).

    Pure bundle arithmetic on the divisor bundle L of the vector; independent
    of :func:`exponent_closed_form`, which it must equal.
    """
    _check_enumerated(C, v)
    L = normalize(v.e, v.betas, C)
    K = canonical_bundle(C)
    return h0(tensor(dual(L), tensor(K, K)))


def solve_L0_k(L: LineBundleData, S: SeifertData) -> tuple[int, int]:
    """Express a divisor bundle as L0^(-2) N^k K with L0 = N^m0 and k in {0,1}.

    With m_L = bundle_log(L) and m_K = bundle_log(K) the parity equation
    -2*m0 + k + m_K = m_L forces k = (m_L - m_K) mod 2 and
    m0 = (k + m_K - m_L)/2.  The postcondition is re-checked on bundle data.
    """
    C = L.orbifold
    K = canonical_bundle(C)
    m_L = bundle_log(L, S)
    m_K = bundle_log(K, S)
    k = (m_L - m_K) % 2
    m0 = (k + m_K - m_L) // 2
    N = n_bundle(S)
    rebuilt = tensor(tensor(power(power(N, m0), -2), power(N, k)), K)
    if rebuilt != L:
        raise ConsistencyError(
            f"(l0_power={m0}, k={k}) fails to rebuild bundle {L.as_dict()}"
        )
    return m0, k


def _require_homology_sphere(S: SeifertData) -> None:
    check = validate_homology_sphere(S)
    if not check.ok:
        raise ValueError(
            f"not an integral homology sphere: A*e(Y) = {check.a_times_e}"
        )


def z_decomposition(S: SeifertData) -> list[ZComponent]:
    """The critical locus: one SU(2) piece plus one CP^e piece per vector.

    Every CP^e piece carries the Morse-Bott index computed by both exponent
    routes (which must agree) and the ambient complex dimension 2*(e + m),
    re-derived independently as 2*(h^0(L0^(-2) N^k K) + h^0(L0^2 N^(-k) K) - 1).
    """
    _require_homology_sphere(S)
    C = S.orbifold
    N = n_bundle(S)
    K = canonical_bundle(C)
    components = [ZComponent(kind="su2", morse_index=0)]
    for v in enumerate_e_vectors(C):
        m_closed = exponent_closed_form(C, v)
        m_bundle = exponent_via_bundles(C, v)
        if m_closed != m_bundle:
            raise ConsistencyError(
                f"exponent routes disagree on {v.as_tuple()}: "
                f"closed form {m_closed}, bundle route {m_bundle}"
            )
        L = normalize(v.e, v.betas, C)
        m0, k = solve_L0_k(L, S)
        ambient = 2 * (v.e + m_closed)
        L0 = power(N, m0)
        via_dims = 2 * (
            h0(tensor(tensor(power(L0, -2), power(N, k)), K))
            + h0(tensor(tensor(power(L0, 2), power(N, -k)), K))
            - 1
        )
        if ambient != via_dims:
            raise ConsistencyError(
                f"ambient dimension mismatch on {v.as_tuple()}: {ambient} vs {via_dims}"
            )
        components.append(
            ZComponent(
                kind="cpe",
                vector=v,
                morse_index=2 * m_closed,
                ambient_dim_c=ambient,
                divisor_bundle=L,
                l0_power=m0,
                parity_k=k,
            )
        )
    return components


def excess_poincare(S: SeifertData) -> LaurentPoly:
    """Sum over vectors of T^(2m) * P_T(CP^e): the non-SU(2) Poincare summand."""
    _require_homology_sphere(S)
    C = S.orbifold
    total = LaurentPoly.zero()
    for v in enumerate_e_vectors(C):
        m = exponent_closed_form(C, v)
        total = total + cp_poincare(v.e).shift(2 * m)
    return total


def sl2c_euler(S: SeifertData, casson: int) -> int:
    """chi of the stable SL(2,C) character variety: -2*casson + excess Euler."""
    return -2 * casson + euler_eval(excess_poincare(S))


@dataclass(frozen=True)
class AssembledPoly:
    """A polynomial that may still be missing its external SU(2) summand."""

    poly: LaurentPoly
    partial: bool

    @property
    def note(self) -> str | None:
        return "partial - SU(2) summand external" if self.partial else None


def sl2c_poincare(S: SeifertData, su2_poly: LaurentPoly | None = None) -> AssembledPoly:
    """SU(2) summand plus excess when the former is supplied; excess alone otherwise.

    The SU(2) Poincare polynomial is external input here (only its Euler
    characteristic is derivable, via the Casson invariant).
    """
    excess = excess_poincare(S)
    if su2_poly is None:
        return AssembledPoly(poly=excess, partial=True)
    return AssembledPoly(poly=su2_poly + excess, partial=False)


def hp_poincare(S: SeifertData, su2_hat_poly: LaurentPoly | None = None) -> AssembledPoly:
    """Hat-normalized assembly: each CP^e enters as T^(-2e) * P_T(CP^e).

    The shift by the real dimension 2e makes every summand evaluate to
    chi(CP^e) = e + 1 at T = 1, so the total at T = 1 equals the SL(2,C)
    Euler characteristic whenever the supplied SU(2) part does its share.
    """
    _require_homology_sphere(S)
    C = S.orbifold
    total = LaurentPoly.zero()
    for v in enumerate_e_vectors(C):
        total = total + hat_normalize(cp_poincare(v.e), 2 * v.e)
    if su2_hat_poly is None:
        return AssembledPoly(poly=total, partial=True)
    return AssembledPoly(poly=su2_hat_poly + total, partial=False)


@dataclass(frozen=True)
class ModuliReport:
    """Assembled moduli-side quantities for one fibration."""

    z_components: tuple[ZComponent, ...]
    excess_poincare: LaurentPoly
    pg: int
    hp_excess: LaurentPoly
    euler_sl2c: int | None

    def __post_init__(self):
        if euler_eval(self.excess_poincare) != self.pg:
            raise ConsistencyError("excess Euler characteristic disagrees with pg")


def moduli_report(S: SeifertData, casson: int | None = None) -> ModuliReport:
    """Bundle the decomposition, polynomials, and (if casson is known) chi."""
    components = z_decomposition(S)
    excess = excess_poincare(S)
    hp = hp_poincare(S)
    return ModuliReport(
        z_components=tuple(components),
        excess_poincare=excess,
        pg=euler_eval(excess),
        hp_excess=hp.poly,
        euler_sl2c=None if casson is None else sl2c_euler(S, casson),
    )
