"""The explicit three-term free complex attached to an odd prime p whose
decomposition group is all of V4 (so inertia has order two and the residue
extension is quadratic), its valuation trivialization, and the two routes
to the local class: the generic determinant pipeline and the closed
formula.  The two routes agree in (Z/4)* but not as rationals; only the
mod-4 agreement is asserted anywhere."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import is_prime
from .errors import ContractViolationError, InputError
from .grouprings import (V4, V4_CHARS, V4_E, GaloisChar, GroupElement,
                         GroupRingElem, GroupRingMatrix, apply_char)
from .perfectcomplex import (CohomologyIso, CohomologyIsoComponent,
                             PerfectComplex, char_specialize, class_representative,
                             cohomology_basis)
from .relk0 import HomRep

# generators live in degrees -2 (w), -1 (z1, z2), 0 (t)
DEGREES = (-2, 0)


@dataclass(frozen=True)
class TameComplexSpec:
    """Input data for the local complex at an odd prime: the inertia
    generator a and a Frobenius lift b, two distinct nontrivial elements
    of V4."""

    p: int
    a: GroupElement
    b: GroupElement

    def __post_init__(self):
        if self.p < 3 or self.p % 2 == 0 or not is_prime(self.p):
            raise InputError(f"{self.p} is not an odd prime")
        if self.a.group != V4 or self.b.group != V4:
            raise InputError("generators must be V4 elements")
        if self.a == V4_E:
            raise InputError("inertia generator must be nontrivial")
        if self.b in (V4_E, self.a):
            raise InputError("Frobenius lift must lie outside {e, a}")


@dataclass(frozen=True)
class LatticeExponent:
    """The free integer parameter m >= 1 scaling the sublattice, and the
    sign ambiguity of the residue-correction exponent."""

    m: int = 1
    sign: int = 1

    def __post_init__(self):
        if self.m < 1:
            raise InputError("lattice exponent m must be >= 1")
        if self.sign not in (1, -1):
            raise InputError("sign must be +1 or -1")


def inertia_unit(spec: TameComplexSpec) -> GroupRingElem:
    """(p+1)/2 + ((p-1)/2) a, the group-ring element realizing the residue
    field as a quotient."""
    p = spec.p
    return GroupRingElem(V4, {V4_E: Fraction(p + 1, 2), spec.a: Fraction(p - 1, 2)})


def build_tame_complex(spec: TameComplexSpec) -> PerfectComplex:
    """Degrees -2, -1, 0 with ranks 1, 2, 1: first differential
    w |-> (b((p+1)/2 + ((p-1)/2)a) - 1) z1 - (a - 1) z2, second the negated
    map z1 |-> (a-1)t, z2 |-> (b-1)t."""
    a = GroupRingElem.of(spec.a)
    b = GroupRingElem.of(spec.b)
    one = GroupRingElem.one(V4)
    lam = GroupRingMatrix.from_rows(V4, [[b * inertia_unit(spec) - one,
                                          -(a - one)]])
    minus_phi = GroupRingMatrix.from_rows(V4, [[-(a - one)], [-(b - one)]])
    return PerfectComplex(V4, DEGREES, {-2: 1, -1: 2, 0: 1},
                          {-2: lam, -1: minus_phi})


def torsion_cycle(spec: TameComplexSpec, chi: GaloisChar) -> list[Fraction]:
    """Character specialization of T = (1+b) z2 - (1+a) z1, the cocycle
    whose class generates the odd cohomology at the trivial character."""
    return [-(1 + Fraction(chi(spec.a))), 1 + Fraction(chi(spec.b))]


def valuation_iso(spec: TameComplexSpec,
                  complex_: PerfectComplex | None = None) -> CohomologyIso:
    """The normalized valuation trivialization: at the trivial character it
    sends the class of T to the augmentation class of t with matrix (1);
    at nontrivial characters the cohomology vanishes and the iso is 0x0."""
    p_complex = complex_ if complex_ is not None else build_tame_complex(spec)
    components = {}
    for chi in V4_CHARS:
        data = cohomology_basis(char_specialize(p_complex, chi))
        dims = (data.h_dim(-2), data.h_dim(-1), data.h_dim(0))
        if chi.is_trivial():
            if dims != (0, 1, 1):
                raise ContractViolationError(
                    f"cohomology dimensions {dims} at the trivial character; "
                    "expected (0, 1, 1) -- differential bug")
            components[chi.label] = CohomologyIsoComponent(
                odd_reps={-1: [torsion_cycle(spec, chi)]},
                even_reps={0: [[Fraction(1)]]},
                matrix=[[Fraction(1)]])
        else:
            if dims != (0, 0, 0):
                raise ContractViolationError(
                    f"cohomology dimensions {dims} at {chi.label}; expected "
                    "all zero -- differential bug")
            components[chi.label] = CohomologyIsoComponent({}, {}, [])
    return CohomologyIso(components, "odd_to_even")


def residue_class(p: int, a: GroupElement) -> HomRep:
    """The class of the residue quadratic extension as a function on
    characters: p where chi(a) = 1, else 1."""
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise InputError(f"{p} is not an odd prime")
    return HomRep.from_char_function(
        lambda chi: Fraction(p) if chi(a) == 1 else Fraction(1))


@dataclass(frozen=True)
class ResidueResolutionReport:
    """Witness report for the two-term free resolution of the residue
    field by multiplication with (p+1)/2 + ((p-1)/2) a."""

    p: int
    multiplication_by_p: bool
    displayed_identity: bool
    char_values: bool
    char_value_list: tuple[Fraction, ...]

    @property
    def ok(self) -> bool:
        return (self.multiplication_by_p and self.displayed_identity
                and self.char_values)


def verify_residue_resolution(p: int, a: GroupElement) -> ResidueResolutionReport:
    """Check, exactly:

    (i)  x = (p+1)/2 + ((p-1)/2) a acts as multiplication by p on the
         residue-field model (a acts trivially there), so the composite of
         the resolution maps is zero mod p;
    (ii) x - a x = 1 - a in Q[V4];
    (iii) every character sends x to 1 or p, with p exactly when
          chi(a) = 1.
    """
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise InputError(f"{p} is not an odd prime")
    if a.group != V4 or a == V4_E:
        raise InputError("inertia generator must be a nontrivial V4 element")
    x = GroupRingElem(V4, {V4_E: Fraction(p + 1, 2), a: Fraction(p - 1, 2)})
    # (i) residue-field model on a normal basis (v, v-bar): inertia acts
    # trivially, everything outside inertia acts by the swap
    def model(g: GroupElement) -> list[list[Fraction]]:
        if g in (V4_E, a):
            return [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]
        return [[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]]

    acting = [[Fraction(0)] * 2 for _ in range(2)]
    for g, c in x.items():
        mg = model(g)
        for i in range(2):
            for j in range(2):
                acting[i][j] += c * mg[i][j]
    mult_by_p = acting == [[Fraction(p), Fraction(0)], [Fraction(0), Fraction(p)]]
    # (ii)
    one = GroupRingElem.one(V4)
    a_elem = GroupRingElem.of(a)
    displayed = (x - a_elem * x) == (one - a_elem)
    # (iii)
    values = tuple(apply_char(chi, x) for chi in V4_CHARS)
    chars_ok = all(
        v == (p if chi(a) == 1 else 1)
        for chi, v in zip(V4_CHARS, values))
    return ResidueResolutionReport(p, mult_by_p, displayed, chars_ok, values)


def _require_full_decomposition(p, local) -> None:
    if p % 2 == 0:
        raise InputError("local terms are computed at odd primes only")
    if len(local.decomposition) != 4 or len(local.inertia) != 2:
        raise InputError(
            f"p = {p}: local term requires full decomposition group with "
            f"order-2 inertia (got |D| = {len(local.decomposition)}, "
            f"|I| = {len(local.inertia)})")


def local_term_closed_form(p: int, local, lat: LatticeExponent) -> HomRep:
    """Closed formula for the local class at a fully decomposed odd prime:

        eps(chi) * (|G|/|I|)^(-dim chi^D) * det(1 - Frob^-1 | chi^I/chi^D)
        / ( p^(1 +- m dim chi^I) * det(1 - p^-1 Frob^-1 | chi^I) )

    with eps(chi) = (-1)^(dim(chi^I/chi^D)).
    """
    _require_full_decomposition(p, local)
    a, b = local.a_p, local.b_p
    values = {}
    for chi in V4_CHARS:
        dim_i = 1 if chi(a) == 1 else 0
        dim_d = 1 if chi.is_trivial() else 0
        dim_quot = dim_i - dim_d
        eps = -1 if dim_quot % 2 else 1
        num = Fraction(1, 2 ** dim_d)
        if dim_quot:
            num *= 1 - Fraction(chi(b))
        denom = Fraction(p) ** (1 + lat.sign * lat.m * dim_i)
        if dim_i:
            denom *= 1 - Fraction(chi(b), p)
        values[chi.label] = eps * num / denom
    return HomRep(values)


def local_term_via_complex(p: int, local, lat: LatticeExponent) -> HomRep:
    """The generic determinant pipeline on the tame complex with the
    valuation trivialization, corrected for the lattice choice by the
    residue-field power chi |-> p^(m dim chi^I +- 1)."""
    _require_full_decomposition(p, local)
    spec = TameComplexSpec(p, local.a_p, local.b_p)
    p_complex = build_tame_complex(spec)
    rep = class_representative(p_complex, valuation_iso(spec, p_complex))
    correction = HomRep.from_char_function(
        lambda chi: Fraction(p) ** (lat.m * (1 if chi(local.a_p) == 1 else 0)
                                    + lat.sign))
    return rep * correction
