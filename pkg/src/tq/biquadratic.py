"""Arithmetic of E = Q(sqrt(d1), sqrt(d2)): quadratic subfields, conductors,
ramification, and per-prime inertia/decomposition/Frobenius data inside
Gal(E/Q), identified with V4 so that

    a flips sqrt(d1),  b flips sqrt(d2),

hence chi1 = chi_{d1}, chi2 = chi_{d2}, chi1chi2 = chi_{d3} where d3 is the
squarefree kernel of d1*d2.  Everything is decided by Kronecker symbols; no
ideal factorization is needed for quadratic subfields.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .arith import is_prime, is_squarefree, kronecker_symbol, prime_factors, squarefree_kernel
from .errors import InputError
from .grouprings import (HOMREP_KEYS, V4, V4_CHARS, V4_E, GaloisChar,
                         GroupElement, group_elements)


def quad_field_disc(d: int) -> int:
    """Discriminant of Q(sqrt(d)) for squarefree d != 1."""
    return d if d % 4 == 1 else 4 * d


@dataclass(frozen=True)
class FieldData:
    d1: int
    d2: int
    d3: int
    totally_real: bool

    @property
    def subfields(self) -> tuple[int, int, int]:
        return (self.d1, self.d2, self.d3)

    @property
    def subfield_discs(self) -> dict[int, int]:
        return {d: quad_field_disc(d) for d in self.subfields}

    @property
    def char_to_subfield(self) -> dict[str, int]:
        return {"chi1": self.d1, "chi2": self.d2, "chi1chi2": self.d3}

    def subfield_of(self, chi: GaloisChar | str) -> int:
        label = chi if isinstance(chi, str) else chi.label
        try:
            return self.char_to_subfield[label]
        except KeyError:
            raise InputError("the trivial character fixes no quadratic subfield")

    def to_json_dict(self) -> dict:
        return {"d1": self.d1, "d2": self.d2, "d3": self.d3,
                "totally_real": self.totally_real,
                "subfield_discs": {str(d): quad_field_disc(d) for d in self.subfields}}


def field_data(d1: int, d2: int, allow_imaginary: bool = False) -> FieldData:
    for d in (d1, d2):
        if d == 0 or d == 1 or not is_squarefree(d):
            raise InputError(f"{d} is not a squarefree integer != 1")
    if d1 == d2:
        raise InputError("d1 and d2 must define distinct quadratic fields")
    if (d1 < 0 or d2 < 0) and not allow_imaginary:
        raise InputError("negative d makes E imaginary; pass allow_imaginary "
                         "to compute outside the totally real default")
    d3 = squarefree_kernel(d1 * d2)
    if d3 in (d1, d2) or d3 == 1:
        raise InputError(f"degenerate pair: third subfield collapses (d3={d3})")
    return FieldData(d1, d2, d3, totally_real=(d1 > 0 and d2 > 0))


@dataclass(frozen=True)
class PrimeLocalData:
    """Inertia and decomposition subgroups of V4 at p, a Frobenius
    representative, and (when the decomposition group is everything) the
    canonical inertia generator a_p and Frobenius lift b_p."""

    p: int
    in_s: bool
    inertia: frozenset[GroupElement]
    decomposition: frozenset[GroupElement]
    frob: GroupElement
    a_p: GroupElement | None = None
    b_p: GroupElement | None = None

    @property
    def full_decomposition(self) -> bool:
        return len(self.decomposition) == 4

    def to_json_dict(self) -> dict:
        from .grouprings import element_name
        return {
            "p": self.p,
            "in_s": self.in_s,
            "inertia": sorted(element_name(g) for g in self.inertia),
            "decomposition": sorted(element_name(g) for g in self.decomposition),
            "frobenius": element_name(self.frob),
            "a_p": element_name(self.a_p) if self.a_p else None,
            "b_p": element_name(self.b_p) if self.b_p else None,
        }


def _char_of_subfield(f: FieldData, d: int) -> GaloisChar:
    for label, sub in f.char_to_subfield.items():
        if sub == d:
            return next(c for c in V4_CHARS if c.label == label)
    raise AssertionError(d)


def _kernel(chi: GaloisChar) -> frozenset[GroupElement]:
    return frozenset(g for g in group_elements(V4) if chi(g) == 1)


def _splits_at_2(d: int) -> bool:
    return d % 8 == 1


def _frobenius_signs(f: FieldData, p: int) -> dict[str, int]:
    """chi_d(Frob_p) for the three quadratic characters, p unramified."""
    signs = {}
    for label, d in f.char_to_subfield.items():
        if p == 2:
            signs[label] = 1 if _splits_at_2(d) else -1
        else:
            signs[label] = kronecker_symbol(quad_field_disc(d), p)
    return signs


def _element_with_signs(signs: Mapping[str, int]) -> GroupElement:
    for g in group_elements(V4):
        if all(next(c for c in V4_CHARS if c.label == lbl)(g) == s
               for lbl, s in signs.items()):
            return g
    raise AssertionError(signs)


def local_galois(f: FieldData, p: int) -> PrimeLocalData:
    """Inertia, decomposition and Frobenius at p, read off from the
    splitting behavior of p in the three quadratic subfields."""
    if p < 2 or not is_prime(p):
        raise InputError(f"{p} is not prime")
    if p == 2:
        ramified = [d for d in f.subfields if quad_field_disc(d) % 2 == 0]
    else:
        ramified = [d for d in f.subfields if d % p == 0]
    if not ramified:
        signs = _frobenius_signs(f, p)
        frob = _element_with_signs(signs)
        dec = frozenset({V4_E, frob})
        return PrimeLocalData(p, in_s=False, inertia=frozenset({V4_E}),
                              decomposition=dec, frob=frob)
    unramified = [d for d in f.subfields if d not in ramified]
    if not unramified:
        # only possible at p = 2: all three subfields ramify
        full = frozenset(group_elements(V4))
        return PrimeLocalData(p, in_s=True, inertia=full, decomposition=full,
                              frob=V4_E)
    d_u = unramified[0]
    chi_u = _char_of_subfield(f, d_u)
    inertia = _kernel(chi_u)
    if p == 2:
        sym = 1 if _splits_at_2(d_u) else -1
    else:
        sym = kronecker_symbol(quad_field_disc(d_u), p)
    if sym == 1:
        return PrimeLocalData(p, in_s=True, inertia=inertia,
                              decomposition=inertia, frob=V4_E)
    frob = next(g for g in group_elements(V4) if g not in inertia)
    a_p = next(g for g in inertia if g != V4_E)
    return PrimeLocalData(p, in_s=True, inertia=inertia,
                          decomposition=frozenset(group_elements(V4)),
                          frob=frob, a_p=a_p, b_p=frob)


def ramified_set(f: FieldData) -> list[int]:
    """Rational primes dividing the discriminant of E (minimal admissible
    set of finite places)."""
    primes = set(prime_factors(f.d1 * f.d2))
    if any(quad_field_disc(d) % 2 == 0 for d in f.subfields):
        primes.add(2)
    return sorted(primes)


def euler_factor(chi: GaloisChar, p: int, local: PrimeLocalData) -> Fraction:
    """det(1 - p^-1 Frob^-1 | chi^I): one when chi is nontrivial on
    inertia, else 1 - chi(Frob)/p."""
    if any(chi(g) != 1 for g in local.inertia):
        return Fraction(1)
    return 1 - Fraction(chi(local.frob), p)


def frob_det_quotient(chi: GaloisChar, local: PrimeLocalData) -> Fraction:
    """det(1 - Frob^-1 | chi^I / chi^D)."""
    dim_i = 1 if all(chi(g) == 1 for g in local.inertia) else 0
    dim_d = 1 if all(chi(g) == 1 for g in local.decomposition) else 0
    if dim_i - dim_d == 1:
        return 1 - Fraction(chi(local.frob))
    return Fraction(1)


def artin_conductor(chi: GaloisChar | str, f: FieldData) -> int:
    """1 for the trivial character, else the absolute discriminant of the
    quadratic subfield cut out by chi."""
    label = chi if isinstance(chi, str) else chi.label
    if label == "1":
        return 1
    return abs(quad_field_disc(f.subfield_of(label)))
