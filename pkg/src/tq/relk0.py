"""Relative K-class bookkeeping for the Klein four-group via the
Hom-description: a class is represented by a function from the four
one-dimensional characters to nonzero rationals, and is classified by the
complete invariant pair (rank vector of 2-adic valuations, torsion class
in (Z/4)*)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import InputError
from .grouprings import (HOMREP_KEYS, V4, GaloisChar, GroupElement, V4_CHARS,
                         group_elements, identity)

Rational = Fraction | int


def v2(q: Fraction | int) -> int:
    """2-adic valuation of a nonzero rational."""
    q = Fraction(q)
    if q == 0:
        raise InputError("v2(0) is undefined")
    n, d = q.numerator, q.denominator
    val = 0
    while n % 2 == 0:
        n //= 2
        val += 1
    while d % 2 == 0:
        d //= 2
        val -= 1
    return val


@dataclass(frozen=True)
class TorsionClass:
    """An element of (Z/4)* = {1, 3}."""

    unit: int

    def __post_init__(self):
        if self.unit not in (1, 3):
            raise InputError(f"{self.unit} is not a unit residue of (Z/4)*")

    def __mul__(self, other: "TorsionClass") -> "TorsionClass":
        return TorsionClass((self.unit * other.unit) % 4)

    def inverse(self) -> "TorsionClass":
        # each element is its own inverse mod 4
        return self

    def is_trivial(self) -> bool:
        return self.unit == 1

    @classmethod
    def one(cls) -> "TorsionClass":
        return cls(1)


def odd_part_mod4(q: Rational) -> TorsionClass:
    """Strip all factors of 2 from q and reduce the remaining odd rational
    mod 4 (odd denominators are inverted mod 4)."""
    q = Fraction(q)
    if q == 0:
        raise InputError("odd part mod 4 of 0 is undefined")
    n, d = q.numerator, q.denominator
    while n % 2 == 0:
        n //= 2
    while d % 2 == 0:
        d //= 2
    # for odd d, the inverse of d mod 4 is d itself
    return TorsionClass((n * d) % 4)


@dataclass(frozen=True)
class RankVector:
    """Per-character 2-adic valuations."""

    exps: tuple[int, int, int, int]

    def __getitem__(self, label: str) -> int:
        return self.exps[HOMREP_KEYS.index(label)]

    def __add__(self, other: "RankVector") -> "RankVector":
        return RankVector(tuple(a + b for a, b in zip(self.exps, other.exps)))

    @classmethod
    def from_map(cls, exps: Mapping[str, int]) -> "RankVector":
        return cls(tuple(int(exps[k]) for k in HOMREP_KEYS))


class HomRep:
    """A Hom-description representative: nonzero rational value per
    character label ("1", "chi1", "chi2", "chi1chi2").  The group law is
    pointwise multiplication."""

    __slots__ = ("_values",)

    def __init__(self, values: Mapping[str, Rational] | Iterable[Rational]):
        if isinstance(values, Mapping):
            vals = tuple(Fraction(values[k]) for k in HOMREP_KEYS)
        else:
            vals = tuple(Fraction(v) for v in values)
            if len(vals) != 4:
                raise InputError("a HomRep needs exactly four values")
        if any(v == 0 for v in vals):
            raise InputError("HomRep values must be nonzero")
        self._values = vals

    def __getitem__(self, label: str) -> Fraction:
        return self._values[HOMREP_KEYS.index(label)]

    def value(self, chi: GaloisChar) -> Fraction:
        return self[chi.label]

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return self._values

    def __mul__(self, other: "HomRep") -> "HomRep":
        return HomRep(tuple(a * b for a, b in zip(self._values, other._values)))

    def inverse(self) -> "HomRep":
        return HomRep(tuple(1 / v for v in self._values))

    def __pow__(self, n: int) -> "HomRep":
        return HomRep(tuple(v ** n for v in self._values))

    def __eq__(self, other):
        if not isinstance(other, HomRep):
            return NotImplemented
        return self._values == other._values

    def __hash__(self):
        return hash(self._values)

    def __repr__(self):
        body = ", ".join(f"{k}: {v}" for k, v in zip(HOMREP_KEYS, self._values))
        return f"HomRep({body})"

    @classmethod
    def constant_one(cls) -> "HomRep":
        return cls((1, 1, 1, 1))

    @classmethod
    def from_char_function(cls, fn) -> "HomRep":
        """Build from a callable on the canonical V4 characters."""
        return cls({chi.label: fn(chi) for chi in V4_CHARS})

    def to_json_dict(self) -> dict[str, str]:
        return {k: f"{v.numerator}/{v.denominator}"
                for k, v in zip(HOMREP_KEYS, self._values)}

    @classmethod
    def from_json_dict(cls, d: Mapping[str, str]) -> "HomRep":
        return cls({k: Fraction(d[k]) for k in HOMREP_KEYS})


def rank_vector(h: HomRep) -> RankVector:
    return RankVector(tuple(v2(v) for v in h.as_tuple()))


def torsion_class(h: HomRep) -> TorsionClass:
    """Product of the four values, 2-power stripped, mod 4: the complete
    torsion invariant of the class represented by h."""
    prod = Fraction(1)
    for v in h.as_tuple():
        prod *= v
    return odd_part_mod4(prod)


def _validate_subgroup(elements: Iterable[GroupElement]) -> frozenset[GroupElement]:
    elems = frozenset(elements)
    if not elems:
        raise InputError("empty subgroup")
    group = next(iter(elems)).group
    if group != V4:
        raise InputError("subgroups of V4 expected")
    if identity(V4) not in elems:
        raise InputError("subgroup must contain the identity")
    for g in elems:
        for h in elems:
            if g * h not in elems:
                raise InputError("not closed under multiplication")
    return elems


def induce_from_subgroup(subgroup: Iterable[GroupElement],
                         f: Mapping[str, Rational]) -> tuple[RankVector, TorsionClass]:
    """Induction of a class from a subgroup H of order 1 or 2 up to V4,
    read off through restriction of characters: the rank entry at chi is
    v2(f(chi restricted to H)), and the torsion component is always
    trivial.

    `f` maps "1" (and, when |H| = 2, "sign") to nonzero rationals.
    """
    elems = _validate_subgroup(subgroup)
    if len(elems) not in (1, 2):
        raise InputError("not a proper subgroup of order <= 2; "
                         "induction formula does not apply")
    f_triv = Fraction(f["1"])
    if f_triv == 0:
        raise InputError("character values must be nonzero")
    if len(elems) == 1:
        exps = tuple(v2(f_triv) for _ in HOMREP_KEYS)
        return RankVector(exps), TorsionClass.one()
    gen = next(g for g in elems if g != identity(V4))
    f_sign = Fraction(f["sign"])
    if f_sign == 0:
        raise InputError("character values must be nonzero")
    exps = []
    for chi in V4_CHARS:
        restricted_trivial = chi(gen) == 1
        exps.append(v2(f_triv if restricted_trivial else f_sign))
    return RankVector(tuple(exps)), TorsionClass.one()
