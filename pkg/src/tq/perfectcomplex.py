"""Bounded complexes of free modules over Q[V4] and the class they define
together with a rational isomorphism between odd and even cohomology.

The per-character determinant is computed by character-specializing the
complex to a rational complex, choosing splittings of the kernel/image
exact sequences, and taking the determinant of the composed isomorphism
from the direct sum of odd-degree terms to the direct sum of even-degree
terms.  The result does not depend on the splittings; a seeded random
splitting mode exists so tests can check exactly that.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from . import linalg
from .errors import ContractViolationError, InputError
from .grouprings import (V4, V4_CHARS, GaloisChar, GroupElement, GroupRingElem,
                         GroupRingMatrix, apply_char_matrix, element_name,
                         group_elements, v4_element_by_name)
from .relk0 import HomRep

Mat = linalg.Mat


@dataclass(frozen=True)
class PerfectComplex:
    """A bounded complex of free modules, nonzero only in the contiguous
    degree range [degrees[0], degrees[1]].  Differentials are stored
    row-wise (see linalg) and are omitted when source or target has rank
    zero.  The composite of consecutive differentials must vanish in the
    group ring."""

    group: str
    degrees: tuple[int, int]
    ranks: Mapping[int, int]
    differentials: Mapping[int, GroupRingMatrix]

    def __post_init__(self):
        n, m = self.degrees
        if n > m:
            raise InputError("empty degree range")
        for j in range(n, m + 1):
            if self.rank(j) < 0:
                raise InputError("negative rank")
        for j, d in self.differentials.items():
            if not (n <= j < m):
                raise InputError(f"differential at degree {j} outside range")
            if d.rows != self.rank(j) or d.cols != self.rank(j + 1):
                raise InputError(
                    f"differential at degree {j} has shape {d.rows}x{d.cols}, "
                    f"expected {self.rank(j)}x{self.rank(j + 1)}")
        for j in range(n, m - 1):
            d0 = self.differentials.get(j)
            d1 = self.differentials.get(j + 1)
            if d0 is not None and d1 is not None and not (d0 @ d1).is_zero():
                raise InputError(f"d_{j + 1} o d_{j} != 0")

    def rank(self, j: int) -> int:
        return int(self.ranks.get(j, 0))

    def degree_list(self) -> list[int]:
        return list(range(self.degrees[0], self.degrees[1] + 1))

    def to_json_dict(self) -> dict:
        diffs = {}
        for j, d in self.differentials.items():
            rows = []
            for row in d.entries:
                rows.append([{element_name(g): f"{c.numerator}/{c.denominator}"
                              for g, c in x.items()} for x in row])
            diffs[str(j)] = rows
        return {"group": self.group,
                "degrees": list(self.degrees),
                "ranks": {str(j): self.rank(j) for j in self.degree_list()},
                "differentials": diffs}

    @classmethod
    def from_json_dict(cls, d: Mapping) -> "PerfectComplex":
        if d["group"] != V4:
            raise InputError("only V4 complexes are serialized")
        degrees = tuple(d["degrees"])
        ranks = {int(j): int(r) for j, r in d["ranks"].items()}
        diffs = {}
        for j, rows in d["differentials"].items():
            entries = []
            for row in rows:
                entries.append([GroupRingElem(V4, {v4_element_by_name(name): Fraction(val)
                                                   for name, val in x.items()})
                                for x in row])
            diffs[int(j)] = GroupRingMatrix.from_rows(V4, entries)
        return cls(V4, degrees, ranks, diffs)


def euler_characteristic(p: PerfectComplex) -> int:
    """Alternating sum of ranks with sign (-1)^(j+1)."""
    total = 0
    for j in p.degree_list():
        sign = -1 if (j + 1) % 2 else 1
        total += sign * p.rank(j)
    return total


@dataclass(frozen=True)
class RationalComplex:
    """A character specialization: same shape as a PerfectComplex but with
    rational matrices."""

    degrees: tuple[int, int]
    ranks: Mapping[int, int]
    diffs: Mapping[int, Mat]

    def rank(self, j: int) -> int:
        return int(self.ranks.get(j, 0))

    def degree_list(self) -> list[int]:
        return list(range(self.degrees[0], self.degrees[1] + 1))

    def diff(self, j: int) -> Mat | None:
        return self.diffs.get(j)


def char_specialize(p: PerfectComplex, chi: GaloisChar) -> RationalComplex:
    """Apply a one-dimensional character entrywise to every differential."""
    diffs = {j: linalg.mat(apply_char_matrix(chi, d))
             for j, d in p.differentials.items()}
    c = RationalComplex(p.degrees, dict(p.ranks), diffs)
    for j in range(p.degrees[0], p.degrees[1] - 1):
        d0, d1 = c.diff(j), c.diff(j + 1)
        if d0 is not None and d1 is not None:
            prod = linalg.mat_mul(d0, d1)
            if any(any(x != 0 for x in row) for row in prod):
                raise ContractViolationError("specialized complex has d*d != 0")
    return c


@dataclass
class CohomologyData:
    """Deterministic kernel/image/cohomology bases of a rational complex,
    all expressed as row vectors in the ambient term of their degree."""

    kernels: dict[int, Mat]
    images: dict[int, Mat]
    reps: dict[int, Mat]

    def h_dim(self, j: int) -> int:
        return len(self.reps.get(j, []))


def cohomology_basis(c: RationalComplex) -> CohomologyData:
    n, m = c.degrees
    kernels: dict[int, Mat] = {}
    images: dict[int, Mat] = {}
    reps: dict[int, Mat] = {}
    for j in c.degree_list():
        rk = c.rank(j)
        if rk == 0:
            kernels[j], images[j], reps[j] = [], [], []
            continue
        d = c.diff(j)
        if j == m or c.rank(j + 1) == 0 or d is None:
            kernels[j] = linalg.identity(rk)
        else:
            kernels[j] = linalg.left_kernel_basis(d)
        dprev = c.diff(j - 1)
        if j == n or dprev is None:
            images[j] = []
        else:
            images[j] = linalg.row_space_basis(dprev)
        # non-pivot completion: kernel basis vectors extending the image span
        span = [row[:] for row in images[j]]
        chosen: Mat = []
        for v in kernels[j]:
            stacked = span + [v]
            reduced = linalg.row_space_basis(stacked)
            if len(reduced) > len(span):
                span = reduced
                chosen.append(v)
        reps[j] = chosen
        if len(images[j]) + len(chosen) != len(kernels[j]):
            raise ContractViolationError("image not contained in kernel")
    return CohomologyData(kernels, images, reps)


@dataclass(frozen=True)
class CohomologyIsoComponent:
    """One character's worth of a cohomology isomorphism: explicit cocycle
    representatives spanning the odd and even cohomology, and the matrix of
    the isomorphism in those bases (rows indexed by the source basis,
    ascending degree)."""

    odd_reps: Mapping[int, Mat]
    even_reps: Mapping[int, Mat]
    matrix: Mat


@dataclass(frozen=True)
class CohomologyIso:
    """A rational isomorphism between total odd and total even cohomology,
    one component per character label.  `direction` records which way the
    supplied matrices map; the class this package computes is always read
    from odd to even, so an even-to-odd iso contributes the reverse
    composite (pointwise reciprocal determinants)."""

    components: Mapping[str, CohomologyIsoComponent]
    direction: str = "odd_to_even"

    def __post_init__(self):
        if self.direction not in ("odd_to_even", "even_to_odd"):
            raise InputError(f"unknown direction {self.direction!r}")


def _global_class_coords(c: RationalComplex, data: CohomologyData,
                         user_reps: Mapping[int, Mat], degs: list[int]) -> Mat:
    """Rows: coordinates of each user cocycle representative w.r.t. the
    internal cohomology basis, laid out degree block by degree block."""
    offsets = {}
    total = 0
    for j in degs:
        offsets[j] = total
        total += data.h_dim(j)
    rows: Mat = []
    for j in degs:
        supplied = user_reps.get(j, [])
        if len(supplied) != data.h_dim(j):
            raise ContractViolationError(
                f"degree {j}: {len(supplied)} representatives supplied for "
                f"{data.h_dim(j)}-dimensional cohomology")
        d = c.diff(j)
        for v in supplied:
            if len(v) != c.rank(j):
                raise ContractViolationError(f"degree {j}: representative has "
                                             f"wrong length")
            if d is not None:
                if any(x != 0 for x in linalg.vec_mat(list(v), d)):
                    raise ContractViolationError(
                        f"degree {j}: supplied representative is not a cocycle")
            combined = data.images[j] + data.reps[j]
            coords = linalg.coords_in_basis(combined, list(v))
            beta = coords[len(data.images[j]):]
            row = [Fraction(0)] * total
            row[offsets[j]:offsets[j] + len(beta)] = beta
            rows.append(row)
    return rows


def _random_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-4, 4), rng.randint(1, 3))


def torsion_determinant(c: RationalComplex, comp: CohomologyIsoComponent,
                        direction: str = "odd_to_even",
                        rng: random.Random | None = None) -> Fraction:
    """Determinant of the composed isomorphism from the sum of odd-degree
    terms to the sum of even-degree terms, built from the supplied
    cohomology iso and (deterministic or seeded-random) splittings.

    Basis convention: both sides are ordered by ascending degree, then by
    index inside each term.
    """
    data = cohomology_basis(c)
    degs = c.degree_list()
    odd_degs = [j for j in degs if j % 2 == 1]
    even_degs = [j for j in degs if j % 2 == 0]
    odd_rank = sum(c.rank(j) for j in odd_degs)
    even_rank = sum(c.rank(j) for j in even_degs)
    if odd_rank != even_rank:
        raise ContractViolationError(
            f"odd total rank {odd_rank} != even total rank {even_rank}")

    u_odd = _global_class_coords(c, data, comp.odd_reps, odd_degs)
    u_even = _global_class_coords(c, data, comp.even_reps, even_degs)
    h_odd = sum(data.h_dim(j) for j in odd_degs)
    h_even = sum(data.h_dim(j) for j in even_degs)
    if h_odd != h_even:
        raise ContractViolationError(
            f"cohomology dimension mismatch: odd {h_odd}, even {h_even}")

    psi_user = linalg.mat(comp.matrix) if comp.matrix else []
    if len(psi_user) != h_odd or (psi_user and len(psi_user[0]) != h_even):
        raise ContractViolationError("iso matrix shape does not match cohomology")
    if h_odd and not linalg.is_invertible(psi_user):
        raise ContractViolationError("iso matrix is not invertible")
    if direction == "even_to_odd":
        psi_oe = linalg.inverse(psi_user) if psi_user else []
    else:
        psi_oe = psi_user

    if h_odd:
        try:
            psi_int = linalg.mat_mul(linalg.mat_mul(linalg.inverse(u_odd), psi_oe),
                                     u_even)
        except ValueError as exc:
            raise ContractViolationError(f"degenerate representative basis: {exc}")
    else:
        psi_int = []

    # sections of the quotient map kernel -> cohomology (may be randomized
    # by adding image-space vectors: any complement choice is allowed)
    reps = {j: [row[:] for row in data.reps[j]] for j in degs}
    if rng is not None:
        for j in degs:
            for v in reps[j]:
                for b in data.images[j]:
                    t = _random_fraction(rng)
                    for col in range(len(v)):
                        v[col] += t * b[col]

    # splittings of d_j : C^j ->> B_{j+1} (may be randomized by adding
    # kernel vectors to each preimage)
    s_rows: dict[int, Mat] = {}
    for j in degs[:-1]:
        image_next = data.images.get(j + 1, [])
        if not image_next:
            continue
        d = c.diff(j)
        rows = []
        for b in image_next:
            x = linalg.solve_left(d, list(b))
            if x is None:
                raise ContractViolationError("image vector without preimage")
            if rng is not None:
                for k in data.kernels[j]:
                    t = _random_fraction(rng)
                    x = [xi + t * ki for xi, ki in zip(x, k)]
            rows.append(x)
        s_rows[j] = rows

    odd_offsets = {}
    acc = 0
    for j in odd_degs:
        odd_offsets[j] = acc
        acc += data.h_dim(j)
    even_offsets = {}
    acc = 0
    for j in even_degs:
        even_offsets[j] = acc
        acc += data.h_dim(j)
    even_slot = {}
    acc = 0
    for j in even_degs:
        even_slot[j] = acc
        acc += c.rank(j)

    phi: Mat = []
    for j in odd_degs:
        d = c.diff(j)
        for i in range(c.rank(j)):
            e = [Fraction(0)] * c.rank(j)
            e[i] = Fraction(1)
            out = [Fraction(0)] * even_rank
            # boundary part: d_j(e) lands in the image inside C^(j+1)
            if d is not None:
                u = list(d[i])
            else:
                u = [Fraction(0)] * c.rank(j + 1) if j + 1 <= c.degrees[1] else []
            if any(x != 0 for x in u):
                gamma = linalg.coords_in_basis(data.images[j + 1], u)
                z = [ei - sum(g * s_rows[j][t][col] for t, g in enumerate(gamma))
                     for col, ei in enumerate(e)]
                base = even_slot[j + 1]
                for col, x in enumerate(u):
                    out[base + col] += x
            else:
                z = e
            # kernel part: split into image coordinates and cohomology class
            combined = data.images[j] + reps[j]
            coords = linalg.coords_in_basis(combined, z)
            alpha = coords[:len(data.images[j])]
            beta = coords[len(data.images[j]):]
            # image part travels down one degree through the splitting there
            if any(x != 0 for x in alpha):
                rows_prev = s_rows[j - 1]
                base = even_slot[j - 1]
                for t, a in enumerate(alpha):
                    if a:
                        for col, x in enumerate(rows_prev[t]):
                            out[base + col] += a * x
            # cohomology part travels through the iso
            if any(x != 0 for x in beta):
                hvec = [Fraction(0)] * h_odd
                hvec[odd_offsets[j]:odd_offsets[j] + len(beta)] = beta
                heven = linalg.vec_mat(hvec, psi_int)
                for k in even_degs:
                    off, dim = even_offsets[k], data.h_dim(k)
                    for t in range(dim):
                        coeff = heven[off + t]
                        if coeff:
                            base = even_slot[k]
                            for col, x in enumerate(reps[k][t]):
                                out[base + col] += coeff * x
            phi.append(out)

    result = linalg.det(phi)
    if result == 0:
        raise ContractViolationError("composite map is singular")
    return 1 / result if direction == "even_to_odd" else result


def class_representative(p: PerfectComplex, iso: CohomologyIso,
                         rng: random.Random | None = None) -> HomRep:
    """The Hom-description representative of the class of (p, iso): the
    per-character torsion determinant."""
    values = {}
    for chi in V4_CHARS:
        comp = iso.components[chi.label]
        spec = char_specialize(p, chi)
        values[chi.label] = torsion_determinant(spec, comp, iso.direction, rng)
    return HomRep(values)
