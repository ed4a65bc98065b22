import json
import random
from fractions import Fraction
from pathlib import Path

import pytest

from tq.errors import ContractViolationError, InputError
from tq.grouprings import (V4, V4_A, V4_B, V4_CHARS, GroupRingElem,
                           GroupRingMatrix, char_by_label)
from tq.localterms import TameComplexSpec, build_tame_complex, valuation_iso
from tq.perfectcomplex import (CohomologyIso, CohomologyIsoComponent,
                               PerfectComplex, char_specialize,
                               class_representative, cohomology_basis,
                               euler_characteristic, torsion_determinant)
from tq.relk0 import torsion_class

FIXTURES = Path(__file__).parent / "fixtures"


def tame(p, a=V4_A, b=V4_B):
    spec = TameComplexSpec(p, a, b)
    return spec, build_tame_complex(spec)


def sign_pattern(chi, a=V4_A, b=V4_B):
    return ("+" if chi(a) == 1 else "-") + ("+" if chi(b) == 1 else "-")


# ---------- construction ----------

def test_composite_zero_enforced():
    one = GroupRingElem.one(V4)
    a = GroupRingElem.of(V4_A)
    d0 = GroupRingMatrix.from_rows(V4, [[one]])
    d1 = GroupRingMatrix.from_rows(V4, [[a]])
    with pytest.raises(InputError):
        PerfectComplex(V4, (0, 2), {0: 1, 1: 1, 2: 1}, {0: d0, 1: d1})


def test_differential_shape_enforced():
    d = GroupRingMatrix.identity(V4, 2)
    with pytest.raises(InputError):
        PerfectComplex(V4, (0, 1), {0: 1, 1: 2}, {0: d})


def test_euler_characteristic_examples():
    _, p = tame(5)
    assert euler_characteristic(p) == 0
    empty = PerfectComplex(V4, (0, 0), {0: 0}, {})
    assert euler_characteristic(empty) == 0
    single = PerfectComplex(V4, (0, 0), {0: 3}, {})
    assert euler_characteristic(single) == -3


# ---------- specialization ----------

def test_specialize_lambda_row_trivial_char():
    _, p = tame(5)
    c = char_specialize(p, char_by_label("1"))
    assert c.diff(-2) == [[Fraction(4), Fraction(0)]]
    assert c.diff(-1) == [[Fraction(0)], [Fraction(0)]]


def test_specialize_lambda_row_unramified_char():
    # chi(a) = 1, chi(b) = -1: first entry -(p+1)
    _, p = tame(5)
    c = char_specialize(p, char_by_label("chi2"))
    assert c.diff(-2) == [[Fraction(-6), Fraction(0)]]


def test_specialize_zero_complex():
    zero = PerfectComplex(V4, (0, 1), {0: 0, 1: 0}, {})
    c = char_specialize(zero, char_by_label("1"))
    assert c.rank(0) == 0 and c.rank(1) == 0


# ---------- cohomology ----------

def test_cohomology_of_multiplication_by_two():
    two = GroupRingElem.one(V4) * 2
    p = PerfectComplex(V4, (0, 1), {0: 1, 1: 1},
                       {0: GroupRingMatrix.from_rows(V4, [[two]])})
    c = char_specialize(p, char_by_label("1"))
    data = cohomology_basis(c)
    assert data.kernels[0] == []
    assert data.images[1] == [[Fraction(1)]]
    assert data.h_dim(0) == 0 and data.h_dim(1) == 0


def test_tame_cohomology_dimensions():
    _, p = tame(7)
    for chi in V4_CHARS:
        data = cohomology_basis(char_specialize(p, chi))
        dims = (data.h_dim(-2), data.h_dim(-1), data.h_dim(0))
        assert dims == ((0, 1, 1) if chi.is_trivial() else (0, 0, 0))


# ---------- determinants ----------

def load_fixture_determinants():
    with open(FIXTURES / "tame_determinants.json") as fh:
        raw = json.load(fh)["determinants"]
    return {int(p): {pat: Fraction(v) for pat, v in by_pat.items()}
            for p, by_pat in raw.items()}


def test_class_representative_matches_fixtures():
    expected = load_fixture_determinants()
    for p, by_pattern in expected.items():
        spec, cplx = tame(p)
        rep = class_representative(cplx, valuation_iso(spec, cplx))
        for chi in V4_CHARS:
            assert rep.value(chi) == by_pattern[sign_pattern(chi)], (p, chi.label)


def test_representative_at_thirteen():
    spec, cplx = tame(13)
    rep = class_representative(cplx, valuation_iso(spec, cplx))
    assert rep.as_tuple() == (Fraction(1, 24), Fraction(-1), Fraction(-1, 7),
                              Fraction(-1))


def test_zero_differential_identity_iso_gives_constant_one():
    p = PerfectComplex(V4, (-1, 0), {-1: 2, 0: 2},
                       {-1: GroupRingMatrix.from_rows(
                           V4, [[GroupRingElem.zero(V4)] * 2] * 2)})
    ident = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]
    comps = {chi.label: CohomologyIsoComponent(
        odd_reps={-1: [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]},
        even_reps={0: [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]},
        matrix=ident) for chi in V4_CHARS}
    rep = class_representative(p, CohomologyIso(comps))
    assert rep.as_tuple() == (1, 1, 1, 1)


def test_splitting_independence_seeded():
    for p in (3, 7):
        spec, cplx = tame(p)
        iso = valuation_iso(spec, cplx)
        baseline = class_representative(cplx, iso)
        rng = random.Random(p)
        for _ in range(30):
            assert class_representative(cplx, iso, rng) == baseline


def test_scalar_rescaling_of_iso():
    spec, cplx = tame(5)
    iso = valuation_iso(spec, cplx)
    baseline = class_representative(cplx, iso)
    for c in (Fraction(3), Fraction(-2, 7)):
        comps = dict(iso.components)
        base = comps["1"]
        comps["1"] = CohomologyIsoComponent(base.odd_reps, base.even_reps,
                                            [[c * base.matrix[0][0]]])
        scaled = class_representative(cplx, CohomologyIso(comps))
        # the trivial-character block is one-dimensional and odd-to-even
        assert scaled["1"] == c * baseline["1"]
        assert scaled["chi1"] == baseline["chi1"]


def test_direction_parameter_gives_reciprocal_class():
    spec, cplx = tame(11)
    iso = valuation_iso(spec, cplx)
    forward = class_representative(cplx, iso)
    comps = {}
    for label, comp in iso.components.items():
        # the inverse iso maps even to odd: swap the roles of the bases
        comps[label] = CohomologyIsoComponent(comp.odd_reps, comp.even_reps,
                                              comp.matrix)
    backward = class_representative(cplx, CohomologyIso(comps, "even_to_odd"))
    assert backward == forward.inverse()
    assert torsion_class(backward) == torsion_class(forward)


def test_iso_shape_violations_rejected():
    spec, cplx = tame(5)
    comps = dict(valuation_iso(spec, cplx).components)
    good = comps["1"]
    comps["1"] = CohomologyIsoComponent(good.odd_reps, good.even_reps,
                                        [[Fraction(0)]])
    with pytest.raises(ContractViolationError):
        class_representative(cplx, CohomologyIso(comps))
    comps["1"] = CohomologyIsoComponent({-1: []}, good.even_reps, [])
    with pytest.raises(ContractViolationError):
        class_representative(cplx, CohomologyIso(comps))


def test_degenerate_representative_rejected():
    # a representative whose class lies in the image spans nothing in
    # cohomology; the change of basis is singular
    spec, cplx = tame(5)
    comps = dict(valuation_iso(spec, cplx).components)
    good = comps["1"]
    comps["1"] = CohomologyIsoComponent({-1: [[Fraction(1), Fraction(0)]]},
                                        good.even_reps, good.matrix)
    with pytest.raises(ContractViolationError):
        class_representative(cplx, CohomologyIso(comps))


def test_representative_count_mismatch_rejected():
    spec, cplx = tame(5)
    c2 = char_specialize(cplx, char_by_label("chi2"))
    bad = CohomologyIsoComponent({-1: [[Fraction(1), Fraction(0)]]}, {}, [])
    with pytest.raises(ContractViolationError):
        torsion_determinant(c2, bad)


# ---------- serialization ----------

def test_complex_json_roundtrip():
    _, p = tame(7)
    data = p.to_json_dict()
    clone = PerfectComplex.from_json_dict(data)
    assert clone == p
    assert json.loads(json.dumps(data)) == data
