from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from resflat.core import (
    NON_COLLINEAR,
    PrimitiveRay,
    QQi,
    StratumSignature,
    arg_cmp,
    collinear_normal_form,
    cross,
    primitive_abs_profile,
    residue_tuple,
    validate_residues,
    validate_stratum,
)

small_fracs = st.fractions(
    min_value=-4, max_value=4, max_denominator=6
)
qqis = st.builds(QQi, small_fracs, small_fracs)
nonzero_qqis = qqis.filter(lambda z: not z.is_zero())


@given(qqis, qqis, qqis)
def test_field_arithmetic_is_exact(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a + b) - b == a
    assert a * b == b * a


@given(qqis, nonzero_qqis)
def test_division_roundtrip(a, b):
    assert (a / b) * b == a


def test_canonical_representation():
    z = QQi(Fraction(2, 4), Fraction(-3, -6))
    assert z.re == Fraction(1, 2) and z.im == Fraction(1, 2)
    assert z.re.denominator > 0


@given(nonzero_qqis, nonzero_qqis)
def test_arg_cmp_matches_atan2(a, b):
    import math

    fa = math.atan2(float(a.im), float(a.re))
    fb = math.atan2(float(b.im), float(b.re))
    c = arg_cmp(a, b)
    if abs(fa - fb) > 1e-12:
        assert c == (1 if fa > fb else -1)


class TestValidateStratum:
    def test_two_pole_example(self):
        assert validate_stratum(StratumSignature(0, (4, 1), (3, 4), 0)) == ()

    def test_holomorphic_torus(self):
        assert validate_stratum(StratumSignature(1, (), (), 0)) == ()

    def test_single_simple_pole_is_empty(self):
        bad = validate_stratum(StratumSignature(0, (3,), (), 1))
        assert any("empty stratum" in v for v in bad)

    def test_single_simple_pole_degree_valid(self):
        # Degree identity can hold while the pattern stays excluded.
        bad = validate_stratum(StratumSignature(1, (1,), (), 1))
        assert any("empty stratum" in v for v in bad)

    def test_degree_identity(self):
        bad = validate_stratum(StratumSignature(0, (3,), (2,), 0))
        assert any("degree identity" in v for v in bad)

    def test_no_zero_needs_poles_absent(self):
        bad = validate_stratum(StratumSignature(0, (), (2,), 0))
        assert bad


class TestValidateResidues:
    def test_table_row_tuple(self):
        sig = StratumSignature(0, (2,), (), 4)
        assert validate_residues(sig, residue_tuple([1, 1, -1, -1])) == ()

    def test_zero_at_simple_pole(self):
        sig = StratumSignature(0, (2,), (), 4)
        bad = validate_residues(sig, residue_tuple([1, 1, -1, 0]))
        assert any("zero residue at simple pole" in v for v in bad)

    def test_higher_pole_residues_may_vanish(self):
        sig = StratumSignature(0, (2,), (2, 2), 0)
        assert validate_residues(sig, residue_tuple([0, 0])) == ()

    def test_length_mismatch(self):
        sig = StratumSignature(0, (2,), (2, 2), 0)
        bad = validate_residues(sig, residue_tuple([0]))
        assert any("length" in v for v in bad)

    def test_nonzero_sum(self):
        sig = StratumSignature(0, (2,), (2, 2), 0)
        bad = validate_residues(sig, residue_tuple([1, 1]))
        assert any("sum" in v for v in bad)


class TestCollinearNormalForm:
    def test_scaled_integer_tuple(self):
        w = QQi(1, 1)
        form = collinear_normal_form((w * 2, w * 1, w * (-3)))
        assert isinstance(form, PrimitiveRay)
        assert form.direction == w
        assert form.integers == (2, 1, -3)
        assert form.positive_sum == 3

    def test_non_collinear(self):
        entries = residue_tuple([QQi(1), QQi(0, 1), QQi(-1, -1)])
        assert collinear_normal_form(entries) is NON_COLLINEAR

    def test_two_opposite(self):
        form = collinear_normal_form(
            (QQi(Fraction(3, 2)), QQi(Fraction(-3, 2)))
        )
        assert form.direction == QQi(Fraction(3, 2))
        assert form.integers == (1, -1)

    def test_zero_entry_rejected(self):
        with pytest.raises(ValueError):
            collinear_normal_form((QQi(0), QQi(1)))

    @given(nonzero_qqis, st.lists(st.integers(-5, 5).filter(bool), min_size=2, max_size=5))
    @settings(max_examples=80)
    def test_scaling_invariance(self, scale, ints):
        if sum(ints) != 0:
            ints.append(-sum(ints))
        base = [QQi(m) for m in ints]
        form0 = collinear_normal_form(base)
        form1 = collinear_normal_form([scale * z for z in base])
        assert isinstance(form0, PrimitiveRay) and isinstance(form1, PrimitiveRay)
        assert form0.integers == form1.integers

    def test_reconstruction_is_exact(self):
        w = QQi(Fraction(2, 3), Fraction(-1, 6))
        entries = (w * 4, w * (-1), w * (-3))
        form = collinear_normal_form(entries)
        assert form.entries() == entries


def test_primitive_abs_profile():
    w = QQi(0, Fraction(5, 3))
    assert primitive_abs_profile((w * 2, -w * 4, w * 6)) == (3, 2, 1)
    assert primitive_abs_profile(residue_tuple([1, QQi(1, 1)])) is None


def test_cross_detects_collinearity():
    assert cross(QQi(2, 4), QQi(1, 2)) == 0
    assert cross(QQi(1), QQi(0, 1)) == 1
