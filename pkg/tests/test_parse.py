from fractions import Fraction

import pytest
from hypothesis import given

from harmonica.algebra import VB, VDR, serialize
from harmonica.braid_betti import P5
from harmonica.parse import ParseError, UnknownGenerator, infer_algebra, parse
from strategies import p5, up5, vb, vb2, vdr, vdr2

X0, X1 = VB.gen("X0"), VB.gen("X1")


def test_power_times_difference():
    x = parse("X0^2 (X1 - 1)", "VB")
    assert x == X0**2 * X1 - X0**2
    assert len(x.terms) == 2


def test_commutator_in_derham_is_degree_two():
    x = parse("e0 e1 - e1 e0", "VDR")
    assert x.degrees() == {2}
    assert len(x.terms) == 2


def test_semidirect_pair():
    x = parse("x15 X0", "P5")
    assert x.terms == {((1,), (1,)): 1}


def test_unit_rationals_and_negative_exponents():
    assert parse("(#)", "VB") == VB.one()
    assert parse("1/2 X0 - 3/4", "VB") == X0 * Fraction(1, 2) - Fraction(3, 4)
    assert parse("X1^-2", "VB") == X1**-2
    assert parse("-X0^-1 * X1", "VB") == -(X0**-1) * X1


def test_concatenated_generator_names_split():
    assert parse("X0X1", "VB") == X0 * X1
    assert parse("e0t25", "UP5") == parse("e0 t25", "UP5")


def test_infer_algebra():
    assert infer_algebra("X0 + Y1") == "VB2"
    assert infer_algebra("t25 e0") == "UP5"
    assert infer_algebra("x13") == "P5"
    assert infer_algebra("e0 f1") == "VDR2"
    assert infer_algebra("e0") == "VDR"
    assert infer_algebra("X0") == "VB"


def test_named_k4_generators():
    assert parse("x12", "P5") == P5.gen("X1")
    assert parse("x23", "P5") == P5.gen("X0")


@pytest.mark.parametrize("text,pos", [("X0 +", 4), ("(X0", 3), ("X0^", 3), ("", 0), ("X0 $", 3), ("1/0", 2)])
def test_syntax_errors_report_position(text, pos):
    with pytest.raises(ParseError) as ei:
        parse(text, "VB")
    assert ei.value.position == pos


def test_unknown_generator():
    with pytest.raises(UnknownGenerator) as ei:
        parse("X0 + e0", "VB")
    assert ei.value.position == 5


def test_negative_power_of_sum_rejected():
    with pytest.raises(ParseError):
        parse("(X0 - 1)^-1", "VB")
    with pytest.raises(ParseError):
        parse("e0^-1", "VDR")


@pytest.mark.parametrize("strategy", [vb, vb2, vdr, vdr2, p5, up5], ids=["VB", "VB2", "VDR", "VDR2", "P5", "UP5"])
def test_roundtrip(strategy):
    @given(strategy)
    def inner(x):
        assert parse(serialize(x), x.algebra) == x
        assert serialize(parse(serialize(x), x.algebra)) == serialize(x)

    inner()
