import pytest

from _helpers import K5, CUBIC_F, poly
from pencil_fibers.errors import (
    FixedComponent,
    InputError,
    NonHomogeneous,
    ParseError,
    ReducibleMinimalPolynomial,
    UnknownSymbol,
)
from pencil_fibers.field import QQ
from pencil_fibers.parsing import parse_polynomial, read_input
from pencil_fibers.poly import MultiPoly


def test_cubic_f():
    f = parse_polynomial(CUBIC_F, QQ)
    assert f.coefficient((3, 0, 0)) == 27
    assert f.coefficient((0, 1, 2)) == 5
    assert len(f.terms) == 6 and f.total_degree() == 3


def test_generator_coefficient():
    f = parse_polynomial("(r-1)*X^2", K5)
    assert f == MultiPoly.plane(K5, {(2, 0, 0): K5.gen - 1})


def test_powers_and_division():
    assert parse_polynomial("X**2/4 - (Y/2)^2", QQ) == poly("(X - Y)*(X + Y)/4")


def test_non_homogeneous():
    with pytest.raises(NonHomogeneous):
        parse_polynomial("X + 1", QQ, homogeneous=True)


def test_unknown_symbol_position():
    with pytest.raises(UnknownSymbol) as info:
        parse_polynomial("X + 2*W", QQ, line=4, column=6)
    assert (info.value.line, info.value.column) == (4, 12)


@pytest.mark.parametrize("text, col", [("X +", 4), ("(X + Y", 7), ("X $ Y", 3), ("X^Y", 3)])
def test_syntax_errors(text, col):
    with pytest.raises(ParseError) as info:
        parse_polynomial(text, QQ)
    assert info.value.column == col


def test_division_by_variable():
    with pytest.raises(ParseError):
        parse_polynomial("X/Y", QQ)


DOC = """# comment
[field]
symbol = "r"
min_poly = "-5, 0, 1"

[constants]
h = "(1 + r)/2"   # golden ratio

[pencil]
F = "X^2 - h*Y^2"
G = "Z^2"
"""


def test_read_input():
    doc = read_input(DOC)
    assert doc.field == K5 and doc.symbol == "r"
    half = (1 + K5.gen) / 2
    assert doc.pencil.F.coefficient((0, 2, 0)) == -half
    assert doc.echo()["constants"] == {"h": "(1 + r)/2"}


def test_read_input_positions():
    text = DOC.replace('G = "Z^2"', 'G = "Z^2 + Q"')
    with pytest.raises(UnknownSymbol) as info:
        read_input(text)
    assert (info.value.line, info.value.column) == (11, 12)


def test_read_input_errors():
    with pytest.raises(InputError):
        read_input("[field]\n")
    with pytest.raises(ReducibleMinimalPolynomial):
        read_input(DOC.replace('"-5, 0, 1"', '"-4, 0, 1"'))
    with pytest.raises(NonHomogeneous):
        read_input(DOC.replace('"Z^2"', '"Z"'))
    with pytest.raises(FixedComponent):
        read_input('[pencil]\nF = "X^2"\nG = "X*Y"\n')
    with pytest.raises(ParseError):
        read_input('[pencil]\nF "X"\n')


def test_default_field_is_q():
    doc = read_input('[pencil]\nF = "X"\nG = "Y"\n')
    assert doc.field == QQ
