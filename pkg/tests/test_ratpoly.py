from fractions import Fraction

import pytest

from coisostar import ratpoly
from coisostar.errors import ParseError
from coisostar.ratpoly import Poly


x1 = Poly.var(ratpoly.x(1))
x2 = Poly.var(ratpoly.x(2))


def test_arithmetic_is_exact():
    third = Poly.const(Fraction(1, 3))
    assert third * 3 == 1
    assert (x1 + x2) * (x1 - x2) == x1 ** 2 - x2 ** 2
    assert (x1 - x1).isZero()
    assert not Poly()


def test_parse_printed_form():
    assert Poly.parse('x1^2 - 1/2*x2') == x1 * x1 - x2 / 2
    assert Poly.parse('-(x1 + 1)^2') == -(x1 * x1 + x1 * 2 + 1)
    assert Poly.parse(str(x1 * x2 * 3 - 5)) == x1 * x2 * 3 - 5


@pytest.mark.parametrize('text', ['', 'x1 +', 'x1 / x2', '(x1', 'x1^y2'])
def test_parse_rejects_malformed_text(text):
    with pytest.raises(ParseError):
        Poly.parse(text)


def test_derive_and_substitute():
    f = x1 ** 3 * x2 + x2
    assert f.derive(ratpoly.x(1)) == x1 ** 2 * x2 * 3
    assert f.deriveMany([(ratpoly.x(1), 2), (ratpoly.x(2), 1)]) == x1 * 6
    assert f.substitute({ratpoly.x(1): 2}) == x2 * 9
    assert f.restrict([ratpoly.x(2)]).isZero()


def test_integrate_over_interval():
    assert ratpoly.integrate(x1, ratpoly.x(1), 0, 1) == Fraction(1, 2)
    assert ratpoly.integrate(x1 * x2, ratpoly.x(1), 0, 2) == x2 * 2


def test_degree_and_variables():
    f = x1 ** 2 * x2 + x2
    assert f.degree() == 3
    assert f.degree(lambda v: v == ratpoly.x(2)) == 1
    assert Poly().degree() == -1
    assert f.variables() == set([ratpoly.x(1), ratpoly.x(2)])


def test_variable_names():
    assert ratpoly.x(3).name == 'x3'
    assert ratpoly.slot(2, 1).name.endswith('2_1')
    assert ratpoly.Var.parse('x3') == ratpoly.x(3)
    with pytest.raises(ParseError):
        ratpoly.Var.parse('3x')


def test_json_keeps_fractions():
    f = x1 * Fraction(-2, 7) + 1
    data = f.toJSON()
    assert {'exps': {'x1': 1}, 'num': -2, 'den': 7} in data['monomials']
    assert Poly.fromJSON(data) == f


def test_json_rejects_zero_denominator():
    with pytest.raises(ParseError):
        Poly.fromJSON({'monomials': [{'exps': {}, 'num': 1, 'den': 0}]})


def test_functional_forms():
    assert ratpoly.poly_add(x1, 1) == x1 + 1
    assert ratpoly.poly_mul(2, x2) == x2 * 2
    assert ratpoly.poly_scale(x1, Fraction(1, 2)) * 2 == x1
    assert ratpoly.derive(x1 * x1 * x2, ratpoly.x(1)) == x1 * x2 * 2
    assert ratpoly.substitute(x1 * x2, {ratpoly.x(2): x1}) == x1 ** 2


@pytest.mark.parametrize('entry', [
    {'exps': {'x1': 1.5}, 'num': 1, 'den': 1},
    {'exps': {'x1': -1}, 'num': 1, 'den': 1},
    {'exps': {'x1': '2'}, 'num': 1, 'den': 1},
    {'exps': {'x1': True}, 'num': 1, 'den': 1},
    {'exps': {}, 'num': 0.5, 'den': 1},
    {'exps': {}, 'num': 1, 'den': 2.0},
])
def test_json_rejects_non_integers(entry):
    with pytest.raises(ParseError):
        Poly.fromJSON({'monomials': [entry]})


def test_json_drops_zero_exponents():
    assert Poly.fromJSON({'monomials': [{'exps': {'x1': 0}, 'num': 3}]}) == Poly.const(3)


def test_negative_powers_are_refused():
    assert x1 ** 0 == Poly.one()
    with pytest.raises(ValueError):
        x1 ** -1
