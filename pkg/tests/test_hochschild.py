import random

import pytest

from coisostar import ratpoly, sampling
from coisostar.errors import NonAssociative
from coisostar.coalg import Cochain, GradedSpace
from coisostar.geometry import SpaceConfig
from coisostar.hochschild import (
    GTildeOp, GradedAlgebra, PolyDiffOp, apply_op, btilde, circ_i, cup, gerst_bracket, gerst_product, graded_b,
    hochschild_b, identity, is_adapted_by_generators, is_adapted_op, mu, unitIndex, xi_project, zeroIndex)
from coisostar.ratpoly import Poly


x1 = Poly.var(ratpoly.x(1))
x2 = Poly.var(ratpoly.x(2))
config = SpaceConfig(2, 1)
d1, d2, none = unitIndex(1, 2), unitIndex(2, 2), zeroIndex(2)


def test_apply_operators():
    assert apply_op(mu(config), x1, x2) == x1 * x2
    D = PolyDiffOp(config, 1, {(d1,): x2})
    assert D.apply([x1 * x1]) == x1 * x2 * 2
    B = PolyDiffOp(config, 2, {(d1, d2): 1})
    assert B.apply([x1 * x2, x2]) == x2
    assert B.swap().apply([x1 * x2, x2]).isZero()
    assert B.swap().apply([x2, x1 * x2]) == x2


def test_derivations_are_cocycles():
    D = PolyDiffOp(config, 1, {(d1,): x2, (d2,): x1 * x1})
    assert hochschild_b(D).isZero()
    assert hochschild_b(mu(config)).isZero()
    assert hochschild_b(PolyDiffOp.function(config, x1)).isZero()


def test_coboundary_of_second_derivative():
    rho = PolyDiffOp(config, 1, {((2, 0),): 1})
    # b(rho)(f, g) = f rho(g) - rho(fg) + rho(f) g = -2 f' g'
    assert hochschild_b(rho) == PolyDiffOp(config, 2, {(d1, d1): -2})


def test_b_squares_to_zero():
    rng = random.Random(11)
    for _ in range(10):
        phi = sampling.operator(rng, config, rng.randint(0, 2), 2, 1)
        assert hochschild_b(hochschild_b(phi)).isZero()


def test_gerstenhaber_products():
    D = PolyDiffOp(config, 1, {(d1,): x2})
    E = PolyDiffOp(config, 1, {(d2,): x2})
    # commutator of vector fields [x2 d1, x2 d2] = -x2 d1
    assert gerst_bracket(D, E) == PolyDiffOp(config, 1, {(d1,): -x2})
    assert gerst_bracket(D, E) == gerst_bracket(E, D) * -1
    assert circ_i(mu(config), identity(config), 2) == mu(config)
    assert gerst_product(identity(config), D) == D
    with pytest.raises(ValueError):
        circ_i(mu(config), D, 3)


def test_cup_concatenates_arguments():
    D = PolyDiffOp(config, 1, {(d1,): x2})
    E = PolyDiffOp(config, 1, {(d2,): 1})
    product = cup(D, E)
    assert product.arity == 2
    assert product.apply([x1, x2]) == x2


def test_adapted_operators():
    assert is_adapted_op(mu(config))
    assert is_adapted_op(PolyDiffOp(config, 1, {(d1,): x1}))
    assert not is_adapted_op(PolyDiffOp(config, 1, {(d2,): 1}))
    assert is_adapted_op(PolyDiffOp(config, 1, {(d2,): x2}))
    assert not is_adapted_op(PolyDiffOp.function(config, x1))
    assert is_adapted_by_generators(PolyDiffOp(config, 2, {(d2, d2): x2 * x1}))
    assert not is_adapted_by_generators(PolyDiffOp(config, 2, {(d1, d2): 1}))


def test_coboundary_preserves_adapted_operators():
    rng = random.Random(5)
    for _ in range(10):
        phi = sampling.adapted_operator(rng, SpaceConfig(3, 2), rng.randint(1, 2), 1, 1)
        assert is_adapted_op(phi)
        assert is_adapted_op(hochschild_b(phi))


def test_normal_form_projection_intertwines_coboundaries():
    rng = random.Random(2)
    for _ in range(10):
        phi = sampling.operator(rng, config, rng.randint(1, 2), 2, 1)
        assert xi_project(hochschild_b(phi)) == btilde(xi_project(phi))
    with pytest.raises(ValueError):
        GTildeOp(config, 1, {(d1,): 1})


def test_json():
    phi = PolyDiffOp(config, 2, {(d1, d2): x1 * 3, (none, d2): 1})
    assert PolyDiffOp.fromJSON(phi.toJSON()) == phi


def test_graded_algebra_checks_associativity():
    space = GradedSpace([('u', 0), ('v', 1)])
    algebra = GradedAlgebra(space, {('u', 'u'): {'u': 1}, ('u', 'v'): {'v': 1}, ('v', 'u'): {'v': 1}})
    algebra.check_associative()
    broken = GradedAlgebra(space, {('u', 'u'): {'u': 2}, ('u', 'v'): {'v': 1}})
    with pytest.raises(NonAssociative):
        broken.check_associative()
    with pytest.raises(ValueError):
        GradedAlgebra(space, {('u', 'u'): {'v': 1}})


def test_graded_coboundary_squares_to_zero():
    space = GradedSpace([('u', 0), ('v', 1)])
    algebra = GradedAlgebra(space, {('u', 'u'): {'u': 1}, ('u', 'v'): {'v': 1}, ('v', 'u'): {'v': 1}})
    rng = random.Random(12)
    for degree in (-1, 0, 1):
        for arity in (1, 2):
            phi = sampling.cochain(rng, space, degree, (arity,), density=0.8)
            once = graded_b(algebra, phi)
            assert once.degree == degree
            assert graded_b(algebra, once).isZero()


def test_graded_coboundary_of_the_identity_is_the_product():
    space = GradedSpace([('u', 0), ('v', 1)])
    algebra = GradedAlgebra(space, {('u', 'u'): {'u': 1}, ('u', 'v'): {'v': 1}, ('v', 'u'): {'v': 1}})
    ident = Cochain(space, 0, {('u',): {'u': 1}, ('v',): {'v': 1}})
    product = graded_b(algebra, ident)
    assert product.value(('u', 'v')) == {'v': 1}
    assert product.value(('v', 'v')) == {}
    broken = GradedAlgebra(space, {('u', 'u'): {'u': 2}, ('u', 'v'): {'v': 1}})
    with pytest.raises(NonAssociative):
        graded_b(broken, ident)
