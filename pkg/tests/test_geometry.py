import random

import pytest

from coisostar import ratpoly, sampling
from coisostar.errors import ParseError
from coisostar.geometry import (
    DiffForm, GTildeVec, MultiVec, SpaceConfig, embed_gtilde, exterior_derivative, gtilde_wedge, interior,
    is_adapted_by_generators, is_adapted_mv, is_poisson, lie_derivative, psi_project, schouten, wedge, wedge_forms)
from coisostar.ratpoly import Poly


x1 = Poly.var(ratpoly.x(1))
x2 = Poly.var(ratpoly.x(2))
x3 = Poly.var(ratpoly.x(3))


def vector(config, i, f=1):
    return MultiVec(config, {(i,): f}, 1)


def test_space_config_splits_coordinates():
    config = SpaceConfig(3, 2)
    assert config.tangential() == [1]
    assert config.transversal() == [2, 3]
    assert config.inIdeal(x2 * x1 + x3)
    assert not config.inIdeal(x1 + x3)
    with pytest.raises(ValueError):
        SpaceConfig(2, 3)


def test_schouten_on_functions_and_vector_fields():
    config = SpaceConfig(2, 1)
    assert schouten(vector(config, 1), MultiVec.function(config, x1)) == MultiVec.function(config, 1)
    # Lie bracket [x1 d2, d1] = -d2
    assert schouten(vector(config, 2, x1), vector(config, 1)) == vector(config, 2, -1)


def test_schouten_graded_antisymmetry_on_bivectors():
    config = SpaceConfig(3, 1)
    P = MultiVec(config, {(1, 2): x3}, 2)
    Q = MultiVec(config, {(2, 3): x1 * x1}, 2)
    assert schouten(P, Q) == schouten(Q, P)
    assert schouten(vector(config, 1, x3), P) == schouten(P, vector(config, 1, x3)) * -1


def test_wedge_is_graded_commutative():
    config = SpaceConfig(2, 1)
    assert wedge(vector(config, 1), vector(config, 2)) == wedge(vector(config, 2), vector(config, 1)) * -1
    assert wedge(vector(config, 1), vector(config, 1)).isZero()
    assert MultiVec(config, {(2, 1): 1}) == MultiVec(config, {(1, 2): -1})


def test_is_poisson():
    config = SpaceConfig(3, 1)
    assert is_poisson(MultiVec(config, {(1, 2): 1}, 2))
    assert is_poisson(MultiVec(config, {(1, 2): x3}, 2))
    assert not is_poisson(MultiVec(config, {(1, 2): 1, (2, 3): x2}, 2))


def test_adaptedness_of_multivectors():
    config = SpaceConfig(2, 1)
    assert is_adapted_mv(MultiVec(config, {(1, 2): 1}, 2))
    assert not is_adapted_mv(vector(config, 2))
    assert is_adapted_mv(vector(config, 2, x2 * x1))
    assert not is_adapted_mv(MultiVec.function(config, x1))
    assert is_adapted_by_generators(vector(config, 2, x2), 1)
    assert not is_adapted_by_generators(vector(config, 2), 1)


def test_generators_agree_with_coefficients():
    rng = random.Random(3)
    config = SpaceConfig(3, 2)
    for _ in range(10):
        X = sampling.adapted_multivec(rng, config, rng.randint(0, 2), 1)
        assert is_adapted_mv(X)
        assert is_adapted_by_generators(X, 1)


def test_cartan_calculus():
    config = SpaceConfig(2, 1)
    form = DiffForm(config, {(1, 2): 1})
    assert interior(vector(config, 1), form) == DiffForm(config, {(2,): 1})
    f = DiffForm(config, {(): x1 * x2})
    assert exterior_derivative(f) == DiffForm(config, {(1,): x2, (2,): x1})
    assert exterior_derivative(exterior_derivative(f)).isZero()
    g = DiffForm(config, {(): x1 * x1})
    assert lie_derivative(vector(config, 1, x2), g) == DiffForm(config, {(): x1 * x2 * 2})


def test_normal_bundle_projection():
    config = SpaceConfig(3, 2)
    X = MultiVec(config, {(2, 3): x1 + x2, (1, 2): 1}, 2)
    xi = psi_project(X)
    assert xi == GTildeVec(config, {(2, 3): x1}, 2)
    assert embed_gtilde(xi) == MultiVec(config, {(2, 3): x1}, 2)
    with pytest.raises(ValueError):
        GTildeVec(config, {(1,): 1}, 1)


def test_mixed_ranks_have_no_rank():
    config = SpaceConfig(2, 1)
    X = vector(config, 1) + MultiVec(config, {(1, 2): 1}, 2)
    assert X.ranks() == [1, 2]
    with pytest.raises(ValueError):
        X.rank


def test_json():
    config = SpaceConfig(3, 1)
    X = MultiVec(config, {(1, 3): x2 * 5}, 2)
    assert MultiVec.fromJSON(X.toJSON()) == X
    with pytest.raises(ParseError):
        MultiVec.fromJSON({'n': 3, 'l': 1, 'rank': 1, 'terms': [{'indices': [4], 'coeff': Poly.one().toJSON()}]})


def test_wedge_of_forms_and_normal_sections():
    config = SpaceConfig(3, 2)
    dx1, dx2 = DiffForm.basis(config, (1,)), DiffForm.basis(config, (2,))
    assert wedge_forms(dx1, dx2) == DiffForm(config, {(1, 2): 1})
    assert wedge_forms(dx2, dx1) == DiffForm(config, {(1, 2): -1})
    assert not wedge_forms(dx1, dx1)
    xi = GTildeVec(config, {(2,): x1}, 1)
    eta = GTildeVec(config, {(3,): 1}, 1)
    product = gtilde_wedge(xi, eta)
    assert isinstance(product, GTildeVec)
    assert product == GTildeVec(config, {(2, 3): x1}, 2)
    assert product == psi_project(wedge(embed_gtilde(xi), embed_gtilde(eta)))
