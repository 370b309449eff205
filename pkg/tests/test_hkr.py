import random

import pytest

from coisostar import hkr, ratpoly, sampling
from coisostar.errors import NotACocycle, NotExact
from coisostar.geometry import MultiVec, SpaceConfig, schouten, wedge
from coisostar.hochschild import PolyDiffOp, cup, gerst_bracket, hochschild_b, is_adapted_op, unitIndex
from coisostar.ratpoly import Poly


x1 = Poly.var(ratpoly.x(1))
x2 = Poly.var(ratpoly.x(2))
config = SpaceConfig(2, 1)
d1, d2 = unitIndex(1, 2), unitIndex(2, 2)


def test_psi1_puts_transversal_derivatives_first():
    P = MultiVec(config, {(2, 1): 1}, 2)
    assert hkr.psi1(P) == PolyDiffOp(config, 2, {(d2, d1): 1})
    assert hkr.psi_hkr(P) == PolyDiffOp(config, 2, {(d2, d1): Poly.const(1) / 2, (d1, d2): -Poly.const(1) / 2})


def test_pair_form_is_antisymmetrized_psi1():
    P = MultiVec(config, {(1, 2): x2 * x1}, 2)
    C1 = hkr.psi1(P)
    assert C1 - C1.swap() == hkr.pair_form(P)
    assert hkr.pair_form(P).apply([x1, x2]) == x1 * x2


def test_sections_of_pi():
    rng = random.Random(1)
    for _ in range(10):
        X = sampling.multivec(rng, config, rng.randint(0, 2), 2)
        assert hkr.pi_hkr(hkr.psi_hkr(X)) == X
        assert hkr.pi_hkr(hkr.psi1(X)) == X
        assert hochschild_b(hkr.psi1(X)).isZero()


def test_psi1_keeps_adapted_multivectors_adapted():
    rng = random.Random(4)
    for _ in range(10):
        X = sampling.adapted_multivec(rng, SpaceConfig(3, 2), rng.randint(0, 2), 1)
        assert is_adapted_op(hkr.psi1(X))


def test_bracket_and_cup_defects_vanish():
    X = MultiVec(config, {(1,): x2 * x2}, 1)
    Y = MultiVec(config, {(1, 2): x1}, 2)
    assert hkr.bracket_defect(X, Y).isZero()
    assert hkr.cup_defect(X, Y).isZero()


def test_primitive_of_a_coboundary():
    rho = PolyDiffOp(config, 1, {((2, 0),): x2})
    exact = hochschild_b(rho)
    xi = hkr.primitive(exact)
    assert hochschild_b(xi) == exact


def test_adapted_primitive():
    rho = PolyDiffOp(config, 1, {((0, 2),): x2})
    exact = hochschild_b(rho)
    assert is_adapted_op(exact)
    xi = hkr.primitive(exact)
    assert hochschild_b(xi) == exact
    assert is_adapted_op(xi)


def test_primitive_rejects_classes_and_non_cocycles():
    with pytest.raises(NotExact):
        hkr.primitive(hkr.psi1(MultiVec(config, {(1, 2): 1}, 2)))
    with pytest.raises(NotACocycle):
        hkr.primitive(PolyDiffOp(config, 2, {((2, 0), (0, 0)): 1}))


def test_decompose_splits_harmonic_part():
    X = MultiVec(config, {(1, 2): x1}, 2)
    phi = hkr.psi1(X) + hochschild_b(PolyDiffOp(config, 1, {((2, 0),): 1}))
    split = hkr.decompose(phi)
    assert split.harmonic == X
    assert hochschild_b(split.primitive) + hkr.psi1(split.harmonic) == phi
    assert set(split.toJSON()) == set(['harmonic', 'primitive'])


def test_psi1_bracket_defect_is_exact():
    X = MultiVec(config, {(1, 2): 1}, 2)
    Y = MultiVec(config, {(2,): x2}, 1)
    defect = gerst_bracket(hkr.psi1(X), hkr.psi1(Y)) - hkr.psi1(schouten(X, Y))
    split = hkr.psi1_bracket_defect(X, Y)
    assert split.harmonic.isZero()
    assert is_adapted_op(split.primitive)
    assert hochschild_b(split.primitive) == defect
    flipped = gerst_bracket(hkr.psi1(X), hkr.psi1(Y)) + hkr.psi1(schouten(X, Y))
    assert not hkr.decompose(flipped).harmonic.isZero()


def test_psi1_bracket_defect_on_random_multivectors():
    rng = random.Random(12)
    for _ in range(3):
        k, l = rng.randint(1, 2), rng.randint(1, 2)
        X = sampling.adapted_multivec(rng, config, k, 1)
        Y = sampling.adapted_multivec(rng, config, l, 1)
        sign = -1 if (k - 1) * (l - 1) % 2 else 1
        defect = gerst_bracket(hkr.psi1(X), hkr.psi1(Y)) - hkr.psi1(schouten(X, Y)) * sign
        split = hkr.psi1_bracket_defect(X, Y)
        assert split.harmonic.isZero()
        assert hochschild_b(split.primitive) == defect


def test_psi1_cup_defect_is_exact():
    X = MultiVec(config, {(1,): 1}, 1)
    Y = MultiVec(config, {(2,): 1}, 1)
    defect = cup(hkr.psi1(X), hkr.psi1(Y)) - hkr.psi1(wedge(X, Y))
    assert not defect.isZero()
    split = hkr.psi1_cup_defect(X, Y)
    assert split.harmonic.isZero()
    assert hochschild_b(split.primitive) == defect
