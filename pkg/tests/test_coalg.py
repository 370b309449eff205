import random
from fractions import Fraction

import pytest

from coisostar import coalg, ratpoly, sampling, suites
from coisostar.coalg import Cochain, GradedSpace
from coisostar.errors import CapExceeded, NonAssociative, NotHarrison
from coisostar.geometry import MultiVec, SpaceConfig
from coisostar.hochschild import GradedAlgebra
from coisostar.ratpoly import Poly


space = sampling.graded_space((0, 1, 2))
odd = GradedSpace([('p', 1), ('q', 1), ('r', 2)])


def test_graded_space():
    assert space.names() == ['a', 'b', 'c']
    assert space.wordDegree(('b', 'c')) == 3
    assert space.shifted(1).degree('a') == -1
    assert GradedSpace.fromJSON(space.toJSON()) == space
    assert len(list(space.words(2))) == 3 + 9
    with pytest.raises(ValueError):
        GradedSpace([('a', 0), ('a', 1)])


def test_koszul_signs():
    assert coalg.koszulSign([1, 1], (1, 0)) == -1
    assert coalg.koszulSign([1, 2], (1, 0)) == 1
    assert coalg.sortWord(odd, ('q', 'p')) == (-1, ('p', 'q'))
    assert coalg.sortWord(odd, ('r', 'p')) == (1, ('p', 'r'))
    assert coalg.sortWord(odd, ('p', 'p'))[0] == 0


def test_shuffle_products():
    assert coalg.shuffle(space, ('a',), ('c',)) == {('a', 'c'): 1, ('c', 'a'): 1}
    assert coalg.shuffle(odd, ('p',), ('q',)) == {('p', 'q'): 1, ('q', 'p'): -1}
    assert coalg.shuffle(space, ('b',), ('b',)) == {}
    assert len(coalg.shuffle(space, ('a', 'b'), ('c',))) == 3


def test_deconcatenation():
    assert coalg.deconcat(('a', 'b')) == {((), ('a', 'b')): 1, (('a',), ('b',)): 1, (('a', 'b'), ()): 1}


def test_cochain_degree_is_checked():
    Cochain(space, 1, {('a',): {'b': 1}})
    with pytest.raises(ValueError):
        Cochain(space, 0, {('a',): {'b': 1}})


def test_symmetric_cochains_use_koszul_signs():
    phi = Cochain(odd, 0, {('q', 'p'): {'r': 1}}, symmetric=True)
    assert phi.value(('q', 'p')) == {'r': 1}
    assert phi.value(('p', 'q')) == {'r': -1}
    assert phi.value(('p', 'p')) == {}


def test_cochain_json():
    phi = Cochain(space, 1, {('a', 'b'): {'c': Fraction(1, 3)}})
    assert Cochain.fromJSON(phi.toJSON()) == phi


def test_gerstenhaber_bracket_jacobi_identity():
    rng = random.Random(13)
    cap = 3
    for _ in range(5):
        d1, d2, d3 = [sampling.cochain(rng, space, rng.randint(-1, 1), (1, 2)) for _ in range(3)]
        sign = -1 if d1.degree * d2.degree % 2 else 1
        left = coalg.bracket_G(d1, coalg.bracket_G(d2, d3, cap), cap)
        right = (coalg.bracket_G(coalg.bracket_G(d1, d2, cap), d3, cap)
                 + coalg.bracket_G(d2, coalg.bracket_G(d1, d3, cap), cap) * sign)
        assert left == right


def test_single_brace_is_gerstenhaber_composition():
    rng = random.Random(21)
    phi = sampling.cochain(rng, space, 1, (1, 2))
    psi = sampling.cochain(rng, space, 0, (1, 2))
    assert coalg.braces(phi, [psi], 3) == coalg.circ_G(phi, psi, 3)
    assert coalg.braces(phi, [], 2) == phi


def two_letter_algebra(uu):
    algebra_space = GradedSpace([('u', 0), ('v', 1)])
    return GradedAlgebra(algebra_space, {('u', 'u'): {'u': uu}, ('u', 'v'): {'v': 1}, ('v', 'u'): {'v': uu}})


def test_shifted_multiplication_squares_to_zero_iff_associative():
    m = coalg.shifted_multiplication(two_letter_algebra(1))
    assert m.degree == 1
    assert coalg.circ_G(m, m, 3).isZero()
    broken = coalg.shifted_multiplication(two_letter_algebra(2))
    assert not coalg.circ_G(broken, broken, 3).isZero()


def test_harrison_cochains():
    rng = random.Random(4)
    d = sampling.harrison_cochain(rng, space, 0)
    assert coalg.is_harrison(d, 2)
    square = Cochain(space, 0, {('a', 'a'): {'a': 1}})
    assert not coalg.is_harrison(square, 2)
    with pytest.raises(NotHarrison):
        coalg.circ_H(square, d, 2)


def test_gerstenhaber_algebra_of_multivectors():
    algebra = coalg.GerstenhaberAlgebra.from_multivectors(SpaceConfig(2, 1), suites.small_gerstenhaber_basis())
    assert algebra.space.degree('f1') == 2
    assert algebra.product[('e1', 'e3')] == {'f1': 1}
    assert ('e1', 'e2') not in algebra.product
    assert algebra.bracket[('e2', 'e3')] == {'e2': -1}
    assert algebra.hSpace().degree('e1') == 0


def test_gerstenhaber_algebra_needs_a_closed_basis():
    config = SpaceConfig(2, 1)
    x1 = Poly.var(ratpoly.x(1))
    basis = [('e', MultiVec(config, {(1,): 1}, 1)), ('f', MultiVec(config, {(1, 2): x1}, 2))]
    with pytest.raises(ValueError):
        coalg.GerstenhaberAlgebra.from_multivectors(config, basis)


@pytest.mark.slow
def test_brace_formula_matches_coinduction():
    assert suites.run_suite('braces', seed=1, cases=1)['passed']


@pytest.mark.slow
def test_obstruction_differentials():
    assert suites.run_suite('obstruction', seed=2, cases=25)['passed']


def test_b_K_on_single_letters():
    rng = random.Random(17)
    m = coalg.shifted_multiplication(two_letter_algebra(1))
    for degree in (-1, 0, 1):
        phi = sampling.cochain(rng, m.space, degree, (1, 2))
        u = coalg.CochainWords.single(phi)
        once = coalg.b_K(m, u, 3)
        assert once == coalg.CochainWords.single(coalg.bracket_G(m, phi, 3))
        assert once == coalg.b_K_commutator(m, u, 3)
        assert coalg.b_K(m, once, 3).isZero()


def test_b_K_needs_an_associative_product():
    broken = coalg.shifted_multiplication(two_letter_algebra(2))
    with pytest.raises(NonAssociative):
        coalg.b_K(broken, coalg.CochainWords.single(broken), 3)


def sign(exponent):
    return -1 if exponent % 2 else 1


def add(*tensors):
    result = {}
    for tensor in tensors:
        for key, c in tensor.items():
            result[key] = result.get(key, 0) + c
    return dict((key, c) for key, c in result.items() if c)


def pairs(left, right, c=1):
    return dict(((u, v), cu * cv * c) for u, cu in left.items() for v, cv in right.items())


def delta(tensor):
    return add(*[pairs({u: 1}, {v: 1}, c * d) for word, c in tensor.items()
                 for (u, v), d in coalg.deconcat(word).items()])


def test_signature():
    assert coalg.signature(space, ('b', 'b'), (1, 0)) == -1
    assert coalg.signature(space, ('a', 'c'), (1, 0)) == 1
    assert coalg.signature(space, ('b', 'c', 'b'), (2, 0, 1)) == -1
    assert coalg.signature(odd, ('p', 'q', 'r'), (0, 1, 2)) == 1


def test_deconcatenation_is_coassociative():
    for word in space.words(3):
        left = add(*[dict(((a, b, v), 1) for (a, b) in coalg.deconcat(u)) for (u, v) in coalg.deconcat(word)])
        right = add(*[dict(((u, a, b), 1) for (a, b) in coalg.deconcat(v)) for (u, v) in coalg.deconcat(word)])
        assert left == right


def test_deconcatenation_is_compatible_with_shuffles():
    for u in odd.words(2):
        for v in odd.words(2):
            expected = add(*[pairs(coalg.shuffle(odd, u[:i], v[:j]), coalg.shuffle(odd, u[i:], v[j:]),
                                   sign(odd.wordDegree(u[i:]) * odd.wordDegree(v[:j])))
                             for i in range(len(u) + 1) for j in range(len(v) + 1)])
            assert delta(coalg.shuffle(odd, u, v)) == expected


def test_shift_round_trip():
    rng = random.Random(8)
    for arity in (2, 3):
        phi = sampling.cochain(rng, space, rng.randint(-1, 1), (arity,))
        there = coalg.shift(phi, 1)
        assert there.space == space.shifted(1)
        assert there.degree == phi.degree + arity - 1
        back = coalg.shift(there, -1)
        assert back.space == space
        assert back == phi


def test_coinduced_morphism_respects_deconcatenation():
    rng = random.Random(5)
    phi = sampling.cochain(rng, space, 0, (1, 2))
    F = coalg.coinduce_morphism(phi, cap=3)
    for word in space.words(3):
        expected = add(*[pairs(F(word[:i]), F(word[i:])) for i in range(len(word) + 1)])
        assert delta(F(word)) == expected


def test_coinduced_coderivation_respects_deconcatenation():
    rng = random.Random(6)
    for along in (None, sampling.cochain(rng, space, 0, (1, 2))):
        d = sampling.cochain(rng, space, 1, (1, 2))
        D = coalg.coinduce_coderivation(d, along, cap=3)
        if along is None:
            F = lambda word: {tuple(word): 1}
        else:
            F = coalg.coinduce_morphism(along, cap=3)
        for word in space.words(3):
            terms = []
            for i in range(len(word) + 1):
                u, v = word[:i], word[i:]
                terms.append(pairs(D(u), F(v)))
                terms.append(pairs(F(u), D(v), sign(d.degree * space.wordDegree(u))))
            assert delta(D(word)) == add(*terms)


def test_nijenhuis_richardson_bracket_jacobi_identity():
    rng = random.Random(31)
    cap = 3
    for _ in range(3):
        d1, d2, d3 = [sampling.symmetric_cochain(rng, space, rng.randint(-1, 1), (1, 2)) for _ in range(3)]
        s = sign(d1.degree * d2.degree)
        left = coalg.bracket_NR(d1, coalg.bracket_NR(d2, d3, cap), cap)
        right = (coalg.bracket_NR(coalg.bracket_NR(d1, d2, cap), d3, cap)
                 + coalg.bracket_NR(d2, coalg.bracket_NR(d1, d3, cap), cap) * s)
        assert left == right


def test_harrison_bracket_jacobi_identity():
    rng = random.Random(32)
    cap = 2
    for _ in range(3):
        d1, d2, d3 = [sampling.harrison_cochain(rng, space, rng.randint(-1, 1)) for _ in range(3)]
        s = sign(d1.degree * d2.degree)
        left = coalg.bracket_H(d1, coalg.bracket_H(d2, d3, cap), cap)
        right = (coalg.bracket_H(coalg.bracket_H(d1, d2, cap), d3, cap)
                 + coalg.bracket_H(d2, coalg.bracket_H(d1, d3, cap), cap) * s)
        assert left == right


def gerstenhaber_algebra():
    return coalg.GerstenhaberAlgebra.from_multivectors(SpaceConfig(2, 1), suites.small_gerstenhaber_basis())


@pytest.mark.slow
def test_gword_bracket_jacobi_identity():
    rng = random.Random(33)
    cap = 3
    algebra = gerstenhaber_algebra()
    d11, d2 = algebra.d11(), algebra.d2()
    c = sampling.harrison_gcochain(rng, algebra.hSpace(), 0, cap)
    left = coalg.bracket_T(d11, coalg.bracket_T(d2, c, cap), cap)
    right = (coalg.bracket_T(coalg.bracket_T(d11, d2, cap), c, cap)
             - coalg.bracket_T(d2, coalg.bracket_T(d11, c, cap), cap))
    assert left == right


@pytest.mark.slow
def test_obstruction_differentials_square_to_zero():
    rng = random.Random(34)
    cap = 3
    algebra = gerstenhaber_algebra()
    assert coalg.bracket_T(algebra.d11(), algebra.d2(), cap).isZero()
    for degree in (-1, 0, 1):
        c = sampling.harrison_gcochain(rng, algebra.hSpace(), degree, cap)
        ce = coalg.obstruction_diffs(algebra, c, 'CE', cap)
        har = coalg.obstruction_diffs(algebra, c, 'Har', cap)
        assert coalg.obstruction_diffs(algebra, ce, 'CE', cap).isZero()
        assert coalg.obstruction_diffs(algebra, har, 'Har', cap).isZero()
        mixed = coalg.obstruction_diffs(algebra, har, 'CE', cap) + coalg.obstruction_diffs(algebra, ce, 'Har', cap)
        assert mixed.isZero()


def test_bullet_K_is_associative():
    rng = random.Random(35)
    cap = 2
    letters = [sampling.cochain(rng, space, d, (1,)) for d in (-1, 0, 1)]
    u = coalg.CochainWords.single(letters[0], letters[1])
    v = coalg.CochainWords.single(letters[2])
    w = coalg.CochainWords.single(letters[1], letters[0])
    left = coalg.bullet_K(coalg.bullet_K(u, v, cap), w, cap)
    right = coalg.bullet_K(u, coalg.bullet_K(v, w, cap), cap)
    assert left == right


def test_b_K_on_words_of_two_letters():
    rng = random.Random(36)
    cap = 3
    m = coalg.shifted_multiplication(two_letter_algebra(1))
    for degrees in ((0, 1), (-1, 0), (1, 1)):
        phi, psi = [sampling.cochain(rng, m.space, d, (1, 2)) for d in degrees]
        u = coalg.CochainWords.single(phi, psi)
        once = coalg.b_K(m, u, cap)
        assert once == coalg.b_K_commutator(m, u, cap)
        assert coalg.b_K(m, once, cap).isZero()


def test_b_K_is_a_derivation_of_bullet_K():
    rng = random.Random(37)
    cap = 3
    m = coalg.shifted_multiplication(two_letter_algebra(1))
    phi, psi, chi = [sampling.cochain(rng, m.space, d, (1, 2)) for d in (0, 1, -1)]
    u = coalg.CochainWords.single(phi, psi)
    v = coalg.CochainWords.single(chi)
    left = coalg.b_K(m, coalg.bullet_K(u, v, cap), cap)
    right = (coalg.bullet_K(coalg.b_K(m, u, cap), v, cap)
             + coalg.bullet_K(u, coalg.b_K(m, v, cap), cap) * sign(phi.degree + psi.degree))
    assert left == right


def test_cap_is_enforced():
    long = Cochain(space, 0, {('a', 'a', 'a'): {'a': 1}})
    short = Cochain(space, 1, {('a',): {'b': 1}})
    with pytest.raises(CapExceeded):
        coalg.circ_G(long, short, 2)
    with pytest.raises(CapExceeded):
        coalg.circ_G(short, long, 2)
    with pytest.raises(CapExceeded):
        coalg.coinduce_morphism(long, cap=2)
    F = coalg.coinduce_morphism(Cochain(space, 0, {('a',): {'a': 1}}), cap=2)
    with pytest.raises(CapExceeded):
        F(('a', 'b', 'c'))
    D = coalg.coinduce_coderivation(short, cap=2)
    with pytest.raises(CapExceeded):
        D(('a', 'a', 'a'))
    algebra = gerstenhaber_algebra()
    with pytest.raises(CapExceeded):
        coalg.circ_T(algebra.d2(), algebra.d2(), 1)
    with pytest.raises(CapExceeded):
        coalg.obstruction_diffs(algebra, algebra.d11(), 'Har', 1)
