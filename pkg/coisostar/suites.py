#!/usr/bin/env python
#
# Copyright 2026 The coisostar authors
#
# Licensed under the Apache License, Version 2.0 (the "License"); you may
# not use this file except in compliance with the License. You may obtain
# a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
# WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
# License for the specific language governing permissions and limitations
# under the License.

""" Verification suites run by `coisostar verify`.

    A suite is a function (rng, cases) yielding failures; each failure names
    the module, the identity and a serialized counterexample.
"""
import logging
import random

from coisostar import coalg, formality, hkr, koszulbar, ratpoly, sampling
from coisostar.errors import UnknownSuite
from coisostar.geometry import (
    DiffForm, MultiVec, SpaceConfig, interior, is_adapted_mv, lie_derivative, schouten, wedge)
from coisostar.hochschild import (
    btilde, gerst_product, hochschild_b, is_adapted_op, xi_project)
from coisostar.ratpoly import Poly, x

log = logging.getLogger(__name__)

SUITES = {}


def suite(name):
    """ Decorator registering a verification suite """
    def register(f):
        f._suite = name
        SUITES[name] = f
        return f
    return register


def _failure(module, invariant, *objects):
    return {'module': module, 'invariant': invariant, 'counterexample': [o.toJSON() for o in objects]}


def _sign(exponent):
    return -1 if exponent % 2 else 1


@suite('schouten-jacobi')
def schouten_jacobi(rng, cases):
    config = SpaceConfig(3, 1)
    for _ in range(cases):
        k, l, m = [rng.randint(0, 2) for _ in range(3)]
        X = sampling.multivec(rng, config, k, 2)
        Y = sampling.multivec(rng, config, l, 2)
        Z = sampling.multivec(rng, config, m, 2)
        total = (schouten(X, schouten(Y, Z)) * _sign((k - 1) * (m - 1))
                 + schouten(Y, schouten(Z, X)) * _sign((l - 1) * (k - 1))
                 + schouten(Z, schouten(X, Y)) * _sign((m - 1) * (l - 1)))
        if not total.isZero():
            yield _failure('geometry', 'graded Jacobi identity', X, Y, Z)
        if schouten(X, Y) != schouten(Y, X) * -_sign((k - 1) * (l - 1)):
            yield _failure('geometry', 'graded antisymmetry', X, Y)


@suite('schouten-leibniz')
def schouten_leibniz(rng, cases):
    config = SpaceConfig(3, 1)
    for _ in range(cases):
        k, l, m = [rng.randint(0, 2) for _ in range(3)]
        X = sampling.multivec(rng, config, k, 2)
        Y = sampling.multivec(rng, config, l, 2)
        Z = sampling.multivec(rng, config, m, 2)
        left = schouten(X, wedge(Y, Z))
        right = wedge(schouten(X, Y), Z) + wedge(Y, schouten(X, Z)) * _sign((k - 1) * l)
        if left != right:
            yield _failure('geometry', 'Leibniz rule', X, Y, Z)


@suite('lie-interior')
def lie_interior(rng, cases):
    """ [L(X), i(Y)] = i([X, Y]) on forms """
    config = SpaceConfig(3, 1)
    for _ in range(cases):
        k, l = rng.randint(0, 2), rng.randint(0, 2)
        X = sampling.multivec(rng, config, k, 2)
        Y = sampling.multivec(rng, config, l, 1)
        alpha = sampling.multivec(rng, config, rng.randint(0, 3), 1)
        form = DiffForm(config, dict(alpha.terms()))
        left = lie_derivative(X, interior(Y, form)) - interior(Y, lie_derivative(X, form)) * _sign((k - 1) * l)
        if left != interior(schouten(X, Y), form):
            yield _failure('geometry', '[L(X), i(Y)] = i([X,Y])', X, Y)


@suite('hochschild')
def hochschild_identities(rng, cases):
    config = SpaceConfig(2, 1)
    for _ in range(cases):
        phi = sampling.operator(rng, config, rng.randint(0, 2), 2, 1)
        if hochschild_b(hochschild_b(phi)):
            yield _failure('hochschild', 'b^2 = 0', phi)
        ops = [sampling.operator(rng, config, rng.randint(1, 2), 1, 1) for _ in range(3)]
        a, b, c = ops
        left = gerst_product(gerst_product(a, b), c) - gerst_product(a, gerst_product(b, c))
        right = gerst_product(gerst_product(a, c), b) - gerst_product(a, gerst_product(c, b))
        if left != right * _sign((b.arity - 1) * (c.arity - 1)):
            yield _failure('hochschild', 'Gerstenhaber identity', a, b, c)
        adapted = sampling.adapted_operator(rng, config, rng.randint(1, 2), 2, 1)
        if not is_adapted_op(hochschild_b(adapted)):
            yield _failure('hochschild', 'b preserves G_I', adapted)
        if xi_project(hochschild_b(phi)) != btilde(xi_project(phi)):
            yield _failure('hochschild', 'Xi b = b~ Xi', phi)


@suite('adapted-closure')
def adapted_closure(rng, cases):
    config = SpaceConfig(3, 2)
    for _ in range(cases):
        X = sampling.adapted_multivec(rng, config, rng.randint(0, 2), 2)
        Y = sampling.adapted_multivec(rng, config, rng.randint(0, 2), 2)
        if not is_adapted_mv(schouten(X, Y)):
            yield _failure('geometry', 'g_I closed under Schouten', X, Y)
        if not is_adapted_mv(wedge(X, Y)):
            yield _failure('geometry', 'g_I closed under wedge', X, Y)
        phi = sampling.adapted_operator(rng, config, rng.randint(1, 2), 1, 1)
        psi = sampling.adapted_operator(rng, config, rng.randint(1, 2), 1, 1)
        if not is_adapted_op(gerst_product(phi, psi)):
            yield _failure('hochschild', 'G_I closed under o_G', phi, psi)


def _barChain(rng, config, k, degree):
    variables = [ratpoly.a(i) for i in range(1, config.n + 1)]
    variables += [ratpoly.slot(j, i) for j in range(1, k + 1) for i in range(1, config.n + 1)]
    variables += [ratpoly.b(i) for i in range(1, config.n + 1)]
    return koszulbar.BarChain(config, k, sampling.poly(rng, variables, degree, 0.3))


def _koszulChain(rng, config, k, degree):
    from itertools import combinations
    variables = [ratpoly.a(i) for i in range(1, config.n + 1)]
    variables += [ratpoly.b(i) for i in range(1, config.n + 1)]
    terms = dict((s, sampling.poly(rng, variables, degree, 0.3))
                 for s in combinations(range(1, config.n + 1), k))
    return koszulbar.KoszulChain(config, k, terms)


@suite('koszul-bar')
def koszul_bar(rng, cases):
    config = SpaceConfig(2, 1)
    for _ in range(max(1, cases // 5)):
        k = rng.randint(1, 3)
        omega = _koszulChain(rng, config if k < 3 else SpaceConfig(3, 2), k, 2)
        if koszulbar.del_H(koszulbar.F(omega)) != koszulbar.F(koszulbar.del_K(omega)):
            yield {'module': 'koszulbar', 'invariant': 'F del_K = del_H F', 'counterexample': repr(omega)}
        if koszulbar.Gmap(koszulbar.F(omega)) != omega:
            yield {'module': 'koszulbar', 'invariant': 'G F = id', 'counterexample': repr(omega)}
        chain = _barChain(rng, config, k, 2)
        if koszulbar.Gmap(koszulbar.del_H(chain)) != koszulbar.del_K(koszulbar.Gmap(chain)):
            yield {'module': 'koszulbar', 'invariant': 'G del_H = del_K G', 'counterexample': repr(chain)}
        once = koszulbar.theta(chain)
        if koszulbar.theta(once) != once:
            yield {'module': 'koszulbar', 'invariant': 'Theta^2 = Theta', 'counterexample': repr(chain)}
        homotopy = koszulbar.del_H(koszulbar.s_H(chain)) + koszulbar.s_H(koszulbar.del_H(chain), k - 1)
        if homotopy != chain - once:
            yield {'module': 'koszulbar', 'invariant': 'id - Theta = del s + s del', 'counterexample': repr(chain)}


@suite('hkr')
def hkr_identities(rng, cases):
    config = SpaceConfig(2, 1)
    for _ in range(cases):
        k = rng.randint(0, 2)
        X = sampling.multivec(rng, config, k, 2)
        if hkr.pi_hkr(hkr.psi_hkr(X)) != X:
            yield _failure('hkr', 'pi psi = id', X)
        if hkr.pi_hkr(hkr.psi1(X)) != X:
            yield _failure('hkr', 'pi psi1 = id', X)
        if hochschild_b(hkr.psi1(X)):
            yield _failure('hkr', 'b psi1 = 0', X)
        A = sampling.adapted_multivec(rng, config, k, 2)
        if not is_adapted_op(hkr.psi1(A)):
            yield _failure('hkr', 'psi1(g_I) in G_I', A)
        Y = sampling.multivec(rng, config, rng.randint(1, 2), 1)
        if hkr.cup_defect(X, Y):
            yield _failure('hkr', 'pi(psi X U psi Y) = X ^ Y', X, Y)
    for _ in range(max(1, cases // 10)):
        rho = sampling.operator(rng, config, 1, 1, 1)
        exact = hochschild_b(rho)
        if hochschild_b(hkr.primitive(exact)) != exact:
            yield _failure('hkr', 'b(primitive(b rho)) = b rho', rho)
        X = sampling.adapted_multivec(rng, config, 1, 1)
        Y = sampling.adapted_multivec(rng, config, 1, 1)
        defect = hkr.bracket_defect(X, Y)
        if defect:
            yield _failure('hkr', 'pi [psi X, psi Y]_G = +- [X, Y]_S', X, Y)


def _wordsOfLength(letters, size):
    from itertools import product
    return [tuple(word) for word in product(letters, repeat=size)]


@suite('braces')
def braces(rng, cases):
    space = sampling.graded_space((0, 1, 2))
    cap = 2
    letters = [sampling.cochain(rng, space, d, (1,), 0.5) for d in (-1, 0, 1)]
    for size in range(0, 3):
        for xi in _wordsOfLength(letters, size):
            for eta in _wordsOfLength(letters, 3 - size):
                u, v = coalg.CochainWords.single(*xi), coalg.CochainWords.single(*eta)
                if coalg.bullet_K(u, v, cap) != coalg.bullet_K_coinduced(u, v, cap):
                    yield {'module': 'coalg', 'invariant': 'bullet_K formula = coinduction',
                           'counterexample': [c.toJSON() for c in xi + eta]}


@suite('obstruction')
def obstruction(rng, cases):
    algebra = coalg.GerstenhaberAlgebra.from_multivectors(SpaceConfig(2, 1), small_gerstenhaber_basis())
    h = algebra.hSpace()
    cap = 4
    d11, d2 = algebra.d11(), algebra.d2()
    if not coalg.circ_T(d2, d2, cap).isZero():
        yield {'module': 'coalg', 'invariant': 'd2 o_T d2 = 0', 'counterexample': None}
    if not coalg.circ_T(d11, d11, cap).isZero():
        yield {'module': 'coalg', 'invariant': 'd11 o_T d11 = 0', 'counterexample': None}
    if not coalg.bracket_T(d11, d2, cap).isZero():
        yield {'module': 'coalg', 'invariant': '[d11, d2]_T = 0', 'counterexample': None}
    for _ in range(max(1, cases // 25)):
        c = sampling.harrison_gcochain(rng, h, rng.randint(-1, 1), cap)
        for failure in _obstructionDiffs(algebra, c, cap):
            yield {'module': 'coalg', 'invariant': failure, 'counterexample': repr(c)}


def _obstructionDiffs(algebra, c, cap):
    """ Names of the identities of D_CE and D_Har failing on c """
    ce = coalg.obstruction_diffs(algebra, c, 'CE', cap)
    har = coalg.obstruction_diffs(algebra, c, 'Har', cap)
    if not coalg.obstruction_diffs(algebra, ce, 'CE', cap).isZero():
        yield 'D_CE^2 = 0'
    if not coalg.obstruction_diffs(algebra, har, 'Har', cap).isZero():
        yield 'D_Har^2 = 0'
    mixed = coalg.obstruction_diffs(algebra, har, 'CE', cap) + coalg.obstruction_diffs(algebra, ce, 'Har', cap)
    if not mixed.isZero():
        yield 'D_CE D_Har + D_Har D_CE = 0'
    hat = coalg.word_component(c, cap)
    dhat = coalg.word_component(algebra.d2(), cap)
    if coalg.word_component(har, cap) != coalg.harrison_cobord(hat, dhat, cap) * -_sign(c.degree):
        yield 'D_Har on one word = Harrison cobord'


def small_gerstenhaber_basis():
    """ Span of x1 d1, x2 d1, x2 d2, x1 x2 d1^d2, x2^2 d1^d2 on R^2 """
    config = SpaceConfig(2, 1)
    x1, x2 = Poly.var(x(1)), Poly.var(x(2))
    return [
        ('e1', MultiVec(config, {(1,): x1})),
        ('e2', MultiVec(config, {(1,): x2})),
        ('e3', MultiVec(config, {(2,): x2})),
        ('f1', MultiVec(config, {(1, 2): x1 * x2})),
        ('f2', MultiVec(config, {(1, 2): x2 * x2})),
    ]


@suite('perturbation')
def perturbation(rng, cases):
    config = SpaceConfig(2, 1)
    transfer = formality.perturb(config, 2)
    for _ in range(cases):
        k, l = rng.randint(0, 2), rng.randint(0, 2)
        X = sampling.adapted_multivec(rng, config, k, 1)
        Y = sampling.adapted_multivec(rng, config, l, 1)
        if transfer.dprime([X, Y]) != schouten(X, Y) * _sign((k - 1) * l):
            yield _failure('formality', "d'2 = Schouten bracket", X, Y)


def _poisson(config, terms):
    return MultiVec(config, terms, 2)


@suite('star-products')
def star_products(rng, cases):
    config = SpaceConfig(2, 1)
    P = _poisson(config, {(2, 1): 1})
    report = formality.verify_star(formality.standard_ordered_product(P, 4), P)
    if not report['passed']:
        yield {'module': 'formality', 'invariant': 'standard ordered product', 'counterexample': report}
    weyl = formality.verify_star(formality.moyal_product(_poisson(config, {(1, 2): 1}), 2),
                                 _poisson(config, {(1, 2): 1}))
    expected = [name for name, ok in sorted(weyl['checks'].items()) if not ok]
    if expected != ['adapted']:
        yield {'module': 'formality', 'invariant': 'Moyal product fails only adaptedness', 'counterexample': weyl}


@suite('cohomology')
def cohomology(rng, cases):
    expected = [
        ((2, 1), 'A', 0, 6), ((2, 1), 'A', 1, 12), ((2, 1), 'A', 2, 6),
        ((3, 2), 'DAB', 1, 0), ((3, 2), 'DAB', 2, 0), ((2, 1), 'DBB', 2, 0),
    ]
    for (n, l), tag, k, dim in expected:
        result = koszulbar.truncated_cohomology(SpaceConfig(n, l), tag, k, 2, 2)
        if result.dimension != dim:
            yield {'module': 'koszulbar', 'invariant': 'dim H^%d(%s) = %d' % (k, tag, dim),
                   'counterexample': result.toJSON()}


def run_suite(name, seed=7, cases=50):
    """ SuiteReport for one suite or for all of them in name order """
    names = sorted(SUITES) if name == 'all' else [name]
    for each in names:
        if each not in SUITES:
            raise UnknownSuite('unknown suite %r, expected one of %s' % (each, ', '.join(sorted(SUITES))))
    failures = []
    for each in names:
        log.info('running suite %s (seed %d, %d cases)', each, seed, cases)
        rng = random.Random(seed)
        for failure in SUITES[each](rng, cases):
            failure['suite'] = each
            failures.append(failure)
    return {'suite': name, 'seed': seed, 'cases': cases, 'suites': names,
            'failures': failures, 'passed': not failures}
