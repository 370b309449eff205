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

""" Hochschild-Kostant-Rosenberg maps between polyvector fields and
    polydifferential operators, primitives of exact cocycles and the
    harmonic decomposition phi = psi1(pi(phi)) + b(primitive).
"""
import itertools
import logging
from fractions import Fraction
from math import factorial

import sympy

from coisostar import koszulbar
from coisostar.errors import NotACocycle, NotExact, VerificationFailure
from coisostar.geometry import GTildeVec, MultiVec, _monomials, embed_gtilde, sortSign, wedge, schouten
from coisostar.hochschild import (
    GTildeOp, PolyDiffOp, btilde, cup, gerst_bracket, hochschild_b, is_adapted_op, isTransversalIndex,
    unitIndex, xi_project)
from coisostar.ratpoly import Poly

log = logging.getLogger(__name__)


def _antisymmetrized(indices, n):
    """ (1/k!) sum_sigma sgn(sigma) d_{sigma(1)} x ... x d_{sigma(k)} as {key: Fraction} """
    k = len(indices)
    result = {}
    for perm in itertools.permutations(range(k)):
        sign, _ = sortSign(perm)
        key = tuple(unitIndex(indices[p], n) for p in perm)
        result[key] = result.get(key, 0) + Fraction(sign, factorial(k))
    return result


def psi_hkr(X):
    config = X.config
    terms = {}
    for s, f in X.terms():
        for key, c in _antisymmetrized(s, config.n).items():
            terms[key] = terms.get(key, Poly()) + f * c
    arity = X.rank
    return PolyDiffOp(config, arity, terms)


def pi_hkr(phi):
    """ Keep the terms of order one in every argument and wedge them """
    config = phi.config
    terms = {}
    for key, c in phi.terms():
        if any(sum(counts) != 1 for counts in key):
            continue
        indices = tuple(counts.index(1) + 1 for counts in key)
        sign, sorted_ = sortSign(indices)
        if sign:
            terms[sorted_] = terms.get(sorted_, Poly()) + c * sign
    return MultiVec(config, terms, max(phi.arity, 0))


def psi1(X):
    """ HKR section adapted to C: transversal derivatives leftmost,
        each block antisymmetrized on its own.
    """
    config = X.config
    terms = {}
    for s, f in X.terms():
        normal = tuple(i for i in s if config.isTransversal(i))
        tangent = tuple(i for i in s if not config.isTransversal(i))
        sign, _ = sortSign(normal + tangent)
        left = _antisymmetrized(normal, config.n)
        right = _antisymmetrized(tangent, config.n)
        for k1, c1 in left.items():
            for k2, c2 in right.items():
                key = k1 + k2
                terms[key] = terms.get(key, Poly()) + f * (c1 * c2 * sign)
    return PolyDiffOp(config, X.rank, terms)


def pair_form(P):
    """ The bidifferential operator (f, g) -> P(df, dg) of a bivector """
    return psi_hkr(P) * 2


def bracket_defect(X, Y):
    """ pi([psi X, psi Y]_G) - (-1)^{(k-1)(l-1)} [X, Y]_S, zero for all X, Y """
    k, l = X.rank, Y.rank
    sign = -1 if (k - 1) * (l - 1) % 2 else 1
    return pi_hkr(gerst_bracket(psi_hkr(X), psi_hkr(Y))) - schouten(X, Y) * sign


def cup_defect(X, Y):
    return pi_hkr(cup(psi_hkr(X), psi_hkr(Y))) - wedge(X, Y)


def psi1_bracket_defect(X, Y):
    """ Decomposition of [psi1 X, psi1 Y]_G - (-1)^{(k-1)(l-1)} psi1([X, Y]_S).

        The harmonic part vanishes and the primitive measures how far psi1
        is from a morphism of brackets on the nose.
    """
    k, l = X.rank, Y.rank
    sign = -1 if (k - 1) * (l - 1) % 2 else 1
    return decompose(gerst_bracket(psi1(X), psi1(Y)) - psi1(schouten(X, Y)) * sign)


def psi1_cup_defect(X, Y):
    """ Decomposition of psi1 X U psi1 Y - psi1(X ^ Y), an exact cocycle """
    return decompose(cup(psi1(X), psi1(Y)) - psi1(wedge(X, Y)))


class HkrDecomposition(object):
    """ phi = psi1(harmonic) + b(primitive) """
    def __init__(self, harmonic, primitive):
        self.harmonic = harmonic
        self.primitive = primitive

    def toJSON(self):
        return {
            'harmonic': self.harmonic.toJSON(),
            'primitive': self.primitive.toJSON() if self.primitive is not None else None,
        }


def _vector(op):
    """ Coordinates of an operator as {(key, monomial): Fraction} """
    coords = {}
    for key, c in op.terms():
        for mono, value in c.terms():
            coords[(key, mono)] = value
    return coords


def _normalFormBasis(config, arity, maxOrder, maxDegree):
    """ Basis of the normal forms of G/G_I: last multi-index transversal, coefficients in x' """
    monomials = _monomials(config.tangentialVars(), maxDegree)
    basis = []
    if arity == 0:
        return [GTildeOp(config, 0, {(): m}) for m in monomials]
    for total in range(maxOrder + 1):
        for key in koszulbar._indexTuples(config.n, arity, total):
            if not isTransversalIndex(config, key[-1]):
                continue
            basis.extend(GTildeOp(config, arity, {key: m}) for m in monomials)
    return basis


def _normalBundleBasis(config, rank, maxDegree):
    monomials = _monomials(config.tangentialVars(), maxDegree)
    return [GTildeVec(config, {s: m}, rank)
            for s in itertools.combinations(config.transversal(), rank) for m in monomials]


def _adaptedCorrection(xi0, extra=0):
    """ Solve Xi psi1(Y) + b~ rho = Xi xi0 for Y in g~ and rho in G~, exactly. """
    config = xi0.config
    target = xi_project(xi0)
    m = xi0.arity
    maxOrder = target.maxOrder() + extra
    maxDegree = max(target.coefficientDegree(), 0) + extra
    columns = []
    for Y in _normalBundleBasis(config, m, maxDegree):
        columns.append(('Y', Y, _vector(xi_project(psi1(embed_gtilde(Y))))))
    if m >= 1:
        for rho in _normalFormBasis(config, m - 1, maxOrder, maxDegree):
            columns.append(('rho', rho, _vector(btilde(rho))))
    rows = sorted(set(k for _, _, v in columns for k in v) | set(_vector(target)))
    index = dict((k, r) for r, k in enumerate(rows))
    matrix = sympy.zeros(len(rows), len(columns))
    for col, (_, _, vector) in enumerate(columns):
        for k, c in vector.items():
            matrix[index[k], col] = sympy.Rational(c.numerator, c.denominator)
    rhs = sympy.zeros(len(rows), 1)
    for k, c in _vector(target).items():
        rhs[index[k], 0] = sympy.Rational(c.numerator, c.denominator)
    log.debug('adapted correction: %d unknowns, %d equations', len(columns), len(rows))
    try:
        solution, params = matrix.gauss_jordan_solve(rhs)
    except ValueError:
        return None
    solution = solution.subs(dict((p, 0) for p in params))
    correction = PolyDiffOp.zero(config, m)
    for (kind, value, _), c in zip(columns, solution):
        if c == 0:
            continue
        c = Fraction(int(c.p), int(c.q))
        if kind == 'Y':
            correction = correction + psi1(embed_gtilde(value)) * c
        else:
            correction = correction + hochschild_b(value.lift()) * c
    return xi0 - correction


def primitive(phi, adapted=None):
    """ xi with b(xi) = phi for an exact cocycle phi; adapted when phi is
        (or when adapted=True).
    """
    config = phi.config
    if phi.arity <= 0:
        if phi:
            raise NotExact(MultiVec.function(config, phi.coefficient(())))
        return PolyDiffOp.zero(config, phi.arity - 1)
    if hochschild_b(phi):
        raise NotACocycle('b(phi) does not vanish')
    cls = pi_hkr(phi)
    if cls:
        raise NotExact(cls)
    xi = koszulbar.dual_s('A', phi)
    if hochschild_b(xi) != phi:
        raise VerificationFailure('b(s* phi) != phi', phi.toJSON())
    if adapted is None:
        adapted = is_adapted_op(phi)
    if adapted and not is_adapted_op(xi):
        corrected = _adaptedCorrection(xi)
        if corrected is None:
            log.debug('adapted correction infeasible, enlarging caps')
            corrected = _adaptedCorrection(xi, extra=1)
        if corrected is None:
            raise VerificationFailure('no adapted primitive within caps', phi.toJSON())
        xi = corrected
        if hochschild_b(xi) != phi or not is_adapted_op(xi):
            raise VerificationFailure('adapted primitive check failed', phi.toJSON())
    return xi


def decompose(phi):
    config = phi.config
    if phi.arity == 0:
        return HkrDecomposition(MultiVec.function(config, phi.coefficient(())), None)
    if hochschild_b(phi):
        raise NotACocycle('b(phi) does not vanish')
    harmonic = pi_hkr(phi)
    rest = phi - psi1(harmonic)
    prim = primitive(rest, adapted=is_adapted_op(phi))
    if hochschild_b(prim) + psi1(harmonic) != phi:
        raise VerificationFailure('decomposition does not add up', phi.toJSON())
    return HkrDecomposition(harmonic, prim)
