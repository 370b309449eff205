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

""" Seeded random samples shared by the test suite and the verify suites """
import itertools
from fractions import Fraction

from coisostar.coalg import Cochain, GCochain, GradedSpace, gwords, vadd, vscale
from coisostar.geometry import MultiVec, _monomials
from coisostar.hochschild import PolyDiffOp, isTransversalIndex
from coisostar.ratpoly import Poly
from coisostar.koszulbar import _indexTuples


def coefficient(rng, size=3):
    return Fraction(rng.randint(-size, size))


def poly(rng, variables, degree, density=0.5):
    """ Random polynomial of degree <= degree with small integer coefficients """
    result = Poly()
    for m in _monomials(variables, degree):
        if rng.random() < density:
            result = result + m * coefficient(rng)
    return result


def multivec(rng, config, rank, degree, density=0.5):
    terms = {}
    for s in itertools.combinations(range(1, config.n + 1), rank):
        terms[s] = poly(rng, config.coords(), degree, density)
    return MultiVec(config, terms, rank)


def adapted_multivec(rng, config, rank, degree, density=0.5):
    """ Random element of g_I: all transversal coefficients lie in I """
    X = multivec(rng, config, rank, degree, density)
    terms = {}
    for s, f in X.terms():
        if all(config.isTransversal(i) for i in s):
            f = f - config.restrictToC(f)
        terms[s] = f
    return MultiVec(config, terms, rank)


def operator(rng, config, arity, maxOrder, degree, density=0.3):
    terms = {}
    if arity == 0:
        return PolyDiffOp(config, 0, {(): poly(rng, config.coords(), degree, density)})
    for total in range(maxOrder + 1):
        for key in _indexTuples(config.n, arity, total):
            if rng.random() < density:
                terms[key] = poly(rng, config.coords(), degree, density)
    return PolyDiffOp(config, arity, terms)


def adapted_operator(rng, config, arity, maxOrder, degree, density=0.3):
    """ Random element of G_I """
    op = operator(rng, config, arity, maxOrder, degree, density)
    terms = {}
    for key, c in op.terms():
        if not key or isTransversalIndex(config, key[-1]):
            c = c - config.restrictToC(c)
        terms[key] = c
    return PolyDiffOp(config, arity, terms)


def graded_space(degrees=(0, 1, 2)):
    """ One basis letter per degree, named a, b, c, ... """
    return GradedSpace([(chr(ord('a') + i), d) for i, d in enumerate(degrees)])


def _randomVector(rng, space, degree, density):
    vector = {}
    for name in space.names():
        if space.degree(name) == degree and rng.random() < density:
            vector[name] = coefficient(rng)
    return dict((k, v) for k, v in vector.items() if v)


def cochain(rng, space, degree, arities, density=0.5):
    """ Random multilinear map of the given degree, supported on the given arities """
    table = {}
    for k in arities:
        for word in space.words(k, k):
            value = _randomVector(rng, space, degree + space.wordDegree(word), density)
            if value:
                table[word] = value
    return Cochain(space, degree, table)


def symmetric_cochain(rng, space, degree, arities, density=0.5):
    table = {}
    for k in arities:
        for word in itertools.combinations_with_replacement(space.names(), k):
            value = _randomVector(rng, space, degree + space.wordDegree(word), density)
            if value:
                table[word] = value
    return Cochain(space, degree, table, symmetric=True)


def harrison_cochain(rng, space, degree, density=0.5):
    """ Random cochain on words of length <= 2 vanishing on shuffle products """
    table = {}
    for word in space.words(1, 1):
        value = _randomVector(rng, space, degree + space.wordDegree(word), density)
        if value:
            table[word] = value
    for u, v in itertools.combinations_with_replacement(space.names(), 2):
        sign = -1 if space.degree(u) * space.degree(v) % 2 else 1
        if u == v and sign == 1:
            continue
        value = _randomVector(rng, space, degree + space.degree(u) + space.degree(v), density)
        if value:
            table[(u, v)] = value
            if u != v:
                table[(v, u)] = vscale(value, -sign)
    return Cochain(space, degree, table)


def _harrisonValue(raw, space, words):
    """ Value of the projection of raw vanishing on shuffles inside every two letter word """
    result = {}
    slots = [i for i, w in enumerate(words) if len(w) == 2]
    for flips in itertools.product((False, True), repeat=len(slots)):
        variant = list(words)
        c = Fraction(1, 2 ** len(slots))
        for i, flip in zip(slots, flips):
            if flip:
                u, v = words[i]
                variant[i] = (v, u)
                c *= -1 if space.degree(u) * space.degree(v) % 2 == 0 else 1
        result = vadd(result, vscale(raw.value(variant), c))
    return result


def harrison_gcochain(rng, space, degree, cap, density=0.5):
    """ Random GWord cochain, supported on words of length <= 2, vanishing on shuffles in each word """
    table = {}
    for words in gwords(space, cap):
        if any(len(w) > 2 for w in words):
            continue
        expected = degree + 1 + sum(space.wordDegree(w) - 1 for w in words)
        value = _randomVector(rng, space, expected, density)
        if value:
            table[words] = value
    raw = GCochain(space, degree, table)
    projected = {}
    for words in gwords(space, cap):
        if any(len(w) > 2 for w in words):
            continue
        value = _harrisonValue(raw, space, words)
        if value:
            projected[words] = value
    return GCochain(space, degree, projected)
