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

""" Polynomial multidifferential operators: Gerstenhaber compositions,
    Hochschild coboundary, cup product and the quotient by adapted operators.
"""
import itertools
import logging
from fractions import Fraction
from math import factorial

from coisostar import ratpoly
from coisostar.errors import NonAssociative, ParseError
from coisostar.ratpoly import Poly

log = logging.getLogger(__name__)


def zeroIndex(n):
    return (0,) * n


def unitIndex(i, n):
    """ Multi-index of d/dx_i """
    return tuple(1 if j == i else 0 for j in range(1, n + 1))


def order(counts):
    return sum(counts)


def addIndex(first, second):
    return tuple(u + v for u, v in zip(first, second))


def isTransversalIndex(config, counts):
    return any(c for i, c in enumerate(counts, 1) if config.isTransversal(i))


def applyIndex(f, counts):
    return f.deriveMany([(ratpoly.x(i), c) for i, c in enumerate(counts, 1) if c])


def _distributions(count, bins):
    """ (tuple of bin counts, multinomial coefficient) for all ways to split count """
    if bins == 1:
        yield (count,), 1
        return
    for first in range(count + 1):
        for rest, coeff in _distributions(count - first, bins - 1):
            yield (first,) + rest, coeff * factorial(count) // (factorial(first) * factorial(count - first))


def leibnizSplits(counts, bins):
    """ Splits of d^counts over a product of bins factors (Leibniz rule) """
    per = [list(_distributions(c, bins)) for c in counts]
    for choice in itertools.product(*per):
        coeff = 1
        for _, m in choice:
            coeff *= m
        yield tuple(tuple(dist[b] for dist, _ in choice) for b in range(bins)), coeff


class PolyDiffOp(object):
    """ k-ary multidifferential operator with polynomial coefficients

            phi(f_1, ..., f_k) = sum_I c_I(x) d^{I_1}f_1 ... d^{I_k}f_k

        terms maps a tuple (I_1, ..., I_k) of multi-indices, each a tuple of
        n derivative counts, to the coefficient c_I. An arity 0 operator is
        a function, stored under the empty tuple. Arity -1 is the zero object
        produced by brackets of functions.
    """
    __slots__ = ('config', 'arity', '_terms')

    def __init__(self, config, arity, terms=None):
        self.config = config
        self.arity = arity
        self._terms = {}
        if terms:
            for indices, c in terms.items():
                c = Poly.coerce(c)
                if not c:
                    continue
                if len(indices) != arity or any(len(counts) != config.n for counts in indices):
                    raise ValueError('bad multi-index %r for arity %d' % (indices, arity))
                key = tuple(tuple(counts) for counts in indices)
                self._terms[key] = self._terms.get(key, Poly()) + c
                if not self._terms[key]:
                    del self._terms[key]

    def _new(self, terms, arity=None):
        return self.__class__(self.config, self.arity if arity is None else arity, terms)

    @classmethod
    def zero(cls, config, arity):
        return cls(config, arity)

    @classmethod
    def function(cls, config, f):
        return cls(config, 0, {(): f})

    def terms(self):
        return sorted(self._terms.items())

    def coefficient(self, indices):
        return self._terms.get(tuple(indices), Poly())

    def isZero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    __nonzero__ = __bool__

    def __eq__(self, other):
        if not isinstance(other, PolyDiffOp):
            return NotImplemented
        if not self._terms and not other._terms:
            return self.config == other.config
        return self.config == other.config and self.arity == other.arity and self._terms == other._terms

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.arity, frozenset(self._terms.items())))

    def __add__(self, other):
        if not other._terms:
            return self
        if not self._terms:
            return other if other.__class__ is self.__class__ else self._new(dict(other._terms), other.arity)
        if self.arity != other.arity:
            raise ValueError('arity mismatch %d != %d' % (self.arity, other.arity))
        terms = dict(self._terms)
        for key, c in other._terms.items():
            terms[key] = terms.get(key, Poly()) + c
        return self._new(terms)

    def __neg__(self):
        return self._new(dict((key, -c) for key, c in self._terms.items()))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        return self._new(dict((key, f * c) for key, f in self._terms.items()))

    __rmul__ = __mul__

    def mapCoefficients(self, fn):
        return self._new(dict((key, fn(c)) for key, c in self._terms.items()))

    def orders(self):
        return sorted(set(sum(order(counts) for counts in key) for key in self._terms))

    def maxOrder(self):
        return max([0] + self.orders())

    def coefficientDegree(self):
        return max([-1] + [c.degree() for c in self._terms.values()])

    def apply(self, funcs):
        if len(funcs) != self.arity:
            raise ValueError('expected %d arguments' % self.arity)
        result = Poly()
        for key, c in self._terms.items():
            value = c
            for counts, f in zip(key, funcs):
                value = value * applyIndex(Poly.coerce(f), counts)
                if not value:
                    break
            result = result + value
        return result

    def swap(self):
        """ Opposite of a binary operator: (f, g) -> phi(g, f) """
        return self._new(dict(((key[1], key[0]), c) for key, c in self._terms.items()))

    def toJSON(self):
        return {
            'n': self.config.n,
            'l': self.config.l,
            'arity': self.arity,
            'terms': [{'I': [list(counts) for counts in key], 'coeff': c.toJSON()} for key, c in self.terms()],
        }

    @classmethod
    def fromJSON(cls, data, config=None):
        from coisostar.geometry import SpaceConfig
        try:
            if config is None:
                config = SpaceConfig(int(data['n']), int(data['l']))
            terms = {}
            for entry in data['terms']:
                key = tuple(tuple(int(c) for c in counts) for counts in entry['I'])
                terms[key] = terms.get(key, Poly()) + Poly.fromJSON(entry['coeff'])
            return cls(config, int(data['arity']), terms)
        except (KeyError, TypeError, ValueError) as detail:
            raise ParseError('bad %s JSON: %s' % (cls.__name__, detail))

    def __repr__(self):
        parts = ['(%s)*%s' % (c, '|'.join(''.join(str(x) for x in counts) for counts in key)) for key, c in self.terms()]
        return '%s[%d](%s)' % (self.__class__.__name__, self.arity, ' + '.join(parts) or '0')


def mu(config):
    """ The pointwise product (f, g) -> fg """
    zero = zeroIndex(config.n)
    return PolyDiffOp(config, 2, {(zero, zero): 1})


def identity(config):
    return PolyDiffOp(config, 1, {(zeroIndex(config.n),): 1})


def apply_op(phi, *funcs):
    """ phi(f_1, ..., f_k) on polynomials """
    return phi.apply(list(funcs))


def circ_i(phi, psi, i):
    """ phi o_i psi: insert psi at the i-th argument of phi (1-based) """
    k, l = phi.arity, psi.arity
    if k < 1 or psi.arity < 0:
        return PolyDiffOp.zero(phi.config, k + l - 1)
    if not 1 <= i <= k:
        raise ValueError('slot %d out of range for arity %d' % (i, k))
    terms = {}
    for outer, c in phi._terms.items():
        counts = outer[i - 1]
        before, after = outer[:i - 1], outer[i:]
        for inner, d in psi._terms.items():
            if l == 0:
                value = c * applyIndex(d, counts)
                key = before + after
                terms[key] = terms.get(key, Poly()) + value
                continue
            derived = {}
            for bins, m in leibnizSplits(counts, l + 1):
                first = bins[0]
                if first not in derived:
                    derived[first] = applyIndex(d, first)
                if not derived[first]:
                    continue
                key = before + tuple(addIndex(j, extra) for j, extra in zip(inner, bins[1:])) + after
                terms[key] = terms.get(key, Poly()) + c * derived[first] * m
    return PolyDiffOp(phi.config, k + l - 1, terms)


def gerst_product(phi, psi):
    """ phi o_G psi = sum_i (-1)^((i-1)(l-1)) phi o_i psi """
    k, l = phi.arity, psi.arity
    result = PolyDiffOp.zero(phi.config, k + l - 1)
    for i in range(1, k + 1):
        term = circ_i(phi, psi, i)
        result = result + (term if (i - 1) * (l - 1) % 2 == 0 else -term)
    return result


def gerst_bracket(phi, psi):
    k, l = phi.arity, psi.arity
    sign = -1 if (k - 1) * (l - 1) % 2 else 1
    return gerst_product(phi, psi) - gerst_product(psi, phi) * sign


def hochschild_b(phi):
    """ b(phi) = -[phi, mu]_G, e.g. b(D)(f,g) = f D(g) - D(fg) + D(f) g """
    return -gerst_bracket(phi, mu(phi.config))


def cup(phi, psi):
    terms = {}
    for k1, c in phi._terms.items():
        for k2, d in psi._terms.items():
            key = k1 + k2
            terms[key] = terms.get(key, Poly()) + c * d
    return PolyDiffOp(phi.config, phi.arity + psi.arity, terms)


def is_adapted_op(phi):
    """ phi(f_1, ..., f_{k-1}, g) lies in I whenever g does """
    config = phi.config
    for key, c in phi._terms.items():
        if key and not isTransversalIndex(config, key[-1]):
            continue
        if not config.inIdeal(c):
            return False
    return True


def is_adapted_by_generators(phi, degCap=None):
    """ Evaluate on monomials f_j of degree <= degCap and g = x''_mu * monomial """
    from coisostar.geometry import _monomials
    config = phi.config
    if phi.arity == 0:
        return config.inIdeal(phi.coefficient(()))
    if degCap is None:
        degCap = phi.maxOrder()
    monomials = _monomials(config.coords(), degCap)
    passive = [Poly.var(v) * m for v in config.transversalVars() for m in monomials]
    for active in itertools.product(monomials, repeat=phi.arity - 1):
        for g in passive:
            if not config.inIdeal(phi.apply(list(active) + [g])):
                return False
    return True


class GTildeOp(PolyDiffOp):
    """ Normal form of a class modulo adapted operators: coefficients depend
        on x' only and the last multi-index has a transversal part.
    """
    __slots__ = ()

    def __init__(self, config, arity, terms=None):
        PolyDiffOp.__init__(self, config, arity, terms)
        transversal = set(config.transversalVars())
        for key, c in self._terms.items():
            if c.variables() & transversal:
                raise ValueError('normal form coefficient depends on a transversal coordinate')
            if key and not isTransversalIndex(config, key[-1]):
                raise ValueError('normal form last multi-index must be transversal')

    def lift(self):
        return PolyDiffOp(self.config, self.arity, dict(self._terms))


def xi_project(phi):
    """ The projection Xi onto the normal form of G / G_I """
    config = phi.config
    terms = {}
    for key, c in phi._terms.items():
        if key and not isTransversalIndex(config, key[-1]):
            continue
        c = config.restrictToC(c)
        if c:
            terms[key] = terms.get(key, Poly()) + c
    return GTildeOp(config, phi.arity, terms)


def btilde(eta):
    """ Coboundary of G / G_I on normal forms:

            (b~ eta)(f_1..f_k, g) = f_1 eta(f_2..g) + sum_i (-1)^i eta(..f_i f_{i+1}..g)

        followed by Xi; the last term of b, eta(f_1..f_k) g, is never transversal.
    """
    config = eta.config
    op = eta.lift()
    k = op.arity
    if k < 1:
        return GTildeOp(config, k + 1)
    m = mu(config)
    result = circ_i(m, op, 2)
    for i in range(1, k + 1):
        term = circ_i(op, m, i)
        result = result + (-term if i % 2 else term)
    return xi_project(result)


class GradedAlgebra(object):
    """ Finite dimensional graded algebra given by structure constants.

        space is a coalg.GradedSpace, table maps a pair of basis names to a
        vector {name: coefficient}.
    """
    def __init__(self, space, table):
        self.space = space
        self.table = {}
        for (u, v), vector in table.items():
            vector = dict((w, Fraction(c)) for w, c in vector.items() if c)
            for w in vector:
                if space.degree(w) != space.degree(u) + space.degree(v):
                    raise ValueError('product %s*%s is not homogeneous' % (u, v))
            if vector:
                self.table[(u, v)] = vector

    def multiply(self, left, right):
        """ Product of two vectors """
        result = {}
        for u, cu in left.items():
            for v, cv in right.items():
                for w, c in self.table.get((u, v), {}).items():
                    result[w] = result.get(w, 0) + cu * cv * c
        return dict((w, c) for w, c in result.items() if c)

    def check_associative(self):
        names = self.space.names()
        for u in names:
            for v in names:
                for w in names:
                    left = self.multiply(self.multiply({u: 1}, {v: 1}), {w: 1})
                    right = self.multiply({u: 1}, self.multiply({v: 1}, {w: 1}))
                    if left != right:
                        raise NonAssociative('(%s*%s)*%s != %s*(%s*%s)' % (u, v, w, u, v, w))


def graded_b(algebra, phi):
    """ Hochschild coboundary of a graded cochain phi of degree p and arity k

            (b phi)(f_1..f_{k+1}) = (-1)^{|f_1| p} f_1 phi(f_2..) + sum_r (-1)^r phi(..f_r f_{r+1}..)
                                    + (-1)^{k+1} phi(f_1..f_k) f_{k+1}
    """
    from coisostar.coalg import Cochain, vadd, vscale
    algebra.check_associative()
    space = algebra.space
    arities = phi.arities()
    if len(arities) > 1:
        raise ValueError('graded_b needs a cochain of a single arity')
    k = arities[0] if arities else 0
    p = phi.degree
    table = {}
    for word in space.words(k + 1, k + 1):
        result = {}
        first = space.degree(word[0])
        head = algebra.multiply({word[0]: 1}, phi.value(word[1:]))
        result = vadd(result, vscale(head, -1 if first * p % 2 else 1))
        for r in range(1, k + 1):
            product = algebra.multiply({word[r - 1]: 1}, {word[r]: 1})
            for w, c in product.items():
                value = phi.value(word[:r - 1] + (w,) + word[r + 1:])
                result = vadd(result, vscale(value, c * (-1) ** r))
        tail = algebra.multiply(phi.value(word[:k]), {word[k]: 1})
        result = vadd(result, vscale(tail, (-1) ** (k + 1)))
        if result:
            table[word] = result
    return Cochain(space, p, table)
