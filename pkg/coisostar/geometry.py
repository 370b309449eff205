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

""" Polynomial multivector fields and differential forms on R^n,
    with the coisotropic submanifold C = {x_{n-l+1} = ... = x_n = 0}.
"""
import itertools
import logging

from coisostar import ratpoly
from coisostar.errors import ParseError
from coisostar.ratpoly import Poly

log = logging.getLogger(__name__)


class SpaceConfig(object):
    """ Dimension n of the ambient space and codimension l of C.

        Coordinates 1..n-l are tangential to C, coordinates n-l+1..n are
        transversal and generate the vanishing ideal I of C.
    """
    def __init__(self, n, l):
        if n < 1 or l < 0 or l > n:
            raise ValueError('need 0 <= l <= n and n >= 1, got n=%r l=%r' % (n, l))
        self.n = n
        self.l = l

    def tangential(self):
        return list(range(1, self.n - self.l + 1))

    def transversal(self):
        return list(range(self.n - self.l + 1, self.n + 1))

    def isTransversal(self, i):
        return i > self.n - self.l

    def coords(self):
        return [ratpoly.x(i) for i in range(1, self.n + 1)]

    def transversalVars(self):
        return [ratpoly.x(i) for i in self.transversal()]

    def tangentialVars(self):
        return [ratpoly.x(i) for i in self.tangential()]

    def restrictToC(self, f):
        return f.restrict(self.transversalVars())

    def inIdeal(self, f):
        return self.restrictToC(f).isZero()

    def __eq__(self, other):
        return isinstance(other, SpaceConfig) and (self.n, self.l) == (other.n, other.l)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.n, self.l))

    def __repr__(self):
        return 'SpaceConfig(n=%d, l=%d)' % (self.n, self.l)


def sortSign(indices):
    """ Sort an index tuple. Returns (sign, sorted tuple), sign is 0 on a repeated index. """
    indices = list(indices)
    if len(set(indices)) != len(indices):
        return 0, None
    inversions = 0
    for i in range(len(indices)):
        for j in range(i + 1, len(indices)):
            if indices[i] > indices[j]:
                inversions += 1
    return (-1 if inversions % 2 else 1), tuple(sorted(indices))


def mergeSign(first, second):
    """ theta_first * theta_second = sign * theta_merged """
    return sortSign(tuple(first) + tuple(second))


class _Graded(object):
    """ Sum of coefficient * (exterior monomial on sorted index tuples) """
    __slots__ = ('config', '_terms', '_rank')

    def __init__(self, config, terms=None, rank=None):
        self.config = config
        self._terms = {}
        self._rank = rank
        if terms:
            for indices, f in terms.items():
                f = Poly.coerce(f)
                if not f:
                    continue
                sign, key = sortSign(indices)
                if sign == 0:
                    continue
                self._terms[key] = self._terms.get(key, Poly()) + f * sign
                if not self._terms[key]:
                    del self._terms[key]

    def _new(self, terms, rank=None):
        return self.__class__(self.config, terms, rank)

    def terms(self):
        return sorted(self._terms.items())

    def coefficient(self, indices):
        return self._terms.get(tuple(indices), Poly())

    def ranks(self):
        return sorted(set(len(s) for s in self._terms))

    @property
    def rank(self):
        ranks = self.ranks()
        if not ranks:
            return self._rank if self._rank is not None else 0
        if len(ranks) > 1:
            raise ValueError('not homogeneous: ranks %s' % ranks)
        return ranks[0]

    def component(self, k):
        return self._new(dict((s, f) for s, f in self._terms.items() if len(s) == k), k)

    def components(self):
        return [self.component(k) for k in self.ranks()]

    def isZero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    __nonzero__ = __bool__

    def __eq__(self, other):
        if not isinstance(other, _Graded):
            return NotImplemented
        return self.config == other.config and self._terms == other._terms

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.config, frozenset(self._terms.items())))

    def __add__(self, other):
        terms = dict(self._terms)
        for s, f in other._terms.items():
            terms[s] = terms.get(s, Poly()) + f
        return self._new(terms, self._rank)

    def __neg__(self):
        return self._new(dict((s, -f) for s, f in self._terms.items()), self._rank)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        """ Multiplication by a scalar or by a function """
        return self._new(dict((s, f * c) for s, f in self._terms.items()), self._rank)

    __rmul__ = __mul__

    def mapCoefficients(self, fn):
        return self._new(dict((s, fn(f)) for s, f in self._terms.items()), self._rank)

    def toJSON(self):
        return {
            'n': self.config.n,
            'l': self.config.l,
            'rank': self.rank,
            'terms': [{'indices': list(s), 'coeff': f.toJSON()} for s, f in self.terms()],
        }

    @classmethod
    def fromJSON(cls, data, config=None):
        try:
            if config is None:
                config = SpaceConfig(int(data['n']), int(data['l']))
            rank = int(data.get('rank', 0))
            terms = {}
            for entry in data['terms']:
                indices = tuple(int(i) for i in entry['indices'])
                if len(indices) != rank or any(i < 1 or i > config.n for i in indices):
                    raise ParseError('bad indices %r' % (indices,))
                sign, key = sortSign(indices)
                if sign == 0:
                    continue
                terms[key] = terms.get(key, Poly()) + Poly.fromJSON(entry['coeff']) * sign
            return cls(config, terms, rank)
        except (KeyError, TypeError, ValueError) as detail:
            raise ParseError('bad %s JSON: %s' % (cls.__name__, detail))

    def __repr__(self):
        if not self._terms:
            return '%s(0)' % self.__class__.__name__
        parts = ['(%s)*%s' % (f, '^'.join(str(i) for i in s) or '1') for s, f in self.terms()]
        return '%s(%s)' % (self.__class__.__name__, ' + '.join(parts))


class MultiVec(_Graded):
    """ Multivector field sum f_S d_{s1}^...^d_{sk} """
    __slots__ = ()

    @classmethod
    def function(cls, config, f):
        return cls(config, {(): f}, 0)

    @classmethod
    def basis(cls, config, indices, coeff=1):
        return cls(config, {tuple(indices): coeff}, len(indices))

    @classmethod
    def zero(cls, config, rank=0):
        return cls(config, {}, rank)


class DiffForm(_Graded):
    """ Differential form sum f_S dx_{s1}^...^dx_{sk} """
    __slots__ = ()

    @classmethod
    def basis(cls, config, indices, coeff=1):
        return cls(config, {tuple(indices): coeff}, len(indices))


class GTildeVec(_Graded):
    """ Section of the exterior algebra of the normal bundle of C:
        indices are transversal, coefficients depend on x' only.
    """
    __slots__ = ()

    def __init__(self, config, terms=None, rank=None):
        _Graded.__init__(self, config, terms, rank)
        for s, f in self._terms.items():
            if not all(config.isTransversal(i) for i in s):
                raise ValueError('GTildeVec index %r is not transversal' % (s,))
            if f.variables() & set(config.transversalVars()):
                raise ValueError('GTildeVec coefficient depends on a transversal coordinate')


def _rankOf(x):
    try:
        return x.rank
    except ValueError:
        return None


def _hint(x, y, shift):
    if _rankOf(x) is None or _rankOf(y) is None:
        return None
    return x.rank + y.rank + shift


def wedge(X, Y):
    terms = {}
    for s, f in X._terms.items():
        for t, g in Y._terms.items():
            sign, key = mergeSign(s, t)
            if sign:
                terms[key] = terms.get(key, Poly()) + f * g * sign
    return X._new(terms, _hint(X, Y, 0))


def gtilde_wedge(xi, eta):
    return wedge(xi, eta)


def schouten(X, Y):
    """ Schouten bracket [X,Y]_S written with odd coordinates theta_i = d_i:

        {F,G} = sum_i (F <-d/dtheta_i) d_i G - d_i F (d/dtheta_i G)

        so that [d_x, x] = 1 and vector fields get their Lie bracket.
    """
    config = X.config
    terms = {}

    def put(sign, first, second, coeff):
        merged, key = mergeSign(first, second)
        if merged and coeff:
            terms[key] = terms.get(key, Poly()) + coeff * (sign * merged)

    for s, f in X._terms.items():
        k = len(s)
        for t, g in Y._terms.items():
            for pos, i in enumerate(s):
                dg = g.derive(ratpoly.x(i))
                if dg:
                    put((-1) ** (k - 1 - pos), s[:pos] + s[pos + 1:], t, f * dg)
            for pos, i in enumerate(t):
                df = f.derive(ratpoly.x(i))
                if df:
                    put(-((-1) ** pos), s, t[:pos] + t[pos + 1:], df * g)
    return MultiVec(config, terms, _hint(X, Y, -1))


def schouten_self(P):
    return schouten(P, P)


def is_poisson(P):
    return schouten(P, P).isZero()


def _contract(i, indices):
    """ i(d_i) dx_indices = sign * dx_rest """
    if i not in indices:
        return 0, None
    pos = indices.index(i)
    return (-1) ** pos, indices[:pos] + indices[pos + 1:]


def interior(X, alpha):
    """ i(X)alpha, with i(X^Y) = i(X) i(Y) """
    terms = {}
    for s, f in X._terms.items():
        current = dict((t, g * f) for t, g in alpha._terms.items())
        for i in reversed(s):
            contracted = {}
            for t, g in current.items():
                sign, rest = _contract(i, t)
                if sign:
                    contracted[rest] = contracted.get(rest, Poly()) + g * sign
            current = contracted
        for t, g in current.items():
            terms[t] = terms.get(t, Poly()) + g
    return DiffForm(X.config, terms)


def exterior_derivative(alpha):
    config = alpha.config
    terms = {}
    for t, g in alpha._terms.items():
        for j in range(1, config.n + 1):
            if j in t:
                continue
            dg = g.derive(ratpoly.x(j))
            if not dg:
                continue
            sign, key = sortSign((j,) + t)
            terms[key] = terms.get(key, Poly()) + dg * sign
    return DiffForm(config, terms)


def wedge_forms(alpha, beta):
    return wedge(alpha, beta)


def lie_derivative(X, alpha):
    """ L(X) = i(X)d - (-1)^k d i(X) on each rank k component of X """
    result = DiffForm(X.config)
    for component in X.components():
        k = component.rank
        result = result + interior(component, exterior_derivative(alpha))
        result = result - exterior_derivative(interior(component, alpha)) * ((-1) ** k)
    return result


def is_adapted_mv(X):
    """ Every coefficient in front of an all transversal monomial lies in I """
    config = X.config
    for s, f in X._terms.items():
        if all(config.isTransversal(i) for i in s) and not config.inIdeal(f):
            return False
    return True


def is_adapted_by_generators(X, degCap=0):
    """ Check i(X)(dg_1^...^dg_k) in I for generators g = x''_mu * m of I,
        m running over monomials of degree <= degCap.
    """
    config = X.config
    monomials = _monomials(config.coords(), degCap)
    generators = [Poly.var(v) * m for v in config.transversalVars() for m in monomials]
    for component in X.components():
        k = component.rank
        if k == 0:
            if not config.inIdeal(component.coefficient(())):
                return False
            continue
        for chosen in itertools.combinations(generators, k):
            form = DiffForm(config, {(): 1})
            for g in chosen:
                form = wedge(form, exterior_derivative(DiffForm(config, {(): g})))
            value = interior(component, form).coefficient(())
            if not config.inIdeal(value):
                return False
    return True


def _monomials(variables, degree):
    result = []
    for d in range(degree + 1):
        for combo in itertools.combinations_with_replacement(variables, d):
            m = Poly.one()
            for v in combo:
                m = m * Poly.var(v)
            result.append(m)
    return result


def psi_project(X):
    """ Restriction to C followed by the projection on the normal bundle """
    config = X.config
    terms = {}
    for s, f in X._terms.items():
        if all(config.isTransversal(i) for i in s):
            terms[s] = config.restrictToC(f)
    return GTildeVec(config, terms, _rankOf(X))


def embed_gtilde(xi):
    return MultiVec(xi.config, dict(xi._terms), xi._rank)
