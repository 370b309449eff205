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

""" Exact multivariate polynomials with rational coefficients.

    Variables are named by a slot, an index and a coordinate:

        from coisostar import ratpoly

        x1 = ratpoly.Poly.var(ratpoly.x(1))
        p = (x1 * x1 - 3).derive(ratpoly.x(1))
        print(p.substitute({ratpoly.x(1): ratpoly.Poly.const(2)}))

    The printed form of a variable is slot+coord ('x1', 'p2') or
    slot+index+'_'+coord ('X1_2') when the index is not zero.
"""
import re
from collections import namedtuple
from fractions import Fraction

from coisostar.errors import ParseError

_VARNAME = re.compile(r'^([A-Za-z]+)(\d+)(?:_(\d+))?$')
_TOKEN = re.compile(r'\s*(?:(\d+)|([A-Za-z]+\d+(?:_\d+)?)|(.))')


class Var(namedtuple('Var', ['slot', 'index', 'coord'])):
    """ A polynomial variable """
    __slots__ = ()

    @property
    def name(self):
        if self.index == 0:
            return '%s%d' % (self.slot, self.coord)
        return '%s%d_%d' % (self.slot, self.index, self.coord)

    def __str__(self):
        return self.name

    @classmethod
    def parse(cls, text):
        match = _VARNAME.match(text)
        if match is None:
            raise ParseError('bad variable name %r' % text)
        slot, first, second = match.groups()
        if second is None:
            return cls(slot, 0, int(first))
        return cls(slot, int(first), int(second))


def x(i):
    """ Base coordinate x_i of R^n """
    return Var('x', 0, i)


def a(i):
    return Var('a', 0, i)


def b(i):
    return Var('b', 0, i)


def slot(j, i):
    """ Coordinate i of the j-th inner slot of a bar chain """
    return Var('X', j, i)


def p(i):
    """ Momentum conjugate to x_i, used by operator symbols """
    return Var('p', 0, i)


def y(i):
    """ Coordinate of the passive argument of an operator valued cochain """
    return Var('y', 0, i)


def z(i):
    """ Taylor centre """
    return Var('z', 0, i)


def t(j):
    return Var('t', 0, j)


def _mulMono(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    exps = dict(m1)
    for v, e in m2:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def _integer(value, what):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError('%s must be an integer, got %r' % (what, value))
    return value


def _toFraction(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError('not an exact rational: %r' % (c,))


class Poly(object):
    """ Polynomial as a map from monomials to non zero Fractions.

        A monomial is a sorted tuple of (Var, exponent) pairs, the empty
        tuple being the constant monomial.
    """
    __slots__ = ('_terms', '_hash')

    def __init__(self, terms=None):
        self._terms = {}
        self._hash = None
        if terms:
            for mono, c in terms.items():
                if c:
                    self._terms[mono] = _toFraction(c)

    @classmethod
    def const(cls, c):
        return cls({(): c})

    @classmethod
    def var(cls, v, exponent=1):
        if exponent == 0:
            return cls.const(1)
        return cls({((v, exponent),): 1})

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls.const(1)

    @classmethod
    def coerce(cls, value):
        if isinstance(value, Poly):
            return value
        return cls.const(_toFraction(value))

    def terms(self):
        """ Items (monomial, coefficient) in a deterministic order """
        return sorted(self._terms.items(), key=lambda item: _monoKey(item[0]))

    def coefficient(self, mono):
        return self._terms.get(mono, Fraction(0))

    def constant(self):
        return self.coefficient(())

    def isZero(self):
        return not self._terms

    def isConstant(self):
        return all(mono == () for mono in self._terms)

    def __bool__(self):
        return bool(self._terms)

    __nonzero__ = __bool__

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        other = Poly.coerce(other)
        terms = dict(self._terms)
        for mono, c in other._terms.items():
            terms[mono] = terms.get(mono, 0) + c
        return Poly(terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(dict((mono, -c) for mono, c in self._terms.items()))

    def __sub__(self, other):
        return self + (-Poly.coerce(other))

    def __rsub__(self, other):
        return Poly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Poly()
            return Poly(dict((mono, c * other) for mono, c in self._terms.items()))
        if not isinstance(other, Poly):
            return NotImplemented
        terms = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = _mulMono(m1, m2)
                terms[mono] = terms.get(mono, 0) + c1 * c2
        return Poly(terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * (Fraction(1) / _toFraction(other))

    __div__ = __truediv__

    def __pow__(self, exponent):
        if exponent < 0:
            raise ValueError('negative power %d of a polynomial' % exponent)
        result = Poly.one()
        for _ in range(exponent):
            result = result * self
        return result

    def variables(self):
        found = set()
        for mono in self._terms:
            for v, _ in mono:
                found.add(v)
        return found

    def degree(self, accept=None):
        """ Total degree, counting only the variables accepted by the predicate.
            The zero polynomial has degree -1.
        """
        if not self._terms:
            return -1
        return max(sum(e for v, e in mono if accept is None or accept(v)) for mono in self._terms)

    def derive(self, v):
        terms = {}
        for mono, c in self._terms.items():
            for pos, (w, e) in enumerate(mono):
                if w == v:
                    rest = mono[:pos] + (((w, e - 1),) if e > 1 else ()) + mono[pos + 1:]
                    terms[rest] = terms.get(rest, 0) + c * e
                    break
        return Poly(terms)

    def deriveMany(self, counts):
        """ Apply the derivative prod_v d^{counts[v]}/dv^{counts[v]} """
        result = self
        for v, n in counts:
            for _ in range(n):
                if not result:
                    return result
                result = result.derive(v)
        return result

    def substitute(self, bindings):
        """ Simultaneous substitution of the variables in bindings. """
        if not bindings:
            return self
        bindings = dict((v, Poly.coerce(value)) for v, value in bindings.items())
        powers = {}
        result = {}
        for mono, c in self._terms.items():
            kept = []
            factor = None
            for v, e in mono:
                if v in bindings:
                    key = (v, e)
                    if key not in powers:
                        powers[key] = bindings[v] ** e
                    factor = powers[key] if factor is None else factor * powers[key]
                else:
                    kept.append((v, e))
            kept = tuple(kept)
            if factor is None:
                result[kept] = result.get(kept, 0) + c
                continue
            for m, d in factor._terms.items():
                mono2 = _mulMono(kept, m)
                result[mono2] = result.get(mono2, 0) + c * d
        return Poly(result)

    def restrict(self, variables):
        """ Set the given variables to zero """
        return self.substitute(dict((v, Poly()) for v in variables))

    def integrate(self, v, lo, hi):
        antiderivative = {}
        for mono, c in self._terms.items():
            exps = dict(mono)
            e = exps.get(v, 0)
            exps[v] = e + 1
            key = tuple(sorted(exps.items()))
            antiderivative[key] = antiderivative.get(key, 0) + c / (e + 1)
        anti = Poly(antiderivative)
        return anti.substitute({v: hi}) - anti.substitute({v: lo})

    def rename(self, mapping):
        """ Rename variables, mapping is Var -> Var """
        return self.substitute(dict((old, Poly.var(new)) for old, new in mapping.items()))

    def toJSON(self):
        monomials = []
        for mono, c in self.terms():
            monomials.append({
                'exps': dict((v.name, e) for v, e in mono),
                'num': c.numerator,
                'den': c.denominator,
            })
        return {'monomials': monomials}

    @classmethod
    def fromJSON(cls, data):
        try:
            terms = {}
            for entry in data['monomials']:
                den = _integer(entry.get('den', 1), 'denominator')
                if den == 0:
                    raise ParseError('zero denominator')
                mono = []
                for name, e in entry['exps'].items():
                    e = _integer(e, 'exponent of %s' % name)
                    if e < 0:
                        raise ParseError('negative exponent %d of %s' % (e, name))
                    if e:
                        mono.append((Var.parse(name), e))
                mono = tuple(sorted(mono))
                terms[mono] = terms.get(mono, 0) + Fraction(_integer(entry['num'], 'numerator'), den)
            return cls(terms)
        except (KeyError, TypeError, ValueError) as detail:
            raise ParseError('bad polynomial JSON: %s' % detail)

    def __str__(self):
        if not self._terms:
            return '0'
        out = ''
        for mono, c in self.terms():
            factors = ['%s^%d' % (v.name, e) if e > 1 else v.name for v, e in mono]
            magnitude = abs(c)
            if factors and magnitude == 1:
                body = '*'.join(factors)
            else:
                body = '*'.join([str(magnitude)] + factors)
            if not out:
                out = ('-' if c < 0 else '') + body
            else:
                out += (' - ' if c < 0 else ' + ') + body
        return out

    def __repr__(self):
        return 'Poly(%s)' % self

    @classmethod
    def parse(cls, text):
        return _Parser(text).parse()


def _monoKey(mono):
    return (sum(e for _, e in mono), mono)


class _Parser(object):
    """ Recursive descent parser for the printed form """
    def __init__(self, text):
        self._tokens = []
        text = text.replace('−', '-')
        pos = 0
        while pos < len(text):
            match = _TOKEN.match(text, pos)
            if match is None or match.end() == pos:
                break
            number, name, other = match.groups()
            if number is not None:
                self._tokens.append(('num', int(number)))
            elif name is not None:
                self._tokens.append(('var', Var.parse(name)))
            elif other is not None and not other.isspace():
                self._tokens.append(('op', other))
            pos = match.end()
        self._pos = 0

    def _peek(self):
        if self._pos < len(self._tokens):
            return self._tokens[self._pos]
        return (None, None)

    def _next(self):
        token = self._peek()
        self._pos += 1
        return token

    def parse(self):
        if not self._tokens:
            raise ParseError('empty polynomial')
        result = self._expr()
        if self._pos != len(self._tokens):
            raise ParseError('unexpected token %r' % (self._peek()[1],))
        return result

    def _expr(self):
        result = self._term()
        while self._peek() in (('op', '+'), ('op', '-')):
            _, op = self._next()
            term = self._term()
            result = result + term if op == '+' else result - term
        return result

    def _term(self):
        result = self._factor()
        while self._peek() in (('op', '*'), ('op', '/')):
            _, op = self._next()
            factor = self._factor()
            if op == '*':
                result = result * factor
            else:
                if not factor.isConstant() or not factor:
                    raise ParseError('division by a non constant')
                result = result / factor.constant()
        return result

    def _factor(self):
        if self._peek() == ('op', '-'):
            self._next()
            return -self._factor()
        base = self._base()
        if self._peek() == ('op', '^'):
            self._next()
            kind, value = self._next()
            if kind != 'num':
                raise ParseError('exponent must be an integer')
            base = base ** value
        return base

    def _base(self):
        kind, value = self._next()
        if kind == 'num':
            return Poly.const(value)
        if kind == 'var':
            return Poly.var(value)
        if (kind, value) == ('op', '('):
            result = self._expr()
            if self._next() != ('op', ')'):
                raise ParseError('missing )')
            return result
        raise ParseError('unexpected token %r' % (value,))


def poly_add(p, q):
    return Poly.coerce(p) + q


def poly_mul(p, q):
    return Poly.coerce(p) * Poly.coerce(q)


def poly_scale(p, c):
    return Poly.coerce(p) * _toFraction(c)


def derive(p, v):
    return p.derive(v)


def substitute(p, bindings):
    return p.substitute(bindings)


def integrate(p, v, lo, hi):
    return p.integrate(v, lo, hi)
