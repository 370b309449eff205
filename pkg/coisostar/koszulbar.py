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

""" Bar and Koszul resolutions of A = R[x_1..x_n] as an A-bimodule, the
    comparison maps between them, the homotopy s_H, dualization of these
    maps onto cochains and truncated cohomology of the Koszul cochain
    complexes with values in A, B = A/I, D(A,B), D(B,B) and D(I,B).

    A bar chain of degree k is a polynomial Phi(a, X_1, ..., X_k, b) in the
    variables ratpoly.a, ratpoly.slot(j, .) and ratpoly.b. A Koszul chain
    of degree k is sum_S omega_S(a, b) e^S.
"""
import functools
import itertools
import logging
from fractions import Fraction
from math import factorial

import sympy

from coisostar import ratpoly
from coisostar.errors import CapExceeded, ParseError
from coisostar.geometry import sortSign
from coisostar.hochschild import PolyDiffOp, isTransversalIndex, xi_project
from coisostar.ratpoly import Poly

log = logging.getLogger(__name__)

TAGS = ('A', 'B', 'DAB', 'DBB', 'DIB')


def _check_tag(tag):
    if tag not in TAGS:
        raise ParseError('unknown bimodule %r, expected one of %s' % (tag, ', '.join(TAGS)))


def isPassive(tag):
    """ Operator valued bimodules carry an extra passive argument """
    return tag in ('DAB', 'DBB', 'DIB')


class BarChain(object):
    __slots__ = ('config', 'k', 'poly')

    def __init__(self, config, k, poly):
        self.config = config
        self.k = k
        self.poly = Poly.coerce(poly)

    def __add__(self, other):
        return BarChain(self.config, self.k, self.poly + other.poly)

    def __sub__(self, other):
        return BarChain(self.config, self.k, self.poly - other.poly)

    def __neg__(self):
        return BarChain(self.config, self.k, -self.poly)

    def __mul__(self, c):
        return BarChain(self.config, self.k, self.poly * c)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, BarChain) and self.k == other.k and self.poly == other.poly

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.k, self.poly))

    def __repr__(self):
        return 'BarChain[%d](%s)' % (self.k, self.poly)


class KoszulChain(object):
    """ sum_S omega_S(a, b) e^S with sorted index tuples S of length k """
    __slots__ = ('config', 'k', 'terms')

    def __init__(self, config, k, terms=None):
        self.config = config
        self.k = k
        self.terms = {}
        for s, f in (terms or {}).items():
            sign, key = sortSign(s)
            f = Poly.coerce(f)
            if sign and f:
                self.terms[key] = self.terms.get(key, Poly()) + f * sign
                if not self.terms[key]:
                    del self.terms[key]

    def __add__(self, other):
        terms = dict(self.terms)
        for s, f in other.terms.items():
            terms[s] = terms.get(s, Poly()) + f
        return KoszulChain(self.config, self.k, terms)

    def __neg__(self):
        return KoszulChain(self.config, self.k, dict((s, -f) for s, f in self.terms.items()))

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return isinstance(other, KoszulChain) and self.k == other.k and self.terms == other.terms

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'KoszulChain[%d](%s)' % (self.k, self.terms)


def _slotBindings(config, mapping):
    """ Rename slot variables: mapping sends an old slot number to a function i -> Var """
    bindings = {}
    for j, target in mapping.items():
        for i in range(1, config.n + 1):
            bindings[ratpoly.slot(j, i)] = Poly.var(target(i))
    return bindings


def _slotTarget(j):
    return lambda i: ratpoly.slot(j, i)


def del_H(chain):
    """ Bar differential of a degree k >= 1 chain """
    config, k = chain.config, chain.k
    if k < 1:
        raise ValueError('del_H needs a chain of degree >= 1')
    result = Poly()
    for r in range(k + 1):
        mapping = {}
        for j in range(1, k + 1):
            if r == 0:
                mapping[j] = ratpoly.a if j == 1 else _slotTarget(j - 1)
            elif r == k:
                mapping[j] = ratpoly.b if j == k else _slotTarget(j)
            else:
                mapping[j] = _slotTarget(j) if j <= r else _slotTarget(j - 1)
        term = chain.poly.substitute(_slotBindings(config, mapping))
        result = result + (term if r % 2 == 0 else -term)
    return BarChain(config, k - 1, result)


def epsilon(chain):
    """ Augmentation Phi(a, b) -> Phi(x, x) """
    config = chain.config
    bindings = {}
    for i in range(1, config.n + 1):
        bindings[ratpoly.a(i)] = Poly.var(ratpoly.x(i))
        bindings[ratpoly.b(i)] = Poly.var(ratpoly.x(i))
    return chain.poly.substitute(bindings)


def _toA(config, f):
    return f.rename(dict((ratpoly.x(i), ratpoly.a(i)) for i in range(1, config.n + 1)))


def del_K(chain):
    config = chain.config
    terms = {}
    for s, f in chain.terms.items():
        for pos, i in enumerate(s):
            factor = Poly.var(ratpoly.a(i)) - Poly.var(ratpoly.b(i))
            rest = s[:pos] + s[pos + 1:]
            terms[rest] = terms.get(rest, Poly()) + f * factor * ((-1) ** pos)
    return KoszulChain(config, max(chain.k - 1, 0), terms)


def epsilon_K(chain):
    config = chain.config
    bindings = dict((v(i), Poly.var(ratpoly.x(i))) for v in (ratpoly.a, ratpoly.b) for i in range(1, config.n + 1))
    return chain.terms.get((), Poly()).substitute(bindings)


def h_H(chain, k, config=None):
    """ Contracting homotopy of the bar resolution.

        For k = -1 chain is a Poly f and the result is f(a); otherwise
        (h Phi)(a, x_1..x_{k+1}, b) = (-1)^{k+1} Phi(a, x_1..x_k, x_{k+1}).
    """
    if k == -1:
        return BarChain(config, 0, _toA(config, chain))
    config = chain.config
    bindings = dict((ratpoly.b(i), Poly.var(ratpoly.slot(k + 1, i))) for i in range(1, config.n + 1))
    return BarChain(config, k + 1, chain.poly.substitute(bindings) * ((-1) ** (k + 1)))


def h_K(chain, k, config=None):
    """ Contracting homotopy of the Koszul resolution

            h omega = - sum_j e^j ^ int_0^1 t^k d omega / d b_j (a, t b + (1 - t) a) dt
    """
    if k == -1:
        return KoszulChain(config, 0, {(): _toA(config, chain)})
    config = chain.config
    t = ratpoly.t(1)
    tvar = Poly.var(t)
    path = {}
    for i in range(1, config.n + 1):
        path[ratpoly.b(i)] = tvar * Poly.var(ratpoly.b(i)) + (1 - tvar) * Poly.var(ratpoly.a(i))
    weight = tvar ** k
    terms = {}
    for s, f in chain.terms.items():
        for j in range(1, config.n + 1):
            if j in s:
                continue
            df = f.derive(ratpoly.b(j))
            if not df:
                continue
            integrand = df.substitute(path) * weight
            value = integrand.integrate(t, Poly.const(0), Poly.const(1))
            sign, key = sortSign((j,) + s)
            terms[key] = terms.get(key, Poly()) - value * sign
    return KoszulChain(config, k + 1, terms)


def _det(matrix):
    size = len(matrix)
    total = Poly()
    for perm in itertools.permutations(range(size)):
        sign, _ = sortSign(perm)
        term = Poly.const(sign)
        for row, col in enumerate(perm):
            term = term * matrix[row][col]
            if not term:
                break
        total = total + term
    return total


def F(chain):
    """ Koszul to bar comparison: omega_S(a,b) det[(x_i - a)_{s_j}] """
    config, k = chain.config, chain.k
    result = Poly()
    for s, f in chain.terms.items():
        matrix = [[Poly.var(ratpoly.slot(row, col)) - Poly.var(ratpoly.a(col)) for col in s]
                  for row in range(1, k + 1)]
        result = result + f * _det(matrix)
    return BarChain(config, k, result)


def Gmap(chain):
    """ Bar to Koszul comparison by iterated integrals over the simplex

            sum_{i_1..i_k} e^{i_1}^..^e^{i_k} int_{1>t_1>..>t_k>0}
                d^k Phi / dx_1^{i_1}..dx_k^{i_k} (a, t_1 a + (1-t_1) b, .., b)
    """
    config, k = chain.config, chain.k
    if k == 0:
        return KoszulChain(config, 0, {(): chain.poly})
    times = [ratpoly.t(m) for m in range(1, k + 1)]
    path = {}
    for m, tm in enumerate(times, 1):
        tvar = Poly.var(tm)
        for i in range(1, config.n + 1):
            path[ratpoly.slot(m, i)] = tvar * Poly.var(ratpoly.a(i)) + (1 - tvar) * Poly.var(ratpoly.b(i))
    terms = {}
    for indices in itertools.permutations(range(1, config.n + 1), k):
        derived = chain.poly
        for m, i in enumerate(indices, 1):
            derived = derived.derive(ratpoly.slot(m, i))
            if not derived:
                break
        if not derived:
            continue
        value = derived.substitute(path)
        for m in range(k, 0, -1):
            upper = Poly.var(times[m - 2]) if m > 1 else Poly.const(1)
            value = value.integrate(times[m - 1], Poly.const(0), upper)
        sign, key = sortSign(indices)
        terms[key] = terms.get(key, Poly()) + value * sign
    return KoszulChain(config, k, terms)


def theta(chain):
    return F(Gmap(chain))


def _aux(depth, i, left):
    return ratpoly.Var('u' if left else 'v', depth, i)


def s_H(chain, k=None):
    """ Homotopy id - Theta = del_H s_H + s_H del_H on bar chains.

        s^0 = 0 and s^k Phi = h^k((id - Theta - s^{k-1} del_H) Phi~)|_{a'=a, b'=b}
        with Phi~(a', a, x, b, b') = Phi(a', x, b').
    """
    if k is None:
        k = chain.k
    return BarChain(chain.config, k + 1, _s_H(chain.config, chain.poly, k, 1))


@functools.lru_cache(maxsize=4096)
def _s_H(config, poly, k, depth):
    if k == 0 or not poly:
        return Poly()
    n = config.n
    lift = {}
    restore = {}
    for i in range(1, n + 1):
        lift[ratpoly.a(i)] = Poly.var(_aux(depth, i, True))
        lift[ratpoly.b(i)] = Poly.var(_aux(depth, i, False))
        restore[_aux(depth, i, True)] = Poly.var(ratpoly.a(i))
        restore[_aux(depth, i, False)] = Poly.var(ratpoly.b(i))
    lifted = BarChain(config, k, poly.substitute(lift))
    inner = lifted.poly - theta(lifted).poly
    if k > 1:
        inner = inner - _s_H(config, del_H(lifted).poly, k - 1, depth + 1)
    log.debug('s_H degree %d depth %d, %d terms', k, depth, len(inner))
    return h_H(BarChain(config, k, inner), k).poly.substitute(restore)


def _taylor(var, config, counts):
    """ prod_i (var_i - z_i)^{c_i} / c_i! """
    value = Poly.one()
    for i, c in enumerate(counts, 1):
        if c:
            value = value * (Poly.var(var(i)) - Poly.var(ratpoly.z(i))) ** c / factorial(c)
    return value


def _toX(config, k):
    bindings = {}
    for i in range(1, config.n + 1):
        xi = Poly.var(ratpoly.x(i))
        bindings[ratpoly.a(i)] = xi
        bindings[ratpoly.b(i)] = xi
        for j in range(1, k + 1):
            bindings[ratpoly.slot(j, i)] = xi
    return bindings


def _zToX(config):
    return dict((ratpoly.z(i), Poly.var(ratpoly.x(i))) for i in range(1, config.n + 1))


def _indexTuples(n, slots, total):
    """ Tuples of `slots` multi-indices in n variables of the given total order """
    cells = slots * n
    for combo in itertools.combinations_with_replacement(range(cells), total):
        flat = [0] * cells
        for c in combo:
            flat[c] += 1
        yield tuple(tuple(flat[s * n:(s + 1) * n]) for s in range(slots))


def evaluate(phi, chain, k, passive=False):
    """ phi^(Phi): apply the derivatives of phi to the slots of Phi, set a = x_j = b = x.

        With passive the last multi-index of phi differentiates the b slot.
    """
    config = phi.config
    toX = _toX(config, k)
    result = Poly()
    derived = {}
    for key, c in phi._terms.items():
        counts = []
        for j, idx in enumerate(key[:k], 1):
            counts.extend((ratpoly.slot(j, i), m) for i, m in enumerate(idx, 1) if m)
        if passive:
            counts.extend((ratpoly.b(i), m) for i, m in enumerate(key[k], 1) if m)
        counts = tuple(counts)
        if counts not in derived:
            derived[counts] = chain.deriveMany(counts).substitute(toX)
        result = result + c * derived[counts]
    return result


def _normalizeOp(tag, op):
    config = op.config
    if tag == 'A':
        return op
    if tag == 'DIB':
        return xi_project(op).lift()
    op = op.mapCoefficients(config.restrictToC)
    if tag == 'DBB':
        op = PolyDiffOp(config, op.arity, dict(
            (key, c) for key, c in op.terms() if not isTransversalIndex(config, key[-1])))
    return op


def _passiveOrders(phi):
    return sorted(set(sum(key[-1]) for key in phi._terms))


def _dualBar(tag, phi, transform, shift):
    """ Cochain phi^ o transform by evaluation on Taylor monomials;
        transform maps a chain of degree m to a chain of degree m + shift.
    """
    passive = isPassive(tag)
    config = phi.config
    active = phi.arity - (1 if passive else 0)
    m = active - shift
    zToX = _zToX(config)
    terms = {}
    totals = set(sum(sum(counts) for counts in key) for key in phi._terms)
    for total in sorted(totals):
        for J in _indexTuples(config.n, m + (1 if passive else 0), total):
            chain = Poly.one()
            for j in range(m):
                chain = chain * _taylor(lambda i, j=j: ratpoly.slot(j + 1, i), config, J[j])
            image = transform(BarChain(config, m, chain)).poly
            if passive:
                image = image * _taylor(ratpoly.b, config, J[m])
            value = evaluate(phi, image, active, passive).substitute(zToX)
            if value:
                terms[J] = terms.get(J, Poly()) + value
    return _normalizeOp(tag, PolyDiffOp(config, phi.arity - shift, terms))


def dual_s(tag, phi):
    """ s*(phi) = phi^ o s_H, a cochain of one arity less """
    _check_tag(tag)
    return _dualBar(tag, phi, lambda chain: s_H(chain), 1)


def dual_theta(tag, phi):
    _check_tag(tag)
    return _dualBar(tag, phi, theta, 0)


class KoszulCochain(object):
    """ Koszul cochain of degree k: sum_S X_S e_S with X_S in the bimodule.

        For A and B, X_S is a function; for the operator valued bimodules X_S
        is the symbol sum_L c_L(x') p^L of the operator sum_L c_L d^L.
    """
    __slots__ = ('config', 'tag', 'k', 'terms')

    def __init__(self, config, tag, k, terms=None):
        self.config = config
        self.tag = tag
        self.k = k
        self.terms = {}
        for s, f in (terms or {}).items():
            sign, key = sortSign(s)
            f = Poly.coerce(f)
            if sign and f:
                self.terms[key] = self.terms.get(key, Poly()) + f * sign
                if not self.terms[key]:
                    del self.terms[key]

    def isZero(self):
        return not self.terms

    def __add__(self, other):
        terms = dict(self.terms)
        for s, f in other.terms.items():
            terms[s] = terms.get(s, Poly()) + f
        return KoszulCochain(self.config, self.tag, self.k, terms)

    def __neg__(self):
        return KoszulCochain(self.config, self.tag, self.k, dict((s, -f) for s, f in self.terms.items()))

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return isinstance(other, KoszulCochain) and (self.tag, self.k, self.terms) == (other.tag, other.k, other.terms)

    def __ne__(self, other):
        return not self == other

    def toJSON(self):
        return {
            'n': self.config.n,
            'l': self.config.l,
            'bimodule': self.tag,
            'degree': self.k,
            'terms': [{'indices': list(s), 'coeff': f.toJSON()} for s, f in sorted(self.terms.items())],
        }

    def __repr__(self):
        return 'KoszulCochain[%s,%d](%s)' % (self.tag, self.k, self.terms)


def momenta(config, tag):
    if tag == 'DBB':
        return [ratpoly.p(i) for i in config.tangential()]
    return [ratpoly.p(i) for i in range(1, config.n + 1)]


def _normalMomenta(config):
    return [ratpoly.p(i) for i in config.transversal()]


def _normalizeSymbol(tag, config, f):
    if tag == 'A':
        return f
    f = config.restrictToC(f)
    if tag == 'DBB':
        f = f.restrict(_normalMomenta(config))
    elif tag == 'DIB':
        f = f - f.restrict(_normalMomenta(config))
    return f


def symbol_to_op(config, symbol):
    """ sum_L c_L p^L -> the arity 1 operator sum_L c_L d^L """
    terms = {}
    for mono, c in symbol.terms():
        counts = [0] * config.n
        coeff = {}
        for v, e in mono:
            if v.slot == 'p':
                counts[v.coord - 1] = e
            else:
                coeff[v] = e
        key = (tuple(counts),)
        terms[key] = terms.get(key, Poly()) + Poly({tuple(sorted(coeff.items())): c})
    return PolyDiffOp(config, 1, terms)


def op_to_symbol(op):
    result = Poly()
    for (counts,), c in op.terms():
        symbol = c
        for i, m in enumerate(counts, 1):
            if m:
                symbol = symbol * Poly.var(ratpoly.p(i), m)
        result = result + symbol
    return result


def dual_F(tag, phi):
    """ F*(phi): the Koszul cochain S -> phi^(F(e^S)); on A this is pi_HKR """
    _check_tag(tag)
    config = phi.config
    passive = isPassive(tag)
    k = phi.arity - (1 if passive else 0)
    zToX = _zToX(config)
    terms = {}
    for s in itertools.combinations(range(1, config.n + 1), k):
        chain = F(KoszulChain(config, k, {s: 1})).poly
        if not passive:
            terms[s] = evaluate(phi, chain, k)
            continue
        symbol = Poly()
        for total in _passiveOrders(phi):
            for (L,) in _indexTuples(config.n, 1, total):
                value = evaluate(phi, chain * _taylor(ratpoly.b, config, L), k, True).substitute(zToX)
                if value:
                    symbol = symbol + op_to_symbol(PolyDiffOp(config, 1, {(L,): value}))
        terms[s] = symbol
    terms = dict((s, _normalizeSymbol(tag, config, f)) for s, f in terms.items())
    return KoszulCochain(config, tag, k, terms)


def dual_G(cochain):
    """ G*(X) = X^ o Gmap as a multidifferential operator; on A this is psi_HKR """
    config, tag, k = cochain.config, cochain.tag, cochain.k
    passive = isPassive(tag)
    zToX = _zToX(config)
    ops = dict((s, symbol_to_op(config, f)) for s, f in cochain.terms.items()) if passive else None
    passiveOrders = sorted(set(order for op in (ops or {}).values() for order in _passiveOrders(op)))
    terms = {}
    for indices in itertools.product(range(1, config.n + 1), repeat=k):
        J = tuple(tuple(1 if c == i else 0 for c in range(1, config.n + 1)) for i in indices)
        chain = Poly.one()
        for j, i in enumerate(indices, 1):
            chain = chain * (Poly.var(ratpoly.slot(j, i)) - Poly.var(ratpoly.z(i)))
        omega = Gmap(BarChain(config, k, chain))
        if not passive:
            value = Poly()
            for s, f in omega.terms.items():
                value = value + cochain.terms.get(s, Poly()) * epsilon_K(KoszulChain(config, 0, {(): f}))
            value = value.substitute(zToX)
            if value:
                terms[J] = value
            continue
        toA = dict((ratpoly.a(i), Poly.var(ratpoly.x(i))) for i in range(1, config.n + 1))
        for total in passiveOrders:
            for (L,) in _indexTuples(config.n, 1, total):
                g = _taylor(ratpoly.b, config, L)
                value = Poly()
                for s, f in omega.terms.items():
                    if s in ops:
                        value = value + evaluate(ops[s], f.substitute(toA) * g, 0, True)
                value = value.substitute(zToX)
                if value:
                    terms[J + (L,)] = value
    return _normalizeOp(tag, PolyDiffOp(config, k + (1 if passive else 0), terms))


def dualize(kind, tag, phi):
    """ Dualize one of the maps F, G, s_H, Theta onto cochains with values in tag """
    _check_tag(tag)
    if kind == 'F':
        return dual_F(tag, phi)
    if kind == 'G':
        return dual_G(phi)
    if kind == 's_H':
        return dual_s(tag, phi)
    if kind == 'Theta':
        return dual_theta(tag, phi)
    raise ParseError('unknown map %r' % kind)


def koszul_cochain_diff(cochain):
    """ Koszul cochain differential: zero on A and B, and on operator symbols

            del_K X = sum_i e_i ^ {x^i, X} = sum_i e_i ^ dX/dp_i

        over all momenta (D(A,B), D(I,B)) or the tangential ones (D(B,B)).
        D(I,B) keeps the part of positive degree in the normal momenta.
    """
    config, tag, k = cochain.config, cochain.tag, cochain.k
    if not isPassive(tag):
        return KoszulCochain(config, tag, k + 1)
    terms = {}
    for s, f in cochain.terms.items():
        for pvar in momenta(config, tag):
            i = pvar.coord
            if i in s:
                continue
            df = f.derive(pvar)
            if not df:
                continue
            sign, key = sortSign((i,) + s)
            terms[key] = terms.get(key, Poly()) + df * sign
    terms = dict((s, _normalizeSymbol(tag, config, f)) for s, f in terms.items())
    return KoszulCochain(config, tag, k + 1, terms)


def _monomials(variables, maxDegree):
    result = []
    for d in range(maxDegree + 1):
        for combo in itertools.combinations_with_replacement(variables, d):
            exps = {}
            for v in combo:
                exps[v] = exps.get(v, 0) + 1
            result.append(tuple(sorted(exps.items())))
    return result


def _activeWeight(config, tag, indices):
    if tag == 'DBB':
        return sum(1 for i in indices if not config.isTransversal(i))
    return len(indices)


def cochain_basis(config, tag, k, polyDeg, opOrder):
    """ (S, monomial) pairs spanning the truncated degree k cochains """
    if k < 0 or k > config.n:
        return []
    if tag == 'A':
        coords = config.coords()
    else:
        coords = config.tangentialVars()
    basis = []
    for s in itertools.combinations(range(1, config.n + 1), k):
        xmonos = _monomials(coords, polyDeg)
        if not isPassive(tag):
            basis.extend((s, m) for m in xmonos)
            continue
        budget = opOrder - _activeWeight(config, tag, s)
        if budget < 0:
            continue
        normal = set(_normalMomenta(config))
        for pmono in _monomials(momenta(config, tag), budget):
            if tag == 'DIB' and not any(v in normal for v, _ in pmono):
                continue
            for m in xmonos:
                basis.append((s, tuple(sorted(m + pmono))))
    return basis


def _rational(c):
    return sympy.Rational(c.numerator, c.denominator)


def _differentialMatrix(config, tag, source, target):
    index = dict((key, row) for row, key in enumerate(target))
    matrix = sympy.zeros(len(target), len(source))
    for col, (s, mono) in enumerate(source):
        image = koszul_cochain_diff(KoszulCochain(config, tag, len(s), {s: Poly({mono: 1})}))
        for t, f in image.terms.items():
            for m, c in f.terms():
                if (t, m) not in index:
                    raise CapExceeded('differential leaves the truncation at %r' % ((t, m),))
                matrix[index[(t, m)], col] = _rational(c)
    return matrix


class CohomologyResult(object):
    def __init__(self, tag, degree, dimension, basis):
        self.tag = tag
        self.degree = degree
        self.dimension = dimension
        self.basis = basis

    def toJSON(self):
        return {
            'bimodule': self.tag,
            'degree': self.degree,
            'dims': self.dimension,
            'basisRepresentatives': [rep.toJSON() for rep in self.basis],
        }


def truncated_cohomology(config, tag, k, polyDeg, opOrder):
    """ H^k of the truncated Koszul cochain complex with values in tag """
    _check_tag(tag)
    here = cochain_basis(config, tag, k, polyDeg, opOrder)
    above = cochain_basis(config, tag, k + 1, polyDeg, opOrder)
    below = cochain_basis(config, tag, k - 1, polyDeg, opOrder)
    log.debug('cohomology %s degree %d: %d/%d/%d basis cochains', tag, k, len(below), len(here), len(above))
    outgoing = _differentialMatrix(config, tag, here, above)
    incoming = _differentialMatrix(config, tag, below, here)
    if not here:
        return CohomologyResult(tag, k, 0, [])
    kernel = outgoing.nullspace() if above else [sympy.eye(len(here))[:, c] for c in range(len(here))]
    span = incoming if below else sympy.zeros(len(here), 0)
    rank = span.rank() if below else 0
    representatives = []
    for vector in kernel:
        candidate = span.row_join(vector)
        if candidate.rank() > rank:
            span = candidate
            rank += 1
            terms = {}
            for (s, mono), c in zip(here, vector):
                if c != 0:
                    terms[s] = terms.get(s, Poly()) + Poly({mono: Fraction(int(c.p), int(c.q))})
            representatives.append(KoszulCochain(config, tag, k, terms))
    return CohomologyResult(tag, k, len(representatives), representatives)


def _binomial(n, k):
    if k < 0 or k > n:
        return 0
    return factorial(n) // (factorial(k) * factorial(n - k))


def exact_sequence_dims(config, k, polyDeg, opOrder):
    """ Dimensions along 0 -> G_I -> G -> G~ -> 0 in degree k at the given truncation.

        H(G) is computed with values in A and H(G~) as H^{k-1} with values in
        D(I,B); the direct counts g, g~ and g_I are the polyvector spaces they
        should match.
    """
    monosA = len(_monomials(config.coords(), polyDeg))
    monosB = len(_monomials(config.tangentialVars(), polyDeg))
    hG = truncated_cohomology(config, 'A', k, polyDeg, opOrder).dimension
    if k == 0:
        hGt = monosB
    else:
        hGt = truncated_cohomology(config, 'DIB', k - 1, polyDeg, opOrder).dimension
    g = _binomial(config.n, k) * monosA
    gt = _binomial(config.l, k) * monosB
    gI = 0
    transversal = set(config.transversalVars())
    for s in itertools.combinations(range(1, config.n + 1), k):
        for mono in _monomials(config.coords(), polyDeg):
            if not all(config.isTransversal(i) for i in s) or any(v in transversal for v, _ in mono):
                gI += 1
    return {'H(G)': hG, 'H(G~)': hGt, 'H(G_I)': hG - hGt, 'g': g, 'g~': gt, 'g_I': gI}
