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

""" Graded tensor coalgebras over a finite graded space h and the algebra
    of their coderivations: Gerstenhaber, Nijenhuis-Richardson and Harrison
    compositions, braces and the associated bialgebra of words of cochains,
    decalage of multilinear maps and the two differentials of the obstruction
    complex of a Gerstenhaber algebra.

    A word is a tuple of basis names, a vector is {name: Fraction}, a tensor
    is {word: Fraction}. Signs follow the Koszul rule throughout.
"""
import itertools
import logging
from fractions import Fraction

import sympy

from coisostar.errors import CapExceeded, NonAssociative, NotHarrison, ParseError

log = logging.getLogger(__name__)


class GradedSpace(object):
    """ Finite graded vector space given by an ordered basis of (name, degree) """
    def __init__(self, basis):
        self._basis = [(str(name), int(degree)) for name, degree in basis]
        self._degree = dict(self._basis)
        self._index = dict((name, i) for i, (name, _) in enumerate(self._basis))
        if len(self._degree) != len(self._basis):
            raise ValueError('repeated basis name')

    def names(self):
        return [name for name, _ in self._basis]

    def degree(self, name):
        return self._degree[name]

    def index(self, name):
        return self._index[name]

    def wordDegree(self, word):
        return sum(self._degree[x] for x in word)

    def vectorDegree(self, vector):
        degrees = set(self._degree[x] for x in vector)
        if len(degrees) > 1:
            raise ValueError('vector is not homogeneous')
        return degrees.pop() if degrees else None

    def shifted(self, j):
        """ h[j], degrees lowered by j """
        return GradedSpace([(name, degree - j) for name, degree in self._basis])

    def words(self, maxLen, minLen=1):
        for size in range(minLen, maxLen + 1):
            for word in itertools.product(self.names(), repeat=size):
                yield word

    def toJSON(self):
        return {'basis': [{'name': name, 'degree': degree} for name, degree in self._basis]}

    @classmethod
    def fromJSON(cls, data):
        try:
            return cls([(entry['name'], entry['degree']) for entry in data['basis']])
        except (KeyError, TypeError, ValueError) as detail:
            raise ParseError('bad graded space JSON: %s' % detail)

    def __eq__(self, other):
        return isinstance(other, GradedSpace) and self._basis == other._basis

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(tuple(self._basis))


def vadd(u, v):
    result = dict(u)
    for k, c in v.items():
        result[k] = result.get(k, 0) + c
        if not result[k]:
            del result[k]
    return result


def vscale(u, c):
    if not c:
        return {}
    return dict((k, v * c) for k, v in u.items())


def _accumulate(target, key, c):
    if not c:
        return
    value = target.get(key, 0) + c
    if value:
        target[key] = value
    else:
        target.pop(key, None)


def koszulSign(degrees, perm):
    """ Sign of the reordering blocks -> [blocks[perm[0]], blocks[perm[1]], ...] """
    exponent = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                exponent += degrees[perm[i]] * degrees[perm[j]]
    return -1 if exponent % 2 else 1


def signature(space, word, perm):
    """ e(word, sigma) for the reordered word (word[perm[0]], word[perm[1]], ...) """
    return Fraction(koszulSign([space.degree(x) for x in word], perm))


def sortWord(space, word):
    """ Normal form of a letter of S(h): (sign, sorted word), sign 0 if an odd letter repeats """
    perm = sorted(range(len(word)), key=lambda i: space.index(word[i]))
    ordered = tuple(word[i] for i in perm)
    for u, v in zip(ordered, ordered[1:]):
        if u == v and space.degree(u) % 2:
            return 0, ordered
    return koszulSign([space.degree(x) for x in word], perm), ordered


def shuffle(space, u, v):
    """ Signed shuffle product u . v as a tensor """
    u, v = tuple(u), tuple(v)
    size = len(u) + len(v)
    vdeg = [space.degree(x) for x in v]
    prefix = [0]
    for d in vdeg:
        prefix.append(prefix[-1] + d)
    result = {}
    for places in itertools.combinations(range(size), len(u)):
        word = [None] * size
        exponent = 0
        for i, pos in enumerate(places):
            word[pos] = u[i]
            exponent += space.degree(u[i]) * prefix[pos - i]
        rest = iter(v)
        for pos in range(size):
            if word[pos] is None:
                word[pos] = next(rest)
        _accumulate(result, tuple(word), -1 if exponent % 2 else 1)
    return result


def shuffle_tensors(space, left, right):
    result = {}
    for u, cu in left.items():
        for v, cv in right.items():
            for w, c in shuffle(space, u, v).items():
                _accumulate(result, w, cu * cv * c)
    return result


def deconcat(word):
    """ Delta(w) = sum of u (x) v over the splits w = uv, both ends included """
    word = tuple(word)
    return dict(((word[:i], word[i:]), 1) for i in range(len(word) + 1))


def _tensorVector(tensor, vector):
    result = {}
    for w, c in tensor.items():
        for x, d in vector.items():
            _accumulate(result, w + (x,), c * d)
    return result


def _concat(left, right):
    result = {}
    for u, cu in left.items():
        for v, cv in right.items():
            _accumulate(result, u + v, cu * cv)
    return result


class Cochain(object):
    """ Multilinear map h^{(x) k} -> h of a fixed degree, stored as {word: vector}.

        With symmetric the words are letters of S(h), kept in sorted normal form.
    """
    def __init__(self, space, degree, table=None, symmetric=False):
        self.space = space
        self.degree = degree
        self.symmetric = symmetric
        self._table = {}
        for word, vector in (table or {}).items():
            word = tuple(word)
            sign = 1
            if symmetric:
                sign, word = sortWord(space, word)
            for name, c in vector.items():
                if not c:
                    continue
                if space.degree(name) != degree + space.wordDegree(word):
                    raise ValueError('value %s on %s does not have degree %d' % (name, word, degree))
                if sign:
                    self._table.setdefault(word, {})
                    _accumulate(self._table[word], name, Fraction(c) * sign)
            if word in self._table and not self._table[word]:
                del self._table[word]

    def value(self, word):
        word = tuple(word)
        if self.symmetric:
            sign, word = sortWord(self.space, word)
            if not sign:
                return {}
            return vscale(self._table.get(word, {}), sign)
        return self._table.get(word, {})

    def applyTensor(self, tensor):
        result = {}
        for word, c in tensor.items():
            for name, d in self.value(word).items():
                _accumulate(result, name, c * d)
        return result

    def items(self):
        return sorted(self._table.items())

    def arities(self):
        return sorted(set(len(word) for word in self._table))

    def longest(self):
        return max([0] + self.arities())

    def isZero(self):
        return not self._table

    def expand(self):
        """ Canonical coordinates {(word, name): coefficient} """
        return dict(((word, name), c) for word, vector in self._table.items() for name, c in vector.items())

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        if not self._table and not other._table:
            return True
        return self.degree == other.degree and self._table == other._table

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.degree, frozenset(self.expand().items())))

    def _combine(self, other, c):
        table = dict((word, dict(vector)) for word, vector in self._table.items())
        for word, vector in other._table.items():
            table[word] = vadd(table.get(word, {}), vscale(vector, c))
        degree = self.degree if self._table else other.degree
        return Cochain(self.space, degree, table, self.symmetric)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self * -1

    def __mul__(self, c):
        return Cochain(self.space, self.degree, dict((w, vscale(v, c)) for w, v in self._table.items()), self.symmetric)

    __rmul__ = __mul__

    def toJSON(self):
        return {
            'space': self.space.toJSON(),
            'degree': self.degree,
            'symmetric': self.symmetric,
            'table': [{'word': list(word), 'value': dict((k, str(c)) for k, c in vector.items())}
                      for word, vector in self.items()],
        }

    @classmethod
    def fromJSON(cls, data):
        try:
            space = GradedSpace.fromJSON(data['space'])
            table = {}
            for entry in data['table']:
                table[tuple(entry['word'])] = dict((k, Fraction(v)) for k, v in entry['value'].items())
            return cls(space, int(data['degree']), table, bool(data.get('symmetric', False)))
        except (KeyError, TypeError, ValueError) as detail:
            raise ParseError('bad cochain JSON: %s' % detail)

    def __repr__(self):
        return 'Cochain[%d](%s)' % (self.degree, self.items())


class CoinducedMorphism(object):
    """ Coalgebra morphism of T(h) with projection phi (degree 0):
        word -> sum over splittings into blocks of phi(B_1) (x) ... (x) phi(B_r)
    """
    def __init__(self, phi, cap=None):
        if phi.degree != 0:
            raise ValueError('a coinduced morphism needs a degree 0 cochain')
        _checkCap(cap, phi)
        self.phi = phi
        self.cap = cap
        self._memo = {(): {(): Fraction(1)}}

    def __call__(self, word):
        word = tuple(word)
        _checkWord(self.cap, word)
        if word not in self._memo:
            result = {}
            for cut in range(1, len(word) + 1):
                head = self.phi.value(word[:cut])
                if not head:
                    continue
                for tail, c in self(word[cut:]).items():
                    for name, d in head.items():
                        _accumulate(result, (name,) + tail, c * d)
            self._memo[word] = result
        return self._memo[word]


class _Identity(object):
    def __call__(self, word):
        return {tuple(word): Fraction(1)}


def _checkCap(cap, *cochains):
    if cap is None:
        return
    for c in cochains:
        if c.longest() > cap:
            raise CapExceeded('cochain on words of length %d above cap %d' % (c.longest(), cap))


def _checkWord(cap, word):
    if cap is not None and len(word) > cap:
        raise CapExceeded('word of length %d above cap %d' % (len(word), cap))


def coinduce_morphism(phi, cap=None):
    return CoinducedMorphism(phi, cap)


class CoinducedCoderivation(object):
    """ Coderivation along phi-bar with projection d:

            word = u v w -> (-1)^{|d| |u|} phi-bar(u) (x) d(v) (x) phi-bar(w)
    """
    def __init__(self, d, phi=None, cap=None):
        _checkCap(cap, d)
        self.d = d
        self.space = d.space
        self.cap = cap
        self.morphism = CoinducedMorphism(phi, cap) if phi is not None else _Identity()
        self._memo = {}

    def __call__(self, word):
        word = tuple(word)
        _checkWord(self.cap, word)
        if word in self._memo:
            return self._memo[word]
        result = {}
        size = len(word)
        for start in range(size):
            sign = -1 if self.d.degree * self.space.wordDegree(word[:start]) % 2 else 1
            left = self.morphism(word[:start])
            for end in range(start + 1, size + 1):
                value = self.d.value(word[start:end])
                if not value:
                    continue
                middle = _tensorVector(left, value)
                right = self.morphism(word[end:])
                for w, c in _concat(middle, right).items():
                    _accumulate(result, w, c * sign)
        self._memo[word] = result
        return result


def coinduce_coderivation(d, phi=None, cap=None):
    return CoinducedCoderivation(d, phi, cap)


def circ_G(d1, d2, cap):
    """ Gerstenhaber composition d1 o d2 = d1 o d2-bar on words of length <= cap """
    _checkCap(cap, d1)
    space = d1.space
    bar = CoinducedCoderivation(d2, cap=cap)
    table = {}
    for word in space.words(cap):
        value = d1.applyTensor(bar(word))
        if value:
            table[word] = value
    return Cochain(space, d1.degree + d2.degree, table)


def _bracket(circ, d1, d2, cap):
    sign = -1 if d1.degree * d2.degree % 2 else 1
    return circ(d1, d2, cap) - circ(d2, d1, cap) * sign


def bracket_G(d1, d2, cap):
    return _bracket(circ_G, d1, d2, cap)


def symmetricWords(space, cap):
    """ Sorted words of S(h) of length 1..cap, odd letters not repeated """
    names = space.names()
    for size in range(1, cap + 1):
        for word in itertools.combinations_with_replacement(names, size):
            sign, _ = sortWord(space, word)
            if sign:
                yield word


def _unshuffles(size):
    """ Nonempty subsets of positions, chosen part first """
    for count in range(1, size + 1):
        for chosen in itertools.combinations(range(size), count):
            rest = tuple(i for i in range(size) if i not in chosen)
            yield chosen, rest


def circ_NR(d1, d2, cap):
    """ Nijenhuis-Richardson composition on S(h):

            (d1 o d2)(x_1..x_n) = sum over unshuffles e(sigma) d1(d2(x_B) x_rest)
    """
    _checkCap(cap, d1, d2)
    space = d1.space
    table = {}
    for word in symmetricWords(space, cap):
        degrees = [space.degree(x) for x in word]
        result = {}
        for chosen, rest in _unshuffles(len(word)):
            sign = koszulSign(degrees, chosen + rest)
            inner = d2.value(tuple(word[i] for i in chosen))
            for name, c in inner.items():
                outer = d1.value((name,) + tuple(word[i] for i in rest))
                result = vadd(result, vscale(outer, c * sign))
        if result:
            table[word] = result
    return Cochain(space, d1.degree + d2.degree, table, symmetric=True)


def bracket_NR(d1, d2, cap):
    return _bracket(circ_NR, d1, d2, cap)


def is_harrison(d, cap):
    """ d vanishes on every shuffle product u . v of nonempty words """
    space = d.space
    for left in range(1, cap):
        for u in space.words(left, left):
            for right in range(1, cap - left + 1):
                for v in space.words(right, right):
                    if d.applyTensor(shuffle(space, u, v)):
                        return False
    return True


def circ_H(d1, d2, cap):
    """ Harrison composition: the Gerstenhaber one restricted to shuffle vanishing cochains """
    for d in (d1, d2):
        if not is_harrison(d, cap):
            raise NotHarrison('cochain does not vanish on shuffle products')
    return circ_G(d1, d2, cap)


def bracket_H(d1, d2, cap):
    return _bracket(circ_H, d1, d2, cap)


def harrison_cobord(phi, d, cap):
    """ beta(phi) = [phi, d]_H """
    return bracket_H(phi, d, cap)


def shift(phi, j):
    """ Decalage phi[j] of a k -> 1 map onto h[j]:

            phi[j](y_1..y_k) = (-1)^{k(k-1)/2 j(j-1)/2 + j sum_i (k-i)|y_i|} phi(y_1..y_k)

        with |y_i| the degrees in h[j]. The result has degree j(k-1) + |phi|.
    """
    arities = phi.arities()
    if len(arities) > 1:
        raise ValueError('shift needs a cochain of a single arity')
    k = arities[0] if arities else 1
    target = phi.space.shifted(j)
    base = (k * (k - 1) // 2) * (j * (j - 1) // 2)
    table = {}
    for word, vector in phi.items():
        exponent = base
        for i, letter in enumerate(word[:-1], 1):
            exponent += j * (k - i) * target.degree(letter)
        table[word] = vscale(vector, -1 if exponent % 2 else 1)
    return Cochain(target, j * (k - 1) + phi.degree, table, phi.symmetric)


def shifted_multiplication(algebra):
    """ m[1] on h[1] for a graded algebra (hochschild.GradedAlgebra) """
    m = Cochain(algebra.space, 0, dict(((u, v), w) for (u, v), w in algebra.table.items()))
    return shift(m, 1)


# Words of cochains, the brace operations and the bialgebra (H^(x), ., bullet_K)

def wordDegree(letters):
    return sum(c.degree for c in letters)


def _rhoPlacements(psis, word, space, start=0, before=0):
    """ Placements of psi_1..psi_k on consecutive nonempty blocks of word[start:] """
    if not psis:
        yield (), 0
        return
    psi = psis[0]
    for a in range(start, len(word)):
        skipped = before + space.wordDegree(word[start:a])
        for b in range(a + 1, len(word) + 1):
            for rest, exponent in _rhoPlacements(psis[1:], word, space, b, skipped + space.wordDegree(word[a:b])):
                yield ((a, b),) + rest, exponent + psi.degree * skipped


def rho(psis, word, space):
    """ sum of id^(x)i (x) psi_1 (x) id^(x)j (x) psi_2 ... applied to word, as a tensor """
    word = tuple(word)
    result = {}
    for blocks, exponent in _rhoPlacements(tuple(psis), word, space):
        current = {(): Fraction(1)}
        last = 0
        for (a, b), psi in zip(blocks, psis):
            value = psi.value(word[a:b])
            if not value:
                current = {}
                break
            current = _tensorVector(_concat(current, {word[last:a]: Fraction(1)}), value)
            last = b
        if not current:
            continue
        current = _concat(current, {word[last:]: Fraction(1)})
        for w, c in current.items():
            _accumulate(result, w, c * (-1 if exponent % 2 else 1))
    return result


def braces(phi, psis, cap):
    """ phi{psi_1, ..., psi_k} = phi o rho(psi_1 .. psi_k) on words of length <= cap """
    space = phi.space
    table = {}
    for word in space.words(cap):
        value = phi.applyTensor(rho(psis, word, space))
        if value:
            table[word] = value
    return Cochain(space, phi.degree + sum(p.degree for p in psis), table)


class CochainWords(object):
    """ Linear combination of words of cochains: [(coefficient, (phi_1, ..., phi_k))] """
    def __init__(self, terms=None):
        self.terms = [(Fraction(c), tuple(word)) for c, word in (terms or []) if c]

    @classmethod
    def single(cls, *letters):
        return cls([(1, letters)])

    def __add__(self, other):
        return CochainWords(self.terms + other.terms)

    def __mul__(self, c):
        return CochainWords([(coeff * c, word) for coeff, word in self.terms])

    __rmul__ = __mul__

    def __sub__(self, other):
        return self + other * -1

    def expand(self):
        """ Canonical coordinates: tuples of (word, name) keys, one per letter """
        result = {}
        for c, letters in self.terms:
            partial = {(): c}
            for letter in letters:
                coords = letter.expand()
                partial = dict(((key + (k,)), v * w) for key, v in partial.items() for k, w in coords.items())
            for key, v in partial.items():
                _accumulate(result, key, v)
        return result

    def isZero(self):
        return not self.expand()

    def __eq__(self, other):
        return isinstance(other, CochainWords) and self.expand() == other.expand()

    def __ne__(self, other):
        return not self == other


def _bulletWords(xi, eta, cap):
    """ xi bullet_K eta for single words, by the explicit brace formula """
    k, l = len(xi), len(eta)
    result = []
    for cuts in itertools.combinations_with_replacement(range(l + 1), 2 * k):
        letters = list(eta[:cuts[0]]) if k else list(eta)
        exponent = 0
        for r in range(k):
            start, end = cuts[2 * r], cuts[2 * r + 1]
            exponent += xi[r].degree * wordDegree(eta[:start])
            letters.append(braces(xi[r], eta[start:end], cap) if end > start else xi[r])
            stop = cuts[2 * r + 2] if r + 1 < k else l
            letters.extend(eta[end:stop])
        result.append((-1 if exponent % 2 else 1, tuple(letters)))
    return result


def bullet_K(u, v, cap):
    """ Product of the bialgebra of words of cochains (explicit formula) """
    terms = []
    for c1, xi in u.terms:
        for c2, eta in v.terms:
            for sign, word in _bulletWords(xi, eta, cap):
                terms.append((c1 * c2 * sign, word))
    return CochainWords(terms)


def _coinducedPieces(xi, eta, i, j, before):
    """ Splittings of (xi, eta) into pieces (empty, psi) or (phi, eta-block) with
        the coproduct sign prod (-1)^{|xi^(p)| |eta^(q)|}, q < p.
    """
    if i == len(xi) and j == len(eta):
        yield (), 0
        return
    if j < len(eta):
        for rest, exponent in _coinducedPieces(xi, eta, i, j + 1, before + eta[j].degree):
            yield ((None, (eta[j],)),) + rest, exponent
    if i < len(xi):
        for end in range(j, len(eta) + 1):
            block = eta[j:end]
            for rest, exponent in _coinducedPieces(xi, eta, i + 1, end, before + wordDegree(block)):
                yield ((xi[i], block),) + rest, exponent + xi[i].degree * before


def bullet_K_coinduced(u, v, cap):
    """ The same product as the coinduced morphism of m_K, computed piece by piece """
    terms = []
    for c1, xi in u.terms:
        for c2, eta in v.terms:
            for pieces, exponent in _coinducedPieces(xi, eta, 0, 0, 0):
                letters = []
                for phi, block in pieces:
                    if phi is None:
                        letters.extend(block)
                    elif block:
                        letters.append(braces(phi, block, cap))
                    else:
                        letters.append(phi)
                terms.append((c1 * c2 * (-1 if exponent % 2 else 1), tuple(letters)))
    return CochainWords(terms)


def bracket_cobord(m, phi, cap):
    """ b(phi) = [m, phi]_G """
    return bracket_G(m, phi, cap)


def cup_K(m, phi, psi, cap):
    """ phi U psi = (-1)^{|phi|} m{phi, psi} """
    value = braces(m, (phi, psi), cap)
    return value * (-1 if phi.degree % 2 else 1)


def _check_m(m, cap):
    if not circ_G(m, m, cap).isZero():
        raise NonAssociative('m o_G m does not vanish')


def b_K(m, u, cap):
    """ Differential of the bar construction on words of cochains:

            sum_s (-1)^{|phi_1..phi_s|} .. b(phi_{s+1}) ..
          + sum_s (-1)^{|phi_1..phi_{s+1}|} .. (phi_{s+1} U phi_{s+2}) ..
    """
    _check_m(m, cap)
    terms = []
    for c, word in u.terms:
        for s in range(len(word)):
            sign = -1 if wordDegree(word[:s]) % 2 else 1
            letters = word[:s] + (bracket_cobord(m, word[s], cap),) + word[s + 1:]
            terms.append((c * sign, letters))
        for s in range(len(word) - 1):
            sign = -1 if wordDegree(word[:s + 1]) % 2 else 1
            letters = word[:s] + (cup_K(m, word[s], word[s + 1], cap),) + word[s + 2:]
            terms.append((c * sign, letters))
    return CochainWords(terms)


def b_K_commutator(m, u, cap):
    """ m bullet u - (-1)^{|u|} u bullet m, for homogeneous u """
    _check_m(m, cap)
    single = CochainWords.single(m)
    degrees = set(wordDegree(word) for _, word in u.terms)
    if len(degrees) > 1:
        raise ValueError('b_K_commutator needs a homogeneous element')
    degree = degrees.pop() if degrees else 0
    return bullet_K(single, u, cap) - bullet_K(u, single, cap) * (-1 if degree % 2 else 1)


# The obstruction complex of a Gerstenhaber algebra g with h = g[1]
#
# A GWord is a letter of S((T+ h)[1]): a tuple of words, each word standing
# for its suspension sW of degree |W| - 1. A GWord cochain c sends GWords to
# vectors y of h, standing for s y in h[1].

def _shiftedDegree(space, word):
    return space.wordDegree(word) - 1


def normalizeGWord(space, words):
    """ (sign, sorted tuple of words), sign 0 when an odd word repeats """
    words = tuple(tuple(w) for w in words)
    perm = sorted(range(len(words)), key=lambda i: (len(words[i]), [space.index(x) for x in words[i]]))
    ordered = tuple(words[i] for i in perm)
    for u, v in zip(ordered, ordered[1:]):
        if u == v and _shiftedDegree(space, u) % 2:
            return 0, ordered
    return koszulSign([_shiftedDegree(space, w) for w in words], perm), ordered


def gwords(space, cap):
    """ All normal form GWords with at most cap letters in total """
    words = list(space.words(cap))
    words.sort(key=lambda w: (len(w), [space.index(x) for x in w]))
    found = []

    def extend(start, current, letters):
        if current:
            found.append(tuple(current))
        for i in range(start, len(words)):
            w = words[i]
            if letters + len(w) > cap:
                continue
            if current and current[-1] == w and _shiftedDegree(space, w) % 2:
                continue
            extend(i, current + [w], letters + len(w))

    extend(0, [], 0)
    return found


class GCochain(object):
    """ Cochain on the cofree Gerstenhaber coalgebra cover: {GWord: vector of h} """
    def __init__(self, space, degree, table=None):
        self.space = space
        self.degree = degree
        self._table = {}
        for words, vector in (table or {}).items():
            sign, key = normalizeGWord(space, words)
            if not sign:
                continue
            expected = degree + 1 + sum(_shiftedDegree(space, w) for w in key)
            for name, c in vector.items():
                if c and space.degree(name) != expected:
                    raise ValueError('value %s on %s does not have degree %d' % (name, key, expected))
                if c:
                    self._table.setdefault(key, {})
                    _accumulate(self._table[key], name, Fraction(c) * sign)
            if key in self._table and not self._table[key]:
                del self._table[key]

    def value(self, words):
        sign, key = normalizeGWord(self.space, words)
        if not sign:
            return {}
        return vscale(self._table.get(key, {}), sign)

    def items(self):
        return sorted(self._table.items())

    def longest(self):
        """ Largest number of letters in a GWord of the support """
        return max([0] + [sum(len(w) for w in key) for key in self._table])

    def isZero(self):
        return not self._table

    def __eq__(self, other):
        if not isinstance(other, GCochain):
            return NotImplemented
        if not self._table and not other._table:
            return True
        return self.degree == other.degree and self._table == other._table

    def __ne__(self, other):
        return not self == other

    def _combine(self, other, c):
        table = dict((key, dict(vector)) for key, vector in self._table.items())
        for key, vector in other._table.items():
            table[key] = vadd(table.get(key, {}), vscale(vector, c))
        degree = self.degree if self._table else other.degree
        return GCochain(self.space, degree, table)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __mul__(self, c):
        return GCochain(self.space, self.degree, dict((k, vscale(v, c)) for k, v in self._table.items()))

    __rmul__ = __mul__

    def __repr__(self):
        return 'GCochain[%d](%s)' % (self.degree, self.items())


def _splits(word):
    """ word = A B C with B nonempty """
    for start in range(len(word)):
        for end in range(start + 1, len(word) + 1):
            yield word[:start], word[start:end], word[end:]


def _multiShuffle(space, parts):
    result = {(): Fraction(1)}
    for part in parts:
        result = shuffle_tensors(space, result, {tuple(part): Fraction(1)})
    return result


def lieProjection(c, words):
    """ Component of the coderivation of c from the product of the given
        shifted words to a single shifted word, as a tensor of output words:

            sW_1 ... sW_p -> sum +- s((A_1 . .. . A_p) c(sB_1 .. sB_p) (C_1 . .. . C_p))

        over the splittings W_i = A_i B_i C_i, with all signs produced by
        moving the suspensions, the blocks and c by the Koszul rule.
    """
    space = c.space
    p = len(words)
    result = {}
    for choice in itertools.product(*[list(_splits(w)) for w in words]):
        exponent = 0
        blocks, degrees = [], []
        for A, B, C in choice:
            exponent += space.wordDegree(A)
            degrees.extend([space.wordDegree(A), space.wordDegree(B) - 1, space.wordDegree(C)])
        perm = [3 * i for i in range(p)] + [3 * i + 1 for i in range(p)] + [3 * i + 2 for i in range(p)]
        sign = koszulSign(degrees, perm)
        degreeA = sum(space.wordDegree(A) for A, _, _ in choice)
        exponent += c.degree * degreeA + degreeA
        value = c.value([B for _, B, _ in choice])
        if not value:
            continue
        sign *= -1 if exponent % 2 else 1
        head = _multiShuffle(space, [A for A, _, _ in choice])
        tail = _multiShuffle(space, [C for _, _, C in choice])
        for w, coeff in _concat(_tensorVector(head, value), tail).items():
            _accumulate(result, w, coeff * sign)
    return result


def coderivation(c, words):
    """ Coderivation of S((T+ h)[1]) with projection c, applied to a GWord:
        sum over unshuffles e(R) D_C(sW_R) sW_rest, as {GWord: coefficient}
    """
    space = c.space
    degrees = [_shiftedDegree(space, w) for w in words]
    result = {}
    for chosen, rest in _unshuffles(len(words)):
        sign = koszulSign(degrees, chosen + rest)
        out = lieProjection(c, [words[i] for i in chosen])
        for w, coeff in out.items():
            nsign, key = normalizeGWord(space, (w,) + tuple(words[i] for i in rest))
            if nsign:
                _accumulate(result, key, coeff * sign * nsign)
    return result


def circ_T(c1, c2, cap):
    """ c1 o_T c2 = c1 o coderivation(c2) on GWords with at most cap letters """
    _checkCap(cap, c1, c2)
    space = c1.space
    table = {}
    for words in gwords(space, cap):
        value = {}
        for key, coeff in coderivation(c2, words).items():
            value = vadd(value, vscale(c1.value(key), coeff))
        if value:
            table[words] = value
    return GCochain(space, c1.degree + c2.degree, table)


def bracket_T(c1, c2, cap):
    return _bracket(circ_T, c1, c2, cap)


class GerstenhaberAlgebra(object):
    """ Finite Gerstenhaber algebra g: a graded commutative product and a
        bracket of degree -1 given by structure constants on a graded basis.
    """
    def __init__(self, space, product, bracket):
        self.space = space
        self.product = product
        self.bracket = bracket

    def hSpace(self):
        """ h = g[1] """
        return self.space.shifted(1)

    @classmethod
    def from_multivectors(cls, config, basis):
        """ Wedge and Schouten structure constants on a list of (name, MultiVec)
            spanning a subspace closed under both operations.
        """
        from coisostar.geometry import schouten, wedge
        names = [name for name, _ in basis]
        coords = []
        for _, X in basis:
            coords.append(dict(((s, mono), c) for s, f in X.terms() for mono, c in f.terms()))
        keys = set(k for vector in coords for k in vector)

        def solve(Y):
            target = dict(((s, mono), c) for s, f in Y.terms() for mono, c in f.terms())
            if not target:
                return {}
            rows = list(keys | set(target))
            index = dict((k, r) for r, k in enumerate(rows))
            matrix = sympy.zeros(len(rows), len(names))
            for col, vector in enumerate(coords):
                for k, c in vector.items():
                    matrix[index[k], col] = sympy.Rational(c.numerator, c.denominator)
            rhs = sympy.zeros(len(rows), 1)
            for k, c in target.items():
                rhs[index[k], 0] = sympy.Rational(c.numerator, c.denominator)
            try:
                solution, params = matrix.gauss_jordan_solve(rhs)
            except ValueError:
                raise ValueError('basis is not closed under the Gerstenhaber operations')
            solution = solution.subs(dict((p, 0) for p in params))
            return dict((name, Fraction(int(c.p), int(c.q))) for name, c in zip(names, solution) if c != 0)

        space = GradedSpace([(name, X.rank) for name, X in basis])
        product, bracket = {}, {}
        for (u, X), (v, Y) in itertools.product(basis, repeat=2):
            w = solve(wedge(X, Y))
            if w:
                product[(u, v)] = w
            w = solve(schouten(X, Y))
            if w:
                bracket[(u, v)] = w
        return cls(space, product, bracket)

    def d11(self):
        """ Shifted bracket: s x . s y -> (-1)^{|x|-1} s[x, y], degrees in h """
        h = self.hSpace()
        table = {}
        names = h.names()
        for i, u in enumerate(names):
            for v in names[i:]:
                value = self.bracket.get((u, v), {})
                if value:
                    table[((u,), (v,))] = vscale(value, -1 if (h.degree(u) - 1) % 2 else 1)
        return GCochain(h, 1, table)

    def d2(self):
        """ Shifted product on words of length two: s[xy] -> s((-1)^{|x|} x y) """
        h = self.hSpace()
        table = {}
        for (u, v), value in self.product.items():
            table[((u, v),)] = vscale(value, -1 if h.degree(u) % 2 else 1)
        return GCochain(h, 1, table)


def obstruction_diffs(algebra, c, which, cap):
    """ D_CE = [d^{1,1}, c]_T or D_Har = [d^2, c]_T """
    if which == 'CE':
        d = algebra.d11()
    elif which == 'Har':
        d = algebra.d2()
    else:
        raise ParseError('unknown differential %r' % which)
    return bracket_T(d, c, cap)


def word_component(c, cap):
    """ The one word part of a GWord cochain as a cochain on words of h """
    space = c.space
    table = {}
    for word in space.words(cap):
        value = c.value((word,))
        if value:
            table[word] = value
    return Cochain(space, c.degree, table)
