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

""" Star products on R^n adapted to C = R^{n-l}: the order by order
    Maurer-Cartan construction, its verification, closed form exponential
    products and the truncated perturbation recursion transferring the
    L-infinity structure of G_I onto g_I along the adapted HKR map.
"""
import itertools
import json
import logging
import random
from fractions import Fraction
from math import factorial

from coisostar.coalg import koszulSign
from coisostar.errors import (
    CapExceeded, NotAdapted, NotPoisson, ObstructionReport, ParseError, PerturbationError, UsageError,
    VerificationFailure)
from coisostar.geometry import MultiVec, SpaceConfig, is_adapted_mv, is_poisson
from coisostar.hkr import decompose, pair_form, pi_hkr, psi1
from coisostar.hochschild import (
    PolyDiffOp, addIndex, gerst_bracket, gerst_product, hochschild_b, is_adapted_op, mu, order, unitIndex,
    zeroIndex)

log = logging.getLogger(__name__)

# largest rank accepted by perturb
max_rank = 3


class StarProduct(object):
    """ f * g = fg + sum_{r=1..N} h^r C_r(f, g), truncated at order N """
    def __init__(self, config, order, C):
        if len(C) != order:
            raise ValueError('expected %d cochains, got %d' % (order, len(C)))
        for op in C:
            if op.arity != 2 and not op.isZero():
                raise ValueError('star product cochains are bidifferential')
        self.config = config
        self.order = order
        self.C = [op if op.arity == 2 else PolyDiffOp.zero(config, 2) for op in C]

    def truncate(self, order):
        return StarProduct(self.config, order, self.C[:order])

    def component(self, r):
        """ C_r, with C_0 the pointwise product """
        if r == 0:
            return mu(self.config)
        return self.C[r - 1]

    def apply(self, f, g):
        """ Coefficients [fg, C_1(f,g), ..., C_N(f,g)] """
        return [self.component(r).apply([f, g]) for r in range(self.order + 1)]

    def toJSON(self):
        return {'order': self.order, 'C': [op.toJSON() for op in self.C]}

    @classmethod
    def fromJSON(cls, data, config=None):
        try:
            ops = [PolyDiffOp.fromJSON(entry, config) for entry in data['C']]
            if config is None:
                config = ops[0].config if ops else SpaceConfig(int(data['n']), int(data['l']))
            return cls(config, int(data['order']), ops)
        except (KeyError, TypeError, ValueError) as detail:
            raise ParseError('bad star product JSON: %s' % detail)


def _defect(C, k):
    """ sum_{i+j=k, i,j>=1} C_i o_G C_j """
    config = C[0].config
    result = PolyDiffOp.zero(config, 3)
    for i in range(1, k):
        result = result + gerst_product(C[i - 1], C[k - i - 1])
    return result


def associativity_defect(C, k):
    """ Order k coefficient of the associator of mu + sum h^r C_r """
    config = C[0].config
    m = mu(config)
    return gerst_product(m, C[k - 1]) + gerst_product(C[k - 1], m) + _defect(C, k)


def maurer_cartan_residual(C, k):
    """ b(C_k) - 1/2 sum_{i+j=k} [C_i, C_j]_G """
    config = C[0].config
    half = PolyDiffOp.zero(config, 3)
    for i in range(1, k):
        half = half + gerst_bracket(C[i - 1], C[k - i - 1])
    return hochschild_b(C[k - 1]) - half * Fraction(1, 2)


def _isUnital(op):
    """ C(f, 1) = 0 = C(1, f) """
    zero = zeroIndex(op.config.n)
    return all(zero not in key for key, _ in op.terms())


def _normalizeUnit(op):
    """ Gauge C -> C + b(rho) with rho multiplication by -C(1, 1) """
    zero = zeroIndex(op.config.n)
    c = op.coefficient((zero, zero))
    if not c:
        return op
    return op - mu(op.config) * c


def mc_build(P, N, requireAdapted=False):
    """ Solve the Maurer-Cartan equation b(C_k) = sum_{i+j=k} C_i o_G C_j order by order.

        C_1 = psi1(P). Raises ObstructionReport when the associativity defect
        has a non zero harmonic part.
    """
    if N < 1:
        raise UsageError('order must be at least 1')
    config = P.config
    if P.ranks() not in ([], [2]):
        raise UsageError('a Poisson structure is a bivector')
    if not is_poisson(P):
        raise NotPoisson('[P,P]_S does not vanish')
    adapted = is_adapted_mv(P)
    if requireAdapted and not adapted:
        raise NotAdapted('P is not adapted to C')
    C = [psi1(P) if P else PolyDiffOp.zero(config, 2)]
    if C[0] - C[0].swap() != pair_form(P):
        raise VerificationFailure('C_1 antisymmetrization differs from P', C[0].toJSON())
    for k in range(2, N + 1):
        O = _defect(C, k)
        log.debug('mc_build: order %d, defect has %d terms', k, len(O.terms()))
        if hochschild_b(O):
            raise VerificationFailure('associativity defect at order %d is not a cocycle' % k, O.toJSON())
        if not O:
            C.append(PolyDiffOp.zero(config, 2))
            continue
        split = decompose(O)
        if split.harmonic:
            raise ObstructionReport(k, split.harmonic, StarProduct(config, k - 1, C))
        Ck = _normalizeUnit(split.primitive)
        if not _isUnital(Ck):
            raise VerificationFailure('C_%d is not unital after normalization' % k, Ck.toJSON())
        C.append(Ck)
    star = StarProduct(config, N, C)
    report = verify_star(star, P)
    if not report['passed']:
        raise VerificationFailure('built product fails verification', report)
    for k in range(1, N + 1):
        if maurer_cartan_residual(C, k):
            raise VerificationFailure('Maurer-Cartan residual at order %d' % k, C[k - 1].toJSON())
    return star


def verify_star(star, P, order=None):
    """ Report on the star product axioms and adaptedness up to the given order """
    N = star.order if order is None else min(order, star.order)
    C = star.C[:N]
    failures = []
    checks = {'bidifferential': True, 'antisymmetrization': True, 'associativity': True,
              'unitality': True, 'adapted': True}
    if N >= 1 and C[0] - C[0].swap() != pair_form(P):
        checks['antisymmetrization'] = False
        failures.append({'check': 'antisymmetrization', 'order': 1})
    for k in range(1, N + 1):
        if associativity_defect(C, k):
            checks['associativity'] = False
            failures.append({'check': 'associativity', 'order': k})
        if not _isUnital(C[k - 1]):
            checks['unitality'] = False
            failures.append({'check': 'unitality', 'order': k})
        if not is_adapted_op(C[k - 1]):
            checks['adapted'] = False
            failures.append({'check': 'adapted', 'order': k})
    return {'order': N, 'checks': checks, 'failures': failures, 'passed': not failures}


def exponential_product(config, B, N):
    """ C_r = (1/r!) (sum B_ij d_i (x) d_j)^r for a constant matrix {(i, j): Fraction} """
    n = config.n
    zero = zeroIndex(n)
    power = {(zero, zero): Fraction(1)}
    C = []
    for r in range(1, N + 1):
        following = {}
        for (I, J), c in power.items():
            for (i, j), b in B.items():
                if not b:
                    continue
                key = (addIndex(I, unitIndex(i, n)), addIndex(J, unitIndex(j, n)))
                following[key] = following.get(key, 0) + c * b
        power = dict((key, c) for key, c in following.items() if c)
        C.append(PolyDiffOp(config, 2, dict((key, c / factorial(r)) for key, c in power.items())))
    return StarProduct(config, N, C)


def _constantMatrix(op):
    """ B_ij of a constant coefficient operator sum B_ij d_i (x) d_j """
    B = {}
    for (I, J), c in op.terms():
        if order(I) != 1 or order(J) != 1 or not c.isConstant():
            raise UsageError('exponential products need a constant Poisson structure')
        B[(I.index(1) + 1, J.index(1) + 1)] = c.constant()
    return B


def moyal_product(P, N):
    """ Weyl ordered exponential of 1/2 P(d, d) """
    return exponential_product(P.config, _constantMatrix(pair_form(P) * Fraction(1, 2)), N)


def standard_ordered_product(P, N):
    """ Exponential of psi1(P): transversal derivatives on the left factor """
    return exponential_product(P.config, _constantMatrix(psi1(P)), N)


# Transfer along psi1 of the L-infinity structure of W = G_I[2] onto V = g_I[2]:
# Q1 = (-1)^{arity} b and Q2(phi, chi) = (-1)^{arity(phi) - 1} [phi, chi]_G.

def Q1(phi):
    if phi.arity < 0:
        return phi
    return hochschild_b(phi) * (-1 if phi.arity % 2 else 1)


def Q2(phi, chi):
    if phi.arity < 0 or chi.arity < 0:
        return PolyDiffOp.zero(phi.config, -1)
    return gerst_bracket(phi, chi) * (-1 if (phi.arity - 1) % 2 else 1)


def _subsets(size, minimum, maximum):
    for count in range(minimum, maximum + 1):
        for chosen in itertools.combinations(range(size), count):
            yield chosen, tuple(i for i in range(size) if i not in chosen)


def _sign(args, perm):
    return koszulSign([X.rank % 2 for X in args], perm)


def _sameArity(op, arity):
    if op.isZero():
        return PolyDiffOp.zero(op.config, arity)
    return op


class Perturbation(object):
    """ Components d'_n (V^n -> V, degree 1) and psi_n (V^n -> W, degree 0) for n <= N,
        computed lazily on tuples of homogeneous adapted multivectors.

        At rank n the intertwining equation reads

            Q1 psi_n + R_n - psi1 d'_n = 0,

        R_n collecting the terms of lower ranks; d'_n = pi(R_n) and psi_n comes
        from the primitive of the exact part of R_n.
    """
    def __init__(self, config, N):
        if N > max_rank:
            raise CapExceeded('perturbation rank %d above %d' % (N, max_rank))
        self.config = config
        self.N = N
        self._psi = {}
        self._dprime = {}
        self._R = {}

    def _canonical(self, args):
        """ (sign, sorted args) for a graded symmetric map, sign 0 on a vanishing word """
        if any(X.isZero() for X in args):
            return 0, args
        keys = [json.dumps(X.toJSON(), sort_keys=True) for X in args]
        perm = sorted(range(len(args)), key=lambda i: keys[i])
        for i, j in zip(perm, perm[1:]):
            if keys[i] == keys[j] and args[i].rank % 2:
                return 0, args
        return _sign(args, perm), tuple(args[i] for i in perm)

    def _outputRank(self, args):
        return sum(X.rank for X in args) - 2 * len(args) + 3

    def dprime(self, args):
        """ d'_n(X_1, ..., X_n) as a multivector """
        args = tuple(args)
        n = len(args)
        rank = self._outputRank(args)
        if n < 2 or n > self.N or rank < 0:
            return MultiVec.zero(self.config, max(rank, 0))
        sign, key = self._canonical(args)
        if not sign:
            return MultiVec.zero(self.config, rank)
        if key not in self._dprime:
            self._solveBracket(key)
        return self._dprime[key] * sign

    def psi(self, args):
        """ psi_n(X_1, ..., X_n) as a polydifferential operator """
        args = tuple(args)
        n = len(args)
        arity = self._outputRank(args) - 1
        if n == 1:
            return psi1(args[0])
        if n > self.N or arity < 0:
            return PolyDiffOp.zero(self.config, max(arity, -1))
        sign, key = self._canonical(args)
        if not sign:
            return PolyDiffOp.zero(self.config, arity)
        if key not in self._psi:
            self._solveMorphism(key)
        return self._psi[key] * sign

    def _intertwining(self, args, top):
        """ Rank n component of Q psi-bar - psi-bar d', leaving out psi_n and d'_n unless top """
        n = len(args)
        arity = self._outputRank(args)
        result = PolyDiffOp.zero(self.config, arity)
        if top:
            result = result + _sameArity(Q1(self.psi(args)), arity)
            result = result - _sameArity(psi1(self.dprime(args)), arity)
        for chosen, rest in _subsets(n, 1, n - 1):
            if 0 not in chosen:
                continue
            sign = _sign(args, chosen + rest)
            left = self.psi([args[i] for i in chosen])
            right = self.psi([args[i] for i in rest])
            result = result + _sameArity(Q2(left, right), arity) * sign
        for chosen, rest in _subsets(n, 2, n - 1):
            sign = _sign(args, chosen + rest)
            inner = self.dprime([args[i] for i in chosen])
            if inner.isZero():
                continue
            result = result - _sameArity(self.psi((inner,) + tuple(args[i] for i in rest)), arity) * sign
        return result

    def _residue(self, key):
        """ R_n on a canonical word, memoized """
        if key not in self._R:
            R = self._intertwining(key, top=False)
            log.debug('perturbation: rank %d, R has arity %d and %d terms', len(key), R.arity, len(R.terms()))
            self._R[key] = R
        return self._R[key]

    def _solveBracket(self, key):
        rank = self._outputRank(key)
        R = self._residue(key)
        if R.arity < 0:
            self._dprime[key] = MultiVec.zero(self.config, max(rank, 0))
        elif R.arity == 0:
            self._dprime[key] = MultiVec.function(self.config, R.coefficient(()))
        else:
            self._dprime[key] = pi_hkr(R)

    def _solveMorphism(self, key):
        R = self._residue(key)
        if R.arity <= 0:
            self._psi[key] = PolyDiffOp.zero(self.config, R.arity - 1)
            return
        try:
            split = decompose(R)
        except Exception as detail:
            raise PerturbationError('rank %d term is not decomposable: %s' % (len(key), detail), R.toJSON())
        primitive = split.primitive
        self._psi[key] = primitive * (1 if primitive.arity % 2 else -1)

    def residual_P(self, args):
        """ Intertwining defect on a word, zero up to rank N """
        return self._intertwining(tuple(args), top=True)

    def residual_Q(self, args):
        """ (d' o_NR d')(X_1, ..., X_n), zero up to rank N + 1 """
        args = tuple(args)
        n = len(args)
        rank = self._outputRank(args) + 1
        result = MultiVec.zero(self.config, max(rank, 0))
        for chosen, rest in _subsets(n, 2, n - 1):
            sign = _sign(args, chosen + rest)
            inner = self.dprime([args[i] for i in chosen])
            if inner.isZero():
                continue
            result = result + self.dprime((inner,) + tuple(args[i] for i in rest)) * sign
        return result

    def check(self, rng, cases=10, degree=1):
        """ Assert both residuals on random words of adapted multivectors """
        from coisostar import sampling
        for _ in range(cases):
            for n in range(1, self.N + 2):
                args = [sampling.adapted_multivec(rng, self.config, rng.randint(0, 2), degree) for _ in range(n)]
                if n <= self.N and self.residual_P(args):
                    raise PerturbationError('intertwining fails at rank %d' % n, [X.toJSON() for X in args])
                if self.residual_Q(args):
                    raise PerturbationError('d\' o d\' does not vanish at rank %d' % n, [X.toJSON() for X in args])


def perturb(config, N, rng=None, cases=2):
    """ Truncated transferred structure (d', psi) of rank <= N, checked on
        at least one random word of each rank before it is returned.
    """
    result = Perturbation(config, N)
    result.check(rng or random.Random(0), max(1, cases))
    return result
