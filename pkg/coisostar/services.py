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

""" The JSON web services of coisostar """
from coisostar import formality, hkr, jsontypes, koszulbar
from coisostar.errors import UsageError
from coisostar.geometry import SpaceConfig, embed_gtilde, psi_project, schouten, wedge
from coisostar.hochschild import cup, gerst_bracket
from coisostar.jsonhandler import JsonHandler, operation


class BracketService(JsonHandler):
    """ Brackets and products of multivectors and of polydifferential operators """
    @operation(_params=[jsontypes.MultiVecType, jsontypes.MultiVecType], _returns=jsontypes.MultiVecType)
    def schouten(self, left, right):
        """ Schouten bracket [left, right]_S """
        return schouten(left, right)

    @operation(_params=[jsontypes.MultiVecType, jsontypes.MultiVecType], _returns=jsontypes.MultiVecType)
    def wedge(self, left, right):
        return wedge(left, right)

    @operation(_params=[jsontypes.OperatorType, jsontypes.OperatorType], _returns=jsontypes.OperatorType)
    def gerstenhaber(self, left, right):
        """ Gerstenhaber bracket [left, right]_G """
        return gerst_bracket(left, right)

    @operation(_params=[jsontypes.OperatorType, jsontypes.OperatorType], _returns=jsontypes.OperatorType)
    def cup(self, left, right):
        return cup(left, right)


class HkrService(JsonHandler):
    """ HKR maps and the decomposition of Hochschild cocycles """
    @operation(_params=jsontypes.MultiVecType, _returns=jsontypes.OperatorType)
    def psi1(self, multivec):
        return hkr.psi1(multivec)

    @operation(_params=jsontypes.OperatorType, _returns=jsontypes.MultiVecType)
    def pi(self, op):
        return hkr.pi_hkr(op)

    @operation(_params=jsontypes.OperatorType, _returns=jsontypes.Report)
    def decompose(self, op):
        """ op = psi1(harmonic) + b(primitive) """
        return hkr.decompose(op).toJSON()

    @operation(_params=jsontypes.MultiVecType, _returns=jsontypes.GTildeVecType)
    def normal(self, multivec):
        """ Restriction to C followed by the projection on the normal bundle """
        return psi_project(multivec)

    @operation(_params=jsontypes.GTildeVecType, _returns=jsontypes.MultiVecType)
    def embed(self, normal):
        return embed_gtilde(normal)


class CohomologyService(JsonHandler):
    @operation(_params=[jsontypes.Integer, jsontypes.Integer, jsontypes.String, jsontypes.Integer,
                        jsontypes.Integer, jsontypes.Integer], _returns=jsontypes.Report)
    def cohomology(self, n, l, bimodule, degree, polyDeg, opOrder):
        """ Truncated Koszul cohomology with values in a bimodule """
        try:
            config = SpaceConfig(n, l)
        except ValueError as detail:
            raise UsageError(str(detail))
        return koszulbar.truncated_cohomology(config, bimodule, degree, polyDeg, opOrder).toJSON()


class StarService(JsonHandler):
    """ Adapted star products """
    @operation(_params=[jsontypes.MultiVecType, jsontypes.Integer, jsontypes.Boolean],
               _returns=jsontypes.StarProductType)
    def build(self, poisson, order, requireAdapted):
        return formality.mc_build(poisson, order, requireAdapted)

    @operation(_params=[jsontypes.StarProductType, jsontypes.MultiVecType], _returns=jsontypes.Report)
    def verify(self, product, poisson):
        return formality.verify_star(product, poisson)


SERVICES = [
    ('BracketService', BracketService),
    ('HkrService', HkrService),
    ('CohomologyService', CohomologyService),
    ('StarService', StarService),
]
