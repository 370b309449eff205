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

""" Standalone server with the coisostar services plus a small demo service.

    python demos/StarServices.py

    curl -d '{"header": {"operation": "moyal"}, "body": {"order": 2}}' \
        http://localhost:8080/MoyalService
"""
import tornado.httpserver
import tornado.ioloop
from tornado.log import enable_pretty_logging

from coisostar import formality, jsontypes, services, webservices
from coisostar.geometry import MultiVec, SpaceConfig
from coisostar.jsonhandler import JsonHandler, operation


class MoyalService(JsonHandler):
    """ Moyal product of the constant bivector d/dx1 ^ d/dx2 on R^2 """
    @operation(_params=jsontypes.Integer, _returns=jsontypes.StarProductType)
    def moyal(self, order):
        P = MultiVec.basis(SpaceConfig(2, 1), (1, 2))
        return formality.moyal_product(P, order)


class CheckService(JsonHandler):
    """ Checks a star product against a Poisson bivector """
    @operation(_params=[jsontypes.StarProductType, jsontypes.MultiVecType], _returns=jsontypes.Report)
    def check(self, product, poisson):
        return formality.verify_star(product, poisson)


if __name__ == '__main__':
    enable_pretty_logging()
    service = services.SERVICES + [('MoyalService', MoyalService), ('CheckService', CheckService)]
    app = webservices.WebService(service)
    ws = tornado.httpserver.HTTPServer(app)
    ws.listen(8080)
    tornado.ioloop.IOLoop.current().start()
