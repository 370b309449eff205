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

""" Implementation of the coisostar web services application """
import logging

import tornado.web


log = logging.getLogger(__name__)


class WebService(tornado.web.Application):
    """ A tornado application serving JsonHandler subclasses.

        from coisostar import jsontypes, webservices
        from coisostar.geometry import schouten
        from coisostar.jsonhandler import JsonHandler, operation

        class SchoutenService(JsonHandler):
            @operation(_params=[jsontypes.MultiVecType, jsontypes.MultiVecType], _returns=jsontypes.MultiVecType)
            def bracket(self, left, right):
                return schouten(left, right)

        if __name__ == '__main__':
            app = webservices.WebService('SchoutenService', SchoutenService)
            server = tornado.httpserver.HTTPServer(app)
            server.listen(8080)
            tornado.ioloop.IOLoop.current().start()
    """
    def __init__(self, services, object=None, **settings):
        """ Initializes the application for web services

            services is either a list of (name, handler) pairs, or the
            name of a single service whose handler is object.
        """
        if object is not None:
            services = [(services, object)]
        routes = []
        for name, handler in services:
            log.debug('routing /%s to %s', name, handler.__name__)
            routes.append((r"/" + str(name), handler))
            routes.append((r"/" + str(name) + "/", handler))
        self.services = dict((str(name), handler) for name, handler in services)
        tornado.web.Application.__init__(self, routes, **settings)
