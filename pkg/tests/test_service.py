import json

from tornado.testing import AsyncHTTPTestCase

from coisostar import formality, ratpoly, services
from coisostar.geometry import GTildeVec, MultiVec, SpaceConfig, schouten
from coisostar.hochschild import PolyDiffOp, unitIndex
from coisostar.message import JsonMessage
from coisostar.ratpoly import Poly
from coisostar.webservices import WebService


config = SpaceConfig(2, 1)
x1 = Poly.var(ratpoly.x(1))
x2 = Poly.var(ratpoly.x(2))


class ServicesTest(AsyncHTTPTestCase):
    def get_app(self):
        return WebService(services.SERVICES)

    def call(self, service, operation, body):
        message = JsonMessage()
        if operation is not None:
            message.setHeader({'operation': operation})
        message.setBody(body)
        response = self.fetch('/' + service, method='POST', body=message.toString())
        return response.code, json.loads(response.body.decode('utf-8'))['body']

    def test_description(self):
        response = self.fetch('/BracketService/')
        self.assertEqual(response.code, 200)
        description = json.loads(response.body.decode('utf-8'))
        names = sorted(op['name'] for op in description['operations'])
        self.assertEqual(names, ['cup', 'gerstenhaber', 'schouten', 'wedge'])
        schouten_op = [op for op in description['operations'] if op['name'] == 'schouten'][0]
        self.assertEqual([p['type'] for p in schouten_op['params']], ['multivec', 'multivec'])

    def test_schouten(self):
        X = MultiVec(config, {(2,): x1}, 1)
        Y = MultiVec(config, {(1,): 1}, 1)
        code, body = self.call('BracketService', 'schouten', {'left': X.toJSON(), 'right': Y.toJSON()})
        self.assertEqual(code, 200)
        self.assertEqual(MultiVec.fromJSON(body['returns']), schouten(X, Y))

    def test_gerstenhaber(self):
        D = PolyDiffOp(config, 1, {(unitIndex(1, 2),): x2})
        E = PolyDiffOp(config, 1, {(unitIndex(2, 2),): x2})
        code, body = self.call('BracketService', 'gerstenhaber', {'left': D.toJSON(), 'right': E.toJSON()})
        self.assertEqual(code, 200)
        self.assertEqual(PolyDiffOp.fromJSON(body['returns']), PolyDiffOp(config, 1, {(unitIndex(1, 2),): -x2}))

    def test_single_operation_needs_no_header(self):
        code, body = self.call('CohomologyService', None, {
            'n': 2, 'l': 1, 'bimodule': 'A', 'degree': 0, 'polyDeg': 2, 'opOrder': 2})
        self.assertEqual(code, 200)
        self.assertEqual(body['returns']['dims'], 6)

    def test_verify_star_product(self):
        P = MultiVec(config, {(2, 1): 1}, 2)
        star = formality.standard_ordered_product(P, 2)
        code, body = self.call('StarService', 'verify', {'product': star.toJSON(), 'poisson': P.toJSON()})
        self.assertEqual(code, 200)
        self.assertTrue(body['returns']['passed'])

    def test_library_errors_are_faults(self):
        P = MultiVec(SpaceConfig(3, 1), {(1, 2): 1, (2, 3): x2}, 2)
        code, body = self.call('StarService', 'build', {'poisson': P.toJSON(), 'order': 1, 'requireAdapted': False})
        self.assertEqual(code, 400)
        self.assertEqual(body['fault']['faultcode'], 'NotPoisson')

    def test_missing_parameter(self):
        code, body = self.call('HkrService', 'pi', {})
        self.assertEqual(code, 400)
        self.assertEqual(body['fault']['faultcode'], 'ParseError')

    def test_operation_must_be_named(self):
        code, body = self.call('HkrService', None, {'op': {}})
        self.assertEqual(code, 400)
        self.assertIn('psi1', body['fault']['faultstring'])

    def test_malformed_message(self):
        response = self.fetch('/HkrService', method='POST', body='not json')
        self.assertEqual(response.code, 400)
        fault = json.loads(response.body.decode('utf-8'))['body']['fault']
        self.assertEqual(fault['faultcode'], 'ParseError')

    def test_normal_projection(self):
        X = MultiVec(config, {(2,): x1 + x1 * x2}, 1)
        code, body = self.call('HkrService', 'normal', {'multivec': X.toJSON()})
        self.assertEqual(code, 200)
        self.assertEqual(GTildeVec.fromJSON(body['returns']), GTildeVec(config, {(2,): x1}, 1))

    def test_normal_embedding(self):
        xi = GTildeVec(config, {(2,): x1 * x1}, 1)
        code, body = self.call('HkrService', 'embed', {'normal': xi.toJSON()})
        self.assertEqual(code, 200)
        self.assertEqual(MultiVec.fromJSON(body['returns']), MultiVec(config, {(2,): x1 * x1}, 1))

    def test_normal_vectors_are_validated(self):
        bad = MultiVec(config, {(2,): x2}, 1).toJSON()
        code, body = self.call('HkrService', 'embed', {'normal': bad})
        self.assertEqual(code, 400)
        self.assertEqual(body['fault']['faultcode'], 'ParseError')


class SingleServiceTest(AsyncHTTPTestCase):
    def get_app(self):
        return WebService('Hkr', services.HkrService)

    def test_routes(self):
        self.assertEqual(self._app.services, {'Hkr': services.HkrService})
        for path in ('/Hkr', '/Hkr/'):
            response = self.fetch(path)
            self.assertEqual(response.code, 200)
            names = sorted(op['name'] for op in json.loads(response.body.decode('utf-8'))['operations'])
            self.assertIn('normal', names)
        self.assertEqual(self.fetch('/HkrService').code, 404)
