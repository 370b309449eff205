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

""" Implementation of jsonhandler for the coisostar web services """
import inspect
import json

import tornado.web
from tornado.log import app_log

from coisostar import jsontypes
from coisostar.errors import CoisoError, ParseError
from coisostar.message import JsonMessage


def operation(*params, **kwparams):
    """ Decorator method for web services operations """
    def method(f):
        _input = None
        _output = None
        _inputArray = False
        _outputArray = False
        _args = None
        if len(kwparams):
            _params = kwparams['_params']
            _args = inspect.getfullargspec(f).args[1:]
            _input = {}
            if isinstance(_params, list):
                if len(_params) != len(_args):
                    raise TypeError('%s declares %d parameters for %d arguments' % (f.__name__, len(_params), len(_args)))
                for arg, type in zip(_args, _params):
                    _input[arg] = type
            else:
                for arg in _args:
                    _input[arg] = _params
                if isinstance(_params, jsontypes.Array):
                    _inputArray = True

            _returns = kwparams['_returns']
            if isinstance(_returns, jsontypes.Array):
                _output = _returns
                _outputArray = True
            elif inspect.isclass(_returns) and issubclass(_returns, jsontypes.PrimitiveType):
                _output = _returns

        def wrapped(*args, **kwargs):
            return f(*args, **kwargs)

        wrapped.__name__ = f.__name__
        wrapped.__doc__ = f.__doc__
        wrapped._is_operation = True
        wrapped._args = _args
        wrapped._input = _input
        wrapped._output = _output
        wrapped._operation = f.__name__
        wrapped._inputArray = _inputArray
        wrapped._outputArray = _outputArray
        return wrapped
    return method


def jsonfault(faultstring, faultcode='Server'):
    """ Method for generate a json fault
        jsonfault() return a JsonMessage() object with the fault in the body
    """
    fault = JsonMessage()
    fault.setBody({'fault': {'faultcode': faultcode, 'faultstring': faultstring}})
    return fault


def _describeType(name, type):
    if isinstance(type, jsontypes.Array):
        return type.createArray(name)
    return type.createElement(name)


class JsonHandler(tornado.web.RequestHandler):
    """ This subclass extends tornado.web.RequestHandler class, defining the
        methods get() and post() for handle a json message (request and response).
    """
    def _operations(self):
        found = []
        for name in dir(type(self)):
            if name.startswith('_'):
                continue
            attr = getattr(type(self), name, None)
            if callable(attr) and hasattr(attr, '_is_operation'):
                found.append(getattr(self, name))
        return found

    def get(self):
        """ Method get() returns the description of the operations of the service """
        service = self.request.path.strip('/')
        description = {'service': service, 'operations': []}
        for op in self._operations():
            description['operations'].append({
                'name': op._operation,
                'doc': (op.__doc__ or '').strip(),
                'params': [_describeType(arg, op._input[arg]) for arg in op._args],
                'returns': _describeType('returns', op._output),
            })
        self.set_header('Content-Type', 'application/json; charset=UTF-8')
        self.finish(json.dumps(description, sort_keys=True))

    def post(self):
        """ Method post() to process of requests and responses json messages """
        self.set_header('Content-Type', 'application/json; charset=UTF-8')
        try:
            self._request = JsonMessage.fromJson(self.request.body)
            op = self._findOperation(self._request.getHeader().get('operation'))
            app_log.info('%s: operation %s', self.request.path, op._operation)
            if op._inputArray:
                response = op(self._parseParams(op)[0])
            else:
                response = op(*self._parseParams(op))
            self._response = self._createReturns(response, op)
            self.write(self._response.toString())
        except CoisoError as detail:
            app_log.warning('%s: %s', detail.__class__.__name__, detail)
            fault = jsonfault('%s' % detail, detail.__class__.__name__)
            fault.getBody()['fault'].update(detail.payload())
            self.set_status(400)
            self.write(fault.toString())
        except Exception as detail:
            app_log.exception('error in web service')
            fault = jsonfault('Error in web service : %s' % detail)
            self.set_status(500)
            self.write(fault.toString())

    def _findOperation(self, name):
        """ Private method choosing the operation named in the header, or the only one """
        ops = self._operations()
        if name is not None:
            for op in ops:
                if op._operation == name:
                    return op
            raise ParseError('unknown operation %r' % name)
        if len(ops) != 1:
            raise ParseError('the header must name one of the operations %s' % ', '.join(op._operation for op in ops))
        return ops[0]

    def _parseParams(self, op):
        """ Private method to read the parameters of the operation from the body """
        body = self._request.getBody()
        values = []
        for arg in op._args:
            if arg not in body:
                raise ParseError('missing parameter %r' % arg)
            values.append(op._input[arg].genType(body[arg]))
        return values

    def _createReturns(self, result, op):
        """ Private method to generate the response message """
        response = JsonMessage()
        output = op._output
        if output is None:
            response.setBody({'returns': result})
        else:
            response.setBody({'returns': output.toJSON(result)})
        return response
