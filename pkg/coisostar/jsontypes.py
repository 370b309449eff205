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

"""
    JSON datatypes of the web services: primitive values and the objects of
    the library, each with its schema type name, its reader genType() and its
    writer toJSON().
    Array is defined for lists of elements of one datatype.
"""
from coisostar.errors import ParseError


def createElementJSON(name, type):
    """ Description of a named element for the service description """
    return {'name': name, 'type': type}


def createArrayJSON(name, type, maxoccurs=None):
    element = {'name': name, 'type': 'array', 'items': type}
    if maxoccurs is not None:
        element['maxOccurs'] = maxoccurs
    return element


class Array(object):
    """ Create arrays of JSON elements.

        @operation(_params=jsontypes.Array(jsontypes.MultiVecType), _returns=jsontypes.MultiVecType)
        def wedgeAll(self, multivectors):
            ...

        makes the parameter multivectors a python list of MultiVec.
    """
    def __init__(self, type, maxOccurs=None):
        self._type = type
        self._n = maxOccurs

    def createArray(self, name):
        return createArrayJSON(name, self._type.getType(self._type), self._n)

    def genType(self, v):
        if not isinstance(v, list):
            raise ParseError('expected a list, got %r' % (v,))
        if self._n is not None and len(v) > self._n:
            raise ParseError('at most %d elements allowed' % self._n)
        return [self._type.genType(e) for e in v]

    def toJSON(self, v):
        return [self._type.toJSON(e) for e in v]


class PrimitiveType(object):
    """ Class father for all derived types. """

    @staticmethod
    def createElement(name):
        raise NotImplementedError

    @classmethod
    def toJSON(cls, v):
        return v


class Integer(PrimitiveType):
    """ 1. JSON primitive type : integer """
    @staticmethod
    def createElement(name):
        return createElementJSON(name, 'integer')

    @staticmethod
    def getType(self):
        return 'integer'

    @classmethod
    def genType(self, v):
        if isinstance(v, bool):
            raise ParseError('expected an integer, got %r' % (v,))
        try:
            return int(v)
        except (TypeError, ValueError):
            raise ParseError('expected an integer, got %r' % (v,))


class Boolean(PrimitiveType):
    """ 2. JSON primitive type : boolean """
    @staticmethod
    def createElement(name):
        return createElementJSON(name, 'boolean')

    @staticmethod
    def getType(self):
        return 'boolean'

    @classmethod
    def genType(self, v):
        if isinstance(v, bool):
            return v
        if str(v).lower() in ('true', '1'):
            return True
        if str(v).lower() in ('false', '0'):
            return False
        raise ParseError('expected a boolean, got %r' % (v,))


class String(PrimitiveType):
    """ 3. JSON primitive type : string """
    @staticmethod
    def createElement(name):
        return createElementJSON(name, 'string')

    @staticmethod
    def getType(self):
        return 'string'

    @classmethod
    def genType(self, v):
        return str(v)


class Report(PrimitiveType):
    """ 4. Free form JSON object, used for reports """
    @staticmethod
    def createElement(name):
        return createElementJSON(name, 'object')

    @staticmethod
    def getType(self):
        return 'object'

    @classmethod
    def genType(self, v):
        return v


class ObjectType(PrimitiveType):
    """ Class father for the library objects, read with fromJSON() """
    typeName = None

    @classmethod
    def createElement(cls, name):
        return createElementJSON(name, cls.typeName)

    @staticmethod
    def getType(self):
        return self.typeName

    @classmethod
    def genType(cls, v):
        if not isinstance(v, dict):
            raise ParseError('expected a %s object, got %r' % (cls.typeName, v))
        return cls._kind().fromJSON(v)

    @classmethod
    def toJSON(cls, v):
        return v.toJSON()


class PolyType(ObjectType):
    """ Polynomial, as JSON or as text like "x1^2 - 1/2*x2" """
    typeName = 'poly'

    @staticmethod
    def _kind():
        from coisostar.ratpoly import Poly
        return Poly

    @classmethod
    def genType(cls, v):
        if isinstance(v, str):
            return cls._kind().parse(v)
        return ObjectType.genType.__func__(cls, v)


class MultiVecType(ObjectType):
    typeName = 'multivec'

    @staticmethod
    def _kind():
        from coisostar.geometry import MultiVec
        return MultiVec


class GTildeVecType(ObjectType):
    typeName = 'gtildevec'

    @staticmethod
    def _kind():
        from coisostar.geometry import GTildeVec
        return GTildeVec


class OperatorType(ObjectType):
    typeName = 'operator'

    @staticmethod
    def _kind():
        from coisostar.hochschild import PolyDiffOp
        return PolyDiffOp


class StarProductType(ObjectType):
    typeName = 'starproduct'

    @staticmethod
    def _kind():
        from coisostar.formality import StarProduct
        return StarProduct
