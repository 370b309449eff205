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

""" Exceptions raised by the coisostar library, with the exit code used by the command line """


class CoisoError(Exception):
    """ Class father for all the errors of the library. """
    code = 1

    def payload(self):
        """ Extra JSON fields reported together with the error message """
        return {}


class NotACocycle(CoisoError):
    """ The input of a primitive or a decomposition is not closed. """
    code = 1


class VerificationFailure(CoisoError):
    """ A postcondition or a property check failed. """
    code = 1

    def __init__(self, message, detail=None):
        CoisoError.__init__(self, message)
        self.detail = detail

    def payload(self):
        if self.detail is None:
            return {}
        return {'detail': self.detail}


class PerturbationError(VerificationFailure):
    """ A transferred structure does not satisfy its defining equation. """


class NotExact(CoisoError):
    """ A cocycle has a non zero cohomology class. The class is kept in cls. """
    code = 2

    def __init__(self, cls):
        CoisoError.__init__(self, 'cocycle is not exact, class %s' % cls)
        self.cls = cls

    def payload(self):
        return {'class': self.cls.toJSON()}


class ObstructionReport(CoisoError):
    """ The order by order construction stopped on a non vanishing class. """
    code = 2

    def __init__(self, order, cls, partial=None):
        CoisoError.__init__(self, 'obstruction at order %d' % order)
        self.order = order
        self.cls = cls
        self.partial = partial

    def payload(self):
        return {'order': self.order, 'class': self.cls.toJSON()}


class UsageError(CoisoError):
    """ Class father for bad input: exit code 3. """
    code = 3


class NotPoisson(UsageError):
    """ [P,P] does not vanish. """


class NotAdapted(UsageError):
    """ An object required to be adapted to the coisotropic submanifold is not. """


class CapExceeded(UsageError):
    """ A truncated computation left its truncation. """


class NonAssociative(UsageError):
    """ The multiplication of a finite algebra is not associative. """


class NotHarrison(UsageError):
    """ A cochain does not vanish on shuffle products. """


class UnknownSuite(UsageError):
    """ No verification suite with the given name. """


class ParseError(UsageError):
    """ Malformed input text or JSON. """
