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

""" Implementation of the JSON envelope of the web services """
import json

from coisostar.errors import ParseError


class JsonMessage(object):
    """ Envelope {"header": {...}, "body": {...}} with the API of a soap envelope

        message = JsonMessage()
        message.setBody({'returns': 42})
        message.toString()   # '{"body": {"returns": 42}, "header": {}}'
    """
    def __init__(self):
        self._header = {}
        self._body = {}

    def getJson(self):
        """ Return the whole envelope as a dict """
        return {'header': self._header, 'body': self._body}

    def getHeader(self):
        return self._header

    def getBody(self):
        return self._body

    def setHeader(self, header):
        """ Merge the entries of a dict into the header """
        if not isinstance(header, dict):
            raise ParseError('message header must be an object')
        self._header.update(header)

    def setBody(self, body):
        """ Merge the entries of a dict into the body """
        if not isinstance(body, dict):
            raise ParseError('message body must be an object')
        self._body.update(body)

    def removeHeader(self):
        self._header = {}

    def removeBody(self):
        self._body = {}

    def toString(self):
        """ Canonical text: sorted keys, no trailing spaces """
        return json.dumps(self.getJson(), sort_keys=True)

    @classmethod
    def fromJson(cls, text):
        """ Parse an envelope from bytes or text; a bare object is taken as the body """
        if isinstance(text, bytes):
            text = text.decode('utf-8')
        try:
            data = json.loads(text)
        except ValueError as detail:
            raise ParseError('message is not JSON: %s' % detail)
        if not isinstance(data, dict):
            raise ParseError('message must be a JSON object')
        message = cls()
        if 'body' in data or 'header' in data:
            message.setHeader(data.get('header') or {})
            message.setBody(data.get('body') or {})
        else:
            message.setBody(data)
        return message
