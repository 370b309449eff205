import pytest

from coisostar import jsontypes
from coisostar.errors import ParseError
from coisostar.jsonhandler import jsonfault, operation
from coisostar.message import JsonMessage
from coisostar.ratpoly import Poly


def test_envelope():
    message = JsonMessage()
    message.setHeader({'operation': 'pi'})
    message.setBody({'returns': 42})
    assert message.toString() == '{"body": {"returns": 42}, "header": {"operation": "pi"}}'
    again = JsonMessage.fromJson(message.toString().encode('utf-8'))
    assert again.getHeader() == {'operation': 'pi'}
    assert again.getBody() == {'returns': 42}
    message.removeBody()
    assert message.getJson() == {'header': {'operation': 'pi'}, 'body': {}}


def test_bare_object_is_the_body():
    assert JsonMessage.fromJson('{"n": 2}').getBody() == {'n': 2}


@pytest.mark.parametrize('text', ['[1, 2]', 'nope', '{"body": 3}'])
def test_malformed_envelopes(text):
    with pytest.raises(ParseError):
        JsonMessage.fromJson(text)


def test_fault():
    fault = jsonfault('boom', 'NotExact')
    assert fault.getBody() == {'fault': {'faultcode': 'NotExact', 'faultstring': 'boom'}}


def test_primitive_types():
    assert jsontypes.Integer.genType('3') == 3
    assert jsontypes.Boolean.genType('false') is False
    with pytest.raises(ParseError):
        jsontypes.Integer.genType(True)
    with pytest.raises(ParseError):
        jsontypes.Boolean.genType('maybe')
    assert jsontypes.PolyType.genType('x1^2 - 1') == Poly.parse('x1^2 - 1')
    with pytest.raises(ParseError):
        jsontypes.MultiVecType.genType([1])


def test_arrays():
    ints = jsontypes.Array(jsontypes.Integer, 2)
    assert ints.genType([1, '2']) == [1, 2]
    with pytest.raises(ParseError):
        ints.genType([1, 2, 3])
    assert ints.createArray('values') == {'name': 'values', 'type': 'array', 'items': 'integer', 'maxOccurs': 2}


def test_operation_decorator_records_types():
    class Service(object):
        @operation(_params=[jsontypes.Integer, jsontypes.String], _returns=jsontypes.Report)
        def run(self, count, name):
            """ doc """
            return {'count': count, 'name': name}

    op = Service().run
    assert op._is_operation
    assert op._args == ['count', 'name']
    assert op._input == {'count': jsontypes.Integer, 'name': jsontypes.String}
    assert op._output is jsontypes.Report
    assert op(2, 'x') == {'count': 2, 'name': 'x'}
    with pytest.raises(TypeError):
        operation(_params=[jsontypes.Integer], _returns=jsontypes.Report)(lambda self, a, b: None)
