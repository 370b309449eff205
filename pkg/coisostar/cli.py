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

""" Command line driver: `coisostar [global options] <command> [action] [options]`

    Global options (--seed, --cases, --logging) come before the command and
    may be set from the environment as CFK_SEED, CFK_CASES and CFK_LOGGING.
    The options of a command read CFK_<NAME> the same way, e.g. CFK_POLY_DEG
    for cohomology --poly-deg; flags on the command line win.
    Results are printed on stdout as canonical JSON, logs go to stderr.
"""
import json
import os
import sys
from collections import namedtuple

import tornado.httpserver
import tornado.ioloop
import tornado.options
from tornado.log import app_log, define_logging_options

from coisostar import formality, hkr, koszulbar, services, suites
from coisostar.errors import CoisoError, ParseError, UsageError
from coisostar.geometry import MultiVec, SpaceConfig, schouten, wedge
from coisostar.hochschild import PolyDiffOp, cup, gerst_bracket
from coisostar.webservices import WebService

Option = namedtuple('Option', ['name', 'default', 'type', 'help'])

GLOBAL_OPTIONS = [
    Option('seed', 7, int, 'seed of the random generator of the verification suites'),
    Option('cases', 50, int, 'random cases per verification suite'),
]

COMMANDS = {}


def command(name, options=(), actions=None):
    """ Decorator registering a subcommand with its options and its actions """
    def register(f):
        f._command = name
        f._options = list(options)
        f._actions = actions
        COMMANDS[name] = f
        return f
    return register


def _normalizeName(name):
    return name.replace('_', '-')


def _joinValues(argv, options):
    """ Accept `--name value` as `--name=value` for the options that take a value """
    known = set(_normalizeName(o.name) for o in options if o.type is not bool) | set(['logging'])
    result = []
    i = 0
    while i < len(argv):
        arg = argv[i]
        if not arg.startswith('-') or arg == '--':
            result.extend(argv[i:])
            break
        name = _normalizeName(arg.lstrip('-'))
        if '=' not in arg and name in known and i + 1 < len(argv):
            result.append(arg + '=' + argv[i + 1])
            i += 2
            continue
        result.append(arg)
        i += 1
    return result


def _environment(options, extra=()):
    """ --name=value arguments for the CFK_<NAME> environment variables """
    result = []
    for name in [o.name for o in options] + list(extra):
        value = os.environ.get('CFK_' + name.upper())
        if value is not None:
            result.append('--%s=%s' % (name, value))
    return result


def _globalNames():
    return set(o.name for o in GLOBAL_OPTIONS)


def _parser(options):
    parser = tornado.options.OptionParser()
    for o in options:
        parser.define(o.name, default=o.default, type=o.type, help=o.help)
    return parser


def _parse(parser, program, argv, options, final=False):
    try:
        return parser.parse_command_line([program] + _joinValues(argv, options), final=final)
    except tornado.options.Error as detail:
        raise UsageError(str(detail))


def _readJson(path, stdin):
    try:
        if path == '-':
            return json.load(stdin)
        with open(path) as f:
            return json.load(f)
    except (IOError, OSError) as detail:
        raise ParseError('cannot read %s: %s' % (path, detail))
    except ValueError as detail:
        raise ParseError('%s is not JSON: %s' % (path, detail))


def _load(kind, data):
    """ kind.fromJSON(data), any malformed shape reported as ParseError """
    try:
        return kind.fromJSON(data)
    except (AttributeError, IndexError, KeyError, TypeError, ValueError) as detail:
        raise ParseError('bad %s input: %s' % (kind.__name__, detail))


@command('verify', [
    Option('suite', 'all', str, 'suite name or all'),
    Option('seed', None, int, 'overrides the global --seed'),
    Option('cases', None, int, 'overrides the global --cases'),
])
def cmd_verify(action, options, settings, stdin):
    seed = settings.seed if options.seed is None else options.seed
    cases = settings.cases if options.cases is None else options.cases
    report = suites.run_suite(options.suite, seed, cases)
    return report, 0 if report['passed'] else 1


@command('cohomology', [
    Option('bimodule', 'A', str, 'one of %s' % ', '.join(koszulbar.TAGS)),
    Option('degree', 1, int, 'cochain degree k'),
    Option('poly_deg', 2, int, 'degree cap of the coefficients'),
    Option('op_order', 2, int, 'order cap of the operators'),
    Option('n', 2, int, 'dimension of the ambient space'),
    Option('l', 1, int, 'codimension of C'),
    Option('exact_sequence', False, bool, 'report the dimensions along 0 -> G_I -> G -> G~ -> 0'),
])
def cmd_cohomology(action, options, settings, stdin):
    try:
        config = SpaceConfig(options.n, options.l)
    except ValueError as detail:
        raise UsageError(str(detail))
    if options.exact_sequence:
        return koszulbar.exact_sequence_dims(config, options.degree, options.poly_deg, options.op_order), 0
    result = koszulbar.truncated_cohomology(config, options.bimodule, options.degree, options.poly_deg,
                                            options.op_order)
    return result.toJSON(), 0


@command('hkr', [Option('input', '-', str, 'JSON file, - for stdin')],
         actions=('psi', 'psi1', 'pi', 'primitive', 'decompose'))
def cmd_hkr(action, options, settings, stdin):
    data = _readJson(options.input, stdin)
    if action in ('psi', 'psi1'):
        X = _load(MultiVec, data)
        return (hkr.psi_hkr(X) if action == 'psi' else hkr.psi1(X)).toJSON(), 0
    phi = _load(PolyDiffOp, data)
    if action == 'pi':
        return hkr.pi_hkr(phi).toJSON(), 0
    if action == 'primitive':
        return hkr.primitive(phi).toJSON(), 0
    return hkr.decompose(phi).toJSON(), 0


@command('bracket', [
    Option('left', None, str, 'JSON file of the left argument'),
    Option('right', None, str, 'JSON file of the right argument'),
], actions=('schouten', 'wedge', 'gerstenhaber', 'cup'))
def cmd_bracket(action, options, settings, stdin):
    if options.left is None or options.right is None:
        raise UsageError('bracket needs --left and --right')
    left, right = _readJson(options.left, stdin), _readJson(options.right, stdin)
    if action in ('schouten', 'wedge'):
        X, Y = _load(MultiVec, left), _load(MultiVec, right)
        return (schouten(X, Y) if action == 'schouten' else wedge(X, Y)).toJSON(), 0
    phi, psi = _load(PolyDiffOp, left), _load(PolyDiffOp, right)
    return (gerst_bracket(phi, psi) if action == 'gerstenhaber' else cup(phi, psi)).toJSON(), 0


@command('star', [
    Option('poisson', None, str, 'JSON file of the Poisson bivector'),
    Option('order', 3, int, 'truncation order N'),
    Option('require_adapted', False, bool, 'fail with NotAdapted unless P is adapted'),
    Option('product', None, str, 'JSON file of a star product (verify)'),
], actions=('build', 'verify', 'standard', 'moyal'))
def cmd_star(action, options, settings, stdin):
    if options.poisson is None:
        raise UsageError('star needs --poisson')
    P = _load(MultiVec, _readJson(options.poisson, stdin))
    if action == 'build':
        return formality.mc_build(P, options.order, options.require_adapted).toJSON(), 0
    if action == 'standard':
        return formality.standard_ordered_product(P, options.order).toJSON(), 0
    if action == 'moyal':
        return formality.moyal_product(P, options.order).toJSON(), 0
    if options.product is None:
        raise UsageError('star verify needs --product')
    star = _load(formality.StarProduct, _readJson(options.product, stdin))
    report = formality.verify_star(star, P)
    return report, 0 if report['passed'] else 1


@command('serve', [
    Option('port', 8080, int, 'port of the web services'),
    Option('address', '', str, 'address to bind'),
])
def cmd_serve(action, options, settings, stdin):
    app = WebService(services.SERVICES)
    server = tornado.httpserver.HTTPServer(app)
    server.listen(options.port, options.address)
    app_log.info('serving %s on port %d', ', '.join(name for name, _ in services.SERVICES), options.port)
    tornado.ioloop.IOLoop.current().start()
    return None, 0


def _errorJson(detail):
    result = {'error': detail.__class__.__name__, 'message': str(detail)}
    result.update(detail.payload())
    return result


def main(argv=None, stdin=None, stdout=None):
    """ Run one command and return its exit code """
    argv = list(sys.argv[1:] if argv is None else argv)
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    try:
        settings = _parser(GLOBAL_OPTIONS)
        define_logging_options(settings)
        settings.logging = 'warning'
        environ = _environment(GLOBAL_OPTIONS, ['logging'])
        rest = _parse(settings, 'coisostar', environ + argv, GLOBAL_OPTIONS, final=True)
        if not rest:
            raise UsageError('missing command, expected one of %s' % ', '.join(sorted(COMMANDS)))
        name, args = rest[0], rest[1:]
        if name not in COMMANDS:
            raise UsageError('unknown command %r, expected one of %s' % (name, ', '.join(sorted(COMMANDS))))
        handler = COMMANDS[name]
        action = None
        if handler._actions is not None:
            if not args or args[0] not in handler._actions:
                raise UsageError('%s needs one of the actions %s' % (name, ', '.join(handler._actions)))
            action, args = args[0], args[1:]
        options = _parser(handler._options)
        environ = _environment([o for o in handler._options if o.name not in _globalNames()])
        extra = _parse(options, 'coisostar ' + name, environ + args, handler._options)
        if extra:
            raise UsageError('unexpected argument %r' % extra[0])
        result, code = handler(action, options, settings, stdin)
    except CoisoError as detail:
        app_log.debug('%s: %s', detail.__class__.__name__, detail)
        result, code = _errorJson(detail), detail.code
    except Exception as detail:
        app_log.exception('unexpected error')
        result, code = {'error': detail.__class__.__name__, 'message': str(detail)}, 1
    if result is not None:
        stdout.write(json.dumps(result, sort_keys=True) + '\n')
    return code


def run():
    sys.exit(main())


if __name__ == '__main__':
    run()
