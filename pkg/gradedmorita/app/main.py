# Copyright (c) 2026 gradedmorita contributors
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
# THE SOFTWARE.
#


import sys
from argparse import ArgumentParser

from gradedmorita.algebra.theorems import THEOREMS

from . import __version__
from .state import CONSTRUCTIONS, RunState

__all__ = ['parse_args', 'run_command', 'main']


def _build_parser():
    argparser = ArgumentParser(prog='gradedmorita',
                               description='Construct and verify graded '
                               'Morita equivalences of group-graded '
                               'algebras and partial actions.')
    argparser.add_argument('--version', action='version',
                           version='%(prog)s '+__version__)
    argparser.add_argument('-v', '--verbose', action='count', default=0,
                           help='Log progress to stderr; twice for debug '
                           'output.')

    group = argparser.add_argument_group('config options')
    group.add_argument('-c', '--config', metavar='FILE', default=None,
                       help='Specifies a configuration file to read. If not '
                       'given, the default locations '
                       '($HOME/.gradedmorita/gradedmorita.yaml, '
                       '/etc/gradedmorita/gradedmorita.yaml) are checked.')
    group.add_argument('--field', metavar='TAG', default=None,
                       help='Base field, q or fp:<p>. Documents that name '
                       'a field keep it.')
    group.add_argument('--report', choices=('text', 'machine'),
                       default=None, help='Report format.')

    commands = argparser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    validate = commands.add_parser('validate', help='Load and validate a '
                                   'document.')
    validate.add_argument('file', metavar='FILE')

    construct = commands.add_parser('construct', help='Build an algebra or '
                                    'action from a document object.')
    construct.add_argument('what', choices=CONSTRUCTIONS)
    construct.add_argument('file', metavar='FILE')
    construct.add_argument('-o', '--output', metavar='FILE', default=None,
                           help='Write the result here instead of stdout.')
    construct.add_argument('--object', metavar='NAME', default=None,
                           help='Input object, if the document holds more '
                           'than one of its kind.')

    verify = commands.add_parser('verify', help='Build and check the '
                                 'witness of one equivalence.')
    verify.add_argument('theorem', choices=THEOREMS)
    verify.add_argument('file', metavar='FILE')
    verify.add_argument('--object', metavar='NAME', default=None,
                        help='Input object, if the document holds more '
                        'than one of its kind.')

    fixtures = commands.add_parser('fixtures', help='List or emit the '
                                   'named fixtures.')
    fixtures.add_argument('action', choices=('list', 'emit'))
    fixtures.add_argument('id', nargs='?', default=None,
                          help='Fixture id, or random / random-action for '
                          'a generated input.')
    fixtures.add_argument('--seed', type=int, default=0,
                          help='Seed of a generated input. '
                          '(default: %(default)s)')
    fixtures.add_argument('--group', metavar='NAME', default='C2',
                          help='Group of a generated input. '
                          '(default: %(default)s)')

    suite = commands.add_parser('suite', help='Run every verification on '
                                'the fixtures and on generated inputs.')
    suite.add_argument('--seeds', type=int, default=None,
                       help='Generated inputs per field.')
    suite.add_argument('--jobs', type=int, default=None,
                       help='Worker processes.')
    return argparser


def parse_args(argv=None):
    argparser = _build_parser()
    return argparser, argparser.parse_args(argv)


def run_command(argv=None):
    """Run one command and return its exit status: 0 when every check
    passes, 1 when a check fails, 2 for usage and input errors.

    """
    try:
        argparser, args = parse_args(argv)
        state = RunState(args, argparser)
        state.load_config()
        return state.run()
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else \
            (0 if exc.code is None else 2)


def main():
    sys.exit(run_command())


# vim:et:fdm=marker:sts=4:sw=4:ts=4
