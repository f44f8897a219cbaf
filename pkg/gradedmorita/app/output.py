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


import os

import yaml

from gradedmorita.algebra.report import Check, VerificationReport

__all__ = ['emit_report', 'emit_reports', 'parse_reports', 'use_color',
           'TEXT', 'MACHINE']

TEXT = 'text'
MACHINE = 'machine'

_GREEN = '\033[32m'
_RED = '\033[31m'
_RESET = '\033[0m'


def use_color(configured=False):
    return bool(configured) or os.environ.get('GRADEDMORITA_COLOR') == '1'


def _paint(text, code, color):
    return '{0}{1}{2}'.format(code, text, _RESET) if color else text


def _ordered(report):
    return report.failures + [c for c in report.checks if c.passed]


def _text(report, color):
    failed = len(report.failures)
    status = _paint('pass', _GREEN, color) if report.passed else \
        _paint('FAIL', _RED, color)
    title = report.theorem
    if report.fixture:
        title += ' on ' + report.fixture
    lines = ['{0}: {1} ({2} checks, {3} failed)'.format(
        title, status, len(report.checks), failed)]
    for check in _ordered(report):
        mark = _paint(check.status, _GREEN if check.passed else _RED, color)
        dims = ' [{0}]'.format(', '.join(str(d) for d in check.dims)) \
            if check.dims else ''
        detail = ': ' + check.detail if check.detail else ''
        lines.append('  {0:4}  {1}{2}{3}'.format(mark, check.name, dims,
                                                 detail))
    return '\n'.join(lines) + '\n'


def _machine(report):
    out = report.as_dict()
    out['checks'] = [check.as_dict() for check in _ordered(report)]
    return out


def emit_report(report, mode=TEXT, color=False):
    if mode == MACHINE:
        return yaml.safe_dump(_machine(report), sort_keys=True)
    return _text(report, color)


def emit_reports(reports, mode=TEXT, color=False):
    """Several reports as one text block or one YAML list."""
    if mode == MACHINE:
        return yaml.safe_dump([_machine(r) for r in reports],
                              sort_keys=True)
    return ''.join(_text(r, color) for r in reports)


def parse_reports(text):
    """Read back machine-mode output."""
    loaded = yaml.safe_load(text)
    if isinstance(loaded, dict):
        loaded = [loaded]
    reports = []
    for item in loaded or []:
        checks = [Check(c['name'], c['status'] == 'pass',
                        tuple(c.get('dims', ())), c.get('detail', ''))
                  for c in item['checks']]
        reports.append(VerificationReport(item['theorem'], item['fixture'],
                                          checks))
    return reports


# vim:et:fdm=marker:sts=4:sw=4:ts=4
