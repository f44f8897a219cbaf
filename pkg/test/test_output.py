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


import pytest

from gradedmorita.algebra.report import Check, VerificationReport
from gradedmorita.app.output import (MACHINE, emit_report, emit_reports,
                                     parse_reports, use_color)


@pytest.fixture
def report():
    return VerificationReport('demo', 'F1', [
        Check('a', True, (2, 2)),
        Check('b', False, detail='x'),
    ])


def test_text_lists_failures_first(report):
    assert emit_report(report) == (
        'demo on F1: FAIL (2 checks, 1 failed)\n'
        '  FAIL  b: x\n'
        '  pass  a [2, 2]\n')


def test_text_without_fixture():
    report = VerificationReport('demo', checks=[Check('a', True)])
    assert emit_report(report).splitlines()[0] == \
        'demo: pass (1 checks, 0 failed)'


def test_color(report):
    text = emit_report(report, color=True)
    assert '\033[31mFAIL\033[0m' in text
    assert '\033[32mpass\033[0m' in text


def test_use_color(monkeypatch):
    assert not use_color()
    assert use_color(True)
    monkeypatch.setenv('GRADEDMORITA_COLOR', '1')
    assert use_color()


def test_machine_output_reads_back(report):
    text = emit_report(report, MACHINE)
    assert text.startswith('checks:')
    back, = parse_reports(text)
    assert back.theorem == 'demo'
    assert back.fixture == 'F1'
    assert back.checks == [report.checks[1], report.checks[0]]
    assert not back.passed


def test_several_reports(report):
    other = VerificationReport('other', checks=[Check('c', True)])
    assert len(parse_reports(emit_reports([report, other], MACHINE))) == 2
    assert emit_reports([report, other]).count('\n') == 4


# vim:et:fdm=marker:sts=4:sw=4:ts=4
