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

from gradedmorita.algebra.errors import PreconditionFailed, VerificationFailed
from gradedmorita.algebra.linear import Subspace
from gradedmorita.algebra.report import Check, VerificationReport


def test_check_as_dict():
    assert Check('a', True, (1, 2)).as_dict() == \
        {'name': 'a', 'status': 'pass', 'dims': [1, 2]}
    assert Check('b', False, detail='why').as_dict() == \
        {'name': 'b', 'status': 'FAIL', 'dims': [], 'detail': 'why'}


def test_lenient_report_records_failures(field):
    report = VerificationReport('demo', 'F1')
    full, zero = Subspace.full(field, 2), Subspace.zero(field, 2)
    assert report.equal('same', full, full)
    assert not report.equal('different', full, zero)
    assert report.contained('zero in full', zero, full)
    assert not report.passed
    assert [c.name for c in report.failures] == ['different']
    assert report.checks[1].dims == (2, 0)
    with pytest.raises(VerificationFailed):
        report.ensure()


def test_strict_report_raises():
    report = VerificationReport('demo', strict=True)
    report.holds('fine', True)
    with pytest.raises(VerificationFailed) as info:
        report.holds('broken', False)
    assert info.value.check == 'broken'


def test_precondition_report():
    report = VerificationReport.precondition('demo')
    with pytest.raises(PreconditionFailed):
        report.holds('needed', False)


def test_extend_with_prefix():
    inner = VerificationReport('inner')
    inner.holds('one', True)
    inner.holds('two', False, detail='x')
    outer = VerificationReport('outer')
    assert not outer.extend(inner, 'sub')
    assert [c.name for c in outer.checks] == ['sub: one', 'sub: two']
    assert outer.as_dict()['pass'] is False
    assert outer.as_dict()['checks'][1]['detail'] == 'x'


# vim:et:fdm=marker:sts=4:sw=4:ts=4
