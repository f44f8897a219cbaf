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

from gradedmorita.algebra.errors import UnknownFixture
from gradedmorita.algebra.fixtures import (ALGEBRA, GLOBAL_ACTION,
                                           PARTIAL_ACTION, describe, fixture,
                                           fixture_ids,
                                           random_graded_algebra,
                                           random_product_partial_action,
                                           register, zero_algebra)
from gradedmorita.algebra.group import preset
from gradedmorita.algebra.partial import skew_group_algebra


@pytest.mark.parametrize('ident, kind, dim', [
    ('F1', ALGEBRA, 2),
    ('F2', ALGEBRA, 2),
    ('F3', PARTIAL_ACTION, 1),
    ('F4', ALGEBRA, 4),
    ('F5', ALGEBRA, 3),
    ('F6', PARTIAL_ACTION, 2),
    ('F7', GLOBAL_ACTION, 3),
    ('F8', ALGEBRA, 1),
])
def test_builtin_fixtures(field, ident, kind, dim):
    fix = fixture(ident, field)
    assert fix.ident == ident
    assert fix.kind == kind
    assert fix.dim == dim
    assert fix.description


def test_fixture_listing():
    ids = fixture_ids()
    assert ids[:8] == ['F1', 'F2', 'F3', 'F4', 'F5', 'F6', 'F7', 'F8']
    assert dict(describe())['F4'].startswith('M2(k)')


def test_unknown_fixture():
    with pytest.raises(UnknownFixture):
        fixture('F99')


def test_default_field():
    assert fixture('F1').payload.field.tag == 'fp:101'


def test_register_bare_algebra():
    register('Z3', lambda field: zero_algebra(field, preset('C3'), 3),
             'zero algebra of dim 3')
    fix = fixture('Z3')
    assert fix.kind == ALGEBRA
    assert fix.dim == 3
    assert fix.description == 'zero algebra of dim 3'


@pytest.mark.parametrize('seed', range(6))
def test_random_graded_algebra(field, seed):
    group = preset('C2')
    first = random_graded_algebra(seed, group, 6, field)
    again = random_graded_algebra(seed, group, 6, field)
    assert first == again
    assert 0 < first.dim <= 6


def test_random_graded_algebra_classes(fp):
    seen = set()
    for seed in range(100):
        algebra = random_graded_algebra(seed, preset('C2'), 6, fp)
        strong = algebra.is_strongly_graded()
        psg = algebra.is_partially_strongly_graded()
        idem = algebra.is_idempotent_graded()
        assert psg or not strong, seed
        assert idem or not psg, seed
        seen.add((strong, psg, idem))
    assert (True, True, True) in seen
    assert (False, True, True) in seen
    assert (False, False, True) in seen


@pytest.mark.parametrize('seed', range(6))
def test_random_partial_action(seed):
    alpha = random_product_partial_action(seed, preset('C3'))
    assert 0 < alpha.algebra.dim <= 6
    assert alpha.globalization is not None
    assert skew_group_algebra(alpha).is_partially_strongly_graded()


# vim:et:fdm=marker:sts=4:sw=4:ts=4
