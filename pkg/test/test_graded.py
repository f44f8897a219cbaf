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


import logging

import pytest

from gradedmorita.algebra.errors import (DimensionError, GradingViolation,
                                         NonAssociative, NotGraded,
                                         NotMultiplicative,
                                         PreconditionFailed)
from gradedmorita.algebra.fixtures import fixture, matrix_algebra
from gradedmorita.algebra.graded import (Algebra, Homomorphism, Multiplier,
                                         check_psg_identities, direct_sum,
                                         graded_multipliers,
                                         validate_graded_algebra)
from gradedmorita.algebra.group import preset
from gradedmorita.algebra.linear import LinearMap, Subspace, span


def _kc2(field):
    return Algebra.from_entries(field, 2, [(0, 0, [1, 0]), (0, 1, [0, 1]),
                                           (1, 0, [0, 1]), (1, 1, [1, 0])])


def _upper_triangular(field):
    # e11, e12, e22 with e12 in degree g
    one = field.one
    algebra = Algebra.from_entries(field, 3, [(0, 0, {0: one}),
                                              (0, 1, {1: one}),
                                              (1, 2, {1: one}),
                                              (2, 2, {2: one})])
    return validate_graded_algebra(algebra, preset('C2'), [0, 1, 0])


def test_from_entries_checks_dimension(field):
    with pytest.raises(DimensionError):
        Algebra.from_entries(field, 2, [(0, 0, [1, 0, 0])])
    with pytest.raises(DimensionError):
        Algebra.from_entries(field, 2, [(0, 2, [1, 0])])


def test_non_associative(field):
    algebra = Algebra.from_entries(field, 2, [(0, 0, [0, 1]),
                                              (1, 0, [1, 0])])
    with pytest.raises(NonAssociative):
        algebra.check_associative()
    with pytest.raises(NonAssociative):
        validate_graded_algebra(algebra, preset('trivial'), [0, 0])


def test_grading_checks(field):
    group = preset('C2')
    with pytest.raises(DimensionError):
        validate_graded_algebra(_kc2(field), group, [0])
    with pytest.raises(GradingViolation) as info:
        validate_graded_algebra(_kc2(field), group, [1, 0])
    assert info.value.triple == (0, 0, 0)


def test_group_algebra_is_strongly_graded(f1):
    assert f1.dim == 2
    assert f1.is_idempotent_graded()
    assert f1.is_partially_strongly_graded()
    assert f1.is_strongly_graded()
    assert f1.ideal_D(1) == f1.component(0)


def test_truncated_polynomial(field):
    f2 = fixture('F2', field).payload
    assert f2.is_idempotent_graded()
    assert not f2.is_partially_strongly_graded()
    assert not f2.is_strongly_graded()


def test_psg_but_not_strong(field):
    trivial = matrix_algebra(field, preset('C2'), [0, 0])
    assert trivial.is_partially_strongly_graded()
    assert not trivial.is_strongly_graded()
    assert trivial.ideal_D(1).rank == 0


def test_triangular_not_psg(field):
    tri = _upper_triangular(field)
    assert tri.is_idempotent_graded()
    assert not tri.is_partially_strongly_graded()
    with pytest.raises(PreconditionFailed):
        check_psg_identities(tri)


def test_matrix_pieces(f4):
    assert f4.degree == (0, 1, 1, 0)
    assert f4.is_strongly_graded()
    assert f4.ideal_D(1) == Subspace.coordinate(f4.field, 4, [0, 3])
    assert check_psg_identities(f4).passed


def test_graded_span_and_grade(f1):
    field = f1.field
    mixed = field.vector([1, 1])
    graded = f1.graded_span([mixed])
    assert graded.dims() == (1, 1)
    assert f1.degree_of(mixed) is None
    assert f1.degree_of(field.unit(2, 1)) == 1
    with pytest.raises(NotGraded):
        f1.grade(span(field, [mixed], 2))


def test_restrict_whole(f4):
    sub, embed = f4.restrict(f4.whole())
    assert sub.dim == 4
    assert sub.is_strongly_graded()
    assert embed.is_bijective()


def test_homomorphism(f1):
    field = f1.field
    Homomorphism(f1, f1, LinearMap.identity(field, 2)).validate()
    swap = LinearMap(field, 2, 2, (field.unit(2, 1), field.unit(2, 0)))
    with pytest.raises(NotGraded):
        Homomorphism(f1, f1, swap).validate()
    with pytest.raises(NotMultiplicative):
        Homomorphism(f1, f1, swap).validate(graded=False)


def test_direct_sum(f1):
    total = direct_sum(f1, f1)
    assert total.dim == 4
    assert total.degree == (0, 1, 0, 1)
    assert total.is_strongly_graded()


def test_multipliers_of_unital_algebra(f4):
    mult = graded_multipliers(f4)
    assert mult.report.passed
    assert mult.dim == 4
    one = Multiplier.identity(f4.field, 4)
    assert mult.contains(one, 0)
    assert one.is_idempotent()
    assert one.degree(f4) == 0
    assert one.is_valid(f4.algebra)


def test_multipliers_of_zero_algebra(field, caplog):
    f8 = fixture('F8', field).payload
    with caplog.at_level(logging.WARNING):
        mult = graded_multipliers(f8)
    assert mult.report.passed
    assert mult.dim == 2
    assert 'mu is not injective' in caplog.text


def test_idempotent_multiplier(f4):
    field = f4.field
    e11 = Multiplier.of_element(f4.algebra, field.unit(4, 0))
    assert e11.is_idempotent()
    assert e11.degree(f4) == 0
    assert e11.complement().is_idempotent()
    assert e11.apply_left(f4.algebra.whole()).rank == 2


# vim:et:fdm=marker:sts=4:sw=4:ts=4
