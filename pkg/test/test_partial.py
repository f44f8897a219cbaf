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


from dataclasses import replace

import pytest

from gradedmorita.algebra.errors import (ClosureViolation, CompositionFailed,
                                         IdentityAxiomFailed, NotIdeal,
                                         NotIdempotentIdeal, NotIsomorphism,
                                         NotMultiplicative, PreconditionFailed)
from gradedmorita.algebra.fixtures import (fixture, permutation_fixture,
                                           random_product_partial_action,
                                           zero_algebra)
from gradedmorita.algebra.graded import Algebra
from gradedmorita.algebra.group import preset
from gradedmorita.algebra.linear import LinearMap, span
from gradedmorita.algebra.partial import (PARTIAL, PRODUCT, ActionMorphism,
                                          GlobalAction, action_morphism_skew,
                                          check_pa_prp_equivalence, is_global,
                                          is_minimal_globalization,
                                          make_partial_action,
                                          restrict_global,
                                          skew_group_algebra,
                                          validate_global_action,
                                          validate_partial_action,
                                          validate_product_partial_action)


def _kxk(field):
    return Algebra.from_entries(field, 2, [(0, 0, [1, 0]), (1, 1, [0, 1])])


def _maps(field, *images):
    return [LinearMap(field, 2, 2, tuple(field.vector(v) for v in img))
            for img in images]


def test_restricted_swap(f3):
    assert f3.flavor == PRODUCT
    assert [d.rank for d in f3.domains] == [1, 0]
    assert not is_global(f3)
    assert f3.globalization is not None
    skew = skew_group_algebra(f3)
    assert skew.dim == 1
    assert skew.is_partially_strongly_graded()
    with pytest.raises(ClosureViolation):
        skew.embed(1, f3.field.vector([1]))


def test_restricted_cycle(f6):
    assert [d.rank for d in f6.domains] == [2, 1, 1]
    assert validate_partial_action(f6).flavor == PARTIAL
    skew = skew_group_algebra(f6)
    assert skew.dim == 4
    assert skew.is_partially_strongly_graded()
    assert not skew.is_strongly_graded()
    assert check_pa_prp_equivalence(f6)


def test_global_action_skew_is_strongly_graded(field):
    beta, _ = permutation_fixture(field, preset('C2'), [(0,)], [1, 1])
    alpha = beta.as_partial()
    assert is_global(alpha)
    skew = skew_group_algebra(alpha)
    assert skew.dim == 4
    assert skew.is_strongly_graded()
    assert beta.fixed_points().rank == 1
    assert beta.is_invariant(beta.algebra.whole())


def test_skew_split_and_embed(f6):
    skew = skew_group_algebra(f6)
    vec = f6.domains[1].basis[0]
    pieces = skew.split(skew.embed(1, vec))
    assert pieces[1] == vec
    assert not any(pieces[0])


def test_minimal_globalization(field):
    f3 = fixture('F3', field).payload
    glob = f3.globalization
    assert is_minimal_globalization(glob.action, glob.ideal)
    f7 = fixture('F7', field)
    assert not is_minimal_globalization(f7.payload, f7.ideal)
    assert restrict_global(f7.payload, f7.ideal).algebra.dim == 1


def test_restrict_to_non_ideal(field):
    beta, _ = permutation_fixture(field, preset('C2'), [(0,)], [1, 1])
    diagonal = span(field, [field.vector([1, 1])], 2)
    with pytest.raises(NotIdempotentIdeal):
        restrict_global(beta, diagonal)


def test_global_action_axioms(field):
    algebra = _kxk(field)
    ident = [[1, 0], [0, 1]]
    swap = [[0, 1], [1, 0]]
    with pytest.raises(IdentityAxiomFailed):
        validate_global_action(preset('C2'), algebra,
                               _maps(field, swap, swap))
    with pytest.raises(CompositionFailed):
        validate_global_action(preset('C3'), algebra,
                               _maps(field, ident, swap, ident))
    with pytest.raises(NotMultiplicative):
        validate_global_action(preset('C2'), algebra,
                               _maps(field, ident, [[1, 1], [0, 1]]))
    with pytest.raises(NotIsomorphism):
        validate_global_action(preset('C2'), algebra,
                               _maps(field, ident, [[1, 0], [1, 0]]))


def test_partial_action_axioms(field):
    group = preset('C2')
    algebra = _kxk(field)
    whole = [[1, 0], [0, 1]]
    alpha = make_partial_action(group, algebra, [whole, [[1, 1]]],
                                [whole, [[1, 1]]])
    with pytest.raises(NotIdeal):
        validate_product_partial_action(alpha)
    alpha = make_partial_action(group, algebra, [[[1, 0]], []],
                                [[[1, 0]], []])
    with pytest.raises(IdentityAxiomFailed):
        validate_partial_action(alpha)
    with pytest.raises(NotIsomorphism):
        make_partial_action(group, algebra, [whole, [[1, 0]]],
                            [whole, []])


def test_pa_prp_needs_idempotent_domains(field):
    group = preset('C2')
    algebra = zero_algebra(field, group, 1).algebra
    ident = LinearMap.identity(field, 1)
    alpha = GlobalAction(group, algebra, (ident, ident)).as_partial()
    with pytest.raises(PreconditionFailed):
        check_pa_prp_equivalence(alpha)


@pytest.mark.parametrize('group', ['C2', 'C3', 'klein4'])
@pytest.mark.parametrize('seed', range(4))
def test_pa_prp_on_generated_actions(group, seed):
    alpha = random_product_partial_action(seed, preset(group))
    bare = replace(alpha, flavor=None)
    assert check_pa_prp_equivalence(bare)
    assert validate_partial_action(bare).flavor == PARTIAL
    assert validate_product_partial_action(bare).flavor == PRODUCT


def test_identity_morphism(f6):
    ident = LinearMap.identity(f6.field, f6.algebra.dim)
    morphism = ActionMorphism(f6, f6, ident).validate()
    hom = action_morphism_skew(morphism)
    assert hom.is_isomorphism()
    assert morphism.compose(morphism).linear == ident


# vim:et:fdm=marker:sts=4:sw=4:ts=4
