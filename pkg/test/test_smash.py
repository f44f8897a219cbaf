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

from gradedmorita.algebra.errors import NotMultiplicative, PreconditionFailed
from gradedmorita.algebra.fixtures import fixture, matrix_algebra
from gradedmorita.algebra.graded import Algebra, Homomorphism
from gradedmorita.algebra.group import preset
from gradedmorita.algebra.linear import LinearMap
from gradedmorita.algebra.partial import (is_minimal_globalization,
                                          validate_global_action)
from gradedmorita.algebra.report import VerificationReport
from gradedmorita.algebra.smash import (SmashAlgebra, canonical_partial_action,
                                        dual_action, duality_iso, eta, fmat,
                                        fixed_subalgebra, naturality,
                                        partial_duality_image, partial_smash,
                                        sgchar, smash, smash_functor,
                                        smash_inclusion)


@pytest.fixture
def psg_only(field):
    """``M_2(k)`` concentrated in degree 1 over ``C_2``."""
    return matrix_algebra(field, preset('C2'), [0, 0])


def test_dimensions(f1, f4):
    assert smash(f1).dim == 4
    assert fmat(f1).dim == 8
    assert smash(f4).dim == 8
    assert fmat(f4).dim == 16
    assert set(smash(f4).degree) == {0}


def test_fmat_labels_are_graded(f4):
    full = fmat(f4)
    group = f4.group
    for k, (i, r, s) in enumerate(full.labels):
        expected = group.mul(r, f4.degree[i], group.inv(s))
        assert full.degree[k] == expected


def test_smash_inclusion(f1):
    small, full = smash(f1), fmat(f1)
    inclusion = smash_inclusion(small, full).validate(graded=False)
    assert inclusion.is_injective()


def test_place_and_entries(f4):
    algebra = smash(f4)
    field = f4.field
    e12 = field.unit(4, 1)
    vec = algebra.place(e12, 0, 1)
    assert algebra.entries(vec) == {(0, 1): e12}


def test_dual_action_is_global(f4):
    algebra = smash(f4)
    beta = dual_action(algebra)
    validate_global_action(f4.group, algebra.algebra, beta.maps)
    assert fixed_subalgebra(f4) == eta(f4, algebra).linear.image()
    assert eta(f4, algebra).is_injective()


def test_dual_action_rejects_non_automorphism(f1):
    algebra = smash(f1)
    field = f1.field
    lopsided = Algebra(field, algebra.dim, {(0, 0): {0: field.one}})
    fake = SmashAlgebra(f1, algebra.kind, lopsided, algebra.degree,
                        algebra.labels)
    with pytest.raises(NotMultiplicative):
        dual_action(fake)


def test_partial_smash_strongly_graded(f1):
    part = partial_smash(f1)
    assert part.is_everything()
    assert part.dim == 4


def test_partial_smash_psg(psg_only):
    part = partial_smash(psg_only)
    assert part.dim == 4
    assert not part.is_everything()
    assert part.entries[(1, 1)].rank == 0


def test_canonical_action(psg_only):
    canonical = canonical_partial_action(psg_only)
    assert canonical.report.passed
    assert canonical.gamma.algebra.dim == 4
    assert is_minimal_globalization(canonical.beta, canonical.partial.ideal)


def test_canonical_action_needs_psg(field):
    f2 = fixture('F2', field).payload
    with pytest.raises(PreconditionFailed):
        canonical_partial_action(f2)
    with pytest.raises(PreconditionFailed):
        partial_duality_image(f2)


def test_duality(f1):
    duality = duality_iso(f1)
    assert duality.skew.dim == 8
    assert duality.psi.is_isomorphism()
    assert duality.skew.is_strongly_graded()


def test_partial_duality_image(psg_only):
    report = VerificationReport('partial duality')
    image = partial_duality_image(psg_only, report)
    assert report.passed
    assert image.rank == 4


def test_sgchar(f1, psg_only):
    assert sgchar(f1) == (True, True)
    assert sgchar(psg_only) == (False, False)


def test_naturality_and_functor(f4):
    ident = Homomorphism(f4, f4, LinearMap.identity(f4.field, 4))
    assert naturality(ident)
    sharp = smash_functor(ident)
    assert sharp.is_isomorphism()


# vim:et:fdm=marker:sts=4:sw=4:ts=4
