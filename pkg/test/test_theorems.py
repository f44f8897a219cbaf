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

from gradedmorita.algebra import theorems
from gradedmorita.algebra.errors import NotMinimal, PreconditionFailed
from gradedmorita.algebra.fixtures import fixture, permutation_fixture
from gradedmorita.algebra.group import preset
from gradedmorita.algebra.linear import Subspace, vscale
from gradedmorita.algebra.morita import (AbstractContext, EmbeddedContext,
                                         action_equivalence_to_sge,
                                         is_strong_graded_equivalence,
                                         restrict_action_equivalence,
                                         trivial_action_equivalence,
                                         trivial_context)
from gradedmorita.algebra.partial import skew_group_algebra
from gradedmorita.algebra.theorems import (THEOREMS, geq_context,
                                           globalization_context, run_job,
                                           run_suite, sg_context,
                                           sg_equivalence, suite_jobs,
                                           verify_charmoreq,
                                           verify_charweakeq,
                                           verify_duality,
                                           verify_eq_strong_gr,
                                           verify_geq_smash,
                                           verify_globalization_geq,
                                           verify_invsgeq,
                                           verify_moritaglob_consequences,
                                           verify_partialrep, verify_sg,
                                           verify_weak_equivalence)


def _algebra(ident, field):
    return fixture(ident, field).payload


@pytest.mark.parametrize('ident', ['F1', 'F2', 'F4'])
def test_duality(field, ident):
    report = verify_duality(_algebra(ident, field), fixture=ident)
    assert report.passed
    assert report.fixture == ident


def test_duality_records_non_multiplicative_psi(f1, monkeypatch):
    real = theorems.duality_iso

    def doubled(base, validate=True):
        ret = real(base, validate)
        psi = ret.psi
        two = psi.linear.field.convert(2)
        linear = replace(psi.linear, images=tuple(
            vscale(two, img) for img in psi.linear.images))
        return replace(ret, psi=replace(psi, linear=linear))

    monkeypatch.setattr(theorems, 'duality_iso', doubled)
    report = verify_duality(f1)
    assert [c.name for c in report.failures] == ['psi graded multiplicative']
    assert report.failures[0].detail


def test_duality_on_skew_algebra(f6):
    assert verify_duality(skew_group_algebra(f6)).passed


@pytest.mark.parametrize('ident', ['F1', 'F2', 'F4'])
def test_geq(field, ident):
    assert verify_geq_smash(_algebra(ident, field), ident).passed


def test_geq_needs_idempotent(field):
    with pytest.raises(PreconditionFailed):
        verify_geq_smash(_algebra('F8', field))


def test_geq_context_dims(f1):
    witness = geq_context(f1)
    dims = witness.context.dims()
    assert dims['A'] == 8
    assert dims['B'] == 2
    assert witness.right_cert.is_injective()


@pytest.mark.parametrize('ident', ['F1', 'F4'])
def test_sg(field, ident):
    assert verify_sg(_algebra(ident, field), ident).passed


def test_sg_on_skew_algebras(f3, f6):
    assert verify_sg(skew_group_algebra(f3)).passed
    assert verify_sg(skew_group_algebra(f6)).passed


def test_sg_needs_psg(field):
    with pytest.raises(PreconditionFailed):
        verify_sg(_algebra('F2', field))
    with pytest.raises(PreconditionFailed):
        sg_context(_algebra('F2', field))


def test_sg_equivalence_ends_at_base(f1):
    ctx = sg_equivalence(f1)
    assert ctx.right == f1
    assert is_strong_graded_equivalence(ctx)
    assert sg_context(f1).context.dims()['B'] == 2


def test_globalization(f3, f6):
    for alpha in (f3, f6):
        glob = alpha.globalization
        report = verify_globalization_geq(glob.action, glob.ideal)
        assert report.passed


def test_globalization_linking_dimension(fp):
    glob = fixture('F3', fp).payload.globalization
    ctx = globalization_context(glob.action, glob.ideal).context
    assert ctx.ambient.dim == 4
    assert ctx.dims() == {'A': 4, 'X': 2, 'Y': 2, 'B': 1}
    report = verify_globalization_geq(glob.action, glob.ideal)
    check = [c for c in report.checks if c.name == 'linking dimension'][0]
    assert check.passed
    assert check.dims == (9, 9)


def test_globalization_wrong_piece_dims_fail(fp, monkeypatch):
    glob = fixture('F3', fp).payload.globalization
    monkeypatch.setattr(EmbeddedContext, 'dims',
                        lambda self: {'A': 999, 'X': 0, 'Y': 0, 'B': -5})
    report = verify_globalization_geq(glob.action, glob.ideal)
    assert not report.passed
    assert [c.name for c in report.failures] == ['linking dimension']


def test_globalization_needs_minimal(field):
    f7 = fixture('F7', field)
    with pytest.raises(NotMinimal):
        verify_globalization_geq(f7.payload, f7.ideal)


@pytest.mark.parametrize('ident', ['F1', 'F4'])
def test_partialrep(field, ident):
    assert verify_partialrep(_algebra(ident, field), ident).passed


def test_partialrep_on_skew_algebra(f3):
    assert verify_partialrep(skew_group_algebra(f3)).passed


def test_invsgeq(f4):
    report = verify_invsgeq(trivial_context(f4))
    assert report.passed
    assert report.checks[0].name == 'A strongly graded iff B strongly graded'


def test_invsgeq_on_partial_grading(f6):
    skew = skew_group_algebra(f6)
    assert verify_invsgeq(trivial_context(skew)).passed


def test_invsgeq_needs_psg(field):
    with pytest.raises(PreconditionFailed):
        verify_invsgeq(trivial_context(_algebra('F2', field)))


def test_eq_strong_gr_needs_strong(f3):
    with pytest.raises(PreconditionFailed):
        verify_eq_strong_gr(trivial_context(skew_group_algebra(f3)))


@pytest.mark.slow
def test_eq_strong_gr(fp):
    assert verify_eq_strong_gr(trivial_context(_algebra('F1', fp))).passed


def test_moritaglob(f3):
    assert verify_moritaglob_consequences(f3).passed


def test_weak_equivalence(f3, f6):
    assert verify_weak_equivalence(f3).passed
    assert verify_weak_equivalence(f6).passed


def test_charmoreq(f3):
    assert verify_charmoreq(trivial_action_equivalence(f3)).passed


def test_restricted_equivalence_to_invsgeq(fp):
    beta, _ = permutation_fixture(fp, preset('C2'), [(0,)], [1, 1])
    ideal = Subspace.coordinate(fp, 2, [0])
    restricted = restrict_action_equivalence(
        trivial_action_equivalence(beta.as_partial()), ideal)
    witness = action_equivalence_to_sge(restricted)
    assert witness.report.passed
    report = verify_invsgeq(witness.abstract())
    assert report.passed
    assert report.checks[0].dims == (0, 0)


def test_run_job_charmoreq_restricts_globalization():
    report = run_job(('charmoreq', 'F3', 'fp:101', 6, 3))
    assert report.passed
    assert any(c.name.startswith('restricted: ') for c in report.checks)


def test_charweakeq(f6):
    ctx = trivial_context(skew_group_algebra(f6))
    report = verify_charweakeq(f6, f6, ctx)
    assert report.passed
    assert [c.dims for c in report.checks[:2]] == [(1, 1), (1, 1)]


def test_charweakeq_without_equivalence(f6):
    skew = skew_group_algebra(f6)
    empty = AbstractContext(skew, skew, (), (), {}, {}, {}, {}, {}, {})
    report = verify_charweakeq(f6, f6, empty)
    assert [c.name for c in report.failures] == ['weakly equivalent']
    assert [c.dims for c in report.checks[:2]] == [(0, 0), (0, 0)]


def test_suite_jobs():
    jobs = suite_jobs(seeds=2, fields=('q',))
    assert len(jobs) == 26
    assert jobs[0] == ('duality', 'F1', 'q', 6, 3)
    assert jobs[-1] == ('random', 'seed:1', 'q', 6, 3)
    assert {job[0] for job in jobs} - {'random', 'charmoreq'} == \
        set(THEOREMS)


def test_run_job_reports_errors():
    report = run_job(('geq', 'F8', 'q', 6, 3))
    assert not report.passed
    assert report.fixture == 'F8@q'
    assert report.failures[0].name == 'PreconditionFailed'


def test_run_job_random():
    report = run_job(('random', 'seed:3', 'fp:101', 4, 2))
    assert report.theorem == 'random'
    assert report.passed


@pytest.mark.slow
def test_run_suite():
    reports = run_suite(seeds=2, fields=('fp:101',))
    assert len(reports) == len(suite_jobs(seeds=2, fields=('fp:101',)))
    assert all(report.passed for report in reports)


# vim:et:fdm=marker:sts=4:sw=4:ts=4
