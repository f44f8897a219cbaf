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

from gradedmorita.algebra.fixtures import fixture, group_algebra
from gradedmorita.algebra.group import preset
from gradedmorita.algebra.report import Check, VerificationReport
from gradedmorita.app.document import (emit_fixture, load_document,
                                       parse_document)
from gradedmorita.app.main import run_command
from gradedmorita.app.output import parse_reports


def _cyclic(field):
    return group_algebra(field, preset('C3'))


@pytest.fixture
def write(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return write


@pytest.fixture
def doc_of(write):
    def doc_of(ident):
        return write(ident + '.yaml', emit_fixture(fixture(ident)))
    return doc_of


def test_usage_errors(capsys):
    assert run_command([]) == 2
    assert run_command(['verify', 'nonsense', 'x.yaml']) == 2
    assert run_command(['fixtures', 'emit']) == 2
    assert 'fixture id' in capsys.readouterr().err


def test_fixtures_list(capsys):
    assert run_command(['fixtures', 'list']) == 0
    out = capsys.readouterr().out
    assert out.startswith('F1    group algebra kC2')
    assert len(out.splitlines()) >= 8


def test_fixtures_emit(capsys):
    assert run_command(['--field', 'q', 'fixtures', 'emit', 'F3']) == 0
    doc = parse_document(capsys.readouterr().out)
    assert doc.field.tag == 'q'
    assert doc.objects['F3'] == fixture('F3', doc.field).payload
    assert run_command(['fixtures', 'emit', 'F99']) == 2


def test_fixtures_emit_random(capsys):
    assert run_command(['fixtures', 'emit', 'random', '--seed', '1']) == 0
    doc = parse_document(capsys.readouterr().out)
    assert list(doc.objects) == ['random-1']
    assert run_command(['fixtures', 'emit', 'random-action',
                        '--group', 'C3']) == 0
    doc = parse_document(capsys.readouterr().out)
    assert 'random-action-0' in doc.objects


def test_validate(doc_of, capsys):
    assert run_command(['validate', doc_of('F1')]) == 0
    assert capsys.readouterr().out == 'F1: GradedAlgebra dim=2 ok\n'


def test_validate_rejects_bad_document(write, capsys):
    path = write('bad.yaml', "format_version: '1'\ngroup: {preset: C2}\n")
    assert run_command(['validate', path]) == 2
    assert "Missing required key 'objects'" in capsys.readouterr().err
    assert run_command(['validate', write('broken.yaml', 'a: [')]) == 2
    assert run_command(['validate', 'no/such/file.yaml']) == 2


def test_construct_to_file(doc_of, tmp_path):
    out = str(tmp_path / 'smash.yaml')
    assert run_command(['construct', 'smash', doc_of('F1'), '-o', out]) == 0
    doc = load_document(out)
    assert doc.objects['F1#G'].dim == 4


def test_construct_needs_object_name(doc_of, capsys):
    path = doc_of('F3')
    assert run_command(['construct', 'skew', path]) == 2
    capsys.readouterr()
    assert run_command(['construct', 'skew', path, '--object', 'F3']) == 0
    doc = parse_document(capsys.readouterr().out)
    assert doc.objects['F3.skew'].dim == 1


def test_construct_linking(doc_of, capsys):
    assert run_command(['construct', 'linking', doc_of('F1')]) == 0
    doc = parse_document(capsys.readouterr().out)
    assert doc.objects['F1.linking'].dim == 8


def test_verify_passes(doc_of, capsys):
    assert run_command(['verify', 'duality', doc_of('F1')]) == 0
    out = capsys.readouterr().out
    assert out.startswith('duality on F1: pass')


def test_verify_machine_report(doc_of, capsys):
    path = doc_of('F4')
    assert run_command(['--report', 'machine', 'verify', 'sg', path]) == 0
    report, = parse_reports(capsys.readouterr().out)
    assert report.theorem == 'sg'
    assert report.passed


def test_verify_precondition(doc_of, capsys):
    assert run_command(['verify', 'sg', doc_of('F2')]) == 2
    assert run_command(['verify', 'globalization', doc_of('F7')]) == 2


def test_bad_config(write):
    path = write('cfg.yaml', 'report: html\n')
    assert run_command(['-c', path, 'fixtures', 'list']) == 2
    assert run_command(['--field', 'fp:4', 'fixtures', 'list']) == 2


def test_config_fixture(write, capsys):
    path = write('cfg.yaml', 'fixtures:\n'
                 '  KC3:\n'
                 '    factory: test_main:_cyclic\n'
                 '    description: group algebra kC3\n')
    assert run_command(['-c', path, 'fixtures', 'emit', 'KC3']) == 0
    doc = parse_document(capsys.readouterr().out)
    assert doc.objects['KC3'].dim == 3
    assert doc.group.order == 3


def test_config_fixture_not_callable(write):
    path = write('cfg.yaml', 'fixtures:\n'
                 '  PI:\n'
                 '    factory: math:pi\n')
    assert run_command(['-c', path, 'fixtures', 'emit', 'PI']) == 2


def test_suite_uses_config(write, monkeypatch, capsys):
    seen = []

    def run_suite(*args):
        seen.append(args)
        return [VerificationReport('demo', 'F1', [Check('a', False)])]

    monkeypatch.setattr('gradedmorita.algebra.theorems.run_suite',
                        run_suite)
    path = write('cfg.yaml', 'suite:\n  jobs: 2\n')
    assert run_command(['-c', path, '--field', 'q', 'suite',
                        '--seeds', '3']) == 1
    assert seen == [(3, ('q',), 6, 3, 2)]
    assert 'demo on F1: FAIL' in capsys.readouterr().out


# vim:et:fdm=marker:sts=4:sw=4:ts=4
