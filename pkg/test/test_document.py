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

from gradedmorita.algebra.fixtures import ALGEBRA, PARTIAL_ACTION, fixture
from gradedmorita.algebra.linear import Field
from gradedmorita.algebra.morita import trivial_context
from gradedmorita.algebra.smash import smash
from gradedmorita.app.document import (CONTEXT, Document, ParseError,
                                       ValidationError, dump_document,
                                       emit_fixture, kind_of, load_document,
                                       parse_document)
from gradedmorita.app.validation import DocumentValidationError

KC2 = """\
format_version: '1'
group: {preset: C2}
objects:
  kc2:
    type: algebra
    dim: 2
    degree: [0, 1]
    sc:
      - [0, 0, [1, 0]]
      - [0, 1, [0, 1]]
      - [1, 0, [0, 1]]
      - [1, 1, [1, 0]]
"""


def test_parse_algebra():
    doc = parse_document(KC2)
    assert doc.field == Field.prime()
    assert doc.format_version == '1'
    assert doc.objects['kc2'] == fixture('F1').payload


def test_field_from_caller_and_document():
    doc = parse_document(KC2, Field.rationals())
    assert doc.field.tag == 'q'
    doc = parse_document("field: fp:7\n" + KC2, Field.rationals())
    assert doc.field.tag == 'fp:7'


def test_wrong_degree_length():
    text = KC2.replace('degree: [0, 1]', 'degree: [0]')
    with pytest.raises(ValidationError) as info:
        parse_document(text)
    assert info.value.object == 'kc2'


def test_grading_violation_names_the_triple():
    text = KC2.replace('[1, 1, [1, 0]]', '[1, 1, [0, 1]]')
    with pytest.raises(ValidationError) as info:
        parse_document(text)
    assert 'b_1*b_1' in str(info.value)


def test_missing_key():
    text = KC2.replace('    dim: 2\n', '')
    with pytest.raises(DocumentValidationError) as info:
        parse_document(text)
    assert str(info.value) == \
        "Missing required key 'dim' in document objects.kc2"


def test_bad_structure_constant_entry():
    text = KC2.replace('[1, 0, [0, 1]]', '[1, [0, 1]]')
    with pytest.raises(DocumentValidationError) as info:
        parse_document(text)
    assert str(info.value).endswith('objects.kc2.sc[2]')


def test_unsupported_version():
    with pytest.raises(DocumentValidationError):
        parse_document(KC2.replace("'1'", "'2'"))


def test_yaml_error_has_line():
    with pytest.raises(ParseError) as info:
        parse_document('a: 1\n  b: 2\n')
    assert info.value.line == 2
    assert str(info.value).startswith('line 2: ')


def test_dangling_reference():
    text = KC2 + """\
  alpha:
    type: partial_action
    algebra: missing
    domains: []
    maps: []
"""
    with pytest.raises(DocumentValidationError):
        parse_document(text)


@pytest.mark.parametrize('ident', ['F1', 'F4', 'F3', 'F6'])
def test_fixture_roundtrip(field, ident):
    fix = fixture(ident, field)
    doc = parse_document(emit_fixture(fix))
    assert doc.field == field
    assert doc.objects[ident] == fix.payload


def test_global_action_with_ideal(field):
    fix = fixture('F7', field)
    doc = parse_document(emit_fixture(fix))
    glob = doc.objects['F7']
    assert kind_of(glob) == 'global_action'
    assert glob.action == fix.payload
    assert glob.ideal == fix.ideal


def test_partial_action_keeps_globalization(fp):
    doc = parse_document(emit_fixture(fixture('F3', fp)))
    assert set(doc.objects) == {'F3', 'F3.globalization'}
    assert doc.objects['F3'].globalization == doc.objects['F3.globalization']


def test_smash_labels_written(fp):
    f1 = fixture('F1', fp).payload
    text = dump_document(Document(fp, f1.group, {'s': smash(f1)}))
    assert 'labels:' in text
    assert parse_document(text).objects['s'].algebra == smash(f1).algebra


def test_context_roundtrip(fp):
    f1 = fixture('F1', fp).payload
    ctx = trivial_context(f1)
    text = dump_document(Document(fp, f1.group, {'m': ctx}))
    back = parse_document(text).objects['m']
    assert kind_of(back) == CONTEXT
    assert back.tables() == ctx.tables()
    assert back.left == f1


def test_pick():
    doc = parse_document(KC2)
    assert doc.pick((ALGEBRA,))[0] == 'kc2'
    with pytest.raises(ValidationError):
        doc.pick((PARTIAL_ACTION,))
    with pytest.raises(ValidationError):
        doc.pick((ALGEBRA,), 'other')


def test_load_document(tmp_path):
    path = tmp_path / 'kc2.yaml'
    path.write_text(KC2)
    assert list(load_document(str(path)).objects) == ['kc2']


# vim:et:fdm=marker:sts=4:sw=4:ts=4
