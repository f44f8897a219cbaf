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

from gradedmorita.algebra.errors import (InvalidElement, NoIdentity,
                                         NoInverse, NonAssociative,
                                         UnknownPreset)
from gradedmorita.algebra.group import preset, validate_group


@pytest.mark.parametrize('name, order, abelian', [
    ('C2', 2, True),
    ('cyclic(5)', 5, True),
    ('klein4', 4, True),
    ('v4', 4, True),
    ('sym3', 6, False),
    ('trivial', 1, True),
])
def test_presets(name, order, abelian):
    group = preset(name)
    assert group.order == order
    assert group.is_abelian() == abelian
    for t in group.elements:
        assert group.mul(t, group.inv(t)) == group.identity


def test_cyclic_labels():
    group = preset('C3')
    assert [group.label(t) for t in group.elements] == ['1', 'g', 'g2']
    assert group.mul(1, 1, 1) == 0


def test_sym3_center():
    group = preset('s3')
    assert group.center() == [group.identity]


def test_unknown_preset():
    with pytest.raises(UnknownPreset):
        preset('dihedral(4)')


def test_custom_table():
    group = validate_group([[0, 1], [1, 0]], labels=['e', 's'])
    assert group == preset('C2')
    assert group.label(1) == 's'


def test_no_identity():
    with pytest.raises(NoIdentity):
        validate_group([[1, 0], [0, 1]])


def test_no_inverse():
    with pytest.raises(NoInverse):
        validate_group([[0, 1], [1, 1]])


def test_invalid_element():
    with pytest.raises(InvalidElement):
        validate_group([[0, 2], [1, 0]])
    with pytest.raises(InvalidElement):
        preset('C2').mul(0, 2)


def test_non_associative():
    # a loop of order 5 with identity 0 and unique inverses
    table = [[0, 1, 2, 3, 4],
             [1, 0, 3, 4, 2],
             [2, 4, 0, 1, 3],
             [3, 2, 4, 0, 1],
             [4, 3, 1, 2, 0]]
    with pytest.raises(NonAssociative):
        validate_group(table)


# vim:et:fdm=marker:sts=4:sw=4:ts=4
