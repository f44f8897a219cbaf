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

"""Finite groups stored as Cayley tables. Elements are the integers
``0 .. order-1``.

"""

import re
from itertools import permutations

from .errors import (InvalidElement, NoIdentity, NoInverse, NonAssociative,
                     UnknownPreset)

__all__ = ['FiniteGroup', 'validate_group', 'preset']


class FiniteGroup(object):

    def __init__(self, table, identity, inverse, labels=None, name=None):
        self.table = table
        self.identity = identity
        self.inverse = inverse
        self.order = len(table)
        self.labels = labels or tuple(str(i) for i in range(self.order))
        self.name = name

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and \
            self.table == other.table and self.identity == other.identity

    def __hash__(self):
        return hash((self.table, self.identity))

    def __repr__(self):
        return '<FiniteGroup {0} order={1}>'.format(
            self.name or 'custom', self.order)

    @property
    def elements(self):
        return range(self.order)

    def _check(self, t):
        if not isinstance(t, int) or not 0 <= t < self.order:
            raise InvalidElement(t, self.order)

    def mul(self, s, t, *rest):
        self._check(s)
        self._check(t)
        ret = self.table[s][t]
        for u in rest:
            self._check(u)
            ret = self.table[ret][u]
        return ret

    def inv(self, t):
        self._check(t)
        return self.inverse[t]

    def is_abelian(self):
        return all(self.table[s][t] == self.table[t][s]
                   for s in self.elements for t in self.elements)

    def center(self):
        return [z for z in self.elements
                if all(self.table[z][t] == self.table[t][z]
                       for t in self.elements)]

    def label(self, t):
        return self.labels[t]


def validate_group(table, identity=0, labels=None, name=None):
    n = len(table)
    if n == 0:
        raise NoIdentity(identity)
    for row in table:
        if len(row) != n:
            raise InvalidElement(len(row), n)
        for x in row:
            if not isinstance(x, int) or not 0 <= x < n:
                raise InvalidElement(x, n)
    table = tuple(tuple(row) for row in table)
    if not isinstance(identity, int) or not 0 <= identity < n:
        raise InvalidElement(identity, n)
    for t in range(n):
        if table[identity][t] != t or table[t][identity] != t:
            raise NoIdentity(identity)
    inverse = []
    for t in range(n):
        left = [s for s in range(n) if table[s][t] == identity]
        if not left or table[t][left[0]] != identity:
            raise NoInverse(t)
        inverse.append(left[0])
    for r in range(n):
        for s in range(n):
            rs = table[r][s]
            for t in range(n):
                if table[rs][t] != table[r][table[s][t]]:
                    raise NonAssociative(r, s, t)
    if labels is not None:
        labels = tuple(str(lbl) for lbl in labels)
        if len(labels) != n:
            raise InvalidElement(len(labels), n)
    return FiniteGroup(table, identity, tuple(inverse), labels, name)


def _cyclic(n):
    if n < 1:
        raise UnknownPreset('cyclic({0})'.format(n))
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    labels = ['1'] + ['g' if i == 1 else 'g{0}'.format(i)
                      for i in range(1, n)]
    return validate_group(table, 0, labels, 'cyclic({0})'.format(n))


def _klein4():
    table = [[i ^ j for j in range(4)] for i in range(4)]
    return validate_group(table, 0, ['1', 'a', 'b', 'ab'], 'klein4')


def _sym3():
    perms = sorted(permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}

    def compose(p, q):
        return tuple(p[q[k]] for k in range(3))
    table = [[index[compose(p, q)] for q in perms] for p in perms]
    labels = [''.join(str(k + 1) for k in p) for p in perms]
    return validate_group(table, index[(0, 1, 2)], labels, 'sym3')


_preset_pattern = re.compile(r'^\s*(?:cyclic\s*\(\s*(\d+)\s*\)|c(\d+))\s*$',
                             re.IGNORECASE)


def preset(name):
    """Look up a group by name: ``cyclic(n)`` (or ``Cn``), ``klein4``,
    ``sym3``.

    """
    match = _preset_pattern.match(str(name))
    if match:
        return _cyclic(int(match.group(1) or match.group(2)))
    key = str(name).strip().lower()
    if key in ('klein4', 'v4'):
        return _klein4()
    elif key in ('sym3', 's3'):
        return _sym3()
    elif key == 'trivial':
        return _cyclic(1)
    raise UnknownPreset(name)


# vim:et:fdm=marker:sts=4:sw=4:ts=4
