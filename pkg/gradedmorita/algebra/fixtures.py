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

"""Named fixtures and seeded generators of graded algebras and product
partial actions. Generators only use constructions that are valid by
design: group algebras, graded matrix algebras, truncated polynomials,
coordinate corners of full matrix algebras, direct sums, skew group
algebras, and restrictions of permutation actions to coordinate ideals.

"""

import logging
import random
from dataclasses import dataclass

from .errors import UnknownFixture
from .graded import (Algebra, GradedAlgebra, GradedSubspace, direct_sum,
                     validate_graded_algebra)
from .group import preset
from .linear import Field, Subspace
from .partial import (permutation_partial_action, restrict_global,
                      skew_group_algebra)
from .smash import fmat

__all__ = ['Fixture', 'fixture', 'register', 'describe', 'fixture_ids',
           'group_algebra', 'matrix_algebra', 'truncated_polynomial',
           'zero_algebra', 'permutation_fixture', 'random_graded_algebra',
           'random_product_partial_action', 'ALGEBRA', 'PARTIAL_ACTION',
           'GLOBAL_ACTION']

log = logging.getLogger(__name__)

ALGEBRA = 'algebra'
PARTIAL_ACTION = 'partial_action'
GLOBAL_ACTION = 'global_action'


@dataclass
class Fixture(object):
    """A named input. ``payload`` is a :class:`GradedAlgebra`, a
    :class:`PartialAction`, or a :class:`GlobalAction` together with
    ``ideal``.

    """

    ident: str
    kind: str
    payload: object
    description: str = ''
    ideal: Subspace = None

    @property
    def dim(self):
        if self.kind == ALGEBRA:
            return self.payload.dim
        return self.payload.algebra.dim


def group_algebra(field, group, scales=None):
    """``kG`` graded by ``G``. With ``scales`` the basis vector ``delta_t``
    is replaced by ``scales[t] delta_t``.

    """
    table = group.table
    scales = scales or [field.one] * group.order
    products = {}
    for s in group.elements:
        for t in group.elements:
            st = table[s][t]
            products[(s, t)] = {st: field.quotient(scales[s] * scales[t],
                                                   scales[st])}
    return validate_graded_algebra(Algebra(field, group.order, products),
                                   group, tuple(group.elements))


def matrix_algebra(field, group, shifts):
    """``M_n(k)`` with ``e_ij`` in degree ``shifts[i] shifts[j]^-1``;
    ``e_ij`` is basis vector ``i * n + j``.

    """
    n = len(shifts)
    table = group.table
    products = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                products[(i * n + j, j * n + k)] = {i * n + k: field.one}
    degree = [table[shifts[i]][group.inv(shifts[j])]
              for i in range(n) for j in range(n)]
    return validate_graded_algebra(Algebra(field, n * n, products), group,
                                   degree)


def truncated_polynomial(field, group, length, t):
    """``k[x]/(x^length)`` with ``x`` of degree ``t``."""
    products = {}
    for a in range(length):
        for b in range(length - a):
            products[(a, b)] = {a + b: field.one}
    degree = [group.identity]
    for _ in range(1, length):
        degree.append(group.table[degree[-1]][t])
    return validate_graded_algebra(Algebra(field, length, products), group,
                                   degree)


def zero_algebra(field, group, dim=1):
    return validate_graded_algebra(Algebra(field, dim, {}), group,
                                   (group.identity,) * dim)


def _unit_algebra(field):
    return Algebra(field, 1, {(0, 0): {0: field.one}})


def permutation_fixture(field, group, orbits, support, component=None):
    """The permutation action of ``group`` on copies of ``component``
    (default ``k``) and the ideal made of the copies whose flag in
    ``support`` is set.

    """
    component = component or _unit_algebra(field)
    full = Subspace.full(field, component.dim)
    zero = Subspace.zero(field, component.dim)
    ideals = [full if flag else zero for flag in support]
    return permutation_partial_action(group, component, orbits, ideals)


_registry = {}


def register(ident, factory, description=''):
    """Add a fixture. ``factory(field)`` returns a :class:`Fixture` or a
    bare :class:`GradedAlgebra`.

    """
    _registry[ident] = (factory, description)


def _fixture(ident, description):
    def deco(func):
        register(ident, func, description)
        return func
    return deco


@_fixture('F1', 'group algebra kC2 graded by C2 (strongly graded)')
def _f1(field):
    return group_algebra(field, preset('C2'))


@_fixture('F2', 'k[x]/(x^2) with deg x = g over C2 (idempotent, not psg)')
def _f2(field):
    group = preset('C2')
    return truncated_polynomial(field, group, 2, 1)


@_fixture('F3', 'C2 swap on k x k restricted to k x 0 (ppa with D_g = 0)')
def _f3(field):
    beta, ideal = permutation_fixture(field, preset('C2'), [(0,)], [1, 0])
    return Fixture('F3', PARTIAL_ACTION, restrict_global(beta, ideal))


@_fixture('F4', 'M2(k) with e12, e21 in degree g over C2 (strongly graded)')
def _f4(field):
    return matrix_algebra(field, preset('C2'), [0, 1])


@_fixture('F5', 'group algebra kC3 graded by C3')
def _f5(field):
    return group_algebra(field, preset('C3'))


@_fixture('F6', 'C3 cycle on k^3 restricted to span{e1, e2}')
def _f6(field):
    beta, ideal = permutation_fixture(field, preset('C3'), [(0,)],
                                      [1, 1, 0])
    return Fixture('F6', PARTIAL_ACTION, restrict_global(beta, ideal))


@_fixture('F7', 'C2 swap of e1, e2 on k^3 with ideal span{e1} '
          '(non-minimal globalization)')
def _f7(field):
    beta, ideal = permutation_fixture(field, preset('C2'),
                                      [(0,), (0, 1)], [1, 0, 0])
    return Fixture('F7', GLOBAL_ACTION, beta, ideal=ideal)


@_fixture('F8', 'zero-product algebra of dim 1, trivially graded by C2')
def _f8(field):
    return zero_algebra(field, preset('C2'))


def fixture_ids():
    return sorted(_registry)


def describe():
    return [(ident, _registry[ident][1]) for ident in fixture_ids()]


def fixture(ident, field=None):
    try:
        factory, description = _registry[ident]
    except KeyError:
        raise UnknownFixture(ident)
    field = field or Field.prime()
    ret = factory(field)
    if isinstance(ret, Fixture):
        ret.ident = ident
        ret.description = ret.description or description
        return ret
    if isinstance(ret, GradedAlgebra):
        return Fixture(ident, ALGEBRA, ret, description)
    return Fixture(ident, PARTIAL_ACTION, ret, description)


def _nonzero(rng, field):
    return field.convert(rng.randint(1, 9))


def _gen_group_algebra(rng, field, group, max_dim):
    if group.order > max_dim:
        return None
    scales = [field.one] + [_nonzero(rng, field)
                            for _ in range(1, group.order)]
    return group_algebra(field, group, scales)


def _gen_matrix(rng, field, group, max_dim):
    sizes = [n for n in (1, 2, 3) if n * n <= max_dim]
    n = rng.choice(sizes)
    shifts = [rng.choice(group.elements) for _ in range(n)]
    return matrix_algebra(field, group, shifts)


def _gen_truncated(rng, field, group, max_dim):
    if max_dim < 2:
        return None
    length = rng.randint(2, min(4, max_dim))
    return truncated_polynomial(field, group, length,
                                rng.choice(group.elements))


def _gen_corner(rng, field, group, max_dim):
    """Coordinate corner ``{b e_{r,s} : r, s in S}`` of ``fmat`` of a small
    base.

    """
    base = rng.choice([_gen_truncated, _gen_group_algebra])(
        rng, field, group, max_dim)
    if base is None:
        return None
    size = rng.randint(1, group.order)
    rows = sorted(rng.sample(list(group.elements), size))
    if size * size * base.dim > max_dim:
        return None
    full = fmat(base)
    keep = [[] for _ in group.elements]
    for k, (i, r, s) in enumerate(full.labels):
        if r in rows and s in rows:
            keep[full.degree[k]].append(k)
    piece = GradedSubspace(tuple(Subspace.coordinate(field, full.dim, idx)
                                 for idx in keep))
    corner, _ = full.restrict(piece)
    return corner


def _gen_skew(rng, field, group, max_dim):
    alpha = random_product_partial_action(rng.randrange(1 << 30), group,
                                          max_dim, field)
    skew = skew_group_algebra(alpha)
    if skew.dim > max_dim:
        return None
    return GradedAlgebra(skew.algebra, group, skew.degree)


_simple_generators = (_gen_group_algebra, _gen_matrix, _gen_truncated,
                      _gen_corner)


def _gen_sum(rng, field, group, max_dim):
    if max_dim < 2:
        return None
    first = rng.choice(_simple_generators)(rng, field, group, max_dim - 1)
    if first is None:
        return None
    second = rng.choice(_simple_generators)(rng, field, group,
                                            max_dim - first.dim)
    if second is None:
        return None
    return direct_sum(first, second)


_generators = _simple_generators + (_gen_sum, _gen_skew)


def random_graded_algebra(seed, group=None, max_dim=6, field=None):
    """A graded algebra of dimension at most ``max_dim``, determined by
    ``seed``. The first attempt cycles through the generator
    families with the seed so consecutive seeds cover all of them.

    """
    group = group or preset('C2')
    field = field or Field.prime()
    rng = random.Random(seed)
    rerolls = 0
    gen = _generators[seed % len(_generators)]
    while True:
        ret = gen(rng, field, group, max_dim)
        if ret is not None and 0 < ret.dim <= max_dim:
            break
        rerolls += 1
        gen = rng.choice(_generators)
    if rerolls:
        log.warning('random graded algebra (seed %s): %d re-rolls', seed,
                    rerolls)
    log.debug('random graded algebra (seed %s) via %s, dim %d', seed,
              gen.__name__, ret.dim)
    return ret


def _subgroups(group):
    ret = {(group.identity,), tuple(group.elements)}
    for t in group.elements:
        gen, cur = {group.identity}, t
        while cur not in gen:
            gen.add(cur)
            cur = group.table[cur][t]
        ret.add(tuple(sorted(gen)))
    return sorted(ret, key=lambda sub: (len(sub), sub))


def random_product_partial_action(seed, group=None, max_dim=6, field=None):
    """Restriction of a random permutation action on copies of ``k`` or
    ``M2(k)`` to a random nonzero coordinate ideal.

    """
    group = group or preset('C2')
    field = field or Field.prime()
    rng = random.Random(seed)
    subgroups = _subgroups(group)
    components = [_unit_algebra(field)]
    if max_dim >= 4:
        components.append(matrix_algebra(field, preset('trivial'),
                                         [0, 0]).algebra)
    rerolls = 0
    while True:
        component = rng.choice(components)
        orbits = [rng.choice(subgroups) for _ in range(rng.randint(1, 2))]
        points = sum(group.order // len(sub) for sub in orbits)
        support = [rng.randint(0, 1) for _ in range(points)]
        if points * component.dim <= max_dim and any(support):
            break
        rerolls += 1
    if rerolls:
        log.warning('random product partial action (seed %s): %d re-rolls',
                    seed, rerolls)
    beta, ideal = permutation_fixture(field, group, orbits, support,
                                      component)
    return restrict_global(beta, ideal)


# vim:et:fdm=marker:sts=4:sw=4:ts=4
