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

"""Structure-constant algebras, their gradings by a finite group and the
span arithmetic used to compare products of homogeneous pieces.

Products are stored sparsely: ``products[(i, j)]`` maps an output
coordinate ``k`` to the nonzero coefficient of ``b_k`` in ``b_i b_j``.

"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property

from .errors import (ClosureViolation, DimensionError, FieldMismatch,
                     GradingViolation, NonAssociative, NotGraded,
                     NotMultiplicative, PreconditionFailed)
from .linear import LinearMap, SpanBuilder, Subspace, nullspace, span
from .report import VerificationReport

__all__ = ['Algebra', 'GradedAlgebra', 'GradedSubspace', 'Multiplier',
           'GradedMultiplierAlgebra', 'Homomorphism',
           'validate_graded_algebra', 'trivially_graded', 'direct_sum',
           'graded_multipliers', 'check_psg_identities']

log = logging.getLogger(__name__)


def _accumulate(acc, coef, sparse, zero):
    for k, c in sparse.items():
        val = acc.get(k, zero) + coef * c
        if val:
            acc[k] = val
        else:
            acc.pop(k, None)


def _sparse(vec):
    return {i: x for i, x in enumerate(vec) if x}


class Algebra(object):
    """A finite-dimensional associative algebra, possibly non-unital."""

    def __init__(self, field, dim, products):
        self.field = field
        self.dim = dim
        self.products = products

    @classmethod
    def from_entries(cls, field, dim, entries):
        """Build from ``(i, j, coords)`` triples; ``coords`` may be dense or a
        ``{k: scalar}`` mapping. Repeated pairs accumulate.

        """
        products = {}
        zero = field.zero
        for i, j, coords in entries:
            if not (0 <= i < dim and 0 <= j < dim):
                raise DimensionError(dim, max(i, j) + 1)
            if isinstance(coords, dict):
                sparse = {k: field.convert(x) for k, x in coords.items()}
            else:
                if len(coords) != dim:
                    raise DimensionError(dim, len(coords))
                sparse = {k: field.convert(x) for k, x in enumerate(coords)}
            for k in sparse:
                if not 0 <= k < dim:
                    raise DimensionError(dim, k + 1)
            target = products.setdefault((i, j), {})
            _accumulate(target, field.one, sparse, zero)
            if not target:
                del products[(i, j)]
        return cls(field, dim, products)

    def __eq__(self, other):
        return isinstance(other, Algebra) and self.field == other.field and \
            self.dim == other.dim and self.products == other.products

    def __hash__(self):
        return hash((self.field, self.dim, len(self.products)))

    def __repr__(self):
        return '<Algebra dim={0} over {1}>'.format(self.dim, self.field.tag)

    def product(self, i, j):
        return self.products.get((i, j), {})

    def multiply_sparse(self, u, v):
        zero = self.field.zero
        acc = {}
        prods = self.products
        for i, a in u.items():
            for j, b in v.items():
                pij = prods.get((i, j))
                if pij:
                    _accumulate(acc, a * b, pij, zero)
        return acc

    def multiply(self, u, v):
        if len(u) != self.dim:
            raise DimensionError(self.dim, len(u))
        if len(v) != self.dim:
            raise DimensionError(self.dim, len(v))
        return self.field.dense(self.multiply_sparse(_sparse(u), _sparse(v)),
                                self.dim)

    def unit(self, i):
        return self.field.unit(self.dim, i)

    def _triple(self, pij, k, left):
        """Expand ``(sum_m pij[m] b_m) b_k`` (``left``) or
        ``b_k (sum_m pij[m] b_m)``.

        """
        zero = self.field.zero
        acc = {}
        for m, c in pij.items():
            pm = self.products.get((m, k) if left else (k, m))
            if pm:
                _accumulate(acc, c, pm, zero)
        return acc

    def check_associative(self):
        """Exhaustive over basis triples. Triples where both ``b_i b_j`` and
        ``b_j b_k`` vanish are zero on both sides and are skipped.

        """
        prods = self.products
        for (i, j), pij in sorted(prods.items()):
            for k in range(self.dim):
                left = self._triple(pij, k, True)
                pjk = prods.get((j, k))
                right = self._triple(pjk, i, False) if pjk else {}
                if left != right:
                    raise NonAssociative(i, j, k)
        for (j, k), pjk in sorted(prods.items()):
            for i in range(self.dim):
                if (i, j) in prods:
                    continue
                if self._triple(pjk, i, False):
                    raise NonAssociative(i, j, k)
        return self

    def span_products(self, lefts, rights, builder):
        for u in lefts:
            for v in rights:
                prod = self.multiply_sparse(u, v)
                if prod:
                    builder.add_sparse(prod)
                    if builder.is_full:
                        return builder
        return builder

    def subspace_product(self, left, right):
        if left.ambient_dim != self.dim:
            raise DimensionError(self.dim, left.ambient_dim)
        if right.ambient_dim != self.dim:
            raise DimensionError(self.dim, right.ambient_dim)
        if left.field != self.field or right.field != self.field:
            raise FieldMismatch(self.field.tag, left.field.tag)
        builder = SpanBuilder(self.field, self.dim)
        self.span_products(left.sparse_basis, right.sparse_basis, builder)
        return builder.subspace()

    def whole(self):
        return Subspace.full(self.field, self.dim)

    def is_ideal(self, subspace):
        whole = self.whole()
        return self.subspace_product(whole, subspace).is_subspace_of(
            subspace) and self.subspace_product(subspace, whole) \
            .is_subspace_of(subspace)

    def left_multiplication(self, vec):
        return LinearMap.from_function(
            self.field, self.dim, self.dim,
            lambda i: self.multiply(vec, self.unit(i)))

    def right_multiplication(self, vec):
        return LinearMap.from_function(
            self.field, self.dim, self.dim,
            lambda i: self.multiply(self.unit(i), vec))

    def restrict(self, subspace):
        """The subalgebra on ``subspace`` in coordinates of its echelon
        basis, with the embedding into this algebra.

        """
        rows = subspace.sparse_basis
        products = {}
        for a, u in enumerate(rows):
            for b, v in enumerate(rows):
                prod = self.multiply_sparse(u, v)
                if not prod:
                    continue
                dense = self.field.dense(prod, self.dim)
                coords = subspace.coordinates(dense)
                if coords is None:
                    raise ClosureViolation('subalgebra', (a, b))
                sparse = _sparse(coords)
                if sparse:
                    products[(a, b)] = sparse
        sub = Algebra(self.field, subspace.rank, products)
        embed = LinearMap(self.field, subspace.rank, self.dim, subspace.basis)
        return sub, embed

    def annihilator(self):
        """Two-sided annihilator ``{a : aB = 0 = Ba}``."""
        rows = []
        for j in range(self.dim):
            # coefficient of a_i in (a b_j)_q and (b_j a)_q
            eqs_left = defaultdict(dict)
            eqs_right = defaultdict(dict)
            for i in range(self.dim):
                for q, c in self.product(i, j).items():
                    eqs_left[q][i] = c
                for q, c in self.product(j, i).items():
                    eqs_right[q][i] = c
            rows.extend(eqs_left.values())
            rows.extend(eqs_right.values())
        return nullspace(self.field, rows, self.dim)


@dataclass(frozen=True)
class GradedSubspace(object):
    """A graded subspace of a graded algebra, one :class:`Subspace` per group
    element, each supported on the coordinates of that degree.

    """

    components: tuple

    def __getitem__(self, t):
        return self.components[t]

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    @property
    def dim(self):
        return sum(c.rank for c in self.components)

    @property
    def field(self):
        return self.components[0].field

    @property
    def ambient_dim(self):
        return self.components[0].ambient_dim

    @cached_property
    def total(self):
        builder = SpanBuilder(self.field, self.ambient_dim)
        for comp in self.components:
            for row in comp.sparse_basis:
                builder.add_sparse(row)
        return builder.subspace()

    def basis(self):
        """Concatenated echelon bases in group order, with degrees."""
        return [(t, row) for t, comp in enumerate(self.components)
                for row in comp.basis]

    def is_subspace_of(self, other):
        return all(a.is_subspace_of(b)
                   for a, b in zip(self.components, other.components))

    def is_zero(self):
        return all(not c.rank for c in self.components)

    def dims(self):
        return tuple(c.rank for c in self.components)


class GradedAlgebra(object):
    """An :class:`Algebra` with a homogeneous basis graded by a
    :class:`~gradedmorita.algebra.group.FiniteGroup`.

    """

    def __init__(self, algebra, group, degree, labels=None):
        self.algebra = algebra
        self.group = group
        self.degree = tuple(degree)
        self.labels = labels

    @property
    def field(self):
        return self.algebra.field

    @property
    def dim(self):
        return self.algebra.dim

    @property
    def products(self):
        return self.algebra.products

    def __eq__(self, other):
        return isinstance(other, GradedAlgebra) and \
            self.algebra == other.algebra and self.group == other.group and \
            self.degree == other.degree

    def __hash__(self):
        return hash((self.algebra, self.degree))

    def __repr__(self):
        return '<GradedAlgebra dim={0} |G|={1} over {2}>'.format(
            self.dim, self.group.order, self.field.tag)

    def multiply(self, u, v):
        return self.algebra.multiply(u, v)

    @cached_property
    def indices_of_degree(self):
        ret = [[] for _ in self.group.elements]
        for i, t in enumerate(self.degree):
            ret[t].append(i)
        return tuple(tuple(r) for r in ret)

    def component(self, t):
        return Subspace.coordinate(self.field, self.dim,
                                   self.indices_of_degree[t])

    def whole(self):
        return GradedSubspace(tuple(self.component(t)
                                    for t in self.group.elements))

    def zero(self):
        zero = Subspace.zero(self.field, self.dim)
        return GradedSubspace((zero,) * self.group.order)

    def homogeneous_parts(self, vec):
        parts = {}
        for i, x in enumerate(vec):
            if x:
                parts.setdefault(self.degree[i], {})[i] = x
        return parts

    def degree_of(self, vec):
        """Degree of a nonzero homogeneous vector, ``None`` otherwise."""
        parts = self.homogeneous_parts(vec)
        if len(parts) != 1:
            return None
        return next(iter(parts))

    def graded_span(self, vectors):
        """Smallest graded subspace containing ``vectors``."""
        builders = [SpanBuilder(self.field, self.dim)
                    for _ in self.group.elements]
        for vec in vectors:
            if len(vec) != self.dim:
                raise DimensionError(self.dim, len(vec))
            for t, part in self.homogeneous_parts(vec).items():
                builders[t].add_sparse(part)
        return GradedSubspace(tuple(b.subspace() for b in builders))

    def grade(self, subspace):
        """A graded :class:`Subspace` as a :class:`GradedSubspace`."""
        graded = self.graded_span(subspace.basis)
        if graded.total != subspace:
            raise NotGraded('subspace', 'is not a sum of homogeneous pieces')
        return graded

    def product(self, left, right):
        """``(UV)_t = sum_s U_s V_{s^-1 t}``."""
        table = self.group.table
        builders = [SpanBuilder(self.field, self.dim)
                    for _ in self.group.elements]
        for s, us in enumerate(left.components):
            if not us.rank:
                continue
            for u, vu in enumerate(right.components):
                if not vu.rank:
                    continue
                builder = builders[table[s][u]]
                if builder.is_full:
                    continue
                self.algebra.span_products(us.sparse_basis, vu.sparse_basis,
                                           builder)
        return GradedSubspace(tuple(b.subspace() for b in builders))

    def subspace_product(self, left, right):
        return self.algebra.subspace_product(left, right)

    def triple_product(self, first, second, third):
        return self.product(self.product(first, second), third)

    def piece(self, t, subspace=None):
        """A single homogeneous piece as a :class:`GradedSubspace`."""
        zero = Subspace.zero(self.field, self.dim)
        comps = [zero] * self.group.order
        comps[t] = self.component(t) if subspace is None else subspace
        return GradedSubspace(tuple(comps))

    def ideal_D(self, t):
        """``D_t = B_t B_{t^-1}``, checked to be an ideal of ``B_1``."""
        e = self.group.identity
        d_t = self.product(self.piece(t), self.piece(self.group.inv(t)))
        one = self.piece(e)
        if not (self.product(one, d_t).is_subspace_of(d_t) and
                self.product(d_t, one).is_subspace_of(d_t)):
            raise PreconditionFailed('D_{0} ideal of B_1'.format(t))
        return d_t[e]

    def ideals_D(self):
        return [self.ideal_D(t) for t in self.group.elements]

    def is_idempotent_graded(self):
        whole = self.whole()
        return self.product(whole, whole) == whole

    def is_partially_strongly_graded(self):
        for r in self.group.elements:
            b_r = self.piece(r)
            b_rinv = self.piece(self.group.inv(r))
            if self.triple_product(b_r, b_rinv, b_r) != b_r:
                return False
        return True

    def is_strongly_graded(self):
        table = self.group.table
        for r in self.group.elements:
            for t in self.group.elements:
                prod = self.product(self.piece(r), self.piece(t))
                if prod != self.piece(table[r][t]):
                    return False
        return True

    def restrict(self, graded):
        """Subalgebra on a graded subspace closed under products. The new
        basis concatenates the echelon bases of the components in group
        order.

        """
        basis = graded.basis()
        offsets = []
        count = 0
        for comp in graded.components:
            offsets.append(count)
            count += comp.rank
        products = {}
        table = self.group.table
        sparse_rows = [_sparse(row) for _, row in basis]
        for a, (s, _) in enumerate(basis):
            for b, (u, _) in enumerate(basis):
                prod = self.algebra.multiply_sparse(sparse_rows[a],
                                                    sparse_rows[b])
                if not prod:
                    continue
                t = table[s][u]
                coords = graded[t].coordinates(self.field.dense(prod,
                                                                self.dim))
                if coords is None:
                    raise ClosureViolation('graded subalgebra', (a, b))
                sparse = {offsets[t] + k: x for k, x in enumerate(coords)
                          if x}
                if sparse:
                    products[(a, b)] = sparse
        degree = [t for t, _ in basis]
        sub = GradedAlgebra(Algebra(self.field, count, products),
                            self.group, degree)
        embed = LinearMap(self.field, count, self.dim,
                          tuple(row for _, row in basis))
        return sub, embed

    def graded_coordinates(self, graded, vec):
        """Coordinates of ``vec`` on the concatenated basis of ``graded``."""
        out = []
        parts = self.homogeneous_parts(vec)
        for t, comp in enumerate(graded.components):
            part = self.field.dense(parts.get(t, {}), self.dim)
            coords = comp.coordinates(part)
            if coords is None:
                return None
            out.extend(coords)
        return tuple(out)


def validate_graded_algebra(algebra, group, degree, labels=None):
    degree = tuple(degree)
    if len(degree) != algebra.dim:
        raise DimensionError(algebra.dim, len(degree))
    for t in degree:
        group._check(t)
    algebra.check_associative()
    table = group.table
    for (i, j), pij in sorted(algebra.products.items()):
        expected = table[degree[i]][degree[j]]
        for k in sorted(pij):
            if degree[k] != expected:
                raise GradingViolation(i, j, k)
    return GradedAlgebra(algebra, group, degree, labels)


def trivially_graded(algebra, group):
    return GradedAlgebra(algebra, group, (group.identity,) * algebra.dim)


def direct_sum(first, second):
    if first.group != second.group:
        raise PreconditionFailed('direct sum over one group')
    n = first.dim
    products = dict(first.products)
    for (i, j), pij in second.products.items():
        products[(i + n, j + n)] = {k + n: c for k, c in pij.items()}
    algebra = Algebra(first.field, n + second.dim, products)
    return GradedAlgebra(algebra, first.group, first.degree + second.degree)


@dataclass(frozen=True)
class Homomorphism(object):
    """A linear map between algebras (graded or not) claimed to be an
    algebra homomorphism. :meth:`validate` checks the claim.

    """

    source: object
    target: object
    linear: LinearMap

    def apply(self, vec):
        return self.linear.apply(vec)

    def validate(self, graded=True):
        source, target = self.source, self.target
        graded = graded and isinstance(source, GradedAlgebra) and \
            isinstance(target, GradedAlgebra)
        if graded:
            for i, img in enumerate(self.linear.images):
                for k, x in enumerate(img):
                    if x and target.degree[k] != source.degree[i]:
                        raise NotGraded(i)
        for i in range(source.dim):
            for j in range(source.dim):
                lhs = self.linear.apply(
                    source.multiply(source.field.unit(source.dim, i),
                                    source.field.unit(source.dim, j)))
                rhs = target.multiply(self.linear.images[i],
                                      self.linear.images[j])
                if lhs != rhs:
                    raise NotMultiplicative((i, j))
        return self

    def compose(self, other):
        """``self`` after ``other``."""
        return Homomorphism(other.source, self.target,
                            self.linear.compose(other.linear))

    @property
    def rank(self):
        return self.linear.rank

    def is_injective(self):
        return self.linear.is_injective()

    def is_isomorphism(self):
        return self.linear.is_bijective()


@dataclass(frozen=True)
class Multiplier(object):
    """A pair ``(L, R)`` with ``L(ab) = L(a)b``, ``R(ab) = aR(b)`` and
    ``R(a)b = aL(b)``.

    """

    left: LinearMap
    right: LinearMap

    @classmethod
    def identity(cls, field, dim):
        ident = LinearMap.identity(field, dim)
        return cls(ident, ident)

    @classmethod
    def of_element(cls, algebra, vec):
        return cls(algebra.left_multiplication(vec),
                   algebra.right_multiplication(vec))

    @classmethod
    def from_vector(cls, field, dim, vec):
        d2 = dim * dim
        left = tuple(tuple(vec[i * dim:(i + 1) * dim]) for i in range(dim))
        right = tuple(tuple(vec[d2 + i * dim:d2 + (i + 1) * dim])
                      for i in range(dim))
        return cls(LinearMap(field, dim, dim, left),
                   LinearMap(field, dim, dim, right))

    def as_vector(self):
        out = []
        for img in self.left.images:
            out.extend(img)
        for img in self.right.images:
            out.extend(img)
        return tuple(out)

    def compose(self, other):
        """Product ``self * other`` in the multiplier algebra."""
        return Multiplier(self.left.compose(other.left),
                          other.right.compose(self.right))

    def is_idempotent(self):
        return self.compose(self) == self

    def complement(self):
        """``1 - e``."""
        field = self.left.field
        n = self.left.source_dim

        def minus(lm, i):
            return tuple((field.one if k == i else field.zero) - x
                         for k, x in enumerate(lm.images[i]))
        return Multiplier(
            LinearMap(field, n, n, tuple(minus(self.left, i)
                                         for i in range(n))),
            LinearMap(field, n, n, tuple(minus(self.right, i)
                                         for i in range(n))))

    def is_valid(self, algebra):
        field, n = algebra.field, algebra.dim
        for i in range(n):
            bi = field.unit(n, i)
            for j in range(n):
                bj = field.unit(n, j)
                bij = algebra.multiply(bi, bj)
                if self.left.apply(bij) != algebra.multiply(
                        self.left.images[i], bj):
                    return False
                if self.right.apply(bij) != algebra.multiply(
                        bi, self.right.images[j]):
                    return False
                if algebra.multiply(self.right.images[i], bj) != \
                        algebra.multiply(bi, self.left.images[j]):
                    return False
        return True

    def degree(self, graded):
        """The degree ``t`` of a nonzero homogeneous multiplier, or ``None``.
        """
        table = graded.group.table
        for t in graded.group.elements:
            ok = True
            for i in range(graded.dim):
                s = graded.degree[i]
                for k, x in enumerate(self.left.images[i]):
                    if x and graded.degree[k] != table[t][s]:
                        ok = False
                for k, x in enumerate(self.right.images[i]):
                    if x and graded.degree[k] != table[s][t]:
                        ok = False
                if not ok:
                    break
            if ok:
                return t
        return None

    def apply_left(self, subspace):
        """``eU`` for a subspace ``U``."""
        return self.left.image(subspace)

    def apply_right(self, subspace):
        """``Ue``."""
        return self.right.image(subspace)


class _Equations(object):

    def __init__(self, variables, positions):
        self.variables = variables
        self.positions = positions
        self.rows = []

    def add(self, eqs):
        for row in eqs:
            if row:
                self.rows.append(row)


def _multiplier_equations(graded, t):
    """Linear constraints on the ``(L, R)`` coefficients allowed in degree
    ``t``. Variables are indexed by ``('L'|'R', i, k)``; ``positions`` maps
    the compact numbering back to the order of :meth:`Multiplier.as_vector`.

    """
    n = graded.dim
    table = graded.group.table
    deg = graded.degree
    zero = graded.field.zero
    variables = {}
    positions = []
    for i in range(n):
        for k in range(n):
            if deg[k] == table[t][deg[i]]:
                variables[('L', i, k)] = len(positions)
                positions.append(i * n + k)
    for i in range(n):
        for k in range(n):
            if deg[k] == table[deg[i]][t]:
                variables[('R', i, k)] = len(positions)
                positions.append(n * n + i * n + k)
    prods = graded.products

    def put(eq, key, coef):
        var = variables.get(key)
        if var is None:
            return
        val = eq.get(var, zero) + coef
        if val:
            eq[var] = val
        else:
            eq.pop(var, None)

    rows = _Equations(variables, positions)
    for i in range(n):
        for j in range(n):
            pij = prods.get((i, j), {})
            left = defaultdict(dict)
            right = defaultdict(dict)
            mixed = defaultdict(dict)
            for m, c in pij.items():
                for q in range(n):
                    put(left[q], ('L', m, q), c)
                    put(right[q], ('R', m, q), c)
            for k in range(n):
                # L(b_i) b_j and R(b_i) b_j
                for q, c in prods.get((k, j), {}).items():
                    put(left[q], ('L', i, k), -c)
                    put(mixed[q], ('R', i, k), c)
                # b_i R(b_j) and b_i L(b_j)
                for q, c in prods.get((i, k), {}).items():
                    put(right[q], ('R', j, k), -c)
                    put(mixed[q], ('L', j, k), -c)
            rows.add(left.values())
            rows.add(right.values())
            rows.add(mixed.values())
    return rows


@dataclass
class GradedMultiplierAlgebra(object):

    graded: GradedAlgebra
    components: tuple
    report: VerificationReport

    @property
    def dim(self):
        return sum(c.rank for c in self.components)

    def component(self, t):
        return self.components[t]

    def contains(self, multiplier, t=None):
        vec = multiplier.as_vector()
        if t is not None:
            return self.components[t].contains(vec)
        return self.total.contains(vec)

    @cached_property
    def total(self):
        builder = SpanBuilder(self.graded.field,
                              2 * self.graded.dim * self.graded.dim)
        for comp in self.components:
            builder.extend(comp.basis)
        return builder.subspace()

    def mu(self, vec):
        return Multiplier.of_element(self.graded.algebra, vec)


def graded_multipliers(graded):
    field, n = graded.field, graded.dim
    size = 2 * n * n
    group = graded.group
    report = VerificationReport('graded multipliers')
    components = []
    for t in group.elements:
        eqs = _multiplier_equations(graded, t)
        solutions = nullspace(field, eqs.rows, len(eqs.positions))
        vectors = []
        for sol in solutions.basis:
            vec = [field.zero] * size
            for pos, x in zip(eqs.positions, sol):
                vec[pos] = x
            vectors.append(tuple(vec))
        components.append(span(field, vectors, size))
    components = tuple(components)
    total = SpanBuilder(field, size)
    for comp in components:
        total.extend(comp.basis)
    report.holds('components independent',
                 total.rank == sum(c.rank for c in components),
                 (total.rank, sum(c.rank for c in components)))

    table = group.table
    closed = True
    for s in group.elements:
        for t in group.elements:
            target = components[table[s][t]]
            for u in components[s].basis:
                mu_u = Multiplier.from_vector(field, n, u)
                for v in components[t].basis:
                    mu_v = Multiplier.from_vector(field, n, v)
                    if not target.contains(mu_u.compose(mu_v).as_vector()):
                        closed = False
    report.holds('M_s M_t in M_st', closed)

    algebra = graded.algebra
    images = []
    degree_ok = True
    hom_ok = True
    ideal_ok = True
    for i in range(n):
        mu_i = Multiplier.of_element(algebra, field.unit(n, i))
        images.append(mu_i.as_vector())
        if not components[graded.degree[i]].contains(mu_i.as_vector()):
            degree_ok = False
        for j in range(n):
            mu_j = Multiplier.of_element(algebra, field.unit(n, j))
            prod = Multiplier.of_element(
                algebra, algebra.multiply(field.unit(n, i), field.unit(n, j)))
            if mu_i.compose(mu_j) != prod:
                hom_ok = False
    for comp in components:
        for w in comp.basis:
            mult = Multiplier.from_vector(field, n, w)
            for i in range(n):
                mu_i = Multiplier.of_element(algebra, field.unit(n, i))
                left = Multiplier.of_element(algebra, mult.left.images[i])
                right = Multiplier.of_element(algebra, mult.right.images[i])
                if mult.compose(mu_i) != left or mu_i.compose(mult) != right:
                    ideal_ok = False
    report.holds('mu degree-preserving', degree_ok)
    report.holds('mu multiplicative', hom_ok)
    report.holds('mu(B) ideal', ideal_ok)
    mu_rank = span(field, images, size).rank if images else 0
    annihilator = algebra.annihilator()
    report.holds('ker mu = annihilator', n - mu_rank == annihilator.rank,
                 (n - mu_rank, annihilator.rank))
    if mu_rank < n:
        log.warning('mu is not injective: annihilator of dimension %d',
                    annihilator.rank)
    log.debug('multiplier algebra dims %s',
              [c.rank for c in components])
    return GradedMultiplierAlgebra(graded, components, report)


def check_psg_identities(graded):
    """Report on the identities satisfied by a partially strongly graded
    algebra.

    """
    if not graded.is_partially_strongly_graded():
        raise PreconditionFailed('partially strongly graded')
    group = graded.group
    table = group.table
    e = group.identity
    report = VerificationReport('psg identities')
    pieces = [graded.piece(t) for t in group.elements]
    d = [graded.product(pieces[t], pieces[group.inv(t)])
         for t in group.elements]
    prod = graded.product
    for r in group.elements:
        rinv = group.inv(r)
        for s in group.elements:
            rs, sr = table[r][s], table[s][r]
            report.equal('A_r^-1 A_r A_s = A_r^-1 A_rs [{0},{1}]'.format(r, s),
                         prod(prod(pieces[rinv], pieces[r]), pieces[s]),
                         prod(pieces[rinv], pieces[rs]))
            report.equal('A_s A_r A_r^-1 = A_sr A_r^-1 [{0},{1}]'.format(r, s),
                         prod(prod(pieces[s], pieces[r]), pieces[rinv]),
                         prod(pieces[sr], pieces[rinv]))
    for t in group.elements:
        for s in group.elements:
            report.equal('A_t D_s = D_ts A_t [{0},{1}]'.format(t, s),
                         prod(pieces[t], d[s]),
                         prod(d[table[t][s]], pieces[t]))
            report.equal('D_t D_s = D_s D_t [{0},{1}]'.format(t, s),
                         prod(d[t], d[s]), prod(d[s], d[t]))
        report.equal('A_1 A_t = A_t [{0}]'.format(t),
                     prod(pieces[e], pieces[t]), pieces[t])
        report.equal('A_t A_1 = A_t [{0}]'.format(t),
                     prod(pieces[t], pieces[e]), pieces[t])
        report.equal('D_t idempotent [{0}]'.format(t),
                     prod(d[t], d[t]), d[t])
    return report


# vim:et:fdm=marker:sts=4:sw=4:ts=4
