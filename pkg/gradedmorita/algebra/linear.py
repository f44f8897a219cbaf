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

"""Exact scalars, vectors and subspaces over the rationals or a prime field.

Scalars are elements of a :mod:`sympy` polynomial domain (``QQ`` or
``GF(p)``), vectors are plain tuples of such elements and every subspace is
kept in reduced row-echelon form, so equality of subspaces is equality of
their bases.

"""

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from fractions import Fraction

from sympy import Rational, isprime
from sympy.polys.domains import GF, QQ
from sympy.polys.matrices import DomainMatrix

from .errors import AlgebraError, DimensionError, FieldMismatch

__all__ = ['Field', 'Vector', 'Subspace', 'SpanBuilder', 'LinearMap',
           'rref', 'span', 'subspace_sum', 'subspace_intersect', 'contains',
           'equals', 'nullspace', 'solve_on_basis', 'vadd', 'vsub', 'vscale',
           'is_zero', 'nonzero']

#: A vector is a tuple of field elements; its length is the ambient dimension.
Vector = tuple

DEFAULT_PRIME = 101


class Field(object):
    """One of the exact base fields, identified by its tag ``q`` or
    ``fp:<p>``.

    """

    def __init__(self, domain, tag, characteristic):
        self.domain = domain
        self.tag = tag
        self.characteristic = characteristic
        self.zero = domain.zero
        self.one = domain.one

    @classmethod
    def rationals(cls):
        return cls(QQ, 'q', 0)

    @classmethod
    def prime(cls, p=DEFAULT_PRIME):
        p = int(p)
        if p < 2 or not isprime(p):
            raise ValueError(
                'Field characteristic must be prime: {0}'.format(p))
        return cls(GF(p), 'fp:{0}'.format(p), p)

    @classmethod
    def from_tag(cls, tag):
        tag = str(tag).strip().lower()
        if tag in ('q', 'qq'):
            return cls.rationals()
        if tag == 'fp':
            return cls.prime()
        if tag.startswith('fp:'):
            try:
                return cls.prime(int(tag[3:]))
            except ValueError as exc:
                raise ValueError('Invalid field tag: {0}'.format(tag)) from exc
        raise ValueError('Invalid field tag: {0}'.format(tag))

    def __eq__(self, other):
        return isinstance(other, Field) and self.tag == other.tag

    def __hash__(self):
        return hash(self.tag)

    def __repr__(self):
        return '<Field {0}>'.format(self.tag)

    def convert(self, value):
        """Bring an int, :class:`~fractions.Fraction`, string or domain
        element into this field.

        """
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Fraction):
            return self.quotient(self.domain(value.numerator),
                                 self.domain(value.denominator))
        if isinstance(value, int):
            return self.domain(value)
        if self.domain.of_type(value):
            return value
        raise FieldMismatch(self.tag, type(value).__name__)

    def parse(self, text):
        text = str(text).strip()
        if self.characteristic:
            num, _, den = text.partition('/')
            value = self.domain(int(num))
            if den:
                value = self.quotient(value, self.domain(int(den)))
            return value
        return self.domain.from_sympy(Rational(text))

    def format(self, value):
        if self.characteristic:
            return str(int(value) % self.characteristic)
        num = int(self.domain.numer(value))
        den = int(self.domain.denom(value))
        if den == 1:
            return str(num)
        return '{0}/{1}'.format(num, den)

    def inverse(self, value):
        return self.domain.revert(value)

    def quotient(self, a, b):
        return a * self.domain.revert(b)

    def check(self, value):
        if not self.domain.of_type(value):
            raise FieldMismatch(self.tag, type(value).__name__)
        return value

    def vector(self, coords):
        return tuple(self.convert(c) for c in coords)

    def zeros(self, n):
        return (self.zero,) * n

    def unit(self, n, i):
        vec = [self.zero] * n
        vec[i] = self.one
        return tuple(vec)

    def dense(self, sparse, n):
        vec = [self.zero] * n
        for k, x in sparse.items():
            vec[k] = x
        return tuple(vec)


def nonzero(vec):
    return [(i, x) for i, x in enumerate(vec) if x]


def is_zero(vec):
    return not any(vec)


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v):
    return tuple(c * a for a in v)


def _axpy(target, coef, row, zero):
    for k, x in row.items():
        val = target.get(k, zero) + coef * x
        if val:
            target[k] = val
        else:
            target.pop(k, None)


@dataclass(frozen=True)
class Subspace(object):
    """A subspace of ``field^ambient_dim`` in canonical reduced row-echelon
    form. Two subspaces are equal exactly when their bases are identical.

    """

    field: Field
    ambient_dim: int
    basis: tuple
    pivots: tuple = dc_field(compare=False)

    @property
    def rank(self):
        return len(self.basis)

    @property
    def dim(self):
        return len(self.basis)

    @classmethod
    def zero(cls, field, ambient_dim):
        return cls(field, ambient_dim, (), ())

    @classmethod
    def full(cls, field, ambient_dim):
        basis = tuple(field.unit(ambient_dim, i) for i in range(ambient_dim))
        return cls(field, ambient_dim, basis, tuple(range(ambient_dim)))

    @classmethod
    def coordinate(cls, field, ambient_dim, indices):
        indices = sorted(set(indices))
        basis = tuple(field.unit(ambient_dim, i) for i in indices)
        return cls(field, ambient_dim, basis, tuple(indices))

    @cached_property
    def sparse_basis(self):
        return tuple({i: x for i, x in enumerate(row) if x}
                     for row in self.basis)

    def residual(self, vec):
        res = {i: x for i, x in enumerate(vec) if x}
        zero = self.field.zero
        for row, p in zip(self.sparse_basis, self.pivots):
            coef = res.get(p)
            if coef:
                _axpy(res, -coef, row, zero)
        return res

    def contains(self, vec):
        if len(vec) != self.ambient_dim:
            raise DimensionError(self.ambient_dim, len(vec))
        return not self.residual(vec)

    def coordinates(self, vec):
        """Coordinates of ``vec`` on :attr:`basis`, or ``None`` when the
        vector lies outside the subspace.

        """
        if not self.contains(vec):
            return None
        return tuple(vec[p] for p in self.pivots)

    def combine(self, coords):
        out = [self.field.zero] * self.ambient_dim
        for c, row in zip(coords, self.basis):
            if c:
                for i, x in enumerate(row):
                    if x:
                        out[i] += c * x
        return tuple(out)

    def is_subspace_of(self, other):
        _check_same(self, other)
        if self.rank > other.rank:
            return False
        return all(not other.residual(row) for row in self.basis)

    def __repr__(self):
        return '<Subspace rank={0} in {1}>'.format(self.rank, self.ambient_dim)


class SpanBuilder(object):
    """Incremental Gauss-Jordan elimination on sparse rows. Rows are kept
    fully reduced, so membership is a single residual pass and the final
    basis is already canonical.

    """

    def __init__(self, field, ambient_dim):
        self.field = field
        self.ambient_dim = ambient_dim
        self.rows = {}

    @property
    def rank(self):
        return len(self.rows)

    @property
    def is_full(self):
        return len(self.rows) == self.ambient_dim

    def reduce(self, vec):
        zero = self.field.zero
        rows = self.rows
        for c in [c for c in vec if c in rows]:
            coef = vec.get(c)
            if coef:
                _axpy(vec, -coef, rows[c], zero)
        return vec

    def add_sparse(self, vec):
        if self.is_full:
            return False
        vec = self.reduce(dict(vec))
        if not vec:
            return False
        zero = self.field.zero
        pivot = min(vec)
        inv = self.field.inverse(vec[pivot])
        vec = {k: x * inv for k, x in vec.items()}
        for row in self.rows.values():
            coef = row.get(pivot)
            if coef:
                _axpy(row, -coef, vec, zero)
        self.rows[pivot] = vec
        return True

    def add(self, vec):
        if len(vec) != self.ambient_dim:
            raise DimensionError(self.ambient_dim, len(vec))
        return self.add_sparse({i: x for i, x in enumerate(vec) if x})

    def extend(self, vectors):
        for vec in vectors:
            self.add(vec)
            if self.is_full:
                break
        return self

    def subspace(self):
        pivots = tuple(sorted(self.rows))
        basis = tuple(self.field.dense(self.rows[p], self.ambient_dim)
                      for p in pivots)
        return Subspace(self.field, self.ambient_dim, basis, pivots)


def _check_same(left, right):
    if left.field != right.field:
        raise FieldMismatch(left.field.tag, right.field.tag)
    if left.ambient_dim != right.ambient_dim:
        raise DimensionError(left.ambient_dim, right.ambient_dim)


def _check_rows(field, rows, ncols):
    for row in rows:
        if len(row) != ncols:
            raise DimensionError(ncols, len(row))
        for x in row:
            field.check(x)


def rref(field, rows, ncols=None):
    """Reduced row-echelon form through :class:`DomainMatrix`. Returns the
    echelon matrix (same shape as the input), its rank and pivot columns.

    """
    rows = [tuple(r) for r in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    _check_rows(field, rows, ncols)
    if not rows or not ncols:
        return tuple(rows), 0, ()
    matrix = DomainMatrix([list(r) for r in rows], (len(rows), ncols),
                          field.domain)
    reduced, pivots = matrix.rref()
    out = tuple(tuple(field.domain.convert(x) for x in row)
                for row in reduced.to_list())
    return out, len(pivots), tuple(pivots)


def nullspace(field, rows, ncols):
    """Basis of the solutions of ``rows * x = 0`` as a :class:`Subspace`."""
    builder = SpanBuilder(field, ncols)
    for row in rows:
        if isinstance(row, dict):
            builder.add_sparse(row)
        else:
            builder.add(row)
        if builder.is_full:
            return Subspace.zero(field, ncols)
    if not builder.rows:
        return Subspace.full(field, ncols)
    reduced = builder.subspace()
    matrix = DomainMatrix([list(r) for r in reduced.basis],
                          (reduced.rank, ncols), field.domain)
    kernel = matrix.nullspace()
    vectors = [tuple(field.domain.convert(x) for x in row)
               for row in kernel.to_list()]
    return span(field, vectors, ncols)


def span(field, vectors, ambient_dim):
    builder = SpanBuilder(field, ambient_dim)
    for vec in vectors:
        if len(vec) != ambient_dim:
            raise DimensionError(ambient_dim, len(vec))
        for x in vec:
            field.check(x)
        builder.add(vec)
        if builder.is_full:
            break
    return builder.subspace()


def subspace_sum(left, right):
    _check_same(left, right)
    if not right.rank:
        return left
    if not left.rank:
        return right
    builder = SpanBuilder(left.field, left.ambient_dim)
    builder.extend(left.basis)
    builder.extend(right.basis)
    return builder.subspace()


def subspace_intersect(left, right):
    """Zassenhaus intersection: echelonize the stacked rows ``[u | u]`` and
    ``[v | 0]``; rows whose left half vanishes span the intersection.

    """
    _check_same(left, right)
    field, n = left.field, left.ambient_dim
    if not left.rank or not right.rank:
        return Subspace.zero(field, n)
    if left.is_subspace_of(right):
        return left
    if right.is_subspace_of(left):
        return right
    rows = [u + u for u in left.basis]
    rows += [v + field.zeros(n) for v in right.basis]
    reduced, _, _ = rref(field, rows, 2 * n)
    inter = [row[n:] for row in reduced
             if is_zero(row[:n]) and not is_zero(row[n:])]
    return span(field, inter, n)


def contains(subspace, vec):
    return subspace.contains(vec)


def equals(left, right):
    _check_same(left, right)
    return left == right


def solve_on_basis(field, sources, images, target_dim):
    """Given independent vectors and their images, return the canonical
    :class:`Subspace` they span together with the images of its echelon
    basis. Echelonizing ``[sources | images]`` carries the images along.

    """
    sources = [tuple(s) for s in sources]
    images = [tuple(m) for m in images]
    if len(sources) != len(images):
        raise DimensionError(len(sources), len(images))
    if not sources:
        return None, ()
    n = len(sources[0])
    rows = [s + m for s, m in zip(sources, images)]
    reduced, _, pivots = rref(field, rows, n + target_dim)
    if any(p >= n for p in pivots):
        raise AlgebraError('Map data is inconsistent on dependent vectors')
    kept = [row for row in reduced if not is_zero(row)]
    domain = Subspace(field, n, tuple(row[:n] for row in kept),
                      tuple(p for p in pivots))
    return domain, tuple(row[n:] for row in kept)


@dataclass(frozen=True)
class LinearMap(object):
    """A linear map given by the images of the source basis vectors."""

    field: Field
    source_dim: int
    target_dim: int
    images: tuple

    @classmethod
    def identity(cls, field, n):
        return cls(field, n, n, tuple(field.unit(n, i) for i in range(n)))

    @classmethod
    def zero(cls, field, source_dim, target_dim):
        return cls(field, source_dim, target_dim,
                   (field.zeros(target_dim),) * source_dim)

    @classmethod
    def from_function(cls, field, source_dim, target_dim, func):
        images = tuple(tuple(func(i)) for i in range(source_dim))
        return cls(field, source_dim, target_dim, images)

    def apply(self, vec):
        if len(vec) != self.source_dim:
            raise DimensionError(self.source_dim, len(vec))
        out = [self.field.zero] * self.target_dim
        for i, c in enumerate(vec):
            if c:
                for k, x in enumerate(self.images[i]):
                    if x:
                        out[k] += c * x
        return tuple(out)

    def __call__(self, vec):
        return self.apply(vec)

    def compose(self, other):
        """``self`` after ``other``."""
        if other.target_dim != self.source_dim:
            raise DimensionError(self.source_dim, other.target_dim)
        return LinearMap(self.field, other.source_dim, self.target_dim,
                         tuple(self.apply(v) for v in other.images))

    def image(self, subspace=None):
        vectors = self.images if subspace is None else \
            [self.apply(v) for v in subspace.basis]
        builder = SpanBuilder(self.field, self.target_dim)
        builder.extend(vectors)
        return builder.subspace()

    @property
    def rank(self):
        return self.image().rank

    def is_injective(self):
        return self.rank == self.source_dim

    def is_bijective(self):
        return self.source_dim == self.target_dim and self.is_injective()

    def kernel(self):
        rows = []
        for k in range(self.target_dim):
            rows.append({i: img[k] for i, img in enumerate(self.images)
                         if img[k]})
        return nullspace(self.field, [r for r in rows if r], self.source_dim)


# vim:et:fdm=marker:sts=4:sw=4:ts=4
