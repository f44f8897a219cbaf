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

"""Graded Morita contexts.

A context ``(A, B, X, Y)`` exists in two forms. An :class:`AbstractContext`
carries structure tables for the module actions and the two pairings; its
linking algebra ``[[A, X], [Y, B]]`` lives on the coordinates of ``A``, ``X``,
``Y`` and ``B`` in that order. An :class:`EmbeddedContext` is four graded
subspaces of an ambient graded algebra, with every action and pairing given
by the ambient product. Each form converts to the other.

"""

import logging
from dataclasses import dataclass
from functools import cached_property, reduce

from .errors import (AlgebraError, BalanceViolation, ClosureViolation,
                     DimensionError, FieldMismatch, FullnessFailed,
                     GradingViolation, MiddleAlgebraMismatch, NonAssociative,
                     NotDegreeOne, NotGraded, NotIdempotent,
                     PreconditionFailed)
from .graded import (Algebra, GradedAlgebra, GradedSubspace, Homomorphism,
                     Multiplier, trivially_graded, validate_graded_algebra)
from .linear import (LinearMap, SpanBuilder, Subspace, solve_on_basis, span,
                     subspace_intersect)
from .partial import (ActionMorphism, GlobalAction, PartialAction,
                      is_global, restrict_global, skew_group_algebra,
                      validate_product_partial_action, PRODUCT)
from .report import VerificationReport
from .smash import dual_action, partial_smash, smash

__all__ = ['AbstractContext', 'EmbeddedContext', 'GradedModule',
           'TensorProduct', 'LinkingAlgebra', 'SmashContext',
           'ActionMoritaEquivalence', 'SkewEquivalence', 'as_abstract',
           'as_embedded', 'validate_context', 'trivial_context',
           'reverse_context', 'transport', 'is_graded_equivalence',
           'is_strong_context', 'is_strong_graded_equivalence',
           'check_strong_props', 'check_psg_context_consequences',
           'linking_algebra', 'corner_context', 'corner_by_idempotent',
           'corner_isomorphism', 'tensor_over', 'compose_contexts',
           'smash_context', 'validate_action_equivalence',
           'action_equivalence_to_sge', 'restrict_action_equivalence',
           'sge_to_canonical_action_equivalence', 'weak_equivalence',
           'action_equivalence_implies_weak', 'skew_embedding',
           'trivial_action_equivalence']

log = logging.getLogger(__name__)

BLOCKS = ('A', 'X', 'Y', 'B')
LEFT = 'left'
RIGHT = 'right'

# table name: (first factor, second factor, result)
_TABLE_SHAPES = {'ax': ('A', 'X', 'X'),
                 'xb': ('X', 'B', 'X'),
                 'by': ('B', 'Y', 'Y'),
                 'ya': ('Y', 'A', 'Y'),
                 'xy': ('X', 'Y', 'A'),
                 'yx': ('Y', 'X', 'B')}


def _axpy(acc, coef, sparse, zero):
    for k, x in sparse.items():
        val = acc.get(k, zero) + coef * x
        if val:
            acc[k] = val
        else:
            acc.pop(k, None)
    return acc


def _bilinear(table, left, right, zero):
    """Extend ``table`` bilinearly to sparse ``left`` and ``right``."""
    acc = {}
    for i, a in left.items():
        for j, b in right.items():
            out = table.get((i, j))
            if out:
                _axpy(acc, a * b, out, zero)
    return acc


def _report(report, name):
    return report if report is not None else VerificationReport(name)


def _mul(algebra):
    def mul(*factors):
        return reduce(algebra.subspace_product, factors)
    return mul


def _sum(field, n, *subspaces):
    builder = SpanBuilder(field, n)
    for sub in subspaces:
        builder.extend(sub.basis)
    return builder.subspace()


def _flat(ambient, subspace):
    """A subspace of a trivially graded ambient as a graded subspace."""
    zero = Subspace.zero(ambient.field, ambient.dim)
    comps = [zero] * ambient.group.order
    comps[ambient.group.identity] = subspace
    return GradedSubspace(tuple(comps))


def _preimage(linear, subspace):
    """``linear^-1(subspace)`` for an injective map whose image contains
    ``subspace``.

    """
    field = linear.field
    units = [field.unit(linear.source_dim, i)
             for i in range(linear.source_dim)]
    if not units:
        return Subspace.zero(field, 0)
    domain, images = solve_on_basis(field, linear.images, units,
                                    linear.source_dim)
    vectors = []
    for vec in subspace.basis:
        coords = domain.coordinates(vec)
        if coords is None:
            raise ClosureViolation('image', 'vector outside the image')
        vectors.append(_combine(field, coords, images, linear.source_dim))
    return span(field, vectors, linear.source_dim)


def _combine(field, coords, rows, n):
    out = [field.zero] * n
    for c, row in zip(coords, rows):
        if c:
            for k, x in enumerate(row):
                if x:
                    out[k] += c * x
    return tuple(out)


def _inverse(linear):
    field, n = linear.field, linear.source_dim
    units = [field.unit(n, i) for i in range(n)]
    if not units:
        return linear
    domain, images = solve_on_basis(field, linear.images, units, n)
    if domain.rank != linear.target_dim:
        raise PreconditionFailed('isomorphism', 'map is not invertible')
    return LinearMap(field, linear.target_dim, n, images)


class AbstractContext(object):
    """A Morita context given by structure tables. Every table maps a pair of
    basis indices to a sparse ``{k: scalar}`` result:

    ``ax``: A x X -> X, ``xb``: X x B -> X, ``by``: B x Y -> Y,
    ``ya``: Y x A -> Y, ``xy``: X x Y -> A, ``yx``: Y x X -> B.

    """

    def __init__(self, left, right, x_degree, y_degree, ax, xb, by, ya, xy,
                 yx):
        self.left = left
        self.right = right
        self.x_degree = tuple(x_degree)
        self.y_degree = tuple(y_degree)
        self.ax = ax
        self.xb = xb
        self.by = by
        self.ya = ya
        self.xy = xy
        self.yx = yx

    def __repr__(self):
        return '<AbstractContext dims A={0} X={1} Y={2} B={3}>'.format(
            self.left.dim, self.x_dim, self.y_dim, self.right.dim)

    @property
    def field(self):
        return self.left.field

    @property
    def group(self):
        return self.left.group

    @property
    def x_dim(self):
        return len(self.x_degree)

    @property
    def y_dim(self):
        return len(self.y_degree)

    def tables(self):
        return {'ax': self.ax, 'xb': self.xb, 'by': self.by, 'ya': self.ya,
                'xy': self.xy, 'yx': self.yx}

    def block_dims(self):
        return {'A': self.left.dim, 'X': self.x_dim, 'Y': self.y_dim,
                'B': self.right.dim}

    @cached_property
    def offsets(self):
        """Start of the ``A``, ``X``, ``Y``, ``B`` blocks and the total."""
        dims = self.block_dims()
        ret = [0]
        for name in BLOCKS:
            ret.append(ret[-1] + dims[name])
        return tuple(ret)

    def block_of(self, k):
        for name, start, end in zip(BLOCKS, self.offsets, self.offsets[1:]):
            if start <= k < end:
                return name
        raise DimensionError(self.offsets[-1], k + 1)

    @cached_property
    def linking(self):
        """The linking algebra ``[[A, X], [Y, B]]`` with the block
        product.

        """
        start = dict(zip(BLOCKS, self.offsets))
        products = {}

        def put(table, first, second, result):
            lo, ro, out = start[first], start[second], start[result]
            for (i, j), sparse in table.items():
                sparse = {out + k: c for k, c in sparse.items() if c}
                if sparse:
                    products[(lo + i, ro + j)] = sparse
        put(self.left.products, 'A', 'A', 'A')
        put(self.right.products, 'B', 'B', 'B')
        for name, (first, second, result) in _TABLE_SHAPES.items():
            put(getattr(self, name), first, second, result)
        degree = self.left.degree + self.x_degree + self.y_degree + \
            self.right.degree
        algebra = Algebra(self.field, self.offsets[-1], products)
        log.debug('linking algebra of dim %d (%s)', algebra.dim,
                  '+'.join(str(d) for d in self.block_dims().values()))
        return GradedAlgebra(algebra, self.group, degree)

    def block(self, name):
        """The coordinate block ``name`` of the linking algebra."""
        linking = self.linking
        index = BLOCKS.index(name)
        start, end = self.offsets[index], self.offsets[index + 1]
        comps = []
        for t in self.group.elements:
            comps.append(Subspace.coordinate(
                self.field, linking.dim,
                [k for k in range(start, end) if linking.degree[k] == t]))
        return GradedSubspace(tuple(comps))

    @cached_property
    def embedded(self):
        return EmbeddedContext(self.linking, self.block('A'),
                               self.block('B'), self.block('X'),
                               self.block('Y'))

    def embed(self):
        return self.embedded

    def inclusion(self, name):
        """Coordinate inclusion of ``A`` or ``B`` into the linking
        algebra.

        """
        source = self.left if name == 'A' else self.right
        start = self.offsets[BLOCKS.index(name)]
        n = self.offsets[-1]
        images = tuple(self.field.unit(n, start + i)
                       for i in range(source.dim))
        return Homomorphism(source, self.linking,
                            LinearMap(self.field, source.dim, n, images))

    def x_left(self):
        return GradedModule(self.left, self.x_degree, self.ax, LEFT)

    def x_right(self):
        return GradedModule(self.right, self.x_degree, self.xb, RIGHT)

    def y_left(self):
        return GradedModule(self.right, self.y_degree, self.by, LEFT)

    def y_right(self):
        return GradedModule(self.left, self.y_degree, self.ya, RIGHT)


class EmbeddedContext(object):
    """Graded subspaces ``A``, ``B``, ``X``, ``Y`` of ``ambient`` closed under
    the products a Morita context needs.

    """

    def __init__(self, ambient, a, b, x, y):
        self.ambient = ambient
        self.a = a
        self.b = b
        self.x = x
        self.y = y
        self._d = {}

    def __repr__(self):
        return '<EmbeddedContext dims A={0} X={1} Y={2} B={3}>'.format(
            self.a.dim, self.x.dim, self.y.dim, self.b.dim)

    @property
    def field(self):
        return self.ambient.field

    @property
    def group(self):
        return self.ambient.group

    def pieces(self):
        return {'A': self.a, 'X': self.x, 'Y': self.y, 'B': self.b}

    def dims(self):
        return {name: piece.dim for name, piece in self.pieces().items()}

    def mul(self, *factors):
        """Degreewise product of graded subspaces."""
        return reduce(self.ambient.product, factors)

    def smul(self, *factors):
        """Product of plain subspaces of the ambient."""
        return reduce(self.ambient.subspace_product, factors)

    def _ideal(self, piece, t):
        key = (piece, t)
        if key not in self._d:
            graded = self.pieces()[piece]
            self._d[key] = self.smul(graded[t], graded[self.group.inv(t)])
        return self._d[key]

    def d_left(self, t):
        """``D^A_t = A_t A_{t^-1}``."""
        return self._ideal('A', t)

    def d_right(self, t):
        """``D^B_t = B_t B_{t^-1}``."""
        return self._ideal('B', t)

    def to_abstract(self):
        amb = self.ambient
        left, left_embed = amb.restrict(self.a)
        right, right_embed = amb.restrict(self.b)
        xs, ys = self.x.basis(), self.y.basis()
        x_rows = [row for _, row in xs]
        y_rows = [row for _, row in ys]

        def table(firsts, seconds, target, name):
            out = {}
            for i, u in enumerate(firsts):
                for j, v in enumerate(seconds):
                    prod = amb.multiply(u, v)
                    if not any(prod):
                        continue
                    coords = amb.graded_coordinates(target, prod)
                    if coords is None:
                        raise ClosureViolation(name, (i, j))
                    sparse = {k: c for k, c in enumerate(coords) if c}
                    if sparse:
                        out[(i, j)] = sparse
            return out
        a_rows, b_rows = left_embed.images, right_embed.images
        return AbstractContext(
            left, right, [t for t, _ in xs], [t for t, _ in ys],
            table(a_rows, x_rows, self.x, 'AX in X'),
            table(x_rows, b_rows, self.x, 'XB in X'),
            table(b_rows, y_rows, self.y, 'BY in Y'),
            table(y_rows, a_rows, self.y, 'YA in Y'),
            table(x_rows, y_rows, self.a, 'XY in A'),
            table(y_rows, x_rows, self.b, 'YX in B'))


def as_abstract(ctx):
    if isinstance(ctx, EmbeddedContext):
        return ctx.to_abstract()
    return ctx


def as_embedded(ctx):
    if isinstance(ctx, AbstractContext):
        return ctx.embed()
    return ctx


def _validate_embedded(ctx):
    amb = ctx.ambient
    for name, piece in ctx.pieces().items():
        if len(piece) != ctx.group.order:
            raise DimensionError(ctx.group.order, len(piece))
        for t, comp in enumerate(piece):
            if not comp.is_subspace_of(amb.component(t)):
                raise NotGraded(name, 'component {0}'.format(
                    ctx.group.label(t)))
    for first, second, result in (('A', 'A', 'A'), ('B', 'B', 'B')) + \
            tuple(_TABLE_SHAPES.values()):
        pieces = ctx.pieces()
        prod = ctx.mul(pieces[first], pieces[second])
        if not prod.is_subspace_of(pieces[result]):
            raise ClosureViolation(result, '{0}{1}'.format(first, second))
    return ctx


def validate_context(ctx):
    """Check an abstract context's dimensions, grading and the
    associativity identities linking its tables; for an embedded context,
    check that every piece is graded and closed under the products.

    """
    if isinstance(ctx, EmbeddedContext):
        return _validate_embedded(ctx)
    left, right = ctx.left, ctx.right
    if left.field != right.field:
        raise FieldMismatch(left.field.tag, right.field.tag)
    if left.group != right.group:
        raise PreconditionFailed('common group')
    dims = ctx.block_dims()
    for name, table in ctx.tables().items():
        first, second, result = _TABLE_SHAPES[name]
        for (i, j), sparse in table.items():
            if not (0 <= i < dims[first] and 0 <= j < dims[second]):
                raise DimensionError(dims[first], max(i, j) + 1)
            for k in sparse:
                if not 0 <= k < dims[result]:
                    raise DimensionError(dims[result], k + 1)
    for degree in (ctx.x_degree, ctx.y_degree):
        for t in degree:
            ctx.group._check(t)
    validate_graded_algebra(left.algebra, left.group, left.degree)
    validate_graded_algebra(right.algebra, right.group, right.degree)
    linking = ctx.linking
    deg = linking.degree
    table = ctx.group.table
    for (i, j), pij in sorted(linking.products.items()):
        expected = table[deg[i]][deg[j]]
        for k in sorted(pij):
            if deg[k] != expected:
                raise GradingViolation(i, j, k, '{0}{1} -> {2}'.format(
                    ctx.block_of(i), ctx.block_of(j), ctx.block_of(k)))
    try:
        linking.algebra.check_associative()
    except NonAssociative as exc:
        blocks = tuple(ctx.block_of(k) for k in exc.triple)
        raise BalanceViolation(blocks, exc.triple) from exc
    return ctx


def trivial_context(algebra):
    """``(A, A, A, A)`` with every action and pairing the product of A."""
    prods = dict(algebra.products)
    return AbstractContext(algebra, algebra, algebra.degree, algebra.degree,
                           prods, prods, prods, prods, prods, prods)


def reverse_context(ctx):
    """``(B, A, Y, X)``."""
    ctx = as_abstract(ctx)
    return AbstractContext(ctx.right, ctx.left, ctx.y_degree, ctx.x_degree,
                           ctx.by, ctx.ya, ctx.ax, ctx.xb, ctx.yx, ctx.xy)


def _pull_first(table, inverse, zero):
    """Re-express the first factor of ``table`` along ``inverse``."""
    by_first = {}
    for (i, p), sparse in table.items():
        by_first.setdefault(i, []).append((p, sparse))
    out = {}
    for i2, img in enumerate(inverse.images):
        for i, c in enumerate(img):
            if not c:
                continue
            for p, sparse in by_first.get(i, ()):
                _axpy(out.setdefault((i2, p), {}), c, sparse, zero)
    return {key: val for key, val in out.items() if val}


def _pull_second(table, inverse, zero):
    by_second = {}
    for (p, i), sparse in table.items():
        by_second.setdefault(i, []).append((p, sparse))
    out = {}
    for i2, img in enumerate(inverse.images):
        for i, c in enumerate(img):
            if not c:
                continue
            for p, sparse in by_second.get(i, ()):
                _axpy(out.setdefault((p, i2), {}), c, sparse, zero)
    return {key: val for key, val in out.items() if val}


def _push(table, linear):
    field = linear.field
    out = {}
    for key, sparse in table.items():
        image = linear.apply(field.dense(sparse, linear.source_dim))
        image = {k: x for k, x in enumerate(image) if x}
        if image:
            out[key] = image
    return out


def _check_iso(hom, source):
    if hom.source != source:
        raise MiddleAlgebraMismatch('isomorphism does not start at the '
                                    'context algebra')
    hom.validate()
    if not hom.is_isomorphism():
        raise PreconditionFailed('isomorphism', 'map is not bijective')


def transport(ctx, left_iso=None, right_iso=None):
    """Re-coordinatize ``ctx`` along graded isomorphisms ``A -> A2`` and
    ``B -> B2``.

    """
    ctx = as_abstract(ctx)
    zero = ctx.field.zero
    left, right = ctx.left, ctx.right
    ax, xb, by, ya, xy, yx = ctx.ax, ctx.xb, ctx.by, ctx.ya, ctx.xy, ctx.yx
    if left_iso is not None:
        _check_iso(left_iso, left)
        inverse = _inverse(left_iso.linear)
        ax = _pull_first(ax, inverse, zero)
        ya = _pull_second(ya, inverse, zero)
        xy = _push(xy, left_iso.linear)
        left = left_iso.target
    if right_iso is not None:
        _check_iso(right_iso, right)
        inverse = _inverse(right_iso.linear)
        by = _pull_first(by, inverse, zero)
        xb = _pull_second(xb, inverse, zero)
        yx = _push(yx, right_iso.linear)
        right = right_iso.target
    return AbstractContext(left, right, ctx.x_degree, ctx.y_degree, ax, xb,
                           by, ya, xy, yx)


def is_graded_equivalence(ctx, report=None):
    """Surjective pairings and unital bimodules."""
    emb = as_embedded(ctx)
    report = _report(report, 'graded equivalence')
    mul = emb.mul
    a, b, x, y = emb.a, emb.b, emb.x, emb.y
    return all([report.equal('XY = A', mul(x, y), a),
                report.equal('YX = B', mul(y, x), b),
                report.equal('AX = X', mul(a, x), x),
                report.equal('XB = X', mul(x, b), x),
                report.equal('BY = Y', mul(b, y), y),
                report.equal('YA = Y', mul(y, a), y)])


def is_strong_context(ctx, report=None):
    """Every ``X_t`` is a unital ``(D^A_t, D^B_{t^-1})``-bimodule and every
    ``Y_t`` a unital ``(D^B_t, D^A_{t^-1})``-bimodule, over idempotent
    ``D``'s.

    """
    emb = as_embedded(ctx)
    report = _report(report, 'strong context')
    group = emb.group
    m = emb.smul
    ok = []
    for t in group.elements:
        tinv = group.inv(t)
        lbl = group.label(t)
        da, db = emb.d_left(t), emb.d_right(t)
        x_t, y_t = emb.x[t], emb.y[t]
        ok += [
            report.equal('D^A_{0} idempotent'.format(lbl), m(da, da), da),
            report.equal('D^B_{0} idempotent'.format(lbl), m(db, db), db),
            report.equal('D^A_{0} X_{0} = X_{0}'.format(lbl), m(da, x_t),
                         x_t),
            report.equal('X_{0} D^B_{0}^-1 = X_{0}'.format(lbl),
                         m(x_t, emb.d_right(tinv)), x_t),
            report.equal('D^B_{0} Y_{0} = Y_{0}'.format(lbl), m(db, y_t),
                         y_t),
            report.equal('Y_{0} D^A_{0}^-1 = Y_{0}'.format(lbl),
                         m(y_t, emb.d_left(tinv)), y_t)]
    return all(ok)


def is_strong_graded_equivalence(ctx, report=None):
    emb = as_embedded(ctx)
    report = _report(report, 'strongly-graded-equivalence')
    group = emb.group
    m = emb.smul
    ok = [is_graded_equivalence(emb, report),
          is_strong_context(emb, report)]
    for t in group.elements:
        tinv = group.inv(t)
        lbl = group.label(t)
        ok.append(report.equal('X_{0} Y_{0}^-1 = D^A_{0}'.format(lbl),
                               m(emb.x[t], emb.y[tinv]), emb.d_left(t)))
        ok.append(report.equal('Y_{0} X_{0}^-1 = D^B_{0}'.format(lbl),
                               m(emb.y[t], emb.x[tinv]), emb.d_right(t)))
    return all(ok)


def _pieces_psg(emb, piece):
    group = emb.group
    for r in group.elements:
        part = piece[r]
        if emb.smul(part, piece[group.inv(r)], part) != part:
            return False
    return True


def _strong_preconditions(emb, name):
    pre = VerificationReport.precondition(name)
    pre.holds('A partially strongly graded', _pieces_psg(emb, emb.a))
    pre.holds('B partially strongly graded', _pieces_psg(emb, emb.b))
    pre.holds('strong context', is_strong_context(emb))


def check_psg_context_consequences(ctx, report=None):
    """Module identities of a strong context between partially strongly
    graded algebras.

    """
    emb = as_embedded(ctx)
    _strong_preconditions(emb, 'psg context consequences')
    report = report or VerificationReport('psg context consequences',
                                          strict=True)
    group = emb.group
    table = group.table
    e = group.identity
    m = emb.smul
    a, b, x, y = emb.a, emb.b, emb.x, emb.y
    x1y1, y1x1 = m(x[e], y[e]), m(y[e], x[e])
    for r in group.elements:
        rinv = group.inv(r)
        for s in group.elements:
            sinv = group.inv(s)
            rs = table[r][s]
            tag = '[{0},{1}]'.format(group.label(r), group.label(s))
            report.equal('X_r D^B_s = D^A_rs X_r ' + tag,
                         m(x[r], emb.d_right(s)), m(emb.d_left(rs), x[r]))
            report.equal('Y_r D^A_s = D^B_rs Y_r ' + tag,
                         m(y[r], emb.d_left(s)), m(emb.d_right(rs), y[r]))
            report.equal('X_r B_s B_s^-1 = X_rs B_s^-1 ' + tag,
                         m(x[r], b[s], b[sinv]), m(x[rs], b[sinv]))
            report.equal('A_r^-1 A_r X_s = A_r^-1 X_rs ' + tag,
                         m(a[rinv], a[r], x[s]), m(a[rinv], x[rs]))
            report.equal('Y_r A_s A_s^-1 = Y_rs A_s^-1 ' + tag,
                         m(y[r], a[s], a[sinv]), m(y[rs], a[sinv]))
            report.equal('B_r^-1 B_r Y_s = B_r^-1 Y_rs ' + tag,
                         m(b[rinv], b[r], y[s]), m(b[rinv], y[rs]))
            xy = m(x[r], y[s])
            report.equal('X_r Y_s = A_r X_1 Y_1 A_s ' + tag, xy,
                         m(a[r], x1y1, a[s]))
            report.contained('X_r Y_s in A_r A_s ' + tag, xy,
                             m(a[r], a[s]))
            yx = m(y[r], x[s])
            report.equal('Y_r X_s = B_r Y_1 X_1 B_s ' + tag, yx,
                         m(b[r], y1x1, b[s]))
            report.contained('Y_r X_s in B_r B_s ' + tag, yx,
                             m(b[r], b[s]))
    return report


def _is_equivalence(report, name, m, left, right, x, y):
    """Ungraded Morita equivalence ``(left, right, x, y)`` by spans."""
    return all([report.equal(name + ': XY = A', m(x, y), left),
                report.equal(name + ': YX = B', m(y, x), right),
                report.equal(name + ': AX = X', m(left, x), x),
                report.equal(name + ': XB = X', m(x, right), x),
                report.equal(name + ': BY = Y', m(right, y), y),
                report.equal(name + ': YA = Y', m(y, left), y)])


def check_strong_props(ctx, report=None):
    """Consequences of strength: the pieces of ``X`` and ``Y`` are generated
    by their degree-1 parts, the pairings factor through degree 1, and for a
    strongly-graded-equivalence the degreewise contexts are Morita
    equivalences.

    """
    emb = as_embedded(ctx)
    _strong_preconditions(emb, 'strong context props')
    report = report or VerificationReport('strong context props',
                                          strict=True)
    group = emb.group
    e = group.identity
    m = emb.smul
    a, b, x, y = emb.a, emb.b, emb.x, emb.y
    sge = is_strong_graded_equivalence(emb)
    for r in group.elements:
        lbl = group.label(r)
        report.equal('A_{0} X_1 = X_{0}'.format(lbl), m(a[r], x[e]), x[r])
        report.equal('X_1 B_{0} = X_{0}'.format(lbl), m(x[e], b[r]), x[r])
        report.equal('B_{0} Y_1 = Y_{0}'.format(lbl), m(b[r], y[e]), y[r])
        report.equal('Y_1 A_{0} = Y_{0}'.format(lbl), m(y[e], a[r]), y[r])
        report.equal('D^A_{0} X_1 = X_1 D^B_{0}'.format(lbl),
                     m(emb.d_left(r), x[e]), m(x[e], emb.d_right(r)))
        report.equal('D^B_{0} Y_1 = Y_1 D^A_{0}'.format(lbl),
                     m(emb.d_right(r), y[e]), m(y[e], emb.d_left(r)))
        z_r = m(x[e], b[r])
        report.equal('Z_{0} = Z_1 B_{0}'.format(lbl),
                     m(m(x[e], b[e]), b[r]), z_r)
        report.equal('Z_{0} D^B_{0}^-1 = Z_{0}'.format(lbl),
                     m(z_r, emb.d_right(group.inv(r))), z_r)
    check_psg_context_consequences(emb, report)
    degree_one = _is_equivalence(VerificationReport('degree 1'), 'degree 1',
                                 m, a[e], b[e], x[e], y[e])
    report.holds('sge iff degree-1 context is an equivalence',
                 sge == degree_one)
    if not sge:
        return report
    for r in group.elements:
        for s in group.elements:
            tag = '[{0},{1}]'.format(group.label(r), group.label(s))
            report.equal('X_r Y_s = A_r A_s ' + tag, m(x[r], y[s]),
                         m(a[r], a[s]))
            report.equal('Y_r X_s = B_r B_s ' + tag, m(y[r], x[s]),
                         m(b[r], b[s]))
    for t in group.elements:
        tinv = group.inv(t)
        lbl = group.label(t)
        _is_equivalence(report, '(D^A_{0}, D^B_{0}^-1, X_{0}, Y_{0}^-1)'
                        .format(lbl), m, emb.d_left(t), emb.d_right(tinv),
                        x[t], y[tinv])
        da, db = emb.d_left(t), emb.d_right(t)
        _is_equivalence(report, '(D^A_{0}, D^B_{0}, D^A X_1, D^B Y_1)'
                        .format(lbl), m, da, db, m(da, x[e]), m(db, y[e]))
    return report


def _check_corner_identities(ambient, e, report, left_cert, right_cert,
                             strong):
    """The identities an idempotent degree-1 multiplier of a linking-type
    algebra satisfies. ``left_cert`` and ``right_cert`` embed the corner
    algebras.

    """
    group = ambient.group
    algebra = ambient.algebra
    mul = _mul(algebra)
    whole = algebra.whole()
    f = e.complement()
    report.holds('e is a multiplier', e.is_valid(algebra))
    report.holds('e idempotent', e.is_idempotent())
    report.holds('e of degree 1', e.degree(ambient) == group.identity)
    report.equal('CeC = C', mul(whole, e.left.image()), whole)
    report.equal('C(1-e)C = C', mul(whole, f.left.image()), whole)
    one = ambient.component(group.identity)
    e_one = e.left.image(one)
    for t in group.elements:
        comp = ambient.component(t)
        report.equal('C_{0} e C_1 = C_{0}'.format(group.label(t)),
                     mul(comp, e_one), comp)
    report.equal('eCe = A', e.right.image(e.left.image()),
                 left_cert.linear.image())
    report.equal('(1-e)C(1-e) = B', f.right.image(f.left.image()),
                 right_cert.linear.image())
    if not strong:
        return report
    for t in group.elements:
        lbl = group.label(t)
        d = ambient.ideal_D(t)
        report.equal('D_{0} e D_{0} = D_{0}'.format(lbl),
                     mul(d, e.left.image(d)), d)
        report.equal('D_{0} (1-e) D_{0} = D_{0}'.format(lbl),
                     mul(d, f.left.image(d)), d)
        report.equal('e D_{0} e = D^A_{0}'.format(lbl),
                     e.right.image(e.left.image(d)),
                     left_cert.linear.image(left_cert.source.ideal_D(t)))
        report.equal('(1-e) D_{0} (1-e) = D^B_{0}'.format(lbl),
                     f.right.image(f.left.image(d)),
                     right_cert.linear.image(right_cert.source.ideal_D(t)))
    report.holds('C partially strongly graded',
                 ambient.is_partially_strongly_graded())
    return report


@dataclass
class LinkingAlgebra(object):

    context: AbstractContext
    graded: GradedAlgebra
    multiplier: Multiplier
    report: VerificationReport

    @property
    def dim(self):
        return self.graded.dim


def _coordinate_projection(field, n, keep):
    images = tuple(field.unit(n, k) if k in keep else field.zeros(n)
                   for k in range(n))
    return LinearMap(field, n, n, images)


def linking_algebra(ctx, report=None):
    """The linking algebra of a graded-equivalence with its idempotent
    ``e = (L, R)``: ``L`` keeps the top row ``(A, X)``, ``R`` keeps the left
    column ``(A, Y)``.

    """
    ctx = validate_context(as_abstract(ctx))
    is_graded_equivalence(ctx, VerificationReport.precondition(
        'linking algebra'))
    report = report or VerificationReport('linking algebra', strict=True)
    linking = ctx.linking
    field = ctx.field
    oa, ox, oy, ob, n = ctx.offsets
    top = set(range(oa, oy))
    column = set(range(oa, ox)) | set(range(oy, ob))
    e = Multiplier(_coordinate_projection(field, n, top),
                   _coordinate_projection(field, n, column))
    left_cert = ctx.inclusion('A').validate()
    right_cert = ctx.inclusion('B').validate()
    emb = ctx.embed()
    strong = _pieces_psg(emb, emb.a) and _pieces_psg(emb, emb.b) and \
        is_strong_context(emb)
    _check_corner_identities(linking, e, report, left_cert, right_cert,
                             strong)
    whole = linking.whole()
    report.equal('L idempotent', linking.product(whole, whole), whole)
    if strong:
        group = ctx.group
        one = group.identity
        for t in group.elements:
            da, db = emb.d_left(t), emb.d_right(t)
            displayed = _sum(field, n, da, emb.smul(da, emb.x[one]),
                             emb.smul(db, emb.y[one]), db)
            report.equal('D^L_{0} = [[D^A, D^A X_1], [D^B Y_1, D^B]]'.format(
                group.label(t)), linking.ideal_D(t), displayed)
    return LinkingAlgebra(ctx, linking, e, report)


def corner_context(ambient, e, report=None):
    """``(eCe, (1-e)C(1-e), eC(1-e), (1-e)Ce)`` for a full idempotent
    multiplier ``e`` of degree 1.

    """
    if not e.is_idempotent():
        raise NotIdempotent('e^2 != e')
    group = ambient.group
    if e.degree(ambient) != group.identity:
        raise NotDegreeOne('multiplier is not homogeneous of degree 1')
    algebra = ambient.algebra
    whole = algebra.whole()
    f = e.complement()
    if algebra.subspace_product(whole, e.left.image()) != whole:
        raise FullnessFailed('CeC')
    if algebra.subspace_product(whole, f.left.image()) != whole:
        raise FullnessFailed('C(1-e)C')

    def piece(first, second):
        return GradedSubspace(tuple(
            second.image(first.image(ambient.component(t)))
            for t in group.elements))
    ctx = EmbeddedContext(ambient, piece(e.left, e.right),
                          piece(f.left, f.right), piece(e.left, f.right),
                          piece(f.left, e.right))
    _validate_embedded(ctx)
    report = report or VerificationReport('corner context', strict=True)
    is_graded_equivalence(ctx, report)
    log.debug('corner context with dims %s', ctx.dims())
    return ctx


def corner_by_idempotent(graded, vec):
    """Left and right multiplication by a degree-1 idempotent element."""
    vec = graded.field.vector(vec)
    if graded.degree_of(vec) != graded.group.identity:
        raise NotDegreeOne('element is not homogeneous of degree 1')
    if graded.multiply(vec, vec) != vec:
        raise NotIdempotent('element is not idempotent')
    return Multiplier.of_element(graded.algebra, vec)


def corner_isomorphism(restricted, piece, cert):
    """The isomorphism from ``restricted`` (an algebra on the concatenated
    basis of ``piece``) onto ``cert.source``, where ``cert`` embeds
    ``cert.source`` onto ``piece``.

    """
    field = cert.source.field
    small = cert.source.dim
    units = [field.unit(small, i) for i in range(small)]
    domain, preimages = solve_on_basis(field, cert.linear.images, units,
                                       small)
    images = []
    for _, row in piece.basis():
        coords = domain.coordinates(row)
        if coords is None:
            raise ClosureViolation('corner', 'piece outside the image')
        images.append(_combine(field, coords, preimages, small))
    linear = LinearMap(field, restricted.dim, small, tuple(images))
    return Homomorphism(restricted, cert.source, linear).validate()


@dataclass
class GradedModule(object):
    """A graded one-sided module over ``algebra`` on a coordinate space.
    ``action[(p, i)]`` is ``x_p a_i`` for a right module and
    ``action[(i, p)]`` is ``a_i x_p`` for a left one.

    """

    algebra: GradedAlgebra
    degree: tuple
    action: dict
    side: str

    @property
    def dim(self):
        return len(self.degree)


class TensorProduct(object):
    """``X (x)_A Y`` as the quotient of ``X (x) Y`` by the balancing
    relations. The quotient basis consists of the pure tensors
    ``x_p (x) y_q`` on non-pivot columns of the relation space.

    """

    def __init__(self, first, second, relations, columns):
        self.first = first
        self.second = second
        self.relations = relations
        self.columns = tuple(columns)
        self.index = {c: k for k, c in enumerate(self.columns)}
        table = first.algebra.group.table
        n2 = second.dim
        self.degree = tuple(
            table[first.degree[c // n2]][second.degree[c % n2]]
            for c in self.columns)

    def __repr__(self):
        return '<TensorProduct dim={0} of {1}x{2}>'.format(
            self.dim, self.first.dim, self.second.dim)

    @property
    def dim(self):
        return len(self.columns)

    @property
    def free_dim(self):
        return self.first.dim * self.second.dim

    def pair(self, k):
        """``(p, q)`` of the pure tensor behind quotient basis vector
        ``k``.

        """
        return divmod(self.columns[k], self.second.dim)

    def project(self, sparse):
        """Quotient coordinates of a sparse vector of ``X (x) Y``."""
        reduced = self.relations.reduce(dict(sparse))
        return {self.index[c]: x for c, x in reduced.items()}

    def pure(self, p, q):
        return self.project({p * self.second.dim + q:
                             self.first.algebra.field.one})

    def tensor(self, left, right):
        """Quotient coordinates of ``left (x) right`` for sparse vectors."""
        field = self.first.algebra.field
        n2 = self.second.dim
        acc = {}
        for p, a in left.items():
            for q, b in right.items():
                _axpy(acc, a * b, {p * n2 + q: field.one}, field.zero)
        return self.project(acc)

    def components(self):
        field = self.first.algebra.field
        group = self.first.algebra.group
        return GradedSubspace(tuple(
            Subspace.coordinate(field, self.dim,
                                [k for k, d in enumerate(self.degree)
                                 if d == t])
            for t in group.elements))


def tensor_over(first, second):
    """``first (x)_A second`` for a right ``A``-module ``first`` and a left
    ``A``-module ``second``.

    """
    if first.side != RIGHT or second.side != LEFT:
        raise PreconditionFailed('right module tensored with left module')
    if first.algebra != second.algebra:
        raise DimensionError(first.algebra.dim, second.algebra.dim)
    algebra = first.algebra
    field = algebra.field
    zero = field.zero
    n1, n2, na = first.dim, second.dim, algebra.dim
    builder = SpanBuilder(field, n1 * n2)
    for p in range(n1):
        for i in range(na):
            xa = first.action.get((p, i), {})
            for q in range(n2):
                ay = second.action.get((i, q), {})
                row = {}
                for p2, c in xa.items():
                    _axpy(row, c, {p2 * n2 + q: field.one}, zero)
                for q2, c in ay.items():
                    _axpy(row, -c, {p * n2 + q2: field.one}, zero)
                if row:
                    builder.add_sparse(row)
    columns = [c for c in range(n1 * n2) if c not in builder.rows]
    log.debug('tensor product %dx%d over dim %d: quotient dim %d', n1, n2,
              na, len(columns))
    return TensorProduct(first, second, builder, columns)


def compose_contexts(first, second, report=None):
    """Compose ``A ~ A'`` with ``A' ~ B``: ``X (x)_A' X'`` and
    ``Y' (x)_A' Y`` with the pairings through the middle algebra.

    """
    first = validate_context(as_abstract(first))
    second = validate_context(as_abstract(second))
    if first.right != second.left:
        raise MiddleAlgebraMismatch('middle algebras differ')
    pre = VerificationReport.precondition('compose contexts')
    pre.holds('first context is a graded equivalence',
              is_graded_equivalence(first))
    pre.holds('second context is a graded equivalence',
              is_graded_equivalence(second))
    field = first.field
    zero = field.zero
    xbar = tensor_over(first.x_right(), second.x_left())
    ybar = tensor_over(second.y_right(), first.y_left())

    def pairs(tensor):
        return [tensor.pair(k) for k in range(tensor.dim)]
    xpairs, ypairs = pairs(xbar), pairs(ybar)
    one = field.one

    ax, xb, by, ya, xy, yx = {}, {}, {}, {}, {}, {}
    for i in range(first.left.dim):
        for k, (p, q) in enumerate(xpairs):
            out = xbar.tensor(first.ax.get((i, p), {}), {q: one})
            if out:
                ax[(i, k)] = out
        for l, (q, p) in enumerate(ypairs):
            out = ybar.tensor({q: one}, first.ya.get((p, i), {}))
            if out:
                ya[(l, i)] = out
    for j in range(second.right.dim):
        for k, (p, q) in enumerate(xpairs):
            out = xbar.tensor({p: one}, second.xb.get((q, j), {}))
            if out:
                xb[(k, j)] = out
        for l, (q, p) in enumerate(ypairs):
            out = ybar.tensor(second.by.get((j, q), {}), {p: one})
            if out:
                by[(j, l)] = out
    for k, (p, q) in enumerate(xpairs):
        for l, (q2, p2) in enumerate(ypairs):
            # tau_A(x_p tau'(x'_q, y'_q2), y_p2)
            middle = second.xy.get((q, q2), {})
            moved = _bilinear(first.xb, {p: one}, middle, zero)
            out = _bilinear(first.xy, moved, {p2: one}, zero)
            if out:
                xy[(k, l)] = out
            # tau_B(y'_q2 tau(y_p2, x_p), x'_q)
            middle = first.yx.get((p2, p), {})
            moved = _bilinear(second.ya, {q2: one}, middle, zero)
            out = _bilinear(second.yx, moved, {q: one}, zero)
            if out:
                yx[(l, k)] = out
    ctx = AbstractContext(first.left, second.right, xbar.degree,
                          ybar.degree, ax, xb, by, ya, xy, yx)
    validate_context(ctx)
    report = report or VerificationReport('compose contexts', strict=True)
    is_graded_equivalence(ctx, report)
    if is_strong_graded_equivalence(first) and \
            is_strong_graded_equivalence(second):
        is_strong_graded_equivalence(ctx, report)
    log.debug('composed context: X %d, Y %d', xbar.dim, ybar.dim)
    return ctx


@dataclass
class ActionMoritaEquivalence(object):
    """A Morita context inside a trivially graded ambient algebra with a
    product partial action ``theta`` on the ambient. ``left`` and ``right``
    embed the algebras acted on by ``alpha`` and ``alpha_prime`` onto the
    ``A`` and ``B`` pieces.

    """

    context: EmbeddedContext
    theta: PartialAction
    alpha: PartialAction
    alpha_prime: PartialAction
    left: LinearMap
    right: LinearMap

    def left_domain(self, t):
        return self.left.image(self.alpha.domains[t])

    def right_domain(self, t):
        return self.right.image(self.alpha_prime.domains[t])


def _restricts_to(theta, part, embed, report, name):
    group = theta.group
    ok = True
    for t in group.elements:
        source = part.domains[group.inv(t)]
        for j, vec in enumerate(source.basis):
            try:
                lhs = theta.apply(t, embed.apply(vec))
            except ClosureViolation:
                ok = False
                break
            if lhs != embed.apply(part.maps[t][j]):
                ok = False
                break
    return report.holds(name, ok)


def validate_action_equivalence(ame, report=None):
    report = report or VerificationReport('action equivalence', strict=True)
    ctx = ame.context
    algebra = ctx.ambient.algebra
    field, n = algebra.field, algebra.dim
    mul = _mul(algebra)
    group = ame.theta.group
    a, b, x, y = ctx.a.total, ctx.b.total, ctx.x.total, ctx.y.total
    report.equal('left embedding onto A', ame.left.image(), a)
    report.equal('right embedding onto B', ame.right.image(), b)
    for name, part, embed in (('A', ame.alpha, ame.left),
                              ('B', ame.alpha_prime, ame.right)):
        try:
            Homomorphism(part.algebra, algebra, embed).validate(graded=False)
            ok = embed.is_injective()
        except AlgebraError:
            ok = False
        report.holds('{0} embedding injective homomorphism'.format(name), ok)
    report.holds('context is a Morita equivalence',
                 is_graded_equivalence(ctx))
    theta = ame.theta
    if theta.flavor != PRODUCT:
        try:
            theta = validate_product_partial_action(theta)
        except AlgebraError as exc:
            report.holds('theta product partial action', False,
                         detail=str(exc))
            return report
    report.holds('theta product partial action', True)
    for t in group.elements:
        lbl = group.label(t)
        d, dp = ame.left_domain(t), ame.right_domain(t)
        x_t, y_t = mul(d, x), mul(dp, y)
        report.equal("Y D_{0} X = D'_{0}".format(lbl), mul(y, d, x), dp)
        report.equal("X D'_{0} = D_{0} X".format(lbl), mul(x, dp), x_t)
        report.equal("Y D_{0} = D'_{0} Y".format(lbl), mul(y, d), y_t)
        report.equal('theta domain {0} in block form'.format(lbl),
                     theta.domains[t], _sum(field, n, d, x_t, y_t, dp))
        _is_equivalence(report, "(D_{0}, D'_{0}, X_{0}, Y_{0})".format(lbl),
                        mul, d, dp, x_t, y_t)
    _restricts_to(theta, ame.alpha, ame.left, report, 'theta|A = alpha')
    _restricts_to(theta, ame.alpha_prime, ame.right, report,
                  "theta|B = alpha'")
    for name, piece in (('A', a), ('B', b), ('X', x), ('Y', y)):
        ok = True
        for t in group.elements:
            source = subspace_intersect(piece,
                                        theta.domains[group.inv(t)])
            target = subspace_intersect(piece, theta.domains[t])
            if theta.image(t, source) != target:
                ok = False
        report.holds('{0} theta-invariant'.format(name), ok)
    report.holds("alpha global iff alpha' global",
                 is_global(ame.alpha) == is_global(ame.alpha_prime))
    return report


def _shift(field, n, vec, offset):
    out = [field.zero] * n
    out[offset:offset + len(vec)] = vec
    return tuple(out)


def trivial_action_equivalence(alpha):
    """``alpha`` equivalent to itself through the trivial context, with
    ``theta`` acting entrywise on the 2x2 matrices over its algebra.

    """
    group = alpha.group
    field = alpha.field
    ctx = trivial_context(trivially_graded(alpha.algebra, group))
    linking = ctx.linking
    n, d = linking.dim, alpha.algebra.dim
    starts = ctx.offsets[:len(BLOCKS)]
    domains = tuple(
        span(field, [_shift(field, n, v, start) for start in starts
                     for v in alpha.domains[t].basis], n)
        for t in group.elements)
    maps = []
    for t in group.elements:
        images = []
        # blocks occupy disjoint coordinates, so the echelon basis of the
        # domain runs block by block
        for start in starts:
            for vec in alpha.maps[t]:
                images.append(_shift(field, n, vec, start))
        maps.append(tuple(images))
    theta = validate_product_partial_action(
        PartialAction(group, linking.algebra, domains, tuple(maps)))

    def inclusion(start):
        return LinearMap(field, d, n, tuple(
            field.unit(n, start + i) for i in range(d)))
    ame = ActionMoritaEquivalence(ctx.embed(), theta, alpha, alpha,
                                  inclusion(starts[0]),
                                  inclusion(starts[-1]))
    validate_action_equivalence(ame)
    return ame


@dataclass
class SkewEquivalence(object):
    """A strongly-graded-equivalence between two skew group algebras, cut
    out of the skew algebra of the linking action by ``multiplier``.

    """

    skew: GradedAlgebra
    multiplier: Multiplier
    context: EmbeddedContext
    left_cert: Homomorphism
    right_cert: Homomorphism
    report: VerificationReport

    def abstract(self):
        """The context between the two skew algebras themselves."""
        ctx = self.context.to_abstract()
        left = corner_isomorphism(ctx.left, self.context.a, self.left_cert)
        right = corner_isomorphism(ctx.right, self.context.b,
                                   self.right_cert)
        return transport(ctx, left, right)


def _block_projections(ctx, keep_first, keep_second):
    """Projections of the ambient onto the sums of pieces named in
    ``keep_first`` and ``keep_second``, along the remaining pieces.

    """
    field, n = ctx.field, ctx.ambient.dim
    rows, names = [], []
    for name, piece in ctx.pieces().items():
        for row in piece.total.basis:
            rows.append(row)
            names.append(name)
    if len(rows) != n:
        raise PreconditionFailed('ambient is A + X + Y + B')
    units = [field.unit(n, k) for k in range(n)]
    try:
        domain, coords = solve_on_basis(field, rows, units, n)
    except AlgebraError as exc:
        raise PreconditionFailed('ambient is A + X + Y + B') from exc

    def projection(keep):
        images = []
        for vec in coords:
            images.append(_combine(
                field, [c if names[k] in keep else field.zero
                        for k, c in enumerate(vec)], rows, n))
        return LinearMap(field, n, n, tuple(images))
    return projection(keep_first), projection(keep_second)


def skew_embedding(small, big, embed):
    """``a delta_t -> embed(a) delta_t`` between skew group algebras."""
    images = []
    for t in small.group.elements:
        for vec in small.action.domains[t].basis:
            images.append(big.embed(t, embed.apply(vec)))
    linear = LinearMap(small.field, small.dim, big.dim, tuple(images))
    return Homomorphism(small, big, linear).validate()


def action_equivalence_to_sge(ame, report=None):
    """Skew group algebras of Morita equivalent actions, cut out of the skew
    algebra of ``theta`` by the multiplier keeping the ``(A, X)`` row and
    the ``(A, Y)`` column.

    """
    report = report or VerificationReport('action equivalence to sge',
                                          strict=True)
    validate_action_equivalence(
        ame, VerificationReport.precondition('action equivalence to sge'))
    ctx = ame.context
    theta = ame.theta
    group = theta.group
    skew = skew_group_algebra(theta)
    top, column = _block_projections(ctx, ('A', 'X'), ('A', 'Y'))
    lefts, rights = [], []
    for t in group.elements:
        for vec in theta.domains[t].basis:
            lefts.append(skew.embed(t, top.apply(vec)))
            rights.append(skew.embed(t, column.apply(vec)))
    field, n = skew.field, skew.dim
    e = Multiplier(LinearMap(field, n, n, tuple(lefts)),
                   LinearMap(field, n, n, tuple(rights)))
    left_cert = skew_embedding(skew_group_algebra(ame.alpha), skew,
                                ame.left)
    right_cert = skew_embedding(skew_group_algebra(ame.alpha_prime), skew,
                                 ame.right)
    _check_corner_identities(skew, e, report, left_cert, right_cert, True)
    context = corner_context(skew, e)
    is_strong_graded_equivalence(context, report)
    log.debug('skew equivalence inside skew algebra of dim %d', n)
    return SkewEquivalence(skew, e, context, left_cert, right_cert, report)


def _as_global(part):
    maps = tuple(part.linear(t) for t in part.group.elements)
    return GlobalAction(part.group, part.algebra, maps)


def restrict_action_equivalence(ame, ideal, report=None):
    """Restrict an equivalence of global actions to the idempotent ideal
    ``ideal`` (in coordinates of ``alpha``'s algebra) and its counterpart
    ``Y ideal X``.

    """
    report = report or VerificationReport('restricted action equivalence',
                                          strict=True)
    pre = VerificationReport.precondition('restrict action equivalence')
    pre.holds('actions are global', is_global(ame.alpha) and
              is_global(ame.alpha_prime) and is_global(ame.theta))
    ctx = ame.context
    group = ame.theta.group
    algebra = ctx.ambient.algebra
    field, n = algebra.field, algebra.dim
    mul = _mul(algebra)
    gamma = _as_global(ame.theta)
    alpha = restrict_global(_as_global(ame.alpha), ideal)
    x, y = ctx.x.total, ctx.y.total
    ideal_amb = ame.left.image(ideal)
    counterpart = mul(y, ideal_amb, x)
    pre.contained("YAX in B", counterpart, ctx.b.total)
    ideal_prime = _preimage(ame.right, counterpart)
    alpha_prime = restrict_global(_as_global(ame.alpha_prime), ideal_prime)
    moved = [gamma.image(t, ideal_amb) for t in group.elements]
    moved_prime = [gamma.image(t, counterpart) for t in group.elements]
    for s in group.elements:
        for t in group.elements:
            tag = '[{0},{1}]'.format(group.label(s), group.label(t))
            report.equal("beta'_s(A') beta'_t(A') = Y beta_s(A) beta_t(A) X "
                         + tag, mul(moved_prime[s], moved_prime[t]),
                         mul(y, moved[s], moved[t], x))
    x1, y1 = mul(ideal_amb, x), mul(y, ideal_amb)
    c_n = _sum(field, n, ideal_amb, x1, y1, counterpart)
    report.holds('C_N ideal', algebra.is_ideal(c_n))
    report.equal('C_N idempotent', mul(c_n, c_n), c_n)
    moved_c = [gamma.image(t, c_n) for t in group.elements]
    for s in group.elements:
        for t in group.elements:
            report.equal('gamma_s(C_N) gamma_t(C_N) commute [{0},{1}]'.format(
                group.label(s), group.label(t)),
                mul(moved_c[s], moved_c[t]), mul(moved_c[t], moved_c[s]))
    theta = restrict_global(gamma, c_n)
    ambient = trivially_graded(theta.algebra, group)

    def local(sub):
        return _flat(ambient, span(field, [c_n.coordinates(v)
                                           for v in sub.basis], c_n.rank))

    def embedding(outer, inner):
        images = tuple(c_n.coordinates(outer.apply(inner.combine(
            field.unit(inner.rank, k)))) for k in range(inner.rank))
        return LinearMap(field, inner.rank, c_n.rank, images)
    context = EmbeddedContext(ambient, local(ideal_amb), local(counterpart),
                              local(x1), local(y1))
    result = ActionMoritaEquivalence(context, theta, alpha, alpha_prime,
                                     embedding(ame.left, ideal),
                                     embedding(ame.right, ideal_prime))
    validate_action_equivalence(result, report)
    log.debug('restricted action equivalence: A %d, A\' %d, C_N %d',
              ideal.rank, ideal_prime.rank, c_n.rank)
    return result


@dataclass
class SmashContext(object):
    """``M#G`` inside ``C#G`` for the linking algebra ``C`` of ``M``."""

    context: EmbeddedContext
    linking: GradedAlgebra
    algebra: GradedAlgebra
    beta: GlobalAction
    left: GradedAlgebra
    right: GradedAlgebra
    equivalence: ActionMoritaEquivalence = None
    report: VerificationReport = None


def smash_context(ctx, report=None):
    ctx = validate_context(as_abstract(ctx))
    report = report or VerificationReport('smash context', strict=True)
    field = ctx.field
    algebra = smash(ctx.linking)
    beta = dual_action(algebra)
    blocks = {name: [] for name in BLOCKS}
    for k, (i, r, s) in enumerate(algebra.labels):
        blocks[ctx.block_of(i)].append(k)
    pieces = {name: _flat(algebra, Subspace.coordinate(field, algebra.dim,
                                                       idx))
              for name, idx in blocks.items()}
    report.holds('C#G = A#G + X#G + Y#G + B#G',
                 sum(len(idx) for idx in blocks.values()) == algebra.dim,
                 tuple(len(blocks[name]) for name in BLOCKS))
    start = dict(zip(BLOCKS, ctx.offsets))
    smashes, inclusions = {}, {}
    for name, base in (('A', ctx.left), ('B', ctx.right)):
        small = smash(base)
        images = tuple(field.unit(algebra.dim, algebra.index[
            (i + start[name], r, s)]) for i, r, s in small.labels)
        incl = LinearMap(field, small.dim, algebra.dim, images)
        report.equal('{0}#G block = image of {0}#G'.format(name),
                     incl.image(), pieces[name].total)
        try:
            ActionMorphism(dual_action(small).as_partial(),
                           beta.as_partial(), incl).validate()
            ok = True
        except AlgebraError:
            ok = False
        report.holds('beta^C restricts to beta^{0}'.format(name), ok)
        smashes[name], inclusions[name] = small, incl
    for name in ('X', 'Y'):
        report.holds('{0}#G beta^C-invariant'.format(name),
                     beta.is_invariant(pieces[name].total))
    emb = EmbeddedContext(algebra, pieces['A'], pieces['B'], pieces['X'],
                          pieces['Y'])
    _validate_embedded(emb)
    equivalence = None
    if is_graded_equivalence(ctx):
        is_graded_equivalence(emb, report)
        equivalence = ActionMoritaEquivalence(
            emb, beta.as_partial(), dual_action(smashes['A']).as_partial(),
            dual_action(smashes['B']).as_partial(), inclusions['A'],
            inclusions['B'])
        validate_action_equivalence(equivalence, report)
    log.debug('smash context in C#G of dim %d', algebra.dim)
    return SmashContext(emb, ctx.linking, algebra, beta, smashes['A'],
                        smashes['B'], equivalence, report)


def sge_to_canonical_action_equivalence(ctx, report=None):
    """Canonical partial actions of strongly-graded-equivalent partially
    strongly graded algebras are Morita equivalent.

    """
    ctx = validate_context(as_abstract(ctx))
    pre = VerificationReport.precondition('canonical action equivalence')
    pre.holds('A partially strongly graded',
              ctx.left.is_partially_strongly_graded())
    pre.holds('B partially strongly graded',
              ctx.right.is_partially_strongly_graded())
    pre.holds('strongly-graded-equivalence',
              is_strong_graded_equivalence(ctx))
    report = report or VerificationReport('canonical action equivalence',
                                          strict=True)
    smashed = smash_context(ctx, report)
    ame = smashed.equivalence
    part_a = partial_smash(ctx.left, smashed.left)
    part_b = partial_smash(ctx.right, smashed.right)
    emb = smashed.context
    mul = _mul(smashed.algebra.algebra)
    report.equal('(Y#G) I^A (X#G) = I^B',
                 mul(emb.y.total, ame.left.image(part_a.ideal),
                     emb.x.total),
                 ame.right.image(part_b.ideal))
    return restrict_action_equivalence(ame, part_a.ideal, report)


def weak_equivalence(alpha, alpha_prime, ctx, report=None):
    """Whether ``ctx`` is a graded-equivalence between the skew group
    algebras of ``alpha`` and ``alpha_prime``.

    """
    ctx = validate_context(as_abstract(ctx))
    if ctx.left != skew_group_algebra(alpha) or \
            ctx.right != skew_group_algebra(alpha_prime):
        raise MiddleAlgebraMismatch('context is not between the skew group '
                                    'algebras')
    return is_graded_equivalence(ctx, report)


def action_equivalence_implies_weak(ame, report=None):
    witness = action_equivalence_to_sge(ame)
    return weak_equivalence(ame.alpha, ame.alpha_prime, witness.abstract(),
                            report)


# vim:et:fdm=marker:sts=4:sw=4:ts=4
