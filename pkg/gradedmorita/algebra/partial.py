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

"""Global, partial and product partial actions of a finite group on an
algebra, restriction of global actions to ideals and skew group algebras.

A partial action stores each domain ``D_t`` as a canonical
:class:`~gradedmorita.algebra.linear.Subspace` of the algebra and each
``alpha_t`` by the images of the echelon basis of ``D_{t^-1}``.

"""

import logging
from dataclasses import dataclass, replace
from functools import cached_property

from .errors import (AlgebraError, AssociativityFailed, ClosureViolation,
                     CommutationHypothesisFailed, CompositionFailed,
                     DomainNotIdempotent, DomainsDontCommute,
                     IdentityAxiomFailed, IntersectionAxiomFailed,
                     NonAssociative, NotEquivariant, NotIdeal,
                     NotIdempotentIdeal, NotIsomorphism, NotMultiplicative,
                     PreconditionFailed, ProductAxiomFailed,
                     VerificationFailed)
from .graded import (Algebra, GradedAlgebra, GradedSubspace, Homomorphism)
from .linear import (LinearMap, SpanBuilder, Subspace, nullspace, span,
                     solve_on_basis, subspace_intersect, vsub)

__all__ = ['GlobalAction', 'PartialAction', 'Globalization',
           'ActionMorphism', 'SkewGroupAlgebra', 'validate_global_action',
           'make_partial_action', 'validate_partial_action',
           'validate_product_partial_action', 'restrict_global',
           'is_minimal_globalization', 'is_global', 'skew_group_algebra',
           'check_pa_prp_equivalence', 'action_morphism_skew',
           'permutation_partial_action']

log = logging.getLogger(__name__)

PARTIAL = 'partial'
PRODUCT = 'product'


@dataclass(frozen=True)
class GlobalAction(object):
    """An action of ``group`` on ``algebra`` by automorphisms ``maps[t]``."""

    group: object
    algebra: Algebra
    maps: tuple

    def apply(self, t, vec):
        return self.maps[t].apply(vec)

    def image(self, t, subspace):
        return self.maps[t].image(subspace)

    def orbit_span(self, subspace):
        builder = SpanBuilder(self.algebra.field, self.algebra.dim)
        for t in self.group.elements:
            builder.extend(self.image(t, subspace).basis)
        return builder.subspace()

    def is_invariant(self, subspace):
        return all(self.image(t, subspace).is_subspace_of(subspace)
                   for t in self.group.elements)

    def fixed_points(self, subspace=None):
        """Vectors of ``subspace`` (default: everything) fixed by every
        ``beta_t``.

        """
        field, n = self.algebra.field, self.algebra.dim
        if subspace is None:
            subspace = Subspace.full(field, n)
        rows = []
        # unknowns are coordinates on the basis of subspace
        for t in self.group.elements:
            diffs = [vsub(self.apply(t, u), u) for u in subspace.basis]
            for k in range(n):
                row = {i: d[k] for i, d in enumerate(diffs) if d[k]}
                if row:
                    rows.append(row)
        solutions = nullspace(field, rows, subspace.rank)
        return span(field, [subspace.combine(c) for c in solutions.basis], n)

    def as_partial(self):
        field, n = self.algebra.field, self.algebra.dim
        whole = Subspace.full(field, n)
        maps = tuple(m.images for m in self.maps)
        return PartialAction(self.group, self.algebra,
                             (whole,) * self.group.order, maps, PRODUCT,
                             Globalization(self, whole))


def validate_global_action(group, algebra, maps):
    maps = tuple(maps)
    field, n = algebra.field, algebra.dim
    if len(maps) != group.order:
        raise NotIsomorphism(len(maps))
    for t, beta in enumerate(maps):
        if beta.source_dim != n or beta.target_dim != n or \
                not beta.is_bijective():
            raise NotIsomorphism(t)
        for i in range(n):
            for j in range(n):
                prod = algebra.multiply(field.unit(n, i), field.unit(n, j))
                if beta.apply(prod) != algebra.multiply(beta.images[i],
                                                        beta.images[j]):
                    raise NotMultiplicative(t, (i, j))
    if maps[group.identity] != LinearMap.identity(field, n):
        raise IdentityAxiomFailed('beta_1 is not the identity')
    for s in group.elements:
        for t in group.elements:
            if maps[s].compose(maps[t]) != maps[group.table[s][t]]:
                raise CompositionFailed(s, t)
    return GlobalAction(group, algebra, maps)


@dataclass(frozen=True)
class Globalization(object):

    action: GlobalAction
    ideal: Subspace


@dataclass(frozen=True)
class PartialAction(object):
    """Domains ``D_t`` and isomorphisms ``alpha_t: D_{t^-1} -> D_t``.
    ``maps[t][j]`` is ``alpha_t`` of the ``j``-th basis vector of
    ``D_{t^-1}``, in algebra coordinates. ``flavor`` records which
    validator accepted the value.

    """

    group: object
    algebra: Algebra
    domains: tuple
    maps: tuple
    flavor: str = None
    globalization: Globalization = None

    @property
    def field(self):
        return self.algebra.field

    def linear(self, t):
        """``alpha_t`` as a map from coordinates on ``D_{t^-1}``."""
        return LinearMap(self.field, len(self.maps[t]), self.algebra.dim,
                         self.maps[t])

    def apply(self, t, vec):
        coords = self.domains[self.group.inv(t)].coordinates(vec)
        if coords is None:
            raise ClosureViolation('D_{0}^-1'.format(t),
                                   'argument outside the domain')
        return self.linear(t).apply(coords)

    def image(self, t, subspace):
        builder = SpanBuilder(self.field, self.algebra.dim)
        for vec in subspace.basis:
            builder.add(self.apply(t, vec))
        return builder.subspace()

    @cached_property
    def whole(self):
        return Subspace.full(self.field, self.algebra.dim)

    def product(self, left, right):
        return self.algebra.subspace_product(left, right)


def make_partial_action(group, algebra, domains, maps):
    """Assemble a :class:`PartialAction` from spanning vectors of every
    ``D_t`` and, for every ``t``, the images under ``alpha_t`` of the
    vectors listed for ``D_{t^-1}``. Nothing beyond bijectivity is checked;
    run one of the validators on the result.

    """
    field, n = algebra.field, algebra.dim
    if len(domains) != group.order or len(maps) != group.order:
        raise NotIsomorphism(min(len(domains), len(maps)))
    canon = tuple(span(field, [field.vector(v) for v in vecs], n)
                  for vecs in domains)
    out = []
    for t in group.elements:
        tinv = group.inv(t)
        sources = [field.vector(v) for v in domains[tinv]]
        images = [field.vector(v) for v in maps[t]]
        if len(sources) != len(images):
            raise NotIsomorphism(t)
        if not sources:
            if canon[t].rank:
                raise NotIsomorphism(t)
            out.append(())
            continue
        try:
            domain, imgs = solve_on_basis(field, sources, images, n)
        except AlgebraError as exc:
            raise NotIsomorphism(t) from exc
        if domain != canon[tinv] or span(field, imgs, n) != canon[t]:
            raise NotIsomorphism(t)
        out.append(imgs)
    return PartialAction(group, algebra, canon, tuple(out))


def _check_common(alpha):
    group, algebra = alpha.group, alpha.algebra
    e = group.identity
    if alpha.domains[e] != alpha.whole:
        raise IdentityAxiomFailed('D_1 is not the whole algebra')
    if alpha.maps[e] != alpha.domains[e].basis:
        raise IdentityAxiomFailed('alpha_1 moves a basis vector')
    for t in group.elements:
        dom, cod = alpha.domains[group.inv(t)], alpha.domains[t]
        if not algebra.is_ideal(cod):
            raise NotIdeal(t)
        if len(alpha.maps[t]) != dom.rank or dom.rank != cod.rank or \
                alpha.image(t, dom) != cod:
            raise NotIsomorphism(t)
        for a, u in enumerate(dom.basis):
            for b, v in enumerate(dom.basis):
                lhs = alpha.apply(t, algebra.multiply(u, v))
                rhs = algebra.multiply(alpha.maps[t][a], alpha.maps[t][b])
                if lhs != rhs:
                    raise NotMultiplicative(t, (a, b))


def _check_composition(alpha, s, t, subspace):
    group = alpha.group
    st = group.table[s][t]
    for vec in subspace.basis:
        mid = alpha.apply(t, vec)
        if not alpha.domains[group.inv(s)].contains(mid):
            raise CompositionFailed(s, t)
        if alpha.apply(s, mid) != alpha.apply(st, vec):
            raise CompositionFailed(s, t)


def validate_partial_action(alpha):
    """Intersection form of the axioms."""
    _check_common(alpha)
    group, dom = alpha.group, alpha.domains
    for s in group.elements:
        sinv = group.inv(s)
        for t in group.elements:
            st = group.table[s][t]
            lhs = alpha.image(s, subspace_intersect(dom[sinv], dom[t]))
            if lhs != subspace_intersect(dom[s], dom[st]):
                raise IntersectionAxiomFailed(s, t)
            common = subspace_intersect(dom[group.inv(t)],
                                        dom[group.inv(st)])
            _check_composition(alpha, s, t, common)
    return replace(alpha, flavor=PARTIAL)


def validate_product_partial_action(alpha):
    """Product form of the axioms: idempotent commuting domains."""
    _check_common(alpha)
    group, dom = alpha.group, alpha.domains
    for t in group.elements:
        if alpha.product(dom[t], dom[t]) != dom[t]:
            raise DomainNotIdempotent(t)
    for s in group.elements:
        for t in group.elements:
            if alpha.product(dom[s], dom[t]) != alpha.product(dom[t], dom[s]):
                raise DomainsDontCommute(s, t)
    for s in group.elements:
        sinv = group.inv(s)
        for t in group.elements:
            st = group.table[s][t]
            lhs = alpha.image(s, alpha.product(dom[sinv], dom[t]))
            if lhs != alpha.product(dom[s], dom[st]):
                raise ProductAxiomFailed(s, t)
            common = alpha.product(dom[group.inv(t)], dom[group.inv(st)])
            _check_composition(alpha, s, t, common)
    return replace(alpha, flavor=PRODUCT)


def is_global(alpha):
    return all(d == alpha.whole for d in alpha.domains)


def restrict_global(beta, ideal):
    """Restriction of ``beta`` to the idempotent ideal ``ideal``: domains
    ``D_t = A beta_t(A)`` in the coordinates of the echelon basis of
    ``ideal``. The result is validated as a product partial action.

    """
    algebra, group = beta.algebra, beta.group
    field = algebra.field
    if not algebra.is_ideal(ideal):
        raise NotIdempotentIdeal('not a two-sided ideal')
    if algebra.subspace_product(ideal, ideal) != ideal:
        raise NotIdempotentIdeal('A^2 != A')
    ambient_domains = []
    for t in group.elements:
        moved = beta.image(t, ideal)
        left = algebra.subspace_product(ideal, moved)
        if left != algebra.subspace_product(moved, ideal):
            raise CommutationHypothesisFailed(t)
        ambient_domains.append(left)
    sub, _ = algebra.restrict(ideal)
    domains = tuple(span(field, [ideal.coordinates(v) for v in d.basis],
                         ideal.rank) for d in ambient_domains)
    maps = []
    for t in group.elements:
        source = domains[group.inv(t)]
        maps.append(tuple(
            ideal.coordinates(beta.apply(t, ideal.combine(v)))
            for v in source.basis))
    alpha = PartialAction(group, sub, domains, tuple(maps),
                          globalization=Globalization(beta, ideal))
    log.debug('restricted global action to ideal of dim %d: domains %s',
              ideal.rank, [d.rank for d in domains])
    return validate_product_partial_action(alpha)


def is_minimal_globalization(beta, ideal):
    restrict_global(beta, ideal)
    return beta.orbit_span(ideal) == Subspace.full(beta.algebra.field,
                                                   beta.algebra.dim)


class SkewGroupAlgebra(GradedAlgebra):
    """``A x_alpha G`` with basis ``(t, j)``: the ``j``-th basis vector of
    ``D_t`` times ``delta_t``.

    """

    def __init__(self, action, algebra, degree, labels, offsets):
        super(SkewGroupAlgebra, self).__init__(algebra, action.group, degree,
                                               labels)
        self.action = action
        self.offsets = tuple(offsets)

    def embed(self, t, vec):
        """``a delta_t`` for ``a`` in ``D_t``."""
        coords = self.action.domains[t].coordinates(vec)
        if coords is None:
            raise ClosureViolation('D_{0}'.format(t))
        out = [self.field.zero] * self.dim
        for k, x in enumerate(coords):
            out[self.offsets[t] + k] = x
        return tuple(out)

    def split(self, vec):
        """The ``D_t`` coefficients of ``vec``, one per group element."""
        out = []
        for t, dom in enumerate(self.action.domains):
            start = self.offsets[t]
            out.append(dom.combine(vec[start:start + dom.rank]))
        return out

    def delta(self, pieces):
        """``sum_t U_t delta_t`` for subspaces ``U_t`` of ``D_t``."""
        comps = []
        for t in self.group.elements:
            vectors = [self.embed(t, v) for v in pieces[t].basis]
            comps.append(span(self.field, vectors, self.dim))
        return GradedSubspace(tuple(comps))


def skew_group_algebra(alpha):
    group, algebra = alpha.group, alpha.algebra
    field = algebra.field
    table = group.table
    offsets, degree, labels = [], [], []
    for t in group.elements:
        offsets.append(len(degree))
        for j in range(alpha.domains[t].rank):
            degree.append(t)
            labels.append((t, j))
    products = {}
    for r in group.elements:
        rinv = group.inv(r)
        for j, a in enumerate(alpha.domains[r].basis):
            pre = alpha.apply(rinv, a)
            for s in group.elements:
                rs = table[r][s]
                target = alpha.domains[rs]
                for k, b in enumerate(alpha.domains[s].basis):
                    prod = algebra.multiply(pre, b)
                    if not any(prod):
                        continue
                    coords = target.coordinates(alpha.apply(r, prod))
                    if coords is None:
                        raise AssociativityFailed(
                            'product of ({0},{1}) and ({2},{3}) escapes '
                            'D_{4}'.format(r, j, s, k, rs))
                    sparse = {offsets[rs] + m: x
                              for m, x in enumerate(coords) if x}
                    if sparse:
                        products[(offsets[r] + j, offsets[s] + k)] = sparse
    skew = Algebra(field, len(degree), products)
    try:
        skew.check_associative()
    except NonAssociative as exc:
        raise AssociativityFailed(str(exc)) from exc
    log.debug('skew group algebra of dim %d (%s)', len(degree),
              '+'.join(str(d.rank) for d in alpha.domains))
    return SkewGroupAlgebra(alpha, skew, degree, labels, offsets)


def check_pa_prp_equivalence(alpha):
    """Skew algebra partially strongly graded iff the action is a product
    partial action, for actions with idempotent domains.

    """
    alpha = validate_partial_action(alpha)
    for t, dom in enumerate(alpha.domains):
        if alpha.product(dom, dom) != dom:
            raise PreconditionFailed('D_{0} idempotent'.format(t))
    psg = skew_group_algebra(alpha).is_partially_strongly_graded()
    try:
        validate_product_partial_action(alpha)
        product = True
    except AlgebraError:
        product = False
    if psg != product:
        raise VerificationFailed('psg iff product partial action',
                                 'psg={0} product={1}'.format(psg, product))
    return psg


@dataclass(frozen=True)
class ActionMorphism(object):
    """An algebra map ``phi: A -> A'`` claimed to intertwine two partial
    actions of the same group.

    """

    source: PartialAction
    target: PartialAction
    linear: LinearMap

    def validate(self):
        source, target = self.source, self.target
        Homomorphism(source.algebra, target.algebra,
                     self.linear).validate(graded=False)
        group = source.group
        for t in group.elements:
            if not self.linear.image(source.domains[t]).is_subspace_of(
                    target.domains[t]):
                raise NotEquivariant(t)
            for j, vec in enumerate(source.domains[group.inv(t)].basis):
                lhs = self.linear.apply(source.maps[t][j])
                rhs = target.apply(t, self.linear.apply(vec))
                if lhs != rhs:
                    raise NotEquivariant(t)
        return self

    def compose(self, other):
        """``self`` after ``other``."""
        return ActionMorphism(other.source, self.target,
                              self.linear.compose(other.linear))


def action_morphism_skew(morphism, source_skew=None, target_skew=None):
    """``a delta_t -> phi(a) delta_t``, validated multiplicative."""
    morphism.validate()
    source = source_skew or skew_group_algebra(morphism.source)
    target = target_skew or skew_group_algebra(morphism.target)
    images = []
    for t in source.group.elements:
        for vec in morphism.source.domains[t].basis:
            images.append(target.embed(t, morphism.linear.apply(vec)))
    linear = LinearMap(source.field, source.dim, target.dim, tuple(images))
    return Homomorphism(source, target, linear).validate()


def _cosets(group, subgroup):
    subgroup = tuple(sorted(set(subgroup)))
    for h in subgroup:
        for k in subgroup:
            if group.table[h][k] not in subgroup:
                raise PreconditionFailed('subgroup closed', str(subgroup))
    seen, cosets = set(), []
    for t in group.elements:
        coset = frozenset(group.table[t][h] for h in subgroup)
        if coset not in seen:
            seen.add(coset)
            cosets.append(coset)
    return cosets


def permutation_partial_action(group, component, orbits, ideals):
    """A global action permuting copies of ``component`` along the coset
    spaces ``G/H`` for each subgroup ``H`` in ``orbits``, and the ideal that
    takes ``ideals[p]`` (a subspace of ``component``) in the copy at point
    ``p``. Points are numbered orbit by orbit, cosets in order of their
    first element.

    """
    field, d = component.field, component.dim
    points = []
    for subgroup in orbits:
        base = len(points)
        cosets = _cosets(group, subgroup)
        points.extend((base, cosets, c) for c in range(len(cosets)))
    count = len(points)
    if len(ideals) != count:
        raise PreconditionFailed('one ideal per point',
                                 '{0} != {1}'.format(len(ideals), count))
    n = count * d
    products = {}
    for p in range(count):
        for (i, j), pij in component.products.items():
            products[(p * d + i, p * d + j)] = {p * d + k: c
                                                for k, c in pij.items()}
    algebra = Algebra(field, n, products)

    def move(t, p):
        base, cosets, c = points[p]
        target = frozenset(group.table[t][x] for x in cosets[c])
        return base + cosets.index(target)

    maps = []
    for t in group.elements:
        images = []
        for p in range(count):
            q = move(t, p)
            for i in range(d):
                images.append(field.unit(n, q * d + i))
        maps.append(LinearMap(field, n, n, tuple(images)))
    beta = validate_global_action(group, algebra, maps)
    vectors = []
    for p, sub in enumerate(ideals):
        for row in sub.basis:
            vec = [field.zero] * n
            vec[p * d:(p + 1) * d] = row
            vectors.append(tuple(vec))
    return beta, span(field, vectors, n)


# vim:et:fdm=marker:sts=4:sw=4:ts=4
