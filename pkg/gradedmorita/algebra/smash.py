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

"""G x G matrices over a graded algebra: the full matrix algebra, the smash
product, the dual action, the partial smash product and the duality
isomorphism.

Basis vectors are labeled ``(i, r, s)``: the ``i``-th basis vector of ``B``
in matrix position ``(r, s)``. In the full matrix algebra the label has
degree ``r * deg(b_i) * s^-1``, so every label of the smash product has
degree 1.

"""

import logging
from dataclasses import dataclass

from .errors import AlgebraError, PreconditionFailed, VerificationFailed
from .graded import Algebra, GradedAlgebra, Homomorphism
from .linear import LinearMap, SpanBuilder, Subspace, span, subspace_sum
from .partial import (ActionMorphism, GlobalAction, action_morphism_skew,
                      restrict_global, skew_group_algebra,
                      validate_global_action)
from .report import VerificationReport

__all__ = ['SmashAlgebra', 'PartialSmash', 'CanonicalAction', 'Duality',
           'fmat', 'smash', 'dual_action', 'eta', 'smash_functor',
           'fmat_functor', 'smash_inclusion', 'partial_smash',
           'canonical_partial_action', 'duality_iso',
           'partial_duality_image', 'sgchar', 'fixed_subalgebra',
           'naturality']

log = logging.getLogger(__name__)

FMAT = 'full_fmat'
SMASH = 'smash'
PARTIAL_SMASH = 'partial_smash'


class SmashAlgebra(GradedAlgebra):
    """A matrix algebra over ``base`` on the basis ``labels``."""

    def __init__(self, base, kind, algebra, degree, labels):
        super(SmashAlgebra, self).__init__(algebra, base.group, degree,
                                           labels)
        self.base = base
        self.kind = kind
        self.index = {label: k for k, label in enumerate(labels)}

    def __repr__(self):
        return '<SmashAlgebra {0} dim={1}>'.format(self.kind, self.dim)

    def place(self, vec, r, s):
        """``b e_{r,s}`` for ``b`` given in coordinates of the base."""
        out = [self.field.zero] * self.dim
        for i, x in enumerate(vec):
            if x:
                out[self.index[(i, r, s)]] = x
        return tuple(out)

    def place_subspace(self, subspace, r, s):
        return span(self.field, [self.place(v, r, s) for v in subspace.basis],
                    self.dim)

    def entries(self, vec):
        """``{(r, s): base vector}`` for the nonzero positions of ``vec``."""
        out = {}
        n = self.base.dim
        for k, x in enumerate(vec):
            if x:
                i, r, s = self.labels[k]
                out.setdefault((r, s), [self.field.zero] * n)[i] = x
        return {pos: tuple(v) for pos, v in out.items()}


def _matrix_algebra(base, labels, kind, degree_of):
    index = {label: k for k, label in enumerate(labels)}
    by_row = {}
    for k, (i, r, s) in enumerate(labels):
        by_row.setdefault(r, []).append(k)
    products = {}
    for a, (i, r, s) in enumerate(labels):
        for b in by_row.get(s, ()):
            j, _, v = labels[b]
            pij = base.algebra.product(i, j)
            if not pij:
                continue
            products[(a, b)] = {index[(k, r, v)]: c for k, c in pij.items()}
    algebra = Algebra(base.field, len(labels), products)
    degree = [degree_of(label) for label in labels]
    log.debug('%s of dim %d over base of dim %d', kind, len(labels),
              base.dim)
    return SmashAlgebra(base, kind, algebra, degree, labels)


def fmat(base):
    group = base.group
    table = group.table
    labels = [(i, r, s) for r in group.elements for s in group.elements
              for i in range(base.dim)]

    def degree_of(label):
        i, r, s = label
        return table[table[r][base.degree[i]]][group.inv(s)]
    return _matrix_algebra(base, labels, FMAT, degree_of)


def smash(base):
    group = base.group
    table = group.table
    labels = [(i, r, s) for r in group.elements for s in group.elements
              for i in range(base.dim)
              if base.degree[i] == table[group.inv(r)][s]]
    return _matrix_algebra(base, labels, SMASH,
                           lambda label: group.identity)


def smash_inclusion(small, full):
    """The coordinate inclusion of ``smash(B)`` into ``fmat(B)``."""
    images = tuple(full.field.unit(full.dim, full.index[label])
                   for label in small.labels)
    return Homomorphism(small, full, LinearMap(small.field, small.dim,
                                               full.dim, images))


def dual_action(algebra):
    """``beta_t(b e_{r,s}) = b e_{tr,ts}`` on a smash or full matrix
    algebra.

    """
    group = algebra.group
    table = group.table
    field, n = algebra.field, algebra.dim
    maps = []
    for t in group.elements:
        images = []
        for i, r, s in algebra.labels:
            images.append(field.unit(
                n, algebra.index[(i, table[t][r], table[t][s])]))
        maps.append(LinearMap(field, n, n, tuple(images)))
    return validate_global_action(group, algebra.algebra, maps)


def eta(base, target):
    """``eta(b)(r, s) = b_{r^-1 s}`` into ``target`` (smash or full)."""
    group = base.group
    table = group.table
    images = []
    for i in range(base.dim):
        vec = [target.field.zero] * target.dim
        for r in group.elements:
            for s in group.elements:
                if base.degree[i] == table[group.inv(r)][s]:
                    vec[target.index[(i, r, s)]] = target.field.one
        images.append(tuple(vec))
    linear = LinearMap(base.field, base.dim, target.dim, tuple(images))
    return Homomorphism(base, target, linear).validate(graded=False)


def _entrywise(hom, source, target):
    images = []
    for i, r, s in source.labels:
        vec = [target.field.zero] * target.dim
        for k, x in enumerate(hom.linear.images[i]):
            if x:
                vec[target.index[(k, r, s)]] = x
        images.append(tuple(vec))
    return LinearMap(source.field, source.dim, target.dim, tuple(images))


def smash_functor(hom, source=None, target=None):
    """``phi#(a e_{r,s}) = phi(a) e_{r,s}`` for a graded homomorphism."""
    hom.validate()
    source = source or smash(hom.source)
    target = target or smash(hom.target)
    linear = _entrywise(hom, source, target)
    return Homomorphism(source, target, linear).validate()


def fmat_functor(hom, source=None, target=None):
    """Entrywise ``phi`` on full matrix algebras."""
    hom.validate()
    source = source or fmat(hom.source)
    target = target or fmat(hom.target)
    return Homomorphism(source, target,
                        _entrywise(hom, source, target)).validate()


@dataclass
class PartialSmash(object):
    """The ideal ``sum B_{r^-1} B_s e_{r,s}`` of the smash product."""

    smash: SmashAlgebra
    ideal: Subspace
    entries: dict
    kind: str = PARTIAL_SMASH

    @property
    def dim(self):
        return self.ideal.rank

    def is_everything(self):
        return self.ideal.rank == self.smash.dim


class _PieceProducts(object):
    """Cached ``B_r B_s`` (as subspaces of the base) keyed by ``(r, s)``."""

    def __init__(self, base):
        self.base = base
        self.pieces = [base.piece(t) for t in base.group.elements]
        self.cache = {}

    def pair(self, r, s):
        key = (r, s)
        if key not in self.cache:
            prod = self.base.product(self.pieces[r], self.pieces[s])
            self.cache[key] = prod
        return self.cache[key]

    def quad(self, r, t, s):
        """``B_{r^-1} B_t B_{t^-1} B_s`` as a subspace of the base."""
        group = self.base.group
        left = self.pair(group.inv(r), t)
        right = self.pair(group.inv(t), s)
        return self.base.product(left, right)[
            group.mul(group.inv(r), s)]

    def triple(self, r, t, s):
        """``B_{r^-1} B_t B_s``."""
        group = self.base.group
        left = self.pair(group.inv(r), t)
        return self.base.product(left, self.pieces[s])[
            group.mul(group.inv(r), t, s)]


def partial_smash(base, algebra=None, report=None):
    algebra = algebra or smash(base)
    group = base.group
    products = _PieceProducts(base)
    entries = {}
    builder = SpanBuilder(base.field, algebra.dim)
    for r in group.elements:
        rinv = group.inv(r)
        for s in group.elements:
            entry = products.pair(rinv, s)[group.mul(rinv, s)]
            entries[(r, s)] = entry
            for vec in entry.basis:
                builder.add(algebra.place(vec, r, s))
    ideal = builder.subspace()
    report = report or VerificationReport.precondition('partial smash')
    report.holds('I ideal of B#G', algebra.algebra.is_ideal(ideal))
    report.holds('I = B#G iff strongly graded',
                 (ideal.rank == algebra.dim) == base.is_strongly_graded(),
                 (ideal.rank, algebra.dim))
    log.debug('partial smash product of dim %d in smash of dim %d',
              ideal.rank, algebra.dim)
    return PartialSmash(algebra, ideal, entries)


@dataclass
class CanonicalAction(object):

    base: GradedAlgebra
    smash: SmashAlgebra
    partial: PartialSmash
    beta: GlobalAction
    gamma: object
    report: VerificationReport = None


def canonical_partial_action(base, report=None):
    """Restriction of the dual action to the partial smash product."""
    if not base.is_partially_strongly_graded():
        raise PreconditionFailed('partially strongly graded')
    report = report or VerificationReport('canonical partial action')
    algebra = smash(base)
    beta = dual_action(algebra)
    part = partial_smash(base, algebra)
    ideal = part.ideal
    gamma = restrict_global(beta, ideal)
    products = _PieceProducts(base)
    group = base.group
    whole = algebra.algebra
    for t in group.elements:
        moved = beta.image(t, ideal)
        left = whole.subspace_product(ideal, moved)
        right = whole.subspace_product(moved, ideal)
        displayed = Subspace.zero(base.field, algebra.dim)
        for r in group.elements:
            for s in group.elements:
                displayed = subspace_sum(displayed, algebra.place_subspace(
                    products.quad(r, t, s), r, s))
        domain = span(base.field, [ideal.combine(v)
                                   for v in gamma.domains[t].basis],
                      algebra.dim)
        report.equal('I beta_{0}(I) = beta_{0}(I) I'.format(t), left, right)
        report.equal('I_{0} = sum B_r^-1 B_t B_t^-1 B_s e_rs'.format(t),
                     left, displayed)
        report.equal('gamma domain {0}'.format(t), domain, left)
    report.equal('orbit of I = B#G', beta.orbit_span(ideal),
                 whole.whole())
    return CanonicalAction(base, algebra, part, beta, gamma, report)


@dataclass
class Duality(object):

    base: GradedAlgebra
    smash: SmashAlgebra
    beta: GlobalAction
    skew: object
    fmat: SmashAlgebra
    psi: Homomorphism


def duality_iso(base, validate=True):
    """``psi(b e_{r,s} delta_t) = b e_{r, t^-1 s}`` from the skew algebra
    of the dual action onto the full matrix algebra. With ``validate``
    false the homomorphism and bijectivity checks are left to the caller.

    """
    group = base.group
    algebra = smash(base)
    beta = dual_action(algebra)
    skew = skew_group_algebra(beta.as_partial())
    full = fmat(base)
    images = []
    for t in group.elements:
        tinv = group.inv(t)
        for i, r, s in algebra.labels:
            images.append(full.field.unit(
                full.dim, full.index[(i, r, group.mul(tinv, s))]))
    linear = LinearMap(base.field, skew.dim, full.dim, tuple(images))
    psi = Homomorphism(skew, full, linear)
    if not validate:
        return Duality(base, algebra, beta, skew, full, psi)
    try:
        psi.validate()
    except AlgebraError as exc:
        raise VerificationFailed('psi graded homomorphism', str(exc)) \
            from exc
    if not psi.is_isomorphism():
        raise VerificationFailed('psi bijective',
                                 '{0} -> {1}'.format(skew.dim, full.dim))
    return Duality(base, algebra, beta, skew, full, psi)


def partial_duality_image(base, report=None):
    """``psi(I x_gamma G)`` compared with ``sum B_r^-1 B_t B_s e_{r,s}``."""
    if not base.is_partially_strongly_graded():
        raise PreconditionFailed('partially strongly graded')
    report = report or VerificationReport.precondition('partial duality')
    canonical = canonical_partial_action(base)
    duality = duality_iso(base)
    gamma, ideal = canonical.gamma, canonical.partial.ideal
    big = duality.skew
    builder = SpanBuilder(base.field, duality.fmat.dim)
    for t in base.group.elements:
        for vec in gamma.domains[t].basis:
            in_smash = ideal.combine(vec)
            builder.add(duality.psi.apply(big.embed(t, in_smash)))
    image = builder.subspace()
    products = _PieceProducts(base)
    full = duality.fmat
    displayed = Subspace.zero(base.field, full.dim)
    group = base.group
    for r in group.elements:
        for s in group.elements:
            for t in group.elements:
                displayed = subspace_sum(displayed, full.place_subspace(
                    products.triple(r, t, s), r, s))
    report.equal('psi(I x G) = sum B_r^-1 B_t B_s e_rs', image, displayed)
    return image


def sgchar(base, report=None):
    """``I`` is invariant under the dual action iff ``B`` is strongly
    graded. Returns ``(invariant, strongly_graded)``.

    """
    report = report or VerificationReport.precondition('sgchar')
    algebra = smash(base)
    beta = dual_action(algebra)
    part = partial_smash(base, algebra)
    invariant = beta.is_invariant(part.ideal)
    strong = base.is_strongly_graded()
    report.holds('I invariant iff strongly graded', invariant == strong,
                 (part.dim, algebra.dim))
    return invariant, strong


def fixed_subalgebra(base, report=None):
    """The fixed points of the dual action on ``B#G`` are ``eta(B)``."""
    report = report or VerificationReport.precondition('fixed subalgebra')
    algebra = smash(base)
    beta = dual_action(algebra)
    fixed = beta.fixed_points()
    image = eta(base, algebra).linear.image()
    report.equal('fixed points = eta(B)', fixed, image)
    return fixed


def naturality(hom, report=None):
    """The square ``psi_B o phi~ = phi^fin o psi_A``."""
    report = report or VerificationReport.precondition('naturality')
    source = duality_iso(hom.source)
    target = duality_iso(hom.target)
    sharp = smash_functor(hom, source.smash, target.smash)
    tilde = action_morphism_skew(
        ActionMorphism(source.beta.as_partial(), target.beta.as_partial(),
                       sharp.linear),
        source.skew, target.skew)
    fin = fmat_functor(hom, source.fmat, target.fmat)
    lhs = target.psi.linear.compose(tilde.linear)
    rhs = fin.linear.compose(source.psi.linear)
    report.holds('psi_B phi~ = phi^fin psi_A', lhs == rhs,
                 (lhs.rank, rhs.rank))
    return lhs == rhs


# vim:et:fdm=marker:sts=4:sw=4:ts=4
