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

"""Exceptions raised by the algebra library. Every error carries the indices
that triggered it so that reports can point at the offending basis triple,
group element or check.

"""

__all__ = ['AlgebraError', 'FieldMismatch', 'DimensionError',
           'NonAssociative', 'NoIdentity', 'NoInverse', 'InvalidElement',
           'UnknownPreset', 'GradingViolation', 'NotGraded',
           'NotMultiplicative', 'NotIdeal', 'NotIsomorphism',
           'IdentityAxiomFailed', 'IntersectionAxiomFailed',
           'CompositionFailed', 'DomainNotIdempotent', 'DomainsDontCommute',
           'ProductAxiomFailed', 'NotIdempotentIdeal',
           'CommutationHypothesisFailed', 'NotEquivariant',
           'AssociativityFailed', 'PreconditionFailed', 'BalanceViolation',
           'ClosureViolation', 'NotIdempotent', 'NotDegreeOne',
           'FullnessFailed', 'MiddleAlgebraMismatch', 'NotMinimal',
           'VerificationFailed', 'UnknownFixture']


class AlgebraError(Exception):
    """Base class for every error raised by :mod:`gradedmorita.algebra`."""
    pass


class FieldMismatch(AlgebraError):

    def __init__(self, left, right):
        super(FieldMismatch, self).__init__(
            'Scalars from different fields: {0} and {1}'.format(left, right))
        self.left = left
        self.right = right


class DimensionError(AlgebraError):

    def __init__(self, expected, got):
        super(DimensionError, self).__init__(
            'Expected dimension {0}, got {1}'.format(expected, got))
        self.expected = expected
        self.got = got


class NonAssociative(AlgebraError):

    def __init__(self, i, j, k):
        super(NonAssociative, self).__init__(
            'Associativity fails on basis triple ({0}, {1}, {2})'.format(
                i, j, k))
        self.triple = (i, j, k)


class NoIdentity(AlgebraError):

    def __init__(self, identity):
        super(NoIdentity, self).__init__(
            'Element {0} is not a two-sided identity'.format(identity))
        self.identity = identity


class NoInverse(AlgebraError):

    def __init__(self, element):
        super(NoInverse, self).__init__(
            'Element {0} has no inverse'.format(element))
        self.element = element


class InvalidElement(AlgebraError, IndexError):

    def __init__(self, element, order):
        super(InvalidElement, self).__init__(
            'Element {0!r} out of range for group of order {1}'.format(
                element, order))
        self.element = element


class UnknownPreset(AlgebraError):

    def __init__(self, name):
        super(UnknownPreset, self).__init__(
            'Unknown group preset: {0}'.format(name))
        self.name = name


class GradingViolation(AlgebraError):

    def __init__(self, i, j, k, detail=None):
        msg = 'Grading fails: coordinate {2} of b_{0}*b_{1}'.format(i, j, k)
        if detail:
            msg += ' ({0})'.format(detail)
        super(GradingViolation, self).__init__(msg)
        self.triple = (i, j, k)


class NotGraded(AlgebraError):

    def __init__(self, index, detail=''):
        super(NotGraded, self).__init__(
            'Map does not preserve degrees at basis {0} {1}'.format(
                index, detail).rstrip())
        self.index = index


class NotMultiplicative(AlgebraError):

    def __init__(self, where, detail=''):
        super(NotMultiplicative, self).__init__(
            'Map is not multiplicative at {0} {1}'.format(
                where, detail).rstrip())
        self.where = where


class NotIdeal(AlgebraError):

    def __init__(self, t):
        super(NotIdeal, self).__init__(
            'Domain D_{0} is not a two-sided ideal'.format(t))
        self.t = t


class NotIsomorphism(AlgebraError):

    def __init__(self, t):
        super(NotIsomorphism, self).__init__(
            'Map at {0} is not a bijection between its domains'.format(t))
        self.t = t


class IdentityAxiomFailed(AlgebraError):

    def __init__(self, detail):
        super(IdentityAxiomFailed, self).__init__(
            'Identity element acts nontrivially: {0}'.format(detail))


class IntersectionAxiomFailed(AlgebraError):

    def __init__(self, s, t):
        super(IntersectionAxiomFailed, self).__init__(
            'alpha_{0}(D_{0}^-1 & D_{1}) != D_{0} & D_{0}{1}'.format(s, t))
        self.pair = (s, t)


class CompositionFailed(AlgebraError):

    def __init__(self, s, t):
        super(CompositionFailed, self).__init__(
            'alpha_{0} alpha_{1} != alpha_{0}{1} on the common domain'.format(
                s, t))
        self.pair = (s, t)


class DomainNotIdempotent(AlgebraError):

    def __init__(self, t):
        super(DomainNotIdempotent, self).__init__(
            'Domain D_{0} is not idempotent'.format(t))
        self.t = t


class DomainsDontCommute(AlgebraError):

    def __init__(self, s, t):
        super(DomainsDontCommute, self).__init__(
            'D_{0}D_{1} != D_{1}D_{0}'.format(s, t))
        self.pair = (s, t)


class ProductAxiomFailed(AlgebraError):

    def __init__(self, s, t):
        super(ProductAxiomFailed, self).__init__(
            'alpha_{0}(D_{0}^-1 D_{1}) != D_{0} D_{0}{1}'.format(s, t))
        self.pair = (s, t)


class NotIdempotentIdeal(AlgebraError):

    def __init__(self, detail):
        super(NotIdempotentIdeal, self).__init__(
            'Subspace is not an idempotent two-sided ideal: ' + detail)


class CommutationHypothesisFailed(AlgebraError):

    def __init__(self, t):
        super(CommutationHypothesisFailed, self).__init__(
            'A beta_{0}(A) != beta_{0}(A) A'.format(t))
        self.t = t


class NotEquivariant(AlgebraError):

    def __init__(self, t):
        super(NotEquivariant, self).__init__(
            'Morphism does not intertwine the actions at {0}'.format(t))
        self.t = t


class AssociativityFailed(AlgebraError):
    pass


class PreconditionFailed(AlgebraError):

    def __init__(self, check, detail=''):
        msg = 'Precondition failed: ' + check
        if detail:
            msg += ' ({0})'.format(detail)
        super(PreconditionFailed, self).__init__(msg)
        self.check = check


class BalanceViolation(AlgebraError):

    def __init__(self, blocks, triple):
        super(BalanceViolation, self).__init__(
            'Mixed associativity fails for blocks {0} on {1}'.format(
                ''.join(blocks), triple))
        self.blocks = blocks
        self.triple = triple


class ClosureViolation(AlgebraError):

    def __init__(self, piece, detail=''):
        super(ClosureViolation, self).__init__(
            'Product escapes {0} {1}'.format(piece, detail).rstrip())
        self.piece = piece


class NotIdempotent(AlgebraError):
    pass


class NotDegreeOne(AlgebraError):
    pass


class FullnessFailed(AlgebraError):

    def __init__(self, which):
        super(FullnessFailed, self).__init__(
            'Corner is not full: {0}'.format(which))
        self.which = which


class MiddleAlgebraMismatch(AlgebraError):
    pass


class NotMinimal(AlgebraError):
    pass


class VerificationFailed(AlgebraError):

    def __init__(self, check, detail=''):
        msg = 'Verification failed: ' + check
        if detail:
            msg += ' ({0})'.format(detail)
        super(VerificationFailed, self).__init__(msg)
        self.check = check


class UnknownFixture(AlgebraError, KeyError):

    def __init__(self, ident):
        super(UnknownFixture, self).__init__(
            'Fixture is not registered: {0}'.format(ident))
        self.ident = ident

    def __str__(self):
        return self.args[0]


# vim:et:fdm=marker:sts=4:sw=4:ts=4
