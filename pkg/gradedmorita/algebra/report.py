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

"""Collection of named checks. A report either records every check (the
default, used by the theorem routines) or, when ``strict``, raises at the
first failing one.

"""

import logging
from dataclasses import dataclass, field

from .errors import PreconditionFailed, VerificationFailed

__all__ = ['Check', 'VerificationReport']

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Check(object):

    name: str
    passed: bool
    dims: tuple = ()
    detail: str = ''

    @property
    def status(self):
        return 'pass' if self.passed else 'FAIL'

    def as_dict(self):
        ret = {'name': self.name, 'status': self.status,
               'dims': list(self.dims)}
        if self.detail:
            ret['detail'] = self.detail
        return ret


def _dim(value):
    dim = getattr(value, 'dim', None)
    if dim is None:
        return len(value)
    return dim


@dataclass
class VerificationReport(object):

    theorem: str
    fixture: str = ''
    checks: list = field(default_factory=list)
    strict: bool = False
    error: type = VerificationFailed

    @classmethod
    def precondition(cls, theorem, fixture=''):
        return cls(theorem, fixture, strict=True, error=PreconditionFailed)

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    @property
    def failures(self):
        return [check for check in self.checks if not check.passed]

    def _record(self, check):
        self.checks.append(check)
        if not check.passed:
            log.debug('%s: check failed: %s %s', self.theorem, check.name,
                      check.dims)
            if self.strict:
                raise self.error(check.name, check.detail)
        return check.passed

    def holds(self, name, flag, dims=(), detail=''):
        return self._record(Check(name, bool(flag), tuple(dims), detail))

    def equal(self, name, lhs, rhs, detail=''):
        return self._record(Check(name, lhs == rhs,
                                  (_dim(lhs), _dim(rhs)), detail))

    def contained(self, name, lhs, rhs, detail=''):
        ok = lhs.is_subspace_of(rhs)
        return self._record(Check(name, ok, (_dim(lhs), _dim(rhs)), detail))

    def extend(self, other, prefix=None):
        for check in other.checks:
            name = check.name if not prefix else \
                '{0}: {1}'.format(prefix, check.name)
            self._record(Check(name, check.passed, check.dims, check.detail))
        return other.passed

    def ensure(self):
        for check in self.checks:
            if not check.passed:
                raise VerificationFailed(check.name, check.detail)
        return self

    def as_dict(self):
        return {'theorem': self.theorem,
                'fixture': self.fixture,
                'pass': self.passed,
                'checks': [check.as_dict() for check in self.checks]}


# vim:et:fdm=marker:sts=4:sw=4:ts=4
