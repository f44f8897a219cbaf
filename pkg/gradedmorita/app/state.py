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


import sys
import logging
from functools import partial

from gradedmorita.algebra.errors import (AlgebraError, NotMinimal,
                                         PreconditionFailed)
from gradedmorita.algebra.fixtures import (ALGEBRA, GLOBAL_ACTION,
                                           PARTIAL_ACTION, Fixture,
                                           describe, fixture, register,
                                           random_graded_algebra,
                                           random_product_partial_action)
from gradedmorita.algebra.graded import GradedAlgebra
from gradedmorita.algebra.group import preset
from gradedmorita.algebra.linear import Field
from gradedmorita.algebra.morita import linking_algebra, trivial_context
from gradedmorita.algebra.partial import (GlobalAction, Globalization,
                                          PartialAction, restrict_global,
                                          skew_group_algebra)
from gradedmorita.algebra.report import VerificationReport
from gradedmorita.algebra import smash as smashmod
from gradedmorita.algebra import theorems

from .config import load_config
from .document import (CONTEXT, Document, DocumentError, dump_document,
                       emit_fixture, load_document, parse_document)
from .importutil import custom_factory
from .logging import setup_logging
from .output import emit_report, emit_reports, use_color
from .validation import (ConfigValidation, ConfigValidationError,
                         DocumentValidationError)

__all__ = ['RunState', 'CONSTRUCTIONS', 'RANDOM_FIXTURES']

log = logging.getLogger(__name__)

CONSTRUCTIONS = ('smash', 'fmat', 'partial-smash', 'skew', 'dual-action',
                 'linking', 'duality')

RANDOM_FIXTURES = ('random', 'random-action')

_algebra_like = (ALGEBRA, PARTIAL_ACTION)


class RunState(object):
    """Configuration and dispatch for one invocation of the command."""

    def __init__(self, args, argparser=None):
        self.args = args
        self.argparser = argparser
        self.cfg = None
        self.field = None
        self.mode = 'text'
        self.color = False

    def fail(self, msg):
        if self.argparser:
            self.argparser.error(msg)
        else:
            log.error(msg)
            sys.exit(2)

    def load_config(self):
        try:
            self.cfg, raw = load_config(self.args.config)
        except (OSError, ValueError) as exc:
            self.fail(str(exc))
        if raw is not None:
            try:
                ConfigValidation.check(raw)
            except ConfigValidationError as exc:
                self.fail(str(exc))
        setup_logging(self.cfg.logging, getattr(self.args, 'verbose', 0))
        tag = self.args.field or self.cfg.field
        try:
            self.field = Field.from_tag(tag)
        except ValueError as exc:
            self.fail(str(exc))
        self.mode = self.args.report or self.cfg.report
        self.color = use_color(self.cfg.color)
        for ident, opts in (self.cfg.fixtures or {}).items():
            register(ident, partial(custom_factory, opts),
                     opts.description or '')
        log.debug('field %s, %s reports', self.field.tag, self.mode)

    def write(self, text):
        sys.stdout.write(text)

    def _report(self, report):
        self.write(emit_report(report, self.mode, self.color))
        return 0 if report.passed else 1

    def _document(self):
        try:
            return load_document(self.args.file, self.field)
        except (OSError, DocumentError, DocumentValidationError,
                ValueError) as exc:
            self.fail(str(exc))

    def _pick(self, doc, kinds):
        try:
            return doc.pick(kinds, getattr(self.args, 'object', None))
        except DocumentError as exc:
            self.fail(str(exc))

    def _algebra(self, doc):
        name, obj = self._pick(doc, _algebra_like)
        if isinstance(obj, GradedAlgebra):
            return name, obj
        return name, skew_group_algebra(obj)

    def _partial_action(self, doc):
        name, obj = self._pick(doc, (PARTIAL_ACTION, GLOBAL_ACTION))
        if isinstance(obj, Globalization):
            return name, restrict_global(obj.action, obj.ideal)
        if isinstance(obj, GlobalAction):
            return name, obj.as_partial()
        return name, obj

    def _globalization(self, doc):
        name, obj = self._pick(doc, (GLOBAL_ACTION, PARTIAL_ACTION))
        if isinstance(obj, Globalization):
            return name, obj.action, obj.ideal
        glob = getattr(obj, 'globalization', None)
        if glob is None:
            self.fail("object '{0}' carries no ideal or globalization"
                      .format(name))
        return name, glob.action, glob.ideal

    def _context(self, doc):
        name, obj = self._pick(doc, (CONTEXT, ) + _algebra_like)
        if isinstance(obj, GradedAlgebra):
            return name, trivial_context(obj)
        if isinstance(obj, PartialAction):
            return name, trivial_context(skew_group_algebra(obj))
        return name, obj

    def do_validate(self):
        doc = self._document()
        for name, obj in doc.objects.items():
            dim = getattr(obj, 'dim', None)
            if dim is None and hasattr(obj, 'algebra'):
                dim = obj.algebra.dim
            elif dim is None and hasattr(obj, 'action'):
                dim = obj.action.algebra.dim
            self.write('{0}: {1} dim={2} ok\n'.format(
                name, type(obj).__name__, dim if dim is not None else '-'))
        return 0

    def _construct(self, doc):
        what = self.args.what
        if what in ('smash', 'fmat', 'partial-smash', 'dual-action',
                    'duality'):
            name, base = self._algebra(doc)
        if what == 'smash':
            return {name + '#G': smashmod.smash(base)}
        if what == 'fmat':
            return {name + '.fmat': smashmod.fmat(base)}
        if what == 'partial-smash':
            part = smashmod.partial_smash(base)
            ideal, _ = part.smash.restrict(part.smash.grade(part.ideal))
            return {name + '#G': part.smash, name + '.I': ideal}
        if what == 'dual-action':
            algebra = smashmod.smash(base)
            return {name + '#G': algebra,
                    name + '.beta': smashmod.dual_action(algebra)}
        if what == 'duality':
            duality = smashmod.duality_iso(base)
            return {name + '.skew': duality.skew,
                    name + '.fmat': duality.fmat}
        if what == 'skew':
            name, alpha = self._partial_action(doc)
            return {name + '.skew': skew_group_algebra(alpha)}
        name, ctx = self._context(doc)
        return {name + '.linking': linking_algebra(ctx).graded}

    def do_construct(self):
        doc = self._document()
        try:
            objects = self._construct(doc)
        except AlgebraError as exc:
            self.fail(str(exc))
        out = Document(doc.field, doc.group, objects)
        text = dump_document(out)
        parse_document(text)
        if self.args.output:
            with open(self.args.output, 'w') as fobj:
                fobj.write(text)
            log.info('wrote %s', ', '.join(objects))
        else:
            self.write(text)
        return 0

    def _verify(self, doc):
        theorem = self.args.theorem
        if theorem in ('duality', 'geq', 'sg', 'partialrep'):
            name, base = self._algebra(doc)
            run = {'duality': partial(theorems.verify_duality,
                                      fixture=name),
                   'geq': partial(theorems.verify_geq_smash, fixture=name),
                   'sg': partial(theorems.verify_sg, fixture=name),
                   'partialrep': partial(theorems.verify_partialrep,
                                         fixture=name)}[theorem]
            return run(base)
        if theorem == 'globalization':
            name, beta, ideal = self._globalization(doc)
            return theorems.verify_globalization_geq(beta, ideal, name)
        if theorem == 'moritaglob':
            name, alpha = self._partial_action(doc)
            return theorems.verify_moritaglob_consequences(alpha, name)
        name, ctx = self._context(doc)
        if theorem == 'invsgeq':
            return theorems.verify_invsgeq(ctx, name)
        return theorems.verify_eq_strong_gr(ctx, name)

    def do_verify(self):
        doc = self._document()
        try:
            report = self._verify(doc)
        except (PreconditionFailed, NotMinimal) as exc:
            self.fail(str(exc))
        except AlgebraError as exc:
            report = VerificationReport(self.args.theorem,
                                        getattr(self.args, 'object', '')
                                        or '')
            report.holds(type(exc).__name__, False, detail=str(exc))
        return self._report(report)

    def _random_fixture(self, ident):
        group = preset(self.args.group)
        seed = self.args.seed
        if ident == 'random':
            payload = random_graded_algebra(seed, group, field=self.field)
            return Fixture('random-{0}'.format(seed), ALGEBRA, payload)
        payload = random_product_partial_action(seed, group,
                                                field=self.field)
        return Fixture('random-action-{0}'.format(seed), PARTIAL_ACTION,
                       payload)

    def do_fixtures(self):
        if self.args.action == 'list':
            for ident, description in describe():
                self.write('{0:4}  {1}\n'.format(ident, description))
            return 0
        ident = self.args.id
        if not ident:
            self.fail('fixtures emit needs a fixture id')
        try:
            if ident in RANDOM_FIXTURES:
                fix = self._random_fixture(ident)
            else:
                fix = fixture(ident, self.field)
        except (AlgebraError, ImportError, ValueError) as exc:
            self.fail(str(exc))
        self.write(emit_fixture(fix))
        return 0

    def do_suite(self):
        suite = self.cfg.suite
        seeds = self.args.seeds if self.args.seeds is not None \
            else suite.seeds
        jobs = self.args.jobs if self.args.jobs is not None else suite.jobs
        fields = [self.args.field] if self.args.field else suite.fields
        reports = theorems.run_suite(seeds, tuple(fields), suite.max_dim,
                                     suite.max_order, jobs)
        self.write(emit_reports(reports, self.mode, self.color))
        failed = [r for r in reports if not r.passed]
        log.info('suite: %d reports, %d failed', len(reports), len(failed))
        return 1 if failed else 0

    def run(self):
        return getattr(self, 'do_' + self.args.command)()


# vim:et:fdm=marker:sts=4:sw=4:ts=4
