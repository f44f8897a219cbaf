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


"""The ``format_version: "1"`` document: a YAML mapping with the field tag,
the group and named objects (algebras, partial actions, global actions and
Morita contexts). Scalars are written as strings in the field's notation.

"""

from collections.abc import Mapping
from dataclasses import dataclass, field as dc_field, replace

import yaml

from gradedmorita.algebra.errors import AlgebraError
from gradedmorita.algebra.fixtures import (ALGEBRA, GLOBAL_ACTION,
                                           PARTIAL_ACTION)
from gradedmorita.algebra.graded import (Algebra, GradedAlgebra,
                                         validate_graded_algebra)
from gradedmorita.algebra.group import preset, validate_group
from gradedmorita.algebra.linear import Field, LinearMap, span
from gradedmorita.algebra.morita import AbstractContext, validate_context
from gradedmorita.algebra.partial import (PARTIAL, GlobalAction,
                                          Globalization, PartialAction,
                                          make_partial_action,
                                          restrict_global,
                                          validate_global_action,
                                          validate_partial_action,
                                          validate_product_partial_action)
from gradedmorita.algebra.smash import SmashAlgebra

from .validation import DocumentValidation

__all__ = ['Document', 'DocumentError', 'ParseError', 'ValidationError',
           'parse_document', 'load_document', 'dump_document',
           'fixture_document', 'emit_fixture', 'kind_of', 'CONTEXT',
           'FORMAT_VERSION']

FORMAT_VERSION = '1'
CONTEXT = 'context'

_TABLES = ('ax', 'xb', 'by', 'ya', 'xy', 'yx')


class DocumentError(Exception):
    pass


class ParseError(DocumentError):

    def __init__(self, line, message):
        self.line = line
        self.message = message
        super(ParseError, self).__init__(
            'line {0}: {1}'.format(line, message))


class ValidationError(DocumentError):

    def __init__(self, obj, detail):
        self.object = obj
        self.detail = detail
        super(ValidationError, self).__init__(
            "Invalid object '{0}': {1}".format(obj, detail))


def kind_of(obj):
    if isinstance(obj, GradedAlgebra):
        return ALGEBRA
    if isinstance(obj, PartialAction):
        return PARTIAL_ACTION
    if isinstance(obj, (GlobalAction, Globalization)):
        return GLOBAL_ACTION
    if isinstance(obj, AbstractContext):
        return CONTEXT
    raise TypeError('not a document object: {0!r}'.format(obj))


@dataclass
class Document(object):
    """Objects are :class:`GradedAlgebra`, :class:`PartialAction`,
    :class:`GlobalAction`, :class:`Globalization` (a global action with an
    ideal) and :class:`AbstractContext` values, by name.

    """

    field: Field
    group: object
    objects: dict = dc_field(default_factory=dict)
    format_version: str = FORMAT_VERSION

    def of_kind(self, *kinds):
        return {name: obj for name, obj in self.objects.items()
                if kind_of(obj) in kinds}

    def pick(self, kinds, name=None):
        """The object called ``name``, or the only object of one of
        ``kinds``.

        """
        if name is not None:
            try:
                obj = self.objects[name]
            except KeyError:
                raise ValidationError(name, 'no such object') from None
            if kind_of(obj) not in kinds:
                raise ValidationError(name, 'expected {0}, got {1}'.format(
                    ' or '.join(kinds), kind_of(obj)))
            return name, obj
        found = self.of_kind(*kinds)
        if len(found) != 1:
            what = 'no' if not found else 'more than one'
            raise ValidationError('<document>', '{0} object of kind {1}'
                                  .format(what, ' or '.join(kinds)))
        return next(iter(found.items()))


class _Reader(object):

    def __init__(self, raw, field):
        self.raw = raw
        self.field = field
        self.group = self._group(raw['group'])
        self.objects = {}
        self._loading = set()

    def _group(self, opts):
        try:
            if 'preset' in opts:
                return preset(opts['preset'])
            return validate_group(opts['table'], opts.get('identity', 0),
                                  opts.get('labels'))
        except AlgebraError as exc:
            raise ValidationError('group', str(exc)) from exc

    def _vectors(self, rows):
        return [self.field.vector(row) for row in rows]

    def _sparse_table(self, entries):
        out = {}
        for i, j, coords in entries:
            sparse = {k: self.field.convert(x)
                      for k, x in enumerate(coords)}
            sparse = {k: x for k, x in sparse.items() if x}
            if sparse:
                out[(i, j)] = sparse
        return out

    def resolve(self, ref, name):
        if not isinstance(ref, Mapping):
            return self.load(ref)
        return self._build(name, ref)

    def load(self, name):
        if name in self.objects:
            return self.objects[name]
        if name in self._loading:
            raise ValidationError(name, 'circular reference')
        self._loading.add(name)
        obj = self._build(name, self.raw['objects'][name])
        self._loading.discard(name)
        self.objects[name] = obj
        return obj

    def _build(self, name, opts):
        kind = opts.get('type', ALGEBRA)
        try:
            return getattr(self, '_' + kind)(name, opts)
        except AlgebraError as exc:
            raise ValidationError(name, str(exc)) from exc

    def _algebra_of(self, ref, name):
        obj = self.resolve(ref, name)
        if not isinstance(obj, GradedAlgebra):
            raise ValidationError(name, 'expected an algebra')
        return obj

    def _algebra(self, name, opts):
        if 'field' in opts and Field.from_tag(opts['field']) != self.field:
            raise ValidationError(name, 'field {0} differs from document '
                                  'field {1}'.format(opts['field'],
                                                     self.field.tag))
        dim = opts['dim']
        entries = [(i, j, coords) for i, j, coords in opts['sc']]
        algebra = Algebra.from_entries(self.field, dim, entries)
        return validate_graded_algebra(algebra, self.group, opts['degree'])

    def _partial_action(self, name, opts):
        base = self._algebra_of(opts['algebra'], name + '.algebra')
        alpha = make_partial_action(self.group, base.algebra,
                                    opts['domains'], opts['maps'])
        if opts.get('flavor') == PARTIAL:
            alpha = validate_partial_action(alpha)
        else:
            alpha = validate_product_partial_action(alpha)
        if 'globalization' in opts:
            glob = self.resolve(opts['globalization'],
                                name + '.globalization')
            if not isinstance(glob, Globalization):
                raise ValidationError(name, 'globalization must be a '
                                      'global action with an ideal')
            restricted = restrict_global(glob.action, glob.ideal)
            if (restricted.algebra, restricted.domains, restricted.maps) != \
                    (alpha.algebra, alpha.domains, alpha.maps):
                raise ValidationError(name, 'globalization does not '
                                      'restrict to the action')
            alpha = replace(alpha, globalization=glob)
        return alpha

    def _global_action(self, name, opts):
        base = self._algebra_of(opts['algebra'], name + '.algebra')
        n, field = base.dim, self.field
        maps = []
        for t, images in enumerate(opts['maps']):
            images = self._vectors(images)
            if len(images) != n or any(len(v) != n for v in images):
                raise ValidationError(name, 'beta_{0} is not a {1}x{1} '
                                      'matrix'.format(t, n))
            maps.append(LinearMap(field, n, n, tuple(images)))
        beta = validate_global_action(self.group, base.algebra, maps)
        if 'ideal' not in opts:
            return beta
        ideal = span(field, self._vectors(opts['ideal']), n)
        restrict_global(beta, ideal)
        return Globalization(beta, ideal)

    def _context(self, name, opts):
        left = self._algebra_of(opts['A'], name + '.A')
        right = self._algebra_of(opts['B'], name + '.B')
        tables = [self._sparse_table(opts[key]) for key in _TABLES]
        ctx = AbstractContext(left, right, opts['x_degree'],
                              opts['y_degree'], *tables)
        return validate_context(ctx)


def parse_document(text, field=None):
    """Parse and validate a document. ``field`` applies when the document
    names none.

    """
    try:
        raw = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, 'problem_mark', None)
        line = mark.line + 1 if mark is not None else 0
        message = getattr(exc, 'problem', None) or str(exc)
        raise ParseError(line, message) from exc
    DocumentValidation.check(raw)
    if 'field' in raw:
        field = Field.from_tag(raw['field'])
    elif field is None:
        field = Field.prime()
    reader = _Reader(raw, field)
    for name in raw['objects']:
        reader.load(name)
    return Document(field, reader.group,
                    {name: reader.objects[name] for name in raw['objects']},
                    raw['format_version'])


def load_document(path, field=None):
    with open(path, 'r') as fobj:
        return parse_document(fobj.read(), field)


class _Writer(object):

    def __init__(self, doc):
        self.doc = doc
        self.field = doc.field

    def _vec(self, vec):
        return [self.field.format(x) for x in vec]

    def _table(self, table, dim):
        out = []
        for (i, j), sparse in sorted(table.items()):
            out.append([i, j, self._vec(self.field.dense(sparse, dim))])
        return out

    def group(self):
        group = self.doc.group
        return {'order': group.order,
                'table': [list(row) for row in group.table],
                'identity': group.identity,
                'labels': list(group.labels)}

    def algebra(self, algebra):
        out = {'type': ALGEBRA,
               'dim': algebra.dim,
               'field': self.field.tag,
               'degree': list(algebra.degree),
               'sc': self._table(algebra.products, algebra.dim)}
        if isinstance(algebra, SmashAlgebra):
            out['labels'] = [{'entry': i, 'row': r, 'col': s}
                             for i, r, s in algebra.labels]
        return out

    def _base(self, algebra):
        return {'type': ALGEBRA,
                'dim': algebra.dim,
                'field': self.field.tag,
                'degree': [self.doc.group.identity] * algebra.dim,
                'sc': self._table(algebra.products, algebra.dim)}

    def partial_action(self, alpha, base=None, glob_name=None):
        out = {'type': PARTIAL_ACTION,
               'algebra': base or self._base(alpha.algebra),
               'domains': [[self._vec(v) for v in d.basis]
                           for d in alpha.domains],
               'maps': [[self._vec(v) for v in images]
                        for images in alpha.maps],
               'flavor': alpha.flavor or 'product'}
        if glob_name is not None:
            out['globalization'] = glob_name
        return out

    def global_action(self, beta, base=None):
        ideal = None
        if isinstance(beta, Globalization):
            beta, ideal = beta.action, beta.ideal
        out = {'type': GLOBAL_ACTION,
               'algebra': base or self._base(beta.algebra),
               'maps': [[self._vec(v) for v in m.images]
                        for m in beta.maps]}
        if ideal is not None:
            out['ideal'] = [self._vec(v) for v in ideal.basis]
        return out

    def context(self, ctx):
        dims = {'ax': ctx.x_dim, 'xb': ctx.x_dim, 'by': ctx.y_dim,
                'ya': ctx.y_dim, 'xy': ctx.left.dim, 'yx': ctx.right.dim}
        out = {'type': CONTEXT,
               'A': self.algebra(ctx.left),
               'B': self.algebra(ctx.right),
               'x_degree': list(ctx.x_degree),
               'y_degree': list(ctx.y_degree)}
        for key, table in ctx.tables().items():
            out[key] = self._table(table, dims[key])
        return out

    def dump(self):
        objects = {}
        for name, obj in self.doc.objects.items():
            kind = kind_of(obj)
            if kind == ALGEBRA:
                objects[name] = self.algebra(obj)
            elif kind == PARTIAL_ACTION:
                glob_name = None
                if obj.globalization is not None:
                    glob_name = name + '.globalization'
                    objects[glob_name] = self.global_action(obj.globalization)
                objects[name] = self.partial_action(obj, glob_name=glob_name)
            elif kind == GLOBAL_ACTION:
                objects[name] = self.global_action(obj)
            else:
                objects[name] = self.context(obj)
        raw = {'format_version': self.doc.format_version,
               'field': self.field.tag,
               'group': self.group(),
               'objects': objects}
        return yaml.safe_dump(raw, sort_keys=False, default_flow_style=None)


def dump_document(doc):
    return _Writer(doc).dump()


def fixture_document(fix):
    """A document holding the payload of ``fix`` under its id."""
    payload = fix.payload
    if fix.kind == GLOBAL_ACTION and fix.ideal is not None:
        payload = Globalization(payload, fix.ideal)
    action = payload.action if isinstance(payload, Globalization) \
        else payload
    if isinstance(action, GradedAlgebra):
        field = action.field
    else:
        field = action.algebra.field
    return Document(field, action.group, {fix.ident: payload})


def emit_fixture(fix):
    return dump_document(fixture_document(fix))


# vim:et:fdm=marker:sts=4:sw=4:ts=4
