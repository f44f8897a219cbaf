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


from collections.abc import Mapping, Sequence

from gradedmorita.algebra.linear import Field

__all__ = ['ConfigValidationError', 'DocumentValidationError',
           'ConfigValidation', 'DocumentValidation', 'OBJECT_TYPES']

OBJECT_TYPES = ('algebra', 'partial_action', 'global_action', 'context')

_ref = (str, Mapping)


class ConfigValidationError(Exception):

    where = 'config'

    def __init__(self, msg, stack=None):
        self.stack = list(stack or [])
        if stack:
            msg += ' in {0} {1}'.format(self.where, self._repr_stack(stack))
        super(ConfigValidationError, self).__init__(msg)

    def _repr_stack(self, stack):
        ret = []
        for item in stack:
            if isinstance(item, int):
                ret[-1] += '[{0}]'.format(item)
            else:
                ret.append(str(item))
        return '.'.join(ret)


class DocumentValidationError(ConfigValidationError):

    where = 'document'


class _Validation(object):

    error = ConfigValidationError

    def __init__(self, cfg):
        self.cfg = cfg

    def _check_keys(self, opts, keydict, stack, only_keys=False):
        if not isinstance(opts, Mapping):
            raise self.error('Expected mapping', stack)
        for k, v in opts.items():
            if k not in keydict:
                if only_keys:
                    msg = "Unexpected key '{0}'".format(k)
                    raise self.error(msg, stack)
                else:
                    continue
            if not isinstance(v, keydict[k][0]) or \
                    (isinstance(v, bool) and bool not in
                     _types(keydict[k][0])):
                type_name = _type_name(keydict[k][0])
                msg = "Expected key '{0}' to be {1}".format(k, type_name)
                raise self.error(msg, stack)
            del keydict[k]
        for k, v in keydict.items():
            if v[1]:
                msg = "Missing required key '{0}'".format(k)
                raise self.error(msg, stack)

    def _check_list(self, value, stack, item_type=None, length=None):
        if isinstance(value, str) or not isinstance(value, Sequence):
            raise self.error('Expected list', stack)
        if length is not None and len(value) != length:
            msg = 'Expected {0} entries, got {1}'.format(length, len(value))
            raise self.error(msg, stack)
        if item_type is not None:
            for i, item in enumerate(value):
                if not isinstance(item, item_type) or isinstance(item, bool):
                    msg = 'Expected {0}'.format(_type_name(item_type))
                    raise self.error(msg, stack + [i])

    def _check_field(self, tag, stack):
        try:
            Field.from_tag(tag)
        except ValueError as exc:
            raise self.error(str(exc), stack)


def _types(spec):
    return spec if isinstance(spec, tuple) else (spec, )


def _type_name(spec):
    names = []
    for t in _types(spec):
        names.append({str: 'string', int: 'integer', bool: 'boolean',
                      Mapping: 'mapping', Sequence: 'list'}.get(
                          t, t.__name__.lower()))
    return ' or '.join(names)


class ConfigValidation(_Validation):

    def _check_suite(self, opts, stack):
        keydict = {'seeds': (int, False),
                   'jobs': (int, False),
                   'fields': (Sequence, False),
                   'max_dim': (int, False),
                   'max_order': (int, False)}
        self._check_keys(opts, keydict, stack, True)
        if 'fields' in opts:
            self._check_list(opts['fields'], stack + ['fields'], str)
        for i, tag in enumerate(opts.get('fields') or []):
            self._check_field(tag, stack + ['fields', i])
        for key in ('seeds', 'jobs', 'max_dim', 'max_order'):
            if key in opts and opts[key] < (0 if key == 'seeds' else 1):
                msg = "Key '{0}' is out of range".format(key)
                raise self.error(msg, stack)
        if opts.get('max_dim', 1) > 12 or opts.get('max_order', 1) > 4:
            msg = 'Generator bounds are dim <= 12 and order <= 4'
            raise self.error(msg, stack)

    def _check_fixture(self, opts, stack):
        keydict = {'factory': (str, True),
                   'description': (str, False)}
        self._check_keys(opts, keydict, stack, True)

    def _check_toplevel(self, stack):
        if not isinstance(self.cfg, Mapping):
            msg = 'Expected mapping'
            raise self.error(msg, stack)

        keydict = {'field': (str, False),
                   'report': (str, False),
                   'color': (bool, False),
                   'logging': (Mapping, False),
                   'suite': (Mapping, False),
                   'fixtures': (Mapping, False)}
        self._check_keys(self.cfg, keydict, stack, True)

        if 'field' in self.cfg:
            self._check_field(self.cfg['field'], stack + ['field'])
        if self.cfg.get('report', 'text') not in ('text', 'machine'):
            msg = "Key 'report' must be 'text' or 'machine'"
            raise self.error(msg, stack)
        if 'suite' in self.cfg:
            self._check_suite(self.cfg['suite'], stack + ['suite'])
        for ident, opts in (self.cfg.get('fixtures') or {}).items():
            self._check_fixture(opts, stack + ['fixtures', ident])

    @classmethod
    def check(cls, cfg):
        return cls(cfg)._check_toplevel(['root'])


class DocumentValidation(_Validation):
    """Shape checks on a loaded document, before any algebra is built."""

    error = DocumentValidationError

    def _check_group(self, opts, stack):
        if 'preset' in opts:
            self._check_keys(opts, {'preset': (str, True)}, stack, True)
            return
        keydict = {'order': (int, True),
                   'table': (Sequence, True),
                   'identity': (int, False),
                   'labels': (Sequence, False)}
        self._check_keys(opts, keydict, stack, True)
        order = opts['order']
        self._check_list(opts['table'], stack + ['table'], length=order)
        for i, row in enumerate(opts['table']):
            self._check_list(row, stack + ['table', i], int, order)
        if 'labels' in opts:
            self._check_list(opts['labels'], stack + ['labels'], str, order)

    def _check_vectors(self, vectors, stack, dim=None):
        self._check_list(vectors, stack)
        for i, vec in enumerate(vectors):
            self._check_list(vec, stack + [i], (str, int), dim)

    def _check_table(self, entries, stack):
        self._check_list(entries, stack)
        for i, entry in enumerate(entries):
            self._check_list(entry, stack + [i], length=3)
            for k in (0, 1):
                if not isinstance(entry[k], int) or \
                        isinstance(entry[k], bool):
                    msg = 'Expected integer index'
                    raise self.error(msg, stack + [i])
            self._check_list(entry[2], stack + [i], (str, int))

    def _check_ref(self, value, stack):
        if isinstance(value, str):
            if value not in self.cfg['objects']:
                msg = "No match for reference '{0}'".format(value)
                raise self.error(msg, stack)
            return
        self._check_algebra(value, stack)

    def _check_algebra(self, opts, stack):
        keydict = {'type': (str, False),
                   'dim': (int, True),
                   'field': (str, False),
                   'degree': (Sequence, True),
                   'sc': (Sequence, True),
                   'labels': (Sequence, False)}
        self._check_keys(opts, keydict, stack, True)
        self._check_list(opts['degree'], stack + ['degree'], int)
        self._check_table(opts['sc'], stack + ['sc'])
        if 'field' in opts:
            self._check_field(opts['field'], stack + ['field'])

    def _check_partial_action(self, opts, stack):
        keydict = {'type': (str, True),
                   'algebra': (_ref, True),
                   'domains': (Sequence, True),
                   'maps': (Sequence, True),
                   'flavor': (str, False),
                   'globalization': (str, False)}
        self._check_keys(opts, keydict, stack, True)
        self._check_ref(opts['algebra'], stack + ['algebra'])
        for key in ('domains', 'maps'):
            self._check_list(opts[key], stack + [key])
            for t, vectors in enumerate(opts[key]):
                self._check_vectors(vectors, stack + [key, t])
        if opts.get('flavor', 'product') not in ('product', 'partial'):
            msg = "Key 'flavor' must be 'product' or 'partial'"
            raise self.error(msg, stack)
        if 'globalization' in opts:
            self._check_ref(opts['globalization'],
                            stack + ['globalization'])

    def _check_global_action(self, opts, stack):
        keydict = {'type': (str, True),
                   'algebra': (_ref, True),
                   'maps': (Sequence, True),
                   'ideal': (Sequence, False)}
        self._check_keys(opts, keydict, stack, True)
        self._check_ref(opts['algebra'], stack + ['algebra'])
        self._check_list(opts['maps'], stack + ['maps'])
        for t, vectors in enumerate(opts['maps']):
            self._check_vectors(vectors, stack + ['maps', t])
        if 'ideal' in opts:
            self._check_vectors(opts['ideal'], stack + ['ideal'])

    def _check_context(self, opts, stack):
        keydict = {'type': (str, True),
                   'A': (_ref, True),
                   'B': (_ref, True),
                   'x_degree': (Sequence, True),
                   'y_degree': (Sequence, True)}
        for key in ('ax', 'xb', 'by', 'ya', 'xy', 'yx'):
            keydict[key] = (Sequence, True)
        self._check_keys(opts, keydict, stack, True)
        self._check_ref(opts['A'], stack + ['A'])
        self._check_ref(opts['B'], stack + ['B'])
        for key in ('x_degree', 'y_degree'):
            self._check_list(opts[key], stack + [key], int)
        for key in ('ax', 'xb', 'by', 'ya', 'xy', 'yx'):
            self._check_table(opts[key], stack + [key])

    def _check_toplevel(self, stack):
        if not isinstance(self.cfg, Mapping):
            msg = 'Expected mapping'
            raise self.error(msg, stack)

        keydict = {'format_version': (str, True),
                   'field': (str, False),
                   'group': (Mapping, True),
                   'objects': (Mapping, True)}
        self._check_keys(self.cfg, keydict, stack, True)
        if self.cfg['format_version'] != '1':
            msg = "Unsupported format_version '{0}'".format(
                self.cfg['format_version'])
            raise self.error(msg, stack)
        if 'field' in self.cfg:
            self._check_field(self.cfg['field'], stack + ['field'])
        self._check_group(self.cfg['group'], stack + ['group'])

        for name, opts in self.cfg['objects'].items():
            mystack = stack + ['objects', str(name)]
            if not isinstance(opts, Mapping):
                raise self.error('Expected mapping', mystack)
            kind = opts.get('type')
            if kind not in OBJECT_TYPES:
                msg = "Key 'type' must be one of {0}".format(
                    ', '.join(OBJECT_TYPES))
                raise self.error(msg, mystack)
            getattr(self, '_check_' + kind)(opts, mystack)

    @classmethod
    def check(cls, doc):
        return cls(doc)._check_toplevel([])


# vim:et:fdm=marker:sts=4:sw=4:ts=4
