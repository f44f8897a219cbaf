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


"""Loading of the fixture factories named in the ``fixtures`` section of the
configuration.

"""

import logging
from importlib import import_module

__all__ = ['import_symbol', 'custom_factory']

log = logging.getLogger(__name__)


def import_symbol(path):
    """Resolve ``package.module:name`` or ``package.module.name``."""
    module_name, sep, symbol_name = path.partition(':')
    if not sep:
        module_name, _, symbol_name = path.rpartition('.')
    if not module_name or not symbol_name:
        raise ImportError('expected module:name, got {0!r}'.format(path))
    mod = import_module(module_name)
    try:
        return getattr(mod, symbol_name)
    except AttributeError:
        raise ImportError('cannot import name {0} from {1}'.format(
            symbol_name, module_name)) from None


def custom_factory(options, field):
    """Build a configured fixture over ``field`` with the callable named by
    ``options.factory``.

    """
    factory = import_symbol(options.factory)
    if not callable(factory):
        raise ImportError('fixture factory {0} is not callable'.format(
            options.factory))
    log.debug('fixture factory %s over %s', options.factory, field.tag)
    return factory(field)


# vim:et:fdm=marker:sts=4:sw=4:ts=4
