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


import pytest

from gradedmorita.algebra.fixtures import fixture
from gradedmorita.algebra.linear import Field


@pytest.fixture(params=['fp:101', 'q'])
def field(request):
    return Field.from_tag(request.param)


@pytest.fixture
def fp():
    return Field.prime()


@pytest.fixture
def f1(field):
    return fixture('F1', field).payload


@pytest.fixture
def f4(field):
    return fixture('F4', field).payload


@pytest.fixture
def f3(field):
    return fixture('F3', field).payload


@pytest.fixture
def f6(field):
    return fixture('F6', field).payload


@pytest.fixture(autouse=True)
def no_user_config(tmp_path, monkeypatch):
    """Keep configuration files of the machine running the tests out."""
    monkeypatch.setattr('gradedmorita.app.config._global_config_files',
                        [str(tmp_path / 'missing.yaml')])
    monkeypatch.delenv('GRADEDMORITA_COLOR', raising=False)


# vim:et:fdm=marker:sts=4:sw=4:ts=4
