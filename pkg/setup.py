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


from setuptools import setup, find_namespace_packages

with open('README.md') as f:
    readme = f.read()

with open('LICENSE.md') as f:
    license = f.read()

setup(name='gradedmorita',
      version='0.1.0',
      author='gradedmorita contributors',
      description='Graded Morita equivalences of group-graded algebras and '
      'partial actions, built and verified exactly.',
      long_description=readme + license,
      long_description_content_type='text/markdown',
      license='MIT',
      python_requires='>=3.10',
      include_package_data=True,
      packages=find_namespace_packages(include=['gradedmorita', 'gradedmorita.*']),
      install_requires=[
          'sympy ~= 1.13',
          'PyYAML'],
      extras_require={
          'dev': ['pytest', 'flake8', 'pyright']},
      entry_points={'console_scripts': [
              'gradedmorita = gradedmorita.app.main:main']},
      classifiers=['Development Status :: 3 - Alpha',
                   'Topic :: Scientific/Engineering :: Mathematics',
                   'Intended Audience :: Science/Research',
                   'License :: OSI Approved :: MIT License',
                   'Programming Language :: Python'])


# vim:et:fdm=marker:sts=4:sw=4:ts=4
