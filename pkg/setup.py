#!/usr/bin/env python
#
# Copyright 2026 The coisostar authors
#
# Licensed under the Apache License, Version 2.0 (the "License"); you may
# not use this file except in compliance with the License. You may obtain
# a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
# WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
# License for the specific language governing permissions and limitations
# under the License.

from setuptools import setup

setup(
    name='coisostar',
    version='0.1.0',
    description='Exact deformation quantization of Poisson structures adapted to a coisotropic subspace',
    packages=['coisostar', 'demos'],
    install_requires=['tornado>=5.0', 'sympy>=1.5'],
    tests_require=['pytest'],
    extras_require={'test': ['pytest']},
    entry_points={'console_scripts': ['coisostar=coisostar.cli:run']},
    author='The coisostar authors',
    license='Apache License 2.0',
)
