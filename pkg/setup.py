#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 The sptrack developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

from setuptools import setup, find_packages
from sptrack.version import __version__

setup(
    name = 'sptrack',
    version = __version__,
    description = 'Superpixel marker tracking with DLT triangulation and '
                  'a 3D Kalman filter.',
    long_description = open('README').read(),

    author = 'The sptrack developers',
    license = 'BSD',

    python_requires = '>=3.6',
    install_requires = [
        'numpy',
        'scipy',
        'scikit-image',
    ],
    tests_require = ['hypothesis'],
    extras_require = {'test': ['hypothesis']},
    test_suite = 'sptrack.tests',
    zip_safe = False,

    entry_points = {
        'console_scripts': ['sptrack = sptrack.cli:main'],
    },

    classifiers = [
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: BSD License',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Image Recognition',
    ],

    packages = find_packages(),
)
