#!/usr/bin/env python3

import os
from setuptools import setup, find_packages


here = os.path.abspath(os.path.dirname(__file__))
with open(os.path.join(here, 'README.md')) as f:
    README = f.read()

if __name__ == "__main__":
    setup(
        name = 'vertex-bounds',
        setup_requires = ['setuptools_scm'],
        use_scm_version = True,
        description = 'Exact and randomized lower bounds on the number of vertices of polytopes.',
        long_description = README,
        long_description_content_type = 'text/markdown',
        classifiers = [
            "Programming Language :: Python",
            "Programming Language :: Python :: 3",
            "Topic :: Scientific/Engineering :: Mathematics",
        ],
        keywords = 'polytope vertices linear-programming gaussian r-factor',
        packages = find_packages(exclude = ['tests']),
        include_package_data = True,
        zip_safe = False,
        python_requires = '>=3.7',
        install_requires = [
            'pyyaml',
            'voluptuous',
            'numpy',
            'scipy',
            'mpmath',
            'networkx',
        ],
        extras_require = {
            'test': ['pytest'],
        },
        entry_points = {
            'console_scripts': [
                'vertex-bounds = vertex_bounds.cli:main',
            ],
        },
    )
