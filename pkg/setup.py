#!/usr/bin/env python
# -*- coding: utf-8 -*-

try:
    from setuptools import setup
except ImportError:
    from distutils.core import setup


with open('README.rst') as readme_file:
    readme = readme_file.read()

with open('HISTORY.rst') as history_file:
    history = history_file.read()

with open("requirements.txt") as requires_file:
    requirements = [line for line in requires_file.read().split("\n") if line]

test_requirements = [
    "py",
    "pytest",
    "coverage"
]

setup_requirements = [
    'setuptools_scm'
]

setup(
    name='coxperron',
    use_scm_version={'fallback_version': '0.1.0'},
    description="Exact growth functions of Coxeter groups and Perron certificates for their growth rates.",
    long_description=readme + '\n\n' + history,
    author="Daniel Williams",
    author_email='daniel.williams@glasgow.ac.uk',
    packages=[
        'coxperron',
    ],
    package_dir={'coxperron':
                 'coxperron'},
    package_data={'coxperron': ['data/*.json']},
    include_package_data=True,
    setup_requires=setup_requirements,
    install_requires=requirements,
    entry_points={
        'console_scripts': [
            'coxperron = coxperron.cli:main',
        ],
    },
    license="ISCL",
    zip_safe=False,
    keywords='coxeter growth-series sturm perron',
    classifiers=[
        'Development Status :: 2 - Pre-Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: ISC License (ISCL)',
        'Natural Language :: English',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.7',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    python_requires='>=3.7',
    test_suite='tests',
    tests_require=test_requirements
)
