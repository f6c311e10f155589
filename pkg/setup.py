#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""The setup script."""

from setuptools import setup

with open('README.rst') as readme_file:
    readme = readme_file.read()

with open('HISTORY.rst') as history_file:
    history = history_file.read()

python_requirements = '>=3.8'
requirements = ['networkx>=2.5',
                'pytest>=6.0',
                'setuptools']
packages = ['buchi_tight']
entry_points = {
    'console_scripts': [
        'buchi-tight = buchi_tight.cli:main',
    ],
    'pytest11': [
        'buchi_tight.fixtures = buchi_tight.fixtures',
    ],
}

setup(
    name='buchi-tight',
    version='0.1.0',
    author='buchi-tight developers',
    license='Apache Software License 2.0',
    keywords='buchi automata complementation ranking',
    description='Rank-based complementation of Buchi automata with tight '
                'and maximal level rankings.',
    long_description=readme + '\n\n' + history,
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Framework :: Pytest',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Natural Language :: English',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Topic :: Scientific/Engineering :: Mathematics'
    ],
    include_package_data=True,
    python_requires=python_requirements,
    install_requires=requirements,
    packages=packages,
    entry_points=entry_points,
)
