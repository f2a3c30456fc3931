# -*- coding: utf-8 -*-

from setuptools import setup, find_packages

# Read version from the package
version = {}
with open("laguerrecodec/version.py") as f:
    exec(f.read(), version)

setup(
    name='laguerrecodec',
    version=version["__version__"],
    description='Laguerre history encoding of permutations and bijections for set-valued statistics',
    packages=find_packages(exclude=['test']),
    install_requires=[
        r.strip() for r in open("requirements.txt").readlines() if r.strip() and not r.startswith("#")
    ],
    extras_require={
        'test': ['pytest', 'hypothesis'],
    },
    entry_points={
        'console_scripts': ['laguerrecodec = laguerrecodec.cli:main'],
    },
    python_requires='>=3.9',
)
