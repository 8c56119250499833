#! /usr/bin/env python
"""Tools to compute with simplicial sets stratified over finite posets."""

import codecs
import os

from setuptools import find_packages, setup

# get __version__ from _version.py
ver_file = os.path.join("stratkit", "_version.py")
with open(ver_file) as f:
    exec(f.read())

DISTNAME = "strat-kit"
DESCRIPTION = "Tools to compute with simplicial sets stratified over finite posets."
with codecs.open("README.rst", encoding="utf-8-sig") as f:
    LONG_DESCRIPTION = f.read()
LICENSE = "MIT"
VERSION = __version__
CLASSIFIERS = [
    "Intended Audience :: Science/Research",
    "Intended Audience :: Developers",
    "License :: OSI Approved",
    "Programming Language :: Python",
    "Topic :: Scientific/Engineering :: Mathematics",
    "Operating System :: Microsoft :: Windows",
    "Operating System :: POSIX",
    "Operating System :: Unix",
    "Operating System :: MacOS",
    "Programming Language :: Python :: 3.7",
    "Programming Language :: Python :: 3.8",
    "Programming Language :: Python :: 3.9",
]
INSTALL_REQUIRES = [
    "numpy>=1.13.3",
    "scipy>=0.19.1",
    "joblib>=0.11",
    "networkx>=2.4",
]
EXTRAS_REQUIRE = {
    "tests": ["pytest", "pytest-cov"],
}


setup(
    name=DISTNAME,
    description=DESCRIPTION,
    license=LICENSE,
    version=VERSION,
    long_description=LONG_DESCRIPTION,
    zip_safe=False,  # the package can run out of an .egg file
    classifiers=CLASSIFIERS,
    packages=find_packages(exclude=["examples", "examples.*"]),
    python_requires=">=3.7",
    install_requires=INSTALL_REQUIRES,
    extras_require=EXTRAS_REQUIRE,
    entry_points={"console_scripts": ["strat-kit=stratkit.cli:main"]},
)
