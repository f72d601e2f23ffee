"""Setup module for agmpy"""

import pathlib

from setuptools import find_packages, setup

import agmpy

REQUIRES = ["attrs", "networkx>=2.5", "pydot", "sympy>=1.7", "voluptuous"]

setup(
    name="agmpy",
    version=agmpy.__version__,
    description="AGM dynamics over finite fields of odd order",
    long_description=(pathlib.Path(__file__).parent / "README.md").read_text(),
    long_description_content_type="text/markdown",
    license="GPL-3.0",
    packages=find_packages(exclude=["tests", "tests.*"]),
    install_requires=REQUIRES,
    python_requires=">=3.8",
    entry_points={"console_scripts": ["agm=agmpy.__main__:main"]},
)
