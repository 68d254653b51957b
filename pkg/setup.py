"""
Script used by distutils to automatically generate a source code
distribution of this python module (a .tar.gz file containing
all of the source code).

To generate this file run:
python setup.py sdist
"""
from setuptools import setup

setup(
    name="koszulkit",
    description="Koszulity checks for truncations of combinatorial categories over FI.",
    url="https://github.com/koszulkit/koszulkit",
    version="0.3.0",
    packages=["koszulkit", "koszulkit.zoo"],
    entry_points={"console_scripts": ["koszulkit = koszulkit.cli:main"]},
    python_requires=">=3.6",
    tests_require=["pytest", "hypothesis", "mock", "pytest-cov"],
    install_requires=["numpy", "six==1.16.0"],
)
