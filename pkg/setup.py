"""Setup file for hoppath."""
from setuptools import find_packages, setup

setup(
    name="hoppath",
    version="0.1",
    packages=find_packages(exclude=["tests", "tests.*"]),
    python_requires=">=3.11",
    install_requires=["colorlog", "numpy"],
)
