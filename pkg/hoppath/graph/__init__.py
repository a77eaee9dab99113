"""Directed graphs in CSR form, their binary file format and generators."""

from . import csr, csr_file, generators

__all__ = ["csr", "csr_file", "generators"]
