"""__init__.py for tests."""

from . import (
    test_acceptance,
    test_bench,
    test_cache_manager,
    test_csr,
    test_engine,
    test_enumerators,
    test_helpers,
    test_main,
    test_parsers,
    test_preprocess,
    test_tiers,
    test_verify,
)

__all__ = [
    "test_acceptance",
    "test_bench",
    "test_cache_manager",
    "test_csr",
    "test_engine",
    "test_enumerators",
    "test_helpers",
    "test_main",
    "test_parsers",
    "test_preprocess",
    "test_tiers",
    "test_verify",
]
