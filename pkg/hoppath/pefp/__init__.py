"""Batched expansion and verification over a tiered memory model."""

from . import engine, tiers, verify

__all__ = ["engine", "tiers", "verify"]
