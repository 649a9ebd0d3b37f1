"""Shared utilities for fixbound: logging setup, exceptions and settings."""
