"""Exact Gerstenhaber bracket engine for truncated polynomial rings and Taft algebras."""

from gerstenhaber.scalars import CycScalar, cyclotomic_polynomial, omega_power

__all__ = ["CycScalar", "cyclotomic_polynomial", "omega_power"]
