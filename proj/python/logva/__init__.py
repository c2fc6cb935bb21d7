"""Exact symbolic calculator for logarithmic vertex algebras."""
from _logva import Model, suites

__all__ = ["Model", "suites"]
