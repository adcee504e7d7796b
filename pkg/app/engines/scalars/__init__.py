"""
Scalars Module

Aritmética exacta de escalares Σ q·T^λ con exponentes formales.

Usage básico:
    from app.engines.scalars import build_symbol_table, parse_scalar

    table = build_symbol_table(['A1', 'A5', 'hbar'], {'B': '2A1 + 2A5'})
    q = parse_scalar('-1 T^(B/2 + hbar)', table)
"""

from .exponent import Exponent, ExponentSymbolTable
from .parsers import (
    ExponentParser,
    ScalarParser,
    area_term,
    build_symbol_table,
    parse_exponent,
    parse_scalar,
)
from .scalar import (
    Scalar,
    exponent_substitute,
    scalar_add,
    scalar_invert_monomial,
    scalar_mul,
)

__all__ = [
    'Exponent',
    'ExponentSymbolTable',
    'ExponentParser',
    'Scalar',
    'ScalarParser',
    'area_term',
    'build_symbol_table',
    'exponent_substitute',
    'parse_exponent',
    'parse_scalar',
    'scalar_add',
    'scalar_invert_monomial',
    'scalar_mul',
]
