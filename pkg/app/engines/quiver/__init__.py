"""
Quiver Module

Quivers, caminos, elementos del álgebra de caminos y superpotenciales.

Usage básico:
    from app.engines.quiver import Arrow, Quiver, parse_element

    q = Quiver('Q', ['v1', 'v2'], [Arrow('a1', 'v1', 'v2')])
    x = parse_element('T^(hbar) a1', q, table)
"""

from .element import Element, elem_mul, path_compose, with_table
from .parsers import parse_element, parse_path
from .quiver import INVERSE_SUFFIX, Arrow, PathWord, Quiver, inverse_name
from .superpotential import Superpotential, cyclic_derivative, rotate

__all__ = [
    'INVERSE_SUFFIX',
    'Arrow',
    'Element',
    'PathWord',
    'Quiver',
    'Superpotential',
    'cyclic_derivative',
    'elem_mul',
    'inverse_name',
    'parse_element',
    'parse_path',
    'path_compose',
    'rotate',
    'with_table',
]
