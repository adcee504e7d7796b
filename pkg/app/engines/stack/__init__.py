"""
Stack Module

Quiver algebroid stacks: retículo, cartas, transiciones, gerbes,
verificaciones y multiplicaciones M / M^op.

Usage básico:
    from app.engines.stack import check_all_cocycles, mult_M, TensorWord

    report = check_all_cocycles(stack)
    mult_M(stack, TensorWord.of(('1', z1), ('0', z0)))
"""

from .checks import (
    chart_check,
    check_all_cocycles,
    check_all_gerbes,
    check_all_tetrahedra,
    check_gerbe_inverses,
    stack_check_cocycle,
    stack_check_tetrahedron,
)
from .lattice import CoverLattice, RestrictedLattice
from .multiplication import TensorWord, mult_M, mult_Mop
from .restrict import RestrictedStack, restrict_stack, stack_restrict
from .stack import Chart, GerbeTerm, QuiverStack, TransitionData

__all__ = [
    'Chart',
    'CoverLattice',
    'GerbeTerm',
    'QuiverStack',
    'RestrictedLattice',
    'RestrictedStack',
    'TensorWord',
    'TransitionData',
    'chart_check',
    'check_all_cocycles',
    'check_all_gerbes',
    'check_all_tetrahedra',
    'check_gerbe_inverses',
    'mult_M',
    'mult_Mop',
    'restrict_stack',
    'stack_check_cocycle',
    'stack_check_tetrahedron',
    'stack_restrict',
]
