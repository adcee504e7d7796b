"""
Rewriting Module

Presentaciones de álgebras cociente como sistemas de reescritura.

Usage básico:
    from app.engines.rewriting import TermOrder, jacobi_presentation, localize

    P = jacobi_presentation(quiver, phi, TermOrder(('x3', 'z3', 'w3')))
    P.normal_form(P.parse('z3 x3'))
"""

from .completion import (
    CompletionState,
    Membership,
    MembershipResult,
    completed_stage,
    completion_state,
    ideal_member_bounded,
    orient,
    record_zero,
)
from .confluence import CriticalPair, check_local_confluence, critical_pairs, enumerate_overlaps
from .jacobi import jacobi_presentation, orient_relation
from .localize import localize, localized_quiver, unit_rules
from .presentation import AlgebraPresentation, RewriteRule, normal_form, splice
from .term_order import TermOrder

__all__ = [
    'AlgebraPresentation',
    'CompletionState',
    'CriticalPair',
    'Membership',
    'MembershipResult',
    'RewriteRule',
    'TermOrder',
    'check_local_confluence',
    'completed_stage',
    'completion_state',
    'critical_pairs',
    'enumerate_overlaps',
    'ideal_member_bounded',
    'jacobi_presentation',
    'localize',
    'localized_quiver',
    'normal_form',
    'orient',
    'orient_relation',
    'record_zero',
    'splice',
    'unit_rules',
]
