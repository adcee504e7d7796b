"""
Twisted Module

Módulos libres graduados, celdas sándwich, cocadenas de Čech y
complejos torcidos sobre quiver stacks.

Usage básico:
    from app.engines.twisted import TwistedComplex, mc_check

    report = mc_check(TwistedComplex('U', stack, module, mc))
"""

from .cells import (
    BIMODULE,
    SANDWICH,
    BundleTerm,
    MorphismCell,
    SandwichTerm,
    TensorSum,
    Term,
    bundle_value,
    cell_apply,
    cell_cup,
    identity_cell,
    sandwich_value,
)
from .checks import (
    TwistedComplex,
    check_cell_degrees,
    cochain_report,
    mc_check,
    morphism_diff,
    record_tensor_zero,
)
from .cochains import Cochain, cech_diff, cochain_product, identity_cochain
from .modules import Generator, GradedFreeModule

__all__ = [
    'BIMODULE',
    'SANDWICH',
    'BundleTerm',
    'Cochain',
    'Generator',
    'GradedFreeModule',
    'MorphismCell',
    'SandwichTerm',
    'TensorSum',
    'Term',
    'TwistedComplex',
    'bundle_value',
    'cech_diff',
    'cell_apply',
    'cell_cup',
    'check_cell_degrees',
    'cochain_product',
    'cochain_report',
    'identity_cell',
    'identity_cochain',
    'mc_check',
    'morphism_diff',
    'record_tensor_zero',
    'sandwich_value',
]
