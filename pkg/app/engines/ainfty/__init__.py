"""
A-infinity Module

Constantes de estructura A∞ con coeficientes en álgebras de quivers:
deformación por b, ideal de obstrucción, extensión sobre un stack,
ecuaciones de pegado y functor espejo.

Usage básico:
    from app.engines.ainfty import extend_stack, gluing_check

    ev = extend_stack(S, stack, {'L': '0', 'S3': '3'}, b)
    report = gluing_check(ev, {('L', 'S3'): alpha, ('S3', 'L'): beta})
"""

from .checks import ainfty_check, ainfty_relation, gluing_check
from .elements import (
    POINT,
    ExtendedElement,
    ExtTerm,
    assemble,
    collapse_single,
    concat_op,
    r_move,
)
from .evaluator import (
    Deformation,
    Evaluator,
    bar_hat_m,
    deform,
    extend_stack,
    hat_m,
    obstruction_ideal,
    obstruction_presentation,
    potential,
)
from .functor import MirrorFunctor, mirror_functor
from .structure import GeneratorSpec, StructureConstants

__all__ = [
    'POINT',
    'Deformation',
    'Evaluator',
    'ExtTerm',
    'ExtendedElement',
    'GeneratorSpec',
    'MirrorFunctor',
    'StructureConstants',
    'ainfty_check',
    'ainfty_relation',
    'assemble',
    'bar_hat_m',
    'collapse_single',
    'concat_op',
    'deform',
    'extend_stack',
    'gluing_check',
    'hat_m',
    'mirror_functor',
    'obstruction_ideal',
    'obstruction_presentation',
    'potential',
    'r_move',
]
