"""
checks.py - Ecuaciones A∞ y ecuaciones de pegado

Responsabilidades:
- ainfty_check: Σ (−1)^{ε_i} m_{k1}(…, m_{k2}(…), …) = 0 en cada tupla
- gluing_check: m₁(α)=0, m₂(α,α)=α (módulo m₁(γ)), m_p(α,…,α)=0
"""

from collections.abc import Mapping, Sequence
from itertools import product

from app.reports import Report
from app.utils.logger import get_logger
from config.settings import settings

from .elements import ExtendedElement
from .evaluator import Evaluator
from .structure import StructureConstants

logger = get_logger(__name__)

Pair = tuple[str, str]
Triple = tuple[str, str, str]


def _evaluator(S: StructureConstants | Evaluator) -> Evaluator:
    return S if isinstance(S, Evaluator) else Evaluator(S)


def ainfty_relation(ev: Evaluator, gens: Sequence[str], obj: str | None = None) -> ExtendedElement:
    """
    Lado izquierdo de la ecuación A∞ en (v_1, …, v_n)

    Para n = 0 se indica el objeto; los términos m_0 entran siempre.
    """
    S = ev.constants
    inputs = [ev.bare(g) for g in gens]
    shifted = [S.generator(g).shifted for g in gens]
    objects = ev.objects_of(gens) if gens else [obj or S.objects[0]]
    n = len(gens)
    total = ExtendedElement.zero()
    for k2 in range(n + 1):
        for i in range(n - k2 + 1):
            inner = ev.m(inputs[i : i + k2]) if k2 else ev.m0(objects[i])
            if inner.is_empty:
                continue
            outer_inputs = inputs[:i] + [inner] + inputs[i + k2 :]
            outer = ev.m(outer_inputs)
            sign = -1 if sum(shifted[:i]) % 2 else 1
            total = total + (outer if sign == 1 else -outer)
    return total


def ainfty_check(S: StructureConstants | Evaluator, max_k: int | None = None) -> Report:
    """
    Ecuación A∞ en todas las tuplas componibles de longitud ≤ max_k

    Acepta constantes desnudas o un evaluador (deformado o extendido).
    """
    ev = _evaluator(S)
    bound = max_k or settings.max_tensor_length
    report = Report(title=f'A-infinity equations (n <= {bound})')
    curved = {obj for obj in ev.constants.objects if not ev.m0(obj).is_empty}
    for obj in sorted(curved):
        ev.record(report, 'ainfty', f'n=0 @ {obj}', ainfty_relation(ev, [], obj))
    for gens in ev.constants.composable_tuples(bound):
        subject = f'n={len(gens)} ({", ".join(gens)})'
        ev.record(report, 'ainfty', subject, ainfty_relation(ev, gens))
    logger.info(f'{report.title}: {report.verdict.value} ({report.checked} tuples)')
    return report


# ============================================================================
# PEGADO
# ============================================================================


def _alpha(
    ev: Evaluator, alpha: Mapping[Pair, ExtendedElement], j: str, k: str
) -> ExtendedElement | None:
    if j == k:
        return alpha.get((j, k), ev.unit_element(j))
    return alpha.get((j, k))


def gluing_check(
    ev: Evaluator,
    alpha: Mapping[Pair, ExtendedElement],
    witnesses: Mapping[Triple, ExtendedElement] | None = None,
    max_p: int | None = None,
) -> Report:
    """
    Ecuaciones de pegado para la familia α (α_jj = unidades)

    Usage:
        report = gluing_check(ev, {('L', 'S3'): alpha3, ('S3', 'L'): beta3})
    """
    witnesses = witnesses or {}
    bound = max_p or settings.gluing_max_p
    objects = sorted({o for pair in alpha for o in pair})
    report = Report(title='gluing equations')

    for (j, k), a in sorted(alpha.items()):
        if j != k:
            ev.record(report, 'closed', f'm1(alpha[{j},{k}])', ev.m([a]))

    for j, k, l in product(objects, repeat=3):
        if j == k or k == l:
            continue
        first, second = _alpha(ev, alpha, j, k), _alpha(ev, alpha, k, l)
        if first is None or second is None:
            continue
        third = _alpha(ev, alpha, j, l)
        if third is None:
            continue
        lhs = ev.m([first, second]) - third
        gamma = witnesses.get((j, k, l))
        if gamma is not None:
            lhs = lhs - ev.m([gamma])
        ev.record(report, 'cocycle', f'm2(alpha[{j},{k}], alpha[{k},{l}]) = alpha[{j},{l}]', lhs)

    for p in range(3, bound + 1):
        for chain in product(objects, repeat=p + 1):
            if any(a == b for a, b in zip(chain, chain[1:], strict=False)):
                continue
            inputs = [alpha.get((a, b)) for a, b in zip(chain, chain[1:], strict=False)]
            if any(x is None for x in inputs):
                continue
            ev.record(
                report,
                'higher',
                f'm{p}({", ".join(chain)})',
                ev.m([x for x in inputs if x is not None]),
            )

    logger.info(f'{report.title}: {report.verdict.value} ({report.checked} equations)')
    return report
