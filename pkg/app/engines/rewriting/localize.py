"""
localize.py - Localización en un conjunto de flechas

Añade γ⁻¹ (head γ → tail γ) por cada flecha, las reglas de unidad
γγ⁻¹ → e_{head γ}, γ⁻¹γ → e_{tail γ}, y las reglas auxiliares del
dataset. Cada regla auxiliar se valida (pertenencia al ideal generado
por las reglas ya aceptadas) antes de instalarse.
"""

from collections.abc import Iterable

from app.engines.quiver import Element, PathWord, Quiver
from app.engines.quiver.quiver import inverse_name
from app.utils.exceptions import AuxRuleRejected, QuiverMismatch
from app.utils.logger import get_logger

from .completion import ideal_member_bounded
from .presentation import AlgebraPresentation, RewriteRule
from .term_order import TermOrder

logger = get_logger(__name__)


def unit_rules(P: AlgebraPresentation, arrows: Iterable[str]) -> list[RewriteRule]:
    rules = []
    for name in arrows:
        arrow = P.quiver.arrow(name)
        inverse = inverse_name(name)
        rules.append(
            RewriteRule(
                PathWord((name, inverse), arrow.head, arrow.head),
                Element.idempotent(arrow.head),
                origin='unit',
            )
        )
        rules.append(
            RewriteRule(
                PathWord((inverse, name), arrow.tail, arrow.tail),
                Element.idempotent(arrow.tail),
                origin='unit',
            )
        )
    return rules


def localize(
    P: AlgebraPresentation,
    arrows: Iterable[str],
    aux_rules: Iterable[RewriteRule] = (),
    order: TermOrder | None = None,
    name: str | None = None,
    max_degree: int = 6,
    max_rounds: int = 4,
) -> AlgebraPresentation:
    """
    Localiza P en `arrows`

    `aux_rules` deben construirse sobre el quiver localizado (ver
    `localized_quiver`). Con arrows vacío y sin auxiliares devuelve P.

    Raises:
        QuiverMismatch: flecha a invertir ausente de P
        AuxRuleRejected: regla auxiliar que no reduce a 0 (lleva el residuo)
    """
    wanted = tuple(a for a in dict.fromkeys(arrows) if a not in P.inverses)
    aux = list(aux_rules)
    if not wanted and not aux:
        return P
    for arrow in wanted:
        if not P.quiver.has_arrow(arrow):
            raise QuiverMismatch(f'Cannot localize {P.name} at unknown arrow {arrow}')

    quiver = P.quiver.with_inverses(wanted, name=name)
    new_order = order or P.order.with_inverses(wanted)
    base = AlgebraPresentation(
        name or f'{P.name}[{",".join(wanted)}]^-1',
        quiver,
        new_order,
        P.rules + tuple(unit_rules(P, wanted)),
        P.inverses + wanted,
        P.table,
    )

    accepted: list[RewriteRule] = []
    current = base
    for rule in aux:
        rule = RewriteRule(rule.lhs, rule.rhs, origin='aux')
        rule.validate(new_order)
        relation = Element.of_word(rule.lhs) - rule.rhs
        # las reglas aceptadas ya están en el ideal de `base`
        verdict = ideal_member_bounded(current, relation, max_degree, max_rounds)
        if not verdict.is_member:
            logger.warning(f'Rejected auxiliary rule {rule} in {base.name}')
            raise AuxRuleRejected(rule, verdict.residual)
        accepted.append(rule)
        current = base.with_rules(accepted)
    logger.debug(f'Localized {P.name} at {list(wanted)}: {len(accepted)} auxiliary rules')
    return current


def localized_quiver(P: AlgebraPresentation, arrows: Iterable[str]) -> Quiver:
    """Quiver sobre el que se escriben las reglas auxiliares"""
    return P.quiver.with_inverses(arrows)
