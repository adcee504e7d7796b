"""
completion.py - Completación acotada y pertenencia al ideal

Responsabilidades:
- Orientar diferencias de pares críticos en reglas nuevas (grado acotado)
- Avanzar por rondas, cacheado por presentación y grado máximo
- ideal_member_bounded: MEMBER si nf(x) = 0 tras alguna ronda,
  UNDECIDED(residuo) si no; `confluent` indica que el sistema quedó
  saturado (el residuo es entonces una forma normal única)
"""

from dataclasses import dataclass
from enum import Enum

from app.engines.quiver import Element
from app.reports import Report
from app.utils.exceptions import NotInvertible
from app.utils.logger import get_logger

from .confluence import critical_pairs
from .presentation import AlgebraPresentation, RewriteRule
from .term_order import TermOrder

logger = get_logger(__name__)


class Membership(str, Enum):
    MEMBER = 'MEMBER'
    UNDECIDED = 'UNDECIDED'


@dataclass(frozen=True)
class MembershipResult:
    verdict: Membership
    residual: Element
    rounds: int
    confluent: bool

    @property
    def is_member(self) -> bool:
        return self.verdict == Membership.MEMBER

    @property
    def refuted(self) -> bool:
        """Residuo no nulo en un sistema confluente: x no pertenece al ideal"""
        return not self.is_member and self.confluent


def orient(difference: Element, order: TermOrder, max_degree: int) -> RewriteRule | None:
    """
    Regla lead => -(resto)/coef_lead, o None si no se puede orientar

    None cuando el coeficiente líder no es monomial o el grado excede
    `max_degree`.
    """
    lead, coeff = order.leading(difference)
    if len(lead) > max_degree or lead.is_trivial:
        return None
    try:
        inverse = coeff.invert_monomial()
    except NotInvertible:
        return None
    rest = Element(tuple((w, s) for w, s in difference.terms if w != lead))
    return RewriteRule(lead, (-rest).scale(inverse), origin='completion')


class CompletionState:
    """
    Etapas sucesivas de completación de una presentación

    stages[0] es la presentación original; stages[r] añade las reglas de
    la ronda r. `final` se activa cuando una ronda no aporta reglas.
    """

    def __init__(self, base: AlgebraPresentation, max_degree: int):
        self.max_degree = max_degree
        self.stages: list[AlgebraPresentation] = [base]
        self.final = False
        self.skipped = 0

    @property
    def saturated(self) -> bool:
        return self.final and self.skipped == 0

    @property
    def last_index(self) -> int:
        return len(self.stages) - 1

    def stage(self, r: int) -> AlgebraPresentation:
        while self.last_index < r and not self.final:
            self._advance()
        return self.stages[min(r, self.last_index)]

    def _advance(self) -> None:
        current = self.stages[-1]
        known = {rule.lhs for rule in current.rules}
        new_rules: list[RewriteRule] = []
        skipped = 0
        for pair in critical_pairs(current, 2 * self.max_degree):
            if pair.joinable:
                continue
            rule = orient(pair.difference, current.order, self.max_degree)
            if rule is None:
                skipped += 1
                continue
            if rule.lhs in known:
                continue
            known.add(rule.lhs)
            new_rules.append(rule)
        round_no = self.last_index + 1
        logger.debug(
            f'completion of {current.name} round {round_no}: '
            f'{len(new_rules)} new rules, {skipped} skipped pairs'
        )
        if not new_rules:
            self.final = True
            self.skipped = skipped
            return
        self.stages.append(current.with_rules(new_rules))


def completion_state(P: AlgebraPresentation, max_degree: int) -> CompletionState:
    state = P.completions.get(max_degree)
    if not isinstance(state, CompletionState):
        state = CompletionState(P, max_degree)
        P.completions[max_degree] = state
    return state


def completed_stage(
    P: AlgebraPresentation, max_degree: int, max_rounds: int
) -> tuple[AlgebraPresentation, bool]:
    """Última etapa alcanzable en max_rounds y si el sistema quedó saturado en ella"""
    state = completion_state(P, max_degree)
    stage = state.stage(max_rounds)
    return stage, state.saturated and state.last_index <= max_rounds


def ideal_member_bounded(
    P: AlgebraPresentation, x: Element, max_degree: int, max_rounds: int
) -> MembershipResult:
    """
    Decide (acotadamente) si x pertenece al ideal de relaciones de P

    Usage:
        result = ideal_member_bounded(P, lhs - rhs, 6, 4)
        result.is_member
    """
    state = completion_state(P, max_degree)
    residual = x
    rounds = 0
    for r in range(max_rounds + 1):
        rounds = r
        residual = state.stage(r).normal_form(x)
        if residual.is_zero:
            return MembershipResult(Membership.MEMBER, residual, r, state.saturated)
        if state.final and r >= state.last_index:
            break
    confluent = state.saturated and rounds >= state.last_index
    return MembershipResult(Membership.UNDECIDED, residual, rounds, confluent)


def record_zero(
    report: Report,
    check: str,
    subject: str,
    P: AlgebraPresentation,
    x: Element,
    max_degree: int,
    max_rounds: int,
) -> None:
    """
    Registra en `report` si x = 0 en P

    PASS si nf(x) = 0 o x pertenece al ideal; FAIL si el residuo es una
    forma normal de un sistema confluente; UNDECIDED en otro caso.
    """
    if P.normal_form(x).is_zero:
        report.passed(check, subject)
        return
    result = ideal_member_bounded(P, x, max_degree, max_rounds)
    if result.is_member:
        report.passed(check, subject)
    elif result.confluent:
        report.fail(check, subject, residual=str(result.residual))
    else:
        logger.warning(f'{check} {subject}: undecided after {result.rounds} rounds')
        report.undecided(check, subject, residual=str(result.residual))
