"""
confluence.py - Pares críticos y confluencia local

Responsabilidades:
- Enumerar solapamientos sufijo/prefijo e inclusiones entre lados izquierdos
- Reducir ambas resoluciones y reportar los pares no unibles
"""

from collections.abc import Iterator
from dataclasses import dataclass

from app.engines.quiver import Element, PathWord
from app.engines.scalars import Scalar
from app.reports import Report
from app.utils.logger import get_logger

from .presentation import AlgebraPresentation, RewriteRule, splice

logger = get_logger(__name__)


@dataclass(frozen=True)
class CriticalPair:
    """Palabra con dos reescrituras posibles y sus formas normales"""

    word: PathWord
    left_rule: int
    right_rule: int
    kind: str
    left: Element
    right: Element

    @property
    def joinable(self) -> bool:
        return self.left == self.right

    @property
    def difference(self) -> Element:
        return self.left - self.right

    def describe(self) -> str:
        return f'{self.word} [{self.kind} rules {self.left_rule},{self.right_rule}]'


def _resolve(word: PathWord, pos: int, rule: RewriteRule) -> Element:
    return Element.from_terms(splice(word, pos, rule, Scalar.one()))


def enumerate_overlaps(
    P: AlgebraPresentation, max_len: int | None = None
) -> Iterator[tuple[PathWord, int, int, str, Element, Element]]:
    """
    Genera (palabra, i, j, tipo, resolución_i, resolución_j) sin reducir

    Solapamiento: sufijo propio de lhs_i = prefijo propio de lhs_j.
    Inclusión: lhs_j aparece dentro de lhs_i (i != j).
    """
    rules = P.rules
    for i, r1 in enumerate(rules):
        a = r1.lhs.arrows
        for j, r2 in enumerate(rules):
            b = r2.lhs.arrows
            for k in range(1, min(len(a), len(b))):
                if a[-k:] != b[:k]:
                    continue
                arrows = a + b[k:]
                if max_len is not None and len(arrows) > max_len:
                    continue
                word = PathWord(arrows, r2.lhs.tail, r1.lhs.head)
                yield word, i, j, 'overlap', _resolve(word, 0, r1), _resolve(word, len(a) - k, r2)
            if i == j or len(b) > len(a):
                continue
            if len(b) == len(a) and j < i:
                continue
            if max_len is not None and len(a) > max_len:
                continue
            for pos in r1.lhs.occurrences(b):
                left = _resolve(r1.lhs, 0, r1)
                yield r1.lhs, i, j, 'inclusion', left, _resolve(r1.lhs, pos, r2)


def critical_pairs(P: AlgebraPresentation, max_len: int | None = None) -> list[CriticalPair]:
    pairs = []
    for word, i, j, kind, left, right in enumerate_overlaps(P, max_len):
        pairs.append(CriticalPair(word, i, j, kind, P.normal_form(left), P.normal_form(right)))
    return pairs


def check_local_confluence(P: AlgebraPresentation, max_len: int) -> Report:
    """Reporta cada par crítico no unible con ambas formas normales"""
    report = Report(title=f'local confluence of {P.name} (max_len={max_len})')
    for pair in critical_pairs(P, max_len):
        if pair.joinable:
            report.passed('confluence', pair.describe())
        else:
            report.fail(
                'confluence',
                pair.describe(),
                residual=str(pair.difference),
                detail=f'{pair.left} | {pair.right}',
            )
    logger.info(f'{report.title}: {report.checked} pairs, {len(report.failures)} not joinable')
    return report
