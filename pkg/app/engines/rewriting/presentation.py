"""
presentation.py - Presentaciones ℂQ/R como sistemas de reescritura

Responsabilidades:
- RewriteRule orientada (lhs palabra, rhs estrictamente menor)
- AlgebraPresentation: quiver + orden + reglas + registro de inversas
- normal_form: ocurrencia más a la izquierda, regla de menor índice,
  memoizada por palabra
"""

from collections.abc import Iterable
from dataclasses import dataclass

from app.engines.quiver import Element, PathWord, Quiver
from app.engines.quiver.parsers import parse_element
from app.engines.quiver.quiver import inverse_name
from app.engines.scalars import ExponentSymbolTable, Scalar
from app.utils.exceptions import EndpointMismatch, QuiverMismatch, RuleOrientationError
from app.utils.logger import get_logger

from .term_order import TermOrder

logger = get_logger(__name__)

RULE_ORIGINS = ('base', 'unit', 'aux', 'completion')


@dataclass(frozen=True)
class RewriteRule:
    """lhs => rhs"""

    lhs: PathWord
    rhs: Element
    origin: str = 'base'

    def validate(self, order: TermOrder) -> None:
        """
        Raises:
            EndpointMismatch: algún término del rhs con extremos distintos
            RuleOrientationError: algún término del rhs no menor que lhs
        """
        if self.lhs.is_trivial:
            raise RuleOrientationError(f'Rule lhs must be a nontrivial path: {self}')
        lhs_key = order.key(self.lhs)
        for word, _ in self.rhs.terms:
            if word.tail != self.lhs.tail or word.head != self.lhs.head:
                raise EndpointMismatch(f'Rule {self}: term {word} has mismatched endpoints')
            if order.key(word) >= lhs_key:
                raise RuleOrientationError(f'Rule {self}: term {word} is not below {self.lhs}')

    def __str__(self) -> str:
        return f'{self.lhs} => {self.rhs}'


def splice(
    word: PathWord, pos: int, rule: RewriteRule, scalar: Scalar
) -> list[tuple[PathWord, Scalar]]:
    """Sustituye la ocurrencia de rule.lhs en `pos` por rule.rhs"""
    prefix = word.arrows[:pos]
    suffix = word.arrows[pos + len(rule.lhs) :]
    out = []
    for w, s in rule.rhs.terms:
        arrows = prefix + w.arrows + suffix
        if arrows:
            out.append((PathWord(arrows, word.tail, word.head), s * scalar))
        else:
            out.append((PathWord.trivial(word.tail), s * scalar))
    return out


class AlgebraPresentation:
    """
    Álgebra de caminos con relaciones orientadas (posiblemente localizada)

    Inmutable tras la construcción; sólo las cachés (formas normales,
    completaciones) crecen.

    Usage:
        P = AlgebraPresentation('A3', quiver, order, rules)
        P.normal_form(P.parse('z3 x3'))  # T^(3*hbar) x3 z3
    """

    def __init__(
        self,
        name: str,
        quiver: Quiver,
        order: TermOrder,
        rules: Iterable[RewriteRule] = (),
        inverses: Iterable[str] = (),
        table: ExponentSymbolTable | None = None,
    ):
        self.name = name
        self.quiver = quiver
        self.order = order
        self.rules: tuple[RewriteRule, ...] = tuple(rules)
        self.inverses: tuple[str, ...] = tuple(inverses)
        self.table = table
        self._index: dict[str, list[int]] = {}
        self._nf_cache: dict[PathWord, Element] = {}
        self.completions: dict[int, object] = {}
        self._validate()
        self._build_index()

    # ========================================================================
    # VALIDACIÓN
    # ========================================================================

    def _validate(self) -> None:
        if not self.order.covers(self.quiver.arrow_names):
            missing = [a for a in self.quiver.arrow_names if not self.order.covers([a])]
            raise QuiverMismatch(f'Term order of {self.name} misses arrows {missing}')
        for rule in self.rules:
            if not self.quiver.contains_word(rule.lhs):
                raise QuiverMismatch(f'Rule {rule} not over quiver {self.quiver.name}')
            rule.rhs.check_quiver(self.quiver)
            rule.validate(self.order)
        lhs_set = {rule.lhs.arrows for rule in self.rules}
        for name in self.inverses:
            inverse = inverse_name(name)
            if not self.quiver.has_arrow(name) or not self.quiver.has_arrow(inverse):
                raise QuiverMismatch(f'Inverse pair {name}/{inverse} not in {self.quiver.name}')
            if (name, inverse) not in lhs_set or (inverse, name) not in lhs_set:
                raise QuiverMismatch(f'Missing unit rules for inverse pair {name}/{inverse}')

    def _build_index(self) -> None:
        for i, rule in enumerate(self.rules):
            self._index.setdefault(rule.lhs.arrows[0], []).append(i)

    # ========================================================================
    # FORMA NORMAL
    # ========================================================================

    def find_redex(self, word: PathWord) -> tuple[int, RewriteRule] | None:
        """(posición, regla) de la ocurrencia más a la izquierda, regla de menor índice"""
        arrows = word.arrows
        for pos, name in enumerate(arrows):
            for i in self._index.get(name, ()):
                lhs = self.rules[i].lhs.arrows
                if arrows[pos : pos + len(lhs)] == lhs:
                    return pos, self.rules[i]
        return None

    def reduce_word(self, word: PathWord) -> Element:
        cached = self._nf_cache.get(word)
        if cached is not None:
            return cached
        redex = self.find_redex(word)
        if redex is None:
            result = Element.of_word(word)
        else:
            pos, rule = redex
            terms: list[tuple[PathWord, Scalar]] = []
            for w, s in splice(word, pos, rule, Scalar.one()):
                terms.extend((w2, s2 * s) for w2, s2 in self.reduce_word(w).terms)
            result = Element.from_terms(terms)
        self._nf_cache[word] = result
        return result

    def normal_form(self, x: Element) -> Element:
        if x.is_zero:
            return x
        return x.map_words(self.reduce_word)

    def is_normal(self, word: PathWord) -> bool:
        return self.find_redex(word) is None

    def equal(self, x: Element, y: Element) -> bool:
        return self.normal_form(x - y).is_zero

    # ========================================================================
    # UTILIDADES
    # ========================================================================

    @property
    def max_lhs_length(self) -> int:
        return max((len(r.lhs) for r in self.rules), default=0)

    def unit(self) -> Element:
        return Element.unit(self.quiver)

    def parse(self, text: str) -> Element:
        return parse_element(text, self.quiver, self.table)

    def with_rules(
        self, rules: Iterable[RewriteRule], name: str | None = None
    ) -> 'AlgebraPresentation':
        """Copia con reglas añadidas al final (índices de las existentes se conservan)"""
        return AlgebraPresentation(
            name or self.name,
            self.quiver,
            self.order,
            self.rules + tuple(rules),
            self.inverses,
            self.table,
        )

    def __repr__(self) -> str:
        return (
            f'AlgebraPresentation({self.name!r}, {len(self.quiver.arrows)} arrows, '
            f'{len(self.rules)} rules, inverses={list(self.inverses)})'
        )


def normal_form(P: AlgebraPresentation, x: Element) -> Element:
    return P.normal_form(x)
