"""
term_order.py - Orden de términos sobre palabras de caminos

Grado primero, luego lexicográfico por la izquierda según la precedencia
de flechas. Es un buen orden, así que la reescritura termina.
"""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from app.engines.quiver import Element, PathWord
from app.engines.quiver.quiver import inverse_name
from app.engines.scalars import Scalar
from app.utils.exceptions import QuiverMismatch


@dataclass(frozen=True)
class TermOrder:
    """
    Orden deglex con precedencia explícita

    Usage:
        order = TermOrder(('x3', 'z3', 'w3'))
        order.greater(q.word(['z3', 'x3']), q.word(['x3', 'z3']))  # True
    """

    precedence: tuple[str, ...]
    _ranks: Mapping[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(set(self.precedence)) != len(self.precedence):
            raise QuiverMismatch(f'Duplicate arrow in term order: {self.precedence}')
        object.__setattr__(self, '_ranks', {name: i for i, name in enumerate(self.precedence)})

    def rank(self, arrow: str) -> int:
        try:
            return self._ranks[arrow]
        except KeyError:
            raise QuiverMismatch(f'Arrow {arrow} missing from term order') from None

    def covers(self, arrows: Iterable[str]) -> bool:
        return all(a in self._ranks for a in arrows)

    def key(self, word: PathWord) -> tuple:
        return (len(word), tuple(self.rank(a) for a in word.arrows), word.tail, word.head)

    def greater(self, a: PathWord, b: PathWord) -> bool:
        return self.key(a) > self.key(b)

    def leading(self, x: Element) -> tuple[PathWord, Scalar]:
        """Término líder (palabra máxima) de un elemento no nulo"""
        if x.is_zero:
            raise ValueError('zero element has no leading term')
        return max(x.terms, key=lambda t: self.key(t[0]))

    def with_inverses(self, arrows: Iterable[str]) -> 'TermOrder':
        """Inserta cada γ⁻¹ justo antes de γ"""
        wanted = set(arrows)
        out: list[str] = []
        for name in self.precedence:
            inverse = inverse_name(name)
            if name in wanted and inverse not in self._ranks:
                out.append(inverse)
            out.append(name)
        return TermOrder(tuple(out))
