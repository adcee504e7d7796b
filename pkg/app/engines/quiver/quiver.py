"""
quiver.py - Quivers y palabras de caminos

Responsabilidades:
- Validar vértices y flechas (nombres únicos, extremos existentes)
- Representar caminos como palabras escritas de izquierda a derecha
  (la flecha más a la derecha actúa primero)
- Composición fibrada de caminos
"""

from collections.abc import Iterable
from dataclasses import dataclass

from app.utils.exceptions import EndpointMismatch, QuiverMismatch

INVERSE_SUFFIX = '^-1'


def inverse_name(arrow: str) -> str:
    """b1 <-> b1^-1"""
    if arrow.endswith(INVERSE_SUFFIX):
        return arrow[: -len(INVERSE_SUFFIX)]
    return arrow + INVERSE_SUFFIX


@dataclass(frozen=True)
class Arrow:
    name: str
    tail: str
    head: str


class Quiver:
    """
    Quiver finito con vértices y flechas nombradas

    Usage:
        q = Quiver('Q0', ['v1', 'v2'], [Arrow('a1', 'v1', 'v2')])
        q.arrow('a1').head  # 'v2'
    """

    def __init__(self, name: str, vertices: Iterable[str], arrows: Iterable[Arrow]):
        self.name = name
        self.vertices: tuple[str, ...] = tuple(vertices)
        self.arrows: tuple[Arrow, ...] = tuple(arrows)
        self._by_name: dict[str, Arrow] = {}
        self._validate()

    def _validate(self) -> None:
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverMismatch(f'Duplicate vertices in quiver {self.name}')
        known = set(self.vertices)
        for arrow in self.arrows:
            if arrow.name in self._by_name:
                raise QuiverMismatch(f'Duplicate arrow {arrow.name} in quiver {self.name}')
            if arrow.tail not in known or arrow.head not in known:
                raise EndpointMismatch(
                    f'Arrow {arrow.name} references unknown vertex in quiver {self.name}'
                )
            self._by_name[arrow.name] = arrow

    def arrow(self, name: str) -> Arrow:
        try:
            return self._by_name[name]
        except KeyError:
            raise QuiverMismatch(f'Arrow {name} not in quiver {self.name}') from None

    def has_arrow(self, name: str) -> bool:
        return name in self._by_name

    def has_vertex(self, vertex: str) -> bool:
        return vertex in self.vertices

    @property
    def arrow_names(self) -> tuple[str, ...]:
        return tuple(a.name for a in self.arrows)

    def with_inverses(self, names: Iterable[str], name: str | None = None) -> 'Quiver':
        """Quiver con flechas inversas añadidas (localización)"""
        extra = []
        for arrow_name in names:
            arrow = self.arrow(arrow_name)
            inverse = inverse_name(arrow_name)
            if not self.has_arrow(inverse):
                extra.append(Arrow(inverse, arrow.head, arrow.tail))
        return Quiver(name or self.name, self.vertices, self.arrows + tuple(extra))

    def word(self, names: Iterable[str]) -> 'PathWord':
        """Construye y valida una palabra de caminos"""
        arrows = [self.arrow(n) for n in names]
        if not arrows:
            raise EndpointMismatch('Use PathWord.trivial for empty paths')
        for left, right in zip(arrows, arrows[1:], strict=False):
            if left.tail != right.head:
                raise EndpointMismatch(f'Arrows {left.name} {right.name} are not composable')
        return PathWord(tuple(a.name for a in arrows), arrows[-1].tail, arrows[0].head)

    def contains_word(self, word: 'PathWord') -> bool:
        if word.is_trivial:
            return self.has_vertex(word.tail)
        return all(self.has_arrow(a) for a in word.arrows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Quiver):
            return NotImplemented
        return self.vertices == other.vertices and set(self.arrows) == set(other.arrows)

    def __hash__(self) -> int:
        return hash((self.vertices, frozenset(self.arrows)))

    def __repr__(self) -> str:
        return f'Quiver({self.name!r}, {len(self.vertices)} vertices, {len(self.arrows)} arrows)'


@dataclass(frozen=True)
class PathWord:
    """
    Camino a_1 a_2 … a_n escrito como en el papel: a_n actúa primero

    Invariante: tail(a_i) == head(a_{i+1}); tail = tail(a_n), head = head(a_1).
    El camino trivial e_v tiene `arrows == ()` y tail == head == v.
    """

    arrows: tuple[str, ...]
    tail: str
    head: str

    @classmethod
    def trivial(cls, vertex: str) -> 'PathWord':
        return cls((), vertex, vertex)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    def __len__(self) -> int:
        return len(self.arrows)

    def compose(self, other: 'PathWord') -> 'PathWord | None':
        """self · other (other actúa primero); None si los extremos no casan"""
        if other.head != self.tail:
            return None
        return PathWord(self.arrows + other.arrows, other.tail, self.head)

    def occurrences(self, sub: tuple[str, ...]) -> list[int]:
        n = len(sub)
        return [i for i in range(len(self.arrows) - n + 1) if self.arrows[i : i + n] == sub]

    def sort_key(self) -> tuple:
        return (len(self.arrows), self.arrows, self.tail, self.head)

    def __str__(self) -> str:
        if self.is_trivial:
            return f'e({self.tail})'
        return ' '.join(self.arrows)
