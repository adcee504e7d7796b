"""
multiplication.py - Multiplicaciones M y M^op sobre palabras tensoriales

M(z^(k) ⊗ … ⊗ z^(0)) = G_0k(z^(k)) c⁻¹_{0,k-1,k}(t_{z^(k)}) … G_01(z^(1)) z^(0)
M^op(z^(k) ⊗ … ⊗ z^(0)) = z^(0) G_01(z^(1)) c_{012}(h_{z^(2)}) … c_{0,k-1,k}(h_{z^(k)}) G_0k(z^(k))

Las ranuras no homogéneas se expanden término a término (t y h se leen
de cada palabra).
"""

from collections.abc import Iterable
from dataclasses import dataclass

from app.engines.quiver import Element
from app.utils.exceptions import ChartMismatch

from .stack import QuiverStack


@dataclass(frozen=True)
class TensorWord:
    """
    z^(k) ⊗ … ⊗ z^(0) escrito de izquierda a derecha; la ranura más a la
    derecha es la carta de aterrizaje

    Usage:
        w = TensorWord((('3', w3), ('0', e2)))
        mult_M(X, w)
    """

    slots: tuple[tuple[str, Element], ...]

    def __post_init__(self) -> None:
        if not self.slots:
            raise ChartMismatch('TensorWord needs at least one slot')

    @classmethod
    def of(cls, *slots: tuple[str, Element]) -> 'TensorWord':
        return cls(tuple(slots))

    @property
    def charts(self) -> tuple[str, ...]:
        return tuple(c for c, _ in self.slots)

    @property
    def landing(self) -> str:
        return self.slots[-1][0]

    def __len__(self) -> int:
        return len(self.slots)

    def __add__(self, other: 'TensorWord') -> 'TensorWord':
        return TensorWord(self.slots + other.slots)

    def replace(self, index: int, element: Element) -> 'TensorWord':
        slots = list(self.slots)
        slots[index] = (slots[index][0], element)
        return TensorWord(tuple(slots))

    def __str__(self) -> str:
        return ' ⊗ '.join(f'[{c}]({e})' for c, e in self.slots)


def _overlap(X: QuiverStack, word: TensorWord, overlap: Iterable[str] | None) -> frozenset[str]:
    return X.lattice.require(set(word.charts) | set(overlap or ()))


def _check_slots(X: QuiverStack, word: TensorWord, idx: frozenset[str]) -> None:
    for chart, element in word.slots:
        element.check_quiver(X.presentation(chart, idx).quiver)


def mult_M(X: QuiverStack, word: TensorWord, overlap: Iterable[str] | None = None) -> Element:
    """
    Colapsa la palabra en la carta de aterrizaje

    Raises:
        OverlapMissing: las cartas de la palabra no se intersecan
    """
    idx = _overlap(X, word, overlap)
    _check_slots(X, word, idx)
    charts = list(reversed(word.charts))
    values = list(reversed([e for _, e in word.slots]))
    i0 = charts[0]
    target = X.presentation(i0, idx)
    acc = target.normal_form(values[0])
    for j in range(1, len(values)):
        G = X.transition(i0, charts[j], idx)
        terms = Element.zero()
        for path, scalar in values[j].terms:
            factor = G.apply(Element.of_word(path, scalar))
            if j >= 2:
                factor = factor * X.gerbe(i0, charts[j - 1], charts[j], path.tail, idx).inverse
            terms = terms + factor * acc
        acc = target.normal_form(terms)
    return acc


def mult_Mop(X: QuiverStack, word: TensorWord, overlap: Iterable[str] | None = None) -> Element:
    idx = _overlap(X, word, overlap)
    _check_slots(X, word, idx)
    charts = list(reversed(word.charts))
    values = list(reversed([e for _, e in word.slots]))
    i0 = charts[0]
    target = X.presentation(i0, idx)
    acc = target.normal_form(values[0])
    for j in range(1, len(values)):
        G = X.transition(i0, charts[j], idx)
        terms = Element.zero()
        for path, scalar in values[j].terms:
            factor = G.apply(Element.of_word(path, scalar))
            if j >= 2:
                factor = X.gerbe(i0, charts[j - 1], charts[j], path.head, idx).value * factor
            terms = terms + acc * factor
        acc = target.normal_form(terms)
    return acc
