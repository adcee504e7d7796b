"""
superpotential.py - Superpotenciales y derivadas cíclicas

Responsabilidades:
- Validar que cada término sea un ciclo (head == tail)
- Derivada cíclica ∂_a Φ (rotar la ocurrencia de a al frente y borrarla)
"""

from dataclasses import dataclass

from app.engines.scalars import Scalar
from app.utils.exceptions import EndpointMismatch

from .element import Element
from .quiver import Arrow, PathWord, Quiver


@dataclass(frozen=True)
class Superpotential:
    """
    Φ = Σ s·w con w ciclos considerados módulo rotación

    Usage:
        phi = Superpotential.from_element(parse_element('y1 x1 w1 - T^(-3hbar) x1 y1 w1', q, t))
        cyclic_derivative(phi, q.arrow('w1'))
    """

    terms: tuple[tuple[PathWord, Scalar], ...]

    def __post_init__(self) -> None:
        for word, _ in self.terms:
            if word.is_trivial or word.head != word.tail:
                raise EndpointMismatch(f'Superpotential term {word} is not a cycle')

    @classmethod
    def from_element(cls, element: Element) -> 'Superpotential':
        return cls(element.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms


def rotate(word: PathWord, index: int, quiver: Quiver) -> PathWord:
    """Rota un ciclo para que la flecha en `index` quede a la izquierda"""
    if word.head != word.tail:
        raise EndpointMismatch(f'{word} is not a cycle')
    return quiver.word(word.arrows[index:] + word.arrows[:index])


def cyclic_derivative(phi: Superpotential, arrow: Arrow) -> Element:
    """
    ∂_a Φ: para cada ocurrencia i de a en w, w[i+1:] + w[:i]

    El resultado vive en e_{t(a)}·ΛQ·e_{h(a)}; un ciclo igual a `a`
    aporta e_{t(a)}.
    """
    out: list[tuple[PathWord, Scalar]] = []
    for word, scalar in phi.terms:
        for i, name in enumerate(word.arrows):
            if name != arrow.name:
                continue
            rest = word.arrows[i + 1 :] + word.arrows[:i]
            if rest:
                out.append((PathWord(rest, arrow.head, arrow.tail), scalar))
            else:
                out.append((PathWord.trivial(arrow.tail), scalar))
    return Element.from_terms(out)
