"""
elements.py - Elementos extendidos: palabras de coeficientes ⊗ generador

Responsabilidades:
- ExtTerm: escalar · (palabra tensorial) ⊗ generador [⊗ palabra op]
- assemble: ensamblado de las palabras de las entradas de un m_k
- r_move: mueve la palabra op a la izquierda (R)
- Colapso por M (o producto directo en una sola carta)
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from app.engines.quiver import Element
from app.engines.rewriting import AlgebraPresentation
from app.engines.scalars import Scalar
from app.engines.stack import QuiverStack, TensorWord, mult_M
from app.utils.exceptions import ChartMismatch

# Coeficientes de objetos sin carta viven en un punto
POINT = 'pt'


@dataclass(frozen=True)
class ExtTerm:
    scalar: Scalar
    word: TensorWord | None
    generator: str
    op: TensorWord | None = None

    def scaled(self, scalar: Scalar | int) -> 'ExtTerm':
        value = scalar if isinstance(scalar, Scalar) else Scalar.rational(scalar)
        return ExtTerm(self.scalar * value, self.word, self.generator, self.op)

    def __str__(self) -> str:
        coefficient = '' if self.word is None else f'({self.word}) '
        op = '' if self.op is None else f' • ({self.op})'
        return f'{self.scalar} {coefficient}{self.generator}{op}'


@dataclass(frozen=True)
class ExtendedElement:
    """
    Suma formal de ExtTerm (sin colapsar)

    Usage:
        alpha = ExtendedElement.of(ExtTerm(one, TensorWord.of(('3', e), ('0', e2)), 'Q'))
        beta = alpha + alpha.scaled(-1)
    """

    terms: tuple[ExtTerm, ...] = ()

    @classmethod
    def of(cls, *terms: ExtTerm) -> 'ExtendedElement':
        return cls(tuple(terms))

    @classmethod
    def zero(cls) -> 'ExtendedElement':
        return cls()

    @property
    def is_empty(self) -> bool:
        return not self.terms

    @property
    def generators(self) -> frozenset[str]:
        return frozenset(t.generator for t in self.terms)

    @property
    def charts(self) -> frozenset[str]:
        return frozenset(c for t in self.terms if t.word is not None for c in t.word.charts)

    def __add__(self, other: 'ExtendedElement') -> 'ExtendedElement':
        return ExtendedElement(self.terms + other.terms)

    def scaled(self, scalar: Scalar | int) -> 'ExtendedElement':
        return ExtendedElement(tuple(t.scaled(scalar) for t in self.terms))

    def __neg__(self) -> 'ExtendedElement':
        return self.scaled(-1)

    def __sub__(self, other: 'ExtendedElement') -> 'ExtendedElement':
        return self + (-other)

    def __str__(self) -> str:
        return ' + '.join(str(t) for t in self.terms) or '0'


# ============================================================================
# ENSAMBLADO
# ============================================================================


def assemble(
    words: Sequence[TensorWord | None], head: tuple[str, str] | None = None
) -> TensorWord | None:
    """
    Concatena las palabras de las entradas de m_k (en orden de entrada)

    La ranura derecha de cada entrada multiplica por la izquierda a la
    ranura en curso. Las entradas de una ranura cierran la ranura; las de
    dos o más empujan su interior y abren la siguiente con su ranura
    izquierda. Si al final no queda ranura abierta se rellena con e_head
    en la carta `head = (carta, vértice)`.

    Raises:
        ChartMismatch: ranuras contiguas en cartas distintas
    """
    out: list[tuple[str, Element]] = []
    current: tuple[str, Element] | None = None
    for word in words:
        if word is None:
            continue
        chart, rightmost = word.slots[-1]
        if current is not None:
            if current[0] != chart:
                raise ChartMismatch(f'Cannot glue a slot of chart {chart} onto chart {current[0]}')
            rightmost = rightmost * current[1]
        out.append((chart, rightmost))
        if len(word) == 1:
            current = None
            continue
        out.extend(reversed(word.slots[1:-1]))
        current = word.slots[0]
    if current is not None:
        out.append(current)
    elif head is not None:
        out.append((head[0], Element.idempotent(head[1])))
    if not out:
        return None
    return TensorWord(tuple(reversed(out)))


def concat_op(words: Iterable[TensorWord | None]) -> TensorWord | None:
    """Las palabras op se concatenan en orden de entrada"""
    slots: tuple[tuple[str, Element], ...] = ()
    for word in words:
        if word is not None:
            slots = slots + word.slots
    return TensorWord(slots) if slots else None


def r_move(left: TensorWord, op: TensorWord | None) -> TensorWord:
    """
    R: la palabra op pasa a la izquierda; su última ranura multiplica a
    la primera de `left`

    Raises:
        ChartMismatch: cartas incompatibles en la costura
    """
    if op is None:
        return left
    chart, last = op.slots[-1]
    first_chart, first = left.slots[0]
    if chart != first_chart:
        raise ChartMismatch(f'R cannot join chart {chart} with chart {first_chart}')
    return TensorWord(op.slots[:-1] + ((chart, last * first),) + left.slots[1:])


# ============================================================================
# COLAPSO
# ============================================================================


def collapse_single(word: TensorWord, algebra: AlgebraPresentation) -> Element:
    """Producto z^(k)⋯z^(0) cuando todas las ranuras están en la misma carta"""
    if len(set(word.charts)) > 1:
        raise ChartMismatch(f'{word} spans several charts; a stack is needed to collapse it')
    acc = word.slots[-1][1]
    for _, element in reversed(word.slots[:-1]):
        acc = algebra.normal_form(element * acc)
    return algebra.normal_form(acc)


def collapse_word(
    word: TensorWord | None,
    scalar: Scalar,
    stack: QuiverStack | None = None,
    algebra: AlgebraPresentation | None = None,
    overlap: Iterable[str] | None = None,
) -> Element:
    if word is None:
        return Element.idempotent(POINT, scalar)
    if stack is not None:
        return mult_M(stack, word, overlap).scale(scalar)
    if algebra is None:
        raise ChartMismatch('Collapsing a coefficient word needs a stack or an algebra')
    return collapse_single(word, algebra).scale(scalar)
