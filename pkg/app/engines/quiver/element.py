"""
element.py - Elementos del álgebra de caminos ΛQ

Responsabilidades:
- Combinaciones lineales finitas de palabras con coeficientes Scalar
- Producto fibrado bilineal (los productos con extremos incompatibles son 0)
- Utilidades de tipado: heads/tails por término, proyección a e_w·x·e_v
"""

from collections.abc import Callable, Iterable
from dataclasses import dataclass
from fractions import Fraction

from app.engines.scalars import ExponentSymbolTable, Scalar
from app.utils.exceptions import QuiverMismatch

from .quiver import PathWord, Quiver


@dataclass(frozen=True)
class Element:
    """
    Elemento Σ s·w con palabras distintas y escalares no nulos

    Usage:
        x = Element.of_word(q.word(['b1', 'b3']))
        y = x * Element.idempotent('v3')  # == x
    """

    terms: tuple[tuple[PathWord, Scalar], ...] = ()

    # ========================================================================
    # CONSTRUCTORES
    # ========================================================================

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[PathWord, Scalar]]) -> 'Element':
        collected: dict[PathWord, Scalar] = {}
        for word, scalar in terms:
            if word in collected:
                collected[word] = collected[word] + scalar
            else:
                collected[word] = scalar
        normalized = sorted(
            ((w, s) for w, s in collected.items() if not s.is_zero), key=lambda t: t[0].sort_key()
        )
        return cls(tuple(normalized))

    @classmethod
    def zero(cls) -> 'Element':
        return cls()

    @classmethod
    def of_word(cls, word: PathWord, scalar: Scalar | None = None) -> 'Element':
        return cls.from_terms([(word, scalar if scalar is not None else Scalar.one())])

    @classmethod
    def idempotent(cls, vertex: str, scalar: Scalar | None = None) -> 'Element':
        return cls.of_word(PathWord.trivial(vertex), scalar)

    @classmethod
    def unit(cls, quiver: Quiver, scalar: Scalar | None = None) -> 'Element':
        """Σ_v e_v (el 1 del álgebra de caminos)"""
        value = scalar if scalar is not None else Scalar.one()
        return cls.from_terms((PathWord.trivial(v), value) for v in quiver.vertices)

    # ========================================================================
    # CONSULTAS
    # ========================================================================

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def words(self) -> tuple[PathWord, ...]:
        return tuple(w for w, _ in self.terms)

    @property
    def arrow_names(self) -> frozenset[str]:
        return frozenset(a for w, _ in self.terms for a in w.arrows)

    @property
    def heads(self) -> frozenset[str]:
        return frozenset(w.head for w, _ in self.terms)

    @property
    def tails(self) -> frozenset[str]:
        return frozenset(w.tail for w, _ in self.terms)

    def coefficient(self, word: PathWord) -> Scalar:
        for w, s in self.terms:
            if w == word:
                return s
        return Scalar.zero()

    def is_homogeneous(self) -> bool:
        return len(self.heads) <= 1 and len(self.tails) <= 1

    def single_term(self) -> tuple[PathWord, Scalar] | None:
        return self.terms[0] if len(self.terms) == 1 else None

    def check_quiver(self, quiver: Quiver) -> None:
        for word, _ in self.terms:
            if not quiver.contains_word(word):
                raise QuiverMismatch(f'Element term {word} not over quiver {quiver.name}')

    def sort_key(self) -> tuple:
        return tuple((w.sort_key(), s.sort_key()) for w, s in self.terms)

    # ========================================================================
    # ARITMÉTICA
    # ========================================================================

    def __add__(self, other: 'Element') -> 'Element':
        return Element.from_terms(self.terms + other.terms)

    def __neg__(self) -> 'Element':
        return Element(tuple((w, -s) for w, s in self.terms))

    def __sub__(self, other: 'Element') -> 'Element':
        return self + (-other)

    def scale(self, scalar: Scalar | int | Fraction) -> 'Element':
        if not isinstance(scalar, Scalar):
            scalar = Scalar.rational(scalar)
        if scalar.is_zero:
            return Element.zero()
        return Element.from_terms((w, s * scalar) for w, s in self.terms)

    def __mul__(self, other: 'Element | Scalar | int | Fraction') -> 'Element':
        if not isinstance(other, Element):
            return self.scale(other)
        products = []
        for w1, s1 in self.terms:
            for w2, s2 in other.terms:
                word = w1.compose(w2)
                if word is not None:
                    products.append((word, s1 * s2))
        return Element.from_terms(products)

    def __rmul__(self, other: Scalar | int | Fraction) -> 'Element':
        return self.scale(other)

    def map_words(self, fn: Callable[[PathWord], 'Element']) -> 'Element':
        """Extiende linealmente una función sobre palabras"""
        out: list[tuple[PathWord, Scalar]] = []
        for word, scalar in self.terms:
            for w, s in fn(word).terms:
                out.append((w, s * scalar))
        return Element.from_terms(out)

    def map_scalars(self, fn: Callable[[Scalar], Scalar]) -> 'Element':
        return Element.from_terms((w, fn(s)) for w, s in self.terms)

    def project(self, head: str | None = None, tail: str | None = None) -> 'Element':
        """e_head · x · e_tail"""
        return Element(
            tuple(
                (w, s)
                for w, s in self.terms
                if (head is None or w.head == head) and (tail is None or w.tail == tail)
            )
        )

    # ========================================================================
    # RENDER
    # ========================================================================

    def __str__(self) -> str:
        if self.is_zero:
            return '0'
        pieces: list[str] = []
        for word, scalar in sorted(self.terms, key=lambda t: t[0].sort_key(), reverse=True):
            for text in scalar.monomial_texts():
                path = str(word)
                if text == '1':
                    pieces.append(path)
                elif text == '-1':
                    pieces.append(f'-{path}')
                else:
                    pieces.append(f'{text} {path}')
        out = pieces[0]
        for piece in pieces[1:]:
            out += f' - {piece[1:]}' if piece.startswith('-') else f' + {piece}'
        return out


def path_compose(p: PathWord, q: PathWord) -> Element:
    """p·q (q actúa primero); 0 si head(q) != tail(p)"""
    word = p.compose(q)
    return Element.zero() if word is None else Element.of_word(word)


def elem_mul(x: Element, y: Element, quiver: Quiver | None = None) -> Element:
    """
    Producto bilineal x·y

    Raises:
        QuiverMismatch: si se da un quiver y algún factor no vive en él
    """
    if quiver is not None:
        x.check_quiver(quiver)
        y.check_quiver(quiver)
    return x * y


def with_table(x: Element, table: ExponentSymbolTable | None) -> Element:
    """Re-etiqueta los escalares con una tabla de símbolos"""
    return Element(tuple((w, Scalar(s.terms, table)) for w, s in x.terms))
