"""
scalar.py - Escalares de Novikov truncados Σ qᵢ·T^{λᵢ}

Responsabilidades:
- Aritmética exacta de anillo (suma, producto, negación)
- Inversión de monomios (necesaria para términos de gerbe c⁻¹)
- Sustitución de exponentes y forma canónica estructural
"""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction

from app.utils.exceptions import NotInvertible, SymbolTableMismatch

from .exponent import Exponent, ExponentSymbolTable, Rational


def _merge_tables(
    a: ExponentSymbolTable | None, b: ExponentSymbolTable | None
) -> ExponentSymbolTable | None:
    # None es compatible con cualquier tabla
    if a is None:
        return b
    if b is None or a.symbols == b.symbols:
        return a
    raise SymbolTableMismatch(f'Symbol tables differ: {a.symbols} vs {b.symbols}')


@dataclass(frozen=True)
class Scalar:
    """
    Escalar Σ q·T^λ en forma canónica

    Usage:
        q = Scalar.monomial(1, Exponent.symbol('hbar'))
        (q * q.invert_monomial()).is_one  # True
    """

    terms: tuple[tuple[Exponent, Fraction], ...] = ()
    table: ExponentSymbolTable | None = field(default=None, compare=False, hash=False)

    # ========================================================================
    # CONSTRUCTORES
    # ========================================================================

    @classmethod
    def from_terms(
        cls, terms: Iterable[tuple[Exponent, Rational]], table: ExponentSymbolTable | None = None
    ) -> 'Scalar':
        collected: dict[Exponent, Fraction] = {}
        for exponent, q in terms:
            collected[exponent] = collected.get(exponent, Fraction(0)) + Fraction(q)
        normalized = sorted(
            ((e, q) for e, q in collected.items() if q != 0), key=lambda item: item[0].sort_key()
        )
        return cls(tuple(normalized), table)

    @classmethod
    def zero(cls, table: ExponentSymbolTable | None = None) -> 'Scalar':
        return cls((), table)

    @classmethod
    def one(cls, table: ExponentSymbolTable | None = None) -> 'Scalar':
        return cls.monomial(1, Exponent.zero(), table)

    @classmethod
    def monomial(
        cls, q: Rational, exponent: Exponent | None = None, table: ExponentSymbolTable | None = None
    ) -> 'Scalar':
        return cls.from_terms([(exponent or Exponent.zero(), q)], table)

    @classmethod
    def rational(cls, q: Rational, table: ExponentSymbolTable | None = None) -> 'Scalar':
        return cls.monomial(q, Exponent.zero(), table)

    # ========================================================================
    # CONSULTAS
    # ========================================================================

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    @property
    def is_one(self) -> bool:
        return self.terms == ((Exponent.zero(), Fraction(1)),)

    def sort_key(self) -> tuple:
        return tuple((e.sort_key(), q) for e, q in self.terms)

    # ========================================================================
    # ARITMÉTICA
    # ========================================================================

    def _coerce(self, other: 'Scalar | Rational') -> 'Scalar':
        if isinstance(other, Scalar):
            return other
        return Scalar.rational(other, self.table)

    def __add__(self, other: 'Scalar | Rational') -> 'Scalar':
        other = self._coerce(other)
        table = _merge_tables(self.table, other.table)
        return Scalar.from_terms(self.terms + other.terms, table)

    __radd__ = __add__

    def __neg__(self) -> 'Scalar':
        return Scalar(tuple((e, -q) for e, q in self.terms), self.table)

    def __sub__(self, other: 'Scalar | Rational') -> 'Scalar':
        return self + (-self._coerce(other))

    def __rsub__(self, other: Rational) -> 'Scalar':
        return self._coerce(other) - self

    def __mul__(self, other: 'Scalar | Rational') -> 'Scalar':
        other = self._coerce(other)
        table = _merge_tables(self.table, other.table)
        return Scalar.from_terms(
            ((e1 + e2, q1 * q2) for e1, q1 in self.terms for e2, q2 in other.terms), table
        )

    __rmul__ = __mul__

    def invert_monomial(self) -> 'Scalar':
        """
        Inverso de un monomio q·T^λ

        Raises:
            NotInvertible: si el escalar no tiene exactamente un término
        """
        if not self.is_monomial:
            raise NotInvertible(self)
        exponent, q = self.terms[0]
        return Scalar(((-exponent, 1 / q),), self.table)

    def substitute(self, assignment: Mapping[str, Exponent]) -> 'Scalar':
        return Scalar.from_terms(((e.substitute(assignment), q) for e, q in self.terms), self.table)

    def power(self, n: int) -> 'Scalar':
        if n < 0:
            return self.invert_monomial().power(-n)
        result = Scalar.one(self.table)
        for _ in range(n):
            result = result * self
        return result

    # ========================================================================
    # RENDER
    # ========================================================================

    def monomial_texts(self) -> list[str]:
        """Un texto por término: '3/2', 'T^(hbar)', '-2 T^(B/2)'"""
        return [render_monomial(q, e) for e, q in self.terms]

    def __str__(self) -> str:
        texts = self.monomial_texts()
        if not texts:
            return '0'
        out = texts[0]
        for text in texts[1:]:
            out += f' - {text[1:]}' if text.startswith('-') else f' + {text}'
        return out


def render_monomial(q: Fraction, exponent: Exponent) -> str:
    if exponent.is_zero:
        return str(q)
    power = f'T^({exponent})'
    if q == 1:
        return power
    if q == -1:
        return f'-{power}'
    return f'{q} {power}'


# ============================================================================
# API FUNCIONAL
# ============================================================================


def scalar_add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def scalar_mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def scalar_invert_monomial(a: Scalar) -> Scalar:
    return a.invert_monomial()


def exponent_substitute(a: Scalar, assignment: Mapping[str, Exponent]) -> Scalar:
    return a.substitute(assignment)
