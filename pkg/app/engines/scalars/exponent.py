"""
exponent.py - Exponentes formales λ de T^λ

Responsabilidades:
- Representar combinaciones ℚ-lineales de símbolos declarados más una constante
- Aritmética exacta (suma, negación, escala) y sustitución de símbolos
- Forma canónica: sin coeficientes nulos, símbolos ordenados por nombre
"""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction

from app.utils.exceptions import MissingSymbol

Rational = int | Fraction


def _as_fraction(value: Rational) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


@dataclass(frozen=True)
class ExponentSymbolTable:
    """
    Tabla de símbolos de exponente

    `symbols` es la base libre; `abbreviations` son nombres definidos
    (B, A1', ...) que se expanden al parsear.
    """

    symbols: tuple[str, ...]
    abbreviations: tuple[tuple[str, 'Exponent'], ...] = field(default=())

    def __post_init__(self) -> None:
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError(f'Duplicate exponent symbols: {self.symbols}')
        if any(not name for name in self.symbols):
            raise ValueError('Exponent symbols must be nonempty')

    def resolve(self, name: str) -> 'Exponent':
        """Resuelve un símbolo o abreviatura a su exponente"""
        if name in self.symbols:
            return Exponent.symbol(name)
        for abbreviation, value in self.abbreviations:
            if abbreviation == name:
                return value
        raise MissingSymbol(f'Unknown exponent symbol: {name}')

    def knows(self, name: str) -> bool:
        return name in self.symbols or any(a == name for a, _ in self.abbreviations)


@dataclass(frozen=True)
class Exponent:
    """
    Exponente λ = Σ q_s·s + constante

    Usage:
        lam = Exponent.of({'B': Fraction(1, 2), 'hbar': 1})
        mu = lam + Exponent.symbol('hbar')
        str(mu)  # 'B/2 + 2*hbar'
    """

    coeffs: tuple[tuple[str, Fraction], ...] = ()
    constant: Fraction = Fraction(0)

    @classmethod
    def of(
        cls, coeffs: Mapping[str, Rational] | Iterable[tuple[str, Rational]] = (), constant: Rational = 0
    ) -> 'Exponent':
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        merged: dict[str, Fraction] = {}
        for name, value in items:
            merged[name] = merged.get(name, Fraction(0)) + _as_fraction(value)
        normalized = tuple(sorted((n, q) for n, q in merged.items() if q != 0))
        return cls(normalized, _as_fraction(constant))

    @classmethod
    def zero(cls) -> 'Exponent':
        return cls()

    @classmethod
    def symbol(cls, name: str, coeff: Rational = 1) -> 'Exponent':
        return cls.of({name: coeff})

    @property
    def is_zero(self) -> bool:
        return not self.coeffs and self.constant == 0

    @property
    def symbols(self) -> frozenset[str]:
        return frozenset(name for name, _ in self.coeffs)

    def coefficient(self, name: str) -> Fraction:
        for n, q in self.coeffs:
            if n == name:
                return q
        return Fraction(0)

    def __add__(self, other: 'Exponent') -> 'Exponent':
        return Exponent.of(list(self.coeffs) + list(other.coeffs), self.constant + other.constant)

    def __neg__(self) -> 'Exponent':
        return Exponent(tuple((n, -q) for n, q in self.coeffs), -self.constant)

    def __sub__(self, other: 'Exponent') -> 'Exponent':
        return self + (-other)

    def scale(self, factor: Rational) -> 'Exponent':
        factor = _as_fraction(factor)
        return Exponent.of([(n, q * factor) for n, q in self.coeffs], self.constant * factor)

    def substitute(self, assignment: Mapping[str, 'Exponent']) -> 'Exponent':
        """
        Reemplaza cada símbolo por su imagen

        Raises:
            MissingSymbol: si algún símbolo presente no tiene imagen
        """
        result = Exponent.of((), self.constant)
        for name, q in self.coeffs:
            if name not in assignment:
                raise MissingSymbol(f'No assignment for exponent symbol {name}')
            result = result + assignment[name].scale(q)
        return result

    def sort_key(self) -> tuple:
        return (self.coeffs, self.constant)

    def __str__(self) -> str:
        parts: list[str] = []
        for name, q in self.coeffs:
            parts.append(_render_term(q, name))
        if self.constant != 0 or not parts:
            parts.append(_render_term(self.constant, None))
        text = parts[0]
        for part in parts[1:]:
            text += f' - {part[1:]}' if part.startswith('-') else f' + {part}'
        return text


def _render_term(q: Fraction, name: str | None) -> str:
    if name is None:
        return str(q)
    if q == 1:
        return name
    if q == -1:
        return f'-{name}'
    if q.denominator != 1 and q.numerator in (1, -1):
        sign = '-' if q < 0 else ''
        return f'{sign}{name}/{q.denominator}'
    return f'{q}*{name}'
