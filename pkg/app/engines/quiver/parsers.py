"""
parsers.py - Parser de elementos del álgebra de caminos

Sintaxis:
    -T^(hbar) a2 b1 + b2 a1      palabras leídas como en el papel
    e(v2)                        camino trivial
    3/2 T^(B)                    escalar · 1 (suma de idempotentes)
    0                            elemento cero
"""

from app.engines.scalars import ExponentSymbolTable, Scalar
from app.engines.scalars.parsers import Token, read_coefficient, tokenize_terms
from app.utils.exceptions import DatasetParseError, QStackError

from .element import Element
from .quiver import PathWord, Quiver


def read_path(tokens: list[Token], pos: int, quiver: Quiver) -> tuple[Element | None, int]:
    """Lee tokens de camino consecutivos y los compone; None si no hay ninguno"""
    factors: list[Element] = []
    while pos < len(tokens) and tokens[pos].kind in ('word', 'idem'):
        token = tokens[pos]
        try:
            if token.kind == 'idem':
                if not quiver.has_vertex(token.text):
                    raise DatasetParseError(f'Unknown vertex {token.text} in quiver {quiver.name}')
                factors.append(Element.idempotent(token.text))
            else:
                factors.append(Element.of_word(quiver.word([token.text])))
        except DatasetParseError:
            raise
        except QStackError as e:
            raise DatasetParseError(str(e)) from e
        pos += 1
    if not factors:
        return None, pos
    product = factors[0]
    for factor in factors[1:]:
        product = product * factor
    if product.is_zero:
        text = ' '.join(t.text for t in tokens if t.kind in ('word', 'idem'))
        raise DatasetParseError(f'Path {text!r} is not composable in quiver {quiver.name}')
    return product, pos


def parse_element(text: str, quiver: Quiver, table: ExponentSymbolTable | None = None) -> Element:
    """
    Parsea un elemento sobre `quiver`

    Raises:
        DatasetParseError: texto vacío, flecha desconocida o camino no componible
    """
    tokens = tokenize_terms(str(text))
    if not tokens:
        raise DatasetParseError(f'Empty element: {text!r}')
    total = Element.zero()
    pos = 0
    while pos < len(tokens):
        scalar, pos, explicit = read_coefficient(tokens, pos, table)
        path, pos = read_path(tokens, pos, quiver)
        if path is None:
            if not explicit:
                raise DatasetParseError(f'Expected a term in {text!r} at offset {_offset(tokens, pos)}')
            path = Element.unit(quiver)
        total = total + path.scale(_retable(scalar, table))
        if pos < len(tokens) and tokens[pos].kind != 'sign':
            raise DatasetParseError(f'Unexpected {tokens[pos].text!r} in {text!r}')
    return total


def parse_path(text: str, quiver: Quiver) -> PathWord:
    """Parsea una palabra sin coeficiente (lado izquierdo de una regla)"""
    tokens = tokenize_terms(str(text))
    path, pos = read_path(tokens, 0, quiver)
    if path is None or pos != len(tokens) or len(path.terms) != 1:
        raise DatasetParseError(f'Expected a single path word, got {text!r}')
    return path.terms[0][0]


def _retable(scalar: Scalar, table: ExponentSymbolTable | None) -> Scalar:
    return scalar if table is None else Scalar(scalar.terms, table)


def _offset(tokens: list[Token], pos: int) -> int:
    return tokens[pos].offset if pos < len(tokens) else -1
