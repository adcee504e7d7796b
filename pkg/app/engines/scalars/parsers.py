"""
parsers.py - Parsers de exponentes y escalares en forma textual

Responsabilidades:
- Parsear expresiones lineales racionales: 'B/2 + hbar', '-(A1 - 3hbar)/2'
- Expandir abreviaturas (B, A1', ...) y términos de área A[115(3)']
- Parsear escalares 'q T^(expr)' sumados con + / -
- Tokenizar texto de coeficientes compartido con el parser de elementos
"""

import re
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction

from app.utils.exceptions import DatasetParseError, MissingSymbol

from .exponent import Exponent, ExponentSymbolTable
from .scalar import Scalar

SYMBOL_PATTERN = r"[A-Za-z_][A-Za-z0-9_]*'*"
_EXPR_TOKEN = re.compile(
    rf"\s*(?:(?P<num>\d+)|(?P<area>A\[[0-9()']+\])|(?P<sym>{SYMBOL_PATTERN})|(?P<op>[-+*/()]))"
)


# ============================================================================
# EXPONENTES
# ============================================================================


class ExponentParser:
    """
    Parser descendente recursivo de exponentes lineales

    Usage:
        parser = ExponentParser(table)
        lam = parser.parse('B/2 + hbar')
    """

    def __init__(self, table: ExponentSymbolTable):
        self.table = table
        self._tokens: list[tuple[str, str]] = []
        self._pos = 0

    def parse(self, text: str) -> Exponent:
        self._tokens = self._tokenize(text)
        self._pos = 0
        if not self._tokens:
            raise DatasetParseError(f'Empty exponent expression: {text!r}')
        value, _ = self._expr()
        if self._pos != len(self._tokens):
            raise DatasetParseError(f'Unexpected token {self._tokens[self._pos][1]!r} in {text!r}')
        return value

    @staticmethod
    def _tokenize(text: str) -> list[tuple[str, str]]:
        tokens: list[tuple[str, str]] = []
        pos = 0
        stripped = text.rstrip()
        while pos < len(stripped):
            match = _EXPR_TOKEN.match(stripped, pos)
            if not match:
                raise DatasetParseError(f'Cannot parse exponent {text!r} at offset {pos}')
            kind = match.lastgroup or 'op'
            tokens.append((kind, match.group(kind)))
            pos = match.end()
        return tokens

    def _peek(self) -> tuple[str, str] | None:
        return self._tokens[self._pos] if self._pos < len(self._tokens) else None

    def _take(self) -> tuple[str, str]:
        token = self._tokens[self._pos]
        self._pos += 1
        return token

    def _expr(self) -> tuple[Exponent, bool]:
        value, constant = self._term()
        while self._peek() in (('op', '+'), ('op', '-')):
            _, op = self._take()
            rhs, rhs_constant = self._term()
            value = value + rhs if op == '+' else value - rhs
            constant = constant and rhs_constant
        return value, constant

    def _term(self) -> tuple[Exponent, bool]:
        value, constant = self._factor()
        while True:
            token = self._peek()
            if token in (('op', '*'), ('op', '/')):
                _, op = self._take()
                rhs, rhs_constant = self._factor()
            elif token is not None and (token[0] in ('sym', 'area') or token == ('op', '(')):
                # multiplicación implícita: 3hbar, 2(A1 + A5)
                op = '*'
                rhs, rhs_constant = self._factor()
            else:
                return value, constant
            if op == '/':
                if not rhs_constant or rhs.constant == 0:
                    raise DatasetParseError('Exponent division must be by a nonzero rational')
                value = value.scale(1 / rhs.constant)
            elif constant:
                value, constant = rhs.scale(value.constant), rhs_constant
            elif rhs_constant:
                value = value.scale(rhs.constant)
            else:
                raise DatasetParseError('Exponent expressions must be linear in the symbols')

    def _factor(self) -> tuple[Exponent, bool]:
        token = self._peek()
        if token is None:
            raise DatasetParseError('Unexpected end of exponent expression')
        kind, text = self._take()
        if (kind, text) == ('op', '-'):
            value, constant = self._factor()
            return -value, constant
        if (kind, text) == ('op', '+'):
            return self._factor()
        if (kind, text) == ('op', '('):
            value, constant = self._expr()
            if self._peek() != ('op', ')'):
                raise DatasetParseError('Unbalanced parenthesis in exponent')
            self._take()
            return value, constant
        if kind == 'num':
            return Exponent.of((), int(text)), True
        if kind == 'area':
            return area_term(self.table, text[2:-1]), False
        if kind == 'sym':
            try:
                return self.table.resolve(text), False
            except MissingSymbol as e:
                raise DatasetParseError(str(e)) from e
        raise DatasetParseError(f'Unexpected token {text!r} in exponent')


def area_term(table: ExponentSymbolTable, indices: str) -> Exponent:
    """
    Término de área A_{I(J)'} = Σ A_i + Σ A'_j

    Formas aceptadas: '115', "11'" (todo primado), "115(3)'", "(5)'"
    """
    if '(' in indices:
        head, _, rest = indices.partition('(')
        primed, _, tail = rest.partition(')')
        if tail != "'":
            raise DatasetParseError(f'Malformed area term A[{indices}]')
        unprimed = head
    elif indices.endswith("'"):
        unprimed, primed = '', indices[:-1]
    else:
        unprimed, primed = indices, ''
    if not (unprimed + primed).isdigit():
        raise DatasetParseError(f'Malformed area term A[{indices}]')
    total = Exponent.zero()
    try:
        for digit in unprimed:
            total = total + table.resolve(f'A{digit}')
        for digit in primed:
            total = total + table.resolve(f"A{digit}'")
    except MissingSymbol as e:
        raise DatasetParseError(str(e)) from e
    return total


def build_symbol_table(symbols: list[str], abbreviations: Mapping[str, str]) -> ExponentSymbolTable:
    """Construye la tabla expandiendo cada abreviatura con las anteriores"""
    table = ExponentSymbolTable(tuple(symbols))
    for name, expression in abbreviations.items():
        if table.knows(name):
            raise DatasetParseError(f'Exponent symbol {name} declared twice', section='symbols')
        value = ExponentParser(table).parse(str(expression))
        table = ExponentSymbolTable(table.symbols, table.abbreviations + ((name, value),))
    return table


# ============================================================================
# TOKENS DE COEFICIENTES / ELEMENTOS
# ============================================================================


@dataclass(frozen=True)
class Token:
    kind: str  # sign | number | power | word | idem | slot | star
    text: str
    offset: int


_WORD = re.compile(r"[A-Za-z_][A-Za-z0-9_]*(?:\^-1)?'*")
_NUMBER = re.compile(r'\d+(?:/\d+)?')


def tokenize_terms(text: str) -> list[Token]:
    """
    Tokeniza texto de elementos: signos, racionales, T^(...), nombres de
    flechas (con sufijo ^-1), e(v) y la ranura '_'.
    """
    tokens: list[Token] = []
    pos = 0
    while pos < len(text):
        char = text[pos]
        if char.isspace():
            pos += 1
        elif char in '+-':
            tokens.append(Token('sign', char, pos))
            pos += 1
        elif char == '*':
            tokens.append(Token('star', char, pos))
            pos += 1
        elif char.isdigit():
            match = _NUMBER.match(text, pos)
            assert match is not None
            tokens.append(Token('number', match.group(), pos))
            pos = match.end()
        elif text.startswith('T^(', pos):
            end = _balanced_end(text, pos + 2)
            tokens.append(Token('power', text[pos + 3 : end], pos))
            pos = end + 1
        elif text.startswith('e(', pos):
            end = text.find(')', pos)
            if end < 0:
                raise DatasetParseError(f'Unclosed e( in {text!r}')
            tokens.append(Token('idem', text[pos + 2 : end].strip(), pos))
            pos = end + 1
        elif char == '_' and (pos + 1 == len(text) or not (text[pos + 1].isalnum() or text[pos + 1] == '_')):
            tokens.append(Token('slot', char, pos))
            pos += 1
        else:
            match = _WORD.match(text, pos)
            if not match:
                raise DatasetParseError(f'Unexpected character {char!r} in {text!r} at offset {pos}')
            tokens.append(Token('word', match.group(), pos))
            pos = match.end()
    return tokens


def _balanced_end(text: str, open_pos: int) -> int:
    depth = 0
    for index in range(open_pos, len(text)):
        if text[index] == '(':
            depth += 1
        elif text[index] == ')':
            depth -= 1
            if depth == 0:
                return index
    raise DatasetParseError(f'Unbalanced T^( in {text!r}')


def read_coefficient(
    tokens: list[Token], pos: int, table: ExponentSymbolTable | None
) -> tuple[Scalar, int, bool]:
    """
    Lee el prefijo escalar de un término: [signo] [racional] [*] [T^(..)] [*]

    Returns:
        (escalar, nueva posición, si se leyó algún coeficiente explícito)
    """
    sign = 1
    if pos < len(tokens) and tokens[pos].kind == 'sign':
        sign = -1 if tokens[pos].text == '-' else 1
        pos += 1
    value = Scalar.rational(sign, table)
    explicit = False
    while pos < len(tokens) and tokens[pos].kind in ('number', 'power', 'star'):
        token = tokens[pos]
        if token.kind == 'number':
            value = value * Scalar.rational(Fraction(token.text), table)
            explicit = True
        elif token.kind == 'power':
            parser = ExponentParser(table or ExponentSymbolTable(()))
            value = value * Scalar.monomial(1, parser.parse(token.text), table)
            explicit = True
        pos += 1
    return value, pos, explicit


class ScalarParser:
    """
    Parser de escalares 'q T^(expr)' sumados

    Usage:
        ScalarParser(table).parse('-1 T^(B/2 + hbar) + 2')
    """

    def __init__(self, table: ExponentSymbolTable):
        self.table = table

    def parse(self, text: str) -> Scalar:
        tokens = tokenize_terms(str(text))
        if not tokens:
            raise DatasetParseError(f'Empty scalar: {text!r}')
        total = Scalar.zero(self.table)
        pos = 0
        while pos < len(tokens):
            value, pos, explicit = read_coefficient(tokens, pos, self.table)
            if not explicit:
                raise DatasetParseError(f'Expected a coefficient in scalar {text!r}')
            total = total + value
            if pos < len(tokens) and tokens[pos].kind != 'sign':
                raise DatasetParseError(f'Unexpected {tokens[pos].text!r} in scalar {text!r}')
        return total


def parse_scalar(text: str, table: ExponentSymbolTable) -> Scalar:
    return ScalarParser(table).parse(text)


def parse_exponent(text: str, table: ExponentSymbolTable) -> Exponent:
    return ExponentParser(table).parse(text)
