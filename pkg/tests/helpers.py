"""
Utilidades para pruebas de propiedades: elementos, palabras y celdas aleatorias
"""

import random
from fractions import Fraction

from app.engines.quiver import Element, Quiver
from app.engines.rewriting import AlgebraPresentation
from app.engines.scalars import Exponent, Scalar
from app.engines.stack import QuiverStack
from app.engines.twisted import (
    Cochain,
    GradedFreeModule,
    MorphismCell,
    SandwichTerm,
    sandwich_value,
)


SYMBOLS = ('A1', 'A5', 'hbar')


def random_exponent(rng: random.Random) -> Exponent:
    """Combinación racional aleatoria de dos símbolos más una constante"""
    coeffs = {s: Fraction(rng.randint(-3, 3), rng.choice([1, 2])) for s in rng.sample(SYMBOLS, 2)}
    return Exponent.of(coeffs, Fraction(rng.randint(-2, 2), 2))


def random_scalar(rng: random.Random, terms: int = 3) -> Scalar:
    """Suma de hasta `terms` monomios q·T^λ (puede ser cero)"""
    return Scalar.from_terms(
        (random_exponent(rng), Fraction(rng.randint(-4, 4), rng.choice([1, 3])))
        for _ in range(rng.randint(1, terms))
    )


def random_monomial(rng: random.Random) -> Scalar:
    q = Fraction(rng.choice([-3, -1, 1, 2]), rng.choice([1, 5]))
    return Scalar.monomial(q, random_exponent(rng))


def random_path(
    rng: random.Random, quiver: Quiver, vertex: str, max_len: int, scalar: Scalar | None = None
) -> Element:
    """Camino aleatorio con cola en `vertex`"""
    names: list[str] = []
    for _ in range(rng.randint(0, max_len)):
        outgoing = [a for a in quiver.arrows if a.tail == vertex]
        if not outgoing:
            break
        arrow = rng.choice(outgoing)
        names.insert(0, arrow.name)
        vertex = arrow.head
    if not names:
        return Element.idempotent(vertex, scalar)
    return Element.of_word(quiver.word(names), scalar)


def random_word_element(rng: random.Random, P: AlgebraPresentation, max_len: int = 3) -> Element:
    """Monomio aleatorio de P con coeficiente racional no nulo"""
    vertex = rng.choice(P.quiver.vertices)
    coefficient = Scalar.rational(Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 2])))
    return random_path(rng, P.quiver, vertex, max_len, coefficient)


def composable_pair(
    rng: random.Random, P: AlgebraPresentation, max_len: int = 2
) -> tuple[Element, Element]:
    """(y, z) caminos de P con t_y = h_z"""
    z = random_path(rng, P.quiver, rng.choice(P.quiver.vertices), max_len)
    (head,) = z.heads
    return random_path(rng, P.quiver, head, max_len), z


def random_element(
    rng: random.Random, P: AlgebraPresentation, terms: int = 2, max_len: int = 3
) -> Element:
    """Suma de monomios aleatorios, en forma normal"""
    out = Element.zero()
    for _ in range(terms):
        out = out + random_word_element(rng, P, max_len)
    return P.normal_form(out)


def random_cell(
    rng: random.Random,
    X: QuiverStack,
    labels: tuple[str, ...],
    length: int,
    q: int,
    start: str | None = None,
) -> MorphismCell:
    """Celda sándwich aleatoria entre `labels` (un vértice por carta), opcionalmente desde `start`"""
    indices = tuple(rng.choice(X.lattice.charts) for _ in range(length))
    if start is not None:
        indices = (start,) + indices[1:]
    idx = X.lattice.require(indices)
    target = X.presentation(indices[0], idx)
    source = X.presentation(indices[-1], idx)
    entries: dict[tuple[str, str], tuple[SandwichTerm, ...]] = {}
    for _ in range(rng.randint(1, 3)):
        key = (rng.choice(labels), rng.choice(labels))
        term = SandwichTerm(
            random_element(rng, target, terms=1, max_len=2),
            random_element(rng, source, terms=1, max_len=1),
        )
        entries[key] = entries.get(key, ()) + (term,)
    return MorphismCell(indices, q, entries)


def cochain_values(X: QuiverStack, cochain: Cochain) -> dict:
    """(tupla, q, destino, fuente) -> valor colapsado no nulo"""
    out = {}
    for cell in cochain.sorted_cells():
        for (r, s), terms in cell.entries.items():
            value = sandwich_value(X, cell, terms)
            if not value.is_zero:
                out[(cell.indices, cell.q, r, s)] = value
    return out


def all_words(quiver: Quiver, max_len: int) -> list[Element]:
    """Idempotentes y todos los caminos de longitud ≤ max_len"""
    out = [Element.idempotent(v) for v in quiver.vertices]
    frontier = [(a.name,) for a in quiver.arrows]
    while frontier:
        out.extend(Element.of_word(quiver.word(names)) for names in frontier)
        frontier = [
            (a.name,) + names
            for names in frontier
            if len(names) < max_len
            for a in quiver.arrows
            if a.tail == quiver.arrow(names[0]).head
        ]
    return out


def random_graded_cell(
    rng: random.Random, X: QuiverStack, module: GradedFreeModule, length: int, q: int
) -> MorphismCell:
    """Celda sándwich aleatoria cuyas entradas respetan el desplazamiento de grado q"""
    indices = tuple(rng.choice(X.lattice.charts) for _ in range(length))
    idx = X.lattice.require(indices)
    target = X.presentation(indices[0], idx)
    source = X.presentation(indices[-1], idx)
    keys = [
        (r.label, s.label)
        for r in module.generators(indices[0])
        for s in module.generators(indices[-1])
        if r.degree - s.degree == q
    ]
    entries: dict[tuple[str, str], tuple[SandwichTerm, ...]] = {}
    for key in rng.sample(keys, min(len(keys), rng.randint(1, 2))):
        entries[key] = (
            SandwichTerm(
                random_element(rng, target, terms=1, max_len=2),
                random_element(rng, source, terms=1, max_len=1),
            ),
        )
    return MorphismCell(indices, q, entries)
