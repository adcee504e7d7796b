"""
cells.py - Celdas de morfismo (matrices sándwich) y su producto cup

Responsabilidades:
- SandwichTerm: x ↦ G_{i0 ip}(x·right)·left (mapas entrelazantes)
- BundleTerm: m ↦ left·m·right con factor de fibra (complejos de bimódulos)
- MorphismCell: tupla de Čech, grado interno q y matriz (destino, fuente)
- cell_apply, cell_cup y valores colapsados para decidir si una entrada es 0
"""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from app.engines.quiver import Element, PathWord
from app.engines.representations import QuiverRep
from app.engines.rewriting import AlgebraPresentation
from app.engines.scalars import Scalar
from app.engines.stack import QuiverStack
from app.utils.exceptions import ChartMismatch, OverlapMissing, QuiverMismatch

SANDWICH = 'sandwich'
BIMODULE = 'bimodule'


@dataclass(frozen=True)
class SandwichTerm:
    left: Element
    right: Element

    def scaled(self, scalar: Scalar | int) -> 'SandwichTerm':
        return SandwichTerm(self.left.scale(scalar), self.right)

    def __str__(self) -> str:
        return f'({self.left}) * _ * ({self.right})'


@dataclass(frozen=True)
class BundleTerm:
    """left ⊗ fiber actúan a la izquierda, right (álgebra hub) a la derecha"""

    left: Element
    fiber: Element
    right: Element

    def scaled(self, scalar: Scalar | int) -> 'BundleTerm':
        return BundleTerm(self.left.scale(scalar), self.fiber, self.right)

    def __str__(self) -> str:
        return f'({self.fiber}) ({self.left}) * _ * ({self.right})'


Term = SandwichTerm | BundleTerm
EntryKey = tuple[str, str]


@dataclass(frozen=True)
class MorphismCell:
    """
    u^{p,q}_{i0..ip}: matriz de E_{ip} a F_{i0}

    `entries[(r, s)]` es la suma de términos de la fuente s al destino r.
    """

    indices: tuple[str, ...]
    q: int
    entries: Mapping[EntryKey, tuple[Term, ...]] = field(default_factory=dict)
    kind: str = SANDWICH

    def __post_init__(self) -> None:
        if not self.indices:
            raise OverlapMissing('A morphism cell needs at least one Čech index')

    @property
    def p(self) -> int:
        return len(self.indices) - 1

    @property
    def degree(self) -> int:
        return self.p + self.q

    @property
    def target_chart(self) -> str:
        return self.indices[0]

    @property
    def source_chart(self) -> str:
        return self.indices[-1]

    @property
    def key(self) -> tuple[tuple[str, ...], int]:
        return (self.indices, self.q)

    def scaled(self, scalar: Scalar | int) -> 'MorphismCell':
        entries = {k: tuple(t.scaled(scalar) for t in terms) for k, terms in self.entries.items()}
        return MorphismCell(self.indices, self.q, entries, self.kind)

    def reindexed(self, indices: tuple[str, ...]) -> 'MorphismCell':
        return MorphismCell(indices, self.q, self.entries, self.kind)

    def merged(self, other: 'MorphismCell') -> 'MorphismCell':
        entries = dict(self.entries)
        for k, terms in other.entries.items():
            entries[k] = entries.get(k, ()) + terms
        return MorphismCell(self.indices, self.q, entries, self.kind)


def identity_cell(chart: str, labels: Iterable[tuple[str, str]]) -> MorphismCell:
    """Celda identidad en la carta `chart` para pares (label, vértice)"""
    entries = {}
    for label, vertex in labels:
        unit = Element.idempotent(vertex)
        entries[(label, label)] = (SandwichTerm(unit, unit),)
    return MorphismCell((chart,), 0, entries)


# ============================================================================
# APLICACIÓN Y VALORES
# ============================================================================


def cell_apply(
    X: QuiverStack, u: MorphismCell, x: Mapping[str, Element]
) -> dict[str, Element]:
    """
    Componente r = Σ_s G_{i0 ip}(x_s · right) · left, normalizada

    Raises:
        ChartMismatch: x no vive en la carta fuente o la celda es de bimódulos
    """
    if u.kind != SANDWICH:
        raise ChartMismatch('cell_apply is defined on sandwich cells only')
    idx = X.lattice.require(u.indices)
    source = X.presentation(u.source_chart, idx)
    target = X.presentation(u.target_chart, idx)
    G = X.transition(u.target_chart, u.source_chart, idx)
    for label, element in x.items():
        try:
            element.check_quiver(source.quiver)
        except QuiverMismatch as e:
            raise ChartMismatch(f'Component {label} is not over chart {u.source_chart}') from e
    out: dict[str, Element] = {}
    for (r, s), terms in sorted(u.entries.items()):
        if s not in x:
            continue
        total = out.get(r, Element.zero())
        for term in terms:
            total = total + G.apply(x[s] * term.right) * term.left
        out[r] = target.normal_form(total)
    return {r: v for r, v in out.items() if not v.is_zero}


def sandwich_value(X: QuiverStack, u: MorphismCell, terms: Iterable[SandwichTerm]) -> Element:
    """Σ G(right)·left: el mapa x ↦ G(x·right)·left es x ↦ G(x)·valor"""
    idx = X.lattice.require(u.indices)
    target = X.presentation(u.target_chart, idx)
    G = X.transition(u.target_chart, u.source_chart, idx)
    total = Element.zero()
    for term in terms:
        total = total + G.apply(term.right) * term.left
    return target.normal_form(total)


class TensorSum:
    """Σ s · (palabra izquierda, palabra de fibra, palabra derecha) en formas normales"""

    def __init__(self, terms: Mapping[tuple[PathWord, PathWord, PathWord], Scalar]):
        self.terms = {k: v for k, v in terms.items() if not v.is_zero}

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        if not self.terms:
            return '0'
        parts = []
        for (lw, fw, rw), s in sorted(self.terms.items(), key=lambda t: str(t[0])):
            parts.append(f'({s}) {fw} {lw} * _ * {rw}')
        return ' + '.join(parts)


def bundle_value(
    terms: Iterable[BundleTerm],
    left: AlgebraPresentation,
    fiber: AlgebraPresentation,
    right: AlgebraPresentation,
) -> TensorSum:
    collected: dict[tuple[PathWord, PathWord, PathWord], Scalar] = {}
    for term in terms:
        for lw, ls in left.normal_form(term.left).terms:
            for fw, fs in fiber.normal_form(term.fiber).terms:
                for rw, rs in right.normal_form(term.right).terms:
                    key = (lw, fw, rw)
                    value = ls * fs * rs
                    collected[key] = collected[key] + value if key in collected else value
    return TensorSum(collected)


# ============================================================================
# CUP
# ============================================================================


def cell_cup(X: QuiverStack, u: MorphismCell, v: MorphismCell) -> MorphismCell:
    """
    u ∪ v en (i0..ip..i_{p+q}) con corrección de gerbe

    Sándwich: right' = right_v,
    left' = c⁻¹_{i0 ip iq}(t_{right_v}) · G_{i0 ip}(left_v · right_u) · left_u.
    Bimódulo: left' = left_u · G_{i0 ip}(left_v), fiber' = fiber_u · fiber_v,
    right' = right_v · right_u (gerbes triviales).

    Raises:
        OverlapMissing: índice central distinto o tupla sin intersección
    """
    if u.source_chart != v.target_chart:
        raise OverlapMissing(f'Cannot cup {u.indices} with {v.indices}: middle index differs')
    if u.kind != v.kind:
        raise ChartMismatch('Cannot cup sandwich and bimodule cells')
    indices = u.indices + v.indices[1:]
    idx = X.lattice.require(indices)
    i0, ip, iq = u.target_chart, u.source_chart, v.source_chart
    G = X.transition(i0, ip, idx)
    target = X.presentation(i0, idx)
    entries: dict[EntryKey, tuple[Term, ...]] = {}
    for (r, s), u_terms in sorted(u.entries.items()):
        for (s2, t), v_terms in sorted(v.entries.items()):
            if s2 != s:
                continue
            new: list[Term] = []
            for tu in u_terms:
                for tv in v_terms:
                    if isinstance(tu, SandwichTerm) and isinstance(tv, SandwichTerm):
                        new.extend(_sandwich_cup(X, tu, tv, G, target, (i0, ip, iq), idx))
                    elif isinstance(tu, BundleTerm) and isinstance(tv, BundleTerm):
                        new.append(
                            BundleTerm(
                                target.normal_form(tu.left * G.apply(tv.left)),
                                tu.fiber * tv.fiber,
                                tv.right * tu.right,
                            )
                        )
            if new:
                entries[(r, t)] = entries.get((r, t), ()) + tuple(new)
    return MorphismCell(indices, u.q + v.q, entries, u.kind)


def _sandwich_cup(
    X: QuiverStack,
    tu: SandwichTerm,
    tv: SandwichTerm,
    G: QuiverRep,
    target: AlgebraPresentation,
    triple: tuple[str, str, str],
    idx: frozenset[str],
) -> list[SandwichTerm]:
    i0, ip, iq = triple
    middle = G.apply(tv.left * tu.right) * tu.left
    out = []
    for word, scalar in tv.right.terms:
        correction = X.gerbe(i0, ip, iq, word.tail, idx).inverse
        out.append(
            SandwichTerm(target.normal_form(correction * middle), Element.of_word(word, scalar))
        )
    return out
