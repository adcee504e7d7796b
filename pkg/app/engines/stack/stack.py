"""
stack.py - Quiver algebroid stacks

Responsabilidades:
- Cartas: presentación base + reserva de reglas auxiliares + orden
- Presentación de cada carta sobre cada intersección (localización cacheada)
- Transiciones G_ij guardadas sobre las localizaciones máximas y
  re-ancladas por intersección
- Términos de gerbe c_ijk(v) con inversa explícita
"""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from itertools import combinations

from app.engines.quiver import Element
from app.engines.representations import QuiverRep, identity_rep, rehome
from app.engines.rewriting import AlgebraPresentation, RewriteRule, TermOrder, localize
from app.utils.exceptions import OverlapMissing
from app.utils.logger import get_logger
from config.settings import settings

from .lattice import CoverLattice

logger = get_logger(__name__)


@dataclass
class Chart:
    """Carta: álgebra base y datos para localizarla"""

    name: str
    base: AlgebraPresentation
    aux_pool: tuple[RewriteRule, ...] = ()
    order: TermOrder | None = None


@dataclass(frozen=True)
class GerbeTerm:
    value: Element
    inverse: Element


@dataclass
class TransitionData:
    """G_ij en crudo: imágenes sobre la localización máxima de la carta i"""

    vertex_map: Mapping[str, str]
    arrow_map: Mapping[str, Element]


@dataclass
class QuiverStack:
    """
    Stack de álgebras de quivers

    Usage:
        X = QuiverStack('Yhat', lattice, charts, transitions, gerbes)
        X.transition('0', '3').apply(X.presentation('3', {'0', '3'}).parse('w3'))
    """

    name: str
    lattice: CoverLattice
    charts: Mapping[str, Chart]
    transitions: Mapping[tuple[str, str], TransitionData] = field(default_factory=dict)
    gerbes: Mapping[tuple[str, str, str], Mapping[str, GerbeTerm]] = field(default_factory=dict)
    max_degree: int = field(default_factory=lambda: settings.max_degree)
    max_rounds: int = field(default_factory=lambda: settings.max_rounds)
    _presentations: dict = field(default_factory=dict, repr=False)
    _maximal: dict = field(default_factory=dict, repr=False)
    _raw: dict = field(default_factory=dict, repr=False)
    _reps: dict = field(default_factory=dict, repr=False)

    # ========================================================================
    # PRESENTACIONES
    # ========================================================================

    def chart(self, c: str) -> Chart:
        try:
            return self.charts[c]
        except KeyError:
            raise OverlapMissing(f'Unknown chart {c} in stack {self.name}') from None

    def maximal_presentation(self, c: str) -> AlgebraPresentation:
        """Carta c localizada en todas sus flechas invertibles, sin auxiliares"""
        if c not in self._maximal:
            chart = self.chart(c)
            self._maximal[c] = localize(
                chart.base,
                self.lattice.inverted(c),
                (),
                order=self._order_for(chart, self.lattice.inverted(c)),
                name=f'{chart.base.name}(max)',
            )
        return self._maximal[c]

    def _order_for(self, chart: Chart, inverted: Iterable[str]) -> TermOrder | None:
        if chart.order is None:
            return None
        names = set(chart.base.quiver.with_inverses(inverted).arrow_names)
        return TermOrder(tuple(a for a in chart.order.precedence if a in names))

    def presentation(self, c: str, indices: Iterable[str] | None = None) -> AlgebraPresentation:
        """𝒜_c(U_I): localización de la carta c en S_{c,I}"""
        idx = frozenset(indices or ()) | {c}
        inverted = self.lattice.set_for(c, idx)
        key = (c, frozenset(inverted))
        if key not in self._presentations:
            chart = self.chart(c)
            quiver = chart.base.quiver.with_inverses(inverted)
            names = set(quiver.arrow_names)
            aux = [
                r
                for r in chart.aux_pool
                if set(r.lhs.arrows) <= names and r.rhs.arrow_names <= names
            ]
            label = ','.join(inverted) or '-'
            self._presentations[key] = localize(
                chart.base,
                inverted,
                aux,
                order=self._order_for(chart, inverted),
                name=f'{chart.base.name}({label})',
                max_degree=self.max_degree,
                max_rounds=self.max_rounds,
            )
            logger.debug(f'{self.name}: built presentation of chart {c} on {sorted(idx)}')
        return self._presentations[key]

    def localizations(self) -> list[AlgebraPresentation]:
        """Presentaciones distintas 𝒜_c(U_I) sobre todas las intersecciones no vacías"""
        charts = self.lattice.charts
        found: dict[int, AlgebraPresentation] = {}
        for n in range(1, len(charts) + 1):
            for idx in combinations(charts, n):
                if not self.lattice.overlaps(idx):
                    continue
                for c in idx:
                    P = self.presentation(c, idx)
                    found.setdefault(id(P), P)
        return list(found.values())

    # ========================================================================
    # TRANSICIONES
    # ========================================================================

    def vertex_image(self, i: str, j: str, vertex: str) -> str:
        """G_ij(v) para v vértice de la carta j"""
        if i == j:
            return vertex
        return self._transition_data(i, j).vertex_map[vertex]

    def _transition_data(self, i: str, j: str) -> TransitionData:
        try:
            return self.transitions[(i, j)]
        except KeyError:
            raise OverlapMissing(f'No transition G{i}{j} in stack {self.name}') from None

    def raw_transition(self, i: str, j: str) -> QuiverRep:
        if (i, j) not in self._raw:
            data = self._transition_data(i, j)
            self._raw[(i, j)] = QuiverRep(
                f'G{i}{j}',
                self.maximal_presentation(j),
                self.maximal_presentation(i),
                dict(data.vertex_map),
                dict(data.arrow_map),
            )
        return self._raw[(i, j)]

    def transition(self, i: str, j: str, indices: Iterable[str] | None = None) -> QuiverRep:
        """G_ij sobre U_I: de 𝒜_j(U_I) a 𝒜_i(U_I)"""
        idx = self.lattice.require(frozenset(indices or ()) | {i, j})
        key = (i, j, idx)
        if key not in self._reps:
            self._reps[key] = self._build_transition(i, j, idx)
        return self._reps[key]

    def _build_transition(self, i: str, j: str, idx: frozenset[str]) -> QuiverRep:
        if i == j:
            return identity_rep(self.presentation(i, idx), name=f'G{i}{i}')
        return rehome(
            self.raw_transition(i, j), self.presentation(j, idx), self.presentation(i, idx), f'G{i}{j}'
        )

    # ========================================================================
    # GERBES
    # ========================================================================

    def gerbe(
        self, i: str, j: str, k: str, vertex: str, indices: Iterable[str] | None = None
    ) -> GerbeTerm:
        """c_ijk(v) y su inversa en 𝒜_i(U_I); trivial si no está declarado"""
        idx = self.lattice.require(frozenset(indices or ()) | {i, j, k})
        term = self._gerbe_term(i, j, k, vertex, idx)
        if term is None:
            unit = Element.idempotent(self.vertex_image(i, k, vertex))
            return GerbeTerm(unit, unit)
        target = self.presentation(i, idx)
        term.value.check_quiver(target.quiver)
        term.inverse.check_quiver(target.quiver)
        return GerbeTerm(target.normal_form(term.value), target.normal_form(term.inverse))

    def _gerbe_term(
        self, i: str, j: str, k: str, vertex: str, idx: frozenset[str]
    ) -> GerbeTerm | None:
        if i == j or j == k:
            return None
        return self.gerbes.get((i, j, k), {}).get(vertex)

    def index_sets(self, length: int) -> list[tuple[str, ...]]:
        return self.lattice.tuples(length)
