"""
restrict.py - Restricción de un stack a un subconjunto de cartas vía un hub

G'_ij = G_ih ∘ G_hj sobre U_{I ∪ {h}}, y los gerbes se recalculan a
través del hub:
    c'_ijk(v) = G_ih(c_hjh(G_hk(v))) · (c_ihi(v) si i == k)
"""

from collections.abc import Iterable
from dataclasses import dataclass

from app.engines.representations import QuiverRep, identity_rep, rep_compose
from app.engines.rewriting import AlgebraPresentation
from app.reports import Report
from app.utils.exceptions import OverlapMissing
from app.utils.logger import get_logger

from .checks import check_all_cocycles, check_all_tetrahedra
from .lattice import RestrictedLattice
from .stack import GerbeTerm, QuiverStack

logger = get_logger(__name__)


@dataclass
class RestrictedStack(QuiverStack):
    """Stack sobre `keep` cuyas transiciones pasan por el hub del stack padre"""

    parent: QuiverStack | None = None
    hub: str = ''

    @property
    def source(self) -> QuiverStack:
        if self.parent is None:
            raise OverlapMissing(f'Restricted stack {self.name} has no parent')
        return self.parent

    def presentation(self, c: str, indices: Iterable[str] | None = None) -> AlgebraPresentation:
        idx = self.lattice.require(frozenset(indices or ()) | {c})
        return self.source.presentation(c, idx | {self.hub})

    def _build_transition(self, i: str, j: str, idx: frozenset[str]) -> QuiverRep:
        if i == j:
            return identity_rep(self.presentation(i, idx), name=f'G{i}{i}')
        full = idx | {self.hub}
        composite = rep_compose(
            self.source.transition(i, self.hub, full),
            self.source.transition(self.hub, j, full),
            name=f'G{i}{j}',
        )
        return composite

    def vertex_image(self, i: str, j: str, vertex: str) -> str:
        if i == j:
            return vertex
        return self.source.vertex_image(i, self.hub, self.source.vertex_image(self.hub, j, vertex))

    def _gerbe_term(
        self, i: str, j: str, k: str, vertex: str, idx: frozenset[str]
    ) -> GerbeTerm | None:
        if i == j or j == k:
            return None
        hub, parent = self.hub, self.source
        full = idx | {hub}
        G_ih = parent.transition(i, hub, full)
        inner = parent.gerbe(hub, j, hub, parent.vertex_image(hub, k, vertex), full)
        value, inverse = G_ih.apply(inner.value), G_ih.apply(inner.inverse)
        if i == k:
            own = parent.gerbe(i, hub, i, vertex, full)
            value, inverse = value * own.value, own.inverse * inverse
        return GerbeTerm(value, inverse)


def restrict_stack(X: QuiverStack, keep: Iterable[str], hub: str) -> RestrictedStack:
    """
    Raises:
        OverlapMissing: hub dentro de keep o sin intersección con las cartas
    """
    kept = tuple(keep)
    if hub in kept:
        raise OverlapMissing(f'Hub {hub} must not be among the kept charts {kept}')
    for c in kept:
        X.lattice.require({c, hub})
    return RestrictedStack(
        name=f'{X.name}|{",".join(kept)}',
        lattice=RestrictedLattice(X.lattice, kept, hub),
        charts={c: X.charts[c] for c in kept},
        max_degree=X.max_degree,
        max_rounds=X.max_rounds,
        parent=X,
        hub=hub,
    )


def stack_restrict(X: QuiverStack, keep: Iterable[str], hub: str) -> tuple[QuiverStack, Report]:
    """Restringe X a `keep` vía `hub` y verifica cociclos y tetraedros del resultado"""
    restricted = restrict_stack(X, keep, hub)
    report = Report.merge(
        f'{restricted.name} verification',
        [check_all_cocycles(restricted), check_all_tetrahedra(restricted)],
    )
    logger.info(f'Restricted {X.name} to {tuple(restricted.charts)} via {hub}: {report.verdict.value}')
    return restricted, report
