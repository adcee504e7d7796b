"""
cochains.py - Cocadenas de Čech con valores en matrices sándwich

Responsabilidades:
- Cochain: celdas indexadas por (tupla de Čech, grado interno)
- Producto con signo (−1)^{q·r} para u^{p,q} · v^{r,s}
- Diferencial de Čech (borrado de índices interiores)
"""

from collections.abc import Iterable
from dataclasses import dataclass, field

from app.engines.stack import QuiverStack
from app.utils.logger import get_logger

from .cells import SANDWICH, MorphismCell, cell_cup, identity_cell
from .modules import GradedFreeModule

logger = get_logger(__name__)

CellKey = tuple[tuple[str, ...], int]


@dataclass
class Cochain:
    """
    Suma finita de celdas de morfismo

    Usage:
        u = Cochain.of([cell])
        w = cochain_product(X, u, v)
    """

    cells: dict[CellKey, MorphismCell] = field(default_factory=dict)
    kind: str = SANDWICH

    @classmethod
    def of(cls, cells: Iterable[MorphismCell], kind: str = SANDWICH) -> 'Cochain':
        out = cls(kind=kind)
        for cell in cells:
            out.add_cell(cell)
        return out

    def add_cell(self, cell: MorphismCell) -> None:
        existing = self.cells.get(cell.key)
        self.cells[cell.key] = cell if existing is None else existing.merged(cell)

    def __add__(self, other: 'Cochain') -> 'Cochain':
        out = Cochain(dict(self.cells), self.kind)
        for cell in other.cells.values():
            out.add_cell(cell)
        return out

    def scaled(self, scalar: int) -> 'Cochain':
        return Cochain.of((c.scaled(scalar) for c in self.cells.values()), self.kind)

    def __neg__(self) -> 'Cochain':
        return self.scaled(-1)

    def __sub__(self, other: 'Cochain') -> 'Cochain':
        return self + (-other)

    def sorted_cells(self) -> list[MorphismCell]:
        return [self.cells[k] for k in sorted(self.cells)]

    @property
    def max_length(self) -> int:
        return max((len(c.indices) for c in self.cells.values()), default=0)

    def __len__(self) -> int:
        return len(self.cells)


def identity_cochain(X: QuiverStack, module: GradedFreeModule) -> Cochain:
    """id^{0,0} en cada carta del módulo"""
    cells = []
    for chart, generators in module.charts.items():
        if chart in X.lattice.charts:
            cells.append(identity_cell(chart, [(g.label, g.vertex) for g in generators]))
    return Cochain.of(cells)


def cochain_product(
    X: QuiverStack, u: Cochain, v: Cochain, max_len: int | None = None
) -> Cochain:
    """(u·v)_{i0..i_{p+r}} = Σ (−1)^{q·r} u^{p,q}_{i0..ip} ∪ v^{r,s}_{ip..i_{p+r}}"""
    out = Cochain(kind=u.kind)
    for cu in u.sorted_cells():
        for cv in v.sorted_cells():
            if cu.source_chart != cv.target_chart:
                continue
            length = len(cu.indices) + len(cv.indices) - 1
            if max_len is not None and length > max_len:
                continue
            if not X.lattice.overlaps(cu.indices + cv.indices[1:]):
                continue
            sign = -1 if (cu.q * cv.p) % 2 else 1
            cup = cell_cup(X, cu, cv)
            if cup.entries:
                out.add_cell(cup if sign == 1 else cup.scaled(-1))
    return out


def cech_diff(X: QuiverStack, u: Cochain, max_len: int | None = None) -> Cochain:
    """(∂̌u)_{i0..i_{p+1}} = Σ_{k=1}^{p} (−1)^k u_{i0..î_k..i_{p+1}}"""
    out = Cochain(kind=u.kind)
    for cell in u.sorted_cells():
        p = cell.p
        if max_len is not None and p + 2 > max_len:
            continue
        for k in range(1, p + 1):
            for chart in X.lattice.charts:
                indices = cell.indices[:k] + (chart,) + cell.indices[k:]
                if not X.lattice.overlaps(indices):
                    continue
                moved = cell.reindexed(indices)
                out.add_cell(moved if k % 2 == 0 else moved.scaled(-1))
    return out
