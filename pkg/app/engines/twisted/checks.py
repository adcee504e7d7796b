"""
checks.py - Complejos torcidos: Maurer–Cartan y diferencial de morfismos

Responsabilidades:
- TwistedComplex: stack + módulo + elemento MC (celdas de grado total 1)
- mc_check: ∂̌a + a·a = 0 celda a celda
- morphism_diff: d φ = ∂̌φ + b·φ − (−1)^{|φ|} φ·a
"""

from dataclasses import dataclass

from app.engines.quiver import Element
from app.engines.rewriting import AlgebraPresentation, completed_stage, record_zero
from app.engines.stack import QuiverStack
from app.reports import Report
from app.utils.exceptions import ChartMismatch, EndpointMismatch
from app.utils.logger import get_logger

from .cells import (
    BIMODULE,
    SANDWICH,
    BundleTerm,
    MorphismCell,
    SandwichTerm,
    Term,
    bundle_value,
    sandwich_value,
)
from .cochains import Cochain, cech_diff, cochain_product
from .modules import GradedFreeModule

logger = get_logger(__name__)


@dataclass
class TwistedComplex:
    """
    (E, a) sobre un stack

    Para complejos de bimódulos (`kind='bimodule'`) se indican las
    presentaciones de la fibra y del álgebra que actúa por la derecha.

    Usage:
        T = TwistedComplex('U', stack, module, mc)
        mc_check(T).ok
    """

    name: str
    stack: QuiverStack
    module: GradedFreeModule
    mc: Cochain
    kind: str = SANDWICH
    fiber: AlgebraPresentation | None = None
    right: AlgebraPresentation | None = None
    unit_cells: bool = True

    def __post_init__(self) -> None:
        if self.kind == BIMODULE and (self.fiber is None or self.right is None):
            raise ChartMismatch(f'Bimodule complex {self.name} needs fiber and right algebras')
        if self.unit_cells:
            self._add_unit_cells()
        for cell in self.mc.cells.values():
            if cell.degree != 1:
                raise EndpointMismatch(
                    f'{self.name}: MC cell {cell.indices} has total degree {cell.degree}'
                )
            check_cell_degrees(self.module, self.module, cell)

    def _add_unit_cells(self) -> None:
        """a_cc^{1,0} = id en cada carta (tuplas degeneradas)"""
        for chart, generators in self.module.charts.items():
            if ((chart, chart), 0) in self.mc.cells or chart not in self.stack.lattice.charts:
                continue
            entries: dict[tuple[str, str], tuple[Term, ...]] = {}
            for g in generators:
                unit = Element.idempotent(g.vertex)
                if self.kind == BIMODULE and self.fiber and self.right:
                    term: Term = BundleTerm(unit, self.fiber.unit(), self.right.unit())
                else:
                    term = SandwichTerm(unit, unit)
                entries[(g.label, g.label)] = (term,)
            self.mc.add_cell(MorphismCell((chart, chart), 0, entries, self.kind))


def check_cell_degrees(
    source: GradedFreeModule, target: GradedFreeModule, cell: MorphismCell
) -> None:
    for r, s in cell.entries:
        d_target = target.generator(cell.target_chart, r).degree
        d_source = source.generator(cell.source_chart, s).degree
        if d_target - d_source != cell.q:
            raise EndpointMismatch(
                f'Cell {cell.indices}: entry {s} -> {r} shifts degree by '
                f'{d_target - d_source}, expected {cell.q}'
            )


def record_tensor_zero(
    report: Report,
    check: str,
    subject: str,
    terms: list[BundleTerm],
    factors: tuple[AlgebraPresentation, AlgebraPresentation, AlgebraPresentation],
    max_degree: int,
    max_rounds: int,
) -> None:
    """
    Registra en `report` si Σ l ⊗ f ⊗ r = 0

    Las formas normales de un sistema saturado son base, así que un
    residuo no nulo sólo es FAIL si las tres álgebras saturan; si no,
    UNDECIDED con el tensor reducido en las etapas alcanzadas.
    """
    tensor = bundle_value(terms, *factors)
    if tensor.is_zero:
        report.passed(check, subject)
        return
    stages = [completed_stage(P, max_degree, max_rounds) for P in factors]
    left, fiber, right = (stage for stage, _ in stages)
    tensor = bundle_value(terms, left, fiber, right)
    if tensor.is_zero:
        report.passed(check, subject)
    elif all(saturated for _, saturated in stages):
        report.fail(check, subject, residual=str(tensor))
    else:
        logger.warning(f'{check} {subject}: tensor undecided after {max_rounds} rounds')
        report.undecided(check, subject, residual=str(tensor))


def cochain_report(
    X: QuiverStack,
    cochain: Cochain,
    title: str,
    check: str = 'cell',
    fiber: AlgebraPresentation | None = None,
    right: AlgebraPresentation | None = None,
) -> Report:
    """Reporta cada entrada (tupla, destino, fuente) cuyo valor no es cero"""
    report = Report(title=title)
    for cell in cochain.sorted_cells():
        idx = X.lattice.require(cell.indices)
        target = X.presentation(cell.target_chart, idx)
        for (r, s), terms in sorted(cell.entries.items()):
            subject = f'{cell.indices}^{cell.q} [{s} -> {r}]'
            if cell.kind == SANDWICH:
                value = sandwich_value(X, cell, [t for t in terms if isinstance(t, SandwichTerm)])
                record_zero(report, check, subject, target, value, X.max_degree, X.max_rounds)
                continue
            if fiber is None or right is None:
                raise ChartMismatch(f'Bimodule cell {cell.indices} needs fiber and right algebras')
            bundle = [t for t in terms if isinstance(t, BundleTerm)]
            factors = (target, fiber, right)
            record_tensor_zero(report, check, subject, bundle, factors, X.max_degree, X.max_rounds)
    return report


def mc_check(T: TwistedComplex, max_len: int | None = None) -> Report:
    """∂̌a + a·a sobre tuplas de longitud ≤ max_len (por defecto la mayor de a + 1)"""
    X = T.stack
    bound = max_len or T.mc.max_length + 1
    curvature = cech_diff(X, T.mc, bound) + cochain_product(X, T.mc, T.mc, bound)
    report = cochain_report(X, curvature, f'{T.name} Maurer-Cartan', 'mc', T.fiber, T.right)
    logger.info(f'{report.title}: {report.verdict.value} ({report.checked} entries)')
    return report


def morphism_diff(
    X: QuiverStack, phi: Cochain, a: Cochain, b: Cochain, max_len: int | None = None
) -> Cochain:
    """d φ = ∂̌φ + b·φ − (−1)^{|φ|} φ·a, con el signo tomado celda a celda"""
    out = cech_diff(X, phi, max_len) + cochain_product(X, b, phi, max_len)
    for cell in phi.sorted_cells():
        single = Cochain.of([cell], phi.kind)
        product = cochain_product(X, single, a, max_len)
        out = out - product if cell.degree % 2 == 0 else out + product
    return out
