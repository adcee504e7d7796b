"""
checks.py - Verificaciones de cociclo, tetraedro y gerbes

Las verificaciones cuantifican sobre generadores (flechas e inversas
registradas); la multiplicatividad de ambos lados extiende la identidad
a todos los caminos.
"""

from app.engines.quiver import Element
from app.engines.rewriting import AlgebraPresentation, record_zero
from app.engines.representations import rep_check_inverses
from app.reports import Report
from app.utils.logger import get_logger

from .stack import QuiverStack

logger = get_logger(__name__)


def _zero(
    X: QuiverStack, report: Report, check: str, subject: str, P: AlgebraPresentation, x: Element
) -> None:
    record_zero(report, check, subject, P, x, X.max_degree, X.max_rounds)


def stack_check_cocycle(X: QuiverStack, triple: tuple[str, str, str]) -> Report:
    """G_ij(G_jk(a)) = c_ijk(h_a)·G_ik(a)·c_ijk⁻¹(t_a) para cada flecha a de la carta k"""
    i, j, k = triple
    idx = X.lattice.require(triple)
    report = Report(title=f'{X.name} cocycle {triple}')
    source = X.presentation(k, idx)
    target = X.presentation(i, idx)
    G_ij, G_jk, G_ik = X.transition(i, j, idx), X.transition(j, k, idx), X.transition(i, k, idx)
    for arrow in source.quiver.arrows:
        a = Element.of_word(source.quiver.word([arrow.name]))
        lhs = G_ij.apply(G_jk.apply(a))
        head = X.gerbe(i, j, k, arrow.head, idx).value
        tail_inverse = X.gerbe(i, j, k, arrow.tail, idx).inverse
        rhs = head * G_ik.apply(a) * tail_inverse
        _zero(X, report, 'cocycle', f'{triple} {arrow.name}', target, lhs - rhs)
    return report


def stack_check_tetrahedron(X: QuiverStack, quadruple: tuple[str, str, str, str]) -> Report:
    """c_ijk(G_kl(v))·c_ikl(v) = G_ij(c_jkl(v))·c_ijl(v) para cada vértice v de la carta l"""
    i, j, k, l = quadruple
    idx = X.lattice.require(quadruple)
    report = Report(title=f'{X.name} tetrahedron {quadruple}')
    target = X.presentation(i, idx)
    G_ij = X.transition(i, j, idx)
    for v in X.presentation(l, idx).quiver.vertices:
        lhs = X.gerbe(i, j, k, X.vertex_image(k, l, v), idx).value * X.gerbe(i, k, l, v, idx).value
        rhs = G_ij.apply(X.gerbe(j, k, l, v, idx).value) * X.gerbe(i, j, l, v, idx).value
        _zero(X, report, 'tetrahedron', f'{quadruple} {v}', target, lhs - rhs)
    return report


def check_gerbe_inverses(X: QuiverStack, triple: tuple[str, str, str]) -> Report:
    """c·c⁻¹ y c⁻¹·c son idempotentes en los vértices tipados"""
    i, j, k = triple
    idx = X.lattice.require(triple)
    report = Report(title=f'{X.name} gerbe inverses {triple}')
    target = X.presentation(i, idx)
    for v in X.presentation(k, idx).quiver.vertices:
        term = X.gerbe(i, j, k, v, idx)
        head = Element.idempotent(X.vertex_image(i, j, X.vertex_image(j, k, v)))
        tail = Element.idempotent(X.vertex_image(i, k, v))
        for label, difference in (
            ('c c^-1', term.value * term.inverse - head),
            ('c^-1 c', term.inverse * term.value - tail),
        ):
            _zero(X, report, 'gerbe', f'{triple} {v} {label}', target, difference)
    return report


def check_all_cocycles(X: QuiverStack) -> Report:
    reports = [stack_check_cocycle(X, t) for t in X.index_sets(3)]
    report = Report.merge(f'{X.name} cocycles', reports)
    logger.info(f'{report.title}: {report.verdict.value} ({report.checked} identities)')
    return report


def check_all_tetrahedra(X: QuiverStack) -> Report:
    reports = [stack_check_tetrahedron(X, t) for t in X.index_sets(4)]
    report = Report.merge(f'{X.name} tetrahedra', reports)
    logger.info(f'{report.title}: {report.verdict.value} ({report.checked} identities)')
    return report


def check_all_gerbes(X: QuiverStack) -> Report:
    return Report.merge(
        f'{X.name} gerbe inverses', [check_gerbe_inverses(X, t) for t in X.index_sets(3)]
    )


def chart_check(X: QuiverStack) -> Report:
    """
    Verificación de cartas afines para un stack de dos cartas

    G10∘G01 = Id sobre la carta 1, G01∘G10(a) = c(h_a)·a·c(t_a)⁻¹ sobre
    la carta 0, e imágenes de inversas bien definidas.
    """
    first, second = X.lattice.charts[:2]
    reports = [
        stack_check_cocycle(X, (second, first, second)),
        stack_check_cocycle(X, (first, second, first)),
        rep_check_inverses(X.transition(first, second)),
        rep_check_inverses(X.transition(second, first)),
    ]
    return Report.merge(f'{X.name} chart check', reports)
