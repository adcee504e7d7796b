"""
jacobi.py - Álgebras de Jacobi Jac(Q, Φ) = ΛQ/(∂_a Φ)

Una regla por flecha con derivada no nula: término líder => -(resto),
normalizado a coeficiente líder 1.
"""

from app.engines.quiver import Element, Quiver, Superpotential, cyclic_derivative
from app.engines.scalars import ExponentSymbolTable
from app.utils.exceptions import NonMonomialLeadingTerm, NotInvertible

from .presentation import AlgebraPresentation, RewriteRule
from .term_order import TermOrder


def orient_relation(relation: Element, order: TermOrder) -> RewriteRule:
    """
    Raises:
        NonMonomialLeadingTerm: coeficiente líder no invertible o líder trivial
    """
    lead, coeff = order.leading(relation)
    if lead.is_trivial:
        raise NonMonomialLeadingTerm(f'Leading term of {relation} is a trivial path')
    try:
        inverse = coeff.invert_monomial()
    except NotInvertible as e:
        raise NonMonomialLeadingTerm(f'Leading coefficient {coeff} of {relation}') from e
    rest = Element(tuple((w, s) for w, s in relation.terms if w != lead))
    return RewriteRule(lead, (-rest).scale(inverse))


def jacobi_presentation(
    quiver: Quiver,
    phi: Superpotential,
    order: TermOrder,
    name: str | None = None,
    table: ExponentSymbolTable | None = None,
) -> AlgebraPresentation:
    rules = []
    for arrow in quiver.arrows:
        derivative = cyclic_derivative(phi, arrow)
        if derivative.is_zero:
            continue
        rules.append(orient_relation(derivative, order))
    return AlgebraPresentation(name or f'Jac({quiver.name})', quiver, order, rules, (), table)
