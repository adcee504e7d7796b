"""
Representations Module

Usage básico:
    from app.engines.representations import QuiverRep, rep_apply, rep_check

    report = rep_check(G01, max_degree=6, max_rounds=4)
"""

from .representation import (
    QuiverRep,
    identity_rep,
    rehome,
    rep_apply,
    rep_check,
    rep_check_inverses,
    rep_compose,
)

__all__ = [
    'QuiverRep',
    'identity_rep',
    'rehome',
    'rep_apply',
    'rep_check',
    'rep_check_inverses',
    'rep_compose',
]
