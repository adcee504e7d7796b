"""
functor.py - Functor espejo: objetos a complejos torcidos, morfismos a cocadenas

Responsabilidades:
- Celdas φ_{i0..ik}(−) = ±m_{k+1}(α_{i0 i1}, …, α_{ik-1 ik}, −)
- Celdas de morfismos ±m_{k+p+1}(α, …, α, −, Q_1, …, Q_p)
- Traducción de palabras de coeficientes a términos sándwich
"""

from collections.abc import Mapping, Sequence
from itertools import product

from app.engines.quiver import Element
from app.engines.stack import TensorWord, mult_M
from app.engines.twisted import (
    Cochain,
    Generator,
    GradedFreeModule,
    MorphismCell,
    SandwichTerm,
    TwistedComplex,
)
from app.utils.exceptions import ChartMismatch
from app.utils.logger import get_logger

from .elements import ExtendedElement, ExtTerm
from .evaluator import Evaluator

logger = get_logger(__name__)

Pair = tuple[str, str]


class MirrorFunctor:
    """
    F^α sobre los objetos con carta de la familia α

    Usage:
        F = MirrorFunctor(ev, alpha)
        T = F.on_object('L')
        mc_check(T).ok
    """

    def __init__(self, ev: Evaluator, alpha: Mapping[Pair, ExtendedElement]):
        if ev.stack is None:
            raise ChartMismatch('The mirror functor needs a stack-extended evaluator')
        self.ev = ev
        self.stack = ev.stack
        self.alpha = alpha
        self.objects = sorted({o for pair in alpha for o in pair} | set(ev.typing))
        self.chart_object: dict[str, str] = {}
        for obj in self.objects:
            chart = ev.chart_of(obj)
            if chart is None:
                raise ChartMismatch(f'Object {obj} of the family has no chart')
            if chart in self.chart_object:
                raise ChartMismatch(f'Chart {chart} carries two objects')
            self.chart_object[chart] = obj

    # ========================================================================
    # TUPLAS
    # ========================================================================

    def _alpha(self, j: str, k: str) -> ExtendedElement | None:
        if j == k:
            return self.alpha.get((j, k), self.ev.unit_element(j))
        return self.alpha.get((j, k))

    def tuples(self, max_len: int) -> list[tuple[tuple[str, ...], list[ExtendedElement]]]:
        """Tuplas de cartas con intersección y α definido entre vecinos"""
        out = []
        charts = sorted(self.chart_object)
        for length in range(1, max_len + 1):
            for indices in product(charts, repeat=length):
                if not self.stack.lattice.overlaps(indices):
                    continue
                objs = [self.chart_object[c] for c in indices]
                alphas = [self._alpha(a, b) for a, b in zip(objs, objs[1:], strict=False)]
                if all(a is not None for a in alphas):
                    out.append((indices, [a for a in alphas if a is not None]))
        return out

    # ========================================================================
    # SÁNDWICH
    # ========================================================================

    def sandwich(self, indices: tuple[str, ...], term: ExtTerm, sign: int) -> list[SandwichTerm]:
        """
        La ranura izquierda (la de la entrada) es `right`; el resto, colapsado
        por M y precedido del gerbe inverso, es `left`
        """
        if term.word is None:
            raise ChartMismatch(f'{term.generator} has no coefficient word')
        X = self.stack
        idx = X.lattice.require(indices)
        i0, ik = indices[0], indices[-1]
        chart, right = term.word.slots[0]
        if chart != ik:
            raise ChartMismatch(f'Input slot sits on chart {chart}, expected {ik}')
        rest = TensorWord(term.word.slots[1:]) if len(term.word) > 1 else None
        scalar = term.scalar * sign
        out = []
        for path, coefficient in right.terms:
            if rest is None:
                left = Element.idempotent(X.vertex_image(i0, ik, path.tail))
            else:
                left = mult_M(X, rest, idx)
                if len(rest) >= 2:
                    left = X.gerbe(i0, rest.slots[0][0], ik, path.tail, idx).inverse * left
            out.append(SandwichTerm(left.scale(scalar), Element.of_word(path, coefficient)))
        return out

    def _module(self, target: str) -> GradedFreeModule:
        charts = {}
        for chart, obj in self.chart_object.items():
            generators = []
            for spec in self.ev.constants.generators.values():
                if spec.source == obj and spec.target == target:
                    if spec.source_vertex is None:
                        raise ChartMismatch(f'{spec.name} needs a vertex on chart {chart}')
                    generators.append(Generator(spec.name, spec.source_vertex, spec.degree))
            charts[chart] = generators
        return GradedFreeModule(charts)

    def _cells(self, target: str, tail: Sequence[str], max_len: int) -> list[MorphismCell]:
        """Celdas de m_{k+p+1}(α, …, α, −, Q_1, …, Q_p) con − en CF(L_ik, target)"""
        S = self.ev.constants
        if self.ev.chart_of(target) is not None:
            raise ChartMismatch(f'Target {target} must not carry a chart')
        tail_inputs = [self.ev.bare(q) for q in tail]
        tail_shift = sum(S.generator(q).shifted for q in tail)
        cells: dict[tuple[tuple[str, ...], int], dict[Pair, list[SandwichTerm]]] = {}
        for indices, alphas in self.tuples(max_len):
            k = len(indices) - 1
            source = self.chart_object[indices[-1]]
            for spec in S.generators.values():
                if spec.source != source or spec.target != target:
                    continue
                x = spec.shifted
                if not tail:
                    exponent = spec.degree if k == 0 else (k - 1) * x
                else:
                    exponent = k * (x + tail_shift) + x
                sign = -1 if exponent % 2 else 1
                result = self.ev.m(alphas + [self.ev.bare(spec.name)] + tail_inputs)
                for term in result.terms:
                    q = S.generator(term.generator).degree - spec.degree
                    entry = cells.setdefault((indices, q), {})
                    terms = entry.setdefault((term.generator, spec.name), [])
                    terms.extend(self.sandwich(indices, term, sign))
        return [
            MorphismCell(indices, q, {key: tuple(terms) for key, terms in entries.items()})
            for (indices, q), entries in sorted(cells.items())
        ]

    # ========================================================================
    # FUNCTOR
    # ========================================================================

    def on_object(self, target: str, max_len: int = 2) -> TwistedComplex:
        """
        F(L): módulo CF(L_i, L) por carta y celdas φ como elemento MC

        Las celdas degeneradas salen de m₂(1, −) = −.
        """
        module = self._module(target)
        mc = Cochain.of(self._cells(target, (), max_len))
        logger.info(f'F({target}): {len(mc)} cell(s) over {len(self.chart_object)} chart(s)')
        return TwistedComplex(f'F({target})', self.stack, module, mc, unit_cells=False)

    def on_morphisms(self, word: Sequence[str], max_len: int = 2) -> Cochain:
        """F(Q_1, …, Q_p) para generadores componibles Q_j"""
        if not word:
            raise ChartMismatch('A morphism word needs at least one generator')
        self.ev.objects_of(word)
        start = self.ev.constants.generator(word[0]).source
        return Cochain.of(self._cells(start, word, max_len))


def mirror_functor(
    ev: Evaluator,
    alpha: Mapping[Pair, ExtendedElement],
    target: str | Sequence[str],
    max_len: int = 2,
) -> TwistedComplex | Cochain:
    """
    Objeto (nombre) → complejo torcido; palabra de morfismos → cocadena

    Raises:
        ChartMismatch: evaluador sin stack, objetivo con carta, tipado ausente
    """
    functor = MirrorFunctor(ev, alpha)
    if isinstance(target, str):
        return functor.on_object(target, max_len)
    return functor.on_morphisms(target, max_len)
