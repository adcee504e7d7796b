"""
evaluator.py - Operaciones m_k deformadas y extendidas sobre un stack

Responsabilidades:
- Deformation: b = Σ b_l·B_l por objeto
- Evaluator: m_k^b sobre ExtendedElement leyendo las tablas (patrón
  [B*] X1 [B*] … Xk [B*] con a lo sumo N inserciones) y axiomas de unidad
- Colapso vía M en la carta fuente; variantes op (hat_m, bar_hat_m)
- deform / extend_stack / obstruction_ideal / potential
"""

from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from itertools import product

from app.engines.quiver import Element
from app.engines.rewriting import AlgebraPresentation, orient_relation, record_zero
from app.engines.scalars import Scalar
from app.engines.stack import QuiverStack, TensorWord, mult_Mop
from app.reports import Report
from app.utils.exceptions import ChartMismatch, EndpointMismatch
from app.utils.logger import get_logger
from config.settings import settings

from .elements import (
    POINT,
    ExtendedElement,
    ExtTerm,
    assemble,
    collapse_single,
    collapse_word,
    concat_op,
    r_move,
)
from .structure import GeneratorSpec, StructureConstants

logger = get_logger(__name__)

# Ítem de una secuencia completa: índice de entrada o (objeto, generador B)
Item = int | tuple[str, str]


@dataclass
class Deformation:
    """
    b_L = Σ b_l·B_l

    Usage:
        b = Deformation({'L': [('X', A.parse('x1')), ('Y', A.parse('y1'))]})
    """

    components: Mapping[str, Sequence[tuple[str, Element]]] = field(default_factory=dict)

    def of(self, obj: str) -> dict[str, Element]:
        out: dict[str, Element] = {}
        for generator, coefficient in self.components.get(obj, ()):
            out[generator] = out[generator] + coefficient if generator in out else coefficient
        return out

    @property
    def is_zero(self) -> bool:
        return not any(self.components.values())

    def validate(self, S: StructureConstants) -> None:
        """Cada B_l es de grado 1 en CF(L, L) y b_l respeta su tipado"""
        for obj, pieces in self.components.items():
            for name, coefficient in pieces:
                spec = S.generator(name)
                if spec.source != obj or spec.target != obj or spec.degree != 1:
                    raise EndpointMismatch(f'{name} is not a degree-1 generator of CF({obj},{obj})')
                for word, _ in coefficient.terms:
                    head_ok = spec.target_vertex in (None, word.head)
                    tail_ok = spec.source_vertex in (None, word.tail)
                    if not (head_ok and tail_ok):
                        raise EndpointMismatch(f'{word} does not match the typing of {name}')


@dataclass
class Evaluator:
    """
    m_{k,X}^{b_0..b_k}

    Sin stack todas las cartas colapsan en `algebra` (una sola carta,
    G = Id, c = 1).

    Usage:
        ev = extend_stack(S, stack, {'L': '0', 'S3': '3'}, b)
        ev.m([ev.bare('Q')])
    """

    constants: StructureConstants
    deformation: Deformation = field(default_factory=Deformation)
    truncation: int = field(default_factory=lambda: settings.truncation_order)
    stack: QuiverStack | None = None
    typing: Mapping[str, str] = field(default_factory=dict)
    algebra: AlgebraPresentation | None = None

    def __post_init__(self) -> None:
        self.deformation.validate(self.constants)
        for obj in self.deformation.components:
            if self.chart_of(obj) is None:
                raise ChartMismatch(f'Deformed object {obj} needs a chart')
        if self.stack is not None:
            for obj, chart in self.typing.items():
                self.stack.chart(chart)

    # ========================================================================
    # TIPADO
    # ========================================================================

    def chart_of(self, obj: str) -> str | None:
        if self.stack is None and self.algebra is not None:
            return self.typing.get(obj, self.algebra.name)
        return self.typing.get(obj)

    def bare(self, name: str, scalar: Scalar | None = None) -> ExtendedElement:
        """Generador con coeficiente unidad en sus extremos"""
        spec = self.constants.generator(name)
        slots = []
        for obj, vertex in ((spec.target, spec.target_vertex), (spec.source, spec.source_vertex)):
            chart = self.chart_of(obj)
            if chart is not None:
                if vertex is None:
                    raise EndpointMismatch(f'{name} needs vertex typing on chart {chart}')
                slots.append((chart, Element.idempotent(vertex)))
        word = TensorWord(tuple(slots)) if slots else None
        return ExtendedElement.of(ExtTerm(scalar or Scalar.one(), word, name))

    def unit_element(self, obj: str) -> ExtendedElement:
        out = ExtendedElement.zero()
        for name in self.constants.units.get(obj, ()):
            out = out + self.bare(name)
        return out

    def _head(self, spec: GeneratorSpec) -> tuple[str, str] | None:
        chart = self.chart_of(spec.target)
        if chart is None or spec.target_vertex is None:
            return None
        return (chart, spec.target_vertex)

    def _insertion(self, obj: str, coefficient: Element) -> TensorWord:
        chart = self.chart_of(obj)
        if chart is None:
            raise ChartMismatch(f'Object {obj} has no chart')
        return TensorWord.of((chart, coefficient))

    # ========================================================================
    # PATRONES
    # ========================================================================

    def _matches(
        self, key: tuple[str, ...], gens: Sequence[str], objects: Sequence[str]
    ) -> Iterator[list[Item]]:
        """Alineaciones de `key` con [B*] g1 [B*] … gk [B*]"""
        k = len(gens)
        inserted = {obj: self.deformation.of(obj) for obj in set(objects)}

        def walk(pos: int, i: int, items: list[Item]) -> Iterator[list[Item]]:
            if pos == len(key):
                if i == k:
                    yield items
                return
            if key[pos] in inserted[objects[i]]:
                yield from walk(pos + 1, i, items + [(objects[i], key[pos])])
            if i < k and key[pos] == gens[i]:
                yield from walk(pos + 1, i + 1, items + [i])

        yield from walk(0, 0, [])

    def _contributions(
        self, gens: Sequence[str], objects: Sequence[str]
    ) -> Iterator[tuple[Scalar, str, list[Item]]]:
        S = self.constants
        k = len(gens)
        if any(S.is_unit(g) for g in gens):
            yield from self._unit_contributions(gens, objects)
            return
        if k == 0:
            for scalar, out in S.m0.get(objects[0], ()):
                yield scalar, out, []
        for key, rows in S.tables.items():
            if not k <= len(key) <= k + self.truncation:
                continue
            for items in self._matches(key, gens, objects):
                for scalar, out in rows:
                    yield scalar, out, items

    def _unit_contributions(
        self, gens: Sequence[str], objects: Sequence[str]
    ) -> Iterator[tuple[Scalar, str, list[Item]]]:
        """m₂(1,v) = v, m₂(v,1) = (−1)^{|v|} v; el resto se anula"""
        S = self.constants
        one = Scalar.one()
        if len(gens) == 2:
            if S.is_unit(gens[0]):
                yield one, gens[1], [0, 1]
            elif S.is_unit(gens[1]):
                yield self._unit_sign(gens[0]), gens[0], [0, 1]
            return
        if len(gens) != 1 or self.truncation < 1:
            return
        for name in self.deformation.of(objects[0]):
            yield self._unit_sign(name), name, [(objects[0], name), 0]
        for name in self.deformation.of(objects[1]):
            yield one, name, [0, (objects[1], name)]

    def _unit_sign(self, name: str) -> Scalar:
        return Scalar.rational(-1 if self.constants.generator(name).degree % 2 else 1)

    # ========================================================================
    # OPERACIONES
    # ========================================================================

    def objects_of(self, gens: Sequence[str]) -> list[str]:
        specs = [self.constants.generator(g) for g in gens]
        for left, right in zip(specs, specs[1:], strict=False):
            if left.target != right.source:
                raise EndpointMismatch(f'Inputs {tuple(gens)} are not composable')
        return [specs[0].source] + [s.target for s in specs]

    def m(self, inputs: Sequence[ExtendedElement]) -> ExtendedElement:
        """m_k^b(v_1, …, v_k), k ≥ 1, multilineal en los términos"""
        if not inputs:
            raise EndpointMismatch('m() needs at least one input; use m0(obj)')
        out: list[ExtTerm] = []
        for terms in product(*(x.terms for x in inputs)):
            gens = [t.generator for t in terms]
            out.extend(self._evaluate(terms, gens, self.objects_of(gens)))
        return ExtendedElement(tuple(out))

    def m0(self, obj: str) -> ExtendedElement:
        """m_0^b de un objeto"""
        return ExtendedElement(tuple(self._evaluate((), [], [obj])))

    def _evaluate(
        self, terms: Sequence[ExtTerm], gens: Sequence[str], objects: Sequence[str]
    ) -> Iterator[ExtTerm]:
        coefficient = Scalar.one()
        for term in terms:
            coefficient = coefficient * term.scalar
        op = concat_op(t.op for t in terms)
        for scalar, out, items in self._contributions(gens, objects):
            words: list[TensorWord | None] = []
            for item in items:
                if isinstance(item, int):
                    words.append(terms[item].word)
                else:
                    obj, name = item
                    words.append(self._insertion(obj, self.deformation.of(obj)[name]))
            head = self._head(self.constants.generator(out))
            yield ExtTerm(scalar * coefficient, assemble(words, head), out, op)

    # ========================================================================
    # COLAPSO
    # ========================================================================

    def presentation(self, chart: str, idx: frozenset[str]) -> AlgebraPresentation:
        if self.stack is not None:
            return self.stack.presentation(chart, idx)
        if self.algebra is None:
            raise ChartMismatch('Evaluator has neither a stack nor an algebra')
        return self.algebra

    def overlap(self, *elements: ExtendedElement) -> frozenset[str]:
        charts: set[str] = set()
        for x in elements:
            charts |= x.charts
            for t in x.terms:
                if t.op is not None:
                    charts |= set(t.op.charts)
        if self.stack is None or not charts:
            return frozenset(charts)
        return self.stack.lattice.require(charts)

    def collapse(
        self, x: ExtendedElement, overlap: frozenset[str] | None = None
    ) -> dict[str, Element]:
        """Coeficiente colapsado (M) por generador, normalizado"""
        idx = overlap if overlap is not None else self.overlap(x)
        out: dict[str, Element] = {}
        for term in x.terms:
            value = collapse_word(term.word, term.scalar, self.stack, self.algebra, idx)
            out[term.generator] = out[term.generator] + value if term.generator in out else value
        return {g: self._normalize(g, v, idx) for g, v in out.items()}

    def _normalize(self, generator: str, value: Element, idx: frozenset[str]) -> Element:
        chart = self.chart_of(self.constants.generator(generator).source)
        if chart is None:
            return value
        return self.presentation(chart, idx).normal_form(value)

    def collapse_op(self, word: TensorWord, idx: frozenset[str]) -> Element:
        if self.stack is not None:
            return mult_Mop(self.stack, word, idx)
        if self.algebra is None:
            raise ChartMismatch('Evaluator has neither a stack nor an algebra')
        return collapse_single(TensorWord(tuple(reversed(word.slots))), self.algebra)

    def record(
        self,
        report: Report,
        check: str,
        subject: str,
        x: ExtendedElement,
        overlap: frozenset[str] | None = None,
    ) -> None:
        """Registra x = 0 generador a generador"""
        idx = overlap if overlap is not None else self.overlap(x)
        values = self.collapse(x, idx)
        nonzero = {g: v for g, v in values.items() if not v.is_zero}
        if not nonzero:
            report.passed(check, subject)
            return
        for generator, value in sorted(nonzero.items()):
            chart = self.chart_of(self.constants.generator(generator).source)
            if chart is None or value.heads == {POINT}:
                report.fail(check, f'{subject} @ {generator}', residual=str(value))
                continue
            P = self.presentation(chart, idx)
            limits = (
                (self.stack.max_degree, self.stack.max_rounds)
                if self.stack is not None
                else (settings.max_degree, settings.max_rounds)
            )
            record_zero(report, check, f'{subject} @ {generator}', P, value, *limits)


# ============================================================================
# CONSTRUCTORES
# ============================================================================


def deform(
    S: StructureConstants,
    b: Deformation,
    algebra: AlgebraPresentation | None = None,
    truncation: int | None = None,
    typing: Mapping[str, str] | None = None,
) -> Evaluator:
    """
    m_k^b con a lo sumo N inserciones de b (una sola carta)

    Los coeficientes se recogen como f_k ⊗ … ⊗ f_1 y se colapsan al comparar.
    """
    return Evaluator(
        S,
        b,
        truncation if truncation is not None else settings.truncation_order,
        typing=dict(typing or {}),
        algebra=algebra,
    )


def extend_stack(
    S: StructureConstants,
    X: QuiverStack,
    typing: Mapping[str, str],
    b: Deformation | None = None,
    truncation: int | None = None,
) -> Evaluator:
    """
    m_{k,X}: objetos asignados a cartas de X, coeficientes colapsados vía M

    Raises:
        ChartMismatch: carta desconocida o objeto deformado sin carta
    """
    return Evaluator(
        S,
        b or Deformation(),
        truncation if truncation is not None else settings.truncation_order,
        stack=X,
        typing=typing,
    )


def obstruction_ideal(ev: Evaluator, obj: str) -> dict[str, Element]:
    """Coeficientes de m_0^b en los generadores que no son unidades"""
    values = ev.collapse(ev.m0(obj))
    S = ev.constants
    out = {g: v for g, v in values.items() if not S.is_unit(g) and not v.is_zero}
    logger.info(f'obstruction of {obj}: {len(out)} nonzero coefficient(s)')
    return out


def obstruction_presentation(
    ev: Evaluator, obj: str, base: AlgebraPresentation, name: str | None = None
) -> AlgebraPresentation:
    """
    Cociente de `base` por el ideal de obstrucción de obj

    Cada coeficiente se orienta como en jacobi_presentation (líder con
    coeficiente 1), así que ambas presentaciones se comparan regla a regla.

    Raises:
        NonMonomialLeadingTerm: coeficiente con término líder no invertible
    """
    rules = [orient_relation(v, base.order) for _, v in sorted(obstruction_ideal(ev, obj).items())]
    return base.with_rules(rules, name=name or f'{base.name}/obstruction({obj})')


def potential(ev: Evaluator, obj: str) -> Element:
    """W: suma de los coeficientes de m_0^b en las unidades de obj"""
    values = ev.collapse(ev.m0(obj))
    out = Element.zero()
    for name in ev.constants.units.get(obj, ()):
        out = out + values.get(name, Element.zero())
    return out


def hat_m(
    ev: Evaluator, inputs: Sequence[ExtendedElement]
) -> dict[str, list[tuple[Element, Element | None]]]:
    """M^op ∘ m: palabra izquierda y palabra op colapsadas por separado"""
    result = ev.m(inputs)
    idx = ev.overlap(result, *inputs)
    out: dict[str, list[tuple[Element, Element | None]]] = {}
    for term in result.terms:
        if term.word is None:
            raise ChartMismatch(f'{term.generator} has no coefficient word')
        left = ev.collapse_op(term.word, idx).scale(term.scalar)
        op = ev.collapse_op(term.op, idx) if term.op is not None else None
        out.setdefault(term.generator, []).append((left, op))
    return out


def bar_hat_m(ev: Evaluator, inputs: Sequence[ExtendedElement]) -> dict[str, Element]:
    """M^op ∘ R ∘ m"""
    result = ev.m(inputs)
    idx = ev.overlap(result, *inputs)
    out: dict[str, Element] = {}
    for term in result.terms:
        if term.word is None:
            raise ChartMismatch(f'{term.generator} has no coefficient word')
        value = ev.collapse_op(r_move(term.word, term.op), idx).scale(term.scalar)
        out[term.generator] = out[term.generator] + value if term.generator in out else value
    return out
