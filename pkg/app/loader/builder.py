"""
builder.py - Construye los objetos del motor a partir de un DatasetDocument

Responsabilidades:
- Resolver referencias por nombre (con caché por tipo)
- Parsear elementos sobre el quiver correcto de cada carta/intersección
- Componer transiciones `via` y gerbes transportados
"""

from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import TypeVar

from app.engines.ainfty import (
    Deformation,
    Evaluator,
    ExtendedElement,
    ExtTerm,
    GeneratorSpec,
    StructureConstants,
    deform,
    extend_stack,
)
from app.engines.quiver import Arrow, Element, Quiver, Superpotential
from app.engines.quiver.parsers import parse_element, parse_path
from app.engines.representations import QuiverRep
from app.engines.rewriting import (
    AlgebraPresentation,
    RewriteRule,
    TermOrder,
    jacobi_presentation,
    localize,
    localized_quiver,
)
from app.engines.scalars import ExponentSymbolTable, Scalar
from app.engines.scalars.parsers import build_symbol_table, parse_scalar
from app.engines.stack import (
    Chart,
    CoverLattice,
    GerbeTerm,
    QuiverStack,
    TensorWord,
    TransitionData,
    restrict_stack,
)
from app.engines.twisted import (
    BIMODULE,
    BundleTerm,
    Cochain,
    Generator,
    GradedFreeModule,
    MorphismCell,
    SandwichTerm,
    Term,
    TwistedComplex,
)
from app.utils.exceptions import DanglingReference, DatasetParseError, NotInvertible, QStackError
from app.utils.logger import get_logger

from .models import CellSpec, ComplexSpec, DatasetDocument, StackSpec

logger = get_logger(__name__)

T = TypeVar('T')


def split_key(key: str) -> tuple[str, ...]:
    """'0,3' -> ('0', '3')"""
    return tuple(part.strip() for part in str(key).split(','))


@dataclass
class ExtensionBundle:
    """Evaluador más los elementos con nombre y la familia α"""

    name: str
    evaluator: Evaluator
    elements: dict[str, ExtendedElement] = field(default_factory=dict)
    alpha: dict[tuple[str, str], ExtendedElement] = field(default_factory=dict)
    witnesses: dict[tuple[str, str, str], ExtendedElement] = field(default_factory=dict)
    functor: tuple[str, ...] = ()


class DatasetBuilder:
    """
    Usage:
        builder = DatasetBuilder(document)
        A0 = builder.presentation('A0')
        X = builder.stack('Yhat')
    """

    def __init__(self, document: DatasetDocument):
        self.document = document
        self.table: ExponentSymbolTable = build_symbol_table(
            document.symbols, document.abbreviations
        )
        self._quivers: dict[str, Quiver] = {}
        self._presentations: dict[str, AlgebraPresentation] = {}
        self._representations: dict[str, QuiverRep] = {}
        self._stacks: dict[str, QuiverStack] = {}
        self._complexes: dict[str, TwistedComplex] = {}
        self._systems: dict[str, StructureConstants] = {}
        self._extensions: dict[str, ExtensionBundle] = {}

    # ========================================================================
    # UTILIDADES
    # ========================================================================

    @staticmethod
    def _lookup(section: str, name: str, known: Mapping[str, T]) -> T:
        if name not in known:
            raise DanglingReference(f'Unknown {section[:-1]} {name!r}', section=section)
        return known[name]

    def element(self, text: str, quiver: Quiver, section: str = 'elements') -> Element:
        try:
            return parse_element(str(text), quiver, self.table)
        except DatasetParseError as e:
            if e.section is None:
                raise DatasetParseError(e.message, section=section) from e
            raise
        except QStackError as e:
            raise DatasetParseError(str(e), section=section) from e

    def scalar(self, text: str, section: str = 'scalars') -> Scalar:
        try:
            return parse_scalar(str(text), self.table)
        except QStackError as e:
            raise DatasetParseError(str(e), section=section) from e

    def rule(self, text: str, quiver: Quiver, origin: str = 'base') -> RewriteRule:
        lhs, sep, rhs = str(text).partition('=>')
        if not sep:
            raise DatasetParseError(f'Rule {text!r} has no "=>"', section='presentations')
        try:
            word = parse_path(lhs.strip(), quiver)
        except QStackError as e:
            raise DatasetParseError(str(e), section='presentations') from e
        return RewriteRule(word, self.element(rhs.strip(), quiver, 'presentations'), origin)

    # ========================================================================
    # ÁLGEBRA
    # ========================================================================

    def quiver(self, name: str) -> Quiver:
        if name not in self._quivers:
            spec = self._lookup('quivers', name, self.document.quivers)
            arrows = [Arrow(a, tail, head) for a, (tail, head) in spec.arrows.items()]
            try:
                self._quivers[name] = Quiver(name, spec.vertices, arrows)
            except QStackError as e:
                raise DatasetParseError(str(e), section='quivers') from e
        return self._quivers[name]

    def presentation(self, name: str) -> AlgebraPresentation:
        if name not in self._presentations:
            self._presentations[name] = self._build_presentation(name)
        return self._presentations[name]

    def _build_presentation(self, name: str) -> AlgebraPresentation:
        spec = self._lookup('presentations', name, self.document.presentations)
        if spec.localize_from is not None:
            base = self.presentation(spec.localize_from)
            quiver = localized_quiver(base, spec.inverses)
            aux = [self.rule(r, quiver, 'aux') for r in spec.aux_rules]
            order = TermOrder(tuple(spec.order)) if spec.order else None
            return localize(base, spec.inverses, aux, order=order, name=name)
        quiver = self.quiver(spec.quiver)
        order = TermOrder(tuple(spec.order or quiver.arrow_names))
        if spec.superpotential is not None:
            phi = Superpotential.from_element(
                self.element(spec.superpotential, quiver, 'presentations')
            )
            return jacobi_presentation(quiver, phi, order, name, self.table)
        rules = [self.rule(r, quiver) for r in spec.rules]
        return AlgebraPresentation(name, quiver, order, rules, (), self.table)

    def representation(self, name: str) -> QuiverRep:
        if name not in self._representations:
            spec = self._lookup('representations', name, self.document.representations)
            source, target = self.presentation(spec.source), self.presentation(spec.target)
            arrows = {
                a: self.element(text, target.quiver, 'representations')
                for a, text in spec.arrows.items()
            }
            self._representations[name] = QuiverRep(name, source, target, spec.vertices, arrows)
        return self._representations[name]

    # ========================================================================
    # STACKS
    # ========================================================================

    def stack(self, name: str) -> QuiverStack:
        if name not in self._stacks:
            spec = self._lookup('stacks', name, self.document.stacks)
            self._stacks[name] = self._build_stack(name, spec)
            logger.info(f'Built stack {name} with charts {tuple(self._stacks[name].charts)}')
        return self._stacks[name]

    def _build_stack(self, name: str, spec: StackSpec) -> QuiverStack:
        if spec.restrict_from is not None:
            parent = self.stack(spec.restrict_from.stack)
            restricted = restrict_stack(parent, spec.restrict_from.keep, spec.restrict_from.hub)
            restricted.name = name
            return restricted

        pair_sets: dict[tuple[str, str], list[str]] = {}
        for key, sides in spec.overlaps.items():
            i, j = split_key(key)
            pair_sets[(i, j)] = sides.get(i, [])
            pair_sets[(j, i)] = sides.get(j, [])
        overrides = {
            (o.chart, frozenset(o.indices)): o.arrows for o in spec.overrides
        }
        lattice = CoverLattice(spec.charts, pair_sets, spec.empty, overrides)

        charts = {}
        for c, chart_spec in spec.charts.items():
            base = self.presentation(chart_spec.presentation)
            quiver = localized_quiver(base, lattice.inverted(c))
            aux = tuple(self.rule(r, quiver, 'aux') for r in chart_spec.aux_rules)
            order = TermOrder(tuple(chart_spec.order)) if chart_spec.order else None
            charts[c] = Chart(c, base, aux, order)

        transitions: dict[tuple[str, str], TransitionData] = {}
        gerbes: dict[tuple[str, str, str], dict[str, GerbeTerm]] = {}
        X = QuiverStack(name, lattice, charts, transitions, gerbes)
        if spec.max_degree is not None:
            X.max_degree = spec.max_degree
        if spec.max_rounds is not None:
            X.max_rounds = spec.max_rounds

        for key, t in spec.transitions.items():
            if t.via is None:
                i, j = split_key(key)
                quiver = X.maximal_presentation(i).quiver
                arrows = {a: self.element(text, quiver, 'stacks') for a, text in t.arrows.items()}
                transitions[(i, j)] = TransitionData(t.vertices, arrows)
        for key, t in spec.transitions.items():
            if t.via is not None:
                i, j = split_key(key)
                transitions[(i, j)] = self._compose_transition(X, i, t.via, j)

        for key, g in spec.gerbes.items():
            i, j, k = split_key(key)
            if g.transport is None:
                quiver = X.maximal_presentation(i).quiver
                gerbes[(i, j, k)] = {
                    v: self._gerbe_term(term.value, term.inverse, quiver)
                    for v, term in g.terms.items()
                }
        for key, g in spec.gerbes.items():
            if g.transport is not None and g.from_ is not None:
                source = split_key(g.from_)
                if source not in gerbes:
                    raise DanglingReference(f'Gerbe {key} transports unknown {g.from_}', 'stacks')
                a, b = split_key(g.transport)
                G = X.raw_transition(a, b)
                gerbes[split_key(key)] = {
                    v: GerbeTerm(G.apply(term.value), G.apply(term.inverse))
                    for v, term in gerbes[source].items()
                }
        return X

    def _compose_transition(self, X: QuiverStack, i: str, h: str, j: str) -> TransitionData:
        """G_ij = G_ih ∘ G_hj sobre las presentaciones máximas"""
        outer = X.raw_transition(i, h)
        inner = X.transitions[(h, j)]
        vertices = {v: outer.vertex_map[w] for v, w in inner.vertex_map.items()}
        arrows = {a: outer.apply(image) for a, image in inner.arrow_map.items()}
        return TransitionData(vertices, arrows)

    def _gerbe_term(self, value: str, inverse: str | None, quiver: Quiver) -> GerbeTerm:
        element = self.element(value, quiver, 'stacks')
        if inverse is not None:
            return GerbeTerm(element, self.element(inverse, quiver, 'stacks'))
        single = element.single_term()
        if single is None or not single[0].is_trivial:
            raise DatasetParseError(f'Gerbe value {value!r} needs an explicit inverse', 'stacks')
        try:
            return GerbeTerm(element, Element.of_word(single[0], single[1].invert_monomial()))
        except NotInvertible as e:
            raise DatasetParseError(str(e), section='stacks') from e

    # ========================================================================
    # COMPLEJOS
    # ========================================================================

    def complex(self, name: str) -> TwistedComplex:
        if name not in self._complexes:
            spec = self._lookup('complexes', name, self.document.complexes)
            self._complexes[name] = self._build_complex(name, spec)
        return self._complexes[name]

    def _build_complex(self, name: str, spec: ComplexSpec) -> TwistedComplex:
        X = self.stack(spec.stack)
        module = GradedFreeModule(
            {
                c: [Generator(g.label, g.vertex, g.degree) for g in generators]
                for c, generators in spec.module.items()
            }
        )
        fiber = self.presentation(spec.fiber) if spec.fiber else None
        right = self.presentation(spec.right) if spec.right else None
        cells = [self._cell(X, module, spec, cell, fiber, right) for cell in spec.cells]
        mc = Cochain.of(cells, spec.kind)
        return TwistedComplex(name, X, module, mc, spec.kind, fiber, right, spec.unit_cells)

    def _cell(
        self,
        X: QuiverStack,
        module: GradedFreeModule,
        spec: ComplexSpec,
        cell: CellSpec,
        fiber: AlgebraPresentation | None,
        right: AlgebraPresentation | None,
    ) -> MorphismCell:
        indices = tuple(cell.indices)
        idx = X.lattice.require(indices)
        i0, ip = indices[0], indices[-1]
        entries: dict[tuple[str, str], list[Term]] = {}
        for entry in cell.entries:
            left = self._left_factor(X, entry.left, i0, ip, idx)
            term: Term
            if spec.kind == BIMODULE and fiber is not None and right is not None:
                fiber_value = (
                    self.element(entry.fiber, fiber.quiver, 'complexes')
                    if entry.fiber
                    else fiber.unit()
                )
                right_value = (
                    self.element(entry.right, right.quiver, 'complexes')
                    if entry.right
                    else right.unit()
                )
                term = BundleTerm(left, fiber_value, right_value)
            else:
                source_vertex = module.generator(ip, entry.from_).vertex
                value = (
                    self.element(entry.right, X.presentation(ip, idx).quiver, 'complexes')
                    if entry.right
                    else Element.idempotent(source_vertex)
                )
                term = SandwichTerm(left, value)
            entries.setdefault((entry.to, entry.from_), []).append(term)
        return MorphismCell(
            indices, cell.q, {k: tuple(v) for k, v in entries.items()}, spec.kind
        )

    def _left_factor(
        self, X: QuiverStack, text: str, i0: str, ip: str, idx: frozenset[str]
    ) -> Element:
        """Sobre la carta destino; si no parsea, sobre la fuente y se transporta por G"""
        try:
            return self.element(text, X.presentation(i0, idx).quiver, 'complexes')
        except DatasetParseError:
            if i0 == ip:
                raise
        source = self.element(text, X.presentation(ip, idx).quiver, 'complexes')
        return X.transition(i0, ip, idx).apply(source)

    # ========================================================================
    # A-INFINITY
    # ========================================================================

    def system(self, name: str) -> StructureConstants:
        if name not in self._systems:
            spec = self._lookup('systems', name, self.document.systems)
            generators = {
                g: GeneratorSpec(g, m.source, m.target, m.degree, m.source_vertex, m.target_vertex)
                for g, m in spec.generators.items()
            }
            tables: dict[tuple[str, ...], list[tuple[Scalar, str]]] = {}
            for row in spec.tables:
                tables.setdefault(tuple(row.inputs), []).extend(self._rows(row.outputs))
            m0 = {obj: self._rows(rows) for obj, rows in spec.m0.items()}
            try:
                self._systems[name] = StructureConstants(
                    tuple(spec.objects), generators, tables, m0, spec.units
                )
            except QStackError as e:
                raise DatasetParseError(str(e), section='systems') from e
        return self._systems[name]

    def _rows(self, outputs: list[str]) -> list[tuple[Scalar, str]]:
        """'-T^(B) 1L' -> (−T^B, '1L')"""
        rows = []
        for text in outputs:
            pieces = str(text).rsplit(None, 1)
            generator = pieces[-1]
            prefix = pieces[0].strip() if len(pieces) == 2 else ''
            if prefix in ('', '+'):
                scalar = Scalar.one(self.table)
            elif prefix == '-':
                scalar = Scalar.rational(-1, self.table)
            else:
                scalar = self.scalar(prefix, 'systems')
            rows.append((scalar, generator))
        return rows

    def extension(self, name: str) -> ExtensionBundle:
        if name not in self._extensions:
            self._extensions[name] = self._build_extension(name)
        return self._extensions[name]

    def _build_extension(self, name: str) -> ExtensionBundle:
        spec = self._lookup('extensions', name, self.document.extensions)
        S = self.system(spec.system)
        X = self.stack(spec.stack) if spec.stack else None
        algebra = self.presentation(spec.algebra) if spec.algebra else None

        def chart_quiver(chart: str) -> Quiver:
            if X is not None:
                return X.maximal_presentation(chart).quiver
            if algebra is None:
                raise DatasetParseError(f'{name}: coefficients need a stack or an algebra')
            return algebra.quiver

        def chart_for(obj: str) -> str:
            if obj in spec.typing:
                return spec.typing[obj]
            if algebra is not None:
                return algebra.name
            raise DanglingReference(f'{name}: object {obj} has no chart', 'extensions')

        b = Deformation(
            {
                obj: [
                    (generator, self.element(text, chart_quiver(chart_for(obj)), 'extensions'))
                    for generator, text in pieces.items()
                ]
                for obj, pieces in spec.deformation.items()
            }
        )
        if X is not None:
            ev = extend_stack(S, X, spec.typing, b, spec.truncation)
        else:
            ev = deform(S, b, algebra, spec.truncation, spec.typing)

        def word(slots: list[tuple[str, str]]) -> TensorWord | None:
            if not slots:
                return None
            return TensorWord(
                tuple((c, self.element(text, chart_quiver(c), 'extensions')) for c, text in slots)
            )

        elements = {
            label: ExtendedElement(
                tuple(
                    ExtTerm(
                        self.scalar(t.scalar, 'extensions'), word(t.word), t.generator, word(t.op)
                    )
                    for t in terms
                )
            )
            for label, terms in spec.elements.items()
        }

        def element(label: str) -> ExtendedElement:
            return self._lookup('elements', label, elements)

        alpha = {}
        for key, label in spec.alpha.items():
            j, k = split_key(key)
            alpha[(j, k)] = element(label)
        witnesses = {}
        for key, label in spec.witnesses.items():
            j, k, l = split_key(key)
            witnesses[(j, k, l)] = element(label)
        return ExtensionBundle(name, ev, elements, alpha, witnesses, tuple(spec.functor))
