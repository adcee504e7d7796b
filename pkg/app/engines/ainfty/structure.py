"""
structure.py - Sistemas de constantes de estructura A∞

Responsabilidades:
- Generadores graduados entre objetos, con tipado de vértices en las cartas
- Tablas m_k: tupla de generadores -> [(escalar, generador de salida)]
- Unidades por objeto (los axiomas de unidad se aplican automáticamente)
"""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from app.engines.scalars import Scalar
from app.utils.exceptions import EndpointMismatch, QuiverMismatch

TableRow = tuple[Scalar, str]


@dataclass(frozen=True)
class GeneratorSpec:
    """
    Generador de CF(source, target)

    `source_vertex` / `target_vertex` son vértices de las cartas de los
    objetos (None si el objeto no tiene carta).
    """

    name: str
    source: str
    target: str
    degree: int
    source_vertex: str | None = None
    target_vertex: str | None = None

    @property
    def shifted(self) -> int:
        """|v|′ = |v| − 1"""
        return self.degree - 1


@dataclass
class StructureConstants:
    """
    Usage:
        S = StructureConstants(['L'], gens, {('X', 'Y'): [(one, 'Z')]}, units={'L': ['1L']})
        S.table(('X', 'Y'))
    """

    objects: tuple[str, ...]
    generators: Mapping[str, GeneratorSpec]
    tables: Mapping[tuple[str, ...], list[TableRow]] = field(default_factory=dict)
    m0: Mapping[str, list[TableRow]] = field(default_factory=dict)
    units: Mapping[str, tuple[str, ...]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.objects = tuple(self.objects)
        self.units = {obj: tuple(gens) for obj, gens in self.units.items()}
        self._unit_names = {g for gens in self.units.values() for g in gens}
        for spec in self.generators.values():
            if spec.source not in self.objects or spec.target not in self.objects:
                raise QuiverMismatch(f'Generator {spec.name} references an unknown object')
        for key, rows in self.tables.items():
            self._validate_row(key, rows)
        for obj, rows in self.m0.items():
            for _, out in rows:
                spec = self.generator(out)
                if spec.source != obj or spec.target != obj or spec.degree != 2:
                    raise EndpointMismatch(f'm0 of {obj} must land in degree 2 of CF({obj},{obj})')

    def _validate_row(self, key: tuple[str, ...], rows: Iterable[TableRow]) -> None:
        if not key:
            raise EndpointMismatch('Use m0 for zero-input operations')
        if any(g in self._unit_names for g in key):
            raise EndpointMismatch(f'Unit generators are handled automatically: {key}')
        specs = [self.generator(g) for g in key]
        for left, right in zip(specs, specs[1:], strict=False):
            if left.target != right.source:
                raise EndpointMismatch(f'Table key {key} is not composable')
        expected = sum(s.degree for s in specs) + 2 - len(specs)
        for _, out in rows:
            spec = self.generator(out)
            if spec.source != specs[0].source or spec.target != specs[-1].target:
                raise EndpointMismatch(f'm{len(key)}{key} -> {out} has wrong endpoints')
            if spec.degree != expected:
                raise EndpointMismatch(
                    f'm{len(key)}{key} -> {out}: degree {spec.degree}, expected {expected}'
                )

    def generator(self, name: str) -> GeneratorSpec:
        try:
            return self.generators[name]
        except KeyError:
            raise QuiverMismatch(f'Unknown generator {name}') from None

    def is_unit(self, name: str) -> bool:
        return name in self._unit_names

    def table(self, key: tuple[str, ...]) -> list[TableRow]:
        return list(self.tables.get(key, ()))

    def keys_of_length(self, n: int) -> list[tuple[str, ...]]:
        return [k for k in self.tables if len(k) == n]

    @property
    def max_arity(self) -> int:
        return max((len(k) for k in self.tables), default=0)

    def outgoing(self, obj: str) -> list[GeneratorSpec]:
        return [g for g in self.generators.values() if g.source == obj]

    def composable_tuples(self, max_len: int) -> list[tuple[str, ...]]:
        """
        Todas las cadenas de generadores componibles de longitud 1..max_len

        Con tipado de vértices en ambos extremos se exige además que el
        vértice destino de cada generador sea el vértice fuente del siguiente.
        """
        out: list[tuple[str, ...]] = []
        frontier = [(g.name,) for g in self.generators.values()]
        while frontier:
            out.extend(frontier)
            nxt = []
            for chain in frontier:
                if len(chain) >= max_len:
                    continue
                last = self.generator(chain[-1])
                nxt.extend(
                    chain + (g.name,)
                    for g in self.outgoing(last.target)
                    if _vertices_meet(last, g)
                )
            frontier = nxt
        return out


def _vertices_meet(left: GeneratorSpec, right: GeneratorSpec) -> bool:
    if left.target_vertex is None or right.source_vertex is None:
        return True
    return left.target_vertex == right.source_vertex
