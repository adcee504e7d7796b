"""
models.py - Modelos Pydantic para validación de datasets (*.qs)

Define la estructura de datos para:
- Símbolos de exponente y abreviaturas
- Quivers, presentaciones (reglas, superpotencial o localización)
- Representaciones y quiver stacks (cartas, intersecciones, gerbes)
- Complejos torcidos (sándwich o bimódulos)
- Sistemas A∞, extensiones sobre stacks y familias α
- Verificaciones que ejecuta `qstack report`
"""

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.engines.twisted import BIMODULE, SANDWICH

# ============================================================================
# ÁLGEBRA
# ============================================================================


class QuiverSpec(BaseModel):
    """Quiver: flechas como nombre -> [cola, cabeza]"""

    vertices: list[str]
    arrows: dict[str, tuple[str, str]] = Field(default_factory=dict)


class PresentationSpec(BaseModel):
    """Presentación declarada (quiver + reglas/superpotencial) o derivada"""

    quiver: str | None = None
    order: list[str] = Field(default_factory=list)
    rules: list[str] = Field(default_factory=list, description='"lhs => rhs"')
    superpotential: str | None = None
    localize_from: str | None = None
    inverses: list[str] = Field(default_factory=list)
    aux_rules: list[str] = Field(default_factory=list)

    @model_validator(mode='after')
    def check_source(self) -> 'PresentationSpec':
        if (self.quiver is None) == (self.localize_from is None):
            raise ValueError('A presentation needs exactly one of quiver / localize_from')
        if self.superpotential is not None and self.rules:
            raise ValueError('Give either rules or a superpotential, not both')
        return self


class RepresentationSpec(BaseModel):
    source: str
    target: str
    vertices: dict[str, str]
    arrows: dict[str, str]


# ============================================================================
# STACKS
# ============================================================================


class ChartSpec(BaseModel):
    presentation: str
    aux_rules: list[str] = Field(default_factory=list)
    order: list[str] | None = None


class OverrideSpec(BaseModel):
    chart: str
    indices: list[str]
    arrows: list[str]


class TransitionSpec(BaseModel):
    """G_ij explícito o compuesto vía un hub (G_ih ∘ G_hj)"""

    vertices: dict[str, str] = Field(default_factory=dict)
    arrows: dict[str, str] = Field(default_factory=dict)
    via: str | None = None


class GerbeValueSpec(BaseModel):
    value: str
    inverse: str | None = None


class GerbeSpec(BaseModel):
    """c_ijk por vértice, o transportado: c_ijk = G_{transport}(c_{from})"""

    model_config = ConfigDict(populate_by_name=True)

    terms: dict[str, GerbeValueSpec] = Field(default_factory=dict)
    transport: str | None = None
    from_: str | None = Field(default=None, alias='from')

    @model_validator(mode='after')
    def check_kind(self) -> 'GerbeSpec':
        if (self.transport is None) != (self.from_ is None):
            raise ValueError('transport and from go together')
        if self.transport is not None and self.terms:
            raise ValueError('A transported gerbe has no explicit terms')
        return self


class RestrictSpec(BaseModel):
    stack: str
    keep: list[str]
    hub: str


class StackSpec(BaseModel):
    charts: dict[str, ChartSpec] = Field(default_factory=dict)
    overlaps: dict[str, dict[str, list[str]]] = Field(
        default_factory=dict, description="'i,j' -> {i: S_ij, j: S_ji}"
    )
    empty: list[list[str]] = Field(default_factory=list)
    overrides: list[OverrideSpec] = Field(default_factory=list)
    transitions: dict[str, TransitionSpec] = Field(default_factory=dict)
    gerbes: dict[str, GerbeSpec] = Field(default_factory=dict)
    restrict_from: RestrictSpec | None = None
    max_degree: int | None = None
    max_rounds: int | None = None

    @model_validator(mode='after')
    def check_kind(self) -> 'StackSpec':
        if self.restrict_from is None and not self.charts:
            raise ValueError('A stack declares charts or restrict_from')
        if self.restrict_from is not None and (self.charts or self.transitions):
            raise ValueError('A restricted stack inherits its charts and transitions')
        return self


# ============================================================================
# COMPLEJOS TORCIDOS
# ============================================================================


class ModuleGeneratorSpec(BaseModel):
    label: str
    vertex: str
    degree: int


class EntrySpec(BaseModel):
    """Término de la entrada (to, from); `right` vacío = e del generador fuente"""

    model_config = ConfigDict(populate_by_name=True)

    from_: str = Field(alias='from')
    to: str
    left: str
    right: str = ''
    fiber: str = ''


class CellSpec(BaseModel):
    indices: list[str]
    q: int
    entries: list[EntrySpec] = Field(default_factory=list)


class ComplexSpec(BaseModel):
    stack: str
    kind: str = SANDWICH
    fiber: str | None = None
    right: str | None = None
    module: dict[str, list[ModuleGeneratorSpec]]
    cells: list[CellSpec] = Field(default_factory=list)
    unit_cells: bool = True

    @model_validator(mode='after')
    def check_kind(self) -> 'ComplexSpec':
        if self.kind not in (SANDWICH, BIMODULE):
            raise ValueError(f'Unknown complex kind {self.kind}')
        if self.kind == BIMODULE and (self.fiber is None or self.right is None):
            raise ValueError('Bimodule complexes need fiber and right presentations')
        return self


# ============================================================================
# A-INFINITY
# ============================================================================


class GeneratorModel(BaseModel):
    source: str
    target: str
    degree: int
    source_vertex: str | None = None
    target_vertex: str | None = None


class TableRowSpec(BaseModel):
    """m_k(inputs) = Σ outputs; cada salida es 'escalar generador'"""

    inputs: list[str]
    outputs: list[str]


class SystemSpec(BaseModel):
    objects: list[str]
    generators: dict[str, GeneratorModel]
    units: dict[str, list[str]] = Field(default_factory=dict)
    tables: list[TableRowSpec] = Field(default_factory=list)
    m0: dict[str, list[str]] = Field(default_factory=dict)


class ExtTermSpec(BaseModel):
    generator: str
    scalar: str = '1'
    word: list[tuple[str, str]] = Field(default_factory=list, description='[[carta, elemento]]')
    op: list[tuple[str, str]] = Field(default_factory=list)


class ExtensionSpec(BaseModel):
    """Evaluador (una carta o sobre un stack) con elementos y familia α"""

    system: str
    stack: str | None = None
    algebra: str | None = None
    typing: dict[str, str] = Field(default_factory=dict)
    deformation: dict[str, dict[str, str]] = Field(default_factory=dict)
    truncation: int | None = None
    elements: dict[str, list[ExtTermSpec]] = Field(default_factory=dict)
    alpha: dict[str, str] = Field(default_factory=dict, description="'j,k' -> elemento")
    witnesses: dict[str, str] = Field(default_factory=dict, description="'j,k,l' -> elemento")
    functor: list[str] = Field(default_factory=list, description='objetos destino')

    @model_validator(mode='after')
    def check_base(self) -> 'ExtensionSpec':
        if self.stack is not None and self.algebra is not None:
            raise ValueError('An extension lives over a stack or a single algebra, not both')
        return self


# ============================================================================
# VERIFICACIONES
# ============================================================================


class NormalFormCheck(BaseModel):
    presentation: str
    input: str
    expected: str


class MembershipCheck(BaseModel):
    presentation: str
    element: str
    expected: str = 'member'


class ObstructionCheck(BaseModel):
    extension: str
    object: str
    expected: dict[str, str] = Field(default_factory=dict, description='generador -> coeficiente')


class ChecksSpec(BaseModel):
    """Verificaciones que `qstack report` ejecuta sobre el dataset"""

    normal_forms: list[NormalFormCheck] = Field(default_factory=list)
    membership: list[MembershipCheck] = Field(default_factory=list)
    confluence: list[str] = Field(default_factory=list, description='presentaciones o stacks')
    representations: list[str] = Field(default_factory=list)
    cocycle: list[str] = Field(default_factory=list)
    tetra: list[str] = Field(default_factory=list)
    charts: list[str] = Field(default_factory=list)
    mc: list[str] = Field(default_factory=list)
    ainfty: list[str] = Field(default_factory=list)
    obstruction: list[ObstructionCheck] = Field(default_factory=list)
    gluing: list[str] = Field(default_factory=list)
    functor: list[str] = Field(default_factory=list)


# ============================================================================
# DOCUMENTO
# ============================================================================


class DatasetDocument(BaseModel):
    """Documento completo de un dataset"""

    name: str
    description: str = ''
    include: list[str] = Field(default_factory=list)
    symbols: list[str] = Field(default_factory=list)
    abbreviations: dict[str, str] = Field(default_factory=dict)
    quivers: dict[str, QuiverSpec] = Field(default_factory=dict)
    presentations: dict[str, PresentationSpec] = Field(default_factory=dict)
    representations: dict[str, RepresentationSpec] = Field(default_factory=dict)
    stacks: dict[str, StackSpec] = Field(default_factory=dict)
    complexes: dict[str, ComplexSpec] = Field(default_factory=dict)
    systems: dict[str, SystemSpec] = Field(default_factory=dict)
    extensions: dict[str, ExtensionSpec] = Field(default_factory=dict)
    corrections: list[str] = Field(
        default_factory=list, description='correcciones aplicadas a los datos de origen'
    )
    checks: ChecksSpec = Field(default_factory=ChecksSpec)
