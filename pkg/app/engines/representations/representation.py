"""
representation.py - Representaciones de un álgebra presentada en otra

Responsabilidades:
- QuiverRep: mapa de vértices + imagen de cada flecha (incluidas inversas)
- Aplicación multiplicativa, normalizada en el destino
- Verificación de relaciones e inversas, composición, re-anclaje entre
  localizaciones
"""

from collections.abc import Mapping
from dataclasses import dataclass, field

from app.engines.quiver import Element, PathWord
from app.engines.quiver.quiver import inverse_name
from app.engines.rewriting import AlgebraPresentation, record_zero
from app.reports import Report
from app.utils.exceptions import (
    EndpointMismatch,
    MissingImage,
    PresentationMismatch,
    QuiverMismatch,
)
from app.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass
class QuiverRep:
    """
    G: source → target

    Usage:
        G = QuiverRep('G03', A3, A0_U03, {'v3': 'v2'}, {'z3': A0_U03.parse('T^(-B/2) a1 b1^-1')})
        rep_apply(G, A3.parse('w3 z3'))
    """

    name: str
    source: AlgebraPresentation
    target: AlgebraPresentation
    vertex_map: Mapping[str, str]
    arrow_map: Mapping[str, Element]
    _word_cache: dict[PathWord, Element] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        for vertex in self.source.quiver.vertices:
            image = self.vertex_map.get(vertex)
            if image is None or not self.target.quiver.has_vertex(image):
                raise QuiverMismatch(
                    f'{self.name}: vertex {vertex} has no image in {self.target.name}'
                )
        for name, image in self.arrow_map.items():
            arrow = self.source.quiver.arrow(name)
            image.check_quiver(self.target.quiver)
            head, tail = self.vertex_map[arrow.head], self.vertex_map[arrow.tail]
            for word, _ in image.terms:
                if word.head != head or word.tail != tail:
                    raise EndpointMismatch(
                        f'{self.name}: image of {name} has term {word} outside e_{head} A e_{tail}'
                    )

    def image(self, arrow: str) -> Element:
        try:
            return self.arrow_map[arrow]
        except KeyError:
            raise MissingImage(f'{self.name}: arrow {arrow} has no image') from None

    def apply_word(self, word: PathWord) -> Element:
        cached = self._word_cache.get(word)
        if cached is not None:
            return cached
        acc = Element.idempotent(self.vertex_map[word.tail])
        for arrow in reversed(word.arrows):
            acc = self.target.normal_form(self.image(arrow) * acc)
        self._word_cache[word] = acc
        return acc

    def apply(self, x: Element) -> Element:
        return self.target.normal_form(x.map_words(self.apply_word))

    def __call__(self, x: Element) -> Element:
        return self.apply(x)


# ============================================================================
# OPERACIONES
# ============================================================================


def rep_apply(G: QuiverRep, x: Element) -> Element:
    """
    G(x): cada palabra se mapea factor a factor, e_v ↦ e_{G(v)}

    Raises:
        MissingImage: flecha sin imagen
    """
    return G.apply(x)


def rep_check(G: QuiverRep, max_degree: int, max_rounds: int) -> Report:
    """Verifica que G(lhs) - G(rhs) pertenezca al ideal del destino para cada regla"""
    report = Report(title=f'relations respected by {G.name}')
    for rule in G.source.rules:
        difference = G.apply(Element.of_word(rule.lhs)) - G.apply(rule.rhs)
        record_zero(report, 'relation', str(rule), G.target, difference, max_degree, max_rounds)
    logger.info(f'{report.title}: {report.verdict.value}')
    return report


def rep_compose(G: QuiverRep, H: QuiverRep, name: str | None = None) -> QuiverRep:
    """
    G∘H (H actúa primero)

    Raises:
        PresentationMismatch: el destino de H no está contenido en la fuente de G
    """
    inner = H.target.quiver
    outer = G.source.quiver
    if not all(outer.has_vertex(v) for v in inner.vertices) or not all(
        outer.has_arrow(a) for a in inner.arrow_names
    ):
        raise PresentationMismatch(
            f'Cannot compose {G.name} after {H.name}: {H.target.name} is not inside {G.source.name}'
        )
    vertex_map = {v: G.vertex_map[w] for v, w in H.vertex_map.items()}
    arrow_map = {a: G.apply(image) for a, image in H.arrow_map.items()}
    return QuiverRep(name or f'{G.name}∘{H.name}', H.source, G.target, vertex_map, arrow_map)


def rep_check_inverses(G: QuiverRep, max_degree: int = 6, max_rounds: int = 4) -> Report:
    """G(γ)·G(γ⁻¹) = e_{G(h_γ)} y G(γ⁻¹)·G(γ) = e_{G(t_γ)}"""
    report = Report(title=f'inverse images of {G.name}')
    for name in G.source.inverses:
        arrow = G.source.quiver.arrow(name)
        direct, inverse = G.image(name), G.image(inverse_name(name))
        head = Element.idempotent(G.vertex_map[arrow.head])
        tail = Element.idempotent(G.vertex_map[arrow.tail])
        checks = (
            (f'{name} {inverse_name(name)}', direct * inverse - head),
            (f'{inverse_name(name)} {name}', inverse * direct - tail),
        )
        for subject, difference in checks:
            record_zero(report, 'inverse', subject, G.target, difference, max_degree, max_rounds)
    return report


def identity_rep(P: AlgebraPresentation, name: str | None = None) -> QuiverRep:
    arrow_map = {
        a.name: Element.of_word(PathWord((a.name,), a.tail, a.head)) for a in P.quiver.arrows
    }
    vertex_map = {v: v for v in P.quiver.vertices}
    return QuiverRep(name or f'Id({P.name})', P, P, vertex_map, arrow_map)


def rehome(
    G: QuiverRep, source: AlgebraPresentation, target: AlgebraPresentation, name: str | None = None
) -> QuiverRep:
    """
    Re-ancla G entre otras localizaciones de las mismas álgebras

    Las flechas de la nueva fuente conservan su imagen; las imágenes deben
    vivir en el nuevo destino.

    Raises:
        QuiverMismatch: imagen ausente del nuevo destino
        MissingImage: flecha de la nueva fuente sin imagen
    """
    arrow_map = {}
    for arrow in source.quiver.arrow_names:
        image = G.image(arrow)
        image.check_quiver(target.quiver)
        arrow_map[arrow] = target.normal_form(image)
    vertex_map = {v: G.vertex_map[v] for v in source.quiver.vertices}
    return QuiverRep(name or G.name, source, target, vertex_map, arrow_map)
