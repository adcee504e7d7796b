"""
loader.py - Carga y parsea datasets *.qs

Responsabilidades:
- Leer el YAML (JSON es un subconjunto) y resolver `include:`
- Validar contra los modelos Pydantic antes de construir álgebra alguna
- Cachear los objetos construidos y ofrecer getters tipados

Nota: la construcción es perezosa; un objeto se construye la primera vez
      que se pide.
"""

from pathlib import Path
from typing import Any

import yaml
from pydantic import ValidationError

from app.engines.ainfty import StructureConstants
from app.engines.quiver import Element
from app.engines.representations import QuiverRep
from app.engines.rewriting import AlgebraPresentation
from app.engines.stack import QuiverStack
from app.engines.twisted import TwistedComplex
from app.utils.exceptions import DatasetParseError
from app.utils.logger import get_logger

from .builder import DatasetBuilder, ExtensionBundle
from .models import DatasetDocument

logger = get_logger(__name__)

MERGED_SECTIONS = (
    'abbreviations',
    'quivers',
    'presentations',
    'representations',
    'stacks',
    'complexes',
    'systems',
    'extensions',
)


def _line_of(error: yaml.YAMLError) -> int | None:
    mark = getattr(error, 'problem_mark', None)
    return mark.line + 1 if mark is not None else None


def read_raw(path: Path, seen: frozenset[Path] = frozenset()) -> dict[str, Any]:
    """
    Lee un dataset y fusiona las definiciones de sus includes (los incluidos primero)

    Raises:
        FileNotFoundError: archivo inexistente
        DatasetParseError: YAML inválido o include cíclico
    """
    path = path.resolve()
    if path in seen:
        raise DatasetParseError(f'Cyclic include of {path}', section='include')
    if not path.exists():
        raise FileNotFoundError(f'Dataset file not found: {path}')
    with open(path, encoding='utf-8') as f:
        try:
            raw = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise DatasetParseError(f'Invalid YAML in {path.name}', line=_line_of(e)) from e
    if not isinstance(raw, dict):
        raise DatasetParseError(f'{path.name} must contain a mapping at top level')

    merged: dict[str, Any] = {}
    for include in raw.get('include', []):
        included = read_raw(path.parent / include, seen | {path})
        # los includes aportan definiciones, no verificaciones
        included.pop('checks', None)
        _merge(merged, included)
    _merge(merged, raw)
    merged.pop('include', None)
    return merged


def _merge(into: dict[str, Any], raw: dict[str, Any]) -> None:
    for key, value in raw.items():
        if key == 'include':
            continue
        if key in MERGED_SECTIONS:
            into.setdefault(key, {}).update(value or {})
        elif key == 'symbols':
            known = into.setdefault('symbols', [])
            known.extend(s for s in value or [] if s not in known)
        else:
            into[key] = value


class DatasetLoader:
    """
    Carga y cachea un dataset

    Usage:
        loader = DatasetLoader('config/datasets/nc_kp2_stack.qs')
        loader.load()

        # Consultas
        stack = loader.get_stack('Yhat')
        bundle = loader.get_extension('kp2_3')
    """

    def __init__(self, dataset_path: str | Path):
        self.dataset_path = Path(dataset_path)
        self._document: DatasetDocument | None = None
        self._builder: DatasetBuilder | None = None
        self._loaded = False

    def load(self) -> None:
        """Carga y valida el dataset"""
        raw = read_raw(self.dataset_path)
        try:
            self._document = DatasetDocument(**raw)
        except ValidationError as e:
            first = e.errors()[0]
            section = str(first['loc'][0]) if first['loc'] else None
            raise DatasetParseError(f'{first["msg"]} at {first["loc"]}', section=section) from e
        for correction in self._document.corrections:
            logger.warning(f'{self._document.name}: correction applied: {correction}')
        self._build_cache()
        self._loaded = True
        logger.info(f'✅ Loaded dataset {self._document.name} from {self.dataset_path}')

    def _build_cache(self) -> None:
        if self._document is not None:
            self._builder = DatasetBuilder(self._document)

    @property
    def is_loaded(self) -> bool:
        return self._loaded

    def reload(self) -> None:
        self._document = None
        self._builder = None
        self._loaded = False
        self.load()

    def _ensure_loaded(self) -> DatasetBuilder:
        if not self._loaded:
            self.load()
        if self._builder is None:
            raise DatasetParseError(f'Dataset {self.dataset_path} failed to build')
        return self._builder

    # ========================================================================
    # GETTERS
    # ========================================================================

    @property
    def document(self) -> DatasetDocument:
        return self._ensure_loaded().document

    @property
    def builder(self) -> DatasetBuilder:
        return self._ensure_loaded()

    def get_presentation(self, name: str) -> AlgebraPresentation:
        return self._ensure_loaded().presentation(name)

    def get_representation(self, name: str) -> QuiverRep:
        return self._ensure_loaded().representation(name)

    def get_stack(self, name: str) -> QuiverStack:
        return self._ensure_loaded().stack(name)

    def get_twisted_complex(self, name: str) -> TwistedComplex:
        return self._ensure_loaded().complex(name)

    def get_structure_constants(self, name: str) -> StructureConstants:
        return self._ensure_loaded().system(name)

    def get_extension(self, name: str) -> ExtensionBundle:
        return self._ensure_loaded().extension(name)

    def parse_element(self, presentation: str, text: str) -> Element:
        P = self.get_presentation(presentation)
        return self._ensure_loaded().element(text, P.quiver)


def parse_dataset(path: str | Path) -> DatasetLoader:
    """Carga un dataset y devuelve su loader"""
    loader = DatasetLoader(path)
    loader.load()
    return loader
