"""
serializer.py - Forma canónica YAML de un dataset

parse → dump → parse es la identidad sobre el modelo validado.
"""

from pathlib import Path

import yaml

from .models import DatasetDocument


def dump_dataset(document: DatasetDocument) -> str:
    """YAML canónico (claves por alias, sin valores por defecto)"""
    data = document.model_dump(mode='json', by_alias=True, exclude_defaults=True)
    return yaml.safe_dump(data, sort_keys=False, allow_unicode=True, width=100)


def write_dataset(document: DatasetDocument, path: str | Path) -> Path:
    target = Path(path)
    target.write_text(dump_dataset(document), encoding='utf-8')
    return target


def load_document(text: str) -> DatasetDocument:
    """Parsea texto YAML a un documento (sin includes)"""
    return DatasetDocument(**(yaml.safe_load(text) or {}))
