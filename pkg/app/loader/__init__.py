"""
Dataset Loader Module

Carga datasets *.qs (YAML), los valida con Pydantic y construye
presentaciones, stacks, complejos y sistemas A∞ bajo demanda.

Usage:
    from app.loader import parse_dataset

    loader = parse_dataset('config/datasets/nc_kp2_stack.qs')
    stack = loader.get_stack('Yhat')
"""

from .builder import DatasetBuilder, ExtensionBundle, split_key
from .loader import DatasetLoader, parse_dataset, read_raw
from .models import (
    ChecksSpec,
    ComplexSpec,
    DatasetDocument,
    ExtensionSpec,
    PresentationSpec,
    QuiverSpec,
    StackSpec,
    SystemSpec,
)
from .serializer import dump_dataset, load_document, write_dataset

__all__ = [
    # Main loader
    'DatasetLoader',
    'parse_dataset',
    'read_raw',
    # Builder
    'DatasetBuilder',
    'ExtensionBundle',
    'split_key',
    # Serializer
    'dump_dataset',
    'load_document',
    'write_dataset',
    # Models
    'ChecksSpec',
    'ComplexSpec',
    'DatasetDocument',
    'ExtensionSpec',
    'PresentationSpec',
    'QuiverSpec',
    'StackSpec',
    'SystemSpec',
]
