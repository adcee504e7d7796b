"""
Fixtures compartidas

- Loaders de los datasets incluidos (cacheados por sesión)
- Datasets sintéticos de tests/fixtures (desplazamientos en tres y cuatro cartas)
- Generador aleatorio sembrado con settings.random_seed
"""

import random
from pathlib import Path

import pytest

from app.engines.stack import QuiverStack
from app.loader import DatasetLoader, read_raw
from config.settings import settings

ROOT = Path(__file__).parent.parent
DATASETS = ROOT / 'config' / 'datasets'
FIXTURES = Path(__file__).parent / 'fixtures'

SOURCES = {
    'free_proj': DATASETS / 'free_proj.qs',
    'nc_c3': DATASETS / 'nc_c3.qs',
    'kp2_stack': DATASETS / 'nc_kp2_stack.qs',
    'kp2_bundle': DATASETS / 'nc_kp2_bundle.qs',
    'shift': FIXTURES / 'shift_stack.qs',
    'lattice4': FIXTURES / 'lattice4_stack.qs',
}


def declared(section: str) -> list[tuple[str, str]]:
    """(fixture, nombre) de cada entrada de `section` en los datasets, sin repetir includes"""
    seen: set[tuple[str, str]] = set()
    cases = []
    for fixture, path in SOURCES.items():
        for name, entry in read_raw(path).get(section, {}).items():
            if (name, repr(entry)) not in seen:
                seen.add((name, repr(entry)))
                cases.append((fixture, name))
    return cases


def _loaded(path: Path) -> DatasetLoader:
    loader = DatasetLoader(path)
    loader.load()
    return loader


@pytest.fixture(scope='session')
def free_proj():
    """Dataset de la carta afín del álgebra libre"""
    return _loaded(DATASETS / 'free_proj.qs')


@pytest.fixture(scope='session')
def nc_c3():
    """C^3 no conmutativo, sus cartas y los sistemas de Seidel"""
    return _loaded(DATASETS / 'nc_c3.qs')


@pytest.fixture(scope='session')
def kp2_stack():
    """Stacks Yhat / Y y las familias kp2_*"""
    return _loaded(DATASETS / 'nc_kp2_stack.qs')


@pytest.fixture(scope='session')
def kp2_bundle():
    """Complejo de bimódulos U"""
    return _loaded(DATASETS / 'nc_kp2_bundle.qs')


@pytest.fixture(scope='session')
def shift():
    """Dataset sintético (gerbes triviales, cociclo exacto)"""
    return _loaded(FIXTURES / 'shift_stack.qs')


@pytest.fixture(scope='session')
def shift_stack(shift) -> QuiverStack:
    return shift.get_stack('Shift')


@pytest.fixture
def rng():
    """Las pruebas de propiedades son reproducibles"""
    return random.Random(settings.random_seed)


@pytest.fixture(scope='session')
def lattice4():
    """Cuatro cartas con todas las intersecciones no vacías"""
    return _loaded(FIXTURES / 'lattice4_stack.qs')


@pytest.fixture(scope='session')
def lattice4_stack(lattice4) -> QuiverStack:
    return lattice4.get_stack('Lattice4')
