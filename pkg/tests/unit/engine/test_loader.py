"""
Tests del DatasetLoader: includes, validación y serialización

Ejecutar:
    pytest tests/unit/engine/test_loader.py -v
"""

from pathlib import Path

import pytest

from app.loader import (
    DatasetLoader,
    dump_dataset,
    load_document,
    parse_dataset,
    read_raw,
)
from app.utils.exceptions import DanglingReference, DatasetParseError
from tests.conftest import DATASETS

BASE = """
name: base
symbols: [hbar]
quivers:
  P:
    vertices: [o]
    arrows: {x: [o, o], y: [o, o]}
presentations:
  QP:
    quiver: P
    order: [x, y]
    rules: [y x => T^(hbar) x y]
checks:
  confluence: [QP]
"""

MAIN = """
name: main
include: [base.qs]
symbols: [A1]
presentations:
  FP: {quiver: P, order: [x, y]}
checks:
  normal_forms:
    - {presentation: QP, input: y x, expected: T^(hbar) x y}
"""


def _write(folder: Path, name: str, text: str) -> Path:
    path = folder / name
    path.write_text(text, encoding='utf-8')
    return path


# ============================================================================
# CARGA
# ============================================================================


def test_loader_can_load_file():
    """✅ Test: free_proj.qs existe y se puede cargar"""
    loader = DatasetLoader(DATASETS / 'free_proj.qs')
    loader.load()

    assert loader.is_loaded
    assert loader.document.name == 'free_proj'
    assert loader.get_presentation('CKr_a0').inverses == ('a0',)
    print(f"✅ {loader.document.name} cargado")


def test_lazy_load_on_first_getter():
    """✅ Test: Un getter carga el dataset si hace falta"""
    loader = DatasetLoader(DATASETS / 'free_proj.qs')

    assert not loader.is_loaded
    assert loader.get_stack('FP').lattice.charts == ('0', '1')
    assert loader.is_loaded
    print("✅ Carga perezosa")


def test_includes_merge_definitions(tmp_path):
    """✅ Test: Las definiciones incluidas se fusionan; sus checks no"""
    _write(tmp_path, 'base.qs', BASE)
    raw = read_raw(_write(tmp_path, 'main.qs', MAIN))

    assert set(raw['presentations']) == {'QP', 'FP'}
    assert raw['symbols'] == ['hbar', 'A1']
    assert 'confluence' not in raw['checks']
    assert 'include' not in raw

    loader = DatasetLoader(tmp_path / 'main.qs')
    loader.load()
    P = loader.get_presentation('QP')
    assert P.normal_form(P.parse('y x')) == loader.parse_element('QP', 'T^(hbar) x y')
    print("✅ Include fusionado")


def test_cyclic_include(tmp_path):
    """✅ Test: a incluye b que incluye a"""
    _write(tmp_path, 'a.qs', 'name: a\ninclude: [b.qs]\n')
    _write(tmp_path, 'b.qs', 'name: b\ninclude: [a.qs]\n')

    with pytest.raises(DatasetParseError) as exc:
        read_raw(tmp_path / 'a.qs')
    assert exc.value.section == 'include'
    print(f"✅ {exc.value}")


def test_invalid_yaml_reports_line(tmp_path):
    """✅ Test: El error de YAML lleva la línea"""
    path = _write(tmp_path, 'bad.qs', 'name: bad\nquivers:\n  P: [unclosed\n')

    with pytest.raises(DatasetParseError) as exc:
        DatasetLoader(path).load()
    assert exc.value.line is not None
    assert 'line' in str(exc.value)
    print(f"✅ {exc.value}")


def test_top_level_must_be_mapping(tmp_path):
    """✅ Test: Una lista en el nivel superior no es un dataset"""
    with pytest.raises(DatasetParseError):
        read_raw(_write(tmp_path, 'list.qs', '- a\n- b\n'))
    with pytest.raises(FileNotFoundError):
        read_raw(tmp_path / 'missing.qs')
    print("✅ Documentos inválidos rechazados")


def test_schema_error_names_section(tmp_path):
    """✅ Test: quiver y localize_from a la vez fallan en 'presentations'"""
    path = _write(
        tmp_path,
        'both.qs',
        'name: both\npresentations:\n  X: {quiver: P, localize_from: Y}\n',
    )

    with pytest.raises(DatasetParseError) as exc:
        DatasetLoader(path).load()
    assert exc.value.section == 'presentations'
    print(f"✅ {exc.value}")


def test_dangling_reference(tmp_path):
    """✅ Test: Una presentación sobre un quiver no declarado"""
    loader = DatasetLoader(_write(tmp_path, 'dangling.qs', 'name: d\npresentations:\n  X: {quiver: Nope}\n'))
    loader.load()

    with pytest.raises(DanglingReference) as exc:
        loader.get_presentation('X')
    assert exc.value.section == 'quivers'
    with pytest.raises(DanglingReference):
        loader.get_stack('Missing')
    print(f"✅ {exc.value}")


def test_corrections_are_logged(mocker):
    """✅ Test: Cada corrección de los datos de origen emite un warning"""
    warning = mocker.patch('app.loader.loader.logger.warning')

    DatasetLoader(DATASETS / 'free_proj.qs').load()

    assert warning.call_count == 1
    assert 'correction applied' in warning.call_args[0][0]
    print("✅ Corrección registrada")


def test_abbreviations_expand(nc_c3):
    """✅ Test: A1' = A1 − hbar al parsear"""
    assert nc_c3.parse_element('F1', "T^(A1') x1") == nc_c3.parse_element('F1', 'T^(A1 - hbar) x1')
    print("✅ Abreviaturas")


# ============================================================================
# SERIALIZACIÓN
# ============================================================================


@pytest.mark.parametrize(
    'name', ['free_proj.qs', 'nc_c3.qs', 'nc_kp2_stack.qs', 'nc_kp2_bundle.qs']
)
def test_dump_and_parse_back(name):
    """✅ Test: parse → dump → parse conserva el documento"""
    document = DatasetLoader(DATASETS / name).document

    assert load_document(dump_dataset(document)) == document
    print(f"✅ {name}")


def test_dumped_dataset_loads(tmp_path, free_proj):
    """✅ Test: El YAML canónico es un dataset cargable"""
    path = _write(tmp_path, 'copy.qs', dump_dataset(free_proj.document))
    loader = DatasetLoader(path)

    G = loader.get_representation('G01')
    assert G(G.source.parse('X1')) == free_proj.get_presentation('CKr_a0').parse('a0^-1 a1')
    print("✅ Dataset re-cargado")


def test_parse_dataset_returns_loaded():
    """✅ Test: parse_dataset es la única entrada; no hay loader global"""
    import app.loader as package

    loader = parse_dataset(DATASETS / 'free_proj.qs')

    assert loader.is_loaded
    assert 'FP' in loader.document.stacks
    assert not any('dataset_loader' in name for name in package.__all__)
    print("✅ parse_dataset")
