"""
Tests del VerificationService

Ejecutar:
    pytest tests/unit/engine/test_verification_service.py -v
"""

import pytest

from app.loader import DatasetLoader
from app.reports import Report, Verdict
from app.services.verification_service import (
    EXIT_FAILED,
    EXIT_OK,
    Bounds,
    VerificationService,
    exit_code,
    get_verification_service,
    init_verification_service,
    reset_verification_service,
)
from app.utils.exceptions import UnknownCommand
from config.settings import settings
from tests.conftest import FIXTURES

CHECKS = """
name: checks
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
  normal_forms:
    - {presentation: QP, input: y x x, expected: T^(2hbar) x x y}
    - {presentation: QP, input: y x, expected: x y}
  membership:
    - {presentation: QP, element: y x - T^(hbar) x y}
    - {presentation: QP, element: x y - y x, expected: not-member}
    - {presentation: QP, element: x y}
  confluence: [QP]
"""


@pytest.fixture
def service() -> VerificationService:
    return VerificationService()


@pytest.fixture
def checks_loader(tmp_path) -> DatasetLoader:
    path = tmp_path / 'checks.qs'
    path.write_text(CHECKS, encoding='utf-8')
    loader = DatasetLoader(path)
    loader.load()
    return loader


@pytest.fixture
def fresh_shift() -> DatasetLoader:
    """Loader propio: el servicio ajusta las cotas del stack"""
    loader = DatasetLoader(FIXTURES / 'shift_stack.qs')
    loader.load()
    return loader


# ============================================================================
# FORMAS NORMALES
# ============================================================================


def test_nf_finds_presentation(service, nc_c3):
    """✅ Test: z3 x3 se reduce en la primera presentación que lo acepta (A3)"""
    report, code = service.run_check('nf', nc_c3, ['z3 x3'])

    assert code == EXIT_OK
    assert report.title == 'normal form in A3'
    assert report.items[0].detail == 'T^(3*hbar) x3 z3'
    print(f"✅ {report.items[0].detail}")


def test_nf_explicit_presentation(service, nc_c3):
    """✅ Test: La variante con T^(3hbar) da el signo contrario"""
    name, nf = service.normal_form(nc_c3, 'y1 x1', 'A1plus')

    assert name == 'A1plus'
    assert str(nf) == 'T^(3*hbar) x1 y1'
    print(f"✅ {nf}")


def test_declared_checks(service, checks_loader):
    """✅ Test: normal_forms y membership de la sección checks"""
    report, code = service.run_check('report', checks_loader)

    assert code == EXIT_FAILED
    assert report.verdict == Verdict.FAIL
    failed = sorted(i.subject for i in report.failures)
    assert failed == ['QP: x y', 'QP: y x']
    assert report.checked == 2 + 3
    print(f"✅ {failed}")


# ============================================================================
# DESPACHO
# ============================================================================


def test_check_cocycle(service, fresh_shift):
    """✅ Test: Shift cierra; ShiftBent no"""
    report, code = service.run_check('check', fresh_shift, ['cocycle'])
    assert code == EXIT_OK
    assert report.checked > 0

    bent, code = service.run_check('check', fresh_shift, ['cocycle', 'ShiftBent'])
    assert code == EXIT_FAILED
    assert bent.verdict == Verdict.FAIL
    print(f"✅ {report.checked} / {bent.checked}")


def test_full_report_on_shift(service, fresh_shift):
    """✅ Test: cocycle, tetra, charts y el complejo de Koszul"""
    report, code = service.run_check('report', fresh_shift)

    assert code == EXIT_OK, report.items
    assert report.title == 'shift_stack report'
    print(f"✅ {report.checked} items")


def test_obstruction_checks(service, nc_c3):
    """✅ Test: Los coeficientes declarados de S1 y L coinciden"""
    report = service._obstruction_checks(nc_c3, nc_c3.document.checks.obstruction)

    assert report.ok, report.items
    assert report.checked == 3 + 9
    print(f"✅ {report.checked} coeficientes")


def test_unknown_commands(service, fresh_shift):
    """✅ Test: Comandos, checks o argumentos ausentes"""
    with pytest.raises(UnknownCommand):
        service.run_check('explode', fresh_shift)
    with pytest.raises(UnknownCommand):
        service.run_check('check', fresh_shift)
    with pytest.raises(UnknownCommand):
        service.run_check('check', fresh_shift, ['nonsense'])
    with pytest.raises(UnknownCommand):
        service.run_check('nf', fresh_shift)
    print("✅ UnknownCommand")


def test_bounds_reach_the_stack(fresh_shift):
    """✅ Test: Las cotas del servicio se aplican al stack"""
    service = VerificationService(Bounds(3, 1))
    service.check('charts', fresh_shift, ['Shift'])

    X = fresh_shift.get_stack('Shift')
    assert (X.max_degree, X.max_rounds) == (3, 1)
    print("✅ Cotas aplicadas")


def test_exit_code():
    """✅ Test: Sólo PASS sale con 0"""
    report = Report(title='t')
    report.passed('x', 'y')
    assert exit_code(report) == EXIT_OK

    report.undecided('x', 'z')
    assert exit_code(report) == EXIT_FAILED
    print("✅ Códigos de salida")


def test_singleton():
    """✅ Test: get / init / reset del servicio global"""
    reset_verification_service()
    first = get_verification_service()
    assert first is get_verification_service()
    assert first.bounds == Bounds(settings.max_degree, settings.max_rounds)

    custom = init_verification_service(Bounds(2, 1))
    assert get_verification_service() is custom

    reset_verification_service()
    assert get_verification_service() is not custom
    reset_verification_service()
    print("✅ Singleton")
