"""
Tests de integración sobre los datasets incluidos

Reproducen las identidades exactas de los stacks de K_P2 y de la carta
afín libre, la coincidencia entre Jacobi y obstrucción y las ecuaciones de pegado.

Ejecutar:
    pytest tests/integration/test_acceptance.py -v
    pytest -m "integration and not slow"
"""

import pytest

from app.cli import main
from app.engines.ainfty import gluing_check, mirror_functor, obstruction_presentation
from app.engines.representations import rep_check
from app.engines.rewriting import ideal_member_bounded
from app.engines.stack import (
    chart_check,
    check_all_cocycles,
    check_all_gerbes,
    check_all_tetrahedra,
    stack_restrict,
)
from app.engines.twisted import mc_check, sandwich_value
from app.reports import Report, Verdict, render_machine
from app.services import VerificationService
from config.settings import settings
from tests.conftest import DATASETS
from tests.helpers import all_words

pytestmark = pytest.mark.integration


@pytest.fixture(scope='module')
def Yhat(kp2_stack):
    X = kp2_stack.get_stack('Yhat')
    X.max_degree, X.max_rounds = settings.max_degree, settings.max_rounds
    return X


# ============================================================================
# COCICLOS Y TETRAEDROS
# ============================================================================


def test_yhat_cocycles(Yhat):
    """✅ Test: G_ij ∘ G_jk = c_ijk · G_ik · c_ijk⁻¹ en todos los triples de Yhat"""
    report = check_all_cocycles(Yhat)

    assert report.ok, report.items
    assert check_all_gerbes(Yhat).ok
    print(f"✅ {report.checked} identidades")


@pytest.mark.parametrize(
    'arrow, expected', [('a1', 'a1 b1^-1'), ('a2', 'b1 b3 a2')], ids=['a1', 'a2']
)
def test_yhat_round_trip_through_chart_3(kp2_stack, Yhat, arrow, expected):
    """✅ Test: G03 ∘ G30 conjuga por el gerbe c_030"""
    G30, G03 = Yhat.transition('3', '0'), Yhat.transition('0', '3')
    P0 = Yhat.presentation('0', {'3'})

    got = G03(G30(P0.parse(arrow)))
    assert got == P0.normal_form(kp2_stack.builder.element(expected, P0.quiver))
    print(f"✅ G03 G30({arrow}) = {got}")


@pytest.mark.slow
@pytest.mark.parametrize('name', ['Yhat', 'Y'])
def test_tetrahedra(kp2_stack, name):
    """✅ Test: Coherencia de los gerbes en todas las cuádruplas"""
    report = check_all_tetrahedra(kp2_stack.get_stack(name))

    assert report.ok, report.items
    print(f"✅ {name}: {report.checked} identidades")


# ============================================================================
# RESTRICCIÓN
# ============================================================================


@pytest.mark.slow
def test_restricted_transitions(kp2_stack, Yhat):
    """✅ Test: G21 y sus análogos cíclicos tras restringir vía la carta 0"""
    Y, report = stack_restrict(Yhat, ['1', '2', '3'], '0')
    assert report.ok, report.items

    expectations = [
        ('2', '1', 'x1', 'T^(-B - hbar) z2^-1'),
        ('2', '1', 'y1', 'T^(-B/2 - 2hbar) y2 z2^-1'),
        ('2', '1', 'w1', 'T^(3B/2 + 9hbar) w2 z2 z2 z2'),
        ('3', '2', 'y2', 'T^(-B - hbar) x3^-1'),
        ('1', '3', 'z3', 'T^(-B - hbar) y1^-1'),
    ]
    for i, j, arrow, expected in expectations:
        G = Y.transition(i, j)
        target = Y.presentation(i, {j})
        got = G(Y.presentation(j, {i}).parse(arrow))
        assert got == target.normal_form(kp2_stack.builder.element(expected, target.quiver))
        print(f"✅ G{i}{j}({arrow}) = {got}")


# ============================================================================
# REPRESENTACIONES
# ============================================================================


def test_chart_representation(kp2_stack):
    """✅ Test: G01 manda las relaciones de A1 a cero; la variante +3hbar no"""
    good = rep_check(kp2_stack.get_representation('G01'), settings.max_degree, settings.max_rounds)
    bad = rep_check(kp2_stack.get_representation('G01plus'), settings.max_degree, settings.max_rounds)

    assert good.ok, good.items
    assert bad.verdict != Verdict.PASS
    print(f"✅ G01: {good.checked} relaciones; G01plus: {bad.verdict.value}")


def test_transported_relation_is_member(kp2_stack):
    """✅ Test: La imagen de x1 y1 − T^(−3hbar) y1 x1 está en el ideal de A0(U01)"""
    P = kp2_stack.get_presentation('A0_U01')
    x = kp2_stack.parse_element(
        'A0_U01', 'b1 a1^-1 c1 a1^-1 - T^(-3hbar) c1 a1^-1 b1 a1^-1'
    )

    result = ideal_member_bounded(P, x, settings.max_degree, settings.max_rounds)
    assert result.is_member
    print("✅ MEMBER")


# ============================================================================
# JACOBI / OBSTRUCCIÓN
# ============================================================================


@pytest.mark.parametrize(
    'extension, obj, base, chart',
    [('seidel_L', 'L', 'FQ', 'A0'), ('seidel_1', 'S1', 'F1', 'A1')],
)
def test_obstruction_agrees_with_jacobi(nc_c3, extension, obj, base, chart):
    """✅ Test: Misma forma normal en todas las palabras de longitud ≤ 4"""
    ev = nc_c3.get_extension(extension).evaluator
    quotient = obstruction_presentation(ev, obj, nc_c3.get_presentation(base))
    jacobi = nc_c3.get_presentation(chart)

    words = all_words(jacobi.quiver, 4)
    for x in words:
        assert quotient.normal_form(x) == jacobi.normal_form(x), str(x)
    print(f"✅ {extension}: {len(words)} palabras")


def test_obstruction_reproduces_relations(nc_c3):
    """✅ Test: b2 a1 = T^(hbar) a2 b1 y y1 x1 = T^(-3hbar) x1 y1"""
    FQ = obstruction_presentation(
        nc_c3.get_extension('seidel_L').evaluator, 'L', nc_c3.get_presentation('FQ')
    )
    F1 = obstruction_presentation(
        nc_c3.get_extension('seidel_1').evaluator, 'S1', nc_c3.get_presentation('F1')
    )

    assert str(FQ.normal_form(FQ.parse('b2 a1'))) == 'T^(hbar) a2 b1'
    assert str(F1.normal_form(F1.parse('y1 x1'))) == 'T^(-3*hbar) x1 y1'
    print("✅ Relaciones reproducidas")


# ============================================================================
# ECUACIONES DE PEGADO
# ============================================================================


@pytest.mark.slow
@pytest.mark.parametrize('i', ['1', '2', '3'])
def test_isomorphism_equations(kp2_stack, Yhat, i):
    """✅ Test: m1(α)=0, m1(β)=0, m2(α,β)=1_L, m2(β,α)=1_S"""
    bundle = kp2_stack.get_extension(f'kp2_{i}')
    report = gluing_check(bundle.evaluator, bundle.alpha, bundle.witnesses)

    assert report.ok, report.items
    print(f"✅ kp2_{i}: {report.checked} ecuaciones")


@pytest.mark.slow
def test_m2_alpha_beta_is_unit(kp2_stack, Yhat):
    """✅ Test: m2(α3, β3) = (e1 + e2 + e3)·1_L y m2(β3, α3) = 1_S3"""
    bundle = kp2_stack.get_extension('kp2_3')
    ev = bundle.evaluator
    alpha, beta = bundle.alpha[('L', 'S3')], bundle.alpha[('S3', 'L')]

    report = Report(title='units')
    ev.record(report, 'unit', 'L', ev.m([alpha, beta]) - ev.unit_element('L'))
    ev.record(report, 'unit', 'S3', ev.m([beta, alpha]) - ev.unit_element('S3'))
    assert report.ok, report.items

    perturbed = beta.scaled(kp2_stack.builder.scalar('T^(A5)'))
    broken = Report(title='perturbed')
    ev.record(broken, 'unit', 'L', ev.m([alpha, perturbed]) - ev.unit_element('L'))
    assert broken.verdict != Verdict.PASS
    print(f"✅ Unidades; perturbado: {broken.verdict.value}")


@pytest.mark.slow
def test_mirror_of_s3_is_twisted_complex(kp2_stack, Yhat):
    """✅ Test: F(S3) sobre la carta 0: m1^b(Q23) llega a P23, P13a y P13b y cumple MC"""
    bundle = kp2_stack.get_extension('kp2_3_mirror')
    T = mirror_functor(bundle.evaluator, bundle.alpha, 'S3')
    cell = T.mc.cells[(('0',), 1)]
    P0 = Yhat.presentation('0')

    assert bundle.functor == ('S3',)
    assert {g.label for g in T.module.generators('0')} == {'Q23', 'P23', 'P13a', 'P13b'}
    assert set(cell.entries) == {('P23', 'Q23'), ('P13a', 'Q23'), ('P13b', 'Q23')}
    value = sandwich_value(Yhat, cell, cell.entries[('P13a', 'Q23')])
    assert P0.normal_form(value) == -P0.parse('a1')
    assert mc_check(T).ok
    assert VerificationService().functor(kp2_stack, []).ok
    print(f"✅ {T.name}: {len(T.mc)} celdas")


# ============================================================================
# CARTA AFÍN LIBRE
# ============================================================================


def test_free_chart_round_trips(free_proj):
    """✅ Test: G10 ∘ G01 = Id y G01 ∘ G10(a) = c(h_a)·a·c(t_a)⁻¹"""
    X = free_proj.get_stack('FP')
    G01, G10 = X.transition('0', '1'), X.transition('1', '0')
    P0, P1 = X.presentation('0', {'1'}), X.presentation('1', {'0'})

    for name in ('X1', 'X2'):
        x = P1.parse(name)
        assert G10(G01(x)) == x

    for arrow in ('a0', 'a1', 'a2'):
        a = X.chart('0').base.quiver.arrow(arrow)
        head, tail = X.gerbe('0', '1', '0', a.head), X.gerbe('0', '1', '0', a.tail)
        expected = P0.normal_form(head.value * P0.parse(arrow) * tail.inverse)
        assert G01(G10(P0.parse(arrow))) == expected, arrow

    assert chart_check(X).ok
    assert check_all_cocycles(X).ok
    print("✅ Carta afín")


# ============================================================================
# FIBRADO UNIVERSAL
# ============================================================================


@pytest.mark.slow
def test_universal_bundle_report(kp2_bundle):
    """✅ Test: El reporte MC de U es determinista y cada residuo va reducido"""
    U = kp2_bundle.get_twisted_complex('U')

    first = mc_check(U)
    second = mc_check(U)
    assert render_machine(first) == render_machine(second)
    assert first.checked > 0
    for item in first.items:
        if item.verdict != Verdict.PASS:
            assert item.residual, item.subject
    print(f"✅ {first.checked} entradas, {len(first)} residuos")


# ============================================================================
# LÍNEA DE COMANDOS
# ============================================================================


def test_acceptance_commands(capsys):
    """✅ Test: qstack check cocycle nc_kp2_stack.qs y qstack nf nc_c3.qs "z3 x3" """
    assert main(['check', 'cocycle', str(DATASETS / 'nc_kp2_stack.qs')]) == 0
    capsys.readouterr()

    assert main(['nf', str(DATASETS / 'nc_c3.qs'), 'z3 x3']) == 0
    assert capsys.readouterr().out.strip() == 'T^(3*hbar) x3 z3'
    print("✅ Comandos de aceptación")
