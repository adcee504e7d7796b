"""
Tests del motor A∞: constantes de estructura, deformación, extensión
sobre stacks, obstrucción, pegado y functor espejo

Ejecutar:
    pytest tests/unit/engine/test_ainfty.py -v
"""

from itertools import permutations

import pytest

from app.engines.ainfty import (
    Deformation,
    Evaluator,
    ExtendedElement,
    ExtTerm,
    GeneratorSpec,
    MirrorFunctor,
    StructureConstants,
    ainfty_check,
    ainfty_relation,
    bar_hat_m,
    collapse_single,
    deform,
    extend_stack,
    gluing_check,
    hat_m,
    mirror_functor,
    obstruction_ideal,
    obstruction_presentation,
    r_move,
)
from app.engines.quiver import Element
from app.engines.scalars import Scalar
from app.engines.stack import TensorWord
from app.engines.twisted import mc_check, morphism_diff, sandwich_value
from app.reports import Verdict
from app.utils.exceptions import ChartMismatch, EndpointMismatch, QuiverMismatch
from config.settings import settings
from tests.helpers import all_words, cochain_values, random_element

ONE = Scalar.one()
MINUS = Scalar.rational(-1)


def _constants(objects, generators, tables, units=None) -> StructureConstants:
    specs = {g[0]: GeneratorSpec(*g) for g in generators}
    rows = {key: [(s, out) for s, out in values] for key, values in tables.items()}
    return StructureConstants(objects, specs, rows, units=units or {})


def _point_system(with_homotopy: bool = True) -> StructureConstants:
    """a, b, c componibles; m3(a,b,c) = h con m1(h) = t' − t"""
    generators = [
        ('a', 'O0', 'O1', 0),
        ('b', 'O1', 'O2', 0),
        ('c', 'O2', 'O3', 0),
        ('ab', 'O0', 'O2', 0),
        ('bc', 'O1', 'O3', 0),
        ('t', 'O0', 'O3', 0),
        ('t2', 'O0', 'O3', 0),
        ('h', 'O0', 'O3', -1),
    ]
    tables = {
        ('a', 'b'): [(ONE, 'ab')],
        ('b', 'c'): [(ONE, 'bc')],
        ('ab', 'c'): [(ONE, 't')],
        ('a', 'bc'): [(ONE, 't2')],
    }
    if with_homotopy:
        tables[('a', 'b', 'c')] = [(ONE, 'h')]
        tables[('h',)] = [(ONE, 't2'), (MINUS, 't')]
    return _constants(['O0', 'O1', 'O2', 'O3'], generators, tables)


def _dg_system(c0: str, c1: str, z_sign: Scalar = MINUS) -> StructureConstants:
    """L0 en la carta c0, L1 en c1: m1(u) = v, m2(u,w) = z, m2(v,w) = y, m1(z) = ±y"""
    p0, p1 = f'p{c0}', f'p{c1}'
    generators = [
        ('1L0', 'L0', 'L0', 0, p0, p0),
        ('1L1', 'L1', 'L1', 0, p1, p1),
        ('u', 'L0', 'L1', 0, p0, p1),
        ('v', 'L0', 'L1', 1, p0, p1),
        ('z', 'L0', 'L1', 1, p0, p1),
        ('y', 'L0', 'L1', 2, p0, p1),
        ('w', 'L1', 'L1', 1, p1, p1),
    ]
    tables = {
        ('u',): [(ONE, 'v')],
        ('u', 'w'): [(ONE, 'z')],
        ('v', 'w'): [(ONE, 'y')],
        ('z',): [(z_sign, 'y')],
    }
    return _constants(['L0', 'L1'], generators, tables, {'L0': ['1L0'], 'L1': ['1L1']})


# ============================================================================
# CONSTANTES DE ESTRUCTURA
# ============================================================================


def test_structure_validation():
    """✅ Test: Grados, extremos, unidades y objetos desconocidos"""
    gens = [('u', 'L', 'L', 0), ('v', 'L', 'L', 1), ('one', 'L', 'L', 0)]

    with pytest.raises(EndpointMismatch):
        _constants(['L'], gens, {('u',): [(ONE, 'u')]})
    with pytest.raises(EndpointMismatch):
        _constants(['L'], gens, {('one', 'u'): [(ONE, 'u')]}, {'L': ['one']})
    with pytest.raises(QuiverMismatch):
        _constants(['M'], gens, {})
    with pytest.raises(EndpointMismatch):
        StructureConstants(['L'], {g[0]: GeneratorSpec(*g) for g in gens}, m0={'L': [(ONE, 'v')]})
    print("✅ Tablas validadas")


def test_composable_tuples_respect_vertices(nc_c3):
    """✅ Test: Las cadenas sólo siguen generadores cuyo vértice casa"""
    S = nc_c3.get_structure_constants('SeidelL')

    for chain in S.composable_tuples(3):
        specs = [S.generator(g) for g in chain]
        for left, right in zip(specs, specs[1:]):
            assert left.target_vertex == right.source_vertex
    print(f"✅ {len(S.composable_tuples(3))} cadenas")


def test_point_system_with_homotopy_passes():
    """✅ Test: m2∘m2 difiere de m2∘m2 por m1(m3)"""
    S = _point_system()
    report = ainfty_check(S, 3)

    assert report.ok, report.items
    assert report.checked == len(S.composable_tuples(3))
    print(f"✅ {report.checked} tuplas")


def test_point_system_without_homotopy_fails():
    """✅ Test: Sin m3 la asociatividad falla en (a, b, c)"""
    report = ainfty_check(_point_system(with_homotopy=False), 3)

    assert report.verdict == Verdict.FAIL
    subjects = {item.subject for item in report.failures}
    assert subjects == {'n=3 (a, b, c) @ t', 'n=3 (a, b, c) @ t2'}
    print(f"✅ {sorted(subjects)}")


def test_m1_squared_nonzero_fails():
    """✅ Test: m1(u) = v, m1(v) = z rompe m1∘m1 = 0"""
    S = _constants(
        ['L'],
        [('u', 'L', 'L', 0), ('v', 'L', 'L', 1), ('z', 'L', 'L', 2)],
        {('u',): [(ONE, 'v')], ('v',): [(ONE, 'z')]},
    )
    relation = ainfty_relation(Evaluator(S), ['u'])

    assert [t.generator for t in relation.terms] == ['z']
    assert ainfty_check(S, 2).verdict == Verdict.FAIL
    print("✅ m1∘m1 ≠ 0 detectado")


# ============================================================================
# DEFORMACIÓN Y EXTENSIÓN
# ============================================================================


def test_deformation_validated(shift_stack):
    """✅ Test: B_l debe ser de grado 1 en CF(L, L) y el objeto tener carta"""
    S = _dg_system('0', '1')
    P1 = shift_stack.presentation('1')

    with pytest.raises(EndpointMismatch):
        extend_stack(S, shift_stack, {'L0': '0', 'L1': '1'}, Deformation({'L1': [('y', P1.parse('x1'))]}))
    with pytest.raises(ChartMismatch):
        extend_stack(S, shift_stack, {'L0': '0'}, Deformation({'L1': [('w', P1.parse('x1'))]}))
    with pytest.raises(EndpointMismatch):
        extend_stack(
            S,
            shift_stack,
            {'L0': '0', 'L1': '1'},
            Deformation({'L1': [('w', shift_stack.presentation('0').parse('x0'))]}),
        )
    print("✅ Deformaciones validadas")


def test_extended_dg_system_is_ainfty(shift_stack, rng):
    """✅ Test: La extensión deformada por b = β·w cumple las ecuaciones A∞"""
    X = shift_stack

    for _ in range(settings.extension_trials):
        c0, c1 = rng.sample(list(X.lattice.charts), 2)
        beta = random_element(rng, X.presentation(c1), terms=2, max_len=2)
        ev = extend_stack(
            _dg_system(c0, c1), X, {'L0': c0, 'L1': c1}, Deformation({'L1': [('w', beta)]}), truncation=2
        )
        report = ainfty_check(ev, 3)
        assert report.ok, report.items
    print(f"✅ {settings.extension_trials} extensiones aleatorias")


def test_extended_dg_system_detects_sign_error(shift_stack):
    """✅ Test: m1(z) = +y deja 2·y en la ecuación de (u, w)"""
    ev = extend_stack(_dg_system('0', '1', z_sign=ONE), shift_stack, {'L0': '0', 'L1': '1'})
    report = ainfty_check(ev, 2)

    assert report.verdict == Verdict.FAIL
    assert [item.subject for item in report.failures] == ['n=2 (u, w) @ y']
    print(f"✅ Residuo {report.failures[0].residual}")


def test_deformed_m1_collects_insertions(shift_stack):
    """✅ Test: m1^b(u) = v + z ⊗ β"""
    X = shift_stack
    beta = X.presentation('1').parse('y1')
    ev = extend_stack(_dg_system('0', '1'), X, {'L0': '0', 'L1': '1'}, Deformation({'L1': [('w', beta)]}))

    values = ev.collapse(ev.m([ev.bare('u')]))
    P0 = X.presentation('0', {'1'})
    assert values['v'] == P0.parse('e(p0)')
    assert values['z'] == P0.parse('y0 x0')
    print(f"✅ z ⊗ {values['z']}")


# ============================================================================
# OPERACIONES OP
# ============================================================================


@pytest.fixture
def op_evaluator(shift) -> Evaluator:
    S = _constants(['L'], [('u', 'L', 'L', 0, 'p0', 'p0'), ('v', 'L', 'L', 1, 'p0', 'p0')], {('u',): [(ONE, 'v')]})
    return deform(S, Deformation(), algebra=shift.get_presentation('F0'))


def test_hat_m_keeps_op_word(op_evaluator, shift):
    """✅ Test: M^op∘m separa la palabra izquierda de la op"""
    F0 = shift.get_presentation('F0')
    x = ExtendedElement.of(
        ExtTerm(ONE, TensorWord.of(('F0', F0.parse('x0'))), 'u', TensorWord.of(('F0', F0.parse('y0'))))
    )

    assert hat_m(op_evaluator, [x]) == {'v': [(F0.parse('x0'), F0.parse('y0'))]}
    assert bar_hat_m(op_evaluator, [x]) == {'v': F0.parse('x0 y0')}
    print("✅ hat_m y bar_hat_m")


def test_r_move_and_single_chart_collapse(shift):
    """✅ Test: R junta la palabra op por la izquierda; colapsar exige una carta"""
    F0 = shift.get_presentation('F0')
    left = TensorWord.of(('F0', F0.parse('x0')), ('F0', F0.parse('y0')))
    moved = r_move(left, TensorWord.of(('F0', F0.parse('y0'))))

    assert moved.slots[0][1] == F0.parse('y0 x0')
    assert collapse_single(moved, F0) == F0.parse('y0 x0 y0')
    with pytest.raises(ChartMismatch):
        r_move(left, TensorWord.of(('F1', F0.parse('y0'))))
    with pytest.raises(ChartMismatch):
        collapse_single(TensorWord.of(('F0', F0.parse('x0')), ('F1', F0.parse('y0'))), F0)
    print(f"✅ {moved}")


def _relation_terms(ev: Evaluator, inputs: list[ExtendedElement], gens: tuple[str, ...]):
    """(signo, entradas externas) de cada término de la ecuación A∞ en `inputs`"""
    S = ev.constants
    shifted = [S.generator(g).shifted for g in gens]
    objects = ev.objects_of(gens)
    n = len(inputs)
    for k2 in range(n + 1):
        for i in range(n - k2 + 1):
            inner = ev.m(inputs[i : i + k2]) if k2 else ev.m0(objects[i])
            if not inner.is_empty:
                sign = -1 if sum(shifted[:i]) % 2 else 1
                yield sign, inputs[:i] + [inner] + inputs[i + k2 :]


def _word_input(rng, F0, generator: str, with_op: bool) -> ExtendedElement:
    left = TensorWord.of(
        ('F0', random_element(rng, F0, terms=1, max_len=2)),
        ('F0', random_element(rng, F0, terms=2, max_len=2)),
    )
    op = TensorWord.of(('F0', random_element(rng, F0, terms=2, max_len=2))) if with_op else None
    return ExtendedElement.of(ExtTerm(ONE, left, generator, op))


@pytest.mark.slow
def test_hat_operations_satisfy_ainfty_relations(shift, rng):
    """✅ Test: Σ ± M^op∘m(…, m(…), …) se anula como tensor y Σ ± M^op∘R∘m como elemento"""
    F0 = shift.get_presentation('F0')
    trials = settings.extension_trials

    for _ in range(trials):
        beta = random_element(rng, F0, terms=2, max_len=2)
        b = Deformation({'L1': [('w', beta)]})
        ev = deform(_dg_system('0', '0'), b, algebra=F0, truncation=2)
        S = ev.constants
        gens = rng.choice([c for c in S.composable_tuples(3) if not any(S.is_unit(g) for g in c)])

        inputs = [_word_input(rng, F0, g, with_op=True) for g in gens]
        tensor = {}
        for sign, outer in _relation_terms(ev, inputs, gens):
            for generator, pairs in hat_m(ev, outer).items():
                for left, op in pairs:
                    op_terms = op.terms if op is not None else ((None, ONE),)
                    for lw, ls in left.terms:
                        for ow, os in op_terms:
                            key = (generator, lw, ow)
                            tensor[key] = tensor.get(key, Scalar.zero()) + ls * os * sign
        assert all(v.is_zero for v in tensor.values()), (gens, tensor)

        mixed = inputs[:-1] + [_word_input(rng, F0, gens[-1], with_op=False)]
        total = {}
        for sign, outer in _relation_terms(ev, mixed, gens):
            for generator, value in bar_hat_m(ev, outer).items():
                total[generator] = total.get(generator, Element.zero()) + value.scale(sign)
        assert all(v.is_zero for v in total.values()), (gens, total)
    print(f"✅ {trials} relaciones con palabras op")


# ============================================================================
# OBSTRUCCIÓN
# ============================================================================


@pytest.mark.parametrize(
    'generator, expected',
    [
        ('Wb1', "T^(A1') x1 y1 - T^(A1 + A3') y1 x1"),
        ('Xb1', "T^(A1') y1 w1 - T^(A1 + A3') w1 y1"),
        ('Yb1', "T^(A1') w1 x1 - T^(A1 + A3') x1 w1"),
    ],
)
def test_seidel_obstruction(nc_c3, generator, expected):
    """✅ Test: Coeficientes de m0^b de la Lagrangiana S1"""
    ev = nc_c3.get_extension('seidel_1').evaluator
    ideal = obstruction_ideal(ev, 'S1')

    assert set(ideal) == {'Wb1', 'Xb1', 'Yb1'}
    assert ideal[generator] == nc_c3.parse_element('F1', expected)
    print(f"✅ {generator}: {ideal[generator]}")


def test_obstruction_matches_jacobi_chart(nc_c3):
    """✅ Test: F1 / (obstrucción de S1) reduce igual que A1"""
    ev = nc_c3.get_extension('seidel_1').evaluator
    quotient = obstruction_presentation(ev, 'S1', nc_c3.get_presentation('F1'))
    A1 = nc_c3.get_presentation('A1')

    assert len(quotient.rules) == len(A1.rules)
    for x in all_words(A1.quiver, 3):
        assert quotient.normal_form(x) == A1.normal_form(x)
    print(f"✅ {len(quotient.rules)} reglas coinciden")


def test_potential_free_lagrangian_obstruction(nc_c3):
    """✅ Test: El ideal de L es el de Jacobi de Φ0"""
    ev = nc_c3.get_extension('seidel_L').evaluator
    ideal = obstruction_ideal(ev, 'L')

    assert len(ideal) == 9
    assert ideal['Ab1'] == nc_c3.parse_element('FQ', 'c3 b2 - T^(hbar) b3 c2')
    assert ideal['Cb3'] == nc_c3.parse_element('FQ', 'b2 a1 - T^(hbar) a2 b1')
    print(f"✅ {len(ideal)} relaciones")


# ============================================================================
# PEGADO
# ============================================================================


def _pair_system(both_ways: bool = True) -> StructureConstants:
    generators = [
        ('1A', 'A', 'A', 0),
        ('1B', 'B', 'B', 0),
        ('al', 'A', 'B', 0),
        ('be', 'B', 'A', 0),
    ]
    tables = {('al', 'be'): [(ONE, '1A')]}
    if both_ways:
        tables[('be', 'al')] = [(ONE, '1B')]
    return _constants(['A', 'B'], generators, tables, {'A': ['1A'], 'B': ['1B']})


def test_gluing_inverse_pair_passes():
    """✅ Test: m2(α, β) = 1A y m2(β, α) = 1B"""
    ev = Evaluator(_pair_system())
    alpha = {('A', 'B'): ev.bare('al'), ('B', 'A'): ev.bare('be')}
    report = gluing_check(ev, alpha, max_p=3)

    assert report.ok, report.items
    assert report.checked == 2 + 2 + 2
    print(f"✅ {report.checked} ecuaciones")


def test_gluing_one_sided_inverse_fails():
    """✅ Test: Sin m2(β, α) = 1B la ecuación (B, A, B) falla"""
    ev = Evaluator(_pair_system(both_ways=False))
    alpha = {('A', 'B'): ev.bare('al'), ('B', 'A'): ev.bare('be')}
    report = gluing_check(ev, alpha, max_p=3)

    assert report.verdict == Verdict.FAIL
    assert [item.subject for item in report.failures] == [
        'm2(alpha[B,A], alpha[A,B]) = alpha[B,B] @ 1B'
    ]
    print("✅ Inversa por un lado detectada")


# ============================================================================
# FUNCTOR ESPEJO
# ============================================================================


def _functor_system() -> StructureConstants:
    return _constants(
        ['L0', 'T'],
        [('1L0', 'L0', 'L0', 0, 'p0', 'p0'), ('g', 'L0', 'T', 0, 'p0'), ('h', 'L0', 'T', 1, 'p0')],
        {('g',): [(ONE, 'h')]},
        {'L0': ['1L0']},
    )


def test_functor_on_object(shift_stack):
    """✅ Test: m1(g) = h da la celda φ^{0,1}_0 con valor e(p0)"""
    ev = extend_stack(_functor_system(), shift_stack, {'L0': '0'})
    T = MirrorFunctor(ev, {}).on_object('T', max_len=1)

    assert set(T.mc.cells) == {(('0',), 1)}
    cell = T.mc.cells[(('0',), 1)]
    assert sandwich_value(shift_stack, cell, cell.entries[('h', 'g')]) == shift_stack.presentation('0').parse('e(p0)')
    assert [g.label for g in T.module.generators('0')] == ['g', 'h']
    assert mc_check(T).ok
    print(f"✅ {T.name}")


def test_functor_rejects_bad_typing(shift_stack, shift):
    """✅ Test: Sin stack, objetivo con carta o dos objetos en una carta"""
    S = _functor_system()
    with pytest.raises(ChartMismatch):
        MirrorFunctor(deform(S, Deformation(), algebra=shift.get_presentation('F0')), {})
    with pytest.raises(ChartMismatch):
        mirror_functor(extend_stack(S, shift_stack, {'L0': '0'}), {}, 'L0')
    with pytest.raises(ChartMismatch):
        MirrorFunctor(extend_stack(S, shift_stack, {'L0': '0', 'T': '0'}), {})
    print("✅ Tipado del functor validado")


def _glued_system(
    charts, g_degree: int = 0, q_degree: int = 0, homotopy: bool = False
) -> StructureConstants:
    """
    Grupoide de objetos L_c (uno por carta) con a_jk: L_j → L_k inversos,
    g_c: L_c → T, h_c, r_c: L_c → T2 y Q, Qd: T → T2 con m1(Q) = Qd

    m2(a_jk, −) transporta g, h y r; m2(g_c, Q) = h_c, m2(g_c, Qd) = r_c y
    m1(h_c) = ±r_c cierran las ecuaciones A∞. Con `homotopy` se añade
    m3(a_01, g_1, Q) = k_0 (sólo para leer signos).
    """
    d_h = g_degree + q_degree
    generators = [('Q', 'T', 'T2', q_degree), ('Qd', 'T', 'T2', q_degree + 1)]
    tables = {('Q',): [(ONE, 'Qd')]}
    for c in charts:
        p = f'p{c}'
        generators += [
            (f'1L{c}', f'L{c}', f'L{c}', 0, p, p),
            (f'g{c}', f'L{c}', 'T', g_degree, p),
            (f'h{c}', f'L{c}', 'T2', d_h, p),
            (f'r{c}', f'L{c}', 'T2', d_h + 1, p),
        ]
        tables[(f'g{c}', 'Q')] = [(ONE, f'h{c}')]
        tables[(f'g{c}', 'Qd')] = [(ONE, f'r{c}')]
        tables[(f'h{c}',)] = [(MINUS if g_degree % 2 else ONE, f'r{c}')]
    for j, k in permutations(charts, 2):
        generators.append((f'a{j}{k}', f'L{j}', f'L{k}', 0, f'p{j}', f'p{k}'))
        for label in 'ghr':
            tables[(f'a{j}{k}', f'{label}{k}')] = [(ONE, f'{label}{j}')]
        for l in charts:
            if l != k:
                tables[(f'a{j}{k}', f'a{k}{l}')] = [(ONE, f'1L{j}' if l == j else f'a{j}{l}')]
    if homotopy:
        generators.append(('k0', 'L0', 'T2', d_h - 1, 'p0'))
        tables[('a01', 'g1', 'Q')] = [(ONE, 'k0')]
    objects = [f'L{c}' for c in charts] + ['T', 'T2']
    return _constants(objects, generators, tables, {f'L{c}': [f'1L{c}'] for c in charts})


def _glued(X, charts, S: StructureConstants):
    ev = extend_stack(S, X, {f'L{c}': c for c in charts})
    alpha = {(f'L{j}', f'L{k}'): ev.bare(f'a{j}{k}') for j, k in permutations(charts, 2)}
    return ev, alpha


@pytest.mark.parametrize(
    'g_degree, q_degree, single, pair',
    [(0, 0, -1, -1), (0, 1, -1, 1), (1, 0, 1, -1), (1, 1, 1, 1)],
)
def test_functor_morphism_cell_signs(shift_stack, g_degree, q_degree, single, pair):
    """✅ Test: F(Q) lleva (−1)^{|g|'} en k = 0 y (−1)^{|Q|'} en k = 1"""
    charts = ('0', '1')
    S = _glued_system(charts, g_degree, q_degree, homotopy=True)
    ev, alpha = _glued(shift_stack, charts, S)
    phi = mirror_functor(ev, alpha, ['Q'])
    e0 = Element.idempotent('p0')

    cell = phi.cells[(('0',), q_degree)]
    assert sandwich_value(shift_stack, cell, cell.entries[('h0', 'g0')]) == e0.scale(single)
    cell = phi.cells[(('0', '1'), q_degree - 1)]
    assert sandwich_value(shift_stack, cell, cell.entries[('k0', 'g1')]) == e0.scale(pair)
    assert (('1', '0'), q_degree - 1) not in phi.cells
    print(f"✅ |g|={g_degree}, |Q|={q_degree}: {single:+d}, {pair:+d}")


@pytest.mark.parametrize(
    'fixture, charts',
    [
        ('shift_stack', ('0', '1')),
        ('shift_stack', ('0', '1', '2')),
        ('lattice4_stack', ('1', '3')),
        ('lattice4_stack', ('0', '1', '2', '3')),
    ],
)
def test_glued_family_gives_twisted_complexes(request, fixture, charts):
    """✅ Test: Si α cumple las ecuaciones de pegado, F(T) y F(T2) cumplen MC"""
    X = request.getfixturevalue(fixture)
    ev, alpha = _glued(X, charts, _glued_system(charts))

    gluing = gluing_check(ev, alpha, max_p=3)
    assert gluing.ok, gluing.items
    for target, lengths in (('T', {2}), ('T2', {1, 2})):
        T = mirror_functor(ev, alpha, target)
        report = mc_check(T)
        assert report.ok, [(i.subject, i.residual) for i in report.failures]
        assert report.checked > 0
        assert {len(indices) for indices, _ in T.mc.cells} == lengths
    print(f"✅ {fixture} {charts}: {gluing.checked} ecuaciones de pegado")


@pytest.mark.slow
@pytest.mark.parametrize(
    'fixture, charts', [('shift_stack', ('0', '1')), ('lattice4_stack', ('0', '1', '2', '3'))]
)
def test_functor_commutes_with_differential(request, fixture, charts):
    """✅ Test: F(m1 Q) = ∂̌F(Q) + b·F(Q) − F(Q)·a sobre un sistema dg"""
    X = request.getfixturevalue(fixture)
    ev, alpha = _glued(X, charts, _glued_system(charts))
    assert ainfty_check(ev, 3).ok

    a = mirror_functor(ev, alpha, 'T').mc
    b = mirror_functor(ev, alpha, 'T2').mc
    phi = mirror_functor(ev, alpha, ['Q'])
    expected = cochain_values(X, mirror_functor(ev, alpha, ['Qd']))

    assert len(expected) == len(charts)
    assert cochain_values(X, morphism_diff(X, phi, a, b)) == expected
    print(f"✅ {fixture}: {len(expected)} entradas")
