"""
verification_service.py - Despacho de verificaciones sobre un dataset

Responsabilidades:
- Resolver comandos (`nf`, `check <kind>`, `functor`, `report`) a los checkers del motor
- Aplicar las cotas de completación pedidas por línea de comandos
- Traducir el veredicto del reporte a un código de salida (0 / 1 / 2)
"""

from collections.abc import Sequence
from dataclasses import dataclass

from app.engines.ainfty import ainfty_check, gluing_check, mirror_functor, obstruction_ideal
from app.engines.quiver import Element
from app.engines.representations import rep_check, rep_check_inverses
from app.engines.rewriting import (
    AlgebraPresentation,
    check_local_confluence,
    ideal_member_bounded,
    record_zero,
)
from app.engines.stack import QuiverStack, chart_check, check_all_cocycles, check_all_tetrahedra
from app.engines.twisted import TwistedComplex, mc_check
from app.loader import DatasetLoader, ExtensionBundle
from app.loader.models import MembershipCheck, NormalFormCheck, ObstructionCheck
from app.reports import Report, Verdict
from app.utils.exceptions import QStackError, UnknownCommand
from app.utils.logger import get_logger
from config.settings import settings

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT_ERROR = 2

CHECK_KINDS = ('cocycle', 'tetra', 'rep', 'mc', 'gluing', 'ainfty', 'confluence', 'charts')
COMMANDS = ('nf', 'check', 'functor', 'report')


@dataclass(frozen=True)
class Bounds:
    """Cotas de la completación acotada (max_degree, max_rounds)"""

    max_degree: int
    max_rounds: int

    @classmethod
    def default(cls) -> 'Bounds':
        return cls(settings.max_degree, settings.max_rounds)


def exit_code(report: Report) -> int:
    return EXIT_OK if report.verdict == Verdict.PASS else EXIT_FAILED


class VerificationService:
    """
    Ejecuta verificaciones sobre un dataset cargado

    Usage:
        service = get_verification_service()
        report, code = service.run_check('check', loader, ['cocycle'])
        report, code = service.run_check('nf', loader, ['z3 x3'])
    """

    def __init__(self, bounds: Bounds | None = None):
        self.bounds = bounds or Bounds.default()

    # ========================================================================
    # ENTRADA
    # ========================================================================

    def run_check(
        self, command: str, loader: DatasetLoader, args: Sequence[str] = ()
    ) -> tuple[Report, int]:
        """
        Despacha `command` y devuelve (reporte, código de salida)

        Raises:
            UnknownCommand: comando o tipo de check desconocido
        """
        if command == 'nf':
            report = self.normal_form_report(loader, args)
        elif command == 'check':
            if not args:
                raise UnknownCommand(f'check needs one of {", ".join(CHECK_KINDS)}')
            report = self.check(args[0], loader, args[1:])
        elif command == 'functor':
            report = self.functor(loader, args)
        elif command == 'report':
            report = self.full_report(loader)
        else:
            raise UnknownCommand(f'Unknown command {command!r}; expected one of {COMMANDS}')
        logger.info(f'{command} {" ".join(args)}: {report.verdict.value} ({report.checked} items)')
        return report, exit_code(report)

    def check(self, kind: str, loader: DatasetLoader, names: Sequence[str] = ()) -> Report:
        handlers = {
            'cocycle': self.check_cocycle,
            'tetra': self.check_tetra,
            'charts': self.check_charts,
            'rep': self.check_representations,
            'confluence': self.check_confluence,
            'mc': self.check_mc,
            'ainfty': self.check_ainfty,
            'gluing': self.check_gluing,
        }
        if kind not in handlers:
            raise UnknownCommand(f'Unknown check {kind!r}; expected one of {CHECK_KINDS}')
        return handlers[kind](loader, list(names))

    # ========================================================================
    # FORMAS NORMALES
    # ========================================================================

    def normal_form(
        self, loader: DatasetLoader, text: str, presentation: str | None = None
    ) -> tuple[str, Element]:
        """
        Forma normal de `text` en `presentation` o en la primera presentación
        del dataset cuyo carcaj acepta el elemento
        """
        names = [presentation] if presentation else list(loader.document.presentations)
        last: QStackError | None = None
        for name in names:
            try:
                x = loader.parse_element(name, text)
            except QStackError as e:
                last = e
                continue
            return name, loader.get_presentation(name).normal_form(x)
        if last is not None:
            raise last
        raise UnknownCommand(f'Dataset {loader.document.name} declares no presentations')

    def normal_form_report(self, loader: DatasetLoader, args: Sequence[str]) -> Report:
        if not args:
            raise UnknownCommand('nf needs an element')
        presentation = args[1] if len(args) > 1 else None
        name, nf = self.normal_form(loader, args[0], presentation)
        report = Report(title=f'normal form in {name}')
        report.passed('nf', args[0], detail=str(nf))
        return report

    def _normal_form_checks(self, loader: DatasetLoader, checks: list[NormalFormCheck]) -> Report:
        report = Report(title='normal forms')
        for item in checks:
            P = loader.get_presentation(item.presentation)
            got = P.normal_form(loader.parse_element(item.presentation, item.input))
            expected = P.normal_form(loader.parse_element(item.presentation, item.expected))
            subject = f'{item.presentation}: {item.input}'
            if got == expected:
                report.passed('nf', subject, detail=str(got))
            else:
                report.fail('nf', subject, residual=str(got), detail=f'expected {expected}')
        return report

    def _membership_checks(self, loader: DatasetLoader, checks: list[MembershipCheck]) -> Report:
        report = Report(title='ideal membership')
        for item in checks:
            P = loader.get_presentation(item.presentation)
            x = loader.parse_element(item.presentation, item.element)
            result = ideal_member_bounded(P, x, self.bounds.max_degree, self.bounds.max_rounds)
            subject = f'{item.presentation}: {item.element}'
            residual = str(result.residual)
            if item.expected == 'member':
                if result.is_member:
                    report.passed('member', subject)
                elif result.refuted:
                    report.fail('member', subject, residual=residual)
                else:
                    report.undecided('member', subject, residual=residual)
            elif result.refuted:
                report.passed('not-member', subject, detail=residual)
            elif result.is_member:
                report.fail('not-member', subject, residual='0')
            else:
                report.undecided('not-member', subject, residual=residual)
        return report

    # ========================================================================
    # STACKS Y REPRESENTACIONES
    # ========================================================================

    def _stack(self, loader: DatasetLoader, name: str) -> QuiverStack:
        X = loader.get_stack(name)
        X.max_degree = self.bounds.max_degree
        X.max_rounds = self.bounds.max_rounds
        return X

    @staticmethod
    def _names(requested: list[str], declared: list[str], available: Sequence[str]) -> list[str]:
        """Nombres pedidos, o los declarados en `checks`, o todos los disponibles"""
        return requested or declared or list(available)

    def check_cocycle(self, loader: DatasetLoader, names: list[str]) -> Report:
        doc = loader.document
        reports = [
            check_all_cocycles(self._stack(loader, n))
            for n in self._names(names, doc.checks.cocycle, list(doc.stacks))
        ]
        return Report.merge('cocycle conditions', reports)

    def check_tetra(self, loader: DatasetLoader, names: list[str]) -> Report:
        doc = loader.document
        reports = [
            check_all_tetrahedra(self._stack(loader, n))
            for n in self._names(names, doc.checks.tetra, list(doc.stacks))
        ]
        return Report.merge('tetrahedron conditions', reports)

    def check_charts(self, loader: DatasetLoader, names: list[str]) -> Report:
        doc = loader.document
        reports = [
            chart_check(self._stack(loader, n))
            for n in self._names(names, doc.checks.charts, list(doc.stacks))
        ]
        return Report.merge('chart conditions', reports)

    def check_representations(self, loader: DatasetLoader, names: list[str]) -> Report:
        doc = loader.document
        reports = []
        for name in self._names(names, doc.checks.representations, list(doc.representations)):
            G = loader.get_representation(name)
            reports.append(rep_check(G, self.bounds.max_degree, self.bounds.max_rounds))
            reports.append(rep_check_inverses(G, self.bounds.max_degree, self.bounds.max_rounds))
        return Report.merge('representations', reports)

    def check_confluence(self, loader: DatasetLoader, names: list[str]) -> Report:
        """Un nombre de stack cubre todas las localizaciones de sus cartas"""
        doc = loader.document
        presentations: list[AlgebraPresentation] = []
        for n in self._names(names, doc.checks.confluence, []):
            if n in doc.stacks:
                presentations.extend(self._stack(loader, n).localizations())
            else:
                presentations.append(loader.get_presentation(n))
        reports = [
            check_local_confluence(P, settings.max_overlap_length) for P in presentations
        ]
        return Report.merge('local confluence', reports)

    # ========================================================================
    # COMPLEJOS TORCIDOS
    # ========================================================================

    def _complex(self, loader: DatasetLoader, name: str) -> TwistedComplex:
        T = loader.get_twisted_complex(name)
        T.stack.max_degree = self.bounds.max_degree
        T.stack.max_rounds = self.bounds.max_rounds
        return T

    def check_mc(self, loader: DatasetLoader, names: list[str]) -> Report:
        doc = loader.document
        reports = [
            mc_check(self._complex(loader, n))
            for n in self._names(names, doc.checks.mc, list(doc.complexes))
        ]
        return Report.merge('Maurer-Cartan equations', reports)

    # ========================================================================
    # A-INFINITO
    # ========================================================================

    def _extension(self, loader: DatasetLoader, name: str) -> ExtensionBundle:
        bundle = loader.get_extension(name)
        X = bundle.evaluator.stack
        if X is not None:
            X.max_degree = self.bounds.max_degree
            X.max_rounds = self.bounds.max_rounds
        return bundle

    def check_ainfty(self, loader: DatasetLoader, names: list[str]) -> Report:
        doc = loader.document
        reports = []
        for name in self._names(names, doc.checks.ainfty, list(doc.systems)):
            if name in doc.systems:
                reports.append(ainfty_check(loader.get_structure_constants(name)))
            else:
                reports.append(ainfty_check(self._extension(loader, name).evaluator))
        return Report.merge('A-infinity equations', reports)

    def check_gluing(self, loader: DatasetLoader, names: list[str]) -> Report:
        doc = loader.document
        reports = []
        for name in self._names(names, doc.checks.gluing, []):
            bundle = self._extension(loader, name)
            reports.append(gluing_check(bundle.evaluator, bundle.alpha, bundle.witnesses))
        return Report.merge('gluing equations', reports)

    def functor(self, loader: DatasetLoader, names: Sequence[str]) -> Report:
        """mc_check sobre F(L) para cada objetivo declarado por la extensión"""
        doc = loader.document
        reports = []
        for name in self._names(list(names), doc.checks.functor, []):
            bundle = self._extension(loader, name)
            for target in bundle.functor:
                T = mirror_functor(bundle.evaluator, bundle.alpha, target)
                if isinstance(T, TwistedComplex):
                    reports.append(mc_check(T))
        return Report.merge('mirror functor', reports)

    def _obstruction_checks(self, loader: DatasetLoader, checks: list[ObstructionCheck]) -> Report:
        report = Report(title='obstruction ideals')
        for item in checks:
            ev = self._extension(loader, item.extension).evaluator
            chart = ev.chart_of(item.object)
            if chart is None:
                raise UnknownCommand(f'Object {item.object} has no chart in {item.extension}')
            P: AlgebraPresentation = ev.presentation(chart, frozenset({chart}))
            got = obstruction_ideal(ev, item.object)
            for generator in sorted(set(got) | set(item.expected)):
                text = item.expected.get(generator)
                expected = loader.builder.element(text, P.quiver) if text else Element.zero()
                difference = got.get(generator, Element.zero()) - expected
                subject = f'{item.extension}/{item.object} @ {generator}'
                record_zero(
                    report,
                    'obstruction',
                    subject,
                    P,
                    difference,
                    self.bounds.max_degree,
                    self.bounds.max_rounds,
                )
        return report

    # ========================================================================
    # REPORTE COMPLETO
    # ========================================================================

    def full_report(self, loader: DatasetLoader) -> Report:
        """Ejecuta todo lo declarado en la sección `checks` del dataset"""
        checks = loader.document.checks
        reports = [
            self._normal_form_checks(loader, checks.normal_forms),
            self._membership_checks(loader, checks.membership),
        ]
        sections = [
            ('confluence', checks.confluence, self.check_confluence),
            ('representations', checks.representations, self.check_representations),
            ('cocycle', checks.cocycle, self.check_cocycle),
            ('tetra', checks.tetra, self.check_tetra),
            ('charts', checks.charts, self.check_charts),
            ('mc', checks.mc, self.check_mc),
            ('ainfty', checks.ainfty, self.check_ainfty),
            ('gluing', checks.gluing, self.check_gluing),
            ('functor', checks.functor, self.functor),
        ]
        for section, names, handler in sections:
            if names:
                logger.debug(f'report section {section}: {names}')
                reports.append(handler(loader, names))
        reports.append(self._obstruction_checks(loader, checks.obstruction))
        return Report.merge(f'{loader.document.name} report', reports)


# Singleton
_verification_service: VerificationService | None = None


def get_verification_service() -> VerificationService:
    """Obtener instancia única del servicio"""
    global _verification_service
    if _verification_service is None:
        _verification_service = VerificationService()
    return _verification_service


def init_verification_service(bounds: Bounds) -> VerificationService:
    global _verification_service
    _verification_service = VerificationService(bounds)
    return _verification_service


def reset_verification_service() -> None:
    global _verification_service
    _verification_service = None
