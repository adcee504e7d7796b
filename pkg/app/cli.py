"""
cli.py - Punto de entrada `qstack`

Usage:
    qstack nf nc_c3.qs "z3 x3"
    qstack check cocycle nc_kp2_stack.qs
    qstack check mc nc_kp2_bundle.qs --format machine
    qstack functor nc_kp2_stack.qs kp2_3
    qstack report free_proj.qs --max-degree 8

Códigos de salida: 0 todo PASS, 1 algún FAIL/UNDECIDED, 2 error de entrada.
"""

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path

from app.loader import DatasetLoader
from app.reports import Verdict, render
from app.services.verification_service import (
    CHECK_KINDS,
    EXIT_INPUT_ERROR,
    Bounds,
    init_verification_service,
)
from app.utils.exceptions import QStackError
from app.utils.logger import get_logger, set_level
from config.settings import settings

logger = get_logger(__name__)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--max-degree', type=int, default=settings.max_degree)
    common.add_argument('--max-rounds', type=int, default=settings.max_rounds)
    common.add_argument(
        '--format', choices=('text', 'machine'), default=settings.report_format, dest='fmt'
    )

    parser = argparse.ArgumentParser(
        prog='qstack', description='Symbolic verification of quiver algebroid stacks'
    )
    parser.add_argument('--version', action='version', version=settings.app_version)
    commands = parser.add_subparsers(dest='command', required=True)

    nf = commands.add_parser('nf', parents=[common], help='normal form of an element')
    nf.add_argument('dataset')
    nf.add_argument('element')
    nf.add_argument('--presentation', default=None)

    check = commands.add_parser('check', parents=[common], help='run one family of checks')
    check.add_argument('kind', choices=CHECK_KINDS)
    check.add_argument('dataset')
    check.add_argument('names', nargs='*', help='stacks, complexes or extensions to check')

    functor = commands.add_parser(
        'functor', parents=[common], help='Maurer-Cartan check of mirror functor images'
    )
    functor.add_argument('dataset')
    functor.add_argument('extensions', nargs='*')

    report = commands.add_parser('report', parents=[common], help='run every declared check')
    report.add_argument('dataset')
    return parser


def resolve_dataset(name: str) -> Path:
    """Ruta tal cual o relativa a settings.datasets_dir"""
    path = Path(name)
    if path.exists():
        return path
    return settings.datasets_dir / name


def _arguments(args: argparse.Namespace) -> list[str]:
    if args.command == 'nf':
        return [args.element] + ([args.presentation] if args.presentation else [])
    if args.command == 'check':
        return [args.kind, *args.names]
    if args.command == 'functor':
        return list(args.extensions)
    return []


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_INPUT_ERROR
    if args.fmt == 'machine' or args.command == 'nf':
        set_level('WARNING')

    service = init_verification_service(Bounds(args.max_degree, args.max_rounds))
    loader = DatasetLoader(resolve_dataset(args.dataset))
    try:
        loader.load()
        report, code = service.run_check(args.command, loader, _arguments(args))
    except (QStackError, FileNotFoundError) as e:
        print(f'error: {e}', file=sys.stderr)
        return EXIT_INPUT_ERROR

    if args.command == 'nf' and args.fmt == 'text' and report.verdict == Verdict.PASS:
        print(report.items[0].detail)
    else:
        print(render(report, args.fmt))
    return code


if __name__ == '__main__':
    sys.exit(main())
