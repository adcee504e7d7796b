"""
Script de validación de los datasets incluidos
Ejecutar: python scripts/run_acceptance.py [--max-degree N] [--max-rounds N]

Corre `report` sobre cada dataset de config/datasets y resume los
veredictos. El fibrado universal es sólo informativo: se listan sus
residuos pero no decide el código de salida.
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

from app.loader import DatasetLoader  # noqa: E402
from app.reports import Report, Verdict, summary_line  # noqa: E402
from app.services.verification_service import Bounds, VerificationService  # noqa: E402
from config.settings import settings  # noqa: E402

DATASETS = ['free_proj.qs', 'nc_c3.qs', 'nc_kp2_stack.qs', 'nc_kp2_bundle.qs']
REPORT_ONLY = {'nc_kp2_bundle.qs'}


def run_dataset(service: VerificationService, name: str, number: int) -> Report | None:
    print(f"\n🧪 Test {number}: qstack report {name}...")
    started = time.perf_counter()
    try:
        loader = DatasetLoader(settings.datasets_dir / name)
        loader.load()
        report, _ = service.run_check('report', loader)
    except Exception as e:
        print(f"❌ Error: {e}")
        return None

    elapsed = time.perf_counter() - started
    mark = '✅' if report.verdict == Verdict.PASS else '⚠️ ' if report.verdict == Verdict.UNDECIDED else '❌'
    print(f"{mark} {summary_line(report)} en {elapsed:.1f}s")
    for item in report.items:
        if item.verdict != Verdict.PASS:
            print(f"   [{item.verdict.value}] {item.check} {item.subject}: {item.residual}")
    return report


def main():
    parser = argparse.ArgumentParser(description='Run every declared check on the bundled datasets')
    parser.add_argument('--max-degree', type=int, default=settings.max_degree)
    parser.add_argument('--max-rounds', type=int, default=settings.max_rounds)
    args = parser.parse_args()

    print("=" * 70)
    print("🔍 VALIDANDO DATASETS INCLUIDOS".center(70))
    print("=" * 70)

    service = VerificationService(Bounds(args.max_degree, args.max_rounds))
    reports = {
        name: run_dataset(service, name, number) for number, name in enumerate(DATASETS, start=1)
    }
    verdicts = {name: r.verdict if r else Verdict.FAIL for name, r in reports.items()}

    # Resumen
    print("\n" + "=" * 70)
    print("RESUMEN".center(70))
    print("=" * 70)
    for name, verdict in verdicts.items():
        note = ' (sólo informe)' if name in REPORT_ONLY else ''
        print(f"  {name:<22} {verdict.value}{note}")

    for name in sorted(REPORT_ONLY):
        report = reports[name]
        if report is None:
            print(f"\n⚠️  {name}: sólo informe, no se pudo cargar")
            continue
        residuals = sum(1 for item in report.items if item.verdict != Verdict.PASS)
        print(f"\n⚠️  {name}: sólo informe, {report.verdict.value} con {residuals} residuo(s)")

    required = [n for n in DATASETS if n not in REPORT_ONLY]
    if all(verdicts[n] == Verdict.PASS for n in required):
        print(f"✅ Datasets requeridos validados ({len(required)} de {len(DATASETS)})")
        return 0
    print("\n❌ Hay verificaciones sin pasar")
    return 1


if __name__ == "__main__":
    exit(main())
