"""
renderer.py - Render de reportes (texto y máquina)

El formato máquina es JSON (model_dump_json) y se parsea de vuelta a
un Report igual.
"""

from .models import Report, Verdict

_MARKS = {Verdict.PASS: '✅', Verdict.FAIL: '❌', Verdict.UNDECIDED: '⚠️'}


def summary_line(report: Report) -> str:
    if report.verdict == Verdict.PASS:
        return f'ALL CHECKS PASSED ({report.checked} items)'
    return (
        f'{len(report.failures)} FAILED, {len(report.undecided_items)} UNDECIDED '
        f'({report.checked} items)'
    )


def render_text(report: Report) -> str:
    head = f'{_MARKS[report.verdict]} {report.title}: {report.verdict.value}'
    lines = [f'{head} ({report.checked} checked)']
    for item in report.items:
        line = f'  [{item.verdict.value}] {item.check} {item.subject}'
        if item.residual is not None:
            line += f'  residual: {item.residual}'
        if item.detail:
            line += f'  ({item.detail})'
        lines.append(line)
    lines.append(summary_line(report))
    return '\n'.join(lines)


def render_machine(report: Report) -> str:
    return report.model_dump_json(indent=2)


def parse_machine(text: str) -> Report:
    return Report.model_validate_json(text)


def render(report: Report, fmt: str = 'text') -> str:
    """Render según `fmt` ('text' | 'machine')"""
    if fmt == 'machine':
        return render_machine(report)
    return render_text(report)
