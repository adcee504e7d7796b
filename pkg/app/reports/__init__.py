"""
Reports Module

Usage básico:
    from app.reports import Report, render

    report = Report(title='confluence')
    print(render(report, 'text'))
"""

from .models import Report, ReportItem, Verdict
from .renderer import parse_machine, render, render_machine, render_text, summary_line

__all__ = [
    'Report',
    'ReportItem',
    'Verdict',
    'parse_machine',
    'render',
    'render_machine',
    'render_text',
    'summary_line',
]
