"""
modules.py - Módulos libres graduados por carta
"""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from app.utils.exceptions import ChartMismatch, QuiverMismatch


@dataclass(frozen=True)
class Generator:
    label: str
    vertex: str
    degree: int


class GradedFreeModule:
    """
    E_c = ⊕ A_c·e_v[−d] por carta c

    Usage:
        E = GradedFreeModule({'3': [Generator('Q0', 'v', 0), Generator('P1a', 'v', 1)]})
        E.generator('3', 'P1a').degree  # 1
    """

    def __init__(self, charts: Mapping[str, Iterable[Generator]]):
        self.charts: dict[str, tuple[Generator, ...]] = {c: tuple(g) for c, g in charts.items()}
        self._index = {
            (c, g.label): g for c, generators in self.charts.items() for g in generators
        }
        for c, generators in self.charts.items():
            labels = [g.label for g in generators]
            if len(set(labels)) != len(labels):
                raise ChartMismatch(f'Duplicate generator labels on chart {c}: {labels}')

    def generators(self, chart: str) -> tuple[Generator, ...]:
        try:
            return self.charts[chart]
        except KeyError:
            raise ChartMismatch(f'Module has no component on chart {chart}') from None

    def generator(self, chart: str, label: str) -> Generator:
        try:
            return self._index[(chart, label)]
        except KeyError:
            raise ChartMismatch(f'Unknown generator {label} on chart {chart}') from None

    def check_vertices(self, chart: str, vertices: Iterable[str]) -> None:
        known = set(vertices)
        for g in self.generators(chart):
            if g.vertex not in known:
                raise QuiverMismatch(f'Generator {g.label} sits at unknown vertex {g.vertex}')
