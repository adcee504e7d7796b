"""
models.py - Modelos de reporte de verificación

Responsabilidades:
- Un Report agrupa los items de una verificación (cociclo, MC, gluing...)
- Cada item lleva veredicto PASS / FAIL / UNDECIDED y el residuo renderizado
- Los fallos de verificación viven aquí, nunca como excepciones
"""

from enum import Enum

from pydantic import BaseModel, Field


class Verdict(str, Enum):
    """Veredicto de un item de verificación"""

    PASS = 'PASS'
    FAIL = 'FAIL'
    UNDECIDED = 'UNDECIDED'


class ReportItem(BaseModel):
    """Resultado de verificar una identidad concreta"""

    check: str = Field(..., description='Check family (cocycle, tetrahedron, mc, ...)')
    subject: str = Field(..., description='What was checked (tuple, arrow, rule...)')
    verdict: Verdict = Field(..., description='PASS / FAIL / UNDECIDED')
    residual: str | None = Field(None, description='Rendered normal form of the residual')
    detail: str | None = Field(None, description='Free-form context')


class Report(BaseModel):
    """
    Reporte de una verificación

    `checked` cuenta identidades evaluadas; `items` sólo guarda las que
    no pasaron, más los PASS registrados con `detail`.

    Usage:
        report = Report(title='cocycle (0, 3, 0)')
        report.fail('cocycle', 'a2', residual='b1 a2')
        report.ok  # False
    """

    title: str = Field(..., description='Human readable title')
    checked: int = Field(default=0, description='Number of identities evaluated')
    items: list[ReportItem] = Field(default_factory=list)

    # ========================================================================
    # CONSTRUCCIÓN
    # ========================================================================

    def add(self, item: ReportItem) -> None:
        self.items.append(item)

    def passed(self, check: str, subject: str, detail: str | None = None) -> None:
        self.checked += 1
        if detail is not None:
            self.add(
                ReportItem(check=check, subject=subject, verdict=Verdict.PASS, detail=detail)
            )

    def fail(
        self, check: str, subject: str, residual: str | None = None, detail: str | None = None
    ) -> None:
        self.checked += 1
        self.add(
            ReportItem(
                check=check, subject=subject, verdict=Verdict.FAIL, residual=residual, detail=detail
            )
        )

    def undecided(
        self, check: str, subject: str, residual: str | None = None, detail: str | None = None
    ) -> None:
        self.checked += 1
        self.add(
            ReportItem(
                check=check,
                subject=subject,
                verdict=Verdict.UNDECIDED,
                residual=residual,
                detail=detail,
            )
        )

    def extend(self, other: 'Report') -> None:
        self.checked += other.checked
        self.items.extend(other.items)

    @classmethod
    def merge(cls, title: str, reports: list['Report']) -> 'Report':
        merged = cls(title=title)
        for report in reports:
            merged.extend(report)
        return merged

    # ========================================================================
    # CONSULTAS
    # ========================================================================

    @property
    def failures(self) -> list[ReportItem]:
        return [i for i in self.items if i.verdict == Verdict.FAIL]

    @property
    def undecided_items(self) -> list[ReportItem]:
        return [i for i in self.items if i.verdict == Verdict.UNDECIDED]

    @property
    def ok(self) -> bool:
        return not self.failures and not self.undecided_items

    @property
    def verdict(self) -> Verdict:
        if self.failures:
            return Verdict.FAIL
        if self.undecided_items:
            return Verdict.UNDECIDED
        return Verdict.PASS

    def __len__(self) -> int:
        return len([i for i in self.items if i.verdict != Verdict.PASS])
