"""
lattice.py - Retículo de recubrimiento

Para cada tupla de cartas con intersección no vacía, el conjunto de
flechas de la carta líder que se invierten. Por defecto
S_{c,I} = ∪_{k ∈ I∖{c}} S_{c,{c,k}}; se admiten sobrescrituras explícitas.
"""

from collections.abc import Iterable, Mapping
from itertools import combinations, product

from app.reports import Report
from app.utils.exceptions import OverlapMissing


class CoverLattice:
    """
    Usage:
        lattice = CoverLattice(['0', '1'], {('0', '1'): ['a0'], ('1', '0'): []})
        lattice.set_for('0', {'0', '1'})  # ('a0',)
    """

    def __init__(
        self,
        charts: Iterable[str],
        pair_sets: Mapping[tuple[str, str], Iterable[str]],
        empty: Iterable[Iterable[str]] = (),
        overrides: Mapping[tuple[str, frozenset[str]], Iterable[str]] | None = None,
    ):
        self.charts: tuple[str, ...] = tuple(charts)
        self.pair_sets = {pair: tuple(arrows) for pair, arrows in pair_sets.items()}
        self.empty = [frozenset(s) for s in empty]
        self.overrides = {key: tuple(v) for key, v in (overrides or {}).items()}
        for c, k in self.pair_sets:
            if (k, c) not in self.pair_sets:
                raise OverlapMissing(f'Overlap ({c}, {k}) declared only on one side')

    def overlaps(self, indices: Iterable[str]) -> bool:
        idx = frozenset(indices)
        if not idx or not idx <= set(self.charts):
            return False
        if any((c, k) not in self.pair_sets for c, k in combinations(sorted(idx), 2)):
            return False
        return not any(e <= idx for e in self.empty)

    def require(self, indices: Iterable[str]) -> frozenset[str]:
        idx = frozenset(indices)
        if not self.overlaps(idx):
            raise OverlapMissing(f'Charts {sorted(idx)} have no declared overlap')
        return idx

    def set_for(self, chart: str, indices: Iterable[str]) -> tuple[str, ...]:
        """S_{chart, indices}: flechas de `chart` invertidas en la intersección"""
        idx = self.require(set(indices) | {chart})
        override = self.overrides.get((chart, idx))
        if override is not None:
            return override
        out: dict[str, None] = {}
        for k in sorted(idx - {chart}):
            out.update(dict.fromkeys(self.pair_sets[(chart, k)]))
        return tuple(out)

    def inverted(self, chart: str) -> tuple[str, ...]:
        """Todas las flechas de `chart` invertidas en alguna intersección"""
        out: dict[str, None] = {}
        for (c, _), arrows in sorted(self.pair_sets.items()):
            if c == chart:
                out.update(dict.fromkeys(arrows))
        for (c, _), arrows in self.overrides.items():
            if c == chart:
                out.update(dict.fromkeys(arrows))
        return tuple(out)

    def tuples(self, length: int) -> list[tuple[str, ...]]:
        """Tuplas ordenadas (con repeticiones) con intersección no vacía"""
        return [t for t in product(self.charts, repeat=length) if self.overlaps(t)]

    def check_monotone(self) -> Report:
        """S_J ⊆ S_I para J ⊆ I, sobre cada carta"""
        report = Report(title='cover lattice monotonicity')
        index_sets = [
            frozenset(s)
            for n in range(1, len(self.charts) + 1)
            for s in combinations(self.charts, n)
            if self.overlaps(s)
        ]
        for big in index_sets:
            for small in index_sets:
                if not small < big:
                    continue
                for chart in small:
                    missing = set(self.set_for(chart, small)) - set(self.set_for(chart, big))
                    subject = f'{chart}: {sorted(small)} ⊂ {sorted(big)}'
                    if missing:
                        report.fail('monotone', subject, residual=str(sorted(missing)))
                    else:
                        report.passed('monotone', subject)
        return report


class RestrictedLattice(CoverLattice):
    """Retículo sobre `keep` donde S'_{c,I} = S_{c, I ∪ {hub}}"""

    def __init__(self, base: CoverLattice, keep: Iterable[str], hub: str):
        self.base = base
        self.hub = hub
        kept = tuple(keep)
        pairs = {
            (c, k): base.set_for(c, {c, k, hub})
            for c in kept
            for k in kept
            if c != k and base.overlaps({c, k, hub})
        }
        super().__init__(kept, pairs)

    def overlaps(self, indices: Iterable[str]) -> bool:
        idx = frozenset(indices)
        return bool(idx) and idx <= set(self.charts) and self.base.overlaps(idx | {self.hub})

    def set_for(self, chart: str, indices: Iterable[str]) -> tuple[str, ...]:
        idx = self.require(set(indices) | {chart})
        return self.base.set_for(chart, idx | {self.hub})

    def inverted(self, chart: str) -> tuple[str, ...]:
        return self.base.inverted(chart)
