"""
Assembly of the full SO(9) x SU(2) computation.

    chi       = chi_theta1 * chi_theta_pm
    chi_n     = chi_theta1 [Alt_{8-n} - Alt_{7-n}]              n = 0..7
    chi~_n    = (-1)^n chi~_theta1 [Alt_{8-n} + Alt_{7-n}]      n = 0..7
    chi_8     = chi_theta1,   chi~_8 = chi~_theta1
    B_n, F_n  = (chi_n +- chi~_n) / 2

Each B_n and F_n is decomposed into SO(9) irreducibles; the results form the
multiplicity table.
"""
import asyncio
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from App.helpers.laurent import LaurentPoly, ZERO, evaluate_at_identity, exact_integer_divide
from App.repchar.frobenius import alt_spinor_table
from App.repchar.output import VerificationRecord
from App.repchar.reference import reference_values
from App.repchar.su2 import MAX_SPIN, Spin, cosine_pair, su2_character
from App.repchar.weyl_b4 import DynkinLabel, IrrepSum, character, decompose, dimension

logger = logging.getLogger(__name__)

SPINS = tuple(range(MAX_SPIN + 1))
STATE_SPACE_DIMENSION = 2 ** 24

SINGLET = DynkinLabel(0, 0, 0, 0)
VECTOR = DynkinLabel(1, 0, 0, 0)
SPINOR = DynkinLabel(0, 0, 0, 1)
SYMMETRIC_TRACELESS = DynkinLabel(2, 0, 0, 0)
THREE_FORM = DynkinLabel(0, 0, 1, 0)
VECTOR_SPINOR = DynkinLabel(1, 0, 0, 1)


# ===== THETA CHARACTERS =====

def chi_theta1(tilde: bool = False) -> LaurentPoly:
    """[2000] + [0010] +- [1001]; the minus sign is the (-1)^F trace"""
    bosonic = character(SYMMETRIC_TRACELESS) + character(THREE_FORM)
    if tilde:
        return bosonic - character(VECTOR_SPINOR)
    return bosonic + character(VECTOR_SPINOR)


def chi_theta_pm(tilde: bool = False) -> LaurentPoly:
    """Occupation-sector form: sum_{n<8} (u^{8-n} + u^{n-8}) (+-1)^n Alt_n + Alt_8"""
    alts = alt_spinor_table()
    total = ZERO
    for n in range(MAX_SPIN):
        sign = (-1) ** n if tilde else 1
        total = total + cosine_pair(MAX_SPIN - n) * alts[n] * sign
    return total + alts[MAX_SPIN]


# ===== SECTORS =====

@dataclass(frozen=True)
class SectorCharacters:
    chi: Tuple[LaurentPoly, ...]
    chi_tilde: Tuple[LaurentPoly, ...]
    boson: Tuple[LaurentPoly, ...]
    fermion: Tuple[LaurentPoly, ...]

    def boson_count(self, spin: Spin) -> int:
        return evaluate_at_identity(self.boson[spin])

    def fermion_count(self, spin: Spin) -> int:
        return evaluate_at_identity(self.fermion[spin])

    def assembled(self, tilde: bool = False) -> LaurentPoly:
        """sum_n su2_character(n) * chi_n, the full five-variable character"""
        parts = self.chi_tilde if tilde else self.chi
        total = ZERO
        for n in SPINS:
            total = total + su2_character(n) * parts[n]
        return total


def build_sector_characters(alts: Sequence[LaurentPoly]) -> SectorCharacters:
    theta1, theta1_tilde = chi_theta1(), chi_theta1(tilde=True)
    chi, chi_tilde = [], []
    for n in range(MAX_SPIN):
        chi.append(theta1 * (alts[MAX_SPIN - n] - alts[MAX_SPIN - 1 - n]))
        chi_tilde.append(theta1_tilde * (alts[MAX_SPIN - n] + alts[MAX_SPIN - 1 - n]) * (-1) ** n)
    chi.append(theta1)
    chi_tilde.append(theta1_tilde)

    boson = tuple(exact_integer_divide(a + b, 2) for a, b in zip(chi, chi_tilde))
    fermion = tuple(exact_integer_divide(a - b, 2) for a, b in zip(chi, chi_tilde))
    return SectorCharacters(tuple(chi), tuple(chi_tilde), boson, fermion)


@lru_cache(maxsize=None)
def sector_characters() -> SectorCharacters:
    start = time.time()
    sectors = build_sector_characters(alt_spinor_table())
    logger.info(f"Built {2 * len(SPINS)} sector characters in {time.time() - start:.1f}s")
    return sectors


# ===== TABLE =====

@dataclass(frozen=True)
class TableRow:
    label: DynkinLabel
    dimension: int
    multiplicities: Tuple[int, ...]

    @property
    def statistics(self) -> str:
        return self.label.statistics

    @property
    def states(self) -> int:
        return self.dimension * sum(m * (2 * n + 1) for n, m in enumerate(self.multiplicities))

    def spins(self) -> Dict[Spin, int]:
        return {n: m for n, m in enumerate(self.multiplicities) if m}


@dataclass(frozen=True)
class MultiplicityTable:
    """Rows ordered by (dimension, Dynkin label)"""
    rows: Tuple[TableRow, ...]

    @classmethod
    def from_mapping(cls, entries: Mapping[DynkinLabel, Sequence[int]]) -> 'MultiplicityTable':
        rows = [TableRow(label, dimension(label), tuple(m)) for label, m in entries.items()]
        rows.sort(key=lambda row: (row.dimension, row.label))
        return cls(tuple(rows))

    @classmethod
    def from_decompositions(cls, decompositions: Sequence[Tuple[Spin, IrrepSum]]) -> 'MultiplicityTable':
        entries: Dict[DynkinLabel, List[int]] = {}
        for spin, irreps in decompositions:
            for label, m in irreps.multiplicities.items():
                entries.setdefault(label, [0] * len(SPINS))[spin] += m
        return cls.from_mapping(entries)

    def __len__(self) -> int:
        return len(self.rows)

    def row(self, label: DynkinLabel) -> Optional[TableRow]:
        for row in self.rows:
            if row.label == label:
                return row
        return None

    def multiplicity(self, label: DynkinLabel, spin: Spin) -> int:
        row = self.row(label)
        return row.multiplicities[spin] if row else 0

    def column(self, spin: Spin) -> List[Tuple[TableRow, int]]:
        return [(row, row.multiplicities[spin]) for row in self.rows if row.multiplicities[spin]]

    def grand_total(self) -> int:
        return sum(row.states for row in self.rows)

    def as_mapping(self) -> Dict[DynkinLabel, Tuple[int, ...]]:
        return {row.label: row.multiplicities for row in self.rows}


# ===== SECTOR REPORT =====

@dataclass(frozen=True)
class SectorCount:
    spin: Spin
    bosons: int
    fermions: int

    @property
    def states(self) -> int:
        return (self.bosons + self.fermions) * (2 * self.spin + 1)

    @property
    def balanced(self) -> bool:
        return self.bosons == self.fermions


@dataclass(frozen=True)
class SectorReport:
    counts: Tuple[SectorCount, ...]

    @property
    def grand_total(self) -> int:
        return sum(count.states for count in self.counts)

    @property
    def balanced(self) -> bool:
        return all(count.balanced for count in self.counts)

    def __getitem__(self, spin: Spin) -> SectorCount:
        return self.counts[spin]


def sector_report(sectors: Optional[SectorCharacters] = None) -> SectorReport:
    sectors = sectors or sector_characters()
    return SectorReport(tuple(SectorCount(n, sectors.boson_count(n), sectors.fermion_count(n)) for n in SPINS))


# ===== PIPELINE =====

@dataclass(frozen=True)
class PipelineResult:
    sectors: SectorCharacters
    boson: Tuple[IrrepSum, ...]
    fermion: Tuple[IrrepSum, ...]
    table: MultiplicityTable


async def decompose_sectors(polys: Sequence[LaurentPoly], parallel: int = 1) -> List[IrrepSum]:
    """Decompose every polynomial; order of results follows the input"""
    if parallel <= 1:
        results = []
        for index, poly in enumerate(polys):
            results.append(decompose(poly))
            logger.debug(f"Decomposed sector {index + 1}/{len(polys)}")
        return results

    loop = asyncio.get_running_loop()
    with ProcessPoolExecutor(max_workers=parallel) as pool:
        tasks = [loop.run_in_executor(pool, decompose, poly) for poly in polys]
        return list(await asyncio.gather(*tasks))


async def run_pipeline(parallel: int = 1) -> PipelineResult:
    logger.info(f"Starting pipeline with {parallel} worker(s)")
    start = time.time()
    sectors = sector_characters()

    results = await decompose_sectors(list(sectors.boson) + list(sectors.fermion), parallel)
    boson = tuple(results[:len(SPINS)])
    fermion = tuple(results[len(SPINS):])

    table = MultiplicityTable.from_decompositions(
        [(n, boson[n]) for n in SPINS] + [(n, fermion[n]) for n in SPINS]
    )
    logger.info(f"Pipeline finished: {len(table)} rows in {time.time() - start:.1f}s")
    return PipelineResult(sectors, boson, fermion, table)


def compute_pipeline(parallel: int = 1) -> PipelineResult:
    return asyncio.run(run_pipeline(parallel))


def full_table(parallel: int = 1) -> MultiplicityTable:
    return compute_pipeline(parallel).table


# ===== CLAIMS =====

def verify_claims(result: PipelineResult) -> VerificationRecord:
    record = VerificationRecord()
    table = result.table

    singlet_spin0 = table.multiplicity(SINGLET, 0)
    record.add('singlet_uniqueness', singlet_spin0 == 1, f"[0,0,0,0] at spin 0: {singlet_spin0}")

    for name, label, key in (('singlet_row', SINGLET, 'singlet_spins'), ('vector_row', VECTOR, 'vector_spins')):
        expected = reference_values[key]
        row = table.row(label)
        spins = row.spins() if row else {}
        record.add(name, spins == expected, f"{label} spins {spins}, expected {expected}")

    spinor_spin0 = table.multiplicity(SPINOR, 0)
    record.add('no_invariant_spinor', spinor_spin0 == 0, f"[0,0,0,1] at spin 0: {spinor_spin0}")

    report = sector_report(result.sectors)
    balance = ', '.join(f"{c.spin}: {c.bosons}={c.fermions}" if c.balanced else f"{c.spin}: {c.bosons}!={c.fermions}"
                        for c in report.counts)
    record.add('boson_fermion_balance', report.balanced, balance)

    impure = []
    for n in SPINS:
        impure += [f"B{n} {label}" for label in result.boson[n].multiplicities if label.is_spinor]
        impure += [f"F{n} {label}" for label in result.fermion[n].multiplicities if not label.is_spinor]
    record.add('parity_purity', not impure, f"impure: {impure}" if impure else 'B even q4, F odd q4')
    return record


# ===== CONTENT BY-PRODUCTS =====

def alt_spinor_content(n: int) -> IrrepSum:
    """SO(9) content of the n-particle theta^+ sector"""
    if not 0 <= n <= 16:
        raise ValueError(f"n must be in 0..16, got {n}")
    return decompose(alt_spinor_table()[n])


def theta1_content() -> IrrepSum:
    return decompose(chi_theta1())
