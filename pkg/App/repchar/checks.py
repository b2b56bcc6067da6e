import logging
import time
from typing import Callable, List

from App.helpers.laurent import evaluate_at_identity
from App.repchar.frobenius import alt_spinor, alt_spinor_table
from App.repchar.golden import GoldenTableStore, compare_tables
from App.repchar.oracle import (
    WeightedRep,
    direct_alt_character,
    direct_sector_trace,
    exterior_generating_polynomial,
    fock_trace,
    toy_fock_model,
)
from App.repchar.output import VerificationRecord
from App.repchar.pipeline import (
    SPINS,
    PipelineResult,
    chi_theta1,
    chi_theta_pm,
    sector_report,
    theta1_content,
    verify_claims,
)
from App.repchar.reference import reference_values
from App.repchar.settings import RepcharSettings
from App.repchar.su2 import split_by_spin
from App.repchar.weyl_b4 import DynkinLabel, character, decompose_by_pairing, dimension, symmetric_traceless_dimension

logger = logging.getLogger(__name__)

ORACLE_MAX_N = 4
PAIRING_SPINS = (7, 8)


# ===== COUNTS =====

def check_sector_counts(record: VerificationRecord, result: PipelineResult) -> None:
    report = sector_report(result.sectors)
    expected = reference_values['sector_counts']
    for count in report.counts:
        target = expected[count.spin]
        record.add(
            f"sector_count_spin_{count.spin}",
            count.bosons == target and count.fermions == target,
            f"{count.bosons} = {count.fermions} (expected {target})",
        )


def check_grand_totals(record: VerificationRecord, result: PipelineResult) -> None:
    expected = reference_values['state_space_dimension']
    from_sectors = sector_report(result.sectors).grand_total
    from_table = result.table.grand_total()
    record.add('grand_total_sectors', from_sectors == expected, f"{from_sectors}")
    record.add('grand_total_table', from_table == expected, f"{from_table}")


# ===== TABLES =====

def check_golden(record: VerificationRecord, result: PipelineResult, store: GoldenTableStore) -> None:
    golden = store.load_table()
    problems = store.transcription_problems()
    golden_total = golden.grand_total()
    record.add(
        'golden_transcription',
        not problems and golden_total == reference_values['state_space_dimension'],
        '; '.join(problems) or f"{len(golden)} rows, total {golden_total}",
    )

    wrong_dims = [f"{label}: {d} vs {dimension(label)}" for label, d in store.recorded_dimensions().items()
                  if d != dimension(label)]
    record.add('golden_dimensions', not wrong_dims, '; '.join(wrong_dims) or 'all match the dimension formula')

    mismatches = compare_tables(result.table, golden)
    record.add('golden_table', not mismatches, '; '.join(mismatches) or f"{len(result.table)} rows identical")
    record.add('table_rows', len(result.table) == reference_values['table_rows'], f"{len(result.table)} rows")


def check_dimensions(record: VerificationRecord, result: PipelineResult) -> None:
    wrong = []
    for entry in reference_values['dimensions']:
        label = DynkinLabel.of(entry['dynkin'])
        if dimension(label) != entry['dimension'] or evaluate_at_identity(character(label)) != entry['dimension']:
            wrong.append(f"{label} {entry['name']}")
    for n in range(7):
        if dimension(DynkinLabel(n, 0, 0, 0)) != symmetric_traceless_dimension(n):
            wrong.append(f"[{n},0,0,0] closed form")
    record.add('reference_dimensions', not wrong, '; '.join(wrong) or 'dimension formula and characters agree')

    off = [str(row.label) for row in result.table.rows
           if evaluate_at_identity(character(row.label)) != row.dimension]
    record.add('table_character_dimensions', not off, '; '.join(off) or f"{len(result.table)} characters")


# ===== FROBENIUS AND ORACLE =====

def check_alt_spinor(record: VerificationRecord, settings: RepcharSettings) -> None:
    spinor = WeightedRep.so9_spinor()
    generated = exterior_generating_polynomial(spinor)
    table = alt_spinor_table()

    reflected = [n for n in range(9) if generated[16 - n] != generated[n]]
    record.add('alt_reflection', not reflected, f"failed n={reflected}" if reflected else 'Alt_16-n = Alt_n, n=0..8')

    differing = [n for n in range(17) if generated[n] != table[n]]
    record.add('alt_frobenius_vs_product', not differing,
               f"failed n={differing}" if differing else 'prod (1 + t z^w) matches all 17 entries')

    total = sum(evaluate_at_identity(p) for p in table)
    record.add('alt_total_dimension', total == 2 ** 16, f"{total}")

    subsets = [n for n in range(ORACLE_MAX_N + 1)
               if direct_alt_character(spinor, n, settings.max_subsets) != alt_spinor(n)]
    record.add('oracle_subsets', not subsets,
               f"failed n={subsets}" if subsets else f"subset enumeration matches for n <= {ORACLE_MAX_N}")


def check_fock_traces(record: VerificationRecord) -> None:
    sectors = direct_sector_trace(8, WeightedRep.so9_spinor())
    direct = sum(sectors[1:], sectors[0])
    record.add('oracle_theta_pm', direct == chi_theta_pm(), f"{sum(evaluate_at_identity(s) for s in sectors)} states")

    toy = toy_fock_model()
    plain, signed = fock_trace(toy.basis)
    record.add('oracle_toy_model', (plain, signed) == toy.factorized() and toy.basis.size == 8,
               f"{toy.basis.size} states, sector sizes {toy.basis.sector_sizes()}")


# ===== DECOMPOSITION =====

def check_spin_regrouping(record: VerificationRecord, result: PipelineResult) -> None:
    failed = []
    for tilde in (False, True):
        theta1 = chi_theta1(tilde)
        spins = split_by_spin(chi_theta_pm(tilde))
        sectors = result.sectors.chi_tilde if tilde else result.sectors.chi
        for n in SPINS:
            if theta1 * spins.get(n, 0) != sectors[n]:
                failed.append(f"{'tilde ' if tilde else ''}spin {n}")
    record.add('spin_regrouping', not failed, '; '.join(failed) or 'split_by_spin reproduces all 18 sectors')


def check_pairing(record: VerificationRecord, result: PipelineResult) -> None:
    failed = []
    for n in PAIRING_SPINS:
        for name, polys, peeled in (('B', result.sectors.boson, result.boson),
                                    ('F', result.sectors.fermion, result.fermion)):
            paired = decompose_by_pairing(polys[n], peeled[n].multiplicities)
            if paired.multiplicities != peeled[n].multiplicities:
                failed.append(f"{name}{n}")
    record.add('peeling_vs_pairing', not failed, '; '.join(failed) or f"spins {PAIRING_SPINS}")


def check_theta1(record: VerificationRecord) -> None:
    content = theta1_content()
    expected = {DynkinLabel.of(q): 1 for q in reference_values['theta1_content']}
    states = evaluate_at_identity(chi_theta1())
    record.add('theta1_content', content.multiplicities == expected and states == reference_values['theta1_states'],
               f"{', '.join(str(label) for label in content.labels())} ({states} states)")


# ===== SUITE =====

def run_verification(result: PipelineResult, settings: RepcharSettings) -> VerificationRecord:
    """Run every check and log each one"""
    record = verify_claims(result)
    store = GoldenTableStore(settings.golden_dir)

    steps: List[Callable[[], None]] = [
        lambda: check_sector_counts(record, result),
        lambda: check_grand_totals(record, result),
        lambda: check_golden(record, result, store),
        lambda: check_dimensions(record, result),
        lambda: check_alt_spinor(record, settings),
        lambda: check_fock_traces(record),
        lambda: check_spin_regrouping(record, result),
        lambda: check_pairing(record, result),
        lambda: check_theta1(record),
    ]
    start = time.time()
    for step in steps:
        step()

    for check in record.checks:
        if check.passed:
            logger.info(f"{check.name}: OK - {check.detail}")
        else:
            logger.error(f"{check.name}: DISCREPANCY - {check.detail}")

    failed = sum(1 for check in record.checks if not check.passed)
    logger.info(f"Verification finished in {time.time() - start:.1f}s: {len(record.checks) - failed} passed, {failed} failed")
    return record
