import argparse
import logging
from math import comb
from typing import Optional

from App.helpers.laurent import LaurentPoly, format_poly, order_key
from App.repchar.checks import run_verification
from App.repchar.frobenius import alt_spinor_table
from App.repchar.output import (
    ContentEntry,
    OutputDocument,
    PolynomialDocument,
    SectorCountModel,
    SectorDocument,
    SpinColumnChecks,
    SpinColumnDocument,
    SpinColumnRow,
    TableChecks,
    TableDocument,
    TableRowModel,
    TermModel,
)
from App.repchar.pipeline import MultiplicityTable, SectorReport, alt_spinor_content, run_pipeline, sector_report
from App.repchar.settings import RepcharSettings
from App.repchar.weyl_b4 import DynkinLabel, IrrepSum, character, dimension

logger = logging.getLogger(__name__)


# ===== DOCUMENTS =====

def table_document(table: MultiplicityTable) -> TableDocument:
    rows = [
        TableRowModel(
            dynkin=list(row.label.components),
            dimension=row.dimension,
            statistics=row.statistics,
            multiplicities=list(row.multiplicities),
        )
        for row in table.rows
    ]
    return TableDocument(rows=rows, checks=TableChecks(grand_total=table.grand_total(), rows=len(rows)))


def spin_column_document(table: MultiplicityTable, spin: int) -> SpinColumnDocument:
    rows = [
        SpinColumnRow(dynkin=list(row.label.components), dimension=row.dimension,
                      statistics=row.statistics, multiplicity=m)
        for row, m in table.column(spin)
    ]
    states = sum(r.dimension * r.multiplicity for r in rows) * (2 * spin + 1)
    return SpinColumnDocument(spin=spin, rows=rows, checks=SpinColumnChecks(states=states, rows=len(rows)))


def sector_document(report: SectorReport) -> SectorDocument:
    sectors = [SectorCountModel(spin=c.spin, bosons=c.bosons, fermions=c.fermions, states=c.states)
               for c in report.counts]
    return SectorDocument(sectors=sectors, grand_total=report.grand_total, balanced=report.balanced)


def polynomial_document(name: str, poly: LaurentPoly, dim: int,
                        content: Optional[IrrepSum] = None) -> PolynomialDocument:
    terms = [TermModel(coefficient=poly.coefficient(m), exponents=list(m))
             for m in sorted(poly.monomials(), key=order_key, reverse=True)]
    entries = []
    if content is not None:
        entries = [ContentEntry(dynkin=list(label.components), dimension=dimension(label),
                                multiplicity=content.get(label))
                   for label in content.labels()]
    return PolynomialDocument(name=name, dimension=dim, text=format_poly(poly), terms=terms, content=entries)


def emit(payload, fmt: Optional[str]) -> None:
    print(OutputDocument(format=fmt or 'json', payload=payload).render())


# ===== COMMANDS =====

async def cmd_dim(args: argparse.Namespace, settings: RepcharSettings) -> int:
    print(dimension(DynkinLabel.of(args.label)))
    return 0


async def cmd_char(args: argparse.Namespace, settings: RepcharSettings) -> int:
    label = DynkinLabel.of(args.label)
    poly = character(label)
    if args.format is None:
        print(format_poly(poly))
    else:
        emit(polynomial_document(str(label), poly, dimension(label)), args.format)
    return 0


async def cmd_alt(args: argparse.Namespace, settings: RepcharSettings) -> int:
    n = args.n
    if n > 16:
        raise ValueError(f"the spinor has 16 states; Alt_{n} is empty")
    poly = alt_spinor_table()[n]
    if args.format is None:
        print(format_poly(poly))
    else:
        emit(polynomial_document(f"Alt_{n}(spinor)", poly, comb(16, n), alt_spinor_content(n)), args.format)
    return 0


async def cmd_table(args: argparse.Namespace, settings: RepcharSettings) -> int:
    result = await run_pipeline(args.parallel or settings.parallel)
    if args.spin is None:
        emit(table_document(result.table), args.format)
    else:
        emit(spin_column_document(result.table, args.spin), args.format)
    return 0


async def cmd_sectors(args: argparse.Namespace, settings: RepcharSettings) -> int:
    emit(sector_document(sector_report()), args.format)
    return 0


async def cmd_verify(args: argparse.Namespace, settings: RepcharSettings) -> int:
    result = await run_pipeline(args.parallel or settings.parallel)
    record = run_verification(result, settings)
    emit(record, args.format)
    if not record.passed:
        logger.error(f"{sum(1 for c in record.checks if not c.passed)} check(s) failed")
        return 1
    return 0
