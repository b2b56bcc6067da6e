"""Output documents and their json / csv / md renderings."""
import csv
import io
import json
from typing import Any, List, Literal, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

FORMATS = ('json', 'csv', 'md')

Statistics = Literal['boson', 'fermion']


# ===== VERIFICATION =====

class CheckResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    passed: bool
    detail: str = ''


class VerificationRecord(BaseModel):
    checks: List[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def add(self, name: str, passed: bool, detail: str = '') -> CheckResult:
        result = CheckResult(name=name, passed=bool(passed), detail=detail)
        self.checks.append(result)
        return result

    def extend(self, other: 'VerificationRecord') -> None:
        self.checks.extend(other.checks)

    def get(self, name: str) -> Optional[CheckResult]:
        for check in self.checks:
            if check.name == name:
                return check
        return None

    def tabular(self) -> Tuple[List[str], List[List[Any]]]:
        return ['check', 'passed', 'detail'], [[c.name, c.passed, c.detail] for c in self.checks]


# ===== TABLE =====

class TableRowModel(BaseModel):
    dynkin: List[int] = Field(min_length=4, max_length=4)
    dimension: int = Field(ge=1)
    statistics: Statistics
    multiplicities: List[int] = Field(min_length=9, max_length=9)


class TableChecks(BaseModel):
    grand_total: int
    rows: int


class TableDocument(BaseModel):
    rows: List[TableRowModel]
    checks: TableChecks

    def tabular(self) -> Tuple[List[str], List[List[Any]]]:
        header = ['q1', 'q2', 'q3', 'q4', 'dimension', 'statistics'] + [f"m{n}" for n in range(9)]
        rows = [[*r.dynkin, r.dimension, r.statistics, *r.multiplicities] for r in self.rows]
        return header, rows


class SpinColumnRow(BaseModel):
    dynkin: List[int] = Field(min_length=4, max_length=4)
    dimension: int
    statistics: Statistics
    multiplicity: int = Field(ge=1)


class SpinColumnChecks(BaseModel):
    states: int
    rows: int


class SpinColumnDocument(BaseModel):
    spin: int = Field(ge=0, le=8)
    rows: List[SpinColumnRow]
    checks: SpinColumnChecks

    def tabular(self) -> Tuple[List[str], List[List[Any]]]:
        header = ['q1', 'q2', 'q3', 'q4', 'dimension', 'statistics', 'multiplicity']
        rows = [[*r.dynkin, r.dimension, r.statistics, r.multiplicity] for r in self.rows]
        return header, rows


# ===== SECTORS =====

class SectorCountModel(BaseModel):
    spin: int
    bosons: int
    fermions: int
    states: int


class SectorDocument(BaseModel):
    sectors: List[SectorCountModel]
    grand_total: int
    balanced: bool

    def tabular(self) -> Tuple[List[str], List[List[Any]]]:
        header = ['spin', 'bosons', 'fermions', 'states']
        rows = [[s.spin, s.bosons, s.fermions, s.states] for s in self.sectors]
        return header, rows


# ===== POLYNOMIALS =====

class TermModel(BaseModel):
    coefficient: int
    exponents: List[int] = Field(min_length=5, max_length=5)


class ContentEntry(BaseModel):
    dynkin: List[int]
    dimension: int
    multiplicity: int


class PolynomialDocument(BaseModel):
    name: str
    dimension: int
    text: str
    terms: List[TermModel]
    content: List[ContentEntry] = Field(default_factory=list)

    def tabular(self) -> Tuple[List[str], List[List[Any]]]:
        header = ['coefficient', 'z1', 'z2', 'z3', 'z4', 'u']
        return header, [[t.coefficient, *t.exponents] for t in self.terms]


# ===== RENDERING =====

Payload = Union[TableDocument, SpinColumnDocument, SectorDocument, PolynomialDocument, VerificationRecord]


def render_json(payload: BaseModel) -> str:
    return json.dumps(payload.model_dump(mode='json'), sort_keys=True, indent=2)


def render_csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue().rstrip('\n')


def render_md(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    lines = ['| ' + ' | '.join(header) + ' |', '|' + '---|' * len(header)]
    for row in rows:
        lines.append('| ' + ' | '.join(str(cell) for cell in row) + ' |')
    return '\n'.join(lines)


class OutputDocument(BaseModel):
    format: Literal['json', 'csv', 'md'] = 'json'
    payload: Payload

    def render(self) -> str:
        if self.format == 'json':
            return render_json(self.payload)
        header, rows = self.payload.tabular()
        if self.format == 'csv':
            return render_csv(header, rows)
        return render_md(header, rows)
