import csv
import logging
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from App.repchar.pipeline import SPINS, MultiplicityTable
from App.repchar.weyl_b4 import DynkinLabel

logger = logging.getLogger(__name__)

GOLDEN_VERSION = 'v1'
TABLE_FILE = f'multiplicities_{GOLDEN_VERSION}.csv'
COLUMNS = ['q1', 'q2', 'q3', 'q4', 'dimension', 'statistics'] + [f"m{n}" for n in SPINS]


class GoldenTableStore:
    """Transcribed multiplicity table, stored as a versioned CSV"""

    def __init__(self, directory: Path):
        self.directory = Path(directory)
        self.path = self.directory / TABLE_FILE

    def read_records(self) -> List[Dict[str, str]]:
        """Raw CSV rows"""
        if not self.path.exists():
            raise FileNotFoundError(f"golden table not found at {self.path}")
        with open(self.path, newline='') as f:
            reader = csv.DictReader(f)
            if reader.fieldnames != COLUMNS:
                raise ValueError(f"unexpected golden columns {reader.fieldnames}")
            records = list(reader)
        logger.info(f"Loaded {len(records)} golden rows from {self.path}")
        return records

    def load_table(self) -> MultiplicityTable:
        entries = {}
        for record in self.read_records():
            label = DynkinLabel(*(int(record[q]) for q in ('q1', 'q2', 'q3', 'q4')))
            if label in entries:
                raise ValueError(f"duplicate golden row {label}")
            entries[label] = tuple(int(record[f"m{n}"]) for n in SPINS)
        return MultiplicityTable.from_mapping(entries)

    def transcription_problems(self) -> List[str]:
        """Row-level inconsistencies inside the file itself"""
        problems = []
        for record in self.read_records():
            label = DynkinLabel(*(int(record[q]) for q in ('q1', 'q2', 'q3', 'q4')))
            if record['statistics'] != label.statistics:
                problems.append(f"{label}: tagged {record['statistics']}, q4 parity says {label.statistics}")
            if any(int(record[f"m{n}"]) < 0 for n in SPINS):
                problems.append(f"{label}: negative multiplicity")
        return problems

    def recorded_dimensions(self) -> Dict[DynkinLabel, int]:
        return {
            DynkinLabel(*(int(r[q]) for q in ('q1', 'q2', 'q3', 'q4'))): int(r['dimension'])
            for r in self.read_records()
        }


def compare_tables(computed: MultiplicityTable, golden: MultiplicityTable) -> List[str]:
    """Order-insensitive comparison; returns one message per mismatch"""
    mismatches = []
    ours, theirs = computed.as_mapping(), golden.as_mapping()
    for label in sorted(set(ours) | set(theirs)):
        a: Optional[Tuple[int, ...]] = ours.get(label)
        b: Optional[Tuple[int, ...]] = theirs.get(label)
        if a != b:
            mismatches.append(f"{label}: computed {a}, golden {b}")
    return mismatches
