import shutil

import pytest

from App.repchar.golden import COLUMNS, TABLE_FILE, GoldenTableStore, compare_tables
from App.repchar.pipeline import SPINS, STATE_SPACE_DIMENSION, MultiplicityTable
from App.repchar.reference import reference_values
from App.repchar.settings import DEFAULT_GOLDEN_DIR, load_settings
from App.repchar.weyl_b4 import DynkinLabel


@pytest.fixture
def store():
    return GoldenTableStore(DEFAULT_GOLDEN_DIR)


def test_golden_file_is_self_consistent(store):
    table = store.load_table()
    assert len(table) == reference_values['table_rows']
    assert table.grand_total() == STATE_SPACE_DIMENSION
    assert store.transcription_problems() == []


def test_golden_rows_are_unique_and_sorted(store):
    table = store.load_table()
    keys = [(row.dimension, row.label) for row in table.rows]
    assert keys == sorted(keys)
    assert len({row.label for row in table.rows}) == len(table)


def test_sector_counts_rederived_from_golden(store):
    table = store.load_table()
    for spin in SPINS:
        bosons = sum(row.dimension * m for row, m in table.column(spin) if row.statistics == 'boson')
        fermions = sum(row.dimension * m for row, m in table.column(spin) if row.statistics == 'fermion')
        assert bosons == fermions == reference_values['sector_counts'][spin]


def test_golden_dir_override(tmp_path, monkeypatch):
    shutil.copy(DEFAULT_GOLDEN_DIR / TABLE_FILE, tmp_path / TABLE_FILE)
    monkeypatch.setenv('REPCHAR_GOLDEN_DIR', str(tmp_path))
    settings = load_settings()
    assert settings.golden_dir == tmp_path
    assert len(GoldenTableStore(settings.golden_dir).load_table()) == reference_values['table_rows']


def test_missing_file_and_bad_header(tmp_path):
    with pytest.raises(FileNotFoundError):
        GoldenTableStore(tmp_path).load_table()
    (tmp_path / TABLE_FILE).write_text('q1,q2,q3\n0,0,0\n')
    with pytest.raises(ValueError):
        GoldenTableStore(tmp_path).load_table()


def test_duplicate_and_mistagged_rows(tmp_path):
    header = ','.join(COLUMNS)
    singlet = '0,0,0,0,1,boson,1,0,0,0,0,0,1,0,0'
    (tmp_path / TABLE_FILE).write_text('\n'.join([header, singlet, singlet]) + '\n')
    with pytest.raises(ValueError):
        GoldenTableStore(tmp_path).load_table()

    (tmp_path / TABLE_FILE).write_text('\n'.join([header, '0,0,0,1,16,boson,0,1,1,0,1,1,1,1,0']) + '\n')
    problems = GoldenTableStore(tmp_path).transcription_problems()
    assert len(problems) == 1
    assert '[0,0,0,1]' in problems[0]


def test_compare_tables_reports_each_difference():
    a = MultiplicityTable.from_mapping({DynkinLabel(0, 0, 0, 0): (1, 0, 0, 0, 0, 0, 1, 0, 0)})
    b = MultiplicityTable.from_mapping({
        DynkinLabel(0, 0, 0, 0): (1, 0, 0, 0, 0, 0, 0, 0, 0),
        DynkinLabel(1, 0, 0, 0): (0, 1, 0, 1, 0, 1, 0, 1, 0),
    })
    assert compare_tables(a, a) == []
    mismatches = compare_tables(a, b)
    assert len(mismatches) == 2
    assert mismatches[1].startswith('[1,0,0,0]: computed None')
