import pytest

from App.repchar.pipeline import compute_pipeline
from App.repchar.settings import DEFAULT_GOLDEN_DIR, RepcharSettings


@pytest.fixture(scope='session')
def pipeline_result():
    """Full table, computed once per session"""
    return compute_pipeline(parallel=1)


@pytest.fixture
def quiet_settings():
    return RepcharSettings(golden_dir=DEFAULT_GOLDEN_DIR, parallel=1, log_file=None)
