import logging
import os
from pathlib import Path
from typing import Optional

import psutil
from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator

logger = logging.getLogger(__name__)

PACKAGE_DIR = Path(__file__).parent
DEFAULT_GOLDEN_DIR = PACKAGE_DIR / 'golden'
DEFAULT_LOG_FILE = PACKAGE_DIR / 'repchar.log'


class RepcharSettings(BaseModel):
    """Runtime settings, read from the environment"""

    golden_dir: Path = DEFAULT_GOLDEN_DIR
    parallel: int = Field(default=1, ge=1)
    log_level: str = 'INFO'
    log_file: Optional[Path] = DEFAULT_LOG_FILE
    max_subsets: int = Field(default=2 ** 20, ge=1)

    @field_validator('log_level')
    @classmethod
    def known_level(cls, value: str) -> str:
        value = value.upper()
        if value not in ('CRITICAL', 'ERROR', 'WARNING', 'INFO', 'DEBUG'):
            raise ValueError(f"unknown log level {value}")
        return value


def hardware_parallelism() -> int:
    return psutil.cpu_count() or 1


def load_settings() -> RepcharSettings:
    load_dotenv()

    log_file = os.getenv('REPCHAR_LOG_FILE')
    settings = RepcharSettings(
        golden_dir=os.getenv('REPCHAR_GOLDEN_DIR') or DEFAULT_GOLDEN_DIR,
        parallel=os.getenv('REPCHAR_PARALLEL') or hardware_parallelism(),
        log_level=os.getenv('REPCHAR_LOG_LEVEL', 'INFO'),
        # an empty REPCHAR_LOG_FILE turns the file handler off
        log_file=DEFAULT_LOG_FILE if log_file is None else (log_file or None),
        max_subsets=os.getenv('REPCHAR_MAX_SUBSETS') or 2 ** 20,
    )
    logger.debug(f"Settings loaded: {settings}")
    return settings
