import logging
import os
from dataclasses import dataclass
from typing import Optional

from dotenv import find_dotenv, load_dotenv
from rich.console import Console
from rich.logging import RichHandler

DEFAULT_CONCURRENCY = 4
DEFAULT_LOG_LEVEL = "WARNING"

logger = logging.getLogger(__name__)


@dataclass
class Settings:
    concurrency: int = DEFAULT_CONCURRENCY
    log_level: str = DEFAULT_LOG_LEVEL


def load_settings(env_file: Optional[str] = None) -> Settings:
    """Settings from the environment, after loading a `.env` file if one is found."""
    path = env_file or find_dotenv(usecwd=True)
    if path:
        load_dotenv(path)
    concurrency = DEFAULT_CONCURRENCY
    raw = os.getenv("ALTLINK_CONCURRENCY")
    if raw:
        try:
            concurrency = max(1, int(raw))
        except ValueError:
            logger.warning("ignoring ALTLINK_CONCURRENCY=%r, expected an integer", raw)
    level = os.getenv("ALTLINK_LOG_LEVEL", DEFAULT_LOG_LEVEL).upper()
    if not isinstance(logging.getLevelName(level), int):
        logger.warning("ignoring ALTLINK_LOG_LEVEL=%r", level)
        level = DEFAULT_LOG_LEVEL
    return Settings(concurrency=concurrency, log_level=level)


def setup_logging(level: str = DEFAULT_LOG_LEVEL):
    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False, rich_tracebacks=True)],
        force=True,
    )
