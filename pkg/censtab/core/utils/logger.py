import sys
from pathlib import Path
from typing import Optional

from loguru import logger as loguru_logger

from censtab.config import settings

_CONSOLE_FORMAT = (
    "<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | "
    "<cyan>{extra[logger_name]}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - <level>{message}</level>"
)
_FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {extra[logger_name]}:{function}:{line} - {message}"


def configure_logging(level: Optional[str] = None, log_file: Optional[str] = None) -> None:
    """Install the stderr sink and, when requested, a rotating file sink."""
    loguru_logger.remove()
    loguru_logger.configure(extra={"logger_name": "censtab"})

    # Reports own stdout, so diagnostics go to stderr
    loguru_logger.add(
        sys.stderr,
        format=_CONSOLE_FORMAT,
        level=(level or settings.log_level).upper(),
    )

    target = log_file or settings.log_file
    if target:
        path = Path(target)
        path.parent.mkdir(parents=True, exist_ok=True)
        loguru_logger.add(
            path,
            rotation="10 MB",
            retention="30 days",
            compression="zip",
            format=_FILE_FORMAT,
            level="DEBUG" if settings.debug else "INFO",
        )


configure_logging()


def get_logger(name: str):
    """Get a logger instance bound to a module name."""
    return loguru_logger.bind(logger_name=name)
