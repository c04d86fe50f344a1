# Logging logic
import sys
from datetime import datetime
from typing import Callable, Optional, TextIO, Union

LEVELS = {"debug": 10, "info": 20, "warning": 30, "error": 40, "silent": 100}


class Logger:
    def __init__(
        self,
        filename: Optional[str] = None,
        level: str = "info",
        stream: Optional[TextIO] = None,
    ):
        self.filename = filename
        self.level = level
        self.stream = stream
        self.buffer = []

    @property
    def threshold(self) -> int:
        return LEVELS.get(self.level, LEVELS["info"])

    def writeBufferToFile(self, filename: Optional[str] = None):
        filename = filename or self.filename
        if filename is None or not self.buffer:
            return
        with open(filename, "a") as f:
            content = "\n".join(self.buffer) + "\n"
            f.write(content)
        self.buffer = []

    def log(
        self,
        message: str,
        source: Optional[Union[Callable, str]] = None,
        level: str = "info",
    ):
        # Message is going to look like this:
        # DD-MM-YYYY:HH:MM:SS:MS: <class.function> message
        if LEVELS.get(level, LEVELS["info"]) < self.threshold:
            return
        if source is None:
            source = "Unknown"
        elif not isinstance(source, str):
            source = source.__qualname__

        datetime_str = datetime.now().strftime("%d-%m-%Y:%H:%M:%S:%f")
        message = f"{datetime_str}: <{source}> {message}"

        self.buffer.append(message)
        # stdout carries reports only
        print(message, file=self.stream or sys.stderr)

    def debug(self, message: str, source=None):
        self.log(message, source, level="debug")

    def warning(self, message: str, source=None):
        self.log(message, source, level="warning")


_logger: Optional[Logger] = None


def getLogger() -> Logger:
    """Return the process-wide logger, creating it from the settings."""
    global _logger
    if _logger is None:
        from src.utils.config import getSettings

        settings = getSettings()
        _logger = Logger(filename=settings.log_file, level=settings.log_level)
    return _logger


def setLogger(logger: Logger) -> None:
    global _logger
    _logger = logger
