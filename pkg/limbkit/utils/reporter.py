import logging
import sys
from typing import List, Optional

LOG_FORMAT = "%(levelname)s : %(message)s"


class BasicReporter:
    """
        This Reporter (logger) prints only Warnings and Errors unless made verbose.

        Every message is also forwarded to the ``limbkit`` logger and kept in memory so it can be saved.
    """
    logs: List[str]
    file_path: str

    def __init__(self, file_path: str = "limbkit_log.txt", name: str = "limbkit"):
        self.file_path = file_path
        self.logs = []
        self.logger = logging.getLogger(name)

        if not self.logger.handlers:
            handler = logging.StreamHandler(sys.stderr)
            handler.setFormatter(logging.Formatter(LOG_FORMAT))
            handler.setLevel(logging.WARNING)
            self.logger.addHandler(handler)
            self.logger.setLevel(logging.DEBUG)

    def log(self, level: int, msg: str, thrown: Optional[BaseException] = None):
        """
            Log a message.
        :param level: Logging level, e.g. ``logging.INFO``
        :param msg: Message
        :param thrown: Exception to attach, if any
        :return: Nothing
        """
        self.logger.log(level, msg, exc_info=thrown)
        self.logs.append(f"{logging.getLevelName(level)}: {msg}")

    def set_verbose(self, verbose: bool = True):
        for handler in self.logger.handlers:
            handler.setLevel(logging.INFO if verbose else logging.WARNING)

    def save_log(self, file_path: Optional[str] = None):
        with open(file_path or self.file_path, "w", encoding="utf-8") as f:
            f.write("\n".join(self.logs))


_DEFAULT_REPORTER: Optional[BasicReporter] = None


def get_reporter() -> BasicReporter:
    """
        The process-wide reporter.
    :return: BasicReporter
    """
    global _DEFAULT_REPORTER

    if _DEFAULT_REPORTER is None:
        _DEFAULT_REPORTER = BasicReporter()

    return _DEFAULT_REPORTER
