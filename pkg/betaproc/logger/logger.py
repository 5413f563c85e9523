import sys

from loguru import logger

LOG_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} - {name} - {level} - {message}"
LEVELS = ("debug", "info", "warning", "error", "critical")


class Logger:
    """
    Routes betaproc log records to a file and, when verbose, to stderr.

    The library modules log through loguru directly and stay silent until a
    Logger is created; the command line creates one per run.

    Parameters:
    ----------
    log_file : str, optional
        Path of the log file. No file sink is added when empty.
    verbose : bool
        Also echo records of level info and above to stderr.
    """

    def __init__(self, log_file: str = None, verbose: bool = False):
        self.logger = logger
        self.verbose = verbose
        self._sinks = []
        logger.enable("betaproc")
        if log_file:
            try:
                self._sinks.append(logger.add(log_file, level="DEBUG", format=LOG_FORMAT))
            except Exception as e:
                print(f"Error initializing logger: {e}", file=sys.stderr)
        if verbose:
            self._sinks.append(logger.add(sys.stderr, level="INFO", format="{level}: {message}"))

    def log(self, message: str, level: str = 'info'):
        if level not in LEVELS:
            level = 'info'
        self.logger.opt(depth=1).log(level.upper(), message)

    def log_exception(self, message: str):
        self.logger.opt(depth=1).exception(message)

    def close(self):
        """Removes the sinks this Logger added."""
        for sink in self._sinks:
            self.logger.remove(sink)
        self._sinks = []
