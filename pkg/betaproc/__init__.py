__version__ = "0.1.0"

from loguru import logger as _logger

_logger.disable("betaproc")

from .errors import *  # noqa: E402
from . import special, kernels, matproc, spectral, laws, verify, store  # noqa: E402
from .logger import Logger  # noqa: E402
