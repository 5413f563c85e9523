from .config import *
from .plots import *
from .driver import *
from .main import *
