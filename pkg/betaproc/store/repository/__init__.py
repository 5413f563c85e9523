from .csv_store import *
from .json_store import *
from .factory import *
