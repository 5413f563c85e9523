from .hermite_process import *
from .laguerre_process import *
from .transforms import *
from .densities import *
from .paths import *
