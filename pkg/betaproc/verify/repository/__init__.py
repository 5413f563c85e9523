from .streams import *
from .distances import *
from .sampling import *
from .kernel_checks import *
from .entry_checks import *
from .spectral_checks import *
