from .ou_kernel import *
from .bessel_kernel import *
from .laguerre_series import *
from .stationarity import *
