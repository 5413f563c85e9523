from .gamma import *
from .bessel import *
from .laguerre import *
from .quadrature import *
