from .params import *
from .kernel_domain import *
