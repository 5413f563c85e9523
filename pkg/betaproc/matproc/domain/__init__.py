from .matrices import *
from .states import *
