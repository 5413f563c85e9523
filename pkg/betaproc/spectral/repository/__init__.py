from .eigen import *
from .measures import *
from .lanczos import *
