from .domain import *
from .repository import *
