from .reports import *
