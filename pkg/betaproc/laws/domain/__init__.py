from .law_domain import *
