from .store_domain import *
