from .eigen_jpdf import *
from .weights import *
from .operators import *
from .limits import *
from .stieltjes import *
