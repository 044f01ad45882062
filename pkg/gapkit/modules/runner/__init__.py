from .FitRunner import FitRunner
from .EquivalenceRunner import EquivalenceRunner
from .SelectionRunner import SelectionRunner
