from .runner import *
from .processor import *
from .filter import *
from .exporter import *
