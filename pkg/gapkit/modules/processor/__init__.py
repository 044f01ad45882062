from .GapProcessor import GapProcessor
from .PoolProcessor import PoolProcessor
from .FrechetProcessor import FrechetProcessor
