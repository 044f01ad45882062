from .Error import *
from .FileType import FileType
from .FeatureSet import FeatureSet
from .GaussianModel import GaussianModel
from .LdaParams import LdaParams, SigmoidClassifier
from .GapReport import GapReport, Histogram
from .GridManifest import GridManifest, GridParameter
from .AdjacencyPairs import AdjacencyPairs
from .SubsetScheme import SubsetScheme, DiversityConfig
from .SelectionConfig import SelectionConfig, SelectionMode
from .RunManifest import RunManifest
from .RunData import RunData
from .Config import Config
from .Logger import MLog, MLogLevel
from .Module import Module
from .IO import IO
from .templates import *
