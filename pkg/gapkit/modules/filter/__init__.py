from .SubsetFilter import SubsetFilter
