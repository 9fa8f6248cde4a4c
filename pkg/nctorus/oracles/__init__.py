from .dense_star import dense_star_oracle
from .grid import GridFunction, sample_and_multiply
from .group_average import brute_group_average
