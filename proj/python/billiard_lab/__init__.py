"""Exact complexity and generalized diagonals of convex polygonal billiards.

Words are tuples of edge labels; edge i joins vertex i to vertex i+1 of the
polygon, counterclockwise from the lexicographically smallest vertex.
"""

from ._core import *  # noqa: F401,F403
from ._core import ResourceLimitError  # noqa: F401
