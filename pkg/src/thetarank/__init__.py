"""Θ-rank of characters of finite symplectic, orthogonal and unitary groups.

Unipotent characters are labelled by Lusztig symbols; arbitrary characters by
modified Lusztig data.  Everything is exact integer combinatorics.

>>> from thetarank import Symbol, World, theta_rank_symbol
>>> theta_rank_symbol(World.SPO, Symbol.parse("[3,2,1,0|3,2,1]"))
6
"""

from .symbols import *  # noqa: F401,F403
from .families import *  # noqa: F401,F403
from .theta import *  # noqa: F401,F403
from .datum import *  # noqa: F401,F403
from .witnesses import *  # noqa: F401,F403
from .correspondence import *  # noqa: F401,F403
from .branching import *  # noqa: F401,F403
from . import symbols, families, theta, datum, witnesses, correspondence, branching

__version__ = "0.1.0"

__all__ = (symbols.__all__ + families.__all__ + theta.__all__ + datum.__all__
           + witnesses.__all__ + correspondence.__all__ + branching.__all__)
