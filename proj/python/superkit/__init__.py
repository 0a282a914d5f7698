"""Exact computations with finite-dimensional Lie superalgebras."""

from ._superkit import *  # noqa: F401,F403
from ._superkit import DEFAULT_SEED, LieSuperalgebra, ParseError, SuperkitError, Vanishing, NotInG1ss  # noqa: F401
