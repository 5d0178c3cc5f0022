"""Normals, equilibria and affine diameters of convex bodies."""

from ._core import *  # noqa: F401,F403
from ._core import __version__, GeometryError  # noqa: F401
