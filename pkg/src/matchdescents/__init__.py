"""
Descent statistics on matchings, involutions and standard Young
tableaux: the geometric and cyclic geometric descent sets, crossing and
nesting numbers, the insertion/deletion bijection with oscillating
tableaux, the composite bijection transporting geometric statistics to
standard ones, cyclic descent extensions, and an exhaustive verification
suite for the associated equidistribution and Schur-positivity
identities.
"""

from . import bijection, cyclic, matching, oscillating, perm, symfun, tableau

__all__ = [
    "bijection",
    "cyclic",
    "matching",
    "oscillating",
    "perm",
    "symfun",
    "tableau",
]

__version__ = "0.1.0"
