"""Combinatorial patchworking of signed convex triangulations.

Builds primitive (and deliberately non-primitive) convex triangulations of
dilated simplices, equips them with sign distributions, extends them
symmetrically over all orthants with the antipodal boundary quotient, and
assembles the piecewise-linear hypersurface separating the signs.  Exact
integer/rational arithmetic throughout; GF(2) homology and closed-form
censuses cross-check every construction.
"""

__version__ = "0.1.0"
