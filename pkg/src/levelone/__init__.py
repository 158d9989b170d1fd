"""Exact arithmetic of level-one automorphic spectra for split classical groups.

The package computes, with exact rational arithmetic throughout:

* masses of torsion conjugacy classes of ``SO_{2n+1}``, ``Sp_{2n}`` and
  ``SO_{4n}`` over ``Z`` (local orbital integrals assembled with global
  volumes),
* the full geometric side (elliptic and parabolic terms) of the level-one
  trace formula against any irreducible algebraic coefficient system,
* counts of everywhere-unramified self-dual cuspidal automorphic
  representations of general linear groups with prescribed Hodge weights,
* dimensions of spaces of vector-valued Siegel cusp forms in level one.
"""

__version__ = "0.1.0"
