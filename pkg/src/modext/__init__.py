"""Extend a subgroup representation over GF(q) to the whole group.

Given a finite group G, a subgroup L and a representation theta of L over
a finite field, this package decides whether theta extends to G and
enumerates all extensions up to equivalence, by walking a subnormal chain
of the automorphism group of theta and solving relative-cohomology
obstruction problems at each level.  A brute-force oracle cross-checks
every result at desk scale.
"""

__version__ = "0.1.0"
