"""Families of unipotent representations for Weyl groups of types B, C, D,
G2 and F4, the involution on them, and exact checks of the identities it
satisfies (Fourier pairings, degree polynomials, Deligne-Lusztig expansions
and the central element of the Hecke algebra).
"""

__version__ = "0.1.0"
