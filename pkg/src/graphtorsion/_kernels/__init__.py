"""Hot kernel for modular characteristic polynomials.

``charpoly_mod(a, p)`` takes an int64 matrix with entries already reduced
into [0, p) and a prime p < 2**25, and returns the coefficients c_0..c_n of
det(lambda*I - a) mod p, ascending, as int64.

The compiled Cython kernel is preferred; a numpy implementation of the same
algorithm is the fallback.  ``HAVE_COMPILED`` records which one is active.
"""

try:
    from ._charmod import charpoly_mod

    HAVE_COMPILED = True
except ImportError:  # pragma: no cover - depends on build environment
    from ._fallback import charpoly_mod

    HAVE_COMPILED = False

from ._fallback import charpoly_mod as charpoly_mod_fallback

__all__ = ["charpoly_mod", "charpoly_mod_fallback", "HAVE_COMPILED"]
