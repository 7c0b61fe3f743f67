"""Classification engine for automorphism groups of cyclic curves y^n = f(x)
over algebraically closed fields of characteristic p != 2."""

__version__ = "0.1.0"
