"""Traces on symplectic derivation Lie algebras: dihedral coinvariants,
symmetric group characters, tree traces and the rank-two pair presentation."""

__version__ = "0.1.0"
