"""Hecke algebras of type A, their even subalgebras, and tableau representations.

The package is organized bottom-up:

- ``scalars``: exact arithmetic over the field Q(q) of rational functions,
  plus admissibility checks for numeric values of q.
- ``tableaux``: Young diagrams, standard tableaux, classes and axial
  distances, and the transposition action.
- ``word_algebra``: words in the generators, the normal word basis of the
  Hecke algebra, and the exact rewriting engine for the even subalgebra.
- ``hecke_rep``: irreducible representation matrices (g-form, f-form, and
  the q = 1 orthogonal form) built from standard tableaux.
- ``alt_decompose``: restriction to the even subalgebra, commutants,
  intertwiners, splitting of self-conjugate restrictions, classification,
  and induction multiplicities.
- ``cli``: command-line front end with deterministic JSON output.
"""

__version__ = "0.1.0"
