"""Exact derivation of operator identities in commutative nilalgebras of index four.

Modules, bottom up: ``ratlinalg`` (exact row reduction), ``magma`` (free
commutative magma on x, y), ``linearize``, ``onevar`` (the one-generated
quotient), ``opalgebra`` (operator words and their relation spaces) and
``theorems`` (verification reports).
"""

__version__ = "0.1.0"
