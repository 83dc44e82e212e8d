"""
Quasi-braided spaces
====================

Nontrivial associators twist the braid generators by conjugation.  With scalar
or product associators the axioms still hold; a random associator breaks them.
"""

import numpy as np

from braidloc.braid import BraidWord
from braidloc.gybe import GybOperator, represent
from braidloc.quasi import QuasiBraidedSpace, axiom2_instances, check_axiom1, check_axiom2, quasi_represent

swap = np.eye(4)[[0, 2, 1, 3]]

###############################################################################
# Identity associators: the braided case, entry for entry.
qbs = QuasiBraidedSpace(2, swap, level=3)
w = BraidWord.parse("1 2 -1 3 2", 4)
print("difference:", np.abs(quasi_represent(qbs, w) - represent(GybOperator(2, 1, 2, swap), w)).max())

###############################################################################
# Scalar associators.
qbs = QuasiBraidedSpace.scalar(2, swap, lambda p, q: np.exp(0.5j * p * q), level=3)
print("scalar:", check_axiom1(qbs), max(check_axiom2(qbs, p, q) for p, q in axiom2_instances(qbs)))

###############################################################################
# A random unitary associator on V^3.
rng = np.random.default_rng(0)
z = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
qbs = QuasiBraidedSpace(2, swap, level=1, assoc={(1, 1): np.linalg.qr(z)[0]})
print("random: axiom 1 residual", check_axiom1(qbs))
