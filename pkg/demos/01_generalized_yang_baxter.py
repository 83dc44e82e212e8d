"""
A (3,1) generalized Yang-Baxter operator from quaternions
=========================================================

Build the 8x8 operator from a tensor in the quaternions, check the
generalized Yang-Baxter equation, and look at the braid group image it
generates on three strands.
"""

import numpy as np

from braidloc import Tolerance, fixtures
from braidloc.gybe import GybOperator, check_far_commutativity, check_gybe, classify_spectrum, image_closure
from braidloc.quaternion import build_r, emit_matrix

###############################################################################
# The operator is the image of a sum of four triple tensors under the 2x2
# complex representation of the quaternions.
c = emit_matrix(build_r())
op = GybOperator(k=3, m=1, d=2, c=c)
print("matches bundled matrix:", np.allclose(c, fixtures.case_study_matrix()))

###############################################################################
# Residuals of the defining equations.  Far commutativity only has to be
# checked at distance 2 for k=3, m=1.
print("gYBE residual:", check_gybe(op))
print("far commutativity:", check_far_commutativity(op))

###############################################################################
# Two eigenvalues, -1 and a primitive sixth root of unity.
eigs = np.linalg.eigvals(c)
spectrum = classify_spectrum(eigs, np.pi / 3, tol=Tolerance(abs=1e-8, rel=1e-8))
print("spectrum of the form {-chi, chi e^{i pi/3}}:", spectrum.matches_ratio, "chi =", np.round(spectrum.chi, 12))

###############################################################################
# The projective image of B_3 is finite.
report = image_closure(op, 3, budget=1000)
print("closed:", report.closed, "order:", report.size)
