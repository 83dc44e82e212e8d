"""
Hecke relations and the Markov trace
====================================

The representation of B_4 afforded by the (3,1) operator factors over a Hecke
algebra at a sixth root of unity.  The normalized trace satisfies the Markov
property with the weight read off from the idempotent.
"""

import numpy as np

from braidloc import fixtures
from braidloc.hecke import closed_form_eta, markov_check

op = fixtures.load_case_study()

###############################################################################
# Fit (g - q)(g + 1) = 0 after rescaling and read the weight tr(e).
probe = markov_check(op, 4, word_len_cap=0)
print("q =", np.round(probe.q, 12), " quadratic residual:", probe.quadratic_residual)
print("tr(e) =", np.round(probe.eta_observed, 12))

###############################################################################
# At this q the rational expression (1 - q^-2) / (1 + q^3) has a pole.
print("|1 + q^3| =", abs(1 + probe.q**3))
with np.errstate(all="ignore"):
    print("closed form:", closed_form_eta(probe.q))

###############################################################################
# With the observed weight the Markov property holds on all reduced words of
# length up to 6 in the first two generators.
report = markov_check(op, 4, word_len_cap=6, eta=probe.eta_observed)
print("markov residual:", report.markov_residual, " passed:", report.passed())
