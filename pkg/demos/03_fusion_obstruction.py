"""
Frobenius-Perron integrality of fusion rules
============================================

An object whose braid representations localize must have FPdim(X)^2 integral.
Path graphs A_{l-1} (sl2 at root of unity) pass only for l = 3, 4, 6; the
vector representation of sl3 at level 3 passes with FPdim 2.
"""

from braidloc import fixtures
from braidloc.fusion import hom_dims, multiplicity_search, obstruction_test

###############################################################################
# Sweep the path graphs.
for ell in range(3, 11):
    r = obstruction_test(fixtures.sl2_path(ell))
    print(f"l={ell:2d}  FPdim={r.fpdim:.6f}  FPdim^2={r.fpdim_sq:.6f}  integral={r.verdict}")

###############################################################################
# sl3 level 3: ten simple objects, period 3 from the Z/3 grading.
f = fixtures.load_sl3_level3()
r = obstruction_test(f)
print("FPdim:", round(r.fpdim, 9), " period:", r.period, " stabilization:", r.stabilization)
print("Lambda = FPdim^p:", round(r.big_lambda, 9))
print("hom dims of X^6:", list(hom_dims(f, 6)))

###############################################################################
# Positive integer multiplicity vectors with 2 a_n = G_n a_{n+1}.
w = multiplicity_search(f, w=2, m=1, window=4)
print(w.status)
for n, v in enumerate(w.vectors, start=w.start):
    print(f"  a_{n} = {v}")
