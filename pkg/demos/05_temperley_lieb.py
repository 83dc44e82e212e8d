"""
Temperley-Lieb quotients
========================

The Markov trace form on TL_n at q = e^{2 pi i / l} degenerates; the quotient
by its radical has dimension sum of squared path counts on A_{l-1}.
"""

from braidloc.hecke import catalan, tl_quotient_dims

for ell in (3, 4, 5, 6):
    print(f"l={ell}:", tl_quotient_dims(ell, 6))
print("generic:", tl_quotient_dims(40, 6), "catalan:", [catalan(n) for n in range(1, 7)])
