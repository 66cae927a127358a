"""
Finite colors and stabilization
===============================

The tail is the limit of normalized colored skein values.  We build those
values from theta graphs and bubble coefficients, then watch the first n
coefficients settle down as the color n grows.
"""

# %%
from qtail import skein
from qtail.stabilization import normalized_skein, route_report, stabilization_check
from qtail.tails import TailSpec

# %%
# Skein coefficients are exact rational functions in factored form.
print("delta(2)        =", skein.delta(2), "=", skein.delta(2).laurent())
print("theta(2, 2, 2)  =", skein.theta_coeff(2, 2, 2))
print("bubble (1,1;1,1)_1 =", skein.bubble_nann(1, 1, 1))

# %%
# Closed forms against their definitions.
print("gamma closed == assembled:", skein.gamma_coeff(3, 2, 1) == skein.gamma_coeff(3, 2, 1, method="assembled"))
print("E closed == definitional:", skein.coeff_E(3, (2, 1)) == skein.coeff_E(3, (2, 1), method="definitional"))

# %%
# Two ways to evaluate the L_k skein element.  The nested bubble route needs
# its closing unknot indexed by all k bubble indices.
r = route_report(3, 2)
print(r.to_json())

# %%
# Normalized skein values for L_1 at increasing colors.
spec = TailSpec("lk-product", 1, trunc=12)
tail = spec.evaluate()
print("tail   :", tail.window(0, 10))
for n in range(1, 7):
    s = normalized_skein(spec, n, terms_needed=10)
    print(f"n = {n}  :", s.window(0, 10))

# %%
# The agreement always reaches at least n coefficients.
for n in range(1, 9):
    rep = stabilization_check(TailSpec("phi", 1, 1, trunc=12), n)
    print(f"8_5, n={n}: agreed {rep.agreed_terms}")
