"""
Exact q-series and theta functions
==================================

A short tour of the series type and the two theta functions.
"""

# %%
# Series are exact integer coefficients on a grid of q^(1/d), with an
# optional truncation marking where knowledge stops.
from qtail.qfun import INFINITY, Q, SignedMonomial, euler, gauss_binom, pochhammer
from qtail.series import TruncatedSeries, agree_up_to

e = euler(30)
print("(q;q)_oo      =", e)

# %%
# Euler's pentagonal number theorem, checked directly.
pent = {}
for k in range(-5, 6):
    pent[k * (3 * k - 1) // 2] = (-1) ** (k % 2)
print("pentagonal ok:", e == TruncatedSeries.from_dict({x: c for x, c in pent.items() if x < 30}, trunc=30))

# %%
# Finite products stay exact; Gaussian binomials are polynomials.
print("(q;q)_3       =", pochhammer(Q, 3))
print("[5 choose 2]  =", gauss_binom(5, 2))

# %%
# The false theta function of (q^3, q) is 1 - q + q^3 - q^6 + ...
from qtail.theta_fn import false_theta, ramanujan_theta

psi = false_theta(SignedMonomial.q(3), Q, 40)
print("false_theta(q^3, q) =", psi)

# %%
# The Jacobi triple product makes f(-q, -q^2) equal to (q;q)_oo.
f = ramanujan_theta(SignedMonomial.q(1, -1), SignedMonomial.q(2, -1), 40)
print("f(-q,-q^2) == (q;q)_oo:", f == euler(40))

# %%
# Comparisons strip the leading signed monomial before counting.
a = psi.shift(5)
print(agree_up_to(-a, psi, 10))
