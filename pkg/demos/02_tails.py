"""
Tails of torus knots, pretzel knots and the L_k links
=====================================================

Each tail is an infinite nested sum; here we evaluate a few and watch the
identities between them hold coefficient by coefficient.
"""

# %%
import time

from qtail.qfun import Q, SignedMonomial
from qtail.tails import tail_8_5, tail_lk_multisum, tail_lk_product, tail_phi, tail_torus_even
from qtail.theta_fn import false_theta

N = 200

# %%
# The (2, 2k) torus link tails are false theta functions.
for k in (2, 3, 4):
    lhs = false_theta(SignedMonomial.q(2 * k - 1), Q, N)
    print(f"k={k}: false_theta(q^{2 * k - 1}, q) equals the multi-sum on {N} terms:", lhs == tail_torus_even(k, N))

# %%
# Two expressions for the tail of L_k: a single sum with a high power in the
# denominator and a k-fold sum with simple denominators.
for k in (1, 2, 3):
    t = time.perf_counter()
    same = tail_lk_product(k, N) == tail_lk_multisum(k, N)
    print(f"L_{k}: product form == multi-sum form: {same}  ({time.perf_counter() - t:.2f}s)")

# %%
# The pretzel knot P(3, 2, 3) is 8_5; its tail is the (1, 1) case of the
# two-chain family.
print("8_5 tail:", tail_phi(1, 1, 20))
print("matches the direct double sum:", tail_phi(1, 1, N) == tail_8_5(N))

# %%
# Larger chains, with the outermost index spread over worker processes.
t = time.perf_counter()
s = tail_phi(2, 2, N, jobs=4)
print(f"P(5, 2, 5) tail head: {s.window(0, 12)}  ({time.perf_counter() - t:.2f}s)")
