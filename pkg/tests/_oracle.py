"""Naive reference implementations used only by the tests.

Nothing here imports the package; everything is schoolbook arithmetic on
plain lists (power series from q**0) or exact rational evaluation.
"""

from __future__ import annotations

from fractions import Fraction


def mul(a, b, n):
    out = [0] * n
    for i, x in enumerate(a[:n]):
        if x:
            for j, y in enumerate(b[: n - i]):
                out[i + j] += x * y
    return out


def add_shifted(acc, part, shift):
    for i, c in enumerate(part):
        if shift + i < len(acc):
            acc[shift + i] += c


def qq(m, n):
    """(q;q)_m as a list of length n."""
    out = [1] + [0] * (n - 1)
    for j in range(1, m + 1):
        f = [0] * n
        f[0] = 1
        if j < n:
            f[j] = -1
        out = mul(out, f, n)
    return out


def recip_qq(m, n):
    """1/(q;q)_m by repeated geometric series."""
    out = [1] + [0] * (n - 1)
    for j in range(1, m + 1):
        g = [1 if t % j == 0 else 0 for t in range(n)]
        out = mul(out, g, n)
    return out


def euler(n):
    """(q;q)_oo truncated to n terms, as a finite product."""
    return qq(n, n)


def pentagonal(n):
    out = [0] * n
    k = 0
    while True:
        hit = False
        for kk in ((k, -k) if k else (0,)):
            e = kk * (3 * kk - 1) // 2
            if e < n:
                out[e] += (-1) ** (kk % 2)
                hit = True
        if not hit:
            break
        k += 1
    return out


def false_theta_direct(a, b, n):
    """Psi(q**a, q**b) from its defining two sums, integer exponents only."""
    out = [0] * n
    i = 0
    while True:
        e1 = a * (i * (i + 1) // 2) + b * (i * (i - 1) // 2)
        e2 = b * ((i + 1) * (i + 2) // 2) + a * ((i + 1) * i // 2)
        if e1 >= n and e2 >= n:
            break
        if e1 < n:
            out[e1] += 1
        if e2 < n:
            out[e2] -= 1
        i += 1
    return out


def ramanujan_theta_neg(a, b, n):
    """f(-q**a, -q**b) = sum over all integers i of (-1)**i q**(a i(i+1)/2 + b i(i-1)/2)."""
    out = [0] * n
    for i in range(-n - 2, n + 3):
        e = (a * i * (i + 1) + b * i * (i - 1)) // 2
        if 0 <= e < n:
            out[e] += (-1) ** (i % 2)
    return out


def chain_sum(m, n, square_last=False):
    """sum over l_1..l_m of q**(sum i_j (i_j + 1)) / prod (q;q)_{l_j}, i_j = l_j + ... + l_m."""
    acc = [0] * n

    def rec(level, ls):
        if level == 0:
            idx = [sum(ls[j:]) for j in range(m)]
            e = sum(i * (i + 1) for i in idx)
            if e >= n:
                return
            t = [1] + [0] * (n - 1)
            for pos, l in enumerate(ls):
                t = mul(t, recip_qq(l, n), n)
                if square_last and pos == m - 1:
                    t = mul(t, recip_qq(l, n), n)
            add_shifted(acc, t[: n - e], e)
            return
        l = 0
        while True:
            trial = ls + [l]
            # crude bound: the outer index alone already costs l * (l + 1)
            if l * (l + 1) >= n:
                break
            rec(level - 1, trial)
            l += 1

    if m == 0:
        return [1] + [0] * (n - 1)
    rec(m, [])
    return acc


def lk_product(k, n):
    acc = [0] * n
    for i in range(n):
        t = recip_qq(i, n)
        for _ in range(k):
            t = mul(t, recip_qq(i, n), n)
        add_shifted(acc, t[: n - i], i)
    e = euler(n)
    for _ in range(k + 1):
        acc = mul(acc, e, n)
    return acc


# -- exact evaluation in the skein variable --------------------------------


def qratio_at(r, t: Fraction) -> Fraction:
    """Evaluate a factored skein value at ``q = t**4``."""
    v = Fraction(r.sign) * t ** int(4 * r.qexp)
    for j, m in r.factors:
        v *= (1 - t ** (4 * j)) ** m
    return v


def qint_A(m, A):
    return (A ** (2 * m) - A ** (-2 * m)) / (A ** 2 - A ** (-2))


def qfact_A(m, A):
    v = Fraction(1)
    for j in range(1, m + 1):
        v *= qint_A(j, A)
    return v


def delta_A(n, A):
    return (-1) ** n * qint_A(n + 1, A)


def theta_A(a, b, c, A):
    if (a + b + c) % 2 or c > a + b or a > b + c or b > a + c:
        return Fraction(0)
    x, y, z = (a + b - c) // 2, (a + c - b) // 2, (b + c - a) // 2
    num = qfact_A(x + y + z + 1, A) * qfact_A(x, A) * qfact_A(y, A) * qfact_A(z, A)
    den = qfact_A(x + y, A) * qfact_A(y + z, A) * qfact_A(x + z, A)
    return (-1) ** (x + y + z) * num / den
