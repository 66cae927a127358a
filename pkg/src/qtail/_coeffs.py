"""Low-level kernels on dense lists of Python integers.

A coefficient list ``c`` stands for ``sum(c[i] * x**i)``.  Nothing here knows
about offsets, grids or truncation; callers slice to the window they need.
Large products go through Kronecker substitution so that the quadratic work
happens inside CPython's big-integer multiplication.
"""

from __future__ import annotations

_KRONECKER_MIN = 48
_SHORT_DIVISOR = 48


def _schoolbook(a: list[int], b: list[int], n: int) -> list[int]:
    if len(a) > len(b):
        a, b = b, a
    out = [0] * n
    for i, ai in enumerate(a):
        if not ai or i >= n:
            continue
        stop = n - i
        for j, bj in enumerate(b[:stop]):
            if bj:
                out[i + j] += ai * bj
    return out


def _pack(c: list[int], width: int) -> int:
    return int.from_bytes(b"".join(x.to_bytes(width, "little") for x in c), "little")


def _kronecker(a: list[int], b: list[int], n: int) -> list[int]:
    a = a[:n]
    b = b[:n]
    bound = max(map(abs, a)).bit_length() + max(map(abs, b)).bit_length()
    bits = bound + min(len(a), len(b)).bit_length() + 2
    width = (bits + 7) // 8
    bits = 8 * width
    ap = _pack([x if x > 0 else 0 for x in a], width) - _pack([-x if x < 0 else 0 for x in a], width)
    bp = _pack([x if x > 0 else 0 for x in b], width) - _pack([-x if x < 0 else 0 for x in b], width)
    m = min(len(a) + len(b) - 1, n)
    half = 1 << (bits - 1)
    bias = _pack([half] * (len(a) + len(b) - 1), width)
    raw = (ap * bp + bias).to_bytes(width * (len(a) + len(b) - 1), "little")
    return [int.from_bytes(raw[i * width:(i + 1) * width], "little") - half for i in range(m)]


def mul(a: list[int], b: list[int], n: int | None = None) -> list[int]:
    """First ``n`` coefficients of ``a * b`` (all of them when ``n`` is None)."""
    if not a or not b:
        return []
    full = len(a) + len(b) - 1
    n = full if n is None else min(n, full)
    if n <= 0:
        return []
    if min(len(a), len(b), n) < _KRONECKER_MIN:
        return _schoolbook(a, b, n)
    out = _kronecker(a, b, n)
    return out + [0] * (n - len(out))


def _div_short(num: list[int], den: list[int], n: int) -> list[int]:
    lead = den[0]
    taps = [(j, d) for j, d in enumerate(den) if j and d]
    out = [0] * n
    for i in range(n):
        acc = num[i] if i < len(num) else 0
        for j, d in taps:
            if j > i:
                break
            acc -= d * out[i - j]
        out[i] = acc * lead
    return out


def inverse(a: list[int], n: int) -> list[int]:
    """Reciprocal power series of ``a`` to ``n`` terms; ``a[0]`` must be +-1."""
    lead = a[0]
    g = [lead]
    m = 1
    while m < n:
        m = min(2 * m, n)
        e = mul(a[:m], g, m)
        e = [-x for x in e] + [0] * (m - len(e))
        e[0] += 2
        g = mul(g, e, m)
    return g[:n] + [0] * (n - len(g))


def divide(num: list[int], den: list[int], n: int) -> list[int]:
    """First ``n`` coefficients of the power series ``num / den`` (den[0] = +-1)."""
    if n <= 0:
        return []
    if len(den) <= _SHORT_DIVISOR or n <= _SHORT_DIVISOR:
        return _div_short(num, den, n)
    out = mul(num[:n], inverse(den, n), n)
    return out + [0] * (n - len(out))


def divide_exact(num: list[int], den: list[int]) -> list[int] | None:
    """Polynomial quotient ``num / den`` or None when there is a remainder."""
    if len(num) < len(den):
        return None if any(num) else []
    n = len(num) - len(den) + 1
    quo = divide(num, den, n)
    back = mul(quo, den)
    back += [0] * (len(num) - len(back))
    return quo if back == num else None
