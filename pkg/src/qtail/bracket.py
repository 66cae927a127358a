"""Kauffman bracket state sums on planar diagram codes.

This is the independent check on the tail formulas: it knows nothing about
idempotents or bubbles, only crossings, smoothings and loop counts.  A
crossing ``(a, b, c, d)`` lists its four arc labels counterclockwise starting
from the incoming under-strand.  The A-smoothing joins ``a`` with ``b`` and
``c`` with ``d``; the B-smoothing joins ``a`` with ``d`` and ``b`` with ``c``.
Bracket values live on the quarter grid, since ``A = q**(1/4)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import comb

from .errors import InvalidDiagram, MultiComponent, TooFewStrands, TooManyCrossings
from .series import ComparisonReport, TruncatedSeries, agree_up_to

MAX_CROSSINGS = 30


class _DSU:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb

    def count(self) -> int:
        return len({self.find(x) for x in self.parent})


@dataclass(frozen=True)
class PDDiagram:
    """Crossings as 4-tuples of arc labels, with optional crossing signs."""

    crossings: tuple[tuple[int, int, int, int], ...]
    signs: tuple[int, ...] | None = None
    arc_count: int = field(init=False)

    def __post_init__(self):
        xs = tuple(tuple(int(v) for v in x) for x in self.crossings)
        object.__setattr__(self, "crossings", xs)
        counts: dict[int, int] = {}
        for x in xs:
            if len(x) != 4:
                raise InvalidDiagram(f"crossing {x} does not have four arcs")
            for v in x:
                counts[v] = counts.get(v, 0) + 1
        bad = sorted(v for v, c in counts.items() if c != 2)
        if bad:
            raise InvalidDiagram(f"arc labels {bad} do not appear exactly twice")
        if self.signs is not None:
            signs = tuple(int(s) for s in self.signs)
            if len(signs) != len(xs) or any(s not in (1, -1) for s in signs):
                raise InvalidDiagram("need one sign of +1 or -1 per crossing")
            object.__setattr__(self, "signs", signs)
        object.__setattr__(self, "arc_count", len(counts))

    def components(self) -> int:
        """Number of link components (an empty diagram is the unknot)."""
        if not self.crossings:
            return 1
        d = _DSU({v for x in self.crossings for v in x})
        for a, b, c, e in self.crossings:
            d.union(a, c)
            d.union(b, e)
        return d.count()

    def writhe(self) -> int:
        if self.signs is None:
            raise InvalidDiagram("diagram carries no orientation signs")
        return sum(self.signs)

    def to_text(self) -> str:
        return ";".join("X[" + ",".join(map(str, x)) + "]" for x in self.crossings)


def parse_pd(text: str) -> PDDiagram:
    """Parse ``X[1,4,2,5];X[3,6,4,1];...`` (a ``PD[...]`` wrapper is accepted).

    Signs follow the usual convention for labels that increase along each
    component: the over-strand runs from ``d`` to ``b`` in a positive crossing.
    One-crossing kinks, where the increasing-label rule is ambiguous, are
    read off from which pair of arcs coincides.
    """
    found = re.findall(r"X\s*\[\s*([-\d\s,]+?)\s*\]", text)
    if not found and text.strip() not in ("", "PD[]"):
        raise InvalidDiagram(f"no crossings found in {text!r}")
    xs = []
    for body in found:
        parts = [p for p in re.split(r"[\s,]+", body) if p]
        xs.append(tuple(int(p) for p in parts))
    signs = []
    for x in xs:
        if len(x) != 4:
            raise InvalidDiagram(f"crossing {x} does not have four arcs")
        i, j, k, l = x
        if i == j or k == l:
            signs.append(1)  # kink closed on the right
        elif j == k or i == l:
            signs.append(-1)
        else:
            signs.append(1 if (j - l == 1 or l - j > 1) else -1)
    return PDDiagram(tuple(xs), tuple(signs))


# -- pretzel diagrams ------------------------------------------------------

_OPPOSITE = {"NW": "SE", "SE": "NW", "NE": "SW", "SW": "NE"}
_DIR = {"NW": (-1, 1), "NE": (1, 1), "SW": (-1, -1), "SE": (1, -1)}
_CCW = ("NE", "NW", "SW", "SE")


def pretzel_pd(*regions: int) -> PDDiagram:
    """Alternating diagram of the pretzel link with the given vertical twist regions.

    Region ``r`` is a column of ``regions[r]`` crossings; in every crossing
    the strand from north-west to south-east passes over.  Each component is
    oriented by walking it once, and crossing signs follow that orientation.
    """
    if len(regions) < 2 or sum(regions) < 2 or min(regions) < 1:
        raise TooFewStrands(f"need at least two positive twist regions, got {regions}")
    m = len(regions)
    cross = [(r, t) for r in range(m) for t in range(regions[r])]
    link: dict[tuple, tuple] = {}

    def join(p, q):
        link[p] = q
        link[q] = p

    for r in range(m):
        a = regions[r]
        for t in range(a - 1):
            join(((r, t), "SW"), ((r, t + 1), "NW"))
            join(((r, t), "SE"), ((r, t + 1), "NE"))
        nxt = (r + 1) % m
        join(((r, 0), "NE"), ((nxt, 0), "NW"))
        join(((r, a - 1), "SE"), ((nxt, regions[nxt] - 1), "SW"))

    # walk every component, giving each edge a label and a direction
    label: dict[frozenset, int] = {}
    entry: dict[tuple, str] = {}  # (crossing, strand) -> port the walk enters by
    seen = set()
    for start in ((c, p) for c in cross for p in ("NW", "NE")):
        if start in seen:
            continue
        port = start
        while port not in seen:
            c, p = port
            seen.add(port)
            out = (c, _OPPOSITE[p])
            seen.add(out)
            entry[(c, frozenset((p, _OPPOSITE[p])))] = p
            nxt = link[out]
            edge = frozenset((out, nxt))
            if edge not in label:
                label[edge] = len(label) + 1
            port = nxt

    def arc(c, p):
        return label[frozenset(((c, p), link[(c, p)]))]

    xs, signs = [], []
    for c in cross:
        under_in = entry[(c, frozenset(("NE", "SW")))]
        over_in = entry[(c, frozenset(("NW", "SE")))]
        k = _CCW.index(under_in)
        order = _CCW[k:] + _CCW[:k]
        xs.append(tuple(arc(c, p) for p in order))
        ux, uy = (-v for v in _DIR[under_in])
        ox, oy = (-v for v in _DIR[over_in])
        signs.append(1 if ox * uy - oy * ux > 0 else -1)
    return PDDiagram(tuple(xs), tuple(signs))


# -- bracket and Jones ------------------------------------------------------


def _loop_power(loops: int) -> dict[int, int]:
    """``(-A**2 - A**-2)**(loops - 1)`` as ``{A exponent: coefficient}``."""
    m = loops - 1
    sign = -1 if m % 2 else 1
    return {2 * m - 4 * j: sign * comb(m, j) for j in range(m + 1)}


def kauffman_bracket(d: PDDiagram) -> TruncatedSeries:
    """Bracket normalized so the crossingless unknot is 1, on grid 4."""
    n = len(d.crossings)
    if n > MAX_CROSSINGS:
        raise TooManyCrossings(f"{n} crossings exceed the state-sum limit {MAX_CROSSINGS}")
    if n == 0:
        return TruncatedSeries.one(4)
    labels = sorted({v for x in d.crossings for v in x})
    index = {v: i for i, v in enumerate(labels)}
    xs = [tuple(index[v] for v in x) for x in d.crossings]
    total: dict[int, int] = {}
    loop_cache: dict[int, dict[int, int]] = {}
    for state in range(1 << n):
        parent = list(range(len(labels)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        a_count = 0
        for bit, (a, b, c, e) in enumerate(xs):
            if state >> bit & 1:
                pairs = ((a, e), (b, c))
            else:
                a_count += 1
                pairs = ((a, b), (c, e))
            for x, y in pairs:
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[rx] = ry
        loops = sum(1 for i in range(len(labels)) if find(i) == i)
        shift = a_count - (n - a_count)
        if loops not in loop_cache:
            loop_cache[loops] = _loop_power(loops)
        for e, c in loop_cache[loops].items():
            total[shift + e] = total.get(shift + e, 0) + c
    lo, hi = min(total), max(total)
    dense = [0] * (hi - lo + 1)
    for e, c in total.items():
        dense[e - lo] += c
    return TruncatedSeries.from_coeffs(dense, lo, 4)


def jones2(d: PDDiagram, allow_links: bool = False) -> TruncatedSeries:
    """``(-A**3)**(-writhe) * bracket`` in ``q = A**4``, with the unknot at 1.

    This is the unreduced value divided by the 1-colored unknot.  Links raise
    :class:`MultiComponent` unless ``allow_links`` is set; their value then
    depends on the chosen orientation only through a signed monomial.
    """
    if not allow_links and d.components() != 1:
        raise MultiComponent(f"diagram has {d.components()} components")
    w = d.writhe() if d.crossings else 0
    b = kauffman_bracket(d)
    out = b.shift(-3 * w)
    if w % 2:
        out = -out
    return out.compact()


def head_tail_match(j2: TruncatedSeries, tail: TruncatedSeries, n: int = 2) -> ComparisonReport:
    """Compare ``tail`` with both ends of ``j2``; return the better report.

    The ``note`` field records which end matched: ``"tail"`` for the lowest
    powers of ``q``, ``"head"`` for the highest.
    """
    low = agree_up_to(j2, tail, n)
    high = agree_up_to(j2.subs_inverse(), tail, n)
    best, which = (low, "tail") if low.agreed_terms >= high.agreed_terms else (high, "head")
    return ComparisonReport(best.agreed_terms, best.first_mismatch, best.sign_flip, best.monomial_shift, n, which)
