"""Independent reference computations used only by the tests."""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

import sympy

from lassolink.diagram import Diagram, from_pd


def braid_pd(word, n_strands):
    """PD tuples and free-loop count for the closure of a braid word.

    Generator ``i`` crosses strands i and i+1 positively, ``-i`` negatively;
    strands run upward.
    """
    cur = list(range(1, n_strands + 1))
    nxt = n_strands + 1
    out = []
    for g in word:
        i = abs(g) - 1
        a, b = cur[i], cur[i + 1]
        na, nb = nxt, nxt + 1
        nxt += 2
        if g > 0:
            out.append([b, nb, na, a])
        else:
            out.append([a, b, nb, na])
        cur[i], cur[i + 1] = na, nb
    rename = {cur[p]: p + 1 for p in range(n_strands)}
    out = [[rename.get(x, x) for x in cr] for cr in out]
    used = {x for cr in out for x in cr}
    # a position whose label was never consumed closes up with no crossing
    loops = sum(1 for p in range(n_strands) if cur[p] == p + 1 and p + 1 not in used)
    return out, loops


def braid_diagram(word, n_strands) -> Diagram:
    tuples, loops = braid_pd(word, n_strands)
    return from_pd(tuples, loops)


def _det(rows):
    """Exact determinant of a square Fraction matrix by elimination."""
    m = [list(r) for r in rows]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] / m[col][col]
            if f:
                for k in range(col, n):
                    m[r][k] -= f * m[col][k]
    return det


def fox_alexander(d: Diagram) -> dict[int, int]:
    """One-variable Alexander polynomial from the Wirtinger presentation.

    Generators are over-arcs; each crossing contributes the Fox derivative
    row of its relation with every meridian sent to t.  A first minor is
    evaluated at enough integer points to interpolate it exactly.  The
    result is normalized: lowest exponent 0, top coefficient positive.
    """
    if not d.crossings:
        return {0: 1} if d.free_loops == 1 else {}
    if d.free_loops:
        return {}
    parent = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            x = parent[x]
        return x

    for cr in d.crossings:
        for x in cr.labels:
            find(x)
        ra, rb = find(cr.b), find(cr.d)
        if ra != rb:
            parent[ra] = rb
    arcs = sorted({find(x) for x in parent})
    index = {a: k for k, a in enumerate(arcs)}
    n, g = len(d.crossings), len(arcs)
    if g != n:
        # some component never passes under: it lifts off, so the link splits
        return {}

    def row(cr, t):
        r = [Fraction(0)] * g
        k, i, j = index[find(cr.b)], index[find(cr.a)], index[find(cr.c)]
        if cr.sign > 0:
            coeffs = ((k, 1 - t), (i, t), (j, -1))
        else:
            coeffs = ((k, t - 1), (i, 1), (j, -t))
        for col, v in coeffs:
            r[col] += v
        return r

    points = list(range(2, n + 3))
    values = []
    for t in points:
        m = [row(cr, Fraction(t))[1:] for cr in d.crossings[1:]]
        values.append(_det(m))
    x = sympy.Symbol("x")
    poly = sympy.Poly(sympy.interpolate(list(zip(points, values)), x), x)
    coeffs = {}
    for (e,), c in poly.terms():
        if c == 0:
            continue
        assert c == int(c)
        coeffs[e] = int(c)
    if not coeffs:
        return {}
    low = min(coeffs)
    coeffs = {e - low: c for e, c in coeffs.items()}
    if coeffs[max(coeffs)] < 0:
        coeffs = {e: -c for e, c in coeffs.items()}
    return coeffs


def brute_force_ld(over: list[list[int]]) -> int:
    """Warp-linking degree by trying every stacking order."""
    n = len(over)
    best = None
    for order in permutations(range(n)):
        cost = sum(over[order[q]][order[p]] for p in range(n) for q in range(p + 1, n))
        best = cost if best is None else min(best, cost)
    return best or 0


def braid_words(max_strands=4, max_len=8):
    """Hypothesis strategy yielding (word, n_strands)."""
    from hypothesis import strategies as st

    def words(n):
        gens = [g for i in range(1, n) for g in (i, -i)]
        return st.lists(st.sampled_from(gens), min_size=1, max_size=max_len).map(lambda w: (w, n))

    return st.integers(2, max_strands).flatmap(words)
