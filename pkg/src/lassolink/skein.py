"""Conway polynomial by skein resolution down to descending diagrams.

Convention: ``nabla(L+) - nabla(L-) = z * nabla(L0)`` and ``nabla(unknot) = 1``.

Components are traversed in index order, each from the tail of its
smallest arc.  A crossing first reached along its under-strand is a
descending violation.  Switching a violation leaves the traversal and the
status of every other crossing untouched, so with violations
``c1..ck`` in traversal order

    nabla(D) = nabla(D_k) + sum_i sign(c_i) * z * nabla(smooth(D_{i-1}, c_i))

where ``D_i`` has ``c1..ci`` switched.  ``D_k`` is descending, hence a
split union of unknots: 1 for one component, 0 otherwise.  Every smoothed
diagram has fewer crossings, which bounds the recursion.
"""

from __future__ import annotations

from functools import lru_cache

from .diagram import (
    Diagram,
    _incoming_place,
    _occurrences,
    components,
    crossing_change,
    diagram_key,
    is_visibly_split,
    simplify,
    smooth,
)
from .laurent import ONE, ZERO, LaurentPoly, conway_to_alexander, scale_by_monomial


def descending_violations(d: Diagram) -> list[int]:
    """Crossings first met along their under-strand, in traversal order."""
    occ = _occurrences([cr.labels for cr in d.crossings])
    seen = set()
    out = []
    for comp in components(d):
        for label in comp:
            i, s = _incoming_place(d, occ, label)
            if i in seen:
                continue
            seen.add(i)
            if s == 0:
                out.append(i)
    return out


def _evaluate(d: Diagram) -> LaurentPoly:
    d = simplify(d)
    if not d.crossings:
        return ONE if d.free_loops == 1 else ZERO
    if is_visibly_split(d):
        return ZERO
    return _conway_canonical(diagram_key(d))


@lru_cache(maxsize=1 << 16)
def _conway_canonical(key) -> LaurentPoly:
    d = Diagram(*key)
    total = ZERO
    current = d
    for c in descending_violations(d):
        sign = current.crossings[c].sign
        branch = _evaluate(smooth(current, c))
        if branch:
            total = total + scale_by_monomial(branch, sign, 1)
        current = crossing_change(current, c)
    if len([comp for comp in components(d)]) == 1:
        total = total + ONE
    return total


def conway(d: Diagram) -> LaurentPoly:
    """Conway polynomial of the oriented link presented by ``d``."""
    if d.is_empty():
        raise ValueError("the empty diagram has no Conway polynomial")
    return _evaluate(d)


def alexander(d: Diagram) -> LaurentPoly:
    """One-variable Alexander polynomial, normalized up to units."""
    return conway_to_alexander(conway(d))


def is_conway_nonzero(d: Diagram) -> bool:
    return not conway(d).is_zero()


def clear_cache():
    _conway_canonical.cache_clear()
