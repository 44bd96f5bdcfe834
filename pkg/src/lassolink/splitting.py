"""Linking matrices, warp-linking degree and complete-splitting bounds.

``split(D)`` is only ever bracketed: lower bounds come from the Conway
polynomial, upper bounds from explicit crossing-change witnesses.  Each
bound carries the tag of the rule that produced it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .diagram import (
    Diagram,
    _occurrences,
    component_map,
    components,
    crossing_change,
    delete_component,
    simplify,
)
from .skein import conway

THEOREM_LOWER = "theorem-1-lower"
THEOREM_UPPER = "theorem-1-upper"
CONWAY_LOWER = "conway-nonzero-lower"
TRIVIAL_LOWER = "trivial-lower"
LD_UPPER = "ld-upper"
SEARCH_UPPER = "search-upper"


class BoundRuleInapplicable(ValueError):
    pass


@dataclass(frozen=True)
class LinkingMatrix:
    entries: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    @property
    def lasso_budget(self) -> int:
        """Sum of |Link(L_i, L_j)| over unordered pairs."""
        n = self.size
        return sum(abs(self.entries[i][j]) for i in range(n) for j in range(i + 1, n))

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def as_lists(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def linking_matrix(d: Diagram) -> LinkingMatrix:
    n = len(components(d))
    cmap = component_map(d)
    twice = [[0] * n for _ in range(n)]
    for cr in d.crossings:
        i, j = cmap[cr.a], cmap[cr.b]
        if i != j:
            twice[i][j] += cr.sign
            twice[j][i] += cr.sign
    for i in range(n):
        for j in range(n):
            if twice[i][j] % 2:
                raise ValueError(f"odd crossing-sign sum between components {i} and {j}")
    return LinkingMatrix(tuple(tuple(x // 2 for x in row) for row in twice))


def is_algebraically_completely_splittable(d: Diagram) -> bool:
    return linking_matrix(d).is_zero()


def over_matrix(d: Diagram) -> list[list[int]]:
    """m[i][j] = number of crossings where component i passes over component j."""
    n = len(components(d))
    cmap = component_map(d)
    m = [[0] * n for _ in range(n)]
    for cr in d.crossings:
        under, over = cmap[cr.a], cmap[cr.b]
        if under != over:
            m[over][under] += 1
    return m


def warp_linking_degree(d: Diagram) -> int:
    """Fewest inter-component crossing changes that make ``d`` layered.

    Minimizes over stacking orders of the components by dynamic
    programming on the set already placed above.
    """
    m = over_matrix(d)
    active = [i for i in range(len(m)) if any(m[i]) or any(row[i] for row in m)]
    k = len(active)
    if k < 2:
        return 0
    full = (1 << k) - 1
    best = [None] * (1 << k)
    best[0] = 0
    for mask in range(1 << k):
        if best[mask] is None:
            continue
        for p in range(k):
            if mask >> p & 1:
                continue
            lo = active[p]
            # lo goes below everything in mask; lo-over-higher crossings must change
            cost = best[mask] + sum(m[lo][active[q]] for q in range(k) if mask >> q & 1)
            nm = mask | 1 << p
            if best[nm] is None or cost < best[nm]:
                best[nm] = cost
    return best[full]


# ---------------------------------------------------------------------------
# splitting certificates


def _inter_status(d: Diagram, k: int, cmap) -> tuple[int, int, bool]:
    """(times k is over, times k is under, has self-crossing) at its crossings."""
    over = under = 0
    selfx = False
    for cr in d.crossings:
        cu, co = cmap[cr.a], cmap[cr.b]
        if cu == co:
            selfx = selfx or cu == k
        elif co == k:
            over += 1
        elif cu == k:
            under += 1
    return over, under, selfx


def _disk_peelable(d: Diagram, k: int, cmap) -> bool:
    """Whether crossingless-on-itself component ``k`` bounds a disk missing the rest.

    The disk is the flat region on one side of ``k``'s projection, at the
    height of ``k``.  Strands inside the region must be sortable into an
    upper family (crossing ``k`` over at both ends) and a lower family
    (under at both ends) with upper strands over lower ones wherever they
    cross inside.
    """
    ring = {}
    for i, cr in enumerate(d.crossings):
        cu, co = cmap[cr.a], cmap[cr.b]
        if cu == k and co == k:
            return False
        if cu == k:
            ring[i] = 0
        elif co == k:
            ring[i] = 3 if cr.sign > 0 else 1
    if not ring:
        return True
    occ = _occurrences([cr.labels for cr in d.crossings])
    for side in (3, 1):
        gate = {i: (p + side) % 4 for i, p in ring.items()}
        if _region_ok(d, occ, gate):
            return True
    return False


def _region_ok(d: Diagram, occ, gate: dict[int, int]) -> bool:
    edges = set()
    interior = set()
    boundary = []
    stack = [d.crossings[i].labels[t] for i, t in gate.items()]
    while stack:
        e = stack.pop()
        if e in edges:
            continue
        edges.add(e)
        for j, t in occ[e]:
            if j in gate:
                if gate[j] != t:
                    return False
                boundary.append((j, t, e))
            elif j not in interior:
                interior.add(j)
                stack.extend(d.crossings[j].labels)
    parent = {e: e for e in edges}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for j in interior:
        L = d.crossings[j].labels
        parent[find(L[0])] = find(L[2])
        parent[find(L[1])] = find(L[3])
    fixed: dict[int, int] = {}
    for j, t, e in boundary:
        colour = t % 2  # other strand over the ring at odd slots
        root = find(e)
        if fixed.setdefault(root, colour) != colour:
            return False
    colour = dict(fixed)
    ties = [(find(d.crossings[j].a), find(d.crossings[j].b)) for j in interior]
    changed = True
    while changed:
        changed = False
        for lo, hi in ties:
            if colour.get(lo, 0) == 1 and colour.get(hi, 0) == 0:
                if hi in fixed:
                    return False
                colour[hi] = 1
                changed = True
    return True


def is_certified_split(d: Diagram) -> bool:
    """Sound (incomplete) test that ``d`` presents a completely splittable link.

    Components are peeled off one at a time when they lie entirely above
    or entirely below everything they cross, or when they are crossingless
    on themselves and bound a disk avoiding the rest.
    """
    d = simplify(d)
    while True:
        comps = components(d)
        if len(comps) <= 1:
            return True
        cmap = component_map(d)
        for k in range(len(comps)):
            over, under, selfx = _inter_status(d, k, cmap)
            if over == 0 or under == 0 or (not selfx and _disk_peelable(d, k, cmap)):
                d = simplify(delete_component(d, k))
                break
        else:
            return False


@dataclass(frozen=True)
class Bound:
    value: int
    rule: str


@dataclass(frozen=True)
class SplitBounds:
    lower: Bound
    upper: Bound

    def __post_init__(self):
        if not 0 <= self.lower.value <= self.upper.value:
            raise ValueError(f"inconsistent bounds {self.lower} > {self.upper}")

    @property
    def exact(self) -> bool:
        return self.lower.value == self.upper.value

    def as_dict(self) -> dict:
        return {
            "lower": self.lower.value,
            "lower_rule": self.lower.rule,
            "upper": self.upper.value,
            "upper_rule": self.upper.rule,
            "exact": self.exact,
        }

    def __str__(self):
        return (
            f"lower={self.lower.value} ({self.lower.rule}) "
            f"upper={self.upper.value} ({self.upper.rule}) "
            f"exact={str(self.exact).lower()}"
        )


def split_lower(d: Diagram) -> Bound:
    n = len(components(d))
    if n >= 2 and not conway(d).is_zero():
        return Bound(n - 1, CONWAY_LOWER)
    return Bound(0, TRIVIAL_LOWER)


def _change_all(d: Diagram, subset) -> Diagram:
    for c in subset:
        d = crossing_change(d, c)
    return d


def search_split_witness(d: Diagram, budget: int, below: int | None = None):
    """Smallest crossing set (size <= budget, < below) whose change certifies splitting."""
    n = len(d.crossings)
    top = budget if below is None else min(budget, below - 1)
    for size in range(0, top + 1):
        for subset in combinations(range(n), size):
            if is_certified_split(_change_all(d, subset)):
                return subset
    return None


def split_diagram_upper(d: Diagram, budget: int) -> Bound:
    """min(ld(d), best witness from changing at most ``budget`` crossings)."""
    ld = warp_linking_degree(d)
    witness = search_split_witness(d, budget, below=ld)
    if witness is None:
        return Bound(ld, LD_UPPER)
    return Bound(len(witness), SEARCH_UPPER)


def diagram_bounds(d: Diagram, budget: int = 2) -> SplitBounds:
    return SplitBounds(split_lower(d), split_diagram_upper(d, budget))


def split_bounds_from_log(log, base_bounds: SplitBounds) -> SplitBounds:
    """Bounds for the logged link from r lassoings of a base with s components.

    Lower: r + s - 1, valid only when the base Conway polynomial is nonzero
    and every step is a lassoing.  Upper: each step (lasso or change) adds
    at most one to the base's upper bound.
    """
    upper = Bound(len(log.steps) + base_bounds.upper.value, THEOREM_UPPER)
    if log.changes:
        raise BoundRuleInapplicable("log contains crossing changes; only lassoings preserve the lower bound")
    if conway(log.base).is_zero():
        raise BoundRuleInapplicable("base link has zero Conway polynomial")
    lower = Bound(log.r + log.s - 1, THEOREM_LOWER)
    return SplitBounds(lower, upper)


def merge(*bounds: SplitBounds) -> SplitBounds:
    """Tightest combination; ties keep the earlier argument's tag."""
    lower = bounds[0].lower
    upper = bounds[0].upper
    for b in bounds[1:]:
        if b.lower.value > lower.value:
            lower = b.lower
        if b.upper.value < upper.value:
            upper = b.upper
    return SplitBounds(lower, upper)
