"""Oriented link diagrams stored as planar-diagram (PD) codes.

Each crossing lists its four incident arc labels counterclockwise,
starting from the incoming under-strand.  The under-strand therefore runs
from slot 0 to slot 2; the over-strand joins slots 1 and 3 and its
direction is recorded as the crossing sign:

    sign +1  over-strand runs slot 3 -> slot 1
    sign -1  over-strand runs slot 1 -> slot 3

Crossingless unknotted components are kept as a bare ``free_loops`` count.
Diagrams are immutable; every rewrite returns a new value.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence


class DiagramError(ValueError):
    pass


class UnknownCrossing(DiagramError, IndexError):
    pass


class Crossing(NamedTuple):
    a: int
    b: int
    c: int
    d: int
    sign: int

    @property
    def labels(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def incoming(self, slot: int) -> bool:
        if slot == 0:
            return True
        if slot == 2:
            return False
        return (slot == 3) == (self.sign > 0)

    def changed(self) -> "Crossing":
        """The same crossing with over and under exchanged."""
        a, b, c, d = self.labels
        if self.sign > 0:
            return Crossing(d, a, b, c, -1)
        return Crossing(b, c, d, a, 1)

    def relabel(self, f) -> "Crossing":
        return Crossing(f(self.a), f(self.b), f(self.c), f(self.d), self.sign)


@dataclass(frozen=True)
class Diagram:
    crossings: tuple[Crossing, ...] = ()
    free_loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(Crossing(*c) for c in self.crossings))
        if self.free_loops < 0:
            raise DiagramError("negative free loop count")

    def __len__(self):
        return len(self.crossings)

    @property
    def labels(self) -> set[int]:
        return {x for cr in self.crossings for x in cr.labels}

    def max_label(self) -> int:
        return max(self.labels, default=0)

    def is_empty(self) -> bool:
        return not self.crossings and not self.free_loops

    def crossing(self, c: int) -> Crossing:
        if not isinstance(c, int) or not 0 <= c < len(self.crossings):
            raise UnknownCrossing(f"no crossing with id {c!r} (diagram has {len(self.crossings)})")
        return self.crossings[c]


@dataclass
class Issue:
    message: str
    crossing: int | None = None


@dataclass
class ValidationReport:
    issues: list[Issue] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.issues

    def add(self, message: str, crossing: int | None = None):
        self.issues.append(Issue(message, crossing))

    def __str__(self):
        if self.ok:
            return "valid"
        return "; ".join(i.message for i in self.issues)


def _occurrences(crossings: Sequence[Sequence[int]]) -> dict[int, list[tuple[int, int]]]:
    occ = defaultdict(list)
    for i, cr in enumerate(crossings):
        for s in range(4):
            occ[cr[s]].append((i, s))
    return occ


def _other(occ, label, here):
    first, second = occ[label]
    return second if first == here else first


# ---------------------------------------------------------------------------
# construction and validation


def _check_pairing(tuples, report: ValidationReport):
    occ = _occurrences(tuples)
    for label, places in sorted(occ.items()):
        if len(places) != 2:
            word = "unpaired" if len(places) == 1 else f"used {len(places)} times"
            report.add(f"arc {label} {word}", places[0][0])
    return occ


def orient(tuples: Sequence[Sequence[int]], report: ValidationReport) -> list[int] | None:
    """Infer crossing signs from raw PD tuples.

    Under-strands fix the direction of every arc on components that pass
    under somewhere.  A component that only ever passes over is oriented
    from the first crossing (in list order) it meets: of its two labels
    there, the smaller is incoming when they differ by one, otherwise the
    larger (the wrap-around of consecutive labelling).
    """
    occ = _occurrences(tuples)
    incoming: dict[tuple[int, int], bool] = {}
    queue = []

    def assign(place, value, why):
        old = incoming.get(place)
        if old is None:
            incoming[place] = value
            queue.append(place)
            return True
        if old != value:
            report.add(f"inconsistent orientation of arc {tuples[place[0]][place[1]]} ({why})", place[0])
            return False
        return True

    def propagate():
        while queue:
            i, s = queue.pop()
            v = incoming[(i, s)]
            label = tuples[i][s]
            if not assign(_other(occ, label, (i, s)), not v, f"arc {label}"):
                return False
            if not assign((i, (s + 2) % 4), not v, f"strand through crossing {i}"):
                return False
        return True

    for i in range(len(tuples)):
        assign((i, 0), True, "under-strand")
        assign((i, 2), False, "under-strand")
    if not propagate():
        return None
    for i, cr in enumerate(tuples):
        if (i, 1) in incoming:
            continue
        x, y = cr[1], cr[3]
        if abs(x - y) == 1:
            slot = 1 if x < y else 3
        elif x == y:
            slot = 1
        else:
            slot = 1 if x > y else 3
        assign((i, slot), True, "over-only component")
        if not propagate():
            return None
    return [1 if incoming[(i, 3)] else -1 for i in range(len(tuples))]


def _euler_check(crossings, occ, report: ValidationReport):
    n = len(crossings)
    if n == 0:
        return
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for places in occ.values():
        (i, _), (j, _) = places
        parent[find(i)] = find(j)
    seen = set()
    faces = defaultdict(int)
    for i in range(n):
        for s in range(4):
            if (i, s) in seen:
                continue
            faces[find(i)] += 1
            dart = (i, s)
            while dart not in seen:
                seen.add(dart)
                j, t = _other(occ, crossings[dart[0]][dart[1]], dart)
                dart = (j, (t + 1) % 4)
    verts = defaultdict(int)
    for i in range(n):
        verts[find(i)] += 1
    for root, v in verts.items():
        chi = v - 2 * v + faces[root]
        if chi != 2:
            report.add(f"non-planar PD: piece containing crossing {root} has Euler characteristic {chi}", root)


def check_pd(tuples: Sequence[Sequence[int]]) -> tuple[ValidationReport, list[int] | None]:
    """Validate raw PD tuples; returns the report and inferred signs."""
    report = ValidationReport()
    for i, cr in enumerate(tuples):
        if len(cr) != 4:
            report.add(f"crossing {i} has {len(cr)} arcs, expected 4", i)
    if not report.ok:
        return report, None
    occ = _check_pairing(tuples, report)
    if not report.ok:
        return report, None
    signs = orient(tuples, report)
    if signs is None:
        return report, None
    _euler_check(tuples, occ, report)
    return report, signs if report.ok else None


def from_pd(tuples: Iterable[Sequence[int]], free_loops: int = 0) -> Diagram:
    tuples = [tuple(int(x) for x in t) for t in tuples]
    report, signs = check_pd(tuples)
    if not report.ok:
        raise DiagramError(str(report))
    return Diagram(tuple(Crossing(*t, s) for t, s in zip(tuples, signs)), free_loops)


def validate(d: Diagram) -> ValidationReport:
    report = ValidationReport()
    tuples = [cr.labels for cr in d.crossings]
    for i, cr in enumerate(d.crossings):
        if cr.sign not in (1, -1):
            report.add(f"crossing {i} has sign {cr.sign}", i)
    occ = _check_pairing(tuples, report)
    if not report.ok:
        return report
    for label, places in sorted(occ.items()):
        ins = sum(d.crossings[i].incoming(s) for i, s in places)
        if ins != 1:
            report.add(f"arc {label} has {ins} incoming ends", places[0][0])
    if report.ok:
        _euler_check(tuples, occ, report)
    return report


# ---------------------------------------------------------------------------
# traversal


def _incoming_place(d: Diagram, occ, label):
    for i, s in occ[label]:
        if d.crossings[i].incoming(s):
            return i, s
    raise DiagramError(f"arc {label} has no incoming end")


def next_arc(d: Diagram, label: int, occ=None) -> int:
    occ = occ or _occurrences([cr.labels for cr in d.crossings])
    i, s = _incoming_place(d, occ, label)
    return d.crossings[i].labels[(s + 2) % 4]


def components(d: Diagram) -> list[tuple[int, ...]]:
    """Arc labels of each component in traversal order.

    Components are indexed by their smallest arc label and each traversal
    starts there; free loops follow as empty tuples.
    """
    occ = _occurrences([cr.labels for cr in d.crossings])
    succ = {}
    for label in occ:
        i, s = _incoming_place(d, occ, label)
        succ[label] = d.crossings[i].labels[(s + 2) % 4]
    seen = set()
    comps = []
    for start in sorted(occ):
        if start in seen:
            continue
        comp = []
        x = start
        while x not in seen:
            seen.add(x)
            comp.append(x)
            x = succ[x]
        comps.append(tuple(comp))
    comps.extend(() for _ in range(d.free_loops))
    return comps


def component_map(d: Diagram) -> dict[int, int]:
    return {x: k for k, comp in enumerate(components(d)) for x in comp}


def num_components(d: Diagram) -> int:
    return len(components(d))


def strand_components(d: Diagram, c: int, cmap=None) -> tuple[int, int]:
    """(under component, over component) at crossing ``c``."""
    cr = d.crossing(c)
    cmap = cmap or component_map(d)
    return cmap[cr.a], cmap[cr.b]


def crossing_sign(d: Diagram, c: int) -> int:
    return d.crossing(c).sign


def is_self_crossing(d: Diagram, c: int) -> bool:
    under, over = strand_components(d, c)
    return under == over


def pieces(d: Diagram) -> list[list[int]]:
    """Crossing indices of each connected piece of the underlying 4-valent graph."""
    n = len(d.crossings)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for places in _occurrences([cr.labels for cr in d.crossings]).values():
        parent[find(places[0][0])] = find(places[-1][0])
    groups = defaultdict(list)
    for i in range(n):
        groups[find(i)].append(i)
    return sorted(groups.values())


def is_visibly_split(d: Diagram) -> bool:
    return len(pieces(d)) + d.free_loops >= 2


# ---------------------------------------------------------------------------
# rewrites


def _find(parent, x):
    root = x
    while parent.get(root, root) != root:
        root = parent[root]
    while parent.get(x, x) != root:
        parent[x], x = root, parent[x]
    return root


def remove_crossings(d: Diagram, remove: Iterable[int], joins: Iterable[Iterable[int]] = ()) -> Diagram:
    """Delete crossings, splicing together the arcs named in each join group.

    A join group that no longer touches any crossing closes up into a free
    loop.  Labels of deleted crossings that are in no join group vanish.
    """
    remove = set(remove)
    parent: dict[int, int] = {}
    joined = set()
    for group in joins:
        group = list(group)
        joined.update(group)
        for x in group[1:]:
            ra, rb = _find(parent, group[0]), _find(parent, x)
            if ra != rb:
                lo, hi = min(ra, rb), max(ra, rb)
                parent[hi] = lo
                parent.setdefault(lo, lo)
    kept = [cr for i, cr in enumerate(d.crossings) if i not in remove]
    rep = lambda x: _find(parent, x) if x in parent else x
    new = tuple(cr.relabel(rep) for cr in kept)
    used = {x for cr in new for x in cr.labels}
    closed = {rep(x) for x in joined} - used
    return Diagram(new, d.free_loops + len(closed))


def crossing_change(d: Diagram, c: int) -> Diagram:
    cr = d.crossing(c)
    crossings = list(d.crossings)
    crossings[c] = cr.changed()
    return Diagram(tuple(crossings), d.free_loops)


def mirror(d: Diagram) -> Diagram:
    return Diagram(tuple(cr.changed() for cr in d.crossings), d.free_loops)


def smooth(d: Diagram, c: int) -> Diagram:
    """Oriented smoothing at crossing ``c``."""
    cr = d.crossing(c)
    a, b, cc, dd = cr.labels
    if cr.sign > 0:
        joins = [(a, b), (dd, cc)]
    else:
        joins = [(a, dd), (b, cc)]
    return remove_crossings(d, [c], joins)


def delete_component(d: Diagram, k: int) -> Diagram:
    """Erase component ``k``; other strands passing it are spliced through."""
    comps = components(d)
    if not 0 <= k < len(comps):
        raise DiagramError(f"no component {k}")
    if not comps[k]:
        return Diagram(d.crossings, d.free_loops - 1)
    mine = set(comps[k])
    remove, joins = [], []
    for i, cr in enumerate(d.crossings):
        under_in, over_in = cr.a in mine, cr.b in mine
        if under_in or over_in:
            remove.append(i)
            if not under_in:
                joins.append((cr.a, cr.c))
            elif not over_in:
                joins.append((cr.b, cr.d))
    return remove_crossings(d, remove, joins)


def disjoint_union(a: Diagram, b: Diagram) -> Diagram:
    off = a.max_label()
    shifted = tuple(cr.relabel(lambda x: x + off) for cr in b.crossings)
    return Diagram(a.crossings + shifted, a.free_loops + b.free_loops)


def faces(d: Diagram) -> list[list[tuple[int, int]]]:
    """Faces as cycles of darts ``(crossing, slot)``; a dart leaves along its slot."""
    occ = _occurrences([cr.labels for cr in d.crossings])
    seen = set()
    out = []
    for i in range(len(d.crossings)):
        for s in range(4):
            if (i, s) in seen:
                continue
            cycle = []
            dart = (i, s)
            while dart not in seen:
                seen.add(dart)
                cycle.append(dart)
                j, t = _other(occ, d.crossings[dart[0]].labels[dart[1]], dart)
                dart = (j, (t + 1) % 4)
            out.append(cycle)
    return out


def _find_r1(d: Diagram):
    for i, cr in enumerate(d.crossings):
        L = cr.labels
        for s in range(4):
            if L[s] == L[(s + 1) % 4]:
                return i
    return None


def _find_r2(d: Diagram):
    occ = _occurrences([cr.labels for cr in d.crossings])
    for face in faces(d):
        if len(face) != 2:
            continue
        (x, s), (y, t1) = face
        if x == y:
            continue
        t = (t1 - 1) % 4
        if s % 2 != t % 2:
            continue
        X, Y = d.crossings[x].labels, d.crossings[y].labels
        e1, e2 = X[s], Y[t1]
        if _other(occ, e1, (x, s)) != (y, t):
            continue
        joins = [
            (X[(s + 2) % 4], e1, Y[(t + 2) % 4]),
            (Y[(t1 + 2) % 4], e2, X[(s + 1) % 4]),
        ]
        return (x, y), joins
    return None


def reduce_r1(d: Diagram, c: int) -> Diagram:
    return remove_crossings(d, [c], [d.crossing(c).labels])


def simplify(d: Diagram) -> Diagram:
    """Greedily apply crossing-reducing Reidemeister I and II moves."""
    while True:
        i = _find_r1(d)
        if i is not None:
            d = reduce_r1(d, i)
            continue
        hit = _find_r2(d)
        if hit is None:
            return d
        pair, joins = hit
        d = remove_crossings(d, pair, joins)


# ---------------------------------------------------------------------------
# labelling


def canonical_form(d: Diagram, sort: bool = True) -> Diagram:
    """Relabel arcs 1..2n consecutively along each component.

    Crossings are sorted by their incoming under-arc unless ``sort`` is
    false, in which case crossing ids are kept.  Components that
    never pass under are labelled last, starting at their incoming arc at
    the first crossing they meet, so that :func:`orient` recovers their
    direction from the labels alone.
    """
    comps = [c for c in components(d) if c]
    under_labels = {cr.a for cr in d.crossings} | {cr.c for cr in d.crossings}
    regular = [c for c in comps if under_labels.intersection(c)]
    over_only = [c for c in comps if not under_labels.intersection(c)]
    new = {}
    nxt = 1
    for comp in regular:
        for x in comp:
            new[x] = nxt
            nxt += 1
    order = list(range(len(d.crossings)))
    if sort:
        order.sort(key=lambda i: new[d.crossings[i].a])
    for comp in over_only:
        members = set(comp)
        for i in order:
            cr = d.crossings[i]
            if cr.b in members:
                start = cr.d if cr.sign > 0 else cr.b
                break
        k = comp.index(start)
        for x in comp[k:] + comp[:k]:
            new[x] = nxt
            nxt += 1
    crossings = tuple(d.crossings[i].relabel(new.__getitem__) for i in order)
    return Diagram(crossings, d.free_loops)


def diagram_key(d: Diagram) -> tuple:
    c = canonical_form(d)
    return (c.crossings, c.free_loops)


def isomorphic(d1: Diagram, d2: Diagram) -> bool:
    """True when the diagrams agree up to arc relabelling and crossing order."""
    if len(d1.crossings) != len(d2.crossings) or d1.free_loops != d2.free_loops:
        return False
    if sorted(cr.sign for cr in d1.crossings) != sorted(cr.sign for cr in d2.crossings):
        return False
    occ1 = _occurrences([cr.labels for cr in d1.crossings])
    occ2 = _occurrences([cr.labels for cr in d2.crossings])
    piece_of2 = {i: k for k, p in enumerate(pieces(d2)) for i in p}
    sizes2 = defaultdict(int)
    for k in piece_of2.values():
        sizes2[k] += 1
    used2 = set()

    def try_map(i0, j0):
        cmap = {i0: j0}
        back = {j0}
        lmap, lback = {}, {}
        stack = [i0]
        while stack:
            i = stack.pop()
            j = cmap[i]
            c1, c2 = d1.crossings[i], d2.crossings[j]
            if c1.sign != c2.sign:
                return None
            for s in range(4):
                x, y = c1.labels[s], c2.labels[s]
                if lmap.get(x, y) != y or lback.get(y, x) != x:
                    return None
                if x in lmap:
                    continue
                lmap[x], lback[y] = y, x
                i2, s2 = _other(occ1, x, (i, s))
                j2, t2 = _other(occ2, y, (j, s))
                if s2 != t2:
                    return None
                if i2 in cmap:
                    if cmap[i2] != j2:
                        return None
                elif j2 in back or j2 in used2:
                    return None
                else:
                    cmap[i2] = j2
                    back.add(j2)
                    stack.append(i2)
        return cmap

    for piece in pieces(d1):
        for j0 in range(len(d2.crossings)):
            if j0 in used2:
                continue
            cmap = try_map(piece[0], j0)
            if cmap and len(cmap) == len(piece) == sizes2[piece_of2[j0]]:
                used2.update(cmap.values())
                break
        else:
            return False
    return True
