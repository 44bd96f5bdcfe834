"""Lassoing, component-lassoing and anti-lassoing, with a replayable log.

Lassoing at a crossing changes the crossing and threads a small new
circle around it.  Seen from the crossing, the circle passes over both
ends of the original under-strand and under both ends of the original
over-strand.  Together with the switched crossing this puts the three
local strands in cyclic over/under order, so the circle cannot be slid
off; the other alternation phase (or an unswitched crossing) would leave
a layered picture that unhooks.

Local picture at crossing ``(a, b, c, d)`` with arms south, east, north,
west.  Inner arm segments get fresh labels ``a', b', c', d'`` and the
circle, oriented counterclockwise, gets ``l1..l4``::

                    c
                    |
          +---l3----Pc----l2---+
          |         |c'        |
          v         |          ^
    d ----Pd--d'----X----b'----Pb---- b
          |         |          |
          v         |a'        ^
          +---l4----Pa----l1---+
                    |
                    a
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .diagram import (
    Crossing,
    Diagram,
    DiagramError,
    component_map,
    crossing_change,
    delete_component,
    isomorphic,
    is_self_crossing,
    validate,
)
from .pdparse import parse_pd, serialize_pd


class MoveError(ValueError):
    """A move's precondition does not hold."""


class NotSelfCrossing(MoveError):
    pass


class EntangledLasso(MoveError):
    pass


class LogError(ValueError):
    pass


def lasso(d: Diagram, c: int) -> tuple[Diagram, int]:
    """Lasso crossing ``c``; returns the new diagram and the lasso's component index."""
    cr = d.crossing(c)
    a, b, cc, dd = cr.labels
    m = d.max_label()
    a2, b2, c2, d2 = m + 1, m + 2, m + 3, m + 4
    l1, l2, l3, l4 = m + 5, m + 6, m + 7, m + 8
    if cr.sign > 0:
        center = Crossing(d2, a2, b2, c2, -1)
    else:
        center = Crossing(b2, c2, d2, a2, 1)
    ring = (
        Crossing(a, l1, a2, l4, 1),
        Crossing(l1, b, l2, b2, cr.sign),
        Crossing(c2, l2, cc, l3, -1),
        Crossing(l3, dd, l4, d2, -cr.sign),
    )
    crossings = list(d.crossings)
    crossings[c] = center
    out = Diagram(tuple(crossings) + ring, d.free_loops)
    return out, component_map(out)[l1]


def component_lasso(d: Diagram, c: int) -> tuple[Diagram, int]:
    """Lasso at a self-crossing; inter-component crossings are rejected."""
    if not is_self_crossing(d, c):
        raise NotSelfCrossing(f"crossing {c} joins two different components")
    return lasso(d, c)


def unlasso(d: Diagram, center: int, ring_start: int) -> Diagram:
    """Inverse surgery: erase the ring whose first crossing is ``ring_start``
    and switch ``center`` back.  ``center`` must precede the ring."""
    ring_label = d.crossing(ring_start).b
    k = component_map(d)[ring_label]
    stripped = delete_component(d, k)
    return crossing_change(stripped, center)


@dataclass(frozen=True)
class Step:
    kind: str  # "lasso" or "change"
    crossing: int

    def __post_init__(self):
        if self.kind not in ("lasso", "change"):
            raise LogError(f"unknown step kind {self.kind!r}")


@dataclass(frozen=True)
class StepRecord:
    step: Step
    crossings_before: int
    created: int | None


@dataclass(frozen=True)
class TransformLog:
    base: Diagram
    steps: tuple[Step, ...] = ()
    base_name: str | None = field(default=None, compare=False)

    @cached_property
    def _replayed(self) -> tuple[Diagram, tuple[StepRecord, ...]]:
        d = self.base
        records = []
        for step in self.steps:
            n = len(d.crossings)
            try:
                if step.kind == "lasso":
                    d, made = lasso(d, step.crossing)
                else:
                    d, made = crossing_change(d, step.crossing), None
            except DiagramError as exc:
                raise LogError(f"cannot replay {step.kind} {step.crossing}: {exc}") from exc
            records.append(StepRecord(step, n, made))
        return d, tuple(records)

    @property
    def current(self) -> Diagram:
        return self._replayed[0]

    @property
    def records(self) -> tuple[StepRecord, ...]:
        return self._replayed[1]

    @property
    def r(self) -> int:
        return sum(s.kind == "lasso" for s in self.steps)

    @property
    def changes(self) -> int:
        return sum(s.kind == "change" for s in self.steps)

    @property
    def s(self) -> int:
        from .diagram import num_components

        return num_components(self.base)

    def append(self, kind: str, c: int) -> "TransformLog":
        self.current.crossing(c)
        new = TransformLog(self.base, self.steps + (Step(kind, c),), self.base_name)
        new.current  # replay now so bad ids fail here
        return new

    def lasso(self, c: int) -> "TransformLog":
        return self.append("lasso", c)

    def component_lasso(self, c: int) -> "TransformLog":
        if not is_self_crossing(self.current, c):
            raise NotSelfCrossing(f"crossing {c} joins two different components")
        return self.append("lasso", c)

    def change(self, c: int) -> "TransformLog":
        return self.append("change", c)

    def to_text(self) -> str:
        if self.base_name is not None:
            lines = [f"base catalog {self.base_name}"]
        else:
            lines = [f"base pd {serialize_pd(self.base, keep_order=True)}"]
        lines += [f"{s.kind} {s.crossing}" for s in self.steps]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "TransformLog":
        from .catalog import catalog

        base, name, steps = None, None, []
        for n, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split(None, 2)
            if parts[0] == "base":
                if base is not None or len(parts) != 3 or parts[1] not in ("catalog", "pd"):
                    raise LogError(f"line {n}: bad base header {raw!r}")
                if parts[1] == "catalog":
                    name = parts[2].strip()
                    base = catalog(name)
                else:
                    base = parse_pd(parts[2])
                continue
            if base is None:
                raise LogError(f"line {n}: step before base header")
            if len(parts) != 2 or not parts[1].lstrip("-").isdigit():
                raise LogError(f"line {n}: bad step {raw!r}")
            steps.append(Step(parts[0], int(parts[1])))
        if base is None:
            raise LogError("log has no base header")
        log = cls(base, tuple(steps), name)
        log.current
        return log


def replay(log: TransformLog) -> Diagram:
    return log.current


def anti_lasso(log: TransformLog, index: int) -> TransformLog:
    """Undo lasso step ``index``: its ring is removed and its crossing switched back.

    Later steps may not touch the ring or its centre crossing.  Crossing
    ids of later steps are shifted past the removed ring.
    """
    if not 0 <= index < len(log.steps):
        raise MoveError(f"no step {index}")
    rec = log.records[index]
    if rec.step.kind != "lasso":
        raise MoveError(f"step {index} is a {rec.step.kind}, not a lasso")
    n0 = rec.crossings_before
    center = rec.step.crossing
    ring = set(range(n0, n0 + 4))
    steps = list(log.steps[:index])
    for later in log.steps[index + 1:]:
        if later.crossing in ring or later.crossing == center:
            raise EntangledLasso(f"step {index}'s lasso is touched by a later {later.kind} {later.crossing}")
        shift = 4 if later.crossing >= n0 + 4 else 0
        steps.append(Step(later.kind, later.crossing - shift))
    out = TransformLog(log.base, tuple(steps), log.base_name)
    surgery = unlasso(log.current, center, n0)
    if not validate(surgery).ok or not isomorphic(surgery, out.current):
        raise AssertionError("anti-lasso surgery disagrees with replay")
    return out
