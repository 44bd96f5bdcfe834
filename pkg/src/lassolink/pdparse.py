"""Text format for PD codes.

Grammar (whitespace-insensitive)::

    PD   ::= item (';' item)*
    item ::= 'X[' n ',' n ',' n ',' n ']' | 'O'

``O`` is a crossingless unknotted component.  Files hold one PD expression
per line; ``#`` starts a comment.
"""

from __future__ import annotations

import re

from .diagram import Diagram, Issue, ValidationReport, canonical_form, check_pd, Crossing


class PDSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class PDValidationError(ValueError):
    def __init__(self, report: ValidationReport, position: int):
        super().__init__(f"invalid diagram at position {position}: {report}")
        self.report = report
        self.position = position


_WS = re.compile(r"\s*")
_INT = re.compile(r"\d+")


def _tokenize_items(text: str):
    """Yield (start offset, tuple | None) for each item; None means a free loop."""
    pos = _WS.match(text, 0).end()
    if pos == len(text):
        raise PDSyntaxError("empty PD code", pos)
    while True:
        start = pos
        if text.startswith("O", pos):
            yield start, None
            pos += 1
        elif text.startswith("X", pos):
            pos = _WS.match(text, pos + 1).end()
            if not text.startswith("[", pos):
                raise PDSyntaxError("expected '['", pos)
            pos += 1
            nums = []
            while True:
                pos = _WS.match(text, pos).end()
                m = _INT.match(text, pos)
                if not m:
                    raise PDSyntaxError("expected a non-negative integer", pos)
                nums.append(int(m.group()))
                pos = _WS.match(text, m.end()).end()
                if text.startswith(",", pos):
                    if len(nums) == 4:
                        raise PDSyntaxError("crossing has more than 4 arcs", pos)
                    pos += 1
                    continue
                if text.startswith("]", pos):
                    if len(nums) != 4:
                        raise PDSyntaxError(f"crossing has {len(nums)} arcs, expected 4", pos)
                    pos += 1
                    break
                raise PDSyntaxError("expected ',' or ']'", pos)
            yield start, tuple(nums)
        else:
            raise PDSyntaxError("expected 'X[' or 'O'", pos)
        pos = _WS.match(text, pos).end()
        if pos == len(text):
            return
        if text[pos] != ";":
            raise PDSyntaxError("expected ';'", pos)
        pos = _WS.match(text, pos + 1).end()


def parse_pd(text: str) -> Diagram:
    """Parse and validate one PD expression."""
    tuples, offsets, loops = [], [], 0
    for start, item in _tokenize_items(text):
        if item is None:
            loops += 1
        else:
            tuples.append(item)
            offsets.append(start)
    report, signs = check_pd(tuples)
    if not report.ok:
        first = next((i.crossing for i in report.issues if i.crossing is not None), None)
        raise PDValidationError(report, offsets[first] if first is not None else 0)
    return Diagram(tuple(Crossing(*t, s) for t, s in zip(tuples, signs)), loops)


def serialize_pd(d: Diagram, keep_order: bool = False) -> str:
    """Canonical text: arcs relabelled along components, crossings sorted
    by their incoming under-arc, free loops last.  With ``keep_order`` the
    crossings stay in place so that crossing ids survive a round trip."""
    c = canonical_form(d, sort=not keep_order)
    items = ["X[{},{},{},{}]".format(*cr.labels) for cr in c.crossings]
    items += ["O"] * c.free_loops
    return ";".join(items)


def parse_pd_file(text: str) -> list[Diagram]:
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(parse_pd(line))
    return out


__all__ = ["PDSyntaxError", "PDValidationError", "parse_pd", "serialize_pd", "parse_pd_file", "Issue"]
