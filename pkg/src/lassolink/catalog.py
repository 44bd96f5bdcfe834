"""Named fixture links.

Knot PD codes follow the Rolfsen/Knot Atlas listings, except that ``3_1``
is stored right-handed (the mirror of the table entry).  ``hopf+``,
``3_1`` and ``borromean`` are closures of the braids s1^2, s1^3 and
(s1 s2^-1)^3.  ``7^2_6`` is the trefoil lassoed at one crossing, which is
how that link arises; any diagram with its invariants serves.

Each entry carries its expected component count, Conway polynomial and
linking matrix, and is checked against them the first time the catalog
is loaded.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .diagram import Diagram, components
from .laurent import LaurentPoly, parse_poly
from .pdparse import parse_pd


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    pd: str
    n_components: int
    conway: str
    linking: tuple[tuple[int, ...], ...]
    notes: tuple[str, ...] = field(default=())

    @property
    def expected_conway(self) -> LaurentPoly:
        return parse_poly(self.conway, "z")

    @property
    def max_crossings(self) -> int:
        return self.pd.count("X")

    def diagram(self) -> Diagram:
        return parse_pd(self.pd)


_Z2 = ((0, 0), (0, 0))
_Z3 = ((0, 0, 0), (0, 0, 0), (0, 0, 0))

ENTRIES = (
    CatalogEntry("unknot", "O", 1, "1", ((0,),)),
    CatalogEntry("unknot-kink", "X[1,1,2,2]", 1, "1", ((0,),)),
    CatalogEntry("unlink2", "O;O", 2, "0", _Z2),
    CatalogEntry("unlink3", "O;O;O", 3, "0", _Z3),
    CatalogEntry("hopf+", "X[2,3,1,4];X[3,2,4,1]", 2, "z", ((0, 1), (1, 0))),
    CatalogEntry("hopf-", "X[4,1,3,2];X[2,3,1,4]", 2, "-z", ((0, -1), (-1, 0))),
    CatalogEntry("3_1", "X[2,6,3,5];X[4,2,5,1];X[6,4,1,3]", 1, "1 + z^2", ((0,),)),
    CatalogEntry("4_1", "X[4,2,5,1];X[8,6,1,5];X[6,3,7,4];X[2,7,3,8]", 1, "1 - z^2", ((0,),)),
    CatalogEntry(
        "5_1", "X[1,6,2,7];X[3,8,4,9];X[5,10,6,1];X[7,2,8,3];X[9,4,10,5]", 1, "1 + 3*z^2 + z^4", ((0,),)
    ),
    CatalogEntry("5_2", "X[1,4,2,5];X[3,8,4,9];X[5,10,6,1];X[9,6,10,7];X[7,2,8,3]", 1, "1 + 2*z^2", ((0,),)),
    CatalogEntry("5^2_1", "X[6,1,7,2];X[10,7,5,8];X[4,5,1,6];X[2,10,3,9];X[8,4,9,3]", 2, "z^3", _Z2),
    CatalogEntry(
        "borromean",
        "X[2,9,3,10];X[4,12,1,11];X[5,2,6,1];X[7,3,8,4];X[10,7,11,6];X[12,8,9,5]",
        3,
        "z^4",
        _Z3,
    ),
    CatalogEntry(
        "7^2_6",
        "X[2,11,3,14];X[4,12,5,13];X[6,2,7,1];X[8,3,9,4];X[10,6,1,5];X[11,10,12,9];X[13,7,14,8]",
        2,
        "z^3 + z^5",
        _Z2,
        ("u(7^2_6)=2 (cited literature value for two-component unlinking numbers; not computed here)",),
    ),
)

ALIASES = {"whitehead": "5^2_1", "trefoil": "3_1", "0_1": "unknot"}

_BY_NAME = {e.name: e for e in ENTRIES}


class UnknownLink(KeyError):
    def __str__(self):
        return self.args[0]


def entry(name: str) -> CatalogEntry:
    key = ALIASES.get(name, name)
    if key not in _BY_NAME:
        raise UnknownLink(f"unknown catalog link {name!r}; available: {', '.join(names())}")
    return _BY_NAME[key]


def names() -> list[str]:
    return [e.name for e in ENTRIES]


def self_test(e: CatalogEntry) -> list[str]:
    """Mismatches between an entry's stored and computed invariants."""
    from .skein import conway
    from .splitting import linking_matrix

    d = e.diagram()
    problems = []
    if len(components(d)) != e.n_components:
        problems.append(f"{e.name}: {len(components(d))} components, expected {e.n_components}")
    got = conway(d)
    if got != e.expected_conway:
        problems.append(f"{e.name}: conway {got.format('z')}, expected {e.conway}")
    lk = linking_matrix(d).entries
    if lk != e.linking:
        problems.append(f"{e.name}: linking matrix {lk}, expected {e.linking}")
    return problems


@lru_cache(maxsize=None)
def _loaded() -> dict[str, Diagram]:
    problems = [p for e in ENTRIES for p in self_test(e)]
    if problems:
        raise RuntimeError("catalog self-test failed: " + "; ".join(problems))
    return {e.name: e.diagram() for e in ENTRIES}


def catalog(name: str) -> Diagram:
    return _loaded()[entry(name).name]


def knots() -> list[str]:
    return [e.name for e in ENTRIES if e.n_components == 1]
