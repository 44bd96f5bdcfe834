"""Property suites run by ``lassolink verify``."""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import ENTRIES
from .diagram import is_self_crossing
from .laurent import conway_to_alexander, eq_up_to_units, scale_by_monomial, LaurentPoly
from .moves import lasso
from .skein import conway
from .splitting import linking_matrix, split_diagram_upper, split_lower, warp_linking_degree

T_MINUS_1_CUBED = LaurentPoly({0: -1, 1: 3, 2: -3, 3: 1})


@dataclass
class Check:
    suite: str
    case: str
    ok: bool
    detail: str = ""


def lasso_sign(before: LaurentPoly, after: LaurentPoly) -> int | None:
    """+1 or -1 if ``after == ±z^3 * before``, else None (0 when both vanish)."""
    if before.is_zero():
        return 0 if after.is_zero() else None
    for sign in (1, -1):
        if after == scale_by_monomial(before, sign, 3):
            return sign
    return None


def grid(max_crossings: int = 9):
    for e in ENTRIES:
        if e.max_crossings > max_crossings:
            continue
        d = e.diagram()
        for c in range(len(d.crossings)):
            yield e.name, d, c


def lasso_z3_suite(max_crossings: int = 9) -> list[Check]:
    out = []
    for name, d, c in grid(max_crossings):
        sign = lasso_sign(conway(d), conway(lasso(d, c)[0]))
        detail = "no z^3 relation" if sign is None else f"sign {sign:+d}" if sign else "both zero"
        out.append(Check("lasso-z3", f"{name}@{c}", sign is not None, detail))
    return out


def alexander_suite(max_crossings: int = 9) -> list[Check]:
    out = []
    for name, d, c in grid(max_crossings):
        before = conway_to_alexander(conway(d))
        after = conway_to_alexander(conway(lasso(d, c)[0]))
        ok = eq_up_to_units(after, T_MINUS_1_CUBED * before)
        out.append(Check("alexander-shadow", f"{name}@{c}", ok))
    return out


def neutrality_suite(max_crossings: int = 9) -> list[Check]:
    out = []
    for name, d, c in grid(max_crossings):
        before = linking_matrix(d)
        after_d, made = lasso(d, c)
        after = linking_matrix(after_d)
        ok = all(after[made, j] == 0 for j in range(after.size))
        # pre-existing components keep their indices under lassoing
        n = before.size
        diffs = [
            after[i, j] - before[i, j] for i in range(n) for j in range(i + 1, n) if after[i, j] != before[i, j]
        ]
        if is_self_crossing(d, c):
            ok = ok and not diffs
        else:
            ok = ok and len(diffs) == 1 and abs(diffs[0]) == 1
        out.append(Check("linking-neutrality", f"{name}@{c}", ok))
    return out


def sandwich_suite(budget: int = 3) -> list[Check]:
    out = []
    for e in ENTRIES:
        if e.n_components < 2:
            continue
        d = e.diagram()
        lo = split_lower(d).value
        up = split_diagram_upper(d, budget).value
        ld = warp_linking_degree(d)
        out.append(Check("sandwich", e.name, lo <= up <= ld, f"{lo} <= {up} <= {ld}"))
    return out


SUITES = {
    "lasso-z3": lasso_z3_suite,
    "alexander-shadow": alexander_suite,
    "linking-neutrality": neutrality_suite,
    "sandwich": sandwich_suite,
}


def run_all(budget: int = 3) -> list[Check]:
    checks = []
    for name, suite in SUITES.items():
        checks += suite(budget) if name == "sandwich" else suite()
    return checks
