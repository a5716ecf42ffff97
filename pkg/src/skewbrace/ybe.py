"""Set-theoretic Yang-Baxter solutions attached to skew braces.

r(x, y) = (lambda_x(y), lambda_x(y)^-o o x o y), stored densely as
``r_table[x * n + y] = (first, second)``.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

from .braces import SkewBrace, Verdict


@dataclass(frozen=True)
class YbeSolutionReport:
    order: int
    r_table: tuple[tuple[int, int], ...]
    is_bijection: bool
    braid_holds: bool
    nondegenerate: bool
    witness: tuple | None = None

    def r(self, x: int, y: int) -> tuple[int, int]:
        return self.r_table[x * self.order + y]

    def first_table(self) -> list[list[int]]:
        n = self.order
        return [[self.r(x, y)[0] for y in range(n)] for x in range(n)]

    def second_table(self) -> list[list[int]]:
        n = self.order
        return [[self.r(x, y)[1] for y in range(n)] for x in range(n)]

    @property
    def ok(self) -> bool:
        return self.is_bijection and self.braid_holds and self.nondegenerate


def report_from_table(n: int, r_table: Sequence[tuple[int, int]]) -> YbeSolutionReport:
    """Wrap an arbitrary map on pairs and run every check on it."""
    table = tuple((int(a), int(b)) for a, b in r_table)
    if len(table) != n * n:
        raise ValueError(f"expected {n * n} pairs, got {len(table)}")
    bij = len(set(table)) == n * n
    draft = YbeSolutionReport(n, table, bij, False, False)
    braid = check_braid(draft)
    nondeg = check_nondegenerate(draft)
    witness = None
    if not bij:
        witness = ("not-bijective",)
    elif not braid:
        witness = ("braid",) + braid.witness
    elif not nondeg:
        witness = ("degenerate",) + nondeg.witness
    return replace(draft, braid_holds=braid.ok, nondegenerate=nondeg.ok, witness=witness)


def build_r(b: SkewBrace) -> YbeSolutionReport:
    n = b.order
    ct, ci, lam = b.circ.table, b.circ.inverse, b.lam_table
    table = []
    for x in range(n):
        for y in range(n):
            first = lam[x][y]
            table.append((first, ct[ct[ci[first]][x]][y]))
    return report_from_table(n, table)


def check_braid(report: YbeSolutionReport) -> Verdict:
    """(r x id)(id x r)(r x id) == (id x r)(r x id)(id x r) on all triples."""
    n = report.order
    r = report.r_table

    def r12(t):
        a, b = r[t[0] * n + t[1]]
        return (a, b, t[2])

    def r23(t):
        a, b = r[t[1] * n + t[2]]
        return (t[0], a, b)

    for x in range(n):
        for y in range(n):
            for z in range(n):
                t = (x, y, z)
                if r12(r23(r12(t))) != r23(r12(r23(t))):
                    return Verdict(False, t)
    return Verdict(True)


def check_nondegenerate(report: YbeSolutionReport) -> Verdict:
    """y -> first(r(x0, y)) and x -> second(r(x, y0)) are bijections."""
    n = report.order
    full = set(range(n))
    for x0 in range(n):
        if {report.r(x0, y)[0] for y in range(n)} != full:
            return Verdict(False, ("left", x0))
    for y0 in range(n):
        if {report.r(x, y0)[1] for x in range(n)} != full:
            return Verdict(False, ("right", y0))
    return Verdict(True)


def ybe_morphism_check(b1: SkewBrace, b2: SkewBrace, f: Sequence[int]) -> bool:
    """(f x f) r1 == r2 (f x f) on every pair."""
    r1, r2 = build_r(b1), build_r(b2)
    n = b1.order
    for x in range(n):
        for y in range(n):
            a, c = r1.r(x, y)
            if (f[a], f[c]) != r2.r(f[x], f[y]):
                return False
    return True


def flip_report(n: int) -> YbeSolutionReport:
    return report_from_table(n, [(y, x) for x in range(n) for y in range(n)])
