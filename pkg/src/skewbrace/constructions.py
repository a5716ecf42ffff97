"""The theta-twist digroup and exhaustive enumeration of small skew braces."""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

from . import config
from .braces import Digroup, SkewBrace, Verdict, check_brace_axiom, make_skew_brace
from .commutators import huq_commute, smith_connector_exists
from .errors import BadSpec, OrderCapExceeded
from .groups import (
    FiniteGroup,
    automorphisms,
    cyclic_group,
    direct_product,
    is_homomorphism,
    make_group,
    relabel_table,
)
from .ideals import Congruence, is_congruence

# -- theta twist ---------------------------------------------------------------


@dataclass(frozen=True)
class ThetaTwistSpec:
    """Abelian base group (written additively) and an element a with a != -a."""

    base: FiniteGroup
    a: int

    def __post_init__(self):
        if not self.base.is_abelian():
            raise BadSpec("base group is not abelian")
        if not 0 <= self.a < self.base.order:
            raise BadSpec(f"a = {self.a} outside the base group")
        if self.base.inverse[self.a] == self.a:
            raise BadSpec(f"a = {self.a} is its own inverse")

    @classmethod
    def cyclic(cls, m: int, a: int) -> "ThetaTwistSpec":
        return cls(cyclic_group(m), a)

    @property
    def m(self) -> int:
        return self.base.order

    def pair(self, x: int, z: int) -> int:
        return x * self.m + z

    def unpair(self, k: int) -> tuple[int, int]:
        return divmod(k, self.m)


def theta(spec: ThetaTwistSpec) -> tuple[int, ...]:
    """The involution swapping (a, a) with (-a, a) on the flattened pairs."""
    m = spec.m
    perm = list(range(m * m))
    u, v = spec.pair(spec.a, spec.a), spec.pair(spec.base.inverse[spec.a], spec.a)
    perm[u], perm[v] = v, u
    return tuple(perm)


def theta_twist_digroup(spec: ThetaTwistSpec) -> Digroup:
    """A x A with componentwise + and the theta-conjugated +."""
    plus = direct_product(spec.base, spec.base)
    th = theta(spec)
    n = plus.order
    circ = [[th[plus.table[th[u]][th[v]]] for v in range(n)] for u in range(n)]
    return Digroup(plus, make_group(circ))


@dataclass(frozen=True)
class FamilyRow:
    """One triple (x, a) R (a, a) R (x2, a) of the closed-form witness family."""

    x: int
    x2: int
    triple: tuple[int, int, int]
    star_value: tuple[int, int]
    circ_value: tuple[int, int]
    predicted_circ: tuple[int, int]

    @property
    def differs(self) -> bool:
        return self.star_value != self.circ_value

    @property
    def matches_prediction(self) -> bool:
        """circ value equals (x + a + x2, a), which differs from (x - a + x2, a)."""
        return self.circ_value == self.predicted_circ and self.differs


@dataclass(frozen=True)
class CounterexampleReport:
    spec: ThetaTwistSpec
    digroup: Digroup = field(repr=False)
    projection: tuple[int, ...] = field(repr=False)
    kernel: tuple[int, ...]
    kernel_congruence: Congruence = field(repr=False)
    is_brace: bool
    huq_commute: bool
    smith: Verdict
    family: tuple[FamilyRow, ...]

    @property
    def family_witnesses(self) -> list[FamilyRow]:
        return [row for row in self.family if row.matches_prediction]

    @property
    def separates(self) -> bool:
        """Huq commutation without a Smith connector."""
        return self.huq_commute and not self.smith.ok


def counterexample_report(spec: ThetaTwistSpec) -> CounterexampleReport:
    """Test Huq against Smith on the kernel of the second projection."""
    d = theta_twist_digroup(spec)
    m, a = spec.m, spec.a
    add = spec.base
    neg = add.inverse
    proj = tuple(k % m for k in range(m * m))
    target = Digroup(add, add)
    for g, h in ((d.star, target.star), (d.circ, target.circ)):
        if not is_homomorphism(g, h, proj):
            raise AssertionError("second projection is not a digroup morphism")
    kernel = tuple(k for k in range(m * m) if proj[k] == 0)
    if kernel != tuple(spec.pair(x, 0) for x in range(m)):
        raise AssertionError("kernel of the projection is not A x {0}")
    rel = Congruence(proj)
    if not is_congruence(d, rel):
        raise AssertionError("kernel relation is not a congruence")

    star, circ = d.star, d.circ
    rows = []
    for x in range(m):
        for x2 in range(m):
            if x in (a, neg[a]) or x2 in (a, neg[a]):
                continue
            t = (spec.pair(x, a), spec.pair(a, a), spec.pair(x2, a))
            sv = star.prod(t[0], star.inv(t[1]), t[2])
            cv = circ.prod(t[0], circ.inv(t[1]), t[2])
            pred = (add.prod(x, a, x2), a)
            rows.append(FamilyRow(x, x2, t, spec.unpair(sv), spec.unpair(cv), pred))

    return CounterexampleReport(
        spec=spec,
        digroup=d,
        projection=proj,
        kernel=kernel,
        kernel_congruence=rel,
        is_brace=check_brace_axiom(d).ok,
        huq_commute=huq_commute(d, kernel, kernel),
        smith=smith_connector_exists(d, rel, rel),
        family=tuple(rows),
    )


# -- enumeration ---------------------------------------------------------------


def _check_enum_order(n):
    limit = config.enumerate_cap()
    if n < 1 or n > limit:
        raise OrderCapExceeded(n, limit, "brace enumeration")


@lru_cache(maxsize=None)
def labelled_group_tables(n: int) -> tuple:
    """Every group table on 0..n-1 with identity 0, sorted.

    Depth-first search over cells with Latin-square bookkeeping and
    associativity propagated to a fixed point after each choice.
    """
    if n == 1:
        return (((0,),),)
    cells = [[-1] * n for _ in range(n)]
    for k in range(n):
        cells[0][k] = k
        cells[k][0] = k
    found = set()
    triples = list(itertools.product(range(1, n), repeat=3))

    def consistent(t, x, y, v):
        if t[x][y] == v:
            return True
        if t[x][y] != -1:
            return False
        if v in t[x] or any(t[r][y] == v for r in range(n)):
            return False
        return True

    def propagate(t):
        changed = True
        while changed:
            changed = False
            for a, b, c in triples:
                ab, bc = t[a][b], t[b][c]
                if ab == -1 or bc == -1:
                    continue
                lhs, rhs = t[ab][c], t[a][bc]
                if lhs != -1 and rhs != -1:
                    if lhs != rhs:
                        return False
                elif lhs != -1:
                    if not consistent(t, a, bc, lhs):
                        return False
                    t[a][bc] = lhs
                    changed = True
                elif rhs != -1:
                    if not consistent(t, ab, c, rhs):
                        return False
                    t[ab][c] = rhs
                    changed = True
        return True

    def search(t):
        best = None
        for x in range(1, n):
            row = t[x]
            for y in range(1, n):
                if row[y] == -1:
                    opts = [
                        v for v in range(n)
                        if v not in row and all(t[r][y] != v for r in range(n))
                    ]
                    if best is None or len(opts) < len(best[2]):
                        best = (x, y, opts)
        if best is None:
            found.add(tuple(tuple(r) for r in t))
            return
        x, y, opts = best
        for v in opts:
            trial = [list(r) for r in t]
            trial[x][y] = v
            if propagate(trial):
                search(trial)

    search(cells)
    for t in found:
        make_group(t)
    return tuple(sorted(found))


def _perms_fixing_zero(n):
    for rest in itertools.permutations(range(1, n)):
        yield (0,) + rest


@lru_cache(maxsize=None)
def group_classes(n: int) -> tuple:
    """Isomorphism classes of groups of order n.

    Each entry is (canonical table, orbit size), the canonical table being
    the lexicographically least relabelling fixing 0.
    """
    pool = set(labelled_group_tables(n))
    perms = list(_perms_fixing_zero(n))
    out = []
    while pool:
        t = min(pool)
        orbit = {relabel_table(t, p) for p in perms}
        if not orbit <= pool:
            raise AssertionError("relabelled group table missing from the search")
        pool -= orbit
        out.append((min(orbit), len(orbit)))
    return tuple(sorted(out))


@lru_cache(maxsize=4096)
def _star_stabilizer(star: tuple) -> tuple:
    """Canonical form of ``star`` and every relabelling that achieves it."""
    n = len(star)
    best, perms = None, []
    for p in _perms_fixing_zero(n):
        r = relabel_table(star, p)
        if best is None or r < best:
            best, perms = r, [p]
        elif r == best:
            perms.append(p)
    return best, tuple(perms)


def canonical_form(star, circ) -> tuple:
    """Lexicographically least (star, circ) over relabellings fixing 0."""
    star = tuple(tuple(r) for r in star)
    circ = tuple(tuple(r) for r in circ)
    cstar, perms = _star_stabilizer(star)
    return cstar, min(relabel_table(circ, p) for p in perms)


def brace_key(b) -> tuple:
    return (b.star.table, b.circ.table)


def _braces_by_tables(n):
    """Raw search: every (representative star, labelled circ) pair satisfying the axiom."""
    circs = [make_group(t) for t in labelled_group_tables(n)]
    out = []
    for star_table, _ in group_classes(n):
        star = make_group(star_table)
        for circ in circs:
            d = Digroup(star, circ)
            if check_brace_axiom(d):
                out.append(make_skew_brace(d))
    return out


def _lambda_maps(star: FiniteGroup):
    """Every lambda: A -> Aut(A, *) with lambda_{a o b} = lambda_a lambda_b,
    where a o b = a * lambda_a(b)."""
    n = star.order
    st = star.table
    auts = automorphisms(star)
    ident = tuple(range(n))
    results = []

    def propagate(lam, queue):
        while queue:
            a = queue.popleft()
            for b in range(n):
                if lam[b] is None:
                    continue
                for x, y in ((a, b), (b, a)):
                    lx, ly = lam[x], lam[y]
                    c = st[x][lx[y]]
                    comp = tuple(lx[ly[u]] for u in range(n))
                    if lam[c] is None:
                        lam[c] = comp
                        queue.append(c)
                    elif lam[c] != comp:
                        return False
        return True

    def search(lam):
        try:
            a = lam.index(None)
        except ValueError:
            results.append(tuple(lam))
            return
        for phi in auts:
            trial = list(lam)
            trial[a] = phi
            if propagate(trial, deque([a])):
                search(trial)

    start = [None] * n
    start[0] = ident
    if propagate(start, deque([0])):
        search(start)
    return results


def _braces_by_lambda(n):
    """Second strategy: fix (A, *) and search lambda maps into Aut(A, *)."""
    out = []
    for star_table, _ in group_classes(n):
        star = make_group(star_table)
        st = star.table
        for lam in _lambda_maps(star):
            circ = [[st[a][lam[a][b]] for b in range(n)] for a in range(n)]
            b = make_skew_brace(Digroup(star, make_group(circ)))
            if b.lam_table != lam:
                raise AssertionError("lambda table does not round-trip")
            out.append(b)
    return out


@lru_cache(maxsize=None)
def _enumerate(n, up_to_iso, method):
    if method == "tables":
        braces = _braces_by_tables(n)
    elif method == "lambda":
        braces = _braces_by_lambda(n)
    else:
        raise ValueError(f"unknown method {method!r}")
    braces.sort(key=brace_key)
    if not up_to_iso:
        return tuple(braces)
    canon = sorted({canonical_form(b.star.table, b.circ.table) for b in braces})
    by_key = {brace_key(b): b for b in braces}
    return tuple(by_key[c] for c in canon)


def enumerate_braces(n: int, up_to_iso: bool = True, method: str = "tables") -> list[SkewBrace]:
    """Skew braces of order n with identity 0.

    The additive group runs over one canonical table per isomorphism class
    and the circle group over every labelled group table. With
    ``up_to_iso`` one brace per isomorphism class is kept, namely its
    canonical form (which always has a canonical additive table, so it is
    a member of the full list).

    ``method="lambda"`` runs an independent search over lambda maps and
    must give the same answer.
    """
    _check_enum_order(n)
    return list(_enumerate(n, up_to_iso, method))


def count_labelled_groups_by_classes(n: int) -> int:
    """Sum over classes of (n-1)!/|Aut| (orbit-stabilizer cross-check)."""
    total = 0
    fact = 1
    for k in range(2, n):
        fact *= k
    for table, _ in group_classes(n):
        total += fact // len(automorphisms(make_group(table)))
    return total
