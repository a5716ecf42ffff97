"""Ideals, the ideal lattice, congruences and quotient braces.

Functions here accept a :class:`SkewBrace` unless noted; those marked as
digroup-capable only touch the two tables and also take a :class:`Digroup`.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from . import config
from .braces import Digroup, SkewBrace, make_skew_brace
from .errors import NotACongruence, NotAnIdeal, OrderCapExceeded
from .groups import (
    all_subgroups,
    as_subset,
    cosets_agree,
    is_normal_subgroup,
    is_subgroup,
    make_group,
)


def _key(s):
    return (len(s), s)


@dataclass(frozen=True)
class IdealSubset:
    members: tuple[int, ...]
    normal_in_star: bool
    normal_in_circ: bool
    lambda_stable: bool

    @property
    def is_ideal(self) -> bool:
        return self.normal_in_star and self.normal_in_circ and self.lambda_stable

    def __bool__(self):
        return self.is_ideal


def lambda_stable(b: SkewBrace, s: Iterable[int]) -> bool:
    members = set(s)
    return all(
        b.lam_table[a][u] in members for a in range(b.order) for u in members
    )


def is_ideal(b: SkewBrace, s: Iterable[int]) -> IdealSubset:
    members = as_subset(s, b.order)
    ns = is_subgroup(b.star, members) and is_normal_subgroup(b.star, members)
    nc = is_subgroup(b.circ, members) and is_normal_subgroup(b.circ, members)
    return IdealSubset(members, ns, nc, lambda_stable(b, members))


def require_ideal(b: SkewBrace, s: Iterable[int]) -> tuple[int, ...]:
    res = is_ideal(b, s)
    if not res:
        raise NotAnIdeal(f"{list(res.members)} is not an ideal")
    return res.members


def digroup_normal_check(d, s: Iterable[int]) -> bool:
    """Normal sub-digroup test: normal in both groups and
    x^-* * y in S exactly when x^-o o y in S.  Digroup-capable.
    """
    members = set(as_subset(s, d.order))
    for g in (d.star, d.circ):
        if not is_subgroup(g, members) or not is_normal_subgroup(g, members):
            return False
    st, ct = d.star.table, d.circ.table
    si, ci = d.star.inverse, d.circ.inverse
    n = d.order
    for x in range(n):
        sx, cx = st[si[x]], ct[ci[x]]
        for y in range(n):
            if (sx[y] in members) != (cx[y] in members):
                return False
    return True


def generated_ideal(b: SkewBrace, gens: Iterable[int]) -> tuple[int, ...]:
    """Smallest ideal containing ``gens``.

    Work-queue closure under both products, both inverses, conjugation in
    both groups and every lambda_a.
    """
    st, ct = b.star.table, b.circ.table
    si, ci = b.star.inverse, b.circ.inverse
    lam = b.lam_table
    n = b.order
    seen = {0}
    queue = deque()

    def push(z):
        if z not in seen:
            seen.add(z)
            queue.append(z)

    for x in as_subset(gens, n):
        push(x)
    while queue:
        x = queue.popleft()
        push(si[x])
        push(ci[x])
        for a in range(n):
            push(st[st[a][x]][si[a]])
            push(ct[ct[a][x]][ci[a]])
            push(lam[a][x])
        for y in list(seen):
            push(st[x][y])
            push(st[y][x])
            push(ct[x][y])
            push(ct[y][x])
    out = tuple(sorted(seen))
    assert is_ideal(b, out), out
    return out


def all_ideals(b: SkewBrace, *, cap: int | None = None) -> list[tuple[int, ...]]:
    """Every ideal, sorted by (size, members).

    Candidates are the normal subgroups of (A, *), filtered by :func:`is_ideal`.
    """
    limit = config.cap(config.IDEAL_CAP) if cap is None else cap
    if b.order > limit:
        raise OrderCapExceeded(b.order, limit, "ideal enumeration")
    out = [s for s in all_subgroups(b.star) if is_ideal(b, s)]
    return sorted(out, key=_key)


def ideals_by_powerset(b: SkewBrace) -> list[tuple[int, ...]]:
    """Raw power-set scan over subsets containing 0; a slow cross-check."""
    limit = config.cap(config.POWERSET_CAP)
    if b.order > limit:
        raise OrderCapExceeded(b.order, limit, "power-set ideal scan")
    rest = range(1, b.order)
    out = []
    for k in range(b.order):
        for combo in combinations(rest, k):
            s = (0,) + combo
            if is_ideal(b, s):
                out.append(s)
    return sorted(out, key=_key)


def intersect(*subsets: Iterable[int]) -> tuple[int, ...]:
    it = iter(subsets)
    acc = set(next(it))
    for s in it:
        acc &= set(s)
    return tuple(sorted(acc))


def is_subset(a: Iterable[int], b: Iterable[int]) -> bool:
    return set(a) <= set(b)


def join_of_ideals(b: SkewBrace, i: Iterable[int], j: Iterable[int]) -> tuple[int, ...]:
    """I * J, which also equals I o J and the ideal generated by I and J."""
    i = require_ideal(b, i)
    j = require_ideal(b, j)
    st, ct = b.star.table, b.circ.table
    prod_star = as_subset(st[x][y] for x in i for y in j)
    prod_circ = as_subset(ct[x][y] for x in i for y in j)
    if prod_star != prod_circ:
        raise AssertionError(f"I*J {prod_star} != IoJ {prod_circ}")
    gen = generated_ideal(b, set(i) | set(j))
    if gen != prod_star:
        raise AssertionError(f"I*J {prod_star} != <I, J> {gen}")
    return prod_star


@dataclass(frozen=True)
class Congruence:
    """Partition of 0..n-1 given as element -> block id.

    Block ids are normalized to first-appearance order, so the class of 0
    is block 0 and equal partitions compare equal.
    """

    class_of: tuple[int, ...]

    def __post_init__(self):
        ids = {}
        norm = []
        for c in self.class_of:
            if c not in ids:
                ids[c] = len(ids)
            norm.append(ids[c])
        object.__setattr__(self, "class_of", tuple(norm))

    @classmethod
    def discrete(cls, n: int) -> "Congruence":
        return cls(tuple(range(n)))

    @classmethod
    def total(cls, n: int) -> "Congruence":
        return cls((0,) * n)

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> "Congruence":
        class_of = [-1] * n
        for k, blk in enumerate(blocks):
            for x in blk:
                if class_of[x] != -1:
                    raise NotACongruence(f"element {x} in two blocks")
                class_of[x] = k
        if -1 in class_of:
            raise NotACongruence(f"element {class_of.index(-1)} in no block")
        return cls(tuple(class_of))

    @property
    def carrier_order(self) -> int:
        return len(self.class_of)

    @property
    def num_blocks(self) -> int:
        return max(self.class_of) + 1

    @property
    def blocks(self) -> list[tuple[int, ...]]:
        out = [[] for _ in range(self.num_blocks)]
        for x, c in enumerate(self.class_of):
            out[c].append(x)
        return [tuple(b) for b in out]

    def related(self, x: int, y: int) -> bool:
        return self.class_of[x] == self.class_of[y]


def congruence_witness(d, r: Congruence):
    """First pair of classes on which an operation is not well defined, else None.

    Digroup-capable.
    """
    if r.carrier_order != d.order:
        return ("order-mismatch", r.carrier_order)
    cls = r.class_of
    reps = [blk[0] for blk in r.blocks]
    for name, t in (("star", d.star.table), ("circ", d.circ.table)):
        for x in range(d.order):
            rx = reps[cls[x]]
            for y in range(d.order):
                if cls[t[x][y]] != cls[t[rx][reps[cls[y]]]]:
                    return (name, (x, y))
    return None


def is_congruence(d, r: Congruence) -> bool:
    return congruence_witness(d, r) is None


def coset_partition(g, members: Sequence[int]) -> Congruence:
    """Left cosets x * S of a subgroup, as a partition."""
    n = g.order
    class_of = [-1] * n
    k = 0
    for x in range(n):
        if class_of[x] == -1:
            for m in members:
                class_of[g.table[x][m]] = k
            k += 1
    return Congruence(tuple(class_of))


def congruence_of_ideal(b: SkewBrace, i: Iterable[int]) -> Congruence:
    """The *-coset partition of an ideal (checked to match its o-cosets)."""
    i = require_ideal(b, i)
    r = coset_partition(b.star, i)
    if coset_partition(b.circ, i) != r:
        raise AssertionError(f"*- and o-cosets of {i} differ")
    w = congruence_witness(b, r)
    if w is not None:
        raise AssertionError(f"coset partition of {i} not compatible: {w}")
    return r


def ideal_of_congruence(d, r: Congruence) -> tuple[int, ...]:
    """Class of 0.  Digroup-capable."""
    if r.carrier_order != d.order:
        raise NotACongruence("carrier order mismatch")
    return tuple(x for x, c in enumerate(r.class_of) if c == r.class_of[0])


def all_congruences(b: SkewBrace) -> list[Congruence]:
    return [congruence_of_ideal(b, i) for i in all_ideals(b)]


def digroup_congruences(d: Digroup) -> list[Congruence]:
    """Congruences of a digroup, sorted by the size of their 0-class.

    A congruence of a digroup is one of (A, *), hence the coset partition of
    a normal subgroup; keep those compatible with o as well.
    """
    out = []
    for s in all_subgroups(d.star):
        if is_normal_subgroup(d.star, s):
            r = coset_partition(d.star, s)
            if is_congruence(d, r):
                out.append((s, r))
    out.sort(key=lambda p: _key(p[0]))
    return [r for _, r in out]


def quotient_tables(d, r: Congruence):
    """Induced tables on the blocks of ``r`` (block 0 holds 0).  Digroup-capable."""
    w = congruence_witness(d, r)
    if w is not None:
        raise NotACongruence(f"not compatible: {w}")
    reps = [blk[0] for blk in r.blocks]
    cls = r.class_of
    st, ct = d.star.table, d.circ.table
    star = [[cls[st[x][y]] for y in reps] for x in reps]
    circ = [[cls[ct[x][y]] for y in reps] for x in reps]
    return star, circ


def quotient_brace(b: SkewBrace, i: Iterable[int]):
    """A/I and the projection A -> A/I as an index array."""
    r = congruence_of_ideal(b, i)
    star, circ = quotient_tables(b, r)
    q = make_skew_brace(Digroup(make_group(star), make_group(circ)))
    return q, r.class_of


def ideal_cosets_agree(b: SkewBrace, i: Iterable[int]) -> bool:
    """Coset-form cross-check: I*a == a*I and I o a == a o I for all a."""
    i = list(i)
    return cosets_agree(b.star, i) and cosets_agree(b.circ, i)
