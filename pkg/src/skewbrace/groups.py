"""Finite groups stored as Cayley tables over the indices 0..n-1.

The identity is always index 0. Subsets are passed around as any iterable
of indices and returned as sorted tuples.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

from . import config
from .errors import NotAGroup, NotASubgroup, NotNormal, OrderCapExceeded

Table = tuple[tuple[int, ...], ...]


def as_subset(members: Iterable[int], n: int | None = None) -> tuple[int, ...]:
    """Normalize to a sorted duplicate-free tuple, range-checked against ``n``."""
    out = tuple(sorted(set(int(m) for m in members)))
    if n is not None and out and (out[0] < 0 or out[-1] >= n):
        raise ValueError(f"subset {out} not contained in 0..{n - 1}")
    return out


def relabel_table(table: Sequence[Sequence[int]], perm: Sequence[int]) -> Table:
    """Transport ``table`` along ``perm`` (old index x becomes perm[x])."""
    n = len(table)
    new = [[0] * n for _ in range(n)]
    for x in range(n):
        px = perm[x]
        row = table[x]
        nrow = new[px]
        for y in range(n):
            nrow[perm[y]] = perm[row[y]]
    return tuple(tuple(r) for r in new)


def _check_shape(table) -> Table:
    n = len(table)
    if n == 0:
        raise ValueError("empty table")
    rows = []
    for i, row in enumerate(table):
        row = tuple(int(v) for v in row)
        if len(row) != n:
            raise ValueError(f"row {i} has length {len(row)}, expected {n}")
        for v in row:
            if not 0 <= v < n:
                raise ValueError(f"entry {v} in row {i} out of range 0..{n - 1}")
        rows.append(row)
    return tuple(rows)


def find_unit(table: Table) -> int | None:
    n = len(table)
    ident = tuple(range(n))
    for e in range(n):
        if table[e] == ident and all(table[x][e] == x for x in range(n)):
            return e
    return None


def latin_witness(table: Table):
    """First row (``("row", i)``) or column (``("col", j)``) that is not a permutation."""
    n = len(table)
    full = set(range(n))
    for i, row in enumerate(table):
        if set(row) != full:
            return ("row", i)
    for j in range(n):
        if {table[i][j] for i in range(n)} != full:
            return ("col", j)
    return None


def associativity_witness(table: Table):
    """Lexicographically first triple with (xy)z != x(yz), or None."""
    n = len(table)
    for x in range(n):
        tx = table[x]
        for y in range(n):
            txy = table[tx[y]]
            ty = table[y]
            for z in range(n):
                if txy[z] != tx[ty[z]]:
                    return (x, y, z)
    return None


@dataclass(frozen=True)
class FiniteGroup:
    """A validated group of order ``n`` with identity 0.

    Build through :func:`make_group`; the bare constructor trusts its input.
    """

    table: Table
    inverse: tuple[int, ...] = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def identity(self) -> int:
        return 0

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def inv(self, x: int) -> int:
        return self.inverse[x]

    def prod(self, *xs: int) -> int:
        acc = 0
        for x in xs:
            acc = self.table[acc][x]
        return acc

    def conj(self, g: int, x: int) -> int:
        """g x g^-1."""
        return self.table[self.table[g][x]][self.inverse[g]]

    def is_abelian(self) -> bool:
        t = self.table
        n = len(t)
        return all(t[x][y] == t[y][x] for x in range(n) for y in range(x + 1, n))

    def opposite(self) -> "FiniteGroup":
        n = self.order
        t = tuple(tuple(self.table[y][x] for y in range(n)) for x in range(n))
        return FiniteGroup(t, self.inverse)

    def elements(self) -> range:
        return range(self.order)


def make_group(table, *, cap: int | None = None) -> FiniteGroup:
    """Validate ``table`` as a group, moving its unit to index 0 if needed.

    >>> make_group([[0, 1], [1, 0]]).inverse
    (0, 1)
    """
    t = _check_shape(table)
    n = len(t)
    limit = config.cap(config.GROUP_CAP) if cap is None else cap
    if n > limit:
        raise OrderCapExceeded(n, limit, "group validation")
    e = find_unit(t)
    if e is None:
        raise NotAGroup("no-unit")
    if e != 0:
        perm = list(range(n))
        perm[0], perm[e] = e, 0
        t = relabel_table(t, perm)
    w = latin_witness(t)
    if w is not None:
        raise NotAGroup("not-latin", w)
    w = associativity_witness(t)
    if w is not None:
        raise NotAGroup("not-associative", w)
    inverse = []
    for x in range(n):
        row = t[x]
        ys = [y for y in range(n) if row[y] == 0 and t[y][x] == 0]
        if not ys:
            raise NotAGroup("no-inverse", x)
        inverse.append(ys[0])
    return FiniteGroup(t, tuple(inverse))


def cyclic_group(n: int) -> FiniteGroup:
    return make_group([[(x + y) % n for y in range(n)] for x in range(n)])


def group_from_permutations(perms: Sequence[Sequence[int]]) -> FiniteGroup:
    """Cayley table of a list of permutations closed under composition.

    The list order fixes the labelling; ``perms[0]`` must be the identity.
    Product x*y means "apply y, then x".
    """
    index = {tuple(p): i for i, p in enumerate(perms)}
    table = []
    for p in perms:
        row = []
        for q in perms:
            row.append(index[tuple(p[q[k]] for k in range(len(q)))])
        table.append(row)
    return make_group(table)


def symmetric_group_s3() -> FiniteGroup:
    """S3 with labels 0=id, 1=(012), 2=(021), 3=(01), 4=(02), 5=(12).

    A3 is {0, 1, 2} under this labelling.
    """
    perms = [
        (0, 1, 2),
        (1, 2, 0),
        (2, 0, 1),
        (1, 0, 2),
        (2, 1, 0),
        (0, 2, 1),
    ]
    return group_from_permutations(perms)


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """G x H with (x, y) flattened to x * |H| + y."""
    m = h.order
    n = g.order * m
    table = [[0] * n for _ in range(n)]
    for a, b in product(range(n), repeat=2):
        table[a][b] = g.table[a // m][b // m] * m + h.table[a % m][b % m]
    return make_group(table)


def is_subgroup(g: FiniteGroup, s: Iterable[int]) -> bool:
    members = set(s)
    if 0 not in members:
        return False
    t = g.table
    for x in members:
        if g.inverse[x] not in members:
            return False
        row = t[x]
        for y in members:
            if row[y] not in members:
                return False
    return True


def _require_subgroup(g, members):
    if not is_subgroup(g, members):
        raise NotASubgroup(f"{sorted(members)} is not a subgroup")


def is_normal_subgroup(g: FiniteGroup, s: Iterable[int]) -> bool:
    members = set(s)
    _require_subgroup(g, members)
    return all(g.conj(x, m) in members for x in range(g.order) for m in members)


def cosets_agree(g: FiniteGroup, s: Iterable[int]) -> bool:
    """Coset form of normality: S*a == a*S for every a."""
    members = list(s)
    t = g.table
    for a in range(g.order):
        if {t[m][a] for m in members} != {t[a][m] for m in members}:
            return False
    return True


def subgroup_closure(g: FiniteGroup, gens: Iterable[int]) -> tuple[int, ...]:
    """Smallest subgroup containing ``gens`` (work-queue fixed point)."""
    t = g.table
    seen = {0}
    queue = deque()
    for x in gens:
        if x not in seen:
            seen.add(x)
            queue.append(x)
    while queue:
        x = queue.popleft()
        new = [g.inverse[x]]
        for y in list(seen):
            new.append(t[x][y])
            new.append(t[y][x])
        for z in new:
            if z not in seen:
                seen.add(z)
                queue.append(z)
    return tuple(sorted(seen))


def normal_closure(g: FiniteGroup, gens: Iterable[int]) -> tuple[int, ...]:
    """Smallest normal subgroup containing ``gens``."""
    t = g.table
    seen = {0}
    queue = deque()
    for x in gens:
        if x not in seen:
            seen.add(x)
            queue.append(x)
    n = g.order
    while queue:
        x = queue.popleft()
        new = [g.inverse[x]]
        new.extend(g.conj(a, x) for a in range(n))
        for y in list(seen):
            new.append(t[x][y])
            new.append(t[y][x])
        for z in new:
            if z not in seen:
                seen.add(z)
                queue.append(z)
    return tuple(sorted(seen))


def group_commutator_subgroup(
    g: FiniteGroup, s: Iterable[int], t_: Iterable[int]
) -> tuple[int, ...]:
    """[S, T]: subgroup generated by s t (t s)^-1 for s in S, t in T."""
    s, t_ = set(s), set(t_)
    for part in (s, t_):
        if not is_normal_subgroup(g, part):
            raise NotNormal(f"{sorted(part)} is not normal")
    tab = g.table
    gens = {tab[tab[a][b]][g.inverse[tab[b][a]]] for a in s for b in t_}
    return subgroup_closure(g, gens)


def group_centralizer(g: FiniteGroup, s: Iterable[int]) -> tuple[int, ...]:
    members = list(s)
    t = g.table
    return tuple(
        x for x in range(g.order) if all(t[x][m] == t[m][x] for m in members)
    )


def group_center(g: FiniteGroup) -> tuple[int, ...]:
    return group_centralizer(g, range(g.order))


def is_automorphism(g: FiniteGroup, f: Sequence[int]) -> bool:
    n = g.order
    if len(f) != n or f[0] != 0 or sorted(f) != list(range(n)):
        return False
    t = g.table
    return all(f[t[x][y]] == t[f[x]][f[y]] for x in range(n) for y in range(n))


def is_homomorphism(g: FiniteGroup, h: FiniteGroup, f: Sequence[int]) -> bool:
    tg, th = g.table, h.table
    n = g.order
    return all(f[tg[x][y]] == th[f[x]][f[y]] for x in range(n) for y in range(n))


def all_subgroups(g: FiniteGroup) -> list[tuple[int, ...]]:
    """Every subgroup, sorted by (size, members).

    Grows the lattice from {0} by adjoining one element at a time, which
    reaches every subgroup since each is generated by a chain of elements.
    """
    start = (0,)
    found = {start}
    queue = deque([start])
    while queue:
        h = queue.popleft()
        hs = set(h)
        for x in range(g.order):
            if x in hs:
                continue
            k = subgroup_closure(g, h + (x,))
            if k not in found:
                found.add(k)
                queue.append(k)
    return sorted(found, key=lambda s: (len(s), s))


def automorphisms(g: FiniteGroup) -> list[tuple[int, ...]]:
    """All automorphisms as index arrays, by extending images of a generating set."""
    n = g.order
    gens = []
    span = (0,)
    for x in range(n):
        if x not in span:
            gens.append(x)
            span = subgroup_closure(g, gens)
        if len(span) == n:
            break
    order_of = [_element_order(g, x) for x in range(n)]
    result = []

    def extend(images):
        # images: tuple aligned with gens[:len(images)]
        if len(images) == len(gens):
            f = _extend_hom(g, gens, images)
            if f is not None and sorted(f) == list(range(n)):
                result.append(tuple(f))
            return
        x = gens[len(images)]
        for y in range(1, n):
            if order_of[y] == order_of[x] and y not in images:
                extend(images + (y,))

    if n == 1:
        return [(0,)]
    extend(())
    return sorted(result)


def _element_order(g: FiniteGroup, x: int) -> int:
    k, y = 1, x
    while y != 0:
        y = g.table[y][x]
        k += 1
    return k


def _extend_hom(g: FiniteGroup, gens, images):
    """Extend gens -> images to a homomorphism g -> g, or None if inconsistent."""
    t = g.table
    f = {0: 0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for gen, img in zip(gens, images):
            y = t[x][gen]
            v = t[f[x]][img]
            if y in f:
                if f[y] != v:
                    return None
            else:
                f[y] = v
                queue.append(y)
    out = [f[x] for x in range(g.order)]
    if not is_homomorphism(g, g, out):
        return None
    return out
