"""Huq and Smith commutators, centralizers and the center.

Subobjects are element sets; equivalence relations are
:class:`~skewbrace.ideals.Congruence` partitions.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable

from .braces import Digroup, SkewBrace, Verdict
from .errors import NotACongruence, NotASubBrace
from .groups import as_subset, group_centralizer, is_subgroup
from .ideals import (
    Congruence,
    all_congruences,
    all_ideals,
    congruence_of_ideal,
    congruence_witness,
    digroup_congruences,
    generated_ideal,
    ideal_of_congruence,
    is_subset,
    join_of_ideals,
    quotient_brace,
    require_ideal,
)


def _require_subobject(d, s, name):
    members = as_subset(s, d.order)
    if not (is_subgroup(d.star, members) and is_subgroup(d.circ, members)):
        raise NotASubBrace(f"{name} = {list(members)} is not closed under both operations")
    return members


def huq_commute(d, u: Iterable[int], v: Iterable[int]) -> bool:
    """[U, V] = 0 for two sub-braces (or sub-digroups).

    Decided elementwise: u o v == u * v == v * u == v o u.  The equivalent
    lambda form (lambda_u(v) == v plus commutation in each group) is
    evaluated too and must agree.
    """
    u = _require_subobject(d, u, "U")
    v = _require_subobject(d, v, "V")
    st, ct = d.star.table, d.circ.table
    collapsed = all(
        ct[x][y] == st[x][y] == st[y][x] == ct[y][x] for x in u for y in v
    )
    by_lambda = (
        all(d.lam(x, y) == y for x in u for y in v)
        and all(st[x][y] == st[y][x] for x in u for y in v)
        and all(ct[x][y] == ct[y][x] for x in u for y in v)
    )
    if collapsed != by_lambda:
        raise AssertionError(f"commutation tests disagree on U={u}, V={v}")
    return collapsed


def commutator_generators(b: SkewBrace, i: Iterable[int], j: Iterable[int]):
    """The three generating sets of [I, J], each sorted.

    set1: i o j o (j o i)^-o   (commutators in (A, o))
    set2: i * j * (j * i)^-*   (commutators in (A, *))
    set3: (i o j) * (i * j)^-*
    """
    i = require_ideal(b, i)
    j = require_ideal(b, j)
    st, ct = b.star.table, b.circ.table
    si, ci = b.star.inverse, b.circ.inverse
    set1, set2, set3 = set(), set(), set()
    for x in i:
        for y in j:
            set1.add(ct[ct[x][y]][ci[ct[y][x]]])
            set2.add(st[st[x][y]][si[st[y][x]]])
            set3.add(st[ct[x][y]][si[st[x][y]]])
    return tuple(sorted(set1)), tuple(sorted(set2)), tuple(sorted(set3))


def mu_is_morphism(b: SkewBrace, i, j, cls) -> bool:
    """Is (i, j) -> i * j * K a brace morphism I x J -> A/K?

    ``cls`` is the class array of the congruence of K.
    """
    st, ct = b.star.table, b.circ.table
    for x, y in product(i, j):
        xy = st[x][y]
        sx, cx = st[x], ct[x]
        for x2, y2 in product(i, j):
            xy2 = st[x2][y2]
            if cls[st[sx[x2]][st[y][y2]]] != cls[st[xy][xy2]]:
                return False
            if cls[st[cx[x2]][ct[y][y2]]] != cls[ct[xy][xy2]]:
                return False
    return True


@dataclass(frozen=True)
class CommutatorReport:
    ideal_a: tuple[int, ...]
    ideal_b: tuple[int, ...]
    generators_1: tuple[int, ...]
    generators_2: tuple[int, ...]
    generators_3: tuple[int, ...]
    commutator: tuple[int, ...]
    quotient: SkewBrace = field(repr=False)
    projection: tuple[int, ...] = field(repr=False)
    oracle_commutator: tuple[int, ...] | None = None


def huq_commutator(
    b: SkewBrace, i: Iterable[int], j: Iterable[int], *, with_oracle: bool = False
) -> CommutatorReport:
    """[I, J] as the ideal generated by the three generator sets.

    The report carries A/[I, J] and its projection; the map
    (i, j) -> i * j * [I, J] is checked to be a brace morphism.
    """
    i = require_ideal(b, i)
    j = require_ideal(b, j)
    g1, g2, g3 = commutator_generators(b, i, j)
    k = generated_ideal(b, set(g1) | set(g2) | set(g3))
    q, proj = quotient_brace(b, k)
    if not mu_is_morphism(b, i, j, proj):
        raise AssertionError(f"mu is not a morphism for I={i}, J={j}, K={k}")
    oracle = oracle_huq_commutator(b, i, j) if with_oracle else None
    if oracle is not None and oracle != k:
        raise AssertionError(f"[I,J]={k} but oracle gives {oracle}")
    return CommutatorReport(i, j, g1, g2, g3, k, q, tuple(proj), oracle)


def oracle_huq_commutator(b: SkewBrace, i: Iterable[int], j: Iterable[int]) -> tuple[int, ...]:
    """Smallest ideal K for which (i, j) -> i * j * K is a brace morphism.

    Brute force over the ideal lattice; also checks that this K lies in
    every other ideal with the property.
    """
    i = require_ideal(b, i)
    j = require_ideal(b, j)
    good = []
    for k in all_ideals(b):
        cls = congruence_of_ideal(b, k).class_of
        if mu_is_morphism(b, i, j, cls):
            good.append(k)
    best = good[0]
    for k in good[1:]:
        if not is_subset(best, k):
            raise AssertionError(f"no least K: {best} and {k} both minimal")
    return best


def dot(b: SkewBrace, x: int, y: int) -> int:
    """x . y = y^-* * lambda_x(y)."""
    return b.star.table[b.star.inverse[y]][b.lam_table[x][y]]


def dot_set(b: SkewBrace, i: Iterable[int], j: Iterable[int]) -> tuple[int, ...]:
    j = list(j)
    return as_subset(dot(b, x, y) for x in i for y in j)


def star_product(b: SkewBrace, i: Iterable[int], j: Iterable[int]) -> tuple[int, ...]:
    """Ideal generated by all i . j; equals the ideal generated by set3."""
    i = require_ideal(b, i)
    j = require_ideal(b, j)
    k = generated_ideal(b, dot_set(b, i, j))
    k3 = generated_ideal(b, commutator_generators(b, i, j)[2])
    if k != k3:
        raise AssertionError(f"<I.J>={k} differs from <set3>={k3}")
    return k


def lambda_kernel(b, i: Iterable[int]) -> tuple[int, ...]:
    """{a : lambda_a fixes every element of I}."""
    i = list(i)
    return tuple(a for a in range(b.order) if all(b.lam(a, x) == x for x in i))


# -- Smith connectors -------------------------------------------------------


def composable_triples(r: Congruence, s: Congruence) -> list[tuple[int, int, int]]:
    """All (x, y, z) with x R y and y S z, in lexicographic order."""
    n = r.carrier_order
    rb, sb = r.blocks, s.blocks
    out = []
    for x in range(n):
        for y in rb[r.class_of[x]]:
            for z in sb[s.class_of[y]]:
                out.append((x, y, z))
    return out


def _check_pair(d, r, s):
    for name, rel in (("R", r), ("S", s)):
        w = congruence_witness(d, rel)
        if w is not None:
            raise NotACongruence(f"{name} is not a congruence: {w}")


def _tmul(t, a, b):
    return (t[a[0]][b[0]], t[a[1]][b[1]], t[a[2]][b[2]])


def _span(t, gens):
    seen = {(0, 0, 0)}
    queue = deque(seen)
    while queue:
        a = queue.popleft()
        for g in gens:
            c = _tmul(t, a, g)
            if c not in seen:
                seen.add(c)
                queue.append(c)
    return seen


def _generators(t, pool, size):
    """Greedy generating set, drawn from ``pool``, of a group of triples of ``size``."""
    gens, span = [], {(0, 0, 0)}
    for f in pool:
        if len(span) == size:
            break
        if f not in span:
            gens.append(f)
            span = _span(t, gens)
    if len(span) != size:
        raise AssertionError("pool does not generate the triples")
    return gens


def identity_points(triples):
    """Triples (x, y, y) and (y, y, z): where a connector's value is prescribed.

    They generate R x_X S under either product, since
    (x, y, z) = (x, y, y) (y, y, y)^-1 (y, y, z) componentwise.
    """
    return [t for t in triples if t[1] == t[2] or t[0] == t[1]]


def _hom_witness(g, triples, gens, fn):
    """First (t, gen) with fn(t gen) != fn(t) fn(gen), else None.

    Checking against a generating set suffices for a homomorphism.
    """
    tab = g.table
    for t in triples:
        ft = fn(*t)
        for gen in gens:
            if fn(*_tmul(tab, t, gen)) != tab[ft][fn(*gen)]:
                return (t, gen)
    return None


def _closed_form_connector(d, r, s) -> Verdict:
    st, ct = d.star.table, d.circ.table
    si, ci = d.star.inverse, d.circ.inverse

    def p(x, y, z):
        return st[st[x][si[y]]][z]

    def q(x, y, z):
        return ct[ct[x][ci[y]]][z]

    triples = composable_triples(r, s)
    for x in triples:
        if p(*x) != q(*x):
            return Verdict(False, x)
    pool = identity_points(triples)
    m = len(triples)
    w = _hom_witness(d.star, triples, _generators(st, pool, m), p) or _hom_witness(
        d.circ, triples, _generators(ct, pool, m), q
    )
    if w is not None:
        return Verdict(False, w[0])
    return Verdict(True)


def connector_search(d, r: Congruence, s: Congruence) -> Verdict:
    """Decide whether any digroup morphism p: R x_X S -> X has
    p(x, y, y) = x and p(y, y, z) = z, without assuming a formula for p.

    The prescribed values are propagated along generator edges of both
    products.  The prescribed points generate the triples, so the
    propagation reaches every point and decides existence outright; on
    failure the witness is the first triple where two forced values clash.
    """
    st, ct = d.star.table, d.circ.table
    triples = composable_triples(r, s)
    m = len(triples)
    forced = {}
    for x, y, z in triples:
        if y == z:
            forced[(x, y, z)] = x
        if x == y:
            if forced.get((x, y, z), z) != z:
                return Verdict(False, (x, y, z))
            forced[(x, y, z)] = z
    pool = list(forced)
    edges = [(st, _generators(st, pool, m)), (ct, _generators(ct, pool, m))]
    values = {(0, 0, 0): 0}
    queue = deque(values)
    while queue:
        t = queue.popleft()
        vt = values[t]
        for tab, gens in edges:
            for g in gens:
                u = _tmul(tab, t, g)
                vu = tab[vt][forced[g]]
                old = values.get(u)
                if old is None:
                    values[u] = vu
                    queue.append(u)
                elif old != vu:
                    return Verdict(False, u)
    if len(values) != m:
        raise AssertionError("prescribed points failed to generate the triples")
    for t, v in forced.items():
        if values[t] != v:
            return Verdict(False, t)
    return Verdict(True)


def smith_connector_exists(d, r: Congruence, s: Congruence) -> Verdict:
    """[R, S] = 0?

    For a skew brace: x * y^-* * z and x o y^-o o z must both be
    homomorphisms on R x_X S and agree there.  For a plain digroup the
    same candidate is tried first, then :func:`connector_search` decides.
    """
    _check_pair(d, r, s)
    v = _closed_form_connector(d, r, s)
    if isinstance(d, SkewBrace) or v:
        return v
    if connector_search(d, r, s):
        raise AssertionError("search found a connector the candidate missed")
    return v


def image_congruence(q_order: int, proj, r: Congruence) -> Congruence:
    """Direct image of R along a surjection, transitively closed."""
    parent = list(range(q_order))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for blk in r.blocks:
        root = find(proj[blk[0]])
        for x in blk[1:]:
            other = find(proj[x])
            if other != root:
                parent[other] = root
    return Congruence(tuple(find(x) for x in range(q_order)))


def smith_commutator(b: SkewBrace, r: Congruence, s: Congruence) -> Congruence:
    """[R, S] as the congruence of [I_R, I_S].

    Cross-checked against the least ideal K for which the images of R and
    S in A/K are connected.
    """
    _check_pair(b, r, s)
    k = huq_commutator(b, ideal_of_congruence(b, r), ideal_of_congruence(b, s)).commutator
    good = []
    for cand in all_ideals(b):
        q, proj = quotient_brace(b, cand)
        rq = image_congruence(q.order, proj, r)
        sq = image_congruence(q.order, proj, s)
        if smith_connector_exists(q, rq, sq):
            good.append(cand)
    if good[0] != k:
        raise AssertionError(f"Smith minimality oracle gives {good[0]}, Huq gives {k}")
    for cand in good:
        if not is_subset(k, cand):
            raise AssertionError(f"no least K: {k} and {cand}")
    return congruence_of_ideal(b, k)


# -- centralizers ------------------------------------------------------------


def centralizer_constraint_set(b: SkewBrace, i: Iterable[int]) -> tuple[int, ...]:
    """C_*(I) & C_o(I) & ker(a -> lambda_a restricted to I)."""
    i = list(i)
    return tuple(
        sorted(
            set(group_centralizer(b.star, i))
            & set(group_centralizer(b.circ, i))
            & set(lambda_kernel(b, i))
        )
    )


def centralizer(b: SkewBrace, i: Iterable[int]) -> tuple[int, ...]:
    """Largest ideal that Huq-commutes with the ideal I."""
    i = require_ideal(b, i)
    c = set(centralizer_constraint_set(b, i))
    inside = [k for k in all_ideals(b) if c.issuperset(k)]
    out = (0,)
    for k in inside:
        out = join_of_ideals(b, out, k)
    if not c.issuperset(out):
        raise AssertionError(f"join {out} left the constraint set")
    if not huq_commute(b, out, i):
        raise AssertionError(f"centralizer {out} does not commute with {i}")
    if any(not is_subset(k, out) for k in inside):
        raise AssertionError("centralizer is not the largest ideal in C")
    return out


def centralizer_by_joins(b: SkewBrace, i: Iterable[int]) -> tuple[int, ...]:
    """Join of every ideal J with [J, I] = 0, tested directly."""
    i = require_ideal(b, i)
    out = (0,)
    for k in all_ideals(b):
        if huq_commute(b, k, i):
            out = join_of_ideals(b, out, k)
    return out


def center(b: SkewBrace) -> tuple[int, ...]:
    return centralizer(b, range(b.order))


# -- Huq = Smith sweep -------------------------------------------------------


@dataclass(frozen=True)
class PairVerdict:
    r: Congruence
    s: Congruence
    ideal_r: tuple[int, ...]
    ideal_s: tuple[int, ...]
    huq: bool
    smith: bool
    witness: tuple | None = None

    @property
    def agree(self) -> bool:
        return self.huq == self.smith


@dataclass(frozen=True)
class HuqSmithReport:
    is_brace: bool
    pairs: tuple[PairVerdict, ...]

    @property
    def holds(self) -> bool:
        return all(p.agree for p in self.pairs)

    @property
    def huq_without_smith(self) -> list[PairVerdict]:
        return [p for p in self.pairs if p.huq and not p.smith]


def verify_huq_equals_smith(d) -> HuqSmithReport:
    """Compare Smith connectors with Huq commutation over all congruence pairs.

    For a skew brace every disagreement is an error.  For a plain digroup
    Huq-without-Smith pairs are reported; Smith-without-Huq is still an
    error since connectedness always forces Huq commutation.
    """
    is_brace = isinstance(d, SkewBrace)
    congs = all_congruences(d) if is_brace else digroup_congruences(d)
    rows = []
    for r in congs:
        ir = ideal_of_congruence(d, r)
        for s in congs:
            is_ = ideal_of_congruence(d, s)
            v = smith_connector_exists(d, r, s)
            h = huq_commute(d, ir, is_)
            row = PairVerdict(r, s, ir, is_, h, v.ok, v.witness)
            if v.ok and not h:
                raise AssertionError(f"Smith without Huq on {ir}, {is_}")
            if is_brace and h and not v.ok:
                raise AssertionError(f"Huq without Smith on {ir}, {is_}")
            rows.append(row)
    return HuqSmithReport(is_brace, tuple(rows))
