"""Materialized permutation groups: closures, fingerprints, C(S), G(S), K_G.

Closure is plain breadth-first product saturation; every target here has
order well under the default cap, so no stabilizer chains are needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd

import numpy as np

from .errors import NotAGroupError, OrderBudgetExceededError
from .morphisms import involutions, order_two_automorphisms, enumerate_automorphisms, enumerate_anti_automorphisms
from .perms import Permutation, compose, identity_tuple
from .semigroups import FiniteSemigroup, validate

#: Default cap on materialized group order.
DEFAULT_ORDER_BUDGET = 10**6


class PermGroup:
    """A permutation group with its element set materialized.

    Elements are canonically sorted, so equal groups compare equal and all
    derived output is deterministic regardless of construction order.
    """

    def __init__(self, degree, generators, elements):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(sorted(elements))
        self._set = frozenset(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, perm):
        return perm in self._set

    def __eq__(self, other):
        return isinstance(other, PermGroup) and self.degree == other.degree and self._set == other._set

    def __hash__(self):
        return hash((self.degree, self._set))

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order})"


def closure(generators, degree=None, *, cap: int | None = None) -> PermGroup:
    """The subgroup generated by the given permutations.

    An empty generator list yields the trivial group (the degree must then
    be supplied).  Raises :class:`OrderBudgetExceededError` past ``cap``.
    """
    cap = DEFAULT_ORDER_BUDGET if cap is None else cap
    gens = [g if isinstance(g, Permutation) else Permutation(g) for g in generators]
    if degree is None:
        if not gens:
            raise ValueError("degree is required for an empty generating set")
        degree = gens[0].degree
    if any(g.degree != degree for g in gens):
        raise ValueError("generators act on different degrees")
    ident = identity_tuple(degree)
    seen = {ident}
    frontier = [ident]
    gen_maps = [g.mapping for g in gens]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gen_maps:
                y = compose(x, g)
                if y not in seen:
                    if len(seen) >= cap:
                        raise OrderBudgetExceededError(cap)
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return PermGroup(degree, gens, (Permutation(m) for m in seen))


def c_group(s: FiniteSemigroup, *, budget=None, jobs=1, cap=None) -> PermGroup:
    """C(S): the subgroup of Sym(S) generated by all involutions of S."""
    inv = involutions(s, budget=budget, jobs=jobs)
    return closure(inv.elements, degree=s.n, cap=cap)


def g_group(s: FiniteSemigroup, *, budget=None, jobs=1, cap=None) -> PermGroup:
    """G(S): the subgroup generated by the order-at-most-2 automorphisms."""
    j = order_two_automorphisms(s, budget=budget, jobs=jobs)
    return closure(j.elements, degree=s.n, cap=cap)


def signed_aut_group(s: FiniteSemigroup, *, budget=None, jobs=1) -> PermGroup:
    """Aut(S) together with all anti-automorphisms, as one group.

    On a commutative semigroup the two sets coincide, so the order is
    |Aut(S)|; otherwise they are disjoint and the order is their sum.
    """
    auts = enumerate_automorphisms(s, budget=budget, jobs=jobs)
    antis = enumerate_anti_automorphisms(s, budget=budget, jobs=jobs)
    members = set(auts.elements) | set(antis.elements)
    return PermGroup(s.n, auts.elements, members)


def derived_subgroup(g: PermGroup, *, cap=None) -> PermGroup:
    """The commutator subgroup [G, G]."""
    m = np.asarray([p.mapping for p in g.elements], dtype=np.int32)
    invm = np.argsort(m, axis=1)
    comms = set()
    for i in range(len(m)):
        aj = m[i][m]                                  # rows: g_i o g_j
        conj = aj[:, invm[i]]                         # g_i o g_j o g_i^-1
        full = np.take_along_axis(conj, invm, axis=1)  # ... o g_j^-1
        comms.update(map(tuple, full.tolist()))
    return closure((Permutation(c) for c in comms), degree=g.degree, cap=cap)


@dataclass(frozen=True)
class GroupFingerprint:
    """Isomorphism-invariant summary used to pre-filter identification."""

    order: int
    abelian: bool
    exponent: int
    element_order_histogram: tuple  # sorted (order, count) pairs
    center_order: int
    derived_order: int

    def histogram_dict(self) -> dict:
        return dict(self.element_order_histogram)


def group_fingerprint(g: PermGroup) -> GroupFingerprint:
    m = np.asarray([p.mapping for p in g.elements], dtype=np.int32)
    count, deg = m.shape
    orders = [p.order() for p in g.elements]
    hist: dict[int, int] = {}
    for o in orders:
        hist[o] = hist.get(o, 0) + 1
    exponent = reduce(lambda a, b: a * b // gcd(a, b), hist, 1)
    abelian = True
    center = 0
    for i in range(count):
        left = m[i][m]        # row j: g_i o g_j
        right = m[:, m[i]]    # row j: g_j o g_i
        same = (left == right).all(axis=1)
        center += bool(same.all())
        abelian = abelian and bool(same.all())
    return GroupFingerprint(
        order=count,
        abelian=abelian,
        exponent=exponent,
        element_order_histogram=tuple(sorted(hist.items())),
        center_order=center,
        derived_order=derived_subgroup(g).order,
    )


def to_cayley_table(g: PermGroup, *, cap: int | None = None) -> FiniteSemigroup:
    """The group as a Cayley table over its sorted element list."""
    from .semigroups import TABLE_CAP

    cap = TABLE_CAP if cap is None else cap
    if g.order > cap:
        raise OrderBudgetExceededError(cap)
    m = np.asarray([p.mapping for p in g.elements], dtype=np.int32)
    index = {row.tobytes(): i for i, row in enumerate(m)}
    names = tuple(p.cycle_string() for p in g.elements)
    table = [
        [index[row.tobytes()] for row in m[i][m]]
        for i in range(len(m))
    ]
    return validate(table, names=names)


# ---------------------------------------------------------------------------
# K_G: the subgroup of G x G generated by the pairs (g, g^-1)

@dataclass(frozen=True)
class PairGroup:
    """A subgroup of G x G stored as element-index pairs."""

    base_order: int
    generators: tuple
    elements: frozenset

    @property
    def order(self) -> int:
        return len(self.elements)


def _group_inverses(table: FiniteSemigroup):
    n = table.n
    e = table.identity
    if e is None:
        raise NotAGroupError("no identity element")
    inv = [-1] * n
    for x in range(n):
        row = table.table[x]
        if sorted(row) != list(range(n)):
            raise NotAGroupError("rows are not permutations")
        inv[x] = row.index(e)
        if table.table[inv[x]][x] != e:
            raise NotAGroupError(f"element {x} has no two-sided inverse")
    return inv


def _derived_of_table(table: FiniteSemigroup, inv) -> frozenset[int]:
    t = table.table
    n = table.n
    comms = {
        t[t[a][b]][t[inv[a]][inv[b]]]
        for a in range(n)
        for b in range(n)
    }
    members = set(comms)
    work = list(members)
    while work:
        x = work.pop()
        for y in tuple(members):
            for p in (t[x][y], t[y][x]):
                if p not in members:
                    members.add(p)
                    work.append(p)
    return frozenset(members)


def k_group(table: FiniteSemigroup) -> PairGroup:
    """The subgroup of G x G generated by {(g, g^-1)} for a group table G.

    Also computes the characterization {(g, h) : gh in [G, G]} and insists
    the two sets agree.
    """
    inv = _group_inverses(table)
    t = table.table
    gens = tuple((g, inv[g]) for g in range(table.n))
    seen = set(gens)
    seen.add((table.identity, table.identity))
    work = list(seen)
    while work:
        a, b = work.pop()
        for c, d in gens:
            p = (t[a][c], t[b][d])
            if p not in seen:
                seen.add(p)
                work.append(p)
    derived = _derived_of_table(table, inv)
    expected = {
        (g, h) for g in range(table.n) for h in range(table.n) if t[g][h] in derived
    }
    if seen != expected:
        raise AssertionError("closure of {(g, g^-1)} differs from the gh-in-[G,G] set")
    return PairGroup(table.n, gens, frozenset(seen))


# ---------------------------------------------------------------------------
# writing a permutation as a product of two involutions, cycle by cycle

def two_involution_factorization(pi: Permutation) -> tuple[Permutation, Permutation]:
    """Return (sigma, tau) with sigma^2 = tau^2 = 1 and sigma * tau = pi.

    Works cycle by cycle; either factor may come out as the identity (for
    example tau alone suffices when every cycle is a transposition).
    """
    sigma = list(range(pi.degree))
    tau = list(range(pi.degree))

    def set_swap(target, a, b):
        target[a], target[b] = b, a

    for cyc in pi.cycles():
        k2 = len(cyc)
        if k2 % 2:
            # odd length 2k+1: sigma pairs (x2,x_{2k+1})..., tau pairs (x1,x_{2k+1})...
            k = (k2 - 1) // 2
            for i in range(2, k + 2):
                set_swap(sigma, cyc[i - 1], cyc[2 * k + 3 - i - 1])
            for i in range(1, k + 1):
                set_swap(tau, cyc[i - 1], cyc[2 * k + 2 - i - 1])
        else:
            # even length 2k
            k = k2 // 2
            for i in range(2, k + 1):
                set_swap(sigma, cyc[i - 1], cyc[2 * k + 2 - i - 1])
            for i in range(1, k + 1):
                set_swap(tau, cyc[i - 1], cyc[2 * k + 1 - i - 1])
    s, t = Permutation(sigma), Permutation(tau)
    assert (s * t) == pi, "factorization broke; composition convention mismatch"
    return s, t
