"""Backtracking enumeration of bijective (anti-)morphisms between Cayley tables.

The engine enumerates isomorphisms S -> T by branching over the images of a
generating set of S, restricted to fingerprint-compatible targets, and
extending every partial assignment by product saturation.  An
anti-isomorphism S -> T is an isomorphism S -> dual(T), so the same engine
serves both directions; the documented R/L and left/right fingerprint swap
falls out of computing fingerprints on the dual table.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from collections import Counter
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import (
    DegreeMismatchError,
    NotAnInvolutionError,
    SearchBudgetExceededError,
)
from .perms import Permutation, compose
from .semigroups import FiniteSemigroup, generating_set

#: Default cap on extension steps for one search (configurable per call).
DEFAULT_NODE_BUDGET = 10**8


class MorphismKind(Enum):
    AUTOMORPHISMS = "automorphisms"
    ANTI_AUTOMORPHISMS = "antiAutomorphisms"
    INVOLUTIONS = "involutions"
    ORDER_TWO_AUTOMORPHISMS = "orderTwoAutomorphisms"


@dataclass(frozen=True)
class MorphismSet:
    kind: MorphismKind
    domain_size: int
    elements: tuple[Permutation, ...]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, perm):
        return perm in self.elements

    def mappings(self) -> list[list[int]]:
        return [list(p.mapping) for p in self.elements]


def _as_mapping(alpha) -> tuple[int, ...]:
    return alpha.mapping if isinstance(alpha, Permutation) else tuple(alpha)


def is_homomorphism(alpha, s: FiniteSemigroup, t: FiniteSemigroup) -> bool:
    """True iff alpha(xy) = alpha(x)alpha(y) on all pairs."""
    m = _as_mapping(alpha)
    if len(m) != s.n or s.n != t.n:
        raise DegreeMismatchError(
            f"degree {len(m)} against tables of sizes {s.n} and {t.n}"
        )
    p = np.asarray(m, dtype=np.int32)
    return bool((p[s.np_table] == t.np_table[p[:, None], p[None, :]]).all())


def is_anti_homomorphism(alpha, s: FiniteSemigroup, t: FiniteSemigroup) -> bool:
    """True iff alpha(xy) = alpha(y)alpha(x) on all pairs."""
    m = _as_mapping(alpha)
    if len(m) != s.n or s.n != t.n:
        raise DegreeMismatchError(
            f"degree {len(m)} against tables of sizes {s.n} and {t.n}"
        )
    p = np.asarray(m, dtype=np.int32)
    # broadcasting yields rhs[x, y] = t[alpha(y), alpha(x)]
    return bool((p[s.np_table] == t.np_table[p[None, :], p[:, None]]).all())


def _fingerprint_ids(s: FiniteSemigroup, t: FiniteSemigroup):
    """Shared class ids for the two fingerprint lists, or None if the
    multisets differ (then no isomorphism exists)."""
    fps, fpt = s.fingerprints, t.fingerprints
    if Counter(fps) != Counter(fpt):
        return None
    ids: dict = {}
    sid = [ids.setdefault(fp, len(ids)) for fp in fps]
    tid = [ids[fp] for fp in fpt]
    return sid, tid


def _search_isomorphisms(s, t, gens, cand, sid, tid, budget, limit):
    """Core backtracking loop; returns mapping tuples, lexicographically sorted.

    Every partial assignment is saturated by products with the placed
    generators on both sides, so each branch dies at its first inconsistency;
    completed maps still get the full n^2 defining-equation check.
    """
    n = s.n
    tab_s, tab_t = s.table, t.table
    np_s, np_t = s.np_table, t.np_table
    image = [-1] * n
    preim = [-1] * n
    known: list[int] = []
    placed: list[tuple[int, int]] = []
    results: list[tuple[int, ...]] = []
    steps = 0

    def rollback(base):
        while len(known) > base:
            x = known.pop()
            preim[image[x]] = -1
            image[x] = -1

    def assign(x, y) -> bool:
        cur = image[x]
        if cur != -1:
            return cur == y
        if preim[y] != -1 or sid[x] != tid[y]:
            return False
        image[x] = y
        preim[y] = x
        known.append(x)
        return True

    def place(g, h) -> bool:
        nonlocal steps
        base = len(known)
        if not assign(g, h):
            return False
        placed.append((g, h))
        ok = True
        qi = base
        # products of everything already known with the new generator
        for k in range(base):
            x = known[k]
            fx = image[x]
            if not (
                assign(tab_s[x][g], tab_t[fx][h])
                and assign(tab_s[g][x], tab_t[h][fx])
            ):
                ok = False
                break
        # then saturate the queue of newly assigned elements
        while ok and qi < len(known):
            x = known[qi]
            qi += 1
            fx = image[x]
            steps += 1
            if steps > budget:
                raise SearchBudgetExceededError(budget)
            for gg, hh in placed:
                if not (
                    assign(tab_s[x][gg], tab_t[fx][hh])
                    and assign(tab_s[gg][x], tab_t[hh][fx])
                ):
                    ok = False
                    break
        if not ok:
            placed.pop()
            rollback(base)
        return ok

    def extend(k) -> bool:
        if k == len(gens):
            assert len(known) == n, "generators failed to reach every element"
            p = np.asarray(image, dtype=np.int32)
            if (p[np_s] == np_t[p[:, None], p[None, :]]).all():
                results.append(tuple(image))
                if limit is not None and len(results) >= limit:
                    return True
            return False
        g = gens[k]
        fixed = image[g]
        for h in cand[k]:
            if fixed != -1 and h != fixed:
                continue
            base = len(known)
            placed_base = len(placed)
            if place(g, h):
                stop = extend(k + 1)
                del placed[placed_base:]
                rollback(base)
                if stop:
                    return True
        return False

    extend(0)
    results.sort()
    return results


def _subsearch(args):
    """Worker for parallel first-generator branching."""
    table_s, table_t, gens, cand, sid, tid, budget = args
    s = FiniteSemigroup(table_s, _checked=True)
    t = FiniteSemigroup(table_t, _checked=True)
    return _search_isomorphisms(s, t, gens, cand, sid, tid, budget, None)


def enumerate_isomorphism_mappings(
    s: FiniteSemigroup,
    t: FiniteSemigroup,
    *,
    budget: int | None = None,
    jobs: int = 1,
    limit: int | None = None,
) -> list[tuple[int, ...]]:
    """All isomorphisms S -> T as mapping tuples (or the first ``limit``)."""
    budget = DEFAULT_NODE_BUDGET if budget is None else budget
    if s.n != t.n:
        return []
    pair = _fingerprint_ids(s, t)
    if pair is None:
        return []
    sid, tid = pair
    by_class: dict[int, list[int]] = {}
    for y, c in enumerate(tid):
        by_class.setdefault(c, []).append(y)
    gens = generating_set(s)
    cand = [by_class.get(sid[g], []) for g in gens]
    # most-constrained generator first
    order = sorted(range(len(gens)), key=lambda i: (len(cand[i]), gens[i]))
    gens = [gens[i] for i in order]
    cand = [cand[i] for i in order]
    if jobs > 1 and limit is None and len(cand[0]) > 1:
        chunks = [cand[0][i::jobs] for i in range(jobs)]
        payload = [
            (s.table, t.table, gens, [chunk] + cand[1:], sid, tid, budget)
            for chunk in chunks
            if chunk
        ]
        with ProcessPoolExecutor(max_workers=len(payload)) as pool:
            parts = list(pool.map(_subsearch, payload))
        merged = [m for part in parts for m in part]
        merged.sort()
        return merged
    return _search_isomorphisms(s, t, gens, cand, sid, tid, budget, limit)


def _memo(s: FiniteSemigroup, key, build):
    cache = s.__dict__.setdefault("_morphism_cache", {})
    if key not in cache:
        cache[key] = build()
    return cache[key]


def enumerate_automorphisms(
    s: FiniteSemigroup, *, budget: int | None = None, jobs: int = 1
) -> MorphismSet:
    """The complete automorphism group of S, canonically sorted."""

    def build():
        maps = enumerate_isomorphism_mappings(s, s, budget=budget, jobs=jobs)
        return MorphismSet(
            MorphismKind.AUTOMORPHISMS, s.n, tuple(Permutation(m) for m in maps)
        )

    return _memo(s, ("aut", budget, jobs), build)


def enumerate_anti_automorphisms(
    s: FiniteSemigroup, *, budget: int | None = None, jobs: int = 1
) -> MorphismSet:
    """The complete set of anti-automorphisms of S.

    On a commutative S this is Aut(S) itself.  Otherwise one
    anti-automorphism beta is found by searching for an isomorphism onto the
    dual table, and the rest are produced as {alpha o beta}; each composite
    is re-verified against the defining equation.
    """

    def build():
        if s.is_commutative:
            auts = enumerate_automorphisms(s, budget=budget, jobs=jobs)
            return MorphismSet(MorphismKind.ANTI_AUTOMORPHISMS, s.n, auts.elements)
        first = enumerate_isomorphism_mappings(s, s.dual(), budget=budget, limit=1)
        if not first:
            return MorphismSet(MorphismKind.ANTI_AUTOMORPHISMS, s.n, ())
        beta = first[0]
        auts = enumerate_automorphisms(s, budget=budget, jobs=jobs)
        composed = sorted(compose(a.mapping, beta) for a in auts)
        for m in composed:
            assert is_anti_homomorphism(m, s, s), "composition trick produced a non-anti-morphism"
        return MorphismSet(
            MorphismKind.ANTI_AUTOMORPHISMS, s.n, tuple(Permutation(m) for m in composed)
        )

    return _memo(s, ("anti", budget, jobs), build)


def involutions(
    s: FiniteSemigroup, *, budget: int | None = None, jobs: int = 1
) -> MorphismSet:
    """Anti-automorphisms of order exactly 2 (the identity never counts)."""
    anti = enumerate_anti_automorphisms(s, budget=budget, jobs=jobs)
    kept = tuple(a for a in anti if a.is_involution())
    return MorphismSet(MorphismKind.INVOLUTIONS, s.n, kept)


def order_two_automorphisms(
    s: FiniteSemigroup, *, budget: int | None = None, jobs: int = 1
) -> MorphismSet:
    """Automorphisms alpha with alpha^2 = 1, identity included."""
    auts = enumerate_automorphisms(s, budget=budget, jobs=jobs)
    kept = tuple(a for a in auts if a.is_identity() or a.is_involution())
    return MorphismSet(MorphismKind.ORDER_TWO_AUTOMORPHISMS, s.n, kept)


def is_proper_involution(alpha, s: FiniteSemigroup) -> bool:
    """True iff the involution alpha is not also a homomorphism.

    Raises :class:`NotAnInvolutionError` unless alpha really is an
    involution of S.
    """
    m = _as_mapping(alpha)
    p = Permutation(m)
    if not (p.is_involution() and is_anti_homomorphism(p, s, s)):
        raise NotAnInvolutionError(f"{p!r} is not an involution of this semigroup")
    return not is_homomorphism(p, s, s)


def find_isomorphism(
    s: FiniteSemigroup, t: FiniteSemigroup, *, budget: int | None = None
) -> Permutation | None:
    maps = enumerate_isomorphism_mappings(s, t, budget=budget, limit=1)
    return Permutation(maps[0]) if maps else None


def find_anti_isomorphism(
    s: FiniteSemigroup, t: FiniteSemigroup, *, budget: int | None = None
) -> Permutation | None:
    maps = enumerate_isomorphism_mappings(s, t.dual(), budget=budget, limit=1)
    return Permutation(maps[0]) if maps else None
