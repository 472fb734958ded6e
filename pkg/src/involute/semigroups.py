"""Finite semigroups presented by Cayley tables.

Elements are the dense indices 0..n-1; ``table[i][j]`` is the product i*j.
Optional names are display-only metadata.  Instances are immutable after
construction and safe to share between workers.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import (
    IndexOutOfRangeError,
    InputFormatError,
    NotAssociativeError,
    OrderBudgetExceededError,
)

#: Largest table accepted for full analysis (P_3 has 203 elements, T_4 has 256).
TABLE_CAP = 1024


class FiniteSemigroup:
    """A semigroup on {0..n-1}; build instances through :func:`validate`."""

    def __init__(self, table, names=None, identity=None, _checked=False):
        if not _checked:
            other = validate(table, names=names)
            table, names, identity = other.table, other.names, other.identity
        self.table = table
        self.n = len(table)
        self.names = names
        self.identity = identity

    @cached_property
    def np_table(self) -> np.ndarray:
        return np.asarray(self.table, dtype=np.int32)

    @cached_property
    def is_commutative(self) -> bool:
        a = self.np_table
        return bool((a == a.T).all())

    @cached_property
    def green(self) -> "GreenStructure":
        return green_relations(self)

    @cached_property
    def fingerprints(self) -> tuple["ElementFingerprint", ...]:
        return _compute_fingerprints(self)

    def product(self, i: int, j: int) -> int:
        return self.table[i][j]

    def dual(self) -> "FiniteSemigroup":
        """The opposite semigroup (transposed table); memoized."""
        cached = self.__dict__.get("_dual")
        if cached is not None:
            return cached
        n = self.n
        t = self.table
        dual_table = tuple(tuple(t[j][i] for j in range(n)) for i in range(n))
        out = FiniteSemigroup.__new__(FiniteSemigroup)
        out.table = dual_table
        out.n = n
        out.names = self.names
        out.identity = self.identity
        out._dual = self
        self._dual = out
        return out

    def name_of(self, x: int) -> str:
        return self.names[x] if self.names is not None else str(x)

    def __len__(self) -> int:
        return self.n

    def __repr__(self):
        return f"FiniteSemigroup(n={self.n}, identity={self.identity})"


def validate(table, names=None) -> FiniteSemigroup:
    """Check a square index table for associativity and wrap it.

    Detects and records an identity element if one exists.  Raises
    :class:`NotAssociativeError` with a witness triple, or
    :class:`IndexOutOfRangeError` for entries outside 0..n-1.
    """
    rows = [tuple(int(v) for v in row) for row in table]
    n = len(rows)
    if n == 0:
        raise InputFormatError("empty table")
    if any(len(row) != n for row in rows):
        raise InputFormatError("table is not square")
    if n > TABLE_CAP:
        raise OrderBudgetExceededError(TABLE_CAP)
    arr = np.asarray(rows, dtype=np.int64)
    if arr.min() < 0 or arr.max() >= n:
        raise IndexOutOfRangeError(f"table entries must lie in 0..{n - 1}")
    arr = arr.astype(np.int32)
    # associativity, one row of the outer index at a time to bound memory
    for i in range(n):
        left = arr[arr[i]]          # [j,k] -> (i*j)*k
        right = arr[i][arr]         # [j,k] -> i*(j*k)
        if not np.array_equal(left, right):
            j, k = map(int, np.argwhere(left != right)[0])
            raise NotAssociativeError(i, j, k)
    if names is not None:
        names = tuple(str(s) for s in names)
        if len(names) != n:
            raise InputFormatError("names list length differs from table size")
    ident = np.arange(n, dtype=np.int32)
    hits = np.flatnonzero((arr == ident).all(axis=1) & (arr.T == ident).all(axis=1))
    identity = int(hits[0]) if hits.size else None
    return FiniteSemigroup(tuple(rows), names=names, identity=identity, _checked=True)


def is_commutative(s: FiniteSemigroup) -> bool:
    return s.is_commutative


def atoms(s: FiniteSemigroup) -> frozenset[int]:
    """Elements with no factorization into non-identity elements.

    When an identity exists it neither counts as a factor nor as an atom
    (it factors as 1*1); without an identity every factorization counts.
    """
    e = s.identity
    factors = [x for x in range(s.n) if x != e]
    products = {s.table[b][c] for b in factors for c in factors}
    out = set(range(s.n)) - products
    if e is not None:
        out.discard(e)
    return frozenset(out)


@dataclass(frozen=True)
class GreenStructure:
    """The five Green partitions, each a tuple of disjoint frozensets."""

    r_classes: tuple
    l_classes: tuple
    h_classes: tuple
    d_classes: tuple
    j_classes: tuple


def _canonical_partition(class_of: dict) -> tuple:
    groups: dict = {}
    for x, key in class_of.items():
        groups.setdefault(key, []).append(x)
    return tuple(sorted((frozenset(g) for g in groups.values()), key=min))


def green_relations(s: FiniteSemigroup) -> GreenStructure:
    """Green's relations from principal-ideal equalities.

    The identity of S^1 is adjoined virtually: each ideal mask always
    contains the element itself.  On a finite semigroup the computed D and J
    partitions must agree, which is asserted here.
    """
    n, t = s.n, s.table
    rmask = [0] * n
    lmask = [0] * n
    for x in range(n):
        m = 1 << x
        row = t[x]
        for j in range(n):
            m |= 1 << row[j]
        rmask[x] = m
    for y in range(n):
        m = 1 << y
        for i in range(n):
            m |= 1 << t[i][y]
        lmask[y] = m

    jcache: dict = {}
    jmask = [0] * n
    for x in range(n):
        lm = lmask[x]
        got = jcache.get(lm)
        if got is None:
            m = 0
            probe = lm
            while probe:
                low = probe & -probe
                m |= rmask[low.bit_length() - 1]
                probe ^= low
            jcache[lm] = got = m
        jmask[x] = got

    r_part = _canonical_partition({x: rmask[x] for x in range(n)})
    l_part = _canonical_partition({x: lmask[x] for x in range(n)})
    h_part = _canonical_partition({x: (rmask[x], lmask[x]) for x in range(n)})
    j_part = _canonical_partition({x: jmask[x] for x in range(n)})

    # D = R v L via union-find over the two partitions
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for part in (r_part, l_part):
        for cls in part:
            it = iter(cls)
            root = find(next(it))
            for other in it:
                parent[find(other)] = root
    d_part = _canonical_partition({x: find(x) for x in range(n)})
    assert d_part == j_part, "D != J on a finite semigroup: computation bug"
    return GreenStructure(r_part, l_part, h_part, d_part, j_part)


@dataclass(frozen=True)
class ElementFingerprint:
    """Cheap isomorphism invariants of a single element.

    The translation ranks count where x can move: right_mult_rank = |xS|
    (distinct entries in x's row), left_mult_rank = |Sx| (x's column).
    Every isomorphism preserves all fields; an anti-isomorphism preserves
    them after :meth:`swapped` (R and L classes trade places, as do the two
    translation ranks).
    """

    is_idempotent: bool
    index: int
    period: int
    r_class_size: int
    l_class_size: int
    d_class_size: int
    left_mult_rank: int
    right_mult_rank: int

    def swapped(self) -> "ElementFingerprint":
        return ElementFingerprint(
            self.is_idempotent,
            self.index,
            self.period,
            self.l_class_size,
            self.r_class_size,
            self.d_class_size,
            self.right_mult_rank,
            self.left_mult_rank,
        )


def index_and_period(s: FiniteSemigroup, x: int) -> tuple[int, int]:
    """Minimal (i, p) with x^(i+p) = x^i; bounded by n via pigeonhole."""
    seen = {x: 1}
    y = x
    for k in range(2, s.n + 2):
        y = s.table[y][x]
        if y in seen:
            i = seen[y]
            return i, k - i
        seen[y] = k
    raise AssertionError("power sequence failed to cycle within n steps")


def fingerprints(s: FiniteSemigroup) -> tuple[ElementFingerprint, ...]:
    return s.fingerprints


def _compute_fingerprints(s: FiniteSemigroup) -> tuple[ElementFingerprint, ...]:
    n, t = s.n, s.table
    green = s.green
    size_of = {}
    for attr, slot in (("r_classes", 0), ("l_classes", 1), ("d_classes", 2)):
        for cls in getattr(green, attr):
            for x in cls:
                size_of.setdefault(x, [0, 0, 0])[slot] = len(cls)
    out = []
    for x in range(n):
        rcs, lcs, dcs = size_of[x]
        row = t[x]
        col_rank = len({t[i][x] for i in range(n)})
        idx, per = index_and_period(s, x)
        out.append(
            ElementFingerprint(
                is_idempotent=t[x][x] == x,
                index=idx,
                period=per,
                r_class_size=rcs,
                l_class_size=lcs,
                d_class_size=dcs,
                left_mult_rank=col_rank,
                right_mult_rank=len(set(row)),
            )
        )
    return tuple(out)


def closure_of_subset(s: FiniteSemigroup, seed) -> frozenset[int]:
    """Smallest subsemigroup containing ``seed``."""
    members = set(seed)
    work = list(members)
    t = s.table
    while work:
        x = work.pop()
        row = t[x]
        for y in tuple(members):
            for p in (row[y], t[y][x]):
                if p not in members:
                    members.add(p)
                    work.append(p)
    return frozenset(members)


def generating_set(s: FiniteSemigroup) -> list[int]:
    """A generating set found greedily; not necessarily minimal.

    Preference order for the next generator: largest monogenic subsemigroup,
    then most distinct row/column values, then rarest fingerprint, then
    lowest index.  The ties matter only for search speed downstream.
    """
    n = s.n
    fps = s.fingerprints
    class_size = Counter(fps)
    orbit = [fp.index + fp.period - 1 for fp in fps]
    spread = [fp.left_mult_rank + fp.right_mult_rank for fp in fps]
    order = sorted(
        range(n),
        key=lambda x: (-orbit[x], -spread[x], class_size[fps[x]], x),
    )
    gens: list[int] = []
    have: frozenset[int] = frozenset()
    for x in order:
        if x in have:
            continue
        gens.append(x)
        have = closure_of_subset(s, have | {x})
        if len(have) == n:
            break
    return gens


# ---------------------------------------------------------------------------
# Cayley-table file format: {"n": int, "table": [[int, ...], ...],
#                            "names": optional, "identity": optional}

def to_json_dict(s: FiniteSemigroup) -> dict:
    doc = {"n": s.n, "table": [list(row) for row in s.table]}
    if s.names is not None:
        doc["names"] = list(s.names)
    if s.identity is not None:
        doc["identity"] = s.identity
    return doc


def from_json_dict(doc) -> FiniteSemigroup:
    if not isinstance(doc, dict) or "table" not in doc:
        raise InputFormatError("expected an object with a 'table' field")
    table = doc["table"]
    if "n" in doc and doc["n"] != len(table):
        raise InputFormatError("'n' disagrees with the table height")
    s = validate(table, names=doc.get("names"))
    if "identity" in doc and doc["identity"] != s.identity:
        raise InputFormatError(
            f"declared identity {doc['identity']} but detected {s.identity}"
        )
    return s


def load_table(path) -> FiniteSemigroup:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"{path} is not valid JSON: {exc}") from exc
    return from_json_dict(doc)


def dump_table(s: FiniteSemigroup, path) -> None:
    with open(path, "w") as fh:
        json.dump(to_json_dict(s), fh, sort_keys=True)
        fh.write("\n")
