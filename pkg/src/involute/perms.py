"""Permutations of {0, ..., n-1}.

Composition is right-to-left everywhere in this package:
``(p * q)(x) == p(q(x))``, i.e. the right factor acts first.  All identities
quoted from the literature are re-derived under this convention in the tests.
"""

from __future__ import annotations

import re
from functools import reduce
from math import gcd

from .errors import InputFormatError


def compose(p, q):
    """Compose two mapping tuples: (p o q)(x) = p(q(x))."""
    return tuple(map(p.__getitem__, q))


def invert(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def identity_tuple(n):
    return tuple(range(n))


class Permutation:
    """An immutable bijection of {0..n-1}, stored as its mapping tuple."""

    __slots__ = ("mapping",)

    def __init__(self, mapping):
        m = tuple(mapping)
        if sorted(m) != list(range(len(m))):
            raise ValueError(f"not a permutation of 0..{len(m) - 1}: {m}")
        object.__setattr__(self, "mapping", m)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, cycles, degree: int) -> "Permutation":
        m = list(range(degree))
        for cyc in cycles:
            cyc = list(cyc)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                if not 0 <= a < degree:
                    raise ValueError(f"cycle point {a} outside degree {degree}")
                if m[a] != a:
                    raise ValueError("cycles are not disjoint")
                m[a] = b
        return cls(m)

    @property
    def degree(self) -> int:
        return len(self.mapping)

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # self * other applies other first
        return Permutation(compose(self.mapping, other.mapping))

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        out = identity_tuple(self.degree)
        base = self.mapping
        while k:
            if k & 1:
                out = compose(base, out)
            base = compose(base, base)
            k >>= 1
        return Permutation(out)

    def inverse(self) -> "Permutation":
        return Permutation(invert(self.mapping))

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.mapping))

    def is_involution(self) -> bool:
        """Order exactly 2."""
        m = self.mapping
        return any(v != i for i, v in enumerate(m)) and all(m[v] == i for i, v in enumerate(m))

    def order(self) -> int:
        return reduce(lambda a, b: a * b // gcd(a, b), (len(c) for c in self.cycles()), 1)

    def parity(self) -> int:
        """0 for even, 1 for odd."""
        return sum(len(c) - 1 for c in self.cycles()) % 2

    def cycles(self):
        """Non-trivial cycles, each rotated to start at its least point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start] or self.mapping[start] == start:
                seen[start] = True
                continue
            cyc = []
            x = start
            while not seen[x]:
                seen[x] = True
                cyc.append(x)
                x = self.mapping[x]
            out.append(tuple(cyc))
        return out

    def cycle_string(self, names=None) -> str:
        label = (lambda x: names[x]) if names is not None else str
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(label(x) for x in c) + ")" for c in cycs)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.mapping == other.mapping

    def __lt__(self, other):
        return self.mapping < other.mapping

    def __hash__(self):
        return hash(self.mapping)

    def __repr__(self):
        return f"Permutation({self.cycle_string()}, degree={self.degree})"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int | None = None) -> Permutation:
    """Parse cycle notation like ``(0 1 2)(3 4)``; ``()`` or ``id`` is the identity.

    Points may be separated by spaces or commas.  The degree defaults to one
    more than the largest point mentioned.
    """
    text = text.strip()
    if text in ("id", ""):
        return Permutation.identity(degree or 0)
    stripped = _CYCLE_RE.sub("", text)
    if stripped.strip():
        raise InputFormatError(f"cannot parse permutation literal {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(text):
        points = [p for p in re.split(r"[,\s]+", body.strip()) if p]
        try:
            cyc = [int(p) for p in points]
        except ValueError as exc:
            raise InputFormatError(f"bad cycle point in {text!r}") from exc
        if len(cyc) >= 2:
            cycles.append(cyc)
    top = max((max(c) for c in cycles), default=-1) + 1
    deg = degree if degree is not None else top
    if top > deg:
        raise InputFormatError(f"cycle point {top - 1} outside degree {deg}")
    try:
        return Permutation.from_cycles(cycles, deg)
    except ValueError as exc:
        raise InputFormatError(str(exc)) from exc
