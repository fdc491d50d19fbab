"""Vertex groups: cyclic, infinite cyclic, and finite multiplication tables.

A vertex group hands the rest of the package a tiny uniform interface:
compose/invert/identity on opaque payloads, a geodesic length over the
declared generators, a deterministic serialization (`atom`), and a total
order key used to pick canonical forms. Payloads are ints throughout:
residues for cyclic groups, signed integers for the integers kind, element
indices for table groups.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    ForeignElement,
    GeneratorsDoNotGenerate,
    NotAGroup,
    TrivialGroup,
    UnknownElement,
    UnsupportedKind,
)

_INT_ATOM = re.compile(r"[+-]?\d+\Z")


class VertexGroup:
    kind = "abstract"
    infinite = False

    def identity(self):
        raise NotImplementedError

    def is_identity(self, a) -> bool:
        return a == self.identity()

    def check(self, a) -> None:
        raise NotImplementedError

    def compose(self, a, b):
        raise NotImplementedError

    def invert(self, a):
        raise NotImplementedError

    def element_length(self, a) -> int:
        """Geodesic length of `a` over the declared generators and inverses."""
        raise NotImplementedError

    def letters(self, a) -> tuple:
        """A geodesic decomposition of `a` into single generator steps."""
        raise NotImplementedError

    def generator_letters(self) -> tuple:
        """Distinct nonidentity payloads one generator step from identity."""
        raise NotImplementedError

    def atom(self, a) -> str:
        raise NotImplementedError

    def parse_atom(self, text: str):
        raise NotImplementedError

    def key(self, a):
        """Total order key, fixed per group, for canonical linearization."""
        raise NotImplementedError

    def conjugacy_witness(self, g, h):
        """Some k with k g k^-1 = h of minimal length, or None."""
        raise NotImplementedError

    def local_clf(self, n: int) -> int:
        """Max over conjugate pairs with |g|+|h| <= n of the least witness length."""
        raise NotImplementedError


@dataclass(frozen=True)
class CyclicGroup(VertexGroup):
    order: int
    kind = "cyclic"
    infinite = False

    def __post_init__(self):
        if not isinstance(self.order, int) or self.order < 2:
            raise TrivialGroup(f"cyclic order must be an integer >= 2, got {self.order!r}")

    def identity(self):
        return 0

    def check(self, a):
        if not isinstance(a, int) or not 0 <= a < self.order:
            raise ForeignElement(f"{a!r} is not a residue mod {self.order}")

    def compose(self, a, b):
        self.check(a), self.check(b)
        return (a + b) % self.order

    def invert(self, a):
        self.check(a)
        return (-a) % self.order

    def element_length(self, a):
        self.check(a)
        return min(a, self.order - a)

    def letters(self, a):
        self.check(a)
        if a <= self.order - a:
            return (1,) * a
        return (self.order - 1,) * (self.order - a)

    def generator_letters(self):
        return tuple(sorted({1, self.order - 1}))

    def atom(self, a):
        self.check(a)
        return str(a)

    def parse_atom(self, text):
        if not _INT_ATOM.match(text):
            raise UnknownElement(f"{text!r} is not an integer atom")
        return int(text) % self.order

    def key(self, a):
        self.check(a)
        return a

    def conjugacy_witness(self, g, h):
        return 0 if g == h else None

    def local_clf(self, n):
        return 0


@dataclass(frozen=True)
class IntegersGroup(VertexGroup):
    kind = "integers"
    infinite = True

    def identity(self):
        return 0

    def check(self, a):
        if not isinstance(a, int) or isinstance(a, bool):
            raise ForeignElement(f"{a!r} is not an integer")

    def compose(self, a, b):
        self.check(a), self.check(b)
        return a + b

    def invert(self, a):
        self.check(a)
        return -a

    def element_length(self, a):
        self.check(a)
        return abs(a)

    def letters(self, a):
        self.check(a)
        return (1,) * a if a >= 0 else (-1,) * (-a)

    def generator_letters(self):
        return (-1, 1)

    def atom(self, a):
        self.check(a)
        return str(a)

    def parse_atom(self, text):
        if not _INT_ATOM.match(text):
            raise UnknownElement(f"{text!r} is not an integer atom")
        return int(text)

    def key(self, a):
        self.check(a)
        return a

    def conjugacy_witness(self, g, h):
        return 0 if g == h else None

    def local_clf(self, n):
        return 0


@dataclass(frozen=True)
class TableGroup(VertexGroup):
    """Finite group given by an explicit multiplication table.

    `names[0]` is the identity. `table[i][j]` is the index of names[i]*names[j].
    Geodesics are breadth-first over the declared generators and their
    inverses, so element_length and letters depend on the generator choice.
    """

    names: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    generators: tuple[int, ...]
    kind = "table"
    infinite = False

    def __post_init__(self):
        n = len(self.names)
        if n < 2:
            raise TrivialGroup("table group needs at least two elements")
        if len(set(self.names)) != n:
            raise NotAGroup("element names are not distinct")
        for name in self.names:
            if not name or ":" in name or any(c.isspace() for c in name):
                raise NotAGroup(f"bad element name {name!r}")
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise NotAGroup("multiplication table is not square")
        for row in self.table:
            for x in row:
                if not isinstance(x, int) or not 0 <= x < n:
                    raise NotAGroup(f"table entry {x!r} is not an element index")
        for j in range(n):
            if self.table[0][j] != j or self.table[j][0] != j:
                raise NotAGroup("index 0 does not act as the identity")
        for g in range(n):
            if 0 not in self.table[g]:
                raise NotAGroup(f"element {self.names[g]!r} has no inverse")
        for a in range(n):
            for b in range(n):
                ab = self.table[a][b]
                for c in range(n):
                    if self.table[ab][c] != self.table[a][self.table[b][c]]:
                        raise NotAGroup("multiplication is not associative")
        if not self.generators:
            raise GeneratorsDoNotGenerate("no generators declared")
        for g in self.generators:
            if not isinstance(g, int) or not 0 <= g < n:
                raise NotAGroup(f"generator index {g!r} out of range")
        if len(self._bfs[0]) != n:
            missing = [self.names[i] for i in range(n) if i not in self._bfs[0]]
            raise GeneratorsDoNotGenerate(
                f"generators do not reach {', '.join(missing)}"
            )

    @cached_property
    def _bfs(self):
        """(dist, predecessor letter) maps from identity over generator letters."""
        letters = self.generator_letters()
        dist = {0: 0}
        pred: dict[int, int] = {}
        q = deque([0])
        while q:
            x = q.popleft()
            for s in letters:
                y = self.table[x][s]
                if y not in dist:
                    dist[y] = dist[x] + 1
                    pred[y] = s
                    q.append(y)
        return dist, pred

    def identity(self):
        return 0

    def check(self, a):
        if not isinstance(a, int) or not 0 <= a < len(self.names):
            raise ForeignElement(f"{a!r} is not an element index")

    def compose(self, a, b):
        self.check(a), self.check(b)
        return self.table[a][b]

    def invert(self, a):
        self.check(a)
        return self.table[a].index(0)

    def element_length(self, a):
        self.check(a)
        return self._bfs[0][a]

    def letters(self, a):
        self.check(a)
        dist, pred = self._bfs
        out = []
        while a != 0:
            s = pred[a]
            out.append(s)
            a = self.table[a][self.invert(s)]
        return tuple(reversed(out))

    def generator_letters(self):
        letters = set()
        for g in self.generators:
            if g != 0:
                letters.add(g)
                letters.add(self.table[g].index(0))
        return tuple(sorted(letters))

    def atom(self, a):
        self.check(a)
        return self.names[a]

    def parse_atom(self, text):
        try:
            return self.names.index(text)
        except ValueError:
            raise UnknownElement(f"{text!r} is not an element name") from None

    def key(self, a):
        self.check(a)
        return a

    @cached_property
    def _by_length(self):
        dist = self._bfs[0]
        return tuple(sorted(range(len(self.names)), key=lambda k: (dist[k], k)))

    def conjugacy_witness(self, g, h):
        self.check(g), self.check(h)
        for k in self._by_length:
            if self.table[self.table[k][g]][self.invert(k)] == h:
                return k
        return None

    @cached_property
    def _min_witness(self):
        """min |k| with k g k^-1 = h, for every conjugate ordered pair."""
        dist = self._bfs[0]
        n = len(self.names)
        out: dict[tuple[int, int], int] = {}
        for g in range(n):
            for k in range(n):
                h = self.table[self.table[k][g]][self.invert(k)]
                cur = out.get((g, h))
                if cur is None or dist[k] < cur:
                    out[(g, h)] = dist[k]
        return out

    def local_clf(self, n):
        dist = self._bfs[0]
        best = 0
        for (g, h), w in self._min_witness.items():
            if dist[g] + dist[h] <= n:
                best = max(best, w)
        return best


# ---------------------------------------------------------------------------
# construction from declarative data


def validate_group(data) -> VertexGroup:
    """Build a vertex group from its JSON-style description.

    {"kind": "cyclic", "order": n}
    {"kind": "integers"}
    {"kind": "table", "elements": [...], "table": [[names]], "generators": [...]}
    Table rows and generators refer to elements by name; elements[0] is the
    identity.
    """
    if not isinstance(data, dict) or "kind" not in data:
        raise UnsupportedKind("group description must be an object with a 'kind'")
    kind = data["kind"]
    if kind == "cyclic":
        if "order" not in data:
            raise UnsupportedKind("cyclic group needs an 'order'")
        return CyclicGroup(data["order"])
    if kind == "integers":
        return IntegersGroup()
    if kind == "table":
        for field in ("elements", "table", "generators"):
            if field not in data:
                raise UnsupportedKind(f"table group needs '{field}'")
        names = tuple(data["elements"])
        pos = {v: i for i, v in enumerate(names)}
        if len(pos) != len(names):
            raise NotAGroup("element names are not distinct")

        def resolve(name):
            if name not in pos:
                raise NotAGroup(f"{name!r} is not a declared element")
            return pos[name]

        table = tuple(
            tuple(resolve(x) for x in row) if isinstance(row, (list, tuple)) else ()
            for row in data["table"]
        )
        generators = tuple(resolve(g) for g in data["generators"])
        return TableGroup(names, table, generators)
    raise UnsupportedKind(f"unknown group kind {kind!r}")


# Spec-named free functions; handy for callers that keep groups in sequences.

def compose(group: VertexGroup, a, b):
    return group.compose(a, b)


def invert(group: VertexGroup, a):
    return group.invert(a)


def element_length(group: VertexGroup, a) -> int:
    return group.element_length(a)


def conjugacy_witness_local(group: VertexGroup, g, h):
    return group.conjugacy_witness(g, h)


def local_clf(group: VertexGroup, n: int) -> int:
    return group.local_clf(n)
