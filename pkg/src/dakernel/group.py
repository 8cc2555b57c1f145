"""Finite groups given by Cayley tables.

Elements are indexed ``0..m-1`` and index 0 is always the identity. Most of
the library works with raw indices through :meth:`Group.mul` and
:meth:`Group.inv`; :class:`GroupElem` is the checked public handle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

MAX_ORDER = 64


class GroupError(ValueError):
    pass


class Group:
    def __init__(self, table: Sequence[Sequence[int]], names: Sequence[str] | None = None):
        table = tuple(tuple(int(x) for x in row) for row in table)
        m = len(table)
        if m < 1:
            raise GroupError("a group needs at least one element")
        if m > MAX_ORDER:
            raise GroupError(f"group order {m} exceeds the cap {MAX_ORDER}")
        _check_table(table)
        self.order = m
        self.table = table
        if names is None:
            names = ["e"] + [f"g{i}" for i in range(1, m)]
        if len(names) != m or names[0] != "e":
            raise GroupError("names must have one entry per element and start with 'e'")
        if len(set(names)) != m:
            raise GroupError("element names must be distinct")
        self.names = tuple(names)
        self._inv = tuple(row.index(0) for row in table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self._inv[a]

    def elements(self) -> list[GroupElem]:
        return [GroupElem(self, i) for i in range(self.order)]

    def elem(self, key: int | str) -> GroupElem:
        if isinstance(key, str):
            try:
                key = self.names.index(key)
            except ValueError:
                raise GroupError(f"unknown group element {key!r}") from None
        if not 0 <= key < self.order:
            raise GroupError(f"group element {key} out of range 0..{self.order - 1}")
        return GroupElem(self, key)

    @property
    def identity(self) -> GroupElem:
        return GroupElem(self, 0)

    def label(self, a: int) -> str:
        """Name of element ``a`` without the caret, e.g. ``s2`` for ``s^2``."""
        return self.names[a].replace("^", "")

    def lookup(self, label: str) -> int | None:
        for i, name in enumerate(self.names):
            if label in (name, name.replace("^", "")):
                return i
        if label.startswith("g") and label[1:].isdigit():
            i = int(label[1:])
            if 0 <= i < self.order:
                return i
        return None

    def power(self, a: int, k: int) -> int:
        r = 0
        for _ in range(k % self.element_order(a)):
            r = self.mul(r, a)
        return r

    def element_order(self, a: int) -> int:
        r, k = a, 1
        while r != 0:
            r = self.mul(r, a)
            k += 1
        return k

    def orbit(self, act, x):
        """Orbit of ``x`` under ``act(g, x)`` for all group indices ``g``."""
        seen = []
        for g in range(self.order):
            y = act(g, x)
            if y not in seen:
                seen.append(y)
        return seen

    def __eq__(self, other):
        return isinstance(other, Group) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"Group(order={self.order})"


@dataclass(frozen=True)
class GroupElem:
    group: Group
    index: int

    def __post_init__(self):
        if not 0 <= self.index < self.group.order:
            raise GroupError(f"index {self.index} outside group of order {self.group.order}")

    def __mul__(self, other: GroupElem) -> GroupElem:
        return compose(self, other)

    def __repr__(self):
        return self.group.names[self.index]


def _check_table(table):
    m = len(table)
    full = set(range(m))
    for i, row in enumerate(table):
        if len(row) != m:
            raise GroupError(f"row {i} has length {len(row)}, expected {m}")
        if set(row) != full:
            raise GroupError(f"row {i} is not a permutation of 0..{m - 1}")
    for j in range(m):
        if {table[i][j] for i in range(m)} != full:
            raise GroupError(f"column {j} is not a permutation of 0..{m - 1}")
    for i in range(m):
        if table[0][i] != i or table[i][0] != i:
            raise GroupError("element 0 must be the identity")
    for a, b, c in itertools.product(range(m), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise GroupError(f"table is not associative at ({a}, {b}, {c})")


def cyclic(n: int) -> Group:
    if n < 1:
        raise GroupError("cyclic group order must be positive")
    names = ["e", "s"] + [f"s^{k}" for k in range(2, n)]
    return Group([[(a + b) % n for b in range(n)] for a in range(n)], names[:n])


def direct_product(g: Group, h: Group) -> Group:
    """Product with element ``(a, b)`` at index ``a * |h| + b``."""
    m = h.order
    table = [
        [g.mul(a1, a2) * m + h.mul(b1, b2) for a2 in range(g.order) for b2 in range(m)]
        for a1 in range(g.order)
        for b1 in range(m)
    ]
    names = ["e"]
    for a in range(g.order):
        for b in range(m):
            if a or b:
                parts = [x for x in (g.label(a) if a else "", h.label(b) if b else "") if x]
                names.append("".join(parts) if len(parts) == 1 else f"{parts[0]}_{parts[1]}")
    if len(set(names)) != len(names):
        names = None
    return Group(table, names)


def cayley(table: Sequence[Sequence[int]]) -> Group:
    return Group(table)


def read_cayley(path: str | Path) -> Group:
    """Read a whitespace-separated index matrix."""
    rows = [line.split() for line in Path(path).read_text().splitlines() if line.strip()]
    try:
        return cayley([[int(x) for x in row] for row in rows])
    except ValueError as exc:
        if isinstance(exc, GroupError):
            raise
        raise GroupError(f"bad Cayley table entry in {path}: {exc}") from None


def make_group(spec) -> Group:
    """Build a group from ``"cyclic 2"``, ``("cyclic", 2)`` or ``("cayley", table)``."""
    if isinstance(spec, Group):
        return spec
    if isinstance(spec, str):
        parts = spec.split()
        if parts[:1] == ["cyclic"] and len(parts) == 2:
            return cyclic(int(parts[1]))
        if parts[:1] == ["cayley"] and len(parts) == 2:
            return read_cayley(parts[1])
        if parts[:1] == ["klein"]:
            return direct_product(cyclic(2), cyclic(2))
        raise GroupError(f"unrecognised group spec {spec!r}")
    kind, arg = spec
    if kind == "cyclic":
        return cyclic(arg)
    if kind == "cayley":
        return cayley(arg)
    raise GroupError(f"unrecognised group spec {spec!r}")


def compose(g: GroupElem, h: GroupElem) -> GroupElem:
    if g.group is not h.group and g.group != h.group:
        raise GroupError("cannot compose elements of different groups")
    return GroupElem(g.group, g.group.mul(g.index, h.index))


def inverse(g: GroupElem) -> GroupElem:
    return GroupElem(g.group, g.group.inv(g.index))
