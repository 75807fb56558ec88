"""Finite abelian groups as direct sums of cyclic factors, with exhaustive
enumeration of their automorphism groups.

Elements are plain integers ``0..size-1`` encoding residue tuples in mixed
radix (first factor most significant); index 0 is the zero element.  All
objects are immutable after construction and safe to share between threads.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import InputError, ResourceError

DEFAULT_SIZE_CAP = 64

GroupElement = int


def parse_group_spec(spec: str) -> tuple[int, ...]:
    """Parse a comma-separated factor-order string such as ``"2,2"`` or ``"4"``."""
    parts = [p.strip() for p in spec.split(",")]
    if not parts or any(p == "" for p in parts):
        raise InputError(f"bad group spec {spec!r}: expected comma-separated integers")
    try:
        orders = tuple(int(p) for p in parts)
    except ValueError:
        raise InputError(f"bad group spec {spec!r}: expected comma-separated integers") from None
    return orders


class AbelianGroup:
    """Direct sum ``Z_{n_1} x ... x Z_{n_k}`` with 0-based element indices.

    Addition, negation and element orders are precomputed; the raw tables are
    exposed (``add_table``, ``neg_table``) for hot loops.
    """

    __slots__ = ("orders", "size", "_strides", "add_table", "neg_table", "element_orders")

    def __init__(self, orders: Sequence[int], *, size_cap: int = DEFAULT_SIZE_CAP):
        orders = tuple(int(n) for n in orders)
        if not orders:
            raise InputError("group needs at least one cyclic factor")
        for n in orders:
            if n < 2:
                raise InputError(f"cyclic factor order must be >= 2, got {n}")
        size = math.prod(orders)
        if size > size_cap:
            raise InputError(f"group size {size} exceeds the size cap {size_cap}")
        self.orders = orders
        self.size = size
        strides = []
        acc = 1
        for n in reversed(orders):
            strides.append(acc)
            acc *= n
        self._strides = tuple(reversed(strides))

        tuples = [self.tuple_of(a) for a in range(size)]
        self.add_table = tuple(
            tuple(
                self.index_of(tuple((x + y) % n for x, y, n in zip(ta, tb, orders)))
                for tb in tuples
            )
            for ta in tuples
        )
        self.neg_table = tuple(
            self.index_of(tuple((-x) % n for x, n in zip(ta, orders))) for ta in tuples
        )
        self.element_orders = tuple(
            math.lcm(*(n // math.gcd(x, n) for x, n in zip(ta, orders))) for ta in tuples
        )

    @property
    def zero(self) -> int:
        return 0

    def elements(self) -> range:
        return range(self.size)

    def tuple_of(self, a: int) -> tuple[int, ...]:
        """Residue tuple encoded by index ``a``."""
        self._check(a)
        return tuple((a // s) % n for s, n in zip(self._strides, self.orders))

    def index_of(self, residues: Sequence[int]) -> int:
        """Index encoding a residue tuple (entries reduced modulo the orders)."""
        if len(residues) != len(self.orders):
            raise InputError(
                f"residue tuple has {len(residues)} entries, group has {len(self.orders)} factors"
            )
        return sum((r % n) * s for r, n, s in zip(residues, self.orders, self._strides))

    def add(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        return self.add_table[a][b]

    def neg(self, a: int) -> int:
        self._check(a)
        return self.neg_table[a]

    def element_order(self, a: int) -> int:
        """Least m >= 1 with m*a = 0."""
        self._check(a)
        return self.element_orders[a]

    def _check(self, a: int) -> None:
        if not isinstance(a, int) or not 0 <= a < self.size:
            raise InputError(f"element index {a!r} out of range for group of size {self.size}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AbelianGroup):
            return NotImplemented
        return self.orders == other.orders

    def __hash__(self) -> int:
        return hash(self.orders)

    def __repr__(self) -> str:
        return f"AbelianGroup({list(self.orders)})"


def make_group(orders: Sequence[int], *, size_cap: int = DEFAULT_SIZE_CAP) -> AbelianGroup:
    """Build a validated group from a list of cyclic factor orders."""
    return AbelianGroup(orders, size_cap=size_cap)


class Automorphism:
    """Additive bijection of an :class:`AbelianGroup`, stored as an image table."""

    __slots__ = ("group", "table")

    def __init__(self, group: AbelianGroup, table: Sequence[int], *, _checked: bool = False):
        table = tuple(table)
        if not _checked:
            _validate_automorphism(group, table)
        self.group = group
        self.table = table

    def __call__(self, a: int) -> int:
        return self.table[a]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Automorphism):
            return NotImplemented
        return self.group == other.group and self.table == other.table

    def __hash__(self) -> int:
        return hash((self.group.orders, self.table))

    def __repr__(self) -> str:
        return f"Automorphism({list(self.table)})"

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.table))


def _validate_automorphism(group: AbelianGroup, table: tuple[int, ...]) -> None:
    n = group.size
    if len(table) != n:
        raise InputError(f"automorphism table has {len(table)} entries, group size is {n}")
    if sorted(table) != list(range(n)):
        raise InputError("automorphism table is not a permutation of the group elements")
    if table[0] != 0:
        raise InputError("automorphism does not fix the zero element")
    add = group.add_table
    for i in range(n):
        ti = table[i]
        row = add[i]
        for j in range(n):
            if table[row[j]] != add[ti][table[j]]:
                raise InputError(f"map is not additive at ({i}, {j})")


def identity_automorphism(group: AbelianGroup) -> Automorphism:
    return Automorphism(group, range(group.size), _checked=True)


def compose(f: Automorphism, h: Automorphism) -> Automorphism:
    """Composition f after h: ``compose(f, h)(a) == f(h(a))``."""
    if f.group != h.group:
        raise InputError("cannot compose automorphisms of different groups")
    ft = f.table
    return Automorphism(f.group, tuple(ft[x] for x in h.table), _checked=True)


def invert(f: Automorphism) -> Automorphism:
    """Inverse permutation of an automorphism."""
    out = [0] * len(f.table)
    for i, x in enumerate(f.table):
        out[x] = i
    return Automorphism(f.group, out, _checked=True)


class AutomorphismGroup:
    """All automorphisms of a group in canonical (lexicographic) order.

    The canonical order is load-bearing: cocycle files reference automorphisms
    by their position in ``members``, so enumeration must be deterministic.
    The identity is always member 0 (it is lexicographically minimal).
    """

    __slots__ = ("group", "members", "identity_index", "_index", "_compose", "_invert")

    def __init__(self, group: AbelianGroup, members: Sequence[Automorphism]):
        self.group = group
        self.members = tuple(members)
        self._index = {aut.table: i for i, aut in enumerate(self.members)}
        if len(self._index) != len(self.members):
            raise InputError("duplicate automorphisms in member list")
        ident = tuple(range(group.size))
        if ident not in self._index:
            raise InputError("member list is missing the identity automorphism")
        self.identity_index = self._index[ident]
        self._compose: dict[tuple[int, int], int] = {}
        self._invert: dict[int, int] = {}

    def __len__(self) -> int:
        return len(self.members)

    def __getitem__(self, i: int) -> Automorphism:
        return self.members[i]

    def __iter__(self) -> Iterator[Automorphism]:
        return iter(self.members)

    def index_of(self, aut: Automorphism) -> int:
        if aut.group != self.group:
            raise InputError("automorphism belongs to a different group")
        try:
            return self._index[aut.table]
        except KeyError:
            raise InputError("automorphism is not a member of this enumeration") from None

    def compose_indices(self, i: int, j: int) -> int:
        """Canonical index of ``members[i]`` after ``members[j]``."""
        key = (i, j)
        out = self._compose.get(key)
        if out is None:
            ft = self.members[i].table
            out = self._index[tuple(ft[x] for x in self.members[j].table)]
            self._compose[key] = out
        return out

    def invert_index(self, i: int) -> int:
        out = self._invert.get(i)
        if out is None:
            table = self.members[i].table
            inv = [0] * len(table)
            for a, x in enumerate(table):
                inv[x] = a
            out = self._index[tuple(inv)]
            self._invert[i] = out
        return out


@lru_cache(maxsize=None)
def enumerate_automorphisms(
    group: AbelianGroup, *, size_cap: int = DEFAULT_SIZE_CAP
) -> AutomorphismGroup:
    """Exhaustively enumerate Aut(A) for a finite abelian group A.

    Brute force over images of the canonical cyclic generators: generator i
    may map to any element whose order divides the factor order n_i; every
    such assignment extends to an additive map, which is kept when bijective.
    Exponential in the number of factors; guarded by ``size_cap``.
    """
    if group.size > size_cap:
        raise ResourceError(
            f"automorphism enumeration refused: group size {group.size} exceeds cap {size_cap}"
        )
    n = group.size
    add = group.add_table
    candidates = [
        [a for a in range(n) if order % group.element_orders[a] == 0]
        for order in group.orders
    ]
    tuples = [group.tuple_of(a) for a in range(n)]

    members = []
    for images in itertools.product(*candidates):
        # multiples[j][m] = m * images[j]
        multiples = []
        for g, order in zip(images, group.orders):
            row = [0]
            for _ in range(order - 1):
                row.append(add[row[-1]][g])
            multiples.append(row)
        table = []
        for residues in tuples:
            acc = 0
            for j, c in enumerate(residues):
                acc = add[acc][multiples[j][c]]
            table.append(acc)
        if len(set(table)) != n:
            continue
        members.append(Automorphism(group, table))

    members.sort(key=lambda aut: aut.table)
    return AutomorphismGroup(group, members)
