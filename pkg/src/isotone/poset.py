"""Immutable finite posets.

A :class:`Poset` stores its order as closed bit rows: ``up[i]`` is an integer
whose bit ``j`` is set iff element ``i`` is below or equal to element ``j``,
and ``down[i]`` is the transpose.  Elements are opaque string labels, but all
algorithms work on the dense indices ``0 .. n-1`` assigned in input order.
"""

from __future__ import annotations

import string
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence, Union

import numpy as np

from .errors import (
    CycleDetected,
    DuplicateLabel,
    EmptySubset,
    SizeCapExceeded,
    UnknownLabel,
)

Element = Union[int, str]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def default_labels(n: int) -> list[str]:
    if n <= 26:
        return list(string.ascii_lowercase[:n])
    return [f"e{i}" for i in range(n)]


class ElementSet:
    """A subset of a poset's ground set, stored as a bitmask."""

    __slots__ = ("owner", "mask")

    def __init__(self, owner: "Poset", mask: int):
        if mask >> owner.n:
            raise ValueError("mask references positions outside the poset")
        self.owner = owner
        self.mask = mask

    def __iter__(self):
        return iter_bits(self.mask)

    def __len__(self):
        return popcount(self.mask)

    def __bool__(self):
        return self.mask != 0

    def __contains__(self, x):
        try:
            i = self.owner.index(x)
        except UnknownLabel:
            return False
        return bool(self.mask >> i & 1)

    def __eq__(self, other):
        if isinstance(other, ElementSet):
            return self.mask == other.mask and self.owner == other.owner
        return NotImplemented

    def __hash__(self):
        return hash(self.mask)

    def _combine(self, other, mask):
        if isinstance(other, ElementSet) and other.owner != self.owner:
            raise ValueError("element sets belong to different posets")
        return ElementSet(self.owner, mask)

    def __and__(self, other):
        return self._combine(other, self.mask & self.owner.mask_of(other))

    def __or__(self, other):
        return self._combine(other, self.mask | self.owner.mask_of(other))

    def __sub__(self, other):
        return self._combine(other, self.mask & ~self.owner.mask_of(other))

    def labels(self) -> list[str]:
        return [self.owner.labels[i] for i in self]

    def __repr__(self):
        return "{" + ", ".join(self.labels()) + "}"


class Poset:
    """A finite partially ordered set.

    Use :func:`from_covers` (or :meth:`Poset.from_matrix`) rather than the raw
    constructor, which expects already-closed bit rows.
    """

    def __init__(self, labels: Sequence[str], up: Sequence[int], *, check: bool = True):
        labels = tuple(str(x) for x in labels)
        index = {}
        for i, label in enumerate(labels):
            if label in index:
                raise DuplicateLabel(f"duplicate element label {label!r}")
            index[label] = i
        n = len(labels)
        up = tuple(int(row) for row in up)
        if len(up) != n:
            raise ValueError("need exactly one order row per element")
        self.labels = labels
        self.n = n
        self.up = up
        self._index = index
        down = [0] * n
        for i, row in enumerate(up):
            for j in iter_bits(row):
                down[j] |= 1 << i
        self.down = tuple(down)
        self.all_mask = (1 << n) - 1
        if check:
            self._validate()

    def _validate(self):
        for i, row in enumerate(self.up):
            if row >> self.n:
                raise ValueError("order row references unknown positions")
            if not row >> i & 1:
                raise ValueError(f"relation is not reflexive at {self.labels[i]!r}")
            for j in iter_bits(row):
                if j != i and self.up[j] >> i & 1:
                    raise CycleDetected(
                        f"{self.labels[i]!r} and {self.labels[j]!r} lie on a cycle"
                    )
                if self.up[j] & ~row:
                    raise ValueError("relation is not transitive")

    # -- construction -------------------------------------------------------

    @classmethod
    def from_matrix(cls, labels: Sequence[str], leq) -> "Poset":
        """Build from a full boolean order matrix (validated)."""
        leq = np.asarray(leq, dtype=bool)
        n = len(labels)
        if leq.shape != (n, n):
            raise ValueError(f"order matrix must be {n}x{n}")
        up = [sum(1 << j for j in np.flatnonzero(leq[i])) for i in range(n)]
        return cls(labels, up)

    @classmethod
    def chain(cls, n: int, labels: Optional[Sequence[str]] = None) -> "Poset":
        labels = default_labels(n) if labels is None else labels
        full = (1 << n) - 1
        return cls(labels, [full & ~((1 << i) - 1) for i in range(n)], check=False)

    @classmethod
    def antichain(cls, n: int, labels: Optional[Sequence[str]] = None) -> "Poset":
        labels = default_labels(n) if labels is None else labels
        return cls(labels, [1 << i for i in range(n)], check=False)

    # -- element access -----------------------------------------------------

    def __len__(self):
        return self.n

    @property
    def elements(self) -> tuple[str, ...]:
        return self.labels

    def index(self, x: Element) -> int:
        if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
            if 0 <= x < self.n:
                return int(x)
            raise UnknownLabel(f"no element with index {x}")
        try:
            return self._index[x]
        except KeyError:
            raise UnknownLabel(f"unknown element {x!r}") from None

    def label(self, i: int) -> str:
        return self.labels[i]

    def mask_of(self, items) -> int:
        """Bitmask for an :class:`ElementSet` or an iterable of labels/indices."""
        if isinstance(items, ElementSet):
            if items.owner is not self and items.owner != self:
                raise ValueError("element set belongs to a different poset")
            return items.mask
        mask = 0
        for x in items:
            mask |= 1 << self.index(x)
        return mask

    def subset(self, items=()) -> ElementSet:
        return ElementSet(self, self.mask_of(items))

    def set_of(self, mask: int) -> ElementSet:
        return ElementSet(self, mask)

    def leq(self, x: Element, y: Element) -> bool:
        return bool(self.up[self.index(x)] >> self.index(y) & 1)

    def lt(self, x: Element, y: Element) -> bool:
        i, j = self.index(x), self.index(y)
        return i != j and bool(self.up[i] >> j & 1)

    def comparable(self, x: Element, y: Element) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    @cached_property
    def leq_matrix(self) -> np.ndarray:
        m = np.zeros((self.n, self.n), dtype=bool)
        for i, row in enumerate(self.up):
            m[i, list(iter_bits(row))] = True
        return m

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """Cover pairs ``(i, j)`` of the transitive reduction, sorted."""
        out = []
        for i, row in enumerate(self.up):
            strict = row & ~(1 << i)
            above = 0
            for k in iter_bits(strict):
                above |= self.up[k] & ~(1 << k)
            out.extend((i, j) for j in iter_bits(strict & ~above))
        return tuple(out)

    def cover_labels(self) -> list[tuple[str, str]]:
        return [(self.labels[i], self.labels[j]) for i, j in self.covers]

    # -- cones and bounds ---------------------------------------------------

    def down_cone_mask(self, mask: int) -> int:
        out = self.all_mask
        for i in iter_bits(mask):
            out &= self.down[i]
        return out

    def up_cone_mask(self, mask: int) -> int:
        out = self.all_mask
        for i in iter_bits(mask):
            out &= self.up[i]
        return out

    def least_in(self, mask: int) -> Optional[int]:
        """Index of the least member of ``mask`` (in the induced order), if any."""
        for i in iter_bits(mask):
            if not mask & ~self.up[i]:
                return i
        return None

    def greatest_in(self, mask: int) -> Optional[int]:
        for i in iter_bits(mask):
            if not mask & ~self.down[i]:
                return i
        return None

    def minimal_in(self, mask: int) -> int:
        out = 0
        for i in iter_bits(mask):
            if not self.down[i] & mask & ~(1 << i):
                out |= 1 << i
        return out

    def maximal_in(self, mask: int) -> int:
        out = 0
        for i in iter_bits(mask):
            if not self.up[i] & mask & ~(1 << i):
                out |= 1 << i
        return out

    def sup_mask(self, mask: int) -> Optional[int]:
        return self.least_in(self.up_cone_mask(mask))

    def inf_mask(self, mask: int) -> Optional[int]:
        return self.greatest_in(self.down_cone_mask(mask))

    def down_cone(self, items=()) -> ElementSet:
        """Common minorants of ``items``; the whole poset for an empty set."""
        return ElementSet(self, self.down_cone_mask(self.mask_of(items)))

    def up_cone(self, items=()) -> ElementSet:
        """Common majorants of ``items``; the whole poset for an empty set."""
        return ElementSet(self, self.up_cone_mask(self.mask_of(items)))

    def sup_of(self, items=()) -> Optional[int]:
        """Index of the least upper bound, or ``None`` when it does not exist.

        The empty set has the least element of the poset as its supremum, which
        is again ``None`` if the poset has no least element.
        """
        return self.sup_mask(self.mask_of(items))

    def inf_of(self, items=()) -> Optional[int]:
        return self.inf_mask(self.mask_of(items))

    def least(self) -> Optional[int]:
        return self.least_in(self.all_mask)

    def greatest(self) -> Optional[int]:
        return self.greatest_in(self.all_mask)

    def interval_mask(self, lo: int, hi: int) -> int:
        return self.up[lo] & self.down[hi]

    def interval(self, lo: Element, hi: Element) -> ElementSet:
        return ElementSet(self, self.interval_mask(self.index(lo), self.index(hi)))

    def is_antichain_mask(self, mask: int) -> bool:
        for i in iter_bits(mask):
            if self.up[i] & mask & ~(1 << i):
                return False
        return True

    def immediate_predecessors(self, x: Element) -> ElementSet:
        i = self.index(x)
        return ElementSet(self, sum(1 << a for a, b in self.covers if b == i))

    def immediate_successors(self, x: Element) -> ElementSet:
        i = self.index(x)
        return ElementSet(self, sum(1 << b for a, b in self.covers if a == i))

    # -- derived posets -----------------------------------------------------

    def dual(self) -> "Poset":
        return Poset(self.labels, self.down, check=False)

    def induced(self, items) -> "Poset":
        """Subposet on ``items`` with the restricted order, elements kept in index order."""
        mask = self.mask_of(items)
        if not mask:
            raise EmptySubset("cannot induce a poset on the empty set")
        return self.induced_mask(mask)

    def induced_mask(self, mask: int) -> "Poset":
        keep = list(iter_bits(mask))
        pos = {old: new for new, old in enumerate(keep)}
        up = []
        for old in keep:
            row = 0
            for j in iter_bits(self.up[old] & mask):
                row |= 1 << pos[j]
            up.append(row)
        return Poset([self.labels[i] for i in keep], up, check=False)

    def relabel(self, labels: Sequence[str]) -> "Poset":
        return Poset(labels, self.up, check=False)

    def permuted(self, perm: Sequence[int], labels: Optional[Sequence[str]] = None) -> "Poset":
        """Poset whose new element ``k`` is old element ``perm[k]``."""
        inv = {old: new for new, old in enumerate(perm)}
        up = []
        for old in perm:
            row = 0
            for j in iter_bits(self.up[old]):
                row |= 1 << inv[j]
            up.append(row)
        if labels is None:
            labels = [self.labels[old] for old in perm]
        return Poset(labels, up, check=False)

    def linear_extension(self) -> list[int]:
        """Topological order of the indices, smallest available index first."""
        placed = 0
        order = []
        for _ in range(self.n):
            for i in range(self.n):
                if not placed >> i & 1 and not self.down[i] & ~placed & ~(1 << i):
                    order.append(i)
                    placed |= 1 << i
                    break
        return order

    # -- identity -----------------------------------------------------------

    def key(self) -> tuple[int, ...]:
        return self.up

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.labels == other.labels and self.up == other.up

    def __hash__(self):
        return hash((self.labels, self.up))

    def __repr__(self):
        covers = ", ".join(f"{a}<{b}" for a, b in self.cover_labels())
        return f"Poset([{', '.join(self.labels)}]; {covers})"

    def to_doc(self) -> dict:
        return {
            "elements": list(self.labels),
            "covers": [list(pair) for pair in self.cover_labels()],
        }


def from_covers(labels: Sequence[str], covers: Iterable[Sequence[str]]) -> Poset:
    """Poset generated by ``covers`` (pairs ``(a, b)`` meaning ``a < b``).

    The pairs may be redundant; the reflexive-transitive closure is taken.
    Raises :class:`CycleDetected` if the closure is not antisymmetric.
    """
    labels = [str(x) for x in labels]
    index = {}
    for i, label in enumerate(labels):
        if label in index:
            raise DuplicateLabel(f"duplicate element label {label!r}")
        index[label] = i
    n = len(labels)
    up = [1 << i for i in range(n)]
    for pair in covers:
        a, b = pair
        for x in (a, b):
            if x not in index:
                raise UnknownLabel(f"cover references unknown element {x!r}")
        up[index[a]] |= 1 << index[b]
    for k in range(n):
        row_k = up[k]
        bit = 1 << k
        for i in range(n):
            if up[i] & bit:
                up[i] |= row_k
    for i in range(n):
        for j in iter_bits(up[i] & ~(1 << i)):
            if up[j] >> i & 1:
                raise CycleDetected(f"{labels[i]!r} and {labels[j]!r} lie on a cycle")
    return Poset(labels, up, check=False)


def _sum_labels(P: Poset, Q: Poset) -> list[str]:
    if set(P.labels) & set(Q.labels):
        return default_labels(P.n + Q.n)
    return list(P.labels) + list(Q.labels)


def cardinal_sum(P: Poset, Q: Poset) -> Poset:
    """Disjoint union with no relations across the summands.

    Labels are kept when disjoint, otherwise the result is relabelled a, b, c, ...
    """
    up = list(P.up) + [row << P.n for row in Q.up]
    return Poset(_sum_labels(P, Q), up, check=False)


def lex_sum(P: Poset, Q: Poset) -> Poset:
    """Disjoint union with every element of ``P`` below every element of ``Q``."""
    q_all = Q.all_mask << P.n
    up = [row | q_all for row in P.up] + [row << P.n for row in Q.up]
    return Poset(_sum_labels(P, Q), up, check=False)


def powerset_lattice(labels: Sequence[str]) -> Poset:
    """Boolean lattice of all subsets of ``labels`` ordered by inclusion.

    Element ``s`` (an integer bitmask over ``labels``) sits at index ``s``.
    """
    n = len(labels)
    size = 1 << n
    sup = [0] * size
    for s in range(size - 1, -1, -1):
        row = 1 << s
        for b in range(n):
            if not s >> b & 1:
                row |= sup[s | 1 << b]
        sup[s] = row
    names = ["{" + ",".join(labels[b] for b in iter_bits(s)) + "}" for s in range(size)]
    return Poset(names, sup, check=False)


def downset_embedding(P: Poset, cap: int = 10) -> tuple[Poset, tuple[int, ...]]:
    """Embed ``P`` into the powerset lattice of its ground set via ``x -> down(x)``.

    Returns the lattice and, for each element of ``P``, the index of its image.
    The map is an order isomorphism onto its image.
    """
    if P.n > cap:
        raise SizeCapExceeded(f"powerset of {P.n} elements exceeds cap 2^{cap}")
    return powerset_lattice(P.labels), tuple(P.down)
