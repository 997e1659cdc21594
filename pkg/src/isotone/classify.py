"""Membership tests for chains, lattices, quasilattices and their local variants.

Every predicate has a companion ``*_witness`` function returning a
counterexample (or ``None``) so that callers can explain a negative answer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import EmptyPoset, SizeCapExceeded
from .poset import Poset, iter_bits, popcount

EXHAUSTIVE_LATTICE_CAP = 15


@dataclass(frozen=True)
class BoundFailure:
    """A subset (bitmask) lacking a supremum (``kind="sup"``) or infimum."""

    kind: str
    mask: int


def is_chain(P: Poset) -> bool:
    return all((P.up[i] | P.down[i]) == P.all_mask for i in range(P.n))


def _bound_failure_within(P: Poset, region: int) -> Optional[BoundFailure]:
    # Lattice test for the subposet induced on ``region``: every pair has a
    # join and a meet inside the region, and the region has both bounds.
    members = list(iter_bits(region))
    for k, i in enumerate(members):
        up_i, down_i = P.up[i], P.down[i]
        for j in members[k + 1:]:
            pair = 1 << i | 1 << j
            if P.least_in(up_i & P.up[j] & region) is None:
                return BoundFailure("sup", pair)
            if P.greatest_in(down_i & P.down[j] & region) is None:
                return BoundFailure("inf", pair)
    if P.least_in(region) is None:
        return BoundFailure("inf", region)
    if P.greatest_in(region) is None:
        return BoundFailure("sup", region)
    return None


def lattice_witness(P: Poset) -> Optional[BoundFailure]:
    """First pair (in index order) without a join or meet, else ``None``."""
    if P.n == 0:
        raise EmptyPoset("lattice test needs a nonempty poset")
    return _bound_failure_within(P, P.all_mask)


def is_lattice(P: Poset) -> bool:
    return lattice_witness(P) is None


def is_complete_lattice(P: Poset, exhaustive: bool = False) -> bool:
    """Finite posets are complete lattices iff they are nonempty lattices.

    ``exhaustive=True`` instead checks the sup and inf of every nonempty subset
    directly (only for posets of at most 15 elements).
    """
    if P.n == 0:
        return False
    if not exhaustive:
        return is_lattice(P)
    if P.n > EXHAUSTIVE_LATTICE_CAP:
        raise SizeCapExceeded(f"exhaustive mode is limited to {EXHAUSTIVE_LATTICE_CAP} elements")
    for mask in range(1, 1 << P.n):
        if P.sup_mask(mask) is None or P.inf_mask(mask) is None:
            return False
    return True


def antichains(P: Poset) -> list[int]:
    """All antichains (including the empty one) as bitmasks, by size then value."""
    found = [0]
    frontier = [0]
    while frontier:
        grown = set()
        for mask in frontier:
            top = mask.bit_length()
            comparable = 0
            for i in iter_bits(mask):
                comparable |= P.up[i] | P.down[i]
            for k in range(top, P.n):
                if not comparable >> k & 1:
                    grown.add(mask | 1 << k)
        frontier = sorted(grown)
        found.extend(frontier)
    return found


def _separated_pairs(P: Poset, size_bound: Optional[int]):
    # Antichain pairs (A, B) with every a <= every b.  Pairs with both sides
    # nonempty come first so witnesses prefer the informative case.
    chains = [m for m in antichains(P) if size_bound is None or popcount(m) < size_bound]
    cones = {m: P.up_cone_mask(m) for m in chains}
    nonempty = [m for m in chains if m]
    for a in nonempty:
        for b in nonempty:
            if not b & ~cones[a]:
                yield a, b
    if chains and chains[0] == 0:
        for a in chains:
            for b in chains:
                if (a == 0 or b == 0) and not b & ~cones[a]:
                    yield a, b


def _interpolates(P: Poset, a: int, b: int) -> bool:
    return bool(P.up_cone_mask(a) & P.down_cone_mask(b))


def quasilattice_witness(P: Poset, size_bound: Optional[int] = None) -> Optional[tuple[int, int]]:
    """An antichain pair ``(A, B)`` with ``A <= B`` and nothing in between.

    Empty sides are included, so a finite set without a minorant or majorant
    is reported as ``(0, B)`` or ``(A, 0)``.  With ``size_bound=k`` only pairs
    with ``|A| < k`` and ``|B| < k`` are examined.
    """
    for a, b in _separated_pairs(P, size_bound):
        if not _interpolates(P, a, b):
            return a, b
    return None


def is_quasilattice(P: Poset, size_bound: Optional[int] = None) -> bool:
    return quasilattice_witness(P, size_bound) is None


def local_lattice_witness(P: Poset) -> Optional[tuple[int, int, BoundFailure]]:
    """First interval ``[lo, hi]`` that is not a lattice, with its failure."""
    for lo in range(P.n):
        for hi in iter_bits(P.up[lo]):
            failure = _bound_failure_within(P, P.interval_mask(lo, hi))
            if failure is not None:
                return lo, hi, failure
    return None


def is_local_complete_lattice(P: Poset) -> bool:
    return local_lattice_witness(P) is None


def local_quasilattice_witness(
    P: Poset, size_bound: Optional[int] = None
) -> Optional[tuple[int, int]]:
    """As :func:`quasilattice_witness`, restricted to pairs whose union is bounded."""
    for a, b in _separated_pairs(P, size_bound):
        union = a | b
        if not P.down_cone_mask(union) or not P.up_cone_mask(union):
            continue
        if not _interpolates(P, a, b):
            return a, b
    return None


def is_local_quasilattice(P: Poset, size_bound: Optional[int] = None) -> bool:
    return local_quasilattice_witness(P, size_bound) is None


def component_masks(P: Poset) -> list[int]:
    seen = 0
    blocks = []
    for start in range(P.n):
        if seen >> start & 1:
            continue
        block = 1 << start
        frontier = block
        while frontier:
            reach = 0
            for i in iter_bits(frontier):
                reach |= P.up[i] | P.down[i]
            frontier = reach & ~block
            block |= reach
        seen |= block
        blocks.append(block)
    return blocks


def components(P: Poset):
    """Classes of the transitive closure of comparability, ordered by least index."""
    return [P.set_of(m) for m in component_masks(P)]


def z_embedding(P: Poset) -> Optional[dict[int, int]]:
    """Integer numbering that realises ``P`` as a disjoint union of integer runs.

    Exists iff every component is a chain.  The least-index element of each
    component gets 0 before shifting, its successors 1, 2, ... and its
    predecessors -1, -2, ...; components are then shifted so that their ranges
    appear in order of least index with one unused integer between them.
    """
    result: dict[int, int] = {}
    next_free = None
    for block in component_masks(P):
        members = list(iter_bits(block))
        if any((P.up[i] | P.down[i]) & block != block for i in members):
            return None
        height = {i: popcount(P.down[i] & block) - 1 for i in members}
        anchor = members[0]
        local = {i: height[i] - height[anchor] for i in members}
        shift = 0 if next_free is None else next_free - min(local.values())
        for i, v in local.items():
            result[i] = v + shift
        next_free = max(local.values()) + shift + 2
    return result


@dataclass
class ClassificationReport:
    chain: bool
    lattice: bool
    complete_lattice: bool
    quasilattice: bool
    local_complete_lattice: bool
    local_quasilattice: bool
    z_embeddable: bool
    components: list[list[str]]
    witness: dict = field(default_factory=dict)
    z_embedding: Optional[dict[str, int]] = None

    def to_dict(self) -> dict:
        return {
            "chain": self.chain,
            "lattice": self.lattice,
            "complete_lattice": self.complete_lattice,
            "quasilattice": self.quasilattice,
            "local_complete_lattice": self.local_complete_lattice,
            "local_quasilattice": self.local_quasilattice,
            "z_embeddable": self.z_embeddable,
            "components": self.components,
            "z_embedding": self.z_embedding,
            "witness": self.witness,
        }


def classify_poset(P: Poset, size_bound: Optional[int] = None) -> ClassificationReport:
    labels = lambda mask: [P.labels[i] for i in iter_bits(mask)]  # noqa: E731
    witness: dict = {}

    lattice_fail = lattice_witness(P) if P.n else BoundFailure("sup", 0)
    if lattice_fail is not None:
        witness["lattice"] = {"kind": lattice_fail.kind, "subset": labels(lattice_fail.mask)}
    quasi = quasilattice_witness(P, size_bound)
    if quasi is not None:
        witness["quasilattice"] = {"A": labels(quasi[0]), "B": labels(quasi[1])}
    local = local_lattice_witness(P)
    if local is not None:
        lo, hi, fail = local
        witness["local_complete_lattice"] = {
            "interval": [P.labels[lo], P.labels[hi]],
            "kind": fail.kind,
            "subset": labels(fail.mask),
        }
    local_quasi = local_quasilattice_witness(P, size_bound)
    if local_quasi is not None:
        witness["local_quasilattice"] = {"A": labels(local_quasi[0]), "B": labels(local_quasi[1])}
    z = z_embedding(P)
    return ClassificationReport(
        chain=is_chain(P),
        lattice=lattice_fail is None,
        complete_lattice=lattice_fail is None,
        quasilattice=quasi is None,
        local_complete_lattice=local is None,
        local_quasilattice=local_quasi is None,
        z_embeddable=z is not None,
        components=[labels(m) for m in component_masks(P)],
        witness=witness,
        z_embedding=None if z is None else {P.labels[i]: v for i, v in sorted(z.items())},
    )
