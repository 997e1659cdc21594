"""Partial isotone maps and their isotone extensions.

A :class:`MonotoneMap` is a partial map between two posets, stored as a tuple
with one entry per domain element: the codomain index, or ``None`` where the
map is undefined.  The functions here decide whether such a map extends to an
isotone map on the whole domain and build the canonical extensions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Mapping, Optional, Sequence

import numpy as np

from .classify import component_masks, is_chain, is_complete_lattice, is_lattice
from .errors import (
    CapExceeded,
    CodomainNotCompleteLattice,
    ComponentNotChain,
    EmptyA,
    InputNotIsotone,
    NoExtremesInA,
    UnknownLabel,
)
from .poset import ElementSet, Poset, iter_bits

DEFAULT_ENUMERATION_CAP = 10**6


@dataclass(frozen=True)
class MonotoneMap:
    domain: Poset
    codomain: Poset
    values: tuple

    def __post_init__(self):
        values = tuple(None if v is None else int(v) for v in self.values)
        if len(values) != self.domain.n:
            raise ValueError("need one value (or None) per domain element")
        for v in values:
            if v is not None and not 0 <= v < self.codomain.n:
                raise UnknownLabel(f"no codomain element with index {v}")
        object.__setattr__(self, "values", values)

    @classmethod
    def from_labels(cls, domain: Poset, codomain: Poset, mapping: Mapping) -> "MonotoneMap":
        values = [None] * domain.n
        for x, y in mapping.items():
            values[domain.index(x)] = codomain.index(y)
        return cls(domain, codomain, tuple(values))

    @classmethod
    def identity(cls, domain: Poset, items) -> "MonotoneMap":
        """Identity on ``items`` viewed as a partial map ``domain -> induced(items)``."""
        mask = domain.mask_of(items)
        target = domain.induced_mask(mask)
        values = [None] * domain.n
        for new, old in enumerate(iter_bits(mask)):
            values[old] = new
        return cls(domain, target, tuple(values))

    @cached_property
    def defined_mask(self) -> int:
        return sum(1 << i for i, v in enumerate(self.values) if v is not None)

    @property
    def defined_on(self) -> ElementSet:
        return self.domain.set_of(self.defined_mask)

    @property
    def is_total(self) -> bool:
        return None not in self.values

    def __call__(self, x):
        v = self.values[self.domain.index(x)]
        return None if v is None else self.codomain.labels[v]

    def to_labels(self) -> dict[str, str]:
        return {
            self.domain.labels[i]: self.codomain.labels[v]
            for i, v in enumerate(self.values)
            if v is not None
        }

    def restrict(self, items) -> "MonotoneMap":
        mask = self.domain.mask_of(items)
        values = tuple(v if mask >> i & 1 else None for i, v in enumerate(self.values))
        return MonotoneMap(self.domain, self.codomain, values)

    def dual(self) -> "MonotoneMap":
        """The same assignment read between the dual posets."""
        return MonotoneMap(self.domain.dual(), self.codomain.dual(), self.values)

    def extends(self, other: "MonotoneMap") -> bool:
        return all(w is None or v == w for v, w in zip(self.values, other.values))

    def __repr__(self):
        pairs = ", ".join(f"{k}->{v}" for k, v in self.to_labels().items())
        return f"MonotoneMap({pairs})"


def _isotone_values(X: Poset, Y: Poset, values: Sequence[Optional[int]]) -> bool:
    defined = sum(1 << i for i, v in enumerate(values) if v is not None)
    for i in iter_bits(defined):
        allowed = Y.up[values[i]]
        for j in iter_bits(X.up[i] & defined):
            if not allowed >> values[j] & 1:
                return False
    return True


def check_isotone(f: MonotoneMap, total: bool = False) -> bool:
    """True iff ``x <= y`` on the defined part implies ``f(x) <= f(y)``.

    With ``total=True`` the map must additionally be defined everywhere.
    """
    if total and not f.is_total:
        return False
    return _isotone_values(f.domain, f.codomain, f.values)


def _require_isotone(f: MonotoneMap):
    if not check_isotone(f):
        raise InputNotIsotone("the partial map is not isotone on its domain of definition")


def _require_complete_codomain(f: MonotoneMap):
    if not is_complete_lattice(f.codomain):
        raise CodomainNotCompleteLattice("codomain is not a complete lattice")


def lower_extension(f: MonotoneMap) -> MonotoneMap:
    """Pointwise-least isotone extension, x -> sup f(A ∩ down(x)).

    Requires a complete-lattice codomain; points with nothing of ``A`` below
    them go to the bottom of the codomain.
    """
    _require_complete_codomain(f)
    _require_isotone(f)
    X, Y, vals = f.domain, f.codomain, f.values
    defined = f.defined_mask
    out = []
    for x in range(X.n):
        images = 0
        for t in iter_bits(X.down[x] & defined):
            images |= 1 << vals[t]
        out.append(Y.sup_mask(images))
    return MonotoneMap(X, Y, tuple(out))


def upper_extension(f: MonotoneMap) -> MonotoneMap:
    """Pointwise-greatest isotone extension, x -> inf f(A ∩ up(x))."""
    _require_complete_codomain(f)
    _require_isotone(f)
    X, Y, vals = f.domain, f.codomain, f.values
    defined = f.defined_mask
    out = []
    for x in range(X.n):
        images = 0
        for t in iter_bits(X.up[x] & defined):
            images |= 1 << vals[t]
        out.append(Y.inf_mask(images))
    return MonotoneMap(X, Y, tuple(out))


def _greedy_pick(Y: Poset, candidates: int) -> int:
    # Minimal candidates first, lowest index among them.
    minimal = Y.minimal_in(candidates)
    return (minimal & -minimal).bit_length() - 1


def extend_greedy(f: MonotoneMap, order: Optional[Sequence] = None) -> Optional[MonotoneMap]:
    """One-point-at-a-time extension.

    Each unassigned point receives a value above the images of the assigned
    points below it and below the images of the assigned points above it.
    Always succeeds when the codomain is a quasilattice; ``None`` only means
    that this greedy run got stuck, not that no extension exists.
    """
    _require_isotone(f)
    X, Y = f.domain, f.codomain
    vals = list(f.values)
    assigned = f.defined_mask
    if order is None:
        todo = [x for x in X.linear_extension() if not assigned >> x & 1]
    else:
        todo = [X.index(x) for x in order]
        if sorted(todo) != [x for x in range(X.n) if not assigned >> x & 1]:
            raise ValueError("order must list every unassigned element exactly once")
    for x in todo:
        candidates = Y.all_mask
        for t in iter_bits(X.down[x] & assigned):
            candidates &= Y.up[vals[t]]
        for t in iter_bits(X.up[x] & assigned):
            candidates &= Y.down[vals[t]]
        if not candidates:
            return None
        vals[x] = _greedy_pick(Y, candidates)
        assigned |= 1 << x
    return MonotoneMap(X, Y, tuple(vals))


def _initial_domains(X: Poset, Y: Poset, vals, defined: int) -> dict[int, int]:
    domains = {}
    for x in range(X.n):
        if defined >> x & 1:
            continue
        cand = Y.all_mask
        for t in iter_bits(X.down[x] & defined):
            cand &= Y.up[vals[t]]
        for t in iter_bits(X.up[x] & defined):
            cand &= Y.down[vals[t]]
        domains[x] = cand
    return domains


def _search(X: Poset, Y: Poset, vals: list, domains: dict[int, int], rank: dict[int, int]):
    """Backtracking over the open points with forward checking.

    Picks the open point with the fewest candidates (ties by linear-extension
    rank) and tries its candidates in index order.  Yields every solution.
    """
    if not domains:
        yield tuple(vals)
        return
    x = min(domains, key=lambda z: (domains[z].bit_count(), rank[z]))
    cand = domains.pop(x)
    above, below = X.up[x], X.down[x]
    for v in iter_bits(cand):
        narrowed = {}
        for z, dz in domains.items():
            if above >> z & 1:
                dz &= Y.up[v]
            elif below >> z & 1:
                dz &= Y.down[v]
            if not dz:
                break
            narrowed[z] = dz
        else:
            vals[x] = v
            yield from _search(X, Y, vals, narrowed, rank)
    vals[x] = None
    domains[x] = cand


def _solutions(f: MonotoneMap) -> Iterator[tuple]:
    X, Y = f.domain, f.codomain
    vals = list(f.values)
    domains = _initial_domains(X, Y, vals, f.defined_mask)
    if any(d == 0 for d in domains.values()):
        return
    rank = {x: k for k, x in enumerate(X.linear_extension())}
    yield from _search(X, Y, vals, domains, rank)


def extend_exists(f: MonotoneMap) -> Optional[MonotoneMap]:
    """Some isotone extension of ``f`` to the whole domain, or ``None`` if there is none.

    Complete: ``None`` is returned only after the search space is exhausted.
    """
    _require_isotone(f)
    for sol in _solutions(f):
        return MonotoneMap(f.domain, f.codomain, sol)
    return None


def extend_chain_components(X: Poset, subset, fallback=None) -> MonotoneMap:
    """Isotone retraction of ``X`` onto ``subset`` when every component is a chain.

    On a component meeting the subset, ``x`` goes to the largest subset
    element below it (or the component's least subset element if there is
    none); components missing the subset collapse onto ``fallback``, which
    defaults to the lowest-index subset element.  The codomain is
    ``X.induced(subset)``.
    """
    A = X.mask_of(subset)
    if not A:
        raise EmptyA("the subset must be nonempty")
    ident = MonotoneMap.identity(X, X.set_of(A))
    target = ident.codomain
    x0 = (A & -A).bit_length() - 1 if fallback is None else X.index(fallback)
    if not A >> x0 & 1:
        raise ValueError("fallback element must belong to the subset")
    out = [None] * X.n
    for block in component_masks(X):
        if not is_chain(X.induced_mask(block)):
            raise ComponentNotChain(
                "component " + "{" + ",".join(X.labels[i] for i in iter_bits(block)) + "} is not a chain"
            )
        part = A & block
        for x in iter_bits(block):
            if not part:
                out[x] = ident.values[x0]
                continue
            below = X.down[x] & part
            pick = X.greatest_in(below) if below else X.least_in(part)
            out[x] = ident.values[pick]
    return MonotoneMap(X, target, tuple(out))


def extremes(f: MonotoneMap) -> tuple[int, int]:
    """Least and greatest elements of the definition set of ``f``."""
    X, A = f.domain, f.defined_mask
    lo, hi = X.least_in(A), X.greatest_in(A)
    if lo is None or hi is None:
        raise NoExtremesInA("the definition set has no least or no greatest element")
    return lo, hi


def extend_preserving_extremes(f: MonotoneMap) -> Optional[MonotoneMap]:
    """Isotone extension whose values stay within ``[f(least A), f(greatest A)]``."""
    lo, hi = extremes(f)
    _require_isotone(f)
    X, Y = f.domain, f.codomain
    window = Y.interval_mask(f.values[lo], f.values[hi])
    members = list(iter_bits(window))
    pos = {y: k for k, y in enumerate(members)}
    inner = MonotoneMap(
        X, Y.induced_mask(window), tuple(None if v is None else pos[v] for v in f.values)
    )
    g = extend_exists(inner)
    if g is None:
        return None
    return MonotoneMap(X, Y, tuple(members[v] for v in g.values))


@dataclass
class ExtensionFamily:
    """All isotone extensions of ``base`` in lexicographic order of their value tuples."""

    base: MonotoneMap
    extensions: list

    def __len__(self):
        return len(self.extensions)

    def __iter__(self):
        return (MonotoneMap(self.base.domain, self.base.codomain, v) for v in self.extensions)

    @cached_property
    def order_matrix(self) -> np.ndarray:
        """``m[g, h]`` is True iff extension g <= extension h pointwise."""
        if not self.extensions:
            return np.zeros((0, 0), dtype=bool)
        table = np.array(self.extensions, dtype=np.intp)
        yleq = self.base.codomain.leq_matrix
        return yleq[table[:, None, :], table[None, :, :]].all(axis=2)

    def as_poset(self) -> Poset:
        m = self.order_matrix
        up = [sum(1 << int(j) for j in np.flatnonzero(row)) for row in m]
        return Poset([f"g{k}" for k in range(len(self.extensions))], up, check=False)

    def _extreme(self, bottom: bool) -> Optional[MonotoneMap]:
        m = self.order_matrix
        if not len(m):
            return None
        hits = np.flatnonzero(m.all(axis=1) if bottom else m.all(axis=0))
        if not len(hits):
            return None
        return MonotoneMap(self.base.domain, self.base.codomain, self.extensions[hits[0]])

    def bottom(self) -> Optional[MonotoneMap]:
        return self._extreme(True)

    def top(self) -> Optional[MonotoneMap]:
        return self._extreme(False)

    def is_lattice(self) -> bool:
        return bool(self.extensions) and is_lattice(self.as_poset())


def enumerate_extensions(f: MonotoneMap, cap: int = DEFAULT_ENUMERATION_CAP) -> ExtensionFamily:
    _require_isotone(f)
    open_points = f.domain.n - f.defined_mask.bit_count()
    if f.codomain.n**open_points > cap:
        raise CapExceeded(
            f"{f.codomain.n}^{open_points} candidate assignments exceed cap {cap}"
        )
    return ExtensionFamily(f, sorted(_solutions(f)))
