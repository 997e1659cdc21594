"""Brute-force enumeration of small posets and maps, and desk-scale theorem checks.

Nothing here reuses the search code of :mod:`isotone.extension` to generate
its universes: posets come from one-point extensions of smaller posets,
isotone maps from plain filtering or a recursion along a linear extension.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator, Optional

import numpy as np

from . import classify, extension
from .errors import CapExceeded, SizeCapExceeded, UnknownTheoremId
from .extension import MonotoneMap
from .io import poset_from_doc
from .poset import Poset, default_labels, from_covers, iter_bits

# Labeled posets on n points (OEIS A001035) and unlabeled ones (A000112).
LABELED_COUNTS = (1, 1, 3, 19, 219, 4231, 130023)
UNLABELED_COUNTS = (1, 1, 2, 5, 16, 63, 318, 2045)
LABELED_CAP = 6
ISO_CAP = 7
CANONICAL_CLASS_CAP = 8
DEFAULT_MAP_CAP = 10**6


# -- poset enumeration --------------------------------------------------------


def down_closed_sets(P: Poset) -> list[int]:
    return [m for m in range(1 << P.n) if all(not P.down[i] & ~m for i in iter_bits(m))]


def up_closed_sets(P: Poset) -> list[int]:
    return [m for m in range(1 << P.n) if all(not P.up[i] & ~m for i in iter_bits(m))]


def one_point_extensions(P: Poset, label: Optional[str] = None) -> Iterator[Poset]:
    """Every poset on ``P`` plus one new last element that induces ``P`` back.

    The new point is placed above a down-closed set D and below an up-closed
    set U with every member of D already below every member of U.
    """
    n = P.n
    new = 1 << n
    labels = list(P.labels) + [label if label is not None else default_labels(n + 1)[n]]
    ups = up_closed_sets(P)
    for D in down_closed_sets(P):
        above_all = P.up_cone_mask(D)
        for U in ups:
            if U & D or U & ~above_all:
                continue
            rows = [row | new if D >> i & 1 else row for i, row in enumerate(P.up)]
            rows.append(new | U)
            yield Poset(labels, rows, check=False)


@lru_cache(maxsize=None)
def labeled_posets(n: int) -> tuple[Poset, ...]:
    """All partial orders on ``n`` labeled points, sorted by their order rows."""
    if n > LABELED_CAP:
        raise SizeCapExceeded(f"labeled enumeration is limited to n <= {LABELED_CAP}")
    if n == 0:
        return (Poset([], []),)
    labels = default_labels(n)
    out = []
    for P in labeled_posets(n - 1):
        out.extend(Q.relabel(labels) for Q in one_point_extensions(P))
    out.sort(key=Poset.key)
    return tuple(out)


def _invariants(P: Poset) -> list[tuple[int, int, int]]:
    level = [0] * P.n
    for x in P.linear_extension():
        below = P.down[x] & ~(1 << x)
        level[x] = max((level[t] + 1 for t in iter_bits(below)), default=0)
    return [(P.down[i].bit_count(), P.up[i].bit_count(), level[i]) for i in range(P.n)]


def canonical_key(P: Poset, fixed: int = 0) -> tuple[int, ...]:
    """Isomorphism-invariant encoding of ``P``.

    Elements are grouped by (down-degree, up-degree, level); the key is the
    lexicographically least tuple of order rows over all relabellings that
    respect the grouping.  The first ``fixed`` elements are pinned in place
    (isomorphism relative to a marked subposet).
    """
    inv = _invariants(P)
    groups: dict[tuple, list[int]] = {}
    for i in range(fixed, P.n):
        groups.setdefault(inv[i], []).append(i)
    blocks = [[i] for i in range(fixed)] + [groups[k] for k in sorted(groups)]
    if any(len(b) > CANONICAL_CLASS_CAP for b in blocks):
        raise SizeCapExceeded("invariant class too large for exhaustive permutation")
    best = None
    for parts in itertools.product(*(itertools.permutations(b) for b in blocks)):
        perm = [i for part in parts for i in part]
        inv_perm = [0] * P.n
        for new, old in enumerate(perm):
            inv_perm[old] = new
        rows = []
        for old in perm:
            row = 0
            for j in iter_bits(P.up[old]):
                row |= 1 << inv_perm[j]
            rows.append(row)
        key = tuple(rows)
        if best is None or key < best:
            best = key
    return best if best is not None else ()


def canonical_form(P: Poset) -> Poset:
    return Poset(default_labels(P.n), canonical_key(P), check=False)


def is_isomorphic(P: Poset, Q: Poset) -> bool:
    return P.n == Q.n and canonical_key(P) == canonical_key(Q)


@lru_cache(maxsize=None)
def iso_posets(n: int) -> tuple[Poset, ...]:
    """One canonical representative per isomorphism class of ``n``-element posets."""
    if n > ISO_CAP:
        raise SizeCapExceeded(f"up-to-isomorphism enumeration is limited to n <= {ISO_CAP}")
    if n == 0:
        return (Poset([], []),)
    keys = set()
    for P in iso_posets(n - 1):
        for Q in one_point_extensions(P):
            keys.add(canonical_key(Q))
    labels = default_labels(n)
    return tuple(Poset(labels, k, check=False) for k in sorted(keys))


def count_posets_by_filter(n: int) -> int:
    """Count partial orders on ``n`` points by testing every strict relation."""
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    if len(pairs) > 12:
        raise CapExceeded("relation filter is limited to n <= 4")
    count = 0
    for bits in range(1 << len(pairs)):
        rel = {pairs[k] for k in range(len(pairs)) if bits >> k & 1}
        if any((j, i) in rel for i, j in rel):
            continue
        if all((i, k) in rel for i, j in rel for j2, k in rel if j == j2 and i != k):
            count += 1
    return count


def random_poset(n: int, rng: np.random.Generator, density: float = 0.4) -> Poset:
    """Random poset: a random acyclic relation on a shuffled order, then closure."""
    perm = rng.permutation(n)
    labels = default_labels(n)
    covers = []
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < density:
                covers.append((labels[perm[a]], labels[perm[b]]))
    return from_covers(labels, covers)


@dataclass
class PosetStream:
    """Iterable of posets of size ``n``: ``labeled``, ``iso`` or ``random`` mode."""

    n: int
    mode: str = "labeled"
    seed: Optional[int] = None
    count: Optional[int] = None

    def __post_init__(self):
        if self.mode == "labeled" and self.n > LABELED_CAP:
            raise SizeCapExceeded(f"labeled enumeration is limited to n <= {LABELED_CAP}")
        if self.mode == "iso" and self.n > ISO_CAP:
            raise SizeCapExceeded(f"up-to-isomorphism enumeration is limited to n <= {ISO_CAP}")
        if self.mode not in ("labeled", "iso", "random"):
            raise ValueError(f"unknown mode {self.mode!r}")

    def __iter__(self) -> Iterator[Poset]:
        if self.mode == "labeled":
            yield from labeled_posets(self.n)
        elif self.mode == "iso":
            yield from iso_posets(self.n)
        else:
            rng = np.random.default_rng(self.seed)
            for _ in range(1 if self.count is None else self.count):
                yield random_poset(self.n, rng)


def enumerate_posets(n: int, mode: str = "labeled", seed=None, count=None) -> PosetStream:
    return PosetStream(n, mode, seed, count)


def find_counterexample(
    predicate: Callable[[Poset], bool], max_size: int = 5, mode: str = "labeled"
) -> Optional[Poset]:
    """Smallest (then lexicographically first) poset on which ``predicate`` is False."""
    for n in range(1, max_size + 1):
        for P in enumerate_posets(n, mode):
            if not predicate(P):
                return P
    return None


# -- map enumeration ----------------------------------------------------------


def enumerate_isotone_maps(X: Poset, Y: Poset, cap: int = DEFAULT_MAP_CAP) -> Iterator[MonotoneMap]:
    """Total isotone maps X -> Y, by filtering all |Y|^|X| assignments."""
    if Y.n**X.n > cap:
        raise CapExceeded(f"{Y.n}^{X.n} assignments exceed cap {cap}")
    strict = [(i, j) for i in range(X.n) for j in iter_bits(X.up[i]) if i != j]
    for values in itertools.product(range(Y.n), repeat=X.n):
        if all(Y.up[values[i]] >> values[j] & 1 for i, j in strict):
            yield MonotoneMap(X, Y, values)


def isotone_partial_maps(X: Poset, subset: int, Y: Poset) -> Iterator[tuple]:
    """Value tuples of every isotone map from the points in ``subset`` to ``Y``.

    Points are assigned along a linear extension; each takes any value above
    the images of the already-assigned points below it.
    """
    order = [x for x in X.linear_extension() if subset >> x & 1]
    vals: list = [None] * X.n

    def rec(k):
        if k == len(order):
            yield tuple(vals)
            return
        x = order[k]
        cand = Y.all_mask
        for t in iter_bits(X.down[x] & subset & ~(1 << x)):
            cand &= Y.up[vals[t]]
        for v in iter_bits(cand):
            vals[x] = v
            yield from rec(k + 1)
        vals[x] = None

    yield from rec(0)


def count_isotone_maps(X: Poset, Y: Poset) -> int:
    """Number of total isotone maps, counted by recursion along a linear extension."""
    order = X.linear_extension()
    vals = [0] * X.n

    def rec(k):
        if k == len(order):
            return 1
        x = order[k]
        cand = Y.all_mask
        for t in iter_bits(X.down[x] & ~(1 << x)):
            cand &= Y.up[vals[t]]
        total = 0
        for v in iter_bits(cand):
            vals[x] = v
            total += rec(k + 1)
        return total

    return rec(0)


# -- theorem registry ---------------------------------------------------------


@dataclass
class TheoremCheckResult:
    theorem: str
    caps: dict
    passed: bool
    checked: int
    counterexample: Optional[dict] = None
    millis: int = 0
    universe: str = ""

    def to_dict(self) -> dict:
        out = {"theorem": self.theorem, "caps": self.caps, "pass": self.passed, "checked": self.checked}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        out["millis"] = self.millis
        return out


@dataclass
class _Theorem:
    description: str
    defaults: dict
    subjects: Callable[[dict], Iterator[Poset]]
    check: Callable[[Poset, dict], tuple]
    size_key: str = "max_size"
    notes: list = field(default_factory=list)


def _instance_doc(f: MonotoneMap) -> dict:
    return {
        "X": f.domain.to_doc(),
        "A": f.defined_on.labels(),
        "f": f.to_labels(),
    }


def _valid_extension(g: Optional[MonotoneMap], f: MonotoneMap) -> bool:
    return g is not None and extension.check_isotone(g, total=True) and g.extends(f)


def _iso_range(lo: int, hi: int) -> Iterator[Poset]:
    for n in range(lo, hi + 1):
        yield from iso_posets(n)


def _labeled_range(lo: int, hi: int) -> Iterator[Poset]:
    for n in range(lo, hi + 1):
        yield from labeled_posets(n)


def _instances(Y: Poset, max_x: int, with_extremes: bool = False) -> Iterator[MonotoneMap]:
    """Every isotone partial map into ``Y`` from every X (up to isomorphism, |X| <= max_x)."""
    for X in _iso_range(1, max_x):
        for A in range(1 << X.n):
            if with_extremes and (not A or X.least_in(A) is None or X.greatest_in(A) is None):
                continue
            for vals in isotone_partial_maps(X, A, Y):
                yield MonotoneMap(X, Y, vals)


def _pointwise_leq(Y: Poset, lo: tuple, table: np.ndarray) -> bool:
    return bool(Y.leq_matrix[np.asarray(lo)[None, :], table].all())


def _pointwise_geq(Y: Poset, hi: tuple, table: np.ndarray) -> bool:
    return bool(Y.leq_matrix[table, np.asarray(hi)[None, :]].all())


def _check_t4(Y: Poset, caps: dict):
    complete = classify.is_complete_lattice(Y)
    n = 0
    for f in _instances(Y, caps["max_x"]):
        n += 1
        g = extension.extend_exists(f)
        if g is not None and not _valid_extension(g, f):
            return n, {"reason": "extend_exists returned an invalid extension", "instance": _instance_doc(f)}
        if not complete:
            if g is None:
                if len(extension.enumerate_extensions(f)):
                    return n, {"reason": "extend_exists missed an extension", "instance": _instance_doc(f)}
                return n, None
            continue
        if g is None:
            return n, {"reason": "no extension into a complete lattice", "instance": _instance_doc(f)}
        lo = extension.lower_extension(f)
        hi = extension.upper_extension(f)
        if not (_valid_extension(lo, f) and _valid_extension(hi, f)):
            return n, {"reason": "lower/upper extension invalid", "instance": _instance_doc(f)}
        family = extension.enumerate_extensions(f)
        table = np.array(family.extensions, dtype=np.intp)
        if not (_pointwise_leq(Y, lo.values, table) and _pointwise_geq(Y, hi.values, table)):
            return n, {"reason": "an extension escapes the lower/upper bounds", "instance": _instance_doc(f)}
    if not complete:
        return n, {"reason": "no non-extendable instance found within caps for a non-complete-lattice"}
    return n, None


def _check_c211(Y: Poset, caps: dict):
    n = 0
    for f in _instances(Y, caps["max_x"]):
        family = extension.enumerate_extensions(f)
        if len(family) > caps["family_cap"]:
            continue
        n += 1
        lo = extension.lower_extension(f)
        hi = extension.upper_extension(f)
        if not family.is_lattice():
            return n, {"reason": "extension family is not a lattice", "instance": _instance_doc(f)}
        bottom, top = family.bottom(), family.top()
        if bottom is None or bottom.values != lo.values or top is None or top.values != hi.values:
            return n, {"reason": "family bounds differ from lower/upper extension", "instance": _instance_doc(f)}
    return n, None


def _check_c6(Y: Poset, caps: dict):
    n = 0
    for f in _instances(Y, caps["max_x"]):
        n += 1
        if not _valid_extension(extension.extend_exists(f), f):
            return n, {"reason": "no extension into a lattice", "instance": _instance_doc(f)}
    return n, None


def _supersets(A: Poset, extra: int) -> list[Poset]:
    # Posets containing A as an induced subposet on its first |A| indices,
    # with up to ``extra`` new points, deduplicated up to isomorphism fixing A.
    out = []
    layer = [A]
    for k in range(1, extra + 1):
        seen = {}
        for P in layer:
            for Q in one_point_extensions(P, label=f"+{k}"):
                seen.setdefault(canonical_key(Q, fixed=A.n), Q)
        layer = [seen[key] for key in sorted(seen)]
        out.extend(layer)
    return out


def _check_t5(A: Poset, caps: dict):
    complete = classify.is_complete_lattice(A)
    n = 0
    whole = A.all_mask
    for X in _supersets(A, caps["extra"]):
        for Y in _iso_range(1, caps["max_y"]):
            for vals in isotone_partial_maps(X, whole, Y):
                n += 1
                f = MonotoneMap(X, Y, vals)
                g = extension.extend_exists(f)
                if complete and not _valid_extension(g, f):
                    return n, {"reason": "no extension from a complete lattice", "instance": {**_instance_doc(f), "Y": Y.to_doc()}}
                if not complete and g is None:
                    return n, None
    if not complete:
        return n, {"reason": "no non-extendable instance found within caps"}
    return n, None


def _check_l6(X: Poset, caps: dict):
    n = 0
    for a in range(X.n):
        for b in range(a + 1, X.n):
            if X.up[a] >> b & 1 or X.up[b] >> a & 1:
                continue
            n += 1
            f = MonotoneMap.identity(X, [a, b])
            if extension.extend_exists(f) is not None or len(extension.enumerate_extensions(f)):
                return n, {"reason": "identity on an incomparable pair extends", "instance": _instance_doc(f)}
    return n, None


def _check_l3(X: Poset, caps: dict):
    n = 0
    for A in range(1, 1 << X.n):
        n += 1
        f = MonotoneMap.identity(X, X.set_of(A))
        g = extension.extend_exists(f)
        if g is not None and not classify.is_complete_lattice(f.codomain):
            return n, {"reason": "retract is not a complete lattice", "instance": _instance_doc(f)}
    return n, None


def _formula_retraction(X: Poset, A: int) -> list[str]:
    # Componentwise sup of the subset elements below x, computed with the
    # general sup of the induced subposet rather than chain arithmetic.
    x0 = (A & -A).bit_length() - 1
    out = []
    blocks = classify.component_masks(X)
    for x in range(X.n):
        block = next(b for b in blocks if b >> x & 1)
        part = A & block
        if not part:
            out.append(X.labels[x0])
            continue
        sub = X.induced_mask(part)
        below = [X.labels[t] for t in iter_bits(X.down[x] & part)]
        pick = sub.sup_of(below) if below else sub.least()
        out.append(sub.labels[pick])
    return out


def _check_t10(X: Poset, caps: dict):
    blocks = classify.component_masks(X)
    all_chains = all(classify.is_chain(X.induced_mask(b)) for b in blocks)
    z = classify.z_embedding(X)
    if (z is not None) != all_chains:
        return 1, {"reason": "z_embedding existence disagrees with chain components"}
    if z is not None:
        for x in range(X.n):
            for y in range(X.n):
                same = any(b >> x & 1 and b >> y & 1 for b in blocks)
                if bool(X.up[x] >> y & 1) != (same and z[x] <= z[y]):
                    return 1, {"reason": "z_embedding is not an order embedding"}
    n = 0
    every_extends = True
    for A in range(1, 1 << X.n):
        n += 1
        f = MonotoneMap.identity(X, X.set_of(A))
        g = extension.extend_exists(f)
        if g is None:
            every_extends = False
        elif not _valid_extension(g, f):
            return n, {"reason": "invalid retraction", "instance": _instance_doc(f)}
        if all_chains:
            r = extension.extend_chain_components(X, X.set_of(A))
            if not _valid_extension(r, f):
                return n, {"reason": "chain-component retraction invalid", "instance": _instance_doc(f)}
            if [r.codomain.labels[v] for v in r.values] != _formula_retraction(X, A):
                return n, {"reason": "chain-component retraction differs from formula", "instance": _instance_doc(f)}
    if every_extends != all_chains:
        return n, {"reason": f"all retractions exist={every_extends} but chain components={all_chains}"}
    return n, None


def _check_s43(P: Poset, caps: dict):
    if classify.is_quasilattice(P) != classify.is_lattice(P):
        return 1, {"reason": "quasilattice and lattice flags differ"}
    return 1, None


def _check_t46(Y: Poset, caps: dict):
    quasi = classify.is_quasilattice(Y)
    exists_all = greedy_all = True
    n = 0
    for f in _instances(Y, caps["max_x"]):
        n += 1
        g = extension.extend_exists(f)
        h = extension.extend_greedy(f)
        if g is not None and not _valid_extension(g, f):
            return n, {"reason": "extend_exists returned an invalid extension", "instance": _instance_doc(f)}
        if h is not None and not _valid_extension(h, f):
            return n, {"reason": "extend_greedy returned an invalid extension", "instance": _instance_doc(f)}
        if g is None and h is not None:
            return n, {"reason": "greedy succeeded where search found nothing", "instance": _instance_doc(f)}
        exists_all &= g is not None
        greedy_all &= h is not None
        if quasi and not greedy_all:
            return n, {"reason": "greedy failed on a quasilattice codomain", "instance": _instance_doc(f)}
        if not quasi and not exists_all:
            return n, None
    if not quasi:
        return n, {"reason": "no non-extendable instance found within caps for a non-quasilattice"}
    return n, None


def _check_t53(Y: Poset, caps: dict):
    local = classify.is_local_complete_lattice(Y)
    n = 0
    for f in _instances(Y, caps["max_x"], with_extremes=True):
        n += 1
        g = extension.extend_preserving_extremes(f)
        if g is None:
            if local:
                return n, {"reason": "no extremes-preserving extension into a local complete lattice", "instance": _instance_doc(f)}
            return n, None
        lo, hi = extension.extremes(f)
        window = Y.interval_mask(f.values[lo], f.values[hi])
        if not _valid_extension(g, f) or any(not window >> v & 1 for v in g.values):
            return n, {"reason": "extension leaves the extreme-value interval", "instance": _instance_doc(f)}
    if not local:
        return n, {"reason": "no failing instance found within caps for a non-local-complete-lattice"}
    return n, None


def _connected_non_chains(caps):
    for X in _labeled_range(1, caps["max_size"]):
        if len(classify.component_masks(X)) == 1 and not classify.is_chain(X):
            yield X


THEOREMS: dict[str, _Theorem] = {
    "t4": _Theorem(
        "complete lattice <=> every isotone partial map into it extends; lower/upper extensions bound the family",
        {"max_y": 4, "max_x": 4},
        lambda c: _iso_range(1, c["max_y"]),
        _check_t4,
        "max_y",
    ),
    "c2.11": _Theorem(
        "extension family into a complete lattice is a lattice with bottom/top = lower/upper extension",
        {"max_y": 4, "max_x": 4, "family_cap": 10**4},
        lambda c: (Y for Y in _iso_range(1, c["max_y"]) if classify.is_complete_lattice(Y)),
        _check_c211,
        "max_y",
    ),
    "c6": _Theorem(
        "every isotone map from a finite subset into a lattice extends",
        {"max_y": 5, "max_x": 4},
        lambda c: (Y for Y in _iso_range(1, c["max_y"]) if classify.is_lattice(Y)),
        _check_c6,
        "max_y",
    ),
    "t5": _Theorem(
        "A is a complete lattice <=> every isotone map from A extends to every X containing A "
        "(X bounded to |A| + extra points)",
        {"max_a": 3, "max_y": 3, "extra": 2},
        lambda c: _iso_range(1, c["max_a"]),
        _check_t5,
        "max_a",
    ),
    "l6": _Theorem(
        "connected non-chain X: identity on an incomparable pair has no isotone retraction",
        {"max_size": 4},
        _connected_non_chains,
        _check_l6,
    ),
    "l3": _Theorem(
        "a retract of a complete lattice is a complete lattice",
        {"max_size": 5},
        lambda c: (X for X in _labeled_range(1, c["max_size"]) if classify.is_complete_lattice(X)),
        _check_l3,
    ),
    "t10": _Theorem(
        "every retraction problem on X is solvable <=> every component of X is a chain",
        {"max_size": 4},
        lambda c: _labeled_range(1, c["max_size"]),
        _check_t10,
    ),
    "s43": _Theorem(
        "a finite quasilattice is a lattice",
        {"max_size": 5},
        lambda c: _labeled_range(1, c["max_size"]),
        _check_s43,
    ),
    "t46": _Theorem(
        "quasilattice <=> all finite extension problems solvable <=> greedy always succeeds "
        "(the FC-universal clause is not testable on finite posets)",
        {"max_y": 4, "max_x": 4},
        lambda c: _iso_range(1, c["max_y"]),
        _check_t46,
        "max_y",
    ),
    "t53": _Theorem(
        "local complete lattice <=> extremes-preserving extensions always exist",
        {"max_y": 4, "max_x": 4},
        lambda c: _iso_range(1, c["max_y"]),
        _check_t53,
        "max_y",
    ),
}

_SIZE_LIMITS = {"max_size": LABELED_CAP, "max_y": ISO_CAP, "max_x": ISO_CAP, "max_a": ISO_CAP}


def theorem_caps(theorem: str, caps: Optional[dict] = None) -> dict:
    if theorem not in THEOREMS:
        raise UnknownTheoremId(f"unknown theorem id {theorem!r}; known: {', '.join(THEOREMS)}")
    merged = dict(THEOREMS[theorem].defaults)
    for key, value in (caps or {}).items():
        if key == "max_size" and "max_size" not in merged:
            key = THEOREMS[theorem].size_key
        if key not in merged:
            raise ValueError(f"theorem {theorem} has no cap {key!r}")
        merged[key] = int(value)
    for key, limit in _SIZE_LIMITS.items():
        if merged.get(key, 0) > limit:
            raise CapExceeded(f"{key}={merged[key]} exceeds the limit {limit}")
    return merged


def check_theorem(theorem: str, caps: Optional[dict] = None) -> TheoremCheckResult:
    """Exhaustively check one registered result over its capped universe.

    Subjects are visited in canonical order and the first failure is reported,
    so the counterexample does not depend on timing.
    """
    caps = theorem_caps(theorem, caps)
    entry = THEOREMS[theorem]
    start = time.perf_counter()
    checked = 0
    counterexample = None
    for subject in entry.subjects(caps):
        n, failure = entry.check(subject, caps)
        checked += n
        if failure is not None:
            counterexample = {"subject": subject.to_doc(), **failure}
            break
    millis = int(round((time.perf_counter() - start) * 1000))
    return TheoremCheckResult(
        theorem, caps, counterexample is None, checked, counterexample, millis, entry.description
    )


def replay(result: TheoremCheckResult) -> Optional[dict]:
    """Re-run the failing subject of ``result``; returns the failure it reproduces."""
    if result.counterexample is None:
        return None
    subject = poset_from_doc(result.counterexample["subject"])
    _, failure = THEOREMS[result.theorem].check(subject, result.caps)
    return failure


__all__ = [
    "LABELED_COUNTS",
    "UNLABELED_COUNTS",
    "PosetStream",
    "TheoremCheckResult",
    "THEOREMS",
    "canonical_form",
    "canonical_key",
    "check_theorem",
    "count_isotone_maps",
    "count_posets_by_filter",
    "enumerate_isotone_maps",
    "enumerate_posets",
    "find_counterexample",
    "is_isomorphic",
    "isotone_partial_maps",
    "iso_posets",
    "labeled_posets",
    "one_point_extensions",
    "random_poset",
    "replay",
    "theorem_caps",
]
