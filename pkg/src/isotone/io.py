"""JSON documents for posets and partial maps.

Poset document::

    {"elements": ["a", "b", ...], "covers": [["a", "b"], ...]}

Map document; ``domain`` and ``codomain`` are inline poset documents or paths
(relative to the map file)::

    {"domain": "x.json", "codomain": {...}, "map": {"a": "y1", ...}}
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .errors import ParseError
from .poset import Poset, from_covers

PathLike = Union[str, Path]


def poset_from_doc(doc) -> Poset:
    if not isinstance(doc, dict) or "elements" not in doc:
        raise ParseError("poset document must be an object with an 'elements' list")
    elements = doc["elements"]
    covers = doc.get("covers", [])
    if not isinstance(elements, list) or not all(isinstance(e, str) for e in elements):
        raise ParseError("'elements' must be a list of strings")
    if not isinstance(covers, list) or not all(
        isinstance(c, list) and len(c) == 2 and all(isinstance(x, str) for x in c) for c in covers
    ):
        raise ParseError("'covers' must be a list of [lower, upper] label pairs")
    return from_covers(elements, covers)


def poset_to_doc(P: Poset) -> dict:
    return P.to_doc()


def _read_json(path: PathLike):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from None
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from None


def load_poset(path: PathLike) -> Poset:
    return poset_from_doc(_read_json(path))


def _resolve_poset(ref, base: Path) -> Poset:
    if isinstance(ref, str):
        return load_poset(base / ref)
    return poset_from_doc(ref)


def map_from_doc(doc, base: PathLike = "."):
    """Parse a map document into a :class:`~isotone.extension.MonotoneMap`."""
    from .extension import MonotoneMap

    if not isinstance(doc, dict) or not {"domain", "codomain"} <= doc.keys():
        raise ParseError("map document needs 'domain' and 'codomain'")
    mapping = doc.get("map", {})
    if not isinstance(mapping, dict) or not all(isinstance(v, str) for v in mapping.values()):
        raise ParseError("'map' must be an object from domain labels to codomain labels")
    base = Path(base)
    X = _resolve_poset(doc["domain"], base)
    Y = _resolve_poset(doc["codomain"], base)
    return MonotoneMap.from_labels(X, Y, mapping)


def load_map(path: PathLike):
    path = Path(path)
    return map_from_doc(_read_json(path), path.parent)


def map_to_doc(f, domain_ref=None, codomain_ref=None) -> dict:
    """Map document for ``f``; poset references default to inline documents."""
    return {
        "domain": f.domain.to_doc() if domain_ref is None else domain_ref,
        "codomain": f.codomain.to_doc() if codomain_ref is None else codomain_ref,
        "map": f.to_labels(),
    }


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)
