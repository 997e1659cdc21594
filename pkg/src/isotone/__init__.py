"""Isotone extension of partial maps between finite posets.

Submodules:

* :mod:`isotone.poset` -- immutable finite posets, cones, bounds, sums.
* :mod:`isotone.classify` -- chain / lattice / quasilattice / local tests.
* :mod:`isotone.extension` -- partial isotone maps and their extensions.
* :mod:`isotone.oracle` -- brute-force enumeration and theorem checks.
* :mod:`isotone.cli` -- the ``isotone`` command line tool.
"""

from .classify import (
    ClassificationReport,
    classify_poset,
    components,
    is_chain,
    is_complete_lattice,
    is_lattice,
    is_local_complete_lattice,
    is_local_quasilattice,
    is_quasilattice,
    z_embedding,
)
from .errors import *  # noqa: F401,F403
from .extension import (
    ExtensionFamily,
    MonotoneMap,
    check_isotone,
    enumerate_extensions,
    extend_chain_components,
    extend_exists,
    extend_greedy,
    extend_preserving_extremes,
    lower_extension,
    upper_extension,
)
from .poset import ElementSet, Poset, cardinal_sum, downset_embedding, from_covers, lex_sum

__version__ = "0.1.0"
