# %% [markdown]
# # Checking the extension theorems on every small poset
#
# The registry runs each statement over all posets up to a size cap and
# stops at the first counterexample.

# %%
import numpy as np

from isotone.oracle import LABELED_COUNTS, THEOREMS, check_theorem, labeled_posets

print([len(labeled_posets(n)) for n in range(1, 6)], LABELED_COUNTS[1:6])

# %%
for theorem in ("s43", "t10", "l6", "t5"):
    result = check_theorem(theorem)
    print(f"{theorem:5s} pass={result.passed} checked={result.checked:6d}  {THEOREMS[theorem].description}")

# %% [markdown]
# Caps matter: the antichain codomain needs a three-point domain to show
# that it is not a complete lattice, so two-point domains hide the failure.

# %%
print(check_theorem("t4", {"max_y": 2, "max_x": 2}).counterexample)

# %% [markdown]
# How many isotone maps are there between small chains?  The counts are
# binomial coefficients C(m + n - 1, n).

# %%
from isotone.oracle import count_isotone_maps
from isotone.poset import Poset

table = np.array([[count_isotone_maps(Poset.chain(n), Poset.chain(m)) for m in range(1, 6)] for n in range(1, 6)])
print(table)
