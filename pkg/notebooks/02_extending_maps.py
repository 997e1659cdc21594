# %% [markdown]
# # Extending a partial isotone map
#
# A three-element chain a < b < c, with a sent to 0 and c to 1 in the
# two-element chain.  b is free.

# %%
from isotone import (
    MonotoneMap,
    enumerate_extensions,
    extend_exists,
    extend_greedy,
    lower_extension,
    upper_extension,
)
from isotone.fixtures import A2, BOWTIE, C2, C3, V

f = MonotoneMap.from_labels(C3, C2, {"a": "0", "c": "1"})
print("lower:", lower_extension(f).to_labels())
print("upper:", upper_extension(f).to_labels())

# %% [markdown]
# Into a complete lattice the extensions form a lattice under the pointwise
# order, squeezed between the lower and upper extension.

# %%
family = enumerate_extensions(f)
print(len(family), "extensions")
print(family.order_matrix.astype(int))
print(family.bottom() == lower_extension(f), family.top() == upper_extension(f))

# %% [markdown]
# The identity on the two tops of V cannot be extended into the antichain:
# the bottom point would need to lie below two incomparable images.

# %%
ident = MonotoneMap.identity(V, ["a", "b"])
print(ident, "->", extend_exists(ident))

# %% [markdown]
# Greedy extension walks a linear extension of the domain and picks a
# minimal admissible value at each step.  Into the bowtie it sends the
# bottom of V to a.

# %%
g = extend_greedy(MonotoneMap.from_labels(V, BOWTIE, {"a": "c", "b": "d"}))
print(g.to_labels())
