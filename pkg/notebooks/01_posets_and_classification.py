# %% [markdown]
# # Posets and where they sit in the lattice hierarchy
#
# A poset is stored as closed bit rows: bit j of `up[i]` says i <= j.
# We build a few small ones from their covering pairs and look at them.

# %%
from isotone import classify_poset, from_covers, lex_sum
from isotone.fixtures import A2, DIAMOND, V
from isotone.poset import downset_embedding

print(DIAMOND)
print("covers:", DIAMOND.cover_labels())
print(DIAMOND.leq_matrix.astype(int))

# %% [markdown]
# Cones and bounds.  The supremum of the empty set is the least element,
# which is why lower extensions of an empty map are constant at the bottom.

# %%
print("below a and b:", DIAMOND.down_cone(["a", "b"]))
print("above a and b in A2:", A2.up_cone(["a", "b"]))
print("sup of nothing:", DIAMOND.labels[DIAMOND.sup_of([])])

# %% [markdown]
# Stacking two antichains gives the bowtie.  Every interval in it is a chain
# or a point, yet {a, b} has two minimal upper bounds.

# %%
bowtie = lex_sum(A2, A2)
report = classify_poset(bowtie)
for name in ("lattice", "quasilattice", "local_complete_lattice", "local_quasilattice"):
    print(f"{name:24s} {getattr(report, name)}")
print("witness:", report.witness["quasilattice"])

# %% [markdown]
# Add a bottom and a top and the interval between them is the bowtie
# itself, so local completeness is lost too.

# %%
bounded = from_covers(
    ["0", "a", "b", "c", "d", "1"],
    [("0", "a"), ("0", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "1"), ("d", "1")],
)
print(classify_poset(bounded).witness["local_complete_lattice"])

# %% [markdown]
# Every poset sits inside a powerset lattice via x -> (elements below x).

# %%
L, images = downset_embedding(V)
print({V.labels[i]: L.labels[m] for i, m in enumerate(images)})
