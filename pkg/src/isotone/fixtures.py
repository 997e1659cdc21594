"""Small named posets used throughout the tests, demos and CLI corpus."""

from .poset import Poset, from_covers, lex_sum


C2 = Poset.chain(2, ["0", "1"])
C3 = from_covers(["a", "b", "c"], [("a", "b"), ("b", "c")])
A2 = from_covers(["a", "b"], [])
V = from_covers(["0", "a", "b"], [("0", "a"), ("0", "b")])
LAMBDA = from_covers(["a", "b", "1"], [("a", "1"), ("b", "1")])
DIAMOND = from_covers(["⊥", "a", "b", "⊤"], [("⊥", "a"), ("⊥", "b"), ("a", "⊤"), ("b", "⊤")])
BOWTIE = lex_sum(A2, A2)
# Bowtie with a new bottom and top: the smallest poset with an interval that is not a lattice.
BOUNDED_BOWTIE = from_covers(
    ["0", "a", "b", "c", "d", "1"],
    [("0", "a"), ("0", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "1"), ("d", "1")],
)
PENTAGON = from_covers(["0", "a", "b", "c", "1"], [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")])
M3 = from_covers(["0", "a", "b", "c", "1"], [("0", x) for x in "abc"] + [(x, "1") for x in "abc"])
