"""Clopens of Cantor space: cylinders, hooks and the pair presentation.

Opens are stored as canonical generator sets.  The hook ↱s collects the
streams at or to the right of s in the lower lexicographic order; the numpy
bitmask view makes the six basic hook identities easy to eyeball.
"""
import numpy as np

from interval_object.opens import check_hook_identities, check_presentation_relations, lhook, pair_open, rhook, up
from interval_object.words import left_bristles, overlap, right_bristles, words

s = "-+-"
print("right bristles of", s, right_bristles(s), "-> ↱s =", rhook(s))
print("left bristles of", s, left_bristles(s), "-> ↰s =", lhook(s))
print("↑s = ↱s ∧ ↰s:", up(s) == rhook(s) & lhook(s))


def row(U, depth=4):
    bits = U.mask(depth)
    return np.array([(bits >> i) & 1 for i in range(1 << depth)], dtype=np.uint8)


# One row per word of length 3: which depth-4 cylinders the hooks cover.
# Left to right is the order -...- to +...+, so ↱ is a right end and ↰ a left end.
table = np.stack([row(rhook(w)) for w in words(3, 3)])
print(table)
print("the right hooks only shrink as the word moves right:",
      bool(np.all(table[:-1] >= table[1:])))

# A pair (s, t) stands for ↰s ∨ ↱t; it is everything exactly when s and t overlap.
print("(-+, +-) whole:", pair_open("-+", "+-").is_top(), "overlap:", overlap("-+", "+-"))

print(check_hook_identities(5).summary())
print(check_presentation_relations(3).summary())
