# %% [markdown]
# # Building tuples for every member value
#
# ``synthesize`` classifies a target, picks the matching explicit construction
# and re-checks it against both determinant routes.

# %%
from c4c4det.witness import synthesize
from c4c4det.errors import NotAMember

for n in [17, -15, 585, -135, 8281, 2**14 * 15, -(2**14) * 13, 2**14 * 9, 2**14 * 49, 2**15 * 3, 0]:
    w = synthesize(n)
    print(f"{n:>10}  {w.construction}")
    print(" " * 12, w.tuple)

try:
    synthesize(2**14 * 3)
except NotAMember as exc:
    print(exc)

# %% [markdown]
# The square-sum decompositions the constructions rely on.

# %%
from c4c4det.numtheory import FourSquarePattern, TwoSquarePattern, four_squares, two_squares

print(two_squares(29, TwoSquarePattern.ODD3_EVEN2))
print(two_squares(2 * 13, TwoSquarePattern.ODD3_ODD1))
print(four_squares(23, FourSquarePattern.ONES_TWO))
print(four_squares(2 * 7, FourSquarePattern.ONE_ZERO_ONE_TWO))
