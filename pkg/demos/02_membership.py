# %% [markdown]
# # Which integers are group determinants?
#
# Odd values must be 1 or 9 mod 16 (and the 9 mod 16 ones must lie in A);
# even values need 2-adic valuation at least 14.

# %%
from collections import Counter

from c4c4det.membership import classify

for n in [1, 9, 17, 25, 585, -135, 3, 2**14, 2**14 * 15, 2**14 * 9, 2**13 * 3, 2**15, 0]:
    c = classify(n)
    print(f"{n:>10}  {c.case:8}  {c.params or c.reason}")

# %% [markdown]
# Fraction of odd numbers = 9 (mod 16) below 10^5 that are members.

# %%
cases = Counter(classify(n).case for n in range(9, 100_000, 16))
print(cases)

# %% [markdown]
# Compare with values actually attained by small tuples.

# %%
import random

from c4c4det.group import dG_direct

rng = random.Random(1)
attained = Counter()
for _ in range(3000):
    v = dG_direct([rng.randint(-2, 2) for _ in range(16)])
    attained[classify(v).case] += 1
print(attained)
