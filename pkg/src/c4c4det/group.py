"""The group C4 x| C4 = <g1, g2 | g1^4 = g2^4 = e, g2 g1 = g1^3 g2> and its group determinant.

Elements are g1^s g2^t, stored by the flat index ``t + 4*s``. Rows and columns of
the Dedekind matrix follow that index order, so matrix dumps are reproducible.
"""
from __future__ import annotations

from typing import NamedTuple, Sequence

ORDER = 16


class GroupElement(NamedTuple):
    s: int
    t: int

    @property
    def index(self) -> int:
        return self.t + 4 * self.s

    @classmethod
    def from_index(cls, j: int) -> "GroupElement":
        if not 0 <= j < ORDER:
            raise ValueError(f"element index out of range: {j}")
        return cls(j // 4, j % 4)


ELEMENTS = tuple(GroupElement.from_index(j) for j in range(ORDER))
IDENTITY = ELEMENTS[0]


def group_mul(x: GroupElement, y: GroupElement) -> GroupElement:
    # g2^t g1^s' = g1^(3^t s') g2^t
    return GroupElement((x.s + pow(3, x.t, 4) * y.s) % 4, (x.t + y.t) % 4)


MUL_TABLE = tuple(
    tuple(group_mul(x, y).index for y in ELEMENTS) for x in ELEMENTS
)
# Inverses by table search, not by closed form.
INVERSE_TABLE = tuple(row.index(0) for row in MUL_TABLE)


def group_inverse(x: GroupElement) -> GroupElement:
    return ELEMENTS[INVERSE_TABLE[x.index]]


def check_tuple(a: Sequence[int]) -> tuple[int, ...]:
    a = tuple(int(v) for v in a)
    if len(a) != ORDER:
        raise ValueError(f"expected 16 integers, got {len(a)}")
    return a


# Column h of row g holds a[g h^-1]; precomputed once.
_DEDEKIND_INDEX = tuple(
    tuple(MUL_TABLE[g][INVERSE_TABLE[h]] for h in range(ORDER)) for g in range(ORDER)
)


def dedekind_matrix(a: Sequence[int]) -> list[list[int]]:
    """Return the 16x16 matrix (a[g h^-1]) with rows/columns in flat index order."""
    a = check_tuple(a)
    return [[a[j] for j in row] for row in _DEDEKIND_INDEX]


def det_exact(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix by fraction-free (Bareiss) elimination.

    Every division in the update step is exact, so intermediates stay integral.
    Zero pivots are handled by swapping in a lower row and flipping the sign.
    """
    a = [list(row) for row in m]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix is not square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            f = ri[k]
            ri[k + 1:] = [(pivot * ri[j] - f * rk[j]) // prev for j in range(k + 1, n)]
            ri[k] = 0
        prev = pivot
    return sign * a[-1][-1]


def dG_direct(a: Sequence[int]) -> int:
    """Group determinant of C4 x| C4 evaluated at the tuple ``a`` via the full 16x16 matrix."""
    return det_exact(dedekind_matrix(a))
