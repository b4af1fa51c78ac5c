"""Frozen expected values the implementation must reproduce exactly.

REFERENCE_N6 is the full multiplicity table of the level-1 distribution
for the even word of length 6 (42 entries, total mass 64), keyed by
(a, b).  REFERENCE_N6_PUSHED is its image under ((a-b)^2, a) (26 cells).
MU2, MU3 and MU5 are hand-expanded small cases of the operator recursion.
"""

REFERENCE_N6 = {
    (0, 0): 1,
    (1, 0): 1, (1, 1): 1, (1, 2): 1,
    (2, 1): 1, (2, 2): 2, (2, 3): 1,
    (3, 2): 2, (3, 3): 3, (3, 4): 2,
    (4, 2): 1, (4, 3): 2, (4, 4): 3, (4, 5): 2, (4, 6): 1,
    (5, 3): 1, (5, 4): 3, (5, 5): 3, (5, 6): 3, (5, 7): 1,
    (6, 4): 1, (6, 5): 2, (6, 6): 3, (6, 7): 2, (6, 8): 1,
    (7, 5): 1, (7, 6): 2, (7, 7): 2, (7, 8): 2, (7, 9): 1,
    (8, 6): 1, (8, 7): 1, (8, 8): 1, (8, 9): 1, (8, 10): 1,
    (9, 6): 1, (9, 7): 1, (9, 8): 1, (9, 9): 1, (9, 10): 1, (9, 11): 1, (9, 12): 1,
}

REFERENCE_N6_PUSHED = {
    (0, 0): 1,
    (0, 1): 1, (1, 1): 2,
    (0, 2): 2, (1, 2): 2,
    (0, 3): 3, (1, 3): 4,
    (0, 4): 3, (1, 4): 4, (4, 4): 2,
    (0, 5): 3, (1, 5): 6, (4, 5): 2,
    (0, 6): 3, (1, 6): 4, (4, 6): 2,
    (0, 7): 2, (1, 7): 4, (4, 7): 2,
    (0, 8): 1, (1, 8): 2, (4, 8): 2,
    (0, 9): 1, (1, 9): 2, (4, 9): 2, (9, 9): 2,
}

MU2 = {(0, 0): 1, (1, 0): 1, (1, 1): 1, (1, 2): 1}

MU3 = {
    (0, 0): 1, (1, 0): 1, (1, 1): 1, (1, 2): 1,
    (2, 1): 1, (2, 2): 1, (3, 2): 1, (4, 2): 1,
}

# by delta string (fixed a - b): d=0 and d=1 have profile 1,1,2,2,2,1,1;
# d=-1 and d=2 are flat; d=-2 and d=3 are single cells
MU5 = {
    **{(a, a): c for a, c in zip(range(0, 7), (1, 1, 2, 2, 2, 1, 1))},
    **{(a, a - 1): c for a, c in zip(range(1, 8), (1, 1, 2, 2, 2, 1, 1))},
    **{(a, a + 1): 1 for a in range(1, 6)},
    **{(a, a - 2): 1 for a in range(4, 9)},
    (4, 6): 1,
    (9, 6): 1,
}
