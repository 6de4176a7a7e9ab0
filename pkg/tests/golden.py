"""Frozen reference data for the golden tests.

The three matrices are the standard-form constructions from Z5 (with
S = {1,4}), Z13 (with the even powers of 2) and the quaternion group
(S = {-1}, T = {i,j,k}); the tables are the full outputs of the two
prime-driven generators over their published ranges.
"""

import numpy as np

CONFERENCE_6 = np.array(
    [
        [0, 1, 1, 1, 1, 1],
        [1, 0, 1, -1, -1, 1],
        [1, 1, 0, 1, -1, -1],
        [1, -1, 1, 0, 1, -1],
        [1, -1, -1, 1, 0, 1],
        [1, 1, -1, -1, 1, 0],
    ],
    dtype=np.int64,
)

CONFERENCE_14 = np.array(
    [
        [0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
        [1, 0, 1, -1, 1, 1, -1, -1, -1, -1, 1, 1, -1, 1],
        [1, 1, 0, 1, -1, 1, 1, -1, -1, -1, -1, 1, 1, -1],
        [1, -1, 1, 0, 1, -1, 1, 1, -1, -1, -1, -1, 1, 1],
        [1, 1, -1, 1, 0, 1, -1, 1, 1, -1, -1, -1, -1, 1],
        [1, 1, 1, -1, 1, 0, 1, -1, 1, 1, -1, -1, -1, -1],
        [1, -1, 1, 1, -1, 1, 0, 1, -1, 1, 1, -1, -1, -1],
        [1, -1, -1, 1, 1, -1, 1, 0, 1, -1, 1, 1, -1, -1],
        [1, -1, -1, -1, 1, 1, -1, 1, 0, 1, -1, 1, 1, -1],
        [1, -1, -1, -1, -1, 1, 1, -1, 1, 0, 1, -1, 1, 1],
        [1, 1, -1, -1, -1, -1, 1, 1, -1, 1, 0, 1, -1, 1],
        [1, 1, 1, -1, -1, -1, -1, 1, 1, -1, 1, 0, 1, -1],
        [1, -1, 1, 1, -1, -1, -1, -1, 1, 1, -1, 1, 0, 1],
        [1, 1, -1, 1, 1, -1, -1, -1, -1, 1, 1, -1, 1, 0],
    ],
    dtype=np.int64,
)

# Tokens: "1" = 1, "w" = omega, "w2" = omega^2.
CUBE_ROOT_9_TOKENS = [
    ["0", "1", "1", "1", "1", "1", "1", "1", "1"],
    ["1", "0", "1", "w", "w2", "w", "w2", "w", "w2"],
    ["1", "1", "0", "w2", "w", "w2", "w", "w2", "w"],
    ["1", "w2", "w", "0", "1", "w2", "w", "w", "w2"],
    ["1", "w", "w2", "1", "0", "w", "w2", "w2", "w"],
    ["1", "w2", "w", "w", "w2", "0", "1", "w2", "w"],
    ["1", "w", "w2", "w2", "w", "1", "0", "w", "w2"],
    ["1", "w2", "w", "w2", "w", "w", "w2", "0", "1"],
    ["1", "w", "w2", "w", "w2", "w2", "w", "1", "0"],
]

OMEGA_CIRCULANT_3_TOKENS = [
    ["0", "w", "w2"],
    ["w2", "0", "w"],
    ["w", "w2", "0"],
]

# (m, n, k) rows of the p = 8m+5 generator for m < 100 (31 rows).
TABLE_5MOD8 = [
    (0, 6, 3), (1, 14, 7), (3, 30, 15), (4, 38, 19), (6, 54, 27),
    (7, 62, 31), (12, 102, 51), (18, 150, 75), (21, 174, 87), (22, 182, 91),
    (24, 198, 99), (33, 270, 135), (36, 294, 147), (39, 318, 159),
    (43, 350, 175), (46, 374, 187), (48, 390, 195), (52, 422, 211),
    (57, 462, 231), (63, 510, 255), (67, 542, 271), (69, 558, 279),
    (76, 614, 307), (81, 654, 327), (82, 662, 331), (84, 678, 339),
    (87, 702, 351), (88, 710, 355), (94, 758, 379), (96, 774, 387),
    (99, 798, 399),
]

# (m, n, k) rows of the p = 8m+1 generator for 2 <= m < 300 (32 rows;
# the published table additionally lists a degenerate m=0 row for p=1,
# which is not prime and is excluded here).
TABLE_1MOD8 = [
    (2, 18, 9), (5, 42, 21), (12, 98, 49), (17, 138, 69), (24, 194, 97),
    (39, 314, 157), (50, 402, 201), (51, 410, 205), (56, 450, 225),
    (65, 522, 261), (71, 570, 285), (95, 762, 381), (96, 770, 385),
    (101, 810, 405), (107, 858, 429), (116, 930, 465), (122, 978, 489),
    (126, 1010, 505), (141, 1130, 565), (162, 1298, 649), (170, 1362, 681),
    (176, 1410, 705), (186, 1490, 745), (212, 1698, 849), (234, 1874, 937),
    (249, 1994, 997), (260, 2082, 1041), (267, 2138, 1069),
    (269, 2154, 1077), (270, 2162, 1081), (287, 2298, 1149),
    (297, 2378, 1189),
]

# The 28-element reversible Hadamard difference set in Z8 x Z8, written as
# exponent pairs (x, y); the set is A united with -A.
HADAMARD_64_HALF = [
    (1, 4), (1, 5), (1, 6), (1, 7),
    (2, 2), (2, 3), (2, 6), (2, 7),
    (3, 2), (3, 4), (3, 5), (3, 7),
    (4, 1), (4, 3),
]
