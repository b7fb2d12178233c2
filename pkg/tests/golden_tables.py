"""Frozen coefficient tables for the five polynomial families.

Reference values for the S-fence filter lattices, frozen here by hand;
every computational route in the package is required to reproduce them
coefficient for coefficient.  Row n lists the coefficients by ascending
power of x.
"""

RANK = {
    0: [1],
    1: [1, 1],
    2: [1, 1, 1],
    3: [1, 1, 1, 1],
    4: [1, 1, 1, 2, 1],
    5: [1, 2, 2, 2, 2, 1],
    6: [1, 2, 3, 3, 3, 3, 1],
    7: [1, 3, 4, 5, 5, 4, 3, 1],
    8: [1, 3, 5, 7, 8, 7, 6, 4, 1],
    9: [1, 4, 7, 10, 12, 12, 10, 7, 4, 1],
}

CUBE = {
    0: [1],
    1: [2, 1],
    2: [3, 2],
    3: [4, 3],
    4: [6, 6, 1],
    5: [10, 13, 4],
    6: [16, 25, 11, 1],
    7: [26, 48, 28, 5],
}

MAXCUBE = {
    0: [1],
    1: [0, 1],
    2: [0, 2],
    3: [0, 3],
    4: [0, 2, 1],
    5: [0, 0, 4],
    6: [0, 0, 5, 1],
    7: [0, 0, 2, 5],
}

DEGREE = {
    0: [1],
    1: [0, 2],
    2: [0, 2, 1],
    3: [0, 2, 2],
    4: [0, 1, 4, 1],
    5: [0, 0, 5, 4, 1],
    6: [0, 0, 3, 9, 3, 1],
    7: [0, 0, 1, 11, 10, 3, 1],
}

INDEGREE = {
    0: [1],
    1: [1, 1],
    2: [1, 2],
    3: [1, 3],
    4: [1, 4, 1],
    5: [1, 5, 4],
    6: [1, 6, 8, 1],
    7: [1, 7, 13, 5],
}

ALL = {
    "rank": RANK,
    "cube": CUBE,
    "maxcube": MAXCUBE,
    "degree": DEGREE,
    "indegree": INDEGREE,
}
