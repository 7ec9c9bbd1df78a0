"""Delay-optimal sorting networks for 1 to 16 lanes.

Generated by tools/find_optimal_networks.py --emit; do not edit by hand.
Each entry is a list of parallel stages of (low, high) lane pairs.
"""

OPTIMAL_NETWORKS = {
    1: [
    ],
    2: [
        [(0, 1)],
    ],
    3: [
        [(0, 1)],
        [(0, 2)],
        [(1, 2)],
    ],
    4: [
        [(0, 1), (2, 3)],
        [(0, 2), (1, 3)],
        [(1, 2)],
    ],
    5: [
        [(0, 1), (2, 3)],
        [(3, 4)],
        [(0, 4), (2, 3)],
        [(0, 2), (1, 3)],
        [(1, 2), (3, 4)],
    ],
    6: [
        [(0, 1), (2, 3), (4, 5)],
        [(0, 5), (3, 4)],
        [(0, 4), (1, 5), (2, 3)],
        [(0, 2), (1, 3), (4, 5)],
        [(1, 2), (3, 4)],
    ],
    7: [
        [(0, 1), (2, 3), (4, 5)],
        [(0, 2), (1, 3), (4, 6)],
        [(1, 2), (5, 6)],
        [(0, 4), (1, 5), (2, 6)],
        [(2, 4), (3, 5)],
        [(1, 2), (3, 4), (5, 6)],
    ],
    8: [
        [(0, 1), (2, 3), (4, 5), (6, 7)],
        [(0, 2), (1, 3), (4, 6), (5, 7)],
        [(1, 2), (5, 6)],
        [(0, 4), (1, 5), (2, 6), (3, 7)],
        [(2, 4), (3, 5)],
        [(1, 2), (3, 4), (5, 6)],
    ],
    9: [
        [(0, 1), (2, 3), (4, 5), (6, 7)],
        [(0, 7), (1, 4), (2, 8), (5, 6)],
        [(1, 5), (2, 6), (3, 8), (4, 7)],
        [(0, 6), (1, 2), (3, 4), (5, 8)],
        [(0, 2), (3, 5), (4, 6), (7, 8)],
        [(0, 3), (2, 5), (4, 7), (6, 8)],
        [(0, 1), (2, 3), (4, 5), (6, 7)],
    ],
    10: [
        [(0, 1), (2, 3), (4, 5), (6, 7), (8, 9)],
        [(0, 7), (1, 4), (2, 8), (3, 9), (5, 6)],
        [(0, 9), (1, 5), (2, 6), (3, 8), (4, 7)],
        [(0, 6), (1, 2), (3, 4), (5, 8), (7, 9)],
        [(0, 2), (3, 5), (4, 6), (7, 8)],
        [(0, 3), (2, 5), (4, 7), (6, 8)],
        [(0, 1), (2, 3), (4, 5), (6, 7), (8, 9)],
    ],
    11: [
        [(0, 1), (2, 3), (4, 5), (6, 7), (8, 9)],
        [(0, 8), (1, 9), (3, 4), (5, 7), (6, 10)],
        [(0, 6), (1, 2), (3, 10), (4, 8), (7, 9)],
        [(1, 3), (2, 10), (4, 5), (6, 7)],
        [(0, 1), (2, 5), (3, 6), (7, 8)],
        [(1, 3), (2, 4), (5, 10), (6, 7), (8, 9)],
        [(2, 3), (4, 6), (5, 7), (8, 10)],
        [(1, 2), (3, 4), (5, 6), (7, 8), (9, 10)],
    ],
    12: [
        [(0, 1), (2, 3), (4, 5), (6, 7), (8, 9), (10, 11)],
        [(0, 8), (1, 9), (2, 11), (3, 4), (5, 7), (6, 10)],
        [(0, 6), (1, 2), (3, 10), (4, 8), (5, 11), (7, 9)],
        [(1, 3), (2, 10), (4, 5), (6, 7), (8, 11)],
        [(0, 1), (2, 5), (3, 6), (7, 8), (10, 11)],
        [(1, 3), (2, 4), (5, 10), (6, 7), (8, 9)],
        [(2, 3), (4, 6), (5, 7), (8, 10), (9, 11)],
        [(1, 2), (3, 4), (5, 6), (7, 8), (9, 10)],
    ],
    13: [
        [(0, 1), (2, 3), (4, 5), (6, 7), (8, 9), (10, 11)],
        [(0, 2), (1, 3), (4, 6), (5, 7), (8, 10), (9, 11)],
        [(0, 4), (1, 5), (2, 6), (3, 7), (8, 12)],
        [(0, 8), (1, 9), (2, 10), (3, 11), (4, 12)],
        [(1, 2), (3, 12), (4, 8), (5, 10), (6, 9), (7, 11)],
        [(2, 8), (3, 9), (5, 12), (6, 10)],
        [(1, 2), (3, 5), (6, 8), (7, 12), (9, 10)],
        [(2, 4), (3, 6), (5, 8), (7, 9), (10, 12)],
        [(1, 2), (3, 4), (5, 6), (7, 8), (9, 10), (11, 12)],
    ],
    14: [
        [(0, 1), (2, 3), (4, 5), (6, 7), (8, 9), (10, 11), (12, 13)],
        [(0, 2), (1, 3), (4, 6), (5, 7), (8, 10), (9, 11)],
        [(0, 4), (1, 5), (2, 6), (3, 7), (8, 12), (9, 13)],
        [(0, 8), (1, 9), (2, 10), (3, 11), (4, 12), (5, 13)],
        [(1, 2), (3, 12), (4, 8), (5, 10), (6, 9), (7, 11)],
        [(2, 8), (3, 9), (5, 12), (6, 10), (7, 13)],
        [(1, 2), (3, 5), (6, 8), (7, 12), (9, 10)],
        [(2, 4), (3, 6), (5, 8), (7, 9), (10, 12), (11, 13)],
        [(1, 2), (3, 4), (5, 6), (7, 8), (9, 10), (11, 12)],
    ],
    15: [
        [(0, 1), (2, 3), (4, 5), (6, 7), (8, 9), (10, 11), (12, 13)],
        [(0, 2), (1, 3), (4, 6), (5, 7), (8, 10), (9, 11), (12, 14)],
        [(0, 4), (1, 5), (2, 6), (3, 7), (8, 12), (9, 13), (10, 14)],
        [(0, 8), (1, 9), (2, 10), (3, 11), (4, 12), (5, 13), (6, 14)],
        [(1, 2), (3, 12), (4, 8), (5, 10), (6, 9), (7, 11), (13, 14)],
        [(2, 8), (3, 9), (5, 12), (6, 10), (7, 13)],
        [(1, 2), (3, 5), (6, 8), (7, 12), (9, 10), (13, 14)],
        [(2, 4), (3, 6), (5, 8), (7, 9), (10, 12), (11, 13)],
        [(1, 2), (3, 4), (5, 6), (7, 8), (9, 10), (11, 12), (13, 14)],
    ],
    16: [
        [(0, 1), (2, 3), (4, 5), (6, 7), (8, 9), (10, 11), (12, 13), (14, 15)],
        [(0, 2), (1, 3), (4, 6), (5, 7), (8, 10), (9, 11), (12, 14), (13, 15)],
        [(0, 4), (1, 5), (2, 6), (3, 7), (8, 12), (9, 13), (10, 14), (11, 15)],
        [(0, 8), (1, 9), (2, 10), (3, 11), (4, 12), (5, 13), (6, 14), (7, 15)],
        [(1, 2), (3, 12), (4, 8), (5, 10), (6, 9), (7, 11), (13, 14)],
        [(2, 8), (3, 9), (5, 12), (6, 10), (7, 13)],
        [(1, 2), (3, 5), (6, 8), (7, 12), (9, 10), (13, 14)],
        [(2, 4), (3, 6), (5, 8), (7, 9), (10, 12), (11, 13)],
        [(1, 2), (3, 4), (5, 6), (7, 8), (9, 10), (11, 12), (13, 14)],
    ],
}
