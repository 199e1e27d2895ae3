"""Reference tables transcribed by hand, used as golden data.

Paths drawn as polylines are stored by their corner points and converted
with :func:`corners_to_word`, which avoids retyping long u/d strings.
"""

from __future__ import annotations

from .words import DyckWord


def corners_to_word(corners) -> DyckWord:
    """Dyck word of a polyline given by its (x, y) corner points."""
    steps = []
    for (x0, y0), (x1, y1) in zip(corners, corners[1:]):
        run = x1 - x0
        if abs(y1 - y0) != run:
            raise ValueError(f"segment {(x0, y0)} -> {(x1, y1)} is not diagonal")
        steps.append(("u" if y1 > y0 else "d") * run)
    return DyckWord("".join(steps))


# Dyck words of semilength 3: L value and the Catalan words with both
# projections equal to the path.
CATALAN_WORDS_N3 = [
    ("uuuddd", 1, ("xxxyyyzzz",)),
    ("uududd", 1, ("xxyxyzyzz",)),
    ("uuddud", 3, ("xxyyzzxyz", "xxyyzxzyz", "xxyyxzzyz")),
    ("uduudd", 3, ("xyzxxyyzz", "xyxzxyyzz", "xyxxzyyzz")),
    ("ududud", 4, ("xyzxyzxyz", "xyzxyxzyz", "xyxzyzxyz", "xyxzyxzyz")),
]

CATALAN_WORDS_N2 = ("xxyyzz", "xxyzyz", "xyxyzz", "xyxzyz", "xyzxyz")

EXAMPLE_PATH = corners_to_word(
    [(0, 0), (2, 2), (4, 0), (6, 2), (7, 1), (10, 4), (12, 2), (15, 5),
     (16, 4), (17, 5), (19, 3), (20, 4), (22, 2), (25, 5), (30, 0)]
)
EXAMPLE_ASC = (2, 4, 7, 10, 11, 12, 15)
EXAMPLE_DES = (2, 3, 5, 6, 8, 10, 15)
EXAMPLE_R = (0, 2, 0, 1, 0, 0, 2, 0, 0, 1, 2, 2, 0, 0)
EXAMPLE_S = (0, 2, 3, 0, 3, 1, 0, 1, 0, 3, 0, 0, 0, 0)
EXAMPLE_STAR_WORD = "h*uduuduh*ddhh"
EXAMPLE_L = 24

# The nine L = 1 paths of semilength 5: corners, r row, s row, star word.
L1_PATHS_N5 = [
    ([(0, 0), (5, 5), (10, 0)], (0, 0, 0, 0), (0, 0, 0, 0), "hhhh"),
    ([(0, 0), (4, 4), (5, 3), (6, 4), (10, 0)], (0, 0, 0, 1), (1, 0, 0, 0), "uhhd"),
    ([(0, 0), (4, 4), (6, 2), (7, 3), (10, 0)], (0, 0, 0, 2), (0, 1, 0, 0), "huhd"),
    ([(0, 0), (4, 4), (7, 1), (8, 2), (10, 0)], (0, 0, 0, 3), (0, 0, 1, 0), "hhud"),
    ([(0, 0), (3, 3), (4, 2), (6, 4), (10, 0)], (0, 0, 1, 0), (2, 0, 0, 0), "uhdh"),
    ([(0, 0), (3, 3), (5, 1), (7, 3), (10, 0)], (0, 0, 2, 0), (0, 2, 0, 0), "hudh"),
    ([(0, 0), (2, 2), (3, 1), (6, 4), (10, 0)], (0, 1, 0, 0), (3, 0, 0, 0), "udhh"),
    ([(0, 0), (3, 3), (4, 2), (5, 3), (6, 2), (7, 3), (10, 0)], (0, 0, 1, 1), (1, 1, 0, 0), "uudd"),
    ([(0, 0), (2, 2), (3, 1), (5, 3), (7, 1), (8, 2), (10, 0)], (0, 1, 0, 2), (2, 0, 1, 0), "udud"),
]

# The six L = 2 paths of semilength 6: Motzkin word, star word, Asc, Des,
# r row, s row, corners.
L2_PATHS_N6 = [
    ("hh", "u*hhd", (2, 5, 6), (1, 2, 6), (0, 1, 0, 0, 1), (3, 1, 0, 0, 0),
     [(0, 0), (2, 2), (3, 1), (6, 4), (7, 3), (8, 4), (12, 0)]),
    ("hh", "uh*hd", (3, 5, 6), (1, 3, 6), (0, 0, 1, 0, 2), (2, 0, 1, 0, 0),
     [(0, 0), (3, 3), (4, 2), (6, 4), (8, 2), (9, 3), (12, 0)]),
    ("hh", "uhh*d", (4, 5, 6), (1, 4, 6), (0, 0, 0, 1, 3), (1, 0, 0, 1, 0),
     [(0, 0), (4, 4), (5, 3), (6, 4), (9, 1), (10, 2), (12, 0)]),
    ("ud", "u*udd", (2, 4, 5, 6), (1, 2, 3, 6), (0, 1, 0, 1, 1), (2, 1, 1, 0, 0),
     [(0, 0), (2, 2), (3, 1), (5, 3), (6, 2), (7, 3), (8, 2), (9, 3), (12, 0)]),
    ("ud", "uu*dd", (3, 4, 5, 6), (1, 2, 3, 6), (0, 0, 1, 1, 1), (1, 1, 1, 0, 0),
     [(0, 0), (3, 3), (4, 2), (5, 3), (6, 2), (7, 3), (8, 2), (9, 3), (12, 0)]),
    ("ud", "uud*d", (3, 4, 5, 6), (1, 2, 4, 6), (0, 0, 1, 1, 2), (1, 1, 0, 1, 0),
     [(0, 0), (3, 3), (4, 2), (5, 3), (6, 2), (7, 3), (9, 1), (10, 2), (12, 0)]),
]

# One-return paths for r=3, s=4, n=24 built from M and P: (j, M-bar, x-bar,
# y-bar, star word).
ONE_RETURN_M = "uudhudd"
ONE_RETURN_P = "uhuhhdhhdudud"
ONE_RETURN_ROWS = [
    (1, "*uudhudd", 0, 0, "ududuhd" + "u*uud" + "uhhdhh" + "dhudd"),
    (2, "u*udhudd", 1, 0, "ududuhd" + "uu*udhud" + "uhhdhh" + "dd"),
    (3, "uu*dhudd", 2, 0, "ududuhd" + "uuu*dhudd" + "uhhdhh" + "d"),
    (4, "uud*hudd", 2, 1, "u" + "ududuhd" + "uud*hudd" + "uhhdhh" + "d"),
    (5, "uudh*udd", 2, 1, "u" + "ududuhd" + "uudh*udd" + "uhhdhh" + "d"),
    (6, "uudhu*dd", 3, 1, "u" + "ududuhd" + "uudhu*ddd" + "uhhdhh"),
    (7, "uudhud*d", 3, 2, "uu" + "ududuhd" + "udhud*dd" + "uhhdhh"),
    (8, "uudhudd*", 3, 3, "uudhu" + "ududuhd" + "udd*d" + "uhhdhh"),
]

# |D_n^k| for n = k, k+1, ... (k = 6 starts at n = 6).
L_TABLE = {
    1: (1, 1, 2, 4, 9, 21, 51, 127, 323),
    2: (1, 0, 1, 2, 6, 16, 45, 126, 357),
    3: (2, 2, 4, 10, 26, 70, 192, 534),
    4: (2, 5, 9, 25, 65, 181, 505, 1434),
    5: (2, 6, 14, 36, 96, 262, 726, 2034),
    6: (14, 34, 92, 252, 710, 2026, 5844),
    7: (2, 10, 32, 94, 272, 784, 2260, 6524),
}

# |D_n^6| and its mixed {2, 3} part for n = 4..12.
L6_TOTALS = (3, 6, 14, 34, 92, 252, 710, 2026, 5844)
L6_MIXED = (2, 4, 8, 16, 44, 122, 352, 1028, 3036)
