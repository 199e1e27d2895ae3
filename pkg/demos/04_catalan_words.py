"""Why L counts something.

A 3-dimensional Catalan word projects to two Dyck paths, one from its x/y
letters and one from its y/z letters. L(D) is the number of Catalan words
whose two projections are both D.
"""

from math import comb

from dyckstat import oracle
from dyckstat.words import l_statistic

for d in oracle.enum_dyck(3):
    words = oracle.catalan_words_matching(d)
    print(f"{d}  L = {l_statistic(d)}  {', '.join(words)}")

for n in range(1, 6):
    total = sum(l_statistic(d) for d in oracle.enum_dyck(n))
    print(f"n={n}: sum of L = {total}, C(3n, n)/(2n+1) = {comb(3 * n, n) // (2 * n + 1)}")
