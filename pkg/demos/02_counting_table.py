"""Counting paths by L three ways.

For each k with a closed form, print |D_n^k| from the formula, from a
generating function where one exists, and from brute force.
"""

from dyckstat import counting, oracle, series

N = 11
hist = {n: oracle.l_histogram(n) for n in range(1, N + 1)}
gfs = {2: series.gf_L2(N), 3: series.gf_Lp(3, N), 5: series.gf_Lp(5, N), 7: series.gf_Lp(7, N)}

for k in (1, 2, 3, 4, 5, 6, 7):
    closed = [counting.count_Lk(n, k) for n in range(1, N + 1)]
    brute = [hist[n].get(k, 0) for n in range(1, N + 1)]
    line = f"L={k}: {closed}"
    if k in gfs:
        assert list(gfs[k])[1:] == closed
        line += "  gf ok"
    assert closed == brute
    print(line + "  brute force ok")

# Single-star counts depend only on r + s.
print("|D_10^{1,3}| =", counting.count_rs(10, 1, 3), " |D_10^{2,2}| =", counting.count_rs(10, 2, 2))

parts = counting.count_L6_parts(10)
print(f"L=6 at n=10: 2*{parts.rs_1_5} + {parts.rs_2_2} + {parts.mixed} (mixed, brute force) = {parts.total}")
