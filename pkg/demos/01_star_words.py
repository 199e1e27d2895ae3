"""Reading L off a Dyck path.

Walks through a 15-step example: its ascent and descent sequences, the r-s
array, the product of binomials, and the compact star word that records
which columns contribute.
"""

from dyckstat import figures
from dyckstat.bijections import from_star_word, to_star_word
from dyckstat.words import asc_desc, l_statistic, returns, rs_array, star_context

d = figures.EXAMPLE_PATH
print("path       ", d)
asc, des = asc_desc(d)
print("ascents    ", asc)
print("descents   ", des)

r, s = rs_array(d)
print("r row      ", r)
print("s row      ", s)
print("L(D)       ", l_statistic(d), "(only columns with r and s both nonzero matter)")
print("returns    ", returns(d))

star = to_star_word(d)
print("star word  ", star)
for st in star_context(star):
    print(f"  star at {st.position}: {st.ups} ups and {st.downs} downs before it")

# The star word loses nothing.
assert from_star_word(star) == d
print("decoded back to the same path")
