"""Building paths with a prescribed L from Motzkin data, and back.

A ballot path P is cut into two pieces that flank a single star, giving a
two-return path whose only star column is (r, s). Adding a Motzkin word M
and a slot j gives the one-return paths. The L = 4 two-star paths come in
four families with their own parameters.
"""

from dyckstat import bijections as bj
from dyckstat.words import l_statistic, returns

P, r, s = "uhuhhdhhdudud", 3, 4
pair = bj.split_ballot(P, r, s)
print(f"P = {P} splits into P_r = {pair.p_r}, P_s = {pair.p_s}")

d = bj.rs_two_returns_forward(P, r, s)
print(f"two-return path {d}: L = {l_statistic(d)}, returns = {returns(d)}")
print("inverse gives", bj.rs_two_returns_inverse(d))

M = "uudhudd"
for j in range(1, len(M) + 2):
    d = bj.rs_one_return_forward(M, P, j, r, s)
    back = bj.rs_one_return_inverse(d)
    assert (back[0].steps, back[1].steps, back[2]) == (M, P, j)
    print(f"j={j}: {bj.to_star_word(d)}  returns={returns(d)}")

print()
for label, d in [
    ("type 1", bj.l4_type1_forward("hudh", 2, 5)),
    ("type 2", bj.l4_type2_forward("huudhd")),
    ("type 3", bj.l4_type3_forward("ud", "hh", 1)),
    ("type 4", bj.l4_type4_forward("ud", "hh", 1)),
]:
    print(f"L=4 {label}: {bj.to_star_word(d)}  L = {l_statistic(d)}  classified as type {bj.l4_type(d)}")
