"""Weighted path sums against a permutation count.

Weighting each path by L(D) * 2^returns(D) and summing over semilength n
gives the number of 321-avoiding permutations of length 3n made of 3-cycles
only. Both sides are computed independently here.
"""

from dyckstat import counting, oracle

for n in (1, 2, 3):
    perms = oracle.enum_321_3cycle(3 * n)
    weighted = counting.weighted_sum_eq1(n)
    print(f"n={n}: permutations {perms}, weighted sum {weighted}")

print("(L, returns) histogram at n=4:", oracle.joint_histogram(4))
