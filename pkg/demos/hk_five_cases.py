"""The five-case growth count of the lattice extensions H_k = Z^2 x| G_2.

The generator a acts on the lattice by the coordinate swap and b by
B_k = [[0,1],[-1,k]].  At a prime p the count m_p depends only on whether
p divides k - 2 or k + 2:

    p | k - 2             -> p^2 + p + 1   (quadratic: index-p submodule M_p)
    p | k + 2, p > 2      -> 2p + 1        (index-p submodule M_{p,-1})
    p coprime to both     -> p + 1         (no index-p submodule at all)

and at n = p^2 the count is p^2 when p is coprime to (k-2)(k+2), else 0.
H_2 is extremal: k - 2 = 0 is divisible by every prime, so every prime
takes the quadratic branch and the growth degree jumps from 1 to 2.
"""

from maxgrowth import GroupSpec, max_count_hk, mdeg

print(f"{'k':>4} | " + " ".join(f"{n:>6}" for n in (2, 3, 4, 5, 7, 9, 25, 49)))
print("-" * 64)
for k in range(-4, 7):
    row = [max_count_hk(k, n).count for n in (2, 3, 4, 5, 7, 9, 25, 49)]
    tag = "   <- quadratic growth" if k == 2 else ""
    print(f"{k:>4} | " + " ".join(f"{c:>6}" for c in row) + tag)

print("\ncase tags at p = 5:")
for k in (7, 3, 4):
    value = max_count_hk(k, 5)
    print(f"  k={k}: m_5(H_{k}) = {value.count:>3}  [{value.case_tag}]")

print("\ngrowth degrees (exact and sampled log-slope over primes <= 10^4):")
for k in (2, 3, -1):
    value = mdeg(GroupSpec("hk", k), 10_000)
    print(f"  mdeg(H_{k}) = {value.exact}   empirical slope {value.empirical_slope:.4f}")
