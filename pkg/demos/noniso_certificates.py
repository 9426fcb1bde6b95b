"""Telling the groups H_i apart by their growth counts.

If the prime supports pi(i - 2) and pi(j - 2) differ, or pi(i + 2) and
pi(j + 2) do, then some prime p gives m_p(H_i) != m_p(H_j), and the two
groups cannot be isomorphic.  pi(0) is the set of all primes, so H_2 is
distinguished from every other member.  The certificate below reports the
least such witness prime and both counts.
"""

from maxgrowth import noniso_certificate, primes_dividing

ks = range(-3, 6)

print("prime supports:")
for k in ks:
    minus = primes_dividing(k - 2)
    plus = primes_dividing(k + 2)
    fmt = lambda s: "ALL" if s.is_all_primes else "{" + ",".join(map(str, s.primes)) + "}"
    print(f"  k={k:>3}:  pi(k-2) = {fmt(minus):<10} pi(k+2) = {fmt(plus)}")

print("\nwitness primes (row i vs column j, '.' = no certificate):")
print(f"{'':>5}" + "".join(f"{j:>5}" for j in ks))
for i in ks:
    cells = []
    for j in ks:
        cert = noniso_certificate(i, j)
        cells.append("." if cert is None else str(cert.p))
    print(f"{i:>5}" + "".join(f"{c:>5}" for c in cells))

print("\na few certificates in full:")
for i, j in [(2, 3), (1, 5), (0, 4), (-3, 5)]:
    cert = noniso_certificate(i, j)
    print(f"  H_{i} vs H_{j}: p={cert.p} ({cert.side} side), "
          f"m_p = {cert.count_i} vs {cert.count_j}")
