"""Closed forms for the maximal subgroup growth of G_k and H_k.

m_n(G_k) is 2^k - 1 at n = 2, 1 + (k-1)n at odd primes n, and 0 at every
other index (including n = 1; no maximal subgroup has index 1).  m_n(H_k)
has five cases driven by the prime support of k - 2 and k + 2, with
divisibility by 0 counting as true (every prime divides 0, so H_2 gets the
quadratic branch at every prime).  The growth degree helper reports the
exact limsup exponent together with an empirical log-slope sampled from
the closed forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import (
    GroupSpec,
    classify_index,
    least_symdiff_prime,
    primes_dividing,
)

# case tags, serialized verbatim by the CLI
GK_CASE_ONE = "one"
GK_CASE_TWO = "two"
GK_CASE_ODD_PRIME = "odd_prime"
GK_CASE_NOT_PRIME = "not_prime"
HK_CASE_ONE = "one"
HK_CASE_P_DIVIDES_K_MINUS_2 = "p_divides_k_minus_2"
HK_CASE_P_DIVIDES_K_PLUS_2 = "p_divides_k_plus_2"
HK_CASE_P_COPRIME = "p_coprime"
HK_CASE_P_SQUARE_COPRIME = "p_square_coprime"
HK_CASE_OTHERWISE = "otherwise"


@dataclass(frozen=True)
class GrowthValue:
    """A single entry m_n together with the branch that produced it."""

    n: int
    count: int
    case_tag: str


@dataclass(frozen=True)
class MdegValue:
    """Exact degree of polynomial maximal subgroup growth plus a sampled
    log-slope (max of log m_n / log n over the upper half of the range)."""

    exact: int
    empirical_slope: float


@dataclass(frozen=True)
class Certificate:
    """Witness that H_i and H_j are non-isomorphic: a prime p in the
    symmetric difference of the prime supports of i -+ 2 and j -+ 2, where
    the two groups have different numbers of maximal subgroups of index p."""

    i: int
    j: int
    p: int
    side: str  # "minus" if p distinguishes k - 2, "plus" for k + 2
    count_i: int
    count_j: int


def max_count_gk(k: int, n: int) -> GrowthValue:
    """Number of maximal subgroups of G_k of index n."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return GrowthValue(n, 0, GK_CASE_ONE)
    cls = classify_index(n)
    if cls.kind != "prime":
        return GrowthValue(n, 0, GK_CASE_NOT_PRIME)
    if n == 2:
        return GrowthValue(n, 2 ** k - 1, GK_CASE_TWO)
    return GrowthValue(n, 1 + (k - 1) * n, GK_CASE_ODD_PRIME)


def max_count_hk(k: int, n: int) -> GrowthValue:
    """Number of maximal subgroups of H_k of index n.

    The cases are tested in order; 0 % p == 0 makes divisibility by zero
    always true, and p = 2 with 2 | k + 2 lands in the first case because
    then k is even and 2 | k - 2 as well (M_2 = M_{2,-1}).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return GrowthValue(n, 0, HK_CASE_ONE)
    cls = classify_index(n)
    if cls.kind == "prime":
        p = n
        if (k - 2) % p == 0:
            return GrowthValue(n, n * n + n + 1, HK_CASE_P_DIVIDES_K_MINUS_2)
        if (k + 2) % p == 0 and p > 2:
            return GrowthValue(n, 2 * n + 1, HK_CASE_P_DIVIDES_K_PLUS_2)
        # remaining primes are coprime to (k-2)(k+2): p = 2 with 2 | k + 2
        # would imply 2 | k - 2 and was caught above
        return GrowthValue(n, n + 1, HK_CASE_P_COPRIME)
    if cls.kind == "prime_square":
        p = cls.p
        if ((k - 2) * (k + 2)) % p != 0:
            return GrowthValue(n, n, HK_CASE_P_SQUARE_COPRIME)
        return GrowthValue(n, 0, HK_CASE_OTHERWISE)
    return GrowthValue(n, 0, HK_CASE_OTHERWISE)


def _exact_mdeg(spec: GroupSpec) -> int:
    if spec.family == "gk":
        # m_p(G_1) = 1, so G_1 has degree 0; the linear term wins for k >= 2
        return 0 if spec.k == 1 else 1
    return 2 if spec.k == 2 else 1


def mdeg(spec: GroupSpec, sample_limit: int) -> MdegValue:
    """Exact growth degree plus the sampled slope max(log m_n / log n).

    The sample window is the upper half of the range, n in
    (sample_limit/2, sample_limit]: the limsup ignores small-n transients
    such as the finitely many primes dividing (k-2)(k+2), and so must the
    estimate.
    """
    if sample_limit < 100:
        raise ValueError(f"sample_limit must be >= 100, got {sample_limit}")
    counter = max_count_gk if spec.family == "gk" else max_count_hk
    slope = 0.0
    for n in range(sample_limit // 2 + 1, sample_limit + 1):
        count = counter(spec.k, n).count
        if count > 1:
            slope = max(slope, math.log(count) / math.log(n))
    return MdegValue(exact=_exact_mdeg(spec), empirical_slope=slope)


def noniso_certificate(i: int, j: int) -> Certificate | None:
    """A non-isomorphism witness for (H_i, H_j), or None.

    Returns the least prime in the symmetric difference of the prime
    supports of i - 2 vs j - 2 or of i + 2 vs j + 2 (the minus side wins
    ties), together with the two differing index-p counts.
    """
    minus = least_symdiff_prime(primes_dividing(i - 2), primes_dividing(j - 2))
    plus = least_symdiff_prime(primes_dividing(i + 2), primes_dividing(j + 2))
    if minus is None and plus is None:
        return None
    if plus is None or (minus is not None and minus <= plus):
        p, side = minus, "minus"
    else:
        p, side = plus, "plus"
    count_i = max_count_hk(i, p).count
    count_j = max_count_hk(j, p).count
    if count_i == count_j:  # cannot happen: a one-sided divisor splits the cases
        raise RuntimeError(f"witness {p} does not separate H_{i} and H_{j}")
    return Certificate(i=i, j=j, p=p, side=side, count_i=count_i, count_j=count_j)
