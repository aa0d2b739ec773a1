"""Independent brute-force oracles used only by the tests.

These deliberately avoid the library's elimination code: determinants come
from cofactor expansion and invariant factors from gcds of k x k minors, so
they can arbitrate the Smith normal form implementations.
"""

from itertools import combinations
from math import gcd


def det_cofactor(m: list[list[int]]) -> int:
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    rest = m[1:]
    for c in range(n):
        if not m[0][c]:
            continue
        minor = [row[:c] + row[c + 1 :] for row in rest]
        term = m[0][c] * det_cofactor(minor)
        total += term if c % 2 == 0 else -term
    return total


def minor_gcd_invariant_factors(m: list[list[int]]) -> list[int]:
    """d_k = g_k / g_{k-1} where g_k is the gcd of all k x k minors."""
    nr = len(m)
    nc = len(m[0]) if nr else 0
    factors = []
    g_prev = 1
    for k in range(1, min(nr, nc) + 1):
        g_k = 0
        for rows in combinations(range(nr), k):
            for cols in combinations(range(nc), k):
                sub = [[m[r][c] for c in cols] for r in rows]
                g_k = gcd(g_k, det_cofactor(sub))
        if g_k == 0:
            break
        factors.append(g_k // g_prev)
        g_prev = g_k
    return factors
