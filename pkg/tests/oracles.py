"""Independent reference implementations used by several test modules."""

from fractions import Fraction
from itertools import combinations, permutations
from math import factorial, gcd

from tmconn.graph import Graph, is_connected


def brute_canonical(g):
    """Lexicographically smallest upper-triangle string over all n! relabellings."""
    best = None
    for perm in permutations(range(g.n)):
        inv = [0] * g.n
        for pos, v in enumerate(perm):
            inv[pos] = v
        key = tuple(int(g.has_edge(inv[i], inv[j])) for j in range(g.n) for i in range(j))
        if best is None or key < best:
            best = key
    return best


def brute_connected_classes(n):
    """Count isomorphism classes by marking whole orbits of labelled edge sets."""
    pairs = list(combinations(range(n), 2))
    index = {e: i for i, e in enumerate(pairs)}
    perms = list(permutations(range(n)))
    seen = bytearray(1 << len(pairs))
    count = 0
    for mask in range(1 << len(pairs)):
        if seen[mask]:
            continue
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        for p in perms:
            image = 0
            for u, v in edges:
                a, b = p[u], p[v]
                image |= 1 << index[(a, b) if a < b else (b, a)]
            seen[image] = 1
        if is_connected(Graph.from_edges(n, edges)):
            count += 1
    return count


def _cycle_types(n, largest=None):
    if largest is None:
        largest = n
    if n == 0:
        yield []
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _cycle_types(n - first, first):
            yield [first, *rest]


def polya_graph_count(n):
    """Unlabelled graphs on n vertices by Burnside over S_n acting on vertex pairs."""
    total = Fraction(0)
    for lam in _cycle_types(n):
        size = factorial(n)
        for k in set(lam):
            c = lam.count(k)
            size //= k**c * factorial(c)
        cycles = sum(k // 2 for k in lam)
        cycles += sum(gcd(a, b) for i, a in enumerate(lam) for b in lam[i + 1:])
        total += size * 2**cycles
    return total / factorial(n)


def connected_counts(nmax):
    """Inverse Euler transform of the all-graph counts."""
    a = [1] + [int(polya_graph_count(n)) for n in range(1, nmax + 1)]
    c = [0] * (nmax + 1)
    for n in range(1, nmax + 1):
        # n a_n = sum_{k=1}^{n} b_k a_{n-k},  b_k = sum_{d | k} d c_d
        b = [0] * (n + 1)
        for k in range(1, n):
            b[k] = sum(d * c[d] for d in range(1, k + 1) if k % d == 0)
        rest = sum(b[k] * a[n - k] for k in range(1, n))
        b_n = n * a[n] - rest
        c[n] = (b_n - sum(d * c[d] for d in range(1, n) if n % d == 0)) // n
    return c[1:]
