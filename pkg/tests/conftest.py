"""Shared fixtures and independent brute-force oracles.

The session-scoped fixtures cache the expensive rainbow-free enumerations so
the property suites and the acceptance suite traverse each search space once.
The brute-force helpers deliberately avoid the package's triple index and
solution tables: they are the independent cross-check for the search kernel.
"""
from __future__ import annotations

import pytest

from rainbow_lab import CyclicInstance, SearchConfig
from rainbow_lab.modcore import prime_factorize
from rainbow_lab.search import iter_rainbow_free_colorings

# (n, p) pairs for the prime-coefficient palette/projection suites: n = q*t
# with some prime q != p dividing n, n <= 21.
KP_PAIRS = sorted(
    (n, p)
    for p in (2, 3, 5)
    for n in range(4, 22)
    if any(q != p for q, _ in prime_factorize(n))
)


def canonical_colorings(n, num_colors=None):
    """Every canonical (restricted-growth) coloring of n positions.

    Independent of the package's search; plain recursive set-partition
    enumeration, optionally filtered to an exact color count.
    """
    out = []

    def rec(pos, used, cur):
        if pos == n:
            if num_colors is None or used == num_colors:
                out.append(tuple(cur))
            return
        for col in range(min(used + 1, n)):
            cur.append(col)
            rec(pos + 1, max(used, col + 1), cur)
            cur.pop()

    rec(0, 0, [])
    return out


def brute_rainbow_free(colors, n, k):
    """Rainbow-freeness by three nested loops; no shared code with the kernel."""
    for x1 in range(n):
        for x2 in range(n):
            for x3 in range(n):
                if (x1 + x2 - k * x3) % n == 0:
                    a, b, c = colors[x1], colors[x2], colors[x3]
                    if a != b and a != c and b != c:
                        return False
    return True


def has_singleton_class(coloring):
    sizes = [len(xs) for xs in coloring.color_classes().values()]
    return min(sizes) == 1


@pytest.fixture(scope="session")
def rf_k1_by_n():
    """All canonical rainbow-free colorings with >= 3 colors, k=1, n <= 24."""
    cfg = SearchConfig(time_budget=600.0)
    return {
        n: list(iter_rainbow_free_colorings(CyclicInstance(n, 1), min_r=3, cfg=cfg))
        for n in range(2, 25)
    }


@pytest.fixture(scope="session")
def rf_kp_by_np():
    """All canonical rainbow-free colorings with >= 3 colors for k=p prime,
    over the moduli n <= 21 that have a prime factor q != p."""
    cfg = SearchConfig(time_budget=600.0)
    return {
        (n, p): list(
            iter_rainbow_free_colorings(CyclicInstance(n, p), min_r=3, cfg=cfg)
        )
        for n, p in KP_PAIRS
    }


@pytest.fixture(scope="session")
def rf_small_all_k():
    """All canonical rainbow-free colorings with >= 3 colors for every k,
    n <= 12. Colorings with <= 2 colors are rainbow-free by definition and
    are covered by direct arguments in the tests that need them."""
    cfg = SearchConfig(time_budget=600.0)
    return {
        (n, k): list(
            iter_rainbow_free_colorings(CyclicInstance(n, k), min_r=3, cfg=cfg)
        )
        for n in range(2, 13)
        for k in range(n)
    }
