"""Shared helpers and independent oracles for the test suite."""

from __future__ import annotations

from itertools import combinations, permutations

import pytest

from polarcodex.codes import NeuralCode, bits_of


def all_codes(n, proper=True, nonempty=True):
    """Every code on n neurons as a NeuralCode, by word-set mask."""
    total = 1 << (1 << n)
    lo = 1 if nonempty else 0
    hi = total - 1 if proper else total
    for mask in range(lo, hi):
        yield NeuralCode(n, tuple(bits_of(mask)))


def code_of_mask(n, mask):
    return NeuralCode(n, tuple(bits_of(mask)))


def naive_det(rows, p):
    """Determinant mod p by permutation expansion; oracle for tiny matrices."""
    k = len(rows)
    total = 0
    for perm in permutations(range(k)):
        sign = 1
        seen = list(perm)
        for i in range(k):
            for j in range(i + 1, k):
                if seen[i] > seen[j]:
                    sign = -sign
        term = sign
        for i in range(k):
            term *= rows[i][perm[i]]
        total += term
    return total % p


def naive_rank(rows, p):
    """Largest k with a nonzero k x k minor; independent of elimination."""
    if not rows or not rows[0]:
        return 0
    nr, nc = len(rows), len(rows[0])
    for k in range(min(nr, nc), 0, -1):
        for rsel in combinations(range(nr), k):
            for csel in combinations(range(nc), k):
                sub = [[rows[i][j] % p for j in csel] for i in rsel]
                if naive_det(sub, p) != 0:
                    return k
    return 0


@pytest.fixture(scope="session")
def fixture_dir():
    import pathlib

    return pathlib.Path(__file__).parent / "fixtures"
