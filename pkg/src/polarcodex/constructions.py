"""Explicit code families with known (pd, reg), and a realization dispatcher.

Coordinate layouts are fixed (first-m / next-t conventions) so every
constructor is deterministic; any relabeling gives the same invariants.
realize() re-derives the invariants of whatever it builds before returning
it, so drift between a formula and its implementation cannot go unnoticed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .betti import GF2, InvariantPair, invariants
from .codes import (
    NeuralCode,
    complement_code,
    free_extension,
    subcube,
    word_complement,
)
from .complexes import simplicial_code, stacked_sphere


@dataclass(frozen=True)
class RealizationRequest:
    n: int
    p: int
    r: int

    def __post_init__(self):
        if self.n < 1 or self.p < 0 or self.r < 0:
            raise ValueError("need n >= 1, p >= 0, r >= 0")


@dataclass(frozen=True)
class Realization:
    code: NeuralCode
    route: str
    pair: InvariantPair


def code_all_or_nothing(n):
    """{0^n, 1^n}; invariants (2n-3, 3)."""
    if n < 2:
        raise ValueError("all-or-nothing codes need n >= 2")
    return NeuralCode(n, (0, (1 << n) - 1))


def code_antipodal_pair(v):
    """{v, complement(v)}; same Betti table as the all-or-nothing code."""
    if v.n < 2:
        raise ValueError("antipodal pair codes need n >= 2")
    return NeuralCode(v.n, (v.bits, word_complement(v.n, v.bits)))


def code_minus_antipodal(v):
    """Complement of an antipodal pair; invariants (1, 2n-1)."""
    if v.n < 2:
        raise ValueError("need n >= 2")
    return complement_code(code_antipodal_pair(v))


def code_reg1(n, fix_one, fix_zero):
    """A subcube with t >= 1 pinned coordinates; invariants (t-1, 1)."""
    if fix_one | fix_zero == 0:
        raise ValueError("at least one coordinate must be pinned")
    return subcube(n, fix_one, fix_zero)


def code_pd0(n, sigma, tau):
    """Complement of a nonempty subcube; principal ideal; invariants (0, r)."""
    if sigma | tau == 0:
        raise ValueError("at least one coordinate must be pinned")
    return complement_code(subcube(n, sigma, tau))


def code_pd1(n, r):
    """A two-generator ideal realizing (1, r) for any r in [1, 2n-1]."""
    if n < 3:
        raise ValueError("need n >= 3")
    if not 1 <= r <= 2 * n - 1:
        raise ValueError(f"r must be in [1, {2 * n - 1}]")
    if r == 1:
        return subcube(n, fix_one=0b10, fix_zero=0b01)
    if r == 2:
        both = 0b110
        return NeuralCode(
            n, tuple(w for w in range(1 << n) if w & 1 == 0 and w & both != both)
        )
    m = (r + 1 + 1) // 2  # ceil((r + 1) / 2)
    d = r - m + 1
    dropped = {0, (1 << d) - 1}
    base = NeuralCode(m, tuple(w for w in range(1 << m) if w not in dropped))
    code = base
    for _ in range(n - m):
        code = free_extension(code)
    return code


def code_reg2(n, p):
    """First p coordinates zero and coordinates p+1, p+2 never both 1; (p, 2)."""
    if not 0 <= p <= n - 2:
        raise ValueError(f"p must be in [0, {n - 2}]")
    zeros = (1 << p) - 1
    both = 0b11 << p
    return NeuralCode(
        n, tuple(w for w in range(1 << n) if w & zeros == 0 and w & both != both)
    )


def code_reg3(n, p):
    """Tunable family along reg = 3, realizing every pd in [0, 2n-3]."""
    if n < 3:
        raise ValueError("need n >= 3")
    if not 0 <= p <= 2 * n - 3:
        raise ValueError(f"p must be in [0, {2 * n - 3}]")
    if p == 0:
        return code_pd0(n, sigma=0b111, tau=0)
    if p <= n - 1:
        m, t = 2, p - 1
    else:
        m, t = p - n + 3, 2 * n - 3 - p
    amask = (1 << m) - 1
    free = (1 << n) - 1 - ((1 << (m + t)) - 1)
    words = []
    for a in (0, amask):
        sub = free
        while True:
            words.append(a | sub)
            if sub == 0:
                break
            sub = (sub - 1) & free
    return NeuralCode(n, tuple(words))


def code_band(n, p, r):
    """Sphere-based code realizing (p, r) whenever r >= 4 and p + r <= n."""
    if r < 4 or p < 0 or p + r > n:
        raise ValueError("need r >= 4, p >= 0, and p + r <= n")
    m = p + r
    sphere = stacked_sphere(r - 2, m)
    code = simplicial_code(sphere)
    for _ in range(n - m):
        code = free_extension(code)
    return code


def realize(req, fieldspec=GF2):
    """Route a (n, p, r) request to a construction; None when not covered.

    The returned code's invariants are recomputed and must equal the
    request. Not covered means outside the constructive families, not
    necessarily unachievable.
    """
    n, p, r = req.n, req.p, req.r
    route = None
    code = None
    if r == 1 and p <= n - 1:
        route = "reg1"
        code = code_reg1(n, fix_one=0, fix_zero=(1 << (p + 1)) - 1)
    elif r == 2 and p <= n - 2:
        route = "reg2"
        code = code_reg2(n, p)
    elif r == 3 and n >= 3 and p <= 2 * n - 3:
        route = "reg3"
        code = code_reg3(n, p)
    elif p == 0 and 1 <= r <= n:
        route = "pd0"
        code = code_pd0(n, sigma=(1 << r) - 1, tau=0)
    elif p == 1 and n >= 3 and 1 <= r <= 2 * n - 1:
        route = "pd1"
        code = code_pd1(n, r)
    elif r >= 4 and p + r <= n:
        route = "band"
        code = code_band(n, p, r)
    else:
        return None
    pair, _ = invariants(code, fieldspec)
    if pair != InvariantPair(p, r):
        raise RuntimeError(
            f"construction {route} produced {pair} instead of ({p}, {r})"
        )
    return Realization(code, route, pair)
