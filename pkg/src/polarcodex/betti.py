"""Graded Betti tables of squarefree ideals via three independent engines.

- betti_hochster sums reduced homology of induced subcomplexes of the
  Stanley-Reisner complex over vertex subsets W (one Betti entry per W and
  homology degree). Only subsets of the generator support are visited:
  any variable dividing no generator is a cone point of every induced
  subcomplex containing it, and cones are acyclic.
- betti_lcm walks the lcm lattice of the generators. The order complex of
  an open interval (bottom, m) is homotopy equivalent to the crosscut
  complex of its atoms (the generators dividing m), which is the union of
  one simplex per variable of m (the generators avoiding that variable);
  by the nerve lemma that union is in turn homotopy equivalent to its
  nerve, a complex on at most deg(m) vertices. The nerve is what gets fed
  to the homology kernel, which keeps 20-generator lattices tractable.
- betti_taylor computes homology of the Taylor complex tensored with the
  residue field, one squarefree multidegree strand at a time; only
  degree-preserving differential entries survive.

Tables are indexed for the ideal itself, not the quotient ring: the usual
convention shift is beta_{i,j}(S/I) = beta_{i-1,j}(I).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .codes import iter_submasks
from .errors import EngineMismatchError, FullCodeError, ZeroIdealError
from .homology import GF2, profile_from_face_masks
from .ideal import minimalize, polarize, polarized_ideal

HOCHSTER_MAX_SUPPORT = 12
LCM_MAX_GENERATORS = 20
TAYLOR_MAX_GENERATORS = 15


@dataclass(frozen=True)
class InvariantPair:
    pd: int
    reg: int


@dataclass(frozen=True)
class BettiTable:
    """Sparse map (homological degree, internal degree) -> count."""

    entries: dict
    method: str = ""

    @property
    def pd(self):
        return max((i for i, _ in self.entries), default=0)

    @property
    def reg(self):
        return max((j - i for i, j in self.entries), default=0)

    def invariants(self):
        return InvariantPair(self.pd, self.reg)

    @property
    def num_generators(self):
        return sum(c for (i, _), c in self.entries.items() if i == 0)

    def rows(self):
        """Entries as sorted [i, j, count] triples."""
        return [[i, j, self.entries[(i, j)]] for i, j in sorted(self.entries)]


def _require_nonzero(ideal):
    if ideal.is_zero:
        raise ZeroIdealError("the zero ideal has no Betti table")


def betti_hochster(ideal, fieldspec=GF2):
    """Betti table from homology of induced subcomplexes of the polar complex."""
    _require_nonzero(ideal)
    p = fieldspec.characteristic
    gen_masks = [g.vertex_mask for g in ideal.gens]
    support = ideal.support_mask
    faces = [
        sub
        for sub in iter_submasks(support)
        if not any(g & ~sub == 0 for g in gen_masks)
    ]
    entries = {}
    for wmask in iter_submasks(support):
        if wmask == 0:
            continue
        j = wmask.bit_count()
        local = [f for f in faces if f & ~wmask == 0]
        for d, dim in profile_from_face_masks(local, p).dims.items():
            i = j - d - 2
            if i < 0:
                raise AssertionError("top homology on a full-simplex subset")
            entries[(i, j)] = entries.get((i, j), 0) + dim
    return BettiTable(entries, "hochster")


def _closure_profile(facets, p):
    faces = set()
    for f in facets:
        for sub in iter_submasks(f):
            faces.add(sub)
    return profile_from_face_masks(faces, p)


def _maximal(masks):
    out = []
    for m in sorted(set(masks), key=lambda x: -x.bit_count()):
        if not any(m & ~k == 0 for k in out):
            out.append(m)
    return out


def betti_lcm(ideal, fieldspec=GF2):
    """Betti table from the lcm lattice of the minimal generators."""
    _require_nonzero(ideal)
    if len(ideal.gens) > LCM_MAX_GENERATORS:
        raise ValueError(f"lcm engine is capped at {LCM_MAX_GENERATORS} generators")
    p = fieldspec.characteristic
    gen_masks = [g.vertex_mask for g in ideal.gens]
    lattice = set(gen_masks)
    frontier = set(gen_masks)
    while frontier:
        new = set()
        for m in frontier:
            for g in gen_masks:
                joined = m | g
                if joined not in lattice:
                    lattice.add(joined)
                    new.add(joined)
        frontier = new
    entries = {}
    for m in lattice:
        j = m.bit_count()
        below = [g for g in gen_masks if g & ~m == 0]
        if below == [m]:
            # m is a minimal generator: the open interval below it is empty.
            entries[(0, j)] = entries.get((0, j), 0) + 1
            continue
        nerve_facets = _maximal(m & ~g for g in below)
        for d, dim in _closure_profile(nerve_facets, p).dims.items():
            key = (d + 1, j)
            entries[key] = entries.get(key, 0) + dim
    return BettiTable(entries, "lcm")


def betti_taylor(ideal, fieldspec=GF2):
    """Betti table from multidegree strands of the Taylor complex."""
    _require_nonzero(ideal)
    g = len(ideal.gens)
    if g > TAYLOR_MAX_GENERATORS:
        raise ValueError(f"taylor engine is capped at {TAYLOR_MAX_GENERATORS} generators")
    p = fieldspec.characteristic
    gen_masks = [m.vertex_mask for m in ideal.gens]
    lcm_of = [0] * (1 << g)
    strands = {}
    for subset in range(1, 1 << g):
        low = subset & -subset
        lcm_of[subset] = lcm_of[subset ^ low] | gen_masks[low.bit_length() - 1]
        strands.setdefault(lcm_of[subset], []).append(subset)
    entries = {}
    for u, subsets in strands.items():
        j = u.bit_count()
        top = max(s.bit_count() for s in subsets)
        by_dim = [[] for _ in range(top)]
        for s in subsets:
            by_dim[s.bit_count() - 1].append(s)
        for fs in by_dim:
            fs.sort()
        counts = [len(fs) for fs in by_dim]
        ranks = [0] + kernels.chain_ranks(by_dim, p)  # no augmentation
        for i in range(top):
            upper = ranks[i + 1] if i + 1 < top else 0
            h = counts[i] - ranks[i] - upper
            if h:
                entries[(i, j)] = entries.get((i, j), 0) + h
    return BettiTable(entries, "taylor")


_ENGINES = {
    "hochster": betti_hochster,
    "lcm": betti_lcm,
    "taylor": betti_taylor,
}


def applicable_engines(ideal):
    """Engines whose size preconditions the ideal satisfies."""
    out = ["hochster"]
    if len(ideal.gens) <= LCM_MAX_GENERATORS:
        out.append("lcm")
    if len(ideal.gens) <= TAYLOR_MAX_GENERATORS:
        out.append("taylor")
    return out


def table_from_ideal(ideal, fieldspec=GF2, method="auto"):
    """Dispatch a Betti computation; method may be an engine, auto, or cross."""
    _require_nonzero(ideal)
    if method == "auto":
        if ideal.support_mask.bit_count() <= HOCHSTER_MAX_SUPPORT:
            method = "hochster"
        elif len(ideal.gens) <= LCM_MAX_GENERATORS:
            method = "lcm"
        else:
            raise ValueError("no engine is applicable to an ideal this large")
    if method == "cross":
        tables = {name: _ENGINES[name](ideal, fieldspec) for name in applicable_engines(ideal)}
        baseline = tables["hochster"]
        for name, table in tables.items():
            if table.entries != baseline.entries:
                raise EngineMismatchError(
                    f"engines disagree: hochster={baseline.rows()} {name}={table.rows()}"
                )
        return BettiTable(baseline.entries, "cross")
    if method not in _ENGINES:
        raise ValueError(f"unknown method {method!r}")
    return _ENGINES[method](ideal, fieldspec)


def invariants(code, fieldspec=GF2, method="auto", cf_fn=None):
    """Betti table and (pd, reg) of the polarized ideal of a code.

    The full code has the zero ideal and is rejected; the empty code
    reports (0, 0) with an empty table. cf_fn is a test hook replacing the
    canonical-form computation.
    """
    if code.is_full:
        raise FullCodeError("the full code has the zero ideal; invariants undefined")
    if code.is_empty:
        return InvariantPair(0, 0), BettiTable({}, "degenerate")
    if cf_fn is None:
        ideal = polarized_ideal(code)
    else:
        ideal = minimalize([polarize(f) for f in cf_fn(code)], n=code.n)
    table = table_from_ideal(ideal, fieldspec, method)
    return table.invariants(), table
