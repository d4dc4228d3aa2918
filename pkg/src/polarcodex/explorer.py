"""Exhaustive (pd, reg) region enumeration and theorem verification.

Symmetry reduction uses the hyperoctahedral group (coordinate permutations
composed with per-coordinate bit flips), which preserves Betti tables. A
code is identified with the bitmask of its word set; the canonical orbit
representative is the element whose sorted word tuple is lexicographically
smallest, and the reduction is vectorized over all 2^(2^n) masks at once.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from multiprocessing import Pool

import numpy as np

from .betti import GF2, table_from_ideal
from .codes import (
    NeuralCode,
    bits_of,
    constant_extension,
    free_extension,
    hyperoctahedral_word_maps,
    word_complement,
)
from .complexes import induced, is_connected, stanley_reisner_complex
from .errors import EmptyCodeError
from .ideal import (
    canonical_form,
    iter_pseudomonomials,
    minimalize,
    pm_in_ideal,
    polarize,
)

MAX_REGION_NEURONS = 4
DEFAULT_VERIFY_SAMPLES = 500
DEFAULT_VERIFY_SEED = 42


@lru_cache(maxsize=None)
def orbit_reps(n):
    """Canonical orbit representatives of all nonempty proper codes on n neurons.

    Words in an orbit share their count, and among equal-size codes the
    sorted-word-tuple order coincides with comparing bit-reversed masks, so
    the representative of each orbit is the mask maximizing the reversal.
    """
    if not 1 <= n <= MAX_REGION_NEURONS:
        raise ValueError(f"orbit tabulation is capped at n={MAX_REGION_NEURONS}")
    nwords = 1 << n
    size = 1 << nwords
    masks = np.arange(size, dtype=np.uint32)
    rev = np.zeros(size, dtype=np.uint32)
    for i in range(nwords):
        rev |= ((masks >> np.uint32(i)) & 1) << np.uint32(nwords - 1 - i)
    best = np.zeros(size, dtype=np.uint32)
    for table in hyperoctahedral_word_maps(n):
        permuted = np.zeros(size, dtype=np.uint32)
        for w in range(nwords):
            permuted |= ((masks >> np.uint32(w)) & 1) << np.uint32(table[w])
        np.maximum(best, rev[permuted], out=best)
    reps = np.nonzero(rev == best)[0]
    return tuple(int(m) for m in reps if 0 < m < size - 1)


def code_from_mask(n, mask):
    return NeuralCode(n, tuple(bits_of(mask)))


def _cf_no_minimality(code):
    """Test mutant: canonical form without the divisibility-minimality filter."""
    if code.is_empty:
        raise EmptyCodeError("the empty code has the unit ideal")
    return [f for f in iter_pseudomonomials(code.n) if pm_in_ideal(f, code)]


_MUTANTS = {"skip_cf_minimality": _cf_no_minimality}


def _resolve_cf_fn(cf_fn):
    if cf_fn is not None:
        return cf_fn
    name = os.environ.get("POLAR_CODEX_TEST_MUTANT")
    if name:
        return _MUTANTS[name]
    return canonical_form


def _pipeline(code, fieldspec, cf_fn):
    """(polarized cf generators, minimalized ideal, Betti table)."""
    polgens = [polarize(f) for f in cf_fn(code)]
    ideal_ = minimalize(polgens, n=code.n)
    table = table_from_ideal(ideal_, fieldspec, "auto")
    return polgens, ideal_, table


@dataclass(frozen=True)
class RegionReport:
    n: int
    characteristic: int
    use_symmetry: bool
    pairs: tuple
    witnesses: dict
    codes_scanned: int
    orbits_scanned: int


def _region_chunk(args):
    n, characteristic, masks = args
    from .homology import FieldSpec

    fieldspec = FieldSpec(characteristic)
    out = []
    for mask in masks:
        code = code_from_mask(n, mask)
        _, _, table = _pipeline(code, fieldspec, canonical_form)
        out.append((mask, table.pd, table.reg))
    return out


def enumerate_region(n, fieldspec=GF2, use_symmetry=True, jobs=1):
    """All achievable (pd, reg) pairs over nonempty proper codes on n neurons.

    Witnesses are deterministic: per pair, a code of minimal size, ties
    broken by the sorted word tuple. Symmetric and non-symmetric runs give
    identical pairs and witnesses.
    """
    if not 1 <= n <= MAX_REGION_NEURONS:
        raise ValueError(
            f"exhaustive enumeration is capped at n={MAX_REGION_NEURONS}; "
            "sample codes explicitly beyond that"
        )
    total = (1 << (1 << n)) - 2
    if use_symmetry:
        masks = list(orbit_reps(n))
    else:
        masks = list(range(1, total + 1))
    jobs = max(1, jobs)
    if jobs == 1:
        results = _region_chunk((n, fieldspec.characteristic, masks))
    else:
        chunks = [
            (n, fieldspec.characteristic, masks[i::jobs * 4])
            for i in range(jobs * 4)
            if masks[i::jobs * 4]
        ]
        results = []
        with Pool(processes=jobs) as pool:
            for part in pool.imap_unordered(_region_chunk, chunks):
                results.extend(part)
    best = {}
    for mask, pd, reg in results:
        words = tuple(bits_of(mask))
        key = (len(words), words)
        pair = (pd, reg)
        if pair not in best or key < best[pair]:
            best[pair] = key
    witnesses = {pair: NeuralCode(n, words) for pair, (_, words) in best.items()}
    return RegionReport(
        n=n,
        characteristic=fieldspec.characteristic,
        use_symmetry=use_symmetry,
        pairs=tuple(sorted(best)),
        witnesses=witnesses,
        codes_scanned=total,
        orbits_scanned=len(masks),
    )


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    failures: int
    counterexample: NeuralCode | None
    detail: str


@dataclass(frozen=True)
class TheoremReport:
    n: int
    characteristic: int
    mode: str
    samples: int
    seed: int | None
    codes_checked: int
    checks: dict

    @property
    def all_passed(self):
        return all(c.passed for c in self.checks.values())


def _is_subcube(code):
    full = (1 << code.n) - 1
    ones = full
    zeros = full
    for w in code.words:
        ones &= w
        zeros &= ~w & full
    free = code.n - (ones | zeros).bit_count()
    return len(code) == 1 << free


def _missing_words(code):
    present = set(code.words)
    return [w for w in range(1 << code.n) if w not in present]


def _check_code(code, fieldspec, cf_fn):
    """Evaluate the whole theorem checklist on one code.

    Yields (check name, passed, detail). Shape statements (generated by
    variables, principal, two complementary generators) are read off the
    polarized canonical form, exactly as the classifications assert.
    """
    n = code.n
    full = (1 << n) - 1
    polgens, ideal_, table = _pipeline(code, fieldspec, cf_fn)
    pd, reg = table.pd, table.reg
    complex_ = stanley_reisner_complex(ideal_)

    gen_by_vars = bool(polgens) and all(g.degree == 1 for g in polgens)
    is_sub = _is_subcube(code)
    yield (
        "reg1_classification",
        ((reg == 1) == gen_by_vars) and (gen_by_vars == is_sub),
        f"reg={reg} generated_by_variables={gen_by_vars} subcube={is_sub}",
    )

    principal = len(polgens) == 1
    missing = _missing_words(code)
    comp_is_subcube = _is_subcube(NeuralCode(n, tuple(missing)))
    yield (
        "pd0_classification",
        ((pd == 0) == principal) and (principal == comp_is_subcube),
        f"pd={pd} principal={principal} co_subcube={comp_is_subcube}",
    )

    two_complementary = (
        len(polgens) == 2
        and all(g.degree == n and g.is_transversal for g in polgens)
        and polgens[0].xmask == polgens[1].ymask
        and polgens[0].ymask == polgens[1].xmask
    )
    minus_antipodal = len(missing) == 2 and missing[1] == word_complement(n, missing[0])
    maxreg = reg == 2 * n - 1
    ok = ((maxreg == two_complementary) and (two_complementary == minus_antipodal))
    if maxreg and pd != 1:
        ok = False
    yield (
        "maxreg_classification",
        ok,
        f"reg={reg} pd={pd} two_complementary={two_complementary} "
        f"minus_antipodal={minus_antipodal}",
    )

    yield ("pd_upper_bound", pd <= 2 * n - 3, f"pd={pd} bound={2 * n - 3}")
    yield ("reg_upper_bound", reg <= 2 * n - 1, f"reg={reg} bound={2 * n - 1}")

    # Localization needs every variable to be a vertex of the polar
    # complex, which pd = 2n-3 forces only for n >= 3: at n = 2 a single
    # codeword already has pd = 1 = 2n-3 with a purely linear resolution.
    ok = n < 3 or pd != 2 * n - 3 or (
        table.entries.get((2 * n - 3, 2 * n), 0) > 0 and reg >= 3
    )
    yield ("pdmax_localization", ok, f"pd={pd} entries={table.rows()}")

    ok = reg != 2 * n - 1 or table.entries.get((1, 2 * n), 0) > 0
    yield ("regmax_localization", ok, f"reg={reg} entries={table.rows()}")

    yield ("reg2_pd_bound", reg != 2 or pd <= n - 2, f"pd={pd} reg={reg}")

    vmask = complex_.vertex_mask
    nverts = vmask.bit_count()
    conn = is_connected(complex_)
    ok = conn
    verts = bits_of(vmask)
    for size in range(n + 1, nverts + 1):
        if not ok:
            break
        for combo in combinations(verts, size):
            wmask = 0
            for v in combo:
                wmask |= 1 << v
            if not is_connected(induced(complex_, wmask)):
                ok = False
                break
    yield ("connectivity", ok, f"connected={conn} vertices={nverts}")

    ok = nverts >= n and ((nverts == n) == (len(code) == 1))
    yield ("vertex_count", ok, f"vertices={nverts} words={len(code)}")

    if n + 1 <= 16:
        _, _, ext = _pipeline(free_extension(code), fieldspec, cf_fn)
        ok = ext.pd == pd and ext.reg == reg
        yield ("free_extension", ok, f"base=({pd},{reg}) ext=({ext.pd},{ext.reg})")

        ok = True
        pairs = []
        for bit in (0, 1):
            _, _, ext = _pipeline(constant_extension(code, bit), fieldspec, cf_fn)
            pairs.append((ext.pd, ext.reg))
            if ext.pd != pd + 1 or ext.reg != reg:
                ok = False
        yield ("constant_extension", ok, f"base=({pd},{reg}) ext={pairs}")


def verify_theorems(n, fieldspec=GF2, samples=DEFAULT_VERIFY_SAMPLES,
                    seed=DEFAULT_VERIFY_SEED, cf_fn=None):
    """Run the classification/bound checklist on every scanned code.

    n <= 3 scans every nonempty proper code; n = 4 scans a seeded sample of
    orbit representatives. Any violation is reported with a counterexample.
    """
    if not 2 <= n <= 4:
        raise ValueError("theorem verification supports 2 <= n <= 4")
    cf_fn = _resolve_cf_fn(cf_fn)
    if n <= 3:
        masks = range(1, (1 << (1 << n)) - 1)
        mode = "exhaustive"
        used_seed = None
    else:
        reps = list(orbit_reps(n))
        rng = random.Random(seed)
        masks = sorted(rng.sample(reps, min(samples, len(reps))))
        mode = "sampled"
        used_seed = seed
    results = {}
    count = 0
    for mask in masks:
        code = code_from_mask(n, mask)
        count += 1
        for name, passed, detail in _check_code(code, fieldspec, cf_fn):
            entry = results.get(name)
            if entry is None:
                entry = [True, 0, None, ""]
                results[name] = entry
            if not passed:
                entry[1] += 1
                if entry[0]:
                    entry[0] = False
                    entry[2] = code
                    entry[3] = detail
    checks = {
        name: CheckResult(name, passed, failures, example, detail)
        for name, (passed, failures, example, detail) in results.items()
    }
    return TheoremReport(
        n=n,
        characteristic=fieldspec.characteristic,
        mode=mode,
        samples=len(list(masks)) if n == 4 else 0,
        seed=used_seed,
        codes_checked=count,
        checks=checks,
    )
