"""Neural codes on up to 16 neurons, stored as bitmask word sets.

A word is an int whose bit i-1 is coordinate i, so the string "011" (which
reads coordinate-by-coordinate) is the int 0b110. Codes keep their words
sorted and deduplicated, making equality structural.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .errors import EmptyCodeError

MAX_NEURONS = 16
MAX_ORBIT_NEURONS = 5


def _check_n(n):
    if not 1 <= n <= MAX_NEURONS:
        raise ValueError(f"neuron count must be in [1, {MAX_NEURONS}], got {n}")


def _check_word(n, w):
    if not 0 <= w < (1 << n):
        raise ValueError(f"word {w} does not fit in {n} bits")


def iter_submasks(mask):
    """All submasks of mask, descending, ending with 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def bits_of(mask):
    """Set bit positions of mask, ascending."""
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


@dataclass(frozen=True, order=True)
class Codeword:
    """A single word: n coordinates packed into a bitmask."""

    n: int
    bits: int

    def __post_init__(self):
        _check_n(self.n)
        _check_word(self.n, self.bits)

    @classmethod
    def from_string(cls, text):
        word = 0
        for i, ch in enumerate(text):
            if ch == "1":
                word |= 1 << i
            elif ch != "0":
                raise ValueError(f"invalid codeword character {ch!r} in {text!r}")
        return cls(len(text), word)

    def support(self):
        """1-based coordinates equal to 1."""
        return tuple(i + 1 for i in bits_of(self.bits))

    def to_string(self):
        return "".join("1" if self.bits >> i & 1 else "0" for i in range(self.n))


@dataclass(frozen=True)
class NeuralCode:
    """A set of words sharing one neuron count."""

    n: int
    words: tuple

    def __post_init__(self):
        _check_n(self.n)
        norm = tuple(sorted(set(self.words)))
        for w in norm:
            _check_word(self.n, w)
        object.__setattr__(self, "words", norm)

    @classmethod
    def from_strings(cls, lines):
        lines = list(lines)
        if not lines:
            raise ValueError("cannot infer neuron count from an empty word list")
        widths = {len(s) for s in lines}
        if len(widths) != 1:
            raise ValueError(f"codewords have mixed lengths {sorted(widths)}")
        n = widths.pop()
        return cls(n, tuple(Codeword.from_string(s).bits for s in lines))

    def __len__(self):
        return len(self.words)

    def __contains__(self, word):
        return word in self.words

    def __iter__(self):
        return iter(self.words)

    @property
    def is_empty(self):
        return not self.words

    @property
    def is_full(self):
        return len(self.words) == 1 << self.n

    def to_strings(self):
        return tuple(Codeword(self.n, w).to_string() for w in self.words)

    def codewords(self):
        return tuple(Codeword(self.n, w) for w in self.words)


def word_complement(n, word):
    return ~word & ((1 << n) - 1)


def complement_word(v):
    """Bitwise complement of a word within its n coordinates."""
    return Codeword(v.n, word_complement(v.n, v.bits))


def free_extension(code):
    """Duplicate every word with new last coordinate 0 and 1."""
    if code.is_empty:
        raise EmptyCodeError("free extension of the empty code is not defined")
    _check_n(code.n + 1)
    top = 1 << code.n
    return NeuralCode(code.n + 1, tuple(w | b for w in code.words for b in (0, top)))


def constant_extension(code, bit):
    """Append a new coordinate pinned to bit on every word."""
    if code.is_empty:
        raise EmptyCodeError("constant extension of the empty code is not defined")
    if bit not in (0, 1):
        raise ValueError("bit must be 0 or 1")
    _check_n(code.n + 1)
    top = bit << code.n
    return NeuralCode(code.n + 1, tuple(w | top for w in code.words))


def subcube(n, fix_one, fix_zero):
    """Words with coordinates in fix_one pinned to 1 and fix_zero to 0."""
    _check_n(n)
    full = (1 << n) - 1
    if fix_one & fix_zero:
        raise ValueError("fix_one and fix_zero overlap")
    if (fix_one | fix_zero) & ~full:
        raise ValueError("fixed coordinates outside [n]")
    free = full & ~(fix_one | fix_zero)
    return NeuralCode(n, tuple(fix_one | sub for sub in iter_submasks(free)))


def complement_code(code):
    """All words of the ambient cube not in the code."""
    present = set(code.words)
    return NeuralCode(code.n, tuple(w for w in range(1 << code.n) if w not in present))


def is_nondegenerate(code):
    """True iff every coordinate takes both values across the code."""
    if code.is_empty:
        raise EmptyCodeError("nondegeneracy is undefined for the empty code")
    full = (1 << code.n) - 1
    ones = full
    zeros = full
    for w in code.words:
        ones &= w
        zeros &= ~w & full
    return not (ones | zeros)


@lru_cache(maxsize=None)
def hyperoctahedral_word_maps(n):
    """Word permutation tables for all coordinate permutations x bit flips.

    Each table maps word -> image word; the group has order n! * 2^n. Both
    operations relabel the polynomial variables of the polarized ideal
    (permutations permute index pairs, flips swap the two variables of an
    index), so every table preserves the graded Betti table.
    """
    _check_n(n)
    size = 1 << n
    tables = []
    for perm in permutations(range(n)):
        for flips in range(size):
            table = []
            for w in range(size):
                v = w ^ flips
                r = 0
                for i in range(n):
                    if v >> i & 1:
                        r |= 1 << perm[i]
                table.append(r)
            tables.append(tuple(table))
    return tuple(tables)


def apply_word_map(code, table):
    """Image of a code under one word permutation table."""
    return NeuralCode(code.n, tuple(table[w] for w in code.words))


def canonical_orbit_rep(code):
    """Lexicographically smallest code in the hyperoctahedral orbit.

    Codes are compared by their sorted word tuples. Idempotent and constant
    on orbits; capped at n=5 since the group has n! * 2^n elements.
    """
    if code.n > MAX_ORBIT_NEURONS:
        raise ValueError(f"orbit canonicalization is capped at n={MAX_ORBIT_NEURONS}")
    best = code.words
    for table in hyperoctahedral_word_maps(code.n):
        candidate = tuple(sorted(table[w] for w in code.words))
        if candidate < best:
            best = candidate
    return NeuralCode(code.n, best)
