"""Neural ideal machinery: pseudo-monomials, canonical form, polarization.

Membership of a pseudo-monomial in the ideal of a code is pattern
avoidance: x_sigma * prod_{j in tau} (1 - x_j) lies in the ideal exactly
when no codeword is 1 on all of sigma and 0 on all of tau. The canonical
form is the set of divisibility-minimal members, enumerated degree by
degree over all 3^n disjoint (sigma, tau) pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from itertools import combinations

from .codes import bits_of, iter_submasks
from .errors import EmptyCodeError


class PMType(IntEnum):
    TYPE1 = 1  # pure x-part
    TYPE2 = 2  # mixed
    TYPE3 = 3  # pure (1-x)-part


@dataclass(frozen=True)
class PseudoMonomial:
    """x_sigma * prod_{j in tau} (1 - x_j), with sigma and tau disjoint."""

    n: int
    sigma: int
    tau: int

    def __post_init__(self):
        full = (1 << self.n) - 1
        if (self.sigma | self.tau) & ~full:
            raise ValueError("index sets exceed the neuron count")
        if self.sigma & self.tau:
            raise ValueError("sigma and tau must be disjoint")

    @property
    def degree(self):
        return (self.sigma | self.tau).bit_count()

    @property
    def sigma_indices(self):
        return tuple(i + 1 for i in bits_of(self.sigma))

    @property
    def tau_indices(self):
        return tuple(i + 1 for i in bits_of(self.tau))

    def divides(self, other):
        return self.sigma & ~other.sigma == 0 and self.tau & ~other.tau == 0

    def evaluate(self, word):
        """Value (0 or 1) at a word of the Boolean cube."""
        return int(word & self.sigma == self.sigma and word & self.tau == 0)

    def sort_key(self):
        return (self.degree, self.sigma_indices, self.tau_indices)


def classify_type(f):
    if f.degree == 0:
        raise ValueError("constant pseudo-monomials have no type")
    if f.tau == 0:
        return PMType.TYPE1
    if f.sigma == 0:
        return PMType.TYPE3
    return PMType.TYPE2


def char_pseudomonomial(v):
    """The degree-n pseudo-monomial that is 1 exactly at the word v."""
    full = (1 << v.n) - 1
    return PseudoMonomial(v.n, v.bits, full & ~v.bits)


def pm_in_ideal(f, code):
    """Membership via pattern avoidance over the codewords."""
    if f.n != code.n:
        raise ValueError("pseudo-monomial and code have different neuron counts")
    sigma, tau = f.sigma, f.tau
    for w in code.words:
        if w & sigma == sigma and w & tau == 0:
            return False
    return True


def iter_pseudomonomials(n, min_degree=1):
    """All disjoint (sigma, tau) pairs on [n], in increasing degree."""
    for degree in range(min_degree, n + 1):
        for support in combinations(range(n), degree):
            smask = 0
            for i in support:
                smask |= 1 << i
            for sigma in iter_submasks(smask):
                yield PseudoMonomial(n, sigma, smask & ~sigma)


@dataclass(frozen=True)
class CanonicalForm:
    """Divisibility-minimal pseudo-monomials of a code's ideal."""

    n: int
    elements: tuple

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def types(self):
        return tuple(classify_type(f) for f in self.elements)


def canonical_form(code):
    """Canonical form of the code's ideal, ordered by (degree, lex)."""
    if code.is_empty:
        raise EmptyCodeError("the empty code has the unit ideal")
    kept = []
    for f in iter_pseudomonomials(code.n):
        if any(g.divides(f) for g in kept):
            continue
        if pm_in_ideal(f, code):
            kept.append(f)
    kept.sort(key=PseudoMonomial.sort_key)
    return CanonicalForm(code.n, tuple(kept))


@dataclass(frozen=True)
class SquarefreeMonomial:
    """Squarefree monomial x_{xmask} y_{ymask} in 2n variables."""

    n: int
    xmask: int
    ymask: int

    def __post_init__(self):
        full = (1 << self.n) - 1
        if (self.xmask | self.ymask) & ~full:
            raise ValueError("variable indices exceed the neuron count")

    @property
    def degree(self):
        return self.xmask.bit_count() + self.ymask.bit_count()

    @property
    def is_transversal(self):
        return self.xmask & self.ymask == 0

    @property
    def vertex_mask(self):
        """Packed mask over the 2n ambient vertices (x_i at bit i-1, y_i at n+i-1)."""
        return self.xmask | (self.ymask << self.n)

    def divides(self, other):
        return (
            self.xmask & ~other.xmask == 0 and self.ymask & ~other.ymask == 0
        )

    def lcm(self, other):
        return SquarefreeMonomial(
            self.n, self.xmask | other.xmask, self.ymask | other.ymask
        )

    def sort_key(self):
        return (self.degree, tuple(bits_of(self.xmask)), tuple(bits_of(self.ymask)))

    def __str__(self):
        parts = [f"x{i + 1}" for i in bits_of(self.xmask)]
        parts += [f"y{i + 1}" for i in bits_of(self.ymask)]
        return "*".join(parts) if parts else "1"


def monomial_from_vertex_mask(n, mask):
    """Inverse of vertex_mask packing."""
    low = (1 << n) - 1
    return SquarefreeMonomial(n, mask & low, mask >> n)


def polarize(f):
    """Replace each factor (1 - x_j) by y_j."""
    return SquarefreeMonomial(f.n, f.sigma, f.tau)


@dataclass(frozen=True)
class SquarefreeIdeal:
    """Minimal monomial generators in 2n variables; empty gens = zero ideal."""

    n: int
    gens: tuple

    def __post_init__(self):
        for g in self.gens:
            if g.n != self.n:
                raise ValueError("generator has a different neuron count")
            if g.degree == 0:
                raise ValueError("the unit monomial cannot be a generator")
        ordered = tuple(sorted(set(self.gens), key=SquarefreeMonomial.sort_key))
        for a, b in combinations(ordered, 2):
            if a.divides(b) or b.divides(a):
                raise ValueError("generators must form an antichain under divisibility")
        object.__setattr__(self, "gens", ordered)

    @property
    def is_zero(self):
        return not self.gens

    @property
    def support_mask(self):
        """Union of the generators' vertex masks."""
        mask = 0
        for g in self.gens:
            mask |= g.vertex_mask
        return mask

    def generator_strings(self):
        return tuple(str(g) for g in self.gens)


def minimalize(gens, n=None):
    """Divisibility-minimal subset of a generator list, as an ideal."""
    gens = list(gens)
    if n is None:
        if not gens:
            raise ValueError("cannot infer the neuron count from an empty list")
        n = gens[0].n
    for g in gens:
        if g.degree == 0:
            raise ValueError("the unit monomial cannot be a generator")
    kept = []
    for g in sorted(set(gens), key=SquarefreeMonomial.sort_key):
        if not any(h.divides(g) for h in kept):
            kept.append(g)
    return SquarefreeIdeal(n, tuple(kept))


def polarized_ideal(code):
    """Polarization of the canonical form; generators form an antichain."""
    cf = canonical_form(code)
    gens = tuple(polarize(f) for f in cf)
    # CF minimality transfers through polarization, so no reduction needed.
    return SquarefreeIdeal(code.n, gens)
