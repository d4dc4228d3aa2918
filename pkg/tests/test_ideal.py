"""Canonical form, membership, polarization, and minimal generator properties."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polarcodex.codes import Codeword, NeuralCode
from polarcodex.errors import EmptyCodeError
from polarcodex.ideal import (
    PMType,
    PseudoMonomial,
    SquarefreeMonomial,
    canonical_form,
    char_pseudomonomial,
    classify_type,
    iter_pseudomonomials,
    minimalize,
    pm_in_ideal,
    polarize,
    polarized_ideal,
)

from conftest import all_codes


def code(*strings):
    return NeuralCode.from_strings(strings)


def pm(n, sigma=(), tau=()):
    smask = sum(1 << (i - 1) for i in sigma)
    tmask = sum(1 << (i - 1) for i in tau)
    return PseudoMonomial(n, smask, tmask)


def test_char_pseudomonomial():
    f = char_pseudomonomial(Codeword.from_string("101"))
    assert f.sigma_indices == (1, 3) and f.tau_indices == (2,)
    f = char_pseudomonomial(Codeword.from_string("00"))
    assert f.sigma_indices == () and f.tau_indices == (1, 2)


def test_char_pseudomonomial_is_indicator():
    for v in range(8):
        f = char_pseudomonomial(Codeword(3, v))
        for w in range(8):
            assert f.evaluate(w) == (1 if v == w else 0)


def test_pm_in_ideal_examples():
    aon = code("000", "111")
    assert pm_in_ideal(pm(3, sigma=(1,), tau=(2,)), aon)
    assert not pm_in_ideal(pm(3, sigma=(1,)), aon)
    with pytest.raises(ValueError):
        pm_in_ideal(pm(2, sigma=(1,)), aon)


def test_pm_in_ideal_matches_vanishing_oracle_n3():
    # Membership of a pseudo-monomial equals vanishing at every codeword.
    for c in all_codes(3):
        for f in iter_pseudomonomials(3):
            vanishes = all(f.evaluate(w) == 0 for w in c.words)
            assert pm_in_ideal(f, c) == vanishes


def test_canonical_form_full_cube_is_empty():
    assert len(canonical_form(NeuralCode(3, tuple(range(8))))) == 0


def test_canonical_form_rejects_empty_code():
    with pytest.raises(EmptyCodeError):
        canonical_form(NeuralCode(3, ()))


def test_canonical_form_all_or_nothing():
    cf = canonical_form(code("000", "111"))
    assert len(cf) == 6
    assert all(t == PMType.TYPE2 for t in cf.types())
    assert {(f.sigma_indices, f.tau_indices) for f in cf} == {
        ((i,), (j,)) for i in (1, 2, 3) for j in (1, 2, 3) if i != j
    }


def test_canonical_form_single_zero_word():
    cf = canonical_form(code("000"))
    assert {(f.sigma_indices, f.tau_indices) for f in cf} == {
        ((1,), ()),
        ((2,), ()),
        ((3,), ()),
    }


def test_canonical_form_minus_antipodal():
    for v in range(8):
        c = NeuralCode(3, tuple(w for w in range(8) if w not in (v, 7 ^ v)))
        cf = canonical_form(c)
        assert len(cf) == 2
        assert {f.sigma for f in cf} == {v, 7 ^ v}
        assert all(f.degree == 3 for f in cf)


def test_cf_minimality_and_generation_exhaustive_small_n():
    for n in (1, 2, 3):
        full = (1 << n) - 1
        for c in all_codes(n):
            cf = canonical_form(c)
            members = set()
            for f in cf:
                assert pm_in_ideal(f, c)
                # every proper divisor must fall outside the ideal
                for g in iter_pseudomonomials(n):
                    if g != f and g.divides(f):
                        assert not pm_in_ideal(g, c), (c.to_strings(), f, g)
                members.add((f.sigma, f.tau))
            # every characteristic pseudo-monomial of a missing word is divisible
            # by a canonical form element
            for w in range(1 << n):
                if w in c.words:
                    continue
                rho = PseudoMonomial(n, w, full & ~w)
                assert any(f.divides(rho) for f in cf)


def test_cf_ordering_is_degree_then_lex():
    for c in all_codes(3):
        keys = [f.sort_key() for f in canonical_form(c)]
        assert keys == sorted(keys)


def test_classify_type():
    assert classify_type(pm(3, sigma=(1, 2))) == PMType.TYPE1
    assert classify_type(pm(3, sigma=(1,), tau=(2,))) == PMType.TYPE2
    assert classify_type(pm(3, tau=(1, 2))) == PMType.TYPE3
    with pytest.raises(ValueError):
        classify_type(pm(3))


def test_polarize():
    m = polarize(pm(3, sigma=(1,), tau=(2,)))
    assert str(m) == "x1*y2"
    rho = char_pseudomonomial(Codeword.from_string("10"))
    assert str(polarize(rho)) == "x1*y2"
    for f in iter_pseudomonomials(3):
        assert polarize(f).degree == f.degree
        assert polarize(f).is_transversal


def test_polarized_ideal_examples():
    gens = polarized_ideal(code("00", "11")).generator_strings()
    assert set(gens) == {"x1*y2", "x2*y1"}
    for v in range(1 << 3):
        c = NeuralCode(3, tuple(w for w in range(8) if w not in (v, 7 ^ v)))
        gens = polarized_ideal(c).gens
        assert len(gens) == 2
        assert {g.xmask for g in gens} == {v, 7 ^ v}
        assert all(g.degree == 3 for g in gens)


def test_polarized_ideal_generator_properties_exhaustive_n3():
    for n in (1, 2, 3):
        for c in all_codes(n):
            ideal = polarized_ideal(c)
            xs = 0
            ys = 0
            for g in ideal.gens:
                assert g.is_transversal
                assert 1 <= g.degree <= n
                if g.degree == 1:
                    xs |= g.xmask
                    ys |= g.ymask
            # no index with both variables among the generators
            assert xs & ys == 0


def test_minimalize():
    x1 = SquarefreeMonomial(2, 0b01, 0)
    x1x2 = SquarefreeMonomial(2, 0b11, 0)
    assert minimalize([x1, x1x2]).gens == (x1,)
    ideal = minimalize([x1x2, x1])
    assert minimalize(ideal.gens).gens == ideal.gens
    with pytest.raises(ValueError):
        minimalize([SquarefreeMonomial(2, 0, 0)])
    with pytest.raises(ValueError):
        minimalize([])


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_minimalize_is_order_independent(data):
    n = 4
    gens = data.draw(
        st.lists(
            st.tuples(st.integers(0, 15), st.integers(0, 15)).map(
                lambda xy: SquarefreeMonomial(n, xy[0], xy[1] & ~xy[0])
            ),
            min_size=1,
            max_size=8,
        )
    )
    gens = [g for g in gens if g.degree > 0]
    if not gens:
        gens = [SquarefreeMonomial(n, 1, 0)]
    base = minimalize(gens, n=n)
    shuffled = list(gens)
    random.Random(data.draw(st.integers(0, 10**6))).shuffle(shuffled)
    assert minimalize(shuffled, n=n).gens == base.gens


def test_divisibility_matches_componentwise_containment():
    a = pm(4, sigma=(1,), tau=(2,))
    b = pm(4, sigma=(1, 3), tau=(2, 4))
    assert a.divides(b) and not b.divides(a)
    c = pm(4, sigma=(2,), tau=(1,))
    assert not a.divides(c) and not c.divides(a)
