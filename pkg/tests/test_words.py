"""Factor languages, complexity profiles, and the word generators."""

import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from interpsets import words as W
from interpsets.intsets import continued_fraction_value

CF_SQRT2M1 = [0] + [2] * 9          # convergent 985/2378 of sqrt(2) - 1


def wd(symbols, k=2):
    return W.SymbolWord(k, tuple(symbols))


# -- factors -------------------------------------------------------------------


def test_factors_periodic():
    w = wd([0, 1] * 10)
    assert W.factors(w, 3) == [(0, 1, 0), (1, 0, 1)]


def test_factors_all_three_blocks():
    sym = [s for block in itertools.product((0, 1), repeat=3) for s in block]
    w = wd(sym)
    got = W.factors(w, 3)
    assert len(got) == 8 == W.factor_count(w, 3)
    assert set(got) == set(itertools.product((0, 1), repeat=3))


def test_factors_constant():
    w = wd([0] * 12)
    for m in range(1, 13):
        assert W.factor_count(w, m) == 1


def test_factors_out_of_range():
    with pytest.raises(ValueError):
        W.factors(wd([0, 1]), 3)
    with pytest.raises(ValueError):
        W.factors(wd([0, 1]), 0)


@given(st.lists(st.integers(0, 2), min_size=4, max_size=40),
       st.integers(2, 4), st.integers(1, 3))
@settings(max_examples=60, deadline=None)
def test_factor_of_factor_is_factor(sym, n, m):
    if m > n or n > len(sym):
        return
    w = W.SymbolWord(3, tuple(sym))
    subs = set(W.factors(w, m))
    for fac in W.factors(w, n):
        inner = W.SymbolWord(3, fac)
        assert set(W.factors(inner, m)) <= subs


# -- complexity profiles -------------------------------------------------------


def test_profile_sturmian_n_plus_one():
    delta = continued_fraction_value(CF_SQRT2M1)
    w = W.mechanical_word(delta, 10 ** 4)
    profile = W.complexity_profile(w, 100)
    assert all(profile.p[n] == n + 1 for n in range(1, 101))
    assert profile.violations() == []


def test_profile_periodic_saturates():
    w = wd([0, 1, 1] * 20)
    profile = W.complexity_profile(w, 20)
    assert all(profile.p[n] == 3 for n in range(3, 21))
    assert profile.violations() == []


def test_profile_universal_full_growth():
    w = W.universal_word(2, 12)
    profile = W.complexity_profile(w, 12)
    assert all(profile.p[n] == 2 ** n for n in range(1, 13))


def test_profile_cap_is_a_flag():
    w = wd([0, 1] * 8)
    with pytest.raises(ValueError):
        W.complexity_profile(w, 12)
    profile = W.complexity_profile(w, 12, allow_deep=True)
    assert profile.p[12] == 2


@given(st.lists(st.integers(0, 1), min_size=8, max_size=60))
@settings(max_examples=80, deadline=None)
def test_profile_submultiplicative(sym):
    w = W.SymbolWord(2, tuple(sym))
    profile = W.complexity_profile(w, len(sym) // 2)
    p = profile.p
    for n in p:
        for m in p:
            if n + m in p:
                assert p[n + m] <= p[n] * p[m]


# -- mechanical words ----------------------------------------------------------


def test_mechanical_half():
    w = W.mechanical_word(Fraction(1, 2), 12)
    assert w.symbols == (0, 1) * 6


def test_mechanical_two_fifths():
    # S = {floor(5n/2)} = {2, 5, 7, 10, ...}
    w = W.mechanical_word(Fraction(2, 5), 10)
    assert w.symbols == (0, 1, 0, 0, 1, 0, 1, 0, 0, 1)


def test_mechanical_weight_bound():
    delta = continued_fraction_value(CF_SQRT2M1)
    w = W.mechanical_word(delta, 5000)
    ones = [0]
    for s in w.symbols:
        ones.append(ones[-1] + s)
    for m in (7, 20, 53):
        worst = max(ones[i + m] - ones[i] for i in range(len(w) - m))
        assert worst <= math.ceil(m * delta)


def test_mechanical_balance():
    delta = continued_fraction_value([0, 2, 2, 2, 2, 2])
    w = W.mechanical_word(delta, 2000)
    ones = [0]
    for s in w.symbols:
        ones.append(ones[-1] + s)
    for m in (5, 12, 31):
        counts = {ones[i + m] - ones[i] for i in range(len(w) - m)}
        assert max(counts) - min(counts) <= 1


def test_mechanical_range_errors():
    with pytest.raises(ValueError):
        W.mechanical_word(Fraction(2, 3), 10)
    with pytest.raises(ValueError):
        W.mechanical_word(Fraction(0), 10)


# -- universal words -----------------------------------------------------------


def test_universal_trivial():
    w = W.universal_word(2, 1)
    assert {0, 1} <= set(w.symbols)


def test_universal_exhaustive_grid():
    for k in (2, 3):
        for max_len in range(1, 7):
            w = W.universal_word(k, max_len)
            assert len(w) <= k ** max_len * max_len + k
            for n in range(1, max_len + 1):
                assert W.factor_count(w, n) == k ** n


def test_universal_single_letter_alphabet():
    w = W.universal_word(1, 5)
    assert set(w.symbols) == {0} and len(w) >= 5


# -- entropy estimates ---------------------------------------------------------


def test_entropy_constant_word_zero():
    est = W.entropy_estimate(W.complexity_profile(wd([0] * 64), 20))
    assert est.at_n_max == 0.0 and est.infimum == 0.0


def test_entropy_universal_log2():
    w = W.universal_word(2, 10)
    profile = W.complexity_profile(w, 10)
    assert profile.h_est[10] == pytest.approx(math.log(2))


def test_entropy_sturmian_near_zero():
    delta = continued_fraction_value(CF_SQRT2M1)
    w = W.mechanical_word(delta, 10 ** 4)
    est = W.entropy_estimate(W.complexity_profile(w, 100))
    assert est.at_n_max == pytest.approx(math.log(101) / 100)
    assert est.at_n_max < 0.05
    assert est.infimum <= est.at_n_max


# -- word files ----------------------------------------------------------------


def test_word_file_roundtrip(tmp_path):
    w = W.mechanical_word(Fraction(2, 5), 500)
    path = tmp_path / "w.word"
    W.write_word_file(path, w)
    assert W.read_word_file(path) == w
    assert path.read_text().startswith("k=2\n")


def test_word_file_large_alphabet(tmp_path):
    w = W.SymbolWord(40, tuple(range(40)) * 3)
    path = tmp_path / "big.word"
    W.write_word_file(path, w)
    assert W.read_word_file(path) == w


def test_symbol_validation():
    with pytest.raises(ValueError):
        W.SymbolWord(2, (0, 2))
    with pytest.raises(ValueError):
        W.SymbolWord(0, ())
