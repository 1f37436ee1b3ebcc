"""Certificates and densities for integer-set models.

Derived expected values were computed with the brute-force oracles below
(direct window scans over materialized membership) and then frozen.
"""

import pytest
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from interpsets import intsets as S

AP = S.IntegerSetModel.arithmetic_progression
POW = S.IntegerSetModel.lacunary_powers
EXPL = S.IntegerSetModel.explicit_window


# -- brute-force oracles -------------------------------------------------------


def brute_syndetic(members, n, g):
    """Every length-g subwindow of [1, n] meets the set."""
    mem = set(members)
    return all(any(x in mem for x in range(a, a + g)) for a in range(1, n - g + 2))


def brute_thick(members, n, run_len):
    mem = set(members)
    return any(all(a + i in mem for i in range(run_len))
               for a in range(1, n - run_len + 2))


def brute_pw(members, n, g, run_len):
    mem = set(members)
    for a in range(1, n - run_len + 2):
        if all(any(x in mem for x in range(c, c + g))
               for c in range(a, a + run_len - g + 1)):
            return True
    return False


def brute_spacing(members, n, gap_len):
    """Least L such that every length-L window holds a full gap_len-gap."""
    mem = set(members)
    starts = [p for p in range(1, n - gap_len + 2)
              if not any(x in mem for x in range(p, p + gap_len))]
    if not starts:
        return None
    sset = set(starts)
    for length in range(gap_len, n + 1):
        if all(any(p in sset and p + gap_len - 1 <= a + length - 1
                   for p in range(a, a + length - gap_len + 1))
               for a in range(1, n - length + 2)):
            return length
    return None


small_sets = st.sets(st.integers(1, 120), min_size=1, max_size=40)


# -- gap_sequence --------------------------------------------------------------


def test_gap_sequence_even():
    assert S.gap_sequence(AP(2, 0), 10) == [2, 2, 2, 2]


def test_gap_sequence_powers():
    assert S.gap_sequence(POW(2), 64) == [2, 4, 8, 16, 32]


def test_gap_sequence_sturmian():
    # delta = [0;2,2,2] = 5/12, a convergent of sqrt(2)-1
    model = S.IntegerSetModel.sturmian_floor([0, 2, 2, 2])
    gaps = S.gap_sequence(model, 50)
    assert set(gaps) <= {2, 3}
    elems = model.elements(50)
    assert elems[:6] == [2, 4, 7, 9, 12, 14]
    assert sum(gaps) + elems[0] == elems[-1] <= 50


def test_gap_sequence_empty_window():
    with pytest.raises(S.EmptyWindowError):
        S.gap_sequence(EXPL([200], 300), 100)


# -- syndetic ------------------------------------------------------------------


def test_syndetic_even_holds():
    cert = S.syndetic_certificate(AP(2, 0), 100, 2)
    assert cert.holds
    assert S.replay_certificate(AP(2, 0), cert)


def test_syndetic_powers_fails_with_witness():
    cert = S.syndetic_certificate(POW(2), 100, 10)
    assert not cert.holds
    assert cert.witness["gap"] == [32, 64]
    assert S.replay_certificate(POW(2), cert)


def test_syndetic_union_holds():
    model = S.IntegerSetModel.union_of([AP(3, 0), EXPL([1])])
    assert S.syndetic_certificate(model, 60, 3).holds


def test_syndetic_pending_tail_fails():
    # knowledge stops at 3 but the window reaches 100
    cert = S.syndetic_certificate(EXPL([1, 2, 3]), 100, 5)
    assert not cert.holds
    assert cert.witness["kind"] == "pending-tail"


# -- thick ---------------------------------------------------------------------


def test_thick_complement_of_tens():
    model = EXPL([x for x in range(1, 101) if x % 10])
    assert S.thick_certificate(model, 100, 8).holds


def test_thick_even_fails():
    assert not S.thick_certificate(AP(2, 0), 100, 2).holds


def test_thick_square_intervals_witness():
    # union of [n^2, n^2 + n); first 5-run starts at 25 (computed by scan)
    model = EXPL([x for n in range(1, 11) for x in range(n * n, n * n + n)])
    cert = S.thick_certificate(model, 100, 5)
    assert cert.holds and cert.witness["run_start"] == 25
    assert brute_thick(model.members, 100, 5)


# -- gap syndeticity table -----------------------------------------------------


def test_gap_table_powers():
    cert = S.gap_syndeticity_table(POW(2), 10 ** 4, 5)
    assert cert.holds
    # frozen from the brute spacing oracle: leading span 9 + 5 - 1
    assert cert.witness["spacing_bound"] == 13
    assert cert.witness["first_gap_start"] == 9


def test_gap_table_brute_agreement():
    model = POW(2)
    cert = S.gap_syndeticity_table(model, 300, 5)
    assert cert.witness["spacing_bound"] == brute_spacing(model.elements(300), 300, 5)


def test_gap_table_even_no_2gap():
    assert not S.gap_syndeticity_table(AP(2, 0), 1000, 2).holds


def test_gap_table_full_set():
    assert not S.gap_syndeticity_table(AP(1, 0), 100, 1).holds


# -- piecewise syndetic --------------------------------------------------------


def test_pw_factorial_runs():
    import math
    elems = sorted({x for n in range(1, 11)
                    for x in range(math.factorial(n), math.factorial(n) + n + 1)})
    model = EXPL(elems)
    cert = S.piecewise_syndetic_certificate(model, math.factorial(10), 1, 10)
    assert cert.holds
    # the qualifying window sits at 9! (the 10! run is cut by the window edge)
    assert cert.witness["interval"][0] == math.factorial(9)


def test_pw_powers_fails():
    assert not S.piecewise_syndetic_certificate(POW(2), 10 ** 6, 4, 100).holds


def test_pw_full_set_trivial():
    cert = S.piecewise_syndetic_certificate(AP(1, 0), 500, 1, 500)
    assert cert.holds and cert.witness["interval"] == [1, 500]


@given(small_sets, st.integers(1, 6), st.integers(1, 5))
@settings(max_examples=60, deadline=None)
def test_pw_matches_brute(members, g, extra):
    run_len = g + extra
    model = EXPL(sorted(members))
    n = 120
    if run_len > n:
        return
    cert = S.piecewise_syndetic_certificate(model, n, g, run_len)
    assert cert.holds == brute_pw(members, n, g, run_len)


@given(small_sets, st.integers(1, 8))
@settings(max_examples=60, deadline=None)
def test_syndetic_matches_brute(members, g):
    model = EXPL(sorted(members))
    cert = S.syndetic_certificate(model, 120, g)
    assert cert.holds == brute_syndetic(members, 120, g)


# -- banach density ------------------------------------------------------------


def test_banach_ap_exact():
    profile = S.banach_density_profile(AP(3, 0), 600, n_max=30)
    assert profile.exact == Fraction(1, 3)
    assert profile.value(30) == Fraction(10, 30)


def test_banach_sturmian_exact_is_delta():
    model = S.IntegerSetModel.sturmian_floor([0, 2, 2, 2])
    profile = S.banach_density_profile(model, 400, n_max=24)
    assert profile.exact == Fraction(5, 12)
    # observed density at the computed scales brackets delta
    assert abs(profile.value(24) - Fraction(5, 12)) <= Fraction(1, 24)


def test_banach_powers_sparse():
    profile = S.banach_density_profile(POW(2), 2 ** 20, lengths=[1024])
    assert profile.rows[0].count == 10
    assert profile.rows[0].value <= Fraction(11, 1024)


def test_banach_rejects_deep_windows():
    with pytest.raises(ValueError):
        S.banach_density_profile(AP(2, 0), 100, n_max=51)


@given(small_sets, st.integers(1, 12), st.integers(1, 12))
@settings(max_examples=60, deadline=None)
def test_banach_subadditive(members, n1, n2):
    model = EXPL(sorted(members))
    n = 300
    f = {}
    for length in (n1, n2, n1 + n2):
        f[length], _ = S.max_window_count(model, n, length)
    assert f[n1 + n2] <= f[n1] + f[n2]


# -- window monotonicity and duality -------------------------------------------


@given(small_sets, st.integers(1, 6), st.integers(2, 8))
@settings(max_examples=60, deadline=None)
def test_window_monotonicity(members, g, run_len):
    model = EXPL(sorted(members))
    for n1, n2 in ((140, 200), (150, 260)):
        if S.thick_certificate(model, n1, run_len).holds:
            assert S.thick_certificate(model, n2, run_len).holds
        if run_len >= g:
            if S.piecewise_syndetic_certificate(model, n1, g, run_len).holds:
                assert S.piecewise_syndetic_certificate(model, n2, g, run_len).holds
        if not S.syndetic_certificate(model, n1, g).holds:
            assert not S.syndetic_certificate(model, n2, g).holds


@given(small_sets, st.integers(2, 6))
@settings(max_examples=60, deadline=None)
def test_thick_syndetic_duality(members, run_len):
    n = 140
    model = EXPL(sorted(members))
    cert = S.thick_certificate(model, n, run_len)
    if not cert.holds:
        return
    complement = sorted(set(range(1, n + 1)) - set(members))
    if not complement:
        return
    assert not S.syndetic_certificate(EXPL(complement), n, run_len - 1).holds


@given(small_sets, st.integers(1, 6))
@settings(max_examples=40, deadline=None)
def test_replay_reproduces(members, g):
    model = EXPL(sorted(members))
    cert = S.syndetic_certificate(model, 130, g)
    assert S.replay_certificate(model, cert)
    cert2 = S.thick_certificate(model, 130, g)
    assert S.replay_certificate(model, cert2)


def test_certificate_json_roundtrip():
    cert = S.syndetic_certificate(AP(2, 0), 50, 2)
    again = S.Certificate.from_json(cert.to_json())
    assert again == cert


# -- generators, grammar, files -------------------------------------------------


def test_contains_matches_elements():
    models = [
        AP(3, 2),
        POW(3),
        S.IntegerSetModel.sturmian_floor([0, 2, 2]),
        S.IntegerSetModel.finite_sums([1, 2, 4]),
        S.IntegerSetModel.shifted(POW(2), 3),
        S.IntegerSetModel.union_of([AP(5, 1), EXPL([4, 8])]),
    ]
    for model in models:
        elems = set(model.elements(200))
        assert all(model.contains(x) == (x in elems) for x in range(1, 201))


def test_finite_sums_closure():
    model = S.IntegerSetModel.finite_sums([1, 2, 4])
    assert model.elements(100) == [1, 2, 3, 4, 5, 6, 7]


def test_spec_roundtrip():
    models = [
        AP(3, 0),
        POW(2),
        S.IntegerSetModel.sturmian_floor([0, 2, 2, 2]),
        EXPL([1, 5, 9], 20),
        S.IntegerSetModel.finite_sums([10, 1000]),
        S.IntegerSetModel.shifted(S.IntegerSetModel.union_of([AP(2, 0), POW(3)]), 7),
    ]
    for model in models:
        assert S.parse_set_spec(model.spec_string()) == model


def test_spec_errors():
    for bad in ["", "a=3", "kind=ap a=3", "kind=nope x=1",
                "kind=ap a=3 b=0 c=9", "kind=union of=(kind=ap a=2"]:
        with pytest.raises(S.SpecGrammarError):
            S.parse_set_spec(bad)


def test_set_file_roundtrip(tmp_path):
    path = tmp_path / "s.txt"
    S.write_set_file(path, POW(2), 100)
    back = S.read_set_file(path)
    assert back.members == (2, 4, 8, 16, 32, 64)
    assert back.window_bound == 64
    raw = path.read_bytes()
    assert raw == b"2\n4\n8\n16\n32\n64\n"


def test_explicit_window_bound_enforced():
    model = EXPL([2, 4], 10)
    with pytest.raises(ValueError):
        model.elements(50)
    with pytest.raises(ValueError):
        model.contains(11)
    assert model.contains(4) and not model.contains(3)
