import pytest
from hypothesis import given, strategies as st

from conftest import trees
from eds_lab import constructions as fam
from eds_lab import formulas as F
from eds_lab.enumeration import free_trees
from eds_lab.tree import diameter, eds, total_eccentricity, wiener

PQ = [(p, q) for p in range(3, 10) for q in range(p, 13)]


@pytest.mark.parametrize("p,q", PQ)
def test_f_and_g_match_direct(p, q):
    n = p + q
    for s in range(1, p - 1):
        assert F.f_s(n, p, s).value == eds(fam.t_s(p, q, s))
    for t in range(1, q - 1):
        assert F.g_t(n, q, t).value == eds(fam.t_prime_t(p, q, t))
    assert F.eds_t1(n, p).value == eds(fam.t_s(p, q, 1))
    assert F.eds_t1_prime(n, q).value == eds(fam.t_prime_t(p, q, 1))
    assert F.eds_double_star(p, q) == eds(fam.double_star(p, q))


@pytest.mark.parametrize("p,q", [(p, q) for p, q in PQ if p >= 4 and q > p])
def test_third_candidates_match_direct(p, q):
    n = p + q
    for s in range(1, p - 2):
        assert F.f1(n, p, s).value == eds(fam.hat_t_s(p, q, s))
        assert F.f2(n, p, s).value == eds(fam.tilde_t_t(p, q, s))
    for r in range(1, q - 2):
        assert F.f3(n, p, r).value == eds(fam.vec_t_r(p, q, r))
    assert F.eds_t2(n, p).value == eds(fam.t_s(p, q, 2))


def test_polynomial_identities():
    for n in range(6, 40):
        for p in range(2, n):
            assert F.eds_t1(n, p).value == F.f_s(n, p, 1).value
            assert F.eds_t2(n, p).value == F.f_s(n, p, 2).value
            assert F.eds_t1_prime(n, n - p).value == F.g_t(n, n - p, 1).value
            assert F.threshold_rederived(n, p) == F.g_t(n, n - p, 1).value - F.f_s(n, p, 2).value
            assert F.eds_t1(n, p).value - F.eds_t1_prime(n, n - p).value == 2 * (n + 6) * (2 * p - n)


def test_printed_threshold_differs_by_10p():
    for n in range(8, 30):
        for p in range(4, n // 2):
            assert F.threshold_paper(n, p) - F.threshold_rederived(n, p) == 10 * p


def test_validity_flags():
    assert F.f_s(6, 3, 1) == F.FormulaValue(205, True)
    assert F.f_s(9, 4, 2) == F.FormulaValue(534, False)
    assert F.g_t(9, 5, 1) == F.FormulaValue(564, True)
    assert not F.eds_t2(9, 4).valid and F.eds_t2(11, 5).valid
    assert not F.f1(10, 5, 1).valid  # p == q


@pytest.mark.parametrize("n", range(6, 15))
def test_t_n_beta_formula(n):
    for beta in range(1, n // 2 + 1):
        fv = F.eds_t_n_beta(n, beta)
        direct = eds(fam.t_n_beta(n, beta))
        if beta >= 3:
            assert fv.valid and fv.value == direct
        else:
            assert not fv.valid and fv.value != direct


def test_t_n_beta_boundary_examples():
    assert F.eds_t_n_beta(4, 1) == F.FormulaValue(51, False)
    assert eds(fam.t_n_beta(4, 1)) == 33
    assert F.eds_t_n_beta(8, 3) == F.FormulaValue(383, True)
    with pytest.raises(F.FormulaError):
        F.eds_t_n_beta(5, 3)


def test_star_formula():
    for n in range(3, 30):
        assert F.eds_star(n) == eds(fam.star(n))


@pytest.mark.parametrize("n", range(2, 9))
def test_corona_identity_exhaustive(n):
    for t in free_trees(n):
        for m in (1, 2, 3):
            got = F.corona_eds(n, m, eds(t), wiener(t), total_eccentricity(t))
            assert got == eds(fam.pendant_expansion(t, m))


@given(trees(min_n=2, max_n=20), st.integers(1, 4))
def test_corona_identity_random(t, m):
    assert F.corona_eds(t.n, m, eds(t), wiener(t), total_eccentricity(t)) == eds(fam.pendant_expansion(t, m))


def test_corona_p2():
    assert F.corona_eds(2, 1, 2, 1, 2) == 52


def test_corona_domain():
    # K_1 with one pendant is P_2 (EDS 2); the identity would give 3
    with pytest.raises(F.FormulaError):
        F.corona_eds(1, 1, 0, 0, 0)
    with pytest.raises(F.FormulaError):
        F.eds_star(2)


@pytest.mark.parametrize("n", range(3, 11))
def test_total_ecc_bound(n):
    for t in free_trees(n):
        assert total_eccentricity(t) <= F.total_ecc_path_bound(n, diameter(t))
    assert total_eccentricity(fam.path(n)) == F.total_ecc_path_bound(n, n - 1)


def test_third_min_winner():
    assert F.third_min_winner(15, 7, "rederived") == F.T1_PRIME
    assert F.third_min_winner(15, 7, "paper") == F.T2
    assert F.third_min_winner(11, 5, "rederived") == F.T2
    with pytest.raises(F.FormulaError):
        F.third_min_winner(8, 4, "rederived")
    with pytest.raises(F.FormulaError):
        F.third_min_winner(15, 7, "other")


def test_tie_is_reported():
    ties = [(n, p) for n in range(9, 200) for p in range(4, (n + 1) // 2) if p < n - p and F.threshold_rederived(n, p) == 0]
    for n, p in ties:
        assert F.third_min_winner(n, p, "rederived") == F.TIE


def test_evaluate_dispatch():
    assert F.evaluate("F_s", 6, 3, 1).value == 205
    assert F.evaluate(F.FormulaId.EDS_DOUBLE_STAR, 3, 4).value == 235
    assert F.parameter_names(F.FormulaId.F3) == ("n", "p", "r")
    assert F.evaluate("ThresholdRederived", 15, 7).value == -6
    with pytest.raises(F.FormulaError):
        F.evaluate("F_s", 6, 3)
    with pytest.raises(F.FormulaError):
        F.evaluate("Nope", 1)
