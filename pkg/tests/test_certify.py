from __future__ import annotations

import json

import sympy

from dgqs.certify import (
    CERTIFIED,
    FAILS,
    HOLDS,
    NOT_CERTIFIED,
    PRECONDITION,
    UNKNOWN,
    certify_dgqs,
    certify_from_det,
    criterion_exponent,
    det_walk_q,
    maintool_product,
    q_char_poly,
    verify_constant_term,
    verify_det_formula,
    verify_lemma_maintool,
    verify_qcharpoly_factorization,
    verify_tower_det,
)
from dgqs.graph import Graph, complete_graph, cycle_graph, parse_graph6, path_graph, q_matrix, rooted_product
from dgqs.matrix import cofactor_determinant, walk_matrix
from dgqs.poly import T, homogeneous_compose, resultant
from dgqs.search import enumerate_graphs
from dgqs.sequences import gen_a, gen_b, gen_f

K1 = Graph(1, frozenset())
# a graph on 6 vertices whose walk-matrix determinant is 2^8
E6 = parse_graph6("E@Vg")


def test_exponents():
    assert criterion_exponent(4) == 5
    assert criterion_exponent(6) == 8
    assert criterion_exponent(7) == 9
    assert criterion_exponent(6, "intro") == 1


def test_certify_from_known_determinants():
    e, r, factors, residual, verdict = certify_from_det(96, 4)
    assert (e, r, factors, residual, verdict) == (5, 3, [(3, 1)], None, CERTIFIED)
    assert certify_from_det(2**5 * 9, 4)[4] == NOT_CERTIFIED
    assert certify_from_det(2**6 * 3, 4)[4] == NOT_CERTIFIED  # r even
    assert certify_from_det(2**4 * 3, 4)[1] is None  # not divisible
    assert certify_from_det(-(2**5), 4)[1:] == (-1, [], None, CERTIFIED)


def test_k2_not_certified():
    cert = certify_dgqs(complete_graph(2))
    assert cert.det_wq == 0 and cert.verdict == NOT_CERTIFIED


def test_certificate_json_uses_decimal_strings():
    cert = certify_dgqs(E6)
    assert cert.verdict == CERTIFIED and abs(cert.det_wq) == 2**8
    doc = json.loads(json.dumps(cert.to_json()))
    assert doc["det_WQ"] == str(cert.det_wq)
    assert doc["exponent_formula"] == "floor((3n-2)/2)"
    assert any("floor((n-3)/2)" in note for note in doc["notes"])


def test_budget_only_resolves_unknown():
    p, q = sympy.nextprime(10**9), sympy.nextprime(3 * 10**9)
    for r, final in ((p * q, CERTIFIED), (p * p * q, NOT_CERTIFIED)):
        det = r * 2**5
        verdicts = [certify_from_det(det, 4, budget=b)[4] for b in (0, 10, 10**7)]
        assert verdicts[0] == UNKNOWN
        assert verdicts[-1] == final
        assert all(v in (UNKNOWN, final) for v in verdicts)


def test_det_formula_examples(paw):
    chk = verify_det_formula(K1, 2)
    assert chk.holds and chk.lhs == 0 and chk.rhs == 0
    for k in (2, 3, 4):
        assert verify_det_formula(complete_graph(2), k).lhs == 0
        assert verify_det_formula(complete_graph(2), k).holds
    chk = verify_det_formula(paw, 2)
    oracle = cofactor_determinant(walk_matrix(q_matrix(rooted_product(paw, 2))).tolist())
    assert chk.holds and chk.lhs == oracle


def test_det_formula_nonzero_case():
    for k in (2, 3):
        chk = verify_det_formula(E6, k)
        assert chk.holds and chk.lhs != 0 and chk.sign == 1


def test_det_formula_adjacency_reading_is_available():
    chk = verify_det_formula(cycle_graph(3), 2, matrix="adjacency")
    assert chk.verdict in (HOLDS, FAILS)
    assert chk.inputs["matrix"] == "adjacency"


def test_maintool_examples():
    chk = verify_lemma_maintool(K1, 3)
    assert q_char_poly(path_graph(3)) == gen_b(3)
    assert chk.notes["eigen_product"] == resultant(gen_b(3), gen_a(2) * gen_f(3))
    assert chk.holds
    p3 = verify_lemma_maintool(path_graph(3), 2)
    assert p3.holds and p3.lhs == 0
    c3 = verify_lemma_maintool(cycle_graph(3), 2)
    oracle = cofactor_determinant(walk_matrix(q_matrix(rooted_product(cycle_graph(3), 2))).tolist())
    assert c3.holds and c3.lhs == oracle
    assert verify_lemma_maintool(E6, 2).sign in (1, -1)


def test_maintool_product_by_root_evaluation():
    # chi_Q(P_2) = t(t - 2); a_1 f_2 = (t - 1) t
    assert maintool_product(T * (T - 2), 2) == (0 * -1) * (2 * 1)


def test_qcharpoly_factorization_for_paths():
    for k in range(2, 13):
        chk = verify_qcharpoly_factorization(K1, k)
        assert chk.holds and chk.lhs == gen_b(k)
    assert q_char_poly(path_graph(2)) == T * T - 2 * T


def test_qcharpoly_factorization_k1_boundary_recorded():
    c3 = cycle_graph(3)
    chk = verify_qcharpoly_factorization(c3, 1)
    assert chk.verdict == FAILS
    assert chk.rhs == homogeneous_compose(q_char_poly(c3), T - 1, gen_a(0))
    assert chk.rhs == q_char_poly(c3).__call__(T - 1)


def test_qcharpoly_factorization_small_graphs():
    assert verify_qcharpoly_factorization(cycle_graph(3), 3).holds
    for n in range(1, 5):
        for g in enumerate_graphs(n):
            for k in (2, 3, 4):
                assert verify_qcharpoly_factorization(g, k).holds


def test_tower_precondition_reports():
    chk = verify_tower_det(cycle_graph(3), 2, 1)
    assert chk.verdict == PRECONDITION
    assert "n_even" in chk.notes["failed_clauses"]
    chk = verify_tower_det(E6, 2, 1)
    assert chk.verdict == PRECONDITION and chk.notes["failed_clauses"] == ["a0"]


def test_tower_recursion_and_t1_consistency(paw):
    for g in (paw, E6, cycle_graph(3)):
        direct = verify_det_formula(g, 2)
        tower = verify_tower_det(g, 2, 1, waive_hypothesis=True)
        assert tower.lhs == direct.lhs and tower.rhs == direct.rhs
    chk = verify_tower_det(E6, 2, 2, waive_hypothesis=True)
    assert chk.holds and chk.lhs != 0 and det_walk_q(rooted_product(rooted_product(E6, 2), 2)) == chk.lhs


def test_constant_term():
    chk = verify_constant_term(path_graph(4), 2, 1)
    assert chk.verdict == PRECONDITION and chk.notes["a0"] == 0
    diag = verify_constant_term(cycle_graph(3), 2, 2, waive_hypothesis=True)
    assert diag.lhs == q_char_poly(rooted_product(rooted_product(cycle_graph(3), 2), 2))(0)
    assert diag.notes["diagnostic"] is True


def test_theorem_check_json():
    doc = verify_qcharpoly_factorization(cycle_graph(3), 2).to_json()
    assert doc["verdict"] == "holds" and all(isinstance(c, str) for c in doc["lhs"])
