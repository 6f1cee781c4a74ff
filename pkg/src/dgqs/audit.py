"""The full verification run: every acceptance criterion as one function.

Each criterion returns a :class:`Criterion` with a pass flag, a one-line
summary and JSON-ready details.  ``verify_paper`` runs them in order.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Any, Callable

from dgqs.canon import canonical_form
from dgqs.certify import (
    CERTIFIED,
    det_walk_q,
    q_constant_term,
    verify_constant_term,
    verify_det_formula,
    verify_lemma_maintool,
    verify_qcharpoly_factorization,
    verify_tower_det,
)
from dgqs.graph import (
    Graph,
    complete_graph,
    disjoint_union,
    empty_graph,
    parse_graph6,
    q_matrix,
    rooted_product,
    star_graph,
    to_graph6,
)
from dgqs.matrix import ExactMatrix, char_poly, cofactor_determinant, determinant
from dgqs.poly import IntPolynomial, resultant
from dgqs.search import (
    brute_force_dgqs,
    certify_catalog,
    edge_count_histogram,
    enumerate_graphs,
    find_seeds,
    labeled_dedup_count,
    polya_class_counts,
    two_adic_survey,
)
from dgqs.sequences import (
    check_a_divides_b_odd,
    check_ap,
    check_cp,
    check_family_shapes,
    check_fp,
    check_fs,
    check_shift_claim,
    check_zero,
    gen_b,
)

MUST_PASS = "must-pass"
MUST_REPORT = "must-report"
SEED = 20261015
STRATUM_CAP = 30_000
TOWER_ORDER_CAP = 24


@dataclass
class Criterion:
    number: int
    name: str
    kind: str
    passed: bool
    summary: str
    details: dict[str, Any] = field(default_factory=dict)
    complete: bool = True

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number}. {self.name} ({self.kind}): {self.summary}"

    def to_json(self) -> dict[str, Any]:
        return {
            "criterion": self.number,
            "name": self.name,
            "kind": self.kind,
            "passed": self.passed,
            "complete": self.complete,
            "summary": self.summary,
            "details": self.details,
        }


def det_theorem_sweep(max_n: int = 6, ks: tuple[int, ...] = (2, 3)) -> Criterion:
    checked = 0
    failures = []
    nonzero = 0
    zero_law_failures = []
    for n in range(1, max_n + 1):
        for g in enumerate_graphs(n):
            for k in ks:
                chk = verify_det_formula(g, k)
                checked += 1
                if not chk.holds:
                    failures.append(chk.to_json())
                if chk.lhs:
                    nonzero += 1
                # lhs vanishes exactly when det W_Q(G) or a_0 does
                predicted_zero = det_walk_q(g) == 0 or q_constant_term(g) == 0
                if (chk.lhs == 0) != predicted_zero:
                    zero_law_failures.append(chk.inputs)
    passed = not failures and not zero_law_failures
    return Criterion(
        1, "determinant theorem sweep", MUST_PASS, passed,
        f"{checked} (graph, k) pairs for n<={max_n}, k in {list(ks)}; {len(failures)} mismatches; "
        f"{nonzero} with nonzero determinant",
        {"checked": checked, "nonzero_lhs": nonzero, "failures": failures[:5],
         "zero_law_failures": zero_law_failures[:5]},
    )


def charpoly_factorization(max_n: int = 5, ks: tuple[int, ...] = (2, 3, 4), path_k: int = 12) -> Criterion:
    checked = 0
    failures = []
    maintool_signs: dict[str, int] = {}
    maintool_failures = []
    for n in range(1, max_n + 1):
        for g in enumerate_graphs(n):
            for k in ks:
                chk = verify_qcharpoly_factorization(g, k)
                checked += 1
                if not chk.holds:
                    failures.append(chk.to_json())
                mt = verify_lemma_maintool(g, k)
                maintool_signs[str(mt.sign)] = maintool_signs.get(str(mt.sign), 0) + 1
                if not mt.holds:
                    maintool_failures.append(mt.to_json())
    k1 = Graph(1, frozenset())
    path_failures = []
    for k in range(2, path_k + 1):
        if char_poly(q_matrix(rooted_product(k1, k))) != gen_b(k):
            path_failures.append(k)
    # k = 1 is outside the identity's range; its verdict is recorded only
    boundary = verify_qcharpoly_factorization(complete_graph(3), 1)
    passed = not failures and not path_failures and not maintool_failures
    return Criterion(
        2, "Q-characteristic polynomial factorization", MUST_PASS, passed,
        f"{checked} exact polynomial identities for n<={max_n}, k in {list(ks)}; "
        f"chi_Q(P_k) = b_k for 2<=k<={path_k}: {'yes' if not path_failures else path_failures}",
        {"checked": checked, "failures": failures[:5], "path_failures": path_failures,
         "maintool_eigen_product": {"failures": maintool_failures[:5], "signs_observed": maintool_signs},
         "k1_boundary": boundary.to_json()},
    )


def identity_adjudication() -> Criterion:
    fs_odd, fs_even = check_fs(range(1, 42))
    cp_left, cp_right = check_cp(range(2, 17))
    zero = check_zero(range(2, 17))
    shift = check_shift_claim(16)
    ap = check_ap(range(2, 16))
    fp = check_fp(range(1, 16))
    adivb = check_a_divides_b_odd(range(0, 16))
    shapes = check_family_shapes(40)
    fp_sign = fp.notes["matching_sign"]
    requirements = {
        "fs-odd holds for k<=20 (s<=41)": fs_odd.holds,
        "zero holds for 2<=i<=16": zero.holds,
        "shift claim holds for k<=16": shift.holds,
        "ap lambda-independent and equal to (-1)^(k(k-1)/2), k<=15": ap.holds and ap.notes["lambda_independent"],
        "fp matches exactly one candidate sign, k<=15": fp_sign in ("(-1)^k", "(-1)^(k-1)"),
        "cp right equality (definition of b_s)": cp_right.holds,
        "a_k | b_(2k+1), k<=15": adivb.holds,
        "family degrees and monicity, k<=40": shapes.holds,
    }
    passed = all(requirements.values())
    adjudications = {
        "fs-even": "holds" if fs_even.holds else f"fails as stated at s={fs_even.failing_indices()}",
        "cp-left": "holds" if cp_left.holds else f"fails as stated at s={cp_left.failing_indices()}",
        "fp": f"product matches {fp_sign}",
    }
    reports = [r.to_json() for r in (fs_odd, fs_even, cp_left, cp_right, zero, shift, ap, fp, adivb, shapes)]
    return Criterion(
        3, "polynomial identity adjudication", "must-pass as adjudication", passed,
        f"fs-even: {adjudications['fs-even'].split(' at')[0]}; cp-left: {adjudications['cp-left'].split(' at')[0]}; "
        f"fp sign: {fp_sign}",
        {"requirements": requirements, "adjudications": adjudications, "reports": reports},
    )


def dgqs_cross_validation(orders: tuple[int, ...] = (6,)) -> Criterion:
    per_order = {}
    counterexamples = []
    for n in orders:
        catalog = enumerate_graphs(n)
        certs = certify_catalog(catalog)
        certified = []
        for g, cert in zip(catalog, certs):
            if cert.verdict == CERTIFIED:
                certified.append(cert.graph)
                report = brute_force_dgqs(g, catalog)
                if report.mates:
                    counterexamples.append(report.to_json())
        verdicts: dict[str, int] = {}
        for c in certs:
            verdicts[c.verdict] = verdicts.get(c.verdict, 0) + 1
        per_order[str(n)] = {"catalog": catalog.description, "verdict_counts": verdicts, "certified": certified}
    counts = ", ".join(f"n={n}: {len(v['certified'])}" for n, v in per_order.items())
    return Criterion(
        4, "DGQS criterion cross-validation", MUST_PASS, not counterexamples,
        f"certified graphs ({counts}); {len(counterexamples)} with a generalized Q-cospectral mate",
        {"orders": per_order, "counterexamples": counterexamples},
    )


def known_mate() -> Criterion:
    subject = star_graph(3)
    expected = canonical_form(disjoint_union(complete_graph(3), empty_graph(1)))
    report = brute_force_dgqs(subject)
    passed = report.mates == [expected]
    return Criterion(
        5, "known cospectral mate of K_{1,3}", MUST_PASS, passed,
        f"mates of {to_graph6(subject)}: {report.mates} (expected [{expected}] = K_3 u K_1)",
        {"report": report.to_json(), "expected": [expected]},
    )


def enumeration_oracle(full: bool = True) -> Criterion:
    rows = {}
    passed = True
    for n in (4, 5, 6):
        built = len(enumerate_graphs(n))
        oracle = labeled_dedup_count(n)
        polya = sum(polya_class_counts(n))
        rows[str(n)] = {"built_in": built, "labeled_oracle": oracle, "polya": polya}
        passed &= built == oracle == polya
    strata = {}
    if full:
        for n in (7, 8):
            catalog = enumerate_graphs(n)
            hist = edge_count_histogram(catalog)
            polya = polya_class_counts(n)
            pairs = n * (n - 1) // 2
            checked = []
            for m in range(pairs + 1):
                if math.comb(pairs, m) <= STRATUM_CAP:
                    oracle = labeled_dedup_count(n, m)
                    ok = hist[m] == oracle == polya[m]
                    passed &= ok
                    checked.append({"edges": m, "built_in": hist[m], "labeled_oracle": oracle, "polya": polya[m]})
            ok_total = len(catalog) == sum(polya) and hist == polya
            passed &= ok_total
            strata[str(n)] = {"built_in": len(catalog), "polya_total": sum(polya),
                              "histogram_matches_polya": hist == polya, "labeled_strata": checked}
    return Criterion(
        6, "enumeration oracle", MUST_PASS, passed,
        "class counts " + ", ".join(f"n={n}: {r['built_in']}" for n, r in rows.items())
        + (" (n=7,8 stratified)" if full else ""),
        {"exhaustive": rows, "stratified": strata},
    )


def seed_resolution(orders: tuple[int, ...] = (2, 4, 6, 8)) -> Criterion:
    searches = {}
    surveys = {}
    seed_checks = []
    near_miss_checks = []
    passed = True
    for n in orders:
        search = find_seeds(n)
        searches[str(n)] = search.to_json()
        surveys[str(n)] = two_adic_survey(n).to_json()
        passed &= search.exhaustive
        for cert in search.satisfiers:
            g = parse_graph6(cert.graph)
            for k in range(2, TOWER_ORDER_CAP // n + 1):
                t = 1
                while n * k**t <= TOWER_ORDER_CAP:
                    for chk in (verify_tower_det(g, k, t), verify_constant_term(g, k, t)):
                        seed_checks.append(chk.to_json())
                        passed &= chk.holds
                    t += 1
        # graphs meeting only the determinant clause: iterate the closed form up the tower
        for g6 in search.det_clause_graphs[:3]:
            g = parse_graph6(g6)
            t = 1
            while n * 2**t <= TOWER_ORDER_CAP:
                chk = verify_tower_det(g, 2, t, waive_hypothesis=True)
                near_miss_checks.append(chk.to_json())
                passed &= chk.holds
                t += 1
    any_seed = any(s["seeds_found"] for s in searches.values())
    finding = (
        "seed graphs exist; tower checks ran on them"
        if any_seed
        else f"no graph of even order n in {list(orders)} satisfies both det W_Q = +-2^((3n-2)/2) and |a_0| = 2"
    )
    return Criterion(
        7, "seed-hypothesis resolution", MUST_REPORT, passed, finding,
        {"finding": finding, "seed_searches": searches, "two_adic_surveys": surveys,
         "seed_tower_checks": seed_checks, "det_clause_tower_recursion": near_miss_checks},
    )


def sylvester_resultant(f: IntPolynomial, g: IntPolynomial) -> int:
    m, n = len(f.coeffs) - 1, len(g.coeffs) - 1
    if m == 0:
        return f.coeffs[0] ** n
    if n == 0:
        return g.coeffs[0] ** m
    size = m + n
    fc, gc = list(reversed(f.coeffs)), list(reversed(g.coeffs))
    rows = []
    for i in range(n):
        rows.append([0] * i + fc + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gc + [0] * (size - n - 1 - i))
    return determinant(ExactMatrix(rows))


def arithmetic_oracles(det_trials: int = 200, res_trials: int = 100, roundtrip_max_n: int = 6) -> Criterion:
    rng = random.Random(SEED)
    det_bad = 0
    for _ in range(det_trials):
        n = rng.randint(1, 6)
        rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        det_bad += determinant(ExactMatrix(rows)) != cofactor_determinant(rows)
    res_bad = 0
    for _ in range(res_trials):
        roots = [rng.randint(-5, 5) for _ in range(rng.randint(1, 5))]
        f = IntPolynomial((1,))
        for r in roots:
            f = f * IntPolynomial((-r, 1))
        g = IntPolynomial([rng.randint(-9, 9) for _ in range(rng.randint(0, 5))] + [rng.choice([-3, -2, -1, 1, 2, 3])])
        m, n = len(f.coeffs) - 1, len(g.coeffs) - 1
        rfg, rgf = resultant(f, g), resultant(g, f)
        ok = rfg == (-1) ** (m * n) * rgf
        ok &= rfg == math.prod(g(r) for r in roots)
        ok &= rfg == sylvester_resultant(f, g)
        res_bad += not ok
    rt_bad = 0
    rt_count = 0
    for n in range(1, roundtrip_max_n + 1):
        pairs = [(i, j) for j in range(1, n) for i in range(j)]
        for mask in range(1 << len(pairs)):
            g = Graph(n, frozenset(p for b, p in enumerate(pairs) if mask >> b & 1))
            rt_count += 1
            rt_bad += parse_graph6(to_graph6(g)) != g
    passed = det_bad == 0 and res_bad == 0 and rt_bad == 0
    return Criterion(
        8, "exact-arithmetic oracles", MUST_PASS, passed,
        f"determinant {det_trials - det_bad}/{det_trials}, resultant {res_trials - res_bad}/{res_trials}, "
        f"graph6 round trip {rt_count - rt_bad}/{rt_count}",
        {"seed": SEED, "det_failures": det_bad, "resultant_failures": res_bad, "roundtrip_failures": rt_bad,
         "roundtrip_graphs": rt_count},
    )


def criteria_plan(quick: bool = False) -> list[Callable[[], Criterion]]:
    return [
        (lambda: det_theorem_sweep(4 if quick else 6)),
        charpoly_factorization,
        identity_adjudication,
        (lambda: dgqs_cross_validation((6,) if quick else (6, 7, 8))),
        known_mate,
        (lambda: enumeration_oracle(full=not quick)),
        (lambda: seed_resolution((2, 4, 6) if quick else (2, 4, 6, 8))),
        arithmetic_oracles,
    ]


def verify_paper(quick: bool = False, on_result: Callable[[Criterion], None] | None = None) -> list[Criterion]:
    results = []
    for number, run in enumerate(criteria_plan(quick), 1):
        try:
            result = run()
        except MemoryError:
            result = Criterion(number, "resource exhaustion", MUST_PASS, False,
                               "ran out of memory; bundle incomplete", complete=False)
            results.append(result)
            if on_result:
                on_result(result)
            break
        results.append(result)
        if on_result:
            on_result(result)
    return results
