"""Walk-matrix DGQS certificates and exact checks of the rooted-product
determinant theorems on concrete graphs."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any

from dgqs.canon import MAX_CANON_ORDER, canonical_form
from dgqs.factor import DEFAULT_BUDGET, factorize
from dgqs.graph import Graph, adjacency_matrix, q_matrix, rooted_product, rooted_tower, to_graph6
from dgqs.matrix import char_poly, determinant, walk_matrix
from dgqs.poly import IntPolynomial, homogeneous_compose, resultant
from dgqs.sequences import gen_a, gen_b, gen_f

CERTIFIED = "certified-DGQS"
NOT_CERTIFIED = "not-certified"
UNKNOWN = "unknown"

HOLDS = "holds"
FAILS = "fails"
PRECONDITION = "precondition-not-met"

EXPONENT_VARIANTS = {
    "lemma": ("floor((3n-2)/2)", lambda n: (3 * n - 2) // 2),
    "intro": ("floor((n-3)/2)", lambda n: (n - 3) // 2),
}
EXPONENT_NOTE = (
    "two printed variants of the 2-power exponent disagree: floor((n-3)/2) "
    "and floor((3n-2)/2); this certificate states which one it used"
)


def graph_id(g: Graph) -> str:
    return canonical_form(g) if g.order <= MAX_CANON_ORDER else to_graph6(g)


@lru_cache(maxsize=4096)
def _q_data(g: Graph) -> tuple[int, IntPolynomial]:
    q = q_matrix(g)
    return determinant(walk_matrix(q)), char_poly(q)


def det_walk_q(g: Graph) -> int:
    return _q_data(g)[0]


def q_char_poly(g: Graph) -> IntPolynomial:
    return _q_data(g)[1]


def q_constant_term(g: Graph) -> int:
    """Constant term of the Q-characteristic polynomial, ``(-1)^n det Q``."""
    return q_char_poly(g)(0)


def adjacency_constant_term(g: Graph) -> int:
    return char_poly(adjacency_matrix(g))(0)


def det_walk_adjacency(g: Graph) -> int:
    return determinant(walk_matrix(adjacency_matrix(g)))


def two_adic_valuation(x: int) -> int | None:
    """``None`` stands for infinity (``x == 0``)."""
    if x == 0:
        return None
    x = abs(x)
    return (x & -x).bit_length() - 1


@dataclass
class SpectralCertificate:
    graph: str
    order: int
    det_wq: int
    exponent: int
    exponent_variant: str
    reduced: int | None
    factors: list[tuple[int, int]]
    residual: int | None
    verdict: str
    a0_q: int
    a0_adjacency: int
    budget: int
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict[str, Any]:
        return {
            "graph": self.graph,
            "order": self.order,
            "det_WQ": str(self.det_wq),
            "exponent": self.exponent,
            "exponent_variant": self.exponent_variant,
            "exponent_formula": EXPONENT_VARIANTS[self.exponent_variant][0],
            "reduced": None if self.reduced is None else str(self.reduced),
            "factorization": [[str(p), e] for p, e in self.factors],
            "residual": None if self.residual is None else str(self.residual),
            "verdict": self.verdict,
            "a0_Q": str(self.a0_q),
            "a0_A": str(self.a0_adjacency),
            "budget": self.budget,
            "notes": list(self.notes),
        }


def criterion_exponent(n: int, variant: str = "lemma") -> int:
    try:
        return EXPONENT_VARIANTS[variant][1](n)
    except KeyError:
        raise ValueError(f"unknown exponent variant {variant!r}; use one of {sorted(EXPONENT_VARIANTS)}") from None


def certify_from_det(
    det_wq: int, n: int, *, variant: str = "lemma", budget: int = DEFAULT_BUDGET
) -> tuple[int, int | None, list[tuple[int, int]], int | None, str]:
    """Criterion on a known determinant: ``(exponent, r, factors, residual, verdict)``."""
    e = criterion_exponent(n, variant)
    if det_wq == 0:
        return e, None, [], None, NOT_CERTIFIED
    if e >= 0:
        r, rem = divmod(det_wq, 1 << e)
        if rem:
            return e, None, [], None, NOT_CERTIFIED
    else:
        r = det_wq << -e
    if r % 2 == 0:
        return e, r, [], None, NOT_CERTIFIED
    fac = factorize(r, budget)
    factors = fac.sorted_factors()
    residual = None if fac.complete else fac.residual
    if fac.has_repeated_factor():
        verdict = NOT_CERTIFIED
    elif fac.complete:
        verdict = CERTIFIED
    else:
        verdict = UNKNOWN
    return e, r, factors, residual, verdict


def certify_dgqs(g: Graph, budget: int = DEFAULT_BUDGET, variant: str = "lemma") -> SpectralCertificate:
    det_wq = det_walk_q(g)
    e, r, factors, residual, verdict = certify_from_det(det_wq, g.order, variant=variant, budget=budget)
    return SpectralCertificate(
        graph=graph_id(g),
        order=g.order,
        det_wq=det_wq,
        exponent=e,
        exponent_variant=variant,
        reduced=r,
        factors=factors,
        residual=residual,
        verdict=verdict,
        a0_q=q_constant_term(g),
        a0_adjacency=adjacency_constant_term(g),
        budget=budget,
        notes=[EXPONENT_NOTE],
    )


@dataclass
class TheoremCheck:
    theorem: str
    inputs: dict[str, Any]
    lhs: Any
    rhs: Any
    verdict: str
    sign: int | None = None
    notes: dict[str, Any] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.verdict == HOLDS

    def to_json(self) -> dict[str, Any]:
        def enc(x: Any) -> Any:
            if isinstance(x, IntPolynomial):
                return x.to_json()
            if isinstance(x, bool) or x is None or isinstance(x, str):
                return x
            if isinstance(x, int):
                return str(x)
            if isinstance(x, (list, tuple)):
                return [enc(v) for v in x]
            if isinstance(x, dict):
                return {k: enc(v) for k, v in x.items()}
            return x

        return {
            "theorem": self.theorem,
            "inputs": enc(self.inputs),
            "lhs": enc(self.lhs),
            "rhs": enc(self.rhs),
            "verdict": self.verdict,
            "sign": self.sign,
            "notes": enc(self.notes),
        }


def _exact_sign(lhs: int, base: int) -> int | None:
    if lhs == 0 or base == 0:
        return None
    if lhs == base:
        return 1
    if lhs == -base:
        return -1
    return None


def predicted_rooted_det(det_w: int, a0: int, n: int, k: int) -> int:
    """``(-1)^(n k (k+1)/2) * a0^(k-1) * det_w^k`` (``0^0 = 1``)."""
    return (-1) ** (n * k * (k + 1) // 2) * a0 ** (k - 1) * det_w**k


def verify_det_formula(g: Graph, k: int, matrix: str = "q") -> TheoremCheck:
    """Direct ``det W(G o P_k)`` against the closed form in ``det W(G)`` and ``a_0``.

    ``matrix="q"`` uses the signless Laplacian throughout; ``"adjacency"``
    is the alternative reading with the adjacency matrix.
    """
    h = rooted_product(g, k)
    if matrix == "q":
        lhs = det_walk_q(h)
        det_g, a0 = det_walk_q(g), q_constant_term(g)
    elif matrix == "adjacency":
        lhs = det_walk_adjacency(h)
        det_g, a0 = det_walk_adjacency(g), adjacency_constant_term(g)
    else:
        raise ValueError(f"matrix must be 'q' or 'adjacency', got {matrix!r}")
    rhs = predicted_rooted_det(det_g, a0, g.order, k)
    return TheoremCheck(
        theorem="det-formula",
        inputs={"graph": graph_id(g), "k": k, "matrix": matrix},
        lhs=lhs,
        rhs=rhs,
        verdict=HOLDS if lhs == rhs else FAILS,
        sign=_exact_sign(lhs, rhs),
        notes={"det_W_G": det_g, "a0": a0},
    )


def maintool_product(h_char_poly: IntPolynomial, k: int) -> int:
    """``prod a_{k-1}(t) f_k(t)`` over the roots of the (monic) char poly."""
    return resultant(h_char_poly, gen_a(k - 1) * gen_f(k))


def verify_lemma_maintool(g: Graph, k: int) -> TheoremCheck:
    """``det W_Q(G o P_k) = +-det W_Q(G)^k * prod a_{k-1}(t) f_k(t)``; sign measured."""
    h = rooted_product(g, k)
    lhs = det_walk_q(h)
    product = maintool_product(q_char_poly(h), k)
    base = det_walk_q(g) ** k * product
    holds = abs(lhs) == abs(base)
    return TheoremCheck(
        theorem="lemma-maintool",
        inputs={"graph": graph_id(g), "k": k},
        lhs=lhs,
        rhs=base,
        verdict=HOLDS if holds else FAILS,
        sign=_exact_sign(lhs, base),
        notes={"eigen_product": product},
    )


def verify_qcharpoly_factorization(g: Graph, k: int) -> TheoremCheck:
    """``chi_Q(G o P_k) = prod_i (b_k - lam_i a_{k-1})`` as an exact polynomial identity."""
    lhs = q_char_poly(rooted_product(g, k))
    rhs = homogeneous_compose(q_char_poly(g), gen_b(k), gen_a(k - 1))
    return TheoremCheck(
        theorem="qcharpoly-factorization",
        inputs={"graph": graph_id(g), "k": k},
        lhs=lhs,
        rhs=rhs,
        verdict=HOLDS if lhs == rhs else FAILS,
    )


def seed_hypothesis(g: Graph) -> dict[str, bool]:
    """The three clauses on a seed graph: even order, det W_Q, constant term."""
    n = g.order
    clauses = {"n_even": n % 2 == 0}
    clauses["det_WQ"] = clauses["n_even"] and abs(det_walk_q(g)) == 2 ** ((3 * n - 2) // 2)
    clauses["a0"] = abs(q_constant_term(g)) == 2
    return clauses


def verify_tower_det(g: Graph, k: int, t: int, *, waive_hypothesis: bool = False) -> TheoremCheck:
    """``det W_Q(G o P_k^t) = +-2^(3 k^t n / 2 - 1)`` for a seed ``g``.

    With ``waive_hypothesis`` the check instead compares the direct
    determinant against the closed form iterated level by level, which is
    meaningful for every graph.
    """
    inputs = {"graph": graph_id(g), "k": k, "t": t}
    clauses = seed_hypothesis(g)
    tower = rooted_tower(g, k, t)
    if waive_hypothesis:
        lhs = det_walk_q(tower)
        level, d = g, det_walk_q(g)
        for _ in range(t):
            d = predicted_rooted_det(d, q_constant_term(level), level.order, k)
            level = rooted_product(level, k)
        return TheoremCheck(
            theorem="tower-recursion",
            inputs=inputs,
            lhs=lhs,
            rhs=d,
            verdict=HOLDS if lhs == d else FAILS,
            sign=_exact_sign(lhs, d),
            notes={"hypothesis": clauses},
        )
    failed = [name for name, ok in clauses.items() if not ok]
    if failed:
        return TheoremCheck(
            theorem="tower-det",
            inputs=inputs,
            lhs=None,
            rhs=None,
            verdict=PRECONDITION,
            notes={"failed_clauses": failed, "hypothesis": clauses},
        )
    n = g.order
    lhs = det_walk_q(tower)
    rhs = 2 ** (3 * k**t * n // 2 - 1)
    return TheoremCheck(
        theorem="tower-det",
        inputs=inputs,
        lhs=lhs,
        rhs=rhs,
        verdict=HOLDS if abs(lhs) == rhs else FAILS,
        sign=_exact_sign(lhs, rhs),
        notes={"hypothesis": clauses},
    )


def verify_constant_term(g: Graph, k: int, t: int, *, waive_hypothesis: bool = False) -> TheoremCheck:
    """Constant term of ``chi_Q(G o P_k^t)`` is ``+-2`` when ``|a_0(G)| = 2``."""
    inputs = {"graph": graph_id(g), "k": k, "t": t}
    a0 = q_constant_term(g)
    if abs(a0) != 2 and not waive_hypothesis:
        return TheoremCheck(
            theorem="constant-term",
            inputs=inputs,
            lhs=None,
            rhs=None,
            verdict=PRECONDITION,
            notes={"failed_clauses": ["a0"], "a0": a0},
        )
    value = q_constant_term(rooted_tower(g, k, t))
    return TheoremCheck(
        theorem="constant-term",
        inputs=inputs,
        lhs=value,
        rhs=2,
        verdict=HOLDS if abs(value) == 2 else FAILS,
        sign=_exact_sign(value, 2),
        notes={"a0": a0, "diagnostic": waive_hypothesis},
    )
