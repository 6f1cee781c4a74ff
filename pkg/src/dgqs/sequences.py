"""The a/b/c/f polynomial families and exact checkers for their identities.

Checkers never assume an identity: both sides are computed and compared,
and the first failing index carries the two sides as a witness.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Any, Iterable

from dgqs.poly import ONE, T, IntPolynomial, divides, resultant, squarefree_part

_lock = threading.Lock()
_a: list[IntPolynomial] = [ONE, T - 1]
_c: list[IntPolynomial] = [ONE, T - 2]


def gen_a(k: int) -> IntPolynomial:
    """``a_0 = 1, a_1 = t - 1, a_k = (t - 2) a_{k-1} - a_{k-2}``; ``a_{-1} = -1``."""
    if k == -1:
        return IntPolynomial((-1,))
    if k < -1:
        raise ValueError(f"a_k undefined for k={k}")
    with _lock:
        while len(_a) <= k:
            _a.append((T - 2) * _a[-1] - _a[-2])
        return _a[k]


def gen_b(k: int) -> IntPolynomial:
    if k < 0:
        raise ValueError(f"b_k undefined for k={k}")
    if k == 0:
        return ONE
    if k == 1:
        return T - 1
    return (T - 1) * gen_a(k - 1) - gen_a(k - 2)


def gen_c(k: int) -> IntPolynomial:
    """``c_0 = 1, c_1 = t - 2, c_k = (t - 1) c_{k-1} - c_{k-2}``."""
    if k < 0:
        raise ValueError(f"c_k undefined for k={k}")
    with _lock:
        while len(_c) <= k:
            _c.append((T - 1) * _c[-1] - _c[-2])
        return _c[k]


def gen_f(k: int) -> IntPolynomial:
    """``f_k = a_0 + ... + a_{k-1}``."""
    if k < 1:
        raise ValueError(f"f_k undefined for k={k}")
    total = IntPolynomial()
    for i in range(k):
        total = total + gen_a(i)
    return total


def _jsonable(x: Any) -> Any:
    if isinstance(x, IntPolynomial):
        return x.to_json()
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    return x


@dataclass
class IndexVerdict:
    index: Any
    holds: bool
    lhs: Any = None
    rhs: Any = None

    def to_json(self) -> dict:
        return {"index": _jsonable(self.index), "verdict": "holds" if self.holds else "fails",
                "lhs": _jsonable(self.lhs), "rhs": _jsonable(self.rhs)}


@dataclass
class VerdictReport:
    identity: str
    index_range: list
    verdicts: list[IndexVerdict] = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return all(v.holds for v in self.verdicts)

    @property
    def first_failure(self) -> IndexVerdict | None:
        return next((v for v in self.verdicts if not v.holds), None)

    def failing_indices(self) -> list:
        return [v.index for v in self.verdicts if not v.holds]

    def to_json(self) -> dict:
        witness = self.first_failure
        return {
            "identity": self.identity,
            "index_range": _jsonable(self.index_range),
            "verdict": "holds" if self.holds else "fails",
            "failing_indices": _jsonable(self.failing_indices()),
            "witness": witness.to_json() if witness else None,
            "verdicts": [v.to_json() for v in self.verdicts],
            "notes": _jsonable(self.notes),
        }


def check_fs(s_values: Iterable[int]) -> tuple[VerdictReport, VerdictReport]:
    """``f_{2k+1} = a_k^2`` (odd report) and ``f_{2k} = t c_k`` (even report)."""
    s_values = list(s_values)
    odd = VerdictReport("fs-odd", [s for s in s_values if s % 2 == 1])
    even = VerdictReport("fs-even", [s for s in s_values if s % 2 == 0])
    for s in s_values:
        if s < 1:
            raise ValueError("fs check needs s >= 1")
        k = s // 2
        lhs = gen_f(s)
        if s % 2:
            rhs = gen_a(k) ** 2
            odd.verdicts.append(IndexVerdict(s, lhs == rhs, lhs, rhs))
        else:
            rhs = T * gen_c(k)
            even.verdicts.append(IndexVerdict(s, lhs == rhs, lhs, rhs))
    return odd, even


def check_cp(s_values: Iterable[int]) -> tuple[VerdictReport, VerdictReport]:
    """Left: ``t c_{s-1} = (t-1) a_{s-1} - a_{s-2}``; right: that equals ``b_s``."""
    s_values = list(s_values)
    left = VerdictReport("cp-left", s_values)
    right = VerdictReport("cp-right", s_values)
    for s in s_values:
        if s < 2:
            raise ValueError("cp check needs s >= 2")
        middle = (T - 1) * gen_a(s - 1) - gen_a(s - 2)
        lhs = T * gen_c(s - 1)
        left.verdicts.append(IndexVerdict(s, lhs == middle, lhs, middle))
        b = gen_b(s)
        right.verdicts.append(IndexVerdict(s, middle == b, middle, b))
    return left, right


def check_zero(i_values: Iterable[int]) -> VerdictReport:
    """``b_i`` vanishes on every root of ``f_i``, i.e. ``sqfree(f_i) | b_i``."""
    i_values = list(i_values)
    report = VerdictReport("zero", i_values)
    for i in i_values:
        if i < 2:
            raise ValueError("zero check needs i >= 2")
        sf = squarefree_part(gen_f(i))
        b = gen_b(i)
        report.verdicts.append(IndexVerdict(i, divides(sf, b), sf, b))
    return report


def check_a_divides_b_odd(k_values: Iterable[int]) -> VerdictReport:
    """``a_k | b_{2k+1}``."""
    k_values = list(k_values)
    report = VerdictReport("a-divides-b-odd", k_values)
    for k in k_values:
        a, b = gen_a(k), gen_b(2 * k + 1)
        report.verdicts.append(IndexVerdict(k, divides(a, b), a, b))
    return report


def check_shift_claim(max_k: int, *, extended: bool = True) -> VerdictReport:
    """``a_{k+i} + a_{k-i} = (a_i - a_{i-1}) a_k`` for ``0 < i <= k``.

    With ``extended`` the case ``i = k + 1`` (which reaches ``a_{-1} = -1``)
    is included too.
    """
    pairs = []
    for k in range(0 if extended else 1, max_k + 1):
        top = k + 1 if extended else k
        for i in range(1, top + 1):
            pairs.append((k, i))
    report = VerdictReport("shift-claim", [[0 if extended else 1, max_k]])
    for k, i in pairs:
        lhs = gen_a(k + i) + gen_a(k - i)
        rhs = (gen_a(i) - gen_a(i - 1)) * gen_a(k)
        report.verdicts.append(IndexVerdict((k, i), lhs == rhs, lhs, rhs))
    report.notes["extended_to_i_eq_k_plus_1"] = extended
    return report


def ap_product(k: int, lam: int) -> int:
    """Product of ``a_{k-1}`` over the roots of ``b_k - lam * a_{k-1}``."""
    phi = gen_b(k) - gen_a(k - 1) * lam
    return resultant(phi, gen_a(k - 1))


def check_ap(k_values: Iterable[int], lambdas: Iterable[int] = range(-3, 4)) -> VerdictReport:
    k_values = list(k_values)
    lambdas = list(lambdas)
    report = VerdictReport("ap", k_values)
    report.notes["lambdas"] = lambdas
    independent = True
    for k in k_values:
        if k < 2:
            raise ValueError("ap check needs k >= 2")
        values = [ap_product(k, lam) for lam in lambdas]
        expected = (-1) ** (k * (k - 1) // 2)
        same = len(set(values)) == 1
        independent &= same
        report.verdicts.append(IndexVerdict(k, same and values[0] == expected, values, expected))
    report.notes["lambda_independent"] = independent
    return report


def fp_product(k: int) -> int:
    """Product of ``a_{k-1}`` over the roots of ``f_k`` (with multiplicity)."""
    return resultant(gen_f(k), gen_a(k - 1))


def check_fp(k_values: Iterable[int]) -> VerdictReport:
    """Compares the product against both ``(-1)^k`` and ``(-1)^(k-1)``.

    The per-index verdict is the printed sign ``(-1)^k``; ``notes`` records
    which candidate sign matches uniformly.
    """
    k_values = list(k_values)
    report = VerdictReport("fp", k_values)
    matches_k = True
    matches_k_minus_1 = True
    for k in k_values:
        value = fp_product(k)
        printed = (-1) ** k
        alt = (-1) ** (k - 1)
        matches_k &= value == printed
        matches_k_minus_1 &= value == alt
        report.verdicts.append(IndexVerdict(k, value == printed, value, printed))
    if matches_k and not matches_k_minus_1:
        which = "(-1)^k"
    elif matches_k_minus_1 and not matches_k:
        which = "(-1)^(k-1)"
    elif matches_k and matches_k_minus_1:
        which = "both"
    else:
        which = "neither"
    report.notes["matching_sign"] = which
    return report


def check_family_shapes(max_k: int) -> VerdictReport:
    """Degrees and monicity: ``deg a_k = deg b_k = k``, ``deg f_k = k - 1``."""
    report = VerdictReport("family-shapes", [0, max_k])
    for k in range(max_k + 1):
        a, b = gen_a(k), gen_b(k)
        ok = a.degree == k and a.is_monic() and b.degree == k and b.is_monic()
        if k >= 1:
            f = gen_f(k)
            ok = ok and f.degree == k - 1 and f.is_monic()
        report.verdicts.append(IndexVerdict(k, ok))
    return report
