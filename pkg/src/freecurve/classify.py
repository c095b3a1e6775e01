"""Verdicts from the numerical invariants (d, r, tau).

The du Plessis-Wall bound caps the total Tjurina number of a reduced degree-d
curve in terms of r = mdr(F); meeting it exactly characterizes free curves,
with nearly free and maximizing curves pinned down by the adjacent equalities.
Everything here is integer arithmetic on already-computed invariants — no
polynomials enter.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import Inconsistent, NoCase, OutOfRange

__all__ = [
    "Classification",
    "dpw_bound",
    "classify_curve",
    "trichotomy_check",
    "flex_bound",
]


def _binom2(n: int) -> int:
    return n * (n - 1) // 2


def dpw_bound(d: int, r: int) -> int:
    """Upper bound for tau(C) given degree d and r = mdr.

    For 2r < d the bound is tau(d,r)_max = (d-1)^2 - r(d-r-1); from r = d/2
    up it drops by binom(2r-d+2, 2).
    """
    if not (0 <= r <= d - 1):
        raise OutOfRange(f"need 0 <= r <= d-1, got r={r}, d={d}")
    tau_max = (d - 1) ** 2 - r * (d - r - 1)
    if 2 * r < d:
        return tau_max
    return tau_max - _binom2(2 * r - d + 2)


@dataclass
class Classification:
    """Outcome of the (d, r, tau) comparison against the sharp bounds."""

    degree: int
    r: int
    tau: int
    verdict: str  # "free" | "nearly_free" | "maximizing" | "other"
    exponents: tuple | None
    bound_used: int
    rule: str

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "mdr": self.r,
            "tau": self.tau,
            "verdict": self.verdict,
            "exponents": list(self.exponents) if self.exponents else None,
            "bound": self.bound_used,
            "rule": self.rule,
        }


def classify_curve(d: int, r: int, tau: int, ade: bool = False) -> Classification:
    """Free / nearly free / maximizing / other from the exact invariants.

    ``ade``: caller-verified claim that every singularity is simple (ADE);
    required for the maximizing verdict, never inferred here.
    Raises Inconsistent when tau exceeds the applicable bound — that means a
    bug upstream, not a property of the curve.
    """
    bound = dpw_bound(d, r)
    if tau < 0 or tau > bound:
        raise Inconsistent(
            f"tau={tau} outside [0, {bound}] for (d, r) = ({d}, {r})"
        )
    tau_max = (d - 1) ** 2 - r * (d - r - 1)
    if 2 * r < d and tau == tau_max:
        exponents = (r, d - 1 - r)
        # maximizing: d = 2m with exponents (m-1, m), or d = 2m+1 with
        # (m-1, m+1); the tau values 3m(m-1)+1 / 3m^2+1 follow automatically
        m = d // 2
        if ade and r == m - 1:
            expected = 3 * m * (m - 1) + 1 if d % 2 == 0 else 3 * m * m + 1
            assert tau == expected
            return Classification(
                d, r, tau, "maximizing", exponents, bound,
                "tau = tau_max with simple singularities and mdr = d//2 - 1",
            )
        return Classification(
            d, r, tau, "free", exponents, bound, "tau = tau_max with 2r < d"
        )
    if 2 * r < d and tau == tau_max - 1:
        return Classification(
            d, r, tau, "nearly_free", (r, d - r), bound,
            "tau = tau_max - 1 with 2r < d",
        )
    if 2 * r == d and tau == bound:
        return Classification(
            d, r, tau, "nearly_free", (r, d - r), bound,
            "tau meets the case-b bound with 2r = d",
        )
    return Classification(d, r, tau, "other", None, bound, "below both bounds")


def trichotomy_check(d: int, e: int, m: int, r: int) -> str:
    """Which case of the line-pencil trichotomy the data lands in.

    The curve is m lines through a point union a degree-e curve through it,
    d = e + m, with computed r = mdr.  Returns "CaseA" (r = e),
    "CaseB_Free" (r = m-1, free with exponents (m-1, e)), or "CaseC"
    (m <= r <= e-1).  Raises NoCase otherwise — the hypotheses failed.
    """
    assert d == e + m, "degree must split as residual plus pencil lines"
    if r == m - 1:
        return "CaseB_Free"
    if r == e:
        return "CaseA"
    if m <= r <= e - 1:
        return "CaseC"
    raise NoCase(f"r={r} fits no case for (d, e, m) = ({d}, {e}, {m})")


def flex_bound(d: int, histogram: dict) -> int:
    """Upper bound 3d(d-2) - sum 3k(k-1) n_k for the total inflection order.

    ``histogram`` maps multiplicity k to the number n_k of singular points
    with that multiplicity.
    """
    assert d >= 3
    total = 3 * d * (d - 2)
    for k, n_k in histogram.items():
        total -= 3 * k * (k - 1) * n_k
    return total
