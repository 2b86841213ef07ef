"""Log-concavity of chromatic polynomials at integers, and the Seymour family.

Every verdict about a chromatic polynomial is decided with exact integers.
The factor checks (:func:`linear_factor_check`, :func:`quadratic_factor_check`)
take float inputs but evaluate them as exact rationals.
"""

from __future__ import annotations

import csv
import io
import json
import math
import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import comb, factorial

from .chromatic import blowup_eval, count_colorings_universal
from .errors import InvalidParameterError, PreconditionError
from .graph import max_degree as graph_max_degree, modified_S, seymour_base
from .polynomial import Polynomial, eval_poly

# K* rounded up; a larger constant only makes the threshold more conservative.
KSTAR_CONSERVATIVE = 6.9080
SQRT2 = math.sqrt(2.0)


def threshold_q0(max_degree: int, kstar: float = KSTAR_CONSERVATIVE) -> int:
    """Smallest integer q with q >= sqrt(2) K* Delta + 1."""
    return math.ceil(SQRT2 * kstar * max_degree + 1)


def logcc_check(p: Polynomial, q: int) -> bool:
    """P(q-1) P(q+1) <= P(q)^2, exactly."""
    return eval_poly(p, q - 1) * eval_poly(p, q + 1) <= eval_poly(p, q) ** 2


@dataclass
class LogConcavityReport:
    q_range: tuple[int, int]
    results: dict[int, bool]
    violations: list[int]
    threshold_q0: int
    max_degree: int
    chromatic_number: int | None = None

    @property
    def contradictions(self) -> list[int]:
        """Violations at or beyond the log-concavity threshold; these should never exist."""
        return [q for q in self.violations if q >= self.threshold_q0]

    def to_dict(self) -> dict:
        return {
            "q_range": list(self.q_range),
            "results": {str(q): ok for q, ok in self.results.items()},
            "violations": self.violations,
            "threshold_q0": self.threshold_q0,
            "max_degree": self.max_degree,
            "chromatic_number": self.chromatic_number,
            "contradictions": self.contradictions,
        }

    @classmethod
    def from_dict(cls, d: dict) -> LogConcavityReport:
        return cls(
            q_range=tuple(d["q_range"]),
            results={int(q): ok for q, ok in d["results"].items()},
            violations=list(d["violations"]),
            threshold_q0=d["threshold_q0"],
            max_degree=d["max_degree"],
            chromatic_number=d.get("chromatic_number"),
        )


def logcc_scan(
    p: Polynomial,
    lo: int,
    hi: int,
    max_degree: int,
    kstar: float = KSTAR_CONSERVATIVE,
    chromatic_number: int | None = None,
) -> LogConcavityReport:
    if lo > hi:
        raise InvalidParameterError(f"empty range: lo={lo} > hi={hi}")
    values = {q: eval_poly(p, q) for q in range(lo - 1, hi + 2)}
    results = {q: values[q - 1] * values[q + 1] <= values[q] ** 2 for q in range(lo, hi + 1)}
    return LogConcavityReport(
        q_range=(lo, hi),
        results=results,
        violations=[q for q, ok in results.items() if not ok],
        threshold_q0=threshold_q0(max_degree, kstar),
        max_degree=max_degree,
        chromatic_number=chromatic_number,
    )


# -- factor inequalities ---------------------------------------------------------

def _above_threshold(q: Fraction, radius: Fraction) -> bool:
    # q > sqrt(2) * radius + 1, decided without rounding
    return q - 1 > 0 and (q - 1) ** 2 > 2 * radius**2


def linear_factor_check(alpha: float, max_degree: int, kstar: float, q: float) -> bool:
    """For a real root alpha: (q-1-alpha)(q+1-alpha) < (q-alpha)^2 with both sides positive."""
    a, Q = Fraction(alpha), Fraction(q)
    radius = Fraction(kstar) * max_degree
    if abs(a) > radius:
        raise PreconditionError(f"|alpha| = {abs(alpha)} exceeds K* Delta = {float(radius)}")
    if not _above_threshold(Q, radius):
        raise PreconditionError(f"q = {q} is not above sqrt(2) K* Delta + 1")
    left = (Q - 1 - a) * (Q + 1 - a)
    right = (Q - a) ** 2
    return left > 0 and right > 0 and left < right


def quadratic_factor_check(a: float, b: float, max_degree: int, kstar: float, q: float) -> bool:
    """For a root pair a +- ib: p(q-1) p(q+1) <= p(q)^2 with p(x) = (x-a)^2 + b^2."""
    A, B, Q = Fraction(a), Fraction(b), Fraction(q)
    radius = Fraction(kstar) * max_degree
    if A**2 + B**2 > radius**2:
        raise PreconditionError(f"|a + ib| exceeds K* Delta = {float(radius)}")
    if not _above_threshold(Q, radius):
        raise PreconditionError(f"q = {q} is not above sqrt(2) K* Delta + 1")

    def p(x: Fraction) -> Fraction:
        return (x - A) ** 2 + B**2

    return p(Q - 1) * p(Q + 1) <= p(Q) ** 2


def _q_just_above(radius: Fraction, rng: random.Random) -> float:
    eps = 10 ** rng.uniform(-9, 1)
    q = SQRT2 * float(radius) + 1 + eps
    while not _above_threshold(Fraction(q), radius):
        eps *= 10
        q = SQRT2 * float(radius) + 1 + eps
    return q


@dataclass
class SweepResult:
    samples: int
    linear_failures: int
    quadratic_failures: int

    @property
    def passed(self) -> bool:
        return self.linear_failures == 0 and self.quadratic_failures == 0


def proof_algebra_sweep(samples: int, seed: int, kstar: float = KSTAR_CONSERVATIVE) -> SweepResult:
    """Random points satisfying the factor-check hypotheses, half of them on the boundary."""
    rng = random.Random(seed)
    lin_fail = quad_fail = 0
    for i in range(samples):
        delta = rng.randint(1, 60)
        R = Fraction(kstar) * delta
        radius = float(R)
        q = _q_just_above(R, rng)

        alpha = rng.choice((-1.0, 1.0)) * radius if i % 2 else rng.uniform(-radius, radius)
        while abs(Fraction(alpha)) > R:
            alpha = math.nextafter(alpha, 0.0)
        if not linear_factor_check(alpha, delta, kstar, q):
            lin_fail += 1

        theta = rng.uniform(0.0, 2 * math.pi)
        r = radius if i % 2 else radius * math.sqrt(rng.random())
        a, b = r * math.cos(theta), r * math.sin(theta)
        while Fraction(a) ** 2 + Fraction(b) ** 2 > R**2:
            a, b = a * (1 - 1e-15), b * (1 - 1e-15)
        if not quadratic_factor_check(a, b, delta, kstar, q):
            quad_fail += 1
    return SweepResult(samples, lin_fail, quad_fail)


# -- Seymour's family --------------------------------------------------------------

def seymour_lower5(n: int) -> int:
    return 27**n


def seymour_lower7(n: int) -> int:
    return 217**n


def seymour_upper6(n: int) -> int:
    return 1080 * 72**n + 210 * 64**n + 360 * 48**n + 360 * 36**n + 90 * 16**n


@dataclass
class SeymourRow:
    n: int
    p5: int
    p6: int
    p7: int
    lb5: int
    lb7: int
    ub6: int
    inequality_holds: bool
    bounds_hold: tuple[bool, bool, bool]
    max_degree: int
    stated_max_degree: int

    @classmethod
    def compute(cls, n: int) -> SeymourRow:
        base = seymour_base()
        p5, p6, p7 = (blowup_eval(base, n, q) for q in (5, 6, 7))
        lb5, lb7, ub6 = seymour_lower5(n), seymour_lower7(n), seymour_upper6(n)
        return cls(
            n=n, p5=p5, p6=p6, p7=p7, lb5=lb5, lb7=lb7, ub6=ub6,
            inequality_holds=p5 * p7 > p6 * p6,
            bounds_hold=(p5 >= lb5, p7 >= lb7, p6 <= ub6),
            max_degree=n * graph_max_degree(base),
            stated_max_degree=5 * n - 5,
        )


CSV_COLUMNS = (
    "n", "p5", "p6", "p7", "lb5", "lb7", "ub6",
    "p5_ge_lb5", "p7_ge_lb7", "p6_le_ub6", "p5p7_gt_p6sq", "max_degree", "stated_max_degree",
)
_BIG = ("p5", "p6", "p7", "lb5", "lb7", "ub6")


@dataclass
class SeymourReport:
    rows: list[SeymourRow]
    n_star: int | None = field(init=False)
    first_holds: int | None = field(init=False)

    def __post_init__(self):
        self.first_holds = next((r.n for r in self.rows if r.inequality_holds), None)
        # smallest n from which the inequality holds through the end of the range
        self.n_star = None
        for r in reversed(self.rows):
            if not r.inequality_holds:
                break
            self.n_star = r.n

    @property
    def all_bounds_hold(self) -> bool:
        return all(all(r.bounds_hold) for r in self.rows)

    def failing_bounds(self) -> list[int]:
        return [r.n for r in self.rows if not all(r.bounds_hold)]

    def to_dict(self) -> dict:
        rows = []
        for r in self.rows:
            d = asdict(r)
            for k in _BIG:
                d[k] = str(d[k])
            d["bounds_hold"] = list(r.bounds_hold)
            rows.append(d)
        return {
            "rows": rows,
            "n_star": self.n_star,
            "first_holds": self.first_holds,
            "all_bounds_hold": self.all_bounds_hold,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> SeymourReport:
        rows = []
        for r in d["rows"]:
            r = dict(r)
            for k in _BIG:
                r[k] = int(r[k])
            r["bounds_hold"] = tuple(r["bounds_hold"])
            rows.append(SeymourRow(**r))
        return cls(rows)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in self.rows:
            w.writerow([
                r.n, r.p5, r.p6, r.p7, r.lb5, r.lb7, r.ub6,
                *(int(b) for b in r.bounds_hold), int(r.inequality_holds),
                r.max_degree, r.stated_max_degree,
            ])
        return buf.getvalue()


def seymour_report(n_lo: int = 1, n_hi: int = 200) -> SeymourReport:
    """Exact P_H(5), P_H(6), P_H(7) for each n, the three bounds, and P5 P7 > P6^2."""
    if n_lo < 1 or n_lo > n_hi:
        raise InvalidParameterError(f"need 1 <= n_lo <= n_hi, got {n_lo}, {n_hi}")
    return SeymourReport([SeymourRow.compute(n) for n in range(n_lo, n_hi + 1)])


# -- the modified example ------------------------------------------------------------

def modified_example_sides(n: int, k: int) -> tuple[int, int]:
    """Both sides of P_S(k) = C(k, m) m! P_H(k - m), with m = n^2 - 6n.

    The left side counts colorings of the constructed graph S(n) directly
    (universal vertices peeled off, the rest recognised as a blow-up); the
    right side is the closed form with P_H from the Seymour base.
    """
    if n < 6:
        raise InvalidParameterError(f"need n >= 6, got {n}")
    m = n * n - 6 * n
    if k < m:
        raise InvalidParameterError(f"need k >= n^2 - 6n = {m}, got {k}")
    lhs = count_colorings_universal(modified_S(n), k)
    rhs = comb(k, m) * factorial(m) * blowup_eval(seymour_base(), n, k - m)
    return lhs, rhs


def modified_example_check(n: int, k: int) -> bool:
    lhs, rhs = modified_example_sides(n, k)
    return lhs == rhs


@dataclass
class RatioRow:
    n: int
    ratio: Fraction
    gap_bound: Fraction

    @property
    def within(self) -> bool:
        return abs(1 - self.ratio) < self.gap_bound


def asymptotic_ratio_report(n_hi: int) -> dict:
    """(n^2 - 6n + 7) / (n^2 - 1) for n = 7..n_hi, with |1 - ratio| < 6/(n-1) checked per row."""
    if n_hi < 7:
        raise InvalidParameterError(f"need n_hi >= 7, got {n_hi}")
    rows = [
        RatioRow(n, Fraction(n * n - 6 * n + 7, n * n - 1), Fraction(6, n - 1))
        for n in range(7, n_hi + 1)
    ]
    return {
        "rows": rows,
        "monotone": all(a.ratio < b.ratio for a, b in zip(rows, rows[1:])),
        "all_within": all(r.within for r in rows),
    }
