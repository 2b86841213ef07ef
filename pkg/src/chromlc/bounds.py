"""Chromatic root-bound constants and a complex root solver.

Everything in here is double-precision floating point. Nothing produced here
flows back into the exact-integer code in :mod:`chromlc.chromatic`.
"""

from __future__ import annotations

import cmath
import csv
import io
import json
import math
from dataclasses import asdict, dataclass

from .chromatic import chromatic_polynomial, DEFAULT_MAX_VERTICES
from .errors import ConvergenceError, DomainError, InvalidParameterError
from .graph import Graph, max_degree
from .polynomial import Polynomial

INVPHI = (math.sqrt(5.0) - 1.0) / 2.0

SOKAL_BRACKET = (0.0, 4.0)
FP_BRACKET = (1.0 + 1e-9, 2.0 - 1e-9)
GRID_POINTS = 1000


@dataclass(frozen=True)
class BoundConstant:
    value: float
    argmin: float
    bracket: tuple[float, float]
    tolerance: float


def sokal_objective(a: float, *, inf_on_domain: bool = False) -> float:
    """(a + e^a) / ln(1 + a e^-a), defined for a > 0."""
    if a <= 0:
        if inf_on_domain:
            return math.inf
        raise DomainError(f"objective needs a > 0, got {a}")
    return (a + math.exp(a)) / math.log1p(a * math.exp(-a))


def fp_objective(y: float, *, inf_on_domain: bool = False) -> float:
    """y / ((2 - y) ln y), defined for 1 < y < 2."""
    if not 1.0 < y < 2.0:
        if inf_on_domain:
            return math.inf
        raise DomainError(f"objective needs 1 < y < 2, got {y}")
    return y / ((2.0 - y) * math.log(y))


def golden_section(f, lo: float, hi: float, tol: float, max_iter: int = 500) -> tuple[float, float]:
    """Minimize a unimodal ``f`` on [lo, hi] until the bracket is narrower than ``tol``."""
    x1 = hi - INVPHI * (hi - lo)
    x2 = lo + INVPHI * (hi - lo)
    f1, f2 = f(x1), f(x2)
    for _ in range(max_iter):
        if hi - lo <= tol:
            break
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - INVPHI * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + INVPHI * (hi - lo)
            f2 = f(x2)
    x = x1 if f1 <= f2 else x2
    return x, f(x)


def _grid_then_golden(f, lo: float, hi: float, tolerance: float) -> BoundConstant:
    if tolerance <= 0:
        raise InvalidParameterError(f"tolerance must be positive, got {tolerance}")
    step = (hi - lo) / GRID_POINTS
    # grid excludes lo itself: both objectives blow up at the left end
    xs = [lo + step * (i + 1) for i in range(GRID_POINTS)]
    vals = [f(x) for x in xs]
    i = min(range(len(xs)), key=vals.__getitem__)
    a = max(lo, xs[i] - step)
    b = min(hi, xs[i] + step)
    x, fx = golden_section(f, a, b, tolerance)
    return BoundConstant(value=fx, argmin=x, bracket=(lo, hi), tolerance=tolerance)


def sokal_constant(tolerance: float = 1e-9) -> BoundConstant:
    """min over a in (0, 4] of :func:`sokal_objective` (about 7.96)."""
    lo, hi = SOKAL_BRACKET
    return _grid_then_golden(lambda a: sokal_objective(a, inf_on_domain=True), lo, hi, tolerance)


def fp_constant(tolerance: float = 1e-9) -> BoundConstant:
    """min over y in (1, 2) of :func:`fp_objective` (about 6.907)."""
    lo, hi = FP_BRACKET
    return _grid_then_golden(lambda y: fp_objective(y, inf_on_domain=True), lo, hi, tolerance)


# -- roots --------------------------------------------------------------------------

@dataclass(frozen=True)
class RootSet:
    roots: tuple[complex, ...]
    residuals: tuple[float, ...]
    degree: int

    @property
    def max_modulus(self) -> float:
        return max((abs(z) for z in self.roots), default=0.0)

    def real_roots(self, tol: float = 1e-7) -> list[float]:
        return sorted(z.real for z in self.roots if abs(z.imag) <= tol)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["re", "im"])
        for z in self.roots:
            w.writerow([repr(z.real), repr(z.imag)])
        return buf.getvalue()


def _horner(coeffs: list[complex], z: complex) -> tuple[complex, complex]:
    p, dp = coeffs[-1], 0j
    for c in reversed(coeffs[:-1]):
        dp = dp * z + p
        p = p * z + c
    return p, dp


def backward_error(coeffs: list[float], z: complex) -> float:
    """|p(z)| / sum |c_i| |z|^i, the relative size of the coefficient perturbation that makes z exact."""
    p, _ = _horner([complex(c) for c in coeffs], z)
    r = abs(z)
    scale = 0.0
    for c in reversed(coeffs):
        scale = scale * r + abs(c)
    return abs(p) / scale if scale else abs(p)


def _divide_linear(coeffs: list[int], r: int) -> list[int] | None:
    """Exact quotient of ``coeffs`` by (q - r), or None if r is not a root."""
    out = [0] * (len(coeffs) - 1)
    acc = 0
    for i in range(len(coeffs) - 1, 0, -1):
        acc = acc * r + coeffs[i]
        out[i - 1] = acc
    return out if acc * r + coeffs[0] == 0 else None


def _split_integer_roots(coeffs: list[int]) -> tuple[list[int], list[int]]:
    """Peel off every integer root r with |r| <= degree by exact division."""
    found: list[int] = []
    while coeffs[0] == 0 and len(coeffs) > 1:
        coeffs = coeffs[1:]
        found.append(0)
    r = 1
    while len(coeffs) > 1 and r <= len(coeffs) - 1 + len(found):
        for cand in (r, -r):
            while len(coeffs) > 1 and coeffs[0] % cand == 0:
                quot = _divide_linear(coeffs, cand)
                if quot is None:
                    break
                coeffs = quot
                found.append(cand)
        r += 1
    return found, coeffs


def poly_roots(p: Polynomial, tolerance: float = 1e-12, max_iter: int = 1000) -> RootSet:
    """All complex roots of ``p`` with multiplicity (Aberth-Ehrlich iteration).

    Integer roots (including 0) are split off exactly from the integer
    coefficients first; they are reported with residual 0. The rest are found
    simultaneously and accepted once every backward error is below
    ``tolerance``, after which the iteration continues until the steps stop
    shrinking.
    """
    if p.is_zero() or p.degree < 1:
        raise InvalidParameterError("need a nonzero polynomial of degree >= 1")
    exact, coeffs = _split_integer_roots(list(p.coeffs))
    exact_roots = [complex(r) for r in sorted(exact)]
    d = len(coeffs) - 1
    if d == 0:
        return RootSet(tuple(exact_roots), (0.0,) * len(exact_roots), p.degree)

    lead = coeffs[-1]
    monic = [c / lead for c in coeffs]
    cm = [complex(c) for c in monic]
    radius = 1.0 + max(abs(c) for c in monic[:-1])
    z = [radius * cmath.exp(1j * (2 * math.pi * k / d + 0.4 + 0.01 * k)) for k in range(d)]

    res = [backward_error(monic, zk) for zk in z]
    converged_at = None
    prev_step = math.inf
    for it in range(max_iter):
        if converged_at is None and max(res) < tolerance:
            converged_at = it
        biggest = 0.0
        for k in range(d):
            pk, dpk = _horner(cm, z[k])
            if pk == 0:
                continue
            ratio = pk / dpk if dpk != 0 else complex(tolerance, tolerance)
            s = sum(1.0 / (z[k] - z[j]) for j in range(d) if j != k and z[k] != z[j])
            step = ratio / (1.0 - ratio * s)
            z[k] -= step
            biggest = max(biggest, abs(step) / max(1.0, abs(z[k])))
            res[k] = backward_error(monic, z[k])
        if converged_at is not None and (biggest == 0.0 or biggest >= prev_step or it - converged_at > 100):
            break
        prev_step = biggest
    if max(res) >= tolerance:
        raise ConvergenceError(
            f"root iteration did not converge (max residual {max(res):.3g})",
            roots=exact_roots + z, residuals=[0.0] * len(exact_roots) + res,
        )
    return RootSet(tuple(exact_roots + z), tuple([0.0] * len(exact_roots) + res), p.degree)


# -- root-bound check --------------------------------------------------------------

@dataclass(frozen=True)
class RootBoundReport:
    degree: int
    roots: tuple[complex, ...]
    residuals: tuple[float, ...]
    max_degree: int
    C: float
    bound: float
    max_modulus: float
    margin: float
    passed: bool

    def to_dict(self) -> dict:
        d = asdict(self)
        d["roots"] = [
            {"re": z.real, "im": z.imag, "residual": r} for z, r in zip(self.roots, self.residuals)
        ]
        d.pop("residuals")
        d["pass"] = d.pop("passed")
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> RootBoundReport:
        return cls(
            degree=d["degree"],
            roots=tuple(complex(r["re"], r["im"]) for r in d["roots"]),
            residuals=tuple(r["residual"] for r in d["roots"]),
            max_degree=d["max_degree"],
            C=d["C"],
            bound=d["bound"],
            max_modulus=d["max_modulus"],
            margin=d["margin"],
            passed=d["pass"],
        )


def check_root_bound(
    g: Graph,
    C: float,
    tolerance: float = 1e-6,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> RootBoundReport:
    """Do all chromatic roots of ``g`` lie in the closed disk of radius ``C * max_degree``?

    Passes when the largest root modulus is at most ``C * Delta + tolerance``.
    """
    poly = chromatic_polynomial(g, max_vertices=max_vertices)
    delta = max_degree(g)
    if poly.degree < 1:
        rs = RootSet((), (), max(poly.degree, 0))
    else:
        rs = poly_roots(poly)
    bound = C * delta
    mm = rs.max_modulus
    return RootBoundReport(
        degree=rs.degree,
        roots=rs.roots,
        residuals=rs.residuals,
        max_degree=delta,
        C=C,
        bound=bound,
        max_modulus=mm,
        margin=bound - mm,
        passed=mm <= bound + tolerance,
    )
