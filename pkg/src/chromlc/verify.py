"""Seeded ensemble checks: oracle agreement, root bounds, and the log-concavity threshold."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .bounds import check_root_bound, fp_constant
from .chromatic import (
    DEFAULT_MAX_VERTICES,
    chromatic_polynomial,
    count_colorings_bruteforce,
    inclusion_exclusion_poly,
)
from .concavity import logcc_scan, proof_algebra_sweep, threshold_q0
from .graph import max_degree, random_ensemble
from .polynomial import eval_poly

ORACLE_MAX_N = 7
ORACLE_Q = range(0, 6)
ROOTS_MAX_N = 9
# K_7 has 21 edges
ORACLE_MAX_EDGES = 21
SCAN_MARGIN = 30
SWEEP_PER_GRAPH = 100


@dataclass
class VerifySummary:
    seed: int
    count: int
    oracle_graphs: int = 0
    oracle_checks: int = 0
    oracle_mismatches: list[dict] = field(default_factory=list)
    root_graphs: int = 0
    root_failures: list[dict] = field(default_factory=list)
    worst_root_margin: float | None = None
    threshold_graphs: int = 0
    threshold_contradictions: list[dict] = field(default_factory=list)
    below_threshold_violations: int = 0
    sweep_samples: int = 0
    sweep_failures: int = 0

    @property
    def passed(self) -> bool:
        return not (
            self.oracle_mismatches or self.root_failures
            or self.threshold_contradictions or self.sweep_failures
        )

    def to_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d


def oracle_mismatches(graphs, qs=ORACLE_Q, max_edges: int = ORACLE_MAX_EDGES) -> tuple[int, list[dict]]:
    """Compare the three counting routes on every graph and q; returns (checks, mismatches)."""
    checks, bad = 0, []
    for idx, g in enumerate(graphs):
        dc = chromatic_polynomial(g)
        ie = inclusion_exclusion_poly(g, max_edges=max_edges)
        for q in qs:
            a, b, c = eval_poly(dc, q), eval_poly(ie, q), count_colorings_bruteforce(g, q)
            checks += 1
            if not a == b == c:
                bad.append({"graph": idx, "q": q, "deletion_contraction": a,
                            "inclusion_exclusion": b, "bruteforce": c})
    return checks, bad


def verify_ensemble(
    seed: int,
    count: int,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    max_edges: int = ORACLE_MAX_EDGES,
) -> VerifySummary:
    summary = VerifySummary(seed=seed, count=count)
    if count <= 0:
        return summary

    small = random_ensemble(count, seed, ORACLE_MAX_N)
    summary.oracle_graphs = len(small)
    summary.oracle_checks, summary.oracle_mismatches = oracle_mismatches(small, max_edges=max_edges)

    kstar = fp_constant().value
    larger = random_ensemble(count, seed + 1, ROOTS_MAX_N)
    margins = []
    for idx, g in enumerate(larger):
        rep = check_root_bound(g, kstar, 1e-6, max_vertices=max_vertices)
        margins.append(rep.margin)
        if not rep.passed:
            summary.root_failures.append({"graph": idx, "max_modulus": rep.max_modulus, "bound": rep.bound})

        poly = chromatic_polynomial(g, max_vertices=max_vertices)
        delta = max_degree(g)
        scan = logcc_scan(poly, 0, threshold_q0(delta) + SCAN_MARGIN, delta)
        summary.below_threshold_violations += len(scan.violations) - len(scan.contradictions)
        if scan.contradictions:
            summary.threshold_contradictions.append({"graph": idx, "q": scan.contradictions})
    summary.root_graphs = summary.threshold_graphs = len(larger)
    summary.worst_root_margin = min(margins)

    sweep = proof_algebra_sweep(SWEEP_PER_GRAPH * count, seed)
    summary.sweep_samples = sweep.samples
    summary.sweep_failures = sweep.linear_failures + sweep.quadratic_failures
    return summary
