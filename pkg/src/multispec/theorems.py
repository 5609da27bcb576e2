"""Checkers for the eigenvalue/connectivity inequalities, and seeded campaigns.

A checker never raises on a valid graph; it returns a ``TheoremVerdict``
whose ``violated`` flag is the only thing that should ever be true if the
numerics or connectivity code were wrong.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Optional

from multispec.connectivity import edge_connectivity, independence_number, vertex_connectivity
from multispec.families import (
    SplitMix64,
    build_H,
    derive_seed,
    random_multigraph,
    random_regular_multigraph,
)
from multispec.multigraph import Multigraph, degrees, is_regular, is_underlying_complete
from multispec.spectral import adjacency_spectrum, laplacian_spectrum

GUARD = 1e-8

FIEDLER = "fiedler_multigraph"
COROLLARY = "corollary_edge"
KAPPA_PRIME_2 = "kappa_prime_2"
KAPPA_PRIME_T = "kappa_prime_t"
MAIN = "main_kappa_2"
ALPHA = "alpha_observation"

SUITES = {
    "fiedler": (FIEDLER, COROLLARY),
    "main": (MAIN,),
    "edge": (KAPPA_PRIME_2, KAPPA_PRIME_T),
    "alpha": (ALPHA,),
    "all": (FIEDLER, COROLLARY, KAPPA_PRIME_2, KAPPA_PRIME_T, MAIN, ALPHA),
}


def theta(d: int, t: int) -> float:
    """Sharp lambda_2 threshold that forces edge-connectivity above t."""
    if not 1 <= t <= d - 1:
        raise ValueError(f"theta needs 1 <= t <= d-1, got d={d}, t={t}")
    if t == 1:
        return (d - 1 + math.sqrt(9 * d * d - 10 * d + 17)) / 4
    if t % 2 == 0:
        return float(d - t)
    return float(d - t + 1)


class GraphFacts:
    """Lazily computed invariants of one graph, shared between checkers."""

    def __init__(self, G: Multigraph):
        self.G = G

    @cached_property
    def degree_range(self) -> tuple[int, int]:
        deg = degrees(self.G)
        return (min(deg), max(deg)) if deg else (0, 0)

    @cached_property
    def d(self) -> Optional[int]:
        return is_regular(self.G) if self.G.n else None

    @cached_property
    def m(self) -> int:
        return max(self.G.mult.values(), default=0)

    @cached_property
    def complete(self) -> bool:
        return is_underlying_complete(self.G)

    @cached_property
    def adjacency(self):
        return adjacency_spectrum(self.G)

    @cached_property
    def laplacian(self):
        return laplacian_spectrum(self.G)

    @property
    def lambda2(self) -> float:
        return self.adjacency[1]

    @property
    def mu2(self) -> float:
        return self.laplacian[self.G.n - 2]

    @cached_property
    def kappa(self) -> int:
        return vertex_connectivity(self.G)

    @cached_property
    def kappa_prime(self) -> int:
        return edge_connectivity(self.G)

    @cached_property
    def alpha(self) -> int:
        return independence_number(self.G)


@dataclass(frozen=True)
class TheoremVerdict:
    theorem_id: str
    n: int
    degree_range: tuple[int, int]
    max_multiplicity: int
    premise_value: float
    threshold: float
    premise_holds: bool
    conclusion_value: float
    conclusion_holds: bool
    exempt: bool = False
    exempt_reason: Optional[str] = None
    parameter: Optional[int] = None
    # Distance from failure: bound minus value for inequalities; for
    # implications, lambda_2 minus threshold on graphs where the conclusion
    # fails (0 means the threshold is attained).
    margin: Optional[float] = None

    @property
    def violated(self) -> bool:
        return self.premise_holds and not self.conclusion_holds and not self.exempt

    def as_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "parameter": self.parameter,
            "graph": {"n": self.n, "degree_range": list(self.degree_range), "m": self.max_multiplicity},
            "premise_value": self.premise_value,
            "threshold": self.threshold,
            "premise_holds": self.premise_holds,
            "conclusion_value": self.conclusion_value,
            "conclusion_holds": self.conclusion_holds,
            "exempt": self.exempt,
            "exempt_reason": self.exempt_reason,
            "violated": self.violated,
            "margin": self.margin,
        }


def _exempt(theorem_id: str, f: GraphFacts, reason: str, parameter=None) -> TheoremVerdict:
    return TheoremVerdict(
        theorem_id, f.G.n, f.degree_range, f.m, math.nan, math.nan, False, math.nan, True,
        exempt=True, exempt_reason=reason, parameter=parameter,
    )


def _facts(G: Multigraph, facts: Optional[GraphFacts]) -> GraphFacts:
    return facts if facts is not None else GraphFacts(G)


def _upper_bound_check(theorem_id: str, f: GraphFacts, connectivity: int) -> TheoremVerdict:
    bound = float(connectivity * f.m)
    mu2 = f.mu2
    return TheoremVerdict(
        theorem_id, f.G.n, f.degree_range, f.m,
        premise_value=mu2, threshold=bound, premise_holds=True,
        conclusion_value=float(connectivity), conclusion_holds=mu2 <= bound + GUARD,
        margin=bound - mu2,
    )


def check_fiedler_multigraph(G: Multigraph, facts: Optional[GraphFacts] = None) -> TheoremVerdict:
    """mu_2 <= kappa * m(G) unless the underlying graph is complete."""
    f = _facts(G, facts)
    if f.complete:
        return _exempt(FIEDLER, f, "complete_underlying")
    return _upper_bound_check(FIEDLER, f, f.kappa)


def check_corollary_edge(G: Multigraph, facts: Optional[GraphFacts] = None) -> TheoremVerdict:
    """mu_2 <= kappa' * m(G) unless the underlying graph is complete."""
    f = _facts(G, facts)
    if f.complete:
        return _exempt(COROLLARY, f, "complete_underlying")
    return _upper_bound_check(COROLLARY, f, f.kappa_prime)


def _implication(theorem_id, f: GraphFacts, thr: float, value: int, required: int, parameter=None):
    lam2 = f.lambda2
    holds = value >= required
    return TheoremVerdict(
        theorem_id, f.G.n, f.degree_range, f.m,
        premise_value=lam2, threshold=thr, premise_holds=lam2 < thr - GUARD,
        conclusion_value=float(value), conclusion_holds=holds,
        parameter=parameter, margin=None if holds else lam2 - thr,
    )


def _regular_gate(theorem_id, f: GraphFacts, t: int, parameter=None) -> Optional[TheoremVerdict]:
    if f.G.n < 2:
        return _exempt(theorem_id, f, "single_vertex", parameter)
    if f.d is None:
        return _exempt(theorem_id, f, "irregular", parameter)
    if f.complete:
        return _exempt(theorem_id, f, "complete_underlying", parameter)
    if not 1 <= t <= f.d - 1:
        return _exempt(theorem_id, f, "t_out_of_range", parameter)
    return None


def check_thm_kappa_prime_2(G: Multigraph, facts: Optional[GraphFacts] = None) -> TheoremVerdict:
    """d-regular and lambda_2 < theta(d, 1) implies kappa' >= 2."""
    f = _facts(G, facts)
    gate = _regular_gate(KAPPA_PRIME_2, f, 1)
    if gate:
        return gate
    return _implication(KAPPA_PRIME_2, f, theta(f.d, 1), f.kappa_prime, 2)


def check_thm_kappa_prime_t(G: Multigraph, t: int, facts: Optional[GraphFacts] = None) -> TheoremVerdict:
    """d-regular and lambda_2 < d-t (even t) or d-t+1 (odd t) implies kappa' >= t+1."""
    if t < 2:
        raise ValueError(f"t must be at least 2, got {t}")
    f = _facts(G, facts)
    gate = _regular_gate(KAPPA_PRIME_T, f, t, parameter=t)
    if gate:
        return gate
    return _implication(KAPPA_PRIME_T, f, theta(f.d, t), f.kappa_prime, t + 1, parameter=t)


def check_main_kappa_2(G: Multigraph, facts: Optional[GraphFacts] = None) -> TheoremVerdict:
    """d-regular, not 2 vertices, and lambda_2 < 3d/4 implies kappa >= 2."""
    f = _facts(G, facts)
    if G.n < 2:
        return _exempt(MAIN, f, "single_vertex")
    if f.d is None:
        return _exempt(MAIN, f, "irregular")
    if G.n == 2:
        return _exempt(MAIN, f, "two_vertex")
    return _implication(MAIN, f, 0.75 * f.d, f.kappa, 2)


def check_alpha_observation(G: Multigraph, facts: Optional[GraphFacts] = None) -> TheoremVerdict:
    """The alpha(G)-th largest adjacency eigenvalue is non-negative."""
    f = _facts(G, facts)
    if G.n < 1:
        return _exempt(ALPHA, f, "empty")
    a = f.alpha
    value = f.adjacency[a - 1]
    return TheoremVerdict(
        ALPHA, G.n, f.degree_range, f.m,
        premise_value=float(a), threshold=0.0, premise_holds=True,
        conclusion_value=value, conclusion_holds=value >= -GUARD, margin=value,
    )


def c_gap(G: Multigraph, facts: Optional[GraphFacts] = None) -> float:
    """mu_2(G) - kappa'(G)."""
    if G.n < 2:
        raise ValueError("c_gap needs at least 2 vertices")
    f = _facts(G, facts)
    return f.mu2 - f.kappa_prime


def check_all(G: Multigraph, suite: str = "all", facts: Optional[GraphFacts] = None) -> list[TheoremVerdict]:
    """Run every checker in ``suite``; kappa'_t runs for each t in 2..d-1."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    f = _facts(G, facts)
    out = []
    for tid in SUITES[suite]:
        if tid == FIEDLER:
            out.append(check_fiedler_multigraph(G, f))
        elif tid == COROLLARY:
            out.append(check_corollary_edge(G, f))
        elif tid == KAPPA_PRIME_2:
            out.append(check_thm_kappa_prime_2(G, f))
        elif tid == KAPPA_PRIME_T:
            if G.n >= 2 and f.d is not None and f.d >= 3:
                out.extend(check_thm_kappa_prime_t(G, t, f) for t in range(2, f.d))
            else:
                out.append(_exempt(KAPPA_PRIME_T, f, "t_out_of_range" if f.d is not None else "irregular"))
        elif tid == MAIN:
            out.append(check_main_kappa_2(G, f))
        elif tid == ALPHA:
            out.append(check_alpha_observation(G, f))
    return out


# -- sampling models ---------------------------------------------------------


@dataclass(frozen=True)
class RegularModel:
    """Configuration-model regular multigraphs with n, d drawn per trial."""

    n_min: int = 3
    n_max: int = 12
    d_min: int = 2
    d_max: int = 10

    def __post_init__(self):
        if not (2 <= self.n_min <= self.n_max and 0 <= self.d_min <= self.d_max):
            raise ValueError(f"invalid model ranges {self}")
        if not any(n * d % 2 == 0 for n in range(self.n_min, self.n_max + 1)
                   for d in range(self.d_min, self.d_max + 1)):
            raise ValueError(f"no (n, d) with n*d even in {self}")

    def sample(self, trial_seed: int) -> Multigraph:
        rng = SplitMix64(trial_seed)
        while True:
            n = rng.randint(self.n_min, self.n_max)
            d = rng.randint(self.d_min, self.d_max)
            if n * d % 2 == 0:
                return random_regular_multigraph(n, d, rng.next())

    def describe(self) -> dict:
        return {"model": "configuration", "n": [self.n_min, self.n_max], "d": [self.d_min, self.d_max]}


@dataclass(frozen=True)
class RandomModel:
    """Irregular random multigraphs: pairs present w.p. density, multiplicity 1..max_mult."""

    n_min: int = 2
    n_max: int = 8
    max_mult: int = 4

    def __post_init__(self):
        if not (1 <= self.n_min <= self.n_max and self.max_mult >= 1):
            raise ValueError(f"invalid model ranges {self}")

    def sample(self, trial_seed: int) -> Multigraph:
        rng = SplitMix64(trial_seed)
        n = rng.randint(self.n_min, self.n_max)
        density = 0.2 + 0.7 * rng.random()
        return random_multigraph(n, rng.randint(1, self.max_mult), rng.next(), density)

    def describe(self) -> dict:
        return {"model": "random", "n": [self.n_min, self.n_max], "max_mult": self.max_mult}


@dataclass(frozen=True)
class FamilySweep:
    """Every valid H_{d,t} with d <= d_max and 2 <= t <= t_max, in (t, d) order."""

    d_max: int = 36
    t_max: int = 4

    def graphs(self) -> list[tuple[int, int]]:
        return [
            (d, t)
            for t in range(2, self.t_max + 1)
            for d in range(3, self.d_max + 1)
            if d % (t * (t - 1)) == 0
        ]

    def sample_index(self, i: int) -> Multigraph:
        d, t = self.graphs()[i]
        return build_H(d, t)

    def describe(self) -> dict:
        return {"model": "family_H", "d_max": self.d_max, "t_max": self.t_max}


@dataclass
class CampaignReport:
    trials: int
    seed: int
    model: dict
    suite: str
    checked: dict = field(default_factory=dict)
    premise_true: dict = field(default_factory=dict)
    exempt: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    extremes: dict = field(default_factory=dict)
    best_gap: Optional[tuple[float, int, Multigraph]] = None
    errors: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations and not self.errors

    def _record(self, trial: int, v: TheoremVerdict) -> None:
        key = v.theorem_id
        if v.exempt:
            self.exempt.setdefault(key, {})
            self.exempt[key][v.exempt_reason] = self.exempt[key].get(v.exempt_reason, 0) + 1
            return
        self.checked[key] = self.checked.get(key, 0) + 1
        if v.premise_holds:
            self.premise_true[key] = self.premise_true.get(key, 0) + 1
        if v.violated:
            self.violations.append((trial, v))
        if v.margin is not None:
            best = self.extremes.get(key)
            if best is None or v.margin < best[0]:
                self.extremes[key] = (v.margin, trial, v)

    def as_dict(self) -> dict:
        from multispec.io import render_graph

        return {
            "trials": self.trials,
            "seed": self.seed,
            "model": self.model,
            "suite": self.suite,
            "passed": self.passed,
            "checked": dict(sorted(self.checked.items())),
            "premise_true": dict(sorted(self.premise_true.items())),
            "exempt": {k: dict(sorted(v.items())) for k, v in sorted(self.exempt.items())},
            "violations": [{"trial": t, **v.as_dict()} for t, v in self.violations],
            "extremes": {
                k: {"margin": m, "trial": t, "verdict": v.as_dict()}
                for k, (m, t, v) in sorted(self.extremes.items())
            },
            "best_gap": None if self.best_gap is None else {
                "gap": self.best_gap[0], "trial": self.best_gap[1],
                "graph": render_graph(self.best_gap[2]),
            },
            "errors": self.errors,
        }


def _iter_graphs(model, trials: int, seed: int) -> Iterator[tuple[int, Multigraph]]:
    if isinstance(model, FamilySweep):
        pairs = model.graphs()
        for i in range(min(trials, len(pairs))):
            yield i, model.sample_index(i)
        return
    for i in range(trials):
        yield i, model.sample(derive_seed(seed, i))


def run_campaign(model, trials: int, seed: int, suite: str = "all") -> CampaignReport:
    """Sample ``trials`` graphs from ``model`` and run the ``suite`` checkers on each.

    Trial i uses seed ``derive_seed(seed, i)``, so the report depends only on
    (model, trials, seed, suite).
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    report = CampaignReport(trials, seed, model.describe(), suite)
    for i, G in _iter_graphs(model, trials, seed):
        f = GraphFacts(G)
        try:
            for v in check_all(G, suite, f):
                report._record(i, v)
            if G.n >= 2 and not f.complete:
                gap = c_gap(G, f)
                if report.best_gap is None or gap > report.best_gap[0]:
                    report.best_gap = (gap, i, G)
        except (ArithmeticError, RuntimeError, ValueError) as exc:
            report.errors.append({"trial": i, "error": f"{type(exc).__name__}: {exc}"})
    return report


def explore_c_gap(trials: int, seed: int, n_max: int = 7, max_mult: int = 6, steps: int = 30):
    """Random restarts plus greedy multiplicity mutations maximizing mu_2 - kappa'.

    Graphs with a complete underlying graph are skipped: there the gap grows
    without bound (K_2 with k parallel edges has gap k). Returns
    ``(best_gap, witness_graph)``, an empirical supremum only.
    """
    best: Optional[tuple[float, Multigraph]] = None
    model = RandomModel(2, n_max, max_mult)
    for i in range(trials):
        rng = SplitMix64(derive_seed(seed, i))
        G = model.sample(rng.next())
        if G.n < 3 or is_underlying_complete(G):
            continue
        gap = c_gap(G)
        for _ in range(steps):
            u = rng.below(G.n)
            v = rng.below(G.n - 1)
            v = v + 1 if v >= u else v
            mult = dict(G.mult)
            key = (min(u, v), max(u, v))
            new = mult.get(key, 0) + (1 if rng.below(2) else -1)
            if new < 0 or new > max_mult:
                continue
            mult[key] = new
            H = Multigraph(G.n, mult)
            if is_underlying_complete(H):
                continue
            h_gap = c_gap(H)
            if h_gap > gap:
                G, gap = H, h_gap
        if best is None or gap > best[0]:
            best = (gap, G)
    if best is None:
        raise ValueError("no non-complete sample drawn; raise trials")
    return best


def lambda2_table(model: RegularModel, trials: int, seed: int) -> list[dict]:
    """Raw (n, d, lambda_2, kappa, kappa') rows for sampled regular graphs."""
    rows = []
    for i in range(trials):
        G = model.sample(derive_seed(seed, i))
        f = GraphFacts(G)
        rows.append({"n": G.n, "d": f.d, "lambda2": f.lambda2, "kappa": f.kappa, "kappa_prime": f.kappa_prime})
    return rows
