import math

import pytest

from multispec.connectivity import brute_force_edge_connectivity
from multispec.families import (
    build_F,
    build_H,
    build_H1,
    derive_seed,
    random_multigraph,
    random_regular_multigraph,
)
from multispec.multigraph import Multigraph, complete_graph, disjoint_union
from multispec.spectral import lambda_i
from multispec.theorems import (
    ALPHA,
    FIEDLER,
    MAIN,
    SUITES,
    FamilySweep,
    GraphFacts,
    RandomModel,
    RegularModel,
    TheoremVerdict,
    c_gap,
    check_all,
    check_alpha_observation,
    check_corollary_edge,
    check_fiedler_multigraph,
    check_main_kappa_2,
    check_thm_kappa_prime_2,
    check_thm_kappa_prime_t,
    explore_c_gap,
    lambda2_table,
    run_campaign,
    theta,
)

TOL = 1e-8


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Multigraph.from_edges(10, outer + spokes + inner)


def test_theta_examples():
    assert theta(10, 4) == 6
    assert theta(10, 3) == 8
    # 9*25 - 50 + 17 = 192
    assert abs(theta(5, 1) - (4 + math.sqrt(192)) / 4) < 1e-15
    assert abs(theta(5, 1) - (1 + 2 * math.sqrt(3))) < 1e-14
    assert theta(4, 1) == 3.5
    for bad in [(5, 0), (5, 5), (2, 2)]:
        with pytest.raises(ValueError):
            theta(*bad)


@pytest.mark.parametrize("d", range(3, 31))
def test_theta_decreases_within_parity_classes(d):
    for start in (2, 3):
        ts = list(range(start, d, 2))
        vals = [theta(d, t) for t in ts]
        assert all(a > b for a, b in zip(vals, vals[1:]))


def test_fiedler_examples():
    v = check_fiedler_multigraph(build_H(12, 3))
    assert v.conclusion_holds and not v.violated
    assert abs(v.premise_value - 12) < TOL and v.threshold == 12
    assert abs(v.margin) < TOL
    v = check_fiedler_multigraph(petersen())
    # simple graph: reduces to mu_2 <= kappa, here 2 <= 3
    assert v.max_multiplicity == 1 and v.conclusion_holds
    assert abs(v.premise_value - 2) < TOL and v.threshold == 3
    v = check_fiedler_multigraph(complete_graph(4))
    assert v.exempt and v.exempt_reason == "complete_underlying" and not v.violated


def test_corollary_examples():
    v = check_corollary_edge(build_H(12, 3))
    assert v.conclusion_holds and v.conclusion_value == 12
    v = check_corollary_edge(build_F(5))
    assert v.conclusion_holds and v.threshold == 12 and abs(v.premise_value - 4.627718676730986) < TOL
    assert check_corollary_edge(Multigraph(2, {(0, 1): 5})).exempt


def test_kappa_prime_2_examples():
    v = check_thm_kappa_prime_2(build_H1(4))
    assert v.premise_holds and v.threshold == 3.5 and abs(v.premise_value - 3) < TOL
    assert v.conclusion_value == 2 and v.conclusion_holds
    K = complete_graph(4, 2)
    v = check_thm_kappa_prime_2(disjoint_union(K, K))
    assert not v.premise_holds and not v.violated
    for s in range(100):
        G = random_regular_multigraph(8, 4, derive_seed(4, s))
        assert not check_thm_kappa_prime_2(G).violated


def test_kappa_prime_t_examples():
    H = build_H(12, 3)
    v = check_thm_kappa_prime_t(H, 2)
    assert v.premise_holds and v.threshold == 10
    assert v.conclusion_value == brute_force_edge_connectivity(H) == 12
    assert v.conclusion_holds
    G = build_H1(8)
    v = check_thm_kappa_prime_t(G, 2)
    assert lambda_i(G, 2) >= 8 - 2 and not v.premise_holds and not v.violated
    with pytest.raises(ValueError):
        check_thm_kappa_prime_t(H, 1)
    for s in range(200):
        G = random_regular_multigraph(9 - s % 2 * 1, 6, derive_seed(6, s))
        for t in (2, 3):
            assert not check_thm_kappa_prime_t(G, t).violated


def test_main_examples():
    v = check_main_kappa_2(build_H1(4))
    assert not v.premise_holds and v.threshold == 3 and v.conclusion_value == 1
    assert abs(v.margin) < TOL
    v = check_main_kappa_2(Multigraph(2, {(0, 1): 6}))
    assert v.exempt and v.exempt_reason == "two_vertex"
    assert check_main_kappa_2(build_F(5)).exempt_reason == "irregular"


def test_main_never_violated_on_1000_seeds():
    for s in range(1000):
        seed = derive_seed(1606, s)
        n = 3 + seed % 10
        d = 1 + (seed >> 5) % 8
        if n * d % 2:
            d += 1 if d < 8 else -1
        G = random_regular_multigraph(n, d, seed >> 9)
        assert not check_main_kappa_2(G).violated


def test_alpha_examples():
    v = check_alpha_observation(build_H(12, 3))
    assert v.premise_value == 2 and abs(v.conclusion_value) < TOL and v.conclusion_holds
    v = check_alpha_observation(complete_graph(5))
    assert v.premise_value == 1 and abs(v.conclusion_value - 4) < TOL
    for s in range(300):
        seed = derive_seed(300, s)
        G = random_multigraph(1 + seed % 10, 4, seed, density=0.5)
        assert not check_alpha_observation(G).violated


def test_c_gap_examples():
    assert abs(c_gap(build_F(5)) - ((15 - math.sqrt(33)) / 2 - 4)) < TOL
    assert abs(c_gap(build_F(5)) - 0.6277186767) < 1e-9
    with pytest.raises(ValueError):
        c_gap(Multigraph(1))


def test_c_gap_on_F_is_positive_and_reported():
    gaps = {d: c_gap(build_F(d)) for d in range(3, 102, 2)}
    for d, g in gaps.items():
        assert g > 0
        assert abs(g - ((d + 2) - math.sqrt(d * d + 8)) / 2) < 1e-7
    # increasing towards 1 from below
    vals = list(gaps.values())
    assert all(a < b for a, b in zip(vals, vals[1:])) and max(vals) < 1


def test_verdict_violation_formula():
    base = dict(theorem_id="x", n=3, degree_range=(2, 2), max_multiplicity=1,
                premise_value=0.0, threshold=1.0, conclusion_value=0.0)
    for premise in (True, False):
        for conclusion in (True, False):
            for exempt in (True, False):
                v = TheoremVerdict(premise_holds=premise, conclusion_holds=conclusion, exempt=exempt, **base)
                assert v.violated == (premise and not conclusion and not exempt)


def test_check_all_runs_t_range():
    G = random_regular_multigraph(8, 6, 3)
    verdicts = check_all(G)
    ts = [v.parameter for v in verdicts if v.theorem_id == "kappa_prime_t"]
    assert ts == [2, 3, 4, 5] or all(v.exempt for v in verdicts if v.theorem_id == "kappa_prime_t")
    with pytest.raises(ValueError):
        check_all(G, "nope")


def test_campaign_config_model_zero_violations():
    r = run_campaign(RegularModel(8, 8, 4, 4), 100, 42)
    assert r.passed and not r.violations and not r.errors
    assert sum(r.checked.values()) > 0


def test_campaign_family_sweep_hits_sharpness():
    r = run_campaign(FamilySweep(36, 4), 10_000, 0, "fiedler")
    assert r.passed
    n_graphs = len(FamilySweep(36, 4).graphs())
    assert r.checked[FIEDLER] == n_graphs
    assert abs(r.extremes[FIEDLER][0]) < TOL


@pytest.mark.parametrize("t,d", [(t, d) for t in range(2, 6) for d in range(3, 41) if d % (t * (t - 1)) == 0])
def test_fiedler_sharp_on_every_H(d, t):
    v = check_fiedler_multigraph(build_H(d, t))
    assert abs(v.premise_value - v.threshold) < TOL


@pytest.mark.parametrize("d", [4, 8, 12, 16])
def test_main_threshold_attained_by_H1(d):
    assert abs(lambda_i(build_H1(d), 2) - 3 * d / 4) < TOL


def test_campaign_single_trial_matches_direct_checks():
    model = RegularModel(5, 9, 2, 6)
    r = run_campaign(model, 1, 9)
    G = model.sample(derive_seed(9, 0))
    direct = check_all(G)
    assert sum(r.checked.values()) == sum(1 for v in direct if not v.exempt)
    assert sum(r.premise_true.values()) == sum(1 for v in direct if v.premise_holds)


def test_campaign_is_reproducible():
    a = run_campaign(RegularModel(), 60, 5).as_dict()
    b = run_campaign(RegularModel(), 60, 5).as_dict()
    assert a == b
    assert a != run_campaign(RegularModel(), 60, 6).as_dict()


def test_campaign_on_irregular_graphs_marks_exemptions():
    r = run_campaign(RandomModel(3, 8, 4), 80, 2, "all")
    assert r.passed
    assert r.exempt["main_kappa_2"].get("irregular", 0) > 0
    assert r.checked[ALPHA] == 80


def test_campaign_rejects_bad_arguments():
    with pytest.raises(ValueError):
        run_campaign(RegularModel(), 0, 1)
    with pytest.raises(ValueError):
        run_campaign(RegularModel(), 1, 1, "bogus")
    with pytest.raises(ValueError):
        RegularModel(5, 3, 2, 4)


def test_suite_names():
    assert set(SUITES) == {"all", "fiedler", "main", "edge", "alpha"}
    assert MAIN in SUITES["all"]


def test_explorers():
    gap, G = explore_c_gap(20, 3)
    assert gap == pytest.approx(c_gap(G), abs=1e-12)
    assert G.n >= 3
    rows = lambda2_table(RegularModel(4, 6, 3, 4), 5, 1)
    assert len(rows) == 5 and all(r["kappa"] <= r["kappa_prime"] for r in rows)


def test_graph_facts_are_lazy_and_consistent():
    f = GraphFacts(build_H(12, 3))
    assert f.d == 12 and f.m == 4 and not f.complete
    assert (f.kappa, f.kappa_prime, f.alpha) == (3, 12, 2)
