import itertools
from fractions import Fraction

import pytest

from prismatic.families import figure_f9, paley_graph, petersen_graph
from prismatic.graphs import (
    build_graph,
    complementary_prism,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    path_graph,
    star_graph,
)
from prismatic.morphisms import BudgetExhausted
from prismatic.structural import (
    CHEEGER_BRUTE_MAX_N,
    VERTEX_CONNECTIVITY_BRUTE_MAX_N,
    bound_checks,
    cheeger_brute_force,
    cheeger_closed_form,
    chromatic_number,
    hamiltonian,
    invariants,
    kneser_facts,
    max_clique,
    max_independent_set,
    prism_ham_constructions,
    vertex_connectivity,
    vertex_connectivity_brute,
)


def all_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield build_graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


# -- cliques, independence, colorings -------------------------------------------


def test_max_clique_known_values():
    assert len(max_clique(complete_graph(5))) == 5
    assert len(max_clique(cycle_graph(5))) == 2
    assert len(max_clique(petersen_graph())) == 2
    assert len(max_clique(paley_graph(9))) == 3
    assert max_clique(empty_graph(3)) == (0,) or len(max_clique(empty_graph(3))) == 1


def test_max_independent_set_known_values():
    assert len(max_independent_set(cycle_graph(5))) == 2
    assert len(max_independent_set(petersen_graph())) == 4
    assert len(max_independent_set(complete_graph(4))) == 1
    assert len(max_independent_set(empty_graph(6))) == 6


def test_chromatic_known_values():
    for g, chi in [
        (complete_graph(4), 4),
        (cycle_graph(5), 3),
        (cycle_graph(6), 2),
        (petersen_graph(), 3),
        (paley_graph(9), 3),
        (paley_graph(13), 5),
        (empty_graph(4), 1),
    ]:
        value, coloring, exact = chromatic_number(g)
        assert value == chi and exact
        # returned coloring is proper and uses exactly chi colors
        assert len(set(coloring)) == chi
        for u, v in g.edges():
            assert coloring[u] != coloring[v]


def test_invariant_report_consistency_small():
    for g in (cycle_graph(5), petersen_graph(), paley_graph(9), path_graph(5)):
        inv = invariants(g)
        assert inv.chi >= inv.omega
        assert inv.alpha * inv.chi >= g.n
        assert len(inv.witnesses["independent_set"]) == inv.alpha
        assert len(inv.witnesses["clique"]) == inv.omega
        assert inv.exact


def test_invariants_frozen_nine_vertex_values():
    # independence number, connectivity and chromatic number of the four
    # nine-vertex self-complementary graphs
    expected = {
        1: (3, 4, 3),
        2: (3, 4, 3),
        3: (3, 3, 4),
        4: (3, 4, 4),
    }
    for i, (alpha, kappa, chi) in expected.items():
        inv = invariants(figure_f9(i))
        assert (inv.alpha, inv.kappa, inv.chi) == (alpha, kappa, chi), i


def test_invariants_petersen():
    inv = invariants(petersen_graph())
    assert (inv.alpha, inv.omega, inv.chi, inv.kappa) == (4, 2, 3, 3)


# -- vertex connectivity ---------------------------------------------------------


def test_vertex_connectivity_special_cases():
    assert vertex_connectivity(complete_graph(5)) == (4, None)
    kappa, cut = vertex_connectivity(disjoint_union(complete_graph(2), complete_graph(2)))
    assert kappa == 0 and cut == ()
    assert vertex_connectivity(star_graph(5))[0] == 1
    assert vertex_connectivity(cycle_graph(5))[0] == 2
    assert vertex_connectivity(petersen_graph())[0] == 3


def test_vertex_connectivity_cut_disconnects():
    g = figure_f9(3)
    kappa, cut = vertex_connectivity(g)
    assert kappa == 3
    assert cut == (0, 5, 6)
    remaining = [v for v in range(g.n) if v not in cut]
    assert not g.induced(remaining).is_connected()


def test_vertex_connectivity_agrees_with_brute_force():
    for n in range(2, 5):
        for g in all_graphs(n):
            assert vertex_connectivity(g)[0] == vertex_connectivity_brute(g)
    # deterministic slice of the six-vertex graphs
    pairs = list(itertools.combinations(range(6), 2))
    for mask in range(0, 1 << 15, 531):
        g = build_graph(6, [p for i, p in enumerate(pairs) if mask >> i & 1])
        assert vertex_connectivity(g)[0] == vertex_connectivity_brute(g), mask


def test_vertex_connectivity_brute_rejects_large_input():
    with pytest.raises(ValueError):
        vertex_connectivity_brute(empty_graph(VERTEX_CONNECTIVITY_BRUTE_MAX_N + 1))


# -- Cheeger numbers -------------------------------------------------------------


def test_cheeger_closed_form_values():
    assert cheeger_closed_form(cycle_graph(5)).value == 1
    assert cheeger_closed_form(star_graph(4)).value == Fraction(3, 4)
    assert cheeger_closed_form(complete_graph(2)).value == Fraction(1, 2)
    assert cheeger_closed_form(paley_graph(9)).value == 1


def test_cheeger_witness_ratio_matches_value():
    for g in (cycle_graph(5), star_graph(4), complete_graph(2), path_graph(4)):
        rep = cheeger_closed_form(g)
        prism = complementary_prism(g)
        S, T = rep.witness
        boundary = sum(1 for u in S for w in prism.neighbors(u) if w not in set(S))
        assert Fraction(boundary, len(S)) == rep.value


def test_cheeger_closed_form_agrees_with_brute_force():
    for n in range(1, 5):
        for g in all_graphs(n):
            closed = cheeger_closed_form(g)
            brute = cheeger_brute_force(complementary_prism(g))
            assert closed.value == brute.value, g.edges()


def test_cheeger_brute_on_plain_graphs():
    assert cheeger_brute_force(complete_graph(2)).value == 1
    assert cheeger_brute_force(cycle_graph(4)).value == 1
    assert cheeger_brute_force(path_graph(4)).value == Fraction(1, 2)
    rep = cheeger_brute_force(cycle_graph(6))
    assert rep.value == Fraction(2, 3)
    S, T = rep.witness
    assert 1 <= len(S) <= len(T)


def test_cheeger_brute_input_validation():
    with pytest.raises(ValueError):
        cheeger_brute_force(complete_graph(1))
    with pytest.raises(ValueError):
        cheeger_brute_force(empty_graph(CHEEGER_BRUTE_MAX_N + 1))


# -- Hamiltonian searches ---------------------------------------------------------


def test_hamiltonian_cycles():
    cyc = hamiltonian(cycle_graph(5), "cycle")
    assert cyc is not None and len(cyc) == 5
    g = cycle_graph(5)
    for a, b in zip(cyc, cyc[1:] + [cyc[0]]):
        assert g.has_edge(a, b)
    assert hamiltonian(complete_graph(2), "cycle") is None
    assert hamiltonian(complete_graph(1), "cycle") == [0]


def test_hamiltonian_paths():
    p = hamiltonian(path_graph(4), "path")
    assert p is not None and sorted(p) == [0, 1, 2, 3]
    assert hamiltonian(path_graph(4), "cycle") is None
    assert hamiltonian(star_graph(4), "path") is None


def test_petersen_is_hypohamiltonian_boundary():
    # Hamiltonian path yes, Hamiltonian cycle no
    p = petersen_graph()
    path = hamiltonian(p, "path")
    assert path is not None and len(path) == 10
    for a, b in zip(path, path[1:]):
        assert p.has_edge(a, b)
    assert hamiltonian(p, "cycle") is None


def test_hamiltonian_path_between():
    c4 = cycle_graph(4)
    assert hamiltonian(c4, "path_between", u=0, v=2) is None  # same parity class
    path = hamiltonian(c4, "path_between", u=0, v=1)
    assert path is not None and path[0] == 0 and path[-1] == 1


def test_hamiltonian_connected_mode():
    conn = hamiltonian(complete_graph(4), "connected")
    assert conn is not None and len(conn) == 6
    for (u, v), path in conn.items():
        assert path[0] == u and path[-1] == v and len(path) == 4
    assert hamiltonian(cycle_graph(4), "connected") is None


def test_hamiltonian_mode_validation_and_budget():
    with pytest.raises(ValueError):
        hamiltonian(cycle_graph(4), "tour")
    with pytest.raises(BudgetExhausted):
        hamiltonian(paley_graph(13), "cycle", budget=2)


# -- prism Hamiltonian constructions ------------------------------------------------


def test_prism_ham_p8_paths():
    for g in [paley_graph(9), paley_graph(13)] + [figure_f9(i) for i in range(1, 5)]:
        rep = prism_ham_constructions(g, all_pairs=False)
        path = rep.p8_path
        assert path is not None and len(path) == 2 * g.n
        prism = complementary_prism(g)
        assert sorted(path) == list(range(2 * g.n))
        for a, b in zip(path, path[1:]):
            assert prism.has_edge(a, b)


def test_prism_ham_all_pairs_paley9():
    g = paley_graph(9)
    rep = prism_ham_constructions(g, all_pairs=True)
    conn = rep.ham_connected
    assert conn is not None and len(conn) == 18 * 17 // 2
    prism = complementary_prism(g)
    for (u, v), path in conn.items():
        assert path[0] == u and path[-1] == v
        assert sorted(path) == list(range(18))
        for a, b in zip(path, path[1:]):
            assert prism.has_edge(a, b)


def test_prism_ham_single_vertex():
    rep = prism_ham_constructions(complete_graph(1), all_pairs=False)
    assert rep.p8_path == [0, 1]


def test_prism_ham_unavailable_base():
    rep = prism_ham_constructions(star_graph(4), all_pairs=False)
    assert rep.p8_path is None
    assert rep.notes


# -- inequality reports --------------------------------------------------------------


def test_bound_checks_paley9():
    rep = bound_checks(paley_graph(9))
    assert rep.dam == {
        "kappa": 4,
        "kappa_complement": 4,
        "min_degree": 4,
        "holds": True,
    }
    assert rep.chvatal_erdos["premise_alpha_lt_kappa"] is True
    assert rep.clique_coclique["holds"] is True
    assert rep.clique_coclique["regularity"] == "vertex_transitive"
    assert rep.preimage["fiber_sizes"] == (3, 3, 3)
    assert rep.preimage["all_fibers_alpha"] is True
    assert rep.preimage["alpha_times_omega_equals_n"] is True


def test_bound_checks_pentagon():
    rep = bound_checks(cycle_graph(5))
    assert rep.clique_coclique["holds"] is True  # 2 * 2 <= 5
    # chi = 3 > omega = 2, so the preimage argument does not apply
    assert rep.preimage == "not applicable"


def test_bound_checks_path_not_regular_enough():
    rep = bound_checks(path_graph(4))
    assert rep.clique_coclique == "not applicable"
    assert rep.preimage == "not applicable"


def test_bound_checks_disconnected_complement():
    # complete graphs have a disconnected complement: no connectivity bound
    rep = bound_checks(complete_graph(4))
    assert rep.dam is None


def test_prism_chromatic_exceeds_clique():
    for g in (cycle_graph(5), paley_graph(9), paley_graph(13)):
        prism = complementary_prism(g)
        inv = invariants(prism)
        assert inv.exact
        assert inv.chi > inv.omega


# -- Kneser facts ----------------------------------------------------------------------


def test_kneser_facts_report():
    rep = kneser_facts()
    assert rep.omega_kneser == 2
    assert rep.ekr_clique_size == 84
    assert rep.ekr_survives_edge_deletion is True
    assert rep.min_rule_coloring_proper is True
    assert rep.min_rule_colors == 4
    assert rep.cited_bounds  # recorded but not verified here
