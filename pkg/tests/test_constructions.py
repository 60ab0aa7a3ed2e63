import math

import numpy as np
import pytest

from goodsign.conference import ConferenceMatrix, paley_conference
from goodsign.constructions import (
    case_cells,
    case_quotient_eigenvalues,
    case_quotient_matrix,
    lex_k2_signing,
    lex_k4_signing,
    lift_pairing,
    pair_cell_partition,
    sign_complete_from_conference,
    signing_equivalence,
    switching_witness_cycle,
    two_lift,
    two_lift_signed,
)
from goodsign.graphs import (
    Graph,
    SignedGraph,
    complete_graph,
    cycle_graph,
    is_bipartite,
    signed_adjacency,
)
from goodsign.partition import is_equitable, quotient_eigenvalues, quotient_matrix
from goodsign.refdata import reference_matrix
from goodsign.reproduce import EXPECTED_LIFT_EDGES, cycle_cover_base
from goodsign.spectra import eigenvalues_symmetric, multisets_close, spectral_radius

RNG = np.random.default_rng(987654321)


def random_signing(g, rng=RNG):
    return SignedGraph(g, {e: int(rng.choice([-1, 1])) for e in g.edge_list})


# -- complete-graph families ---------------------------------------------------


def test_case_1_and_2_match_references():
    c = paley_conference(5)
    a1 = signed_adjacency(sign_complete_from_conference(c, 1))
    assert np.array_equal(a1, reference_matrix("k7_case1"))
    a2 = signed_adjacency(sign_complete_from_conference(c, 2))
    assert np.array_equal(a2, reference_matrix("k8_case2"))


@pytest.mark.parametrize("case", [1, 2, 3])
def test_case_sizes_and_quotients(case):
    c = paley_conference(5)
    sg = sign_complete_from_conference(c, case)
    assert sg.graph.edges == complete_graph(6 + case).edges
    b = quotient_matrix(sg, case_cells(case, 6))
    assert np.array_equal(b.matrix, case_quotient_matrix(case, 6))


@pytest.mark.parametrize("q", [13, 17])
@pytest.mark.parametrize("case", [1, 2, 3])
def test_cases_scale_to_larger_cores(case, q):
    c = paley_conference(q)
    n = q + 1
    sg = sign_complete_from_conference(c, case)
    b = quotient_matrix(sg, case_cells(case, n))
    assert np.array_equal(b.matrix, case_quotient_matrix(case, n))
    assert multisets_close(quotient_eigenvalues(b), case_quotient_eigenvalues(case, n), 1e-9)


def test_construction_input_validation():
    c = paley_conference(5)
    with pytest.raises(ValueError):
        sign_complete_from_conference(c, 4)
    d = np.ones(6, dtype=np.int64)
    d[2] = -1
    switched = ConferenceMatrix(d[:, None] * c.matrix * d[None, :], normalized=False)
    with pytest.raises(ValueError):
        sign_complete_from_conference(switched, 1)
    with pytest.raises(ValueError):
        case_quotient_eigenvalues(1, 5)  # order below 6


def test_case_quotient_eigenvalue_values():
    e1 = case_quotient_eigenvalues(1, 6)
    r41 = math.sqrt(41)
    assert np.allclose(e1, [(1 - r41) / 2, -1.0, (1 + r41) / 2])
    assert np.allclose(case_quotient_eigenvalues(2, 6), [-3.0, -1.0, -1.0, 5.0])
    r21 = math.sqrt(21)
    assert np.allclose(case_quotient_eigenvalues(3, 6), [-r21, 0.0, r21])


@pytest.mark.parametrize("case", [1, 2, 3])
def test_case_quotient_eigenvalues_match_numerics(case):
    b = quotient_matrix(
        sign_complete_from_conference(paley_conference(5), case), case_cells(case, 6)
    )
    assert multisets_close(quotient_eigenvalues(b), case_quotient_eigenvalues(case, 6), 1e-9)


def test_case_rhos():
    c = paley_conference(5)
    rho1 = spectral_radius(signed_adjacency(sign_complete_from_conference(c, 1)))
    assert abs(rho1 - (1 + math.sqrt(41)) / 2) < 1e-9
    rho2 = spectral_radius(signed_adjacency(sign_complete_from_conference(c, 2)))
    assert abs(rho2 - 5.0) < 1e-9
    rho3 = spectral_radius(signed_adjacency(sign_complete_from_conference(c, 3)))
    assert abs(rho3 - math.sqrt(21)) < 1e-9


# -- products -------------------------------------------------------------------


def test_lex_k2_single_edge_uniform_block():
    k2 = complete_graph(2)
    h1 = SignedGraph.all_plus(k2)
    h2 = SignedGraph.all_plus(Graph(2, frozenset()))
    product = lex_k2_signing(k2, h1, h2)
    assert all(s == 1 for s in product.signs.values())
    rho = spectral_radius(signed_adjacency(product))
    assert abs(rho - 2.0) < 1e-9  # twice the single-edge rho


def test_lex_k2_single_edge_alternating_block():
    k2 = complete_graph(2)
    h1 = SignedGraph.all_plus(Graph(2, frozenset()))
    h2 = SignedGraph.all_plus(k2)
    product = lex_k2_signing(k2, h1, h2)
    assert product.sign(0, 2) == 1 and product.sign(1, 3) == 1
    assert product.sign(0, 3) == -1 and product.sign(1, 2) == -1
    eig = eigenvalues_symmetric(signed_adjacency(product))
    assert multisets_close(eig, [-2.0, 0.0, 0.0, 2.0], 1e-9)
    assert spectral_radius(signed_adjacency(product)) <= 2.0 + 1e-9


def test_lex_k2_rejects_bad_decomposition():
    g, h1, h2 = cycle_cover_base()
    s1 = SignedGraph.all_plus(h1)
    with pytest.raises(ValueError):
        lex_k2_signing(g, s1, s1)


def test_lex_k2_two_sided_bound():
    g, h1, h2 = cycle_cover_base()
    for _ in range(5):
        s1, s2 = random_signing(h1), random_signing(h2)
        product = lex_k2_signing(g, s1, s2)
        rho = spectral_radius(signed_adjacency(product))
        cap = 2 * max(
            spectral_radius(signed_adjacency(s1)), spectral_radius(signed_adjacency(s2))
        )
        assert rho <= cap + 1e-8


def test_lex_k4_single_edge():
    k2 = complete_graph(2)
    product = lex_k4_signing(k2, SignedGraph.all_plus(k2))
    assert product.graph.n == 8 and len(product.graph.edges) == 16
    assert product.sign(0, 4) == -1  # parallel edge flips
    assert product.sign(0, 5) == 1
    eig = eigenvalues_symmetric(signed_adjacency(product))
    assert multisets_close(eig, [-2, -2, -2, -2, 2, 2, 2, 2], 1e-9)


@pytest.mark.parametrize(
    "base", [complete_graph(4), cycle_graph(5), complete_graph(3)]
)
def test_lex_k4_doubles_the_spectral_radius(base):
    for _ in range(3):
        sigma = random_signing(base)
        product = lex_k4_signing(base, sigma)
        assert abs(
            spectral_radius(signed_adjacency(product))
            - 2 * spectral_radius(signed_adjacency(sigma))
        ) <= 2e-8


def test_lex_k4_cell_quotient_doubles_the_signing():
    base = complete_graph(4)
    sigma = random_signing(base)
    product = lex_k4_signing(base, sigma)
    cells = [tuple(range(4 * x, 4 * x + 4)) for x in range(4)]
    from goodsign.partition import Partition

    p = Partition.from_cells(cells)
    ok, _ = is_equitable(product, p)
    assert ok
    assert np.array_equal(quotient_matrix(product, p).matrix, 2 * signed_adjacency(sigma))


def test_lex_k4_rejects_foreign_signing():
    with pytest.raises(ValueError):
        lex_k4_signing(complete_graph(3), SignedGraph.all_plus(complete_graph(4)))


# -- lifts ----------------------------------------------------------------------


def test_all_plus_lift_is_two_copies():
    g = cycle_graph(5)
    lifted = two_lift(g, SignedGraph.all_plus(g))
    expected = {(2 * u, 2 * v) for u, v in g.edge_list}
    expected |= {(2 * u + 1, 2 * v + 1) for u, v in g.edge_list}
    assert lifted.edges == frozenset(expected)
    assert not lifted.is_connected()
    assert multisets_close(
        eigenvalues_symmetric(lifted.adjacency()),
        np.repeat(eigenvalues_symmetric(g.adjacency()), 2),
        1e-9,
    )


def test_all_minus_lift_is_bipartite_double_cover():
    g = cycle_graph(5)
    lifted = two_lift(g, SignedGraph.all_minus(g))
    assert is_bipartite(lifted) is not None
    assert lifted.is_connected()  # odd cycle has a connected double cover
    assert lifted.degrees == tuple(g.degree(u // 2) for u in range(10))


def test_bundled_lift_pairing(lift_pair):
    g, sigma, sigma_alt = lift_pair
    tau = SignedGraph(g, {e: sigma.signs[e] * sigma_alt.signs[e] for e in g.edge_list})
    assert lift_pairing(tau).crossed == {(0, 1)}
    assert two_lift(g, tau).edges == EXPECTED_LIFT_EDGES


def test_lift_spectrum_merges_base_and_pairing():
    for trial in range(8):
        n = int(RNG.integers(3, 8))
        mask = RNG.random(n * (n - 1) // 2) < 0.6
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        g = Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])
        tau = random_signing(g)
        lifted = two_lift(g, tau)
        merged = np.concatenate(
            [
                eigenvalues_symmetric(g.adjacency()),
                eigenvalues_symmetric(signed_adjacency(tau)),
            ]
        )
        assert multisets_close(eigenvalues_symmetric(lifted.adjacency()), merged, 1e-8)


def test_signed_lift_matches_reference(lift_pair):
    g, sigma, sigma_alt = lift_pair
    lifted = two_lift_signed(g, sigma, sigma_alt)
    assert np.array_equal(signed_adjacency(lifted), reference_matrix("lift8"))


def test_signed_lift_with_equal_signings_is_two_copies(lift_pair):
    g, sigma, _ = lift_pair
    lifted = two_lift_signed(g, sigma, sigma)
    base_eig = eigenvalues_symmetric(signed_adjacency(sigma))
    assert multisets_close(
        eigenvalues_symmetric(signed_adjacency(lifted)), np.repeat(base_eig, 2), 1e-9
    )
    assert abs(
        spectral_radius(signed_adjacency(lifted)) - spectral_radius(signed_adjacency(sigma))
    ) < 1e-9


def test_signed_lift_cell_quotient_is_second_signing(lift_pair):
    g, sigma, sigma_alt = lift_pair
    lifted = two_lift_signed(g, sigma, sigma_alt)
    p = pair_cell_partition(g.n)
    ok, _ = is_equitable(lifted, p)
    assert ok
    assert np.array_equal(quotient_matrix(lifted, p).matrix, signed_adjacency(sigma_alt))


def test_signed_lift_spectrum_splits(lift_pair):
    g, _, _ = lift_pair
    for _ in range(6):
        s1, s2 = random_signing(g), random_signing(g)
        lifted = two_lift_signed(g, s1, s2)
        merged = np.concatenate(
            [
                eigenvalues_symmetric(signed_adjacency(s1)),
                eigenvalues_symmetric(signed_adjacency(s2)),
            ]
        )
        assert multisets_close(
            eigenvalues_symmetric(signed_adjacency(lifted)), merged, 1e-8
        )


def test_lift_degree_preservation():
    g = cycle_cover_base()[0]
    tau = random_signing(g)
    lifted = two_lift(g, tau)
    for u in range(g.n):
        assert lifted.degree(2 * u) == g.degree(u)
        assert lifted.degree(2 * u + 1) == g.degree(u)


# -- switching equivalence --------------------------------------------------------


def test_equivalence_identity_and_single_switch():
    g = complete_graph(4)
    sigma = random_signing(g)
    d = signing_equivalence(g, sigma, sigma)
    assert d is not None and np.all(d == 1)
    flipped = sigma.switched([1, 1, -1, 1])
    d = signing_equivalence(g, sigma, flipped)
    a = signed_adjacency(sigma)
    assert np.array_equal(np.diag(d) @ a @ np.diag(d), signed_adjacency(flipped))


def test_equivalence_recovers_random_switchings():
    g = complete_graph(5)
    for _ in range(25):
        sigma = random_signing(g)
        diag = [int(x) for x in RNG.choice([-1, 1], size=5)]
        switched = sigma.switched(diag)
        d = signing_equivalence(g, sigma, switched)
        assert d is not None
        assert np.array_equal(
            np.diag(d) @ signed_adjacency(sigma) @ np.diag(d), signed_adjacency(switched)
        )


def test_inequivalent_cycle_classes():
    c4 = cycle_graph(4)
    plus = SignedGraph.all_plus(c4)
    signs = {e: 1 for e in c4.edge_list}
    signs[(0, 1)] = -1
    minus_one = SignedGraph(c4, signs)
    assert signing_equivalence(c4, plus, minus_one) is None
    # brute force over all 16 diagonals confirms absence
    a, b = signed_adjacency(plus), signed_adjacency(minus_one)
    for mask in range(16):
        d = np.diag([1 if (mask >> i) & 1 else -1 for i in range(4)])
        assert not np.array_equal(d @ a @ d, b)


def test_witness_cycle_has_differing_sign_product():
    c4 = cycle_graph(4)
    plus = SignedGraph.all_plus(c4)
    signs = {e: 1 for e in c4.edge_list}
    signs[(0, 1)] = -1
    minus_one = SignedGraph(c4, signs)
    cycle = switching_witness_cycle(c4, plus, minus_one)
    assert cycle is not None and len(cycle) >= 3
    prod_plus = prod_minus = 1
    for i, u in enumerate(cycle):
        v = cycle[(i + 1) % len(cycle)]
        prod_plus *= plus.sign(u, v)
        prod_minus *= minus_one.sign(u, v)
    assert prod_plus != prod_minus
    assert switching_witness_cycle(c4, plus, plus) is None


def test_equivalence_per_component():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    sigma = SignedGraph.all_plus(g)
    switched = sigma.switched([1, -1, -1, 1])
    d = signing_equivalence(g, sigma, switched)
    assert d is not None
    assert np.array_equal(
        np.diag(d) @ signed_adjacency(sigma) @ np.diag(d), signed_adjacency(switched)
    )


def test_equivalence_rejects_mismatched_graphs():
    with pytest.raises(ValueError):
        signing_equivalence(
            complete_graph(3),
            SignedGraph.all_plus(complete_graph(3)),
            SignedGraph.all_plus(complete_graph(4)),
        )
