import numpy as np
import pytest

from goodsign.conference import paley_conference
from goodsign.constructions import case_cells, pair_cell_partition, sign_complete_from_conference
from goodsign.graphs import SignedGraph, complete_graph, cycle_graph, path_graph, signed_adjacency
from goodsign.partition import (
    NotEquitableError,
    Partition,
    characteristic_matrix,
    is_equitable,
    quotient_eigenvalues,
    quotient_matrix,
    signed_degree,
    verify_quotient_identity,
)
from goodsign.refdata import reference_matrix
from goodsign.spectra import eigenvalues_symmetric, multiset_within


def case_signing(case):
    return sign_complete_from_conference(paley_conference(5), case)


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition.from_cells([[0, 1], [1, 2]])  # overlap
    with pytest.raises(ValueError):
        Partition.from_cells([[0], [2]])  # gap
    with pytest.raises(ValueError):
        Partition.from_cells([[0], []])  # empty cell
    p = Partition.from_cells([[2, 0], [1]])
    assert p.cells == ((0, 2), (1,))
    assert p.n == 3 and p.size == 2
    assert p.cell_index(1) == 1


def test_signed_degree_examples():
    k4 = SignedGraph.all_plus(complete_graph(4))
    assert signed_degree(k4, 0, [1, 2, 3]) == 3
    assert signed_degree(k4, 0, []) == 0
    sg = SignedGraph.from_adjacency(reference_matrix("sign4"))
    # vertex 1 into {0, 2, 3}: signs +1, +1, -1
    assert signed_degree(sg, 1, [0, 2, 3]) == 1
    with pytest.raises(ValueError):
        signed_degree(k4, 5, [0])
    with pytest.raises(ValueError):
        signed_degree(k4, 0, [9])


def test_is_equitable_trivial_partitions():
    sg = SignedGraph.from_adjacency(reference_matrix("sign4"))
    ok, witness = is_equitable(sg, Partition.singletons(4))
    assert ok and witness is None
    k4 = SignedGraph.all_plus(complete_graph(4))
    ok, _ = is_equitable(k4, Partition.single_cell(4))
    assert ok


def test_is_equitable_witness():
    sg = SignedGraph.all_plus(path_graph(3))
    ok, witness = is_equitable(sg, Partition.from_cells([[0, 1], [2]]))
    assert not ok
    assert witness.cell == 0 and witness.target_cell == 1
    assert {witness.degree_a, witness.degree_b} == {0, 1}


@pytest.mark.parametrize("case", [1, 2, 3])
def test_case_partitions_are_equitable(case):
    ok, witness = is_equitable(case_signing(case), case_cells(case, 6))
    assert ok, witness


def test_characteristic_matrix_shapes():
    assert np.array_equal(characteristic_matrix(Partition.singletons(3)), np.eye(3, dtype=np.int64))
    assert np.array_equal(
        characteristic_matrix(Partition.single_cell(3)), np.ones((3, 1), dtype=np.int64)
    )
    p = pair_cell_partition(3)
    m = characteristic_matrix(p)
    assert m.shape == (6, 3)
    # interleaved pair cells: transposed rows look like [1, 1, 0, ...]
    assert np.array_equal(m.T[0], [1, 1, 0, 0, 0, 0])
    assert np.array_equal(m.T[1], [0, 0, 1, 1, 0, 0])
    assert np.all(m.sum(axis=1) == 1)
    assert list(m.sum(axis=0)) == [len(c) for c in p.cells]
    with pytest.raises(ValueError):
        characteristic_matrix(p, 7)


def test_quotient_matrices_match_expected():
    b1 = quotient_matrix(case_signing(1), case_cells(1, 6))
    assert np.array_equal(b1.matrix, [[0, 1, 5], [1, 0, 5], [1, 1, 0]])
    b3 = quotient_matrix(case_signing(3), case_cells(3, 6))
    assert np.array_equal(b3.matrix, [[-1, 0, 5], [0, 1, 5], [2, 2, 0]])


def test_singleton_quotient_is_the_signed_adjacency():
    sg = SignedGraph.from_adjacency(reference_matrix("sign4"))
    b = quotient_matrix(sg, Partition.singletons(4))
    assert np.array_equal(b.matrix, signed_adjacency(sg))


def test_quotient_requires_equitable():
    sg = SignedGraph.all_plus(path_graph(3))
    with pytest.raises(NotEquitableError) as err:
        quotient_matrix(sg, Partition.from_cells([[0, 1], [2]]))
    assert err.value.witness.target_cell == 1


def test_quotient_identity_and_powers():
    for case in (1, 2, 3):
        sg = case_signing(case)
        p = case_cells(case, 6)
        b = quotient_matrix(sg, p)
        assert verify_quotient_identity(sg, p, b)
        a = signed_adjacency(sg)
        pm = characteristic_matrix(p)
        for r in (2, 3):
            assert np.array_equal(
                np.linalg.matrix_power(a, r) @ pm,
                pm @ np.linalg.matrix_power(b.matrix, r),
            )


def test_quotient_identity_rejects_perturbation():
    sg = case_signing(1)
    p = case_cells(1, 6)
    b = quotient_matrix(sg, p).matrix.copy()
    b[0, 1] += 1
    assert not verify_quotient_identity(sg, p, b)
    assert not verify_quotient_identity(sg, p, np.zeros((2, 2), dtype=np.int64))


def test_one_cell_quotient_of_constant_net_degree():
    k4 = SignedGraph.all_plus(complete_graph(4))
    assert np.array_equal(quotient_matrix(k4, Partition.single_cell(4)).matrix, [[3]])
    c4 = cycle_graph(4)
    alternating = SignedGraph(c4, {(0, 1): 1, (1, 2): -1, (2, 3): 1, (0, 3): -1})
    assert np.array_equal(quotient_matrix(alternating, Partition.single_cell(4)).matrix, [[0]])


def test_quotient_eigenvalues_against_lapack_oracle():
    for case in (1, 2, 3):
        b = quotient_matrix(case_signing(case), case_cells(case, 6))
        ours = quotient_eigenvalues(b)
        oracle = np.sort(np.linalg.eigvals(b.matrix.astype(float)).real)
        assert np.max(np.abs(ours - oracle)) < 1e-9


@pytest.mark.parametrize("case", [1, 2, 3])
def test_quotient_spectrum_embeds_in_signing_spectrum(case):
    sg = case_signing(case)
    b = quotient_matrix(sg, case_cells(case, 6))
    assert multiset_within(
        quotient_eigenvalues(b), eigenvalues_symmetric(signed_adjacency(sg)), 1e-8
    )
