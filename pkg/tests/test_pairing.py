from itertools import product

import pytest

from hopfplanar import exactlin
from hopfplanar.evaluator import evaluate
from hopfplanar.pairing import (
    BudgetError,
    coproduct_tangle_network,
    depth_two_gram,
    depth_two_rank,
    gram,
    gram_is_identity,
    instantiate_template,
    pairing_template,
    reconstruct_structure,
)


def test_pairing_template_shape():
    net, lefts, rights = pairing_template(4)
    assert lefts == ["L1", "L2", "L3"]
    assert rights == ["R1", "R2", "R3"]
    assert len(net.loops) == 4
    assert len(net.loops[0]) == 6
    assert all(len(loop) == 2 for loop in net.loops[1:])
    with pytest.raises(ValueError, match="k >= 2"):
        pairing_template(1)


def test_gram_is_identity_for_two_and_three_slots(family):
    for algebra in family:
        assert gram_is_identity(algebra, 2), algebra.name
        assert gram_is_identity(algebra, 3), algebra.name


def test_gram_is_identity_for_deeper_templates_on_n2(family):
    for algebra in family:
        if algebra.n != 2:
            continue
        assert gram_is_identity(algebra, 4), algebra.name
        assert gram_is_identity(algebra, 5), algebra.name


def test_gram_entries_match_pointwise_evaluation(family):
    for algebra in family:
        if algebra.n > 4:
            continue
        n = algebra.n
        matrix = gram(algebra, 2)
        template, lefts, rights = pairing_template(2)
        duals = algebra.dual_basis()
        scale = algebra.delta.inverse() ** 2
        for i in range(n):
            for j in range(n):
                net = instantiate_template(
                    template, {"L1": algebra.basis(i), "R1": duals[j]}
                )
                direct = evaluate(net, algebra, method="both") * scale
                assert matrix[i][j] == direct


def test_gram_budget_guard(family):
    s3 = family[2]
    with pytest.raises(BudgetError, match="budget"):
        gram(s3, 4)
    # a raised budget admits the same computation
    assert isinstance(gram(s3, 2, max_entries=10 ** 6), list)


def test_instantiate_rejects_partial_labelings(family):
    algebra = family[0]
    template, lefts, rights = pairing_template(2)
    with pytest.raises(ValueError, match="unlabeled"):
        instantiate_template(template, {"L1": algebra.basis(0)})


def test_depth_two_matrix_has_full_rank(family):
    for algebra in family:
        assert depth_two_rank(algebra) == algebra.n ** 2, algebra.name


def test_depth_two_entries_match_pointwise_evaluation(family):
    algebra = family[0]
    n = algebra.n
    matrix = depth_two_gram(algebra)
    duals = algebra.dual_basis()
    net = coproduct_tangle_network()
    scale = algebra.delta.inverse() ** 3
    for u, v, j1, j2 in product(range(n), repeat=4):
        filled = instantiate_template(
            net,
            {
                "X": algebra.basis(u),
                "Y": algebra.basis(v),
                "s": duals[j1],
                "r": duals[j2],
            },
        )
        direct = evaluate(filled, algebra, method="both") * scale
        assert matrix[u * n + v][j1 * n + j2] == direct


def test_corrupted_wiring_loses_rank(family):
    for algebra in family:
        rank = depth_two_rank(algebra, corrupt=True)
        # the cut-off slot factorises out, collapsing the rank to at most n
        assert rank < algebra.n ** 2, algebra.name
        assert rank <= algebra.n, algebra.name


def test_reconstruction_recovers_structure(family):
    for algebra in family:
        report = reconstruct_structure(algebra)
        assert report["comult_matches"], algebra.name
        assert report["counit_matches"], algebra.name
        assert report["antipode_matches"], algebra.name
        assert report["depth_two_rank"] == report["full_rank"]
