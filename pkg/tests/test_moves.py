import random

import pytest

from hopfplanar.evaluator import evaluate
from hopfplanar.network import (
    MINUS,
    OTHER,
    PLUS,
    STAR,
    LabeledNetwork,
    MoveError,
    Pass,
    apply_move,
    find_move_sites,
    minus_transform,
)
from hopfplanar.randomnets import (
    MOVES,
    random_element,
    random_network,
    random_network_with_site,
)


def closure(label, box="b", sides=(OTHER, STAR), **kw):
    return LabeledNetwork(
        {box: label}, [[Pass(box, sides[0]), Pass(box, sides[1])]], **kw
    )


def assert_move_preserves_value(algebra, network, move, site):
    before = evaluate(network, algebra)
    after = evaluate(apply_move(network, move, site), algebra)
    assert before == after, (move, site, network)


# -- frozen structural examples -----------------------------------------------


def test_modulus_move_removes_free_loop(family):
    algebra = family[2]
    a = algebra.basis(3)
    net = LabeledNetwork(
        {"b": a}, [[Pass("b", OTHER), Pass("b", STAR)], []]
    )
    assert find_move_sites(net, "M") == [1]
    out = apply_move(net, "M", 1)
    assert len(out) == 1
    coeff, trimmed = out.terms[0]
    assert coeff == algebra.delta
    assert trimmed.loops == ((Pass("b", OTHER), Pass("b", STAR)),)
    assert_move_preserves_value(algebra, net, "M", 1)


def test_unit_move_deletes_box(family):
    algebra = family[2]
    a = algebra.basis(4)
    net = LabeledNetwork(
        {"u": algebra.one(), "a": a},
        [[Pass("u", STAR), Pass("a", STAR)], [Pass("u", OTHER), Pass("a", OTHER)]],
    )
    assert find_move_sites(net, "U") == ["u"]
    out = apply_move(net, "U", "u")
    coeff, res = out.terms[0]
    assert coeff == 1
    assert set(res.boxes) == {"a"}
    assert res.loops == ((Pass("a", STAR),), (Pass("a", OTHER),))
    assert evaluate(net, algebra) == a.phi()
    assert_move_preserves_value(algebra, net, "U", "u")


def test_integral_move_smooths_cap_into_free_loops(family):
    for algebra in family:
        net = closure(algebra.integral(), sides=(STAR, OTHER))
        assert find_move_sites(net, "I") == ["b"]
        out = apply_move(net, "I", "b")
        coeff, res = out.terms[0]
        assert coeff == algebra.delta
        assert res.boxes == {}
        assert res.loops == ((), ())
        assert evaluate(out, algebra) == algebra.delta ** 3


def test_counit_move_contracts_adjacent_pair(family):
    algebra = family[2]
    a = algebra.element([1, 2, 0, 0, 1, 0])
    net = closure(a)
    assert find_move_sites(net, "C") == [(0, 0)]
    out = apply_move(net, "C", (0, 0))
    coeff, res = out.terms[0]
    assert coeff == a.counit()
    assert res.boxes == {}
    assert res.loops == ((),)
    assert_move_preserves_value(algebra, net, "C", (0, 0))


def test_counit_move_wraps_around_storage(family):
    algebra = family[1]
    a = algebra.basis(2)
    c = algebra.basis(1)
    net = LabeledNetwork(
        {"a": a, "c": c},
        [[Pass("a", STAR), Pass("c", STAR), Pass("c", OTHER), Pass("a", OTHER)]],
    )
    # the (a, other) -> (a, star) adjacency crosses the storage seam
    assert (0, 3) in find_move_sites(net, "C")
    assert_move_preserves_value(algebra, net, "C", (0, 3))


def test_trace_move_removes_singleton(family):
    algebra = family[2]
    a = algebra.element([0, 1, 0, 3, 0, 0])
    c = algebra.basis(5)
    net = LabeledNetwork(
        {"a": a, "c": c},
        [[Pass("c", STAR), Pass("c", OTHER), Pass("a", OTHER)], [Pass("a", STAR)]],
    )
    assert find_move_sites(net, "T") == ["a"]
    out = apply_move(net, "T", "a")
    coeff, res = out.terms[0]
    assert coeff == algebra.delta.inverse() * a.phi()
    assert set(res.boxes) == {"c"}
    assert res.loops == ((Pass("c", STAR), Pass("c", OTHER)),)
    assert_move_preserves_value(algebra, net, "T", "a")


def test_exchange_move_term_structure(family):
    algebra = family[2]
    rng = random.Random(5)
    a = random_element(algebra, rng)
    b = random_element(algebra, rng)
    net = LabeledNetwork(
        {"L": a, "R": b},
        [[Pass("L", STAR), Pass("R", STAR)], [Pass("L", OTHER), Pass("R", OTHER)]],
    )
    sites = find_move_sites(net, "E")
    assert (1, 0) in sites
    out = apply_move(net, "E", (1, 0))
    assert len(out) == len(a.comult_pairs())
    for kappa, res in out:
        assert set(res.boxes) == {"L_l", "L_r"}
        assert res.loops == (
            (Pass("L_l", STAR), Pass("L_r", STAR), Pass("L_l", OTHER)),
            (Pass("L_r", OTHER),),
        )
    assert_move_preserves_value(algebra, net, "E", (1, 0))


def test_antipode_move_swaps_sides_and_label(family):
    algebra = family[2]
    a = algebra.element([1, 0, 2, 0, 0, 5])
    net = closure(a)
    out = apply_move(net, "A", "b")
    coeff, res = out.terms[0]
    assert coeff == 1
    assert res.boxes["b"] == a.antipode()
    assert res.loops == ((Pass("b", STAR), Pass("b", OTHER)),)
    assert res.flows == net.flows
    assert_move_preserves_value(algebra, net, "A", "b")


def test_move_errors_on_bad_sites(family):
    algebra = family[0]
    net = closure(algebra.basis(1))
    with pytest.raises(MoveError, match="empty loop"):
        apply_move(net, "M", 0)
    with pytest.raises(MoveError, match="labeled 1"):
        apply_move(net, "U", "b")
    with pytest.raises(MoveError, match="integral"):
        apply_move(net, "I", "b")
    with pytest.raises(MoveError, match="singleton"):
        apply_move(net, "T", "b")
    with pytest.raises(MoveError, match="pattern"):
        apply_move(net, "E", (0, 0))
    with pytest.raises(MoveError, match="box id"):
        apply_move(net, "A", "zz")
    with pytest.raises(MoveError, match="unknown move"):
        apply_move(net, "Q", None)


# -- randomized invariance ---------------------------------------------------------


def test_every_move_preserves_evaluation_randomized(family):
    for ai, algebra in enumerate(family):
        for mi, move in enumerate(MOVES):
            rng = random.Random(1000 + 17 * ai + mi)
            for _ in range(12):
                net, site = random_network_with_site(algebra, rng, move)
                assert_move_preserves_value(algebra, net, move, site)


def test_moves_apply_linearly_to_sums(family):
    algebra = family[1]
    rng = random.Random(83)
    net, site = random_network_with_site(algebra, rng, "A")
    out = apply_move(net, "A", site)
    again = apply_move(out, "A", site)
    assert evaluate(again, algebra) == evaluate(net, algebra)


# -- the shading-reversing transform -------------------------------------------------


def side_swapped(network):
    return network.replace(
        loops=[
            [Pass(p.box, OTHER if p.side == STAR else STAR) for p in loop]
            for loop in network.loops
        ]
    )


def test_minus_transform_on_single_box_closure(family):
    algebra = family[2]
    a = algebra.element([1, 1, 0, 0, 0, 2])
    net = closure(a, sides=(STAR, OTHER))
    out = minus_transform(net)
    assert out.shading == MINUS
    assert out.boxes == net.boxes
    assert out.flows == net.flows
    expected = LabeledNetwork(
        {"b": a}, [[Pass("b", STAR)], [Pass("b", OTHER)]], shading=MINUS
    )
    assert out.same_structure(expected)
    back = minus_transform(out)
    assert back.shading == PLUS
    assert back.same_structure(side_swapped(net))


def test_minus_transform_squares_to_side_swap(family):
    for algebra in family:
        rng = random.Random(algebra.n * 101 + len(algebra.name))
        for _ in range(10):
            net = random_network(algebra, rng, max_boxes=3)
            twice = minus_transform(minus_transform(net))
            assert twice.same_structure(side_swapped(net))
            assert twice.shading == net.shading
            assert twice.flows == net.flows


def test_minus_transform_preserves_counts(family):
    algebra = family[4]
    rng = random.Random(97)
    for _ in range(10):
        net = random_network(algebra, rng, max_boxes=3)
        out = minus_transform(net)
        assert out.empty_loop_count() == net.empty_loop_count()
        assert sum(len(l) for l in out.loops) == sum(len(l) for l in net.loops)
        assert out.boxes == net.boxes
