import random

import pytest

from hopfplanar.evaluator import evaluate, evaluate_with_free_slots
from hopfplanar.network import (
    MINUS,
    OTHER,
    PLUS,
    STAR,
    LabeledNetwork,
    NetworkSum,
    Pass,
    disjoint_union,
    validate,
)
from hopfplanar.randomnets import random_element, random_network


def closure(label, box="b", sides=(OTHER, STAR), **kw):
    return LabeledNetwork(
        {box: label}, [[Pass(box, sides[0]), Pass(box, sides[1])]], **kw
    )


def trace_pair(left, right, ids=("L", "R")):
    """Two stacked boxes closed off: loops [[L*,R*],[L°,R°]]."""
    a, b = ids
    return LabeledNetwork(
        {a: left, b: right},
        [[Pass(a, STAR), Pass(b, STAR)], [Pass(a, OTHER), Pass(b, OTHER)]],
    )


def naive_budget(network):
    total = 1
    for label in network.boxes.values():
        total *= max(len(label.comult_pairs()), 1)
    return total


def test_empty_network_is_one(family):
    for algebra in family:
        assert evaluate(LabeledNetwork({}, []), algebra) == 1


def test_free_loops_give_delta_powers(family):
    for algebra in family:
        for k in range(4):
            net = LabeledNetwork({}, [[] for _ in range(k)])
            assert evaluate(net, algebra) == algebra.delta ** k


def test_single_box_closure_is_delta_counit(family):
    rng = random.Random(11)
    for algebra in family:
        labels = algebra.basis_elements() + [random_element(algebra, rng)]
        for a in labels:
            for sides in ((OTHER, STAR), (STAR, OTHER)):
                value = evaluate(closure(a, sides=sides), algebra, method="both")
                assert value == algebra.delta * a.counit()


def test_integral_cap_value(family):
    for algebra in family:
        net = closure(algebra.integral(), sides=(STAR, OTHER))
        assert evaluate(net, algebra, method="both") == algebra.delta ** 3


def test_two_box_trace_closure_is_phi_of_product(family):
    rng = random.Random(23)
    for algebra in family:
        for _ in range(3):
            a = random_element(algebra, rng)
            b = random_element(algebra, rng)
            value = evaluate(trace_pair(a, b), algebra, method="both")
            assert value == (a * b).phi()
            assert value == (b * a).phi()


def test_integral_against_box_gives_delta_squared_counit(family):
    rng = random.Random(31)
    for algebra in family:
        a = random_element(algebra, rng)
        net = LabeledNetwork(
            {"h": algebra.integral(), "a": a},
            [[Pass("h", STAR), Pass("a", STAR)], [Pass("h", OTHER), Pass("a", OTHER)]],
        )
        value = evaluate(net, algebra, method="both")
        assert value == algebra.delta ** 2 * a.counit()


def three_loop_network(labels):
    """Boxes a..d joined into three loops of lengths 3, 3, 2."""
    return LabeledNetwork(
        labels,
        [
            [Pass("c", STAR), Pass("d", OTHER), Pass("a", STAR)],
            [Pass("a", OTHER), Pass("b", OTHER), Pass("c", OTHER)],
            [Pass("d", STAR), Pass("b", STAR)],
        ],
    )


def three_loop_direct(algebra, a, b, c, d):
    """Direct Sweedler expansion of the three-loop state sum."""
    inv_delta = algebra.delta.inverse()
    total = algebra.field.zero
    for ua, va, ka in a.comult_pairs():
        for ub, vb, kb in b.comult_pairs():
            for uc, vc, kc in c.comult_pairs():
                for ud, vd, kd in d.comult_pairs():
                    w1 = (
                        algebra.basis(ua)
                        * algebra.basis(vd).antipode()
                        * algebra.basis(uc)
                    ).phi()
                    if not w1:
                        continue
                    w2 = (
                        algebra.basis(vc).antipode()
                        * algebra.basis(vb).antipode()
                        * algebra.basis(va).antipode()
                    ).phi()
                    if not w2:
                        continue
                    w3 = (algebra.basis(ub) * algebra.basis(ud)).phi()
                    if not w3:
                        continue
                    total = total + ka * kb * kc * kd * w1 * w2 * w3
    return total * inv_delta ** 3


def test_three_loop_state_sum_matches_direct_expansion(family):
    rng = random.Random(47)
    for algebra in family:
        if algebra.n <= 4:
            picks = [random_element(algebra, rng) for _ in range(4)]
        else:
            picks = [algebra.basis(rng.randrange(algebra.n)) for _ in range(4)]
        a, b, c, d = picks
        net = three_loop_network({"a": a, "b": b, "c": c, "d": d})
        method = "both" if naive_budget(net) <= 5000 else "contracted"
        assert evaluate(net, algebra, method=method) == \
            three_loop_direct(algebra, a, b, c, d)


def test_evaluation_is_linear_in_labels(family):
    rng = random.Random(59)
    for algebra in family:
        net = random_network(algebra, rng, max_boxes=2)
        box = sorted(net.boxes)[0]
        a = random_element(algebra, rng)
        b = random_element(algebra, rng)
        combo = net.replace(boxes={**net.boxes, box: a + 3 * b})
        parts = (
            evaluate(net.replace(boxes={**net.boxes, box: a}), algebra)
            + 3 * evaluate(net.replace(boxes={**net.boxes, box: b}), algebra)
        )
        assert evaluate(combo, algebra) == parts


def test_zero_label_evaluates_to_zero(family):
    for algebra in family:
        net = closure(algebra.zero_element())
        assert evaluate(net, algebra, method="both") == 0


def test_storage_choices_are_invisible(family):
    rng = random.Random(61)
    for algebra in family:
        net = random_network(algebra, rng, max_boxes=3)
        if naive_budget(net) > 5000:
            net = random_network(algebra, rng, max_boxes=1)
        reference = evaluate(net, algebra, method="both")

        rotated = net.replace(
            loops=[loop[1:] + loop[:1] if loop else loop for loop in net.loops]
        )
        assert evaluate(rotated, algebra, method="both") == reference

        reordered = net.replace(loops=list(reversed(net.loops)))
        assert evaluate(reordered, algebra) == reference

        reshaded = net.replace(shading=MINUS if net.shading == PLUS else PLUS)
        assert evaluate(reshaded, algebra) == reference

        reflowed = net.replace(flows={b: -f for b, f in net.flows.items()})
        assert evaluate(reflowed, algebra) == reference


def test_disjoint_union_multiplies(family):
    rng = random.Random(67)
    for algebra in family:
        first = random_network(algebra, rng, max_boxes=2)
        second = random_network(algebra, rng, max_boxes=2)
        renamed = LabeledNetwork(
            {f"c_{b}": lbl for b, lbl in second.boxes.items()},
            [[Pass(f"c_{p.box}", p.side) for p in loop] for loop in second.loops],
            shading=first.shading,
            flows={f"c_{b}": f for b, f in second.flows.items()},
        )
        both = disjoint_union(first, renamed)
        assert evaluate(both, algebra) == \
            evaluate(first, algebra) * evaluate(renamed, algebra)


def test_network_sum_evaluation_is_linear(family):
    algebra = family[2]
    rng = random.Random(71)
    a = random_element(algebra, rng)
    b = random_element(algebra, rng)
    total = NetworkSum([(algebra.delta, closure(a)), (-2, closure(b))])
    assert evaluate(total, algebra) == (
        algebra.delta * evaluate(closure(a), algebra)
        - 2 * evaluate(closure(b), algebra)
    )


def test_engines_agree_on_random_corpus(family):
    rng = random.Random(73)
    for algebra in family:
        done = 0
        while done < 8:
            net = random_network(algebra, rng, max_boxes=3)
            if naive_budget(net) > 5000:
                continue
            evaluate(net, algebra, method="both")
            done += 1


def test_free_slot_batching_matches_pointwise(family):
    for algebra in family:
        slot_net = closure(None, box="s")
        for basis, elements in (
            ("standard", algebra.basis_elements()),
            ("dual", algebra.dual_basis()),
        ):
            table = evaluate_with_free_slots(slot_net, algebra, [("s", basis)])
            for i, el in enumerate(elements):
                direct = evaluate(closure(el, box="s"), algebra)
                assert table.get((i,), algebra.field.zero) == direct
        if algebra.n <= 4:
            pair_net = trace_pair(None, None)
            table = evaluate_with_free_slots(
                pair_net, algebra, [("L", "standard"), ("R", "dual")]
            )
            duals = algebra.dual_basis()
            for i in range(algebra.n):
                for j in range(algebra.n):
                    direct = evaluate(
                        trace_pair(algebra.basis(i), duals[j]), algebra
                    )
                    assert table.get((i, j), algebra.field.zero) == direct


def test_validate_rejects_malformed_networks(family):
    algebra = family[0]
    a = algebra.basis(1)
    with pytest.raises(ValueError, match="unlabeled box"):
        validate(LabeledNetwork({"b": a}, [[Pass("q", STAR), Pass("b", OTHER)]]))
    with pytest.raises(ValueError, match="expected exactly 1"):
        validate(LabeledNetwork({"b": a}, [[Pass("b", STAR)]]))
    with pytest.raises(ValueError, match="expected exactly 1"):
        validate(
            LabeledNetwork(
                {"b": a},
                [[Pass("b", STAR), Pass("b", STAR), Pass("b", OTHER)]],
            )
        )
    with pytest.raises(ValueError, match="side"):
        validate(LabeledNetwork({"b": a}, [[Pass("b", "north"), Pass("b", OTHER)]]))
    with pytest.raises(ValueError, match="shading"):
        validate(closure(a, shading="striped"))
    with pytest.raises(ValueError, match="flow"):
        validate(closure(a, flows={"b": 2}))
    with pytest.raises(ValueError, match="not an Element"):
        validate(closure(algebra.delta))
    other = family[1]
    with pytest.raises(ValueError, match="different algebra"):
        validate(
            LabeledNetwork(
                {"b": a, "c": other.basis(0)},
                [
                    [Pass("b", STAR), Pass("b", OTHER)],
                    [Pass("c", STAR), Pass("c", OTHER)],
                ],
            )
        )


def test_evaluate_checks_algebra_membership(family):
    z2, v4 = family[0], family[1]
    net = closure(z2.basis(0))
    with pytest.raises(ValueError, match="different algebra"):
        evaluate(net, v4)
