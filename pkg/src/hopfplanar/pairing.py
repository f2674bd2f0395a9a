"""Iterated trace pairings, depth-two tangles, and structure reconstruction.

The k-slot pairing template joins k-1 left boxes and k-1 right boxes into
one outer loop threading all star passes and k-1 inner loops pairing each
left/right couple; normalised by delta^{-k} it pairs the left slot labels
against the right ones.  Filling the left slots with basis elements and the
right slots with trace-dual basis elements must give the identity matrix,
which is the exact statement that the k-slot space has dimension n^{k-1}.

The depth-two tangles go one step further: a three-loop wiring of two free
slots against two dual probes whose matrix has full rank n^2, and against
which a single-box network solves for the comultiplication.  Together with
two smaller probes this reconstructs the full Hopf structure (comult,
counit, antipode) from network evaluations alone.
"""

from __future__ import annotations

from itertools import product

from . import exactlin
from .evaluator import evaluate_with_free_slots
from .network import OTHER, STAR, LabeledNetwork, Pass


class BudgetError(RuntimeError):
    """The requested computation exceeds the configured entry budget."""


def pairing_template(k):
    """The k-slot pairing network with unlabeled slot boxes.

    Returns (network, left ids, right ids); boxes carry None labels and are
    meant to be filled via instantiate_template or left free for batching.
    """
    if k < 2:
        raise ValueError("pairing templates need k >= 2")
    lefts = [f"L{m}" for m in range(1, k)]
    rights = [f"R{m}" for m in range(1, k)]
    outer = [Pass(r, STAR) for r in rights] + \
        [Pass(l, STAR) for l in reversed(lefts)]
    loops = [outer] + [[Pass(l, OTHER), Pass(r, OTHER)] for l, r in zip(lefts, rights)]
    boxes = {b: None for b in lefts + rights}
    return LabeledNetwork(boxes, loops), lefts, rights


def instantiate_template(network, labels):
    """Fill a template's None labels from a {box id: Element} mapping."""
    merged = dict(network.boxes)
    merged.update(labels)
    missing = [b for b, lbl in merged.items() if lbl is None]
    if missing:
        raise ValueError(f"unlabeled template boxes remain: {missing}")
    return network.replace(boxes=merged)


def gram(algebra, k, max_entries=10000):
    """The k-slot pairing matrix over basis x dual-basis multi-indices.

    Entry ((i_1..i_{k-1}), (j_1..j_{k-1})) is delta^{-k} times the value of
    the pairing template with left slots e_{i_m} and right slots the trace
    duals e^{j_m}; rows and columns run in lexicographic multi-index order.
    """
    n = algebra.n
    entries = n ** (2 * (k - 1))
    if entries > max_entries:
        raise BudgetError(
            f"pairing gram for k={k}, n={n} needs {entries} entries "
            f"(budget {max_entries})"
        )
    template, lefts, rights = pairing_template(k)
    free = [(l, "standard") for l in lefts] + [(r, "dual") for r in rights]
    table = evaluate_with_free_slots(template, algebra, free)
    scale = algebra.delta.inverse() ** k
    zero = algebra.field.zero
    side = n ** (k - 1)
    rows = []
    for left_index in product(range(n), repeat=k - 1):
        row = []
        for right_index in product(range(n), repeat=k - 1):
            value = table.get(left_index + right_index, zero)
            row.append(value * scale)
        rows.append(row)
    assert len(rows) == side
    return rows


def gram_is_identity(algebra, k, max_entries=10000):
    return exactlin.is_identity(gram(algebra, k, max_entries))


# -- depth-two tangles ---------------------------------------------------------------


def coproduct_tangle_network(corrupt=False):
    """The two-slot depth-two wiring probed by two dual-basis boxes.

    With corrupt=True the X slot is cut off into its own closure, a wiring
    that factorises and cannot reach full rank; it serves as the negative
    control for the surjectivity claim.
    """
    boxes = {"X": None, "Y": None, "s": None, "r": None}
    if corrupt:
        loops = [
            [Pass("X", STAR), Pass("X", OTHER)],
            [Pass("s", STAR), Pass("r", STAR), Pass("Y", STAR)],
            [Pass("Y", OTHER), Pass("s", OTHER)],
            [Pass("r", OTHER)],
        ]
    else:
        loops = [
            [Pass("s", STAR), Pass("r", STAR), Pass("X", STAR)],
            [Pass("Y", OTHER), Pass("s", OTHER)],
            [Pass("Y", STAR), Pass("X", OTHER), Pass("r", OTHER)],
        ]
    return LabeledNetwork(boxes, loops)


def single_box_tangle_network():
    """One labeled slot against the same two dual-basis probes."""
    boxes = {"a": None, "s": None, "r": None}
    loops = [
        [Pass("s", STAR), Pass("r", STAR), Pass("a", STAR)],
        [Pass("a", OTHER), Pass("s", OTHER)],
        [Pass("r", OTHER)],
    ]
    return LabeledNetwork(boxes, loops)


def depth_two_gram(algebra, corrupt=False):
    """Matrix of the depth-two tangle over (u, v) rows and (j1, j2) columns."""
    n = algebra.n
    net = coproduct_tangle_network(corrupt=corrupt)
    free = [("X", "standard"), ("Y", "standard"), ("s", "dual"), ("r", "dual")]
    table = evaluate_with_free_slots(net, algebra, free)
    scale = algebra.delta.inverse() ** 3
    zero = algebra.field.zero
    rows = []
    for u in range(n):
        for v in range(n):
            row = []
            for j1 in range(n):
                for j2 in range(n):
                    row.append(table.get((u, v, j1, j2), zero) * scale)
            rows.append(row)
    return rows


def depth_two_rank(algebra, corrupt=False):
    return exactlin.rank(depth_two_gram(algebra, corrupt=corrupt))


def reconstruct_structure(algebra):
    """Recover comultiplication, counit and antipode from network values.

    Solves the depth-two system for Delta on every basis element, reads the
    counit off single-box closures and the antipode off a side-swapped
    two-slot pairing, and compares everything entrywise with the declared
    structure constants.  Returns a report dict of booleans plus the rank of
    the depth-two matrix.
    """
    n = algebra.n
    inv_delta = algebra.delta.inverse()
    zero = algebra.field.zero

    gram_w = depth_two_gram(algebra)

    target = single_box_tangle_network()
    free = [("a", "standard"), ("s", "dual"), ("r", "dual")]
    table = evaluate_with_free_slots(target, algebra, free)
    scale = inv_delta ** 3
    rhs = [
        [table.get((t, j1, j2), zero) * scale for t in range(n)]
        for j1 in range(n)
        for j2 in range(n)
    ]
    solution = exactlin.solve(exactlin.transpose(gram_w), rhs)
    comult_ok = all(
        solution[u * n + v][t] == algebra.comult[t][u][v]
        for t in range(n)
        for u in range(n)
        for v in range(n)
    )

    closure = LabeledNetwork(
        {"a": None}, [[Pass("a", OTHER), Pass("a", STAR)]]
    )
    counit_table = evaluate_with_free_slots(closure, algebra, [("a", "standard")])
    counit_ok = all(
        counit_table.get((t,), zero) * inv_delta == algebra.counit[t]
        for t in range(n)
    )

    probe = LabeledNetwork(
        {"L": None, "R": None},
        [[Pass("R", STAR), Pass("L", OTHER)], [Pass("L", STAR), Pass("R", OTHER)]],
    )
    probe_table = evaluate_with_free_slots(
        probe, algebra, [("L", "standard"), ("R", "dual")]
    )
    scale2 = inv_delta ** 2
    antipode_ok = all(
        probe_table.get((t, j), zero) * scale2 == algebra.antipode[t][j]
        for t in range(n)
        for j in range(n)
    )

    return {
        "comult_matches": comult_ok,
        "counit_matches": counit_ok,
        "antipode_matches": antipode_ok,
        "depth_two_rank": exactlin.rank(gram_w),
        "full_rank": n * n,
    }
