"""Seeded random labeled networks for invariance and duality testing.

`random_network` draws arbitrary pairings of box passes into loops (one star
and one other pass per box, random flows and shading, optional free loops),
which covers far more than the planar case; evaluation and the rewrite moves
are defined on exactly this data, so the invariance tests deliberately run
on the whole class.  `random_planar_network` instead draws from an atlas of
wirings verified to be planar-realizable with their flow vectors, which is
the domain of the dual-evaluation identity.
"""

from __future__ import annotations

import itertools
import string
from fractions import Fraction

from .network import OTHER, PLUS, MINUS, STAR, LabeledNetwork, Pass, find_move_sites

MOVES = ("M", "U", "I", "C", "T", "E", "A")


def random_element(algebra, rng, span=2, delta_part=True, nonzero=True):
    """A small random element, rational coordinates with occasional delta terms."""
    coords = []
    for _ in range(algebra.n):
        rat = Fraction(rng.randint(-span, span))
        coef = Fraction(rng.choice((0, 0, 0, 1, -1))) if delta_part else Fraction(0)
        coords.append(algebra.field.scalar(rat, coef))
    element = algebra.element(coords)
    if nonzero and not element:
        element = algebra.basis(rng.randrange(algebra.n))
    return element


def _random_partition(passes, rng):
    loops = []
    i = 0
    while i < len(passes):
        j = i + rng.randint(1, len(passes) - i)
        loops.append(list(passes[i:j]))
        i = j
    return loops


def random_network(algebra, rng, max_boxes=3, max_free_loops=2):
    """A random closed network with 1..max_boxes labeled boxes."""
    count = rng.randint(1, max_boxes)
    ids = [f"b{i}" for i in range(count)]
    boxes = {b: random_element(algebra, rng) for b in ids}
    passes = [Pass(b, side) for b in ids for side in (STAR, OTHER)]
    rng.shuffle(passes)
    loops = _random_partition(passes, rng)
    loops.extend([] for _ in range(rng.randint(0, max_free_loops)))
    flows = {b: rng.choice((1, -1)) for b in ids}
    shading = rng.choice((PLUS, MINUS))
    return LabeledNetwork(boxes, loops, shading, flows)


def _strip_passes(loops, box, sides):
    return [
        [p for p in loop if not (p.box == box and p.side in sides)]
        for loop in loops
    ]


def _insert_run(loops, run, rng, exclude=None):
    """Splice a run of passes contiguously at a random position.

    Returns the index of the loop spliced into; `exclude` bars one index.
    """
    choices = [i for i in range(len(loops) + 1) if i != exclude]
    target = rng.choice(choices)
    if target == len(loops):
        loops.append(list(run))
        return target
    at = rng.randint(0, len(loops[target]))
    loops[target] = loops[target][:at] + list(run) + loops[target][at:]
    return target


def random_network_with_site(algebra, rng, move):
    """A random network guaranteed to admit `move`, plus a chosen site."""
    min_boxes = 2 if move == "E" else 1
    base = random_network(algebra, rng, max_boxes=max(3, min_boxes))
    while base.num_boxes() < min_boxes:
        base = random_network(algebra, rng, max_boxes=3)
    boxes = dict(base.boxes)
    loops = [list(loop) for loop in base.loops]
    ids = sorted(boxes)

    if move == "M":
        if not any(not loop for loop in loops):
            loops.append([])
    elif move == "U":
        boxes[rng.choice(ids)] = algebra.one()
    elif move == "I":
        # the smoothing move needs the box's passes in different loops or
        # adjacent in one loop; arbitrary separations are non-planar
        b = rng.choice(ids)
        boxes[b] = algebra.integral()
        loops = _strip_passes(loops, b, (STAR, OTHER))
        if rng.random() < 0.5:
            pair = [Pass(b, STAR), Pass(b, OTHER)]
            if rng.random() < 0.5:
                pair.reverse()
            _insert_run(loops, pair, rng)
        else:
            first = _insert_run(loops, [Pass(b, STAR)], rng)
            _insert_run(loops, [Pass(b, OTHER)], rng, exclude=first)
    elif move == "C":
        b = rng.choice(ids)
        loops = _strip_passes(loops, b, (STAR, OTHER))
        _insert_run(loops, [Pass(b, OTHER), Pass(b, STAR)], rng)
    elif move == "T":
        b = rng.choice(ids)
        alone = rng.choice((STAR, OTHER))
        other_side = OTHER if alone == STAR else STAR
        loops = _strip_passes(loops, b, (STAR, OTHER))
        _insert_run(loops, [Pass(b, other_side)], rng)
        loops.append([Pass(b, alone)])
    elif move == "E":
        a, b = rng.sample(ids, 2)
        loops = _strip_passes(loops, a, (OTHER,))
        loops = _strip_passes(loops, b, (OTHER,))
        _insert_run(loops, [Pass(a, OTHER), Pass(b, OTHER)], rng)
    elif move != "A":
        raise ValueError(f"unknown move {move!r}")

    network = base.replace(boxes=boxes, loops=loops)
    sites = find_move_sites(network, move)
    return network, rng.choice(sites)


# Wirings verified to satisfy the dual-evaluation identity for every basis
# labeling over Q[S3] and its dual.  Validity depends only on the wiring and
# the flow vector, never on the labels: both sides of the identity are
# multilinear in the box labels, so checking all basis labelings is
# exhaustive.  Flow vectors are over the sorted box ids; "any" admits every
# vector, "uniform" only the two constant ones.  The two 2-box wirings whose
# strands must cross (a*,b*,ao,bo and a*,bo,ao,b*) admit no flow vector at
# all and are omitted.
_PLANAR_ATLAS = {
    1: (
        ("a*|ao", "any"),
        ("a*,ao", "any"),
    ),
    2: (
        ("a*|ao|b*|bo", "any"),
        ("a*|ao|b*,bo", "any"),
        ("a*|ao,b*|bo", "any"),
        ("a*|ao,b*,bo", "any"),
        ("a*|ao,bo,b*", "any"),
        ("a*|ao,bo|b*", "any"),
        ("a*,ao|b*|bo", "any"),
        ("a*,ao|b*,bo", "any"),
        ("a*,ao,b*|bo", "any"),
        ("a*,ao,b*,bo", "any"),
        ("a*,ao,bo,b*", "any"),
        ("a*,ao,bo|b*", "any"),
        ("a*,b*,ao|bo", "any"),
        ("a*,b*,bo,ao", "any"),
        ("a*,b*,bo|ao", "any"),
        ("a*,b*|ao|bo", "any"),
        ("a*,b*|ao,bo", "uniform"),
        ("a*,bo,ao|b*", "any"),
        ("a*,bo,b*,ao", "any"),
        ("a*,bo,b*|ao", "any"),
        ("a*,bo|ao|b*", "any"),
        ("a*,bo|ao,b*", "uniform"),
    ),
    3: (
        ("a*,b*,c*|co,bo,ao", ((-1, -1, -1),)),
        ("ao,b*,c*|co,bo,a*", ((-1, -1, -1),)),
        ("a*,bo,c*|co,b*,ao", ((-1, -1, -1),)),
        ("a*,b*,co|c*,bo,ao", ((-1, -1, -1),)),
        ("a*,b*,c*|co,ao|bo", ((1, 1, 1), (1, -1, 1), (-1, 1, -1), (-1, -1, -1))),
        ("a*,b*,co|c*,ao|bo", ((1, 1, 1), (1, -1, 1), (-1, 1, -1), (-1, -1, -1))),
        ("a*,b*|ao,co,c*,bo", ((1, 1, 1), (1, 1, -1), (-1, -1, 1), (-1, -1, -1))),
        ("a*,c*,co,b*|ao,bo", ((1, 1, 1), (1, 1, -1), (-1, -1, 1), (-1, -1, -1))),
        ("a*,b*,c*,co,bo,ao", "any"),
        ("a*,bo|b*,co|c*,ao", ((-1, -1, -1),)),
    ),
}


def parse_wiring(spec):
    """Loops from a compact wiring string like "a*,b*|bo,ao"."""
    loops = []
    for part in spec.split("|"):
        loop = []
        for token in part.split(","):
            side = STAR if token[-1] == "*" else OTHER
            loop.append(Pass(token[:-1], side))
        loops.append(loop)
    return loops


def atlas_flow_vectors(mode, count):
    if mode == "any":
        return list(itertools.product((1, -1), repeat=count))
    if mode == "uniform":
        return [(1,) * count, (-1,) * count]
    return [tuple(v) for v in mode]


def random_planar_network(algebra, rng, max_boxes=3, max_free_loops=2):
    """A random planar-realizable network with 0..max_boxes labeled boxes.

    Components are drawn from the verified wiring atlas with one of their
    admissible flow vectors and glued by disjoint union; the result is then
    scrambled only by operations that do not change the underlying diagram:
    loop rotation and reordering, box renaming, free loops, and the shading
    choice.
    """
    remaining = rng.randint(0, max_boxes)
    sizes = []
    while remaining:
        size = rng.randint(1, min(remaining, max(_PLANAR_ATLAS)))
        sizes.append(size)
        remaining -= size
    names = iter(rng.sample(string.ascii_lowercase, sum(sizes)))
    boxes, loops, flows = {}, [], {}
    for size in sizes:
        spec, mode = rng.choice(_PLANAR_ATLAS[size])
        component = parse_wiring(spec)
        ids = sorted({p.box for loop in component for p in loop})
        fresh = {b: next(names) for b in ids}
        vector = rng.choice(atlas_flow_vectors(mode, size))
        for b, flow in zip(ids, vector):
            flows[fresh[b]] = flow
            boxes[fresh[b]] = random_element(algebra, rng)
        loops.extend(
            [Pass(fresh[p.box], p.side) for p in loop] for loop in component
        )
    low = 0 if loops else 1
    loops.extend([] for _ in range(rng.randint(low, max_free_loops)))
    rng.shuffle(loops)
    loops = [
        loop[k:] + loop[:k]
        for loop, k in ((lp, rng.randrange(len(lp)) if lp else 0) for lp in loops)
    ]
    shading = rng.choice((PLUS, MINUS))
    return LabeledNetwork(boxes, loops, shading, flows)
