"""Closed labeled networks of 2-boxes and their defining relation moves.

A network is stored post-box-removal: a set of labeled boxes, each of which
is traversed by exactly two strand passes (the "star" pass beside the box's
marked corner and the "other" pass), and a list of closed loops given as
cyclic sequences of passes in loop-orientation order.  Empty sequences are
free loops.  This is precisely the data the partition-function procedure
consumes, so planarity of the loop data is deliberately not checked.

Each box also carries a flow bit recording the direction in which its star
strand is traversed relative to the box's leg numbering (legs 1..4 clockwise
with the marked corner between legs 4 and 1; the star strand joins legs 1
and 4, the other strand legs 2 and 3; the two strands are anti-parallel).
The flow bits are invisible to evaluation; they only pin down the geometry
needed by minus_transform, the quarter-turn that moves every box's marked
corner back by one leg and inverts the shading.

The seven rewrite moves (M, U, I, C, T, E, A) are implemented as checked
local surgeries returning formal linear combinations of networks; each one
preserves evaluation exactly, with scalar factors folded into coefficients.
"""

from __future__ import annotations

from typing import NamedTuple

from .hopf import Element

STAR = "star"
OTHER = "other"
PLUS = "plus"
MINUS = "minus"


class Pass(NamedTuple):
    box: str
    side: str


class MoveError(ValueError):
    """The requested move does not match the local pattern at the site."""


class LabeledNetwork:
    """A closed labeled network: boxes, loops of passes, shading, flows."""

    __slots__ = ("boxes", "loops", "shading", "flows")

    def __init__(self, boxes, loops, shading=PLUS, flows=None):
        self.boxes = dict(boxes)
        self.loops = tuple(
            tuple(p if isinstance(p, Pass) else Pass(*p) for p in loop)
            for loop in loops
        )
        self.shading = shading
        self.flows = {b: 1 for b in self.boxes}
        if flows:
            self.flows.update(flows)

    def algebra(self):
        for label in self.boxes.values():
            return label.algebra
        return None

    def num_boxes(self):
        return len(self.boxes)

    def empty_loop_count(self):
        return sum(1 for loop in self.loops if not loop)

    def toggled_shading(self):
        return MINUS if self.shading == PLUS else PLUS

    def replace(self, boxes=None, loops=None, shading=None, flows=None):
        return LabeledNetwork(
            boxes=self.boxes if boxes is None else boxes,
            loops=self.loops if loops is None else loops,
            shading=self.shading if shading is None else shading,
            flows=dict(self.flows) if flows is None else flows,
        )

    def canonical_key(self, include_flows=True, include_shading=True):
        """Hashable form invariant under loop rotation and loop reordering."""
        rotated = []
        for loop in self.loops:
            if loop:
                candidates = [loop[i:] + loop[:i] for i in range(len(loop))]
                rotated.append(min(candidates))
            else:
                rotated.append(())
        labels = tuple(
            (b, self.boxes[b].coords) for b in sorted(self.boxes)
        )
        key = (tuple(sorted(rotated)), labels)
        if include_flows:
            key += (tuple(sorted(self.flows.items())),)
        if include_shading:
            key += (self.shading,)
        return key

    def same_structure(self, other, include_flows=True, include_shading=True):
        return self.canonical_key(include_flows, include_shading) == \
            other.canonical_key(include_flows, include_shading)

    def __repr__(self):
        return (
            f"LabeledNetwork({len(self.boxes)} boxes, {len(self.loops)} loops, "
            f"shading={self.shading})"
        )


class NetworkSum:
    """A formal linear combination of networks; evaluation is linear."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        self.terms = list(terms)

    @classmethod
    def single(cls, network, coefficient=1):
        return cls([(coefficient, network)])

    def scaled(self, factor):
        return NetworkSum([(factor * c, n) for c, n in self.terms])

    def __add__(self, other):
        return NetworkSum(self.terms + other.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __repr__(self):
        return f"NetworkSum({len(self.terms)} terms)"


def validate(network):
    """Check the pass-coverage invariant and label membership; return network."""
    if network.shading not in (PLUS, MINUS):
        raise ValueError(f"unknown shading {network.shading!r}")
    algebra = None
    for box_id, label in network.boxes.items():
        if not isinstance(label, Element):
            raise ValueError(f"box {box_id!r} label is not an Element")
        if algebra is None:
            algebra = label.algebra
        elif label.algebra is not algebra:
            raise ValueError(f"box {box_id!r} labeled over a different algebra")
    seen = {b: {STAR: 0, OTHER: 0} for b in network.boxes}
    for loop in network.loops:
        for p in loop:
            if p.side not in (STAR, OTHER):
                raise ValueError(f"unknown side {p.side!r}")
            if p.box not in network.boxes:
                raise ValueError(f"loop references unlabeled box {p.box!r}")
            seen[p.box][p.side] += 1
    for box_id, counts in seen.items():
        for side in (STAR, OTHER):
            if counts[side] != 1:
                raise ValueError(
                    f"box {box_id!r} has {counts[side]} passes with side="
                    f"{side} (expected exactly 1)"
                )
    for box_id, f in network.flows.items():
        if box_id not in network.boxes:
            raise ValueError(f"flow given for unknown box {box_id!r}")
        if f not in (1, -1):
            raise ValueError(f"flow of box {box_id!r} must be +1 or -1")
    return network


def disjoint_union(first, second):
    if set(first.boxes) & set(second.boxes):
        raise ValueError("box ids collide in disjoint union")
    if first.shading != second.shading:
        raise ValueError("shadings differ in disjoint union")
    return LabeledNetwork(
        boxes={**first.boxes, **second.boxes},
        loops=first.loops + second.loops,
        shading=first.shading,
        flows={**first.flows, **second.flows},
    )


# -- port geometry -------------------------------------------------------------
#
# Legs 1..4 clockwise, marked corner between legs 4 and 1.  The star strand
# joins legs 1 and 4, the other strand legs 2 and 3, traversed anti-parallel:
# with flow f = +1 the star pass runs leg1 -> leg4 and the other leg3 -> leg2;
# f = -1 reverses both.

def _pass_legs(side, flow):
    """(entry leg, exit leg) of a pass given the box flow bit."""
    if side == STAR:
        return (1, 4) if flow == 1 else (4, 1)
    return (3, 2) if flow == 1 else (2, 3)


def _arc_map(network):
    """Directed arcs between consecutive passes: exit port -> entry port."""
    arcs = {}
    for loop in network.loops:
        size = len(loop)
        for idx, p in enumerate(loop):
            q = loop[(idx + 1) % size]
            _, exit_leg = _pass_legs(p.side, network.flows[p.box])
            entry_leg, _ = _pass_legs(q.side, network.flows[q.box])
            arcs[(p.box, exit_leg)] = (q.box, entry_leg)
    return arcs


def minus_transform(network):
    """Quarter-turn every box's marked corner back by one leg; toggle shading.

    The new star strand of each box joins old legs 4 and 3 and the new other
    strand old legs 1 and 2; loops are rebuilt by the forced traversal in
    which every old arc is walked backward (the orientation reversal induced
    by inverting the shading).  Labels and flow bits are untouched; applying
    the transform twice restores the loops with the two sides of every box
    swapped.
    """
    validate(network)
    arcs = _arc_map(network)
    reverse = {to: frm for frm, to in arcs.items()}

    # New passes in terms of old leg ports.  With flow f = +1 the old exits
    # are legs 4 (star) and 2 (other), so the new star runs old4 -> old3 and
    # the new other old2 -> old1; f = -1 mirrors this.
    entry_port = {}
    exit_port = {}
    owner = {}
    for box, f in network.flows.items():
        if f == 1:
            spec = {STAR: (4, 3), OTHER: (2, 1)}
        else:
            spec = {STAR: (3, 4), OTHER: (1, 2)}
        for side, (enter, leave) in spec.items():
            entry_port[(box, side)] = (box, enter)
            exit_port[(box, side)] = (box, leave)
            owner[(box, enter)] = (box, side)

    visited = set()
    new_loops = []
    for box in sorted(network.boxes):
        for side in (STAR, OTHER):
            if (box, side) in visited:
                continue
            seq = []
            cur = (box, side)
            while cur not in visited:
                visited.add(cur)
                seq.append(Pass(*cur))
                cur = owner[reverse[exit_port[cur]]]
            new_loops.append(tuple(seq))
    new_loops.extend(() for _ in range(network.empty_loop_count()))
    return network.replace(loops=tuple(new_loops),
                           shading=network.toggled_shading())


# -- the relation moves -----------------------------------------------------------


def find_move_sites(network, move):
    """All sites at which `move` applies, in deterministic order."""
    if move == "M":
        return [i for i, loop in enumerate(network.loops) if not loop]
    if move == "U":
        algebra = network.algebra()
        if algebra is None:
            return []
        one = algebra.one()
        return [b for b in sorted(network.boxes) if network.boxes[b] == one]
    if move == "I":
        algebra = network.algebra()
        if algebra is None:
            return []
        h = algebra.integral()
        return [
            b for b in sorted(network.boxes)
            if network.boxes[b] == h and _integral_site_ok(network, b)
        ]
    if move == "A":
        return sorted(network.boxes)
    if move == "T":
        singles = {loop[0].box for loop in network.loops if len(loop) == 1}
        return sorted(singles)
    if move == "C":
        sites = []
        for li, loop in enumerate(network.loops):
            if len(loop) < 2:
                continue
            for i, p in enumerate(loop):
                q = loop[(i + 1) % len(loop)]
                if p.side == OTHER and q.side == STAR and p.box == q.box:
                    sites.append((li, i))
        return sites
    if move == "E":
        sites = []
        for li, loop in enumerate(network.loops):
            if len(loop) < 2:
                continue
            for i, p in enumerate(loop):
                q = loop[(i + 1) % len(loop)]
                if p.side == OTHER and q.side == OTHER and p.box != q.box:
                    sites.append((li, i))
        return sites
    raise MoveError(f"unknown move {move!r}")


def apply_move(target, move, site):
    """Apply a relation move at `site`; returns an evaluation-equal NetworkSum.

    Accepts a LabeledNetwork or a NetworkSum (the move is applied to every
    term, which therefore must share the relevant local pattern).
    """
    if isinstance(target, NetworkSum):
        out = []
        for coeff, net in target:
            out.extend((coeff * c, n) for c, n in _apply_move_net(net, move, site))
        return NetworkSum(out)
    return NetworkSum(_apply_move_net(target, move, site))


def _apply_move_net(network, move, site):
    validate(network)
    handlers = {
        "M": _move_modulus,
        "U": _move_unit,
        "I": _move_integral,
        "C": _move_counit,
        "T": _move_trace,
        "E": _move_exchange,
        "A": _move_antipode,
    }
    if move not in handlers:
        raise MoveError(f"unknown move {move!r}")
    return handlers[move](network, site)


def _drop_box(network, box):
    boxes = {b: lbl for b, lbl in network.boxes.items() if b != box}
    flows = {b: f for b, f in network.flows.items() if b != box}
    return boxes, flows


def _move_modulus(network, site):
    if not isinstance(site, int) or not (0 <= site < len(network.loops)) \
            or network.loops[site]:
        raise MoveError(f"M-move needs an empty loop index, got {site!r}")
    algebra = network.algebra()
    delta = algebra.delta if algebra else None
    if delta is None:
        raise MoveError("M-move on a fully empty network needs a labeled box "
                        "to determine the field; evaluate directly instead")
    loops = tuple(l for i, l in enumerate(network.loops) if i != site)
    return [(delta, network.replace(loops=loops))]


def _move_unit(network, site):
    algebra = network.algebra()
    label = network.boxes.get(site)
    if label is None or label != algebra.one():
        raise MoveError(f"U-move needs a box labeled 1, got {site!r}")
    boxes, flows = _drop_box(network, site)
    loops = tuple(tuple(p for p in loop if p.box != site) for loop in network.loops)
    one = algebra.field.one
    return [(one, network.replace(boxes=boxes, loops=loops, flows=flows))]


def _move_counit(network, site):
    try:
        li, i = site
        loop = network.loops[li]
        p, q = loop[i], loop[(i + 1) % len(loop)]
    except (TypeError, ValueError, IndexError):
        raise MoveError(f"C-move site must be (loop, index), got {site!r}")
    if not (len(loop) >= 2 and p.side == OTHER and q.side == STAR and p.box == q.box):
        raise MoveError(f"C-move pattern (other b, star b) absent at {site!r}")
    box = p.box
    boxes, flows = _drop_box(network, box)
    loops = list(network.loops)
    loops[li] = tuple(r for r in loop if r.box != box)
    coeff = network.boxes[box].counit()
    return [(coeff, network.replace(boxes=boxes, loops=tuple(loops), flows=flows))]


def _move_trace(network, site):
    singleton = next(
        (li for li, loop in enumerate(network.loops)
         if len(loop) == 1 and loop[0].box == site),
        None,
    )
    if singleton is None:
        raise MoveError(f"T-move needs a singleton loop of box {site!r}")
    boxes, flows = _drop_box(network, site)
    loops = tuple(
        tuple(p for p in loop if p.box != site)
        for li, loop in enumerate(network.loops)
        if li != singleton
    )
    algebra = network.algebra()
    coeff = algebra.delta.inverse() * network.boxes[site].phi()
    return [(coeff, network.replace(boxes=boxes, loops=loops, flows=flows))]


def _integral_site_ok(network, box):
    """The smoothing rewrite is an identity only when the box's two passes
    lie in different loops or are cyclically adjacent in one loop; passes
    separated within a single loop encode a non-planar pairing on which the
    move does not preserve the value."""
    positions = [
        (li, i)
        for li, loop in enumerate(network.loops)
        for i, p in enumerate(loop)
        if p.box == box
    ]
    (l1, i1), (l2, i2) = positions
    if l1 != l2:
        return True
    size = len(network.loops[l1])
    return (i1 - i2) % size in (1, size - 1)


def _move_integral(network, site):
    algebra = network.algebra()
    label = network.boxes.get(site)
    if label is None or label != algebra.integral():
        raise MoveError(f"I-move needs a box labeled by the integral, got {site!r}")
    if not _integral_site_ok(network, site):
        raise MoveError(
            f"I-move at {site!r} needs the box's passes in different loops "
            "or adjacent in one loop"
        )
    box = site
    arcs = _arc_map(network)
    flow = network.flows[box]
    bridge = {(box, 1): (box, 2), (box, 2): (box, 1),
              (box, 3): (box, 4), (box, 4): (box, 3)}

    entry_of = {}
    for loop in network.loops:
        for p in loop:
            if p.box != box:
                entry_leg, _ = _pass_legs(p.side, network.flows[p.box])
                entry_of[(p.box, entry_leg)] = p

    touched = set()

    def follow(port):
        """From an exit port, cross arcs and bridges to the next live pass."""
        nxt = arcs[port]
        while nxt[0] == box:
            touched.add(nxt)
            crossed = bridge[nxt]
            touched.add(crossed)
            nxt = arcs[crossed]
        return entry_of[nxt]

    visited = set()
    new_loops = []
    for loop in network.loops:
        for p in loop:
            if p.box == box or p in visited:
                continue
            seq = []
            cur = p
            while cur not in visited:
                visited.add(cur)
                seq.append(cur)
                _, exit_leg = _pass_legs(cur.side, network.flows[cur.box])
                cur = follow((cur.box, exit_leg))
            new_loops.append(tuple(seq))

    # arc/bridge cycles through the removed box alone become free loops
    empties = network.empty_loop_count()
    star_entry, _ = _pass_legs(STAR, flow)
    other_entry, _ = _pass_legs(OTHER, flow)
    for start in ((box, star_entry), (box, other_entry)):
        if start in touched:
            continue
        cur = start
        while True:
            touched.add(cur)
            crossed = bridge[cur]
            touched.add(crossed)
            cur = arcs[crossed]
            if cur == start:
                empties += 1
                break

    new_loops.extend(() for _ in range(empties))
    boxes, flows = _drop_box(network, box)
    return [(algebra.delta,
             network.replace(boxes=boxes, loops=tuple(new_loops), flows=flows))]


def _move_antipode(network, site):
    if site not in network.boxes:
        raise MoveError(f"A-move needs a box id, got {site!r}")
    loops = tuple(
        tuple(
            Pass(p.box, OTHER if p.side == STAR else STAR) if p.box == site else p
            for p in loop
        )
        for loop in network.loops
    )
    boxes = dict(network.boxes)
    boxes[site] = boxes[site].antipode()
    one = network.algebra().field.one
    return [(one, network.replace(boxes=boxes, loops=loops))]


def _fresh_id(base, taken):
    candidate = base
    counter = 0
    while candidate in taken:
        counter += 1
        candidate = f"{base}{counter}"
    return candidate


def _move_exchange(network, site):
    try:
        li, i = site
        loop = network.loops[li]
        p, q = loop[i], loop[(i + 1) % len(loop)]
    except (TypeError, ValueError, IndexError):
        raise MoveError(f"E-move site must be (loop, index), got {site!r}")
    if not (len(loop) >= 2 and p.side == OTHER and q.side == OTHER and p.box != q.box):
        raise MoveError(f"E-move pattern (other a, other b) absent at {site!r}")
    a_box, b_box = p.box, q.box
    algebra = network.algebra()
    label_a = network.boxes[a_box]
    label_b = network.boxes[b_box]
    taken = set(network.boxes)
    c_box = _fresh_id(f"{a_box}_l", taken)
    d_box = _fresh_id(f"{a_box}_r", taken | {c_box})

    def rebuild(loops):
        out = []
        for lj, lp in enumerate(loops):
            seq = []
            skip = False
            for idx, r in enumerate(lp):
                if skip:
                    skip = False
                    continue
                if lj == li and idx == i:
                    seq.append(Pass(d_box, OTHER))
                    skip = True  # consumes the (b, other) pass that follows
                    continue
                if r == Pass(a_box, STAR):
                    seq.append(Pass(c_box, STAR))
                elif r == Pass(b_box, STAR):
                    seq.append(Pass(d_box, STAR))
                    seq.append(Pass(c_box, OTHER))
                else:
                    seq.append(r)
            out.append(tuple(seq))
        return tuple(out)

    loops_in = list(network.loops)
    if i == len(loop) - 1:
        # rotate so the cyclically adjacent pair is contiguous in storage
        loops_in[li] = loop[i:] + loop[:i]
        i = 0
    new_loops = rebuild(tuple(loops_in))

    base_boxes = {b: lbl for b, lbl in network.boxes.items()
                  if b not in (a_box, b_box)}
    base_flows = {b: f for b, f in network.flows.items()
                  if b not in (a_box, b_box)}
    terms = []
    for u, v, kappa in label_a.comult_pairs():
        boxes = dict(base_boxes)
        boxes[c_box] = algebra.basis(u)
        boxes[d_box] = algebra.basis(v) * label_b
        flows = dict(base_flows)
        flows[c_box] = 1
        flows[d_box] = 1
        terms.append(
            (kappa, network.replace(boxes=boxes, loops=new_loops, flows=flows))
        )
    return terms
