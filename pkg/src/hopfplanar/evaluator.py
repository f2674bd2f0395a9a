"""Exact partition-function evaluation of closed labeled networks.

The value of a network is a state sum: every box label is expanded through
the comultiplication into Sweedler pairs, the first-leg factor travelling on
the star pass and the antipode of the second-leg factor on the other pass.
Each loop contributes delta^{-1} phi(product of the symbols it carries, read
against the stored orientation), a free loop contributes delta, and the total
is the sum over all joint expansions of the coefficient times the product of
loop values.

Two independent engines compute this sum:

* a direct enumeration over joint Sweedler assignments with memoised loop
  words (the reference implementation), and
* a sparse exact tensor contraction that threads each loop through small
  transfer tensors and joins everything with a greedy pairwise schedule.

The contraction engine can also leave selected box labels free, returning
the whole array of values indexed by basis (or dual-basis) labels of those
slots in a single contraction.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from . import exactlin
from .network import STAR, LabeledNetwork, NetworkSum, validate


def _eval_cache(algebra):
    cache = getattr(algebra, "_evaluator_cache", None)
    if cache is not None:
        return cache
    n = algebra.n
    star_transfer = {}
    for t in range(n):
        for u in range(n):
            for k, val in algebra.mult_nz[t][u]:
                star_transfer[(t, u, k)] = val
    other_transfer = {}
    other_rows = []
    for t in range(n):
        row = []
        for v in range(n):
            acc = {}
            for w, sval in enumerate(algebra.antipode[v]):
                if not sval:
                    continue
                for k, mval in algebra.mult_nz[t][w]:
                    acc[k] = acc.get(k, Fraction(0)) + sval * mval
            entries = [(k, val) for k, val in sorted(acc.items()) if val]
            row.append(entries)
            for k, val in entries:
                other_transfer[(t, v, k)] = val
        other_rows.append(row)
    comult3 = {}
    for k in range(n):
        for i, j, v in algebra.comult_nz[k]:
            comult3[(k, i, j)] = v
    cache = {
        "star_transfer": star_transfer,
        "other_transfer": other_transfer,
        "other_rows": other_rows,
        "unit1": {(t,): val for t, val in enumerate(algebra.unit) if val},
        "phi1": {(k,): val for k, val in enumerate(algebra.phi_coords) if val},
        "comult3": comult3,
    }
    algebra._evaluator_cache = cache
    return cache


def _dual_slot_tensor(algebra):
    """comult constants precomposed with the dual basis: slot label e^j."""
    cache = _eval_cache(algebra)
    if "comult3_dual" not in cache:
        n = algebra.n
        ginv = exactlin.inverse(algebra.gram())
        data = {}
        for j in range(n):
            for t in range(n):
                w = ginv[j][t]
                if not w:
                    continue
                for i, jj, v in algebra.comult_nz[t]:
                    key = (j, i, jj)
                    data[key] = data.get(key, Fraction(0)) + w * v
        cache["comult3_dual"] = {k: v for k, v in data.items() if v}
    return cache["comult3_dual"]


# -- reference engine -------------------------------------------------------------


def _evaluate_naive(network, algebra):
    cache = _eval_cache(algebra)
    n = algebra.n
    box_order = sorted(network.boxes)
    pair_lists = [network.boxes[b].comult_pairs() for b in box_order]
    slot = {b: idx for idx, b in enumerate(box_order)}

    loops = [loop for loop in network.loops if loop]
    empties = network.empty_loop_count()

    # reading order is opposite to storage order
    specs = [tuple(reversed(loop)) for loop in loops]
    memos = [dict() for _ in specs]

    unit = algebra.unit
    mult_nz = algebra.mult_nz
    other_rows = cache["other_rows"]
    phi_coords = algebra.phi_coords

    def loop_phi(spec, key, memo):
        val = memo.get(key)
        if val is not None:
            return val
        cur = list(unit)
        for p, sym in zip(spec, key):
            nxt = [Fraction(0)] * n
            if p.side == STAR:
                for t, ct in enumerate(cur):
                    if ct:
                        for k, m in mult_nz[t][sym]:
                            nxt[k] += ct * m
            else:
                for t, ct in enumerate(cur):
                    if ct:
                        for k, m in other_rows[t][sym]:
                            nxt[k] += ct * m
            cur = nxt
        val = sum((c * p for c, p in zip(cur, phi_coords) if c and p), Fraction(0))
        memo[key] = val
        return val

    total = algebra.field.zero
    for assignment in product(*pair_lists):
        coeff = algebra.field.one
        for _, _, kappa in assignment:
            coeff = coeff * kappa
        word_product = Fraction(1)
        dead = False
        for spec, memo in zip(specs, memos):
            key = tuple(
                assignment[slot[p.box]][0] if p.side == STAR
                else assignment[slot[p.box]][1]
                for p in spec
            )
            val = loop_phi(spec, key, memo)
            if not val:
                dead = True
                break
            word_product *= val
        if not dead:
            total = total + coeff * word_product

    delta = algebra.delta
    scale = delta.inverse() ** len(loops) * delta ** empties
    return total * scale


# -- contraction engine ----------------------------------------------------------


class _Tensor:
    __slots__ = ("legs", "data")

    def __init__(self, legs, data):
        self.legs = tuple(legs)
        self.data = data


def _contract(a, b):
    b_legs = set(b.legs)
    shared = tuple(l for l in a.legs if l in b_legs)
    a_keep = tuple(i for i, l in enumerate(a.legs) if l not in b_legs)
    a_pos = tuple(a.legs.index(l) for l in shared)
    b_pos = tuple(b.legs.index(l) for l in shared)
    b_keep = tuple(i for i, l in enumerate(b.legs) if b.legs[i] not in shared)

    grouped = {}
    for key, val in b.data.items():
        skey = tuple(key[p] for p in b_pos)
        grouped.setdefault(skey, []).append(
            (tuple(key[p] for p in b_keep), val)
        )

    out = {}
    for key, val in a.data.items():
        skey = tuple(key[p] for p in a_pos)
        rest = grouped.get(skey)
        if not rest:
            continue
        head = tuple(key[p] for p in a_keep)
        for tail, bval in rest:
            okey = head + tail
            prev = out.get(okey)
            term = val * bval
            out[okey] = term if prev is None else prev + term
    legs = tuple(a.legs[p] for p in a_keep) + tuple(b.legs[p] for p in b_keep)
    return _Tensor(legs, {k: v for k, v in out.items() if v})


def _outer(a, b):
    data = {}
    for ka, va in a.data.items():
        for kb, vb in b.data.items():
            data[ka + kb] = va * vb
    return _Tensor(a.legs + b.legs, data)


def _contract_all(tensors):
    pool = list(tensors)
    while len(pool) > 1:
        best = None
        for x in range(len(pool)):
            legs_x = set(pool[x].legs)
            for y in range(x + 1, len(pool)):
                shared = legs_x & set(pool[y].legs)
                if not shared:
                    continue
                out_legs = len(pool[x].legs) + len(pool[y].legs) - 2 * len(shared)
                cost = (out_legs, len(pool[x].data) * len(pool[y].data))
                if best is None or cost < best[0]:
                    best = (cost, x, y)
        if best is None:
            pool.sort(key=lambda t: (len(t.legs), len(t.data)))
            b = pool.pop(1)
            a = pool.pop(0)
            pool.append(_outer(a, b))
            continue
        _, x, y = best
        b = pool.pop(y)
        a = pool.pop(x)
        pool.append(_contract(a, b))
    return pool[0]


def _network_tensors(network, algebra, free=None):
    free = dict(free or {})
    cache = _eval_cache(algebra)
    tensors = []
    for b in sorted(network.boxes):
        u_leg = ("u", b)
        v_leg = ("v", b)
        if b in free:
            data = (
                cache["comult3"] if free[b] == "standard"
                else _dual_slot_tensor(algebra)
            )
            tensors.append(_Tensor((("slot", b), u_leg, v_leg), data))
        else:
            pairs = network.boxes[b].comult_pairs()
            tensors.append(_Tensor((u_leg, v_leg), {(u, v): k for u, v, k in pairs}))
    n_loops = 0
    for li, loop in enumerate(network.loops):
        if not loop:
            continue
        n_loops += 1
        prev = ("t", li, 0)
        tensors.append(_Tensor((prev,), cache["unit1"]))
        for r, p in enumerate(reversed(loop)):
            cur = ("t", li, r + 1)
            if p.side == STAR:
                tensors.append(
                    _Tensor((prev, ("u", p.box), cur), cache["star_transfer"])
                )
            else:
                tensors.append(
                    _Tensor((prev, ("v", p.box), cur), cache["other_transfer"])
                )
            prev = cur
        tensors.append(_Tensor((prev,), cache["phi1"]))
    return tensors, n_loops


def _loop_scale(algebra, n_loops, empties):
    delta = algebra.delta
    return delta.inverse() ** n_loops * delta ** empties


def _evaluate_contracted(network, algebra):
    if not network.boxes and not any(network.loops):
        return algebra.field.one * algebra.delta ** network.empty_loop_count()
    tensors, n_loops = _network_tensors(network, algebra)
    result = _contract_all(tensors)
    if result.legs:
        raise RuntimeError("contraction left free legs on a closed network")
    value = result.data.get((), algebra.field.zero)
    return value * _loop_scale(algebra, n_loops, network.empty_loop_count())


def _check_membership(network, algebra):
    owner = network.algebra()
    if owner is not None and owner is not algebra:
        raise ValueError("network is labeled over a different algebra")


def evaluate(target, algebra, method="auto"):
    """Exact value of a network (or linear combination) in Q(delta).

    method: "auto" (contraction), "naive", "contracted", or "both" (run the
    two engines and insist on exact agreement).
    """
    if isinstance(target, NetworkSum):
        total = algebra.field.zero
        for coeff, net in target:
            total = total + coeff * evaluate(net, algebra, method)
        return total
    if not isinstance(target, LabeledNetwork):
        raise TypeError(f"expected LabeledNetwork or NetworkSum, got {type(target).__name__}")
    validate(target)
    _check_membership(target, algebra)
    if not target.boxes:
        return algebra.field.one * algebra.delta ** target.empty_loop_count()
    if method == "naive":
        return _evaluate_naive(target, algebra)
    if method in ("auto", "contracted"):
        return _evaluate_contracted(target, algebra)
    if method == "both":
        left = _evaluate_naive(target, algebra)
        right = _evaluate_contracted(target, algebra)
        if left != right:
            raise RuntimeError(
                f"evaluation engines disagree: naive={left}, contracted={right}"
            )
        return left
    raise ValueError(f"unknown method {method!r}")


def evaluate_with_free_slots(network, algebra, free):
    """Evaluate with selected boxes left label-free, batched by contraction.

    `free` is an ordered list of (box_id, basis) pairs, basis "standard" for
    slot labels e_i or "dual" for slot labels e^i; those boxes may carry None
    in network.boxes.  Returns a dict mapping index tuples (ordered as in
    `free`) to values; absent keys are exact zeros.
    """
    free = list(free)
    free_ids = {b for b, _ in free}
    for b, basis in free:
        if b not in network.boxes:
            raise ValueError(f"free slot {b!r} is not a box of the network")
        if basis not in ("standard", "dual"):
            raise ValueError(f"unknown slot basis {basis!r}")
    labeled = {b: lbl for b, lbl in network.boxes.items() if b not in free_ids}
    skeleton = network.replace(boxes={**labeled, **{b: None for b in free_ids}})
    probe = network.replace(
        boxes={**labeled, **{b: algebra.one() for b in free_ids}}
    )
    validate(probe)
    _check_membership(probe, algebra)

    tensors, n_loops = _network_tensors(
        skeleton, algebra, free={b: basis for b, basis in free}
    )
    result = _contract_all(tensors)
    want = tuple(("slot", b) for b, _ in free)
    if set(result.legs) != set(want):
        raise RuntimeError("contraction did not reduce to the free slot legs")
    perm = tuple(result.legs.index(l) for l in want)
    scale = _loop_scale(algebra, n_loops, network.empty_loop_count())
    out = {}
    for key, val in result.data.items():
        scaled = val * scale
        if scaled:
            out[tuple(key[p] for p in perm)] = scaled
    return out
