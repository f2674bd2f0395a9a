"""Quadrilateral tilings of even polygons, hexagon moves, and their tangles.

A tiling of the convex 2k-gon (vertices 1..2k clockwise) by k-2 pairwise
non-crossing diagonals cutting it into quadrilaterals corresponds to a
k-strand tangle skeleton with one 2-box per tile.  Inside each tile the box's
two strands turn around the tile's two even corners, so after gluing a
skeleton to the mirrored dual fan the closed loops are circles around the
glued even vertices; that observation drives both the tangle construction
and the surjectivity Gram computation here.
"""

from __future__ import annotations

from typing import NamedTuple

from . import exactlin
from .evaluator import evaluate_with_free_slots
from .network import LabeledNetwork, Pass, STAR, OTHER
from .pairing import BudgetError

ENUMERATION_CAP = 8


def crossing(d1, d2):
    """Whether two diagonals of a convex polygon properly cross."""
    (a, b), (c, d) = sorted(d1), sorted(d2)
    return (a < c < b < d) or (c < a < d < b)


def polygon_sides(k):
    return [(i, i % (2 * k) + 1) for i in range(1, 2 * k + 1)]


def _is_polygon_side(u, v, k):
    return (abs(u - v) == 1) or {u, v} == {1, 2 * k}


def faces_of(diagonals, k):
    """Faces of the convex 2k-gon subdivided by non-crossing diagonals.

    Each face is a tuple of vertices in clockwise cyclic order, rotated to
    start at its smallest vertex.
    """
    diagonals = [tuple(sorted(d)) for d in diagonals]

    def split(region, chords):
        if not chords:
            return [region]
        a, b = chords[0]
        ia, ib = region.index(a), region.index(b)
        if ia > ib:
            ia, ib = ib, ia
        first = region[ia : ib + 1]
        second = region[ib:] + region[: ia + 1]
        rest = chords[1:]
        in_first = [c for c in rest if set(c) <= set(first)]
        in_second = [c for c in rest if not set(c) <= set(first)]
        return split(first, in_first) + split(second, in_second)

    faces = []
    for face in split(tuple(range(1, 2 * k + 1)), diagonals):
        at = face.index(min(face))
        faces.append(face[at:] + face[:at])
    return sorted(faces)


def is_quadrangulation(diagonals, k):
    """Whether the diagonal set tiles the 2k-gon by quadrilaterals."""
    diagonals = [tuple(sorted(d)) for d in diagonals]
    if len(set(diagonals)) != len(diagonals) or len(diagonals) != k - 2:
        return False
    for d in diagonals:
        a, b = d
        if not (1 <= a < b <= 2 * k) or _is_polygon_side(a, b, k):
            return False
    for i, d1 in enumerate(diagonals):
        for d2 in diagonals[i + 1 :]:
            if crossing(d1, d2):
                return False
    return all(len(face) == 4 for face in faces_of(diagonals, k))


class Tiling:
    """A quadrilateral tiling of the convex 2k-gon."""

    __slots__ = ("k", "diagonals", "_tiles")

    def __init__(self, k, diagonals):
        if k < 2:
            raise ValueError("tilings need k >= 2")
        diagonals = frozenset(tuple(sorted(d)) for d in diagonals)
        if not is_quadrangulation(diagonals, k):
            raise ValueError(
                f"diagonals {sorted(diagonals)} do not quadrangulate the {2 * k}-gon"
            )
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "diagonals", diagonals)
        object.__setattr__(self, "_tiles", None)

    def __setattr__(self, name, value):
        raise AttributeError("Tiling is immutable")

    def tiles(self):
        """The quadrilateral faces, clockwise, smallest vertex first."""
        if self._tiles is None:
            object.__setattr__(self, "_tiles", tuple(faces_of(self.diagonals, self.k)))
        return self._tiles

    def sort_key(self):
        return tuple(sorted(self.diagonals))

    def __eq__(self, other):
        return (
            isinstance(other, Tiling)
            and self.k == other.k
            and self.diagonals == other.diagonals
        )

    def __hash__(self):
        return hash((self.k, self.diagonals))

    def __repr__(self):
        return f"Tiling(k={self.k}, diagonals={sorted(self.diagonals)})"


def enumerate_tilings(k, cap=ENUMERATION_CAP):
    """All quadrilateral tilings, sorted by diagonal set."""
    if k < 2:
        raise ValueError("tilings need k >= 2")
    if k > cap:
        raise BudgetError(f"k={k} exceeds the enumeration cap {cap}")

    def quads(region):
        # all ways to cut the region (cyclic vertex tuple, even length >= 4)
        # into quadrilaterals; the face containing edge (region[0], region[1])
        # is (region[0], region[1], region[i], region[j])
        if len(region) == 4:
            yield (region,)
            return
        r = len(region)
        for i in range(2, r - 1):
            for j in range(i + 1, r):
                # the three leftover regions have i, j-i+1, and r-j+1
                # vertices; all must be even to admit quadrilaterals
                if i % 2 or (j - i + 1) % 2 or (r - j + 1) % 2:
                    continue
                face = (region[0], region[1], region[i], region[j])
                parts = [
                    region[1 : i + 1],
                    region[i : j + 1],
                    region[j:] + region[:1],
                ]
                sub_lists = [[()]]
                for part in parts:
                    if len(part) < 4:
                        continue
                    sub_lists.append(list(quads(part)))
                combos = [()]
                for options in sub_lists:
                    combos = [c + o for c in combos for o in options]
                for combo in combos:
                    yield (face,) + combo

    out = []
    for faces in quads(tuple(range(1, 2 * k + 1))):
        diagonals = set()
        for face in faces:
            for u, v in zip(face, face[1:] + face[:1]):
                if not _is_polygon_side(u, v, k):
                    diagonals.add(tuple(sorted((u, v))))
        out.append(Tiling(k, diagonals))
    out.sort(key=Tiling.sort_key)
    return out


def hexagon_neighbors(tiling):
    """Tilings one hexagon move away.

    Removing any diagonal merges its two tiles into a hexagon whose three
    principal diagonals include the removed one; each of the other two splits
    the hexagon back into quadrilaterals.
    """
    neighbors = []
    for d in sorted(tiling.diagonals):
        sharing = [t for t in tiling.tiles() if set(d) <= set(t)]
        hexagon = sorted(set(sharing[0]) | set(sharing[1]))
        principal = [
            tuple(sorted((hexagon[i], hexagon[i + 3]))) for i in range(3)
        ]
        for p in principal:
            if p != d:
                neighbors.append(
                    Tiling(tiling.k, (tiling.diagonals - {d}) | {p})
                )
    return neighbors


class FlipGraph(NamedTuple):
    vertices: tuple
    edges: tuple
    connected: bool
    spanning_tree: tuple


def flip_graph(k, cap=ENUMERATION_CAP):
    """The hexagon-move graph with a breadth-first connectivity certificate."""
    tilings = enumerate_tilings(k, cap=cap)
    index = {t: i for i, t in enumerate(tilings)}
    edges = set()
    adjacency = [[] for _ in tilings]
    for i, t in enumerate(tilings):
        for nb in hexagon_neighbors(t):
            j = index[nb]
            if i != j:
                edges.add((min(i, j), max(i, j)))
                adjacency[i].append(j)
    seen = {0}
    frontier = [0]
    tree = []
    while frontier:
        nxt = []
        for i in frontier:
            for j in sorted(set(adjacency[i])):
                if j not in seen:
                    seen.add(j)
                    tree.append((i, j))
                    nxt.append(j)
        frontier = nxt
    return FlipGraph(
        vertices=tuple(tilings),
        edges=tuple(sorted(edges)),
        connected=len(seen) == len(tilings),
        spanning_tree=tuple(tree),
    )


def to_dot(graph):
    """A deterministic DOT rendering of a flip graph."""
    lines = ["graph flips {"]
    for i, t in enumerate(graph.vertices):
        label = ";".join(f"{a}-{b}" for a, b in sorted(t.diagonals)) or "square"
        lines.append(f'  t{i} [label="{label}"];')
    for i, j in graph.edges:
        lines.append(f"  t{i} -- t{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _tile_sides(tile):
    return [tuple(sorted((u, v))) for u, v in zip(tile, tile[1:] + tile[:1])]


def _star_corner(tile, k):
    """The marked even corner: even endpoint of the tile's smallest diagonal
    side; the lone k=2 tile has no diagonal and takes vertex 2."""
    diag_sides = sorted(
        s for s in _tile_sides(tile) if not _is_polygon_side(s[0], s[1], k)
    )
    if not diag_sides:
        return 2
    return next(v for v in diag_sides[0] if v % 2 == 0)


class TangleSkeleton(NamedTuple):
    k: int
    tiling: Tiling
    slots: tuple  # (tile, star corner) per slot, lexicographic tile order


def tiling_to_tangle(tiling):
    """The k-strand tangle skeleton of a tiling: one 2-box slot per tile."""
    if tiling.k > 4:
        raise ValueError("tangle construction is scoped to k <= 4")
    slots = tuple(
        (tile, _star_corner(tile, tiling.k)) for tile in tiling.tiles()
    )
    return TangleSkeleton(k=tiling.k, tiling=tiling, slots=slots)


def fan_tiling(k):
    """The fan from vertex 2, whose tangle realizes the standard basis map."""
    return Tiling(k, {(2, 2 * j + 3) for j in range(1, k - 1)})


def _mirror_vertex(v, k):
    return (2 * k + 2 - v - 1) % (2 * k) + 1


def _cw_tiles_at(vertex, tiles, k):
    """Tiles incident to a vertex, clockwise: ordered by the cyclic distance
    from the vertex to their nearer neighboring corner."""
    incident = [t for t in tiles if vertex in t]

    def key(tile):
        at = tile.index(vertex)
        nb1 = tile[(at + 1) % 4]
        nb2 = tile[(at - 1) % 4]
        return min((nb1 - vertex) % (2 * k), (nb2 - vertex) % (2 * k))

    return sorted(incident, key=key)


def pairing_network(skeleton):
    """Close a skeleton against the mirrored dual fan.

    Returns (network, standard_boxes, dual_boxes): the slot boxes carry no
    labels; loops circle the glued even vertices, listing first the
    skeleton's tiles around the vertex and then the dual fan's tiles around
    the mirrored vertex, both clockwise in their own polygon.
    """
    k = skeleton.k
    two_k = 2 * k
    # fan tiles in spoke order: slot R_m pairs against the (k-m)-th spoke
    fan_tiles = [
        tuple(sorted((2, 2 * j + 1, 2 * j + 2, 2 * j + 3)))
        for j in range(1, k - 1)
    ]
    fan_tiles.append(tuple(sorted((1, 2, two_k - 1, two_k))))
    p_box = {tile: f"L{m + 1}" for m, (tile, _) in enumerate(skeleton.slots)}
    p_star = {tile: corner for tile, corner in skeleton.slots}
    q_tiles = []
    q_box, q_star = {}, {}
    for j, tile in enumerate(fan_tiles):
        mirrored = tuple(sorted(_mirror_vertex(v, k) for v in tile))
        q_tiles.append(mirrored)
        q_box[mirrored] = f"R{k - 1 - j}"
        q_star[mirrored] = two_k
    loops = []
    for v in range(2, two_k + 1, 2):
        w = _mirror_vertex(v, k)
        loop = [
            Pass(p_box[t], STAR if p_star[t] == v else OTHER)
            for t in _cw_tiles_at(v, [tile for tile, _ in skeleton.slots], k)
        ]
        loop.extend(
            Pass(q_box[t], STAR if q_star[t] == w else OTHER)
            for t in _cw_tiles_at(w, q_tiles, k)
        )
        loops.append(loop)
    boxes = {name: None for name in p_box.values()}
    boxes.update({name: None for name in q_box.values()})
    network = LabeledNetwork(boxes, loops)
    standard = tuple(f"L{m}" for m in range(1, k))
    dual = tuple(f"R{m}" for m in range(1, k))
    return network, standard, dual


def network_gram(algebra, network, standard_boxes, dual_boxes, max_entries=10000):
    """The delta^{-k} scaled pairing matrix over all basis labelings.

    Rows run over standard-slot multi-indices, columns over dual-slot
    multi-indices, both lexicographic; k is inferred as one plus the slot
    count on either side.
    """
    n = algebra.n
    rows = n ** len(standard_boxes)
    cols = n ** len(dual_boxes)
    if rows * cols > max_entries:
        raise BudgetError(
            f"gram needs {rows * cols} entries, over the budget {max_entries}"
        )
    free = [(b, "standard") for b in standard_boxes]
    free += [(b, "dual") for b in dual_boxes]
    table = evaluate_with_free_slots(network, algebra, free)
    scale = algebra.delta.inverse() ** (len(standard_boxes) + 1)
    zero = algebra.field.zero
    mat = [[zero] * cols for _ in range(rows)]
    n_std = len(standard_boxes)
    for idx, value in table.items():
        row = 0
        for i in idx[:n_std]:
            row = row * n + i
        col = 0
        for j in idx[n_std:]:
            col = col * n + j
        mat[row][col] = value * scale
    return mat


def skeleton_gram(algebra, skeleton, max_entries=10000):
    """The pairing matrix of a skeleton's slot map against the dual fan."""
    network, standard, dual = pairing_network(skeleton)
    return network_gram(algebra, network, standard, dual, max_entries=max_entries)


def surjectivity_gram(algebra, skeleton, max_entries=10000):
    """Gram rank of the skeleton's slot map against the dual fan family.

    Full rank n^(k-1) certifies that labeling the skeleton's slots with all
    basis tuples spans the k-strand space.
    """
    return exactlin.rank(skeleton_gram(algebra, skeleton, max_entries=max_entries))
