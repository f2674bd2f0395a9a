"""Multiplication tables of the small finite groups used as test stock.

A GroupTable is pure combinatorics: element labels, a multiplication table
of indices with the identity at index 0, and the inverse permutation.  The
group algebras built on top of these (see hopf.group_algebra) provide both
commutative-noncocommutative and noncommutative-cocommutative Hopf algebras
once duals are taken.
"""

from __future__ import annotations

from itertools import permutations


class GroupTable:
    """A finite group given by labels and a multiplication table."""

    def __init__(self, name, labels, table):
        self.name = name
        self.labels = list(labels)
        self.table = [list(row) for row in table]
        size = len(self.labels)
        if any(len(row) != size for row in self.table) or len(self.table) != size:
            raise ValueError("malformed multiplication table")
        if any(self.table[0][j] != j or self.table[j][0] != j for j in range(size)):
            raise ValueError("index 0 must be the identity")
        self.inverse = [row.index(0) for row in self.table]

    def __len__(self):
        return len(self.labels)

    def __repr__(self):
        return f"GroupTable({self.name}, order {len(self)})"

    def is_group(self):
        """Brute-force check of associativity and invertibility."""
        size = len(self)
        t = self.table
        for i in range(size):
            if 0 not in t[i]:
                return False
        return all(
            t[t[i][j]][k] == t[i][t[j][k]]
            for i in range(size)
            for j in range(size)
            for k in range(size)
        )


def cyclic_group(order):
    labels = ["e"] + [f"g{k}" if k > 1 else "g" for k in range(1, order)]
    table = [[(i + j) % order for j in range(order)] for i in range(order)]
    return GroupTable(f"Z/{order}", labels, table)


def klein_group():
    """Z/2 x Z/2 with components multiplied by xor on the index bits."""
    labels = ["e", "a", "b", "ab"]
    table = [[i ^ j for j in range(4)] for i in range(4)]
    return GroupTable("Z/2xZ/2", labels, table)


def symmetric_group_3():
    """S3 as permutations of {0,1,2}; product g*h acts by g after h."""
    perms = [(0, 1, 2), (1, 0, 2), (2, 1, 0), (0, 2, 1), (1, 2, 0), (2, 0, 1)]
    labels = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"]
    index = {p: i for i, p in enumerate(perms)}
    assert sorted(perms) == sorted(permutations(range(3)))

    def compose(g, h):
        return tuple(g[h[x]] for x in range(3))

    table = [[index[compose(g, h)] for h in perms] for g in perms]
    return GroupTable("S3", labels, table)
