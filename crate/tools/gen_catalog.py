#!/usr/bin/env python3
"""Regenerate the group catalog under crates/core/data/catalog.

Every group is written as a list of permutation generators acting on
{0..m-1}. Composition of generators happens in the Rust loader, which
also validates the declared order.

Usage: python3 tools/gen_catalog.py [output_dir]
"""
import itertools
import os
import sys

OUT = sys.argv[1] if len(sys.argv) > 1 else os.path.join(
    os.path.dirname(__file__), "..", "crates", "core", "data", "catalog")


def cyclic(n):
    return [[(i + 1) % n for i in range(n)]] if n > 1 else []


def direct_product(*factors):
    """factors: list of (degree, generators). Acts on the disjoint union."""
    gens = []
    offset = 0
    total = sum(d for d, _ in factors)
    for degree, fgens in factors:
        for g in fgens:
            perm = list(range(total))
            for i in range(degree):
                perm[offset + i] = offset + g[i]
            gens.append(perm)
        offset += degree
    return total, gens


def metacyclic_regular(m, r, y_square_power):
    """Regular representation of <x, y | x^m, y^2 = x^s, y x y^-1 = x^r>.

    Elements are x^a y^b with 0 <= a < m, b in {0, 1}; index a + m*b.
    """
    def mul(e, f):
        a, b = e
        c, d = f
        a2 = (a + (r ** b) * c) % m
        b2 = b + d
        if b2 == 2:
            a2 = (a2 + y_square_power) % m
            b2 = 0
        return (a2, b2)

    elems = [(a, b) for b in range(2) for a in range(m)]
    index = {e: i for i, e in enumerate(elems)}
    gx = [index[mul((1, 0), e)] for e in elems]
    gy = [index[mul((0, 1), e)] for e in elems]
    return 2 * m, [gx, gy]


def dihedral_on_polygon(m):
    rot = [(i + 1) % m for i in range(m)]
    refl = [(-i) % m for i in range(m)]
    return m, [rot, refl]


def matrix_group_on_vectors(mats, q, include_zero):
    vecs = [v for v in itertools.product(range(q), repeat=len(mats[0]))
            if include_zero or any(v)]
    index = {v: i for i, v in enumerate(vecs)}

    def apply(a, v):
        return tuple(sum(a[i][j] * v[j] for j in range(len(v))) % q
                     for i in range(len(v)))

    return len(vecs), [[index[apply(a, v)] for v in vecs] for a in mats]


def affine_on_plane(mats, q):
    vecs = list(itertools.product(range(q), repeat=2))
    index = {v: i for i, v in enumerate(vecs)}
    gens = []
    for a in mats:
        gens.append([index[tuple((a[i][0] * v[0] + a[i][1] * v[1]) % q
                                 for i in range(2))] for v in vecs])
    for t in [(1, 0), (0, 1)]:
        gens.append([index[((v[0] + t[0]) % q, (v[1] + t[1]) % q)]
                     for v in vecs])
    return len(vecs), gens


ENTRIES = []


def add(name, order, description, gens, names=None):
    ENTRIES.append((name, order, description, gens, names))


for p, n_max in [(2, 4), (3, 4), (5, 4)]:
    for n in range(1, n_max + 1):
        order = p ** n
        add(f"C{order}", order, f"cyclic group of order {order}",
            cyclic(order), ["x"])
add("C1", 1, "trivial group", [], [])

_, g = direct_product((2, cyclic(2)[0:1]), (2, cyclic(2)))
add("V4", 4, "Klein four group C2 x C2", g, ["a", "b"])
_, g = direct_product((2, cyclic(2)), (4, cyclic(4)))
add("C2xC4", 8, "direct product C2 x C4", g, ["a", "b"])
_, g = direct_product((2, cyclic(2)), (2, cyclic(2)), (2, cyclic(2)))
add("C2xC2xC2", 8, "elementary abelian group of order 8", g, ["a", "b", "c"])
_, g = direct_product((3, cyclic(3)), (3, cyclic(3)))
add("C3xC3", 9, "elementary abelian group of order 9", g, ["a", "b"])
_, g = direct_product((2, cyclic(2)), (8, cyclic(8)))
add("C2xC8", 16, "direct product C2 x C8", g, ["a", "b"])
_, g = direct_product((4, cyclic(4)), (4, cyclic(4)))
add("C4xC4", 16, "direct product C4 x C4", g, ["a", "b"])
_, g = direct_product((3, cyclic(3)), (9, cyclic(9)))
add("C3xC9", 27, "direct product C3 x C9", g, ["a", "b"])

for m in [4, 8, 16]:
    _, g = dihedral_on_polygon(m)
    add(f"D{2 * m}", 2 * m, f"dihedral group of order {2 * m}", g, ["x", "y"])

_, g = metacyclic_regular(8, 3, 0)
add("SD16", 16, "semidihedral group of order 16", g, ["x", "y"])
_, g = metacyclic_regular(8, 5, 0)
add("M16", 16, "modular group of order 16", g, ["x", "y"])
for n in [3, 4, 5]:
    m = 2 ** (n - 1)
    _, g = metacyclic_regular(m, m - 1, m // 2)
    add(f"Q{2 ** n}", 2 ** n, f"generalized quaternion group of order {2 ** n}",
        g, ["x", "y"])

_, q8 = metacyclic_regular(4, 3, 2)
_, g = direct_product((2, cyclic(2)), (8, q8))
add("C2xQ8", 16, "direct product C2 x Q8", g, ["a", "x", "y"])

heis = [
    [[1, 1, 0], [0, 1, 0], [0, 0, 1]],
    [[1, 0, 0], [0, 1, 1], [0, 0, 1]],
]
_, g = matrix_group_on_vectors(heis, 3, True)
add("He27", 27, "Heisenberg group of order 27 (exponent 3)", g, ["a", "b"])

add("S3", 6, "symmetric group on 3 letters", [[1, 0, 2], [1, 2, 0]], ["s", "t"])
add("S4", 24, "symmetric group on 4 letters",
    [[1, 0, 2, 3], [1, 2, 3, 0]], ["s", "t"])
add("A4", 12, "alternating group on 4 letters",
    [[1, 2, 0, 3], [1, 0, 3, 2]], ["s", "t"])

_, g = matrix_group_on_vectors([[[1, 1], [0, 1]], [[1, 0], [1, 1]]], 3, False)
add("SL2F3", 24, "SL(2, F_3) acting on the nonzero vectors of F_3^2", g,
    ["u", "l"])

quat_i = [[0, 2], [1, 0]]
quat_j = [[1, 1], [1, 2]]
_, g = affine_on_plane([quat_i, quat_j], 3)
add("Q8_semidirect_F3sq", 72,
    "Q8 acting on F_3^2 through i -> [[0,-1],[1,0]], j -> [[1,1],[1,-1]], "
    "realized as affine maps of the plane",
    g, ["i", "j", "t1", "t2"])


def fmt_perm(perm):
    return "[" + ", ".join(str(v) for v in perm) + "]"


os.makedirs(OUT, exist_ok=True)
for name, order, description, gens, names in ENTRIES:
    lines = [
        f'name = "{name}"',
        f"order = {order}",
        f'description = "{description}"',
    ]
    if names is not None:
        lines.append("generator_names = [" +
                     ", ".join(f'"{s}"' for s in names) + "]")
    if gens:
        lines.append("generators = [")
        for perm in gens:
            lines.append("    " + fmt_perm(perm) + ",")
        lines.append("]")
    else:
        lines.append("generators = []")
    with open(os.path.join(OUT, f"{name}.toml"), "w") as fh:
        fh.write("\n".join(lines) + "\n")
print(f"wrote {len(ENTRIES)} catalog entries to {OUT}")
