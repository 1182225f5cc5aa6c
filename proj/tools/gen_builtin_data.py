#!/usr/bin/env python3
"""Regenerate the built-in group and character-table data files.

Groups are closed from generators breadth-first (identity first, new elements
appended in discovery order, each element multiplied on the right by every
generator).  Permutations compose left to right: (p*q)(i) = q(p(i)).

Characters are built from explicit constructions (linear characters found as
homomorphisms into roots of unity, permutation characters, rotation and
quaternion representations) and checked for orthonormality before writing.
Nothing here uses the class-algebra eigen-decomposition of the C++ library,
so the shipped tables serve as an independent reference for it.

Usage: gen_builtin_data.py OUTDIR
"""

import cmath
import itertools
import math
import os
import sys


def perm_mul(p, q):
    return tuple(q[p[i]] for i in range(len(p)))


def cycle_perm(degree, *cycles):
    img = list(range(degree))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a - 1] = b - 1
    return tuple(img)


def mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def mat_key(m):
    return tuple(
        (round(z.real, 9) + 0.0, round(z.imag, 9) + 0.0) for row in m for z in row
    )


class Group:
    def __init__(self, name, gens, mul, identity, key=lambda g: g):
        self.name = name
        elems = [identity]
        index = {key(identity): 0}
        parent = [None]
        head = 0
        while head < len(elems):
            g = elems[head]
            for gi, s in enumerate(gens):
                h = mul(g, s)
                k = key(h)
                if k not in index:
                    index[k] = len(elems)
                    elems.append(h)
                    parent.append((head, gi))
            head += 1
        self.elems = elems
        self.parent = parent
        self.gens = gens
        n = len(elems)
        self.order = n
        self.table = [[index[key(mul(elems[a], elems[b]))] for b in range(n)] for a in range(n)]
        self.inv = [self.table[a].index(0) for a in range(n)]
        self.gen_index = [index[key(s)] for s in gens]
        self._classes()

    def _classes(self):
        n = self.order
        class_of = [-1] * n
        reps = []
        for g in range(n):
            if class_of[g] >= 0:
                continue
            c = len(reps)
            reps.append(g)
            for x in range(n):
                conj = self.table[self.table[self.inv[x]][g]][x]
                class_of[conj] = c
        self.class_of = class_of
        self.reps = reps
        self.sizes = [class_of.count(c) for c in range(len(reps))]

    def element_order(self, g):
        k, h = 1, g
        while h != 0:
            h = self.table[h][g]
            k += 1
        return k


def linear_characters(G):
    """All homomorphisms G -> C^*, found by assigning roots of unity to generators.

    Roots are tracked as exponents modulo a common period so values are exact
    up to a single call to exp.
    """
    orders = [G.element_order(gi) for gi in G.gen_index]
    period = math.lcm(*orders)
    choices = [[k * (period // m) for k in range(m)] for m in orders]
    found = []
    for assign in itertools.product(*choices):
        expo = [0] * G.order
        for e in range(1, G.order):
            p, gi = G.parent[e]
            expo[e] = (expo[p] + assign[gi]) % period
        ok = all(
            expo[G.table[a][b]] == (expo[a] + expo[b]) % period
            for a in range(G.order)
            for b in range(G.order)
        )
        if ok:
            found.append([root_of_unity(t, period) for t in expo])
    return found


def root_of_unity(t, period):
    # exact values at the quarter turns keep real characters exactly real
    if (4 * t) % period == 0:
        return [1 + 0j, 1j, -1 + 0j, -1j][(4 * t) // period]
    return cmath.exp(2j * math.pi * t / period)


def inner(G, f1, f2):
    return sum(f1[g] * f2[g].conjugate() for g in range(G.order)) / G.order


def write(G, chars, outdir):
    k = len(G.reps)
    assert len(chars) == k, (G.name, len(chars), k)
    for i, a in enumerate(chars):
        for j, b in enumerate(chars):
            want = 1.0 if i == j else 0.0
            assert abs(inner(G, a, b) - want) < 1e-9, (G.name, i, j)
        for g in range(G.order):
            assert abs(a[g] - a[G.reps[G.class_of[g]]]) < 1e-9
    rows = [[chi[r] for r in G.reps] for chi in chars]

    def sort_key(row):
        key = [round(row[0].real)]
        for z in row:
            key.append(-round(z.real, 6))
            key.append(-round(z.imag, 6))
        return key

    rows.sort(key=sort_key)

    os.makedirs(os.path.join(outdir, "groups"), exist_ok=True)
    os.makedirs(os.path.join(outdir, "tables"), exist_ok=True)
    with open(os.path.join(outdir, "groups", G.name + ".group"), "w") as f:
        f.write("group %s order %d\n" % (G.name, G.order))
        for row in G.table:
            f.write(" ".join(str(x) for x in row) + "\n")

    def fmt(z):
        re = 0.0 if abs(z.real) < 5e-16 else z.real
        im = 0.0 if abs(z.imag) < 5e-16 else z.imag
        s = "%.15f" % re
        s += ("-" if im < 0 else "+") + "%.15fi" % abs(im)
        return s

    with open(os.path.join(outdir, "tables", G.name + ".chartable"), "w") as f:
        f.write("chartable %s classes %d\n" % (G.name, k))
        f.write(" ".join(str(r) for r in G.reps) + "\n")
        f.write(" ".join(str(s) for s in G.sizes) + "\n")
        for row in rows:
            f.write(" ".join(fmt(z) for z in row) + "\n")


def perm_group(name, degree, gens):
    ident = tuple(range(degree))
    return Group(name, gens, perm_mul, ident)


def fixed_points(G):
    return [complex(sum(1 for i, x in enumerate(p) if i == x)) for p in G.elems]


def cyclic(n):
    return Group("Z%d" % n, [1 % n], lambda a, b: (a + b) % n, 0)


def build(outdir):
    for n in range(1, 13):
        G = cyclic(n)
        write(G, linear_characters(G), outdir)

    S3 = perm_group("S3", 3, [cycle_perm(3, (1, 2)), cycle_perm(3, (1, 2, 3))])
    lin = linear_characters(S3)
    std = [f - 1 for f in fixed_points(S3)]
    write(S3, lin + [std], outdir)

    S4 = perm_group("S4", 4, [cycle_perm(4, (1, 2)), cycle_perm(4, (1, 2, 3, 4))])
    lin = linear_characters(S4)
    sign = next(c for c in lin if any(abs(v + 1) < 1e-9 for v in c))
    std = [f - 1 for f in fixed_points(S4)]
    pairings = [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))]

    def pairing_fix(p):
        cnt = 0
        for pr in pairings:
            img = frozenset(frozenset(p[i] for i in blk) for blk in pr)
            if img == frozenset(frozenset(blk) for blk in pr):
                cnt += 1
        return complex(cnt)

    two = [pairing_fix(p) - 1 for p in S4.elems]
    write(S4, lin + [std, [a * b for a, b in zip(sign, std)], two], outdir)

    D4 = perm_group("D4", 4, [cycle_perm(4, (1, 2, 3, 4)), cycle_perm(4, (1, 3))])
    lin = linear_characters(D4)
    half_turn = D4.elems.index(cycle_perm(4, (1, 3), (2, 4)))
    two = [complex(2 if g == 0 else (-2 if g == half_turn else 0)) for g in range(D4.order)]
    write(D4, lin + [two], outdir)

    D5 = perm_group("D5", 5, [cycle_perm(5, (1, 2, 3, 4, 5)), cycle_perm(5, (2, 5), (3, 4))])
    lin = linear_characters(D5)
    extra = []
    for j in (1, 2):
        vals = []
        for p in D5.elems:
            k = (p[0] - 0) % 5
            if all(p[i] == (i + k) % 5 for i in range(5)):
                vals.append(complex(2 * math.cos(2 * math.pi * j * k / 5)))
            else:
                vals.append(0j)
        extra.append(vals)
    write(D5, lin + extra, outdir)

    A4 = perm_group("A4", 4, [cycle_perm(4, (1, 2, 3)), cycle_perm(4, (1, 2), (3, 4))])
    lin = linear_characters(A4)
    std = [f - 1 for f in fixed_points(A4)]
    write(A4, lin + [std], outdir)

    one = ((1 + 0j, 0j), (0j, 1 + 0j))
    qi = ((1j, 0j), (0j, -1j))
    qj = ((0j, 1 + 0j), (-1 + 0j, 0j))
    Q8 = Group("Q8", [qi, qj], mat_mul, one, key=mat_key)
    lin = linear_characters(Q8)
    tr = [m[0][0] + m[1][1] for m in Q8.elems]
    for a in range(Q8.order):
        for b in range(Q8.order):
            assert mat_key(mat_mul(Q8.elems[a], Q8.elems[b])) == mat_key(Q8.elems[Q8.table[a][b]])
    write(Q8, lin + [tr], outdir)


if __name__ == "__main__":
    if len(sys.argv) != 2:
        sys.exit(__doc__)
    build(sys.argv[1])
