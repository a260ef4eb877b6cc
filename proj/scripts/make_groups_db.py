#!/usr/bin/env python3
"""Builds data/groups.txt from the operator catalog dumped by extract_sg_ops.mjs.

The 3D entries come from the standard PDB/CCP4 symmetry-operation catalog
(conventional settings: monoclinic unique axis b, rhombohedral groups on
hexagonal axes with explicit centering translations). The 17 plane groups are
written out directly below.

Every group is validated before emission: integer unimodular matrices,
translation denominators <= 12, closure / identity / inverses, operation count
against the crystal-class order times centering multiplicity, and the known
centrosymmetric ranges. A minimal generator set is selected greedily and the
emitted line is re-parsed and re-expanded to confirm it reproduces the full
operation set exactly.

Usage: make_groups_db.py sg_ops.json > groups.txt
"""

import json
import sys
from fractions import Fraction
from itertools import product

# ---------------------------------------------------------------------------
# exact affine ops: (M, t) with M a tuple-of-tuples of ints, t a tuple of
# Fractions reduced into [0,1)


def mod1(f):
    return f - (f.numerator // f.denominator)


def mat_mul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
                 for i in range(n))


def mat_vec(a, v):
    n = len(a)
    return tuple(sum(a[i][k] * v[k] for k in range(n)) for i in range(n))


def compose(p, q):
    """p after q: (Mp Mq, Mp tq + tp) with the translation reduced mod 1."""
    m = mat_mul(p[0], q[0])
    t = tuple(mod1(x + y) for x, y in zip(mat_vec(p[0], q[1]), p[1]))
    return (m, t)


def identity_op(dim):
    return (tuple(tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim)),
            (Fraction(0),) * dim)


def det(m):
    if len(m) == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def close(ops, dim, cap=200):
    todo = [identity_op(dim)] + list(ops)
    seen = set(todo)
    queue = list(seen)
    while queue:
        a = queue.pop()
        for b in list(seen):
            for c in (compose(a, b), compose(b, a)):
                if c not in seen:
                    seen.add(c)
                    queue.append(c)
                    if len(seen) > cap:
                        raise RuntimeError("closure exceeded cap")
    return seen


# ---------------------------------------------------------------------------
# triplet formatting / parsing (mirrors the C++ grammar)

AXES = "xyz"


def format_op(op, dim):
    coords = []
    for i in range(dim):
        s = ""
        for j in range(dim):
            c = op[0][i][j]
            if c == 0:
                continue
            if c not in (1, -1):
                raise ValueError("coefficient out of range")
            s += ("-" if c < 0 else ("+" if s else "")) + AXES[j]
        t = op[1][i]
        if t != 0:
            s += ("+" if s else "") + f"{t.numerator}/{t.denominator}"
        if not s:
            s = "0"  # should never happen for invertible ops
        coords.append(s)
    return ",".join(coords)


def parse_op(text, dim):
    coords = text.split(",")
    assert len(coords) == dim, text
    rows, ts = [], []
    for expr in coords:
        row = [0] * dim
        t = Fraction(0)
        i, n = 0, len(expr)
        while i < n:
            sign = 1
            if expr[i] in "+-":
                sign = -1 if expr[i] == "-" else 1
                i += 1
            if expr[i] in AXES:
                row[AXES.index(expr[i])] += sign
                i += 1
            else:
                j = i
                while j < n and expr[j].isdigit():
                    j += 1
                num = int(expr[i:j])
                den = 1
                if j < n and expr[j] == "/":
                    k = j + 1
                    j = k
                    while j < n and expr[j].isdigit():
                        j += 1
                    den = int(expr[k:j])
                t += sign * Fraction(num, den)
                i = j
        rows.append(tuple(row))
        ts.append(mod1(t))
    return (tuple(rows), tuple(ts))


# ---------------------------------------------------------------------------
# validation tables

def class_order_3d(num):
    ranges = [
        (1, 1, 1), (2, 2, 2),
        (3, 5, 2), (6, 9, 2), (10, 15, 4),
        (16, 24, 4), (25, 46, 4), (47, 74, 8),
        (75, 80, 4), (81, 82, 4), (83, 88, 8), (89, 98, 8), (99, 110, 8),
        (111, 122, 8), (123, 142, 16),
        (143, 146, 3), (147, 148, 6), (149, 155, 6), (156, 161, 6),
        (162, 167, 12),
        (168, 173, 6), (174, 174, 6), (175, 176, 12), (177, 182, 12),
        (183, 186, 12), (187, 190, 12), (191, 194, 24),
        (195, 199, 12), (200, 206, 24), (207, 214, 24), (215, 220, 24),
        (221, 230, 48),
    ]
    for lo, hi, order in ranges:
        if lo <= num <= hi:
            return order
    raise ValueError(num)


CENTRO_3D = [(2, 2), (10, 15), (47, 74), (83, 88), (123, 142), (147, 148),
             (162, 167), (175, 176), (191, 194), (200, 206), (221, 230)]

CENTERING_MULT = {"P": 1, "A": 2, "B": 2, "C": 2, "I": 2, "F": 4, "H": 3}


def split_name(name):
    toks = name.split()
    lattice, first_rest = toks[0][0], toks[0][1:]  # some names glue 'P4/m m m'
    rest = ([first_rest] if first_rest else []) + toks[1:]
    return lattice, rest


def symbol_from_name(name):
    lattice, rest = split_name(name)
    if len(rest) == 3 and rest[0] == "1" and rest[2] == "1":  # monoclinic
        rest = [rest[1]]
    out = []
    for tok in rest:
        neg = tok.startswith("-")
        body = tok[1:] if neg else tok
        if (len(body) >= 2 and body[0].isdigit() and body[1].isdigit()
                and int(body[1]) < int(body[0])):
            body = body[0] + "_" + body[1:]
        out.append(("-" if neg else "") + body)
    if lattice == "H":
        lattice = "R"
    return lattice + "".join(out)


def pick_generators(ops, dim):
    """Centering translations are kept as explicit generators; point operations
    are then added greedily until the closure reproduces the full set."""
    full = set(ops)
    ident = identity_op(dim)
    centerings = sorted(op for op in ops if op[0] == ident[0] and op != ident)
    gens = list(centerings)
    have = close(gens, dim) if gens else {ident}
    for op in sorted(ops, key=lambda o: (o[0], o[1])):
        if op not in have:
            gens.append(op)
            have = close(gens, dim)
            if have == full:
                break
    assert have == full
    # drop redundant non-centering generators
    i = len(centerings)
    while i < len(gens):
        trial = gens[:i] + gens[i + 1:]
        if trial and close(trial, dim) == full:
            gens = trial
        else:
            i += 1
    return gens


def emit(dim, num, symbol, ops, gens=None):
    ops = set(ops)
    ident = identity_op(dim)
    assert ident in ops
    for m, t in ops:
        assert det(m) in (1, -1), (num, m)
        assert all(f.denominator <= 12 and 0 <= f < 1 for f in t), (num, t)
    assert close(ops, dim) == ops, f"group {num} not closed"

    if gens is None:
        gens = pick_generators(ops, dim) or [ident]
    line_gens = ";".join(format_op(g, dim) for g in gens)
    # round-trip: the emitted text must regenerate the exact operation set
    reparsed = [parse_op(s, dim) for s in line_gens.split(";")]
    assert reparsed == gens
    assert close(reparsed, dim) == ops, f"group {num} generator round-trip failed"
    return f"{dim} {num} {symbol} {line_gens}"


WALLPAPER = [
    (1, "p1", ["x,y"]),
    (2, "p2", ["-x,-y"]),
    (3, "pm", ["-x,y"]),
    (4, "pg", ["-x,y+1/2"]),
    (5, "cm", ["-x,y", "x+1/2,y+1/2"]),
    (6, "pmm", ["-x,-y", "-x,y"]),
    (7, "pmg", ["-x,-y", "-x+1/2,y"]),
    (8, "pgg", ["-x,-y", "-x+1/2,y+1/2"]),
    (9, "cmm", ["-x,-y", "-x,y", "x+1/2,y+1/2"]),
    (10, "p4", ["-y,x"]),
    (11, "p4m", ["-y,x", "-x,y"]),
    (12, "p4g", ["-y,x", "-x+1/2,y+1/2"]),
    (13, "p3", ["-y,x-y"]),
    (14, "p3m1", ["-y,x-y", "-y,-x"]),
    (15, "p31m", ["-y,x-y", "y,x"]),
    (16, "p6", ["x-y,x"]),
    (17, "p6m", ["x-y,x", "-y,-x"]),
]

WALLPAPER_ORDERS = {1: 1, 2: 2, 3: 2, 4: 2, 5: 4, 6: 4, 7: 4, 8: 4, 9: 8,
                    10: 4, 11: 8, 12: 8, 13: 3, 14: 6, 15: 6, 16: 6, 17: 12}


def main():
    catalog = json.load(open(sys.argv[1]))
    assert len(catalog) == 230

    lines = []
    for num, symbol, gen_strs in WALLPAPER:
        gens = [parse_op(s, 2) for s in gen_strs]
        ops = close(gens, 2)
        assert len(ops) == WALLPAPER_ORDERS[num], (symbol, len(ops))
        lines.append(emit(2, num, symbol, ops, gens=gens))

    for entry in catalog:
        num, name = entry["num"], entry["name"]
        ops = set()
        for op in entry["ops"]:
            m = tuple(tuple(int(round(c)) for c in row[:3]) for row in op)
            for row, irow in zip(op, m):
                assert all(abs(c - i) < 1e-9 for c, i in zip(row[:3], irow))
            t = tuple(mod1(Fraction(round(row[3] * 12), 12)) for row in op)
            for row, f in zip(op, t):
                assert abs(mod1(Fraction(round(row[3] * 12), 12)) - f) == 0
                assert abs(row[3] % 1.0 - float(f)) < 1e-6, (num, row[3])
            ops.add((m, t))
        assert len(ops) == len(entry["ops"]), f"group {num} has duplicate ops"

        n_centering = sum(1 for m, t in ops if m == identity_op(3)[0])
        lattice_letter = split_name(name)[0]
        assert n_centering == CENTERING_MULT[lattice_letter], (num, name)
        assert len(ops) == class_order_3d(num) * n_centering, (num, len(ops))

        minus_i = tuple(tuple(-1 if i == j else 0 for j in range(3)) for i in range(3))
        has_inversion = any(m == minus_i for m, t in ops)
        expect_centro = any(lo <= num <= hi for lo, hi in CENTRO_3D)
        assert has_inversion == expect_centro, (num, name)

        lines.append(emit(3, num, symbol_from_name(name), ops))

    print("\n".join(lines))


if __name__ == "__main__":
    main()
