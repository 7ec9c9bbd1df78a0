"""Search for depth-optimal sorting networks with a SAT solver.

Used once to produce the frozen table in ``src/hwproj/_optimal_networks.py``.
Needs ``python-sat`` (the ``tools`` extra); the package itself never imports it.

The encoding fixes a prefix of layers (a maximal first layer, or Green's
hypercube filter for 16 lanes), simulates every distinct 0-1 vector that
survives the prefix, and asks for ``depth - len(prefix)`` further layers that
sort all of them. By the zero-one principle that is a full sorting network.

    python tools/find_optimal_networks.py 10 7
    python tools/find_optimal_networks.py --emit > src/hwproj/_optimal_networks.py
"""
from __future__ import annotations

import itertools
import sys

from pysat.card import CardEnc, EncType
from pysat.formula import IDPool
from pysat.solvers import Cadical153


def first_layer(n):
    return [[(i, i + 1) for i in range(0, n - 1, 2)]]


def green_filter(n):
    layers = []
    k = 1
    while k < n:
        layers.append([(i, i | k) for i in range(n) if not i & k and (i | k) < n])
        k <<= 1
    return layers


def run_prefix(prefix, n):
    outs = set()
    for x in range(1 << n):
        bits = [(x >> i) & 1 for i in range(n)]
        for layer in prefix:
            for i, j in layer:
                a, b = bits[i], bits[j]
                bits[i], bits[j] = min(a, b), max(a, b)
        if any(bits[i] > bits[i + 1] for i in range(n - 1)):
            outs.add(tuple(bits))
    return sorted(outs)


def search(n, depth, prefix):
    free = depth - len(prefix)
    inputs = run_prefix(prefix, n)
    pool = IDPool()
    pairs = list(itertools.combinations(range(n), 2))
    g = {(k, i, j): pool.id(("g", k, i, j)) for k in range(free) for i, j in pairs}
    clauses = []
    for k in range(free):
        for c in range(n):
            lits = [g[k, min(c, o), max(c, o)] for o in range(n) if o != c]
            card = CardEnc.atmost(lits, bound=1, vpool=pool, encoding=EncType.seqcounter)
            clauses.extend(card.clauses)
    used = {}
    for k in range(free):
        for c in range(n):
            u = pool.id(("u", k, c))
            used[k, c] = u
            lits = [g[k, min(c, o), max(c, o)] for o in range(n) if o != c]
            clauses.append([-u] + lits)
            for lit in lits:
                clauses.append([-lit, u])
    true = pool.id("T")
    clauses.append([true])
    for t, x in enumerate(inputs):
        val = [true if b else -true for b in x]
        for k in range(free):
            nxt = [pool.id(("v", t, k, c)) for c in range(n)]
            for c in range(n):
                # unused channel passes through
                clauses.append([used[k, c], -val[c], nxt[c]])
                clauses.append([used[k, c], val[c], -nxt[c]])
            for i, j in pairs:
                s = g[k, i, j]
                a, b, lo, hi = val[i], val[j], nxt[i], nxt[j]
                clauses += [[-s, -lo, a], [-s, -lo, b], [-s, lo, -a, -b]]
                clauses += [[-s, hi, -a], [-s, hi, -b], [-s, -hi, a, b]]
            val = nxt
        ones = sum(x)
        for c in range(n):
            clauses.append([val[c]] if c >= n - ones else [-val[c]])
    with Cadical153(bootstrap_with=clauses) as solver:
        if not solver.solve():
            return None
        model = set(l for l in solver.get_model() if l > 0)
    layers = [list(layer) for layer in prefix]
    for k in range(free):
        layers.append([(i, j) for i, j in pairs if g[k, i, j] in model])
    return layers


def sorts_all(layers, n):
    for x in range(1 << n):
        bits = [(x >> i) & 1 for i in range(n)]
        for layer in layers:
            for i, j in layer:
                a, b = bits[i], bits[j]
                bits[i], bits[j] = min(a, b), max(a, b)
        if any(bits[i] > bits[i + 1] for i in range(n - 1)):
            return False
    return True


def drop_redundant(layers, n):
    layers = [list(layer) for layer in layers]
    for k in range(len(layers)):
        for pair in list(layers[k]):
            layers[k].remove(pair)
            if not sorts_all(layers, n):
                layers[k].append(pair)
        layers[k].sort()
    return [layer for layer in layers if layer]


def restrict(layers, n):
    out = [[(i, j) for i, j in layer if j < n] for layer in layers]
    return [layer for layer in out if layer]


BATCHER_4 = [[(0, 1), (2, 3)], [(0, 2), (1, 3)], [(1, 2)]]
BATCHER_8 = [
    [(0, 1), (2, 3), (4, 5), (6, 7)],
    [(0, 2), (1, 3), (4, 6), (5, 7)],
    [(1, 2), (5, 6)],
    [(0, 4), (1, 5), (2, 6), (3, 7)],
    [(2, 4), (3, 5)],
    [(1, 2), (3, 4), (5, 6)],
]
OPTIMAL_DEPTH = [0, 0, 1, 3, 3, 5, 5, 6, 6, 7, 7, 8, 8, 9, 9, 9, 9]


def emit():
    roots = {2: [[(0, 1)]], 4: BATCHER_4, 8: BATCHER_8}
    for n in (6, 10, 12, 16):
        prefix = green_filter(n) if n == 16 else first_layer(n)
        roots[n] = drop_redundant(search(n, OPTIMAL_DEPTH[n], prefix), n)
    table = {1: []}
    for n in range(2, 17):
        root = min(r for r in roots if r >= n)
        table[n] = restrict(roots[root], n)
        assert len(table[n]) == OPTIMAL_DEPTH[n] and sorts_all(table[n], n)
    print('"""Delay-optimal sorting networks for 1 to 16 lanes.')
    print()
    print("Generated by tools/find_optimal_networks.py --emit; do not edit by hand.")
    print("Each entry is a list of parallel stages of (low, high) lane pairs.")
    print('"""')
    print()
    print("OPTIMAL_NETWORKS = {")
    for n in range(1, 17):
        print(f"    {n}: [")
        for layer in table[n]:
            print(f"        {layer},")
        print("    ],")
    print("}")


def main():
    if sys.argv[1:] == ["--emit"]:
        emit()
        return 0
    n, depth = int(sys.argv[1]), int(sys.argv[2])
    prefix = green_filter(n) if n == 16 else first_layer(n)
    layers = search(n, depth, prefix)
    if layers is None:
        print("UNSAT")
        return 1
    print(layers)
    return 0


if __name__ == "__main__":
    sys.exit(main())
