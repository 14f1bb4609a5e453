#!/usr/bin/env python3
"""Regenerate the graph6 fixtures under fixtures/ from explicit constructions.

Every graph is rebuilt from combinatorial data and checked before it is
written. The C++ test suite re-certifies the parameters independently.
"""
import itertools
import json
import pathlib
import sys

import networkx as nx

OUT = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def srg_params(G):
    degs = {d for _, d in G.degree()}
    if len(degs) != 1:
        return None
    d = degs.pop()
    nb = {v: set(G[v]) for v in G}
    lam, mu = set(), set()
    for u, v in itertools.combinations(G.nodes(), 2):
        (lam if v in nb[u] else mu).add(len(nb[u] & nb[v]))
    if len(lam) > 1 or len(mu) > 1:
        return None
    return (G.number_of_nodes(), d, lam.pop() if lam else 0, mu.pop() if mu else 0)


def canonical(G):
    return nx.convert_node_labels_to_integers(G, ordering="sorted" if _sortable(G) else "default")


def _sortable(G):
    try:
        sorted(G.nodes())
        return True
    except TypeError:
        return False


# Golay code and the Steiner system S(3,6,22)

def hexads():
    g = [1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1]
    gens = []
    for s in range(12):
        w = [0] * 23
        for i, c in enumerate(g):
            if c:
                w[(i + s) % 23] = 1
        gens.append(w)
    octads = []
    for m in itertools.product([0, 1], repeat=12):
        w = [0] * 23
        for i in range(12):
            if m[i]:
                w = [(a + b) % 2 for a, b in zip(w, gens[i])]
        w = w + [sum(w) % 2]
        if sum(w) == 8:
            octads.append(frozenset(i for i in range(24) if w[i]))
    assert len(octads) == 759
    hx = sorted(sorted(o - {22, 23}) for o in octads if 22 in o and 23 in o)
    assert len(hx) == 77
    return [frozenset(h) for h in hx]


def m22_graph():
    hx = hexads()
    G = nx.Graph()
    G.add_nodes_from(range(len(hx)))
    for i, j in itertools.combinations(range(len(hx)), 2):
        if not hx[i] & hx[j]:
            G.add_edge(i, j)
    return G


def sims_gewirtz():
    hx = [h for h in hexads() if 21 not in h]
    G = nx.Graph()
    G.add_nodes_from(range(len(hx)))
    for i, j in itertools.combinations(range(len(hx)), 2):
        if not hx[i] & hx[j]:
            G.add_edge(i, j)
    return G


def cameron():
    hx = hexads()
    pairs = list(itertools.combinations(range(22), 2))
    G = nx.Graph()
    G.add_nodes_from(range(len(pairs)))
    for i, j in itertools.combinations(range(len(pairs)), 2):
        a, b = set(pairs[i]), set(pairs[j])
        if a & b:
            continue
        u = a | b
        if any(u <= h for h in hx):
            G.add_edge(i, j)
    return G


def hoffman_singleton():
    G = nx.Graph()
    for h in range(5):
        for j in range(5):
            G.add_edge(("P", h, j), ("P", h, (j + 1) % 5))
            G.add_edge(("Q", h, j), ("Q", h, (j + 2) % 5))
            for i in range(5):
                G.add_edge(("P", h, j), ("Q", i, (h * i + j) % 5))
    return canonical(G)


def schlaefli():
    lines = [("a", i) for i in range(6)] + [("b", i) for i in range(6)]
    lines += [("c",) + p for p in itertools.combinations(range(6), 2)]

    def meet(x, y):
        if x[0] == "c" and y[0] == "c":
            return not set(x[1:]) & set(y[1:])
        if x[0] == "c":
            x, y = y, x
        if y[0] == "c":
            return x[1] in y[1:]
        return x[0] != y[0] and x[1] != y[1]

    G = nx.Graph()
    G.add_nodes_from(lines)
    for x, y in itertools.combinations(lines, 2):
        if not meet(x, y):
            G.add_edge(x, y)
    return canonical(G)


def triangular8():
    return canonical(nx.line_graph(nx.complete_graph(8)))


def chang(switch_edges):
    T = nx.line_graph(nx.complete_graph(8))
    U = {tuple(sorted(e)) for e in switch_edges}
    H = T.copy()
    for u in T:
        if tuple(sorted(u)) not in U:
            continue
        for v in T:
            if v == u or tuple(sorted(v)) in U:
                continue
            if H.has_edge(u, v):
                H.remove_edge(u, v)
            else:
                H.add_edge(u, v)
    return canonical(H)


def gosset():
    P = list(itertools.combinations(range(8), 2))
    V = [("x", p) for p in P] + [("y", p) for p in P]
    G = nx.Graph()
    G.add_nodes_from(V)
    for u, v in itertools.combinations(V, 2):
        s = len(set(u[1]) & set(v[1]))
        if (u[0] == v[0] and s == 1) or (u[0] != v[0] and s == 0):
            G.add_edge(u, v)
    return canonical(G)


def perkel():
    G = nx.Graph()
    for a in range(3):
        for x in range(19):
            for s in (1, 7, 11):
                G.add_edge((a, x), ((a + 1) % 3, (x + pow(4, a, 19) * s) % 19))
    return canonical(G)


def frucht():
    return nx.LCF_graph(12, [-5, -2, -4, 2, 5, -2, 2, 5, -2, -5, 4, 2], 1)


# Generalized hexagon of order 2 and the Hall-Janko graph

def _hexagon():
    def q(x):
        return (x[0] * x[4] + x[1] * x[5] + x[2] * x[6] + x[3]) % 2

    pts = [v for v in itertools.product([0, 1], repeat=7) if any(v) and q(v) == 0]
    idx = {p: i for i, p in enumerate(pts)}
    n = len(pts)
    lines = set()
    for a, b in itertools.combinations(pts, 2):
        c = tuple((x + y) % 2 for x, y in zip(a, b))
        if c in idx:
            lines.add(frozenset([idx[a], idx[b], idx[c]]))
    lines = sorted(sorted(L) for L in lines)
    line_of = {}
    for L in lines:
        for a, b in itertools.permutations(L, 2):
            line_of[(a, b)] = frozenset(L)
    planes = set()
    for L in lines:
        a, b = pts[L[0]], pts[L[1]]
        for c in pts:
            if idx[c] in L:
                continue
            P = set()
            for co in itertools.product([0, 1], repeat=3):
                if any(co):
                    v = tuple(sum(k * w[i] for k, w in zip(co, (a, b, c))) % 2 for i in range(7))
                    if v not in idx:
                        P = None
                        break
                    P.add(idx[v])
            if P:
                planes.add(frozenset(P))
    planes = sorted(planes, key=sorted)
    dom = [{j for j, P in enumerate(planes) if p in P} for p in range(n)]
    assign = [None] * n

    # each point takes one plane; its hexagon lines are the quadric lines
    # through it inside that plane
    def rec():
        free = [p for p in range(n) if assign[p] is None]
        if not free:
            return True
        p = min(free, key=lambda x: (len(dom[x]), x))
        for P in sorted(dom[p]):
            saved = [set(d) for d in dom]
            dom[p] = {P}
            assign[p] = P
            good = True
            for x in planes[P]:
                if x == p:
                    continue
                L = line_of[(p, x)]
                dom[x] = {R for R in dom[x] if L <= planes[R] and R != P}
                if not dom[x]:
                    good = False
                    break
            if good:
                good = all(assign[x] is None or assign[x] in dom[x] for x in range(n))
            if good and rec():
                return True
            for i in range(n):
                dom[i] = saved[i]
            assign[p] = None
        return False

    sys.setrecursionlimit(10000)
    assert rec()
    hl = set()
    for p in range(n):
        for x in planes[assign[p]]:
            if x != p:
                hl.add(line_of[(p, x)])
    hl = sorted(sorted(L) for L in hl)
    assert len(hl) == 63
    B = nx.Graph()
    for i, L in enumerate(hl):
        for x in L:
            B.add_edge(("p", x), ("l", i))
    assert nx.girth(B) == 12
    return hl


def _thin_subhexagons(lines, npts):
    through = [[] for _ in range(npts)]
    for i, L in enumerate(lines):
        for x in L:
            through[x].append(i)
    sols = set()

    def rec(chosen, cnt):
        need = [p for p, c in sorted(cnt.items()) if c == 1]
        if not need:
            if len(chosen) == 14:
                sols.add(frozenset(chosen))
            return
        p = need[0]
        for l in through[p]:
            if l in chosen or len(chosen) >= 14:
                continue
            if any(cnt.get(x, 0) >= 2 for x in lines[l]):
                continue
            c2 = dict(cnt)
            for x in lines[l]:
                c2[x] = c2.get(x, 0) + 1
            rec(chosen | {l}, c2)

    for l0 in range(len(lines)):
        rec(frozenset([l0]), {x: 1 for x in lines[l0]})
    return sorted(sols, key=sorted)


def hall_janko():
    lines = _hexagon()
    subs = _thin_subhexagons(lines, 63)
    if len(subs) != 36:
        through = [[] for _ in range(63)]
        for i, L in enumerate(lines):
            for x in L:
                through[x].append(i)
        lines = [sorted(t) for t in through]
        subs = _thin_subhexagons(lines, 63)
    assert len(subs) == 36
    ptsets = [frozenset(x for l in s for x in lines[l]) for s in subs]
    col = nx.Graph()
    for L in lines:
        for a, b in itertools.combinations(L, 2):
            col.add_edge(a, b)
    dist = dict(nx.all_pairs_shortest_path_length(col))
    G = nx.Graph()
    for i in range(36):
        G.add_edge(0, 1 + i)
        for p in range(63):
            if p in ptsets[i]:
                G.add_edge(1 + i, 37 + p)
    for p, q in itertools.combinations(range(63), 2):
        if dist[p][q] == 2:
            G.add_edge(37 + p, 37 + q)
    for i, j in itertools.combinations(range(36), 2):
        if len(ptsets[i] & ptsets[j]) == 9:
            G.add_edge(1 + i, 1 + j)
    return G


FIXTURES = [
    ("petersen", lambda: nx.petersen_graph(), (10, 3, 0, 1)),
    ("hoffman_singleton", hoffman_singleton, (50, 7, 0, 1)),
    ("schlaefli", schlaefli, (27, 16, 10, 8)),
    ("triangular8", triangular8, (28, 12, 6, 4)),
    ("chang1", lambda: chang([(i, (i + 1) % 8) for i in range(8)]), (28, 12, 6, 4)),
    ("chang2", lambda: chang([(0, 1), (2, 3), (4, 5), (6, 7)]), (28, 12, 6, 4)),
    ("chang3", lambda: chang([(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 6), (6, 7), (3, 7)]), (28, 12, 6, 4)),
    ("sims_gewirtz", sims_gewirtz, (56, 10, 0, 2)),
    ("m22", m22_graph, (77, 16, 0, 4)),
    ("cameron", cameron, (231, 30, 9, 3)),
    ("hall_janko", hall_janko, (100, 36, 14, 12)),
    ("gosset", gosset, None),
    ("perkel", perkel, None),
    ("frucht", frucht, None),
]


# Published invariants and catalog flags carried into the manifest.
KNOWN = {
    "petersen": {"theta": 4, "alpha": 4, "omega": 2, "chi": 3, "vertex_transitive": True, "edge_transitive": True},
    "hoffman_singleton": {"theta": 15, "alpha": 15, "omega": 2, "vertex_transitive": True, "edge_transitive": True},
    "schlaefli": {"theta": 3, "alpha": 3, "omega": 6, "chi": 9, "theta_complement": 9, "vertex_transitive": True},
    "triangular8": {"theta": 4, "vertex_transitive": True},
    "chang1": {"theta": 4, "alpha": 4, "omega": 5, "chi": 7},
    "chang2": {"theta": 4, "alpha": 4, "omega": 6, "chi": 7},
    "chang3": {"theta": 4, "alpha": 4, "omega": 6, "chi": 7},
    "sims_gewirtz": {"theta": 16, "alpha": 16, "vertex_transitive": True},
    "m22": {"theta": 21, "alpha": 21, "vertex_transitive": True},
    "cameron": {"theta": 21, "alpha": 21, "vertex_transitive": True},
    "hall_janko": {"theta": 10, "alpha": 10, "omega": 4, "chi": 10, "vertex_transitive": True},
    "gosset": {"omega": 7, "chi": 14, "vertex_transitive": True, "edge_transitive": True},
    "perkel": {"omega": 2, "chi": 3, "vertex_transitive": True, "edge_transitive": True},
    "frucht": {"omega": 3, "chi": 3, "vertex_transitive": False},
}


def main():
    OUT.mkdir(exist_ok=True)
    manifest = {}
    for name, make, params in FIXTURES:
        G = nx.convert_node_labels_to_integers(make())
        got = srg_params(G)
        if params is not None and got != params:
            raise SystemExit(f"{name}: expected {params}, got {got}")
        data = nx.to_graph6_bytes(G, header=False).decode().strip()
        (OUT / f"{name}.g6").write_text(data + "\n")
        entry = {"n": G.number_of_nodes(), "edges": G.number_of_edges()}
        if params is not None:
            entry["srg"] = list(params)
        entry.update(KNOWN.get(name, {}))
        manifest[name] = entry
        print(name, entry)
    (OUT / "manifest.json").write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
