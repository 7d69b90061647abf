"""Brute-force oracle for the small-geometry and Fano-bijection values frozen
into the C++ tests. Independent of the library: plain Python sets and
networkx clique enumeration."""
import itertools
import networkx as nx

# --- 4-subsets of [7] ---------------------------------------------------
pts = [frozenset(c) for c in itertools.combinations(range(1, 8), 4)]
deg = {p: sum(1 for q in pts if q != p and len(p & q) == 2) for p in pts}
print("n7 points", len(pts), "degrees", sorted(set(deg.values())))
G = nx.Graph()
G.add_nodes_from(range(len(pts)))
for i, j in itertools.combinations(range(len(pts)), 2):
    if len(pts[i] & pts[j]) == 2:
        G.add_edge(i, j)
cl = list(nx.find_cliques(G))
print("n7 maximal cliques", len(cl), "sizes", sorted({len(c) for c in cl}))
def closed(S):
    S = set(S)
    return all((a ^ b) in S for a in S for b in S if a != b)
print("all singular", all(closed(pts[i] for i in c) for c in cl))

# --- Fano bijections ----------------------------------------------------
# coordinates 1..7, lines {u, v, u^v}
lines = {frozenset((u, v, u ^ v)) for u in range(1, 8) for v in range(1, 8) if u != v}
assert len(lines) == 7
def index(pi):  # pi: dict coord->coord
    return sum(1 for L in lines if frozenset(pi[x] for x in L) in lines)
perms = [dict(zip(range(1, 8), p)) for p in itertools.permutations(range(1, 8))]
auts = [p for p in perms if index(p) == 7]
print("auts", len(auts))
tally = {}
for p in perms:
    tally[index(p)] = tally.get(index(p), 0) + 1
print("index spectrum", dict(sorted(tally.items())))
def key(p): return tuple(p[i] for i in range(1, 8))
seen = {}
classes = 0
for p in perms:
    if key(p) in seen: continue
    for g1 in auts:
        for g2 in auts:
            q = {x: g2[p[g1[x]]] for x in range(1, 8)}
            seen[key(q)] = classes
    classes += 1
print("classes", classes)
cls_index = {}
for p in perms:
    cls_index.setdefault(seen[key(p)], set()).add(index(p))
print("class->indices", cls_index)
# simplex property: a bijection sending some simplex to a simplex has index in {1,3,7}
simplices = [frozenset(range(1, 8)) - L for L in lines]
ok = True
for p in perms:
    if any(frozenset(p[x] for x in s) in simplices for s in simplices):
        ok &= index(p) in (1, 3, 7)
print("simplex property holds", ok)
# representatives: P1=1 P2=2 P3=4 P12=3 P13=5 P23=6 P123=7
ident = {i: i for i in range(1, 8)}
trans = dict(ident); trans[3], trans[5] = 5, 3
cyc = dict(ident); cyc[3], cyc[5], cyc[6] = 5, 6, 3
d1 = dict(ident); d1[7], d1[6], d1[3], d1[5] = 6, 3, 5, 7
print("rep indices", index(ident), index(trans), index(cyc), index(d1))
