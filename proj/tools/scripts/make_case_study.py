#!/usr/bin/env python3
"""Generates data/coauthor_75.json, a synthetic co-authorship network.

The graph has 75 authors in 7 collaboration clusters and 190 edges: 172
inside clusters and 18 between them. The inter-cluster edges are chosen so
that every cost-optimal cyclic cluster order yields 12 proper and 6 long
edges. Run from the repository root.
"""
import itertools
import json
import random

SIZES = [14, 12, 11, 10, 10, 9, 9]
INTRA = [36, 31, 27, 23, 21, 17, 17]
RING = {(0, 1): 2, (1, 2): 2, (2, 3): 2, (3, 4): 2, (4, 5): 2, (5, 6): 1, (0, 6): 1}
CHORDS = [(0, 2), (1, 3), (2, 4), (3, 5), (4, 6), (0, 5)]

FIRST = "ABCDEFGHIJKLMNOPRSTVWZ"
LAST = [
    "Abel", "Brandt", "Castro", "Dahl", "Eklund", "Fischer", "Garcia", "Horvat",
    "Ito", "Jensen", "Kovac", "Lindqvist", "Moreau", "Novak", "Okafor", "Petrov",
    "Quint", "Rossi", "Sato", "Tanaka", "Urban", "Vidal", "Weber", "Xu", "Yilmaz",
    "Zeller", "Arndt", "Berg", "Chen", "Duval", "Engel", "Falk", "Gruber", "Hahn",
    "Iversen", "Jung", "Kraus", "Lang", "Maier", "Nagel", "Olsen", "Park", "Ritter",
    "Schmid", "Thiel", "Ulrich", "Vogel", "Wolf", "Young", "Ziegler", "Amato",
    "Bauer", "Conti", "Dorn", "Ernst", "Frank", "Graf", "Huber", "Ibsen", "Jakob",
    "Keller", "Lorenz", "Marx", "Neumann", "Otto", "Pohl", "Rhee", "Sommer",
    "Treu", "Unger", "Voss", "Wagner", "Yang", "Zhou", "Kim",
]


def intra_edges(rng, members, count):
    """Unions of small author cliques, one per publication, until count edges."""
    edges = set()
    for a, b in zip(members, members[1:]):
        edges.add((a, b))
    while len(edges) < count:
        publication = rng.sample(members, rng.choice([2, 3, 3, 4]))
        for a, b in itertools.combinations(sorted(publication), 2):
            if len(edges) < count:
                edges.add((a, b))
    return sorted(edges)


def span(pos, i, j, k):
    d = (pos[i] - pos[j]) % k
    return min(d, k - d)


def check(weights, k):
    best, orders = None, []
    for perm in itertools.permutations(range(1, k)):
        seq = (0,) + perm
        pos = {a: p for p, a in enumerate(seq)}
        cost = sum(w * span(pos, i, j, k) for (i, j), w in weights.items())
        if best is None or cost < best:
            best, orders = cost, [pos]
        elif cost == best:
            orders.append(pos)
    for pos in orders:
        proper = sum(w for (i, j), w in weights.items() if span(pos, i, j, k) == 1)
        long_ = sum(w for (i, j), w in weights.items() if span(pos, i, j, k) > 1)
        assert (proper, long_) == (12, 6), (proper, long_)
    return best, len(orders)


def main():
    rng = random.Random(2015)
    assert sum(SIZES) == 75 and sum(INTRA) == 172
    names = []
    used = set()
    while len(names) < 75:
        name = f"{rng.choice(FIRST)}. {rng.choice(LAST)}"
        if name not in used:
            used.add(name)
            names.append(name)
    groups, start = [], 0
    for size in SIZES:
        groups.append(list(range(start, start + size)))
        start += size

    edges = []
    for members, count in zip(groups, INTRA):
        edges.extend(intra_edges(rng, members, count))

    weights = dict(RING)
    for c in CHORDS:
        weights[c] = weights.get(c, 0) + 1
    best, ties = check(weights, 7)

    inter = set()
    for (i, j), w in sorted(weights.items()):
        while sum(1 for e in inter if e[2] == (i, j)) < w:
            u, v = rng.choice(groups[i]), rng.choice(groups[j])
            if not any(e[0] == u and e[1] == v for e in inter):
                inter.add((u, v, (i, j)))
    edges.extend((u, v) for u, v, _ in sorted(inter))
    assert len(edges) == 190 and len(set(map(frozenset, edges))) == 190

    doc = {
        "vertices": [
            {"id": f"a{v:02d}", "label": names[v], "group": g}
            for g, members in enumerate(groups) for v in members
        ],
        "edges": [[f"a{u:02d}", f"a{v:02d}"] for u, v in edges],
    }
    with open("data/coauthor_75.json", "w", encoding="utf-8") as f:
        json.dump(doc, f, indent=1, ensure_ascii=False)
        f.write("\n")
    print(f"optimal cost {best}, {ties} optimal sequences")


if __name__ == "__main__":
    main()
