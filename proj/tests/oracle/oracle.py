"""Independent reference values for the C++ test suite.

Graphs are rebuilt from first principles (subsets, brute-force subspace
enumeration, partitions) and Hilbert series are obtained by explicit
normal-word enumeration, so nothing here shares code with the library.
Run: python3 tests/oracle/oracle.py
"""
from fractions import Fraction
from itertools import combinations, product


def boolean_graph(n):
    verts = [frozenset(c) for k in range(n + 1) for c in combinations(range(1, n + 1), k)]
    level = {v: len(v) for v in verts}
    edges = {(v, w) for v in verts for w in verts if w < v and len(v) == len(w) + 1}
    return verts, level, edges


def span(vectors, n, q):
    out = set()
    for coeffs in product(range(q), repeat=len(vectors)):
        out.add(tuple(sum(c * v[i] for c, v in zip(coeffs, vectors)) % q for i in range(n)))
    return frozenset(out)


def subspace_graph(n, q):
    space = list(product(range(q), repeat=n))
    subs = set()
    for k in range(n + 1):
        for vs in combinations(space, k):
            subs.add(span(list(vs), n, q))
    level = {}
    for s in subs:
        size, d = len(s), 0
        while q ** d < size:
            d += 1
        level[s] = d
    edges = {(v, w) for v in subs for w in subs if w < v and level[v] == level[w] + 1}
    return list(subs), level, edges


def complete_graph(m):
    # m lists level sizes from the top level down to level 0 (which has 1 vertex).
    top = len(m) - 1
    verts, level = [], {}
    for idx, count in enumerate(m):
        for j in range(count):
            v = (top - idx, j)
            verts.append(v)
            level[v] = top - idx
    edges = {(v, w) for v in verts for w in verts if level[v] == level[w] + 1}
    return verts, level, edges


def partitions_upto(r):
    out = [()]

    def gen(n, maxpart, prefix):
        if n == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(n, maxpart), 0, -1):
            gen(n - p, p, prefix + [p])

    for n in range(1, r + 1):
        gen(n, n, [])
    return out


def young_graph(r):
    verts = partitions_upto(r)
    level = {v: sum(v) for v in verts}
    vs = set(verts)
    edges = set()
    for v in verts:
        for i in range(len(v)):
            w = list(v)
            w[i] -= 1
            w = tuple(x for x in w if x > 0)
            if all(w[j] >= w[j + 1] for j in range(len(w) - 1)) and w in vs:
                edges.add((v, w))
    return verts, level, edges


def hilbert_by_words(graph, order):
    verts, level, edges = graph
    down = {v: set() for v in verts}
    for a, b in edges:
        down[a].add(b)
    reach = {}

    def below(v):
        if v not in reach:
            acc = set()
            for w in down[v]:
                acc |= {w} | below(w)
            reach[v] = acc
        return reach[v]

    letters = [(v, k) for v in verts for k in range(1, level[v] + 1)]

    def covers(a, b):
        return b[0] in below(a[0]) and a[1] == level[a[0]] - level[b[0]]

    # count[d][letter] = number of normal words of degree d ending in letter
    count = [dict() for _ in range(order + 1)]
    coeffs = [1] + [0] * order
    for d in range(1, order + 1):
        for b in letters:
            k = b[1]
            if k > d:
                continue
            if k == d:
                c = 1
            else:
                c = sum(n for a, n in count[d - k].items() if not covers(a, b))
            count[d][b] = c
            coeffs[d] += c
    return coeffs


def series_div(num, den, order):
    out = []
    for d in range(order + 1):
        c = Fraction(num[d] if d < len(num) else 0)
        for j in range(1, min(d, len(den) - 1) + 1):
            c -= den[j] * out[d - j]
        out.append(c / den[0])
    return out


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def qn_closed(n, order):
    two_minus_t = [2, -1]
    p = [1]
    for _ in range(n):
        p = poly_mul(p, two_minus_t)
    den = [1] + [-c for c in p]
    return series_div([1, -1], den, order)


def gauss_binomial(n, k, q):
    num, den = 1, 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def koszul_dual(h, order):
    neg = [c * (-1) ** i for i, c in enumerate(h)]
    return series_div([1], neg, order)


def du_closure(edges, s):
    s = set(s)
    changed = True
    while changed:
        changed = False
        for e1 in list(s):
            for e2 in list(s):
                if e1 == e2:
                    continue
                if e1[0] == e2[0]:  # common tail: add f1, f2 below with a common head
                    for f1 in edges:
                        for f2 in edges:
                            if f1[0] == e1[1] and f2[0] == e2[1] and f1[1] == f2[1] and not {f1, f2} <= s:
                                s |= {f1, f2}
                                changed = True
                if e1[1] == e2[1]:  # common head: add f1, f2 above with a common tail
                    for f1 in edges:
                        for f2 in edges:
                            if f1[1] == e1[0] and f2[1] == e2[0] and f1[0] == f2[0] and not {f1, f2} <= s:
                                s |= {f1, f2}
                                changed = True
    return s


def boolean_sufficiency_table(n):
    verts, level, edges = boolean_graph(n)
    edges = sorted(edges, key=lambda e: (sorted(e[0]), sorted(e[1])))
    top, bottom = frozenset(range(1, n + 1)), frozenset()

    def sufficient(s):
        c = du_closure(edges, s)
        frontier = {top}
        for _ in range(n):
            frontier = {h for (t, h) in c if t in frontier}
        return bottom in frontier

    def connected(s):
        s = list(s)
        comp = {s[0][0], s[0][1]}
        grew = True
        while grew:
            grew = False
            for t, h in s:
                if (t in comp) != (h in comp):
                    comp |= {t, h}
                    grew = True
        return all(t in comp for t, h in s)

    table = {}
    for s in combinations(edges, n):
        ivals = [next(iter(t - h)) for t, h in s]
        key = (len(set(ivals)) == n, connected(s))
        tot, suf = table.get(key, (0, 0))
        table[key] = (tot + 1, suf + sufficient(s))
    return table


def main():
    diamond = boolean_graph(2)
    print("diamond H to 6:", hilbert_by_words(diamond, 6))
    print("qn(2) closed to 6:", [str(x) for x in qn_closed(2, 6)])
    print("qn(3) closed to 4:", [str(x) for x in qn_closed(3, 4)])
    print("gauss (2,1)_2:", gauss_binomial(2, 1, 2), " (4,2)_2:", gauss_binomial(4, 2, 2))
    print("subspaces of F_2^2:", len(subspace_graph(2, 2)[0]), "edges", len(subspace_graph(2, 2)[2]))
    print("subspaces of F_2^4 of dim 2:", sum(1 for v, l in subspace_graph(4, 2)[1].items() if l == 2))
    for name, g, order in [
        ("boolean(3)", boolean_graph(3), 6),
        ("subspace(2,2)", subspace_graph(2, 2), 6),
        ("subspace(3,2)", subspace_graph(3, 2), 5),
        ("complete(1,2,2,1)", complete_graph([1, 2, 2, 1]), 6),
        ("complete(1,3,2,1)", complete_graph([1, 3, 2, 1]), 6),
        ("young(4)", young_graph(4), 6),
    ]:
        print(name, "H:", hilbert_by_words(g, order), "V:", len(g[0]), "E:", len(g[2]))
    for name, g in [("diamond", diamond), ("boolean(3)", boolean_graph(3)),
                    ("complete(1,2,2,1)", complete_graph([1, 2, 2, 1]))]:
        h = hilbert_by_words(g, 4)
        print(name, "dual via 1/H(-t):", [str(x) for x in koszul_dual(h, 4)])
    for (distinct, conn), (tot, suf) in sorted(boolean_sufficiency_table(3).items()):
        print("boolean(3) size-3 distinct-i=%s connected=%s: %d/%d sufficient" % (distinct, conn, suf, tot))


if __name__ == "__main__":
    main()
