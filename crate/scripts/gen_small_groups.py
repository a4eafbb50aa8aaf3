#!/usr/bin/env python3
"""Regenerates the permutation-group section of the bundled catalog.

Every group of order <= 24 is solvable, so it has a normal subgroup of prime
index and arises as a cyclic extension N.<t> with t^p = z in N. We enumerate
those extensions over the groups of order n/p, deduplicate up to isomorphism,
and print each class as a regular permutation representation.
"""
import itertools
import sys
from math import gcd

MAX_ORDER = 24
KNOWN_COUNTS = [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15]


class Group:
    def __init__(self, mul):
        self.n = len(mul)
        self.mul = mul
        e = next(i for i in range(self.n) if all(mul[i][j] == j for j in range(self.n)))
        # normalise so the identity is element 0
        perm = [e] + [i for i in range(self.n) if i != e]
        pos = {v: k for k, v in enumerate(perm)}
        self.mul = [[pos[mul[perm[a]][perm[b]]] for b in range(self.n)] for a in range(self.n)]
        self.inv = [next(j for j in range(self.n) if self.mul[i][j] == 0) for i in range(self.n)]
        self.orders = [self._order(i) for i in range(self.n)]

    def _order(self, x):
        k, y = 1, x
        while y != 0:
            y = self.mul[y][x]
            k += 1
        return k

    def closure(self, gens):
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mul[x][g]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen

    def generators(self):
        gens, span = [], {0}
        # prefer high-order elements for short generating sets
        for x in sorted(range(self.n), key=lambda i: -self.orders[i]):
            if x not in span:
                gens.append(x)
                span = self.closure(gens)
        return gens

    def is_abelian(self):
        return all(self.mul[a][b] == self.mul[b][a] for a in range(self.n) for b in range(self.n))

    def center(self):
        return [z for z in range(self.n) if all(self.mul[z][g] == self.mul[g][z] for g in range(self.n))]

    def derived_size(self):
        comms = {self.mul[self.mul[self.inv[a]][self.inv[b]]][self.mul[a][b]]
                 for a in range(self.n) for b in range(self.n)}
        return len(self.closure(list(comms)))

    def class_count(self):
        seen, k = set(), 0
        for x in range(self.n):
            if x in seen:
                continue
            k += 1
            for g in range(self.n):
                seen.add(self.mul[self.mul[g][x]][self.inv[g]])
        return k

    def invariants(self):
        return (self.n, tuple(sorted(self.orders)), len(self.center()), self.derived_size(),
                self.class_count(), self.power_profile())

    def power_profile(self):
        # number of distinct squares and cubes
        sq = len({self.mul[x][x] for x in range(self.n)})
        cu = len({self.mul[self.mul[x][x]][x] for x in range(self.n)})
        return (sq, cu)


def automorphisms(G):
    gens = G.generators()
    # BFS words to express every element from gens
    word = {0: []}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for k, g in enumerate(gens):
                y = G.mul[x][g]
                if y not in word:
                    word[y] = word[x] + [k]
                    nxt.append(y)
        frontier = nxt
    cands = [[y for y in range(G.n) if G.orders[y] == G.orders[g]] for g in gens]
    auts = []
    for imgs in itertools.product(*cands):
        phi = [0] * G.n
        for x, w in word.items():
            y = 0
            for k in w:
                y = G.mul[y][imgs[k]]
            phi[x] = y
        if len(set(phi)) != G.n:
            continue
        if all(phi[G.mul[a][b]] == G.mul[phi[a]][phi[b]] for a in range(G.n) for b in range(G.n)):
            auts.append(phi)
    return auts


def isomorphic(G, H):
    if G.invariants() != H.invariants():
        return False
    gens = G.generators()
    word = {0: []}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for k, g in enumerate(gens):
                y = G.mul[x][g]
                if y not in word:
                    word[y] = word[x] + [k]
                    nxt.append(y)
        frontier = nxt
    cands = [[y for y in range(H.n) if H.orders[y] == G.orders[g]] for g in gens]
    for imgs in itertools.product(*cands):
        phi = [0] * G.n
        for x, w in word.items():
            y = 0
            for k in w:
                y = H.mul[y][imgs[k]]
            phi[x] = y
        if len(set(phi)) != G.n:
            continue
        if all(phi[G.mul[a][b]] == H.mul[phi[a]][phi[b]] for a in range(G.n) for b in range(G.n)):
            return True
    return False


def extensions(N, p):
    out = []
    for phi in automorphisms(N):
        # phi^p
        phip = list(range(N.n))
        for _ in range(p):
            phip = [phi[x] for x in phip]
        for z in range(N.n):
            if phi[z] != z:
                continue
            if any(phip[x] != N.mul[N.mul[z][x]][N.inv[z]] for x in range(N.n)):
                continue
            phipow = [list(range(N.n))]
            for _ in range(p - 1):
                phipow.append([phi[x] for x in phipow[-1]])
            n = N.n * p
            idx = lambda a, i: i * N.n + a
            mul = [[0] * n for _ in range(n)]
            for i in range(p):
                for a in range(N.n):
                    for j in range(p):
                        for b in range(N.n):
                            c = N.mul[a][phipow[i][b]]
                            k = i + j
                            if k >= p:
                                c = N.mul[c][z]
                                k -= p
                            mul[idx(a, i)][idx(b, j)] = idx(c, k)
            out.append(Group(mul))
    return out


def classify():
    groups = {1: [Group([[0]])]}
    for n in range(2, MAX_ORDER + 1):
        found = []
        for p in [q for q in range(2, n + 1) if n % q == 0 and all(q % r for r in range(2, q))]:
            for N in groups[n // p]:
                for G in extensions(N, p):
                    if not any(isomorphic(G, H) for H in found):
                        found.append(G)
        assert len(found) == KNOWN_COUNTS[n - 1], (n, len(found))
        groups[n] = found
    return groups


def abelian_name(G):
    # invariant factors from element-order counts via the p-primary parts
    n = G.n
    factors = []
    rest = list(range(n))
    # brute force: largest cyclic factor, split off greedily using orders only
    from collections import Counter
    primes = [q for q in range(2, n + 1) if n % q == 0 and all(q % r for r in range(2, q))]
    prim = []
    for q in primes:
        # count elements of order dividing q^k
        k = 0
        counts = []
        while True:
            c = sum(1 for o in G.orders if o % q != 0 and o == 1 or (o > 0 and q ** k % o == 0))
            counts.append(c)
            if q ** k >= n:
                break
            k += 1
        # rank sequence r_k = log_q(counts[k]/counts[k-1]) gives #factors of exponent >= k
        import math
        ranks = []
        for k in range(1, len(counts)):
            ratio = counts[k] // counts[k - 1]
            r = round(math.log(ratio, q)) if ratio > 1 else 0
            ranks.append(r)
        ranks.append(0)
        for k in range(len(ranks) - 1):
            for _ in range(ranks[k] - ranks[k + 1]):
                prim.append(q ** (k + 1))
    prim.sort(key=lambda d: (-d))
    # combine into invariant factors
    bypr = {}
    for d in prim:
        q = next(r for r in primes if d % r == 0)
        bypr.setdefault(q, []).append(d)
    inv = []
    while any(bypr.values()):
        f = 1
        for q in bypr:
            if bypr[q]:
                f *= bypr[q].pop(0)
        inv.append(f)
    return "x".join("C%d" % d for d in inv)


def name_of(G, counter):
    n = G.n
    if n == 1:
        return "C1"
    if G.is_abelian():
        return abelian_name(G)
    inv = G.invariants()
    two_group = n & (n - 1) == 0
    involutions = sum(1 for o in G.orders if o == 2)
    if two_group and involutions == 1:
        return "Q%d" % n
    if max(G.orders) == n // 2 and involutions == n // 2 + (1 if (n // 2) % 2 == 0 else 0):
        return "S3" if n == 6 else "D%d" % n
    if n == 12 and max(G.orders) == 3:
        return "A4"
    if n == 24 and sorted(set(G.orders)) == [1, 2, 3, 4] and len(G.center()) == 1:
        return "S4"
    if n == 24 and sorted(set(G.orders)) == [1, 2, 3, 4, 6] and G.derived_size() == 8 and involutions == 1:
        return "SL2_3"
    counter[n] = counter.get(n, 0) + 1
    return "G%d_%d" % (n, counter[n])


def cycles(perm):
    seen, out = set(), []
    for s in range(len(perm)):
        if s in seen or perm[s] == s:
            continue
        cyc, x = [], s
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = perm[x]
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) if out else "()"


def main():
    groups = classify()
    counter = {}
    names = set()
    for n in range(1, MAX_ORDER + 1):
        for G in groups[n]:
            name = name_of(G, counter)
            assert name not in names, name
            names.add(name)
            gens = G.generators()
            # left regular representation: x -> g*x
            perms = [[G.mul[g][x] for x in range(n)] for g in gens]
            body = " ".join(cycles(p) for p in perms)
            print("group %s perm %d : %s" % (name, n, body))
    inv = [G.invariants() for n in groups for G in groups[n]]
    assert len(set(inv)) == len(inv), "invariants do not separate"
    print("# %d groups" % len(inv), file=sys.stderr)


if __name__ == "__main__":
    main()
