# Brute-force and sympy cross-checks for the finite-group cohomology values.
from itertools import product
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

def cyclic(n): return [[(a + b) % n for b in range(n)] for a in range(n)]

def direct(A, B):
    na, nb = len(A), len(B)
    return [[A[x // nb][y // nb] * nb + B[x % nb][y % nb] for y in range(na * nb)] for x in range(na * nb)]

def permutation_group(gens):
    from itertools import permutations
    n = len(gens[0])
    elems, frontier = [tuple(range(n))], [tuple(range(n))]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(p[g[i]] for i in range(n))
                if q not in elems:
                    elems.append(q)
                    nxt.append(q)
        frontier = nxt
    idx = {p: i for i, p in enumerate(elems)}
    return [[idx[tuple(a[b[i]] for i in range(n))] for b in elems] for a in elems]

def quaternion():
    # units +-1, +-i, +-j, +-k as (sign, axis)
    units = [(s, a) for a in range(4) for s in (1, -1)]
    table = {(0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
             (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
             (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
             (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0)}
    def mul(x, y):
        s, a = table[(x[1], y[1])]
        return (x[0] * y[0] * s, a)
    return [[units.index(mul(x, y)) for y in units] for x in units]

def delta(G, d):
    n = len(G)
    rows = list(product(range(n), repeat=d + 1))
    cols = {t: i for i, t in enumerate(product(range(n), repeat=d))}
    M = [[0] * len(cols) for _ in rows]
    for r, t in enumerate(rows):
        M[r][cols[t[1:]]] += 1
        for i in range(1, d + 1):
            f = t[:i - 1] + (G[t[i - 1]][t[i]],) + t[i + 1:]
            M[r][cols[f]] += (-1) ** i
        M[r][cols[t[:-1]]] += (-1) ** (d + 1)
    return Matrix(M)

def h2_integers(G):
    # Z^{n^2} / ker d2 embeds in Z^{n^3}, so the torsion of ker d2 / im d1 equals the
    # torsion of coker d1; the free rank is dim ker d2 - rank d1.
    d1, d2 = delta(G, 1), delta(G, 2)
    snf = smith_normal_form(d1, domain=ZZ)
    diag = [abs(snf[i, i]) for i in range(min(snf.shape)) if snf[i, i] != 0]
    torsion = [d for d in diag if d != 1]
    free = (d2.shape[1] - d2.rank()) - d1.rank()
    return torsion, free

def brute_h2_mod(G, m):
    n = len(G)
    cochains = list(product(range(m), repeat=n * n))
    def is_cocycle(w):
        return all((w[h * n + k] - w[G[g][h] * n + k] + w[g * n + G[h][k]] - w[g * n + h]) % m == 0
                   for g in range(n) for h in range(n) for k in range(n))
    cocycles = sum(1 for w in cochains if is_cocycle(w))
    cob = {tuple((f[h] - f[G[g][h]] + f[g]) % m for g in range(n) for h in range(n))
           for f in product(range(m), repeat=n)}
    return cocycles, len(cob)

def ext_census(G, m, w):
    n = len(G)
    N = n * m
    T = [[G[a // m][b // m] * m + (a % m + b % m + w[(a // m) * n + b // m]) % m for b in range(N)] for a in range(N)]
    e = next(a for a in range(N) if all(T[a][b] == b for b in range(N)))
    census = {}
    for a in range(N):
        k, x = 1, a
        while x != e: x, k = T[x][a], k + 1
        census[k] = census.get(k, 0) + 1
    return census

if __name__ == "__main__":
    Z2 = cyclic(2)
    print("rank d1(Z2) =", delta(Z2, 1).rank())
    print("H2(Z2,Z2): cocycles, coboundaries =", brute_h2_mod(Z2, 2))
    for n in (2, 3, 4, 6):
        print("H2(Z%d,Z) torsion, free =" % n, h2_integers(cyclic(n)))
    print("H2(Z2xZ2,Z) torsion, free =", h2_integers(direct(Z2, Z2)))
    S3 = permutation_group([(1, 2, 0), (1, 0, 2)])
    print("H2(S3,Z) torsion, free =", h2_integers(S3))
    print("H2(Q8,Z) torsion, free =", h2_integers(quaternion()))
    for name, G in (("Z3", cyclic(3)), ("Z4", cyclic(4)), ("Z2xZ2", direct(Z2, Z2))):
        c, b = brute_h2_mod(G, 2)
        print("|H2(%s,Z2)| =" % name, c // b)
    print("census nontrivial:", ext_census(Z2, 2, [0, 0, 0, 1]), "coboundary:", ext_census(Z2, 2, [0, 0, 0, 0]))
