"""Independent oracle for frozen test values.

Matrix identities are recomputed with sympy. Ranks and memberships in the
coloured RTT algebra are recomputed modulo a 31-bit prime at a random
parameter point, with relations generated from R T1 T2 - T2 T1 R directly
(not from the listed relations the C++ engine uses).

    python3 tools/oracle.py > tests/fixtures/oracle.json
"""

import itertools
import json
import random
import sys

import numpy as np
import sympy as sp

h, s, lam, mu, nu = sp.symbols("h s lambda mu nu")
K = sp.kronecker_product
I2 = sp.eye(2)
P4 = sp.Matrix([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])


def rep(e):
    jp = sp.Matrix([[0, 1], [0, 0]])
    return {
        "J3": sp.diag(1, -1),
        "Jp": jp,
        "Z": e * I2,
        "Jm": sp.Matrix([[(h + e * s) ** 2 / (2 * h), 0], [1, (h - e * s) ** 2 / (2 * h)]]),
    }


def nilexp(m):
    out, term, k = sp.eye(m.rows), sp.eye(m.rows), 1
    while True:
        term = sp.expand(term * m / k)
        if term == sp.zeros(m.rows):
            return out
        out += term
        k += 1


def universal_r(x, y):
    a, b = rep(x), rep(y)
    first = nilexp(-K(a["Jp"], h * b["J3"] + s * b["Z"]))
    second = nilexp(K(h * a["J3"] + s * a["Z"], b["Jp"]))
    return sp.expand(first * second)


def coloured_r(x, y):
    f = h**2 - x * y * s**2 - h * s * (x - y)
    return sp.Matrix([[1, h + x * s, -(h + y * s), f], [0, 1, 0, h - y * s], [0, 0, 1, -(h - x * s)], [0, 0, 0, 1]])


def strings(m):
    return [[str(sp.expand(e)) for e in m.tolist()[i]] for i in range(m.rows)]


def matrix_facts():
    r = coloured_r(lam, mu)
    e12 = lambda a: K(a, I2)
    e23 = lambda a: K(I2, a)
    q = K(I2, P4)
    e13 = lambda a: q * K(a, I2) * q
    ybe = e12(r) * e13(coloured_r(lam, nu)) * e23(coloured_r(mu, nu)) - e23(coloured_r(mu, nu)) * e13(
        coloured_r(lam, nu)) * e12(r)
    bh = P4 * r
    i4 = sp.eye(4)
    w = {h: 1, s: 1, lam: 1, mu: 2}
    return {
        "universal_equals_coloured": sp.expand(universal_r(lam, mu) - r) == sp.zeros(4),
        "ybe_zero": sp.expand(ybe) == sp.zeros(8),
        "unitarity": sp.expand(r * P4 * coloured_r(mu, lam) * P4) == i4,
        "hecke_witness": strings(((bh - i4) * (bh + i4)).subs(w)),
        "quadratic_witness": strings(((bh - i4) ** 2 * (bh + i4)).subs(w)),
        "cubic_zero": sp.expand((bh - i4) ** 3 * (bh + i4)) == sp.zeros(4),
        "r_matrix_at_zero": strings(coloured_r(0, 0)),
        "r_inverse": strings(sp.expand(r.inv())),
        "rep_jminus": strings(rep(sp.Symbol("eta"))["Jm"]),
    }


def rtt_entry_44():
    # Noncommutative symbols for the generators of T_lambda and T_mu.
    names = {c: sp.symbols(f"a_{c} b_{c} c_{c} d_{c}", commutative=False) for c in ("lambda", "mu")}
    tl = sp.Matrix(2, 2, names["lambda"])
    tm = sp.Matrix(2, 2, names["mu"])
    t1 = K(tl, I2)
    t2 = K(I2, tm)
    r = coloured_r(lam, mu)
    res = sp.expand(r * t1 * t2 - t2 * t1 * r)
    return str(res[3, 3]), sum(1 for e in res if e != 0)


# ----------------------------------------------------------------- mod p

PRIME = 2**31 - 1


def modp_point(seed):
    rng = random.Random(seed)
    return {k: rng.randrange(1, PRIME) for k in ("h", "s", "l", "m")}


class Algebra:
    def __init__(self, point):
        self.v = point

    def colour(self, c):
        return 0 if c == "0" else self.v[c]

    def r_matrix(self, x, y):
        hv, sv = self.v["h"], self.v["s"]
        xv, yv = self.colour(x), self.colour(y)
        f = (hv * hv - xv * yv * sv * sv - hv * sv * (xv - yv)) % PRIME
        return [[1, hv + xv * sv, -(hv + yv * sv), f], [0, 1, 0, hv - yv * sv], [0, 0, 1, -(hv - xv * sv)],
                [0, 0, 0, 1]]


def add(p, q, c=1):
    out = dict(p)
    for k, v in q.items():
        out[k] = (out.get(k, 0) + c * v) % PRIME
    return {k: v for k, v in out.items() if v}


def mul(p, q):
    out = {}
    for k1, v1 in p.items():
        for k2, v2 in q.items():
            out[k1 + k2] = (out.get(k1 + k2, 0) + v1 * v2) % PRIME
    return {k: v for k, v in out.items() if v}


def letter(l, c):
    return {((l, c),): 1}


def scale(c, p):
    return {k: (c * v) % PRIME for k, v in p.items() if (c * v) % PRIME}


def rtt_relations(alg, x, y):
    t = lambda c: [[letter("a", c), letter("b", c)], [letter("c", c), letter("d", c)]]
    tl, tm = t(x), t(y)
    t1 = [[tl[i // 2][k // 2] if i % 2 == k % 2 else {} for k in range(4)] for i in range(4)]
    t2 = [[tm[i % 2][k % 2] if i // 2 == k // 2 else {} for k in range(4)] for i in range(4)]
    prod = lambda a, b: [[sum_all(mul(a[i][k], b[k][j]) for k in range(4)) for j in range(4)] for i in range(4)]
    left, right = prod(t1, t2), prod(t2, t1)
    r = alg.r_matrix(x, y)
    out = []
    for i in range(4):
        for j in range(4):
            e = {}
            for k in range(4):
                e = add(e, scale(r[i][k] % PRIME, left[k][j]))
                e = add(e, scale(r[k][j] % PRIME, right[i][k]), -1)
            if e:
                out.append(e)
    return out


def sum_all(items):
    out = {}
    for p in items:
        out = add(out, p)
    return out


def sector(colours):
    words = set()
    for perm in set(itertools.permutations(colours)):
        for lets in itertools.product("abcd", repeat=len(colours)):
            words.add(tuple(zip(lets, perm)))
    return sorted(words)


def rank(rows, index):
    m = np.zeros((len(rows), len(index)), dtype=np.int64)
    for i, row in enumerate(rows):
        for k, v in row.items():
            m[i, index[k]] = v
    r = 0
    for c in range(m.shape[1]):
        nz = np.nonzero(m[r:, c])[0]
        if len(nz) == 0:
            continue
        piv = r + nz[0]
        m[[r, piv]] = m[[piv, r]]
        m[r] = (m[r] * pow(int(m[r, c]), PRIME - 2, PRIME)) % PRIME
        for i in np.nonzero(m[:, c])[0]:
            if i != r:
                m[i] = (m[i] - int(m[i, c]) * m[r]) % PRIME
        r += 1
        if r == m.shape[0]:
            break
    return r


def two_sided(rels, colours):
    words = set(sector(colours))
    n = len(colours)
    gens = [(l, c) for l in "abcd" for c in sorted(set(colours))]
    out = []
    for rel in rels:
        k = len(next(iter(rel)))
        for p in range(n - k + 1):
            for u in itertools.product(gens, repeat=p):
                for v in itertools.product(gens, repeat=n - k - p):
                    q = {tuple(u) + w + tuple(v): c for w, c in rel.items()}
                    if all(w in words for w in q):
                        out.append(q)
    return out


def membership(target, rels, colours):
    words = sector(colours)
    index = {w: i for i, w in enumerate(words)}
    gens = two_sided(rels, colours)
    r = rank(gens, index)
    return {"dimension": len(words), "generators": len(gens), "rank": r,
            "member": rank(gens + [target], index) == r}


def det(alg, c):
    hp = (alg.v["h"] + alg.colour(c) * alg.v["s"]) % PRIME
    a, b, cc, d = (letter(x, c) for x in "abcd")
    return add(add(mul(a, d), mul(b, cc), -1), scale(hp, mul(a, cc)), -1)


def det_alternate(alg, c):
    hm = (alg.v["h"] - alg.colour(c) * alg.v["s"]) % PRIME
    a, b, cc, d = (letter(x, c) for x in "abcd")
    return add(add(mul(a, d), mul(cc, b), -1), scale(hm, mul(cc, d)))


def comm(p, q):
    return add(mul(p, q), mul(q, p), -1)


def engine_facts(seed, degree_four):
    alg = Algebra(modp_point(seed))
    mixed = rtt_relations(alg, "l", "m")
    mono_l = rtt_relations(alg, "l", "l")
    mono_m = rtt_relations(alg, "m", "m")
    idx = lambda cols: {w: i for i, w in enumerate(sector(cols))}
    out = {
        "mixed_rank": rank(mixed, idx(["l", "m"])),
        "mixed_dimension": len(sector(["l", "m"])),
        "mono_rank": rank(mono_l, idx(["l", "l"])),
        "mono_dimension": len(sector(["l", "l"])),
        "det_forms": membership(add(det(alg, "l"), det_alternate(alg, "l"), -1), mono_l, ["l", "l"]),
    }
    rels3 = mixed + mono_l
    out["det_c"] = membership(comm(det(alg, "l"), letter("c", "m")), rels3, ["l", "l", "m"])
    out["det_a"] = membership(comm(det(alg, "l"), letter("a", "m")), rels3, ["l", "l", "m"])
    mono0 = rtt_relations(alg, "0", "0")
    out["det0"] = {x: membership(comm(det(alg, "0"), letter(x, "0")), mono0, ["0", "0", "0"]) for x in "abcd"}
    if degree_four:
        out["det_det"] = membership(comm(det(alg, "l"), det(alg, "m")), mixed + mono_l + mono_m,
                                    ["l", "l", "m", "m"])
    return out


def main():
    degree_four = "--no-degree-four" not in sys.argv
    entry, nonzero = rtt_entry_44()
    facts = {"matrices": matrix_facts(), "rtt_entry_44": entry, "rtt_nonzero_entries": nonzero,
             "engine": engine_facts(20240611, degree_four)}
    json.dump(facts, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
