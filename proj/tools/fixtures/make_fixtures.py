#!/usr/bin/env python3
"""Writes the cyclic-code generator matrices used as bench/test fixtures.

The matrices are standard narrow-sense primitive BCH codes of length 127 and the
binary quadratic-residue code of length 233, put in systematic form [I | P].
They are reference inputs only; the library itself never constructs BCH or QR codes.

    python3 tools/fixtures/make_fixtures.py data/fixtures
"""

import pathlib
import sys


def gf_tables(m, poly):
    size = 1 << m
    exp = [0] * (2 * size)
    log = [0] * size
    x = 1
    for i in range(size - 1):
        exp[i] = x
        log[x] = i
        x <<= 1
        if x & size:
            x ^= poly
    for i in range(size - 1, 2 * size):
        exp[i] = exp[i - (size - 1)]
    return exp, log


def gf_mul(a, b, exp, log, order):
    if a == 0 or b == 0:
        return 0
    return exp[(log[a] + log[b]) % order]


def poly_from_roots(roots, exp, log, order):
    """prod (x - r) over GF(2^m); coefficients must land in GF(2)."""
    coeffs = [1]
    for r in roots:
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] ^= c
            nxt[i] ^= gf_mul(c, r, exp, log, order)
        coeffs = nxt
    if any(c not in (0, 1) for c in coeffs):
        raise ValueError("generator polynomial is not binary")
    return coeffs  # coeffs[i] multiplies x^i


def cyclotomic_coset(s, n):
    coset, x = [], s % n
    while x not in coset:
        coset.append(x)
        x = (2 * x) % n
    return coset


def systematic_generator(g, n):
    k = n - (len(g) - 1)
    rows = []
    for i in range(k):
        row = [0] * n
        for j, c in enumerate(g):
            row[i + j] = c
        rows.append(row)
    # Gauss-Jordan on the first k columns; the shifted-generator matrix is upper triangular there.
    for col in range(k):
        piv = next(r for r in range(col, k) if rows[r][col])
        rows[col], rows[piv] = rows[piv], rows[col]
        for r in range(k):
            if r != col and rows[r][col]:
                rows[r] = [a ^ b for a, b in zip(rows[r], rows[col])]
    return rows


def write(path, rows):
    n = len(rows[0])
    with open(path, "w") as f:
        f.write(f"{n} {len(rows)}\n")
        for row in rows:
            f.write("".join(str(b) for b in row) + "\n")


def bch_127(designed):
    n, m = 127, 7
    exp, log = gf_tables(m, 0b10001001)  # x^7 + x^3 + 1
    roots = set()
    for s in range(1, designed):
        roots.update(cyclotomic_coset(s, n))
    g = poly_from_roots([exp[i] for i in sorted(roots)], exp, log, n)
    return systematic_generator(g, n)


def clmul_mod(a, b, m, poly):
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> m:
            a ^= poly
    return r


def clpow(a, e, m, poly):
    r = 1
    while e:
        if e & 1:
            r = clmul_mod(r, a, m, poly)
        a = clmul_mod(a, a, m, poly)
        e >>= 1
    return r


def qr(p, m, poly):
    """Quadratic-residue code: roots beta^q for the nonzero squares q mod p."""
    order = (1 << m) - 1
    beta = clpow(2, order // p, m, poly)  # 2 is the class of x
    assert beta != 1 and clpow(beta, p, m, poly) == 1
    residues = sorted({(i * i) % p for i in range(1, p)})
    coeffs = [1]
    for q in residues:
        root = clpow(beta, q, m, poly)
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] ^= c
            nxt[i] ^= clmul_mod(c, root, m, poly)
        coeffs = nxt
    if any(c not in (0, 1) for c in coeffs):
        raise ValueError("generator polynomial is not binary")
    return systematic_generator(coeffs, p)


def main():
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "data/fixtures")
    out.mkdir(parents=True, exist_ok=True)
    for designed, k in ((21, 64), (23, 57), (27, 50)):
        rows = bch_127(designed)
        assert len(rows) == k, (designed, len(rows))
        write(out / f"bch_127_{k}.txt", rows)
    rows = qr(233, 29, (1 << 29) | 0b101)  # x^29 + x^2 + 1
    assert len(rows) == 117
    write(out / "qr_233_117.txt", rows)


if __name__ == "__main__":
    main()
