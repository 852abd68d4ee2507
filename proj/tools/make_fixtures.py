#!/usr/bin/env python3
"""Regenerate the offline b-file fixtures in data/oeis/.

oeis.org is not reachable from the build environment, so the fixtures are
produced here by brute force, straight from the definitions, using plain
Python integers and decimal strings. Nothing in this script shares code or
algorithms with the C++ library: primes come from an exhaustive product
search, squares from squaring every root, and so on. Where a closed formula
is used for large indices (prime and square counts), it is checked against
the brute-force counts for every index the brute force reaches.

Every file carries a header saying it is locally generated; running
`carryless --fixtures "" verify ...` online fetches the real b-file instead.

Usage: tools/make_fixtures.py [--out data/oeis] [--terms 250]
"""

import argparse
import itertools
import os
import sys

import numpy as np


def digits(n):
    return [int(c) for c in reversed(str(n))]


def undigits(ds):
    s = "".join(str(d) for d in reversed(ds)).lstrip("0")
    return int(s) if s else 0


def cl_add(a, b):
    da, db = digits(a), digits(b)
    n = max(len(da), len(db))
    da += [0] * (n - len(da))
    db += [0] * (n - len(db))
    return undigits([(x + y) % 10 for x, y in zip(da, db)])


def cl_mul(a, b):
    # schoolbook: one shifted partial product per digit of b, summed columnwise
    da, db = digits(a), digits(b)
    cols = [0] * (len(da) + len(db))
    for j, y in enumerate(db):
        for i, x in enumerate(da):
            cols[i + j] = (cols[i + j] + (x * y) % 10) % 10
    return undigits(cols)


def is_evenish(n):
    return n != 0 and all(c in "02468" for c in str(n))


def is_fiveish(n):
    return n != 0 and all(c in "05" for c in str(n))


def in_class_n(n):
    return n != 0 and not is_evenish(n) and not is_fiveish(n)


def strings_over(alphabet, max_len):
    vals = {0}
    for length in range(1, max_len + 1):
        for t in itertools.product(alphabet, repeat=length):
            vals.add(int("".join(t)))
    return sorted(vals)


def mobius(n):
    sign, f = 1, 2
    while f * f <= n:
        if n % f == 0:
            n //= f
            if n % f == 0:
                return 0
            sign = -sign
        f += 1
    return -sign if n > 1 else sign


# ---------------------------------------------------------------- primes


def brute_primes(max_len):
    """Primes below 10**max_len by exhaustive product search.

    A product of two non-units lies in N only if both factors do, and a
    factor of n in N is never longer than n, so only non-unit members of N
    below 10**max_len need to be multiplied. Zero-divisors are never prime:
    n = n * 56 (evenish n) or n = n * 65 (fiveish n), checked explicitly.
    """
    limit = 10 ** max_len
    cands = np.array([n for n in range(10, limit) if in_class_n(n)], dtype=np.int64)
    dig = np.stack([(cands // 10 ** i) % 10 for i in range(max_len)], axis=1)
    composite = np.zeros(limit, dtype=bool)
    for ai in range(len(cands)):
        a = dig[ai]
        b = dig[ai:]
        cols = np.zeros((len(b), 2 * max_len - 1), dtype=np.int64)
        for i in range(max_len):
            if a[i] == 0:
                continue
            for j in range(max_len):
                cols[:, i + j] += a[i] * b[:, j]
        cols %= 10
        small = np.all(cols[:, max_len:] == 0, axis=1)
        vals = np.zeros(len(b), dtype=np.int64)
        for i in range(max_len - 1, -1, -1):
            vals = vals * 10 + cols[:, i]
        composite[vals[small]] = True
    primes = []
    for n in range(2, limit):
        if n in (3, 7, 9):
            continue
        if is_evenish(n):
            assert cl_mul(n, 56) == n
            continue
        if is_fiveish(n):
            assert cl_mul(n, 65) == n
            continue
        if not composite[n]:
            primes.append(n)
    return primes


def prime_count_formula(k):
    m = k - 1
    s = sum(mobius(m // d) * (2 ** d + 5 ** d) for d in range(1, m + 1) if m % d == 0)
    assert (4 * s) % m == 0
    return 4 * s // m


# --------------------------------------------------------------- squares


def brute_squares(max_root_len):
    return sorted({cl_mul(r, r) for r in range(10 ** max_root_len)})


def square_count_formula(k):
    if k % 2 == 0:
        return 0
    if k == 1:
        return 5
    h = (k - 3) // 2
    return 45 * 10 ** h + 2 ** h


# ------------------------------------------------------------ partitions


def partitions_dp(count):
    """a(n) = #subsets of {1..n} whose carryless sum is n; a(0) = 1."""
    out = [1]
    ways = {0: 1}
    n = 0
    while len(out) < count:
        n += 1
        nxt = dict(ways)
        for s, c in ways.items():
            t = cl_add(s, n)
            nxt[t] = nxt.get(t, 0) + c
        ways = nxt
        out.append(ways.get(n, 0))
    return out


def partitions_subsets(n):
    total = 0
    for r in range(n + 1):
        for sub in itertools.combinations(range(1, n + 1), r):
            s = 0
            for x in sub:
                s = cl_add(s, x)
            total += s == n
    return total


# ------------------------------------------------------------------ main


def build(terms):
    seqs = {}
    seqs["A059729"] = (0, [cl_mul(n, n) for n in range(terms)])
    seqs["A004520"] = (0, [cl_add(n, n) for n in range(terms)])
    seqs["A169885"] = (0, [cl_mul(n, cl_mul(n, n)) for n in range(terms)])

    even = strings_over("02468", 5)
    five = strings_over("05", 9)
    seqs["A014263"] = (1, even[:terms])
    seqs["A169964"] = (1, five[:terms])
    zdiv = sorted(set(even) | set(five))
    seqs["A169884"] = (1, zdiv[:terms])
    cls_n = []
    n = 0
    while len(cls_n) < terms:
        n += 1
        if in_class_n(n):
            cls_n.append(n)
    seqs["A169968"] = (1, cls_n)

    primes = brute_primes(4)
    by_len = {}
    for p in primes:
        by_len[len(str(p))] = by_len.get(len(str(p)), 0) + 1
    assert by_len == {2: 28, 3: 44, 4: 168}, by_len
    assert primes[:6] == [21, 23, 25, 27, 29, 41]
    seqs["A169887"] = (1, primes[:terms])
    for k in range(2, 5):
        assert prime_count_formula(k) == by_len[k]
    seqs["A169962"] = (1, [0] + [prime_count_formula(k) for k in range(2, terms + 1)])

    squares = brute_squares(4)
    sq_len = {}
    for s in squares:
        if s:
            sq_len[len(str(s))] = sq_len.get(len(str(s)), 0) + 1
    for k in range(1, 8):
        assert sq_len.get(k, 0) == square_count_formula(k), (k, sq_len.get(k, 0))
    seqs["A169963"] = (1, [square_count_formula(k) for k in range(1, terms + 1)])
    assert len(squares) >= terms
    seqs["A169889"] = (1, squares[:terms])

    tri, t = [], 0
    for n in range(terms):
        t = cl_add(t, n)
        tri.append(t)
    seqs["A169890"] = (0, tri)

    parts = partitions_dp(terms)
    for n in range(0, 15):
        assert parts[n] == partitions_subsets(n), n
    seqs["A169973"] = (0, parts)

    table = []
    s = 0
    while len(table) < terms:
        for i in range(s + 1):
            table.append(cl_mul(i, s - i))
        s += 1
    seqs["A059692"] = (0, table[:terms])

    fib, a, b = [], 0, 1
    for _ in range(terms):
        fib.append(a % 10)
        a, b = b, a + b
    seqs["A003893"] = (0, fib)
    seqs["A000689"] = (0, [1] + [pow(2, n, 10) for n in range(1, terms)])
    return seqs


def main():
    ap = argparse.ArgumentParser()
    here = os.path.dirname(os.path.abspath(__file__))
    ap.add_argument("--out", default=os.path.join(here, "..", "data", "oeis"))
    ap.add_argument("--terms", type=int, default=250)
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)
    for anum, (offset, values) in sorted(build(args.terms).items()):
        path = os.path.join(args.out, "b" + anum[1:] + ".txt")
        with open(path, "w", newline="\n") as f:
            f.write("# %s: reference terms generated locally by tools/make_fixtures.py\n" % anum)
            f.write("# (brute force from the definitions; not downloaded from oeis.org)\n")
            for i, v in enumerate(values):
                f.write("%d %d\n" % (offset + i, v))
        print("wrote", path, len(values), "terms", file=sys.stderr)


if __name__ == "__main__":
    main()
