#!/usr/bin/env python3
"""Rebuild the bundled b-file fixtures.

oeis.org was unreachable when these were made, so every file is computed
here from the sequence's definition instead of being downloaded. The code
deliberately avoids the recurrences and polynomial products used by the
Rust generators (brute-force enumeration, exact Q(sqrt 2) arithmetic,
perfect-square search) so the fixtures act as an independent check.

Run from this directory: python3 reconstruct.py
"""

from itertools import product
from math import comb, isqrt
from pathlib import Path

TERMS = 25
HERE = Path(__file__).resolve().parent


def tuple_sums(alphabet, rows):
    """Flattened triangle: row n counts n-tuples over `alphabet` by sum."""
    out = []
    for n in range(rows):
        top = max(alphabet) * n
        counts = [0] * (top + 1)
        for t in product(alphabet, repeat=n):
            counts[sum(t)] += 1
        out.extend(counts)
    return list(enumerate(out))


def triangle(rows, f):
    return list(enumerate(f(n, k) for n in range(rows) for k in range(n + 1)))


def pell_bounds(count):
    # (3/(2 sqrt 2)) [(3+2r)^k - (3-2r)^k] = 3 y_k where (3+2r)^k = x_k + y_k r
    out, x, y = [], 1, 0
    for k in range(count):
        out.append((k, 3 * y))
        x, y = 3 * x + 4 * y, 2 * x + 3 * y
    return out


def integral_bound_dims(count):
    # n with n(n+1)/2 - 1 = m^2 and 2m the k-th bound
    out = []
    for k, b in pell_bounds(count):
        m = b // 2
        disc = 1 + 8 * (m * m + 1)
        r = isqrt(disc)
        assert r * r == disc and (r - 1) % 2 == 0, k
        out.append((k, (r - 1) // 2))
    # completeness for small n by direct search
    small = [n for n in range(1, 200_000) if isqrt(n * (n + 1) // 2 - 1) ** 2 == n * (n + 1) // 2 - 1]
    assert small == [v for _, v in out if v < 200_000], small
    return out


SEQUENCES = {
    "A027907": ("trinomial triangle: coefficients of (1+x+x^2)^n, by rows",
                tuple_sums((0, 1, 2), 8)),
    "A038717": ("coefficients of (1+x+x^3)^n by rows: n-tuples over {0,1,3} by sum",
                tuple_sums((0, 1, 3), 7)),
    "A013609": ("triangle T(n,k) = binomial(n,k) 2^k",
                triangle(8, lambda n, k: comb(n, k) * 2 ** k)),
    "A038220": ("triangle T(n,k) = binomial(n,k) 3^(n-k) 2^k",
                triangle(8, lambda n, k: comb(n, k) * 3 ** (n - k) * 2 ** k)),
    "A080956": ("a(n) = (n+1)(2-n)/2",
                [(n, (n + 1) * (2 - n) // 2) for n in range(TERMS)]),
    "A075848": ("integral values of 2 sqrt(d-1) for d = n(n+1)/2",
                pell_bounds(TERMS)),
    "A072221": ("n such that n(n+1)/2 - 1 is a square",
                integral_bound_dims(TERMS)),
    "A120908": ("a(n) = 4(n-1) 3^(n-2), n >= 2",
                [(n, 4 * (n - 1) * 3 ** (n - 2)) for n in range(2, 2 + TERMS)]),
    "A003946": ("a(0) = 1, a(n) = 4 3^(n-1)",
                [(n, 1 if n == 0 else 4 * 3 ** (n - 1)) for n in range(TERMS)]),
    "A060188": ("a(n) = 3^n - n - 1",
                [(n, 3 ** n - n - 1) for n in range(TERMS)]),
    "A279019": ("a(n) = n(n+1)",
                [(n, n * (n + 1)) for n in range(TERMS)]),
    "A023444": ("a(n) = n - 2",
                [(n, n - 2) for n in range(TERMS)]),
}


def main():
    for anum, (title, terms) in SEQUENCES.items():
        lines = [
            f"# {anum}: {title}",
            "# Reconstructed offline by reconstruct.py, not downloaded from oeis.org.",
        ]
        lines += [f"{i} {v}" for i, v in terms]
        (HERE / f"b{anum[1:]}.txt").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
