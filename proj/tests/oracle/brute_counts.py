"""Independent brute-force oracle used to freeze expected values in the C++ tests.

Enumerates partitions by plain recursion and checks family membership directly
from the congruence wording (no decomposition, no classification table).
"""
import sys
from math import gcd


def partitions(n, maxpart=None):
    if maxpart is None:
        maxpart = n
    if n == 0:
        yield []
        return
    for k in range(min(n, maxpart), 0, -1):
        for rest in partitions(n - k, k):
            yield [k] + rest


def in_a(p, a, r, parts):
    m = p * r + a
    for part in set(parts):
        h = parts.count(part)
        for j in range(p):
            if (h - j * a) % p == 0 and h < j * m:
                return False
    return True


def in_b(p, a, r, parts):
    m = p * r + a
    l = p * m
    for part in parts:
        if part % p == 0:
            continue
        if not any((part + s * m) % l == 0 for s in range(1, p)):
            return False
    return True


def counts(p, a, r, nmax):
    assert gcd(a, p) == 1 and 1 <= a < p
    ca, cb = [], []
    for n in range(nmax + 1):
        ps = list(partitions(n))
        ca.append(sum(in_a(p, a, r, x) for x in ps))
        cb.append(sum(in_b(p, a, r, x) for x in ps))
    return ca, cb


if __name__ == "__main__":
    p, a, r, nmax = map(int, sys.argv[1:5])
    ca, cb = counts(p, a, r, nmax)
    print("A", ca)
    print("B", cb)
