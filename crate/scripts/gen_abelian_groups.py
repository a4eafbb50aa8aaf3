#!/usr/bin/env python3
"""Prints the abelian-group section of the bundled catalog: every abelian
group of order <= 64 in primary form, one `abgroup` line each."""


def partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield []
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield [k] + rest


def factorize(n):
    out, p = [], 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def groups(n):
    blocks = [[[p ** k for k in part] for part in partitions(e)] for p, e in factorize(n)]
    result = [[]]
    for choices in blocks:
        result = [r + c for r in result for c in choices]
    return result


def main():
    print("abgroup Z1 :")
    for n in range(2, 65):
        for factors in groups(n):
            name = "x".join(f"Z{d}" for d in factors)
            print(f"abgroup {name} : {' '.join(map(str, factors))}")


if __name__ == "__main__":
    main()
