"""Exhaustive scan of palindromizations rev(w)·w for the parabolic pair
A = [[1,1],[0,1]], B = [[1,0],[mu,1]], reporting max |s| per word length.

Independent of the library: positions are measured along the core [0, ∞]
(the fixed points of A and B) relative to the crossing of the double
altitude of (A, B), in plain numpy.
Run: python3 tests/oracles/negative_control_scan.py [max_len]
"""
import itertools
import math
import sys

import numpy as np


def letters(mu):
    A = np.array([[1, 1], [0, 1]], dtype=float)
    B = np.array([[1, 0], [mu, 1]], dtype=float)
    return {"a": A, "A": np.linalg.inv(A), "b": B, "B": np.linalg.inv(B)}


def reduced_words(n):
    inv = {"a": "A", "A": "a", "b": "B", "B": "b"}
    for w in itertools.product("aAbB", repeat=n):
        if all(inv[x] != y for x, y in zip(w, w[1:])):
            yield "".join(w)


def position(m):
    """ln of the geometric mean of |fixed points|, or None for parabolic/identity."""
    a, b, c, d = m[0, 0], m[0, 1], m[1, 0], m[1, 1]
    t = a + d
    if abs(t * t - 4) < 1e-9 or abs(c) < 1e-300 or abs(b) < 1e-300:
        return None
    # product of the fixed points of z -> (az+b)/(cz+d) is -b/c
    return 0.5 * math.log(abs(b / c))


def scan(mu, max_len):
    mats = letters(mu)
    A, B = mats["a"], mats["b"]
    # double altitude of (A, B); its crossing anchors s = 0
    T = A @ B @ B @ A - B @ A @ A @ B
    anchor = 0.5 * math.log(abs(T[0, 1] / T[1, 0]))
    out = []
    for n in range(1, max_len + 1):
        best = 0.0
        for w in reduced_words(n):
            p = np.eye(2)
            for x in w[::-1] + w:
                p = p @ mats[x]
            s = position(p)
            if s is not None:
                best = max(best, abs(s - anchor))
        out.append((n, best))
    return out


def main():
    max_len = int(sys.argv[1]) if len(sys.argv) > 1 else 8
    for mu in (0.5, 4.0):
        print(f"mu = {mu}")
        for n, best in scan(mu, max_len):
            print(f"  |w| = {n:2d}  max |s| = {best:.3f}")


if __name__ == "__main__":
    main()
