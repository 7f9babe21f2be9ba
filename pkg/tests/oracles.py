"""Independent reference computations used only by the tests.

Nothing here imports the package's kernels: reduction is done by naive
rewriting, the braid action by literal formula application, and braid
equality on three strands by the (faithful) Burau representation.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product


def rewrite_reduce(word, strategy="left", rng=None):
    """Cancel adjacent inverse pairs one at a time until none is left."""
    w = list(word)
    while True:
        spots = [p for p in range(len(w) - 1) if w[p] == -w[p + 1]]
        if not spots:
            return tuple(w)
        if strategy == "left":
            p = spots[0]
        elif strategy == "right":
            p = spots[-1]
        else:
            p = rng.choice(spots)
        del w[p : p + 2]


def inv(w):
    return tuple(-a for a in reversed(w))


def naive_sigma(s, t):
    """One Hurwitz move straight from the displayed formulas."""
    t = list(t)
    i = abs(s) - 1
    g, h = t[i], t[i + 1]
    if s > 0:
        t[i], t[i + 1] = h, rewrite_reduce(inv(h) + g + h)
    else:
        t[i], t[i + 1] = rewrite_reduce(g + h + inv(g)), g
    return t


def naive_action(letters, t):
    for s in reversed(letters):
        t = naive_sigma(s, t)
    return t


def _burau_letter(s, n, x):
    m = [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]
    i = abs(s) - 1
    if s > 0:
        block = [[1 - x, x], [Fraction(1), Fraction(0)]]
    else:
        block = [[Fraction(0), Fraction(1)], [1 / x, 1 - 1 / x]]
    for r in range(2):
        for c in range(2):
            m[i + r][i + c] = block[r][c]
    return m


def _matmul(a, b):
    n = len(a)
    return [[sum(a[r][k] * b[k][c] for k in range(n)) for c in range(n)] for r in range(n)]


def burau(letters, n, x):
    """Unreduced Burau matrix evaluated at ``t = x`` (exact rationals)."""
    m = [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]
    for s in letters:
        m = _matmul(m, _burau_letter(s, n, x))
    return m


def burau_equal(a, b, n, points=(Fraction(2), Fraction(-3), Fraction(5, 7))):
    return all(burau(a, n, x) == burau(b, n, x) for x in points)


def reduced_words(alphabet_size, max_length):
    """All nonempty freely reduced words of length <= max_length."""
    letters = [s * k for k in range(1, alphabet_size + 1) for s in (1, -1)]
    for n in range(1, max_length + 1):
        for w in product(letters, repeat=n):
            if all(a != -b for a, b in zip(w, w[1:])):
                yield w


def random_reduced(rng: random.Random, rank: int, length: int):
    w: list[int] = []
    while len(w) < length:
        a = rng.choice([k * s for k in range(1, rank + 1) for s in (1, -1)])
        if w and w[-1] == -a:
            continue
        w.append(a)
    return tuple(w)
