"""Pure-Python word kernels.

Words are tuples of nonzero ints: ``k`` stands for the k-th generator and
``-k`` for its inverse.  Every function here assumes (and returns) freely
reduced words unless it says otherwise.  The compiled module ``_ckernel``
exposes exactly the same functions.
"""

from __future__ import annotations

from typing import Sequence

Word = tuple


def reduce_word(letters: Sequence[int]) -> Word:
    """Freely reduce an arbitrary letter sequence."""
    out: list[int] = []
    for a in letters:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def inverse(w: Word) -> Word:
    return tuple(-a for a in reversed(w))


def multiply(a: Word, b: Word) -> Word:
    la, lb = len(a), len(b)
    k = 0
    while k < la and k < lb and a[la - 1 - k] == -b[k]:
        k += 1
    return a[: la - k] + b[k:]


def conjugate(g: Word, h: Word) -> Word:
    """Return ``h^-1 g h``."""
    return multiply(multiply(inverse(h), g), h)


def apply_braid(braid: Sequence[int], entries: Sequence[Word], limit: int = 0) -> list[Word]:
    """Hurwitz action of an Artin word on a tuple; the rightmost letter acts first.

    ``braid`` holds signed generator indices (``i`` for sigma_i, ``-i`` for
    its inverse).  Bounds are the caller's responsibility.  A positive
    ``limit`` raises ``OverflowError`` once the total length exceeds it.
    """
    t = list(entries)
    total = sum(len(w) for w in t)
    for s in reversed(braid):
        if s > 0:
            i = s - 1
            g, h = t[i], t[i + 1]
            t[i] = h
            t[i + 1] = conjugate(g, h)
        else:
            i = -s - 1
            g, h = t[i], t[i + 1]
            t[i] = conjugate(h, inverse(g))
            t[i + 1] = g
        if limit:
            total += len(t[i]) + len(t[i + 1]) - len(g) - len(h)
            if total > limit:
                raise OverflowError(f"tuple length {total} exceeds limit {limit}")
    return t


def substitute(w: Word, images: Sequence[Word]) -> Word:
    out: list[int] = []
    for a in w:
        img = images[a - 1] if a > 0 else inverse(images[-a - 1])
        for x in img:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
    return tuple(out)


def substitute_all(entries: Sequence[Word], images: Sequence[Word]) -> list[Word]:
    return [substitute(w, images) for w in entries]


def total_length(entries: Sequence[Word]) -> int:
    return sum(len(w) for w in entries)


def first_admissible(entries: Sequence[Word], block_of: Sequence[int]):
    """Locate the first adjacent pair ``v_i^e v_j^-e`` with ``i``, ``j`` co-blocked.

    ``block_of[k - 1]`` is the block label of generator ``k``.  Entries are
    scanned in order, and within an entry left to right.  Returns
    ``(i, j, e)`` or ``None``.
    """
    for w in entries:
        for p in range(len(w) - 1):
            a, b = w[p], w[p + 1]
            if (a > 0) != (b > 0):
                i, j = abs(a), abs(b)
                if block_of[i - 1] == block_of[j - 1]:
                    return i, j, 1 if a > 0 else -1
    return None
