"""The Hurwitz action of braid groups on tuples over a free group.

``sigma_i`` sends ``(.., g_i, g_{i+1}, ..)`` to ``(.., g_{i+1}, g_{i+1}^-1 g_i g_{i+1}, ..)``
and ``sigma_i^-1`` sends it to ``(.., g_i g_{i+1} g_i^-1, g_i, ..)``.  Words act
rightmost letter first.

The second ("bullet") action, defined when the rank equals the tuple length,
post-composes a tuple, viewed as an endomorphism of ``F_n``, with a braid
automorphism.  It is computed by substituting ``x_k -> s_k`` where
``s = b^-1 . (x1, ..., xn)``.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from youngbraid import _kernel
from youngbraid.braid import BraidWord, Permutation, invert_braid
from youngbraid.errors import ParseError, RankError, WordLengthExceeded
from youngbraid.free_group import FreeWord

__all__ = [
    "GTuple",
    "apply_sigma",
    "apply_braid",
    "product",
    "permute",
    "bullet",
    "orbit_bfs",
    "OrbitSearch",
]


class GTuple:
    """Immutable n-tuple of elements of ``F_rank`` (a Hurwitz system)."""

    __slots__ = ("words", "rank", "_hash")

    def __init__(self, entries: Iterable[FreeWord], rank: int | None = None):
        entries = tuple(entries)
        if not entries:
            raise ValueError("a tuple needs at least one entry")
        if rank is None:
            rank = max(w.rank for w in entries)
        for w in entries:
            if w.rank != rank:
                if any(abs(a) > rank for a in w.letters):
                    raise RankError(f"entry {w} does not live in F_{rank}")
        self.words = tuple(w.letters for w in entries)
        self.rank = rank
        self._hash = None

    @classmethod
    def from_letters(cls, words: Iterable[tuple], rank: int) -> "GTuple":
        # trusted constructor: ``words`` are reduced letter tuples within ``rank``
        t = cls.__new__(cls)
        t.words = tuple(words)
        t.rank = rank
        t._hash = None
        return t

    @classmethod
    def trivial(cls, n: int) -> "GTuple":
        """``(x1, ..., xn)`` in ``F_n``."""
        return cls.from_letters(((k,) for k in range(1, n + 1)), n)

    @property
    def entries(self) -> tuple[FreeWord, ...]:
        return tuple(FreeWord._trusted(w, self.rank) for w in self.words)

    def __getitem__(self, k: int) -> FreeWord:
        return FreeWord._trusted(self.words[k], self.rank)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.words)

    def length(self) -> int:
        """Total number of letters, the ``l(t)`` of the orbit arguments."""
        return sum(len(w) for w in self.words)

    def __eq__(self, other):
        if not isinstance(other, GTuple):
            return NotImplemented
        return self.rank == other.rank and self.words == other.words

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rank, self.words))
        return self._hash

    def format(self, prefix: str = "x") -> str:
        return "(" + ", ".join(w.format(prefix) for w in self.entries) + ")"

    __str__ = format

    def __repr__(self):
        return f"GTuple({self.format()!r}, rank={self.rank})"

    @classmethod
    def parse(cls, text: str, rank: int | None = None) -> "GTuple":
        """Parse ``(w1, w2, ...)``; the rank defaults to the largest index seen."""
        m = re.fullmatch(r"\s*\((.*)\)\s*", text, re.S)
        if m is None:
            raise ParseError(text, 0, "a tuple must be written as (w1, w2, ...)")
        words, offset = [], m.start(1)
        for part in m.group(1).split(","):
            if not part.strip():
                raise ParseError(text, offset, "empty tuple entry (write 1 for the identity)")
            try:
                words.append(FreeWord.parse(part))
            except ParseError as exc:
                raise ParseError(text, offset + exc.pos, exc.message) from None
            offset += len(part) + 1
        top = max(w.rank for w in words)
        if rank is None:
            rank = top
        elif top > rank:
            raise RankError(f"tuple uses generators beyond F_{rank}")
        return cls.from_letters((w.letters for w in words), rank)

    def to_json(self) -> list:
        return [w.to_json() for w in self.entries]

    @classmethod
    def from_json(cls, data: Sequence, rank: int | None = None) -> "GTuple":
        words = [FreeWord.from_json(pairs) for pairs in data]
        top = max(w.rank for w in words)
        return cls.from_letters((w.letters for w in words), rank or top)


def apply_sigma(i: int, exponent: int, t: GTuple) -> GTuple:
    if not 1 <= i < len(t):
        raise RankError(f"sigma_{i} does not act on tuples of length {len(t)}")
    if exponent not in (1, -1):
        raise ValueError("exponent must be +1 or -1")
    return GTuple.from_letters(_kernel.apply_braid((i * exponent,), t.words), t.rank)


def apply_braid(b: BraidWord, t: GTuple, max_length: int = 0) -> GTuple:
    """Hurwitz action ``b . t``; a positive ``max_length`` bounds intermediate tuples."""
    if b.strands != len(t):
        raise RankError(f"braid on {b.strands} strands cannot act on a {len(t)}-tuple")
    try:
        words = _kernel.apply_braid(b.letters, t.words, max_length)
    except OverflowError as exc:
        raise WordLengthExceeded(str(exc)) from None
    return GTuple.from_letters(words, t.rank)


def product(t: GTuple) -> FreeWord:
    out: tuple = ()
    for w in t.words:
        out = _kernel.multiply(out, w)
    return FreeWord._trusted(out, t.rank)


def permute(p: Permutation, t: GTuple) -> GTuple:
    """Entry ``k`` of the result is entry ``p^-1(k)`` of ``t``."""
    if len(p) != len(t):
        raise RankError(f"permutation of {len(p)} points cannot act on a {len(t)}-tuple")
    inv = ~p
    return GTuple.from_letters((t.words[inv(k) - 1] for k in range(1, len(t) + 1)), t.rank)


@lru_cache(maxsize=4096)
def _bullet_images(letters: tuple, n: int) -> list:
    inverse = _kernel.inverse(letters)
    return _kernel.apply_braid(inverse, [(k,) for k in range(1, n + 1)])


def bullet(b: BraidWord, t: GTuple) -> GTuple:
    """``b . t`` for the post-composition action; requires rank == length == strands."""
    n = len(t)
    if not (t.rank == n == b.strands):
        raise RankError(
            f"bullet action needs rank == length == strands, got {t.rank}, {n}, {b.strands}"
        )
    images = _bullet_images(b.letters, n)
    return GTuple.from_letters(_kernel.substitute_all(t.words, images), n)


@dataclass(frozen=True)
class OrbitSearch:
    """Result of :func:`orbit_bfs`; ``truncated`` means ``max_states`` cut the search."""

    tuples: frozenset
    truncated: bool
    depth: int

    def __contains__(self, t):
        return t in self.tuples

    def __len__(self):
        return len(self.tuples)

    def __iter__(self):
        return iter(self.tuples)


def orbit_bfs(u: GTuple, max_length: int, max_states: int = 1_000_000) -> OrbitSearch:
    """Every tuple ``b . u`` with ``b`` a braid word of length at most ``max_length``."""
    n = len(u)
    moves = [s for i in range(1, n) for s in (i, -i)]
    seen = {u.words}
    frontier = deque([u.words])
    truncated = False
    for _ in range(max_length):
        nxt = deque()
        for words in frontier:
            for s in moves:
                w = tuple(_kernel.apply_braid((s,), words))
                if w not in seen:
                    if len(seen) >= max_states:
                        truncated = True
                        break
                    seen.add(w)
                    nxt.append(w)
            if truncated:
                break
        frontier = nxt
        if truncated or not frontier:
            break
    return OrbitSearch(
        frozenset(GTuple.from_letters(w, u.rank) for w in seen), truncated, max_length
    )
