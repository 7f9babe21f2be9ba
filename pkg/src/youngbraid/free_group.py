"""Reduced words in a free group of finite rank.

A :class:`FreeWord` is an immutable value: a freely reduced tuple of signed
generator indices (``3`` is ``x3``, ``-3`` is ``x3^-1``) together with the
rank of the ambient free group.  Reduction happens at construction, so two
words are equal exactly when they represent the same group element.

>>> w = FreeWord.parse("x1 x2^-1 x2 x1^-1 x3")
>>> w
FreeWord('x3', rank=3)
>>> len(FreeWord.parse("x1 x2 x1^-1"))
3
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from youngbraid import _kernel
from youngbraid.errors import ParseError, RankError

__all__ = [
    "FreeWord",
    "reduce",
    "length",
    "multiply",
    "invert",
    "is_star_product",
    "cyclic_reduce",
    "is_conjugate_of_generator",
    "substitute",
]

_TOKEN = re.compile(r"\S+")
_LETTER = re.compile(r"(?:([xv])(\d+)|([xyz]))(?:\^(-?\d+))?$")
_BARE = {"x": 1, "y": 2, "z": 3}


class FreeWord:
    """Element of the free group ``F_rank`` stored as a reduced word."""

    __slots__ = ("letters", "rank", "_hash")

    def __init__(self, letters: Iterable[int] = (), rank: int | None = None):
        letters = tuple(letters)
        top = max((abs(a) for a in letters), default=0)
        if rank is None:
            rank = max(top, 1)
        if rank < 1:
            raise RankError(f"rank must be positive, got {rank}")
        for a in letters:
            if a == 0 or abs(a) > rank:
                raise RankError(f"letter {a} outside the generators of F_{rank}")
        self.letters = _kernel.reduce_word(letters)
        self.rank = rank
        self._hash = None

    @classmethod
    def _trusted(cls, letters: tuple, rank: int) -> "FreeWord":
        # Skips validation and reduction; callers guarantee both.
        w = cls.__new__(cls)
        w.letters = letters
        w.rank = rank
        w._hash = None
        return w

    @classmethod
    def identity(cls, rank: int) -> "FreeWord":
        return cls((), rank)

    @classmethod
    def generator(cls, k: int, rank: int) -> "FreeWord":
        return cls((k,), rank)

    # -- group structure -------------------------------------------------

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        if not isinstance(other, FreeWord):
            return NotImplemented
        if other.rank != self.rank:
            raise RankError(f"cannot multiply words of ranks {self.rank} and {other.rank}")
        return FreeWord._trusted(_kernel.multiply(self.letters, other.letters), self.rank)

    def __invert__(self) -> "FreeWord":
        return FreeWord._trusted(_kernel.inverse(self.letters), self.rank)

    def __pow__(self, k: int) -> "FreeWord":
        base = self if k >= 0 else ~self
        out = FreeWord.identity(self.rank)
        for _ in range(abs(k)):
            out = out * base
        return out

    def conjugate_by(self, h: "FreeWord") -> "FreeWord":
        """Return ``h^-1 * self * h``."""
        return FreeWord._trusted(_kernel.conjugate(self.letters, h.letters), self.rank)

    def with_rank(self, rank: int) -> "FreeWord":
        """The same word read in ``F_rank``."""
        if rank == self.rank:
            return self
        return FreeWord(self.letters, rank)

    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other):
        if not isinstance(other, FreeWord):
            return NotImplemented
        return self.rank == other.rank and self.letters == other.letters

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rank, self.letters))
        return self._hash

    # -- text ------------------------------------------------------------

    @classmethod
    def parse(cls, text: str, rank: int | None = None) -> "FreeWord":
        """Parse whitespace-separated tokens ``x<k>``, ``x<k>^-1``, ``v<k>^e`` or ``1``.

        The bare names ``x``, ``y``, ``z`` are accepted for ``x1``, ``x2``,
        ``x3``.  Exponents other than ``+-1`` expand to repeated letters.
        """
        letters: list[int] = []
        for m in _TOKEN.finditer(text):
            tok = m.group()
            if tok == "1":
                continue
            lm = _LETTER.match(tok)
            if lm is None:
                raise ParseError(text, m.start(), f"bad word token {tok!r}")
            k = int(lm.group(2)) if lm.group(2) else _BARE[lm.group(3)]
            if k == 0:
                raise ParseError(text, m.start(), "generator indices start at 1")
            e = int(lm.group(4)) if lm.group(4) is not None else 1
            letters.extend([k if e > 0 else -k] * abs(e))
        if rank is not None and any(abs(a) > rank for a in letters):
            bad = next(a for a in letters if abs(a) > rank)
            raise RankError(f"letter x{abs(bad)} outside the generators of F_{rank}")
        return cls(letters, rank)

    def format(self, prefix: str = "x") -> str:
        if not self.letters:
            return "1"
        return " ".join(f"{prefix}{a}" if a > 0 else f"{prefix}{-a}^-1" for a in self.letters)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"FreeWord({self.format()!r}, rank={self.rank})"

    def to_json(self) -> list:
        """Signed-letter pairs ``[[index, exponent], ...]``."""
        return [[abs(a), 1 if a > 0 else -1] for a in self.letters]

    @classmethod
    def from_json(cls, pairs: Sequence[Sequence[int]], rank: int | None = None) -> "FreeWord":
        letters = []
        for k, e in pairs:
            if e not in (1, -1):
                raise ValueError(f"exponent must be +1 or -1, got {e}")
            letters.append(k * e)
        return cls(letters, rank)


def reduce(raw: Sequence[int], rank: int | None = None) -> FreeWord:
    return FreeWord(raw, rank)


def length(w: FreeWord) -> int:
    return len(w.letters)


def multiply(a: FreeWord, b: FreeWord) -> FreeWord:
    return a * b


def invert(w: FreeWord) -> FreeWord:
    return ~w


def is_star_product(parts: Sequence[FreeWord]) -> bool:
    """True iff concatenating ``parts`` involves no cancellation at all."""
    if not parts:
        return True
    rank = parts[0].rank
    total = parts[0]
    expected = len(parts[0])
    for p in parts[1:]:
        if p.rank != rank:
            raise RankError("star product of words with different ranks")
        total = total * p
        expected += len(p)
    return len(total) == expected


def cyclic_reduce(w: FreeWord) -> tuple[FreeWord, FreeWord]:
    """Split ``w`` as ``z * core * z^-1`` with ``core`` cyclically reduced."""
    a = w.letters
    k, n = 0, len(a)
    while n - 2 * k >= 2 and a[k] == -a[n - 1 - k]:
        k += 1
    return FreeWord._trusted(a[:k], w.rank), FreeWord._trusted(a[k : n - k], w.rank)


def is_conjugate_of_generator(w: FreeWord, g: int) -> bool:
    _, core = cyclic_reduce(w)
    return core.letters == (g,)


def substitute(w: FreeWord, images: Sequence[FreeWord]) -> FreeWord:
    """Image of ``w`` under the homomorphism ``x_k -> images[k-1]``."""
    if len(images) != w.rank:
        raise RankError(f"need {w.rank} images for a word in F_{w.rank}, got {len(images)}")
    if not images:
        return w
    target = images[0].rank
    if any(img.rank != target for img in images):
        raise RankError("substitution images must share a rank")
    letters = _kernel.substitute(w.letters, [img.letters for img in images])
    return FreeWord._trusted(letters, target)
