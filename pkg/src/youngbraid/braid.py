"""Braid words in the Artin generators and the Birman-Ko-Lee band generators.

Braid words are kept freely reduced but otherwise uncanonicalized.  Equality
of braids is decided by :func:`braid_equal`, which compares their Hurwitz
actions on the trivial tuple ``(x1, ..., xn)`` of the free group ``F_n``.
That action is faithful, so the test is exact.

Letter order: the rightmost letter of a word acts first, so that
``(a * b) . t == a . (b . t)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from youngbraid import _kernel
from youngbraid.errors import ParseError, RankError, WordLengthExceeded

__all__ = [
    "BraidWord",
    "BKLFactor",
    "Permutation",
    "bkl_expand",
    "bkl_expand_alt",
    "compose",
    "invert_braid",
    "permutation_of",
    "braid_equal",
    "parse_braid_tokens",
]

_TOKEN = re.compile(r"a\(\s*\d+\s*,\s*\d+\s*\)(?:\^-?\d+)?|\S+")
_SIGMA = re.compile(r"s(\d+)(?:\^(-?\d+))?$")
_BAND = re.compile(r"a\(\s*(\d+)\s*,\s*(\d+)\s*\)(?:\^(-?\d+))?$")


class BraidWord:
    """Word in ``sigma_1 .. sigma_{n-1}``; letter ``i`` is sigma_i, ``-i`` its inverse."""

    __slots__ = ("letters", "strands")

    def __init__(self, letters: Iterable[int] = (), strands: int | None = None):
        letters = tuple(letters)
        top = max((abs(a) for a in letters), default=0)
        if strands is None:
            strands = top + 1
        if strands < 1:
            raise RankError(f"a braid needs at least one strand, got {strands}")
        for a in letters:
            if a == 0 or abs(a) >= strands:
                raise RankError(f"sigma_{abs(a)} is not a generator of B_{strands}")
        self.letters = _kernel.reduce_word(letters)
        self.strands = strands

    @classmethod
    def identity(cls, strands: int) -> "BraidWord":
        return cls((), strands)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return compose(self, other)

    def __invert__(self) -> "BraidWord":
        return invert_braid(self)

    def __pow__(self, k: int) -> "BraidWord":
        base = self if k >= 0 else ~self
        return BraidWord(base.letters * abs(k), self.strands)

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        # Literal equality of reduced words; use braid_equal for group equality.
        if not isinstance(other, BraidWord):
            return NotImplemented
        return self.strands == other.strands and self.letters == other.letters

    def __hash__(self):
        return hash((self.strands, self.letters))

    def format(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"s{a}" if a > 0 else f"s{-a}^-1" for a in self.letters)

    __str__ = format

    def __repr__(self):
        return f"BraidWord({self.format()!r}, strands={self.strands})"

    @classmethod
    def parse(cls, text: str, strands: int | None = None) -> "BraidWord":
        """Parse ``s<i>``, ``s<i>^e``, ``a(<i>,<j>)``, ``a(<i>,<j>)^e`` tokens or ``1``."""
        items = parse_braid_tokens(text, strands)
        if strands is None:
            strands = max(
                [2]
                + [abs(x) + 1 for x in items if isinstance(x, int)]
                + [x.j for x in items if isinstance(x, BKLFactor)]
            )
        letters: list[int] = []
        for x in items:
            if isinstance(x, BKLFactor):
                letters.extend(bkl_expand(x, strands).letters)
            else:
                letters.append(x)
        return cls(letters, strands)


def parse_braid_tokens(text: str, strands: int | None = None) -> list:
    """Tokenize braid text into signed Artin letters and :class:`BKLFactor` items.

    Positive and negative powers are expanded; ``1`` contributes nothing.
    """
    out: list = []
    for m in _TOKEN.finditer(text):
        tok = m.group()
        if tok == "1":
            continue
        sm = _SIGMA.match(tok)
        bm = _BAND.match(tok) if sm is None else None
        if sm is None and bm is None:
            raise ParseError(text, m.start(), f"bad braid token {tok!r}")
        power = (sm or bm).group(2 if sm else 3)
        e = int(power) if power is not None else 1
        if sm:
            i = int(sm.group(1))
            if i < 1 or (strands is not None and i >= strands):
                raise ParseError(text, m.start(), f"s{i} is not a generator of B_{strands or '?'}")
            out.extend([i if e > 0 else -i] * abs(e))
        else:
            i, j = int(bm.group(1)), int(bm.group(2))
            if i == j or min(i, j) < 1 or (strands is not None and max(i, j) > strands):
                raise ParseError(text, m.start(), f"a({i},{j}) is not a band generator of B_{strands or '?'}")
            out.extend([BKLFactor(i, j, 1 if e > 0 else -1)] * abs(e))
    return out


@dataclass(frozen=True)
class BKLFactor:
    """The letter ``a_ij^exponent``; indices are normalized so that ``i < j``."""

    i: int
    j: int
    exponent: int = 1

    def __post_init__(self):
        if self.i == self.j or min(self.i, self.j) < 1:
            raise RankError(f"a({self.i},{self.j}) needs two distinct positive strands")
        if self.exponent not in (1, -1):
            raise ValueError(f"exponent must be +1 or -1, got {self.exponent}")
        if self.i > self.j:
            i, j = self.j, self.i
            object.__setattr__(self, "i", i)
            object.__setattr__(self, "j", j)

    def __invert__(self) -> "BKLFactor":
        return BKLFactor(self.i, self.j, -self.exponent)

    def format(self) -> str:
        base = f"a({self.i},{self.j})"
        return base if self.exponent == 1 else base + "^-1"

    __str__ = format

    def to_json(self) -> dict:
        return {"i": self.i, "j": self.j, "exponent": self.exponent}


def _check_band(f: BKLFactor, n: int):
    if f.j > n:
        raise RankError(f"{f} needs {f.j} strands, braid has {n}")


def bkl_expand(f: BKLFactor, n: int) -> BraidWord:
    """``a_ij = s_i ... s_{j-2} s_{j-1} s_{j-2}^-1 ... s_i^-1``."""
    _check_band(f, n)
    word = list(range(f.i, f.j)) + [-k for k in range(f.j - 2, f.i - 1, -1)]
    if f.exponent < 0:
        word = [-a for a in reversed(word)]
    return BraidWord(word, n)


def bkl_expand_alt(f: BKLFactor, n: int) -> BraidWord:
    """``a_ij = s_{j-1}^-1 ... s_{i+1}^-1 s_i s_{i+1} ... s_{j-1}``."""
    _check_band(f, n)
    word = [-k for k in range(f.j - 1, f.i, -1)] + list(range(f.i, f.j))
    if f.exponent < 0:
        word = [-a for a in reversed(word)]
    return BraidWord(word, n)


def expand_factors(factors: Sequence[BKLFactor], n: int) -> BraidWord:
    letters: list[int] = []
    for f in factors:
        letters.extend(bkl_expand(f, n).letters)
    return BraidWord(letters, n)


def compose(a: BraidWord, b: BraidWord) -> BraidWord:
    if a.strands != b.strands:
        raise RankError(f"cannot compose braids on {a.strands} and {b.strands} strands")
    return BraidWord(_kernel.multiply(a.letters, b.letters), a.strands)


def invert_braid(b: BraidWord) -> BraidWord:
    return BraidWord(_kernel.inverse(b.letters), b.strands)


class Permutation:
    """Bijection of ``{1..n}``; ``images[k-1]`` is the image of ``k``.

    Products compose right to left: ``(p * q)(k) == p(q(k))``.
    """

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, i: int, j: int, n: int) -> "Permutation":
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(images)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Permutation":
        images = list(range(1, n + 1))
        for c in cycles:
            for k, a in enumerate(c):
                images[a - 1] = c[(k + 1) % len(c)]
        return cls(images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __len__(self):
        return len(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(self.images[k - 1] for k in other.images)

    def __invert__(self) -> "Permutation":
        inv = [0] * len(self.images)
        for k, v in enumerate(self.images, 1):
            inv[v - 1] = k
        return Permutation(inv)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(1, len(self.images) + 1):
            if start in seen or self(start) == start:
                continue
            cyc, k = [], start
            while k not in seen:
                seen.add(k)
                cyc.append(k)
                k = self(k)
            out.append(tuple(cyc))
        return out

    def __str__(self):
        cyc = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"

    def __repr__(self):
        return f"Permutation({list(self.images)})"


def permutation_of(b: BraidWord) -> Permutation:
    # swapping two slots of ``images`` right-composes with that transposition
    images = list(range(1, b.strands + 1))
    for a in b.letters:
        i = abs(a)
        images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(images)


def trivial_letters(n: int) -> list[tuple]:
    return [(k,) for k in range(1, n + 1)]


def action_on_trivial(b: BraidWord, max_length: int = 0) -> list[tuple]:
    try:
        return _kernel.apply_braid(b.letters, trivial_letters(b.strands), max_length)
    except OverflowError as exc:
        raise WordLengthExceeded(str(exc)) from None


def braid_equal(a: BraidWord, b: BraidWord, max_length: int = 0) -> bool:
    """Group equality in ``B_n``, decided through the faithful Hurwitz action."""
    if a.strands != b.strands:
        raise RankError(f"cannot compare braids on {a.strands} and {b.strands} strands")
    return action_on_trivial(a, max_length) == action_on_trivial(b, max_length)
