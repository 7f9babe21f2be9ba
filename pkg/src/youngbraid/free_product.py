"""Normal forms in ``<u, v | u^3 = v^2 = 1>``, the free product of Z/3 and Z/2.

Used to certify that two band generators generate a free subgroup: the
homomorphism ``B_3 -> Z/3 * Z/2`` (``s1 -> uv``, ``s2 -> vu``) composed with
the map ``B_4 -> B_3`` sending ``s1, s3 -> s1`` and ``s2 -> s2`` must send
no nonempty reduced word in the two generators to the identity.
"""

from __future__ import annotations

from typing import Iterable

from youngbraid.braid import BraidWord
from youngbraid.errors import RankError

__all__ = ["FPElement", "fp_multiply", "theta", "exotic", "certify_free"]

_ORDER = {"u": 3, "v": 2}
_SUPERSCRIPT = {1: "", 2: "²"}


class FPElement:
    """Alternating syllables ``(letter, exponent)``; ``u`` exponents lie in {1, 2}."""

    __slots__ = ("syllables",)

    def __init__(self, syllables: Iterable[tuple[str, int]] = ()):
        out: list[tuple[str, int]] = []
        for letter, e in syllables:
            _push(out, letter, e)
        self.syllables = tuple(out)

    @classmethod
    def parse(cls, text: str) -> "FPElement":
        """Parse tokens like ``u``, ``u^2``, ``u^-1``, ``v``; ``1`` is the identity."""
        syl = []
        for tok in text.split():
            if tok == "1":
                continue
            letter, _, e = tok.partition("^")
            if letter not in _ORDER:
                raise ValueError(f"unknown free product letter {tok!r}")
            syl.append((letter, int(e) if e else 1))
        return cls(syl)

    def __mul__(self, other: "FPElement") -> "FPElement":
        return fp_multiply(self, other)

    def __invert__(self) -> "FPElement":
        return FPElement((s, -e) for s, e in reversed(self.syllables))

    def is_identity(self) -> bool:
        return not self.syllables

    def __eq__(self, other):
        return isinstance(other, FPElement) and self.syllables == other.syllables

    def __hash__(self):
        return hash(self.syllables)

    def __len__(self):
        return len(self.syllables)

    def format(self) -> str:
        if not self.syllables:
            return "1"
        return " ".join(s if e == 1 else f"{s}^{e}" for s, e in self.syllables)

    __str__ = format

    def pretty(self) -> str:
        """Compact form with superscripts, e.g. ``u²vu²``."""
        return "".join(s + _SUPERSCRIPT[e] for s, e in self.syllables) or "1"

    def __repr__(self):
        return f"FPElement({self.format()!r})"


def _push(out: list, letter: str, e: int):
    e %= _ORDER[letter]
    if not e:
        return
    if out and out[-1][0] == letter:
        merged = (out[-1][1] + e) % _ORDER[letter]
        if merged:
            out[-1] = (letter, merged)
        else:
            out.pop()
    else:
        out.append((letter, e))


def fp_multiply(a: FPElement, b: FPElement) -> FPElement:
    out = list(a.syllables)
    for letter, e in b.syllables:
        _push(out, letter, e)
    res = FPElement.__new__(FPElement)
    res.syllables = tuple(out)
    return res


_THETA = {
    1: FPElement([("u", 1), ("v", 1)]),
    2: FPElement([("v", 1), ("u", 1)]),
}
_THETA[-1] = ~_THETA[1]
_THETA[-2] = ~_THETA[2]


def theta(b: BraidWord) -> FPElement:
    if b.strands != 3:
        raise RankError(f"theta is defined on B_3, got a braid on {b.strands} strands")
    out = FPElement()
    for a in b.letters:
        out = fp_multiply(out, _THETA[a])
    return out


def exotic(b: BraidWord) -> BraidWord:
    """``B_4 -> B_3`` relabelling ``s3^e -> s1^e``."""
    if b.strands != 4:
        raise RankError(f"the exotic map is defined on B_4, got {b.strands} strands")
    return BraidWord((a if abs(a) != 3 else (1 if a > 0 else -1) for a in b.letters), 3)


def certify_free(generators: tuple[BraidWord, BraidWord], max_word_length: int) -> bool:
    """True iff no nonempty reduced word of length <= ``max_word_length`` in the
    two generators maps to the identity under ``theta`` composed with ``exotic``.

    The images of the generators are computed once; words are then enumerated
    depth-first with incremental multiplication.
    """
    images = {}
    for k, g in enumerate(generators, 1):
        img = theta(exotic(g))
        images[k] = img.syllables
        images[-k] = (~img).syllables

    # a syllable stack with undo information keeps each step O(image length)
    stack: list[tuple[str, int]] = []

    def extend(letter: int) -> list:
        undo = []
        for s, e in images[letter]:
            if stack and stack[-1][0] == s:
                top = stack.pop()
                undo.append(("pop", top))
                merged = (top[1] + e) % _ORDER[s]
                if merged:
                    stack.append((s, merged))
                    undo.append(("push", None))
            else:
                stack.append((s, e))
                undo.append(("push", None))
        return undo

    def rollback(undo: list):
        for op, item in reversed(undo):
            if op == "push":
                stack.pop()
            else:
                stack.append(item)

    def search(last: int, depth: int) -> bool:
        for letter in (1, -1, 2, -2):
            if letter == -last:
                continue
            undo = extend(letter)
            ok = bool(stack) and (depth + 1 >= max_word_length or search(letter, depth + 1))
            rollback(undo)
            if not ok:
                return False
        return True

    if max_word_length < 1:
        return True
    return search(0, 0)

