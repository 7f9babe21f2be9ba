"""Young subgroups ``B_Q`` of the braid group.

``B_Q`` is generated by the band generators ``a_ij`` with ``i`` and ``j`` in
a common block of the partition ``Q``.  It is exactly the stabilizer of the
canonical tuple of ``Q`` (entry ``i`` is ``x_s`` when ``i`` lies in block
``s``), which gives a membership test by a single braid action.  Members are
factored into band generators by :func:`decompose`, and orbits of tuples of
generators are recognized by :func:`in_orbit` and joined by :func:`connect`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from youngbraid import _kernel
from youngbraid.braid import BKLFactor, BraidWord, bkl_expand, expand_factors
from youngbraid.errors import (
    DecompositionError,
    NotAMemberError,
    NotInOrbitError,
    ParseError,
    RankError,
)
from youngbraid.free_group import FreeWord, cyclic_reduce, is_star_product
from youngbraid.hurwitz import GTuple, apply_braid, apply_sigma, bullet, product

__all__ = [
    "Partition",
    "Factorization",
    "OrbitVerdict",
    "PairSplit",
    "canonical_tuple",
    "partition_from_tuple",
    "is_noncrossing",
    "is_member",
    "decompose",
    "in_orbit",
    "orbit_verdict",
    "connect",
    "pair_split",
    "pair_is_locally_minimal",
]


class Partition:
    """Set partition of ``{1..n}`` in canonical form.

    Blocks are sorted internally and ordered by their smallest element.
    """

    __slots__ = ("blocks", "n", "_block_of")

    def __init__(self, blocks: Iterable[Iterable[int]], n: int | None = None):
        blocks = [tuple(sorted(b)) for b in blocks]
        if any(not b for b in blocks):
            raise ValueError("partition blocks must be nonempty")
        points = [k for b in blocks for k in b]
        if n is None:
            n = max(points, default=0)
        if len(points) != len(set(points)):
            raise ValueError("partition blocks must be disjoint")
        if sorted(points) != list(range(1, n + 1)):
            raise ValueError(f"blocks {blocks} do not cover 1..{n} exactly")
        self.blocks = tuple(sorted(blocks))
        self.n = n
        label = [0] * n
        for s, b in enumerate(self.blocks):
            for k in b:
                label[k - 1] = s
        self._block_of = tuple(label)

    def block_of(self, k: int) -> int:
        """0-based index of the block containing ``k``."""
        return self._block_of[k - 1]

    def same_block(self, i: int, j: int) -> bool:
        return self._block_of[i - 1] == self._block_of[j - 1]

    def admissible_pairs(self) -> list[tuple[int, int]]:
        return [p for b in self.blocks for p in combinations(b, 2)]

    def __len__(self):
        return len(self.blocks)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def format(self) -> str:
        return json.dumps([list(b) for b in self.blocks], separators=(",", ":"))

    __str__ = format

    def __repr__(self):
        return f"Partition({[list(b) for b in self.blocks]})"

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the JSON form ``[[1,3],[2,4]]``."""
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(text, exc.pos, f"bad partition JSON: {exc.msg}") from None
        if not isinstance(data, list) or not all(
            isinstance(b, list) and all(isinstance(k, int) for k in b) for b in data
        ):
            raise ParseError(text, 0, "a partition is a JSON array of integer arrays")
        try:
            return cls(data)
        except ValueError as exc:
            raise ParseError(text, 0, str(exc)) from None


@dataclass(frozen=True)
class Factorization:
    """Band-generator word ``f_1 f_2 ... f_t``; the leftmost factor acts last."""

    factors: tuple
    strands: int

    def braid(self) -> BraidWord:
        return expand_factors(self.factors, self.strands)

    def is_admissible(self, q: Partition) -> bool:
        return all(q.same_block(f.i, f.j) for f in self.factors)

    def format(self) -> str:
        return " ".join(f.format() for f in self.factors) or "1"

    __str__ = format

    def to_json(self) -> list:
        return [f.to_json() for f in self.factors]

    def __len__(self):
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)


def canonical_tuple(q: Partition) -> GTuple:
    return GTuple.from_letters(((q.block_of(k) + 1,) for k in range(1, q.n + 1)), len(q))


def partition_from_tuple(g: GTuple) -> Partition:
    classes: dict[tuple, list[int]] = {}
    for k, w in enumerate(g.words, 1):
        classes.setdefault(w, []).append(k)
    return Partition(classes.values(), len(g))


def is_noncrossing(q: Partition) -> bool:
    # a crossing needs i < j < k < l with i, k in one block and j, l in another
    for s, t in combinations(range(len(q)), 2):
        seq = [q.block_of(k) for k in range(1, q.n + 1) if q.block_of(k) in (s, t)]
        changes = sum(1 for a, b in zip(seq, seq[1:]) if a != b)
        if changes >= 3:
            return False
    return True


def _check_strands(b: BraidWord, q: Partition):
    if b.strands != q.n:
        raise RankError(f"braid on {b.strands} strands vs partition of {q.n} points")


def is_member(b: BraidWord, q: Partition) -> bool:
    """Whether ``b`` lies in ``B_Q``, i.e. fixes the canonical tuple of ``Q``."""
    _check_strands(b, q)
    u = canonical_tuple(q)
    return apply_braid(b, u) == u


def decompose(
    b: BraidWord, q: Partition, *, check_membership: bool = True, max_length: int = 0
) -> Factorization:
    """Write a member of ``B_Q`` as a product of admissible band generators.

    Works on ``t = b . (v1, ..., vn)`` over fresh variables.  While ``t`` is
    not trivial, the first adjacent pair ``v_i^e v_j^-e`` with ``i``, ``j`` in
    one block (smallest entry first, then leftmost) is removed by
    ``t := a_ij^-e (bullet) t`` and ``a_ij^-e`` is prepended to the result.

    With ``check_membership=False`` the stabilizer test is skipped and
    non-membership is detected solely by the loop running out of admissible
    pairs.  ``max_length`` bounds the size of ``t`` (see
    :class:`~youngbraid.errors.WordLengthExceeded`).
    """
    _check_strands(b, q)
    if check_membership and not is_member(b, q):
        raise NotAMemberError(f"{b} is not in the Young subgroup of {q}")
    n = q.n
    triv = GTuple.trivial(n)
    t = apply_braid(b, triv, max_length)
    cap = 4 * t.length() ** 2
    factors: list[BKLFactor] = []
    steps = 0
    while t != triv:
        if steps >= cap:
            raise DecompositionError(f"no convergence after {steps} steps for {b}")
        hit = _kernel.first_admissible(t.words, q._block_of)
        if hit is None:
            raise NotAMemberError(
                f"{b} is not in the Young subgroup of {q}: "
                f"no admissible cancellation left in {t}"
            )
        i, j, eta = hit
        f = BKLFactor(i, j, -eta)
        t = bullet(bkl_expand(f, n), t)
        factors.append(f)
        steps += 1
    factors.reverse()
    return Factorization(tuple(factors), n)


# -- orbits ---------------------------------------------------------------


@dataclass(frozen=True)
class OrbitVerdict:
    member: bool
    reason: str = ""

    def __bool__(self):
        return self.member


def _check_generator_tuple(u: GTuple):
    for w in u.words:
        if len(w) != 1 or w[0] < 0:
            raise ValueError(f"base tuple entries must be single generators, got {u}")


def orbit_verdict(candidate: GTuple, u: GTuple) -> OrbitVerdict:
    """Decide orbit membership and report the failing clause if any."""
    _check_generator_tuple(u)
    if len(candidate) != len(u):
        raise RankError(f"tuples of lengths {len(candidate)} and {len(u)}")
    if candidate.rank != u.rank:
        raise RankError(f"tuples over F_{candidate.rank} and F_{u.rank}")
    cores = []
    for w in candidate.entries:
        cores.append(cyclic_reduce(w)[1].letters)
    if sorted(cores) != sorted(u.words):
        return OrbitVerdict(False, "conjugacy classes of the entries differ from the base tuple")
    if product(candidate) != product(u):
        return OrbitVerdict(False, "product of the entries differs from the base product")
    return OrbitVerdict(True)


def in_orbit(candidate: GTuple, u: GTuple) -> bool:
    return orbit_verdict(candidate, u).member


def connect(t: GTuple, u: GTuple) -> BraidWord:
    """Return a braid ``b`` with ``b . u == t``.

    Greedy length descent: apply the first ``sigma_j^e`` (smallest ``j``,
    then ``e = -1`` before ``+1``) that shortens ``t`` until every entry is
    a single letter.  The returned braid is one witness among many.
    """
    verdict = orbit_verdict(t, u)
    if not verdict:
        raise NotInOrbitError(f"{t} is not in the orbit of {u}: {verdict.reason}")
    n = len(u)
    path: list[int] = []
    cur = t
    while cur.length() > n:
        size = cur.length()
        for j in range(1, n):
            for e in (-1, 1):
                nxt = apply_sigma(j, e, cur)
                if nxt.length() < size:
                    break
            else:
                continue
            break
        else:
            raise NotInOrbitError(f"no shortening move from {cur}")
        path.append(j * e)
        cur = nxt
    if cur != u:
        raise NotInOrbitError(f"length descent ended at {cur}, not at {u}")
    # cur = (s_k ... s_1) . t, so t = (s_k ... s_1)^-1 . u
    return BraidWord((-s for s in path), n)


# -- pairs ----------------------------------------------------------------


@dataclass(frozen=True)
class PairSplit:
    """``C = Z A``, ``D = Z B`` for a pair ``(C p C^-1, D q D^-1)``."""

    Z: FreeWord
    A: FreeWord
    B: FreeWord
    p: FreeWord
    q: FreeWord


def _conjugate_form(w: FreeWord) -> tuple[FreeWord, FreeWord]:
    c, core = cyclic_reduce(w)
    if len(core) != 1 or core.letters[0] < 0:
        raise ValueError(f"{w} is not a conjugate of a generator")
    return c, core


def pair_split(f: tuple[FreeWord, FreeWord]) -> PairSplit | None:
    """Split a pair of generator conjugates along the common prefix of their frames.

    Returns ``None`` unless ``Z A p A^-1 B q B^-1 Z^-1`` is a star product.
    """
    rank = max(w.rank for w in f)
    c, p = _conjugate_form(f[0].with_rank(rank))
    d, q = _conjugate_form(f[1].with_rank(rank))
    k = 0
    while k < len(c) and k < len(d) and c.letters[k] == d.letters[k]:
        k += 1
    z = FreeWord._trusted(c.letters[:k], rank)
    a = FreeWord._trusted(c.letters[k:], rank)
    b = FreeWord._trusted(d.letters[k:], rank)
    if not is_star_product([z, a, p, ~a, b, q, ~b, ~z]):
        return None
    return PairSplit(z, a, b, p, q)


def pair_is_locally_minimal(f: tuple[FreeWord, FreeWord]) -> bool:
    """Neither ``sigma_1`` nor ``sigma_1^-1`` shortens the pair."""
    for w in f:
        _conjugate_form(w)
    t = GTuple(f)
    size = t.length()
    return all(apply_sigma(1, e, t).length() >= size for e in (1, -1))
