"""Young subgroups of braid groups.

Membership in subgroups generated by Birman-Ko-Lee band generators,
factorization of members into those generators, and Hurwitz orbits of
tuples of conjugates of free generators.
"""

from youngbraid._kernel import BACKEND
from youngbraid.braid import (
    BKLFactor,
    BraidWord,
    Permutation,
    bkl_expand,
    bkl_expand_alt,
    braid_equal,
    compose,
    invert_braid,
    permutation_of,
)
from youngbraid.errors import (
    DecompositionError,
    NotAMemberError,
    NotInOrbitError,
    ParseError,
    RankError,
    WordLengthExceeded,
    YoungBraidError,
)
from youngbraid.free_group import FreeWord
from youngbraid.hurwitz import GTuple, apply_braid, apply_sigma, bullet, orbit_bfs, permute, product
from youngbraid.young import (
    Factorization,
    Partition,
    canonical_tuple,
    connect,
    decompose,
    in_orbit,
    is_member,
    is_noncrossing,
    pair_is_locally_minimal,
    pair_split,
    partition_from_tuple,
)

__version__ = "0.1.0"
