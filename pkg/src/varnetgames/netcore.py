"""Players, links, networks and coalitions as bit fields.

Networks are plain ``int`` bitmasks over a canonical lexicographic ordering
of the n(n-1)/2 undirected link slots; coalitions are bitmasks over player
indices.  All operations are pure functions, so values can be shared freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations


class InvalidLinkError(ValueError):
    """Raised for self-loops or endpoints outside the player set."""


#: default cap: 10 players -> 45 link slots, fits a 64-bit mask
DEFAULT_MAX_PLAYERS = 10


@dataclass(frozen=True)
class PlayerSet:
    """A fixed set of players 0..n-1 with canonical link indexing."""

    n: int
    max_players: int = DEFAULT_MAX_PLAYERS

    def __post_init__(self):
        if not 1 <= self.n <= self.max_players:
            raise ValueError(
                f"player count {self.n} outside 1..{self.max_players}"
            )

    @property
    def num_links(self) -> int:
        return self.n * (self.n - 1) // 2

    @property
    def complete(self) -> int:
        """Mask of the complete network g_N."""
        return (1 << self.num_links) - 1

    @property
    def all_players(self) -> int:
        """Coalition mask of the grand coalition N."""
        return (1 << self.n) - 1

    def link_index(self, i: int, j: int) -> int:
        """Slot of link ij in the lexicographic ordering of pairs i<j."""
        if i == j:
            raise InvalidLinkError(f"self-loop {i}{j}")
        if not (0 <= i < self.n and 0 <= j < self.n):
            raise InvalidLinkError(f"link ({i},{j}) outside player set")
        if i > j:
            i, j = j, i
        # pairs with first endpoint < i come before row i
        return i * (2 * self.n - i - 1) // 2 + (j - i - 1)

    def link_mask(self, i: int, j: int) -> int:
        return 1 << self.link_index(i, j)

    def links(self) -> list[tuple[int, int]]:
        """All canonical links (i, j) with i < j, in slot order."""
        return list(combinations(range(self.n), 2))

    def link_endpoints(self, slot: int) -> tuple[int, int]:
        if not 0 <= slot < self.num_links:
            raise InvalidLinkError(f"link slot {slot} out of range")
        return self.links()[slot]

    def player_links(self, i: int) -> int:
        """Mask of all potential links at player i, L_i(g_N)."""
        if not 0 <= i < self.n:
            raise InvalidLinkError(f"player {i} outside player set")
        mask = 0
        for j in range(self.n):
            if j != i:
                mask |= self.link_mask(i, j)
        return mask

    def coalition_links(self, coalition: int) -> int:
        """Mask of all links internal to a coalition, g_S."""
        mask = 0
        for i, j in combinations(members(coalition), 2):
            mask |= self.link_mask(i, j)
        return mask


def members(coalition: int) -> list[int]:
    """Player indices of a coalition mask, ascending."""
    out = []
    i = 0
    c = coalition
    while c:
        if c & 1:
            out.append(i)
        c >>= 1
        i += 1
    return out


def links_of(ps: PlayerSet, g: int) -> list[tuple[int, int]]:
    """Links present in network g, in canonical slot order."""
    return [lk for slot, lk in enumerate(ps.links()) if g >> slot & 1]


def neighborhood(ps: PlayerSet, g: int, i: int) -> int:
    """Coalition mask of i's neighbors in g."""
    nb = 0
    for j in range(ps.n):
        if j != i and g >> ps.link_index(i, j) & 1:
            nb |= 1 << j
    return nb


def link_neighborhood(ps: PlayerSet, g: int, i: int) -> int:
    """Mask of links of g incident to i, L_i(g)."""
    return g & ps.player_links(i)


def degree(ps: PlayerSet, g: int, i: int) -> int:
    return link_neighborhood(ps, g, i).bit_count()


def touched_players(ps: PlayerSet, g: int) -> int:
    """Coalition mask of non-isolated players, N(g)."""
    touched = 0
    for slot, (i, j) in enumerate(ps.links()):
        if g >> slot & 1:
            touched |= (1 << i) | (1 << j)
    return touched


def network_size(ps: PlayerSet, g: int) -> int:
    """n(g) = #N(g), with the convention n(g_0) = 1."""
    t = touched_players(ps, g)
    return t.bit_count() if t else 1


def isolated_players(ps: PlayerSet, g: int) -> int:
    """Coalition mask of players incident to no link of g, N_0(g)."""
    return ps.all_players & ~touched_players(ps, g)


def components(ps: PlayerSet, g: int) -> frozenset[int]:
    """Maximally connected subnetworks of g as link masks; C(g_0) is empty."""
    if g == 0:
        return frozenset()
    # iterative traversal over adjacency derived from the mask
    unseen = touched_players(ps, g)
    comps = []
    while unseen:
        start = (unseen & -unseen).bit_length() - 1
        stack = [start]
        reached = 1 << start
        while stack:
            i = stack.pop()
            for j in members(neighborhood(ps, g, i) & ~reached):
                reached |= 1 << j
                stack.append(j)
        unseen &= ~reached
        comps.append(g & ps.coalition_links(reached))
    return frozenset(comps)


def is_connected(ps: PlayerSet, g: int) -> bool:
    """True iff g is a single component (over its touched players)."""
    return len(components(ps, g)) == 1


def restrict_to_coalition(ps: PlayerSet, g: int, coalition: int) -> int:
    """g|S: links of g with both endpoints in the coalition."""
    return g & ps.coalition_links(coalition)


def remove_links(g: int, h: int) -> int:
    """g - h, set difference on link masks."""
    return g & ~h


def add_links(g: int, h: int) -> int:
    """g + h for disjoint h; overlap violates the definition."""
    if g & h:
        raise ValueError(f"added links overlap network: {g & h:#x}")
    return g | h


@lru_cache(maxsize=None)
def connected_networks(ps: PlayerSet) -> tuple[int, ...]:
    """All nonempty connected networks on the player set, ascending masks."""
    return tuple(
        g for g in range(1, ps.complete + 1) if is_connected(ps, g)
    )
