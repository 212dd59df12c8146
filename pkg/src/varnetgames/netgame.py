"""Network games and cooperative games with marginal contributions."""

from __future__ import annotations

import numpy as np

from .netcore import (
    PlayerSet,
    components,
    link_neighborhood,
    neighborhood,
)

#: dense value table up to 2^10 networks, sparse map above
DENSE_PLAYER_LIMIT = 5


class NetworkGame:
    """Wealth function v over all networks on a player set, v(g_0) = 0.

    Values are stored densely (array indexed by mask) for small player
    sets and as a sparse map with default 0 otherwise.
    """

    def __init__(self, players: PlayerSet, values=None):
        self.players = players
        values = dict(values or {})
        if values.get(0, 0.0) != 0.0:
            raise ValueError("network game requires v(g_0) = 0")
        for g in values:
            if not 0 <= g <= players.complete:
                raise ValueError(f"network mask {g:#x} out of range")
        if players.n <= DENSE_PLAYER_LIMIT:
            table = np.zeros(players.complete + 1)
            for g, val in values.items():
                table[g] = val
            self._table = table
            self._map = None
        else:
            self._table = None
            self._map = {g: v for g, v in values.items() if v != 0.0}

    def __call__(self, g: int) -> float:
        if not 0 <= g <= self.players.complete:
            raise ValueError(f"network mask {g:#x} out of range")
        if self._table is not None:
            return float(self._table[g])
        return self._map.get(g, 0.0)

    def items(self):
        """(mask, value) pairs with nonzero wealth."""
        if self._table is not None:
            for g in np.flatnonzero(self._table):
                yield int(g), float(self._table[g])
        else:
            yield from sorted(self._map.items())

    def is_component_additive(self, tol: float = 1e-9):
        """Check v(g) = sum of component values for every network.

        Returns (True, None) or (False, witness_mask).
        """
        ps = self.players
        for g in range(ps.complete + 1):
            total = sum(self(h) for h in components(ps, g))
            if abs(self(g) - total) > tol:
                return False, g
        return True, None

    def delta_link(self, g: int, i: int, j: int) -> float:
        """Marginal contribution of link ij at g: v(g+ij) - v(g)."""
        bit = self.players.link_mask(i, j)
        if g & bit:
            raise ValueError(f"link ({i},{j}) already in network")
        return self(g | bit) - self(g)

    def delta_player(self, g: int, i: int) -> float:
        """Marginal contribution of player i at g: v(g) - v(g - L_i(g))."""
        if not neighborhood(self.players, g, i):
            raise ValueError(f"player {i} is isolated in the network")
        return self(g) - self(g & ~link_neighborhood(self.players, g, i))


class CoopGame:
    """Characteristic function over coalitions with worth(empty) = 0."""

    def __init__(self, players: PlayerSet, worth=None):
        self.players = players
        worth = dict(worth or {})
        if worth.get(0, 0.0) != 0.0:
            raise ValueError("cooperative game requires worth(empty) = 0")
        table = np.zeros(1 << players.n)
        for coalition, w in worth.items():
            if not 0 <= coalition <= players.all_players:
                raise ValueError(f"coalition mask {coalition:#x} out of range")
            table[coalition] = w
        self._table = table

    def __call__(self, coalition: int) -> float:
        return float(self._table[coalition])
