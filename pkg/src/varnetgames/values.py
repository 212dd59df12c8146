"""Shapley, Myerson and Position Values, and their expected extensions."""

from __future__ import annotations

from functools import lru_cache
from math import factorial

import numpy as np

from .netcore import (
    components,
    isolated_players,
    members,
    restrict_to_coalition,
)
from .netgame import CoopGame, NetworkGame
from .netprob import NetFormDist

#: 2^|g| inner terms in the position value; refuse beyond this
POSITION_LINK_CAP = 22


class SizeCapError(ValueError):
    """Computation would exceed the configured combinatorial size cap."""


@lru_cache(maxsize=None)
def _shapley_weights(n: int) -> tuple[float, ...]:
    """weight(s) = s! (n-s-1)! / n! for s = 0..n-1; exact for n <= 10."""
    fact = [factorial(k) for k in range(n + 1)]
    return tuple(fact[s] * fact[n - s - 1] / fact[n] for s in range(n))


def shapley(game: CoopGame) -> np.ndarray:
    """Shapley value of a cooperative game."""
    n = game.players.n
    weights = _shapley_weights(n)
    out = np.zeros(n)
    for s in range((1 << n) - 1):
        w = weights[s.bit_count()]
        worth_s = game(s)
        for i in range(n):
            if not s >> i & 1:
                out[i] += w * (game(s | 1 << i) - worth_s)
    return out


def coalition_restricted_game(v: NetworkGame, g: int) -> CoopGame:
    """Associated cooperative game: worth(S) = v(g|S)."""
    ps = v.players
    worth = {
        s: v(restrict_to_coalition(ps, g, s))
        for s in range(1 << ps.n)
    }
    return CoopGame(ps, worth)


def myerson(v: NetworkGame, g: int) -> np.ndarray:
    """Myerson Value: Shapley-weighted marginals of coalition restrictions."""
    ps = v.players
    n = ps.n
    weights = _shapley_weights(n)
    restricted = [v(restrict_to_coalition(ps, g, s)) for s in range(1 << n)]
    out = np.zeros(n)
    for s in range((1 << n) - 1):
        w = weights[s.bit_count()]
        for i in range(n):
            if not s >> i & 1:
                out[i] += w * (restricted[s | 1 << i] - restricted[s])
    return out


def _iter_submasks(mask: int):
    """All submasks of mask, including 0 and mask itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def link_shapley(v: NetworkGame, g: int) -> dict[int, float]:
    """Shapley value of each link of g in the link game h -> v(h)."""
    m = g.bit_count()
    if m > POSITION_LINK_CAP:
        raise SizeCapError(
            f"network has {m} links, beyond the cap of {POSITION_LINK_CAP}"
        )
    fact = [factorial(k) for k in range(m + 1)]
    out = {}
    for slot in range(v.players.num_links):
        bit = 1 << slot
        if not g & bit:
            continue
        total = 0.0
        for h in _iter_submasks(g & ~bit):
            w = fact[h.bit_count()] * fact[m - h.bit_count() - 1] / fact[m]
            total += w * (v(h | bit) - v(h))
        out[bit] = total
    return out


def position(v: NetworkGame, g: int) -> np.ndarray:
    """Position Value: half of each incident link's Shapley link value."""
    ps = v.players
    out = np.zeros(ps.n)
    if g == 0:
        return out
    per_link = link_shapley(v, g)
    for bit, val in per_link.items():
        i, j = ps.link_endpoints(bit.bit_length() - 1)
        out[i] += 0.5 * val
        out[j] += 0.5 * val
    return out


def expected_wealth(v: NetworkGame, rho: NetFormDist) -> float:
    """Probability-weighted wealth over the support of rho."""
    if v.players != rho.players:
        raise ValueError("game and distribution use different player sets")
    return float(sum(p * v(g) for g, p in rho.items()))


def expected_wealth_by_components(v: NetworkGame, rho: NetFormDist):
    """Per-component expected wealth for a component-additive game.

    Returns a map from component masks of the extent to their expected
    wealth; the values sum to expected_wealth(v, rho).
    """
    additive, witness = v.is_component_additive()
    if not additive:
        raise ValueError(
            f"game is not component additive; witness mask {witness:#x}"
        )
    ps = v.players
    out = {}
    for comp in components(ps, rho.extent()):
        restricted = rho.restrict(comp)
        out[comp] = float(sum(p * v(g) for g, p in restricted.items()))
    return out


def expected_marginal_link(v: NetworkGame, rho: NetFormDist, i, j) -> float:
    """Expected marginal contribution of a link: sum of rho(g+ij) Delta_ij."""
    bit = v.players.link_mask(i, j)
    total = 0.0
    for g, p in rho.items():
        if g & bit:
            total += p * (v(g) - v(g & ~bit))
    return total


def expected_marginal_player(v: NetworkGame, rho: NetFormDist, i) -> float:
    """Expected marginal contribution of a player: sum of rho(g) Delta_i."""
    attached = v.players.player_links(i)
    total = 0.0
    for g, p in rho.items():
        if g & attached:
            total += p * (v(g) - v(g & ~attached))
    return total


def standard_extension(rule, v: NetworkGame, rho: NetFormDist) -> np.ndarray:
    """Probability-weighted average of a deterministic allocation rule.

    The rule must pay 0 to players isolated in each evaluated network;
    this is asserted rather than silently enforced.
    """
    ps = v.players
    out = np.zeros(ps.n)
    for g, p in rho.items():
        alloc = np.asarray(rule(v, g), dtype=float)
        if alloc.shape != (ps.n,):
            raise ValueError("rule did not return a full allocation")
        for i in members(isolated_players(ps, g)):
            if alloc[i] != 0.0:
                raise ValueError(
                    f"rule pays isolated player {i} a nonzero amount"
                )
        out += p * alloc
    return out


def expected_myerson(v: NetworkGame, rho: NetFormDist) -> np.ndarray:
    return standard_extension(myerson, v, rho)


def expected_position(v: NetworkGame, rho: NetFormDist) -> np.ndarray:
    return standard_extension(position, v, rho)


def omega_of(v: NetworkGame, rho: NetFormDist) -> CoopGame:
    """Expected coalition-restricted game: worth(S) = sum rho(g) v(g|S)."""
    ps = v.players
    worth = dict.fromkeys(range(1 << ps.n), 0.0)
    for g, p in rho.items():
        for s in range(1 << ps.n):
            worth[s] += p * v(restrict_to_coalition(ps, g, s))
    worth[0] = 0.0
    return CoopGame(ps, worth)


__all__ = [
    "SizeCapError",
    "shapley",
    "coalition_restricted_game",
    "myerson",
    "link_shapley",
    "position",
    "expected_wealth",
    "expected_wealth_by_components",
    "expected_marginal_link",
    "expected_marginal_player",
    "standard_extension",
    "expected_myerson",
    "expected_position",
    "omega_of",
]
