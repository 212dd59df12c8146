"""Network formation probability distributions and their restrictions."""

from __future__ import annotations

from .netcore import PlayerSet

NORMALIZATION_TOL = 1e-9
#: entries below this after arithmetic are pruned so support() stays exact
PRUNE_EPS = 1e-15


class DistributionError(ValueError):
    """Invalid probability data (negative mass, sum far from 1, ...)."""


class ConditioningError(ValueError):
    """Conditioning on an event of probability zero."""


class NetFormDist:
    """Sparse probability map over networks, summing to 1.

    Constructors reject inputs whose total mass deviates from 1 by more
    than the normalization tolerance unless ``renormalize`` is set; silent
    renormalization hides modeling bugs.
    """

    def __init__(self, players: PlayerSet, probs, renormalize: bool = False):
        self.players = players
        clean = {}
        for g, p in dict(probs).items():
            if not 0 <= g <= players.complete:
                raise DistributionError(f"network mask {g:#x} out of range")
            if p < 0:
                raise DistributionError(f"negative probability {p} at {g:#x}")
            if p > PRUNE_EPS:
                clean[g] = clean.get(g, 0.0) + p
        total = sum(clean.values())
        if abs(total - 1.0) > NORMALIZATION_TOL:
            if not renormalize:
                raise DistributionError(
                    f"probabilities sum to {total}, not 1"
                )
            if total <= 0:
                raise DistributionError("no positive mass to normalize")
            clean = {g: p / total for g, p in clean.items()}
        self._probs = clean

    def __call__(self, g: int) -> float:
        return self._probs.get(g, 0.0)

    def items(self):
        """(mask, probability) pairs of the support, ascending masks."""
        return sorted(self._probs.items())

    def support(self) -> frozenset[int]:
        """Formable networks: strictly positive stored probability."""
        return frozenset(self._probs)

    def extent(self) -> int:
        """Union of all formable networks, as a link mask."""
        ext = 0
        for g in self._probs:
            ext |= g
        return ext

    def restrict(self, g: int) -> "NetFormDist":
        """Transfer each formable network's mass to its part inside g."""
        out: dict[int, float] = {}
        for h, p in self._probs.items():
            inner = h & g
            out[inner] = out.get(inner, 0.0) + p
        return NetFormDist(self.players, out)

    def remove_link(self, i: int, j: int) -> "NetFormDist":
        """Restriction to g_N - ij via the closed form rho(g) + rho(g+ij)."""
        bit = self.players.link_mask(i, j)
        out: dict[int, float] = {}
        for h, p in self._probs.items():
            inner = h & ~bit
            out[inner] = out.get(inner, 0.0) + p
        return NetFormDist(self.players, out)

    def remove_player(self, i: int) -> "NetFormDist":
        """Restriction to g_{N-i}: strip every link at player i."""
        keep = ~self.players.player_links(i)
        out: dict[int, float] = {}
        for h, p in self._probs.items():
            inner = h & keep
            out[inner] = out.get(inner, 0.0) + p
        return NetFormDist(self.players, out)

    def condition_on(self, predicate) -> "NetFormDist":
        """Bayesian conditioning on a network predicate."""
        kept = {g: p for g, p in self._probs.items() if predicate(g)}
        z = sum(kept.values())
        if z <= 0:
            raise ConditioningError("conditioning event has probability 0")
        return NetFormDist(self.players, {g: p / z for g, p in kept.items()})


def point_mass(players: PlayerSet, g: int) -> NetFormDist:
    """Distribution placing all mass on a single network."""
    return NetFormDist(players, {g: 1.0})


def from_independent_links(players: PlayerSet, link_probs) -> NetFormDist:
    """Multilinear product distribution from per-link probabilities.

    ``link_probs`` maps canonical links (i, j) to formation probabilities;
    missing links never form.
    """
    p = [0.0] * players.num_links
    for (i, j), pij in dict(link_probs).items():
        if not 0 <= pij <= 1:
            raise DistributionError(f"link probability {pij} outside [0,1]")
        p[players.link_index(i, j)] = pij
    probs: dict[int, float] = {0: 1.0}
    for slot in range(players.num_links):
        bit = 1 << slot
        nxt: dict[int, float] = {}
        for g, mass in probs.items():
            if p[slot] < 1.0:
                nxt[g] = nxt.get(g, 0.0) + mass * (1.0 - p[slot])
            if p[slot] > 0.0:
                nxt[g | bit] = nxt.get(g | bit, 0.0) + mass * p[slot]
        probs = nxt
    return NetFormDist(players, probs)


def random_distribution(players: PlayerSet, rng, max_support: int = 8):
    """Random sparse distribution: <= max_support networks, Dirichlet weights."""
    k = int(rng.integers(1, min(max_support, players.complete + 1) + 1))
    masks = rng.choice(players.complete + 1, size=k, replace=False)
    weights = rng.gamma(1.0, size=k)
    weights /= weights.sum()
    return NetFormDist(players, dict(zip((int(m) for m in masks), weights)))


def player_connected(players: PlayerSet, i: int):
    """Predicate: player i has at least one link in the network."""
    attached = players.player_links(i)

    def pred(g: int) -> bool:
        return bool(g & attached)

    return pred


__all__ = [
    "NetFormDist",
    "DistributionError",
    "ConditioningError",
    "point_mass",
    "from_independent_links",
    "random_distribution",
    "player_connected",
]
