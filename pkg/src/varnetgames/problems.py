"""Problem files, the intermediated-trade scenario, and report assembly.

A problem document is JSON with three fields::

    {
      "players": 3,
      "game": [{"links": [[0, 1]], "value": 1.0}, ...],
      "distribution": {
        "type": "explicit",
        "networks": [{"links": [[0, 1]], "probability": 0.5}, ...]
      }
    }

Game entries omitted from the list have wealth 0.  The distribution can
also be ``{"type": "independent", "link_probabilities": [{"link": [i, j],
"probability": p}, ...]}`` or ``{"type": "conditioned", "base": {...},
"condition": {"name": "player-connected", "player": i}}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .netcore import PlayerSet, links_of
from .netgame import NetworkGame
from .netprob import (
    NetFormDist,
    from_independent_links,
    player_connected,
)
from .values import (
    expected_wealth,
    expected_myerson,
    expected_position,
    myerson,
    position,
)

SELLER, BUYER, INTERMEDIARY = 0, 1, 2


class ProblemFormatError(ValueError):
    """Malformed or inconsistent problem document."""


def _parse_network(ps: PlayerSet, link_list) -> int:
    mask = 0
    for pair in link_list:
        if not (isinstance(pair, (list, tuple)) and len(pair) == 2):
            raise ProblemFormatError(f"malformed link {pair!r}")
        bit = ps.link_mask(int(pair[0]), int(pair[1]))
        if mask & bit:
            raise ProblemFormatError(f"duplicate link {pair!r} in network")
        mask |= bit
    return mask


def _parse_distribution(ps: PlayerSet, doc) -> NetFormDist:
    kind = doc.get("type")
    if kind == "explicit":
        probs = {}
        for entry in doc["networks"]:
            g = _parse_network(ps, entry["links"])
            if g in probs:
                raise ProblemFormatError(
                    f"duplicate network {entry['links']!r} in distribution"
                )
            probs[g] = float(entry["probability"])
        return NetFormDist(ps, probs)
    if kind == "independent":
        link_probs = {}
        for entry in doc["link_probabilities"]:
            i, j = (int(x) for x in entry["link"])
            key = (min(i, j), max(i, j))
            if key in link_probs:
                raise ProblemFormatError(f"duplicate link probability for {key}")
            link_probs[key] = float(entry["probability"])
        return from_independent_links(ps, link_probs)
    if kind == "conditioned":
        base = _parse_distribution(ps, doc["base"])
        cond = doc["condition"]
        if cond.get("name") != "player-connected":
            raise ProblemFormatError(f"unknown condition {cond!r}")
        return base.condition_on(player_connected(ps, int(cond["player"])))
    raise ProblemFormatError(f"unknown distribution type {kind!r}")


def parse_problem(text: str):
    """Parse a problem document into a (NetworkGame, NetFormDist) pair."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemFormatError(f"invalid JSON: {exc}") from exc
    try:
        ps = PlayerSet(int(doc["players"]))
        values = {}
        for entry in doc.get("game", []):
            g = _parse_network(ps, entry["links"])
            if g in values:
                raise ProblemFormatError(
                    f"duplicate network {entry['links']!r} in game"
                )
            values[g] = float(entry["value"])
        if values.get(0, 0.0) != 0.0:
            raise ProblemFormatError("game sets a nonzero value on the empty network")
        game = NetworkGame(ps, values)
        dist = _parse_distribution(ps, doc["distribution"])
    except ProblemFormatError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ProblemFormatError(str(exc)) from exc
    return game, dist


def serialize_problem(v: NetworkGame, rho: NetFormDist) -> str:
    """Emit an explicit-distribution problem document."""
    ps = v.players
    doc = {
        "players": ps.n,
        "game": [
            {"links": [list(lk) for lk in links_of(ps, g)], "value": val}
            for g, val in v.items()
        ],
        "distribution": {
            "type": "explicit",
            "networks": [
                {"links": [list(lk) for lk in links_of(ps, g)], "probability": p}
                for g, p in rho.items()
            ],
        },
    }
    return json.dumps(doc, indent=2)


def trade_game(ps: PlayerSet) -> NetworkGame:
    """Unit wealth whenever S and B can trade, directly or through I."""
    sb = ps.link_mask(SELLER, BUYER)
    via_i = ps.link_mask(SELLER, INTERMEDIARY) | ps.link_mask(BUYER, INTERMEDIARY)
    values = {
        g: 1.0
        for g in range(1, ps.complete + 1)
        if g & sb or (g & via_i) == via_i
    }
    return NetworkGame(ps, values)


def generate_trade_example(p: float, q: float, institutional: bool = False):
    """Three-player seller/buyer/intermediary scenario.

    Direct trade link forms with probability p, each intermediary link
    with probability q.  With ``institutional`` set, network formation is
    conditioned on the intermediary being connected.
    """
    if not (0 <= p <= 1 and 0 <= q <= 1):
        raise ValueError("link probabilities must lie in [0, 1]")
    ps = PlayerSet(3)
    rho = from_independent_links(
        ps,
        {
            (SELLER, BUYER): p,
            (SELLER, INTERMEDIARY): q,
            (BUYER, INTERMEDIARY): q,
        },
    )
    if institutional:
        rho = rho.condition_on(player_connected(ps, INTERMEDIARY))
    return trade_game(ps), rho


@dataclass
class ResultReport:
    players: int
    expected_wealth: float
    expected_myerson: list[float]
    expected_position: list[float]
    breakdown: list[dict] = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(
            {
                "players": self.players,
                "expected_wealth": self.expected_wealth,
                "expected_myerson": self.expected_myerson,
                "expected_position": self.expected_position,
                "breakdown": self.breakdown,
            },
            indent=2,
        )

    def to_table(self) -> str:
        def fmt(x):
            return f"{x:.12g}"

        def vec(xs):
            return "(" + ", ".join(fmt(x) for x in xs) + ")"

        lines = [
            f"{'network':<24}{'v(g)':>14}{'rho(g)':>16}   "
            f"{'Y^m':<44}{'Y^p':<44}"
        ]
        for row in self.breakdown:
            name = "{}" if not row["links"] else str(
                [tuple(lk) for lk in row["links"]]
            )
            lines.append(
                f"{name:<24}{fmt(row['value']):>14}{fmt(row['probability']):>16}   "
                f"{vec(row['myerson']):<44}{vec(row['position']):<44}"
            )
        lines.append("")
        lines.append(f"expected wealth    : {fmt(self.expected_wealth)}")
        lines.append(f"expected Myerson   : {vec(self.expected_myerson)}")
        lines.append(f"expected Position  : {vec(self.expected_position)}")
        return "\n".join(lines)


def run_compute(v: NetworkGame, rho: NetFormDist) -> ResultReport:
    """Full per-support breakdown plus both expected allocations."""
    ps = v.players
    rows = []
    for g, prob in rho.items():
        rows.append(
            {
                "links": [list(lk) for lk in links_of(ps, g)],
                "value": v(g),
                "probability": prob,
                "myerson": [float(x) for x in myerson(v, g)],
                "position": [float(x) for x in position(v, g)],
            }
        )
    psi_m = np.zeros(ps.n)
    psi_p = np.zeros(ps.n)
    for row in rows:
        psi_m += row["probability"] * np.asarray(row["myerson"])
        psi_p += row["probability"] * np.asarray(row["position"])
    return ResultReport(
        players=ps.n,
        expected_wealth=expected_wealth(v, rho),
        expected_myerson=[float(x) for x in psi_m],
        expected_position=[float(x) for x in psi_p],
        breakdown=rows,
    )


def run_verify(v: NetworkGame, rho: NetFormDist, tol: float = 1e-8):
    """All five variable-game axiom checks for both expected values.

    Returns (items, ok) where each item is a dict with the rule name, the
    axiom report, and whether the axiom is expected to hold for that rule.
    ``ok`` is False iff an expected-pass check failed.
    """
    from . import axioms as ax

    additive, _ = v.is_component_additive(tol)
    expected_pass = {
        ("expected-myerson", "balance"): True,
        ("expected-myerson", "component balance"): True,
        ("expected-myerson", "equal bargaining power"): True,
        ("expected-myerson", "balanced contributions"): True,
        ("expected-myerson", "balanced link contributions"): False,
        ("expected-position", "balance"): True,
        ("expected-position", "component balance"): True,
        ("expected-position", "equal bargaining power"): False,
        ("expected-position", "balanced contributions"): False,
        ("expected-position", "balanced link contributions"): True,
    }
    rules = [
        ("expected-myerson", expected_myerson),
        ("expected-position", expected_position),
    ]
    items = []
    ok = True
    for name, rule in rules:
        reports = [
            ax.check_balance(rule, v, rho, tol),
            ax.check_equal_bargaining_power(rule, v, rho, tol),
            ax.check_balanced_contributions(rule, v, rho, tol),
            ax.check_balanced_link_contributions(rule, v, rho, tol),
        ]
        if additive:
            reports.insert(1, ax.check_component_balance(rule, v, rho, tol))
        for rep in reports:
            expected = expected_pass[(name, rep.axiom)]
            items.append({"rule": name, "report": rep, "expected": expected})
            if expected and not rep.passed:
                ok = False
    return items, ok


def position_comparison_sign(p: float, q: float) -> float:
    """Closed-form sign of the seller's position-value change when
    network formation is conditioned on the intermediary."""
    return (4 * p - 3) * (q - 1) ** 2 * q


def run_compare(p_grid, q_grid, tol: float = 1e-10):
    """Expected values under plain vs institutional trade formation.

    Each grid point reports both expected wealths and allocations, whether
    the Myerson payoffs all improve, and the sign of the seller's position
    payoff change, cross-checked against its closed form.
    """
    rows = []
    for p in p_grid:
        for q in q_grid:
            if q <= 0:
                raise ValueError("institutional comparison needs q > 0")
            v, rho1 = generate_trade_example(p, q, institutional=False)
            _, rho2 = generate_trade_example(p, q, institutional=True)
            psi_m1 = expected_myerson(v, rho1)
            psi_m2 = expected_myerson(v, rho2)
            psi_p1 = expected_position(v, rho1)
            psi_p2 = expected_position(v, rho2)
            diff = float(psi_p1[SELLER] - psi_p2[SELLER])
            closed = position_comparison_sign(p, q)
            if abs(diff) > tol and abs(closed) > tol and np.sign(diff) != np.sign(closed):
                raise RuntimeError(
                    f"position sign mismatch at p={p}, q={q}: "
                    f"computed {diff}, closed form {closed}"
                )
            rows.append(
                {
                    "p": p,
                    "q": q,
                    "expected_wealth_plain": expected_wealth(v, rho1),
                    "expected_wealth_institutional": expected_wealth(v, rho2),
                    "expected_myerson_plain": [float(x) for x in psi_m1],
                    "expected_myerson_institutional": [float(x) for x in psi_m2],
                    "expected_position_plain": [float(x) for x in psi_p1],
                    "expected_position_institutional": [float(x) for x in psi_p2],
                    "myerson_improves": bool(np.all(psi_m1 <= psi_m2 + tol)),
                    "position_seller_diff": diff,
                    "position_sign_closed_form": closed,
                }
            )
    return rows
