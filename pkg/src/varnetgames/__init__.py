"""Exact expected-value computation for variable network games."""

from .netcore import (
    PlayerSet,
    InvalidLinkError,
    add_links,
    components,
    connected_networks,
    degree,
    is_connected,
    isolated_players,
    link_neighborhood,
    links_of,
    members,
    neighborhood,
    network_size,
    remove_links,
    restrict_to_coalition,
    touched_players,
)
from .netgame import CoopGame, NetworkGame
from .netprob import (
    ConditioningError,
    DistributionError,
    NetFormDist,
    from_independent_links,
    player_connected,
    point_mass,
)
from .values import (
    SizeCapError,
    coalition_restricted_game,
    expected_marginal_link,
    expected_marginal_player,
    expected_myerson,
    expected_position,
    expected_wealth,
    expected_wealth_by_components,
    link_shapley,
    myerson,
    omega_of,
    position,
    shapley,
    standard_extension,
)
from .axioms import (
    AxiomReport,
    check_balance,
    check_balanced_contributions,
    check_balanced_link_contributions,
    check_component_balance,
    check_deterministic_axioms,
    check_equal_bargaining_power,
    check_shapley_axioms,
)
from .problems import (
    ProblemFormatError,
    ResultReport,
    generate_trade_example,
    parse_problem,
    run_compare,
    run_compute,
    run_verify,
    serialize_problem,
    trade_game,
)

__version__ = "0.1.0"
