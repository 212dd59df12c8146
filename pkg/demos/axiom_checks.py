"""Which axioms does each expected value satisfy?

Runs the balance, component balance, equal bargaining power, balanced
contributions and balanced link contributions checkers for the expected
Myerson and Position values on the trade scenario.  The two values are
separated exactly by equal bargaining power / balanced contributions
(Myerson only) versus balanced link contributions (Position only).

Run: python3 demos/axiom_checks.py
"""

from varnetgames import (
    check_balance,
    check_balanced_contributions,
    check_balanced_link_contributions,
    check_component_balance,
    check_equal_bargaining_power,
    expected_myerson,
    expected_position,
    generate_trade_example,
)

CHECKS = [
    check_balance,
    check_component_balance,
    check_equal_bargaining_power,
    check_balanced_contributions,
    check_balanced_link_contributions,
]


def main():
    v, rho = generate_trade_example(0.5, 0.5)
    for name, rule in [
        ("expected Myerson", expected_myerson),
        ("expected Position", expected_position),
    ]:
        print(f"\n== {name} value ==")
        for check in CHECKS:
            print(" ", check(rule, v, rho))


if __name__ == "__main__":
    main()
