"""Walkthrough: intermediated trade between a seller, a buyer and a notary.

A seller S and buyer B generate one unit of wealth whenever they can
trade, either directly or through an intermediary I.  Links form with
probability p (direct) and q (each intermediary link).  The script prints
the formation probabilities, the per-network Myerson and Position payoffs,
and the expected allocations, with and without the institutional rule
that trade requires the intermediary to be connected.

Run: python3 demos/trade_scenario.py
"""

from varnetgames import (
    PlayerSet,
    expected_wealth,
    generate_trade_example,
    links_of,
    run_compute,
)

P, Q = 0.5, 0.5
NAMES = {0: "S", 1: "B", 2: "I"}


def describe(title, v, rho):
    print(f"\n== {title} (p={P}, q={Q}) ==")
    report = run_compute(v, rho)
    print(report.to_table())


def main():
    ps = PlayerSet(3)
    v, rho_plain = generate_trade_example(P, Q)
    _, rho_inst = generate_trade_example(P, Q, institutional=True)

    print("players:", ", ".join(f"{i}={NAMES[i]}" for i in range(3)))
    print("link slots:", links_of(ps, ps.complete))

    describe("independent link formation", v, rho_plain)
    describe("institutional formation (I must be connected)", v, rho_inst)

    e1 = expected_wealth(v, rho_plain)
    e2 = expected_wealth(v, rho_inst)
    print(f"\nthe institutional rule raises expected wealth: {e1:.6g} -> {e2:.6g}")
    print("(strictly, whenever p < 1 and q < 1)")


if __name__ == "__main__":
    main()
