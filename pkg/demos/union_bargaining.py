#!/usr/bin/env python3
"""Arbitrate the union-level game: maximin threats, then the Nash solution.

The workers' union and the employers' union face a 2x2 game in which each
prefers its own deal.  Each side can guarantee itself the maximin value, so
that pair of values is the disagreement point; the Nash arbitration scheme
then picks the Pareto-frontier point maximizing the product of gains.
"""

from pathlib import Path

from matchgames import (
    Player,
    bargain,
    format_rational,
    maximin_2x2,
    parse_bimatrix,
)

DATA = Path(__file__).parent / "data" / "union_game.json"


def fmt_point(point):
    return "(" + ", ".join(format_rational(v) for v in point) + ")"


def main():
    bimatrix = parse_bimatrix(DATA.read_text())
    game = bimatrix.game

    print("payoff grid (workers' union rows, employers' union columns):")
    for row in game.payoffs:
        print("   " + "   ".join(fmt_point(pair) for pair in row))

    x0, v1 = maximin_2x2(game, Player.ONE)
    y0, v2 = maximin_2x2(game, Player.TWO)
    print(f"\nmaximin strategy of the workers' union:   {tuple(map(format_rational, x0.weights))}, value {format_rational(v1)}")
    print(f"maximin strategy of the employers' union: {tuple(map(format_rational, y0.weights))}, value {format_rational(v2)}")

    outcome = bargain(game)
    print(f"\nfeasible hull vertices: {[fmt_point(p) for p in outcome.feasible_hull]}")
    print(f"pareto frontier: {[f'{fmt_point(s)} -> {fmt_point(e)}' for s, e in outcome.pareto_frontier]}")
    print(f"disagreement point: {fmt_point(outcome.disagreement.point)}")
    print(f"nash solution: {fmt_point(outcome.solution)}   (product of gains {format_rational(outcome.nash_product)})")


if __name__ == "__main__":
    main()
