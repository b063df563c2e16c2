"""High-level workflows behind the CLI: assign, game, bargain, pipeline.

Each command takes parsed input files and returns a Report.  Reports on the
bundled datasets carry notes flagging that data's known quirks, so regression
output stays self-documenting.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction

from . import datasets
from .assignment import (
    AssignmentResult,
    Objective,
    compare_assignments,
    solve_hungarian,
)
from .bargaining import (
    BargainingOutcome,
    BimatrixGame,
    DisagreementPoint,
    Player,
    bargain,
    maximin_2x2,
    nash_solution,
)
from .core import GameInstance, Matching, RationalLike, as_rational
from .formats import BimatrixFile, MarketFile, Report
from .situations import (
    EQUILIBRIUM_ENUMERATION_CAP,
    build_table,
    compromise_set,
    enumerate_equilibria,
    ideal_point,
    least_satisfied,
)


class Side(Enum):
    WORKERS = "workers"
    ENTERPRISES = "enterprises"


def _same_market(market: MarketFile, instance: GameInstance) -> bool:
    return (
        market.worker_utilities.entries == instance.worker_utilities.entries
        and market.enterprise_utilities.entries == instance.enterprise_utilities.entries
    )


def _dataset_notes(market: MarketFile) -> tuple[str, ...]:
    if _same_market(market, datasets.labor_market()):
        return datasets.LABOR_MARKET_NOTES
    if _same_market(market, datasets.job_market()):
        return datasets.JOB_MARKET_NOTES
    return ()


def _assignment_grid(result: AssignmentResult) -> list[list[int]]:
    n = result.matching.n
    grid = [[0] * n for _ in range(n)]
    for row, col in enumerate(result.matching.image):
        grid[row][col] = 1
    return grid


def cmd_assign(
    market: MarketFile,
    side: Side,
    objective: Objective = Objective.MAXIMIZE,
) -> Report:
    """Solve one side's optimal assignment problem."""
    if side is Side.WORKERS:
        matrix = market.worker_utilities
    else:
        matrix = market.enterprise_utilities
    result = solve_hungarian(matrix, objective)
    payload = {
        "side": side.value,
        "objective": objective.value,
        "row_labels": list(matrix.row_labels),
        "col_labels": list(matrix.col_labels),
        "matching": list(result.matching.image),
        "assignment_grid": _assignment_grid(result),
        "total": result.total_value,
    }
    return Report(command="assign", payload=payload, notes=_dataset_notes(market))


def cmd_game(market: MarketFile) -> Report:
    """Full situation-table analysis: payoffs, ideal point, compromise set,
    least-satisfied players, and an equilibrium verification summary."""
    instance = market.to_instance()
    table = build_table(instance)
    ideal = ideal_point(table)
    compromise = compromise_set(table)
    least = []
    for member in compromise.members:
        player, payoff = least_satisfied(table, member)
        least.append({"situation": list(member.image), "player": player, "payoff": payoff})
    if instance.n <= EQUILIBRIUM_ENUMERATION_CAP:
        equilibria = enumerate_equilibria(instance)
        equilibrium_summary = {
            "enumerated": True,
            "situation_count": len(table.rows),
            "equilibrium_count": len(equilibria),
            "all_situations_equilibria": len(equilibria) == len(table.rows),
        }
    else:
        equilibrium_summary = {
            "enumerated": False,
            "situation_count": len(table.rows),
            "reason": f"market size above the equilibrium enumeration cap ({EQUILIBRIUM_ENUMERATION_CAP})",
        }
    payload = {
        "n": instance.n,
        "workers": list(market.workers),
        "enterprises": list(market.enterprises),
        "situations": [
            {"image": list(matching.image), "payoffs": list(profile)}
            for matching, profile in table.rows
        ],
        "ideal_point": list(ideal.values),
        "compromise": {
            "optimal_regret": compromise.optimal_regret,
            "members": [list(m.image) for m in compromise.members],
            "max_regret_by_situation": list(compromise.regret_by_situation),
        },
        "least_satisfied": least,
        "equilibria": equilibrium_summary,
    }
    return Report(command="game", payload=payload, notes=_dataset_notes(market))


def _bargain_payload(bimatrix: BimatrixFile, outcome: BargainingOutcome) -> dict:
    maximin = None
    if outcome.disagreement.x0 is not None and outcome.disagreement.y0 is not None:
        maximin = {
            "player1": {
                "strategy": list(outcome.disagreement.x0.weights),
                "value": outcome.disagreement.v1,
            },
            "player2": {
                "strategy": list(outcome.disagreement.y0.weights),
                "value": outcome.disagreement.v2,
            },
        }
    return {
        "row_labels": list(bimatrix.row_labels),
        "col_labels": list(bimatrix.col_labels),
        "maximin": maximin,
        "disagreement": [outcome.disagreement.v1, outcome.disagreement.v2],
        "hull_vertices": [list(p) for p in outcome.feasible_hull],
        "pareto_frontier": [[list(s), list(e)] for s, e in outcome.pareto_frontier],
        "solution": list(outcome.solution),
        "nash_product": outcome.nash_product,
    }


def cmd_bargain(
    bimatrix: BimatrixFile,
    disagreement_override: tuple[RationalLike, RationalLike] | None = None,
) -> Report:
    """Arbitrate a two-player game.

    Without an override the disagreement point is computed by 2x2 maximin
    (NotTwoByTwo on larger games); with an override the maximin step is
    skipped and any game size is accepted.
    """
    if disagreement_override is None:
        outcome = bargain(bimatrix.game)
    else:
        v1, v2 = (as_rational(disagreement_override[0]), as_rational(disagreement_override[1]))
        outcome = nash_solution(bimatrix.game, DisagreementPoint(v1=v1, v2=v2))
    return Report(command="bargain", payload=_bargain_payload(bimatrix, outcome))


def cmd_pipeline(market: MarketFile, union_game: BimatrixFile) -> Report:
    """The three-stage workflow: solve both assignment problems, diagnose the
    mismatch, then arbitrate the union-level game."""
    workers_report = cmd_assign(market, Side.WORKERS)
    enterprises_report = cmd_assign(market, Side.ENTERPRISES)
    workers_matching = Matching(tuple(workers_report.payload["matching"]))
    enterprises_matching = Matching(tuple(enterprises_report.payload["matching"]))
    mismatch = compare_assignments(workers_matching, enterprises_matching)
    bargain_report = cmd_bargain(union_game)
    payload = {
        "workers_assignment": workers_report.payload,
        "enterprises_assignment": enterprises_report.payload,
        "mismatch": {
            "workers": list(mismatch),
            "count": len(mismatch),
            "coincide": len(mismatch) == 0,
        },
        "bargaining": bargain_report.payload,
    }
    notes = []
    for note in workers_report.notes + enterprises_report.notes + bargain_report.notes:
        if note not in notes:
            notes.append(note)
    return Report(command="pipeline", payload=payload, notes=tuple(notes))
