"""Two-player union bargaining: maximin threats, feasible set, Nash arbitration.

The feasible set is the convex hull of the pure-outcome payoff pairs (joint,
i.e. correlated, randomization).  The disagreement point defaults to the two
players' mixed maximin values; the Nash solution maximizes the product of
gains over the disagreement point along the Pareto frontier.  Everything is
computed in closed form over exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable

from .core import MatchGamesError, RationalLike, as_rational

Point = tuple[Fraction, Fraction]
Segment = tuple[Point, Point]


class NotTwoByTwo(MatchGamesError):
    """Maximin in closed form is only implemented for 2x2 games."""


class DisagreementOutsideHull(MatchGamesError):
    """The disagreement point is not a feasible payoff vector."""


class EmptyIndividuallyRationalRegion(MatchGamesError):
    """No Pareto-frontier point weakly dominates the disagreement point."""


class Player(Enum):
    ONE = 1
    TWO = 2


@dataclass(frozen=True)
class BimatrixGame:
    """An m x n grid of exact payoff pairs (K1, K2), one per joint outcome."""

    payoffs: tuple[tuple[Point, ...], ...]

    def __post_init__(self) -> None:
        if not self.payoffs or not self.payoffs[0]:
            raise MatchGamesError("bimatrix game must have at least one outcome")
        width = len(self.payoffs[0])
        for row in self.payoffs:
            if len(row) != width:
                raise MatchGamesError("ragged payoff grid")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[tuple[RationalLike, RationalLike]]]) -> BimatrixGame:
        payoffs = tuple(
            tuple((as_rational(k1), as_rational(k2)) for k1, k2 in row) for row in rows
        )
        return cls(payoffs=payoffs)

    @property
    def rows(self) -> int:
        return len(self.payoffs)

    @property
    def cols(self) -> int:
        return len(self.payoffs[0])

    def outcome_points(self) -> list[Point]:
        return [pair for row in self.payoffs for pair in row]

    def swap_players(self) -> BimatrixGame:
        """Exchange the players: transpose the grid and swap each payoff pair."""
        return BimatrixGame(
            payoffs=tuple(
                tuple((self.payoffs[r][c][1], self.payoffs[r][c][0]) for r in range(self.rows))
                for c in range(self.cols)
            )
        )


@dataclass(frozen=True)
class MixedStrategy:
    """A probability vector over a player's pure strategies."""

    weights: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if any(w < 0 for w in self.weights):
            raise MatchGamesError(f"negative weight in {self.weights}")
        if sum(self.weights) != 1:
            raise MatchGamesError(f"weights {self.weights} do not sum to 1")


@dataclass(frozen=True)
class DisagreementPoint:
    """Threat payoffs (v1, v2), with the realizing maximin strategies when known."""

    v1: Fraction
    v2: Fraction
    x0: MixedStrategy | None = None
    y0: MixedStrategy | None = None

    @property
    def point(self) -> Point:
        return (self.v1, self.v2)


@dataclass(frozen=True)
class BargainingOutcome:
    feasible_hull: tuple[Point, ...]
    pareto_frontier: tuple[Segment, ...]
    disagreement: DisagreementPoint
    solution: Point
    nash_product: Fraction


def _maximin_own_rows(own: list[list[Fraction]]) -> tuple[Fraction, Fraction]:
    """Maximin over a 2x2 payoff table oriented so the player picks rows.

    Returns (weight on row 0, guaranteed value).  The guaranteed value
    min(L1(x), L2(x)) is piecewise-linear concave, so the maximum sits at a
    pure strategy or at the crossing of the two opponent-column lines; a pure
    optimum is preferred when it ties the interior candidate.
    """
    (k11, k12), (k21, k22) = own
    candidates = [
        (Fraction(1), min(k11, k12)),  # pure row 0
        (Fraction(0), min(k21, k22)),  # pure row 1
    ]
    # max() keeps the first maximum, so pure row 0 wins ties.
    best_weight, best_value = max(candidates, key=lambda c: c[1])
    denominator = k11 - k12 - k21 + k22
    if denominator != 0:
        crossing = Fraction(k22 - k21, 1) / denominator
        if 0 < crossing < 1:
            value = min(
                crossing * k11 + (1 - crossing) * k21,
                crossing * k12 + (1 - crossing) * k22,
            )
            if value > best_value:
                best_weight, best_value = crossing, value
    return best_weight, best_value


def maximin_2x2(game: BimatrixGame, player: Player) -> tuple[MixedStrategy, Fraction]:
    """Mixed maximin strategy and guaranteed value for one player of a 2x2 game."""
    if game.rows != 2 or game.cols != 2:
        raise NotTwoByTwo(f"maximin needs a 2x2 game, got {game.rows}x{game.cols}")
    if player is Player.ONE:
        own = [[game.payoffs[r][c][0] for c in range(2)] for r in range(2)]
    else:
        # Player Two picks columns; transpose so the chooser indexes rows.
        own = [[game.payoffs[r][c][1] for r in range(2)] for c in range(2)]
    weight, value = _maximin_own_rows(own)
    return MixedStrategy(weights=(weight, 1 - weight)), value


def _cross(origin: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - origin[0]) * (b[1] - origin[1]) - (a[1] - origin[1]) * (b[0] - origin[0])


def feasible_hull(game: BimatrixGame) -> list[Point]:
    """Convex hull of the outcome payoff pairs, counterclockwise from the
    lexicographically smallest vertex, collinear points removed."""
    points = sorted(set(game.outcome_points()))
    if len(points) <= 2:
        return points
    lower: list[Point] = []
    for p in points:
        while len(lower) > 1 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(points):
        while len(upper) > 1 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def hull_contains(hull: list[Point] | tuple[Point, ...], point: Point) -> bool:
    """Exact point-in-convex-polygon test; boundary points count as inside."""
    verts = list(hull)
    if len(verts) == 1:
        return point == verts[0]
    if len(verts) == 2:
        a, b = verts
        if _cross(a, b, point) != 0:
            return False
        return (
            min(a[0], b[0]) <= point[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= point[1] <= max(a[1], b[1])
        )
    return all(
        _cross(verts[i], verts[(i + 1) % len(verts)], point) >= 0 for i in range(len(verts))
    )


def pareto_frontier(hull: list[Point] | tuple[Point, ...]) -> list[Segment]:
    """Undominated part of the hull boundary as segments, ordered from the
    highest-K2 end to the highest-K1 end.

    A point is dominated if another feasible point is at least as good for
    both players and better for one.  On a convex hull the undominated set is
    the north-east chain between the topmost vertex (rightmost among ties)
    and the rightmost vertex (topmost among ties); a single point yields one
    degenerate segment.
    """
    verts = list(hull)
    top = max(verts, key=lambda p: (p[1], p[0]))
    right = max(verts, key=lambda p: (p[0], p[1]))
    if top == right:
        return [(top, top)]
    k = len(verts)
    chain = [top]
    i = verts.index(top)
    while verts[i] != right:
        i = (i - 1) % k  # clockwise walk along a counterclockwise hull
        chain.append(verts[i])
    return [(chain[i], chain[i + 1]) for i in range(len(chain) - 1)]


def _segment_best(
    start: Point, end: Point, disagreement: Point
) -> tuple[Fraction, Point] | None:
    """Maximum Nash product on one frontier segment clipped to payoffs >= d.

    Walking a frontier segment, K1 rises and K2 falls, so each individual-
    rationality bound clips one end of the parameter range.  The product of
    gains is a concave quadratic in the parameter; its vertex, clamped to the
    clipped range, is the exact maximizer.
    """
    d1, d2 = disagreement
    p1, p2 = start
    b1 = end[0] - p1
    b2 = end[1] - p2
    if b1 == 0 and b2 == 0:
        if p1 >= d1 and p2 >= d2:
            return (p1 - d1) * (p2 - d2), start
        return None
    # Frontier segments run strictly east and south (pareto_frontier drops
    # horizontal and vertical edges), so each bound clips one end.
    assert b1 > 0 > b2, "frontier segment is not strictly northeast-oriented"
    lo = max(Fraction(0), (d1 - p1) / b1) if p1 < d1 else Fraction(0)
    hi = min(Fraction(1), (d2 - p2) / b2) if end[1] < d2 else Fraction(1)
    if lo > hi:
        return None
    a1 = p1 - d1
    a2 = p2 - d2

    def product_at(t: Fraction) -> Fraction:
        return (a1 + t * b1) * (a2 + t * b2)

    candidates = [lo, hi]
    vertex = -(b1 * a2 + a1 * b2) / (2 * b1 * b2)
    if lo < vertex < hi:
        candidates.append(vertex)
    best_t = max(candidates, key=product_at)
    return product_at(best_t), (p1 + best_t * b1, p2 + best_t * b2)


def nash_solution(game: BimatrixGame, disagreement: DisagreementPoint) -> BargainingOutcome:
    """Nash arbitration point: maximize (v1-d1)(v2-d2) on the frontier, v >= d."""
    hull = feasible_hull(game)
    if not hull_contains(hull, disagreement.point):
        raise DisagreementOutsideHull(
            f"disagreement {disagreement.point} is not a feasible payoff vector"
        )
    frontier = pareto_frontier(hull)
    best: tuple[Fraction, Point] | None = None
    for start, end in frontier:
        candidate = _segment_best(start, end, disagreement.point)
        if candidate is not None and (best is None or candidate[0] > best[0]):
            best = candidate
    if best is None:
        raise EmptyIndividuallyRationalRegion(
            f"no Pareto-optimal point dominates the disagreement point {disagreement.point}"
        )
    product, solution = best
    return BargainingOutcome(
        feasible_hull=tuple(hull),
        pareto_frontier=tuple(frontier),
        disagreement=disagreement,
        solution=solution,
        nash_product=product,
    )


def bargain(game: BimatrixGame) -> BargainingOutcome:
    """Full pipeline: maximin threat point for both players, then arbitration."""
    x0, v1 = maximin_2x2(game, Player.ONE)
    y0, v2 = maximin_2x2(game, Player.TWO)
    return nash_solution(game, DisagreementPoint(v1=v1, v2=v2, x0=x0, y0=y0))
