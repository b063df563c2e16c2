"""The 2n-player matching game over all situations (perfect matchings).

Workers 0..n-1 and enterprises n..2n-1 are the players.  A situation is a
matching p; worker i is paid A[i][p(i)].  Payoff tables key the enterprise
side by worker: column n+k reports the payoff of whichever enterprise is
matched to worker k, i.e. B[p(k)][k].  Equilibrium checks use the players'
own choices directly (enterprise e is paid B[e][chosen worker]); only the
table layout uses the worker-keyed view.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import (
    GameInstance,
    Matching,
    MatchGamesError,
    SizeTooLarge,
    all_matchings,
)

# Equilibrium enumeration walks every situation and every unilateral
# deviation; 5! situations is the supported ceiling.
EQUILIBRIUM_ENUMERATION_CAP = 5


class MatchingNotInTable(MatchGamesError):
    """The queried matching is not a row of the situation table."""


class MalformedProfile(MatchGamesError):
    """A strategy profile has wrong arity or out-of-range choices."""


def situation_payoffs(instance: GameInstance, matching: Matching) -> tuple[Fraction, ...]:
    """Length-2n payoff profile of one situation, worker-keyed on both halves."""
    a = instance.worker_utilities
    b = instance.enterprise_utilities
    workers = tuple(a.entry(i, matching[i]) for i in range(instance.n))
    enterprises = tuple(b.entry(matching[k], k) for k in range(instance.n))
    return workers + enterprises


@dataclass(frozen=True)
class SituationTable:
    """One row per matching (lexicographic image order) with its payoff profile."""

    instance: GameInstance
    rows: tuple[tuple[Matching, tuple[Fraction, ...]], ...]

    @property
    def n(self) -> int:
        return self.instance.n

    @property
    def player_count(self) -> int:
        return 2 * self.instance.n

    def profile_for(self, matching: Matching) -> tuple[Fraction, ...]:
        for row_matching, profile in self.rows:
            if row_matching == matching:
                return profile
        raise MatchingNotInTable(f"matching {matching.image} is not a row of this table")


def build_table(instance: GameInstance) -> SituationTable:
    """Complete situation table for an instance; SizeTooLarge above the cap."""
    rows = tuple(
        (matching, situation_payoffs(instance, matching))
        for matching in all_matchings(instance.n)
    )
    return SituationTable(instance=instance, rows=rows)


@dataclass(frozen=True)
class IdealPoint:
    """Per-player maxima over all situations; every coordinate is attained."""

    values: tuple[Fraction, ...]


def ideal_point(table: SituationTable) -> IdealPoint:
    """Coordinatewise maximum of the payoff table."""
    profiles = [profile for _, profile in table.rows]
    values = tuple(max(profile[i] for profile in profiles) for i in range(table.player_count))
    return IdealPoint(values=values)


@dataclass(frozen=True)
class CompromiseResult:
    """Minimax-regret optimum: the situations minimizing the worst shortfall."""

    optimal_regret: Fraction
    members: tuple[Matching, ...]
    regret_by_situation: tuple[Fraction, ...]  # max regret per table row, row order


def compromise_set(table: SituationTable) -> CompromiseResult:
    """Situations minimizing max_i (ideal_i - payoff_i); all ties included."""
    ideal = ideal_point(table).values
    max_regrets = tuple(
        max(ideal[i] - profile[i] for i in range(table.player_count))
        for _, profile in table.rows
    )
    optimum = min(max_regrets)
    members = tuple(
        matching
        for (matching, _), regret in zip(table.rows, max_regrets)
        if regret == optimum
    )
    return CompromiseResult(
        optimal_regret=optimum,
        members=members,
        regret_by_situation=max_regrets,
    )


def least_satisfied(table: SituationTable, matching: Matching) -> tuple[int, Fraction]:
    """The player furthest below their ideal in a situation, with their payoff.

    Ties break toward the lowest player index.  Raises MatchingNotInTable if
    the matching is not a row of the table.
    """
    profile = table.profile_for(matching)
    ideal = ideal_point(table).values
    regrets = [ideal[i] - profile[i] for i in range(table.player_count)]
    player = max(range(table.player_count), key=lambda i: (regrets[i], -i))
    return player, profile[player]


@dataclass(frozen=True)
class StrategyProfile:
    """One choice per player: workers name enterprises, enterprises name workers."""

    worker_choices: tuple[int, ...]
    enterprise_choices: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.worker_choices)

    @staticmethod
    def from_matching(matching: Matching) -> StrategyProfile:
        """The consistent profile realizing a matching (everyone names their partner)."""
        return StrategyProfile(
            worker_choices=matching.image,
            enterprise_choices=matching.inverse().image,
        )

    def validate(self) -> None:
        n = self.n
        if n == 0 or len(self.enterprise_choices) != n:
            raise MalformedProfile(
                f"profile needs equal nonempty choice lists, got {len(self.worker_choices)} and {len(self.enterprise_choices)}"
            )
        for choice in self.worker_choices + self.enterprise_choices:
            if not isinstance(choice, int) or isinstance(choice, bool) or not 0 <= choice < n:
                raise MalformedProfile(f"choice {choice!r} out of range for n={n}")

    def is_consistent(self) -> bool:
        """True iff worker choices form a bijection and every enterprise names
        exactly the worker who named it."""
        if len(set(self.worker_choices)) != self.n:
            return False
        return all(
            self.worker_choices[self.enterprise_choices[e]] == e for e in range(self.n)
        )

    def matching(self) -> Matching:
        """The matching realized by a consistent profile."""
        if not self.is_consistent():
            raise MalformedProfile("profile is not consistent; it realizes no matching")
        return Matching(self.worker_choices)


def profile_payoffs(instance: GameInstance, profile: StrategyProfile) -> tuple[Fraction, ...]:
    """Payoffs by player (workers then enterprises, each by own index).

    A consistent profile pays per A and B; any inconsistent profile pays zero
    to every player, since no assignment can be completed.
    """
    profile.validate()
    if profile.n != instance.n:
        raise MalformedProfile(f"profile of size {profile.n} on a size-{instance.n} instance")
    zero = Fraction(0)
    if not profile.is_consistent():
        return (zero,) * (2 * instance.n)
    a = instance.worker_utilities
    b = instance.enterprise_utilities
    workers = tuple(a.entry(i, profile.worker_choices[i]) for i in range(instance.n))
    enterprises = tuple(b.entry(e, profile.enterprise_choices[e]) for e in range(instance.n))
    return workers + enterprises


@dataclass(frozen=True)
class NashVerdict:
    """Outcome of a unilateral-deviation scan."""

    equilibrium: bool
    deviating_player: int | None = None
    better_choice: int | None = None


def _with_choice(profile: StrategyProfile, player: int, choice: int) -> StrategyProfile:
    n = profile.n
    if player < n:
        workers = list(profile.worker_choices)
        workers[player] = choice
        return StrategyProfile(tuple(workers), profile.enterprise_choices)
    enterprises = list(profile.enterprise_choices)
    enterprises[player - n] = choice
    return StrategyProfile(profile.worker_choices, tuple(enterprises))


def verify_nash(instance: GameInstance, profile: StrategyProfile) -> NashVerdict:
    """Check whether any single player can strictly gain by changing their choice.

    Scans players in index order and alternative choices in increasing order,
    so the reported deviation is deterministic.
    """
    current = profile_payoffs(instance, profile)
    n = instance.n
    for player in range(2 * n):
        own_choice = (
            profile.worker_choices[player]
            if player < n
            else profile.enterprise_choices[player - n]
        )
        for choice in range(n):
            if choice == own_choice:
                continue
            deviated = _with_choice(profile, player, choice)
            if profile_payoffs(instance, deviated)[player] > current[player]:
                return NashVerdict(equilibrium=False, deviating_player=player, better_choice=choice)
    return NashVerdict(equilibrium=True)


def enumerate_equilibria(instance: GameInstance) -> tuple[StrategyProfile, ...]:
    """All consistent profiles that survive the unilateral-deviation scan.

    Only the n! consistent profiles are candidates (inconsistent profiles pay
    zero and are not situations).  For nonnegative utilities this returns all
    of them.  Capped at n = EQUILIBRIUM_ENUMERATION_CAP.
    """
    if instance.n > EQUILIBRIUM_ENUMERATION_CAP:
        raise SizeTooLarge(
            f"equilibrium enumeration refuses n={instance.n} (cap is {EQUILIBRIUM_ENUMERATION_CAP})"
        )
    found = []
    for matching in all_matchings(instance.n):
        profile = StrategyProfile.from_matching(matching)
        if verify_nash(instance, profile).equilibrium:
            found.append(profile)
    return tuple(found)
