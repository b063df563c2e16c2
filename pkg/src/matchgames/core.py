"""Exact-arithmetic core types: rationals, utility matrices, matchings, game instances.

All solver-facing values are `fractions.Fraction`; no floating point enters any
solution path, so results such as 3/2 or a regret of 41 are exact and equality
is unambiguous.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Sequence, Union

# Exact rational scalar used throughout the package.
Rational = Fraction

RationalLike = Union[int, float, str, Fraction]

# Full enumeration of matchings is refused above this size (8! = 40320 rows
# is the ceiling for desk-scale tables and brute-force oracles).
ENUMERATION_CAP = 8


class MatchGamesError(Exception):
    """Base class for all errors raised by this package."""


class NotAPermutation(MatchGamesError):
    """An index sequence has duplicates or out-of-range entries."""


class SizeTooLarge(MatchGamesError):
    """A full enumeration was requested above the supported size cap."""


class DimensionMismatch(MatchGamesError):
    """Two objects that must share a size do not."""


def as_rational(value: RationalLike) -> Fraction:
    """Coerce a value to an exact rational.

    Accepts ints, Fractions, and strings in ``"p/q"``, integer, or decimal
    form ("3/2", "7", "0.25").  Floats are converted through their shortest
    decimal repr, so 0.1 becomes exactly 1/10.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError(f"cannot interpret {value!r} as a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(str(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot interpret {value!r} as a rational") from exc
    raise TypeError(f"cannot interpret {value!r} as a rational")


def format_rational(value: Fraction) -> str:
    """Render a rational as ``"p"`` or ``"p/q"``, never as a decimal."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class Matching:
    """A perfect assignment of n workers to n enterprises.

    ``image[i]`` is the enterprise assigned to worker ``i``; the image must be
    a permutation of 0..n-1.  Immutable and hashable.
    """

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.image)
        if n == 0:
            raise NotAPermutation("empty image")
        seen = [False] * n
        for j in self.image:
            if not isinstance(j, int) or isinstance(j, bool) or not 0 <= j < n:
                raise NotAPermutation(f"index {j!r} out of range for size {n}")
            if seen[j]:
                raise NotAPermutation(f"index {j} appears twice in {self.image}")
            seen[j] = True

    @property
    def n(self) -> int:
        return len(self.image)

    def __getitem__(self, worker: int) -> int:
        return self.image[worker]

    def __iter__(self):
        return iter(self.image)

    def inverse(self) -> Matching:
        """The enterprise-to-worker view: ``inverse()[m[i]] == i``."""
        inv = [0] * self.n
        for worker, enterprise in enumerate(self.image):
            inv[enterprise] = worker
        return Matching(tuple(inv))

    @staticmethod
    def identity(n: int) -> Matching:
        return Matching(tuple(range(n)))


def matching_from_image(image: Sequence[int]) -> Matching:
    """Build a Matching from an index sequence, validating bijectivity."""
    return Matching(tuple(image))


def all_matchings(n: int) -> tuple[Matching, ...]:
    """All n! matchings of size n, in lexicographic order of the image.

    Raises SizeTooLarge for n above ENUMERATION_CAP.
    """
    if n < 1:
        raise ValueError(f"market size must be positive, got {n}")
    if n > ENUMERATION_CAP:
        raise SizeTooLarge(f"refusing to enumerate {n}! matchings (cap is {ENUMERATION_CAP})")
    return tuple(Matching(image) for image in permutations(range(n)))


def _default_labels(prefix: str, n: int) -> tuple[str, ...]:
    return tuple(f"{prefix}{i + 1}" for i in range(n))


@dataclass(frozen=True)
class UtilityMatrix:
    """A square grid of exact rational utilities with row/column labels.

    Entries may be any rationals; nonnegativity is a property of the market
    data, not of the type (the solvers are sign-agnostic).
    """

    entries: tuple[tuple[Fraction, ...], ...]
    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        if n == 0:
            raise DimensionMismatch("utility matrix must have size at least 1")
        for row in self.entries:
            if len(row) != n:
                raise DimensionMismatch(f"matrix is not square: row of length {len(row)} in size-{n} matrix")
        if len(self.row_labels) != n or len(self.col_labels) != n:
            raise DimensionMismatch("label lists must match the matrix size")

    @classmethod
    def from_rows(
        cls,
        rows: Iterable[Iterable[RationalLike]],
        row_labels: Sequence[str] | None = None,
        col_labels: Sequence[str] | None = None,
    ) -> UtilityMatrix:
        """Build a matrix from nested iterables, coercing entries to rationals."""
        entries = tuple(tuple(as_rational(v) for v in row) for row in rows)
        n = len(entries)
        return cls(
            entries=entries,
            row_labels=tuple(row_labels) if row_labels is not None else _default_labels("r", n),
            col_labels=tuple(col_labels) if col_labels is not None else _default_labels("c", n),
        )

    @property
    def n(self) -> int:
        return len(self.entries)

    def entry(self, row: int, col: int) -> Fraction:
        return self.entries[row][col]

    def max_entry(self) -> Fraction:
        return max(v for row in self.entries for v in row)

    def shifted(self, constant: RationalLike) -> UtilityMatrix:
        """A copy with ``constant`` added to every entry."""
        c = as_rational(constant)
        return UtilityMatrix(
            entries=tuple(tuple(v + c for v in row) for row in self.entries),
            row_labels=self.row_labels,
            col_labels=self.col_labels,
        )

    def common_denominator(self) -> int:
        """Least common multiple of all entry denominators."""
        den = 1
        for row in self.entries:
            for v in row:
                den = den * v.denominator // math.gcd(den, v.denominator)
        return den


@dataclass(frozen=True)
class GameInstance:
    """A bilateral market: workers' utilities A and enterprises' utilities B.

    A is worker-row by enterprise-column; B is enterprise-row by
    worker-column.  Both must have the same size n.
    """

    worker_utilities: UtilityMatrix
    enterprise_utilities: UtilityMatrix

    def __post_init__(self) -> None:
        if self.worker_utilities.n != self.enterprise_utilities.n:
            raise DimensionMismatch(
                f"worker matrix has size {self.worker_utilities.n} "
                f"but enterprise matrix has size {self.enterprise_utilities.n}"
            )

    @property
    def n(self) -> int:
        return self.worker_utilities.n
