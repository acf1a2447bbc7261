"""Life tables, the linear-mortality hypothesis, and curtate annuity pricing.

Payments fall due at year end and the payment for the year of death is
forfeited (curtate annuity-immediate).  All pricing runs in exact rational
arithmetic internally -- survivor counts and discount factors convert
exactly -- and returns a correctly rounded float, so prices are
deterministic to the last bit for a given table, age and rate.

The bundled Breslau-style table starts from 646 survivors at age 12 and
follows the narrative death schedule (6 a year to 25, 7 to 29, 8 to 34,
9 to 42, 10 to 49, 11 to 54, back to 10 up to 70, 11 to 74, 10 to 78,
then 9, 8, 7, 6, and 3, 2, 2, 2 down to 20 alive at 86).  Past 86 the
survivors run linearly down to 0 at 96 (2 deaths a year); that
extrapolated tail is marked on the table so downstream output can flag it.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

MATY_CSV = "maty_breslau.csv"

# (age span, deaths per year) runs of the narrative schedule, from age 12
NARRATIVE_DEATHS = (
    (12, 25, 6),
    (25, 29, 7),
    (29, 34, 8),
    (34, 42, 9),
    (42, 49, 10),
    (49, 54, 11),
    (54, 70, 10),
    (70, 74, 11),
    (74, 78, 10),
)
CLOSING_DEATHS = (9, 8, 7, 6, 3, 2, 2, 2)  # ages 78..85
TAIL_START = 86
TAIL_DEATHS = 2  # per year until nobody is left (age 96)


class MortalityDomainError(ValueError):
    """Age or horizon outside the mortality model's domain."""


@dataclass(frozen=True)
class LifeTable:
    """Survivor counts l_x for consecutive integer ages.

    Entries must be positive and non-increasing; survival past the last
    tabulated age is zero.  extrapolated_from marks the first age whose
    entries were filled in rather than observed (None when all are data).
    """

    start_age: int
    survivors: tuple
    extrapolated_from: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "survivors", tuple(self.survivors))
        if not self.survivors:
            raise ValueError("life table needs at least one age")
        prev = None
        for offset, value in enumerate(self.survivors):
            if value <= 0:
                raise ValueError(f"l_{self.start_age + offset} = {value} is not positive")
            if prev is not None and value > prev:
                raise ValueError(f"survivors increase at age {self.start_age + offset}")
            prev = value

    @property
    def terminal_age(self) -> int:
        return self.start_age + len(self.survivors) - 1

    def lookup(self, age: int):
        if age < self.start_age or age > self.terminal_age:
            return None
        return self.survivors[age - self.start_age]

    def rows(self):
        for offset, value in enumerate(self.survivors):
            yield self.start_age + offset, value


@dataclass(frozen=True)
class DeMoivreLaw:
    """Uniform deaths over the complement of life: survival (n-t)/n, n = omega - x."""

    omega: int = 86

    def __post_init__(self):
        if self.omega < 1:
            raise ValueError("terminal age must be positive")


@dataclass(frozen=True)
class RateSpec:
    """Effective annual interest rate i; discount factor v = 1/(1+i)."""

    i: float

    def __post_init__(self):
        if self.i <= -1:
            raise ValueError("interest rate must exceed -1")

    @property
    def v(self) -> Fraction:
        return 1 / (1 + Fraction(self.i))


def reconstruct_maty_table() -> LifeTable:
    """The Breslau-style table implied by the narrative death schedule."""
    survivors = [646]
    for start, end, per_year in NARRATIVE_DEATHS:
        for _ in range(start, end):
            survivors.append(survivors[-1] - per_year)
    for per_year in CLOSING_DEATHS:
        survivors.append(survivors[-1] - per_year)
    assert survivors[TAIL_START - 12] == 20
    while survivors[-1] > TAIL_DEATHS:
        survivors.append(survivors[-1] - TAIL_DEATHS)
    return LifeTable(12, tuple(survivors), extrapolated_from=TAIL_START)


def load_table(path) -> LifeTable:
    """Read an `age,lx` CSV; violations raise with the offending line number."""
    with open(path, newline="") as handle:
        reader = csv.reader(handle)
        rows = list(reader)
    if not rows or [cell.strip() for cell in rows[0]] != ["age", "lx"]:
        raise ValueError("line 1: expected header 'age,lx'")
    ages = []
    survivors = []
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != 2:
            raise ValueError(f"line {lineno}: expected two fields, got {len(row)}")
        try:
            age = int(row[0])
        except ValueError:
            raise ValueError(f"line {lineno}: age {row[0]!r} is not an integer") from None
        try:
            lx = Fraction(row[1])
        except ValueError:
            raise ValueError(f"line {lineno}: lx {row[1]!r} is not a number") from None
        if ages and age != ages[-1] + 1:
            raise ValueError(f"line {lineno}: age {age} breaks the contiguous run")
        if lx <= 0:
            raise ValueError(f"line {lineno}: lx must be positive")
        if survivors and lx > survivors[-1]:
            raise ValueError(f"line {lineno}: survivors increase")
        ages.append(age)
        survivors.append(int(lx) if lx.denominator == 1 else lx)
    if not ages:
        raise ValueError("line 2: table has no rows")
    return LifeTable(ages[0], tuple(survivors))


def bundled_table_path():
    """Path of the shipped CSV copy of the reconstructed table."""
    return resources.files("demoivre").joinpath("data", MATY_CSV)


def write_table_csv(table: LifeTable, handle):
    writer = csv.writer(handle)
    writer.writerow(["age", "lx"])
    for age, value in table.rows():
        writer.writerow([age, value])


def survival_probability(model, x: int, t: int) -> Fraction:
    """P(a life aged x survives t more years) under a table, law, or duck-typed model."""
    if t < 0:
        raise MortalityDomainError("horizon t must be non-negative")
    if isinstance(model, LifeTable):
        base = model.lookup(x)
        if base is None:
            raise MortalityDomainError(
                f"age {x} outside table range {model.start_age}..{model.terminal_age}"
            )
        later = model.lookup(x + t)
        if later is None:
            return Fraction(0)
        return Fraction(later) / Fraction(base)
    if isinstance(model, DeMoivreLaw):
        n = model.omega - x
        if n <= 0:
            raise MortalityDomainError(f"age {x} is at or past the terminal age {model.omega}")
        if t >= n:
            return Fraction(0)
        return Fraction(n - t, n)
    if hasattr(model, "survival_probability"):
        return Fraction(model.survival_probability(x, t))
    raise TypeError(f"unsupported mortality model {type(model).__name__}")


def _support_horizon(model, x: int) -> int:
    if isinstance(model, LifeTable):
        return model.terminal_age - x
    if isinstance(model, DeMoivreLaw):
        return model.omega - x - 1
    limit = getattr(model, "horizon", None)
    if limit is None:
        raise TypeError("custom models must expose a horizon(x) method")
    return limit(x)


def annuity_value(model, x: int, rate: RateSpec) -> float:
    """Curtate annuity-immediate price: sum over t >= 1 of v^t * survival(x, t)."""
    survival_probability(model, x, 0)  # age validation
    v = rate.v
    horizon = _support_horizon(model, x)
    total = Fraction(0)
    power = Fraction(1)
    for t in range(1, horizon + 1):
        power *= v
        s = survival_probability(model, x, t)
        if s == 0:
            break
        total += power * s
    return float(total)


def joint_annuity_value(model_a, x: int, model_b, y: int, rate: RateSpec) -> float:
    """Joint-life price: pays while both lives survive, independence assumed."""
    survival_probability(model_a, x, 0)
    survival_probability(model_b, y, 0)
    v = rate.v
    horizon = min(_support_horizon(model_a, x), _support_horizon(model_b, y))
    total = Fraction(0)
    power = Fraction(1)
    for t in range(1, horizon + 1):
        power *= v
        s = survival_probability(model_a, x, t) * survival_probability(model_b, y, t)
        if s == 0:
            break
        total += power * s
    return float(total)


def approximation_error_table(table: LifeTable, ages, rates, omega: int = 86):
    """Percentage by which the linear-law price exceeds the tabular price.

    Entries are 100*(law/table - 1) for each (age, rate); the law keeps
    omega = 86 at every age.
    """
    law = DeMoivreLaw(omega)
    grid = []
    for rate in rates:
        spec = RateSpec(rate)
        row = []
        for age in ages:
            approx = annuity_value(law, age, spec)
            true = annuity_value(table, age, spec)
            if true == 0:
                raise MortalityDomainError(f"tabular annuity at age {age} is zero")
            row.append(100.0 * (approx / true - 1.0))
        grid.append(row)
    return grid
