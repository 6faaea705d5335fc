"""Bigraded tables and the two recognition criteria for k-sequences.

A table assigns a nonnegative integer to each bidegree (i, j), almost
all zero.  A k-sequence is a table supported on the single column
j = k whose column is symmetric about row m.  The two criteria give
finite lists of linear conditions that force a table to be one; the
checkers here evaluate them exactly, and the falsification search
hunts for small tables that would separate the conditions from the
definition.
"""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

Witness = tuple[str, tuple[int, ...]]


class BudgetExceededError(ValueError):
    """The requested search space is larger than the enumeration budget."""


class Criterion(enum.Enum):
    FIRST = "first"
    SECOND = "second"


class FiltrationTable:
    """Immutable table of nonnegative integers indexed by (i, j) >= (0, 0).

    Reads outside the stored support return 0, including at negative
    indices; that convention is what makes the mirror conditions below
    meaningful near the boundary.
    """

    __slots__ = ("_cells",)

    def __init__(self, cells: Mapping[tuple[int, int], int] | None = None):
        data: dict[tuple[int, int], int] = {}
        if cells:
            for key, value in cells.items():
                i, j = key
                if not isinstance(i, int) or not isinstance(j, int) or i < 0 or j < 0:
                    raise ValueError(f"cell index {key} must be a pair of nonnegative ints")
                if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                    raise ValueError(f"value at {key} must be a nonnegative int")
                if value:
                    data[(i, j)] = value
        object.__setattr__(self, "_cells", data)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("FiltrationTable is immutable")

    def get(self, i: int, j: int) -> int:
        return self._cells.get((i, j), 0)

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        for key in sorted(self._cells):
            yield key, self._cells[key]

    def __len__(self) -> int:
        return len(self._cells)

    def __bool__(self) -> bool:
        return bool(self._cells)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FiltrationTable):
            return self._cells == other._cells
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._cells.items())))

    def __repr__(self) -> str:
        inner = ", ".join(f"{k}: {v}" for k, v in self.items())
        return f"FiltrationTable({{{inner}}})"

    def hull(self) -> tuple[int, int]:
        """Componentwise max of the support; raises on the empty table."""
        if not self._cells:
            raise ValueError("empty table has no hull")
        return (max(i for i, _ in self._cells), max(j for _, j in self._cells))

    def row_sum(self, i: int) -> int:
        return sum(v for (r, _), v in self._cells.items() if r == i)

    def antidiagonal_sum(self, t: int) -> int:
        return sum(v for (i, j), v in self._cells.items() if i + j == t)

    def total(self) -> int:
        return sum(self._cells.values())

    def to_csv(self) -> str:
        lines = ["i,j,value"]
        lines += [f"{i},{j},{v}" for (i, j), v in self.items()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_csv(cls, text: str) -> "FiltrationTable":
        rows = [line for line in text.strip().splitlines() if line]
        if not rows or rows[0] != "i,j,value":
            raise ValueError("expected header 'i,j,value'")
        cells: dict[tuple[int, int], int] = {}
        for line in rows[1:]:
            i, j, v = (int(part) for part in line.split(","))
            cells[(i, j)] = v
        return cls(cells)

    def to_json_obj(self) -> list[list[int]]:
        return [[i, j, v] for (i, j), v in self.items()]

    @classmethod
    def from_json_obj(cls, obj: list) -> "FiltrationTable":
        return cls({(int(i), int(j)): int(v) for i, j, v in obj})

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "FiltrationTable":
        return cls.from_json_obj(json.loads(text))


def _require_mk(m: int, k: int) -> None:
    if not isinstance(m, int) or m < 1:
        raise ValueError("m must be an integer >= 1")
    if not isinstance(k, int) or k < 0:
        raise ValueError("k must be an integer >= 0")


def is_k_sequence(table: FiltrationTable, m: int, k: int) -> bool:
    """True when the table sits in column k and is symmetric about row m."""
    _require_mk(m, k)
    for (i, j), v in table.items():
        if j != k:
            return False
        if table.get(2 * m - i, j) != v:
            return False
    return True


# Each violation finder returns the lexicographically first witness of
# failure, or None.  The quantifiers in the conditions are over all of
# Z, but outside the scanned box both sides of every comparison read 0,
# so the finite scan is exhaustive.  One extra row/column of margin is
# scanned anyway as a cheap guard.


def _first_cond_i(table: FiltrationTable, k: int) -> tuple[int, ...] | None:
    # Nothing strictly left of column k.
    for (i, j), _ in table.items():
        if j < k:
            return (i, j)
    return None


def _first_cond_ii(table: FiltrationTable, m: int) -> tuple[int, ...] | None:
    # Every column symmetric about row m: v[m-i, j] == v[m+i, j].
    if not table:
        return None
    i_hull, j_hull = table.hull()
    for off in range(1, max(m, i_hull - m) + 2):
        for j in range(j_hull + 2):
            if table.get(m - off, j) != table.get(m + off, j):
                return (off, j)
    return None


def _first_cond_iii(table: FiltrationTable, m: int, k: int) -> tuple[int, ...] | None:
    # Antidiagonal sums symmetric about m + k.
    if not table:
        return None
    i_hull, j_hull = table.hull()
    t_max = i_hull + j_hull
    for off in range(1, max(m + k, t_max - m - k) + 2):
        if table.antidiagonal_sum(m + k - off) != table.antidiagonal_sum(m + k + off):
            return (off,)
    return None


def _second_cond_i(table: FiltrationTable, m: int, k: int) -> tuple[int, ...] | None:
    # Within column j, rows mirror about m + k - j.
    if not table:
        return None
    i_hull, j_hull = table.hull()
    for i in range(max(i_hull, 2 * (m + k)) + 2):
        for j in range(j_hull + 2):
            if table.get(i, j) != table.get(2 * (m + k - j) - i, j):
                return (i, j)
    return None


def _second_cond_ii(table: FiltrationTable, k: int) -> tuple[int, ...] | None:
    # Antidiagonal k + l carries the same mass as row l.
    if not table:
        return None
    i_hull, j_hull = table.hull()
    t_max = i_hull + j_hull
    for l in range(max(t_max - k, i_hull) + 2):
        if table.antidiagonal_sum(k + l) != table.row_sum(l):
            return (l,)
    return None


def _second_cond_iii(table: FiltrationTable, m: int) -> tuple[int, ...] | None:
    # Row sums symmetric about m.
    if not table:
        return None
    i_hull, _ = table.hull()
    for off in range(1, max(m, i_hull - m) + 2):
        if table.row_sum(m - off) != table.row_sum(m + off):
            return (off,)
    return None


@dataclass(frozen=True)
class CriterionReport:
    """Outcome of evaluating one criterion on one table."""

    criterion: Criterion
    m: int
    k: int
    cond_i: bool
    cond_ii: bool
    cond_iii: bool
    is_k_seq: bool
    first_violation: Witness | None

    @property
    def passed(self) -> bool:
        return self.cond_i and self.cond_ii and self.cond_iii

    def to_json_obj(self) -> dict:
        witness = None
        if self.first_violation is not None:
            label, where = self.first_violation
            witness = [label, list(where)]
        return {
            "criterion": self.criterion.value,
            "m": self.m,
            "k": self.k,
            "cond_i": self.cond_i,
            "cond_ii": self.cond_ii,
            "cond_iii": self.cond_iii,
            "is_k_seq": self.is_k_seq,
            "first_violation": witness,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))


def _build_report(criterion: Criterion, table: FiltrationTable, m: int, k: int,
                  witnesses: list[tuple[str, tuple[int, ...] | None]]) -> CriterionReport:
    flags = {label: w is None for label, w in witnesses}
    first = next((
        (label, w) for label, w in witnesses if w is not None), None)
    return CriterionReport(
        criterion=criterion, m=m, k=k,
        cond_i=flags["i"], cond_ii=flags["ii"], cond_iii=flags["iii"],
        is_k_seq=is_k_sequence(table, m, k),
        first_violation=first,
    )


def check_first_criterion(table: FiltrationTable, m: int, k: int) -> CriterionReport:
    """Column support bound, columnwise symmetry, antidiagonal symmetry."""
    _require_mk(m, k)
    return _build_report(Criterion.FIRST, table, m, k, [
        ("i", _first_cond_i(table, k)),
        ("ii", _first_cond_ii(table, m)),
        ("iii", _first_cond_iii(table, m, k)),
    ])


def check_second_criterion(table: FiltrationTable, m: int, k: int) -> CriterionReport:
    """Skew mirror within columns, antidiagonal/row matching, row symmetry."""
    _require_mk(m, k)
    return _build_report(Criterion.SECOND, table, m, k, [
        ("i", _second_cond_i(table, m, k)),
        ("ii", _second_cond_ii(table, k)),
        ("iii", _second_cond_iii(table, m)),
    ])


_CHECKERS = {
    Criterion.FIRST: check_first_criterion,
    Criterion.SECOND: check_second_criterion,
}

# Same conditions as the reports, uniform (table, m, k) signature, for
# the early-exit path inside the search loop.
_VIOLATION_FINDERS = {
    Criterion.FIRST: (
        lambda table, m, k: _first_cond_i(table, k),
        lambda table, m, k: _first_cond_ii(table, m),
        lambda table, m, k: _first_cond_iii(table, m, k),
    ),
    Criterion.SECOND: (
        lambda table, m, k: _second_cond_i(table, m, k),
        lambda table, m, k: _second_cond_ii(table, k),
        lambda table, m, k: _second_cond_iii(table, m),
    ),
}


def falsification_search(
    which: Criterion,
    i_max: int,
    j_max: int,
    v_max: int,
    m_range: Iterable[int],
    k_range: Iterable[int],
    budget: int = 10 ** 7,
) -> list[tuple[FiltrationTable, int, int]]:
    """Enumerate every table on [0..i_max] x [0..j_max] with entries in
    [0..v_max] and return those satisfying all conditions of the chosen
    criterion without being a k-sequence.

    An empty result over a grid is finite evidence for the criterion.
    The total number of (table, m, k) triples is checked against the
    budget before any work happens.
    """
    if i_max < 0 or j_max < 0 or v_max < 0:
        raise ValueError("grid bounds must be nonnegative")
    ms = sorted(set(m_range))
    ks = sorted(set(k_range))
    for m in ms:
        _require_mk(m, 0)
    for k in ks:
        _require_mk(1, k)
    if not ms or not ks:
        raise ValueError("m_range and k_range must be nonempty")

    cells = [(i, j) for i in range(i_max + 1) for j in range(j_max + 1)]
    total = (v_max + 1) ** len(cells) * len(ms) * len(ks)
    if total > budget:
        raise BudgetExceededError(
            f"search would visit {total} cases, over the budget of {budget}")

    finders = _VIOLATION_FINDERS[which]
    found: list[tuple[FiltrationTable, int, int]] = []
    for values in itertools.product(range(v_max + 1), repeat=len(cells)):
        table = FiltrationTable({
            cell: v for cell, v in zip(cells, values) if v})
        for m in ms:
            for k in ks:
                if any(finder(table, m, k) is not None for finder in finders):
                    continue
                if not is_k_sequence(table, m, k):
                    found.append((table, m, k))
    return found
