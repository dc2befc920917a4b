"""Invariant sweep backing the ``selftest`` command.

Each check prints one status line; the sweep fails as a whole when any
check fails.  The defaults match the shipped guarantees (constructions to
size 200, recurrences to 300, exact search to size 10); smaller caps are
for quick smoke runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .dominoes import occupancy_identity_holds, validate
from .bounds import upper_capacity
from .diamonds import (
    build_diamond,
    capacity_by_parts,
    diamond_capacity,
    diamond_recurrence_check,
)
from .oracle import SearchBudget, sandwich_check
from .squares import build_square, capacity_recurrence_holds, square_capacity


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _check_squares(n_max: int) -> CheckResult:
    for n in range(n_max + 1):
        config = build_square(n)
        if len(config.dominos) != square_capacity(n):
            return CheckResult("square constructions", False, f"count off at n={n}")
        if validate(config):
            return CheckResult("square constructions", False, f"invalid at n={n}")
    return CheckResult("square constructions", True, f"n <= {n_max}")


def _check_diamonds(n_max: int) -> CheckResult:
    for n in range(n_max + 1):
        config = build_diamond(n)
        if len(config.dominos) != diamond_capacity(n):
            return CheckResult("diamond constructions", False, f"count off at n={n}")
        if validate(config):
            return CheckResult("diamond constructions", False, f"invalid at n={n}")
        if not occupancy_identity_holds(config):
            return CheckResult("diamond constructions", False, f"identity fails at n={n}")
    return CheckResult("diamond constructions", True, f"n <= {n_max}, identity exact")


def _check_recurrences(n_max: int) -> CheckResult:
    for n in range(6, n_max + 1):
        if not capacity_recurrence_holds(n):
            return CheckResult("capacity recurrences", False, f"square step fails at n={n}")
        if diamond_recurrence_check(n) is False:
            return CheckResult("capacity recurrences", False, f"diamond step fails at n={n}")
        if n >= 6 and capacity_by_parts(n) != diamond_capacity(n):
            return CheckResult("capacity recurrences", False, f"core+wedges off at n={n}")
    return CheckResult("capacity recurrences", True, f"n <= {n_max}")


def _check_bounds(n_max: int) -> CheckResult:
    for n in range(n_max + 1):
        if diamond_capacity(n) > upper_capacity(n):
            return CheckResult("capacity bounds", False, f"ordering fails at n={n}")
    return CheckResult("capacity bounds", True, f"n <= {n_max}")


def _check_sandwich(n_max: int, budget: SearchBudget | None) -> CheckResult:
    for n in range(n_max + 1):
        report = sandwich_check(n, budget=budget)
        if not report.consistent:
            return CheckResult(
                "exact-search sandwich", False, f"n={n}: {'; '.join(report.notes)}"
            )
        if not report.proven:
            return CheckResult(
                "exact-search sandwich", False, f"n={n}: budget exhausted before proof"
            )
    return CheckResult("exact-search sandwich", True, f"n <= {n_max}, all proven")


def run_selftest(
    construct_max: int = 200,
    recurrence_max: int = 300,
    oracle_max: int = 10,
    budget: SearchBudget | None = None,
    emit: Callable[[str], None] = print,
) -> bool:
    checks: Iterable[CheckResult] = (
        _check_squares(construct_max),
        _check_diamonds(construct_max),
        _check_recurrences(recurrence_max),
        _check_bounds(recurrence_max),
        _check_sandwich(oracle_max, budget),
    )
    all_ok = True
    for result in checks:
        status = "ok" if result.ok else "FAIL"
        emit(f"{status:4s} {result.name}: {result.detail}")
        all_ok &= result.ok
    return all_ok
