"""Axiom-check reports: one record per law, with a deterministic first counterexample."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .linmap import LinMap, first_difference

# Fixed vocabulary of law names used by every checker and by the interchange
# format.  theta_mult and sigma_prime_ttp name the algebra-map and the
# derived-cocycle checks of the twisted-tensor-product specialization.
LAW_NAMES = frozenset(
    {
        "assoc",
        "unit_left",
        "unit_right",
        "tw1",
        "tw2",
        "tw3",
        "tw4",
        "brz1",
        "brz2",
        "brz3",
        "brz4",
        "brz5",
        "cros1",
        "cros2",
        "cros3",
        "cros4",
        "rel1",
        "rel2",
        "rel3",
        "theta_mult",
        "sigma_prime_ttp",
        "phi_unital",
        "phi_mult",
        "phi_invertible",
    }
)


@dataclass(frozen=True)
class LawCheck:
    law: str
    passed: bool
    first_counterexample: tuple[int, ...] | None = None
    detail: str = ""

    def __post_init__(self) -> None:
        if self.law not in LAW_NAMES:
            raise ValueError(f"unknown law name {self.law!r}")


@dataclass(frozen=True)
class AxiomReport:
    checks: tuple[LawCheck, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> tuple[LawCheck, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def check(self, law: str) -> LawCheck:
        for c in self.checks:
            if c.law == law:
                return c
        raise KeyError(f"report has no check for law {law!r}")

    def __str__(self) -> str:
        return "\n".join(format_check(c) for c in self.checks)


def format_check(c: LawCheck) -> str:
    status = "PASS" if c.passed else "FAIL"
    where = ""
    if not c.passed and c.first_counterexample is not None:
        where = f" at basis index {c.first_counterexample}"
    detail = f": {c.detail}" if c.detail and not c.passed else ""
    return f"[{status}] {c.law}{where}{detail}"


def law_from_maps(law: str, lhs: LinMap, rhs: LinMap) -> LawCheck:
    """Compare two realizations of the same map; record the first bad column."""
    diff = first_difference(lhs, rhs)
    if diff is None:
        return LawCheck(law, True)
    col, row, a, b = diff
    detail = f"lhs[{row}] = {a}, rhs[{row}] = {b} on basis input {col}"
    return LawCheck(law, False, first_counterexample=col, detail=detail)


def merge(*parts: Iterable[LawCheck]) -> AxiomReport:
    checks: list[LawCheck] = []
    for part in parts:
        checks.extend(part)
    return AxiomReport(tuple(checks))
