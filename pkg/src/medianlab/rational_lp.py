"""Exact linear programming over rationals.

A small two-phase simplex on Fraction arithmetic with Bland's pivoting rule,
so feasibility and optimality verdicts are exact.  All variables are
implicitly nonnegative, which is the shape every caller in this package
needs (edge weights, vertex weights).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InputError

LE, GE, EQ = "<=", ">=", "=="


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple[Fraction, ...]
    sense: str
    rhs: Fraction


@dataclass
class RationalLinearSystem:
    """Constraints over nonnegative rational variables, plus an optional
    linear objective to minimize."""

    num_vars: int
    constraints: list[Constraint] = field(default_factory=list)
    objective: tuple[Fraction, ...] | None = None

    def add(self, coeffs, sense: str, rhs) -> None:
        if sense not in (LE, GE, EQ):
            raise InputError(f"unknown constraint sense {sense!r}")
        dense = [Fraction(0)] * self.num_vars
        if isinstance(coeffs, dict):
            for j, c in coeffs.items():
                dense[j] = Fraction(c)
        else:
            for j, c in enumerate(coeffs):
                dense[j] = Fraction(c)
        self.constraints.append(Constraint(tuple(dense), sense, Fraction(rhs)))

    def minimize(self, coeffs) -> None:
        dense = [Fraction(0)] * self.num_vars
        if isinstance(coeffs, dict):
            for j, c in coeffs.items():
                dense[j] = Fraction(c)
        else:
            for j, c in enumerate(coeffs):
                dense[j] = Fraction(c)
        self.objective = tuple(dense)

    def solve(self) -> "LPResult":
        return solve_lp(self.num_vars, self.constraints, self.objective)


@dataclass
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    point: tuple[Fraction, ...] | None = None
    value: Fraction | None = None

    @property
    def feasible(self) -> bool:
        return self.status != "infeasible"


class _Tableau:
    def __init__(self, rows, basis, ncols):
        self.rows = rows          # each row: ncols coefficients then rhs
        self.basis = basis        # basic column per row
        self.ncols = ncols
        self.obj = [Fraction(0)] * (ncols + 1)  # reduced costs then -value

    def set_costs(self, cost):
        obj = list(cost) + [Fraction(0)]
        for i, b in enumerate(self.basis):
            cb = cost[b]
            if cb:
                row = self.rows[i]
                for j in range(self.ncols + 1):
                    obj[j] -= cb * row[j]
        self.obj = obj

    def pivot(self, r, j):
        row = self.rows[r]
        inv = Fraction(1) / row[j]
        self.rows[r] = row = [c * inv for c in row]
        for i, other in enumerate(self.rows):
            if i != r and other[j]:
                f = other[j]
                self.rows[i] = [a - f * b for a, b in zip(other, row)]
        f = self.obj[j]
        if f:
            self.obj = [a - f * b for a, b in zip(self.obj, row)]
        self.basis[r] = j

    def run(self, allowed):
        """Minimize with Bland's rule; returns 'optimal' or 'unbounded'."""
        while True:
            enter = next(
                (j for j in range(self.ncols) if allowed[j] and self.obj[j] < 0),
                None,
            )
            if enter is None:
                return "optimal"
            leave, best = None, None
            for i, row in enumerate(self.rows):
                if row[enter] > 0:
                    ratio = row[-1] / row[enter]
                    if (
                        best is None
                        or ratio < best
                        or (ratio == best and self.basis[i] < self.basis[leave])
                    ):
                        leave, best = i, ratio
            if leave is None:
                return "unbounded"
            self.pivot(leave, enter)

    @property
    def value(self):
        return -self.obj[-1]

    def extract(self, num_vars):
        x = [Fraction(0)] * num_vars
        for i, b in enumerate(self.basis):
            if b < num_vars:
                x[b] = self.rows[i][-1]
        return tuple(x)


def solve_lp(num_vars, constraints, objective=None) -> LPResult:
    """Two-phase simplex; objective is minimized when present."""
    norm = []
    for con in constraints:
        coeffs, sense, rhs = list(con.coeffs), con.sense, con.rhs
        if len(coeffs) != num_vars:
            raise InputError("constraint width does not match variable count")
        if rhs < 0:
            coeffs = [-c for c in coeffs]
            rhs = -rhs
            sense = {LE: GE, GE: LE, EQ: EQ}[sense]
        norm.append((coeffs, sense, rhs))

    n_slack = sum(1 for _, s, _ in norm if s != EQ)
    n_art = sum(1 for _, s, _ in norm if s != LE)
    ncols = num_vars + n_slack + n_art

    rows, basis, art_cols = [], [], []
    slack_at, art_at = num_vars, num_vars + n_slack
    for coeffs, sense, rhs in norm:
        row = [Fraction(0)] * (ncols + 1)
        for j, c in enumerate(coeffs):
            row[j] = Fraction(c)
        row[-1] = Fraction(rhs)
        if sense == LE:
            row[slack_at] = Fraction(1)
            basis.append(slack_at)
            slack_at += 1
        else:
            if sense == GE:
                row[slack_at] = Fraction(-1)
                slack_at += 1
            row[art_at] = Fraction(1)
            basis.append(art_at)
            art_cols.append(art_at)
            art_at += 1
        rows.append(row)

    tab = _Tableau(rows, basis, ncols)
    art_set = set(art_cols)
    allowed = [True] * ncols

    if art_cols:
        cost1 = [Fraction(0)] * ncols
        for j in art_cols:
            cost1[j] = Fraction(1)
        tab.set_costs(cost1)
        tab.run(allowed)
        if tab.value != 0:
            return LPResult("infeasible")
        # drive leftover artificials out of the basis, dropping redundant rows
        for i in reversed(range(len(tab.basis))):
            if tab.basis[i] in art_set:
                row = tab.rows[i]
                piv = next(
                    (j for j in range(ncols) if j not in art_set and row[j]),
                    None,
                )
                if piv is None:
                    del tab.rows[i]
                    del tab.basis[i]
                else:
                    tab.pivot(i, piv)
        for j in art_cols:
            allowed[j] = False

    if objective is None:
        return LPResult("optimal", tab.extract(num_vars), Fraction(0))

    cost2 = [Fraction(0)] * ncols
    for j, c in enumerate(objective):
        cost2[j] = Fraction(c)
    tab.set_costs(cost2)
    status = tab.run(allowed)
    point = tab.extract(num_vars)
    if status == "unbounded":
        return LPResult("unbounded", point, None)
    return LPResult("optimal", point, tab.value)
