"""Exact two-phase simplex over rationals for the hyperedge-type density LP.

The LP bounds |E|/n for 5-uniform H with EI(H) = C_n. Variables are the
per-vertex densities of the six useful hyperedge types (5), (4,1), (3,2),
(3,1,1), (2,2,1) and (2,1,1,1).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

Number = int | Fraction

LE, GE, EQ = "<=", ">=", "=="

LP_VARIABLES = ("x5", "x4", "x32", "x3", "x22", "x2")


@dataclass(frozen=True)
class Constraint:
    coeffs: Mapping[str, Fraction]
    sense: str
    rhs: Fraction

    def holds(self, x: Mapping[str, Fraction]) -> bool:
        lhs = sum((c * x.get(v, 0) for v, c in self.coeffs.items()), Fraction(0))
        return {LE: lhs <= self.rhs, GE: lhs >= self.rhs, EQ: lhs == self.rhs}[self.sense]


@dataclass(frozen=True)
class LpProblem:
    """minimize objective . x subject to constraints, x >= 0."""

    variables: tuple[str, ...]
    objective: Mapping[str, Fraction]
    constraints: tuple[Constraint, ...] = ()

    def with_constraint(self, coeffs: Mapping[str, Number], sense: str, rhs: Number) -> LpProblem:
        c = Constraint({v: Fraction(a) for v, a in coeffs.items()}, sense, Fraction(rhs))
        return LpProblem(self.variables, self.objective, self.constraints + (c,))

    def value(self, x: Mapping[str, Fraction]) -> Fraction:
        return sum((c * x.get(v, 0) for v, c in self.objective.items()), Fraction(0))

    def is_feasible(self, x: Mapping[str, Fraction]) -> bool:
        return all(x.get(v, 0) >= 0 for v in self.variables) and all(c.holds(x) for c in self.constraints)


@dataclass
class LpSolution:
    status: str  # "optimal" | "infeasible" | "unbounded"
    optimum: Fraction | None = None
    assignment: dict[str, Fraction] = field(default_factory=dict)
    basis: list[str] = field(default_factory=list)
    # one multiplier per constraint; proves optimum is a lower bound
    dual: list[Fraction] = field(default_factory=list)


def paper_lp() -> LpProblem:
    """Density LP: enough half-edges for all n cycle edges, and enough 2-sections
    to cover the middle vertices of 5- and 4-sections."""
    f = Fraction
    objective = {v: f(1) for v in LP_VARIABLES}
    capacity = Constraint(dict(zip(LP_VARIABLES, map(f, (4, 3, 3, 2, 2, 1)))), GE, f(2))
    # 2 x5 + x4 <= x32 + 2 x22 + x2
    supply = Constraint(dict(zip(LP_VARIABLES, map(f, (2, 1, -1, 0, -2, -1)))), LE, f(0))
    return LpProblem(LP_VARIABLES, objective, (capacity, supply))


def solve(p: LpProblem) -> LpSolution:
    """Two-phase tableau simplex with Bland's rule; all arithmetic exact."""
    nv = len(p.variables)
    index = {v: j for j, v in enumerate(p.variables)}
    for c in p.constraints:
        unknown = set(c.coeffs) - set(index)
        if unknown:
            raise ValueError(f"constraint uses undeclared variables {sorted(unknown)}")
        if c.sense not in (LE, GE, EQ):
            raise ValueError(f"unknown constraint sense {c.sense!r}")

    # standard form: one slack (<=) or surplus (>=) column per inequality
    names = list(p.variables)
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    m = len(p.constraints)
    slack_col = {}
    for i, c in enumerate(p.constraints):
        if c.sense != EQ:
            slack_col[i] = len(names)
            names.append(f"s{i + 1}")
    ncols = len(names)
    for i, c in enumerate(p.constraints):
        row = [Fraction(0)] * ncols
        for v, a in c.coeffs.items():
            row[index[v]] = Fraction(a)
        if c.sense == LE:
            row[slack_col[i]] = Fraction(1)
        elif c.sense == GE:
            row[slack_col[i]] = Fraction(-1)
        b = Fraction(c.rhs)
        if b < 0:
            row = [-a for a in row]
            b = -b
        rows.append(row)
        rhs.append(b)
    a_std = [r[:] for r in rows]
    cost = [Fraction(p.objective.get(v, 0)) for v in p.variables] + [Fraction(0)] * (ncols - nv)

    # a row whose slack has coefficient +1 can start with that slack basic
    basis: list[int] = []
    art_cols = []
    for i in range(m):
        j = slack_col.get(i)
        if j is not None and rows[i][j] == 1:
            basis.append(j)
        else:
            basis.append(-1)
    for i in range(m):
        if basis[i] == -1:
            col = len(names)
            names.append(f"a{i + 1}")
            art_cols.append(col)
            for r in range(m):
                rows[r].append(Fraction(1 if r == i else 0))
            basis[i] = col
    total = len(names)
    for r in rows:
        r.extend([Fraction(0)] * (total - len(r)))

    tab = _Tableau(rows, rhs, basis)
    if art_cols:
        phase1 = [Fraction(1) if j in art_cols else Fraction(0) for j in range(total)]
        tab.optimize(phase1, allowed=range(total))
        if tab.objective(phase1) != 0:
            return LpSolution("infeasible")
        tab.drive_out(set(art_cols), ncols)
    full_cost = cost + [Fraction(0)] * (total - ncols)
    if not tab.optimize(full_cost, allowed=range(ncols)):
        return LpSolution("unbounded")

    x_std = [Fraction(0)] * total
    for i, j in enumerate(tab.basis):
        x_std[j] = tab.rhs[i]
    assignment = {v: x_std[j] for j, v in enumerate(p.variables)}
    optimum = p.value(assignment)
    dual = _dual_multipliers(a_std, cost, [j for j in tab.basis if j < ncols], m)
    return LpSolution(
        "optimal",
        optimum,
        assignment,
        [names[j] for j in tab.basis],
        _unflip(dual, p),
    )


class _Tableau:
    def __init__(self, rows: list[list[Fraction]], rhs: list[Fraction], basis: list[int]):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis

    def objective(self, cost: list[Fraction]) -> Fraction:
        return sum((cost[j] * self.rhs[i] for i, j in enumerate(self.basis)), Fraction(0))

    def pivot(self, r: int, j: int) -> None:
        piv = self.rows[r][j]
        self.rows[r] = [a / piv for a in self.rows[r]]
        self.rhs[r] /= piv
        for i in range(len(self.rows)):
            if i != r and self.rows[i][j] != 0:
                f = self.rows[i][j]
                self.rows[i] = [a - f * b for a, b in zip(self.rows[i], self.rows[r])]
                self.rhs[i] -= f * self.rhs[r]
        self.basis[r] = j

    def optimize(self, cost: list[Fraction], allowed) -> bool:
        """Pivot to optimality; False when unbounded."""
        allowed = list(allowed)
        while True:
            reduced = {
                j: cost[j] - sum((cost[b] * self.rows[i][j] for i, b in enumerate(self.basis)), Fraction(0))
                for j in allowed if j not in self.basis
            }
            entering = next((j for j in sorted(reduced) if reduced[j] < 0), None)
            if entering is None:
                return True
            best = None
            for i, row in enumerate(self.rows):
                if row[entering] > 0:
                    ratio = self.rhs[i] / row[entering]
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return False
            self.pivot(best[1], entering)

    def drive_out(self, artificial: set[int], ncols: int) -> None:
        """Pivot zero-level artificials out of the basis; drop redundant rows."""
        i = 0
        while i < len(self.rows):
            if self.basis[i] in artificial:
                j = next((j for j in range(ncols) if self.rows[i][j] != 0), None)
                if j is None:
                    del self.rows[i], self.rhs[i], self.basis[i]
                    continue
                self.pivot(i, j)
            i += 1


def _dual_multipliers(a: list[list[Fraction]], cost: list[Fraction], basic: list[int], m: int) -> list[Fraction]:
    """Solve y^T B = c_B exactly for the final basis (standard-form rows)."""
    if not basic:
        return [Fraction(0)] * m
    # rows of the system: one per basic column; unknowns y_1..y_m
    system = [[a[i][j] for i in range(m)] + [cost[j]] for j in basic]
    y = _solve_consistent(system, m)
    return y


def _solve_consistent(system: list[list[Fraction]], m: int) -> list[Fraction]:
    rows = [r[:] for r in system]
    pivots = []
    r = 0
    for col in range(m):
        p = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][col]
        rows[r] = [v / piv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    y = [Fraction(0)] * m
    for i, col in enumerate(pivots):
        y[col] = rows[i][m]
    return y


def _unflip(dual: list[Fraction], p: LpProblem) -> list[Fraction]:
    # rows with negative rhs were negated in standard form
    return [-y if c.rhs < 0 else y for y, c in zip(dual, p.constraints)]


def dual_bound_holds(p: LpProblem, dual: list[Fraction], bound: Fraction) -> bool:
    """Check that ``dual`` is a feasible dual solution with value ``bound``.

    Feasible means: y_i >= 0 on >= rows, y_i <= 0 on <= rows, and
    sum_i y_i a_ij <= c_j for every variable. Weak duality then gives
    objective(x) >= bound for every feasible x.
    """
    if len(dual) != len(p.constraints):
        return False
    for y, c in zip(dual, p.constraints):
        if (c.sense == GE and y < 0) or (c.sense == LE and y > 0):
            return False
    for v in p.variables:
        lhs = sum((y * c.coeffs.get(v, 0) for y, c in zip(dual, p.constraints)), Fraction(0))
        if lhs > p.objective.get(v, 0):
            return False
    return sum((y * c.rhs for y, c in zip(dual, p.constraints)), Fraction(0)) == bound

