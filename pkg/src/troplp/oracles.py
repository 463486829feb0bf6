"""Slow exhaustive reference implementations for tests and acceptance runs.

Everything here is plain-Python enumeration.  Nothing is shared with the
production solvers beyond scalar max/+ arithmetic, so these functions serve
as independent ground truth at desk scale.  Never call them from solvers.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .core import DEFAULT_TOL, EPSILON, TropMatrix, TropVector
from .errors import (DimensionMismatchError, DivergentStarError,
                     EnumerationCapExceededError, NoFeasiblePointError)
from .lp import LpInstance

_MAX_CYCLE_NODES = 8
DEFAULT_CAP = 10_000_000


@dataclass(frozen=True)
class Box:
    """Inclusive integer bounds per coordinate for exhaustive scans."""

    lowers: tuple[int, ...]
    uppers: tuple[int, ...]
    cap: int = DEFAULT_CAP

    def __post_init__(self):
        if len(self.lowers) != len(self.uppers):
            raise DimensionMismatchError("bound tuples differ in length")
        for lo, hi in zip(self.lowers, self.uppers):
            if lo > hi:
                raise ValueError(f"empty coordinate range [{lo}, {hi}]")

    @property
    def size(self) -> int:
        total = 1
        for lo, hi in zip(self.lowers, self.uppers):
            total *= hi - lo + 1
        return total

    def points(self):
        """Iterate all integer points in deterministic (row-major) order."""
        if self.size > self.cap:
            raise EnumerationCapExceededError(
                f"box holds {self.size} points, cap is {self.cap}")
        ranges = [range(lo, hi + 1) for lo, hi in zip(self.lowers, self.uppers)]
        return itertools.product(*ranges)


def brute_cycle_mean(a: TropMatrix) -> float:
    """Maximum cycle mean by depth-first enumeration of elementary cycles.

    Each cycle is visited once, anchored at its smallest node.  Returns
    epsilon for an acyclic digraph.
    """
    if a.rows != a.cols:
        raise DimensionMismatchError(f"matrix is not square: {a.shape}")
    n = a.rows
    if n > _MAX_CYCLE_NODES:
        raise EnumerationCapExceededError(
            f"cycle enumeration supports up to {_MAX_CYCLE_NODES} nodes, got {n}")

    adj: list[list[tuple[int, float]]] = [[] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            w = a.data[i, j]
            if w > EPSILON:
                adj[i].append((j, float(w)))

    best = EPSILON
    on_path = [False] * n

    def extend(anchor: int, node: int, weight: float, length: int):
        nonlocal best
        for succ, w in adj[node]:
            if succ == anchor:
                mean = (weight + w) / (length + 1)
                if mean > best:
                    best = mean
            elif succ > anchor and not on_path[succ]:
                on_path[succ] = True
                extend(anchor, succ, weight + w, length + 1)
                on_path[succ] = False

    for anchor in range(n):
        extend(anchor, anchor, 0.0, 0)
    return best


def _mat_mul(x: list[list[float]], y: list[list[float]]) -> list[list[float]]:
    n = len(x)
    out = [[EPSILON] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            best = EPSILON
            for k in range(n):
                cand = x[i][k] + y[k][j]
                if cand > best:
                    best = cand
            out[i][j] = best
    return out


def brute_star(a: TropMatrix, tol: float = DEFAULT_TOL) -> TropMatrix:
    """Literal power sum I + A + A^2 + ... + A^(n-1)."""
    lam = brute_cycle_mean(a)
    if lam > tol:
        raise DivergentStarError(
            f"star series diverges: maximum cycle mean {lam} > 0", lambda_=lam)
    n = a.rows
    entries = a.to_lists()
    total = [[0.0 if i == j else EPSILON for j in range(n)] for i in range(n)]
    power = entries
    for _ in range(n - 1):
        for i in range(n):
            for j in range(n):
                if power[i][j] > total[i][j]:
                    total[i][j] = power[i][j]
        power = _mat_mul(power, entries)
    return TropMatrix(total)


def brute_primal_integer(inst: LpInstance, box: Box,
                         tol: float = DEFAULT_TOL) -> tuple[TropVector, float]:
    """Exhaustively maximize c'x over integer x in the box with Ax <= b."""
    a, b, c = inst.a.to_lists(), inst.b.to_list(), inst.c.to_list()
    m, n = inst.a.shape
    if len(box.lowers) != n:
        raise DimensionMismatchError(f"box must have {n} coordinates")
    best_x = None
    best_val = None
    for x in box.points():
        feasible = True
        for i in range(m):
            row_val = max(a[i][j] + x[j] for j in range(n))
            if row_val > b[i] + tol:
                feasible = False
                break
        if not feasible:
            continue
        val = max(c[j] + x[j] for j in range(n))
        if best_val is None or val > best_val:
            best_val = val
            best_x = x
    if best_x is None:
        raise NoFeasiblePointError("no feasible integer point in the box")
    return TropVector([float(v) for v in best_x]), best_val


def brute_dual_integer(inst: LpInstance, box: Box,
                       tol: float = DEFAULT_TOL) -> tuple[TropVector, float]:
    """Exhaustively minimize pi'b over integer pi in the box with pi'A >= c'."""
    a, b, c = inst.a.to_lists(), inst.b.to_list(), inst.c.to_list()
    m, n = inst.a.shape
    if len(box.lowers) != m:
        raise DimensionMismatchError(f"box must have {m} coordinates")
    best_pi = None
    best_val = None
    for pi in box.points():
        feasible = True
        for j in range(n):
            col_val = max(pi[i] + a[i][j] for i in range(m))
            if col_val < c[j] - tol:
                feasible = False
                break
        if not feasible:
            continue
        val = max(pi[i] + b[i] for i in range(m))
        if best_val is None or val < best_val:
            best_val = val
            best_pi = pi
    if best_pi is None:
        raise NoFeasiblePointError("no feasible integer point in the box")
    return TropVector([float(v) for v in best_pi]), best_val


def primal_box(inst: LpInstance, below: int = 2, cap: int = DEFAULT_CAP) -> Box:
    """Box around the floored real primal witness, extended `below` downward."""
    a, b = inst.a.to_lists(), inst.b.to_list()
    m, n = inst.a.shape
    tops = []
    for j in range(n):
        top = math.floor(min(b[i] - a[i][j] for i in range(m)))
        tops.append(top)
    return Box(tuple(t - below for t in tops), tuple(tops), cap)


def dual_box(inst: LpInstance, margin: int = 1, cap: int = DEFAULT_CAP) -> Box:
    """Box bracketing every candidate integer-dual optimum.

    Bounded below by the real optimal value shifted by b, above by the value
    of the rounded-up real dual witness, then widened by `margin` on each
    side to absorb phase-rounding edge cases.
    """
    a, b, c = inst.a.to_lists(), inst.b.to_list(), inst.c.to_list()
    m, n = inst.a.shape
    lower_value = max(
        c[j] + min(b[i] - a[i][j] for i in range(m)) for j in range(n))
    start = [math.ceil(lower_value - b[i]) for i in range(m)]
    upper_value = max(start[i] + b[i] for i in range(m))
    lowers = tuple(math.floor(lower_value - b[i]) - margin for i in range(m))
    uppers = tuple(math.ceil(upper_value - b[i]) + margin for i in range(m))
    return Box(lowers, uppers, cap)
