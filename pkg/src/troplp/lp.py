"""Tropical linear programs with one-sided constraints.

Primal: maximize the max-plus form c'x subject to Ax <= b over real x.
Dual: minimize pi'b subject to pi'A >= c' over real pi.  Both have closed-form
optima with no duality gap; certify() bundles the two witnesses and verifies
feasibility and value agreement.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import DEFAULT_TOL, TropMatrix, TropVector, tdot, tmul, transpose
from .errors import (CertificateViolationError, DimensionMismatchError,
                     FiniteRequiredError)
from .onesided import greatest_subsolution


@dataclass(frozen=True)
class LpInstance:
    """Finite data (A, b, c) with A m-by-n, b of length m, c of length n."""

    a: TropMatrix
    b: TropVector
    c: TropVector

    def __post_init__(self):
        if not (self.a.is_finite() and self.b.is_finite() and self.c.is_finite()):
            raise FiniteRequiredError("LP instances must be finite")
        if self.a.rows != len(self.b):
            raise DimensionMismatchError(
                f"A has {self.a.rows} rows but b has length {len(self.b)}")
        if self.a.cols != len(self.c):
            raise DimensionMismatchError(
                f"A has {self.a.cols} columns but c has length {len(self.c)}")


@dataclass(frozen=True)
class DualityCertificate:
    x_opt: TropVector
    pi_opt: TropVector
    f_max: float
    phi_min: float


def solve_primal(inst: LpInstance) -> tuple[TropVector, float]:
    """Optimal primal witness (the greatest feasible point) and its value."""
    x = greatest_subsolution(inst.a, inst.b)
    return x, tdot(inst.c, x)


def solve_dual(inst: LpInstance) -> tuple[TropVector, float]:
    """Optimal dual witness pi_i = t - b_i with t the common optimal value."""
    x = greatest_subsolution(inst.a, inst.b)
    t = tdot(inst.c, x)
    pi = TropVector(t - inst.b.data)
    return pi, tdot(pi, inst.b)


def certify(inst: LpInstance, tol: float = DEFAULT_TOL) -> DualityCertificate:
    """Solve both sides and assert feasibility plus zero gap.

    A failure here signals an implementation bug, not bad input.
    """
    x, f_max = solve_primal(inst)
    pi, phi_min = solve_dual(inst)
    primal_slack = np.max(tmul(inst.a, x).data - inst.b.data)
    if primal_slack > tol:
        raise CertificateViolationError(
            f"primal witness infeasible by {primal_slack}")
    dual_slack = np.min(tmul(transpose(inst.a), pi).data - inst.c.data)
    if dual_slack < -tol:
        raise CertificateViolationError(
            f"dual witness infeasible by {-dual_slack}")
    if abs(f_max - phi_min) > tol:
        raise CertificateViolationError(
            f"duality gap {abs(f_max - phi_min)} exceeds tolerance")
    return DualityCertificate(x, pi, f_max, phi_min)
