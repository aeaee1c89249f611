"""Membership test and convex decomposition for the polytope of states
whose Wigner function is non-negative for every net.

The closed form rests on one observation: among all nets and points, some
Wigner value collects exactly the smallest probability from each basis, so
the global minimum is (sum of per-basis minima - 1) / d and a minimizing
configuration is explicit -- put each basis's minimizing projector on the
ray and read the value at the origin.  `brute_force_min` enumerates every
net and point and exists to validate that argument; it must never be
shortcut through the closed form.

Membership comes with a constructive certificate: the coefficients

    c[kappa, j] = p[kappa, j] - p_min[kappa] + x / (d + 1),
    x = sum_kappa p_min[kappa] - 1,

always reproduce the state exactly over the basis projectors, and they are
all non-negative precisely on the polytope members.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .galois import FieldSpec
from .geometry import PhasePoint, build_striations, origin
from .mub import MubSet
from .quantum_net import net_context
from .tolerances import MEMBERSHIP
from .wigner import DensityState, ProbabilityTable, probabilities


@dataclass(frozen=True)
class ClassicalityReport:
    min_wigner: float
    sum_of_minima: float
    classical: bool
    witness_point: PhasePoint | None
    witness_ray_choices: tuple[int, ...] | None
    argmin_indices: tuple[int, ...]


@dataclass(frozen=True)
class DecompositionResult:
    coefficients: np.ndarray  # (d+1) x d
    x_total: float
    certified_classical: bool

    def min_coefficient(self) -> float:
        return float(self.coefficients.min())

    def reconstruct(self, mub: MubSet) -> np.ndarray:
        d = mub.dim
        out = np.zeros((d, d), dtype=complex)
        for kappa in range(d + 1):
            for j in range(d):
                out += self.coefficients[kappa, j] * mub.projector(kappa, j)
        return out


@dataclass(frozen=True)
class Witness:
    ray_choices: tuple[int, ...]
    point: PhasePoint
    value: float


@dataclass(eq=False)
class ClassificationReport:
    probabilities: ProbabilityTable
    report: ClassicalityReport
    decomposition: DecompositionResult
    witnesses: tuple[Witness, ...]


def min_wigner(rho: DensityState, mub: MubSet) -> ClassicalityReport:
    """Minimum Wigner value over all nets and points, in closed form,
    with an explicit minimizing net and point when the value is negative."""
    table = probabilities(rho, mub)
    minima = table.minima()
    total = float(minima.sum())
    value = (total - 1.0) / mub.dim
    argmins = table.argmin_choices()
    classical = value >= -MEMBERSHIP
    gf = mub.field
    if not classical:
        witness_point, witness_net = origin(gf), argmins
    else:
        witness_point, witness_net = None, None
    return ClassicalityReport(value, total, classical, witness_point, witness_net, argmins)


def brute_force_min(rho: DensityState, mub: MubSet, gf: FieldSpec) -> float:
    """Minimum over every net and every point by exhaustive enumeration.

    Only the table of basis probabilities enters each Wigner value, so the
    scan is pure index arithmetic over the d^(d+1) ray-choice tuples.
    Dimensions above 4 are refused (the net count grows as d^(d+1))."""
    d = gf.order
    if d > 4:
        raise ValueError(
            f"brute force over {d ** (d + 1)} nets at d={d} is not supported; use min_wigner"
        )
    ctx = net_context(mub, build_striations(gf))
    table = probabilities(rho, mub).values
    # per striation: value_at[point_index, ray_choice] = p[kappa, assigned j]
    per_striation = []
    for kappa, s in enumerate(ctx.striations):
        pos = np.array([s.positions[s.line_of[pt]] for pt in ctx.points])
        per_striation.append(table[kappa][ctx.sigma[kappa]][pos, :])
    best = np.inf
    for choices in itertools.product(range(d), repeat=d + 1):
        pencil_sum = sum(m[:, r] for m, r in zip(per_striation, choices))
        best = min(best, float(pencil_sum.min()))
    return (best - 1.0) / d


def convex_decomposition(rho: DensityState, mub: MubSet) -> DecompositionResult:
    """Expansion of the state over the basis projectors that is convex
    exactly when the state is a polytope member; exact for any input."""
    table = probabilities(rho, mub)
    minima = table.minima()
    x = float(minima.sum() - 1.0)
    coeff = table.values - minima[:, None] + x / (mub.dim + 1)
    certified = (x / mub.dim) >= -MEMBERSHIP
    return DecompositionResult(coeff, x, certified)


def classify(
    rho: DensityState, mub: MubSet, gf: FieldSpec, top_k: int = 5
) -> ClassificationReport:
    """Bundle probabilities, membership, decomposition and the most
    negative witnessing (net, point) pairs.

    For d <= 4 the witness list comes from the exhaustive scan; above that
    only the closed-form minimizing configuration is reported."""
    table = probabilities(rho, mub)
    report = min_wigner(rho, mub)
    decomposition = convex_decomposition(rho, mub)
    witnesses: list[Witness] = []
    if not report.classical:
        d = gf.order
        if d <= 4:
            ctx = net_context(mub, build_striations(gf))
            per_striation = []
            for kappa, s in enumerate(ctx.striations):
                pos = np.array([s.positions[s.line_of[pt]] for pt in ctx.points])
                per_striation.append(table.values[kappa][ctx.sigma[kappa]][pos, :])
            found: list[tuple[float, tuple[int, ...], int]] = []
            for choices in itertools.product(range(d), repeat=d + 1):
                pencil = sum(m[:, r] for m, r in zip(per_striation, choices))
                values = (pencil - 1.0) / d
                for i in np.flatnonzero(values < -MEMBERSHIP):
                    found.append((float(values[i]), choices, int(i)))
            found.sort(key=lambda t: t[0])
            witnesses = [
                Witness(choices, ctx.points[i], value)
                for value, choices, i in found[:top_k]
            ]
        else:
            witnesses = [
                Witness(report.witness_ray_choices, report.witness_point, report.min_wigner)
            ]
    return ClassificationReport(table, report, decomposition, tuple(witnesses))


def random_projector_mixture(
    mub: MubSet, rng: np.random.Generator, terms: int | None = None
) -> DensityState:
    """A random convex mixture of basis projectors: a certified polytope
    member by construction."""
    d = mub.dim
    count = (d + 1) * d
    weights = rng.dirichlet(np.ones(terms if terms is not None else count))
    picks = rng.choice(count, size=len(weights), replace=False)
    rho = np.zeros((d, d), dtype=complex)
    for w, flat in zip(weights, picks):
        rho += w * mub.projector(int(flat) // d, int(flat) % d)
    return DensityState(rho, kind="mixed")
