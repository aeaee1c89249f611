"""Quantum nets: translation-covariant line -> projector assignments.

A net is determined by one free projector choice per striation (the
choice for the ray); covariance under translations fixes every other
line.  The completion is computed once per dimension as permutation
tables: sigma[kappa][t] maps the ray choice r to the projector index
assigned to line t of striation kappa, obtained by conjugating each basis
projector with the translation that carries the ray onto that line.  Nets
are then pure index arithmetic, which keeps exhaustive enumeration over
all d^(d+1) of them cheap.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import lru_cache

import numpy as np

from .galois import FieldSpec, field
from .geometry import (
    Line,
    PhasePoint,
    Striation,
    all_points,
    build_striations,
    line_points,
)
from .mub import MubSet, standard_mub
from .pauli import Labeling, build_labeling
from .tolerances import LOOKUP


class CovarianceError(AssertionError):
    """Conjugating a basis projector left the basis: the labeling and the
    striation geometry disagree, which indicates an internal bug."""


@dataclass(eq=False)
class NetContext:
    """Everything nets of one dimension share: geometry, bases, tables."""

    field: FieldSpec
    striations: tuple[Striation, ...]
    mub: MubSet
    labeling: Labeling
    sigma: tuple[np.ndarray, ...]  # per striation: (d lines) x (d ray choices)
    points: tuple[PhasePoint, ...]

    @property
    def dim(self) -> int:
        return self.field.order

    def complete(self, ray_choices) -> "QuantumNet":
        return covariant_completion(ray_choices, self.mub, self.striations)


def _transport_table(
    striation: Striation, mub: MubSet, labeling: Labeling, kappa: int
) -> np.ndarray:
    """sigma[t][r]: projector index landing on line t when the ray gets r."""
    gf = mub.field
    d = gf.order
    table = np.zeros((d, d), dtype=np.int64)
    for t, line in enumerate(striation.lines):
        rep = min(line_points(line), key=lambda pt: pt.index)
        u = labeling.unitary_at(rep)
        for r in range(d):
            conj = u @ mub.projector(kappa, r) @ u.conj().T
            hits = [
                j
                for j in range(d)
                if np.linalg.norm(conj - mub.projector(kappa, j)) < LOOKUP
            ]
            if len(hits) != 1:
                raise CovarianceError(
                    f"striation {kappa}: translated projector {r} matched {hits}"
                )
            table[t, r] = hits[0]
        if sorted(table[t]) != list(range(d)):
            raise CovarianceError(f"striation {kappa}, line {t}: not a bijection")
    if not np.array_equal(table[0], np.arange(d)):
        raise CovarianceError(f"striation {kappa}: ray does not keep its own choice")
    return table


_CONTEXT_CACHE: dict[tuple[int, int], NetContext] = {}


def net_context(mub: MubSet, striations: tuple[Striation, ...]) -> NetContext:
    key = (id(mub), id(striations))
    if key not in _CONTEXT_CACHE:
        gf = mub.field
        labeling = build_labeling(gf)
        sigma = tuple(
            _transport_table(s, mub, labeling, k) for k, s in enumerate(striations)
        )
        _CONTEXT_CACHE[key] = NetContext(
            gf, striations, mub, labeling, sigma, all_points(gf)
        )
    return _CONTEXT_CACHE[key]


@lru_cache(maxsize=None)
def standard_context(d: int) -> NetContext:
    return net_context(standard_mub(d), build_striations(field(d)))


@dataclass(eq=False)
class QuantumNet:
    """A full line -> (striation, projector) assignment plus its free data."""

    context: NetContext
    ray_choices: tuple[int, ...]
    indices: tuple[tuple[int, ...], ...]  # indices[kappa][line position] = j
    _point_ops: dict = dc_field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        return self.context.dim

    def projector_index(self, line: Line) -> tuple[int, int]:
        """(kappa, j) for the projector assigned to a line (0-based)."""
        for kappa, s in enumerate(self.context.striations):
            if line in s.positions:
                return kappa, self.indices[kappa][s.positions[line]]
        raise KeyError(f"{line} is not a line of this phase space")

    def assignment(self) -> dict[Line, tuple[int, int]]:
        return {
            line: (kappa, self.indices[kappa][t])
            for kappa, s in enumerate(self.context.striations)
            for t, line in enumerate(s.lines)
        }

    def pencil_indices(self, point: PhasePoint) -> tuple[tuple[int, int], ...]:
        """The d+1 (kappa, j) pairs of the lines through a point."""
        out = []
        for kappa, s in enumerate(self.context.striations):
            t = s.positions[s.line_of[point]]
            out.append((kappa, self.indices[kappa][t]))
        return tuple(out)

    def point_operator(self, point: PhasePoint) -> np.ndarray:
        """(sum of the d+1 projectors through the point - identity) / d."""
        if point not in self._point_ops:
            d = self.dim
            total = -np.eye(d, dtype=complex)
            for kappa, j in self.pencil_indices(point):
                total = total + self.context.mub.projector(kappa, j)
            self._point_ops[point] = total / d
        return self._point_ops[point]

    def point_operator_table(self) -> np.ndarray:
        """All d^2 point operators stacked in point-index order."""
        return np.stack([self.point_operator(pt) for pt in self.context.points])

    def __repr__(self) -> str:
        return f"QuantumNet(d={self.dim}, ray_choices={self.ray_choices})"


def covariant_completion(
    ray_choices, mub: MubSet, striations: tuple[Striation, ...]
) -> QuantumNet:
    """Extend one projector choice per ray to the whole grid by covariance."""
    ctx = net_context(mub, striations)
    d = ctx.dim
    choices = tuple(int(r) for r in ray_choices)
    if len(choices) != d + 1 or any(not 0 <= r < d for r in choices):
        raise ValueError(f"ray_choices must be {d + 1} indices in [0, {d})")
    indices = tuple(
        tuple(int(ctx.sigma[kappa][t, r]) for t in range(d))
        for kappa, r in enumerate(choices)
    )
    return QuantumNet(ctx, choices, indices)


def fixed_axes_choices(ctx: NetContext) -> tuple[int, int]:
    """Ray choices for the vertical and horizontal striations under the
    coordinate convention: computational 0 for the vertical ray, the
    uniform superposition for the horizontal ray."""
    d = ctx.dim
    e0 = np.zeros(d)
    e0[0] = 1.0
    uniform = np.full(d, 1.0 / np.sqrt(d))
    j_vert = int(np.argmax(np.abs(ctx.mub.bases[0].vectors.conj().T @ e0)))
    j_horiz = int(np.argmax(np.abs(ctx.mub.bases[1].vectors.conj().T @ uniform)))
    return j_vert, j_horiz


def net_count(d: int, fix_axes: bool = False) -> int:
    return d ** (d - 1) if fix_axes else d ** (d + 1)


def enumerate_nets(
    gf: FieldSpec,
    mub: MubSet | None = None,
    fix_axes: bool = False,
    sample: int | None = None,
    rng: np.random.Generator | None = None,
):
    """Yield nets in lexicographic ray-choice order, each exactly once.

    Full enumeration is only allowed for d <= 5 (8, 81, 1024 and 15625
    nets); larger dimensions must pass `sample` to draw that many nets at
    random instead.
    """
    mub = mub if mub is not None else standard_mub(gf.order)
    ctx = net_context(mub, build_striations(gf))
    d = ctx.dim
    if sample is not None:
        rng = rng if rng is not None else np.random.default_rng(0)
        for _ in range(sample):
            choices = list(rng.integers(0, d, d + 1))
            if fix_axes:
                choices[0], choices[1] = fixed_axes_choices(ctx)
            yield ctx.complete(tuple(choices))
        return
    if d > 5:
        raise ValueError(
            f"refusing to enumerate {net_count(d, fix_axes)} nets at d={d}; "
            "pass sample= to draw a random subset"
        )
    if fix_axes:
        j_vert, j_horiz = fixed_axes_choices(ctx)
        for oblique in itertools.product(range(d), repeat=d - 1):
            yield ctx.complete((j_vert, j_horiz) + oblique)
    else:
        for choices in itertools.product(range(d), repeat=d + 1):
            yield ctx.complete(choices)


def is_flow(unitary: np.ndarray, net: QuantumNet) -> bool:
    """True iff conjugation by the unitary permutes the net's point
    operators among themselves."""
    table = net.point_operator_table()
    flat = table.reshape(len(table), -1)
    for a in table:
        image = (unitary @ a @ unitary.conj().T).reshape(-1)
        dists = np.linalg.norm(flat - image, axis=1)
        if dists.min() >= LOOKUP:
            return False
    return True


def squeezing_covariant_nets(
    gf: FieldSpec, mub: MubSet, u_s: np.ndarray
) -> list[QuantumNet]:
    """The nets in the fixed-axes family whose point operators the
    squeezing unitary permutes; there are exactly d of them."""
    return [net for net in enumerate_nets(gf, mub, fix_axes=True) if is_flow(u_s, net)]
