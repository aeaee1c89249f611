"""Mutually unbiased bases as joint eigenbases of the commuting sets.

One basis per striation, built by spectral projection: for a commuting set
with generators g_1 .. g_n, the vector with eigenvalue label (m_1 .. m_n)
is extracted from the rank-one projector

    prod_i  (1/p) sum_t  w^(-m_i t) g_i^t ,        w = exp(2 pi i / p).

Vectors are ordered lexicographically by label (so the all +1 vector comes
first) and each global phase is fixed by making the first significant
amplitude real positive, which keeps serialized bases stable across runs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import lru_cache

import numpy as np

from .galois import FieldSpec, field
from .pauli import AbelianSet, PauliOperator, standard_sets
from .tolerances import SPECTRAL


@dataclass(eq=False)
class Basis:
    """An ordered orthonormal eigenbasis with its provenance."""

    vectors: np.ndarray  # d x d, column j is the j-th basis vector
    labels: tuple[tuple[int, ...], ...]
    provenance: AbelianSet
    generators: tuple[PauliOperator, ...]

    def vector(self, j: int) -> np.ndarray:
        return self.vectors[:, j]

    def projector(self, j: int) -> np.ndarray:
        v = self.vectors[:, j]
        return np.outer(v, v.conj())


@dataclass(eq=False)
class MubSet:
    field: FieldSpec
    bases: tuple[Basis, ...]
    _projectors: dict = dc_field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        return self.field.order

    def projector(self, kappa: int, j: int) -> np.ndarray:
        """Rank-one projector onto vector j of basis kappa (0-based)."""
        key = (kappa, j)
        if key not in self._projectors:
            self._projectors[key] = self.bases[kappa].projector(j)
        return self._projectors[key]


@dataclass(frozen=True)
class UnbiasednessReport:
    max_deviation: float
    worst_pair: tuple[tuple[int, int], tuple[int, int]]


def _fix_phase(v: np.ndarray) -> np.ndarray:
    for x in v:
        if abs(x) > 1e-8:
            return v * (x.conjugate() / abs(x))
    raise AssertionError("zero vector cannot be phase-normalized")


def joint_eigenbasis(s: AbelianSet) -> Basis:
    """Diagonalize a maximal commuting set, labeling vectors by eigenvalues.

    Labels are read off by applying each generator, never from
    diagonalization order, so degeneracy in any single generator is
    harmless.  A joint eigenspace of dimension other than one means the
    input set was not maximal and raises.
    """
    gf = s.field
    p, d = gf.p, gf.order
    w = np.exp(2j * np.pi / p)
    gens = s.generators()
    powers = []
    for g in gens:
        pw = [np.eye(d, dtype=complex)]
        for _ in range(p - 1):
            pw.append(pw[-1] @ g.dense)
        powers.append(pw)

    columns = []
    labels = []
    for label in itertools.product(range(p), repeat=gf.n):
        proj = np.eye(d, dtype=complex)
        for i, m in enumerate(label):
            spectral = sum(w ** (-m * t) * powers[i][t] for t in range(p)) / p
            proj = proj @ spectral
        if abs(np.trace(proj) - 1.0) > SPECTRAL * 100:
            raise AssertionError(
                f"joint eigenspace for label {label} has dimension "
                f"{np.trace(proj).real:.6f}, set is not maximal Abelian"
            )
        col = int(np.argmax(np.linalg.norm(proj, axis=0)))
        v = proj[:, col]
        v = _fix_phase(v / np.linalg.norm(v))
        for i, m in enumerate(label):
            if np.linalg.norm(gens[i].dense @ v - w**m * v) > SPECTRAL:
                raise AssertionError(f"label {label} not reproduced by generator {i}")
        columns.append(v)
        labels.append(label)
    return Basis(np.column_stack(columns), tuple(labels), s, gens)


def build_mub(gf: FieldSpec) -> MubSet:
    """The d+1 bases attached to the standard sets in striation order."""
    return MubSet(gf, tuple(joint_eigenbasis(s) for s in standard_sets(gf)))


@lru_cache(maxsize=None)
def standard_mub(d: int) -> MubSet:
    return build_mub(field(d))


def unbiasedness_report(mub: MubSet) -> UnbiasednessReport:
    """Worst absolute deviation of squared overlaps from the MUB pattern
    (1/d across bases, identity within a basis)."""
    d = mub.dim
    worst = 0.0
    worst_pair = ((0, 0), (0, 0))
    n_bases = len(mub.bases)
    for k1 in range(n_bases):
        v1 = mub.bases[k1].vectors
        for k2 in range(k1, n_bases):
            v2 = mub.bases[k2].vectors
            overlaps = np.abs(v1.conj().T @ v2) ** 2
            target = np.eye(d) if k1 == k2 else np.full((d, d), 1.0 / d)
            dev = np.abs(overlaps - target)
            j1, j2 = np.unravel_index(np.argmax(dev), dev.shape)
            if dev[j1, j2] > worst:
                worst = float(dev[j1, j2])
                worst_pair = ((k1, int(j1)), (k2, int(j2)))
    return UnbiasednessReport(worst, worst_pair)
