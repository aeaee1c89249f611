"""Clifford-group verification and synthesis.

Membership is checked by conjugating the 2n translation generators and
matching each image against the scaled translation catalogue; success
yields the symplectic table over Z_p plus per-generator phase exponents.

Synthesis goes the other way.  Given commuting tuples M_1..M_n and
N_1..N_n with symplectic pairing delta_ij, the unitary sending M_i to Z_i
and N_i to X_i is written down directly: take the joint +1 eigenvector of
the M_i as column zero and generate the remaining columns with products of
the N_i.  The syndrome construction reduces an arbitrary pair of maximal
commuting sets with trivial intersection to exactly this situation, and a
symplectic table F reduces to it through the pairs T(F(0|e_i)), T(F(e_i|0)).

The discrete squeezing operator and the finite Fourier transform are both
obtained this way; the stabilizer tableau at the bottom cross-validates
generator-level circuits against dense simulation for qubit registers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache, reduce

import numpy as np

from .galois import FieldSpec
from .mub import MubSet
from .pauli import PauliOperator, AbelianSet, _zp_rank, symplectic_product
from .quantum_net import is_flow  # noqa: F401  (re-exported net-flow test)
from .tolerances import LOOKUP, SPECTRAL


# ---------------------------------------------------------------------------
# small mod-p linear algebra
# ---------------------------------------------------------------------------

def _symplectic_form(n: int) -> np.ndarray:
    j = np.zeros((2 * n, 2 * n), dtype=np.int64)
    j[:n, n:] = np.eye(n, dtype=np.int64)
    j[n:, :n] = -np.eye(n, dtype=np.int64)
    return j


def is_symplectic_table(f: np.ndarray, p: int) -> bool:
    n = f.shape[0] // 2
    j = _symplectic_form(n)
    return np.array_equal((f.T @ j @ f) % p, j % p)


def _invert_mod_p(a: np.ndarray, p: int) -> np.ndarray:
    n = a.shape[0]
    aug = np.concatenate([a % p, np.eye(n, dtype=np.int64)], axis=1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r, col] % p), None)
        if pivot is None:
            raise ValueError("matrix is singular mod p")
        aug[[col, pivot]] = aug[[pivot, col]]
        aug[col] = (aug[col] * pow(int(aug[col, col]), -1, p)) % p
        for r in range(n):
            if r != col and aug[r, col]:
                aug[r] = (aug[r] - aug[r, col] * aug[col]) % p
    return aug[:, n:]


def _digits(index: int, p: int, n: int) -> tuple[int, ...]:
    return tuple((index // p**i) % p for i in range(n))


def _index(digits, p: int) -> int:
    return sum(int(d) % p * p**i for i, d in enumerate(digits))


# ---------------------------------------------------------------------------
# membership
# ---------------------------------------------------------------------------

@dataclass(eq=False)
class SymplecticClifford:
    """Symplectic table + phase corrections certifying U T(v) U~ = phase T(Fv)."""

    field: FieldSpec
    symplectic: np.ndarray  # 2n x 2n over Z_p, columns ordered X_1..X_n, Z_1..Z_n
    phase_exponents: tuple[int, ...]  # per generator, exponent of the phase unit
    dense: np.ndarray | None = None

    def __bool__(self) -> bool:
        return True

    def apply_label(self, label) -> tuple[int, ...]:
        p = self.field.p
        return tuple((self.symplectic @ np.array(label, dtype=np.int64)) % p)


@dataclass(eq=False)
class NotClifford:
    witness: PauliOperator
    deficit: float

    def __bool__(self) -> bool:
        return False


def generator_operators(gf: FieldSpec) -> tuple[PauliOperator, ...]:
    """X_1..X_n then Z_1..Z_n as canonical translations."""
    n = gf.n
    outs = []
    for i in range(n):
        e = tuple(1 if k == i else 0 for k in range(n))
        outs.append(PauliOperator(gf, e, (0,) * n))
    for i in range(n):
        e = tuple(1 if k == i else 0 for k in range(n))
        outs.append(PauliOperator(gf, (0,) * n, e))
    return tuple(outs)


@lru_cache(maxsize=None)
def _translation_catalogue(gf: FieldSpec):
    labels = list(itertools.product(range(gf.p), repeat=2 * gf.n))
    dense = np.stack(
        [PauliOperator(gf, l[: gf.n], l[gf.n:]).dense for l in labels]
    )
    return labels, dense


def _match_translation(gf: FieldSpec, op: np.ndarray):
    """(label, phase) with op = phase * T(label), or None."""
    labels, catalogue = _translation_catalogue(gf)
    d = gf.order
    coeffs = np.einsum("kij,ij->k", catalogue.conj(), op) / d
    best = int(np.argmax(np.abs(coeffs)))
    deficit = 1.0 - abs(coeffs[best])
    if deficit > LOOKUP:
        return None, deficit
    return (labels[best], coeffs[best]), deficit


def _phase_to_exponent(gf: FieldSpec, phase: complex) -> int:
    order = 4 if gf.p == 2 else gf.p
    k = int(round(np.angle(phase) / (2 * np.pi / order))) % order
    if abs(phase - np.exp(2j * np.pi * k / order)) > 1e-6:
        raise AssertionError(f"phase {phase} is not a unit root of order {order}")
    return k


def is_clifford(u: np.ndarray, gf: FieldSpec):
    """SymplecticClifford if conjugation maps every generator to a scaled
    translation, else NotClifford carrying the first failing generator."""
    d = gf.order
    if u.shape != (d, d):
        raise ValueError(f"expected a {d} x {d} matrix, got {u.shape}")
    if np.linalg.norm(u @ u.conj().T - np.eye(d)) > SPECTRAL * 100:
        raise ValueError("input matrix is not unitary")
    n = gf.n
    table = np.zeros((2 * n, 2 * n), dtype=np.int64)
    phases = []
    for col, g in enumerate(generator_operators(gf)):
        image = u @ g.dense @ u.conj().T
        match, deficit = _match_translation(gf, image)
        if match is None:
            return NotClifford(g, deficit)
        label, phase = match
        table[:, col] = label
        phases.append(_phase_to_exponent(gf, phase))
    if not is_symplectic_table(table, gf.p):
        raise AssertionError("conjugation table does not preserve the symplectic form")
    return SymplecticClifford(gf, table, tuple(phases), dense=u)


# ---------------------------------------------------------------------------
# synthesis
# ---------------------------------------------------------------------------

def _joint_plus_one_eigenvector(ms: tuple[PauliOperator, ...]) -> np.ndarray:
    gf = ms[0].field
    d, p = gf.order, gf.p
    proj = np.eye(d, dtype=complex)
    for m in ms:
        acc = np.eye(d, dtype=complex)
        spectral = np.zeros((d, d), dtype=complex)
        for _ in range(p):
            spectral += acc
            acc = acc @ m.dense
        proj = proj @ (spectral / p)
    if abs(np.trace(proj) - 1.0) > SPECTRAL * 100:
        raise AssertionError("joint +1 eigenspace is not one-dimensional")
    col = int(np.argmax(np.linalg.norm(proj, axis=0)))
    v = proj[:, col]
    return v / np.linalg.norm(v)


def synthesize_from_pairs(
    ms: tuple[PauliOperator, ...], ns: tuple[PauliOperator, ...]
) -> np.ndarray:
    """The unitary C with C M_i C~ = Z_i and C N_i C~ = X_i exactly.

    Requires pairwise commuting ms, pairwise commuting ns and the pairing
    symplectic(N_i, M_j) = delta_ij; all three are checked.
    """
    gf = ms[0].field
    p, n, d = gf.p, gf.n, gf.order
    for a, b in itertools.combinations(ms, 2):
        if symplectic_product(a, b):
            raise ValueError("ms do not commute")
    for a, b in itertools.combinations(ns, 2):
        if symplectic_product(a, b):
            raise ValueError("ns do not commute")
    for i, nn in enumerate(ns):
        for j, mm in enumerate(ms):
            if symplectic_product(nn, mm) != (1 if i == j else 0):
                raise ValueError("pairing of ns against ms is not the identity")
    psi0 = _joint_plus_one_eigenvector(ms)
    columns = np.zeros((d, d), dtype=complex)
    for z in range(d):
        v = psi0
        for i, digit in enumerate(_digits(z, p, n)):
            for _ in range(digit):
                v = ns[i].dense @ v
        columns[:, z] = v
    c_dagger = columns
    return c_dagger.conj().T


@dataclass(eq=False)
class SyndromeData:
    generators: tuple[PauliOperator, ...]
    partners: tuple[PauliOperator, ...]
    syndromes: dict


def syndrome_standard_pairs(s: AbelianSet, t: AbelianSet) -> SyndromeData:
    """Pick N_i in t with syndrome e_i against the generators M_i of s.

    The syndrome of N is the vector of symplectic products against the
    M_i; distinct members of t get distinct syndromes whenever s and t
    intersect trivially, so each unit vector is hit exactly once.
    """
    gf = s.field
    ms = s.generators()
    gen_rows = [list(m.label) for m in ms] + [list(x.label) for x in t.generators()]
    if _zp_rank(gen_rows, gf.p) != 2 * gf.n:
        raise ValueError("sets intersect nontrivially; no standardization exists")
    syndromes: dict[tuple[int, ...], PauliOperator] = {}
    for member in t.members:
        key = tuple(symplectic_product(member, m) for m in ms)
        if key in syndromes:
            raise AssertionError(f"syndrome collision at {key}; inputs are not maximal")
        syndromes[key] = member
    partners = []
    for i in range(gf.n):
        e = tuple(1 if k == i else 0 for k in range(gf.n))
        if e not in syndromes:
            raise AssertionError(f"no member of t has syndrome {e}")
        partners.append(syndromes[e])
    return SyndromeData(ms, tuple(partners), syndromes)


def standardize_pair(s: AbelianSet, t: AbelianSet) -> SymplecticClifford:
    """The Clifford sending s onto the Z-type set and t onto the X-type set."""
    gf = s.field
    data = syndrome_standard_pairs(s, t)
    c = synthesize_from_pairs(data.generators, data.partners)
    for m, z in zip(data.generators, generator_operators(gf)[gf.n:]):
        if np.linalg.norm(c @ m.dense @ c.conj().T - z.dense) > LOOKUP:
            raise AssertionError("standardization failed to map a generator onto Z_i")
    for nn, x in zip(data.partners, generator_operators(gf)[: gf.n]):
        if np.linalg.norm(c @ nn.dense @ c.conj().T - x.dense) > LOOKUP:
            raise AssertionError("standardization failed to map a partner onto X_i")
    result = is_clifford(c, gf)
    if not result:
        raise AssertionError("synthesized standardizer is not Clifford")
    return result


def clifford_from_symplectic(f: np.ndarray, gf: FieldSpec) -> SymplecticClifford:
    """A unitary realizing a symplectic table with all-positive generator
    phases: U T(v) U~ = T(Fv) exactly for v among the 2n generators."""
    p, n = gf.p, gf.n
    f = np.array(f, dtype=np.int64) % p
    if not is_symplectic_table(f, p):
        raise ValueError("table does not preserve the symplectic form mod p")
    ms, ns = [], []
    for i in range(n):
        ez = np.zeros(2 * n, dtype=np.int64)
        ez[n + i] = 1
        ex = np.zeros(2 * n, dtype=np.int64)
        ex[i] = 1
        mz = (f @ ez) % p
        mx = (f @ ex) % p
        ms.append(PauliOperator(gf, tuple(mz[:n]), tuple(mz[n:])))
        ns.append(PauliOperator(gf, tuple(mx[:n]), tuple(mx[n:])))
    u = synthesize_from_pairs(tuple(ms), tuple(ns)).conj().T
    result = is_clifford(u, gf)
    if not result or not np.array_equal(result.symplectic, f):
        raise AssertionError("synthesis did not reproduce the requested table")
    return result


def squeezing_operator(gf: FieldSpec) -> SymplecticClifford:
    """The unitary with conjugation action T(q, p) -> +/- T(Mq, M~^-1 p).

    It fixes the vertical and horizontal striation sets and cycles the
    oblique ones.  Trivial for n = 1 (the table is scalar), hence refused.
    """
    if gf.n < 2:
        raise ValueError("squeezing needs an extension field (n >= 2)")
    n = gf.n
    m = gf.companion
    mt_inv = _invert_mod_p(m.T, gf.p)
    f = np.zeros((2 * n, 2 * n), dtype=np.int64)
    f[:n, :n] = m
    f[n:, n:] = mt_inv
    return clifford_from_symplectic(f, gf)


@lru_cache(maxsize=None)
def _reflection_form_basis(gf: FieldSpec) -> tuple:
    """A basis orthonormal for the pairing (x, y) -> first coordinate of
    x*y, the bilinear form induced by the point-operator labeling."""
    ell = lambda x: x.coords[0]
    nonzero = gf.elements[1:]
    for cand in itertools.permutations(nonzero, gf.n):
        mat = np.array([e.coords for e in cand], dtype=np.int64)
        if round(np.linalg.det(mat)) % 2 == 0:
            continue
        if all(
            ell(cand[i] * cand[j]) == (1 if i == j else 0)
            for i in range(gf.n)
            for j in range(i, gf.n)
        ):
            return cand
    raise AssertionError("no orthonormal basis for the labeling form")


def fourier_operator(gf: FieldSpec) -> SymplecticClifford:
    """The finite Fourier transform compatible with the labeling: the
    matrix (-1)^(first coordinate of y'*y) / sqrt(d), which is the tensor
    Hadamard written in coordinates self-dual for the labeling form.

    Its conjugation action reflects translation labels across the main
    diagonal of phase space, up to recorded signs.  Characteristic 2 only.
    """
    if gf.p != 2:
        raise ValueError("the Fourier construction is only supported for p = 2")
    d = gf.order
    mat = np.zeros((d, d))
    for zi in range(d):
        for zj in range(d):
            prod = gf.element(zi) * gf.element(zj)
            mat[zi, zj] = (-1.0) ** prod.coords[0]
    result = is_clifford(mat / np.sqrt(d), gf)
    if not result:
        raise AssertionError("Fourier matrix failed the Clifford check")
    return result


def hadamard_in_chart(gf: FieldSpec) -> np.ndarray:
    """Tensor Hadamard conjugated into the labeling-form self-dual chart;
    equals the Fourier matrix (used as an independent construction)."""
    basis = _reflection_form_basis(gf)
    d, n = gf.order, gf.n
    mat = np.array([e.coords for e in basis], dtype=np.int64)
    inv = _invert_mod_p(mat.T, 2)
    v = np.zeros((d, d))
    for z in range(d):
        chart = tuple((inv @ np.array(gf.element(z).coords)) % 2)
        v[_index(chart, 2), z] = 1.0
    h = np.array([[1.0, 1.0], [1.0, -1.0]]) / np.sqrt(2)
    hn = reduce(np.kron, [h] * n)
    return v.T @ hn @ v


# ---------------------------------------------------------------------------
# MUB images
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MubMapResult:
    is_map: bool
    permutation: tuple[int, ...] | None

    def __bool__(self) -> bool:
        return self.is_map


def maps_mub_to_mub(u: np.ndarray, b1: MubSet, b2: MubSet) -> MubMapResult:
    """Does conjugation by u send every basis of b1 onto a basis of b2
    (as unordered sets of rays)?  Returns the striation permutation."""
    if b1.dim != b2.dim:
        raise ValueError("basis sets live in different dimensions")
    perm = []
    for basis in b1.bases:
        image = u @ basis.vectors
        target = None
        for k2, other in enumerate(b2.bases):
            overlaps = np.abs(other.vectors.conj().T @ image)
            cols_ok = np.all(overlaps.max(axis=0) > 1.0 - LOOKUP)
            rows_distinct = len(set(np.argmax(overlaps, axis=0))) == b1.dim
            if cols_ok and rows_distinct:
                target = k2
                break
        if target is None:
            return MubMapResult(False, None)
        perm.append(target)
    if len(set(perm)) != len(b1.bases):
        return MubMapResult(False, None)
    return MubMapResult(True, tuple(perm))


# ---------------------------------------------------------------------------
# basis-preserving unitaries and their affine certificates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AffineData:
    """Certificate: U|z> = exp(i(2 pi/p c.z + phase)) |A^-1 z - A^-1 b>."""

    a_matrix: np.ndarray
    b_shift: tuple[int, ...]
    c_phase: tuple[int, ...]
    global_phase: float

    def predicted_column(self, gf: FieldSpec, z: int) -> tuple[int, complex]:
        p, n = gf.p, gf.n
        a_inv = _invert_mod_p(self.a_matrix, p)
        zd = np.array(_digits(z, p, n), dtype=np.int64)
        image = (a_inv @ (zd - np.array(self.b_shift, dtype=np.int64))) % p
        angle = 2 * np.pi / p * int(np.dot(self.c_phase, zd)) + self.global_phase
        return _index(image, p), np.exp(1j * angle)


@dataclass(frozen=True)
class NotBasisPreserving:
    basis: str  # "Z" or "X"
    state_index: int
    leak: float

    def __bool__(self) -> bool:
        return False


def _extract_permutation(u: np.ndarray):
    d = u.shape[0]
    perm = np.zeros(d, dtype=np.int64)
    phases = np.zeros(d)
    for z in range(d):
        col = u[:, z]
        idx = int(np.argmax(np.abs(col)))
        leak = float(np.linalg.norm(np.delete(col, idx)))
        if leak > LOOKUP:
            return None, z, leak
        perm[z] = idx
        phases[z] = float(np.angle(col[idx]))
    if len(set(perm.tolist())) != d:
        return None, int(perm[0]), 1.0
    return (perm, phases), -1, 0.0


def _dft_matrix(p: int) -> np.ndarray:
    w = np.exp(2j * np.pi / p)
    return np.array([[w ** (j * k) for k in range(p)] for j in range(p)]) / np.sqrt(p)


def x_basis_matrix(gf: FieldSpec) -> np.ndarray:
    """Columns are the X-type eigenbasis reached from the computational one."""
    return reduce(np.kron, [_dft_matrix(gf.p)] * gf.n)


def affine_extraction(u: np.ndarray, gf: FieldSpec):
    """AffineData when u preserves both the computational and the X-type
    bases (up to phases), else NotBasisPreserving naming the failure."""
    p, n, d = gf.p, gf.n, gf.order
    z_result, bad, leak = _extract_permutation(u)
    if z_result is None:
        return NotBasisPreserving("Z", bad, leak)
    w = x_basis_matrix(gf)
    x_result, bad, leak = _extract_permutation(w.conj().T @ u @ w)
    if x_result is None:
        return NotBasisPreserving("X", bad, leak)

    perm, phases = z_result
    inverse = np.zeros(d, dtype=np.int64)
    inverse[perm] = np.arange(d)

    b = np.array(_digits(int(inverse[0]), p, n), dtype=np.int64)
    a = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        a[:, i] = (np.array(_digits(int(inverse[p**i]), p, n)) - b) % p
    for z in range(d):
        zd = np.array(_digits(z, p, n), dtype=np.int64)
        if _index((a @ zd + b) % p, p) != int(inverse[z]):
            raise AssertionError("basis-preserving map is not affine; internal error")
    _invert_mod_p(a, p)  # raises if singular

    delta = float(phases[0])
    c = np.zeros(n, dtype=np.int64)
    for i in range(n):
        rel = phases[p**i] - delta
        c[i] = int(round(rel / (2 * np.pi / p))) % p
    for z in range(d):
        zd = np.array(_digits(z, p, n), dtype=np.int64)
        predicted = np.exp(1j * (2 * np.pi / p * int(c @ zd) + delta))
        if abs(np.exp(1j * phases[z]) - predicted) > LOOKUP * 100:
            raise AssertionError("basis-preserving phases are not affine; internal error")
    return AffineData(a, tuple(int(x) for x in b), tuple(int(x) for x in c), delta)


# ---------------------------------------------------------------------------
# stabilizer tableau (qubit registers, independent of the field machinery)
# ---------------------------------------------------------------------------

GATE_NAMES = ("H", "S", "CNOT")

_PAULI_1Q = {
    (0, 0): np.eye(2, dtype=complex),
    (1, 0): np.array([[0, 1], [1, 0]], dtype=complex),
    (0, 1): np.array([[1, 0], [0, -1]], dtype=complex),
    (1, 1): np.array([[0, -1j], [1j, 0]], dtype=complex),
}


def _row_dense(xbits, zbits, r_bit: int) -> np.ndarray:
    """(-1)^r times the Hermitian Pauli string with the given bits, qubit 0
    on the least significant index digit."""
    factors = [_PAULI_1Q[(int(xb), int(zb))] for xb, zb in zip(xbits, zbits)]
    return (-1.0) ** r_bit * reduce(np.kron, list(reversed(factors)))


@dataclass(eq=False)
class StabilizerTableau:
    """n stabilizer generators as rows of X/Z bit matrices plus sign bits.

    Row i represents (-1)^r[i] times the Hermitian Pauli string with bits
    (x[i], z[i]).  Supports up to 8 qubits; dense reconstruction is meant
    for small n.
    """

    n: int
    x: np.ndarray
    z: np.ndarray
    r: np.ndarray

    @classmethod
    def zero_state(cls, n: int) -> "StabilizerTableau":
        if not 1 <= n <= 8:
            raise ValueError("tableau supports 1 to 8 qubits")
        return cls(
            n,
            np.zeros((n, n), dtype=np.uint8),
            np.eye(n, dtype=np.uint8),
            np.zeros(n, dtype=np.uint8),
        )

    @classmethod
    def from_rows(cls, n: int, rows) -> "StabilizerTableau":
        """rows: (xbits, zbits, sign) triples with sign in {+1, -1}."""
        if len(rows) != n:
            raise ValueError(f"need exactly {n} stabilizer generators")
        x = np.zeros((n, n), dtype=np.uint8)
        z = np.zeros((n, n), dtype=np.uint8)
        r = np.zeros(n, dtype=np.uint8)
        for i, (xbits, zbits, sign) in enumerate(rows):
            if sign not in (1, -1):
                raise ValueError("stabilizer signs must be +1 or -1")
            x[i] = [int(b) % 2 for b in xbits]
            z[i] = [int(b) % 2 for b in zbits]
            r[i] = 0 if sign == 1 else 1
        if _zp_rank([list(x[i]) + list(z[i]) for i in range(n)], 2) != n:
            raise ValueError("stabilizer generators are not independent")
        for i in range(n):
            for j in range(i + 1, n):
                if (int(x[i] @ z[j]) - int(z[i] @ x[j])) % 2:
                    raise ValueError("stabilizer generators do not commute")
        return cls(n, x, z, r)

    def apply_gate(self, name: str, *qubits: int) -> None:
        if name not in GATE_NAMES:
            raise ValueError(f"unknown gate {name!r}; supported: {GATE_NAMES}")
        expected = 2 if name == "CNOT" else 1
        if len(qubits) != expected or any(not 0 <= q < self.n for q in qubits):
            raise ValueError(f"gate {name} takes {expected} qubit index(es) in [0, {self.n})")
        x, z, r = self.x, self.z, self.r
        if name == "H":
            (q,) = qubits
            r ^= x[:, q] & z[:, q]
            x[:, q], z[:, q] = z[:, q].copy(), x[:, q].copy()
        elif name == "S":
            (q,) = qubits
            r ^= x[:, q] & z[:, q]
            z[:, q] ^= x[:, q]
        else:
            a, b = qubits
            if a == b:
                raise ValueError("CNOT needs distinct control and target")
            r ^= x[:, a] & z[:, b] & (x[:, b] ^ z[:, a] ^ 1)
            x[:, b] ^= x[:, a]
            z[:, a] ^= z[:, b]

    def rows(self) -> tuple[tuple[tuple[int, ...], tuple[int, ...], int], ...]:
        return tuple(
            (
                tuple(int(b) for b in self.x[i]),
                tuple(int(b) for b in self.z[i]),
                -1 if self.r[i] else 1,
            )
            for i in range(self.n)
        )

    def state_vector(self) -> np.ndarray:
        d = 2**self.n
        proj = np.eye(d, dtype=complex)
        for xbits, zbits, sign in self.rows():
            proj = proj @ (np.eye(d) + _row_dense(xbits, zbits, 0 if sign == 1 else 1)) / 2
        if abs(np.trace(proj) - 1.0) > SPECTRAL * 100:
            raise AssertionError("tableau does not stabilize a unique state")
        col = int(np.argmax(np.linalg.norm(proj, axis=0)))
        v = proj[:, col]
        v = v / np.linalg.norm(v)
        lead = next(a for a in v if abs(a) > 1e-8)
        return v * (lead.conjugate() / abs(lead))


def tableau_apply(circuit, n: int, initial=None) -> StabilizerTableau:
    """Run a {H, S, CNOT} circuit on a stabilizer state (default |0..0>).

    The circuit is a sequence of (name, *qubits) tuples; anything else is
    rejected before any gate is applied.  Qubit registers only, n <= 8.
    """
    ops = []
    for step, gate in enumerate(circuit):
        if not isinstance(gate, (tuple, list)) or not gate:
            raise ValueError(f"circuit step {step} is not a (name, qubits...) tuple")
        ops.append((str(gate[0]).upper(), tuple(int(q) for q in gate[1:])))
    tab = (
        StabilizerTableau.zero_state(n)
        if initial is None
        else StabilizerTableau.from_rows(n, initial)
    )
    for name, qubits in ops:
        tab.apply_gate(name, *qubits)
    return tab


_H = np.array([[1.0, 1.0], [1.0, -1.0]]) / np.sqrt(2)
_S = np.diag([1.0, 1j])


def _embed(gate: np.ndarray, qubit: int, n: int) -> np.ndarray:
    return reduce(
        np.kron,
        [np.eye(2 ** (n - 1 - qubit)), gate, np.eye(2**qubit)],
    )


def circuit_unitary(circuit, n: int) -> np.ndarray:
    """Dense matrix of a {H, S, CNOT} circuit, for cross-validation."""
    u = np.eye(2**n, dtype=complex)
    p0 = np.diag([1.0, 0.0])
    p1 = np.diag([0.0, 1.0])
    x = np.array([[0.0, 1.0], [1.0, 0.0]])
    for gate in circuit:
        name = str(gate[0]).upper()
        if name == "H":
            step = _embed(_H, gate[1], n)
        elif name == "S":
            step = _embed(_S, gate[1], n)
        elif name == "CNOT":
            a, b = gate[1], gate[2]
            step = _embed(p0, a, n) + _embed(p1, a, n) @ _embed(x, b, n)
        else:
            raise ValueError(f"unknown gate {name!r}")
        u = step @ u
    return u


def random_clifford_circuit(n: int, depth: int, rng: np.random.Generator):
    """A random gate list over {H, S, CNOT}."""
    circuit = []
    for _ in range(depth):
        kind = rng.integers(0, 3)
        if kind == 2 and n >= 2:
            a, b = rng.choice(n, size=2, replace=False)
            circuit.append(("CNOT", int(a), int(b)))
        elif kind == 1:
            circuit.append(("S", int(rng.integers(0, n))))
        else:
            circuit.append(("H", int(rng.integers(0, n))))
    return circuit


def random_unitary(d: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed unitary via QR with phase-fixed diagonal."""
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    q, r = np.linalg.qr(g)
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))
