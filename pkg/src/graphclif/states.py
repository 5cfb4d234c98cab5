"""Dense state vectors for small qubit counts.

Basis convention: qubit 0 is the leftmost tensor factor, so its value
is the most significant bit of the amplitude index.  This matches
PauliOperator.to_matrix, which builds matrices with kron in qubit order.
Everything here is capped at 12 qubits.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph
from .pauli import PauliOperator
from .stabilizer import StabilizerGroup

DENSE_LIMIT = 12


def _index_mask(qubit_mask: int, n: int) -> int:
    """Qubit mask -> amplitude-index mask (bit v becomes bit n-1-v)."""
    out = 0
    for v in range(n):
        if (qubit_mask >> v) & 1:
            out |= 1 << (n - 1 - v)
    return out


def graph_state_vector(g: Graph) -> np.ndarray:
    """Amplitudes 2^{-n/2} (-1)^{sum over edges of a_u a_v}."""
    n = g.n
    assert n <= DENSE_LIMIT, "dense vectors capped at 12 qubits"
    idx = np.arange(1 << n)
    signs = np.zeros(1 << n, dtype=np.int64)
    for u, v in g.edges():
        both = (idx >> (n - 1 - u)) & (idx >> (n - 1 - v)) & 1
        signs += both
    amps = np.where(signs % 2 == 0, 1.0, -1.0) / np.sqrt(2.0**n)
    return amps.astype(complex)


def apply_pauli(p: PauliOperator, vec: np.ndarray) -> np.ndarray:
    """Matrix-free action: X part permutes indices, Z part flips signs."""
    n = p.n
    assert vec.shape == (1 << n,)
    xm = _index_mask(p.x_bits, n)
    zm = _index_mask(p.z_bits, n)
    idx = np.arange(1 << n)
    src = idx ^ xm
    # i^phase * (-1)^{popcount(src & z)} since Z acts before X
    par = np.bitwise_count(src & zm) & 1
    coef = (1j**p.phase_exp) * np.where(par == 0, 1.0, -1.0)
    return coef * vec[src]


def stabilizer_state_vector(s: StabilizerGroup, seed: int = 12345) -> np.ndarray:
    """Project a fixed pseudorandom vector onto the joint +1 eigenspace."""
    assert s.is_state_group(), "state vector needs a full set of generators"
    assert s.n <= DENSE_LIMIT
    for attempt in range(8):
        rng = np.random.default_rng(seed + attempt)
        vec = rng.normal(size=1 << s.n) + 1j * rng.normal(size=1 << s.n)
        for gen in s.generators:
            vec = (vec + apply_pauli(gen, vec)) / 2.0
        norm = np.linalg.norm(vec)
        if norm > 1e-9:
            vec = vec / norm
            anchor = int(np.argmax(np.abs(vec)))
            return vec * (abs(vec[anchor]) / vec[anchor])
    raise AssertionError("random vector kept landing outside the code space")


def apply_local(matrices, vec: np.ndarray) -> np.ndarray:
    """Apply one 2x2 matrix per qubit to a dense vector."""
    n = len(matrices)
    assert vec.shape == (1 << n,)
    t = vec.reshape((2,) * n)
    for j, m in enumerate(matrices):
        t = np.moveaxis(np.tensordot(np.asarray(m, dtype=complex), t, axes=([1], [j])), 0, j)
    return t.reshape(1 << n)


def equal_up_to_global_phase(a: np.ndarray, b: np.ndarray, tol: float = 1e-8) -> bool:
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        return False
    anchor = int(np.argmax(np.abs(a)))
    if abs(a[anchor]) < tol:
        return bool(np.all(np.abs(b) < tol))
    phase = b[anchor] / a[anchor]
    if abs(abs(phase) - 1.0) > tol:
        return False
    return bool(np.allclose(a * phase, b, atol=tol, rtol=0.0))


def is_diagonal(m: np.ndarray, tol: float = 1e-9) -> bool:
    return abs(m[0, 1]) <= tol and abs(m[1, 0]) <= tol


def is_antidiagonal(m: np.ndarray, tol: float = 1e-9) -> bool:
    return abs(m[0, 0]) <= tol and abs(m[1, 1]) <= tol


# -- even-weight code: diagonal locals versus the induced logical op --------


def _match_pauli_any_phase(m: np.ndarray, n: int, tol: float = 1e-9):
    """Match m against i^k P for P an n-qubit Pauli; None if nothing fits."""
    flat = np.abs(m).ravel()
    anchor = int(np.argmax(flat))
    if flat[anchor] < tol:
        return None
    for x in range(1 << n):
        for z in range(1 << n):
            p = PauliOperator(n, x, z, 0)
            dense = p.to_matrix()
            ref = dense.ravel()[anchor]
            if abs(ref) < 0.5:
                continue
            scale = m.ravel()[anchor] / ref
            if abs(abs(scale) - 1.0) > tol:
                continue
            if np.allclose(dense * scale, m, atol=tol, rtol=0.0):
                return p, scale
    return None


@dataclass(frozen=True)
class EvenCodeCheck:
    each_local_clifford: bool
    logical_clifford: bool
    thetas: tuple


def verify_proposition2(n: int, thetas, tol: float = 1e-9) -> EvenCodeCheck:
    """Diagonal locals diag(1, e^{i theta_i}) on the even-weight code.

    Qubit 1 is the parity bit; logical basis |b>_L maps to the physical
    codeword (parity(b), b).  Logical X_j acts physically as X_1 X_{j+1},
    logical Z_j as Z_{j+1}.  The induced logical operation is Clifford
    exactly when every conjugated logical X image is a Pauli; each local
    factor is Clifford exactly when e^{2i theta_i} = +-1.
    """
    assert 3 <= n <= 4, "dense logical check supported for n in {3, 4}"
    thetas = tuple(float(t) for t in thetas)
    assert len(thetas) == n

    k = n - 1
    logical = np.arange(1 << k)
    parity = np.bitwise_count(logical) & 1
    # physical codeword index: parity bit in front of the k data bits
    exponents = np.zeros(1 << k)
    exponents += parity * thetas[0]
    for j in range(k):
        bit = (logical >> (k - 1 - j)) & 1
        exponents += bit * thetas[j + 1]
    f_logical = np.diag(np.exp(1j * exponents))

    logical_ok = True
    for j in range(k):
        xj = PauliOperator(k, 1 << j, 0, 0).to_matrix()
        img = f_logical @ xj @ f_logical.conj().T
        if _match_pauli_any_phase(img, k, tol) is None:
            logical_ok = False
            break

    each_ok = all(abs(np.sin(2.0 * t)) <= 1e-7 for t in thetas)
    if logical_ok:
        assert each_ok, "logical Clifford without local Cliffords"
    return EvenCodeCheck(each_local_clifford=each_ok, logical_clifford=logical_ok, thetas=thetas)
