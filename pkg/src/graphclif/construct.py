"""Turning a local-unitary equivalence into a local-Clifford one.

construct_lc takes a connected graph G, a stabilizer group S' and a
per-qubit unitary list U with (by assumption) U |psi'> = |psi_G>, and
produces catalog Cliffords K with K S' K^dag = S(|psi_G>), phases
included.  The procedure is partition-driven:

  * V3 and V4 vertices copy U_i, snapped to the catalog (they must be
    Clifford for genuine inputs).
  * Each V2 vertex and its attached leaves form a block.  The conjugated
    images U^dag Z U (center) and U^dag X U (leaves) are signed Paulis
    for genuine inputs; rotating them to +Z with catalog conjugators
    makes the dressed factors diagonal, and their product over the block
    is the induced logical operation, which snaps to a catalog element.
  * Graphs whose orbit holds a star or complete graph can leave qubits
    unresolved (complete graphs have no leaf blocks at all); those are
    settled by a pruned search over catalog assignments.

Every returned result has already passed verify_lc; failures raise
instead of returning.

The leaf image uses X, not Z: a leaf w enters the block through the
weight-2 stabilizer element X_w Z_{v2}, so the factor of that element
on w is U_w^dag X_w U_w, and dressing with Hadamard afterwards puts it
on the diagonal.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

import numpy as np

from .cliffords import (CLIFFORD_CATALOG, IDENTITY_1Q, LocalCliffordOp,
                        SingleQubitClifford, clifford_by_name,
                        conjugate_stabilizer, find_clifford_conjugator,
                        is_clifford, pauli_match)
from .graphs import Graph, from_graph6, to_graph6, vertex_partition
from .graphstates import classify_theorem, standard_generators
from .pauli import PauliOperator, parse_pauli
from .stabilizer import StabilizerGroup
from .states import (DENSE_LIMIT, apply_local, equal_up_to_global_phase,
                     graph_state_vector, is_antidiagonal, is_diagonal,
                     stabilizer_state_vector)

FALLBACK_CAP = 8

_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Z = np.diag([1.0, -1.0]).astype(complex)
_H = clifford_by_name("H").matrix


class Fact1Error(ValueError):
    """Inputs are not consistent with a genuine LU equivalence."""


class UnsupportedClassError(ValueError):
    """The graph falls outside the classes any theorem covers."""


class CapabilityError(RuntimeError):
    """Structurally fine input beyond a configured size limit."""


@dataclass(frozen=True)
class LUInstance:
    graph: Graph
    s_prime: StabilizerGroup
    u: tuple
    trace: dict

    def to_json(self) -> str:
        return json.dumps({
            "graph": to_graph6(self.graph),
            "s_prime": [str(p) for p in self.s_prime.generators],
            "u": [_matrix_to_json(m) for m in self.u],
            "trace": self.trace,
        }, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "LUInstance":
        data = json.loads(text)
        return cls(
            graph=from_graph6(data["graph"]),
            s_prime=StabilizerGroup([parse_pauli(s) for s in data["s_prime"]]),
            u=tuple(_matrix_from_json(m) for m in data["u"]),
            trace=data.get("trace", {}),
        )


@dataclass(frozen=True)
class LCResult:
    k: LocalCliffordOp
    provenance: tuple
    logical_ops: dict
    verified: bool

    def to_json(self) -> str:
        return json.dumps({
            "k": [{"name": f.name, "matrix": _matrix_to_json(f.matrix)}
                  for f in self.k.factors],
            "provenance": list(self.provenance),
            "verified": self.verified,
        }, sort_keys=True)


def _matrix_to_json(m) -> list:
    m = np.asarray(m, dtype=complex)
    return [[[float(e.real), float(e.imag)] for e in row] for row in m]


def _matrix_from_json(rows) -> np.ndarray:
    return np.array([[complex(re, im) for re, im in row] for row in rows])


def _check_unitary(m: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.shape != (2, 2) or not np.allclose(m @ m.conj().T, np.eye(2), atol=tol):
        raise ValueError("each local factor must be a 2x2 unitary")
    return m


# -- instance generation -----------------------------------------------------


def weight_two_elements(group: StabilizerGroup) -> list:
    assert group.n <= 20, "weight-2 scan enumerates the full group"
    return [e for e in group.enumerate_elements() if e.weight() == 2]


def _rotation(p1: PauliOperator, theta: float) -> np.ndarray:
    """exp(i theta P) for a signed one-qubit Pauli P."""
    return np.cos(theta) * np.eye(2, dtype=complex) + 1j * np.sin(theta) * p1.to_matrix()


def _split_pair(e: PauliOperator, a: int, b: int) -> tuple:
    """Hermitian one-qubit factors alpha, beta with alpha (x) beta = e."""
    y_b = (e.x_bits >> b) & (e.z_bits >> b) & 1
    alpha = PauliOperator(1, (e.x_bits >> a) & 1, (e.z_bits >> a) & 1,
                          (e.phase_exp - y_b) % 4)
    beta = PauliOperator(1, (e.x_bits >> b) & 1, (e.z_bits >> b) & 1, y_b)
    assert alpha.is_hermitian() and beta.is_hermitian()
    return alpha, beta


def generate_instance(g: Graph, seed: int, num_phase_pairs: int = 1,
                      use_base_clifford: bool = True,
                      certificate: bool = True) -> LUInstance:
    """A seeded LU-equivalent pair: S' = C^dag S C and U = C o D.

    D stacks exp(i theta a) x exp(-i theta b) over randomly chosen
    weight-2 elements a x b of S'; each such factor fixes the state of
    S' for any angle, so U maps it to |psi_G> while the per-qubit
    factors are generally not Clifford.
    """
    assert g.is_connected(), "instances are generated for connected graphs"
    rng = random.Random(seed)
    n = g.n
    target = standard_generators(g)
    if use_base_clifford:
        base = LocalCliffordOp([rng.choice(CLIFFORD_CATALOG) for _ in range(n)])
    else:
        base = LocalCliffordOp.identity(n)
    s_prime = conjugate_stabilizer(base.inverse(), target)

    mats = [f.matrix.copy() for f in base.factors]
    trace = {"seed": seed, "base": base.names(), "pairs": []}
    pool = weight_two_elements(s_prime)
    if num_phase_pairs > 0 and not pool:
        trace["notice"] = "no weight-2 stabilizer elements; Clifford-only instance"
    elif num_phase_pairs > 0:
        for e in rng.choices(pool, k=num_phase_pairs):
            a, b = e.support()
            a, b = a - 1, b - 1
            theta = rng.uniform(0.0, 2.0 * np.pi)
            alpha, beta = _split_pair(e, a, b)
            mats[a] = mats[a] @ _rotation(alpha, theta)
            mats[b] = mats[b] @ _rotation(beta, -theta)
            trace["pairs"].append({"element": str(e), "theta": theta})

    inst = LUInstance(graph=g, s_prime=s_prime, u=tuple(mats), trace=trace)
    if certificate:
        assert n <= DENSE_LIMIT, "dense certificate capped at 12 qubits"
        got = apply_local(inst.u, stabilizer_state_vector(s_prime))
        want = graph_state_vector(g)
        assert equal_up_to_global_phase(got, want, 1e-8), "instance failed its certificate"
    return inst


# -- verification ------------------------------------------------------------


def verify_lc(g: Graph, s_prime: StabilizerGroup, k: LocalCliffordOp,
              dense: bool = False, tol: float = 1e-8) -> bool:
    """Does K S' K^dag equal the graph's stabilizer group, signs included?"""
    if s_prime.n != g.n or k.n != g.n or not s_prime.is_state_group():
        return False
    target = standard_generators(g)
    conj = conjugate_stabilizer(k, s_prime)
    if not all(target.is_element(p) for p in conj.generators):
        return False
    if dense:
        assert g.n <= DENSE_LIMIT
        got = apply_local(k.matrices(), stabilizer_state_vector(s_prime))
        if not equal_up_to_global_phase(got, graph_state_vector(g), tol):
            return False
    return True


# -- the construction --------------------------------------------------------


def _image_pauli(u: np.ndarray, p: np.ndarray) -> PauliOperator | None:
    return pauli_match(u.conj().T @ p @ u)


def construct_lc(g: Graph, s_prime: StabilizerGroup, u,
                 fallback_cap: int = FALLBACK_CAP) -> LCResult:
    n = g.n
    if s_prime.n != n or len(u) != n:
        raise ValueError("graph, stabilizer and local op sizes disagree")
    if not s_prime.is_state_group():
        raise ValueError("s_prime must have a full set of generators")
    u = [_check_unitary(m) for m in u]

    cls = classify_theorem(g)
    if cls.tag == "Open":
        raise UnsupportedClassError("unsupported graph class")
    ghz = cls.conditions["GHZ"]

    part = vertex_partition(g)
    k_factors: list = [None] * n
    prov: list = [None] * n
    logical_ops: dict = {}
    unresolved: list = []

    def defer(i, why):
        if not ghz:
            raise Fact1Error(why)
        unresolved.append(i)
        prov[i] = {"rule": "search"}

    for i in range(n):
        if not ((part.v3 >> i) & 1 or (part.v4 >> i) & 1):
            continue
        snapped = is_clifford(u[i])
        if snapped is None:
            defer(i, "inputs are not Fact-1 consistent: "
                     f"non-Clifford factor at vertex {i + 1}")
        else:
            k_factors[i] = snapped
            prov[i] = {"rule": "copied"}

    for v2 in range(n):
        if not (part.v2 >> v2) & 1:
            continue
        leaves = [w for w in range(n) if (part.v1 >> w) & 1 and g.has_edge(v2, w)]
        b_center = _image_pauli(u[v2], _Z)
        if b_center is None:
            raise Fact1Error("inputs are not Fact-1 consistent: "
                             f"center image at vertex {v2 + 1} is not a Pauli")
        f_center = find_clifford_conjugator(b_center)
        u_tilde_center = u[v2] @ f_center.matrix.conj().T

        f_leaf = {}
        u_tilde_leaf = {}
        for w in leaves:
            b = _image_pauli(u[w], _X)
            if b is None:
                raise Fact1Error("inputs are not Fact-1 consistent: "
                                 f"leaf image at vertex {w + 1} is not a Pauli")
            f_leaf[w] = find_clifford_conjugator(b)
            u_tilde_leaf[w] = _H @ u[w] @ f_leaf[w].matrix.conj().T

        if is_diagonal(u_tilde_center):
            branch = "diagonal"
            k_tilde_center = u_tilde_center.copy()
            for w in leaves:
                k_tilde_center = k_tilde_center @ u_tilde_leaf[w]
            k_tilde_leaf = {w: IDENTITY_1Q for w in leaves}
        elif is_antidiagonal(u_tilde_center):
            branch = "antidiagonal"
            k_tilde_center = u_tilde_center @ _X
            for w in leaves:
                k_tilde_center = k_tilde_center @ (u_tilde_leaf[w] @ _X)
            k_tilde_leaf = {w: clifford_by_name("X") for w in leaves}
        else:
            raise Fact1Error("inputs are not Fact-1 consistent: dressed center "
                             f"at vertex {v2 + 1} is neither diagonal nor antidiagonal")

        logical_ops[v2] = k_tilde_center
        snapped = is_clifford(k_tilde_center)
        if snapped is None:
            defer(v2, "inputs are not Fact-1 consistent: block logical operation "
                      f"at vertex {v2 + 1} is not Clifford")
        else:
            k_factors[v2] = snapped.compose(f_center)
            prov[v2] = {"rule": "block", "role": "center", "f": f_center.name,
                        "branch": branch}
        for w in leaves:
            k_factors[w] = clifford_by_name("H").compose(k_tilde_leaf[w]).compose(f_leaf[w])
            prov[w] = {"rule": "block", "role": "leaf", "f": f_leaf[w].name,
                       "branch": branch}

    for i in range(n):
        if k_factors[i] is None and prov[i] is None:
            # leaves with no V2 anchor (the two-vertex complete graph)
            defer(i, "inputs are not Fact-1 consistent: "
                     f"vertex {i + 1} has no assignment rule")

    if unresolved:
        if len(unresolved) > fallback_cap:
            raise CapabilityError(
                f"{len(unresolved)} unresolved qubits exceed the search cap {fallback_cap}")
        _search_completion(g, s_prime, k_factors, sorted(unresolved))

    k_op = LocalCliffordOp(k_factors)
    if not verify_lc(g, s_prime, k_op):
        raise Fact1Error("inputs are not Fact-1 consistent: "
                         "constructed operation failed verification")
    return LCResult(k=k_op, provenance=tuple(prov), logical_ops=logical_ops,
                    verified=True)


def _search_completion(g: Graph, s_prime: StabilizerGroup, k_factors, unresolved):
    """Depth-first catalog assignment for the unresolved qubits.

    Pruning: the conjugated image of each source generator must agree,
    letter by letter on every already-determined qubit, with at least one
    target element.  Signs are settled by the exact check on full
    assignments.
    """
    n = g.n
    target = standard_generators(g)
    elements = list(target.enumerate_elements())
    gens = s_prime.generators

    # letter code 2*x + z per (element, qubit)
    codes = np.zeros((len(elements), n), dtype=np.uint8)
    for row, e in enumerate(elements):
        for q in range(n):
            codes[row, q] = 2 * ((e.x_bits >> q) & 1) + ((e.z_bits >> q) & 1)

    def image_code(gen: PauliOperator, q: int, factor: SingleQubitClifford) -> int:
        w = PauliOperator(1, (gen.x_bits >> q) & 1, (gen.z_bits >> q) & 1, 0)
        img = factor.conjugate(w)
        return 2 * img.x_bits + img.z_bits

    masks = [np.ones(len(elements), dtype=bool) for _ in gens]
    for q in range(n):
        if k_factors[q] is None:
            continue
        for gi, gen in enumerate(gens):
            masks[gi] &= codes[:, q] == image_code(gen, q, k_factors[q])
    if not all(m.any() for m in masks):
        raise Fact1Error("inputs are not Fact-1 consistent: resolved qubits "
                         "rule out every completion")

    def dfs(depth: int, masks) -> bool:
        if depth == len(unresolved):
            op = LocalCliffordOp(k_factors)
            return all(target.is_element(op.conjugate_pauli(p)) for p in gens)
        q = unresolved[depth]
        for cand in CLIFFORD_CATALOG:
            nxt = []
            ok = True
            for gi, gen in enumerate(gens):
                m = masks[gi] & (codes[:, q] == image_code(gen, q, cand))
                if not m.any():
                    ok = False
                    break
                nxt.append(m)
            if not ok:
                continue
            k_factors[q] = cand
            if dfs(depth + 1, nxt):
                return True
            k_factors[q] = None
        return False

    if not dfs(0, masks):
        raise Fact1Error("inputs are not Fact-1 consistent: "
                         "no catalog completion exists")
