"""Stabilizer groups, their enumeration, and support structure.

A group is held as a tuple of independent, pairwise-commuting, Hermitian
Pauli generators; independence over GF(2) rules out -I, so a valid group
of k generators has exactly 2^k distinct elements.  State groups have
k == n, but subgroups (for instance the one generated by all minimal
elements) are first-class citizens here.

Two enumeration engines coexist.  The exact one walks the group in
Gray-code order, one generator multiplication per step, and yields
PauliOperator objects; it backs membership, minimal elements, and every
phase-sensitive question.  The vectorized one packs (x, z) masks into
uint64 numpy arrays by table doubling and answers phase-blind bulk
questions (distance, support multiplicities) for group orders far beyond
what object streaming can reach; it splits the generator set and streams
2^high chunks of 2^low elements, so order 2^31 scans stay in fixed memory.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .pauli import PauliOperator, identity

FULL_PROFILE_LIMIT = 20  # full in-memory support tables up to 2^20 elements
STREAM_LIMIT = 31  # distance-only scans up to 2^31 elements
_CHUNK_BITS = 20


class _GF2Solver:
    """Row-echelon basis over GF(2) with combination tracking."""

    def __init__(self):
        self.rows = []  # (vector, pivot_bit, combo_mask)

    def reduce(self, vec: int, combo: int = 0) -> tuple[int, int]:
        for row, pivot, row_combo in self.rows:
            if (vec >> pivot) & 1:
                vec ^= row
                combo ^= row_combo
        return vec, combo

    def add(self, vec: int, combo: int) -> bool:
        """Insert a vector; returns False if it was already in the span."""
        vec, combo = self.reduce(vec, combo)
        if vec == 0:
            return False
        pivot = vec.bit_length() - 1
        self.rows.append((vec, pivot, combo))
        self.rows.sort(key=lambda r: -r[1])
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)


def _symplectic_vec(p: PauliOperator) -> int:
    return p.x_bits | (p.z_bits << p.n)


class StabilizerGroup:
    """Independent commuting Hermitian generators; 2^k elements, no -I."""

    __slots__ = ("n", "generators", "_solver")

    def __init__(self, generators):
        generators = tuple(generators)
        assert generators, "need at least one generator"
        n = generators[0].n
        solver = _GF2Solver()
        for i, g in enumerate(generators):
            assert g.n == n, "generators act on different qubit counts"
            assert g.is_hermitian(), f"generator {g} is not Hermitian"
            assert not g.is_identity(), "identity is not a generator"
            assert solver.add(_symplectic_vec(g), 1 << i), (
                f"generator {g} is dependent on earlier ones"
            )
            for h in generators[:i]:
                assert g.commutes(h), f"generators {g} and {h} anticommute"
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "generators", generators)
        object.__setattr__(self, "_solver", solver)

    def __setattr__(self, name, value):
        raise AttributeError("StabilizerGroup is immutable")

    @property
    def k(self) -> int:
        return len(self.generators)

    @property
    def order(self) -> int:
        return 1 << self.k

    def is_state_group(self) -> bool:
        return self.k == self.n

    # -- exact enumeration -------------------------------------------------

    def element_from_mask(self, mask: int) -> PauliOperator:
        """Product of the generators selected by mask, ascending index."""
        out = identity(self.n)
        j = 0
        while mask >> j:
            if (mask >> j) & 1:
                out = out * self.generators[j]
            j += 1
        return out

    def enumerate_elements(self):
        """All 2^k elements, Gray-code order: one multiplication per step.

        Commuting generators make the incremental product order-independent,
        so phases are exact.  The identity comes first.
        """
        cur = identity(self.n)
        yield cur
        for i in range(1, self.order):
            j = (i & -i).bit_length() - 1
            cur = cur * self.generators[j]
            yield cur

    def is_element(self, p: PauliOperator) -> bool:
        """Sign-exact membership: the phase must match, not just (x, z)."""
        assert p.n == self.n
        residual, combo = self._solver.reduce(_symplectic_vec(p))
        if residual != 0:
            return False
        return self.element_from_mask(combo) == p

    def contains_up_to_sign(self, p: PauliOperator) -> bool:
        residual, _ = self._solver.reduce(_symplectic_vec(p))
        return residual == 0

    # -- vectorized mask tables ---------------------------------------------

    def _mask_table(self, gens) -> tuple[np.ndarray, np.ndarray]:
        x = np.zeros(1, dtype=np.uint64)
        z = np.zeros(1, dtype=np.uint64)
        for g in gens:
            x = np.concatenate([x, x ^ np.uint64(g.x_bits)])
            z = np.concatenate([z, z ^ np.uint64(g.z_bits)])
        return x, z

    def distance(self) -> int:
        """Minimum weight over the 2^k - 1 non-identity elements."""
        k = self.k
        assert k <= STREAM_LIMIT, f"distance scan capped at 2^{STREAM_LIMIT}"
        lo_bits = min(k, _CHUNK_BITS)
        x_lo, z_lo = self._mask_table(self.generators[:lo_bits])
        x_hi, z_hi = self._mask_table(self.generators[lo_bits:])
        best = 64
        for i in range(len(x_hi)):
            w = np.bitwise_count((x_lo ^ x_hi[i]) | (z_lo ^ z_hi[i]))
            if i == 0:
                w[0] = 64  # skip the identity
            m = int(w.min())
            if m < best:
                best = m
                if best == 1:
                    break
        return best

    def support_counts(self) -> dict[int, int]:
        """A_omega: how many non-identity elements have each exact support."""
        assert self.k <= FULL_PROFILE_LIMIT, (
            f"full support table capped at 2^{FULL_PROFILE_LIMIT}"
        )
        x, z = self._mask_table(self.generators)
        supports, counts = np.unique((x | z)[1:], return_counts=True)
        # Index 0 of the doubling table is the identity; masks repeat later
        # only for genuinely distinct elements sharing a support.
        out = {}
        for s, c in zip(supports.tolist(), counts.tolist()):
            out[s] = out.get(s, 0) + c
        out.pop(0, None)
        return out


def minimal_supports(group: StabilizerGroup) -> tuple[int, ...]:
    """Supports of non-identity elements with no proper sub-support present.

    Sorted by (weight, mask) so downstream reports are reproducible.
    """
    counts = group.support_counts()
    order = sorted(counts, key=lambda m: (m.bit_count(), m))
    kept: list[int] = []
    for omega in order:
        if any(mu & omega == mu for mu in kept):
            continue
        kept.append(omega)
    return tuple(kept)


@dataclass(frozen=True)
class SupportProfile:
    distance: int
    a_counts: dict
    minimal: tuple


def support_profile(group: StabilizerGroup) -> SupportProfile:
    counts = group.support_counts()
    minimal = minimal_supports(group)
    distance = min(m.bit_count() for m in counts)
    return SupportProfile(distance=distance, a_counts=counts, minimal=minimal)


def minimal_elements(group: StabilizerGroup) -> list[PauliOperator]:
    """All elements whose support is minimal, in Gray-scan order."""
    wanted = set(minimal_supports(group))
    out = []
    for p in group.enumerate_elements():
        if p.support_mask in wanted:
            out.append(p)
    return out


def minimal_subgroup(group: StabilizerGroup) -> StabilizerGroup:
    """The subgroup generated by all minimal elements (with their signs)."""
    solver = _GF2Solver()
    gens = []
    for p in minimal_elements(group):
        if solver.add(_symplectic_vec(p), 0):
            gens.append(p)
    assert gens, "a nontrivial group always has minimal elements"
    return StabilizerGroup(gens)


def letters_per_qubit(group: StabilizerGroup) -> tuple[frozenset, ...]:
    """Which of X, Y, Z occur at each qubit across all group elements."""
    seen = [set() for _ in range(group.n)]
    for p in group.enumerate_elements():
        mask = p.support_mask
        j = 0
        while mask >> j:
            if (mask >> j) & 1:
                seen[j].add(p.letter(j + 1))
            j += 1
    return tuple(frozenset(s) for s in seen)


@dataclass(frozen=True)
class MSCResult:
    passed: bool
    letters: tuple


def msc_check(group: StabilizerGroup) -> MSCResult:
    """Minimal support condition: X, Y and Z all occur on every qubit
    within the subgroup generated by the minimal elements."""
    letters = letters_per_qubit(minimal_subgroup(group))
    passed = all(s == frozenset("XYZ") for s in letters)
    return MSCResult(passed=passed, letters=letters)


def s_equals_m(group: StabilizerGroup) -> bool:
    """Does the minimal-element subgroup already generate the whole group?"""
    return minimal_subgroup(group).k == group.k


def local_elements(group: StabilizerGroup, omega_mask: int) -> list[PauliOperator]:
    """Elements supported inside omega_mask (identity included).

    Solved over GF(2): the subset products vanishing outside omega form a
    subgroup, found as a kernel, so no full enumeration is needed.
    """
    outside = ((1 << group.n) - 1) & ~omega_mask
    solver = _GF2Solver()
    kernel_combos = []
    for i, g in enumerate(group.generators):
        vec = (g.x_bits & outside) | ((g.z_bits & outside) << group.n)
        if not solver.add(vec, 1 << i):
            _, combo = solver.reduce(vec, 1 << i)
            kernel_combos.append(combo)
    out = []
    for mask in range(1 << len(kernel_combos)):
        combo = 0
        for j, c in enumerate(kernel_combos):
            if (mask >> j) & 1:
                combo ^= c
        out.append(group.element_from_mask(combo))
    return out


def is_even_code(group: StabilizerGroup) -> bool:
    """Do all elements have even weight?

    For commuting Paulis the overlap-with-different-letters count is even,
    so weight parity is additive and generators decide the whole group.
    """
    return all(g.weight() % 2 == 0 for g in group.generators)


def distance_upper_bound(n: int, even_code: bool = False) -> int:
    """Cap on stabilizer-state distance by qubit count.

    Even codes (possible only at even n): 2*floor(n/6)+2, attained at n=6.
    Otherwise 2*floor(n/6)+1 when n = 0 mod 6, +3 when n = 5 mod 6,
    and +2 for the remaining residues.
    """
    assert n >= 1
    if even_code:
        return 2 * (n // 6) + 2
    r = n % 6
    if r == 0:
        return 2 * (n // 6) + 1
    if r == 5:
        return 2 * (n // 6) + 3
    return 2 * (n // 6) + 2
