"""Punctured first-order Reed-Muller codes and the [2^m-1, 1, 3] CSS family.

Codewords are integers; bit i is coordinate i.  Evaluation points of
GF(2)^m are taken in binary counting order with the zero point first,
so puncturing drops bit 0.  The quantum code stacks X stabilizers from
the even subcode C2 and Z stabilizers from the dual of C1; adding
Z on every qubit or X on the logical-X support pins the logical zero
and plus states.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .pauli import PauliOperator
from .stabilizer import StabilizerGroup


def _gf2_basis(rows):
    """Row-reduce, dropping dependent rows; returns pivot-sorted basis."""
    basis = []
    for row in rows:
        cur = row
        for b in basis:
            cur = min(cur, cur ^ b)
        if cur:
            basis.append(cur)
            basis.sort(reverse=True)
    return basis


class BinaryCode:
    """A linear code over GF(2) with an explicit generator basis."""

    def __init__(self, length: int, rows):
        assert 0 < length <= 63
        self.length = length
        rows = [int(r) for r in rows]
        assert all(0 <= r < (1 << length) for r in rows)
        self.rows = tuple(_gf2_basis(rows))
        assert len(self.rows) == len(rows), "generator rows must be independent"

    @property
    def k(self) -> int:
        return len(self.rows)

    def codewords(self) -> np.ndarray:
        words = np.zeros(1, dtype=np.uint64)
        for r in self.rows:
            words = np.concatenate([words, words ^ np.uint64(r)])
        return words

    def weights(self) -> np.ndarray:
        return np.bitwise_count(self.codewords())

    def min_distance(self) -> int:
        w = self.weights()
        w[0] = self.length + 1
        return int(w.min())

    def parameters(self) -> tuple:
        return (self.length, self.k, self.min_distance())

    def contains(self, word: int) -> bool:
        cur = int(word)
        for b in self.rows:
            cur = min(cur, cur ^ b)
        return cur == 0

    def dual(self) -> "BinaryCode":
        """Kernel basis of the generator matrix."""
        n = self.length
        rows = list(self.rows)
        pivots = []
        for r in rows:
            pivots.append(r.bit_length() - 1)
        free = [j for j in range(n) if j not in pivots]
        # solve for pivot coordinates so every generator row is orthogonal
        duals = []
        for j in free:
            word = 1 << j
            for r, p in sorted(zip(rows, pivots), key=lambda t: t[1]):
                if (r & word).bit_count() % 2:
                    word ^= 1 << p
            duals.append(word)
        return BinaryCode(n, duals)

    def even_subcode(self) -> "BinaryCode":
        odd = [r for r in self.rows if r.bit_count() % 2]
        even = [r for r in self.rows if r.bit_count() % 2 == 0]
        if odd:
            anchor = odd[0]
            even.extend(r ^ anchor for r in odd[1:])
        return BinaryCode(self.length, even)

    def puncture_first(self) -> "BinaryCode":
        return BinaryCode(self.length - 1, [r >> 1 for r in self.rows])

    def __repr__(self):
        return f"BinaryCode{self.parameters()}"


def rm1(m: int) -> BinaryCode:
    """First-order Reed-Muller: all-ones plus the m coordinate forms."""
    assert 3 <= m <= 6
    n = 1 << m
    ones = (1 << n) - 1
    rows = [ones]
    for i in range(m):
        row = 0
        for point in range(n):
            if (point >> i) & 1:
                row |= 1 << point
        rows.append(row)
    return BinaryCode(n, rows)


def punctured_rm1(m: int) -> BinaryCode:
    return rm1(m).puncture_first()


@dataclass(frozen=True)
class CSSCode:
    n: int
    x_rows: tuple
    z_rows: tuple
    logical_x: int
    logical_z: int

    @property
    def k(self) -> int:
        return self.n - len(self.x_rows) - len(self.z_rows)


def build_css(m: int) -> CSSCode:
    """CSS code from C2 inside C1 = punctured RM(1, m)."""
    c1 = punctured_rm1(m)
    c2 = c1.even_subcode()
    dual1 = c1.dual()
    n = c1.length

    for x in c2.rows:
        assert c1.contains(x)
        for z in dual1.rows:
            assert (x & z).bit_count() % 2 == 0, "CSS rows must be orthogonal"

    min_wt = 1 << (m - 1)
    words = c1.codewords()
    odd = words[np.bitwise_count(words) == min_wt - 1]
    assert odd.size, "C1 minus C2 must contain minimum-weight words"
    logical_x = int(odd.min())
    logical_z = (1 << n) - 1
    assert (logical_x & logical_z).bit_count() % 2 == 1
    css = CSSCode(n=n, x_rows=c2.rows, z_rows=dual1.rows,
                  logical_x=logical_x, logical_z=logical_z)
    assert css.k == 1
    return css


def logical_state_stabilizer(css: CSSCode, choice: str) -> StabilizerGroup:
    """Stabilizer of the logical zero or plus state, n generators."""
    gens = [PauliOperator(css.n, x, 0, 0) for x in css.x_rows]
    gens += [PauliOperator(css.n, 0, z, 0) for z in css.z_rows]
    if choice == "zero":
        gens.append(PauliOperator(css.n, 0, css.logical_z, 0))
    elif choice == "plus":
        gens.append(PauliOperator(css.n, css.logical_x, 0, 0))
    else:
        raise ValueError("choice must be 'zero' or 'plus'")
    return StabilizerGroup(gens)


def css_distance(css: CSSCode) -> int:
    """Minimum weight over both logical coset representatives (n <= 15)."""
    assert css.n <= 15, "coset enumeration is kept at desk scale"
    c1 = BinaryCode(css.n, list(css.x_rows) + [css.logical_x])
    c2 = BinaryCode(css.n, css.x_rows)
    dual2 = c2.dual()
    dual1 = c1.dual()

    def coset_min(code: BinaryCode, sub: BinaryCode) -> int:
        words = code.codewords()
        inside = np.fromiter((sub.contains(int(w)) for w in words),
                             dtype=bool, count=words.size)
        return int(np.bitwise_count(words[~inside]).min())

    return min(coset_min(c1, c2), coset_min(dual2, dual1))


def transversal_weight_check(m: int) -> bool:
    """Codeword weights certifying exp(-i pi/2^{m-1} Z_L) is transversal:
    C2 weights in {0, 2^{m-1}}, C1 minus C2 weights in {2^{m-1}-1, 2^m-1}."""
    c1 = punctured_rm1(m)
    c2 = c1.even_subcode()
    half = 1 << (m - 1)
    w2 = set(int(w) for w in c2.weights())
    if not w2 <= {0, half}:
        return False
    words = c1.codewords()
    inside = np.fromiter((c2.contains(int(w)) for w in words),
                         dtype=bool, count=words.size)
    w_outside = set(int(w) for w in np.bitwise_count(words[~inside]))
    return w_outside <= {half - 1, (1 << m) - 1}
