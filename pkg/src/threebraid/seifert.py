"""Brute-force Seifert form of a 3-braid closure.

Applying Seifert's algorithm to the closure of a 3-braid diagram gives three
disks joined by one twisted band per crossing.  A basis of the surface's
first homology is given, per generator column, by consecutive pairs of
crossings in that column; the Seifert matrix records band linking numbers.
Everything is exact: signatures come from rational congruence
diagonalization, never from floating point.

This module is deliberately independent of the matrix-representation route:
it sees only the diagram.  Its outputs (determinant and signature of the
symmetrized form) cross-check the rest of the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .words import BraidWord, free_reduce


class SplitClosure(ValueError):
    """The reduced diagram does not use both generator columns, so the
    closure is a split link and the surface is disconnected."""


@dataclass(frozen=True)
class SeifertMatrix:
    """Band linking matrix plus bookkeeping for the homology generators.

    ``generators[i]`` is (column, first position, second position): the loop
    through the two bands of a consecutive same-column crossing pair.
    """

    entries: tuple[tuple[int, ...], ...]
    generators: tuple[tuple[int, int, int], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def symmetrized(self) -> list[list[int]]:
        n = self.size
        return [[self.entries[i][j] + self.entries[j][i] for j in range(n)]
                for i in range(n)]


def seifert_matrix(w: BraidWord) -> SeifertMatrix:
    """Seifert matrix of the closure of the freely reduced diagram.

    The sign rules are pinned by two calibration fixtures in the test suite:
    the closure of (x y)^2 must have signature -2 and determinant 3, the
    closure of (x y^-1)^2 signature 0 and determinant 5.
    """
    reduced = free_reduce(w)
    crossings = [(0 if letter.generator == "x" else 1, letter.sign)
                 for letter in reduced]
    for column in (0, 1):
        if all(col != column for col, _ in crossings):
            raise SplitClosure(
                f"column {column + 1} unused: the closure splits")

    positions = {0: [], 1: []}
    for position, (column, _) in enumerate(crossings):
        positions[column].append(position)

    generators: list[tuple[int, int, int]] = []
    for column in (0, 1):
        column_positions = positions[column]
        for first, second in zip(column_positions, column_positions[1:]):
            generators.append((column, first, second))

    sign_at = {pos: sign for pos, (_, sign) in enumerate(crossings)}
    n = len(generators)
    v = [[0] * n for _ in range(n)]

    for i, (column, p1, p2) in enumerate(generators):
        # Self-linking of a band pair: nonzero only for equal crossing signs.
        if sign_at[p1] == sign_at[p2]:
            v[i][i] = -1 if sign_at[p1] > 0 else 1

    for i, (column, p1, p2) in enumerate(generators):
        for j, (column2, q1, q2) in enumerate(generators):
            if j <= i:
                continue
            if column2 == column and q1 == p2:
                # Consecutive pairs sharing the middle crossing.
                if sign_at[p2] > 0:
                    v[j][i] = 1
                else:
                    v[i][j] = -1
            elif column2 == column + 1:
                # Staggered pairs in adjacent columns link once.
                if q1 < p1 < q2 < p2:
                    v[j][i] = 1
                elif p1 < q1 < p2 < q2:
                    v[j][i] = -1

    return SeifertMatrix(tuple(tuple(row) for row in v), tuple(generators))


def _symmetric_signature(rows: list[list[int]]) -> int:
    """Signature of a symmetric integer matrix by congruence diagonalization
    over the rationals."""
    n = len(rows)
    a = [[Fraction(x) for x in row] for row in rows]
    signature = 0
    for k in range(n):
        if a[k][k] == 0:
            pivot = next((j for j in range(k + 1, n) if a[j][j] != 0), None)
            if pivot is not None:
                # Congruence by a transposition.
                a[k], a[pivot] = a[pivot], a[k]
                for row in a:
                    row[k], row[pivot] = row[pivot], row[k]
            else:
                j = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
                if j is None:
                    continue  # the whole row/column is zero
                # Congruence by adding row/column j: diagonal becomes 2a[k][j].
                for col in range(n):
                    a[k][col] += a[j][col]
                for row in a:
                    row[k] += row[j]
        pivot_value = a[k][k]
        signature += 1 if pivot_value > 0 else -1
        for j in range(k + 1, n):
            factor = a[j][k] / pivot_value
            if factor == 0:
                continue
            for col in range(n):
                a[j][col] -= factor * a[k][col]
            for row in a:
                row[j] -= factor * row[k]
    return signature


def sym_signature(v: SeifertMatrix) -> int:
    """Signature of V + V^T, exactly."""
    return _symmetric_signature(v.symmetrized())


def _integer_determinant(rows: list[list[int]]) -> int:
    """Determinant by fraction-free elimination (Bareiss)."""
    n = len(rows)
    if n == 0:
        return 1
    a = [row[:] for row in rows]
    sign = 1
    previous_pivot = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((j for j in range(k + 1, n) if a[j][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) \
                    // previous_pivot
            a[i][k] = 0
        previous_pivot = a[k][k]
    return sign * a[-1][-1]


def sym_determinant(v: SeifertMatrix) -> int:
    """|det(V + V^T)|."""
    return abs(_integer_determinant(v.symmetrized()))


def oracle_determinant(w: BraidWord) -> int:
    """|det(V + V^T)| of the closure, from the diagram alone."""
    return sym_determinant(seifert_matrix(w))
