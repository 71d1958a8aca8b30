"""Brute-force 2x2 complex arithmetic on nested lists.

Deliberately shares nothing with the numpy-backed :mod:`jonespauli.algebra`
path: Jones vectors, dyads and products are all spelled out with ``cmath``
and explicit index loops, so the two routes can check each other.
"""
from __future__ import annotations

import cmath
import math

Grid = list  # 2x2 nested list of complex


def jones(a: complex, b: complex, phase: float) -> tuple[complex, complex]:
    b = complex(b) * cmath.exp(1j * phase)
    a = complex(a)
    n = math.sqrt((a * a.conjugate()).real + (b * b.conjugate()).real)
    return (a / n, b / n)


def dyad(u, v) -> Grid:
    return [[u[i] * v[j] for j in range(2)] for i in range(2)]


def dyad_conj(u, v) -> Grid:
    return [[u[i] * v[j].conjugate() for j in range(2)] for i in range(2)]


def matmul(m: Grid, n: Grid) -> Grid:
    out = [[0j, 0j], [0j, 0j]]
    for i in range(2):
        for j in range(2):
            for k in range(2):
                out[i][j] += m[i][k] * n[k][j]
    return out


def add(m: Grid, n: Grid, sign: int = 1) -> Grid:
    return [[m[i][j] + sign * n[i][j] for j in range(2)] for i in range(2)]


def scale(c: complex, m: Grid) -> Grid:
    return [[c * m[i][j] for j in range(2)] for i in range(2)]


def commutator(m: Grid, n: Grid) -> Grid:
    return add(matmul(m, n), matmul(n, m), -1)


def anticommutator(m: Grid, n: Grid) -> Grid:
    return add(matmul(m, n), matmul(n, m), 1)


def max_abs_diff(m: Grid, n: Grid) -> float:
    return max(abs(m[i][j] - n[i][j]) for i in range(2) for j in range(2))


def pair_dyads(a, b, alpha, c, d, beta) -> tuple[Grid, Grid]:
    j1 = jones(a, b, alpha)
    j2 = jones(c, d, beta)
    return dyad(j1, j2), dyad(j2, j1)


def projector_dyads(a, b, alpha, c, d, beta) -> tuple[Grid, Grid]:
    j1 = jones(a, b, alpha)
    j2 = jones(c, d, beta)
    return dyad_conj(j1, j1), dyad_conj(j2, j2)


def combine(kind: str, m: Grid, n: Grid) -> Grid:
    if kind == "Commutator":
        return commutator(m, n)
    if kind == "Anticommutator":
        return anticommutator(m, n)
    if kind == "Difference":
        return add(m, n, -1)
    raise ValueError(f"unknown combinator {kind!r}")
