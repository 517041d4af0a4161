"""Exact rational linear algebra on small dense matrices (sympy ``DomainMatrix`` over QQ)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix


def _qq(rows: Sequence[Sequence]) -> DomainMatrix:
    conv = [[QQ(Fraction(x).numerator, Fraction(x).denominator) for x in row] for row in rows]
    ncols = len(rows[0]) if rows else 0
    return DomainMatrix(conv, (len(rows), ncols), QQ)


def rank(rows: Sequence[Sequence]) -> int:
    if not rows or not rows[0]:
        return 0
    return _qq(rows).rank()


def determinant(rows: Sequence[Sequence[int]]) -> int:
    conv = [[ZZ(int(x)) for x in row] for row in rows]
    return int(DomainMatrix(conv, (len(rows), len(rows)), ZZ).det())


def in_column_span(columns: Sequence[Sequence], target: Sequence) -> bool:
    """True when ``target`` is a rational combination of ``columns``."""
    if not any(Fraction(x) for x in target):
        return True
    if not columns:
        return False
    rows = [list(col) for col in zip(*columns)]
    augmented = [row + [t] for row, t in zip(rows, target)]
    return rank(rows) == rank(augmented)


def nullspace(rows: Sequence[Sequence]) -> list[list[Fraction]]:
    """A basis of the right nullspace, as lists of Fractions."""
    basis = _qq(rows).nullspace().to_Matrix()
    out = []
    for r in range(basis.rows):
        out.append([Fraction(int(x.p), int(x.q)) for x in basis.row(r)])
    return out
