"""Sparse exact linear algebra over the rationals.

Rows are dicts column -> Fraction.  Everything is deterministic; no floating
point anywhere.
"""
from __future__ import annotations

from fractions import Fraction

Row = dict[int, Fraction]


class Eliminator:
    """Incremental Gaussian elimination keeping one normalized row per pivot column."""

    def __init__(self):
        self.pivots: dict[int, Row] = {}

    def reduce(self, row: Row) -> Row:
        row = dict(row)
        while row:
            c = min(row)
            p = self.pivots.get(c)
            if p is None:
                return row
            f = row[c]
            for cc, vv in p.items():
                nv = row.get(cc, Fraction(0)) - f * vv
                if nv:
                    row[cc] = nv
                else:
                    row.pop(cc, None)
        return row

    def add(self, row: Row) -> bool:
        """Reduce and insert; True when the row added a new pivot."""
        r = self.reduce(row)
        if not r:
            return False
        c = min(r)
        f = r[c]
        self.pivots[c] = {cc: vv / f for cc, vv in r.items()}
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def back_substitute(self) -> None:
        for c in sorted(self.pivots, reverse=True):
            row = self.pivots[c]
            for c2 in sorted(k for k in row if k != c and k in self.pivots):
                f = row[c2]
                if not f:
                    continue
                for cc, vv in self.pivots[c2].items():
                    nv = row.get(cc, Fraction(0)) - f * vv
                    if nv:
                        row[cc] = nv
                    else:
                        row.pop(cc, None)


def rank(rows: list[Row]) -> int:
    e = Eliminator()
    for r in rows:
        e.add(r)
    return e.rank


def nullspace(rows: list[Row], ncols: int) -> list[list[Fraction]]:
    """Basis of the solution space of ``rows . x = 0`` in R^ncols."""
    e = Eliminator()
    for r in rows:
        e.add(r)
    e.back_substitute()
    free = [c for c in range(ncols) if c not in e.pivots]
    basis = []
    for fcol in free:
        vec = [Fraction(0)] * ncols
        vec[fcol] = Fraction(1)
        for c, row in e.pivots.items():
            vec[c] = -row.get(fcol, Fraction(0))
        basis.append(vec)
    return basis


def solve(rows: list[Row], rhs: list[Fraction], ncols: int) -> list[Fraction] | None:
    """One solution of ``rows . x = rhs`` or None.  ``rows[i]`` pairs with ``rhs[i]``."""
    sentinel = ncols
    e = Eliminator()
    for r, b in zip(rows, rhs):
        row = dict(r)
        if b:
            row[sentinel] = -b
        e.add(row)
    if sentinel in e.pivots:
        return None
    e.back_substitute()
    # each pivot row reads  x_c + sum(row[cc] * x_cc) + row[sentinel] = 0;
    # free variables are set to 0
    x = [Fraction(0)] * ncols
    for c, row in e.pivots.items():
        x[c] = -row.get(sentinel, Fraction(0))
    return x


def mat_rank(m: list[list[Fraction]]) -> int:
    rows = []
    for r in m:
        rows.append({i: v for i, v in enumerate(r) if v})
    return rank(rows)


def mat_mul(a: list[list[Fraction]], b: list[list[Fraction]]) -> list[list[Fraction]]:
    if not a or not b:
        return [[Fraction(0)] * (len(b[0]) if b else 0) for _ in a]
    n, k, m = len(a), len(b), len(b[0])
    out = [[Fraction(0)] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for j in range(k):
            f = ai[j]
            if f:
                bj = b[j]
                for col in range(m):
                    if bj[col]:
                        oi[col] += f * bj[col]
    return out


def mat_eye(n: int) -> list[list[Fraction]]:
    return [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]


def mat_zero(rows_: int, cols: int) -> list[list[Fraction]]:
    return [[Fraction(0)] * cols for _ in range(rows_)]


def mat_add(a, b, scale=Fraction(1)):
    return [[x + scale * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, f: Fraction):
    return [[f * x for x in r] for r in a]


def solve_columns(basis_cols: list[list[Fraction]], target: list[Fraction]) -> list[Fraction] | None:
    """Express ``target`` in the span of ``basis_cols`` (each a vector)."""
    if not basis_cols:
        return [] if all(v == 0 for v in target) else None
    n = len(target)
    rows: list[Row] = []
    rhs: list[Fraction] = []
    for i in range(n):
        row = {j: basis_cols[j][i] for j in range(len(basis_cols)) if basis_cols[j][i]}
        rows.append(row)
        rhs.append(target[i])
    return solve(rows, rhs, len(basis_cols))
