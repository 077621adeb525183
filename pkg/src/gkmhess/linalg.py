"""Exact rational linear algebra on sparse matrices.

Everything here is exact: rows are kept as integer sparse vectors (content
stripped after every combination, Bareiss style) and kernel bases come out
with Fraction entries.  There is no floating point and no modular
arithmetic; identical inputs produce bit-identical outputs.

The central primitive is :func:`kernel_of_rows`, which reduces a list of
integer rows to echelon form (pivot = smallest column of each row, rows
inserted in the given order) followed by a backward pass, and reads off the
canonical kernel basis: one column per free (non-pivot) column f, with
entry 1 at row f.  Those unit rows make coordinate extraction trivial,
which the higher layers exploit for traces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd


class NotInvariant(ValueError):
    """P maps some basis column outside the spanned subspace."""


class AmbientMismatch(ValueError):
    """Subspaces live in different ambient dimensions."""


IntRow = dict[int, int]
FracCol = dict[int, Fraction]


def _strip_content(row: IntRow) -> None:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return
    if g > 1:
        for k in row:
            row[k] //= g


def _reduce_by(row: IntRow, prow: IntRow, c: int) -> None:
    """In place: cancel column c of row using prow (integer, fraction-free)."""
    rc, pc = row[c], prow[c]
    g = gcd(rc, pc)
    mr, mp = pc // g, rc // g
    if mr < 0:
        mr, mp = -mr, -mp
    if mr != 1:
        for k in row:
            row[k] *= mr
    for k, v in prow.items():
        nv = row.get(k, 0) - mp * v
        if nv:
            row[k] = nv
        else:
            row.pop(k, None)
    _strip_content(row)


class Echelon:
    """Incremental sparse integer echelon form (exact, deterministic)."""

    def __init__(self):
        self.pivots: dict[int, int] = {}   # pivot column -> index in rows
        self.rows: list[tuple[int, IntRow]] = []

    def insert(self, row: IntRow) -> bool:
        """Reduce row against current pivots; keep it if independent.

        Returns True when the row increased the rank.
        """
        r = dict(row)
        while r:
            c = min(r)
            idx = self.pivots.get(c)
            if idx is None:
                self.pivots[c] = len(self.rows)
                self.rows.append((c, r))
                return True
            _reduce_by(r, self.rows[idx][1], c)
        return False

    @property
    def rank(self) -> int:
        return len(self.rows)

    def back_substitute(self) -> None:
        """Fully inter-reduce rows; afterwards each row meets pivot columns
        only at its own pivot."""
        for i in sorted(range(len(self.rows)), key=lambda i: -self.rows[i][0]):
            c, r = self.rows[i]
            while True:
                hits = [k for k in r if k != c and k in self.pivots]
                if not hits:
                    break
                k = min(hits)
                _reduce_by(r, self.rows[self.pivots[k]][1], k)

    def kernel_columns(self, ncols: int) -> tuple[list[FracCol], list[int]]:
        """Canonical kernel basis after back substitution.

        Returns (columns, free_cols); column j has entry 1 at row
        free_cols[j] and entry -row[f]/row[pivot] at each pivot row.
        """
        self.back_substitute()
        free = [c for c in range(ncols) if c not in self.pivots]
        # pivot-column -> (pivot value, row) for quick scans
        cols: list[FracCol] = []
        by_free: dict[int, list[tuple[int, Fraction]]] = {f: [] for f in free}
        for c, r in self.rows:
            pv = r[c]
            for k, v in r.items():
                if k != c and k in by_free:
                    by_free[k].append((c, Fraction(-v, pv)))
        for f in free:
            col: FracCol = {f: Fraction(1)}
            for c, val in by_free[f]:
                col[c] = val
            cols.append(col)
        return cols, free


@dataclass
class RationalMatrix:
    """Sparse exact matrix; entries default to zero."""

    nrows: int
    ncols: int
    entries: dict[tuple[int, int], Fraction] = field(default_factory=dict)

    @classmethod
    def from_rows(cls, rows) -> "RationalMatrix":
        ents = {}
        rows = [list(r) for r in rows]
        ncols = max((len(r) for r in rows), default=0)
        for i, r in enumerate(rows):
            for j, v in enumerate(r):
                fv = Fraction(v)
                if fv:
                    ents[(i, j)] = fv
        return cls(len(rows), ncols, ents)

    def to_int_rows(self) -> list[IntRow]:
        """Clear denominators row by row (kernel and rank are unchanged)."""
        byrow: list[dict[int, Fraction]] = [dict() for _ in range(self.nrows)]
        for (i, j), v in self.entries.items():
            byrow[i][j] = v
        out = []
        for r in byrow:
            if not r:
                continue
            den = 1
            for v in r.values():
                den = den * v.denominator // gcd(den, v.denominator)
            out.append({j: int(v * den) for j, v in r.items()})
        return out

    def column(self, j: int) -> FracCol:
        return {i: v for (i, jj), v in self.entries.items() if jj == j}

    def mul_col(self, col: FracCol) -> FracCol:
        out: FracCol = {}
        for (i, j), v in self.entries.items():
            x = col.get(j)
            if x:
                out[i] = out.get(i, Fraction(0)) + v * x
        return {i: v for i, v in out.items() if v}

    @classmethod
    def from_columns(cls, ambient: int, cols: list[FracCol]) -> "RationalMatrix":
        ents = {}
        for j, col in enumerate(cols):
            for i, v in col.items():
                if v:
                    ents[(i, j)] = Fraction(v)
        return cls(ambient, len(cols), ents)


@dataclass
class SubspaceBasis:
    """Columns spanning a subspace of Q^ambient_dim.

    ``unit_rows``, when set, lists rows where the columns restrict to the
    identity matrix (column j is 1 at unit_rows[j], 0 at other unit rows);
    kernel bases produced here always have this shape, which makes
    coordinates of a vector in the span just its values at those rows.
    """

    ambient_dim: int
    columns: list[FracCol]
    unit_rows: list[int] | None = None

    @property
    def dim(self) -> int:
        return len(self.columns)

    def verify_independent(self) -> bool:
        return rank(RationalMatrix.from_columns(self.ambient_dim, self.columns)) == self.dim

    def matrix(self) -> RationalMatrix:
        return RationalMatrix.from_columns(self.ambient_dim, self.columns)


def rank_of_int_rows(rows: list[IntRow]) -> int:
    ech = Echelon()
    for r in rows:
        ech.insert(r)
    return ech.rank


def kernel_of_rows(rows: list[IntRow], ncols: int) -> SubspaceBasis:
    """Exact kernel of the row system as a SubspaceBasis with unit rows."""
    ech = Echelon()
    for r in rows:
        ech.insert(r)
    cols, free = ech.kernel_columns(ncols)
    return SubspaceBasis(ncols, cols, unit_rows=free)


def kernel_basis(m: RationalMatrix) -> SubspaceBasis:
    """Columns spanning {v : Mv = 0}; count = ncols - rank."""
    return kernel_of_rows(m.to_int_rows(), m.ncols)


def rank(m: RationalMatrix) -> int:
    return rank_of_int_rows(m.to_int_rows())


def columns_to_int_rows(columns: list[FracCol]) -> list[IntRow]:
    out = []
    for col in columns:
        den = 1
        for v in col.values():
            den = den * v.denominator // gcd(den, v.denominator)
        out.append({i: int(v * den) for i, v in col.items()})
    return out


def rank_of_columns(columns: list[FracCol]) -> int:
    return rank_of_int_rows(columns_to_int_rows(columns))


class ColumnReducer:
    """Reduce vectors against an accumulating echelon set of columns.

    Columns are reduced on insertion in a single pass, which keeps the
    invariant that stored column i contains no pivot row of columns < i;
    a single pass in insertion order is then a complete reduction.  Used
    to test membership in a span and to build echelon bases of images.
    """

    def __init__(self):
        self.cols: list[tuple[int, FracCol]] = []  # (pivot row, column)

    def reduce(self, col: FracCol) -> tuple[FracCol, FracCol]:
        """Return (remainder, coeffs) with col = sum coeffs[i]*cols[i] + remainder."""
        r = dict(col)
        coeff: FracCol = {}
        for j, (p, pc) in enumerate(self.cols):
            x = r.get(p)
            if not x:
                continue
            t = x / pc[p]
            coeff[j] = t
            for k, v in pc.items():
                nv = r.get(k, Fraction(0)) - t * v
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
        return r, coeff

    def insert(self, col: FracCol) -> bool:
        """Add col if independent of the current span; True when added."""
        r, _ = self.reduce(col)
        if not r:
            return False
        self.cols.append((min(r), r))
        return True

    @property
    def rank(self) -> int:
        return len(self.cols)


def restrict_endomorphism(k: SubspaceBasis, p: RationalMatrix) -> RationalMatrix:
    """Matrix M with P K = K M, when col(K) is P-invariant.

    Raises NotInvariant if some P K_j falls outside col(K).
    """
    if p.ncols != k.ambient_dim or p.nrows != k.ambient_dim:
        raise AmbientMismatch("endomorphism must act on the ambient space")
    red = ColumnReducer()
    exprs: list[FracCol] = []   # echelon column -> coefficients over K columns
    for j, col in enumerate(k.columns):
        r, coeff = red.reduce(col)
        if not r:
            raise ValueError("basis columns are linearly dependent")
        # expression of the new echelon column in terms of original columns
        e: FracCol = {j: Fraction(1)}
        for i, t in coeff.items():
            for jj, v in exprs[i].items():
                nv = e.get(jj, Fraction(0)) - t * v
                if nv:
                    e[jj] = nv
                else:
                    e.pop(jj, None)
        red.cols.append((min(r), r))
        exprs.append(e)
    ents: dict[tuple[int, int], Fraction] = {}
    for j, col in enumerate(k.columns):
        v = p.mul_col(col)
        r, coeff = red.reduce(v)
        if r:
            raise NotInvariant(f"image of basis column {j} leaves the subspace")
        for i, t in coeff.items():
            if not t:
                continue
            for jj, cv in exprs[i].items():
                key = (jj, j)
                nv = ents.get(key, Fraction(0)) + t * cv
                if nv:
                    ents[key] = nv
                else:
                    ents.pop(key, None)
    return RationalMatrix(k.dim, k.dim, ents)


def sum_and_intersection_dims(a: SubspaceBasis, b: SubspaceBasis) -> tuple[int, int]:
    """(dim(A+B), dim(A ∩ B)) by rank computations."""
    if a.ambient_dim != b.ambient_dim:
        raise AmbientMismatch(
            f"ambient dims differ: {a.ambient_dim} vs {b.ambient_dim}")
    ra = rank_of_columns(a.columns)
    rb = rank_of_columns(b.columns)
    rsum = rank_of_columns(a.columns + b.columns)
    return rsum, ra + rb - rsum
