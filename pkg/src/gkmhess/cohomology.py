"""Equivariant graph cohomology over exact rationals.

For a labeled graph the degree-k equivariant piece is the space of maps
from vertices to degree-k polynomials in t_1..t_n such that the difference
across every edge is divisible by the edge label; a signed blow-up imposes
one extra condition per 4-gon: the sign-weighted vertex sum must be
divisible by the square of the shared label.  Divisibility by t_a - t_b is
encoded by substituting t_a <- t_b and asking for zero; the squared
condition also kills the first-order term of t_a <- t_b + eps.  Both give
integer linear constraints, solved degree by degree by the sparse exact
kernel in :mod:`gkmhess.linalg`.

From the graded dimensions the Hilbert numerator (the dimension series
times (1-q)^n) recovers the ordinary Betti numbers; symmetric-group
characters are computed as exact traces on the kernel bases and pushed to
ordinary cohomology either by series division (fast path) or through the
direct quotient by (t_1, ..., t_n) (authoritative path); the two are
cross-checked on demand.  Frobenius characteristics of the graded
characters land in the symmetric-function layer.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from gkmhess import polys
from gkmhess.graphs import (
    SignedBlowupGraph, Vertex, class_representative, compose, identity_perm,
    inverse, swap_positions)
from gkmhess.linalg import (
    ColumnReducer, FracCol, IntRow, SubspaceBasis, kernel_of_rows)
from gkmhess.symfunc import (
    ClassFunction, GradedSymmetricFunction, Partition, frobenius,
    partitions_of)


class NotFree(ValueError):
    """Hilbert numerator has a negative coefficient."""


class Truncated(ValueError):
    """Hilbert numerator fails to vanish beyond the expected top degree."""


class DimensionMismatch(ValueError):
    """Direct quotient dimension disagrees with the Hilbert numerator."""


class CrossCheckFailed(ValueError):
    """Series-division characters disagree with the direct quotient."""


class MembershipFailed(ValueError):
    """A would-be class violates an edge or quad congruence."""


class NotInvariant(ValueError):
    """The group action does not preserve the solution space."""


@lru_cache(maxsize=None)
def monomials(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """Degree-k exponent tuples in n variables, graded lex, t_1 largest."""
    def rec(rem: int, slots: int):
        if slots == 1:
            yield (rem,)
            return
        for e in range(rem, -1, -1):
            for rest in rec(rem - e, slots - 1):
                yield (e,) + rest

    return tuple(rec(k, n))


@lru_cache(maxsize=None)
def monomial_index(n: int, k: int) -> dict:
    return {m: i for i, m in enumerate(monomials(n, k))}


@dataclass(frozen=True)
class MonomialIndex:
    """Fixed ordering of the degree-k monomials in t_1..t_n."""

    n: int
    degree: int

    @property
    def exponents(self) -> tuple[tuple[int, ...], ...]:
        return monomials(self.n, self.degree)

    def __len__(self) -> int:
        return len(self.exponents)

    def position(self, exponent: tuple[int, ...]) -> int:
        return monomial_index(self.n, self.degree)[exponent]


def _subst_exp(e: tuple, a: int, b: int) -> tuple:
    ee = list(e)
    ee[b - 1] += ee[a - 1]
    ee[a - 1] = 0
    return tuple(ee)


def constraint_rows(graph, k: int) -> list[IntRow]:
    """Integer rows whose kernel is the degree-k equivariant piece."""
    n = graph.n
    mons = monomials(n, k)
    m = len(mons)
    rows: list[IntRow] = []
    for (ui, vi, form) in graph.edges:
        a, b = form.as_difference()
        groups: dict[tuple, IntRow] = {}
        for mi, mon in enumerate(mons):
            tgt = _subst_exp(mon, a, b)
            row = groups.setdefault(tgt, {})
            row[ui * m + mi] = row.get(ui * m + mi, 0) + 1
            row[vi * m + mi] = row.get(vi * m + mi, 0) - 1
        rows.extend(r for _, r in sorted(groups.items()) if r)
    if isinstance(graph, SignedBlowupGraph):
        signs = graph.signs
        for (vs, form) in graph.quads:
            a, b = form.as_difference()
            order0: dict[tuple, IntRow] = {}
            order1: dict[tuple, IntRow] = {}
            for mi, mon in enumerate(mons):
                tgt = _subst_exp(mon, a, b)
                for vi in vs:
                    col = vi * m + mi
                    row = order0.setdefault(tgt, {})
                    row[col] = row.get(col, 0) + signs[vi]
                ea = mon[a - 1]
                if ea:
                    ee = list(mon)
                    ee[a - 1] = 0
                    ee[b - 1] += ea - 1
                    tgt1 = tuple(ee)
                    for vi in vs:
                        col = vi * m + mi
                        row = order1.setdefault(tgt1, {})
                        row[col] = row.get(col, 0) + signs[vi] * ea
            rows.extend(r for _, r in sorted(order0.items())
                        if any(r.values()))
            rows.extend(r for _, r in sorted(order1.items())
                        if any(r.values()))
    return [
        {c: v for c, v in r.items() if v} for r in rows
        if any(r.values())
    ]


def equivariant_piece(graph, k: int) -> SubspaceBasis:
    """Kernel basis of the degree-k congruence system."""
    m = len(monomials(graph.n, k))
    return kernel_of_rows(constraint_rows(graph, k),
                          len(graph.vertices) * m)


@dataclass
class GradedSolutionSpace:
    """Degreewise kernel bases of the equivariant cohomology, plus the
    constraint rows they solve (kept for invariance checks)."""

    graph: object
    max_degree: int
    bases: dict[int, SubspaceBasis]
    rows: dict[int, list[IntRow]]

    def dim(self, k: int) -> int:
        if k < 0:
            return 0
        return self.bases[k].dim

    @property
    def n(self) -> int:
        return self.graph.n


# ---------------------------------------------------------------------------
# on-disk cache (content addressed, atomic writes)

def _cache_path(cache_dir: str, graph, k: int) -> str:
    digest = hashlib.sha256(
        (graph.content_key() + f"|deg={k}|v1").encode()).hexdigest()
    return os.path.join(cache_dir, f"{digest}.json")


def _basis_to_payload(basis: SubspaceBasis) -> dict:
    den = 1
    for col in basis.columns:
        for v in col.values():
            den = den * v.denominator // _gcd(den, v.denominator)
    cols = [sorted((r, int(v * den)) for r, v in col.items())
            for col in basis.columns]
    return {"ambient": basis.ambient_dim, "den": den,
            "free": basis.unit_rows, "cols": cols}


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _basis_from_payload(data: dict) -> SubspaceBasis:
    den = data["den"]
    cols = [{int(r): Fraction(num, den) for r, num in col}
            for col in data["cols"]]
    return SubspaceBasis(data["ambient"], cols, unit_rows=data["free"])


def _cache_read(path: str) -> SubspaceBasis | None:
    try:
        with open(path) as fh:
            return _basis_from_payload(json.load(fh))
    except (OSError, ValueError, KeyError):
        return None


def _cache_write(path: str, basis: SubspaceBasis) -> None:
    os.makedirs(os.path.dirname(path), exist_ok=True)
    payload = json.dumps(_basis_to_payload(basis))
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path), suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(payload)
        os.replace(tmp, path)
    except OSError:
        try:
            os.unlink(tmp)
        except OSError:
            pass


def solve_graph(graph, max_degree: int | None = None,
                cache_dir: str | None = None) -> GradedSolutionSpace:
    """Solve every degree k <= max_degree (default top_degree + 1)."""
    if max_degree is None:
        max_degree = graph.top_degree + 1
    bases: dict[int, SubspaceBasis] = {}
    rows: dict[int, list[IntRow]] = {}
    nverts = len(graph.vertices)
    for k in range(max_degree + 1):
        rows[k] = constraint_rows(graph, k)
        basis = None
        path = None
        if cache_dir is not None:
            path = _cache_path(cache_dir, graph, k)
            basis = _cache_read(path)
        if basis is None:
            basis = kernel_of_rows(rows[k], nverts * len(monomials(graph.n, k)))
            if path is not None:
                _cache_write(path, basis)
        bases[k] = basis
    return GradedSolutionSpace(graph, max_degree, bases, rows)


# ---------------------------------------------------------------------------
# Hilbert numerator and the direct quotient

def hilbert_numerator(space: GradedSolutionSpace,
                      action_kind: str = "none") -> list[int]:
    """Dimension series times (1-q)^n, validated.

    Coefficients b_k for k = 0..top_degree; NotFree on a negative entry,
    Truncated if the numerator fails to vanish on (top_degree, max_degree].
    The action_kind is accepted for interface symmetry; dimensions do not
    depend on it.
    """
    n = space.n
    top = space.graph.top_degree
    if space.max_degree < top + 1:
        raise Truncated(
            f"need degrees through {top + 1}, solved only {space.max_degree}")
    out = []
    for k in range(space.max_degree + 1):
        b = sum((-1) ** j * comb(n, j) * space.dim(k - j)
                for j in range(min(n, k) + 1))
        if b < 0:
            raise NotFree(f"numerator coefficient b_{k} = {b} < 0")
        out.append(b)
    for k in range(top + 1, space.max_degree + 1):
        if out[k]:
            raise Truncated(
                f"numerator does not vanish at degree {k}: b = {out[k]}")
    return out[:top + 1]


def _shift_exp_index(n: int, k: int, i: int):
    """Map degree-(k-1) monomial index to the index of its t_i multiple."""
    src = monomials(n, k - 1)
    dst = monomial_index(n, k)
    table = []
    for mon in src:
        ee = list(mon)
        ee[i - 1] += 1
        table.append(dst[tuple(ee)])
    return table


def _image_columns(space: GradedSolutionSpace, k: int) -> list[FracCol]:
    """Columns spanning sum_i t_i H^{k-1} inside the degree-k coordinates."""
    n = space.n
    if k == 0:
        return []
    m_k = len(monomials(n, k))
    m_km1 = len(monomials(n, k - 1))
    cols = []
    for i in range(1, n + 1):
        table = _shift_exp_index(n, k, i)
        for col in space.bases[k - 1].columns:
            cols.append({(c // m_km1) * m_k + table[c % m_km1]: v
                         for c, v in col.items()})
    return cols


def _ordinary_piece_with_image(space: GradedSolutionSpace, k: int,
                               expected: int | None = None):
    """Quotient representatives and the echelonized image of t-multiplication."""
    red = ColumnReducer()
    for col in _image_columns(space, k):
        red.insert(col)
    image_rank = red.rank
    reps = [col for col in space.bases[k].columns if red.insert(col)]
    dim_q = space.dim(k) - image_rank
    if len(reps) != dim_q:
        raise DimensionMismatch("image escapes the solution space")
    if expected is not None and dim_q != expected:
        raise DimensionMismatch(
            f"direct quotient dim {dim_q} != numerator coefficient {expected} "
            f"at degree {k}")
    ambient = len(space.graph.vertices) * len(monomials(space.n, k))
    image = ColumnReducer()
    image.cols = red.cols[:image_rank]
    return SubspaceBasis(ambient, reps), image


def ordinary_piece_direct(space: GradedSolutionSpace, k: int,
                          expected: int | None = None) -> SubspaceBasis:
    """Representatives of H^k_T / sum_i t_i H^{k-1}_T.

    When ``expected`` is given (the Hilbert-numerator coefficient), a
    mismatch raises DimensionMismatch; the direct computation is the
    authoritative value.
    """
    basis, _ = _ordinary_piece_with_image(space, k, expected)
    return basis


# ---------------------------------------------------------------------------
# group actions, traces, characters

def _perm_monomial_table(n: int, k: int, sigma) -> list[int]:
    idx = monomial_index(n, k)
    table = []
    for mon in monomials(n, k):
        ee = [0] * n
        for i, e in enumerate(mon):
            ee[sigma[i] - 1] = e
        table.append(idx[tuple(ee)])
    return table


def coordinate_perm(graph, k: int, sigma, action_kind: str) -> list[int]:
    """The permutation pi of (vertex, monomial) coordinates for sigma.

    Dot: vertex w -> sigma w and variables t_i -> t_sigma(i); dagger:
    vertices only.  Returns pi as an array: coordinate c of a class f
    contributes to coordinate pi[c] of sigma acting on f.
    """
    n = graph.n
    mons = monomials(n, k)
    m = len(mons)
    vidx = graph.vertex_index()
    vmap = [vidx[Vertex(v.circle, compose(sigma, v.perm))]
            for v in graph.vertices]
    if action_kind == "dot":
        mtable = _perm_monomial_table(n, k, sigma)
    elif action_kind == "dagger":
        mtable = list(range(m))
    else:
        raise ValueError(f"unknown action kind {action_kind!r}")
    out = [0] * (len(graph.vertices) * m)
    for vi in range(len(graph.vertices)):
        base_src = vi * m
        base_dst = vmap[vi] * m
        for mi in range(m):
            out[base_src + mi] = base_dst + mtable[mi]
    return out


def _column_adjacency(rows: list[IntRow]):
    adj: dict[int, list[tuple[int, int]]] = {}
    for ri, row in enumerate(rows):
        for c, v in row.items():
            adj.setdefault(c, []).append((ri, v))
    return adj


def check_action_invariance(space: GradedSolutionSpace, k: int,
                            action_kind: str) -> None:
    """Verify that the generators of S_n map the degree-k piece into
    itself; NotInvariant otherwise.

    Generators suffice: the action is a group homomorphism.
    """
    n = space.n
    if n == 1:
        return
    gens = [swap_positions(identity_perm(n), 1, 2)]
    if n > 2:
        gens.append(tuple(list(range(2, n + 1)) + [1]))
    adj = _column_adjacency(space.rows[k])
    for sigma in gens:
        pi = coordinate_perm(space.graph, k, sigma, action_kind)
        for col in space.bases[k].columns:
            residual: dict[int, Fraction] = {}
            for c, v in col.items():
                for (ri, cf) in adj.get(pi[c], []):
                    nv = residual.get(ri, Fraction(0)) + cf * v
                    if nv:
                        residual[ri] = nv
                    else:
                        residual.pop(ri, None)
            if residual:
                raise NotInvariant(
                    f"{action_kind} action by {sigma} leaves the degree-{k} "
                    f"solution space")


def equivariant_trace(space: GradedSolutionSpace, k: int, sigma,
                      action_kind: str) -> Fraction:
    """Trace of sigma on the degree-k piece (assumes invariance checked).

    The kernel basis has unit rows, so the coordinate of a kernel element
    along basis column i is its value at unit row i; the trace is the sum
    of the permuted columns' values there.
    """
    basis = space.bases[k]
    pinv = coordinate_perm(space.graph, k, inverse(sigma), action_kind)
    total = Fraction(0)
    for i, col in enumerate(basis.columns):
        total += col.get(pinv[basis.unit_rows[i]], Fraction(0))
    return total


@dataclass
class GradedCharacter:
    """Ordinary graded character: (cycle type, q degree) -> value."""

    n: int
    values: dict[tuple[Partition, int], Fraction]

    def value(self, lam: Partition, k: int) -> Fraction:
        return self.values.get((tuple(lam), k), Fraction(0))

    def dims(self) -> list[int]:
        one = (1,) * self.n
        top = max((k for (_, k) in self.values), default=-1)
        return [int(self.value(one, k)) for k in range(top + 1)]

    def max_q(self) -> int:
        return max((k for (_, k) in self.values), default=-1)

    def class_function(self, k: int) -> ClassFunction:
        return ClassFunction(
            self.n, {lam: self.value(lam, k) for lam in partitions_of(self.n)})

    def to_json(self) -> dict:
        out: dict[str, dict[str, str]] = {}
        for lam in partitions_of(self.n):
            key = "[" + ",".join(map(str, lam)) + "]"
            row = {}
            for k in range(self.max_q() + 1):
                v = self.value(lam, k)
                if v:
                    row[str(k)] = str(v) if v.denominator == 1 else \
                        f"{v.numerator}/{v.denominator}"
            out[key] = row
        return {"n": self.n, "values": out}


def _ambient_factor(lam_or_n, action_kind: str) -> list[int]:
    """Coefficients of the inverse ambient Hilbert series as a polynomial.

    Dot: product over cycles c of (1 - q^|c|); dagger: (1 - q)^n.
    """
    coeffs = [1]
    if action_kind == "dot":
        for c in lam_or_n:
            new = [0] * (len(coeffs) + c)
            for i, v in enumerate(coeffs):
                new[i] += v
                new[i + c] -= v
            coeffs = new
    else:
        n = lam_or_n
        for _ in range(n):
            new = [0] * (len(coeffs) + 1)
            for i, v in enumerate(coeffs):
                new[i] += v
                new[i + 1] -= v
            coeffs = new
    return coeffs


def graded_character(space: GradedSolutionSpace, action_kind: str,
                     cross_check: bool | None = None) -> GradedCharacter:
    """Ordinary graded character by series division, optionally verified
    against the direct quotient.

    cross_check defaults to n <= 3 (the direct path runs everywhere small);
    the direct quotient is authoritative and a disagreement raises
    CrossCheckFailed.
    """
    n = space.n
    top = space.graph.top_degree
    numer = hilbert_numerator(space, action_kind)
    for k in range(space.max_degree + 1):
        check_action_invariance(space, k, action_kind)
    traces: dict[Partition, list[Fraction]] = {}
    for lam in partitions_of(n):
        sigma = class_representative(lam)
        traces[lam] = [equivariant_trace(space, k, sigma, action_kind)
                       for k in range(space.max_degree + 1)]
    values: dict[tuple[Partition, int], Fraction] = {}
    for lam in partitions_of(n):
        factor = _ambient_factor(lam if action_kind == "dot" else n,
                                 action_kind)
        for k in range(space.max_degree + 1):
            v = sum((factor[j] * traces[lam][k - j]
                     for j in range(min(k, len(factor) - 1) + 1)),
                    Fraction(0))
            if k <= top:
                if v:
                    values[(lam, k)] = v
            elif v:
                raise CrossCheckFailed(
                    f"character series at {lam} does not terminate "
                    f"(degree {k}: {v})")
    one = (1,) * n
    for k, b in enumerate(numer):
        if values.get((one, k), Fraction(0)) != b:
            raise CrossCheckFailed(
                f"identity character {values.get((one, k))} != Betti {b} "
                f"at degree {k}")
    char = GradedCharacter(n, values)
    if cross_check is None:
        cross_check = n <= 3
    if cross_check:
        _cross_check_direct(space, action_kind, char, numer)
    return char


def _cross_check_direct(space: GradedSolutionSpace, action_kind: str,
                        char: GradedCharacter, numer: list[int]) -> None:
    """Direct-quotient traces; CrossCheckFailed on any disagreement."""
    n = space.n
    for k in range(space.graph.top_degree + 1):
        _, image = _ordinary_piece_with_image(space, k, expected=numer[k])
        for lam in partitions_of(n):
            sigma = class_representative(lam)
            t_total = equivariant_trace(space, k, sigma, action_kind)
            t_image = _trace_on_reducer(space, k, image, sigma, action_kind)
            direct = t_total - t_image
            if direct != char.value(lam, k):
                raise CrossCheckFailed(
                    f"degree {k}, type {lam}: direct {direct} != "
                    f"series {char.value(lam, k)}")


def _trace_on_reducer(space: GradedSolutionSpace, k: int,
                      reducer: ColumnReducer, sigma, action_kind: str) -> Fraction:
    """Trace of sigma on the subspace spanned by a reducer's columns.

    The subspace must be invariant (it is the t-multiplication image of an
    invariant space); each permuted column is re-expanded over the echelon
    columns and the diagonal coefficients are summed.
    """
    pi = coordinate_perm(space.graph, k, sigma, action_kind)
    total = Fraction(0)
    for i, (_, col) in enumerate(reducer.cols):
        permuted = {pi[c]: v for c, v in col.items()}
        rem, coeff = reducer.reduce(permuted)
        if rem:
            raise NotInvariant(
                "t-multiplication image is not preserved by the action")
        total += coeff.get(i, Fraction(0))
    return total


def frobenius_series(space: GradedSolutionSpace, action_kind: str,
                     cross_check: bool | None = None) -> GradedSymmetricFunction:
    """Frobenius characteristic of the ordinary graded character, m basis."""
    char = graded_character(space, action_kind, cross_check=cross_check)
    terms = {}
    for k in range(char.max_q() + 1):
        f = frobenius(char.class_function(k)).convert("m")
        if not f.is_zero():
            terms[k] = f
    return GradedSymmetricFunction(space.n, terms)


# ---------------------------------------------------------------------------
# explicit classes

@dataclass
class EquivariantClass:
    """A vertex-to-polynomial map satisfying the graph congruences."""

    graph: object
    degree: int
    values: dict[Vertex, polys.Poly]

    def __post_init__(self):
        for v, p in self.values.items():
            if not polys.is_homogeneous(p, self.degree):
                raise MembershipFailed(
                    f"value at {v} is not homogeneous of degree {self.degree}")
        if not membership_check(self, self.graph):
            raise MembershipFailed("congruence conditions violated")

    def vector(self) -> FracCol:
        m = len(monomials(self.graph.n, self.degree))
        idx = monomial_index(self.graph.n, self.degree)
        vidx = self.graph.vertex_index()
        out: FracCol = {}
        for v, p in self.values.items():
            base = vidx[v] * m
            for e, c in p.items():
                out[base + idx[e]] = c
        return out

    @classmethod
    def from_vector(cls, graph, degree: int, col: FracCol,
                    check: bool = True) -> "EquivariantClass":
        m = len(monomials(graph.n, degree))
        mons = monomials(graph.n, degree)
        values: dict[Vertex, polys.Poly] = {}
        for c, val in col.items():
            if not val:
                continue
            v = graph.vertices[c // m]
            values.setdefault(v, {})[mons[c % m]] = Fraction(val)
        obj = cls.__new__(cls)
        obj.graph = graph
        obj.degree = degree
        obj.values = values
        if check and not membership_check(obj, graph):
            raise MembershipFailed("congruence conditions violated")
        return obj

    def value(self, v: Vertex) -> polys.Poly:
        return self.values.get(v, {})


def membership_check(cls: EquivariantClass, graph) -> bool:
    """Every edge congruence, and every quad condition if signed."""
    verts = graph.vertices
    for (ui, vi, form) in graph.edges:
        a, b = form.as_difference()
        diff = polys.sub(cls.value(verts[ui]), cls.value(verts[vi]))
        if not polys.divisible_by_diff(diff, a, b):
            return False
    if isinstance(graph, SignedBlowupGraph):
        for (vs, form) in graph.quads:
            a, b = form.as_difference()
            acc: polys.Poly = {}
            for vi in vs:
                acc = polys.add(acc, cls.value(verts[vi]), graph.signs[vi])
            if not polys.divisible_by_diff(acc, a, b, order=2):
                return False
    return True


def make_class_xi(graph, i: int) -> EquivariantClass:
    """The degree-1 class with x_i(w) = t_{w(i)} and x_i(circ(w tau)) = t_{w(i)}.

    Defined on the X side (plain graphs from build_GX, or X-side blow-ups);
    membership is verified on construction.
    """
    n = graph.n
    values: dict[Vertex, polys.Poly] = {}
    if isinstance(graph, SignedBlowupGraph):
        if graph.side != "x":
            raise MembershipFailed("x_i classes live on the X side")
        d = graph.d
        for v in graph.vertices:
            w = swap_positions(v.perm, d + 1, d) if v.circle else v.perm
            values[v] = polys.tvar(n, w[i - 1])
    else:
        for v in graph.vertices:
            values[v] = polys.tvar(n, v.perm[i - 1])
    return EquivariantClass(graph, 1, values)
