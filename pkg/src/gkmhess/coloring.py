"""Chromatic quasisymmetric functions and unicellular LLT polynomials.

A coloring of the indifference graph G_h is a tuple kappa of positive
integers, kappa[i-1] being the color of vertex i.  The graded chromatic
symmetric function sums z_kappa q^asc(kappa) over proper colorings; the
unicellular LLT polynomial drops properness.  Both are computed exactly by
enumerating colorings content by content: the coefficient of m_lam at q^a
is the number of (proper) colorings using exactly lam_i vertices of color
i with ascent statistic a.

The module also carries the bookkeeping for the modular-law proofs: the
nine-way (proper) and four-way (arbitrary) classification of colorings of
G_{h_-} by how kappa(d0) compares to kappa(d) and kappa(d+1), the
color-swap bijection at positions d, d+1, and the modular-law checks
themselves, valid for triples of both kinds.
"""

from __future__ import annotations

from typing import Iterator

from gkmhess.hessenberg import (
    HessenbergFunction, ModularTriple, WrongKind, indifference_graph)
from gkmhess.symfunc import (
    GradedSymmetricFunction, Partition, SymmetricFunction, check_degree,
    partitions_of)

Coloring = tuple[int, ...]


def _edge_list(h: HessenbergFunction) -> list[tuple[int, int]]:
    return sorted(indifference_graph(h).edges)


def asc(h: HessenbergFunction, kappa: Coloring) -> int:
    """Number of edges {i, j} with j < i and kappa(j) < kappa(i)."""
    if len(kappa) != h.n:
        raise ValueError("coloring length differs from n")
    return sum(1 for (i, j) in _edge_list(h) if kappa[j - 1] < kappa[i - 1])


def is_proper(h: HessenbergFunction, kappa: Coloring) -> bool:
    return all(kappa[i - 1] != kappa[j - 1] for (i, j) in _edge_list(h))


def _arrangements(counts: list[int]) -> Iterator[Coloring]:
    """Distinct arrangements of the multiset {color c with multiplicity
    counts[c-1]}; colors are 1-based."""
    n = sum(counts)
    out = [0] * n

    def rec(pos: int) -> Iterator[Coloring]:
        if pos == n:
            yield tuple(out)
            return
        for c, left in enumerate(counts, start=1):
            if left:
                counts[c - 1] -= 1
                out[pos] = c
                yield from rec(pos + 1)
                counts[c - 1] += 1

    yield from rec(0)


def colorings_by_content(n: int) -> Iterator[tuple[Partition, Coloring]]:
    """All colorings with content a partition of n (colors 1..len(lam))."""
    for lam in partitions_of(n):
        for kappa in _arrangements(list(lam)):
            yield lam, kappa


def _coloring_sum(h: HessenbergFunction, proper_only: bool) -> GradedSymmetricFunction:
    n = h.n
    check_degree(n)
    edges = _edge_list(h)
    counts: dict[int, dict[Partition, int]] = {}
    for lam in partitions_of(n):
        for kappa in _arrangements(list(lam)):
            if proper_only and any(kappa[i - 1] == kappa[j - 1] for (i, j) in edges):
                continue
            a = sum(1 for (i, j) in edges if kappa[j - 1] < kappa[i - 1])
            counts.setdefault(a, {})
            counts[a][lam] = counts[a].get(lam, 0) + 1
    return GradedSymmetricFunction(
        n, {a: SymmetricFunction(n, "m", c) for a, c in counts.items()})


def csf_q(h: HessenbergFunction) -> GradedSymmetricFunction:
    """Sum of z_kappa q^asc over proper colorings, in the m basis."""
    return _coloring_sum(h, proper_only=True)


def llt(h: HessenbergFunction) -> GradedSymmetricFunction:
    """Sum of z_kappa q^asc over all colorings, in the m basis."""
    return _coloring_sum(h, proper_only=False)


def csf_q_raw(h: HessenbergFunction, colors: int) -> GradedSymmetricFunction:
    """csf_q by brute enumeration of all colorings [n] -> [colors].

    Reads each m_lam coefficient off the dominant monomial (content exactly
    lam on the first len(lam) colors).  Slower than csf_q; kept as an
    independent cross-check and to demonstrate that any colors >= n give
    the same answer.
    """
    return _raw_sum(h, colors, proper_only=True)


def llt_raw(h: HessenbergFunction, colors: int) -> GradedSymmetricFunction:
    """llt by brute enumeration over all colorings [n] -> [colors]."""
    return _raw_sum(h, colors, proper_only=False)


def _raw_sum(h: HessenbergFunction, colors: int,
             proper_only: bool) -> GradedSymmetricFunction:
    from itertools import product as iproduct
    n = h.n
    check_degree(n)
    edges = _edge_list(h)
    counts: dict[int, dict[Partition, int]] = {}
    for kappa in iproduct(range(1, colors + 1), repeat=n):
        content = [0] * colors
        for c in kappa:
            content[c - 1] += 1
        used = max((i + 1 for i, c in enumerate(content) if c), default=0)
        lam = tuple(content[:used])
        if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)) or 0 in lam:
            continue   # not the dominant monomial of its orbit
        if proper_only and any(kappa[i - 1] == kappa[j - 1] for (i, j) in edges):
            continue
        a = sum(1 for (i, j) in edges if kappa[j - 1] < kappa[i - 1])
        counts.setdefault(a, {})
        counts[a][lam] = counts[a].get(lam, 0) + 1
    return GradedSymmetricFunction(
        n, {a: SymmetricFunction(n, "m", c) for a, c in counts.items()})


# ---------------------------------------------------------------------------
# Modular-law machinery

NINE_TAGS = ("<<", "<=", "<>", "=<", "==", "=>", "><", ">=", ">>")


def _cmp_symbol(x: int, y: int) -> str:
    return "<" if x < y else ("=" if x == y else ">")


def classify_coloring(triple: ModularTriple, kappa: Coloring) -> str:
    """Nine-way tag comparing kappa(d0) with kappa(d) and kappa(d+1).

    Requires a kind-C triple and a proper coloring of G_{h_minus}.
    """
    if triple.kind != "C":
        raise WrongKind("classification uses the kind-C parameters (d, d0)")
    if not is_proper(triple.h_minus, kappa):
        raise ValueError("coloring is not proper for G_{h_minus}")
    d, d0 = triple.d, triple.d0
    return (_cmp_symbol(kappa[d0 - 1], kappa[d - 1])
            + _cmp_symbol(kappa[d0 - 1], kappa[d]))


def coarsen_tag(tag: str) -> tuple[str, str]:
    """Appendix-B coarsening: '=' and '>' both count as '>='."""
    return tuple("<" if c == "<" else ">=" for c in tag)  # type: ignore[return-value]


def classify_coloring_coarse(triple: ModularTriple, kappa: Coloring) -> tuple[str, str]:
    """Four-way tag for an arbitrary coloring (kind C)."""
    if triple.kind != "C":
        raise WrongKind("classification uses the kind-C parameters (d, d0)")
    d, d0 = triple.d, triple.d0
    return ("<" if kappa[d0 - 1] < kappa[d - 1] else ">=",
            "<" if kappa[d0 - 1] < kappa[d] else ">=")


def tau_bijection(triple: ModularTriple, kappa: Coloring) -> Coloring:
    """Compose with the transposition of positions d, d+1 (an involution)."""
    if triple.kind != "C":
        raise WrongKind("tau = (d+1, d) needs the kind-C parameter d")
    d = triple.d
    out = list(kappa)
    out[d - 1], out[d] = out[d], out[d - 1]
    return tuple(out)


def asc_minus(triple: ModularTriple, kappa: Coloring) -> int:
    """Ascent statistic with respect to the h_minus edge set."""
    return asc(triple.h_minus, kappa)


# keys: nine-way tag strings, or ('<'|'>=', '<'|'>=') pairs when coarse
ClassCensus = dict


def coloring_class_sums(triple: ModularTriple, proper_only: bool,
                        coarse: bool) -> ClassCensus:
    """Content-refined q-census of (proper) colorings of G_{h_minus}.

    Maps tag -> content partition -> asc_minus value -> count.  With
    coarse=True the tags are pairs like ('<', '>='); otherwise the nine
    two-symbol strings (and proper colorings never produce '==').
    """
    if triple.kind != "C":
        raise WrongKind("the decomposition uses the kind-C parameters")
    hm = triple.h_minus
    d, d0 = triple.d, triple.d0
    edges = _edge_list(hm)
    census: ClassCensus = {}
    for lam, kappa in colorings_by_content(hm.n):
        if proper_only and any(kappa[i - 1] == kappa[j - 1] for (i, j) in edges):
            continue
        nine = (_cmp_symbol(kappa[d0 - 1], kappa[d - 1])
                + _cmp_symbol(kappa[d0 - 1], kappa[d]))
        tag = coarsen_tag(nine) if coarse else nine
        a = sum(1 for (i, j) in edges if kappa[j - 1] < kappa[i - 1])
        bucket = census.setdefault(tag, {}).setdefault(lam, {})
        bucket[a] = bucket.get(a, 0) + 1
    return census


def census_to_graded(n: int, census: ClassCensus, tags, q_shift) -> GradedSymmetricFunction:
    """Assemble sum over given tags of q^(asc_minus + q_shift(tag)) z_kappa."""
    terms: dict[int, dict[Partition, int]] = {}
    for tag in tags:
        for lam, bucket in census.get(tag, {}).items():
            for a, cnt in bucket.items():
                k = a + q_shift(tag)
                terms.setdefault(k, {})
                terms[k][lam] = terms[k].get(lam, 0) + cnt
    return GradedSymmetricFunction(
        n, {k: SymmetricFunction(n, "m", c) for k, c in terms.items()})


def check_modular_law_llt(triple: ModularTriple) -> bool:
    """LLT(h_+) - LLT(h) = q (LLT(h) - LLT(h_-)), exactly."""
    f_minus, f_mid, f_plus = (llt(triple.h_minus), llt(triple.h),
                              llt(triple.h_plus))
    return f_plus - f_mid == (f_mid - f_minus).scale_qpoly({1: 1})


def check_modular_law_csf(triple: ModularTriple) -> bool:
    """csf(h_+) - csf(h) = q (csf(h) - csf(h_-)), exactly."""
    f_minus, f_mid, f_plus = (csf_q(triple.h_minus), csf_q(triple.h),
                              csf_q(triple.h_plus))
    return f_plus - f_mid == (f_mid - f_minus).scale_qpoly({1: 1})
