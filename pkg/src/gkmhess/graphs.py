"""Labeled graphs on permutations for Hessenberg varieties and twins.

The vertices of the basic graphs are the permutations of [n] in one-line
notation; the edge {w, w(i,j)} exists whenever j < i <= h(j), where w(i,j)
is w with positions i and j exchanged (right multiplication by the
transposition).  On the X side the label is t_{w(i)} - t_{w(j)}; on the
twin Y side it is t_i - t_j.  Labels are stored with a canonical sign
(first nonzero coefficient positive), which is harmless because every
divisibility condition is sign-insensitive.

A modular triple of kind C yields five graphs: the nested triple for
h_minus, h, h_plus, a circle copy built from the h_minus edges plus the
(d+1, d0) transpositions, and the signed blow-up joining the two copies
with one 4-gon per coset {w, w tau}, tau = (d+1, d).  The blow-up is not
2-independent; its cohomology carries an extra second-order condition on
each 4-gon, recorded here as the quad list.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache

from gkmhess.hessenberg import (
    HessenbergFunction, ModularTriple, WrongKind, find_modular_triples)

GRAPH_N_CAP = 6


class SizeTooLarge(ValueError):
    """Graph construction beyond the n cap."""


# ---------------------------------------------------------------------------
# permutations, one-line notation, 1-based values

Perm = tuple[int, ...]


def identity_perm(n: int) -> Perm:
    return tuple(range(1, n + 1))


@lru_cache(maxsize=None)
def all_perms(n: int) -> tuple[Perm, ...]:
    return tuple(sorted(itertools.permutations(range(1, n + 1))))


def compose(u: Perm, v: Perm) -> Perm:
    """(u v)(k) = u(v(k))."""
    return tuple(u[v[k] - 1] for k in range(len(u)))


def inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for i, v in enumerate(w):
        out[v - 1] = i + 1
    return tuple(out)


def swap_positions(w: Perm, i: int, j: int) -> Perm:
    """Right multiplication by the transposition (i, j): swap positions."""
    out = list(w)
    out[i - 1], out[j - 1] = out[j - 1], out[i - 1]
    return tuple(out)


def length(w: Perm) -> int:
    """Number of inversions."""
    n = len(w)
    return sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])


def cycle_type(w: Perm) -> tuple[int, ...]:
    n = len(w)
    seen = [False] * n
    parts = []
    for s in range(n):
        if seen[s]:
            continue
        c = 0
        j = s
        while not seen[j]:
            seen[j] = True
            j = w[j] - 1
            c += 1
        parts.append(c)
    return tuple(sorted(parts, reverse=True))


def class_representative(lam: tuple[int, ...]) -> Perm:
    """Canonical permutation with the given cycle type (consecutive cycles)."""
    out = []
    start = 1
    for part in lam:
        block = list(range(start + 1, start + part)) + [start]
        out.extend(block)
        start += part
    return tuple(out)


def longest_element(n: int) -> Perm:
    return tuple(range(n, 0, -1))


# ---------------------------------------------------------------------------
# linear forms and vertices

@dataclass(frozen=True)
class LinearForm:
    """Integer linear form in t_1..t_n, canonical sign."""

    coeffs: tuple[int, ...]

    @classmethod
    def difference(cls, n: int, a: int, b: int) -> "LinearForm":
        """t_a - t_b, canonicalized."""
        c = [0] * n
        c[a - 1] += 1
        c[b - 1] -= 1
        return cls(tuple(c)).canonical()

    def canonical(self) -> "LinearForm":
        for c in self.coeffs:
            if c > 0:
                return self
            if c < 0:
                return LinearForm(tuple(-x for x in self.coeffs))
        raise ValueError("zero linear form cannot label an edge")

    def as_difference(self) -> tuple[int, int]:
        """Return (a, b) with the form equal to t_a - t_b, a < b."""
        pos = [i + 1 for i, c in enumerate(self.coeffs) if c == 1]
        neg = [i + 1 for i, c in enumerate(self.coeffs) if c == -1]
        if len(pos) == 1 and len(neg) == 1 and \
                sum(abs(c) for c in self.coeffs) == 2:
            return pos[0], neg[0]
        raise ValueError(f"{self} is not a difference of two variables")

    def parallel_to(self, other: "LinearForm") -> bool:
        return self.canonical() == other.canonical()

    def __str__(self) -> str:
        bits = []
        for i, c in enumerate(self.coeffs, start=1):
            if c:
                sign = "+" if c > 0 else "-"
                mag = "" if abs(c) == 1 else str(abs(c))
                bits.append(f"{sign}{mag}t{i}")
        text = "".join(bits)
        return text[1:] if text.startswith("+") else text


@dataclass(frozen=True, order=True)
class Vertex:
    """A permutation vertex, plain or the circle copy."""

    circle: bool
    perm: Perm

    def __str__(self) -> str:
        word = "".join(str(v) for v in self.perm)
        return ("°" + word) if self.circle else word


def plain(w: Perm) -> Vertex:
    return Vertex(False, w)


def circ(w: Perm) -> Vertex:
    return Vertex(True, w)


@dataclass(frozen=True)
class LabeledGraph:
    """Vertices plus edges labeled by integer linear forms.

    Edges are (vi, vj, form) with vi < vj indices into the vertex tuple.
    ``top_degree`` bounds the degree where the ordinary cohomology can be
    nonzero (the box count of the underlying Hessenberg data).
    """

    n: int
    vertices: tuple[Vertex, ...]
    edges: tuple[tuple[int, int, LinearForm], ...]
    top_degree: int

    def vertex_index(self) -> dict[Vertex, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def degree_of(self, vi: int) -> int:
        return sum(1 for (a, b, _) in self.edges if vi in (a, b))

    def edge_set(self) -> set[tuple[int, int]]:
        return {(a, b) for (a, b, _) in self.edges}

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "vertices": [str(v) for v in self.vertices],
            "edges": [[str(self.vertices[a]), str(self.vertices[b]),
                       list(f.coeffs)] for (a, b, f) in self.edges],
        }

    def content_key(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))


@dataclass(frozen=True)
class SignedBlowupGraph:
    """Blow-up of G(h_+) along G(h_-) with vertex signs and 4-gons.

    ``quads`` lists (vertex indices (w, circle w, w tau, circle w tau),
    squared-modulus form); the cohomology condition on a quad is that the
    sign-weighted vertex sum is divisible by the form squared.
    """

    base: LabeledGraph
    signs: tuple[int, ...]
    quads: tuple[tuple[tuple[int, int, int, int], LinearForm], ...]
    d: int
    d0: int
    side: str

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def vertices(self) -> tuple[Vertex, ...]:
        return self.base.vertices

    @property
    def edges(self):
        return self.base.edges

    @property
    def top_degree(self) -> int:
        return self.base.top_degree

    def vertex_index(self) -> dict[Vertex, int]:
        return self.base.vertex_index()

    def to_json(self) -> dict:
        data = self.base.to_json()
        data["side"] = self.side
        data["d"] = self.d
        data["d0"] = self.d0
        data["signs"] = list(self.signs)
        data["quads"] = [
            [[str(self.base.vertices[i]) for i in vs], list(f.coeffs)]
            for (vs, f) in self.quads]
        return data

    def content_key(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))


def _check_cap(n: int) -> None:
    if n > GRAPH_N_CAP:
        raise SizeTooLarge(f"graph construction capped at n = {GRAPH_N_CAP}")


def _label(side: str, n: int, w: Perm, i: int, j: int) -> LinearForm:
    if side == "x":
        return LinearForm.difference(n, w[i - 1], w[j - 1])
    if side == "y":
        return LinearForm.difference(n, i, j)
    raise ValueError(f"side must be 'x' or 'y', got {side!r}")


def _build_on_pairs(n: int, pairs, side: str, circle: bool,
                    top_degree: int) -> LabeledGraph:
    _check_cap(n)
    perms = all_perms(n)
    make = circ if circle else plain
    vertices = tuple(make(w) for w in perms)
    vidx = {w: i for i, w in enumerate(perms)}
    edges = []
    for w in perms:
        for (i, j) in pairs:
            v = swap_positions(w, i, j)
            if vidx[w] < vidx[v]:
                edges.append((vidx[w], vidx[v], _label(side, n, w, i, j)))
    edges.sort(key=lambda e: (e[0], e[1], e[2].coeffs))
    return LabeledGraph(n, vertices, tuple(edges), top_degree)


def hessenberg_pairs(h: HessenbergFunction) -> list[tuple[int, int]]:
    """Position pairs (i, j), j < i <= h(j)."""
    return [(i, j) for j in range(1, h.n + 1) for i in range(j + 1, h(j) + 1)]


def build_GX(h: HessenbergFunction) -> LabeledGraph:
    """GKM graph of the Hessenberg variety: labels t_{w(i)} - t_{w(j)}."""
    return _build_on_pairs(h.n, hessenberg_pairs(h), "x", False, h.dimension())


def build_GY(h: HessenbergFunction) -> LabeledGraph:
    """GKM graph of the twin: same edges, labels t_i - t_j."""
    return _build_on_pairs(h.n, hessenberg_pairs(h), "y", False, h.dimension())


def build_graph(h: HessenbergFunction, side: str) -> LabeledGraph:
    return build_GX(h) if side == "x" else build_GY(h)


def build_triple_graphs(triple: ModularTriple, side: str):
    """(G_minus, G, G_plus) for a kind-C triple; edge sets are nested."""
    if triple.kind != "C":
        raise WrongKind(
            "native construction is defined for kind C; transpose first "
            "(see kind_r_via_transpose)")
    return (build_graph(triple.h_minus, side),
            build_graph(triple.h, side),
            build_graph(triple.h_plus, side))


def kind_r_via_transpose(triple: ModularTriple) -> ModularTriple:
    """The kind-C triple of h^t matching a kind-R triple of h (d = n - d')."""
    if triple.kind != "R":
        raise WrongKind("expected a kind-R triple")
    d = triple.h.n - triple.d
    for cand in find_modular_triples(triple.h.transpose()):
        if cand.kind == "C" and cand.d == d:
            return cand
    raise WrongKind("no matching kind-C triple on the transpose")


def circle_pairs(triple: ModularTriple) -> list[tuple[int, int]]:
    hm = triple.h_minus
    return sorted(hessenberg_pairs(hm) + [(triple.d + 1, triple.d0)],
                  key=lambda p: (p[1], p[0]))


def build_circle_graph(triple: ModularTriple, side: str) -> LabeledGraph:
    """The circle copy: h_minus edges plus the (d+1, d0) transpositions."""
    if triple.kind != "C":
        raise WrongKind("circle graph is defined for kind-C triples")
    return _build_on_pairs(triple.h.n, circle_pairs(triple), side, True,
                           triple.h.dimension())


def build_blowup(triple: ModularTriple, side: str) -> SignedBlowupGraph:
    """Blow-up: plain copy of G(h), circle copy, and the joining edges."""
    if triple.kind != "C":
        raise WrongKind("blow-up is defined for kind-C triples")
    n = triple.h.n
    _check_cap(n)
    d, d0 = triple.d, triple.d0
    perms = all_perms(n)
    nperm = len(perms)
    pidx = {w: i for i, w in enumerate(perms)}
    vertices = tuple(plain(w) for w in perms) + tuple(circ(w) for w in perms)

    edges = []
    for w in perms:
        for (i, j) in hessenberg_pairs(triple.h):
            v = swap_positions(w, i, j)
            if pidx[w] < pidx[v]:
                edges.append((pidx[w], pidx[v], _label(side, n, w, i, j)))
        for (i, j) in circle_pairs(triple):
            v = swap_positions(w, i, j)
            if pidx[w] < pidx[v]:
                edges.append((nperm + pidx[w], nperm + pidx[v],
                              _label(side, n, w, i, j)))
        edges.append((pidx[w], nperm + pidx[w],
                      _label(side, n, w, d + 1, d)))
    edges.sort(key=lambda e: (e[0], e[1], e[2].coeffs))

    if side == "x":
        signs = (1,) * nperm + (-1,) * nperm
    else:
        lens = [length(w) % 2 for w in perms]
        signs = tuple(-1 if p else 1 for p in lens) \
            + tuple(1 if p else -1 for p in lens)

    quads = []
    for w in perms:
        wt = swap_positions(w, d + 1, d)
        if pidx[w] < pidx[wt]:
            vs = (pidx[w], nperm + pidx[w], pidx[wt], nperm + pidx[wt])
            quads.append((vs, _label(side, n, w, d + 1, d)))
    quads.sort(key=lambda q: q[0])

    base = LabeledGraph(n, vertices, tuple(edges), triple.h_plus.dimension())
    return SignedBlowupGraph(base, signs, tuple(quads), d, d0, side)


def augment_blowup(gtilde: SignedBlowupGraph) -> SignedBlowupGraph:
    """Add the edges {w, circle(w tau)} with label t_{w(d+1)} - t_{w(d)}.

    These are implied congruences, so the equivariant cohomology is
    unchanged; adding them twice adds nothing.
    """
    if gtilde.side != "x":
        raise WrongKind("the edge augmentation is an X-side construction")
    n = gtilde.n
    d = gtilde.d
    base = gtilde.base
    vidx = base.vertex_index()
    existing = base.edge_set()
    new_edges = list(base.edges)
    for v in base.vertices:
        if v.circle:
            continue
        w = v.perm
        a = vidx[v]
        b = vidx[circ(swap_positions(w, d + 1, d))]
        key = (min(a, b), max(a, b))
        if key not in existing:
            new_edges.append(
                (key[0], key[1], _label("x", n, w, d + 1, d)))
            existing.add(key)
    new_edges.sort(key=lambda e: (e[0], e[1], e[2].coeffs))
    new_base = LabeledGraph(n, base.vertices, tuple(new_edges), base.top_degree)
    return SignedBlowupGraph(new_base, gtilde.signs, gtilde.quads,
                             gtilde.d, gtilde.d0, gtilde.side)


def circle_isomorphism_check(triple: ModularTriple, side: str) -> bool:
    """w -> circle(w tau) is an edge bijection G -> circle copy.

    On side X the labels agree on the nose; on side Y they agree after the
    variable swap t_d <-> t_{d+1}.
    """
    if triple.kind != "C":
        raise WrongKind("kind-C triples only")
    n = triple.h.n
    d = triple.d
    g = build_graph(triple.h, side)
    cg = build_circle_graph(triple, side)
    cidx = cg.vertex_index()
    clabels = {(min(a, b), max(a, b)): f for (a, b, f) in cg.edges}
    if len(g.edges) != len(cg.edges):
        return False
    for (a, b, f) in g.edges:
        ca = cidx[circ(swap_positions(g.vertices[a].perm, d + 1, d))]
        cb = cidx[circ(swap_positions(g.vertices[b].perm, d + 1, d))]
        key = (min(ca, cb), max(ca, cb))
        if key not in clabels:
            return False
        expected = f
        if side == "y":
            coeffs = list(f.coeffs)
            coeffs[d - 1], coeffs[d] = coeffs[d], coeffs[d - 1]
            expected = LinearForm(tuple(coeffs)).canonical()
        if clabels[key] != expected:
            return False
    return True


def two_independence_check(g) -> tuple[bool, tuple | None]:
    """Pairwise linear independence of labels at every vertex.

    Returns (True, None) or (False, (vertex, edge1, edge2)) with the first
    offending vertex and edge pair in scan order.
    """
    base = g.base if isinstance(g, SignedBlowupGraph) else g
    incident: dict[int, list[tuple[int, int, LinearForm]]] = {}
    for e in base.edges:
        incident.setdefault(e[0], []).append(e)
        incident.setdefault(e[1], []).append(e)
    for vi in range(len(base.vertices)):
        edges = incident.get(vi, [])
        for x in range(len(edges)):
            for y in range(x + 1, len(edges)):
                if edges[x][2].parallel_to(edges[y][2]):
                    return False, (base.vertices[vi], edges[x], edges[y])
    return True, None
