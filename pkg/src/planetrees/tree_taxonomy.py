"""Tree recognizers and witnesses: paths, stars, double stars, S_k(m,n),
caterpillars, P4-symmetric trees, w-caterpillars, and symmetric trees.

All classification is purely combinatorial; geometry enters only through
is_plane / boundary_edges / radial_edges. Functions accepting a tree take
either a GeomTree or a bare iterable of index pairs wherever geometry is
irrelevant, because the wheel builder works on abstract trees.

The P4-symmetric search is exhaustive over ordered 4-paths u1u2u3u4 with
u1 pendant: deleting the three path edges must leave u1 and u_i isolated
(i in {2,4}) plus two non-trivial components A (containing u3) and B with
a rooted isomorphism phi: A -> B, phi(u3) = u_{6-i}. i=4 gives Type-1,
i=2 gives Type-2; on 4-vertex trees both "components" are trivial and the
witness is reported untyped. A w-caterpillar additionally needs T, or
T minus the witness' u1, to be a caterpillar.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .errors import InvalidParameter, NotATree, NotWheelConfig
from .geom_core import (GeomEdge, PointSet, convex_hull, edge, segments_cross,
                        wheel_crossing, wheel_n)


@dataclass(frozen=True)
class GeomTree:
    """Edge set drawn on a point set; edges are normalized sorted pairs."""

    ps: PointSet
    edges: tuple[GeomEdge, ...]

    def __post_init__(self):
        norm = tuple(sorted(edge(a, b) for a, b in self.edges))
        object.__setattr__(self, "edges", norm)


TreeLike = Union[GeomTree, Iterable[tuple[int, int]]]


@dataclass(frozen=True)
class P4Witness:
    """4-path witnessing P4-symmetry.

    type is 1, 2, or None (untyped, only on 4-vertex trees). iso_witness
    maps the component of u3 onto its partner; the partner of u3 itself is
    u2 for Type-1 and u4 for Type-2. deleted_vertex records which vertex
    the caterpillar clause removed (always the 4-path's u1 here).
    """

    type: int | None
    path: tuple[int, int, int, int]
    iso_witness: dict[int, int]

    @property
    def deleted_vertex(self) -> int:
        return self.path[0]


@dataclass(frozen=True)
class SymmetricWitness:
    edge: GeomEdge
    iso_witness: dict[int, int]


@dataclass(frozen=True)
class TreeClassReport:
    is_path: bool
    is_star: bool
    double_star: tuple[int, int] | None
    s_k: tuple[int, int, int] | None
    caterpillar: bool
    p4_symmetric: P4Witness | None
    w_caterpillar: bool
    symmetric: SymmetricWitness | None


# ---------------------------------------------------------------------------
# plumbing on abstract edge lists

def as_edges(t: TreeLike) -> tuple[GeomEdge, ...]:
    if isinstance(t, GeomTree):
        return t.edges
    return tuple(sorted(edge(a, b) for a, b in t))


def adjacency(edges: Iterable[GeomEdge]) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {}
    for a, b in edges:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    return adj


def is_tree_edges(edges: tuple[GeomEdge, ...]) -> bool:
    """Connected and acyclic on the vertex set spanned by the edges."""
    if not edges:
        return False
    adj = adjacency(edges)
    if len(edges) != len(adj) - 1 or len(set(edges)) != len(edges):
        return False
    seen = set()
    start = next(iter(adj))
    stack = [start]
    seen.add(start)
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(adj)


def _component(adj, start, skip: frozenset[frozenset[int]]) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u in seen or frozenset((u, v)) in skip:
                continue
            seen.add(u)
            stack.append(u)
    return seen


def rooted_canon(adj, root, skip: frozenset[frozenset[int]] = frozenset()) -> str:
    """AHU canonical string of the tree rooted at root."""

    def rec(v, parent) -> str:
        subs = sorted(rec(u, v) for u in adj[v]
                      if u != parent and frozenset((u, v)) not in skip)
        return "(" + "".join(subs) + ")"

    return rec(root, None)


def tree_canon(t: TreeLike) -> str:
    """Unrooted AHU canonical form: root at the centroid (min over the two)."""
    edges = as_edges(t)
    adj = adjacency(edges)
    if not adj:
        raise NotATree("empty edge set")
    verts = list(adj)
    order: list[int] = []
    parent: dict[int, int | None] = {verts[0]: None}
    stack = [verts[0]]
    while stack:
        v = stack.pop()
        order.append(v)
        for u in adj[v]:
            if u not in parent:
                parent[u] = v
                stack.append(u)
    size = {}
    for v in reversed(order):
        size[v] = 1 + sum(size[u] for u in adj[v] if parent.get(u) == v)
    n = len(verts)
    centroids = [v for v in verts
                 if max([n - size[v]] + [size[u] for u in adj[v] if parent.get(u) == v]) <= n // 2]
    return min(rooted_canon(adj, c) for c in centroids)


def rooted_iso_map(adj_a, root_a, adj_b, root_b,
                   skip: frozenset[frozenset[int]] = frozenset()) -> dict[int, int] | None:
    """Explicit vertex map realizing a rooted isomorphism, or None."""

    def rec(a, pa, b, pb) -> dict[int, int] | None:
        kids_a = sorted(
            ((rooted_canon(adj_a, u, skip | {frozenset((a, u))}), u)
             for u in adj_a[a] if u != pa and frozenset((a, u)) not in skip))
        kids_b = sorted(
            ((rooted_canon(adj_b, u, skip | {frozenset((b, u))}), u)
             for u in adj_b[b] if u != pb and frozenset((b, u)) not in skip))
        if [c for c, _ in kids_a] != [c for c, _ in kids_b]:
            return None
        out = {a: b}
        for (_, ua), (_, ub) in zip(kids_a, kids_b):
            sub = rec(ua, a, ub, b)
            if sub is None:
                return None
            out.update(sub)
        return out

    return rec(root_a, None, root_b, None)


def is_caterpillar_edges(edges: Iterable[GeomEdge], drop: int | None = None) -> bool:
    """Caterpillar test; drop removes one vertex (and its edges) first."""
    adj = adjacency(e for e in edges if drop not in e)
    if len(adj) <= 2:
        return True
    inner = {v for v, nb in adj.items() if len(nb) > 1}
    # removing all leaves of a tree leaves a subtree; a path iff max degree 2
    return all(sum(1 for u in adj[v] if u in inner) <= 2 for v in inner)


def p4_witness_paths(t: TreeLike) -> list[tuple[int | None, tuple[int, int, int, int], set[int]]]:
    """All (type, 4-path, component-of-u3) triples satisfying the definition."""
    edges = as_edges(t)
    adj = adjacency(edges)
    nverts = len(adj)
    found = []
    for u1 in sorted(adj):
        if len(adj[u1]) != 1:
            continue
        (u2,) = adj[u1]
        for u3 in sorted(adj[u2]):
            if u3 == u1:
                continue
            for u4 in sorted(adj[u3]):
                if u4 in (u1, u2):
                    continue
                skip = frozenset(frozenset(e) for e in ((u1, u2), (u2, u3), (u3, u4)))
                c2 = _component(adj, u2, skip)
                c3 = _component(adj, u3, skip)
                c4 = _component(adj, u4, skip)
                if nverts == 4:
                    if len(c2) == len(c3) == len(c4) == 1:
                        found.append((None, (u1, u2, u3, u4), c3))
                    continue
                if len(c4) == 1 and len(c2) > 1 and len(c3) > 1 and len(c2) == len(c3):
                    if rooted_canon(adj, u3, skip) == rooted_canon(adj, u2, skip):
                        found.append((1, (u1, u2, u3, u4), c3))
                if len(c2) == 1 and len(c4) > 1 and len(c3) > 1 and len(c4) == len(c3):
                    if rooted_canon(adj, u3, skip) == rooted_canon(adj, u4, skip):
                        found.append((2, (u1, u2, u3, u4), c3))
    return found


def preferred_p4_witness(t: TreeLike) -> P4Witness | None:
    """The witness the wheel builder uses.

    Preference: caterpillar-compatible Type-1, then compatible Type-2,
    then any Type-1, then any Type-2; ties broken by the 4-path tuple.
    Compatibility means T, or T minus the witness' u1, is a caterpillar,
    i.e. the witness also certifies the w-caterpillar property.
    """
    cands = p4_witness_paths(t)
    if not cands:
        return None
    edges = as_edges(t)
    whole = is_caterpillar_edges(edges)

    def compatible(c) -> bool:
        return whole or is_caterpillar_edges(edges, drop=c[1][0])

    def rank(c):
        return (not compatible(c), 1 if c[0] in (1, None) else 2, c[1])

    typ, path, comp_a = min(cands, key=rank)
    adj = adjacency(edges)
    u1, u2, u3, u4 = path
    skip = frozenset(frozenset(e) for e in ((u1, u2), (u2, u3), (u3, u4)))
    partner = u2 if typ in (1, None) else u4
    iso = rooted_iso_map(adj, u3, adj, partner, skip)
    assert iso is not None  # canon equality guaranteed it
    return P4Witness(type=typ, path=path, iso_witness=iso)


def is_w_caterpillar(t: TreeLike) -> bool:
    cands = p4_witness_paths(t)
    if not cands:
        return False
    edges = as_edges(t)
    if is_caterpillar_edges(edges):
        return True
    return any(is_caterpillar_edges(edges, drop=c[1][0]) for c in cands)


def _spine(adj) -> list[int] | None:
    """Vertices of T minus its leaves as a path, or None if not a path."""
    inner = sorted(v for v, nb in adj.items() if len(nb) > 1)
    if not inner:
        return []
    deg_in = {v: [u for u in adj[v] if u in set(inner)] for v in inner}
    if any(len(nb) > 2 for nb in deg_in.values()):
        return None
    ends = [v for v in inner if len(deg_in[v]) <= 1]
    if len(inner) == 1:
        return inner
    seq = [min(ends)]
    prev = None
    while True:
        nxt = [u for u in deg_in[seq[-1]] if u != prev]
        if not nxt:
            return seq
        prev = seq[-1]
        seq.append(nxt[0])


def _symmetric_witness(edges: tuple[GeomEdge, ...]) -> SymmetricWitness | None:
    adj = adjacency(edges)
    for v, w in edges:
        skip = frozenset({frozenset((v, w))})
        side_v = _component(adj, v, skip)
        side_w = _component(adj, w, skip)
        if len(side_v) != len(side_w):
            continue
        iso = rooted_iso_map(adj, v, adj, w, skip)
        if iso is not None:
            return SymmetricWitness(edge=edge(v, w), iso_witness=iso)
    return None


# ---------------------------------------------------------------------------
# public operations

def is_spanning_tree(t: GeomTree) -> bool:
    """Connected, acyclic, and covering every point of t.ps."""
    npts = len(t.ps)
    if len(t.edges) != npts - 1:
        return False
    parent = list(range(npts))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in t.edges:
        if not (0 <= a < npts and 0 <= b < npts):
            return False
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def is_plane(t: GeomTree) -> bool:
    """No two edges cross; exact index arithmetic on wheel configurations."""
    n = wheel_n(t.ps)
    es = t.edges
    for i in range(len(es)):
        for j in range(i + 1, len(es)):
            if n is not None:
                if wheel_crossing(es[i], es[j], n):
                    return False
            elif segments_cross(es[i], es[j], t.ps):
                return False
    return True


def classify(t: TreeLike) -> TreeClassReport:
    """Full recognizer report; raises NotATree on non-trees."""
    edges = as_edges(t)
    if not is_tree_edges(edges):
        raise NotATree(f"{len(edges)} edges do not form a tree")
    adj = adjacency(edges)
    nverts = len(adj)
    degs = {v: len(nb) for v, nb in adj.items()}

    is_path = all(d <= 2 for d in degs.values())
    is_star = nverts >= 3 and sorted(degs.values())[-1] == nverts - 1

    spine = _spine(adj)
    caterpillar = spine is not None

    s_k = None
    double_star = None
    if spine is not None and len(spine) >= 2:
        interior_clean = all(degs[v] == 2 for v in spine[1:-1])
        if interior_clean:
            m, n = sorted((degs[spine[0]] - 1, degs[spine[-1]] - 1))
            s_k = (len(spine) - 2, m, n)
            if len(spine) == 2:
                double_star = (m, n)

    p4 = preferred_p4_witness(edges)
    w_cat = is_w_caterpillar(edges) if p4 is not None else False
    sym = _symmetric_witness(edges)

    return TreeClassReport(
        is_path=is_path,
        is_star=is_star,
        double_star=double_star,
        s_k=s_k,
        caterpillar=caterpillar,
        p4_symmetric=p4,
        w_caterpillar=w_cat,
        symmetric=sym,
    )


def boundary_edges(t: GeomTree) -> list[GeomEdge]:
    """Edges of t joining consecutive hull vertices of t's point set."""
    n = wheel_n(t.ps)
    if n is not None:
        m = 2 * n - 1
        return [e for e in t.edges
                if e[1] < m and (e[1] - e[0]) % m in (1, m - 1)]
    hull = convex_hull(t.ps)
    hull_pairs = {edge(hull[i], hull[(i + 1) % len(hull)]) for i in range(len(hull))}
    return [e for e in t.edges if e in hull_pairs]


def radial_edges(t: GeomTree) -> list[GeomEdge]:
    """Center-incident edges, ordered by circle endpoint index."""
    n = wheel_n(t.ps)
    if n is None:
        raise NotWheelConfig(f"config tag {t.ps.config_tag!r} is not a wheel")
    center = 2 * n - 1
    return sorted((e for e in t.edges if center in e), key=lambda e: e[0])


def unique_path(t: GeomTree, u: int, v: int) -> list[int]:
    """Vertex sequence of the unique u-v path in the tree."""
    edges = t.edges
    if not is_tree_edges(edges):
        raise NotATree("edge set is not a tree")
    adj = adjacency(edges)
    if u not in adj or v not in adj:
        raise InvalidParameter(f"vertex {u if u not in adj else v} not in tree")
    parent: dict[int, int | None] = {u: None}
    stack = [u]
    while stack:
        x = stack.pop()
        if x == v:
            break
        for y in adj[x]:
            if y not in parent:
                parent[y] = x
                stack.append(y)
    path = [v]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])  # type: ignore[arg-type]
    return path[::-1]
