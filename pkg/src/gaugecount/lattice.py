"""Lattice graphs: sites, directed links, twists, and dangling boundaries.

A lattice is an arbitrary multigraph.  Each link is a directed pair
(tail, head); a gauge transformation acts on the link variable as
g -> g_tail . g . g_head^-1, with the head factor routed through the twist
endomorphism on twisted links.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .autos import GroupEndomorphism, constant_identity_endo, is_endomorphism
from .errors import BadDims, BadParams, NotAHomomorphism, ParseError
from .groups import FiniteGroup

Edge = tuple[int, int]


@dataclass(frozen=True)
class LatticeGraph:
    """Sites 0..site_count-1 and directed links; parallel links and loops allowed."""

    site_count: int
    edges: tuple[Edge, ...]
    name: str = field(default="", compare=False)
    # per-dimension wraparound link indices for hypercubic lattices
    wrap_edges: tuple[tuple[int, ...], ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.site_count < 0:
            raise BadParams(f"negative site count {self.site_count}")
        for i, (t, h) in enumerate(self.edges):
            if not (0 <= t < self.site_count and 0 <= h < self.site_count):
                raise BadParams(f"link {i} endpoint out of range: ({t}, {h})")

    @property
    def edge_count(self) -> int:
        return len(self.edges)


def lattice_chain(n_sites: int, periodic: bool = False) -> LatticeGraph:
    """A 1-dim chain; the periodic variant appends the wraparound link."""
    return lattice_hypercubic((n_sites,), (periodic,))


def lattice_hypercubic(dims: Sequence[int],
                       periodic: Sequence[bool] | bool = True) -> LatticeGraph:
    """Row-major hypercubic lattice with per-dimension periodicity.

    Periodic dimensions of extent 1 contribute self-loop links, keeping the
    link count at d*V for a fully periodic lattice.
    """
    dims = tuple(dims)
    if not dims or any(d < 1 for d in dims):
        raise BadDims(f"dimensions must be positive, got {dims}")
    d = len(dims)
    if isinstance(periodic, bool):
        periodic = (periodic,) * d
    periodic = tuple(periodic)
    if len(periodic) != d:
        raise BadDims(f"{len(periodic)} periodicity flags for {d} dimensions")
    volume = 1
    for L in dims:
        volume *= L
    strides = [1] * d
    for k in range(d - 2, -1, -1):
        strides[k] = strides[k + 1] * dims[k + 1]

    edges: list[Edge] = []
    wraps: list[list[int]] = [[] for _ in range(d)]
    for site in range(volume):
        rem = site
        coord = []
        for k in range(d):
            coord.append(rem // strides[k])
            rem %= strides[k]
        for k in range(d):
            if coord[k] + 1 < dims[k]:
                edges.append((site, site + strides[k]))
            elif periodic[k]:
                wraps[k].append(len(edges))
                edges.append((site, site - coord[k] * strides[k]))
    name = "x".join(map(str, dims))
    tags = "".join("p" if p else "o" for p in periodic)
    return LatticeGraph(volume, tuple(edges), name=f"hyper{name}_{tags}",
                        wrap_edges=tuple(tuple(w) for w in wraps))


def connected_components(site_count: int, edges: Iterable[Edge]) -> tuple[tuple[int, ...], ...]:
    """Components of the underlying undirected graph, each sorted."""
    parent = list(range(site_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for t, h in edges:
        rt, rh = find(t), find(h)
        if rt != rh:
            parent[rh] = rt
    buckets: dict[int, list[int]] = {}
    for s in range(site_count):
        buckets.setdefault(find(s), []).append(s)
    return tuple(tuple(sorted(v)) for _, v in sorted(buckets.items()))


def is_connected(L: LatticeGraph) -> bool:
    return L.site_count <= 1 or len(connected_components(L.site_count, L.edges)) == 1


# ---------------------------------------------------------------------------
# twists

@dataclass(frozen=True)
class TwistSpec:
    """An endomorphism applied to the head factor of the listed links."""

    endo: GroupEndomorphism
    edges: frozenset[int]


def make_twist(L: LatticeGraph, phi: GroupEndomorphism,
               edges: Iterable[int]) -> TwistSpec:
    idx = frozenset(edges)
    for i in idx:
        if not 0 <= i < L.edge_count:
            raise BadParams(f"twisted link index {i} out of range")
    if not is_endomorphism(phi.group, phi.image):
        raise NotAHomomorphism("twist map is not an endomorphism")
    return TwistSpec(phi, idx)


def twist_on_wrap_edges(L: LatticeGraph, phi: GroupEndomorphism,
                        dim: int) -> TwistSpec:
    """Twist every wraparound link of one hypercubic dimension."""
    if not L.wrap_edges or not 0 <= dim < len(L.wrap_edges):
        raise BadParams(f"lattice carries no wraparound data for dimension {dim}")
    return make_twist(L, phi, L.wrap_edges[dim])


def dangling_boundary_extension(L: LatticeGraph, attach_sites: Sequence[int],
                                G: FiniteGroup) -> tuple[LatticeGraph, TwistSpec]:
    """Attach each listed site to one shared virtual site by a sink link.

    Sink links carry the constant-identity twist, which freezes their tail
    transformations and leaves the virtual head site unconstrained.  An empty
    attach list returns the lattice unchanged with an empty twist.
    """
    phi = constant_identity_endo(G)
    if not attach_sites:
        return L, TwistSpec(phi, frozenset())
    for s in attach_sites:
        if not 0 <= s < L.site_count:
            raise BadParams(f"attach site {s} out of range")
    virtual = L.site_count
    new_edges = L.edges + tuple((s, virtual) for s in attach_sites)
    L2 = LatticeGraph(L.site_count + 1, new_edges,
                      name=(L.name + "_dangling") if L.name else "dangling",
                      wrap_edges=L.wrap_edges)
    twisted = frozenset(range(L.edge_count, len(new_edges)))
    return L2, TwistSpec(phi, twisted)


# ---------------------------------------------------------------------------
# text format

def emit_edge_list(L: LatticeGraph, twisted: frozenset[int] = frozenset()) -> str:
    lines = [f"lattice {L.site_count}"]
    for i, (t, h) in enumerate(L.edges):
        lines.append(f"{t} {h} twisted" if i in twisted else f"{t} {h}")
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> tuple[LatticeGraph, frozenset[int]]:
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise ParseError("empty lattice file", 1)
    head = lines[0].split()
    if len(head) != 2 or head[0] != "lattice":
        raise ParseError("expected 'lattice <site_count>'", 1)
    try:
        n = int(head[1])
    except ValueError:
        raise ParseError("non-integer site count", 1)
    if n < 0:
        raise ParseError(f"negative site count {n}", 1)
    edges: list[Edge] = []
    twisted: set[int] = set()
    for ln_no, ln in enumerate(lines[1:], start=2):
        if not ln.strip():
            continue
        parts = ln.split()
        if len(parts) not in (2, 3) or (len(parts) == 3 and parts[2] != "twisted"):
            raise ParseError("expected '<tail> <head> [twisted]'", ln_no)
        try:
            t, h = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("non-integer link endpoint", ln_no)
        if not (0 <= t < n and 0 <= h < n):
            raise ParseError(f"link endpoint out of range: ({t}, {h})", ln_no)
        if len(parts) == 3:
            twisted.add(len(edges))
        edges.append((t, h))
    return LatticeGraph(n, tuple(edges)), frozenset(twisted)
