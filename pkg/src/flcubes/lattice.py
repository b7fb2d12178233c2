"""Hasse diagrams of finite distributive lattices.

A diagram is a digraph on ranked vertices: arc (u, v) means u covers v, so
arcs point from covering element down to covered element.  Filter lattices
are built from posets; convex expansion duplicates a cutting interval.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Sequence

from .errors import CapacityError
from .poset import FilterSet, Poset

LATTICE_VERTEX_BOUND = 200_000
ISO_VERTEX_BOUND = 200


@dataclass(frozen=True)
class Interval:
    """Pair of vertex indices with bottom <= top in some host diagram."""

    bottom: int
    top: int


@dataclass(frozen=True)
class LatticeDiagram:
    """Hasse diagram of a graded lattice with unique minimum and maximum.

    ``vertices`` holds one payload per vertex: a :class:`FilterSet` for
    filter-built diagrams, or an opaque string id for expansion-built ones.
    Construction validates that each arc drops rank by exactly one, that the
    rank-0 vertex and the top-rank vertex are unique, and that every other
    vertex covers and is covered by something, which together make every
    maximal chain run from the maximum to the minimum with the same length.
    """

    vertices: tuple
    arcs: frozenset[tuple[int, int]]
    ranks: tuple[int, ...]
    n_source: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "arcs", frozenset(self.arcs))
        object.__setattr__(self, "ranks", tuple(self.ranks))
        n = len(self.vertices)
        if n == 0:
            raise ValueError("a lattice diagram needs at least one vertex")
        if len(self.ranks) != n:
            raise ValueError("ranks and vertices disagree in length")
        height = max(self.ranks)
        has_out = [False] * n
        has_in = [False] * n
        for u, v in self.arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) out of range")
            if self.ranks[u] != self.ranks[v] + 1:
                raise ValueError(f"arc ({u}, {v}) does not drop rank by one")
            has_out[u] = True
            has_in[v] = True
        if sum(1 for r in self.ranks if r == 0) != 1:
            raise ValueError("minimum is not unique")
        if sum(1 for r in self.ranks if r == height) != 1:
            raise ValueError("maximum is not unique")
        for v in range(n):
            if self.ranks[v] > 0 and not has_out[v]:
                raise ValueError(f"vertex {v} has positive rank but covers nothing")
            if self.ranks[v] < height and not has_in[v]:
                raise ValueError(f"vertex {v} below the top is covered by nothing")

    # -- derived structure --------------------------------------------------

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def height(self) -> int:
        return max(self.ranks)

    @cached_property
    def bottom(self) -> int:
        return self.ranks.index(0)

    @cached_property
    def top(self) -> int:
        return self.ranks.index(self.height)

    @cached_property
    def up_adj(self) -> tuple[tuple[int, ...], ...]:
        """Per vertex, the vertices covering it (its in-neighbours)."""
        out: list[list[int]] = [[] for _ in self.vertices]
        for u, v in sorted(self.arcs):
            out[v].append(u)
        return tuple(tuple(l) for l in out)

    @cached_property
    def down_adj(self) -> tuple[tuple[int, ...], ...]:
        """Per vertex, the vertices it covers (its out-neighbours)."""
        out: list[list[int]] = [[] for _ in self.vertices]
        for u, v in sorted(self.arcs):
            out[u].append(v)
        return tuple(tuple(l) for l in out)

    @cached_property
    def up_masks(self) -> tuple[int, ...]:
        """Bitmask of the up-set (reflexive) of each vertex, bit = vertex index."""
        order = sorted(range(len(self.vertices)), key=lambda v: -self.ranks[v])
        masks = [0] * len(self.vertices)
        for v in order:
            m = 1 << v
            for u in self.up_adj[v]:
                m |= masks[u]
            masks[v] = m
        return tuple(masks)

    @cached_property
    def down_masks(self) -> tuple[int, ...]:
        order = sorted(range(len(self.vertices)), key=lambda v: self.ranks[v])
        masks = [0] * len(self.vertices)
        for v in order:
            m = 1 << v
            for w in self.down_adj[v]:
                m |= masks[w]
            masks[v] = m
        return tuple(masks)

    def leq(self, u: int, v: int) -> bool:
        """True iff u <= v in the lattice order."""
        return bool(self.up_masks[u] >> v & 1)

    @cached_property
    def _filter_index(self) -> dict[frozenset[int], int]:
        index = {}
        for i, payload in enumerate(self.vertices):
            if isinstance(payload, FilterSet):
                index[payload.members] = i
        return index

    def find_filter(self, members) -> int:
        """Vertex index of the filter with the given members (filter-built only)."""
        if not self._filter_index:
            raise ValueError("diagram has no filter payloads")
        key = frozenset(members)
        if key not in self._filter_index:
            raise KeyError(key)
        return self._filter_index[key]

    def interval_mask(self, interval: Interval) -> int:
        """Bitmask of the vertices between the interval's bottom and top."""
        if not self.leq(interval.bottom, interval.top):
            raise ValueError("interval bottom is not below its top")
        return self.up_masks[interval.bottom] & self.down_masks[interval.top]


# -- construction ------------------------------------------------------------


def filter_lattice(poset: Poset, max_vertices: int = LATTICE_VERTEX_BOUND) -> LatticeDiagram:
    """Hasse diagram of all filters of ``poset`` ordered by reverse inclusion.

    Vertices keep the canonical filter order.  rank(Y) = |P| - |Y|, so the
    full ground set is the minimum and the empty filter the maximum; u covers
    v exactly when v's filter is u's filter plus one element.
    """
    poset.count_filters(limit=max_vertices)
    fs = poset.filters()
    index = {f.mask: i for i, f in enumerate(fs)}
    n = len(poset)
    strict_down = poset._strict_down
    arcs = []
    for i, f in enumerate(fs):
        m = f.mask
        while m:
            low = m & -m
            e = low.bit_length() - 1
            m ^= low
            # removing a minimal element of the filter yields the covering filter
            if not (strict_down[e] & f.mask):
                arcs.append((index[f.mask & ~low], i))
    ranks = tuple(n - f.size for f in fs)
    return LatticeDiagram(tuple(fs), frozenset(arcs), ranks, n_source=n)


def _diagram_from_order(payloads: Sequence, leq: Callable[[int, int], bool]) -> LatticeDiagram:
    """Build a diagram from an order oracle on 0..m-1.

    Computes the strict-order masks, rejects non-antisymmetric input, takes
    the transitive reduction, ranks vertices by longest chain from the
    minimum, and returns vertices sorted by (rank, original index).
    """
    m = len(payloads)
    below = [0] * m
    above = [0] * m
    for i in range(m):
        for j in range(m):
            if i != j and leq(j, i):
                if leq(i, j):
                    raise ValueError("order oracle is not antisymmetric")
                below[i] |= 1 << j
                above[j] |= 1 << i
    covers = []
    for i in range(m):
        rest = below[i]
        while rest:
            low = rest & -rest
            j = low.bit_length() - 1
            rest ^= low
            if not (below[i] & above[j]):
                covers.append((i, j))
    # rank by longest descending chain, filled in order of down-set size
    rank = [0] * m
    down_lists: list[list[int]] = [[] for _ in range(m)]
    for u, v in covers:
        down_lists[u].append(v)
    for i in sorted(range(m), key=lambda v: below[v].bit_count()):
        rank[i] = max((rank[j] + 1 for j in down_lists[i]), default=0)
    order = sorted(range(m), key=lambda v: (rank[v], v))
    newpos = {v: p for p, v in enumerate(order)}
    return LatticeDiagram(
        tuple(payloads[v] for v in order),
        frozenset((newpos[u], newpos[v]) for u, v in covers),
        tuple(rank[v] for v in order),
    )


def interval_diagram(host: LatticeDiagram, interval: Interval) -> LatticeDiagram:
    """The interval as a standalone diagram, re-ranked from its own bottom."""
    mask = host.interval_mask(interval)
    members = [v for v in range(len(host)) if mask >> v & 1]
    members.sort(key=lambda v: (host.ranks[v], v))
    pos = {v: i for i, v in enumerate(members)}
    base = host.ranks[interval.bottom]
    arcs = [(pos[u], pos[v]) for u, v in host.arcs if u in pos and v in pos]
    return LatticeDiagram(
        tuple(host.vertices[v] for v in members),
        frozenset(arcs),
        tuple(host.ranks[v] - base for v in members),
    )


def is_cutting(host: LatticeDiagram, interval: Interval) -> bool:
    """True iff every maximal chain of the host meets the interval.

    Maximal chains run from the unique maximum to the unique minimum, so the
    interval is a cutting exactly when no directed top-to-bottom path avoids
    its vertex set.
    """
    mask = host.interval_mask(interval)
    if mask >> host.top & 1 or mask >> host.bottom & 1:
        return True
    seen = {host.top}
    stack = [host.top]
    while stack:
        u = stack.pop()
        for v in host.down_adj[u]:
            if mask >> v & 1 or v in seen:
                continue
            if v == host.bottom:
                return False
            seen.add(v)
            stack.append(v)
    return True


def convex_expansion(host: LatticeDiagram, interval: Interval) -> LatticeDiagram:
    """Duplicate a cutting interval and interleave the copy below it.

    With K the interval and K' its copy, the expanded order is: the host
    order within the host; the K order within K'; w' <= v whenever w <= v in
    the host; and u < w' whenever u < w in the host and u is not above K's
    bottom.  The last proviso keeps originals inside the up-region of the
    interval incomparable to copies above them, which matches splitting a
    filter lattice at one poset element (copies play the filters containing
    that element).  Cover pairs are recomputed by transitive reduction.
    """
    if not is_cutting(host, interval):
        raise ValueError("interval is not a cutting; expansion would not be graded")
    mask = host.interval_mask(interval)
    members = [v for v in range(len(host)) if mask >> v & 1]
    n = len(host)
    kbottom = interval.bottom

    def leq2(i: int, j: int) -> bool:
        ic, jc = i >= n, j >= n
        u = members[i - n] if ic else i
        v = members[j - n] if jc else j
        if ic == jc:
            return host.leq(u, v)
        if ic:  # copy below original
            return host.leq(u, v)
        # original below copy: only from strictly below the interval's up-region
        return u != v and host.leq(u, v) and not host.leq(kbottom, u)

    payloads = [f"L{i}" for i in range(n)] + [f"K{i}" for i in range(len(members))]
    return _diagram_from_order(payloads, leq2)


def deletion_cutting(poset: Poset, x: int) -> tuple[LatticeDiagram, Interval]:
    """Filter lattice of P - x with the cutting whose duplication rebuilds F(P).

    The interval collects the filters W of P - x with strict-up(x) <= W <=
    P minus down(x); exactly those W give a filter of P both with and
    without x, so expanding along it reproduces the filter lattice of P.
    """
    rest = poset.remove(x)
    diagram = filter_lattice(rest)
    bottom_members = set(rest.elements) - poset.down_set(x)
    top_members = poset.up_set(x)
    return diagram, Interval(
        diagram.find_filter(bottom_members), diagram.find_filter(top_members)
    )


# -- views --------------------------------------------------------------------


def underlying_graph(diagram: LatticeDiagram) -> tuple[frozenset[int], ...]:
    """Forget arc orientation; neighbour sets indexed by vertex."""
    adj: list[set[int]] = [set() for _ in diagram.vertices]
    for u, v in diagram.arcs:
        adj[u].add(v)
        adj[v].add(u)
    return tuple(frozenset(s) for s in adj)


def to_dot(diagram: LatticeDiagram) -> str:
    """DOT text for the Hasse digraph; node labels are filter bit-strings
    for filter-built diagrams and payload ids otherwise."""
    lines = ["digraph lattice {"]
    for i, payload in enumerate(diagram.vertices):
        label = payload.bitstring() if isinstance(payload, FilterSet) else str(payload)
        lines.append(f'  n{i} [label="{label}", rank={diagram.ranks[i]}];')
    for u, v in sorted(diagram.arcs):
        lines.append(f"  n{u} -> n{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- isomorphism ---------------------------------------------------------------


def iso_check(a: LatticeDiagram, b: LatticeDiagram) -> bool:
    """Rank-preserving digraph isomorphism test for desk-scale diagrams.

    Vertices are first refined by (rank, indegree, outdegree) colours,
    iterating neighbourhood colour multisets; backtracking then matches
    colour classes.  Deterministic, and limited to 200 vertices per side.
    """
    if len(a) > ISO_VERTEX_BOUND or len(b) > ISO_VERTEX_BOUND:
        raise CapacityError(f"iso_check supports at most {ISO_VERTEX_BOUND} vertices")
    if len(a) != len(b) or len(a.arcs) != len(b.arcs):
        return False
    if sorted(a.ranks) != sorted(b.ranks):
        return False

    colours = _refine_colours(a, b)
    if colours is None:
        return False
    col_a, col_b = colours

    candidates: dict[int, list[int]] = {}
    for v in range(len(b)):
        candidates.setdefault(col_b[v], []).append(v)
    cand_of = []
    for v in range(len(a)):
        cand_of.append(candidates.get(col_a[v], []))
        if not cand_of[v]:
            return False

    order = sorted(range(len(a)), key=lambda v: (len(cand_of[v]), a.ranks[v], v))
    mapping = [-1] * len(a)
    used = [False] * len(b)
    up_a, dn_a = a.up_adj, a.down_adj
    arcs_b = b.arcs

    def consistent(v: int, w: int) -> bool:
        for u in up_a[v]:
            if mapping[u] != -1 and (mapping[u], w) not in arcs_b:
                return False
        for u in dn_a[v]:
            if mapping[u] != -1 and (w, mapping[u]) not in arcs_b:
                return False
        # arc counts per vertex already agree through the colouring, so
        # matching all mapped neighbours rules out extra arcs on the b side
        return True

    def backtrack(idx: int) -> bool:
        if idx == len(order):
            return True
        v = order[idx]
        for w in cand_of[v]:
            if not used[w] and consistent(v, w):
                mapping[v] = w
                used[w] = True
                if backtrack(idx + 1):
                    return True
                mapping[v] = -1
                used[w] = False
        return False

    if not backtrack(0):
        return False
    # mapped neighbour checks cover every arc once all vertices are assigned
    return True


def _refine_colours(a: LatticeDiagram, b: LatticeDiagram):
    """Joint colour refinement; returns per-diagram colour lists or None."""
    intern: dict = {}

    def colour_of(key) -> int:
        if key not in intern:
            intern[key] = len(intern)
        return intern[key]

    def initial(d: LatticeDiagram) -> list[int]:
        return [
            colour_of((d.ranks[v], len(d.up_adj[v]), len(d.down_adj[v])))
            for v in range(len(d))
        ]

    def step(d: LatticeDiagram, col: list[int]) -> list[int]:
        return [
            colour_of(
                (
                    col[v],
                    tuple(sorted(col[u] for u in d.up_adj[v])),
                    tuple(sorted(col[u] for u in d.down_adj[v])),
                )
            )
            for v in range(len(d))
        ]

    col_a, col_b = initial(a), initial(b)
    for _ in range(len(a.vertices)):
        if sorted(col_a) != sorted(col_b):
            return None
        next_a, next_b = step(a, col_a), step(b, col_b)
        stable = len(set(next_a)) == len(set(col_a))
        col_a, col_b = next_a, next_b
        if stable:
            break
    if sorted(col_a) != sorted(col_b):
        return None
    return col_a, col_b
