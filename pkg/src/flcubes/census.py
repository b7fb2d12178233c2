"""Definition-level censuses over a Hasse diagram.

Everything here is counted directly from the diagram: vertices per rank,
induced hypercubes as Boolean intervals, maximal cubes by containment,
and vertices per degree, indegree and outdegree.  No closed form or
recurrence is consulted, so these results can arbitrate them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import CapacityError
from .lattice import LatticeDiagram
from .polynomials import IntPoly

CENSUS_VERTEX_BOUND = 200_000
GENERIC_GRAPH_BOUND = 30
GENERIC_DIM_BOUND = 3


@dataclass(frozen=True)
class CubeInterval:
    """A lattice interval isomorphic to the Boolean lattice of rank ``dim``."""

    bottom: int
    top: int
    dim: int


class _CubeScan:
    """Shared state for cube enumeration over one diagram.

    Vertices are re-indexed by ascending rank so that the least element of
    any up-set intersection is its lowest set bit; joins then cost one mask
    AND plus a least-upper-bound verification.
    """

    def __init__(self, diagram: LatticeDiagram):
        if len(diagram) > CENSUS_VERTEX_BOUND:
            raise CapacityError(
                f"cube census supports at most {CENSUS_VERTEX_BOUND} vertices"
            )
        self.diagram = diagram
        n = len(diagram)
        self.order = sorted(range(n), key=lambda v: (diagram.ranks[v], v))
        pos = {v: i for i, v in enumerate(self.order)}
        self.pos = pos
        self.upm = [0] * n  # indexed by vertex, bits in pos space
        for v in sorted(range(n), key=lambda v: -diagram.ranks[v]):
            m = 1 << pos[v]
            for u in diagram.up_adj[v]:
                m |= self.upm[u]
            self.upm[v] = m
        self.dnm = [0] * n
        for v in sorted(range(n), key=lambda v: diagram.ranks[v]):
            m = 1 << pos[v]
            for w in diagram.down_adj[v]:
                m |= self.dnm[w]
            self.dnm[v] = m
        self.cubes = self._enumerate()

    def join(self, u: int, v: int) -> int:
        common = self.upm[u] & self.upm[v]
        low = common & -common
        j = self.order[low.bit_length() - 1]
        if common & ~self.upm[j]:
            raise ValueError("join is not unique; diagram is not a lattice")
        return j

    def _enumerate(self) -> dict[tuple[int, int], int]:
        diagram = self.diagram
        ranks = diagram.ranks
        cubes: dict[tuple[int, int], int] = {}
        for a in range(len(diagram)):
            cubes[(a, a)] = 0
            ups = diagram.up_adj[a]
            joins = {0: a}
            for smask in range(1, 1 << len(ups)):
                low = smask & -smask
                s = ups[low.bit_length() - 1]
                j = self.join(joins[smask ^ low], s)
                joins[smask] = j
                k = smask.bit_count()
                if ranks[j] - ranks[a] != k:
                    continue
                interval = self.upm[a] & self.dnm[j]
                if interval.bit_count() != 1 << k:
                    continue
                key = (a, j)
                if key in cubes:
                    raise ValueError("two cover subsets span one Boolean interval")
                cubes[key] = k
        return cubes

    def is_contained(self, bottom: int, top: int, dim: int) -> bool:
        """True iff a strictly larger enumerated cube contains this one.

        A containing cube one dimension up either keeps the bottom and joins
        in one more cover of it, or keeps the top over a vertex the bottom
        covers; any bigger container implies one of those.
        """
        diagram = self.diagram
        for s in diagram.up_adj[bottom]:
            if not diagram.leq(s, top):
                if self.cubes.get((bottom, self.join(top, s))) == dim + 1:
                    return True
        for b in diagram.down_adj[bottom]:
            if self.cubes.get((b, top)) == dim + 1:
                return True
        return False


@lru_cache(maxsize=64)
def _scan(diagram: LatticeDiagram) -> _CubeScan:
    return _CubeScan(diagram)


# -- polynomial censuses ----------------------------------------------------


def rank_polynomial(diagram: LatticeDiagram) -> IntPoly:
    """Coefficient k counts the vertices of rank k."""
    counts = [0] * (diagram.height + 1)
    for r in diagram.ranks:
        counts[r] += 1
    return IntPoly(counts)


def enumerate_cubes(diagram: LatticeDiagram) -> list[CubeInterval]:
    """All Boolean intervals, each exactly once, dimension 0 included.

    A cube is a pair (bottom, S) with S a set of covers of the bottom whose
    join closes a 2^|S|-element interval of rank span |S|.  The bottom and
    its atom set are recoverable from the interval, so each induced cube is
    produced once.
    """
    scan = _scan(diagram)
    return sorted(
        (CubeInterval(a, j, k) for (a, j), k in scan.cubes.items()),
        key=lambda c: (c.dim, c.bottom, c.top),
    )


def cube_polynomial(diagram: LatticeDiagram) -> IntPoly:
    """Coefficient k counts the induced k-dimensional hypercubes."""
    scan = _scan(diagram)
    counts: list[int] = []
    for k in scan.cubes.values():
        while len(counts) <= k:
            counts.append(0)
        counts[k] += 1
    return IntPoly(counts)


def maximal_cube_polynomial(diagram: LatticeDiagram) -> IntPoly:
    """Coefficient k counts cubes contained in no other cube's vertex set."""
    scan = _scan(diagram)
    counts: list[int] = []
    for (a, j), k in scan.cubes.items():
        if scan.is_contained(a, j, k):
            continue
        while len(counts) <= k:
            counts.append(0)
        counts[k] += 1
    return IntPoly(counts)


def degree_polynomial(diagram: LatticeDiagram) -> IntPoly:
    """Coefficient k counts vertices of undirected degree k."""
    counts: list[int] = []
    for v in range(len(diagram)):
        d = len(diagram.up_adj[v]) + len(diagram.down_adj[v])
        while len(counts) <= d:
            counts.append(0)
        counts[d] += 1
    return IntPoly(counts)


def indegree_polynomial(diagram: LatticeDiagram) -> IntPoly:
    """Coefficient k counts vertices covered by exactly k elements."""
    counts: list[int] = []
    for v in range(len(diagram)):
        d = len(diagram.up_adj[v])
        while len(counts) <= d:
            counts.append(0)
        counts[d] += 1
    return IntPoly(counts)


def outdegree_polynomial(diagram: LatticeDiagram) -> IntPoly:
    """Coefficient k counts vertices covering exactly k elements."""
    counts: list[int] = []
    for v in range(len(diagram)):
        d = len(diagram.down_adj[v])
        while len(counts) <= d:
            counts.append(0)
        counts[d] += 1
    return IntPoly(counts)


# -- independent oracle -------------------------------------------------------


def generic_cube_count(graph, k: int) -> int:
    """Count induced subgraphs isomorphic to the k-dimensional hypercube.

    Plain subset search over an undirected graph given as neighbour sets.
    Deliberately ignorant of lattice structure so it can arbitrate the
    interval-based enumeration; bounded to 30 vertices and k <= 3.
    """
    n = len(graph)
    if n > GENERIC_GRAPH_BOUND:
        raise CapacityError(f"generic cube count supports at most {GENERIC_GRAPH_BOUND} vertices")
    if k < 0 or k > GENERIC_DIM_BOUND:
        raise CapacityError(f"generic cube count supports dimensions 0..{GENERIC_DIM_BOUND}")
    if k == 0:
        return n
    size = 1 << k
    if n < size:
        return 0
    rows = [0] * n
    for i in range(n):
        for j in graph[i]:
            rows[i] |= 1 << j
    target = [
        [j for j in range(size) if ((i ^ j).bit_count()) == 1] for i in range(size)
    ]
    count = 0
    for sub in combinations(range(n), size):
        smask = 0
        for v in sub:
            smask |= 1 << v
        if any((rows[v] & smask).bit_count() != k for v in sub):
            continue
        if _embeds_cube(sub, rows, target):
            count += 1
    return count


def _embeds_cube(sub, rows, target) -> bool:
    size = len(target)
    order = sorted(range(size), key=lambda t: (t.bit_count(), t))
    mapping = [-1] * size
    used = [False] * len(sub)

    def ok(t: int, v: int) -> bool:
        for t2 in range(size):
            w = mapping[t2]
            if w == -1:
                continue
            adjacent = t2 in target[t]
            if adjacent != bool(rows[v] >> w & 1):
                return False
        return True

    def backtrack(idx: int) -> bool:
        if idx == size:
            return True
        t = order[idx]
        for i, v in enumerate(sub):
            if not used[i] and ok(t, v):
                mapping[t] = v
                used[i] = True
                if backtrack(idx + 1):
                    return True
                mapping[t] = -1
                used[i] = False
        return False

    return backtrack(0)
