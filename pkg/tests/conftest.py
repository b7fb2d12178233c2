import sys
from pathlib import Path

from hypothesis import strategies as st

from flcubes.poset import Poset

sys.path.insert(0, str(Path(__file__).parent))


def reduced_poset(n: int, relations: set[tuple[int, int]]) -> Poset:
    """Build a poset from arbitrary (a, b) pairs read as a > b with a > b
    numerically, so the digraph is acyclic by construction."""
    labels = tuple(range(1, n + 1))
    above = {e: set() for e in labels}  # strictly greater elements
    for a, b in sorted(relations, key=lambda p: p[0]):
        if a > b:
            above[b].add(a)
            above[b] |= above[a]
    changed = True
    while changed:
        changed = False
        for e in labels:
            extra = set()
            for f in above[e]:
                extra |= above[f]
            if not extra <= above[e]:
                above[e] |= extra
                changed = True
    covers = set()
    for b in labels:
        for a in above[b]:
            if not any(a in above[c] for c in above[b] if c != a):
                covers.add((a, b))
    return Poset(labels, frozenset(covers))


@st.composite
def posets(draw, max_size: int = 6):
    n = draw(st.integers(min_value=0, max_value=max_size))
    if n < 2:
        return reduced_poset(n, set())
    pairs = draw(
        st.sets(
            st.tuples(st.integers(2, n), st.integers(1, n - 1)).filter(lambda p: p[0] > p[1]),
            max_size=2 * n,
        )
    )
    return reduced_poset(n, pairs)
