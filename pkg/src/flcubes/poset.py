"""Finite posets presented by their cover relations.

The ground set is a tuple of integer labels.  A pair ``(a, b)`` in ``covers``
means a covers b, i.e. b < a with nothing strictly between.  Subsets of the
ground set are handled internally as bitmasks, bit i standing for
``elements[i]``; that makes upward-closure tests and filter enumeration a
handful of word operations.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import CapacityError

# Filter enumeration is exhaustive; refuse ground sets above this size.
FILTER_ENUM_BOUND = 32


@dataclass(frozen=True)
class FilterSet:
    """An upward closed subset of a poset, as a bitmask over its elements."""

    mask: int
    universe: tuple[int, ...]

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    @property
    def members(self) -> frozenset[int]:
        return frozenset(e for i, e in enumerate(self.universe) if self.mask >> i & 1)

    def bitstring(self) -> str:
        """One character per element in ground-set order, '1' where present."""
        return "".join("1" if self.mask >> i & 1 else "0" for i in range(len(self.universe)))

    def __contains__(self, element: int) -> bool:
        if element not in self.universe:
            return False
        return bool(self.mask >> self.universe.index(element) & 1)

    def __len__(self) -> int:
        return self.size


@dataclass(frozen=True)
class Poset:
    """Immutable finite poset given by the transitive reduction of its order.

    The constructor validates that the cover digraph is acyclic, that every
    cover pair is irredundant (no chain of two or more covers implies it),
    and that all endpoints belong to the ground set.
    """

    elements: tuple[int, ...]
    covers: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(sorted(self.elements)))
        object.__setattr__(self, "covers", frozenset(self.covers))
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("duplicate element labels")
        names = set(self.elements)
        for a, b in self.covers:
            if a == b or a not in names or b not in names:
                raise ValueError(f"bad cover pair ({a}, {b})")
        self._strict_up  # forces cycle detection
        self._check_reduced()

    # -- derived structure ------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    @cached_property
    def _pos(self) -> dict[int, int]:
        return {e: i for i, e in enumerate(self.elements)}

    @cached_property
    def _cover_pos(self) -> tuple[tuple[int, int], ...]:
        pos = self._pos
        return tuple(sorted((pos[a], pos[b]) for a, b in self.covers))

    @cached_property
    def _strict_up(self) -> tuple[int, ...]:
        """Bitmask of strictly greater elements, per position; raises on cycles."""
        n = len(self.elements)
        parents: list[list[int]] = [[] for _ in range(n)]  # positions covering b
        children: list[list[int]] = [[] for _ in range(n)]
        for a, b in self._cover_pos:
            parents[b].append(a)
            children[a].append(b)
        # Kahn order from maximal elements downward.
        indeg = [len(parents[i]) for i in range(n)]
        queue = deque(i for i in range(n) if indeg[i] == 0)
        up = [0] * n
        seen = 0
        while queue:
            a = queue.popleft()
            seen += 1
            for b in children[a]:
                up[b] |= up[a] | (1 << a)
                indeg[b] -= 1
                if indeg[b] == 0:
                    queue.append(b)
        if seen != n:
            raise ValueError("cover relation contains a cycle")
        return tuple(up)

    @cached_property
    def _strict_down(self) -> tuple[int, ...]:
        n = len(self.elements)
        down = [0] * n
        for i in range(n):
            m = self._strict_up[i]
            while m:
                low = m & -m
                down[low.bit_length() - 1] |= 1 << i
                m ^= low
        return tuple(down)

    def _check_reduced(self) -> None:
        up = self._strict_up
        down = self._strict_down
        for a, b in self._cover_pos:
            if not (up[b] >> a) & 1:
                raise ValueError("internal order inconsistency")
            if up[b] & down[a]:
                raise ValueError(
                    f"cover pair ({self.elements[a]}, {self.elements[b]}) is implied "
                    "by a longer chain; covers must be a transitive reduction"
                )

    # -- basic queries ------------------------------------------------------

    def le(self, a: int, b: int) -> bool:
        """True iff a <= b in the order."""
        pa, pb = self._pos[a], self._pos[b]
        return pa == pb or bool(self._strict_up[pa] >> pb & 1)

    def up_set(self, x: int) -> frozenset[int]:
        """Elements strictly above x."""
        p = self._pos[x]
        return self._labels(self._strict_up[p])

    def down_set(self, x: int) -> frozenset[int]:
        """Elements strictly below x."""
        p = self._pos[x]
        return self._labels(self._strict_down[p])

    def maximal_elements(self) -> tuple[int, ...]:
        return tuple(e for i, e in enumerate(self.elements) if not self._strict_up[i])

    def minimal_elements(self) -> tuple[int, ...]:
        return tuple(e for i, e in enumerate(self.elements) if not self._strict_down[i])

    def _labels(self, mask: int) -> frozenset[int]:
        return frozenset(self.elements[i] for i in range(len(self.elements)) if mask >> i & 1)

    def _mask_of(self, subset: Iterable[int]) -> int:
        mask = 0
        for e in subset:
            if e not in self._pos:
                raise KeyError(e)
            mask |= 1 << self._pos[e]
        return mask

    # -- constructions -------------------------------------------------------

    def dual(self) -> "Poset":
        """Same ground set with every cover pair reversed."""
        return Poset(self.elements, frozenset((b, a) for a, b in self.covers))

    def remove(self, x: int) -> "Poset":
        """Induced subposet on the ground set minus x.

        New cover pairs can appear where x was an intermediate element; the
        induced order is recomputed and reduced.
        """
        if x not in self._pos:
            raise KeyError(x)
        keep = ((1 << len(self.elements)) - 1) & ~(1 << self._pos[x])
        return self._induced(keep)

    def star_remove(self, x: int) -> "Poset":
        """Induced subposet on the elements incomparable to x."""
        if x not in self._pos:
            raise KeyError(x)
        p = self._pos[x]
        drop = self._strict_up[p] | self._strict_down[p] | (1 << p)
        keep = ((1 << len(self.elements)) - 1) & ~drop
        return self._induced(keep)

    def _induced(self, keep: int) -> "Poset":
        up = self._strict_up
        down = self._strict_down
        kept = [i for i in range(len(self.elements)) if keep >> i & 1]
        covers = []
        for b in kept:
            above = up[b] & keep
            while above:
                low = above & -above
                a = low.bit_length() - 1
                above ^= low
                # cover in the induced order iff nothing kept lies strictly between
                if not (up[b] & down[a] & keep):
                    covers.append((self.elements[a], self.elements[b]))
        return Poset(tuple(self.elements[i] for i in kept), frozenset(covers))

    # -- filters ---------------------------------------------------------------

    def is_filter(self, subset) -> bool:
        """True iff the subset is upward closed."""
        if isinstance(subset, FilterSet):
            if subset.universe != self.elements:
                raise ValueError("filter belongs to a different poset")
            mask = subset.mask
        else:
            mask = self._mask_of(subset)
        m = mask
        while m:
            low = m & -m
            if self._strict_up[low.bit_length() - 1] & ~mask:
                return False
            m ^= low
        return True

    def filters(self) -> list[FilterSet]:
        """Every upward closed subset, exactly once, in canonical order.

        Enumeration recurses on a maximal element: a filter either contains
        it (recurse on the rest) or avoids its whole down-set.  The canonical
        order is by cardinality, then ascending bitmask.
        """
        if len(self.elements) > FILTER_ENUM_BOUND:
            raise CapacityError(
                f"filter enumeration supports at most {FILTER_ENUM_BOUND} elements, "
                f"got {len(self.elements)}"
            )
        full = (1 << len(self.elements)) - 1
        masks = self._filter_masks(full)
        masks.sort(key=lambda m: (m.bit_count(), m))
        return [FilterSet(m, self.elements) for m in masks]

    def _filter_masks(self, avail: int) -> list[int]:
        if not avail:
            return [0]
        x = self._pick_maximal(avail)
        bit = 1 << x
        with_x = [m | bit for m in self._filter_masks(avail & ~bit)]
        downc = self._strict_down[x] | bit
        without_x = self._filter_masks(avail & ~downc)
        return with_x + without_x

    def _pick_maximal(self, avail: int) -> int:
        m = avail
        while m:
            low = m & -m
            x = low.bit_length() - 1
            if not (self._strict_up[x] & avail):
                return x
            m ^= low
        raise AssertionError("non-empty subset without a maximal element")

    def count_filters(self, limit: int | None = None) -> int:
        """Number of filters, optionally aborting once the count exceeds limit."""
        full = (1 << len(self.elements)) - 1

        def count(avail: int) -> int:
            if not avail:
                return 1
            x = self._pick_maximal(avail)
            bit = 1 << x
            total = count(avail & ~bit)
            if limit is not None and total > limit:
                raise CapacityError(f"filter count exceeds {limit}")
            total += count(avail & ~(self._strict_down[x] | bit))
            if limit is not None and total > limit:
                raise CapacityError(f"filter count exceeds {limit}")
            return total

        return count(full)


# -- standard posets -------------------------------------------------------


def fence(n: int) -> Poset:
    """Zigzag poset on 1..n: even-indexed elements cover their odd neighbours."""
    if n < 0:
        raise ValueError("n must be non-negative")
    covers = []
    for i in range(1, n // 2 + 1):
        a = 2 * i
        covers.append((a, a - 1))
        if a + 1 <= n:
            covers.append((a, a + 1))
    return Poset(tuple(range(1, n + 1)), frozenset(covers))


def sfence(n: int) -> Poset:
    """S-fence on 1..n: a fence whose first tooth carries the 3-chain 1 > 2 > 3.

    The defining cover list is 1>2, 2>3, 4>2, 4>5 and, from the third tooth
    on, 2i > 2i-1 and 2i > 2i+1.  For small n only the pairs with both
    indices <= n are kept, which reproduces the counting polynomials of the
    family at every index.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    head = [(1, 2), (2, 3), (4, 2), (4, 5)]
    covers = [p for p in head if p[0] <= n and p[1] <= n]
    for i in range(3, n // 2 + 1):
        a = 2 * i
        covers.append((a, a - 1))
        if a + 1 <= n:
            covers.append((a, a + 1))
    return Poset(tuple(range(1, n + 1)), frozenset(covers))


# -- text format -------------------------------------------------------------


def poset_from_text(text: str) -> Poset:
    """Parse the poset text format: first line n, then lines "a b" for a > b."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty poset file")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"first line must be the element count, got {lines[0]!r}")
    if n < 0:
        raise ValueError("element count must be non-negative")
    covers = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"malformed cover line {ln!r}")
        a, b = int(parts[0]), int(parts[1])
        if not (1 <= a <= n and 1 <= b <= n):
            raise ValueError(f"cover line {ln!r} out of range 1..{n}")
        covers.append((a, b))
    return Poset(tuple(range(1, n + 1)), frozenset(covers))


def poset_to_text(poset: Poset) -> str:
    """Inverse of :func:`poset_from_text`; requires elements labelled 1..n."""
    n = len(poset)
    if poset.elements != tuple(range(1, n + 1)):
        raise ValueError("text format requires elements labelled 1..n")
    lines = [str(n)]
    lines.extend(f"{a} {b}" for a, b in sorted(poset.covers))
    return "\n".join(lines) + "\n"
