"""Enumeration and counting of k-colorings.

A k-coloring is a partition of the vertex set into at most k nonempty
anticliques; partitions are represented canonically as restricted-growth
strings over the fixed vertex order, so distinct Coloring values are
exactly distinct unordered partitions.  The empty graph has exactly one
coloring (the empty partition) for every k.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError, ResourceLimitError

DEFAULT_CHROMATIC_MAX_N = 32


@dataclass(frozen=True)
class Coloring:
    """Class assignment as a restricted-growth string (class indices appear
    in first-use order)."""
    rgs: tuple

    @property
    def num_classes(self):
        return max(self.rgs) + 1 if self.rgs else 0

    def classes(self):
        """Vertex classes, ordered by smallest member (= first-use order)."""
        out = [[] for _ in range(self.num_classes)]
        for v, c in enumerate(self.rgs):
            out[c].append(v)
        return out

    def class_sets(self):
        return [frozenset(c) for c in self.classes()]

    def check_anticliques(self, g):
        for cls in self.classes():
            for a in range(len(cls)):
                for b in range(a + 1, len(cls)):
                    assert not g.has_edge(cls[a], cls[b]), \
                        f"class {cls} is not an anticlique"
        return True

    def to_text(self):
        """One line per class, vertices space-separated, classes sorted by
        smallest member."""
        return "\n".join(" ".join(str(v) for v in cls)
                         for cls in self.classes()) + "\n"


def iter_colorings(g, k):
    """All k-colorings in lexicographic restricted-growth order.

    Backtracking assigns each vertex a class index at most
    min(k - 1, 1 + max index used so far), pruning on anticliqueness.
    """
    if k < 0:
        raise PreconditionError("need k >= 0")
    n, rows = g.n, g.rows
    if n == 0:
        yield Coloring(())
        return
    if k == 0:
        return
    assign = [0] * n
    class_masks = [0] * k

    def bt(v, used):
        if v == n:
            yield Coloring(tuple(assign))
            return
        limit = min(used + 1, k)
        bit = 1 << v
        for c in range(limit):
            if rows[v] & class_masks[c]:
                continue
            assign[v] = c
            class_masks[c] |= bit
            yield from bt(v + 1, max(used, c + 1))
            class_masks[c] &= ~bit

    yield from bt(0, 0)


def enumerate_colorings(g, k, limit=None):
    """Up to `limit` distinct colorings in deterministic order; exhaustive
    when fewer exist."""
    if limit is not None and limit < 1:
        raise PreconditionError("need limit >= 1")
    out = []
    for col in iter_colorings(g, k):
        out.append(col)
        if limit is not None and len(out) >= limit:
            break
    return out


def count_colorings(g, k, cap):
    """Number of distinct k-colorings, saturating at `cap`."""
    if cap < 1:
        raise PreconditionError("need cap >= 1")
    n, rows = g.n, g.rows
    if n == 0:
        return 1
    if k <= 0:
        return 0
    class_masks = [0] * k
    count = 0

    def bt(v, used):
        nonlocal count
        if v == n:
            count += 1
            return count >= cap
        limit = min(used + 1, k)
        bit = 1 << v
        for c in range(limit):
            if rows[v] & class_masks[c]:
                continue
            class_masks[c] |= bit
            done = bt(v + 1, max(used, c + 1))
            class_masks[c] &= ~bit
            if done:
                return True
        return False

    bt(0, 0)
    return count


def chromatic_number(g, max_n=DEFAULT_CHROMATIC_MAX_N):
    """Least k admitting a k-coloring (0 for the empty graph)."""
    if g.n > max_n:
        raise ResourceLimitError(f"chromatic_number limited to n <= {max_n}")
    k = 0
    while count_colorings(g, k, 1) == 0:
        k += 1
    return k


def is_ambiguously_colorable(g, k):
    """At least two distinct k-colorings."""
    return count_colorings(g, k, 2) >= 2


def is_uniquely_colorable(g, k):
    """Exactly one k-coloring."""
    return count_colorings(g, k, 2) == 1
