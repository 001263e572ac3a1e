"""Closing braids into link diagrams and counting their features.

Every diagram in this package is a braid closure, either:

* plat: adjacent strand pairs (1,2), (3,4), ... are capped at the top
  and at the bottom (needs an even strand count), or
* trace: top strand i is joined to bottom strand i around the side.

Keeping diagrams in this form makes loop counting a union-find problem;
no general planar-diagram machinery is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .braid import BraidWord, permutation, writhe

Closure = Literal["plat", "trace"]


class ClosureError(ValueError):
    """Raised when a closure kind does not apply to a braid or operation."""


@dataclass(frozen=True)
class ClosedBraid:
    """A braid word together with the closure kind that turns it into a link."""

    braid: BraidWord
    closure: Closure

    def __post_init__(self) -> None:
        if self.closure not in ("plat", "trace"):
            raise ClosureError(f"unknown closure kind {self.closure!r}")
        if self.closure == "plat" and self.braid.n_strands % 2:
            raise ClosureError(
                "plat closure requires an even strand count (2k strands); "
                f"got {self.braid.n_strands}"
            )


@dataclass(frozen=True)
class DiagramStats:
    """Counting data of a closed diagram.

    minima is the number of local minima of a plat closure (n/2); it is
    None for trace closures, where the notion is not used.
    """

    components: int
    minima: int | None
    crossings: int
    writhe: int

    def to_json(self) -> dict:
        return {
            "components": self.components,
            "minima": self.minima,
            "crossings": self.crossings,
            "writhe": self.writhe,
        }


def plat_close(w: BraidWord) -> ClosedBraid:
    """Cap strand pairs (1,2), (3,4), ... at top and bottom."""
    return ClosedBraid(w, "plat")


def trace_close(w: BraidWord) -> ClosedBraid:
    """Join each top strand to the same-indexed bottom strand."""
    return ClosedBraid(w, "trace")


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, size: int) -> None:
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        """Join the classes of a and b; True if they were already joined."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return True
        self.parent[rb] = ra
        return False


def closure_arcs(k: ClosedBraid) -> list[tuple[int, int]]:
    """Endpoint pairs joined by the closure, over nodes 0..n-1 (bottom)
    and n..2n-1 (top)."""
    n = k.braid.n_strands
    if k.closure == "plat":
        caps = [(i, i + 1) for i in range(0, n, 2)]
        return caps + [(n + i, n + j) for i, j in caps]
    return [(i, n + i) for i in range(n)]


def component_count(k: ClosedBraid) -> int:
    """Number of link components of the closed diagram.

    Trace closures reduce to cycle counting of the braid permutation;
    plat closures run union-find over the 2n strand endpoints.
    """
    n = k.braid.n_strands
    perm = permutation(k.braid)
    if k.closure == "trace":
        seen = [False] * n
        cycles = 0
        for start in range(n):
            if seen[start]:
                continue
            cycles += 1
            p = start
            while not seen[p]:
                seen[p] = True
                p = perm[p] - 1
        return cycles
    uf = _UnionFind(2 * n)
    for p in range(n):
        uf.union(p, n + perm[p] - 1)
    for a, b in closure_arcs(k):
        uf.union(a, b)
    return len({uf.find(x) for x in range(2 * n)})


def minima_count(k: ClosedBraid) -> int:
    """Local minima of a plat closure: half the strand count."""
    if k.closure != "plat":
        raise ClosureError("minima are defined only for plat closures")
    return k.braid.n_strands // 2


def diagram_stats(k: ClosedBraid) -> DiagramStats:
    return DiagramStats(
        components=component_count(k),
        minima=minima_count(k) if k.closure == "plat" else None,
        crossings=len(k.braid),
        writhe=writhe(k.braid),
    )
