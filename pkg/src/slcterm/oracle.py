"""Brute-force cross-check for the analyzer.

Restrict the transition relation to integer states in [-B, B] and treat
it as a finite directed graph.  Cycles found here are real cycles of the
loop; escape traces show the bounded window leaking, not
non-termination.  Runs in plain integer arithmetic so it shares no code
path with the geometric decision procedure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple, Union

from .lattice import column, integer_bounds
from .poly2 import HPoly


class PreconditionSignError(ValueError):
    """diagonal_collapse needs both endpoints on the same side of alpha."""


@dataclass(frozen=True)
class TransGraph:
    """Successor spans per state; columns are intervals, so the
    successors of x inside the window form one inclusive range."""

    bound: int
    span: Dict[int, Tuple[int, int]]

    def states(self) -> List[int]:
        return sorted(self.span)

    def succ(self, x: int) -> range:
        if x not in self.span:
            return range(0)
        lo, hi = self.span[x]
        return range(lo, hi + 1)

    def has_edge(self, x: int, y: int) -> bool:
        return y in self.succ(x)

    def edges(self) -> Iterator[Tuple[int, int]]:
        for x in self.states():
            for y in self.succ(x):
                yield (x, y)


def build_graph(p: HPoly, bound: int) -> TransGraph:
    span: Dict[int, Tuple[int, int]] = {}
    for x in range(-bound, bound + 1):
        lo, hi, empty = integer_bounds(column(p, x))
        if empty:
            continue
        lo2 = -bound if lo is None else max(lo, -bound)
        hi2 = bound if hi is None else min(hi, bound)
        if lo2 <= hi2:
            span[x] = (lo2, hi2)
    return TransGraph(bound, span)


def _start_order(g: TransGraph) -> List[int]:
    # smallest state first, in the |x| sense: 0, 1, -1, 2, -2, ...
    return sorted(g.span, key=lambda x: (abs(x), x < 0))


def find_cycle(g: TransGraph) -> Optional[List[int]]:
    """Deterministic DFS: starts by increasing |state|, successors
    ascending.  Returns the first back edge's cycle, in trace order."""
    visited: set[int] = set()
    for start in _start_order(g):
        if start in visited:
            continue
        path = [start]
        index = {start: 0}
        iters = [iter(g.succ(start))]
        while iters:
            try:
                y = next(iters[-1])
            except StopIteration:
                iters.pop()
                node = path.pop()
                del index[node]
                visited.add(node)
                continue
            if y in index:
                return path[index[y] :]
            if y in visited:
                continue
            index[y] = len(path)
            path.append(y)
            iters.append(iter(g.succ(y)))
    return None


def _escapes(p: HPoly, bound: int, x: int) -> bool:
    lo, hi, empty = integer_bounds(column(p, x))
    if empty:
        return False
    if hi is None or hi > bound:
        return True
    return lo is None or lo < -bound


def find_escape(g: TransGraph, p: HPoly, limit: int = 1000) -> Optional[List[int]]:
    """A trace of at most `limit` distinct states inside the window whose
    last state has an integer successor outside it, if one exists.
    Breadth-first from each start, smallest |state| first, so the trace
    is a shortest path from its start."""
    no_escape: set[int] = set()
    for start in _start_order(g):
        if start in no_escape:
            continue
        parent: Dict[int, Optional[int]] = {start: None}
        queue = [start]
        found = None
        qi = 0
        while qi < len(queue):
            x = queue[qi]
            qi += 1
            if _escapes(p, g.bound, x):
                found = x
                break
            for y in g.succ(x):
                if y not in parent and y not in no_escape:
                    parent[y] = x
                    queue.append(y)
        if found is None:
            no_escape.update(parent)
            continue
        trace: List[int] = []
        node: Optional[int] = found
        while node is not None:
            trace.append(node)
            node = parent[node]
        trace.reverse()
        if len(trace) <= limit:
            return trace
    return None


def diagonal_collapse(
    a: Union[int, Fraction], alpha: Union[int, Fraction], b: Union[int, Fraction]
) -> Fraction:
    """Collapse the segment between diagonal points (a, alpha) and
    (alpha, b) onto the diagonal: the line through them crosses it at
    (b*a - alpha^2) / (a + b - 2*alpha).  Endpoints must sit strictly on
    the same side of alpha."""
    a, alpha, b = Fraction(a), Fraction(alpha), Fraction(b)
    da, db = a - alpha, b - alpha
    if da == 0 or db == 0 or (da > 0) != (db > 0):
        raise PreconditionSignError("a and b must lie strictly on one side of alpha")
    return (b * a - alpha * alpha) / (a + b - 2 * alpha)
