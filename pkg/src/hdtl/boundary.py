"""Boundary configurations of circles and their region trees.

A configuration is a finite system of disjoint circles in the plane, written as
a balanced-parenthesis string: ``config := '' | '(' config ')' config``.  Each
``(`` is one circle; circles are numbered 1..n by the position of their opening
parenthesis.  Only the nesting matters, so a configuration is stored as the
parent of each circle (0 for the unbounded region).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

ROOT = 0
TOP = 0
BOTTOM = 1

_SIDE_PREFIX = {TOP: "t", BOTTOM: "b"}


def cached_hash(obj, *fields) -> int:
    """Hash of ``fields``, memoised on the (frozen) instance."""
    h = obj.__dict__.get("_hash")
    if h is None:
        h = hash(fields)
        object.__setattr__(obj, "_hash", h)
    return h


class ParseError(ValueError):
    """Malformed input text; ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class Edge(NamedTuple):
    """Label of an edge of a joined tree: ``(TOP, i)`` prints as ``t<i>``."""

    side: int
    index: int

    def __str__(self):
        return f"{_SIDE_PREFIX[self.side]}{self.index}"

    @classmethod
    def parse(cls, text: str) -> "Edge":
        text = text.strip()
        if len(text) < 2 or text[0] not in "tb" or not text[1:].isdigit():
            raise ValueError(f"bad edge label {text!r}")
        index = int(text[1:])
        if index < 1:
            raise ValueError(f"bad edge label {text!r}")
        return cls(TOP if text[0] == "t" else BOTTOM, index)


@dataclass(frozen=True)
class BoundaryConfig:
    """Nesting forest of circles; ``parents[i - 1]`` encloses circle ``i``."""

    parents: tuple[int, ...] = ()

    def __post_init__(self):
        for i, p in enumerate(self.parents, start=1):
            # preorder numbering puts every parent before its children
            if not 0 <= p < i:
                raise ValueError(f"circle {i} has invalid parent {p}")

    def __hash__(self):
        return cached_hash(self, self.parents)

    def __len__(self):
        return len(self.parents)

    def __str__(self):
        return self.text

    @property
    def circles(self) -> range:
        return range(1, len(self.parents) + 1)

    def parent(self, i: int) -> int:
        return self.parents[i - 1]

    @cached_property
    def children(self) -> dict[int, tuple[int, ...]]:
        kids: dict[int, list[int]] = {v: [] for v in range(len(self.parents) + 1)}
        for i, p in enumerate(self.parents, start=1):
            kids[p].append(i)
        return {v: tuple(c) for v, c in kids.items()}

    @cached_property
    def text(self) -> str:
        return render_boundary(self)


def parse_boundary(text: str) -> BoundaryConfig:
    parents = []
    stack = [ROOT]
    for offset, ch in enumerate(text):
        if ch == "(":
            parents.append(stack[-1])
            stack.append(len(parents))
        elif ch == ")":
            if len(stack) == 1:
                raise ParseError("unmatched ')'", offset)
            stack.pop()
        else:
            raise ParseError(f"unexpected character {ch!r}", offset)
    if len(stack) != 1:
        raise ParseError("unclosed '('", len(text))
    return BoundaryConfig(tuple(parents))


def render_boundary(cfg: BoundaryConfig) -> str:
    out = []
    kids = cfg.children

    def walk(v):
        for c in kids[v]:
            out.append("(")
            walk(c)
            out.append(")")

    walk(ROOT)
    return "".join(out)


@dataclass(frozen=True)
class RegionTree:
    """Region tree of a configuration.

    Vertex 0 is the unbounded region and vertex ``i`` the region just inside
    circle ``i``; edge ``i`` joins vertex ``i`` to ``parents[i - 1]``.
    """

    config: BoundaryConfig

    @property
    def root(self) -> int:
        return ROOT

    @property
    def vertices(self) -> range:
        return range(len(self.config) + 1)

    @property
    def edges(self) -> list[tuple[int, int, int]]:
        """``(label, child vertex, parent vertex)`` for every circle."""
        return [(i, i, self.config.parent(i)) for i in self.config.circles]


def region_tree(cfg: BoundaryConfig) -> RegionTree:
    return RegionTree(cfg)


@dataclass(frozen=True)
class JoinedTree:
    """Region trees of ``top`` and ``bottom`` glued at their roots.

    Every edge is named by an :class:`Edge`; an edge is identified with its
    endpoint away from the root, so ``up(e)`` is the next edge towards it.
    """

    top: BoundaryConfig
    bottom: BoundaryConfig

    def __hash__(self):
        return cached_hash(self, self.top, self.bottom)

    def config(self, side: int) -> BoundaryConfig:
        return self.top if side == TOP else self.bottom

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        """All labels in the total order t1 < ... < tn < b1 < ... < bm."""
        return tuple(Edge(TOP, i) for i in self.top.circles) + tuple(
            Edge(BOTTOM, j) for j in self.bottom.circles
        )

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def up(self, e: Edge) -> Edge | None:
        """Edge one step closer to the root, or None if ``e`` touches it."""
        p = self.config(e.side).parent(e.index)
        return None if p == ROOT else Edge(e.side, p)

    def path_to_root(self, e: Edge) -> list[Edge]:
        path = [e]
        nxt = self.up(e)
        while nxt is not None:
            path.append(nxt)
            nxt = self.up(nxt)
        return path

    def subtree(self, side: int) -> RegionTree:
        return RegionTree(self.config(side))


def join(top: BoundaryConfig, bottom: BoundaryConfig) -> JoinedTree:
    return JoinedTree(top, bottom)
