"""Admissible colourings of joined region trees.

A strong-heterotopy class of minimal diagrams between two configurations is
the same thing as an admissible set partition of the edges of their joined
tree.  Heterotopy classes are orbits of those partitions under the symmetry
groups of the two configurations.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .boundary import BOTTOM, TOP, BoundaryConfig, Edge, JoinedTree, cached_hash, join
from .symmetry import ConfigMismatch, SymmetryGroup, automorphism_group

Blocks = tuple[tuple[Edge, ...], ...]


class PartitionError(ValueError):
    pass


def canonical_blocks(blocks: Iterable[Iterable[Edge]]) -> Blocks:
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


def _check_partition(tree: JoinedTree, blocks: Blocks) -> None:
    seen = [e for b in blocks for e in b]
    if any(not b for b in blocks):
        raise PartitionError("empty block")
    if len(seen) != len(set(seen)):
        raise PartitionError("blocks overlap")
    if set(seen) != tree.edge_set:
        missing = sorted(tree.edge_set - set(seen))
        extra = sorted(set(seen) - tree.edge_set)
        raise PartitionError(
            "blocks do not cover the edges: missing "
            f"{','.join(map(str, missing)) or '-'}, "
            f"unknown {','.join(map(str, extra)) or '-'}"
        )


def format_blocks(blocks: Blocks) -> str:
    return "|".join(",".join(str(e) for e in b) for b in blocks)


def parse_blocks(text: str) -> Blocks:
    text = "".join(text.split())
    if not text:
        return ()
    try:
        return canonical_blocks(
            [Edge.parse(tok) for tok in part.split(",")] for part in text.split("|")
        )
    except ValueError as exc:
        raise PartitionError(str(exc)) from None


@dataclass(frozen=True)
class ShClass:
    """A canonical admissible partition of the edges of ``tree``."""

    tree: JoinedTree
    blocks: Blocks

    def __hash__(self):
        return cached_hash(self, self.tree, self.blocks)

    def __str__(self):
        return format_blocks(self.blocks)

    @property
    def top(self) -> BoundaryConfig:
        return self.tree.top

    @property
    def bottom(self) -> BoundaryConfig:
        return self.tree.bottom

    @cached_property
    def block_of(self) -> dict[Edge, int]:
        return {e: k for k, b in enumerate(self.blocks) for e in b}

    @cached_property
    def rgs(self) -> tuple[int, ...]:
        """Restricted growth string over the edges in label order."""
        return tuple(self.block_of[e] for e in self.tree.edges)

    def relabel(self, top_perm, bottom_perm) -> "ShClass":
        def move(e):
            perm = top_perm if e.side == TOP else bottom_perm
            return Edge(e.side, perm.image[e.index - 1])

        return ShClass(self.tree, canonical_blocks([move(e) for e in b] for b in self.blocks))


def make_sh_class(
    top: BoundaryConfig, bottom: BoundaryConfig, blocks, check: bool = True
) -> ShClass:
    """Build a class from text or blocks, canonicalising and validating it."""
    tree = join(top, bottom)
    blocks = parse_blocks(blocks) if isinstance(blocks, str) else canonical_blocks(blocks)
    _check_partition(tree, blocks)
    if check and not is_admissible(tree, blocks):
        raise PartitionError(f"partition {format_blocks(blocks)} is not admissible")
    return ShClass(tree, blocks)


def chain(tree: JoinedTree, e: Edge, f: Edge) -> list[Edge]:
    if e == f:
        raise ValueError("chain needs two distinct edges")
    for x in (e, f):
        if x not in tree.edge_set:
            raise KeyError(f"unknown edge {x}")
    up_e = tree.path_to_root(e)
    up_f = tree.path_to_root(f)
    if f in up_e:
        return up_e[1 : up_e.index(f)]
    if e in up_f:
        return list(reversed(up_f[1 : up_f.index(e)]))
    # drop the shared part above the meeting vertex
    while up_e and up_f and up_e[-1] == up_f[-1]:
        up_e.pop()
        up_f.pop()
    return up_e[1:] + list(reversed(up_f[1:]))


@lru_cache(maxsize=None)
def _chains(tree: JoinedTree) -> dict[tuple[Edge, Edge], tuple[Edge, ...]]:
    edges = tree.edges
    return {
        (e, f): tuple(chain(tree, e, f))
        for i, e in enumerate(edges)
        for f in edges[i + 1 :]
    }


def _admissible_pair(colour: dict, e: Edge, between: Sequence[Edge]) -> bool:
    counts = Counter(colour[x] for x in between)
    if counts[colour[e]] > 0:
        return True
    return all(c % 2 == 0 for c in counts.values())


def is_admissible(tree: JoinedTree, blocks: Blocks) -> bool:
    blocks = canonical_blocks(blocks)
    _check_partition(tree, blocks)
    return admissible_partition(tree, blocks)


def admissible_partition(tree: JoinedTree, blocks: Blocks) -> bool:
    """Admissibility of a partition already known to cover ``tree``'s edges."""
    colour = {e: k for k, b in enumerate(blocks) for e in b}
    chains = _chains(tree)
    for b in blocks:
        for i, e in enumerate(b):
            for f in b[i + 1 :]:
                if not _admissible_pair(colour, e, chains[(e, f)]):
                    return False
    return True


def _restricted_growth(n: int):
    """All restricted growth strings of length n, in lexicographic order."""
    seq = [0] * n

    def rec(k, m):
        if k == n:
            yield tuple(seq)
            return
        for c in range(m + 1):
            seq[k] = c
            yield from rec(k + 1, max(m, c + 1))

    if n == 0:
        yield ()
    else:
        yield from rec(0, 0)


def _blocks_from_rgs(edges, rgs) -> Blocks:
    groups: dict[int, list[Edge]] = {}
    for e, c in zip(edges, rgs):
        groups.setdefault(c, []).append(e)
    return tuple(tuple(groups[c]) for c in sorted(groups))


def _pruned_rgs(tree: JoinedTree):
    """Restricted growth strings whose every completed same-block pair is admissible.

    A pair is checked as soon as both its edges and its whole chain have been
    coloured, which is exactly when the last of them is assigned.
    """
    edges = tree.edges
    pos = {e: k for k, e in enumerate(edges)}
    due: list[list[tuple[int, int, tuple[int, ...]]]] = [[] for _ in edges]
    for (e, f), between in _chains(tree).items():
        idx = (pos[e], pos[f], tuple(pos[x] for x in between))
        due[max(idx[0], idx[1], *idx[2])].append(idx)

    n = len(edges)
    seq = [0] * n

    def ok(k):
        for i, j, between in due[k]:
            if seq[i] != seq[j]:
                continue
            counts = Counter(seq[x] for x in between)
            if counts[seq[i]] == 0 and any(c % 2 for c in counts.values()):
                return False
        return True

    def rec(k, m):
        if k == n:
            yield tuple(seq)
            return
        for c in range(m + 1):
            seq[k] = c
            if ok(k):
                yield from rec(k + 1, max(m, c + 1))

    if n == 0:
        yield ()
    else:
        yield from rec(0, 0)


@lru_cache(maxsize=None)
def _sh_classes(top: BoundaryConfig, bottom: BoundaryConfig, prune: bool) -> tuple[ShClass, ...]:
    tree = join(top, bottom)
    edges = tree.edges
    if prune:
        strings = _pruned_rgs(tree)
    else:
        strings = (
            s for s in _restricted_growth(len(edges))
            if is_admissible(tree, _blocks_from_rgs(edges, s))
        )
    return tuple(ShClass(tree, _blocks_from_rgs(edges, s)) for s in strings)


def enumerate_sh_classes(
    top: BoundaryConfig, bottom: BoundaryConfig, prune: bool = True
) -> list[ShClass]:
    """Admissible partitions in lexicographic order of their growth strings.

    ``prune=False`` filters complete partitions only; it is the slow baseline
    the pruned search must agree with.
    """
    return list(_sh_classes(top, bottom, prune))


def h_orbit(s: ShClass, g_top: SymmetryGroup, g_bottom: SymmetryGroup) -> set[ShClass]:
    if g_top.config != s.top or g_bottom.config != s.bottom:
        raise ConfigMismatch("symmetry groups do not match the class's configurations")
    return {s.relabel(a, b) for a in g_top for b in g_bottom}


@dataclass(frozen=True)
class HClass:
    """A heterotopy class, held by the member of its orbit with the least growth string."""

    representative: ShClass

    def __hash__(self):
        return hash(self.representative)

    def __str__(self):
        return str(self.representative)

    @property
    def top(self) -> BoundaryConfig:
        return self.representative.top

    @property
    def bottom(self) -> BoundaryConfig:
        return self.representative.bottom

    @property
    def blocks(self) -> Blocks:
        return self.representative.blocks

    @property
    def sort_key(self) -> tuple[int, ...]:
        return self.representative.rgs


@lru_cache(maxsize=None)
def h_class_of(s: ShClass) -> HClass:
    orbit = h_orbit(s, automorphism_group(s.top), automorphism_group(s.bottom))
    return HClass(min(orbit, key=lambda x: x.rgs))


def enumerate_h_classes(top: BoundaryConfig, bottom: BoundaryConfig) -> list[HClass]:
    """Orbit representatives, ordered by growth string of the representative."""
    reps = {h_class_of(s) for s in enumerate_sh_classes(top, bottom)}
    return sorted(reps, key=lambda h: h.sort_key)


def identity_sh_class(cfg: BoundaryConfig) -> ShClass:
    tree = join(cfg, cfg)
    return ShClass(
        tree, canonical_blocks((Edge(TOP, i), Edge(BOTTOM, i)) for i in cfg.circles)
    )


def identity_class(cfg: BoundaryConfig) -> HClass:
    # any other pairing in the orbit has a larger growth string on the bottom edges
    return HClass(identity_sh_class(cfg))
