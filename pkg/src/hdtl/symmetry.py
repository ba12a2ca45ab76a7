"""Boundary symmetry groups.

The group of a configuration is taken to be the group of automorphisms of its
region tree that fix the root.  Such an automorphism is determined by where it
sends each circle, so elements are stored as permutations of circle indices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .boundary import ROOT, BoundaryConfig


class ConfigMismatch(ValueError):
    pass


@dataclass(frozen=True)
class EdgePermutation:
    config: BoundaryConfig
    image: tuple[int, ...]

    def __post_init__(self):
        n = len(self.config)
        if sorted(self.image) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.image}")
        for i in self.config.circles:
            p = self.config.parent(i)
            q = self.config.parent(self.image[i - 1])
            if q != (ROOT if p == ROOT else self.image[p - 1]):
                raise ValueError(f"{self.image} does not preserve nesting")

    def __call__(self, i: int) -> int:
        return apply(self, i)

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.image, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least element."""
        seen = set()
        out = []
        for i in self.config.circles:
            if i in seen:
                continue
            cyc = [i]
            seen.add(i)
            j = self.image[i - 1]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.image[j - 1]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_notation(self, prefix: str = "t") -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join(
            "(" + " ".join(f"{prefix}{i}" for i in c) + ")" for c in cyc
        )


def identity(cfg: BoundaryConfig) -> EdgePermutation:
    return EdgePermutation(cfg, tuple(cfg.circles))


def apply(perm: EdgePermutation, i: int) -> int:
    if not 1 <= i <= len(perm.image):
        raise IndexError(f"circle index {i} out of range 1..{len(perm.image)}")
    return perm.image[i - 1]


def compose_perms(a: EdgePermutation, b: EdgePermutation) -> EdgePermutation:
    """``a`` after ``b``: i -> a(b(i))."""
    if a.config != b.config:
        raise ConfigMismatch(f"{a.config.text!r} vs {b.config.text!r}")
    return EdgePermutation(a.config, tuple(a.image[x - 1] for x in b.image))


def inverse(a: EdgePermutation) -> EdgePermutation:
    inv = [0] * len(a.image)
    for i, x in enumerate(a.image, start=1):
        inv[x - 1] = i
    return EdgePermutation(a.config, tuple(inv))


@dataclass(frozen=True)
class SymmetryGroup:
    config: BoundaryConfig
    elements: tuple[EdgePermutation, ...]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)


def _shapes(cfg: BoundaryConfig) -> dict[int, str]:
    """AHU canonical string of the subtree below each vertex."""
    shape = {}
    kids = cfg.children

    def walk(v):
        for c in kids[v]:
            walk(c)
        shape[v] = "(" + "".join(sorted(shape[c] for c in kids[v])) + ")"

    walk(ROOT)
    return shape


def _isomorphisms(cfg, shape, v, w):
    """All maps sending the circles strictly below ``v`` onto those below ``w``."""
    src = cfg.children[v]
    dst = cfg.children[w]
    results = []
    for target in itertools.permutations(dst):
        if any(shape[a] != shape[b] for a, b in zip(src, target)):
            continue
        partial = [{}]
        for a, b in zip(src, target):
            below = _isomorphisms(cfg, shape, a, b)
            partial = [
                {**m, a: b, **sub} for m in partial for sub in below
            ]
        results.extend(partial)
    return results


@lru_cache(maxsize=None)
def automorphism_group(cfg: BoundaryConfig) -> SymmetryGroup:
    shape = _shapes(cfg)
    maps = _isomorphisms(cfg, shape, ROOT, ROOT)
    images = sorted(tuple(m[i] for i in cfg.circles) for m in maps)
    # identity is the lexicographically least image, so it comes first
    return SymmetryGroup(cfg, tuple(EdgePermutation(cfg, im) for im in images))
