"""Exact coefficients and composition of heterotopy classes.

Coefficients are polynomials in the handle weight ``p`` and the bubble weight
``q`` with rational coefficients.  A product of two classes is the average,
over the symmetries of the middle configuration, of the colourings obtained by
gluing the two coloured trees along their middle edges.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .boundary import BOTTOM, TOP, BoundaryConfig, Edge, join
from .colouring import (
    HClass,
    ShClass,
    canonical_blocks,
    h_class_of,
    admissible_partition,
)
from .symmetry import ConfigMismatch, EdgePermutation, automorphism_group

Exponents = tuple[int, int]


@dataclass(frozen=True)
class Coefficient:
    """Sum of ``c * p^a * q^b`` held as sorted ``((a, b), c)`` pairs."""

    terms: tuple[tuple[Exponents, Fraction], ...] = ()

    @classmethod
    def from_dict(cls, terms: Mapping[Exponents, Fraction | int]) -> "Coefficient":
        items = []
        for (a, b), c in terms.items():
            if a < 0 or b < 0:
                raise ValueError(f"negative exponent in p^{a} q^{b}")
            if not isinstance(c, Fraction):
                c = Fraction(c)
            if c:
                items.append(((a, b), c))
        return cls(tuple(sorted(items)))

    @classmethod
    def constant(cls, c) -> "Coefficient":
        return cls.from_dict({(0, 0): c})

    def as_dict(self) -> dict[Exponents, Fraction]:
        return dict(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: "Coefficient") -> "Coefficient":
        acc = self.as_dict()
        for k, c in other.terms:
            acc[k] = acc.get(k, 0) + c
        return Coefficient.from_dict(acc)

    def __neg__(self) -> "Coefficient":
        return Coefficient(tuple((k, -c) for k, c in self.terms))

    def __sub__(self, other: "Coefficient") -> "Coefficient":
        return self + (-other)

    def __mul__(self, other: "Coefficient") -> "Coefficient":
        acc: dict[Exponents, Fraction] = {}
        for (a, b), c in self.terms:
            for (a2, b2), c2 in other.terms:
                k = (a + a2, b + b2)
                acc[k] = acc.get(k, 0) + c * c2
        return Coefficient.from_dict(acc)

    def scale(self, r) -> "Coefficient":
        return Coefficient.from_dict({k: c * Fraction(r) for k, c in self.terms})

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(_format_term(a, b, c) for (a, b), c in self.terms)

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1


def _format_term(a: int, b: int, c: Fraction) -> str:
    parts = [] if c == 1 and (a or b) else [str(c)]
    if a:
        parts.append("p" if a == 1 else f"p^{a}")
    if b:
        parts.append("q" if b == 1 else f"q^{b}")
    return "*".join(parts)


_FACTOR = re.compile(r"^(?:(?P<var>[pq])(?:\^(?P<exp>\d+))?|(?P<num>-?\d+(?:/\d+)?))$")


def parse_coefficient(text: str) -> Coefficient:
    text = text.strip()
    if text == "0":
        return Coefficient()
    acc = Coefficient()
    for term in text.split(" + "):
        c, a, b = Fraction(1), 0, 0
        for factor in term.strip().split("*"):
            m = _FACTOR.match(factor.strip())
            if m is None:
                raise ValueError(f"bad coefficient factor {factor!r} in {text!r}")
            if m["num"] is not None:
                c *= Fraction(m["num"])
            elif m["var"] == "p":
                a += int(m["exp"] or 1)
            else:
                b += int(m["exp"] or 1)
        acc = acc + Coefficient.from_dict({(a, b): c})
    return acc


def monomial(a: int, b: int) -> Coefficient:
    return Coefficient.from_dict({(a, b): 1})


def coeff_add(x: Coefficient, y: Coefficient) -> Coefficient:
    return x + y


def coeff_mul(x: Coefficient, y: Coefficient) -> Coefficient:
    return x * y


def coeff_scale(x: Coefficient, r) -> Coefficient:
    return x.scale(r)


ONE = monomial(0, 0)


@dataclass(frozen=True)
class AlgebraElement:
    """Finite linear combination of heterotopy classes from ``top`` to ``bottom``."""

    top: BoundaryConfig
    bottom: BoundaryConfig
    terms: tuple[tuple[HClass, Coefficient], ...] = field(default=())

    @classmethod
    def from_terms(
        cls, top: BoundaryConfig, bottom: BoundaryConfig, pairs: Iterable[tuple[HClass, Coefficient]]
    ) -> "AlgebraElement":
        acc: dict[HClass, Coefficient] = {}
        for h, c in pairs:
            if h.top != top or h.bottom != bottom:
                raise ConfigMismatch(f"class {h} does not live on ({top.text!r}, {bottom.text!r})")
            acc[h] = acc[h] + c if h in acc else c
        items = sorted(((h, c) for h, c in acc.items() if c), key=lambda hc: hc[0].sort_key)
        return cls(top, bottom, tuple(items))

    @classmethod
    def basis(cls, h: HClass, coeff: Coefficient = ONE) -> "AlgebraElement":
        return cls.from_terms(h.top, h.bottom, [(h, coeff)])

    @classmethod
    def zero(cls, top: BoundaryConfig, bottom: BoundaryConfig) -> "AlgebraElement":
        return cls(top, bottom, ())

    def as_dict(self) -> dict[HClass, Coefficient]:
        return dict(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if (self.top, self.bottom) != (other.top, other.bottom):
            raise ConfigMismatch("cannot add elements of different hom-spaces")
        return AlgebraElement.from_terms(self.top, self.bottom, self.terms + other.terms)

    def scale(self, c: Coefficient) -> "AlgebraElement":
        return AlgebraElement.from_terms(self.top, self.bottom, [(h, x * c) for h, x in self.terms])

    def __matmul__(self, other: "AlgebraElement") -> "AlgebraElement":
        return compose(self, other)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(format_product(c, f"[{h}]", " * ") for h, c in self.terms)


def format_product(c: Coefficient, name: str, sep: str) -> str:
    if c == ONE:
        return name
    text = str(c)
    if not c.is_monomial:
        text = f"({text})"
    return f"{text}{sep}{name}"


@dataclass(frozen=True)
class CompositionOutcome:
    result: ShClass
    g_exp: int
    b_exp: int
    colours_before: int
    colours_after: int


class _Merger:
    """Union-find whose class representative is always the least element."""

    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if ry < rx:
            rx, ry = ry, rx
        self.parent[ry] = rx
        return True


def compose_single(a: ShClass, b: ShClass, perm: EdgePermutation) -> CompositionOutcome:
    """Glue ``a`` on top of ``b``, matching middle circle i of ``a`` with pi(i) of ``b``."""
    middle = a.bottom
    if b.top != middle or perm.config != middle:
        raise ConfigMismatch(
            f"cannot compose ({a.top.text!r},{a.bottom.text!r}) with "
            f"({b.top.text!r},{b.bottom.text!r}) over {perm.config.text!r}"
        )
    # colour ids: 0.. for blocks of a, then blocks of b
    offset = len(a.blocks)
    before = offset + len(b.blocks)
    uf = _Merger(range(before))
    a_colour = a.block_of
    b_colour = b.block_of
    merges = 0
    for i in middle.circles:
        if uf.union(a_colour[Edge(BOTTOM, i)], offset + b_colour[Edge(TOP, perm.image[i - 1])]):
            merges += 1
    after = before - merges

    outer: dict[int, list[Edge]] = {}
    for e in a.tree.edges:
        if e.side == TOP:
            outer.setdefault(uf.find(a_colour[e]), []).append(e)
    for e in b.tree.edges:
        if e.side == BOTTOM:
            outer.setdefault(uf.find(offset + b_colour[e]), []).append(e)
    bubbles = after - len(outer)

    tree = join(a.top, b.bottom)
    blocks = canonical_blocks(outer.values())
    if not admissible_partition(tree, blocks):
        raise AssertionError(
            f"composite {a} . {b} under {perm.image} is not admissible: {blocks}"
        )
    return CompositionOutcome(
        result=ShClass(tree, blocks),
        g_exp=after - before + len(middle),
        b_exp=bubbles,
        colours_before=before,
        colours_after=after,
    )


@lru_cache(maxsize=None)
def compose_h(a: HClass, b: HClass) -> AlgebraElement:
    if a.bottom != b.top:
        raise ConfigMismatch(
            f"cannot compose classes on ({a.top.text!r},{a.bottom.text!r}) "
            f"and ({b.top.text!r},{b.bottom.text!r})"
        )
    group = automorphism_group(a.bottom)
    pairs = []
    for perm in group:
        out = compose_single(a.representative, b.representative, perm)
        pairs.append((h_class_of(out.result), monomial(out.g_exp, out.b_exp)))
    weight = Fraction(1, len(group))
    return AlgebraElement.from_terms(
        a.top, b.bottom, [(h, c.scale(weight)) for h, c in pairs]
    )


def compose(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    if x.bottom != y.top:
        raise ConfigMismatch(
            f"cannot compose elements on ({x.top.text!r},{x.bottom.text!r}) "
            f"and ({y.top.text!r},{y.bottom.text!r})"
        )
    acc: dict[HClass, dict[Exponents, Fraction]] = {}
    for h, c in x.terms:
        for k, d in y.terms:
            for r, e in compose_h(h, k).terms:
                slot = acc.setdefault(r, {})
                for (a1, b1), c1 in c.terms:
                    for (a2, b2), c2 in d.terms:
                        for (a3, b3), c3 in e.terms:
                            key = (a1 + a2 + a3, b1 + b2 + b3)
                            slot[key] = slot.get(key, 0) + c1 * c2 * c3
    return AlgebraElement.from_terms(
        x.top, y.bottom, [(r, Coefficient.from_dict(t)) for r, t in acc.items()]
    )


def partition_compose_oracle(u, v):
    """Classical partition-algebra product of two connectivities.

    ``u`` partitions top labels ``t*`` and middle labels ``b*``; ``v`` partitions
    middle labels ``t*`` and bottom labels ``b*``.  Classes are joined across the
    middle and restricted to the outer labels.  Returns canonical blocks.
    """
    u_blocks = [tuple(blk) for blk in getattr(u, "blocks", u)]
    v_blocks = [tuple(blk) for blk in getattr(v, "blocks", v)]
    u_mid = {e.index for blk in u_blocks for e in blk if e.side == BOTTOM}
    v_mid = {e.index for blk in v_blocks for e in blk if e.side == TOP}
    if u_mid != v_mid:
        raise ValueError(f"middle labels differ: {sorted(u_mid)} vs {sorted(v_mid)}")

    # nodes: ("top", i), ("mid", i), ("bot", j)
    adj: dict[tuple, set] = {}

    def link(nodes):
        for n in nodes:
            adj.setdefault(n, set()).update(nodes)

    for blk in u_blocks:
        link([("top", e.index) if e.side == TOP else ("mid", e.index) for e in blk])
    for blk in v_blocks:
        link([("mid", e.index) if e.side == TOP else ("bot", e.index) for e in blk])

    seen = set()
    out = []
    for start in sorted(adj):
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            n = stack.pop()
            comp.append(n)
            for m in adj[n]:
                if m not in seen:
                    seen.add(m)
                    stack.append(m)
        outer = [
            Edge(TOP, i) if kind == "top" else Edge(BOTTOM, i)
            for kind, i in comp
            if kind != "mid"
        ]
        if outer:
            out.append(outer)
    return canonical_blocks(out)
