"""Multiplication tables, law checks and table serialisation."""

from __future__ import annotations

import csv
import io
import itertools
import json
import random
from dataclasses import dataclass, field

from .algebra import (
    AlgebraElement,
    compose,
    compose_h,
    compose_single,
    parse_coefficient,
    format_product,
)
from .boundary import BoundaryConfig, parse_boundary
from .colouring import (
    HClass,
    enumerate_h_classes,
    enumerate_sh_classes,
    h_class_of,
    identity_class,
    make_sh_class,
)
from .symmetry import automorphism_group

SCHEMA = "hdtl-table/1"
DEFAULT_LIMIT = 512


class TableTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class MultiplicationTable:
    config: BoundaryConfig
    basis: tuple[HClass, ...]
    cells: tuple[tuple[AlgebraElement, ...], ...]

    def index(self, h: HClass) -> int:
        return self.basis.index(h)

    def cell(self, row: int, col: int) -> AlgebraElement:
        return self.cells[row][col]


def multiplication_table(cfg: BoundaryConfig, limit: int = DEFAULT_LIMIT) -> MultiplicationTable:
    basis = tuple(enumerate_h_classes(cfg, cfg))
    if len(basis) > limit:
        raise TableTooLarge(f"basis of {cfg.text!r} has {len(basis)} classes, limit is {limit}")
    cells = tuple(tuple(compose_h(a, b) for b in basis) for a in basis)
    return MultiplicationTable(cfg, basis, cells)


@dataclass
class LawCheck:
    name: str
    tested: int
    passed: bool
    counterexample: tuple[str, ...] | None = None


@dataclass
class LawReport:
    config: BoundaryConfig
    mode: str
    seed: int | None = None
    checks: list[LawCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def as_dict(self) -> dict:
        return {
            "config": self.config.text,
            "mode": self.mode,
            "seed": self.seed,
            "passed": self.passed,
            "checks": [
                {
                    "law": c.name,
                    "tested": c.tested,
                    "passed": c.passed,
                    "counterexample": list(c.counterexample) if c.counterexample else None,
                }
                for c in self.checks
            ],
        }


def _exponent_check(basis) -> LawCheck:
    group = automorphism_group(basis[0].bottom) if basis else ()
    unit = identity_class(basis[0].bottom).representative if basis else None
    tested = 0
    for a, b in itertools.product(basis, repeat=2):
        for perm in group:
            out = compose_single(a.representative, b.representative, perm)
            tested += 1
            ok = (
                out.g_exp >= 0
                and 0 <= out.b_exp <= out.colours_before - out.colours_after
                and out.colours_before - out.colours_after <= len(perm.config)
            )
            if ok and unit in (a.representative, b.representative):
                ok = out.g_exp == 0 and out.b_exp == 0
            if not ok:
                return LawCheck(
                    "exponents", tested, False, (str(a), str(b), " ".join(map(str, perm.image)))
                )
    return LawCheck("exponents", tested, True)


def check_laws(
    cfg: BoundaryConfig,
    mode: str = "exhaustive",
    seed: int = 0,
    samples: int = 1000,
) -> LawReport:
    """Check unit, associativity and exponent bounds on the algebra of ``cfg``.

    Failures are recorded with a counterexample rather than raised.
    """
    if mode not in ("exhaustive", "sampled"):
        raise ValueError(f"unknown mode {mode!r}")
    basis = enumerate_h_classes(cfg, cfg)
    unit = AlgebraElement.basis(identity_class(cfg))
    report = LawReport(cfg, mode, seed if mode == "sampled" else None)

    left = right = None
    for h in basis:
        x = AlgebraElement.basis(h)
        if left is None and compose(unit, x) != x:
            left = (str(h),)
        if right is None and compose(x, unit) != x:
            right = (str(h),)
    report.checks.append(LawCheck("left unit", len(basis), left is None, left))
    report.checks.append(LawCheck("right unit", len(basis), right is None, right))

    if mode == "exhaustive":
        triples = itertools.product(basis, repeat=3)
    else:
        rng = random.Random(seed)
        triples = ((rng.choice(basis), rng.choice(basis), rng.choice(basis)) for _ in range(samples))
    tested = 0
    bad = None
    elements = {h: AlgebraElement.basis(h) for h in basis}
    for a, b, c in triples:
        tested += 1
        if compose(compose_h(a, b), elements[c]) != compose(elements[a], compose_h(b, c)):
            bad = (str(a), str(b), str(c))
            break
    report.checks.append(LawCheck("associativity", tested, bad is None, bad))
    report.checks.append(_exponent_check(basis))
    return report


def dimensions(top: BoundaryConfig, bottom: BoundaryConfig) -> tuple[int, int, int, int]:
    return (
        len(enumerate_sh_classes(top, bottom)),
        len(enumerate_h_classes(top, bottom)),
        automorphism_group(top).order,
        automorphism_group(bottom).order,
    )


def _cell_text(t: MultiplicationTable, elem: AlgebraElement, sep: str = "*") -> str:
    if not elem:
        return "0"
    return " + ".join(
        format_product(c, f"D{t.index(h) + 1}", sep) for h, c in elem.terms
    )


def table_to_dict(t: MultiplicationTable) -> dict:
    return {
        "schema": SCHEMA,
        "config": t.config.text,
        "basis": [str(h) for h in t.basis],
        "cells": [
            [[[t.index(h), str(c)] for h, c in cell.terms] for cell in row]
            for row in t.cells
        ],
    }


def serialize_table(t: MultiplicationTable, format: str = "json") -> str:
    if format == "json":
        return json.dumps(table_to_dict(t), separators=(",", ":"))
    names = [f"D{k + 1}" for k in range(len(t.basis))]
    if format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["row x col", *names])
        for name, row in zip(names, t.cells):
            w.writerow([name, *(_cell_text(t, cell) for cell in row)])
        w.writerow([])
        w.writerow(["class", "partition"])
        for name, h in zip(names, t.basis):
            w.writerow([name, str(h)])
        return buf.getvalue()
    if format == "markdown":
        lines = [
            "| row x col | " + " | ".join(names) + " |",
            "|---" * (len(names) + 1) + "|",
        ]
        for name, row in zip(names, t.cells):
            lines.append(f"| {name} | " + " | ".join(_cell_text(t, c) for c in row) + " |")
        lines.append("")
        lines.append(f"Basis of `{t.config.text}`:")
        lines.append("")
        for name, h in zip(names, t.basis):
            lines.append(f"- {name} = `{h}`")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown table format {format!r}")


def parse_table(text: str) -> MultiplicationTable:
    """Inverse of ``serialize_table(t, "json")``."""
    data = json.loads(text)
    if data.get("schema", SCHEMA) != SCHEMA:
        raise ValueError(f"unsupported schema {data['schema']!r}")
    cfg = parse_boundary(data["config"])
    basis = tuple(h_class_of(make_sh_class(cfg, cfg, s)) for s in data["basis"])
    cells = tuple(
        tuple(
            AlgebraElement.from_terms(
                cfg, cfg, [(basis[k], parse_coefficient(c)) for k, c in cell]
            )
            for cell in row
        )
        for row in data["cells"]
    )
    return MultiplicationTable(cfg, basis, cells)
