import json

import pytest
from hypothesis import given, settings, strategies as st

import hdtl.tables
from hdtl import (
    AlgebraElement,
    automorphism_group,
    check_laws,
    compose_h,
    dimensions,
    h_class_of,
    identity_class,
    make_sh_class,
    monomial,
    multiplication_table,
    parse_boundary,
    parse_table,
    serialize_table,
)
from hdtl.colouring import enumerate_h_classes
from hdtl.tables import TableTooLarge

P = parse_boundary


def test_single_circle_table():
    cfg = P("()")
    t = multiplication_table(cfg)
    unit = identity_class(cfg)
    cap = h_class_of(make_sh_class(cfg, cfg, "t1|b1"))
    assert t.basis == (unit, cap)
    el = AlgebraElement.basis
    assert t.cells[0][0] == el(unit)
    assert t.cells[0][1] == el(cap) == t.cells[1][0]
    assert t.cells[1][1] == el(cap, monomial(0, 1))


def test_empty_table():
    t = multiplication_table(P(""))
    assert len(t.basis) == 1
    assert t.cells[0][0] == AlgebraElement.basis(t.basis[0])


@pytest.mark.parametrize("text", ["", "()", "(())", "()()", "(()())"])
def test_unit_row_and_column(text):
    t = multiplication_table(P(text))
    u = t.index(identity_class(P(text)))
    for k, h in enumerate(t.basis):
        assert t.cells[u][k] == AlgebraElement.basis(h) == t.cells[k][u]


def test_basis_limit():
    with pytest.raises(TableTooLarge):
        multiplication_table(P("()()"), limit=8)
    assert len(multiplication_table(P("()()"), limit=9).basis) == 9


def test_json_smallest_table():
    text = serialize_table(multiplication_table(P("")), "json")
    assert text == '{"schema":"hdtl-table/1","config":"","basis":[""],"cells":[[[[0,"1"]]]]}'
    data = json.loads(text)
    del data["schema"]
    assert data == {"config": "", "basis": [""], "cells": [[[[0, "1"]]]]}


def test_markdown_nested():
    t = multiplication_table(P("(())"))
    md = serialize_table(t, "markdown")
    first_row = md.splitlines()[2]
    assert first_row.startswith("| D1 | p*D1 |")
    assert "- D1 = `t1,t2,b1,b2`" in md


def test_csv_star():
    csv_text = serialize_table(multiplication_table(P("()()")), "csv")
    lines = csv_text.splitlines()
    assert lines[0] == "row x col," + ",".join(f"D{k}" for k in range(1, 10))
    assert "1/2*q*D" in csv_text


def test_unknown_format():
    with pytest.raises(ValueError):
        serialize_table(multiplication_table(P("")), "xml")


@settings(max_examples=10, deadline=None)
@given(st.sampled_from(["", "()", "(())", "()()", "(()())", "()()()"]))
def test_json_round_trip(text):
    t = multiplication_table(P(text))
    assert parse_table(serialize_table(t, "json")) == t


def test_cells_independent_of_order():
    cfg = P("(()())")
    t = multiplication_table(cfg)
    compose_h.cache_clear()
    h_class_of.cache_clear()
    basis = enumerate_h_classes(cfg, cfg)
    for i in reversed(range(len(basis))):
        for j in reversed(range(len(basis))):
            assert compose_h(basis[i], basis[j]) == t.cells[i][j]


@pytest.mark.parametrize("text, n", [("(())", 729), ("()()", 729), ("", 1)])
def test_check_laws_exhaustive(text, n):
    report = check_laws(P(text))
    assert report.passed
    assoc = [c for c in report.checks if c.name == "associativity"][0]
    assert assoc.tested == n


def test_check_laws_sampled_is_reproducible():
    a = check_laws(P("()()()"), mode="sampled", seed=7, samples=50)
    b = check_laws(P("()()()"), mode="sampled", seed=7, samples=50)
    assert a.passed and a.as_dict() == b.as_dict()
    assert a.seed == 7


def test_check_laws_reports_counterexample(monkeypatch):
    monkeypatch.setattr(hdtl.tables, "compose", lambda x, y: x)
    report = check_laws(P("()"))
    assert not report.passed
    failed = [c for c in report.checks if not c.passed]
    assert failed and all(c.counterexample for c in failed)


def test_check_laws_bad_mode():
    with pytest.raises(ValueError):
        check_laws(P("()"), mode="sometimes")


@pytest.mark.parametrize(
    "top, bottom, expected",
    [("(())", "(())", (9, 9, 1, 1)), ("()()", "()()", (15, 9, 2, 2)), ("()", "()", (2, 2, 1, 1))],
)
def test_dimensions(top, bottom, expected):
    assert dimensions(P(top), P(bottom)) == expected
    assert expected[2] == automorphism_group(P(top)).order


@pytest.mark.parametrize("text", ["(((())))", "(())(())"])
def test_sampled_laws_four_circles(text):
    report = check_laws(P(text), mode="sampled", seed=5, samples=1000)
    assert report.passed, report.as_dict()


def _sweep():
    from oracles import balanced_strings

    return [(s, "exhaustive") for n in range(4) for s in balanced_strings(n)] + [
        (s, "sampled") for s in balanced_strings(4)
    ]


@pytest.mark.slow
@pytest.mark.parametrize("text, mode", _sweep())
def test_law_sweep(text, mode):
    report = check_laws(P(text), mode=mode, seed=1, samples=1000)
    assert report.passed, report.as_dict()
