"""JSON Schemas for the ``--format json`` outputs of the command line tool."""

_config = {"type": "string", "pattern": r"^[()]*$"}
_partition = {"type": "string", "pattern": r"^([tb][0-9]+([,|][tb][0-9]+)*)?$"}
_coefficient = {"type": "string", "minLength": 1}

TABLE = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "hdtl-table/1",
    "type": "object",
    "required": ["schema", "config", "basis", "cells"],
    "additionalProperties": False,
    "properties": {
        "schema": {"const": "hdtl-table/1"},
        "config": _config,
        "basis": {"type": "array", "items": _partition},
        "cells": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {
                    "type": "array",
                    "items": {
                        "type": "array",
                        "prefixItems": [{"type": "integer", "minimum": 0}, _coefficient],
                        "minItems": 2,
                        "maxItems": 2,
                    },
                },
            },
        },
    },
}

CLASSES = {
    "type": "object",
    "required": ["top", "bottom", "kind", "classes"],
    "additionalProperties": False,
    "properties": {
        "top": _config,
        "bottom": _config,
        "kind": {"enum": ["sh", "h"]},
        "classes": {"type": "array", "items": _partition},
    },
}

AUT = {
    "type": "object",
    "required": ["config", "order", "elements"],
    "additionalProperties": False,
    "properties": {
        "config": _config,
        "order": {"type": "integer", "minimum": 1},
        "elements": {"type": "array", "items": {"type": "string", "pattern": r"^(\(\)|(\(t[0-9]+( t[0-9]+)+\))+)$"}},
    },
}

COMPOSE = {
    "type": "object",
    "required": ["top", "mid", "bottom", "terms"],
    "additionalProperties": False,
    "properties": {
        "top": _config,
        "mid": _config,
        "bottom": _config,
        "terms": {
            "type": "array",
            "items": {
                "type": "array",
                "prefixItems": [_partition, _coefficient],
                "minItems": 2,
                "maxItems": 2,
            },
        },
    },
}

CHECK = {
    "type": "object",
    "required": ["config", "mode", "seed", "passed", "checks"],
    "additionalProperties": False,
    "properties": {
        "config": _config,
        "mode": {"enum": ["exhaustive", "sampled"]},
        "seed": {"type": ["integer", "null"]},
        "passed": {"type": "boolean"},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["law", "tested", "passed", "counterexample"],
                "additionalProperties": False,
                "properties": {
                    "law": {"type": "string"},
                    "tested": {"type": "integer", "minimum": 0},
                    "passed": {"type": "boolean"},
                    "counterexample": {
                        "type": ["array", "null"],
                        "items": {"type": "string"},
                    },
                },
            },
        },
    },
}

DIMS = {
    "type": "object",
    "required": ["top", "bottom", "sh", "h", "pi_top", "pi_bottom"],
    "additionalProperties": False,
    "properties": {
        "top": _config,
        "bottom": _config,
        "sh": {"type": "integer", "minimum": 1},
        "h": {"type": "integer", "minimum": 1},
        "pi_top": {"type": "integer", "minimum": 1},
        "pi_bottom": {"type": "integer", "minimum": 1},
    },
}

BY_COMMAND = {
    "table": TABLE,
    "classes": CLASSES,
    "aut": AUT,
    "compose": COMPOSE,
    "check": CHECK,
    "dims": DIMS,
}
