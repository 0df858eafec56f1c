"""JSON schemas for every document the command line emits."""

from __future__ import annotations

import jsonschema

_INT = {"type": "integer"}
_NAT = {"type": "integer", "minimum": 0}
_CENSUS = {
    "type": "object",
    "patternProperties": {"^[ADE][0-9]+$": {"type": "integer", "minimum": 1}},
    "additionalProperties": False,
}

INVARIANTS = {
    "type": "object",
    "required": ["k2", "chi", "pg", "q", "h11"],
    "properties": {"k2": _INT, "chi": _INT, "pg": _NAT, "q": _NAT, "h11": _NAT},
}

CERTIFICATE = {
    "type": "object",
    "required": ["census_rank", "independent_divisors", "extra_rank", "lower_bound", "h11", "maximal"],
    "properties": {
        "census_rank": _NAT,
        "independent_divisors": _NAT,
        "extra_rank": _NAT,
        "lower_bound": _NAT,
        "h11": _NAT,
        "maximal": {"type": "boolean"},
    },
}

RECORD = {
    "type": "object",
    "required": ["family", "params", "surface", "building_data", "census", "invariants", "rank_breakdown", "maximal"],
    "properties": {
        "family": {"enum": ["A", "B", "M13", "M76"]},
        "params": {
            "oneOf": [
                {"type": "null"},
                {"type": "object", "required": ["n", "m", "k"], "properties": {"n": _NAT, "m": _NAT, "k": _NAT}},
            ]
        },
        "surface": {"type": "string"},
        "building_data": {"type": "object", "required": ["surface", "B", "L"]},
        "census": _CENSUS,
        "invariants": INVARIANTS,
        "rank_breakdown": {"type": "object", "required": ["census_rank", "lower_bound", "h11"]},
        "certificate": CERTIFICATE,
        "maximal": {"type": "boolean"},
    },
}

SOLVE = {
    "type": "object",
    "required": ["family", "n", "m", "k", "k2", "chi"],
    "properties": {"family": {"enum": ["a", "b"]}, "n": _NAT, "m": _NAT, "k": _NAT},
}

GERM = {
    "type": "object",
    "required": ["germ", "verdict", "milnor"],
    "properties": {
        "germ": {"type": "string"},
        "verdict": {"type": "string", "pattern": "^(Smooth|NonIsolated|NotAde|[ADE][0-9]+)$"},
        "milnor": {"type": ["integer", "null"]},
    },
}

EVENT = {
    "type": "object",
    "required": ["point", "membership", "type", "rule", "outcome"],
    "properties": {
        "point": {"type": "string"},
        "membership": {"type": "array", "items": {"type": "string"}},
        "type": {"type": "string"},
        "rule": {"type": ["string", "null"]},
        "outcome": _CENSUS,
    },
}

CENSUS_REPORT = {
    "type": "object",
    "required": ["source", "events", "census"],
    "properties": {"events": {"type": "array", "items": EVENT}, "census": _CENSUS},
}

DENSITY = {
    "type": "object",
    "required": ["q", "k2", "chi", "lambda"],
    "properties": {"q": {"type": "string"}, "k2": _NAT, "chi": _NAT, "lambda": _NAT},
}

COVERAGE = {
    "type": "object",
    "required": ["k2", "chi", "source", "additional"],
    "properties": {
        "source": {
            "enum": [
                "FamilyA",
                "FamilyB",
                "Lemma_M13",
                "Lemma_M55_external",
                "Lemma_M76",
                "Persson_external",
                "Open",
            ]
        },
        "additional": {"type": "array"},
    },
}

SWEEP = {
    "type": "object",
    "required": ["columns", "rows"],
    "properties": {
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["chi", "k2", "admissible", "in_region", "family", "n", "m", "k", "h11"],
            },
        }
    },
}

REPORT = {
    "type": "object",
    "required": ["passed", "checks"],
    "properties": {
        "passed": {"type": "boolean"},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "group", "passed", "seconds"],
            },
        },
    },
}

ERROR = {
    "type": "object",
    "required": ["error", "message"],
    "properties": {"error": {"type": "string"}, "message": {"type": "string"}},
}

BY_COMMAND = {
    "construct": RECORD,
    "certify": {"type": "object", "required": ["family", "certificate"], "properties": {"certificate": CERTIFICATE}},
    "solve": SOLVE,
    "classify-germ": GERM,
    "census": CENSUS_REPORT,
    "density": DENSITY,
    "coverage": COVERAGE,
    "geography": SWEEP,
    "verify-paper": REPORT,
}


def validate(doc, schema) -> None:
    """Raise ``jsonschema.ValidationError`` when ``doc`` does not match."""
    jsonschema.validate(doc, schema)
