"""JSON Schemas (draft 2020-12) of the CLI's JSON outputs."""

_number_or_null = {"type": ["number", "null"]}

THRESHOLDS = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["schema", "request", "thresholds", "eta_bound", "orderings"],
    "additionalProperties": False,
    "properties": {
        "schema": {"const": 1},
        "request": {
            "type": "object",
            "required": ["d1", "d2", "weights"],
            "properties": {
                "d1": {"type": "integer", "minimum": 2},
                "d2": {"type": "integer", "minimum": 2},
                "weights": {"type": "array", "items": {"type": "number"}, "minItems": 2},
            },
        },
        "thresholds": {
            "type": "object",
            "required": ["white", "colored", "highdim", "chsh", "tracedist"],
            "additionalProperties": False,
            "properties": {
                "white": _number_or_null,
                "colored": _number_or_null,
                "highdim": {"type": "number"},
                "chsh": _number_or_null,
                "tracedist": {"type": "number"},
            },
        },
        "eta_bound": {"type": "number"},
        "orderings": {
            "type": "array",
            "items": {"enum": ["colored < white", "chsh < white", "highdim < tracedist"]},
        },
    },
}

SWEEP = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["schema", "request", "rows", "skipped"],
    "additionalProperties": False,
    "properties": {
        "schema": {"const": 1},
        "request": {
            "type": "object",
            "required": ["d1", "d2", "p2", "start", "stop", "steps"],
        },
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["p1", "upper_one_minus_p", "lower_one_minus_p"],
                "additionalProperties": False,
                "properties": {
                    "p1": {"type": "number"},
                    "upper_one_minus_p": {"type": "number"},
                    "lower_one_minus_p": {"type": "number"},
                },
            },
        },
        "skipped": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["p1", "reason"],
                "properties": {"p1": {"type": "number"}, "reason": {"type": "string"}},
            },
        },
    },
}
