"""Scenario files: a small validated JSON schema describing one problem.

A scenario names the equation class, its coefficients as expression
strings, and optionally a subgroup, a cocycle, scan bounds and a rewrite
budget.  Validation is strict: unknown keys anywhere raise ScenarioError
with the offending location, so typos fail loudly instead of being
ignored.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .errors import ScenarioError
from .pv import DEFAULT_SCAN_BOUNDS, EQUATION_CLASSES

__all__ = ["Scenario", "load_scenario", "scenario_from_dict"]


_TOP_KEYS = {"base_var", "equation", "scan", "budget", "subgroup", "cocycle"}
_EQ_KEYS = {"class", "coefficients", "radical_base"}
_SCAN_KEYS = {"degree", "coeff_degree"}
_SUBGROUP_KEYS = {"kind", "order", "matrices"}
_SUBGROUP_KINDS = {"FULL", "TRIVIAL", "MU_N", "DIAGONAL", "SO2", "FINITE_LIST"}


@dataclass
class Scenario:
    eq_class: str
    coefficients: tuple[str, ...]
    base_var: str = "t"
    radical_base: str | None = None
    scan_bounds: tuple[int, int] = DEFAULT_SCAN_BOUNDS
    budget: int | None = None
    subgroup: dict | None = None
    cocycle: tuple[tuple[str, ...], ...] | None = None

    def describe(self) -> str:
        return f"{self.eq_class} equation with coefficients {list(self.coefficients)}"


def _reject_unknown(obj: dict, allowed: set, loc: str) -> None:
    extra = sorted(set(obj) - allowed)
    if extra:
        raise ScenarioError(
            f"unknown key{'s' if len(extra) > 1 else ''} {extra}", location=loc
        )


def _need(obj: dict, key: str, loc: str) -> Any:
    if key not in obj:
        raise ScenarioError(f"missing required key {key!r}", location=loc)
    return obj[key]


def _expect_str(value: Any, loc: str) -> str:
    if not isinstance(value, str):
        raise ScenarioError(f"expected a string, got {type(value).__name__}", location=loc)
    return value


def _expect_int(value: Any, loc: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise ScenarioError(f"expected an integer, got {type(value).__name__}", location=loc)
    return value


def scenario_from_dict(raw: Any, loc: str = "scenario") -> Scenario:
    if not isinstance(raw, dict):
        raise ScenarioError("scenario must be a JSON object", location=loc)
    _reject_unknown(raw, _TOP_KEYS, loc)

    eq = _need(raw, "equation", loc)
    eq_loc = f"{loc}.equation"
    if not isinstance(eq, dict):
        raise ScenarioError("equation must be an object", location=eq_loc)
    _reject_unknown(eq, _EQ_KEYS, eq_loc)
    eq_class = _expect_str(_need(eq, "class", eq_loc), f"{eq_loc}.class")
    if eq_class not in EQUATION_CLASSES:
        raise ScenarioError(
            f"equation class must be one of {sorted(EQUATION_CLASSES)}",
            location=f"{eq_loc}.class",
        )
    coeffs_raw = _need(eq, "coefficients", eq_loc)
    if not isinstance(coeffs_raw, list) or not coeffs_raw:
        raise ScenarioError(
            "coefficients must be a nonempty list of expression strings",
            location=f"{eq_loc}.coefficients",
        )
    coeffs = tuple(
        _expect_str(c, f"{eq_loc}.coefficients[{i}]") for i, c in enumerate(coeffs_raw)
    )
    radical_base = None
    if "radical_base" in eq:
        radical_base = _expect_str(eq["radical_base"], f"{eq_loc}.radical_base")

    base_var = "t"
    if "base_var" in raw:
        base_var = _expect_str(raw["base_var"], f"{loc}.base_var")

    bounds = DEFAULT_SCAN_BOUNDS
    if "scan" in raw:
        scan = raw["scan"]
        scan_loc = f"{loc}.scan"
        if not isinstance(scan, dict):
            raise ScenarioError("scan must be an object", location=scan_loc)
        _reject_unknown(scan, _SCAN_KEYS, scan_loc)
        deg = _expect_int(_need(scan, "degree", scan_loc), f"{scan_loc}.degree")
        cdeg = _expect_int(
            _need(scan, "coeff_degree", scan_loc), f"{scan_loc}.coeff_degree"
        )
        if deg < 1 or cdeg < 0:
            raise ScenarioError("scan bounds out of range", location=scan_loc)
        bounds = (deg, cdeg)

    budget = None
    if "budget" in raw:
        budget = _expect_int(raw["budget"], f"{loc}.budget")
        if budget < 1:
            raise ScenarioError("budget must be positive", location=f"{loc}.budget")

    subgroup = None
    if "subgroup" in raw:
        sub = raw["subgroup"]
        sub_loc = f"{loc}.subgroup"
        if not isinstance(sub, dict):
            raise ScenarioError("subgroup must be an object", location=sub_loc)
        _reject_unknown(sub, _SUBGROUP_KEYS, sub_loc)
        kind = _expect_str(_need(sub, "kind", sub_loc), f"{sub_loc}.kind")
        if kind not in _SUBGROUP_KINDS:
            raise ScenarioError(
                f"subgroup kind must be one of {sorted(_SUBGROUP_KINDS)}",
                location=f"{sub_loc}.kind",
            )
        if kind == "MU_N":
            order = _expect_int(_need(sub, "order", sub_loc), f"{sub_loc}.order")
            if order < 1:
                raise ScenarioError("order must be positive", location=f"{sub_loc}.order")
        elif "order" in sub:
            raise ScenarioError(
                "order is only meaningful for MU_N", location=f"{sub_loc}.order"
            )
        if kind == "FINITE_LIST":
            mats = _need(sub, "matrices", sub_loc)
            _validate_matrices(mats, f"{sub_loc}.matrices")
        elif "matrices" in sub:
            raise ScenarioError(
                "matrices are only meaningful for FINITE_LIST",
                location=f"{sub_loc}.matrices",
            )
        subgroup = sub

    cocycle = None
    if "cocycle" in raw:
        cocycle = _validate_matrix(raw["cocycle"], f"{loc}.cocycle")

    return Scenario(
        eq_class,
        coeffs,
        base_var,
        radical_base,
        bounds,
        budget,
        subgroup,
        cocycle,
    )


def _validate_matrix(rows: Any, loc: str) -> tuple[tuple[str, ...], ...]:
    if not isinstance(rows, list) or not rows:
        raise ScenarioError("expected a nonempty list of rows", location=loc)
    out = []
    width = None
    for i, row in enumerate(rows):
        if not isinstance(row, list) or not row:
            raise ScenarioError("row must be a nonempty list", location=f"{loc}[{i}]")
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ScenarioError("ragged matrix", location=f"{loc}[{i}]")
        out.append(
            tuple(_expect_str(v, f"{loc}[{i}][{j}]") for j, v in enumerate(row))
        )
    if len(out) != width:
        raise ScenarioError("matrix must be square", location=loc)
    return tuple(out)


def _validate_matrices(mats: Any, loc: str) -> None:
    if not isinstance(mats, list) or not mats:
        raise ScenarioError("expected a nonempty list of matrices", location=loc)
    for i, m in enumerate(mats):
        _validate_matrix(m, f"{loc}[{i}]")


def load_scenario(path: str) -> Scenario:
    try:
        with open(path) as fh:
            raw = json.load(fh)
    except OSError as e:
        raise ScenarioError(f"cannot read scenario file: {e}", location=path)
    except json.JSONDecodeError as e:
        raise ScenarioError(f"invalid JSON: {e}", location=path)
    return scenario_from_dict(raw)
