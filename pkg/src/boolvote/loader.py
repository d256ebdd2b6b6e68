"""Reading voting-system description files (JSON).

A file names the voters and gives either weight rows or explicit minimal
winning coalitions; forbidden coalitions are listed by voter name::

    {
      "voters": ["SNP", "Labour", "Conservative", "LibDem", "Green"],
      "rows": [{"weights": [47, 46, 17, 16, 2], "quota": 65}],
      "forbidden": [["SNP", "Labour"]]
    }
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .voting import ForbiddenCoalition, VotingSystem, WeightRow

FIXTURES = ("two_of_three.json", "scottish2007.json", "seven_voters.json", "five_of_eight.json")


class InputError(ValueError):
    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


def _int(value, field: str, minimum: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(field, f"expected an integer, got {value!r}")
    if value < minimum:
        kind = "a positive integer" if minimum == 1 else f"an integer >= {minimum}"
        raise InputError(field, f"must be {kind}, got {value}")
    return value


def _name_list(value, field: str, index: dict) -> frozenset:
    if not isinstance(value, list):
        raise InputError(field, "expected a list of voter names")
    members = set()
    for k, name in enumerate(value):
        if name not in index:
            raise InputError(f"{field}[{k}]", f"unknown voter {name!r}")
        members.add(index[name])
    return frozenset(members)


def system_from_dict(data, extra_forbidden=()) -> VotingSystem:
    if not isinstance(data, dict):
        raise InputError("<root>", "expected a JSON object")
    voters = data.get("voters")
    if not isinstance(voters, list) or not voters or not all(isinstance(v, str) for v in voters):
        raise InputError("voters", "expected a non-empty list of names")
    if len(set(voters)) != len(voters):
        raise InputError("voters", "names must be unique")
    index = {name: k for k, name in enumerate(voters)}

    has_rows = "rows" in data
    has_mwcs = "explicit_mwcs" in data
    if has_rows == has_mwcs:
        raise InputError("rows", "give exactly one of 'rows' or 'explicit_mwcs'")

    rows = []
    if has_rows:
        if not isinstance(data["rows"], list) or not data["rows"]:
            raise InputError("rows", "expected a non-empty list")
        for r, row in enumerate(data["rows"]):
            field = f"rows[{r}]"
            if not isinstance(row, dict):
                raise InputError(field, "expected an object with 'weights' and 'quota'")
            weights = row.get("weights")
            if not isinstance(weights, list) or len(weights) != len(voters):
                raise InputError(f"{field}.weights", f"expected {len(voters)} integers")
            weights = [_int(w, f"{field}.weights[{k}]", 0) for k, w in enumerate(weights)]
            quota = _int(row.get("quota"), f"{field}.quota", 1)
            rows.append(WeightRow(tuple(weights), quota))

    winning = []
    if has_mwcs:
        if not isinstance(data["explicit_mwcs"], list) or not data["explicit_mwcs"]:
            raise InputError("explicit_mwcs", "expected a non-empty list")
        for k, coalition in enumerate(data["explicit_mwcs"]):
            members = _name_list(coalition, f"explicit_mwcs[{k}]", index)
            if not members:
                raise InputError(f"explicit_mwcs[{k}]", "coalition is empty")
            winning.append(members)

    forbidden = []
    raw = data.get("forbidden", [])
    if not isinstance(raw, list):
        raise InputError("forbidden", "expected a list of voter-name lists")
    for k, coalition in enumerate(list(raw) + [list(c) for c in extra_forbidden]):
        field = f"forbidden[{k}]"
        members = _name_list(coalition, field, index)
        if len(members) < 2:
            raise InputError(field, "a forbidden coalition needs at least two distinct voters")
        forbidden.append(ForbiddenCoalition(members))

    return VotingSystem(tuple(voters), tuple(rows), tuple(forbidden), tuple(winning))


def resolve_path(source: str | Path):
    """A filesystem path, or the name of a bundled fixture."""
    path = Path(source)
    if path.exists():
        return path
    bundled = resources.files("boolvote") / "fixtures" / path.name
    if bundled.is_file():
        return bundled
    raise InputError(str(source), "no such file or bundled fixture")


def load_system(source: str | Path, extra_forbidden=()) -> VotingSystem:
    path = resolve_path(source)
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise InputError(f"line {exc.lineno}", f"invalid JSON ({exc.msg})") from None
    return system_from_dict(data, extra_forbidden)
