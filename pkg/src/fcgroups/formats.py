"""JSON group and chain files, element parsing and the bundled fixtures."""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Any

import jsonschema

from .affine import AffineGroup
from .core import Group, GroupError, evaluate
from .fc import FCChain, make_chain
from .perm import PermGroup

GROUP_SCHEMA_TAG = "fc-group/1"
CHAIN_SCHEMA_TAG = "fc-chain/1"
FIXTURE_ENV = "FC_FIXTURE_DIR"
FIXTURE_NAMES = ("trivial", "S3", "D8", "A4", "C12", "Dinf", "ZxS3", "Z2C4")


class FormatError(GroupError):
    """Unreadable file, schema violation, or an inconsistent group description."""


_int_row = {"type": "array", "items": {"type": "integer"}}
_level = {"type": "array"}

_finite = {
    "type": "object",
    "required": ["kind", "degree", "generators"],
    "properties": {
        "kind": {"const": "finite-permutation"},
        "degree": {"type": "integer", "minimum": 1},
        "generators": {"type": "object", "additionalProperties": _int_row},
    },
}

GROUP_SCHEMA = {
    "type": "object",
    "required": ["kind"],
    "properties": {
        "schema": {"const": GROUP_SCHEMA_TAG},
        "name": {"type": "string"},
        "chains": {
            "type": "object",
            "properties": {
                "nilpotent": {"type": "array", "items": _level},
                "solvable": {"type": "array", "items": _level},
            },
            "additionalProperties": False,
        },
    },
    "oneOf": [
        _finite,
        {
            "type": "object",
            "required": ["kind", "rank", "finite_part", "action"],
            "properties": {
                "kind": {"const": "affine"},
                "rank": {"type": "integer", "minimum": 0},
                "finite_part": _finite,
                "action": {"type": "object",
                           "additionalProperties": {"type": "array", "items": _int_row}},
            },
        },
    ],
}

CHAIN_SCHEMA = {
    "type": "object",
    "required": ["schema", "kind", "levels"],
    "properties": {
        "schema": {"const": CHAIN_SCHEMA_TAG},
        "kind": {"enum": ["nilpotent", "solvable"]},
        "levels": {"type": "array", "minItems": 1, "items": _level},
    },
}


def _validate(doc, schema, what: str) -> None:
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise FormatError(f"{what} schema violation at {where}: {exc.message}") from None


def _finite_from(doc: dict, name: str = "") -> PermGroup:
    names = list(doc["generators"])
    degree = doc["degree"]
    gens = []
    for n in names:
        img = doc["generators"][n]
        if sorted(img) != list(range(1, degree + 1)):
            raise FormatError(f"generator {n} is not a permutation of 1..{degree}")
        gens.append(tuple(x - 1 for x in img))
    return PermGroup(degree, gens, names=names, name=name)


def group_from_dict(doc: dict) -> Group:
    _validate(doc, GROUP_SCHEMA, "group file")
    name = doc.get("name", "")
    if doc["kind"] == "finite-permutation":
        return _finite_from(doc, name)
    F = _finite_from(doc["finite_part"])
    action = doc["action"]
    if set(action) != set(F.names):
        raise FormatError("action must give one matrix per finite-part generator")
    try:
        return AffineGroup(doc["rank"], F, [action[n] for n in F.names], name=name)
    except GroupError as exc:
        raise FormatError(str(exc)) from None


def generator_names(group: Group) -> dict[str, Any]:
    if isinstance(group, AffineGroup):
        return group.generator_names
    return dict(zip(group.names, group.generators))


def parse_element(group: Group, obj):
    """Names, explicit elements, and words such as ``["comm", "a", "b"]``."""
    names = generator_names(group)

    def leaf(x):
        if isinstance(x, str):
            if x in ("e", "1"):
                return group.identity
            if x not in names:
                raise FormatError(f"unknown generator name {x!r}")
            return names[x]
        if isinstance(x, list) and x and isinstance(x[0], str):
            return [x[0]] + [a if isinstance(a, int) and x[0] == "pow" and i == 1 else leaf(a)
                             for i, a in enumerate(x[1:])]
        try:
            return group.parse_element(x)
        except GroupError as exc:
            raise FormatError(str(exc)) from None

    try:
        return evaluate(group, leaf(obj))
    except GroupError as exc:
        raise FormatError(str(exc)) from None


def levels_from(group: Group, levels: list, kind: str) -> FCChain:
    subs = [group.subgroup([parse_element(group, e) for e in level]) for level in levels]
    return make_chain(group, subs, kind)


def chain_from_dict(group: Group, doc: dict) -> FCChain:
    _validate(doc, CHAIN_SCHEMA, "chain file")
    return levels_from(group, doc["levels"], doc["kind"])


def fixture_dir() -> Path:
    override = os.environ.get(FIXTURE_ENV)
    if override:
        return Path(override)
    return Path(str(resources.files("fcgroups") / "fixtures"))


@dataclass
class LoadedGroup:
    group: Group
    doc: dict
    digest: str
    source: str

    def bundled_chain(self, kind: str) -> FCChain:
        chains = self.doc.get("chains", {})
        if kind not in chains:
            raise FormatError(f"{self.source} has no bundled {kind} chain")
        return levels_from(self.group, chains[kind], kind)


def _read(path: Path) -> tuple[bytes, Any]:
    try:
        raw = path.read_bytes()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return raw, json.loads(raw)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path} is not valid JSON: {exc}") from None


def resolve_path(source: str) -> Path:
    """A file path, or the name of a fixture in the fixture directory."""
    path = Path(source)
    if path.is_file():
        return path
    candidate = fixture_dir() / f"{source}.json"
    if candidate.is_file():
        return candidate
    raise FormatError(f"no such group file or fixture: {source}")


def load_group(source: str) -> LoadedGroup:
    path = resolve_path(source)
    raw, doc = _read(path)
    group = group_from_dict(doc)
    if not group.name:
        group.name = path.stem
    return LoadedGroup(group, doc, hashlib.sha256(raw).hexdigest(), str(source))


def load_chain(group: Group, path: str) -> tuple[FCChain, str]:
    raw, doc = _read(Path(path))
    return chain_from_dict(group, doc), hashlib.sha256(raw).hexdigest()


def fixtures() -> dict[str, LoadedGroup]:
    """Every group file in the fixture directory, keyed by name."""
    return {p.stem: load_group(str(p)) for p in sorted(fixture_dir().glob("*.json"))}
