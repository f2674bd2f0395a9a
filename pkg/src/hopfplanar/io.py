"""JSON interchange for Hopf specs, labeled networks, and scalars.

Hopf spec files carry either explicit structure constants, a group
multiplication table, or a pointer to another spec whose dual is taken:

    {"type": "constants", "basis": [...], "mult": ..., "unit": ...,
     "comult": ..., "counit": ..., "antipode": ...}
    {"type": "group", "table": [[...]], "labels": [...], "name": "..."}
    {"type": "dual", "of": "other_spec.json"}

Structure tensors are nested row-major lists whose entries are integers or
"p/q" strings.  Network files look like

    {"shading": "plus", "boxes": {"b1": [coeff, ...], ...},
     "loops": [[{"box": "b1", "side": "star"}, ...], ...],
     "flows": {"b1": 1, ...}}

with box coefficients either rational shorthand or the full Scalar form
{"rat": [p, q], "delta": [r, s]}.  Flows default to +1 and are always
written back out.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .groups import GroupTable
from .hopf import HopfAlgebra, group_algebra
from .network import MINUS, OTHER, PLUS, STAR, LabeledNetwork, Pass, validate


class FormatError(ValueError):
    """Malformed interchange data."""


def parse_fraction(data):
    """An exact rational from int, "p/q" string, or [p, q] pair."""
    if isinstance(data, bool):
        raise FormatError(f"not a rational: {data!r}")
    if isinstance(data, int):
        return Fraction(data)
    if isinstance(data, str):
        try:
            return Fraction(data)
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"not a rational: {data!r}") from exc
    if isinstance(data, (list, tuple)) and len(data) == 2:
        try:
            return Fraction(int(data[0]), int(data[1]))
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise FormatError(f"not a rational: {data!r}") from exc
    raise FormatError(f"not a rational: {data!r}")


def fraction_data(value):
    """JSON shorthand for a Fraction: int when possible, else "p/q"."""
    if value.denominator == 1:
        return value.numerator
    return f"{value.numerator}/{value.denominator}"


def parse_scalar(field, data):
    """A field Scalar from the full form or rational shorthand."""
    if isinstance(data, dict):
        extra = set(data) - {"rat", "delta"}
        if extra or "rat" not in data:
            raise FormatError(f"bad scalar keys: {sorted(data)}")
        return field.scalar(
            parse_fraction(data["rat"]),
            parse_fraction(data.get("delta", 0)),
        )
    return field.scalar(parse_fraction(data))


def scalar_data(scalar):
    return scalar.to_json()


def _tensor_entries(data):
    """Nested lists of rationals; tensor entries are ints or "p/q" strings
    (the [p, q] pair shorthand would be ambiguous against nesting)."""
    if isinstance(data, list):
        return [_tensor_entries(x) for x in data]
    return parse_fraction(data)


def hopf_from_data(data, delta_sign=1, base_dir="."):
    """A HopfAlgebra from a parsed spec dictionary."""
    if not isinstance(data, dict) or "type" not in data:
        raise FormatError("hopf spec must be an object with a 'type' key")
    kind = data["type"]
    if kind == "group":
        if "table" not in data:
            raise FormatError("group spec needs a 'table'")
        table = data["table"]
        size = len(table)
        labels = data.get("labels", [f"g{i}" if i else "e" for i in range(size)])
        name = data.get("name", f"G{size}")
        try:
            group = GroupTable(name, labels, table)
        except ValueError as exc:
            raise FormatError(f"bad group table: {exc}") from exc
        if not group.is_group():
            raise FormatError("multiplication table is not a group")
        return group_algebra(group, delta_sign=delta_sign)
    if kind == "constants":
        needed = {"basis", "mult", "unit", "comult", "counit", "antipode"}
        missing = sorted(needed - set(data))
        if missing:
            raise FormatError(f"constants spec missing keys: {missing}")
        return HopfAlgebra(
            name=data.get("name", "H"),
            mult=_tensor_entries(data["mult"]),
            unit=_tensor_entries(data["unit"]),
            comult=_tensor_entries(data["comult"]),
            counit=_tensor_entries(data["counit"]),
            antipode=_tensor_entries(data["antipode"]),
            labels=[str(x) for x in data["basis"]],
            delta_sign=delta_sign,
        )
    if kind == "dual":
        if "of" not in data:
            raise FormatError("dual spec needs an 'of' path")
        inner = load_hopf(Path(base_dir) / data["of"], delta_sign=delta_sign)
        return inner.dual()
    raise FormatError(f"unknown hopf spec type: {kind!r}")


def load_hopf(path, delta_sign=1):
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from exc
    return hopf_from_data(data, delta_sign=delta_sign, base_dir=path.parent)


def network_from_data(algebra, data):
    """A validated LabeledNetwork from a parsed network dictionary."""
    if not isinstance(data, dict):
        raise FormatError("network spec must be an object")
    shading = data.get("shading", PLUS)
    if shading not in (PLUS, MINUS):
        raise FormatError(f"shading must be 'plus' or 'minus', got {shading!r}")
    boxes = {}
    for box_id, coeffs in data.get("boxes", {}).items():
        if not isinstance(coeffs, list):
            raise FormatError(f"box {box_id!r} needs a coefficient list")
        boxes[str(box_id)] = algebra.element(
            [parse_scalar(algebra.field, c) for c in coeffs]
        )
    loops = []
    for loop in data.get("loops", []):
        passes = []
        for entry in loop:
            if not isinstance(entry, dict) or set(entry) - {"box", "side"}:
                raise FormatError(f"bad pass entry: {entry!r}")
            side = entry.get("side")
            if side not in (STAR, OTHER):
                raise FormatError(f"side must be 'star' or 'other', got {side!r}")
            passes.append(Pass(str(entry.get("box")), side))
        loops.append(passes)
    flows = {}
    for box_id, flow in data.get("flows", {}).items():
        if flow not in (1, -1):
            raise FormatError(f"flow for {box_id!r} must be 1 or -1")
        if str(box_id) not in boxes:
            raise FormatError(f"flow given for unknown box {box_id!r}")
        flows[str(box_id)] = flow
    network = LabeledNetwork(boxes, loops, shading=shading, flows=flows)
    validate(network)
    return network


def load_network(path, algebra):
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from exc
    return network_from_data(algebra, data)


def network_to_data(network):
    """The JSON form of a network; flows are always written explicitly."""
    return {
        "shading": network.shading,
        "boxes": {
            box_id: [scalar_data(c) for c in label.coords]
            for box_id, label in sorted(network.boxes.items())
        },
        "loops": [
            [{"box": p.box, "side": p.side} for p in loop]
            for loop in network.loops
        ],
        "flows": {box: network.flows[box] for box in sorted(network.flows)},
    }


def dump_network(network, path):
    Path(path).write_text(
        json.dumps(network_to_data(network), indent=2, ensure_ascii=False) + "\n"
    )
