"""Scenario files: JSON descriptions of a glued pair plus optional bundle data.

A scenario names the two branches (built-in bases or inline ring documents),
and may carry bundle blocks, a polarization pair, a surface list, a phase
decoration request, and the deformation-assumption flag that decides whether
charge outputs may be labelled as smooth-fibre charges.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .charges import GluedBundleData
from .gaussian import GaussianScalar
from .pushout import (
    BlownUpChow,
    ComponentPair,
    PushoutPair,
    blow_up,
    builtin_base,
    twistor_base_from_json_dict,
)
from .surfaces import SurfaceData


@dataclass(frozen=True)
class DecorationRequest:
    theta_unit: GaussianScalar
    point_ids: tuple[str, ...]
    eta_choices: tuple[GaussianScalar, ...]


@dataclass(frozen=True)
class Scenario:
    geometry: PushoutPair
    bundles: tuple[GluedBundleData, ...] = ()
    polarization: ComponentPair | None = None
    surfaces: tuple[SurfaceData, ...] = ()
    decoration: DecorationRequest | None = None
    assumption_def: bool = False
    source: dict = field(default_factory=dict)


def _load_branch(doc) -> BlownUpChow:
    if not isinstance(doc, dict):
        raise ValueError("branch specification must be an object")
    if "builtin" in doc:
        return blow_up(builtin_base(str(doc["builtin"])))
    return blow_up(twistor_base_from_json_dict(doc))


def _element_pair(geometry: PushoutPair, doc, degree: int) -> ComponentPair:
    if not isinstance(doc, dict) or "branch1" not in doc or "branch2" not in doc:
        raise ValueError("a class pair needs branch1 and branch2 coefficient vectors")
    return ComponentPair(
        geometry.branch1.ring.homogeneous(degree, doc["branch1"]),
        geometry.branch2.ring.homogeneous(degree, doc["branch2"]),
    )


def scenario_from_dict(doc: dict) -> Scenario:
    for key in ("branch1", "branch2"):
        if key not in doc:
            raise ValueError(f"scenario is missing field {key!r}")
    geometry = PushoutPair(_load_branch(doc["branch1"]), _load_branch(doc["branch2"]))

    bundles = []
    for block in doc.get("bundles", []):
        bundles.append(
            GluedBundleData(
                geometry=geometry,
                rank=int(block.get("rank", 2)),
                c1_pair=_element_pair(geometry, block["c1"], 1),
                c2_pair=_element_pair(geometry, block["c2"], 2),
                restriction_to_quadric_trivial=bool(block.get("trivial_on_Q", False)),
                h2_end_dims=tuple(int(d) for d in block.get("h2_end", (0, 0))),
            )
        )

    polarization = None
    if "polarization" in doc:
        polarization = _element_pair(geometry, doc["polarization"], 1)

    surfaces = tuple(
        SurfaceData(int(s["degree"]), bool(s["contains_line"]))
        for s in doc.get("surfaces", [])
    )

    decoration = None
    if "decoration" in doc:
        dec = doc["decoration"]
        decoration = DecorationRequest(
            theta_unit=GaussianScalar.from_json_dict(dec["theta"]),
            point_ids=tuple(str(p["id"]) for p in dec.get("points", [])),
            eta_choices=tuple(
                GaussianScalar.from_json_dict(p["eta"]) for p in dec.get("points", [])
            ),
        )

    return Scenario(
        geometry=geometry,
        bundles=tuple(bundles),
        polarization=polarization,
        surfaces=surfaces,
        decoration=decoration,
        assumption_def=bool(doc.get("assumption_DEF", False)),
        source=doc,
    )


def load_scenario(path: str | Path) -> Scenario:
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(
            f"{path}: malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(doc, dict):
        raise ValueError(f"{path}: scenario document must be a JSON object")
    return scenario_from_dict(doc)


def default_scenario() -> Scenario:
    return scenario_from_dict({"branch1": {"builtin": "p3"}, "branch2": {"builtin": "p3"}})
