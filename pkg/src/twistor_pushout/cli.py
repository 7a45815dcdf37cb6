"""Command-line front end: load a scenario, dispatch, emit a report.

Every command produces a deterministic report (sorted keys, exact integers)
that embeds the list of identities it verified; the process exits nonzero
exactly when some identity fails, so logged runs double as certificates.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import __version__
from .charges import branch_charge_degrees, obstruction_dim, polarized_charge
from .gaussian import GaussianScalar
from .neck import (
    antidiagonal_quotient_over_fibre,
    character_quotient,
    kn_fixed_phase_bundle,
    lens_space_of,
    phase_decoration,
    raw_fibre_pairing,
    restrict_to_curve,
    restrict_to_ruling_fibre_bundle,
)
from .pushout import ComponentPair, brute_force_matched_lattice
from .quadric import (
    Bidegree,
    arithmetic_genus,
    hyperplane_class,
    intersection_number,
    ruling_swap_pushforward,
)
from .realstruct import (
    BASEPOINT,
    QuadricPoint,
    base_locus,
    evaluate_section,
    invariant_section_from_reals,
    is_fixed_point,
    is_invariant_section,
    pairs_projectively_equal,
    pencil_value,
    point,
    real_structure,
)
from .scenario import Scenario, default_scenario, load_scenario
from .surfaces import SurfaceData, classify_all, glue_check, trace_bidegree, trace_class


class Report:
    """Results plus the list of verified identities for one command."""

    def __init__(self, command: str, options: dict) -> None:
        self.command = command
        self.options = options
        self.results: dict = {}
        self.identities: list[dict] = []

    def check(self, name: str, passed: bool, detail: str = "") -> None:
        entry = {"name": name, "passed": bool(passed)}
        if detail:
            entry["detail"] = detail
        self.identities.append(entry)

    def all_passed(self) -> bool:
        return all(entry["passed"] for entry in self.identities)

    def to_json(self) -> str:
        doc = {
            "command": self.command,
            "options": self.options,
            "results": self.results,
            "identities": self.identities,
            "all_identities_passed": self.all_passed(),
        }
        return json.dumps(doc, indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = [f"== {self.command} =="]
        lines.extend(_render_value(self.results, indent=0))
        lines.append("identities:")
        for entry in self.identities:
            mark = "ok " if entry["passed"] else "FAIL"
            detail = f"  ({entry['detail']})" if entry.get("detail") else ""
            lines.append(f"  [{mark}] {entry['name']}{detail}")
        return "\n".join(lines)


def _is_flat(value) -> bool:
    return isinstance(value, list) and not any(isinstance(v, (dict, list)) for v in value)


def _render_value(value, indent: int) -> list[str]:
    pad = "  " * indent
    lines: list[str] = []
    if isinstance(value, dict):
        for key in value:
            sub = value[key]
            if _is_flat(sub):
                lines.append(f"{pad}{key}: [{', '.join(str(v) for v in sub)}]")
            elif isinstance(sub, (dict, list)) and sub:
                lines.append(f"{pad}{key}:")
                lines.extend(_render_value(sub, indent + 1))
            else:
                lines.append(f"{pad}{key}: {sub}")
    elif isinstance(value, list):
        for sub in value:
            if _is_flat(sub):
                lines.append(f"{pad}- [{', '.join(str(v) for v in sub)}]")
            elif isinstance(sub, dict):
                rendered = _render_value(sub, indent + 1)
                if rendered:
                    first = rendered[0].lstrip()
                    lines.append(f"{pad}- {first}")
                    lines.extend(rendered[1:])
            elif isinstance(sub, list):
                lines.extend(_render_value(sub, indent))
            else:
                lines.append(f"{pad}- {sub}")
    else:
        lines.append(f"{pad}{value}")
    return lines


def _branch(scenario: Scenario, which: int):
    if which == 1:
        return scenario.geometry.branch1
    if which == 2:
        return scenario.geometry.branch2
    raise ValueError("branch must be 1 or 2")


# -- commands -------------------------------------------------------------------


def cmd_ring_show(scenario: Scenario, args) -> Report:
    report = Report("ring-show", {"branch": args.branch})
    if args.branch == "quadric":
        ring = scenario.geometry.quadric
        report.results["name"] = ring.name
        report.results["ranks"] = [ring.rank(d) for d in range(ring.top_degree + 1)]
        report.results["basis"] = [list(labels) for labels in ring.basis_labels]
        b = ring.basis_element(1, 0)
        w = ring.basis_element(1, 1)
        report.results["products"] = [
            f"b . b = {b * b}",
            f"b . w = {b * w}",
            f"w . w = {w * w}",
        ]
        report.check("the two rulings intersect in a point", b * w == ring.basis_element(2, 0))
        report.check("each ruling squares to zero", (b * b).is_zero() and (w * w).is_zero())
        return report
    blown = _branch(scenario, int(args.branch))
    ring = blown.ring
    report.results["name"] = ring.name
    report.results["ranks"] = [ring.rank(d) for d in range(ring.top_degree + 1)]
    report.results["basis"] = [list(labels) for labels in ring.basis_labels]
    table = []
    for d1 in range(1, ring.top_degree + 1):
        for i1 in range(ring.rank(d1)):
            for d2 in range(d1, ring.top_degree + 1 - d1):
                for i2 in range(ring.rank(d2)):
                    if d1 == d2 and i2 < i1:
                        continue
                    x = ring.basis_element(d1, i1)
                    y = ring.basis_element(d2, i2)
                    table.append(
                        f"{ring.basis_labels[d1][i1]} . {ring.basis_labels[d2][i2]} "
                        f"= {x * y}"
                    )
    report.results["products"] = table

    push = blown.pushforward_from_quadric
    xi = blown.quadric.homogeneous(1, [1, 1])
    report.check(
        "pushforward of (b + w) equals the pulled-back line class",
        push.apply(xi) == blown.pulled_back_line(),
    )
    exceptional = blown.exceptional_class()
    report.check(
        "exceptional divisor restricts to z = b - w",
        blown.restrict_to_quadric(exceptional).coeffs_bw() == (1, -1),
    )
    try:
        blown.check_projection_formula()
        report.check("projection formula on all basis pairs", True)
    except ValueError as exc:
        report.check("projection formula on all basis pairs", False, str(exc))
    report.check(
        "exceptional self-intersection is 2 j.b - f.[line]",
        exceptional * exceptional
        == 2 * blown.pushed_fibre_class() - blown.pulled_back_line(),
    )
    return report


def cmd_equalizer(scenario: Scenario, args) -> Report:
    report = Report("equalizer", {"member": args.member})
    geometry = scenario.geometry
    equalizer = geometry.equalizer()
    report.results["ranks"] = list(equalizer.ranks())
    report.results["lattice_bases"] = {
        str(degree): [list(vec) for vec in equalizer.lattices[degree]]
        for degree in range(len(equalizer.lattices))
    }
    try:
        equalizer.check_product_closure()
        report.check("lattice closed under componentwise product", True)
    except ValueError as exc:
        report.check("lattice closed under componentwise product", False, str(exc))
    small = all(
        geometry.branch1.ring.rank(d) + geometry.branch2.ring.rank(d) <= 6
        for d in range(4)
    )
    if small:
        agree = all(
            brute_force_matched_lattice(geometry, d) == list(equalizer.lattices[d])
            for d in range(4)
        )
        report.check("kernel lattice matches bounded brute-force enumeration", agree)
    exceptional_pair = geometry.exceptional_pair()
    report.check(
        "([Q1], -[Q2]) is a matched member",
        geometry.is_matched(exceptional_pair) and equalizer.contains(exceptional_pair),
    )
    if args.member:
        with open(args.member, "r", encoding="utf-8") as handle:
            doc = json.load(handle)
        degree = int(doc["degree"])
        pair = ComponentPair(
            geometry.branch1.ring.homogeneous(degree, doc["branch1"]),
            geometry.branch2.ring.homogeneous(degree, doc["branch2"]),
        )
        report.results["member_query"] = {
            "degree": degree,
            "matched": geometry.is_matched(pair),
            "in_lattice": equalizer.contains(pair),
        }
    return report


def cmd_surfaces(scenario: Scenario, args) -> Report:
    report = Report("surfaces", {"dmax": args.dmax, "pair": args.pair})
    if args.pair:
        d1, f1, d2, f2 = args.pair
        for flag in (f1, f2):
            if flag not in ("in", "out"):
                raise ValueError(f"containment flag must be 'in' or 'out', got {flag!r}")
        s1 = SurfaceData(int(d1), f1 == "in")
        s2 = SurfaceData(int(d2), f2 == "in")
        ok = glue_check(s1, s2)
        swapped = trace_class(s1)
        report.results["pair"] = {
            "glues": ok,
            "trace1": str(trace_class(s1).element),
            "trace2": str(trace_class(s2).element),
            "swapped_trace1": str(ruling_swap_pushforward(swapped).element),
        }
        report.check("glue check is symmetric", ok == glue_check(s2, s1))
        return report
    surfaces = scenario.surfaces or tuple(
        SurfaceData(d, flag) for d in (1, 2) for flag in (True, False)
    )
    rows = []
    for s in surfaces:
        bid = trace_bidegree(s)
        rows.append(
            {
                "degree": s.twistor_degree,
                "contains_line": s.contains_line,
                "trace": str(trace_class(s).element),
                "genus": arithmetic_genus(bid),
                "points_on_twistor_line": intersection_number(
                    trace_class(s), hyperplane_class()
                ),
            }
        )
    report.results["surfaces"] = rows
    glue_rows = []
    for a in range(len(surfaces)):
        for b in range(a, len(surfaces)):
            glue_rows.append(
                {
                    "first": a,
                    "second": b,
                    "glues": glue_check(surfaces[a], surfaces[b]),
                }
            )
    report.results["glue_checks"] = glue_rows
    table = classify_all(args.dmax)
    report.results["admissible"] = [list(row) for row in table]
    report.check(
        "classification is the rigid three-case table",
        set(table) == {(2, "in", 2, "in"), (1, "in", 1, "out"), (1, "out", 1, "in")}
        if args.dmax >= 2
        else set(table) == {(1, "in", 1, "out"), (1, "out", 1, "in")},
    )
    report.check(
        "every trace meets a generic twistor line in its twistor degree",
        all(
            row["points_on_twistor_line"] == row["degree"] for row in report.results["surfaces"]
        ),
    )
    report.check(
        "contained-line traces are rational",
        all(row["genus"] == 0 for row in rows if row["contains_line"]),
    )
    return report


def cmd_charge(scenario: Scenario, args) -> Report:
    report = Report("charge", {})
    if not scenario.bundles or scenario.polarization is None:
        raise ValueError("charge needs bundle and polarization blocks in the scenario")
    polarization = scenario.polarization
    matched = scenario.geometry.is_matched(polarization)
    label = (
        "smooth-fibre charge"
        if (scenario.assumption_def and matched)
        else "central-fibre degree"
    )
    rows = []
    for index, bundle in enumerate(scenario.bundles):
        degrees = branch_charge_degrees(bundle, polarization)
        entry = {
            "bundle": index,
            "rank": bundle.rank,
            "branch_degrees": list(degrees),
            "total": degrees[0] + degrees[1],
            "label": label,
        }
        if matched:
            entry["polarized_charge"] = polarized_charge(bundle, polarization)
        if bundle.restriction_to_quadric_trivial:
            entry["obstruction_dim"] = obstruction_dim(bundle)
        rows.append(entry)
    report.results["polarization_matched"] = matched
    report.results["assumption_DEF"] = scenario.assumption_def
    report.results["charges"] = rows
    report.check(
        "charge equals the sum of the branch degrees",
        all(row["total"] == sum(row["branch_degrees"]) for row in rows),
    )
    if matched:
        report.check(
            "matched polarization: totals agree with the polarized charge",
            all(row["polarized_charge"] == row["total"] for row in rows),
        )
    report.check(
        "obstruction dimensions are additive for bundles trivial on the double locus",
        all(
            row.get("obstruction_dim") == sum(scenario.bundles[row["bundle"]].h2_end_dims)
            for row in rows
            if "obstruction_dim" in row
        ),
    )
    return report


def cmd_neck(scenario: Scenario, args) -> Report:
    report = Report(
        "neck",
        {"curve": args.curve, "character": args.character, "decorate": args.decorate},
    )
    bundle = kn_fixed_phase_bundle()
    fibre = restrict_to_ruling_fibre_bundle(bundle)
    report.results["fixed_phase_c1_bw"] = list(bundle.c1_class.coeffs_bw())
    report.results["fibre_restriction"] = {
        "raw": raw_fibre_pairing(bundle),
        "oriented": fibre.c1_int,
        "total_space": lens_space_of(fibre.c1_int),
    }
    character = tuple(args.character) if args.character else (1, 1)
    chern_vector = (fibre.c1_int, 1)
    quotient_c1 = character_quotient(chern_vector, character)
    report.results["character_quotient"] = {
        "chern_vector": list(chern_vector),
        "character": list(character),
        "c1": quotient_c1,
        "total_space": lens_space_of(quotient_c1),
    }
    if args.curve:
        a, b = args.curve
        restricted = restrict_to_curve(bundle, Bidegree(a, b))
        report.results["curve_restriction"] = {
            "bidegree": [a, b],
            "c1": restricted.c1_int,
        }
    report.check(
        "fibre restriction has magnitude one and oriented value +1",
        abs(raw_fibre_pairing(bundle)) == 1 and fibre.c1_int == 1,
    )
    report.check(
        "anti-diagonal character gives the lens space of class 2",
        antidiagonal_quotient_over_fibre() == "RP3",
    )
    report.check(
        "diagonal character gives the trivial bundle over the sphere",
        antidiagonal_quotient_over_fibre(character=(1, -1)) == "S2xS1",
    )
    if scenario.decoration or args.decorate:
        if args.decorate:
            with open(args.decorate, "r", encoding="utf-8") as handle:
                doc = json.load(handle)
            theta = GaussianScalar.from_json_dict(doc["theta"])
            ids = [str(p["id"]) for p in doc.get("points", [])]
            etas = [GaussianScalar.from_json_dict(p["eta"]) for p in doc.get("points", [])]
        else:
            request = scenario.decoration
            theta, ids, etas = request.theta_unit, list(request.point_ids), list(request.eta_choices)
        decoration = phase_decoration(ids, theta, etas)
        report.results["decoration"] = decoration.to_json_dict()
        report.check(
            "decoration phase pairs satisfy rho1 * rho2 = theta",
            all(pair.rho1 * pair.rho2 == theta for _, pair in decoration.points),
        )
    return report


def _point_str(p: QuadricPoint) -> str:
    return f"([{p.z[0]} : {p.z[1]}], [{p.w[0]} : {p.w[1]}])"


def cmd_real(scenario: Scenario, args) -> Report:
    report = Report("real", {"samples": args.samples})
    locus = base_locus()
    report.results["base_locus"] = [_point_str(p) for p in locus]
    report.results["base_locus_exact"] = [p.to_json() for p in locus]
    basis = [
        invariant_section_from_reals(*params)
        for params in ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
    ]
    report.results["fixed_space_dimension"] = len(basis)

    report.check("base locus consists of two points", len(locus) == 2)
    report.check(
        "involution swaps the two base points",
        real_structure(locus[0]).projectively_equal(locus[1])
        and real_structure(locus[1]).projectively_equal(locus[0]),
    )
    report.check(
        "fixed-space basis sections are invariant",
        all(is_invariant_section(s) for s in basis),
    )

    rng = random.Random(20240817)
    def random_scalar() -> GaussianScalar:
        return GaussianScalar.of(rng.randint(-6, 6), rng.randint(-6, 6))

    fixed_free = True
    equivariant = True
    samples_done = 0
    while samples_done < args.samples:
        try:
            p = point(random_scalar(), random_scalar(), random_scalar(), random_scalar())
        except ValueError:
            continue
        samples_done += 1
        if is_fixed_point(p):
            fixed_free = False
        value = pencil_value(p)
        image = pencil_value(real_structure(p))
        if value is BASEPOINT or image is BASEPOINT:
            continue
        conjugated = (value[0].conjugate(), value[1].conjugate())
        if not pairs_projectively_equal(image, conjugated):
            equivariant = False
    report.results["samples"] = samples_done
    report.check("involution is fixed-point free on all samples", fixed_free)
    report.check("pencil is equivariant: value at the image is the conjugate", equivariant)
    report.check(
        "pencil vanishes exactly on the base locus",
        all(pencil_value(p) is BASEPOINT for p in locus),
    )
    sample_section = invariant_section_from_reals(2, -1, 3, 5)
    report.check(
        "invariant sections have involution-stable zero sets (spot check)",
        evaluate_section(sample_section, locus[0]).is_zero()
        == evaluate_section(sample_section, real_structure(locus[0])).is_zero(),
    )
    return report


# -- entry point ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistor-pushout",
        description="Exact intersection theory on a glued pair of blown-up twistor spaces",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--json", action="store_true", help="emit the report as JSON")
    parser.add_argument("--scenario", help="path to a scenario JSON file")
    sub = parser.add_subparsers(dest="command", required=True)

    ring_show = sub.add_parser("ring-show", help="show a blown-up ring's basis and table")
    ring_show.add_argument("scenario_path", nargs="?", help="scenario JSON file")
    ring_show.add_argument("--branch", choices=("1", "2", "quadric"), default="1")

    equalizer = sub.add_parser("equalizer", help="matched-pair lattices of the glued space")
    equalizer.add_argument("scenario_path", nargs="?")
    equalizer.add_argument("--member", help="JSON file with a pair to test for membership")

    surfaces = sub.add_parser("surfaces", help="gluing classification for surface traces")
    surfaces.add_argument("scenario_path", nargs="?")
    surfaces.add_argument("--dmax", type=int, default=50)
    surfaces.add_argument(
        "--pair",
        nargs=4,
        metavar=("D1", "IN1", "D2", "IN2"),
        help="explicit pair: degree in|out degree in|out",
    )

    charge = sub.add_parser("charge", help="branch degrees and polarized charges")
    charge.add_argument("scenario_path", nargs="?")

    neck = sub.add_parser("neck", help="fixed-phase circle bundle arithmetic")
    neck.add_argument("scenario_path", nargs="?")
    neck.add_argument("--curve", nargs=2, type=int, metavar=("A", "B"))
    neck.add_argument("--character", nargs=2, type=int, metavar=("A", "B"))
    neck.add_argument("--decorate", help="JSON file with theta and per-point eta choices")

    real = sub.add_parser("real", help="real structure checks on the quadric")
    real.add_argument("scenario_path", nargs="?")
    real.add_argument("--samples", type=int, default=100)

    return parser


_HANDLERS = {
    "ring-show": cmd_ring_show,
    "equalizer": cmd_equalizer,
    "surfaces": cmd_surfaces,
    "charge": cmd_charge,
    "neck": cmd_neck,
    "real": cmd_real,
}


def run(argv: list[str]) -> tuple[int, str]:
    """Parse arguments, execute one command, and return (exit code, output)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    path = args.scenario or getattr(args, "scenario_path", None)
    try:
        scenario = load_scenario(path) if path else default_scenario()
        report = _HANDLERS[args.command](scenario, args)
    except (ValueError, OSError) as exc:
        return 2, f"error: {exc}"
    output = report.to_json() if args.json else report.to_text()
    return (0 if report.all_passed() else 1), output


def main() -> None:
    code, output = run(sys.argv[1:])
    print(output)
    sys.exit(code)


if __name__ == "__main__":
    main()
