"""Command line front end.

Subcommands take a scenario file (see scenario.py for the schema) and
print a deterministic report, as text or JSON:

    realpv build scenario.json        construct and certify the extension
    realpv group scenario.json        relation ideal and defining equations
    realpv correspond scenario.json   fixed field and round trips (needs subgroup)
    realpv twist scenario.json        twist by a cocycle (needs cocycle)
    realpv all scenario.json          everything the scenario supports
    realpv demo NAME                  weak-normality, so2-forms,
                                      radical-forms or seidenberg

Exit status: 0 when every check passes, 1 when a check fails or the
mathematics refuses (certificate failure, unsupported fragment), 2 for
bad usage or an invalid scenario.
"""

from __future__ import annotations

import argparse
import json
import sys

from .correspondence import (
    DIAGONAL,
    FULL,
    SO2,
    TRIVIAL,
    check_correspondence,
    finite_list,
    mu_n,
    normality_check,
    weak_normality_demo,
)
from .errors import AlgebraError, NotPV, ScenarioError, WitnessNotFound
from .galois import defining_equations, matrix_from_texts, relations_ideal
from .pv import LinearODE, build_pv
from .realforms import (
    cocycle_check,
    h1_enumerate,
    non_reality_witness,
    radical_pair_report,
    twist,
)
from .report import Report
from .scenario import Scenario, load_scenario
from .seidenberg import seidenberg_demo
from .tower import DiffTower

__all__ = ["main"]

DEMO_NAMES = ("weak-normality", "so2-forms", "radical-forms", "seidenberg")


def _base_tower(scn: Scenario) -> DiffTower:
    if scn.budget is not None:
        return DiffTower(base_var=scn.base_var or None, budget=scn.budget)
    return DiffTower(base_var=scn.base_var or None)


def _pv_from(scn: Scenario):
    base = _base_tower(scn)
    ode = LinearODE.from_texts(base, list(scn.coefficients))
    radical_base = base.parse(scn.radical_base) if scn.radical_base else None
    return build_pv(base, ode, scn.eq_class, scn.scan_bounds, radical_base)


def _descriptor_from(sub: dict):
    kind = sub["kind"]
    if kind == "FULL":
        return FULL
    if kind == "TRIVIAL":
        return TRIVIAL
    if kind == "DIAGONAL":
        return DIAGONAL
    if kind == "SO2":
        return SO2
    if kind == "MU_N":
        return mu_n(sub["order"])
    return finite_list([matrix_from_texts(m) for m in sub["matrices"]])


def _build_report(scn: Scenario) -> Report:
    pv = _pv_from(scn)
    rep = Report(f"build: {scn.describe()}")
    rep.info("equation", pv.ode.describe())
    rep.info("extension", "; ".join(pv.extension.describe()))
    rep.info("solutions", ", ".join(str(s) for s in pv.solutions))
    rep.info(
        "companion matrix",
        "; ".join(
            "[" + ", ".join(str(v) for v in row) + "]" for row in pv.companion
        ),
    )
    for key in sorted(pv.meta):
        rep.info(f"meta {key}", str(pv.meta[key]))
    for check in pv.certificates.checks:
        rep.add(check.name, check.passed, check.detail)
    rep.data["solutions"] = [str(s) for s in pv.solutions]
    rep.data["class"] = pv.eq_class
    return rep


def _group_report(scn: Scenario) -> Report:
    pv = _pv_from(scn)
    rep = Report(f"group: {scn.describe()}")
    ideal = relations_ideal(pv)
    for line in ideal.render():
        rep.info("relation", line)
    rep.add("relations vanish on the solutions", True, "verified on construction")
    rep.info(
        "relation list complete",
        "yes" if ideal.complete else "no (a generator relation is not expressible "
        "in the solutions; defining set may be larger than the true group)",
    )
    group = defining_equations(pv, ideal)
    if group.polys:
        for p in group.polys:
            rep.info("defining equation", str(p))
    else:
        rep.info("defining equation", "none (the group is all of GL1)")
    rep.data["defining_set"] = group.serialized()
    rep.data["size"] = group.size
    return rep


def _correspond_report(scn: Scenario) -> Report:
    if scn.subgroup is None:
        raise ScenarioError("correspond needs a subgroup entry", location="scenario")
    pv = _pv_from(scn)
    group = defining_equations(pv)
    desc = _descriptor_from(scn.subgroup)
    rep = Report(f"correspond: {desc.label()} inside the group of {scn.describe()}")
    round_trips, fixed, sub = check_correspondence(group, desc)
    rep.info("fixed field", fixed.describe())
    rep.info(
        "stabilizer", "; ".join(sub.serialized()) if sub.polys else "the full group"
    )
    rep.extend(round_trips.lines)
    normality = normality_check(group, desc)
    rep.extend(normality.details)
    if normality.quotient_ode is not None:
        rep.info("quotient equation", normality.quotient_ode.describe())
        rep.info(
            "quotient solutions",
            ", ".join(str(x) for x in normality.quotient_solutions),
        )
    rep.data["fixed_field"] = fixed.describe()
    rep.data["stabilizer"] = sub.serialized()
    return rep


def _twist_report(scn: Scenario) -> Report:
    if scn.cocycle is None:
        raise ScenarioError("twist needs a cocycle entry", location="scenario")
    pv = _pv_from(scn)
    group = defining_equations(pv)
    rows = matrix_from_texts(scn.cocycle)
    rep = Report(f"twist: {scn.describe()}")
    rep.add("matrix is a cocycle", cocycle_check(group, rows))
    if not cocycle_check(group, rows):
        return rep
    result = twist(pv, group, rows)
    rep.info("cocycle", str(result.cocycle.render()))
    rep.info("twist", result.note)
    rep.extend(result.details)
    if result.isomorphic_to_original:
        rep.info("real form", "isomorphic to the original extension")
    else:
        rep.info("real form", "a genuinely different real form")
        try:
            wit = non_reality_witness(result.tower)
            rep.info(
                "non-reality witness",
                " , ".join(str(x) for x in wit) + "  (squares sum to -1)",
            )
        except WitnessNotFound as e:
            rep.info("non-reality witness", f"none found: {e}")
        if pv.eq_class == "RADICAL":
            pair = radical_pair_report(pv, result)
            rep.extend(pair.details)
    rep.data["twisted_solutions"] = [str(x) for x in result.solutions]
    return rep


def _demo_report(name: str) -> Report:
    if name == "weak-normality":
        rep = Report("demo: weak normality fails for K(e^3) inside K(e)")
        wr = weak_normality_demo(3)
        rep.info(
            "subgroup sizes",
            f"{wr.real_member_count} real member(s) vs "
            f"{wr.complex_member_count} over the complexified constants",
        )
        rep.extend(wr.details)
        rep.info("control case", "q = 2, where a real member does move e")
        wr2 = weak_normality_demo(2)
        rep.extend(wr2.details)
        rep.data["q3_real_members"] = wr.real_member_count
        rep.data["q3_complex_members"] = wr.complex_member_count
        return rep

    if name == "so2-forms":
        rep = Report("demo: the two real forms of the circle extension")
        base = DiffTower(base_var="t")
        pv = build_pv(base, LinearODE.from_texts(base, ["1", "0"]), "CIRCLE")
        group = defining_equations(pv)
        h1 = h1_enumerate(group, "SO2")
        rep.info("classes", ", ".join(c.label for c in h1.classes))
        rep.extend(h1.details)
        result = twist(pv, group, matrix_from_texts([["-1", "0"], ["0", "-1"]]))
        rep.extend(result.details)
        wit = non_reality_witness(result.tower)
        rep.add(
            "twisted field is not formally real",
            True,
            " , ".join(str(x) for x in wit) + "  squares sum to -1",
        )
        try:
            non_reality_witness(pv.extension)
            rep.add("original field has no such witness", False, "witness found")
        except WitnessNotFound:
            rep.add(
                "original field has no such witness",
                True,
                "bounded search is empty",
            )
        rep.data["classes"] = [c.label for c in h1.classes]
        return rep

    if name == "radical-forms":
        rep = Report("demo: square roots of t and of -t are different real forms")
        base = DiffTower(base_var="t")
        pv = build_pv(base, LinearODE.from_texts(base, ["-1/2 * 1/t"]), "RADICAL")
        group = defining_equations(pv)
        h1 = h1_enumerate(group, "MU_2")
        rep.info("classes", ", ".join(c.label for c in h1.classes))
        rep.extend(h1.details)
        result = twist(pv, group, matrix_from_texts([["-1"]]))
        rep.extend(result.details)
        pair = radical_pair_report(pv, result)
        rep.extend(pair.details)
        rep.data["classes"] = [c.label for c in h1.classes]
        return rep

    if name == "seidenberg":
        rep = Report("demo: a differential field with real constants that is not real")
        res = seidenberg_demo()
        rep.extend(res.details)
        rep.info("witness", ", ".join(str(x) for x in res.witness))
        rep.info("new constants", " ; ".join(str(x) for x in res.new_constants))
        rep.data["witness"] = [str(x) for x in res.witness]
        rep.data["new_constants"] = [str(x) for x in res.new_constants]
        return rep

    raise ScenarioError(f"unknown demo {name!r}, pick one of {DEMO_NAMES}")


def _emit(reports: list[Report], args) -> int:
    if args.json:
        if len(reports) == 1:
            text = reports[0].to_json()
        else:
            payload = [json.loads(r.to_json()) for r in reports]
            text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    else:
        text = "\n".join(r.to_text() for r in reports)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if all(r.ok for r in reports) else 1


def _add_common(p: argparse.ArgumentParser, scenario: bool = True) -> None:
    if scenario:
        p.add_argument("scenario", help="path to a scenario JSON file")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.add_argument("--out", help="write the report to a file")
    p.add_argument("--scan-degree", type=int, help="override the scan degree bound")
    p.add_argument(
        "--scan-coeff-degree", type=int, help="override the scan coefficient bound"
    )
    p.add_argument("--budget", type=int, help="override the completion budget")


def _apply_overrides(scn: Scenario, args) -> Scenario:
    deg, cdeg = scn.scan_bounds
    if args.scan_degree is not None:
        deg = args.scan_degree
    if args.scan_coeff_degree is not None:
        cdeg = args.scan_coeff_degree
    scn.scan_bounds = (deg, cdeg)
    if args.budget is not None:
        scn.budget = args.budget
    return scn


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="realpv",
        description="exact real Picard-Vessiot computations on certified towers",
    )
    subs = parser.add_subparsers(dest="command", required=True)
    for name in ("build", "group", "correspond", "twist", "all"):
        _add_common(subs.add_parser(name))
    demo = subs.add_parser("demo")
    demo.add_argument("name", choices=DEMO_NAMES)
    _add_common(demo, scenario=False)

    args = parser.parse_args(argv)
    try:
        if args.command == "demo":
            reports = [_demo_report(args.name)]
        else:
            scn = _apply_overrides(load_scenario(args.scenario), args)
            if args.command == "build":
                reports = [_build_report(scn)]
            elif args.command == "group":
                reports = [_group_report(scn)]
            elif args.command == "correspond":
                reports = [_correspond_report(scn)]
            elif args.command == "twist":
                reports = [_twist_report(scn)]
            else:
                reports = [_build_report(scn), _group_report(scn)]
                if scn.subgroup is not None:
                    reports.append(_correspond_report(scn))
                if scn.cocycle is not None:
                    reports.append(_twist_report(scn))
    except ScenarioError as e:
        loc = f" at {e.location}" if e.location else ""
        print(f"scenario error{loc}: {e}", file=sys.stderr)
        return 2
    except NotPV as e:
        print(f"certificate failure: {e}", file=sys.stderr)
        if e.report is not None:
            for check in e.report.checks:
                status = "PASS" if check.passed else "FAIL"
                print(f"  [{status}] {check.name}: {check.detail}", file=sys.stderr)
        return 1
    except AlgebraError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    return _emit(reports, args)


if __name__ == "__main__":
    sys.exit(main())
