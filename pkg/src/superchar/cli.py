"""Command-line front end.

Subcommands: chartab, enumerate, analyze, verify.  Exit codes: 0 on
success (for verify: all checks pass), 1 when verify found a theorem
failure, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .chartab import character_table_of, ingest_table, validate_table
from .errors import CharacterTableError, GroupConstructionError, SuperTheoryError
from .groups import GroupTable, build_group, derived_subgroup, group_center
from .structure import (
    hypercenter,
    is_s_abelian,
    lower_series,
    s_center,
    s_commutator_full,
    s_nilpotence_class,
    s_normal_subgroups,
    upper_series,
)
from .supertheory import SuperTheory, coarsest, enumerate_scts, finest
from .vanishing import (
    is_camina_pair,
    is_s_gcp,
    is_vz,
    scd_check,
    u_chain,
    u_rel,
    u_theory,
    v_rel,
    v_series,
    v_theory,
)
from .verifier import DEFAULT_CATALOG, corpus_json_bytes, failing_reports, run_corpus

_USER_ERRORS = (GroupConstructionError, CharacterTableError, SuperTheoryError, OSError)


def _subgroup_names(G: GroupTable) -> dict[frozenset[int], str]:
    names = {
        frozenset({0}): "1",
        frozenset(range(G.order)): "G",
    }
    names.setdefault(group_center(G).members, "Z(G)")
    names.setdefault(derived_subgroup(G).members, "[G,G]")
    return names


def _fmt_subgroup(members, names) -> str:
    body = "{" + ", ".join(str(x) for x in sorted(members)) + "}"
    name = names.get(frozenset(members))
    return f"{body} (= {name})" if name else body


def _select_theory(table, selector: str) -> SuperTheory:
    if selector == "finest":
        return finest(table)
    if selector == "coarsest":
        return coarsest(table)
    if selector.startswith("index:"):
        try:
            k = int(selector.split(":", 1)[1])
        except ValueError:
            raise SuperTheoryError(f"bad theory selector {selector!r}")
        theories = enumerate_scts(table)
        if not 0 <= k < len(theories):
            raise SuperTheoryError(
                f"theory index {k} out of range; the group has {len(theories)} theories"
            )
        return theories[k]
    raise SuperTheoryError(f"bad theory selector {selector!r}")


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _cmd_chartab(args) -> int:
    G = build_group(args.group)
    if args.ingest:
        with open(args.ingest, encoding="utf-8") as fh:
            table = ingest_table(fh.read(), G)
        print(f"ingested table for {G.label}: all validation checks pass", file=sys.stderr)
    else:
        table = character_table_of(G)
    if args.format == "json":
        payload = table.to_json()
        payload["validation"] = validate_table(table).to_json()
        _emit(json.dumps(payload, indent=2, sort_keys=True), args.out)
    else:
        _emit(table.to_text(), args.out)
    return 0


def _cmd_enumerate(args) -> int:
    G = build_group(args.group)
    table = character_table_of(G)
    theories = enumerate_scts(table)
    if args.format == "json":
        payload = {
            "group": G.label,
            "count": len(theories),
            "theories": [S.to_json() for S in theories],
        }
        _emit(json.dumps(payload, indent=2, sort_keys=True), args.out)
    else:
        lines = [f"{len(theories)} supercharacter theories of {G.label}", ""]
        for i, S in enumerate(theories):
            lines.append(f"theory index:{i}")
            lines.append(S.to_text())
        _emit("\n".join(lines), args.out)
    return 0


def _analysis(G: GroupTable, S: SuperTheory) -> dict:
    names = _subgroup_names(G)
    center = s_center(S)
    com = s_commutator_full(S)
    subs = s_normal_subgroups(S)
    per_n = []
    for N in subs:
        pair = is_camina_pair(S, N)
        gcp = is_s_gcp(S, N)
        per_n.append(
            {
                "n": list(N.sorted_members()),
                "v_rel": list(v_rel(S, N).sorted_members()),
                "u_rel": list(u_rel(S, N).sorted_members()),
                "u_chain": u_chain(S, N).to_json()["terms"],
                "camina_pair": pair.holds,
                "gcp": gcp.holds,
                "gcp_vacuous": gcp.vacuous,
            }
        )
    vz = is_vz(S)
    cls = s_nilpotence_class(S)
    return {
        "group": {"label": G.label, "order": G.order},
        "xparts": S.xparts_json(),
        "yparts": S.yparts.to_json(),
        "s_abelian": is_s_abelian(S),
        "z_s": list(center.sorted_members()),
        "commutator": list(com.sorted_members()),
        "s_normal_subgroups": [list(N.sorted_members()) for N in subs],
        "v_s": list(v_theory(S).sorted_members()),
        "u_s": list(u_theory(S).sorted_members()),
        "per_subgroup": per_n,
        "lower_series": lower_series(S).to_json(),
        "upper_series": upper_series(S).to_json(),
        "v_series": v_series(S).to_json(),
        "hypercenter": list(hypercenter(S).sorted_members()),
        "nilpotence_class": cls,
        "vz": vz.to_json(),
        "scd": scd_check(S).to_json(),
        "_names": {",".join(map(str, sorted(k))): v for k, v in names.items()},
    }


def _analysis_text(G: GroupTable, S: SuperTheory, data: dict) -> str:
    names = _subgroup_names(G)
    f = lambda members: _fmt_subgroup(members, names)
    lines = [f"analysis of a supercharacter theory of {G.label} (order {G.order})"]
    lines.append(S.to_text().rstrip())
    lines.append(f"S-abelian:        {data['s_abelian']}")
    lines.append(f"Z(S)            = {f(data['z_s'])}")
    lines.append(f"[G,S]           = {f(data['commutator'])}")
    lines.append(f"V(S)            = {f(data['v_s'])}")
    lines.append(f"U(S)            = {f(data['u_s'])}")
    lines.append(f"hypercenter     = {f(data['hypercenter'])}")
    lines.append(f"nilpotence class: {data['nilpotence_class']}")
    lines.append(f"VZ theory:        {data['vz']['holds']}")
    lines.append("S-normal subgroups and their V/U values:")
    for entry in data["per_subgroup"]:
        lines.append(
            f"  N = {f(entry['n'])}: V(S|N) = {f(entry['v_rel'])}, "
            f"U(S|N) = {f(entry['u_rel'])}, Camina pair: {entry['camina_pair']}, "
            f"GCP: {entry['gcp']}" + (" (vacuous)" if entry["gcp_vacuous"] else "")
        )
    lines.append(f"lower series:   {[sorted(t) for t in data['lower_series']['terms']]}")
    lines.append(f"upper series:   {[sorted(t) for t in data['upper_series']['terms']]}")
    lines.append(f"V-series:       {[sorted(t) for t in data['v_series']['terms']]}")
    if data["scd"]["checks"]:
        lines.append(f"degree checks:  {'ok' if data['scd']['ok'] else 'FAIL'}")
    return "\n".join(lines) + "\n"


def _cmd_analyze(args) -> int:
    G = build_group(args.group)
    table = character_table_of(G)
    S = _select_theory(table, args.sct)
    data = _analysis(G, S)
    if args.format == "json":
        data.pop("_names")
        _emit(json.dumps(data, indent=2, sort_keys=True), args.out)
    else:
        _emit(_analysis_text(G, S, data), args.out)
    return 0


def _cmd_verify(args) -> int:
    if args.group:
        specs = [args.group]
    elif args.catalog in (None, "default"):
        specs = list(DEFAULT_CATALOG)
    else:
        raise SuperTheoryError(f"unknown catalog {args.catalog!r}")
    corpus = run_corpus(
        specs,
        all_scts=args.all_scts,
        jobs=args.jobs,
        max_order=args.max_order,
    )
    fails = failing_reports(corpus)
    if args.format == "json":
        text = corpus_json_bytes(corpus).decode("ascii")
    else:
        s = corpus["summary"]
        lines = ["theorem corpus report"]
        for entry in corpus["groups"]:
            counts = {"pass": 0, "fail": 0, "vacuous": 0, "not-applicable": 0}
            for theory in entry["theories"]:
                for repo in theory["reports"]:
                    counts[repo["status"]] += 1
            lines.append(
                f"  {entry['label']:10s} order {entry['order']:3d}  "
                f"theories {entry['theory_count']:4d}  pass {counts['pass']:6d}  "
                f"fail {counts['fail']:3d}  vacuous {counts['vacuous']:5d}  "
                f"n/a {counts['not-applicable']:5d}"
            )
        lines.append(
            f"summary: pass {s['pass']}, fail {s['fail']}, vacuous {s['vacuous']}, n/a {s['na']}"
        )
        for failure in fails:
            lines.append(f"  FAIL {failure['group']} theory {failure['theory']} "
                         f"{failure['theorem_id']} at {failure['scope']}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 1 if fails else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superchar",
        description="supercharacter theories of small finite groups, exactly",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", help="write output to this path instead of stdout")

    p = sub.add_parser("chartab", help="compute or ingest a character table")
    p.add_argument("--group", required=True, help="catalog name, file:PATH, or perm:PATH")
    p.add_argument("--ingest", help="validate a character table file against the group")
    common(p)
    p.set_defaults(fn=_cmd_chartab)

    p = sub.add_parser("enumerate", help="enumerate all supercharacter theories")
    p.add_argument("--group", required=True)
    common(p)
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("analyze", help="structural analysis of one theory")
    p.add_argument("--group", required=True)
    p.add_argument("--sct", default="finest", help="finest | coarsest | index:k")
    common(p)
    p.set_defaults(fn=_cmd_analyze)

    p = sub.add_parser("verify", help="run the theorem suite over a corpus")
    p.add_argument("--group", help="verify a single group instead of the catalog")
    p.add_argument("--catalog", help="catalog name (default)")
    p.add_argument("--all-scts", action="store_true", default=True,
                   help="run every enumerated theory (default)")
    p.add_argument("--extremes-only", dest="all_scts", action="store_false",
                   help="only the finest and coarsest theories")
    p.add_argument("--max-order", type=int, help="skip catalog groups above this order")
    p.add_argument("--jobs", type=int, default=1, help="parallel worker processes")
    common(p)
    p.set_defaults(fn=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except _USER_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
