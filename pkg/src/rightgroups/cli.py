"""Command-line front door.

Subcommands: check, decompose, hom, prekernel, sequence, action,
enumerate, census, verify.  Every command assembles a report dict first;
``--json`` emits it verbatim, otherwise a text rendering of the same data
is printed.  Exit codes: 0 success/verified, 1 property-check failure
(counterexample in the report), 2 usage or input errors.
"""

import argparse
import json
import os
import sys

from . import __version__
from .core import (
    FiniteSemigroup,
    NotAssociative,
    enumerate_hom_bruteforce,
    format_table_text,
    parse_table_text,
)
from .structure import (
    NotARightGroup,
    RightGroup,
    check_right_group,
    decompose,
)


def _load_table(path):
    with open(path) as fh:
        return parse_table_text(fh.read())


def _group_label(G):
    from .enumeration import group_name

    return group_name(G)


# -- check ---------------------------------------------------------------

def cmd_check(args):
    S = _load_table(args.table)
    report = {"command": "check", "file": args.table, "order": S.n}
    rep = check_right_group(S)
    report["conditions"] = {
        "a": rep.cond_a, "b": rep.cond_b, "c": rep.cond_c,
        "e": rep.cond_e, "f": rep.cond_f,
    }
    report["witnesses"] = {k: list(v) for k, v in rep.witnesses.items()}
    report["right_group"] = rep.all_hold()
    if rep.all_hold():
        from .structure import quotient_group

        rg = RightGroup(S, _report=rep)
        G, _ = quotient_group(rg)
        report["idempotent_count"] = len(rg.idempotents)
        report["base_idempotent"] = rg.e0
        report["group_part"] = {"order": G.n, "name": _group_label(G)}
        return report, 0
    return report, 1


def render_check(report):
    lines = [f"order: {report['order']}"]
    conds = report["conditions"]
    lines.append("conditions: " + "  ".join(
        f"({k}):{'yes' if v else 'no'}" for k, v in conds.items()))
    if report["right_group"]:
        gp = report["group_part"]
        lines.append(
            f"right group: yes; |E|={report['idempotent_count']}; "
            f"group part: {gp['name']}-isomorphic (order {gp['order']})")
    else:
        lines.append("right group: no")
        for cond, witness in sorted(report["witnesses"].items()):
            if not conds.get(cond, True):
                lines.append(f"  condition ({cond}) fails: {witness}")
    return "\n".join(lines)


# -- decompose -----------------------------------------------------------

def cmd_decompose(args):
    S = _load_table(args.table)
    report = {"command": "decompose", "file": args.table, "order": S.n}
    rep = check_right_group(S)
    if not rep.all_hold():
        report["right_group"] = False
        report["conditions"] = {
            "a": rep.cond_a, "b": rep.cond_b, "c": rep.cond_c,
            "e": rep.cond_e, "f": rep.cond_f,
        }
        return report, 1
    rg = RightGroup(S, _report=rep)
    d = decompose(rg)
    report.update({
        "right_group": True,
        "idempotent_count": len(rg.idempotents),
        "base_idempotent": rg.e0,
        "idempotents": list(rg.idempotents),
        "group_table": [list(r) for r in d.group_part.group.table],
        "group_carrier": list(d.group_part.carrier),
        "group_name": _group_label(d.group_part.group),
        "sim_blocks": [list(b) for b in d.sim.blocks()],
        "equiv_blocks": [list(b) for b in d.equiv.blocks()],
        "phi": [[s, d.phi(s)] for s in rg.elements],
    })
    return report, 0


def render_decompose(report):
    if not report.get("right_group"):
        return "not a right group; nothing to decompose"
    lines = [
        f"order: {report['order']}",
        f"|E| = {report['idempotent_count']}, e0 = {report['base_idempotent']}",
        f"idempotents: {report['idempotents']}",
        f"group part (Se0, {report['group_name']}), carrier "
        f"{report['group_carrier']}:",
    ]
    for row in report["group_table"]:
        lines.append("  " + " ".join(str(x) for x in row))
    lines.append(f"~ blocks: {report['sim_blocks']}")
    lines.append(f"== blocks: {report['equiv_blocks']}")
    lines.append("phi (s -> paired id in Se0 x E): " +
                 " ".join(f"{s}->{v}" for s, v in report["phi"]))
    return "\n".join(lines)


# -- hom -----------------------------------------------------------------

def cmd_hom(args):
    dom = _load_table(args.dom)
    cod = _load_table(args.cod)
    report = {"command": "hom", "dom_order": dom.n, "cod_order": cod.n}
    both_right_groups = check_right_group(dom).all_hold() and \
        check_right_group(cod).all_hold()
    report["structured_available"] = both_right_groups
    run_oracle = True
    homs = None
    if both_right_groups:
        from .morphisms import enumerate_hom_structured

        S, T = RightGroup(dom), RightGroup(cod)
        homs = enumerate_hom_structured(S, T)
        report["structured_count"] = len(homs)
        run_oracle = max(dom.n, cod.n) <= 5 or args.oracle
    if run_oracle:
        brute = enumerate_hom_bruteforce(dom, cod, budget=args.budget)
        report["oracle_count"] = len(brute)
        if homs is not None and set(homs) != set(brute):
            report["mismatch"] = True
            return report, 1
        if homs is None:
            homs = brute
    report["count"] = len(homs)
    if args.list:
        report["morphisms"] = [
            f"{dom.n} {cod.n} " + " ".join(str(v) for v in m.map)
            for m in sorted(homs, key=lambda m: m.map)]
    return report, 0


def render_hom(report):
    lines = [f"|Hom| = {report['count']}"]
    if "structured_count" in report:
        lines.append(f"structured count: {report['structured_count']}")
    if "oracle_count" in report:
        lines.append(f"oracle (brute force) count: {report['oracle_count']}")
    if report.get("mismatch"):
        lines.append("MISMATCH between structured and brute-force sets")
    for m in report.get("morphisms", []):
        lines.append(m)
    return "\n".join(lines)


# -- prekernel -----------------------------------------------------------

def cmd_prekernel(args):
    from .morphisms import Morphism
    from .pretorsion import NoPrekernel, prekernel, verify_prekernel

    dom = _load_table(args.dom)
    cod = _load_table(args.cod)
    f = _load_morphism(args.morphism, dom, cod)
    report = {"command": "prekernel", "dom_order": dom.n,
              "cod_order": cod.n, "morphism": list(f.map)}
    try:
        K, incl = prekernel(f)
    except NoPrekernel as e:
        report["exists"] = False
        report["witness"] = list(e.witness)
        return report, 1
    report["exists"] = True
    report["kernel_order"] = K.n
    report["kernel_carrier"] = list(incl.map)
    if args.verify:
        from .pretorsion import default_pretorsion_pool

        probes = default_pretorsion_pool(args.probe_order)
        res = verify_prekernel(f, incl, probes)
        report["verified"] = bool(res)
        report["factorings_checked"] = res.checked
        if not res:
            report["counterexample"] = _jsonable(res.counterexample)
            return report, 1
    return report, 0


def render_prekernel(report):
    if not report["exists"]:
        return ("no prekernel: idempotents map to distinct values "
                f"(witness {report['witness']})")
    lines = [f"prekernel of order {report['kernel_order']}, carrier "
             f"{report['kernel_carrier']}"]
    if "verified" in report:
        lines.append(
            f"universal property: "
            f"{'verified' if report['verified'] else 'FAILED'} "
            f"({report['factorings_checked']} factorings checked)")
    return "\n".join(lines)


# -- sequence ------------------------------------------------------------

def cmd_sequence(args):
    from .pretorsion import (
        canonical_preexact_sequence,
        default_pretorsion_pool,
    )

    S = _load_table(args.table)
    report = {"command": "sequence", "order": S.n}
    rg = RightGroup(S)
    probes = default_pretorsion_pool(args.probe_order)
    try:
        seq = canonical_preexact_sequence(rg, probes)
    except AssertionError as e:
        report["verified"] = False
        report["reason"] = str(e)
        return report, 1
    report.update({
        "verified": True,
        "idempotent_count": seq.f.dom.n,
        "group_order": seq.g.cod.n,
        "inclusion": list(seq.f.map),
        "projection": list(seq.g.map),
        "probes_used": seq.probes_used,
        "prekernel_factorings": seq.prekernel_check.checked,
        "precokernel_factorings": seq.precokernel_check.checked,
    })
    return report, 0


def render_sequence(report):
    if not report["verified"]:
        return f"sequence FAILED: {report.get('reason')}"
    return (
        f"E (order {report['idempotent_count']}) -> S (order "
        f"{report['order']}) -> S/~ (order {report['group_order']})\n"
        f"inclusion: {report['inclusion']}\n"
        f"projection: {report['projection']}\n"
        f"verified against {report['probes_used']} probes "
        f"({report['prekernel_factorings']} prekernel / "
        f"{report['precokernel_factorings']} precokernel factorings)")


# -- action --------------------------------------------------------------

def cmd_action(args):
    from .actions import eta_iso, functor_F, parse_action_text
    from .structure import PointedRightGroup

    with open(args.action) as fh:
        action = parse_action_text(fh.read())
    report = {
        "command": "action",
        "group_order": action.group.n,
        "set_size": action.set_size,
        "pointed": action.point is not None,
    }
    built = functor_F(action)
    rg = built.rg if isinstance(built, PointedRightGroup) else built
    report["right_group_order"] = rg.n
    report["idempotent_count"] = len(rg.idempotents)
    if isinstance(built, PointedRightGroup):
        report["point"] = built.point
    eta = eta_iso(action)
    report["eta_verified"] = eta.is_bijective()
    report["table"] = [list(r) for r in rg.table]
    return report, 0


def render_action(report):
    lines = [
        f"action of group (order {report['group_order']}) on "
        f"{report['set_size']} points" +
        (" (pointed)" if report["pointed"] else ""),
        f"functor image: right group of order {report['right_group_order']}"
        f" with |E| = {report['idempotent_count']}",
        f"eta isomorphism verified: {report['eta_verified']}",
    ]
    if "point" in report:
        lines.append(f"point: {report['point']}")
    lines.append("table:")
    for row in report["table"]:
        lines.append("  " + " ".join(str(x) for x in row))
    return "\n".join(lines)


# -- enumerate -----------------------------------------------------------

def cmd_enumerate(args):
    from . import enumeration as en

    report = {"command": "enumerate", "order": args.order,
              "class": args.klass}
    if args.sample:
        if args.klass != "semigroup":
            raise ValueError("--sample only applies to --class semigroup")
        items = [S for S in en.sample_semigroups(
            args.order, args.sample, args.seed)]
        report["mode"] = "sample"
        report["seed"] = args.seed
    elif args.klass == "semigroup":
        items = list(en.enumerate_semigroups(args.order))
        report["mode"] = "raw"
    elif args.klass == "group":
        items = [G.semigroup for G in en.enumerate_groups(args.order)]
        report["mode"] = "raw"
    else:
        if args.raw:
            items = [rg.semigroup
                     for rg in en.enumerate_right_groups_raw(args.order)]
            report["mode"] = "raw"
        else:
            items = [rg.semigroup
                     for rg in en.enumerate_right_groups(args.order)]
            report["mode"] = "structured"
    report["count"] = len(items)
    if args.emit:
        os.makedirs(args.emit, exist_ok=True)
        paths = []
        for i, S in enumerate(items):
            path = os.path.join(
                args.emit, f"{args.klass}_{args.order}_{i:04d}.txt")
            with open(path, "w") as fh:
                fh.write(format_table_text(
                    S, header=f"{args.klass} #{i} of order {args.order}"))
            paths.append(path)
        report["written"] = paths
    return report, 0


def render_enumerate(report):
    lines = [f"{report['count']} {report['class']}(s) of order "
             f"{report['order']} ({report['mode']})"]
    if "written" in report:
        lines.append(f"wrote {len(report['written'])} files")
    return "\n".join(lines)


# -- census --------------------------------------------------------------

def cmd_census(args):
    from .enumeration import census

    rows = census(args.max, raw_max=min(args.raw_max, args.max))
    report = {"command": "census",
              "rows": [r.as_dict() for r in rows]}
    return report, 0


def render_census(report):
    lines = [f"{'order':>5}  {'count':>5}  {'raw':>4}  inventory"]
    for row in report["rows"]:
        raw = "-" if row["count_raw"] is None else str(row["count_raw"])
        inv = ", ".join(f"(|E|={e}, {name})" for e, name in row["inventory"])
        lines.append(f"{row['order']:>5}  {row['count_structured']:>5}  "
                     f"{raw:>4}  {inv}")
    return "\n".join(lines)


# -- verify --------------------------------------------------------------

def cmd_verify(args):
    from .enumeration import enumerate_right_groups
    from .pretorsion import default_pretorsion_pool, verify_pretorsion_axioms

    pool = [rg for n in range(1, args.pool_order + 1)
            for rg in enumerate_right_groups(n)]
    probes = default_pretorsion_pool(args.probe_order)
    rep = verify_pretorsion_axioms(pool, probes)
    report = {
        "command": "verify",
        "pool_order": args.pool_order,
        "probe_order": args.probe_order,
        "pool_size": rep.pool_size,
        "axiom1": [
            {"rzs_order": t, "group_order": f, "hom_count": c,
             "all_trivial": triv, "ok": ok}
            for t, f, c, triv, ok in rep.hom_checks],
        "axiom2": [
            {"order": n, "idempotent_count": e, "ok": ok}
            for n, e, ok in rep.sequence_checks],
        "ok": rep.ok,
    }
    return report, 0 if rep.ok else 1


def render_verify(report):
    lines = [f"pool: all right groups of order <= {report['pool_order']} "
             f"({report['pool_size']} objects); probes of order <= "
             f"{report['probe_order']}"]
    lines.append("axiom 1 (Hom(right zero, group) trivial):")
    for row in report["axiom1"]:
        lines.append(
            f"  R{row['rzs_order']} -> group(order {row['group_order']}): "
            f"{row['hom_count']} morphism(s), trivial={row['all_trivial']} "
            f"[{'PASS' if row['ok'] else 'FAIL'}]")
    lines.append("axiom 2 (canonical short preexact sequence):")
    for row in report["axiom2"]:
        lines.append(
            f"  order {row['order']} (|E|={row['idempotent_count']}): "
            f"[{'PASS' if row['ok'] else 'FAIL'}]")
    lines.append("pretorsion axioms: " +
                 ("ALL PASS" if report["ok"] else "FAILED"))
    return "\n".join(lines)


# -- plumbing ------------------------------------------------------------

def _load_morphism(path, dom, cod):
    from .core import Morphism

    with open(path) as fh:
        toks = [tok for line in fh.read().splitlines()
                if not line.lstrip().startswith("#")
                for tok in line.split()]
    if len(toks) < 2:
        raise ValueError("morphism file needs: dom size, cod size, images")
    dn, cn = int(toks[0]), int(toks[1])
    if dn != dom.n or cn != cod.n:
        raise ValueError(
            f"morphism sizes ({dn}, {cn}) do not match tables "
            f"({dom.n}, {cod.n})")
    images = [int(x) for x in toks[2:]]
    return Morphism(dom, cod, images)


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, FiniteSemigroup):
        return {"order": obj.n, "table": [list(r) for r in obj.table]}
    if isinstance(obj, (int, str, bool, float)) or obj is None:
        return obj
    return repr(obj)


_RENDERERS = {
    "check": render_check,
    "decompose": render_decompose,
    "hom": render_hom,
    "prekernel": render_prekernel,
    "sequence": render_sequence,
    "action": render_action,
    "enumerate": render_enumerate,
    "census": render_census,
    "verify": render_verify,
}


def build_parser():
    p = argparse.ArgumentParser(
        prog="rightgroups",
        description="Finite right-group checks over Cayley-table files.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("check", help="classify a Cayley table")
    sp.add_argument("table")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("decompose",
                        help="decompose a right group as Se0 x E")
    sp.add_argument("table")
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("hom", help="count/list morphisms between tables")
    sp.add_argument("dom")
    sp.add_argument("cod")
    sp.add_argument("--list", action="store_true",
                    help="print each morphism")
    sp.add_argument("--oracle", action="store_true",
                    help="force the brute-force cross-check above order 5")
    sp.add_argument("--budget", type=int, default=10 ** 8,
                    help="brute-force candidate-map budget")
    sp.set_defaults(func=cmd_hom)

    sp = sub.add_parser("prekernel",
                        help="prekernel of a morphism between right groups")
    sp.add_argument("dom")
    sp.add_argument("cod")
    sp.add_argument("morphism",
                    help="file: dom size, cod size, then image ids")
    sp.add_argument("--verify", action="store_true",
                    help="verify the universal property against probes")
    sp.add_argument("--probe-order", type=int, default=4)
    sp.set_defaults(func=cmd_prekernel)

    sp = sub.add_parser("sequence",
                        help="canonical short preexact sequence of a "
                             "right group")
    sp.add_argument("table")
    sp.add_argument("--probe-order", type=int, default=4)
    sp.set_defaults(func=cmd_sequence)

    sp = sub.add_parser("action",
                        help="build the right group of a group action")
    sp.add_argument("action")
    sp.set_defaults(func=cmd_action)

    sp = sub.add_parser("enumerate", help="enumerate small structures")
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--class", dest="klass", required=True,
                    choices=["semigroup", "group", "rightgroup"])
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--raw", action="store_true",
                      help="raw Cayley search for right groups")
    mode.add_argument("--structured", action="store_true",
                      help="divisor-formula construction (the default)")
    sp.add_argument("--sample", type=int, default=0,
                    help="emit N random associative tables instead")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--emit", help="directory for one table file per item")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("census", help="right-group census table")
    sp.add_argument("--max", type=int, default=8)
    sp.add_argument("--raw-max", type=int, default=4)
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("verify", help="verify the pretorsion axioms")
    sp.add_argument("--pool-order", type=int, default=5)
    sp.add_argument("--probe-order", type=int, default=4)
    sp.set_defaults(func=cmd_verify)

    for name, sp in sub.choices.items():
        sp.add_argument("--json", action="store_true",
                        help="emit the machine-readable report")
    return p


def run(argv=None):
    """Parse and execute; returns (exit_code, report, text, as_json).

    May raise SystemExit(2) for usage errors (argparse behavior).
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    as_json = getattr(args, "json", False)
    try:
        report, code = args.func(args)
    except NotAssociative as e:
        report = {"error": str(e), "triple": list(e.triple)}
        return 2, report, f"error: {e}", as_json
    except (OSError, ValueError, NotARightGroup) as e:
        return 2, {"error": str(e)}, f"error: {e}", as_json
    return code, report, _RENDERERS[args.command](report), as_json


def main(argv=None):
    try:
        code, report, text, as_json = run(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    if as_json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
