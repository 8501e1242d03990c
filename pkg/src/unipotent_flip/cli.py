"""Command-line interface.

Exit codes: 0 when every requested check passes, 1 on a failed check (the
counterexamples are printed as JSON), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from typing import Any, Callable

from . import __version__
from .dl_expansion import expansion_dump, verify_section_5_4, verify_theorem_0_4
from .exact_arith import RatPoly
from .hecke import HeckeGateError, default_gate, hecke_report
from .involution import (
    AmbiguousBranch, IntegrityError, bang, degree_polynomial, family_report, report_passes,
)
from .weyl import WeylError, family_table, parse_type
from .weyl.families import Family, FamilyTable

FORMATS = ("json", "tsv", "pretty")


class UsageError(Exception):
    pass


class Output:
    """A JSON payload plus a table view for ``tsv`` / ``pretty``."""

    def __init__(self, payload: Any, header: list[str], rows: list[list[str]], ok: bool = True,
                 pretty: str | None = None):
        self.payload, self.header, self.rows, self.ok = payload, header, rows, ok
        self._pretty = pretty

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.payload, sort_keys=True, indent=2, ensure_ascii=False)
        if fmt == "tsv":
            return "\n".join("\t".join(r) for r in [self.header] + self.rows)
        if self._pretty is not None:
            return self._pretty
        cells = [self.header] + self.rows
        widths = [max(len(r[k]) for r in cells) for k in range(len(self.header))]
        return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells)


def _table(args) -> FamilyTable:
    if args.type is None:
        raise UsageError("--type is required")
    text = args.type if args.rank is None else f"{args.type}{args.rank}"
    try:
        kind, rank = parse_type(text)
        return family_table(kind, rank)
    except WeylError as exc:
        raise UsageError(str(exc)) from exc


def _families(args, T: FamilyTable) -> list[Family]:
    if args.family is None:
        return list(T)
    try:
        return [T.find(args.family)]
    except (WeylError, IndexError) as exc:
        raise UsageError(f"no family {args.family!r} in {T.W.name}") from exc


def _labels(T: FamilyTable, es) -> list[str]:
    return [T.W.irreducibles[e].label for e in es]


def _poly_text(p: RatPoly) -> str:
    return p.to_str("u")


# subcommands


def cmd_families(args) -> Output:
    T = _table(args)
    fams = _families(args, T)
    items = []
    for f in fams:
        items.append({
            "id": f.id,
            "gamma": f.gamma,
            "special": T.W.irreducibles[f.special].label,
            "members": _labels(T, f.members),
            "unipotents": [f.label(m) for m in f.model.elements],
        })
    payload = {"type": T.W.name, "n_families": len(T), "n_unipotent": T.n_unipotent, "families": items}
    rows = [[str(i["id"]), i["gamma"], i["special"], str(len(i["members"])), str(len(i["unipotents"])),
             " ".join(i["members"])] for i in items]
    return Output(payload, ["id", "gamma", "special", "n_members", "n_unipotent", "members"], rows)


def cmd_symbol(args) -> Output:
    T = _table(args)
    W = T.W
    if not hasattr(W, "symbol"):
        raise UsageError(f"symbols are defined for types B, C, D only, not {W.name}")
    items, rows, blocks = [], [], []
    for f in _families(args, T):
        for e in f.members:
            sym = W.symbol(e)
            items.append({"E": W.irreducibles[e].label, "family": f.id, "symbol": str(sym),
                          "family_data": f.classical.to_json() if f.classical else None})
            rows.append([W.irreducibles[e].label, str(f.id), str(sym)])
            blocks.append(f"{W.irreducibles[e].label}  [family {f.id}]\n{sym.pretty()}")
    return Output({"type": W.name, "symbols": items}, ["E", "family", "symbol"], rows,
                  pretty="\n\n".join(blocks))


def cmd_degrees(args) -> Output:
    T = _table(args)
    items, rows = [], []
    for f in _families(args, T):
        for m in f.model.elements:
            D = degree_polynomial(T, f, m)
            items.append({"family": f.id, "xi": f.label(m), "degree": D.to_json()})
            rows.append([str(f.id), f.label(m), _poly_text(D)])
    return Output({"type": T.W.name, "degrees": items}, ["family", "xi", "degree"], rows)


def cmd_involution(args) -> Output:
    T = _table(args)
    items, rows = [], []
    for f in _families(args, T):
        for m in f.model.elements:
            try:
                mb = bang(f, m, args.branch)
            except AmbiguousBranch as exc:
                raise UsageError(str(exc)) from exc
            items.append({"family": f.id, "xi": f.label(m), "bang": f.label(mb)})
            rows.append([str(f.id), f.label(m), f.label(mb)])
    return Output({"type": T.W.name, "involution": items}, ["family", "xi", "bang"], rows)


def cmd_expand(args) -> Output:
    T = _table(args)
    dump = expansion_dump(T)
    rows = [[d["w"], " ".join(f"{k}={v}" for k, v in d["coefficients"])] for d in dump]
    return Output({"type": T.W.name, "expansions": dump}, ["w", "coefficients"], rows)


def cmd_verify(args) -> Output:
    T = _table(args)
    if not args.all and args.family is None:
        raise UsageError("verify needs --all or --family")
    reports = [family_report(T, f) for f in _families(args, T)]
    ok = all(report_passes(r) for r in reports)
    payload: dict[str, Any] = {"type": T.W.name, "families": reports}
    rows = [[str(r["family"]), r["gamma"], str(r["size"]), r["m_c"], str(r["a"]), str(r["A"])]
            + ["pass" if r["checks"][k]["pass"] else "FAIL" for k in ("thm1_3", "prop1_4", "thm2_2", "aA")]
            for r in reports]
    if args.all:
        W = T.W
        fake = [W.irreducibles[e].label for e in range(len(W.irreducibles))
                if W.fake_degree(e).substitute_neg() != W.fake_degree(e) * (-1) ** W.b(e)]
        poincare = sum((W.fake_degree(e) * W.irreducibles[e].dim for e in range(len(W.irreducibles))),
                       RatPoly()) == W.poincare()
        global_checks = {
            "thm0_4": verify_theorem_0_4(T),
            "sums_w0": verify_section_5_4(T),
            "fake_degree_parity": fake,
        }
        payload["global"] = {k: {"pass": not v, "counterexamples": v} for k, v in global_checks.items()}
        payload["global"]["poincare"] = {"pass": poincare}
        ok = ok and all(v["pass"] for v in payload["global"].values())
        for k, v in sorted(payload["global"].items()):
            rows.append([k, "", "", "", "", ""] + ["pass" if v["pass"] else "FAIL"] + [""] * 3)
    payload["pass"] = ok
    header = ["family", "gamma", "size", "m_c", "a", "A", "thm1_3", "prop1_4", "thm2_2", "aA"]
    return Output(payload, header, rows, ok=ok)


def cmd_hecke_check(args) -> Output:
    T = _table(args)
    try:
        rep = hecke_report(T, gate=args.hecke_rank_gate, v0=args.v0)
    except HeckeGateError as exc:
        raise UsageError(str(exc)) from exc
    rows = [[k, "pass" if (v["pass"] if isinstance(v, dict) else v) else "FAIL"]
            for k, v in rep.items() if k in ("quadratic", "braid", "central", "spectrum")]
    rows.append(["scalars", " ".join(rep["spectrum"]["scalars"])])
    return Output(rep, ["check", "result"], rows, ok=rep["pass"])


def cmd_dump_tables(args) -> Output:
    from .weyl.exceptional_data import derive_all, load_data, validate_all

    if args.validate:
        try:
            with open(args.validate, encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read {args.validate}: {exc}") from exc
        problems = validate_all(data)
        ok = not any(problems.values())
        rows = [[k, "pass" if not v else "; ".join(v)] for k, v in sorted(problems.items())]
        return Output({"pass": ok, "problems": problems}, ["type", "result"], rows, ok=ok)
    data = derive_all() if args.derive else load_data()
    rows = [[t, str(f["id"]), f["gamma"], " ".join(f["members"])]
            for t, entry in sorted(data["types"].items()) for f in entry["families"]]
    return Output(data, ["type", "family", "gamma", "members"], rows)


COMMANDS: dict[str, Callable[[Any], Output]] = {
    "families": cmd_families,
    "symbol": cmd_symbol,
    "degrees": cmd_degrees,
    "involution": cmd_involution,
    "expand": cmd_expand,
    "verify": cmd_verify,
    "hecke-check": cmd_hecke_check,
    "dump-tables": cmd_dump_tables,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", help="B, C, D, G or F (or e.g. B3)")
    common.add_argument("--rank", type=int)
    common.add_argument("--family", help="family id or the label of any member")
    common.add_argument("--format", choices=FORMATS, default="json")

    p = argparse.ArgumentParser(prog="unipotent-flip",
                                description="Families, Fourier data and the involution of unipotent representations.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("families", parents=[common], help="list families")
    sub.add_parser("symbol", parents=[common], help="symbols of irreducible characters (B, C, D)")
    sub.add_parser("degrees", parents=[common], help="degree polynomials D(u)")
    inv = sub.add_parser("involution", parents=[common], help="the map xi -> xi^!")
    inv.add_argument("--branch", type=int, default=None, help="choice of m(c) when it is not unique")
    sub.add_parser("expand", parents=[common], help="unipotent multiplicities of H^*(X_w) per class")
    ver = sub.add_parser("verify", parents=[common], help="check the identities")
    ver.add_argument("--all", action="store_true", help="all families plus the global identities")
    hk = sub.add_parser("hecke-check", parents=[common], help="centrality and spectrum of T_{w0}")
    hk.add_argument("--hecke-rank-gate", type=int, default=None,
                    help=f"largest |W| admitted (default {default_gate()})")
    hk.add_argument("--v0", type=int, default=3)
    dt = sub.add_parser("dump-tables", parents=[common], help="the G2/F4 data file")
    dt.add_argument("--validate", metavar="FILE", help="re-validate FILE against recomputed tables")
    dt.add_argument("--derive", action="store_true", help="recompute instead of reading the shipped file")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            out = COMMANDS[args.command](args)
        for w in caught:
            print(f"warning: {w.message}", file=sys.stderr)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (IntegrityError, WeylError) as exc:
        print(json.dumps({"error": str(exc)}, sort_keys=True))
        return 1
    text = out.render(args.format)
    print(text)
    if not out.ok and args.format != "json":
        print(json.dumps(out.payload, sort_keys=True), file=sys.stderr)
    return 0 if out.ok else 1


if __name__ == "__main__":
    sys.exit(main())
