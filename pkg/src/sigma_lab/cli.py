"""Command-line front end: ``sigma-lab <command> ...``.

Every command builds a plain dict report with a fixed key order.  ``--format
json`` prints it verbatim (so ``json.loads`` gives the dict back); the human
format is a rendering of the same dict.  Exit codes: 0 success, 1 a law or
claim failed, 2 bad usage, input or validation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from . import catalog
from .axioms import FLAG_ORDER, FLAG_TITLES, classify
from .classes import classify_set
from .enumeration import canonical_multiset, dedupe, enum_fast
from .errors import ParseError, SigmaLabError, SpaceValidationError
from .laws import parse_property, search, verify_all
from .setfam import GroundSet, SpaceStructure, Subset, subsets_in_order, validate_space

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
MAX_VERIFY_POINTS = 5


@dataclass(frozen=True)
class Report:
    data: dict
    exit_code: int = EXIT_OK

    def to_json(self) -> str:
        return json.dumps(self.data, indent=2, ensure_ascii=False)

    def to_human(self) -> str:
        return _HUMAN[self.data["command"]](self.data)


def parse_report(text: str) -> dict:
    return json.loads(text)


# -- space files ----------------------------------------------------------------


def parse_space_text(text: str) -> tuple[SpaceStructure, list[str]]:
    """Parse ``{"points": [...], "opens": [[...], ...]}``; ∅ and X are added when missing."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"space file is not valid JSON: {e}") from None
    if not isinstance(doc, dict) or set(doc) != {"points", "opens"}:
        raise ParseError('space file must be an object with exactly the keys "points" and "opens"')
    points, opens = doc["points"], doc["opens"]
    if not isinstance(points, list) or not all(isinstance(p, str) for p in points):
        raise ParseError('"points" must be a list of strings')
    if not isinstance(opens, list) or not all(
        isinstance(o, list) and all(isinstance(p, str) for p in o) for o in opens
    ):
        raise ParseError('"opens" must be a list of lists of point names')
    ground = GroundSet.of(points)
    masks = []
    for o in opens:
        unknown = [p for p in o if p not in ground.labels]
        if unknown:
            raise ParseError(f"open set {o} names unknown points {unknown}")
        masks.append(ground.subset(o).mask)
    notes = []
    if 0 not in masks:
        masks.append(0)
        notes.append("inserted the empty set")
    if ground.full not in masks:
        masks.append(ground.full)
        notes.append("inserted the whole space")
    return validate_space(ground, masks), notes


def load_space_file(path: str) -> tuple[SpaceStructure, list[str]]:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from None
    return parse_space_text(text)


def space_document(space: SpaceStructure) -> dict:
    return {"points": list(space.ground.labels), "opens": [list(o) for o in space.opens]}


# -- commands -------------------------------------------------------------------


def cmd_classify(path: str, sets: bool = False) -> Report:
    space, notes = load_space_file(path)
    rep = classify(space)
    data = {
        "command": "classify",
        "space": space_document(space),
        "notes": notes,
        "axioms": rep.flags(),
        "witnesses": {k: w.as_dict() for k, w in rep.witnesses.items()},
    }
    if sets:
        rows = []
        for m in subsets_in_order(space.n):
            row = {"subset": list(Subset(space.ground, m))}
            row.update(classify_set(space, m).as_dict())
            rows.append(row)
        data["sets"] = rows
    return Report(data)


def cmd_enumerate(n: int, up_to_iso: bool = False, count_only: bool = False, workers=None) -> Report:
    res = enum_fast(n, workers)
    data = {"command": "enumerate", "points": n, "labeled": res.labeled_count}
    if up_to_iso or not count_only:
        classes = canonical_multiset(res)
        data["unlabeled"] = len(classes)
        if not count_only:
            data["spaces"] = [space_document(sp) for sp in dedupe(res).spaces]
    return Report(data)


def cmd_verify(max_n: int, law_id: Optional[str] = None, workers=None) -> Report:
    if not 1 <= max_n <= MAX_VERIFY_POINTS:
        raise ParseError(f"--max-points must be between 1 and {MAX_VERIFY_POINTS}")
    rep = verify_all(max_n, [law_id] if law_id else None, workers=workers, strict=False)
    data = {"command": "verify"}
    data.update(rep.as_dict())
    return Report(data, EXIT_OK if rep.ok else EXIT_FAIL)


def cmd_search(expr: str, max_n: int, workers=None) -> Report:
    pe = parse_property(expr)
    found = search(pe, max_n, workers)
    return Report(
        {
            "command": "search",
            "property": expr,
            "max_points": max_n,
            "found": found is not None,
            "space": space_document(found) if found is not None else None,
        }
    )


def cmd_catalog(claim_id: Optional[str] = None) -> Report:
    ids = [claim_id] if claim_id else list(catalog.CLAIMS)
    verdicts = [catalog.run_claim(i) for i in ids]
    rows = []
    for v in verdicts:
        c = catalog.CLAIMS[v.id]
        row = {"id": v.id, "description": c.description, "schema": c.schema.name}
        row.update({k: val for k, val in v.as_dict().items() if k != "id"})
        rows.append(row)
    passed = sum(v.holds for v in verdicts)
    data = {"command": "catalog", "passed": passed, "total": len(verdicts), "claims": rows}
    return Report(data, EXIT_OK if passed == len(verdicts) else EXIT_FAIL)


# -- human rendering ------------------------------------------------------------


def _mark(b: bool) -> str:
    return "yes" if b else "no"


def _fmt_space(doc: dict) -> str:
    opens = ", ".join("{" + ",".join(o) + "}" for o in doc["opens"])
    return f"points {' '.join(doc['points'])}\nopens  {opens}"


def _human_classify(d: dict) -> str:
    lines = [_fmt_space(d["space"])]
    lines += [f"note: {n}" for n in d["notes"]]
    width = max(len(FLAG_TITLES[k]) for k in FLAG_ORDER)
    for k in FLAG_ORDER:
        line = f"  {FLAG_TITLES[k]:<{width}}  {_mark(d['axioms'][k])}"
        w = d["witnesses"].get(k)
        if w:
            extra = []
            if w["points"]:
                extra.append("points " + ",".join(w["points"]))
            if w["subsets"]:
                extra.append("sets " + " ".join("{" + ",".join(s) + "}" for s in w["subsets"]))
            line += f"   ({w['description']}{'; ' if extra else ''}{'; '.join(extra)})"
        lines.append(line)
    if "sets" in d:
        cols = [k for k in d["sets"][0] if k != "subset"]
        lines.append("")
        lines.append("subset".ljust(12) + " ".join(c for c in cols))
        for row in d["sets"]:
            name = "{" + ",".join(row["subset"]) + "}"
            cells = " ".join(("x" if row[c] else ".").center(len(c)) for c in cols)
            lines.append((name.ljust(12) + cells).rstrip())
    return "\n".join(lines)


def _human_enumerate(d: dict) -> str:
    lines = [f"{d['points']} point(s): {d['labeled']} labelled spaces"]
    if "unlabeled" in d:
        lines[0] += f", {d['unlabeled']} up to homeomorphism"
    for i, sp in enumerate(d.get("spaces", []), 1):
        lines.append(f"[{i}] " + ", ".join("{" + ",".join(o) + "}" for o in sp["opens"]))
    return "\n".join(lines)


def _human_verify(d: dict) -> str:
    counts = ", ".join(f"n={k}: {v}" for k, v in d["spaces_per_n"].items())
    lines = [f"spaces checked ({counts})"]
    for law in d["laws"]:
        status = "ok  " if law["failures"] == 0 else "FAIL"
        lines.append(f"  {status} {law['id']:<18} {law['statement']}")
        if law["witness"]:
            w = law["witness"]
            lines.append(
                "       witness: opens "
                + ", ".join("{" + ",".join(o) + "}" for o in w["opens"])
                + (f"; points {','.join(w['witness_points'])}" if w["witness_points"] else "")
                + (
                    "; sets " + " ".join("{" + ",".join(s) + "}" for s in w["witness_subsets"])
                    if w["witness_subsets"]
                    else ""
                )
            )
    failed = sum(1 for law in d["laws"] if law["failures"])
    lines.append(f"{len(d['laws']) - failed}/{len(d['laws'])} laws hold")
    return "\n".join(lines)


def _human_search(d: dict) -> str:
    if not d["found"]:
        return f"none up to {d['max_points']} point(s) satisfies {d['property']}"
    return f"smallest space satisfying {d['property']}:\n" + json.dumps(d["space"])


def _human_catalog(d: dict) -> str:
    lines = []
    for c in d["claims"]:
        lines.append(f"{'pass' if c['holds'] else 'FAIL'}  {c['id']:<8} {c['description']}")
        for text, ok in c["checks"]:
            lines.append(f"        {'+' if ok else '-'} {text}")
    lines.append(f"{d['passed']}/{d['total']} claims pass")
    return "\n".join(lines)


_HUMAN = {
    "classify": _human_classify,
    "enumerate": _human_enumerate,
    "verify": _human_verify,
    "search": _human_search,
    "catalog": _human_catalog,
}


# -- entry point ----------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    # --format and --workers are accepted before or after the subcommand
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("human", "json"), default=argparse.SUPPRESS)
    common.add_argument(
        "--workers", type=int, default=argparse.SUPPRESS,
        help="worker processes (default: SIGMA_LAB_THREADS or 1)",
    )
    p = _Parser(prog="sigma-lab", description="Finite σ-space laboratory.", parents=[common])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("classify", parents=[common], help="axiom report for a space file")
    c.add_argument("file")
    c.add_argument("--sets", action="store_true", help="add the per-subset class table")

    e = sub.add_parser("enumerate", parents=[common], help="count or list all spaces on n points")
    e.add_argument("--points", type=int, required=True)
    e.add_argument("--up-to-iso", action="store_true")
    e.add_argument("--count-only", action="store_true")

    v = sub.add_parser("verify", parents=[common], help="check the law registry on all small spaces")
    v.add_argument("--max-points", type=int, required=True)
    v.add_argument("--law")

    s = sub.add_parser("search", parents=[common], help="smallest space with a given axiom profile")
    s.add_argument("--property", required=True)
    s.add_argument("--max-points", type=int, default=4)

    k = sub.add_parser("catalog", parents=[common], help="run the symbolic infinite-example claims")
    k.add_argument("--claim")
    return p


def run(argv: Sequence[str]) -> tuple[int, str]:
    """Run a command; return ``(exit_code, text)`` without touching stdout."""
    args = build_parser().parse_args(list(argv))
    fmt = getattr(args, "format", "human")
    workers = getattr(args, "workers", None)
    try:
        if args.command == "classify":
            rep = cmd_classify(args.file, args.sets)
        elif args.command == "enumerate":
            rep = cmd_enumerate(args.points, args.up_to_iso, args.count_only, workers)
        elif args.command == "verify":
            rep = cmd_verify(args.max_points, args.law, workers)
        elif args.command == "search":
            rep = cmd_search(args.property, args.max_points, workers)
        else:
            rep = cmd_catalog(args.claim)
    except SpaceValidationError as e:
        return EXIT_USAGE, f"invalid space: {e}"
    except (SigmaLabError, ValueError) as e:
        return EXIT_USAGE, f"error: {e}"
    text = rep.to_json() if fmt == "json" else rep.to_human()
    return rep.exit_code, text


def main(argv: Optional[Sequence[str]] = None) -> int:
    code, text = run(sys.argv[1:] if argv is None else argv)
    print(text, file=sys.stdout if code != EXIT_USAGE else sys.stderr)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
