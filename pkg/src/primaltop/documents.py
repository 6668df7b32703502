"""Space documents, bundled fixtures and report serialisation.

A space document is JSON::

    {"name": "EX-A",
     "universe": ["a", "b", "c"],
     "topology": [[], ["b"], ["c"], ["b", "c"], ["a", "c"], ["a", "b", "c"]],
     "primal": [[], ["b"], ["c"], ["b", "c"]]}

Reports are JSON objects carrying ``schema_version``; the human table is
rendered from that object alone.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .errors import DocumentError, PrimalTopError
from .primal import PrimalSpace, validate_primal
from .sets import SetFamily, Universe
from .topology import validate_topology

SCHEMA_VERSION = 1


def _subsets(u: Universe, raw, field: str) -> SetFamily:
    if not isinstance(raw, list) or not all(isinstance(s, list) for s in raw):
        raise DocumentError(f"{field!r} must be a list of lists of point names")
    for s in raw:
        if not all(isinstance(p, str) for p in s):
            raise DocumentError(f"{field!r} contains a non-string point name")
    try:
        return SetFamily.of_names(u, raw)
    except PrimalTopError as exc:
        raise DocumentError(f"{field}: {exc}", witness=exc.witness) from exc


def parse_universe(doc: dict) -> Universe:
    if not isinstance(doc, dict):
        raise DocumentError("a space document must be a JSON object")
    for key in ("universe", "topology", "primal"):
        if key not in doc:
            raise DocumentError(f"missing field {key!r}")
    pts = doc["universe"]
    if not isinstance(pts, list) or not all(isinstance(p, str) for p in pts):
        raise DocumentError("'universe' must be a list of point names")
    try:
        return Universe(tuple(pts))
    except PrimalTopError as exc:
        raise DocumentError(str(exc)) from exc


def parse_families(doc: dict) -> tuple[Universe, SetFamily, SetFamily]:
    """Structural parse only; axioms are not checked."""
    u = parse_universe(doc)
    return u, _subsets(u, doc["topology"], "topology"), _subsets(u, doc["primal"], "primal")


def parse_space(doc: dict) -> PrimalSpace:
    """Build a validated space.

    Raises :class:`DocumentError` for structural problems and the axiom
    errors of the topology/primal modules for validation failures.
    """
    _, top, prim = parse_families(doc)
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise DocumentError("'name' must be a string")
    return PrimalSpace(validate_topology(top), validate_primal(prim), name)


def read_document(path) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def load_space(path) -> PrimalSpace:
    return parse_space(read_document(path))


def space_document(space: PrimalSpace) -> dict:
    doc = {}
    if space.name is not None:
        doc["name"] = space.name
    doc["universe"] = list(space.universe.points)
    doc["topology"] = [s.names() for s in space.topology.opens]
    doc["primal"] = [s.names() for s in space.primal.family]
    return doc


FIXTURE_NAMES = ("EX-A", "EX-B", "EX-C", "EX-D", "EX-E", "EX-F")


def fixture_document(name: str) -> dict:
    if name not in FIXTURE_NAMES:
        raise DocumentError(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}")
    fname = name.lower().replace("-", "_") + ".json"
    text = resources.files("primaltop").joinpath("fixtures", fname).read_text(encoding="utf-8")
    return json.loads(text)


def load_fixture(name: str) -> PrimalSpace:
    return parse_space(fixture_document(name))


# ----------------------------------------------------------------- reports

def emit_report(body: dict) -> str:
    body = {"schema_version": SCHEMA_VERSION, **body}
    return json.dumps(body, sort_keys=True, ensure_ascii=False, indent=2) + "\n"


def parse_report(text: str) -> dict:
    try:
        body = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid report JSON: {exc.msg}") from exc
    if not isinstance(body, dict) or body.get("schema_version") != SCHEMA_VERSION:
        raise DocumentError("not a report of the supported schema version")
    return body


def _table(headers: list[str], rows: list[list[str]]) -> list[str]:
    widths = [len(h) for h in headers]
    for row in rows:
        widths = [max(w, len(c)) for w, c in zip(widths, row)]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    out = [fmt.format(*headers), fmt.format(*("-" * w for w in widths))]
    out += [fmt.format(*row) for row in rows]
    return [line.rstrip() for line in out]


def _fam(xs) -> str:
    return "{" + ", ".join(xs) + "}"


def _check_rows(reports: list[dict]) -> list[str]:
    rows = [
        [r["theorem"], r["kind"], r["status"], str(r["spaces_checked"]), str(r["failures"])]
        for r in reports
    ]
    lines = _table(["theorem", "kind", "status", "spaces", "failures"], rows)
    for r in reports:
        for w in r["witnesses"][:1]:
            subs = ", ".join(f"{k}={v}" for k, v in w["subsets"].items())
            where = w["space"] or f"τ={_fam(w['topology'])} P={_fam(w['primal'])}"
            lines.append(f"  {r['theorem']}: {subs or '(space-level)'} on {where}: {w['note']}")
    return lines


def render_table(body: dict) -> str:
    """Human-readable rendering derived only from a report body."""
    cmd = body.get("command")
    lines = [f"{cmd}" + (f"  [{body['space']}]" if body.get("space") else "")]
    if cmd == "validate":
        for c in body["checks"]:
            lines.append(f"  {c['axiom']:<10} {c['status']}")
        if body.get("error"):
            e = body["error"]
            lines.append(f"  error: {e['kind']}: {e['message']}")
            if e["witness"]:
                lines.append(f"  witness: {', '.join(e['witness'])}")
    elif cmd == "compute":
        lines.append(f"  operator: {body['operator']}")
        if "table" in body:
            lines += ["  " + s for s in _table(["A", "value"], [[r["set"], r["value"]] for r in body["table"]])]
        if "family" in body:
            lines.append(f"  family: {_fam(body['family'])}")
        if body.get("set") is not None:
            lines.append(f"  set: {body['set']}")
        if "value" in body:
            lines.append(f"  value: {body['value']}")
        if "member" in body:
            lines.append(f"  member: {body['member']}")
    elif cmd == "check":
        for k, v in body["summary"].items():
            lines.append(f"  {k}: {_fam(v) if isinstance(v, list) else v}")
        lines += ["  " + s for s in _check_rows(body["reports"])]
        lines.append(f"  ok: {body['ok']}")
    elif cmd == "sweep":
        lines.append(f"  n={body['n']} strategy={body['strategy']} seed={body['seed']}")
        lines += ["  " + s for s in _check_rows(body["reports"])]
        lines.append(f"  ok: {body['ok']}")
    elif cmd == "enumerate":
        for n, count in body["counts"].items():
            lines.append(f"  n={n}: {count} {body['what']}")
        for item in body.get("items", []):
            lines.append(f"    {_fam(item)}")
    elif cmd == "error":
        lines.append(f"  {body['kind']}: {body['message']}")
    return "\n".join(lines) + "\n"
