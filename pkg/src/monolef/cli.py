"""Command-line front end.

Every subcommand produces a report envelope; ``--format json`` prints it as
JSON, ``--format text`` prints a short human summary.  The exit code encodes
the status.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Sequence

from filelock import FileLock

from . import __version__
from .binomial import DEFAULT_CAP, CapExceededError, family_from_table, gorenstein_certificate, kprime_gens
from .core import (
    MonomialIdeal,
    ParseError,
    hilbert_data,
    parse_ideal,
    parse_monomial,
    render_ideal,
    render_monomial,
    standard_basis,
)
from .glue import (
    NotApplicableError,
    decompose,
    find_witness,
    glue,
    glue_candidates,
)
from .lefschetz import Property, check_lefschetz
from .maci import SLP_SCAN_MAX_D, ScanRow, scan
from .selftest import run_selftest
from .tables import Table, ideal_of, predicted_socle, validate

TOOL = "monolef"
CACHE_ENV = "MONOLEF_CACHE_DIR"
CACHE_FILE = "maci-scan.jsonl"

EXIT_CODES = {
    "ok": 0,
    "property-failed": 1,
    "input-error": 2,
    "conjecture-disagreement": 3,
    "cap-exceeded": 4,
}


class InputError(ValueError):
    pass


@dataclass(frozen=True)
class CommandRequest:
    subcommand: str
    inputs: dict[str, Any]
    fmt: str = "json"
    threads: int = 1
    cap: int = DEFAULT_CAP
    cache: Path | None = None
    force: bool = False


@dataclass(frozen=True)
class ReportEnvelope:
    subcommand: str
    input: dict[str, Any]
    status: str
    result: Any
    duration: float
    version: str = __version__
    tool: str = TOOL
    text: list[str] = field(default_factory=list, compare=False)

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    def to_json(self) -> dict:
        return {
            "tool": self.tool,
            "version": self.version,
            "subcommand": self.subcommand,
            "input": self.input,
            "duration_s": round(self.duration, 6),
            "status": self.status,
            "result": self.result,
        }


# -- input helpers ---------------------------------------------------------


def _parse_together(texts: Sequence[str], n: int | None, kinds: Sequence[str]) -> list:
    """Parse ideals and monomials in a common polynomial ring.

    Without an explicit ``n`` the ring is the smallest one containing every
    variable mentioned in any of the inputs.
    """
    if n is None:
        found = []
        for text, kind in zip(texts, kinds):
            obj = parse_ideal(text) if kind == "ideal" else parse_monomial(text)
            found.append(obj.n if kind == "ideal" else len(obj))
        n = max(found)
    return [parse_ideal(t, n) if k == "ideal" else parse_monomial(t, n) for t, k in zip(texts, kinds)]


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.replace(" ", "").split(",") if v)
    except ValueError as exc:
        raise InputError(f"expected comma-separated integers, got {text!r}") from exc


def _load_table(text: str) -> Table:
    path = Path(text)
    raw = path.read_text() if not text.lstrip().startswith("{") and path.exists() else text
    try:
        return Table.from_json(raw)
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise InputError(f"cannot read table: {exc}") from exc


def _check_cap(ideal: MonomialIdeal, cap: int) -> None:
    size = sum(len(b) for b in standard_basis(ideal))
    if size > cap:
        raise CapExceededError(f"quotient dimension {size} exceeds cap {cap}")


def _proper_artinian(ideal: MonomialIdeal) -> None:
    if ideal.is_unit:
        raise InputError("the ideal is the unit ideal")


# -- subcommands -----------------------------------------------------------
# Each handler returns (status, result payload, text lines).

Outcome = tuple[str, Any, list[str]]


def _cmd_hilbert(req: CommandRequest) -> Outcome:
    (ideal,) = _parse_together([req.inputs["ideal"]], req.inputs.get("n"), ["ideal"])
    _proper_artinian(ideal)
    _check_cap(ideal, req.cap)
    hd = hilbert_data(ideal)
    result = {"ideal": ideal.to_json(), **hd.to_json()}
    return "ok", result, [f"ideal: {render_ideal(ideal)}", f"hilbert: {list(hd.values)}",
                          f"socle degree: {hd.socle_degree}", f"symmetric: {hd.symmetric}",
                          f"unimodal: {hd.unimodal}"]


def _lefschetz(prop: Property) -> Callable[[CommandRequest], Outcome]:
    def handler(req: CommandRequest) -> Outcome:
        (ideal,) = _parse_together([req.inputs["ideal"]], req.inputs.get("n"), ["ideal"])
        _proper_artinian(ideal)
        _check_cap(ideal, req.cap)
        report = check_lefschetz(ideal, prop, workers=req.threads)
        lines = [f"ideal: {render_ideal(ideal)}", f"hilbert: {list(report.hilbert.values)}",
                 f"{prop.value} lefschetz: {report.verdict}"]
        lines += [f"  l^{f.d} from degree {f.i}: rank {f.rank}, expected {f.expected}" for f in report.failures]
        return ("ok" if report.verdict else "property-failed"), report.to_json(), lines
    return handler


def _decomposition_lines(dec) -> list[str]:
    lines = [f"K = {render_ideal(dec.k)}", f"m = {render_monomial(dec.m)}",
             f"I = {render_ideal(dec.i)}", f"J = {render_ideal(dec.j)}"]
    if dec.compatible:
        lines.append("compatible: " + ", ".join(f"d={d}:{v}" for d, v in sorted(dec.compatible.items())))
    lines.append(f"centre to centre: {dec.centre_to_centre}")
    return lines


def _cmd_split(req: CommandRequest) -> Outcome:
    ideal, m = _parse_together([req.inputs["ideal"], req.inputs["m"]], req.inputs.get("n"), ["ideal", "monomial"])
    if m in ideal:
        raise InputError(f"{render_monomial(m)} lies in the ideal")
    dec = decompose(ideal, m)
    return "ok", dec.to_json(), _decomposition_lines(dec)


def _cmd_witness(req: CommandRequest) -> Outcome:
    (ideal,) = _parse_together([req.inputs["ideal"]], req.inputs.get("n"), ["ideal"])
    _proper_artinian(ideal)
    d = None if req.inputs.get("all_d") else req.inputs.get("d")
    dec = find_witness(ideal, d)
    if dec is None:
        return "property-failed", None, ["no witness found"]
    return "ok", dec.to_json(), _decomposition_lines(dec)


def _cmd_glue(req: CommandRequest) -> Outcome:
    i, j, m = _parse_together([req.inputs["i"], req.inputs["j"], req.inputs["m"]], req.inputs.get("n"),
                              ["ideal", "ideal", "monomial"])
    spec = glue(i, j, m)
    return "ok", spec.to_json(), [f"K = {render_ideal(spec.k)}", f"I_m = {render_ideal(spec.i_m)}"]


def _cmd_candidates(req: CommandRequest) -> Outcome:
    i, j = _parse_together([req.inputs["i"], req.inputs["j"]], req.inputs.get("n"), ["ideal", "ideal"])
    found = glue_candidates(i, j)
    result = [{"m": list(m), "K": glue(i, j, m).k.to_json()} for m in found]
    lines = [f"{render_monomial(m)} -> {render_ideal(glue(i, j, m).k)}" for m in found] or ["no candidates"]
    return "ok", result, lines


def _cmd_table(req: CommandRequest) -> Outcome:
    t = _load_table(req.inputs["table"])
    problems = validate(t)
    if problems:
        raise InputError("invalid table: " + "; ".join(problems))
    ideal = ideal_of(t)
    result: dict[str, Any] = {"table": t.to_json(), "ideal": ideal.to_json(), "proper": not ideal.is_unit}
    lines = [f"ideal: {render_ideal(ideal)}"]
    if ideal.is_unit or t.s < 1:
        status = "ok"
        if req.inputs.get("check_slp"):
            raise InputError("SLP check needs s >= 1 and a proper table ideal")
        return status, result, lines
    _check_cap(ideal, req.cap)
    predicted = predicted_socle(t)
    hd = hilbert_data(ideal)
    result.update(predicted_socle=predicted, computed_socle=hd.socle_degree, hilbert=list(hd.values))
    lines += [f"predicted socle degree: {predicted}", f"computed socle degree: {hd.socle_degree}"]
    status = "ok" if predicted == hd.socle_degree else "property-failed"
    if req.inputs.get("check_slp"):
        report = check_lefschetz(ideal, Property.STRONG, workers=req.threads)
        narrow = report.verdict and hd.symmetric
        result.update(slp=report.to_json(), narrow_slp=narrow)
        lines.append(f"narrow slp: {narrow}")
        if not narrow:
            status = "property-failed"
    return status, result, lines


def _cmd_gorenstein(req: CommandRequest) -> Outcome:
    c = req.inputs.get("c", "1")
    if req.inputs.get("table"):
        family = family_from_table(_load_table(req.inputs["table"]), c)
    else:
        family = kprime_gens(_int_list(req.inputs["d"]), _int_list(req.inputs["alpha"]), c)
    cert = gorenstein_certificate(family, req.cap)
    lines = [f"generators: {', '.join(str(g) for g in family.gens)}",
             f"groebner basis: {cert['groebner']}"]
    for key in ("initial_matches", "colon_identity", "socle_dimension", "hilbert"):
        if key in cert:
            lines.append(f"{key.replace('_', ' ')}: {cert[key]}")
    if "slp" in cert:
        lines.append(f"slp: {cert['slp']['verdict']}")
    lines.append(f"ok: {cert['ok']}")
    return ("ok" if cert["ok"] else "property-failed"), cert, lines


def _cache_path(req: CommandRequest) -> Path | None:
    if req.cache is not None:
        return req.cache
    root = os.environ.get(CACHE_ENV)
    return Path(root) / CACHE_FILE if root else None


def _read_cache(path: Path) -> dict[tuple[int, int, int], ScanRow]:
    """Rebuild scan rows from cache lines written by this tool version."""
    verdicts: dict[tuple[int, int, int], dict[str, bool]] = {}
    if not path.exists():
        return {}
    with FileLock(str(path) + ".lock"):
        lines = path.read_text().splitlines()
    for line in lines:
        try:
            entry = json.loads(line)
        except json.JSONDecodeError:
            continue  # a torn line from an interrupted write
        if entry.get("version") != __version__:
            continue
        key = (entry["a"], entry["b"], entry["c"])
        verdicts.setdefault(key, {})[entry["property"]] = entry["verdict"]
    from .maci import MaciParams, is_open_case, predict_slp, predict_wlp

    rows = {}
    for (a, b, c), v in verdicts.items():
        if "weak" not in v:
            continue
        p = MaciParams(a, b, c)
        rows[(a, b, c)] = ScanRow(a, b, c, p.d, v["weak"], predict_wlp(p), v.get("strong"),
                                  predict_slp(p), is_open_case(p))
    return rows


def _append_cache(path: Path, row: ScanRow) -> None:
    entries = [("weak", row.computed_wlp)]
    if row.computed_slp is not None:
        entries.append(("strong", row.computed_slp))
    text = "".join(json.dumps({"version": __version__, "a": row.a, "b": row.b, "c": row.c,
                               "property": prop, "verdict": verdict}) + "\n" for prop, verdict in entries)
    path.parent.mkdir(parents=True, exist_ok=True)
    with FileLock(str(path) + ".lock"):
        with path.open("a") as fh:
            fh.write(text)


def _cmd_maci_scan(req: CommandRequest) -> Outcome:
    d_values = _int_list(req.inputs["d"])
    slp = bool(req.inputs.get("slp"))
    if any(d < 3 for d in d_values):
        raise InputError("every d must be at least 3")
    if slp and max(d_values) > SLP_SCAN_MAX_D and not req.inputs.get("allow_large"):
        raise CapExceededError(f"SLP scans are limited to d <= {SLP_SCAN_MAX_D}; pass --allow-large to override")
    path = _cache_path(req)
    known = _read_cache(path) if path is not None and not req.force else {}
    on_row = (lambda row: _append_cache(path, row)) if path is not None else None
    report = scan(d_values, slp=slp, workers=req.threads, known=known, on_row=on_row)
    summary = report.summary()
    result = {"rows": [r.to_json() for r in report.rows], "summary": summary}
    lines = [json.dumps(r.to_json()) for r in report.rows] + [json.dumps({"summary": summary})]
    status = "conjecture-disagreement" if report.disagreements else "ok"
    return status, result, lines


def _cmd_selftest(req: CommandRequest) -> Outcome:
    results = run_selftest()
    failed = [r["name"] for r in results if not r["passed"]]
    lines = [f"{'PASS' if r['passed'] else 'FAIL'} {r['name']}" + (f" ({r['error']})" if r["error"] else "")
             for r in results]
    lines.append(f"{len(results) - len(failed)}/{len(results)} fixtures passed")
    return ("property-failed" if failed else "ok"), {"fixtures": results, "failed": failed}, lines


HANDLERS: dict[str, Callable[[CommandRequest], Outcome]] = {
    "hilbert": _cmd_hilbert,
    "wlp": _lefschetz(Property.WEAK),
    "slp": _lefschetz(Property.STRONG),
    "split": _cmd_split,
    "witness": _cmd_witness,
    "glue": _cmd_glue,
    "candidates": _cmd_candidates,
    "table": _cmd_table,
    "gorenstein": _cmd_gorenstein,
    "maci-scan": _cmd_maci_scan,
    "selftest": _cmd_selftest,
}


def run(req: CommandRequest) -> ReportEnvelope:
    """Dispatch a request and wrap the outcome in an envelope."""
    start = time.perf_counter()
    try:
        status, result, lines = HANDLERS[req.subcommand](req)
    except CapExceededError as exc:
        status, result, lines = "cap-exceeded", {"error": str(exc)}, [f"error: {exc}"]
    except ParseError as exc:
        status, result, lines = "input-error", {"error": str(exc), "position": exc.pos}, [f"error: {exc}"]
    except (InputError, NotApplicableError, ValueError, OSError) as exc:
        status, result, lines = "input-error", {"error": str(exc)}, [f"error: {exc}"]
    return ReportEnvelope(req.subcommand, req.inputs, status, result, time.perf_counter() - start, text=lines)


# -- argument parsing ------------------------------------------------------


def _default_threads() -> int:
    return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json", help="output format")
    common.add_argument("--threads", type=int, default=None, help="worker processes (default: available CPUs)")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum quotient dimension")
    common.add_argument("--n", type=int, default=None, help="number of variables (default: inferred)")

    parser = argparse.ArgumentParser(prog=TOOL, description="Lefschetz properties of monomial algebras.")
    parser.add_argument("--version", action="version", version=f"{TOOL} {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    for name, help_text in (("hilbert", "Hilbert function and socle degree"),
                            ("wlp", "weak Lefschetz check"),
                            ("slp", "strong Lefschetz check")):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("ideal", help='monomial ideal, e.g. "x^3, y^3, x*y*z"')

    p = sub.add_parser("split", parents=[common], help="split K into I = K+(m) and J = K:(m)")
    p.add_argument("ideal")
    p.add_argument("--m", required=True, help="monomial outside the ideal")

    p = sub.add_parser("witness", parents=[common], help="search for a gluing witness")
    p.add_argument("ideal")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--d", type=int, help="test a single power d")
    mode.add_argument("--all-d", action="store_true", help="require compatibility for every d")

    p = sub.add_parser("glue", parents=[common], help="glue I and J along m")
    p.add_argument("--i", required=True)
    p.add_argument("--j", required=True)
    p.add_argument("--m", required=True)

    p = sub.add_parser("candidates", parents=[common], help="list every admissible gluing monomial")
    p.add_argument("--i", required=True)
    p.add_argument("--j", required=True)

    p = sub.add_parser("table", parents=[common], help="ideal of a table, optionally with an SLP check")
    p.add_argument("table", help="table as JSON text or a path to a JSON file")
    p.add_argument("--check-slp", action="store_true")

    p = sub.add_parser("gorenstein", parents=[common], help="certificate for a binomial family")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--d", help="top row, e.g. 3,3,3")
    source.add_argument("--table", help="table as JSON text or a path")
    p.add_argument("--alpha", help="alpha row, e.g. 2,2,1")
    p.add_argument("--c", default="1", help="binomial coefficient (integer or a/b)")

    p = sub.add_parser("maci-scan", parents=[common], help="scan almost complete intersections")
    p.add_argument("--d", required=True, help="comma-separated generator degrees")
    p.add_argument("--slp", action="store_true", help="also check SLP")
    p.add_argument("--allow-large", action="store_true", help=f"allow SLP scans beyond d = {SLP_SCAN_MAX_D}")
    p.add_argument("--cache", type=Path, default=None, help=f"cache file (default: ${CACHE_ENV}/{CACHE_FILE})")
    p.add_argument("--force", action="store_true", help="recompute rows already in the cache")

    sub.add_parser("selftest", parents=[common], help="run the built-in fixture suite")
    return parser


_FLAGS = {"subcommand", "format", "threads", "cap", "cache", "force"}


def request_from_args(ns: argparse.Namespace) -> CommandRequest:
    inputs = {k: v for k, v in vars(ns).items() if k not in _FLAGS and v not in (None, False)}
    if ns.subcommand == "gorenstein" and ns.d is not None and ns.alpha is None:
        raise InputError("--alpha is required together with --d")
    threads = ns.threads if ns.threads is not None else _default_threads()
    if threads < 1 or ns.cap < 1:
        raise InputError("--threads and --cap must be positive")
    return CommandRequest(ns.subcommand, inputs, ns.format, threads, ns.cap,
                          getattr(ns, "cache", None), bool(getattr(ns, "force", False)))


def emit(env: ReportEnvelope, fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        json.dump(env.to_json(), out, indent=2)
        out.write("\n")
        return
    for line in env.text:
        out.write(line + "\n")
    out.write(f"status: {env.status} ({env.duration:.3f}s)\n")


def main(argv: Sequence[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        req = request_from_args(ns)
    except InputError as exc:
        env = ReportEnvelope(ns.subcommand, {}, "input-error", {"error": str(exc)}, 0.0, text=[f"error: {exc}"])
        emit(env, ns.format)
        return env.exit_code
    env = run(req)
    emit(env, req.fmt)
    return env.exit_code


if __name__ == "__main__":
    sys.exit(main())
