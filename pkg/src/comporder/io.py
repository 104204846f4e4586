"""JSON documents for instances, applicants and jobs.

Every rational is written as a ``"p/q"`` (or ``"p"``) string so the format
never loses precision.  ``dumps_*`` output is canonical: fixed key order,
two-space indent, trailing newline.
"""

from __future__ import annotations

import json
from typing import Any

from .adapters import Applicant, Job
from .errors import ContractViolation, ParseError
from .functions import AffineFn, ClampedFn, MonotonePwlFn
from .numeric import format_rational, parse_rational
from .solvers import Instance, Mode, Objective

FORMAT_VERSION = 1


def _parse(raw, what: str):
    if not isinstance(raw, str):
        raise ParseError(f"{what} must be a rational string, got {raw!r}")
    try:
        return parse_rational(raw)
    except ZeroDivisionError as exc:
        raise ParseError(str(exc)) from None


def _rat(doc: dict, key: str):
    try:
        raw = doc[key]
    except (KeyError, TypeError):
        raise ParseError(f"missing field {key!r}") from None
    return _parse(raw, f"field {key!r}")


def _list(doc: dict, key: str) -> list:
    val = doc.get(key) if isinstance(doc, dict) else None
    if not isinstance(val, list):
        raise ParseError(f"field {key!r} must be a list")
    return val


def _load(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    if doc.get("version") != FORMAT_VERSION:
        raise ParseError(f"unsupported version {doc.get('version')!r}")
    return doc


def _dump(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def function_to_doc(f) -> dict:
    if isinstance(f, AffineFn):
        return {"kind": "affine", "slope": format_rational(f.slope), "intercept": format_rational(f.intercept)}
    if isinstance(f, ClampedFn):
        return {
            "kind": "clamped",
            "slope": format_rational(f.slope),
            "intercept": format_rational(f.intercept),
            "floor": format_rational(f.floor),
        }
    if isinstance(f, MonotonePwlFn):
        return {
            "kind": "pwl",
            "breakpoints": [format_rational(b) for b in f.breakpoints],
            "pieces": [{"slope": format_rational(p.slope), "intercept": format_rational(p.intercept)}
                       for p in f.pieces],
        }
    raise TypeError(f"cannot serialise {f!r}")


def function_from_doc(doc: Any):
    if not isinstance(doc, dict):
        raise ParseError("function entry must be an object")
    kind = doc.get("kind")
    try:
        if kind == "affine":
            return AffineFn(_rat(doc, "slope"), _rat(doc, "intercept"))
        if kind == "clamped":
            return ClampedFn(_rat(doc, "slope"), _rat(doc, "intercept"), _rat(doc, "floor"))
        if kind == "pwl":
            bps = [_parse(b, "breakpoint") for b in _list(doc, "breakpoints")]
            pieces = [AffineFn(_rat(p, "slope"), _rat(p, "intercept")) for p in _list(doc, "pieces")]
            return MonotonePwlFn(tuple(bps), tuple(pieces))
    except (ParseError, ContractViolation):
        raise
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"invalid {kind} function: {exc}") from None
    raise ParseError(f"unknown function kind {kind!r}")


def instance_to_doc(inst: Instance) -> dict:
    doc = {
        "version": FORMAT_VERSION,
        "objective": inst.objective.value,
        "mode": inst.mode.value,
    }
    if inst.mode is Mode.EXACT_K:
        doc["k"] = inst.k
    doc["start"] = format_rational(inst.start)
    doc["functions"] = [function_to_doc(f) for f in inst.functions]
    return doc


def instance_from_doc(doc: dict) -> Instance:
    try:
        objective = Objective(doc.get("objective", "max"))
        mode = Mode(doc.get("mode"))
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    k = doc.get("k")
    if mode is Mode.EXACT_K and not isinstance(k, int):
        raise ParseError("exact-k instances need an integer 'k'")
    if mode is Mode.EXACT_K and isinstance(k, bool):
        raise ParseError("'k' must be an integer")
    fs = tuple(function_from_doc(f) for f in _list(doc, "functions"))
    return Instance(fs, _rat(doc, "start"), objective, mode, k if mode is Mode.EXACT_K else None)


def loads_instance(text: str) -> Instance:
    return instance_from_doc(_load(text))


def dumps_instance(inst: Instance) -> str:
    return _dump(instance_to_doc(inst))


def loads_applicants(text: str) -> list[Applicant]:
    doc = _load(text)
    apps = []
    for entry in _list(doc, "applicants"):
        vals = [_parse(v, "applicant value") for v in _list(entry, "values")]
        probs = [_parse(p, "applicant probability") for p in _list(entry, "probs")]
        apps.append(Applicant(tuple(vals), tuple(probs)))
    return apps


def dumps_applicants(apps) -> str:
    return _dump({
        "version": FORMAT_VERSION,
        "applicants": [{"values": [format_rational(v) for v in a.values],
                        "probs": [format_rational(p) for p in a.probs]} for a in apps],
    })


def loads_jobs(text: str):
    doc = _load(text)
    jobs = [Job(_rat(j, "rate"), _rat(j, "base")) for j in _list(doc, "jobs")]
    start = _rat(doc, "start") if "start" in doc else parse_rational("0")
    return jobs, start


def dumps_jobs(jobs, start) -> str:
    return _dump({
        "version": FORMAT_VERSION,
        "start": format_rational(start),
        "jobs": [{"rate": format_rational(j.rate), "base": format_rational(j.base)} for j in jobs],
    })
