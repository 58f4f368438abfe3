"""Command-line front end: JSON job files in, JSON result documents out.

Exit codes: 0 success, 1 input error, 2 inconclusive or bound-hit only,
3 precision failure.
"""

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .errors import (DepthExceeded, FrontierExplosion, Inconclusive, InvalidInput,
                     PadicError, PrecisionExhausted, ZeroDivisorDetected)
from .field import LocalField
from .padic import AtLeast
from .panayi import count_roots
from .poly import PolyOverK
from .search import (BOUND_HIT, ROOT_FOUND, GenericPolynomial, SearchJob, check_gsm_local,
                     load_catalog, search)

SCHEMA_VERSION = 1

EXIT_OK, EXIT_INPUT, EXIT_INCONCLUSIVE, EXIT_PRECISION = 0, 1, 2, 3


class JobError(Exception):
    pass


def _int(x, what):
    if isinstance(x, bool):
        raise JobError(f"{what}: expected an integer")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            return int(x.strip())
        except ValueError:
            pass
    raise JobError(f"{what}: expected an integer, got {x!r}")


def _int_list(xs, what):
    if not isinstance(xs, list) or not xs:
        raise JobError(f"{what}: expected a non-empty list")
    return [_int(x, what) for x in xs]


def _valuation_json(v):
    if isinstance(v, AtLeast):
        return {"at_least": v.bound}
    return v


def _digits_json(digits):
    return [d.coeffs[0] if d.parent.f == 1 else list(d.coeffs) for d in digits]


def _build_field(job, poly=None):
    spec = job.get("field")
    if not isinstance(spec, dict):
        raise JobError("missing 'field' object")
    defining = poly if poly is not None else _int_list(spec.get("defining"), "field.defining")
    modulus = spec.get("residue_modulus")
    if modulus is not None:
        modulus = _int_list(modulus, "field.residue_modulus")
    hint = spec.get("e_f_hint")
    if hint is not None:
        hint = tuple(_int_list(hint, "field.e_f_hint"))
        if len(hint) != 2:
            raise JobError("field.e_f_hint must be a pair")
    return LocalField(job["p"], defining, job["precision"], modulus, hint)


def _field_json(K):
    return {"defining": [str(c) for c in K.poly], "e": K.e, "f": K.f,
            "residue_modulus": list(K.residue_field.modulus)}


def run_roots(job):
    payload = job.get("roots") or {}
    K = _build_field(job)
    poly = _int_list(payload.get("polynomial"), "roots.polynomial")
    depth = payload.get("max_depth")
    report = count_roots(PolyOverK(K, poly), max_depth=None if depth is None else _int(depth, "max_depth"))
    roots = [{"digits": _digits_json(a.digits), "inverted": a.inverted,
              "residual_valuation": _valuation_json(a.residual)} for a in report.approximations]
    doc = {"command": "roots", "field": _field_json(K), "polynomial": [str(c) for c in poly],
           "count": report.count, "roots": roots}
    return doc, EXIT_OK


def _generic(payload, catalog):
    g = payload.get("generic")
    if isinstance(g, str):
        if g not in catalog:
            raise JobError(f"unknown generic polynomial {g!r}")
        return catalog[g]
    if isinstance(g, dict):
        try:
            return GenericPolynomial.from_dict(g)
        except (KeyError, TypeError, ValueError) as exc:
            raise JobError(f"bad inline generic polynomial: {exc}") from exc
    raise JobError("search.generic must be a catalog name or an inline template")


def _param_value(v, what):
    if isinstance(v, list):
        return [str(x) for x in v]
    if isinstance(v, (int, str)) and not isinstance(v, bool):
        return str(v)
    raise JobError(f"{what}: bad parameter value {v!r}")


def _search_one(args):
    job, fixed, catalog_path = args
    payload = job["search"]
    catalog = load_catalog(catalog_path)
    g = _generic(payload, catalog)
    K = _build_field(job)
    subfield = _int_list(payload.get("subfield", [0, 1]), "search.subfield")
    bound = _int(payload.get("digit_bound"), "search.digit_bound")
    iters = payload.get("max_iterations")
    sj = SearchJob(K, g, {k: v for k, v in fixed.items()}, bound, tuple(subfield),
                   payload.get("free_param"),
                   None if iters is None else _int(iters, "max_iterations"),
                   _int(payload.get("frontier_cap", 10_000), "frontier_cap"))
    result = search(sj)
    branches = []
    for b in result.branches:
        entry = {"digits": b.digit_values(), "status": b.status}
        if b.status == ROOT_FOUND:
            entry["local_gsm"] = b.local_gsm
            entry["parameter"] = None if b.reconstructed is None else str(b.reconstructed)
            entry["specialized"] = (None if b.integer_coeffs is None
                                    else [str(c) for c in b.integer_coeffs])
        branches.append(entry)
    return {"fixed_params": fixed, "branches": branches,
            "parameters": [str(t) for t in result.parameters() if t is not None],
            "status_counts": result.status_counts()}


def run_search(job, catalog_path=None, threads=1):
    payload = job.get("search")
    if not isinstance(payload, dict):
        raise JobError("missing 'search' object")
    _generic(payload, load_catalog(catalog_path))
    if "fixed_candidates" in payload:
        candidates = payload["fixed_candidates"]
        if not isinstance(candidates, list) or not candidates:
            raise JobError("search.fixed_candidates must be a non-empty list")
    else:
        candidates = [payload.get("fixed_params", {})]
    norm = []
    for c in candidates:
        if not isinstance(c, dict):
            raise JobError("fixed parameters must be objects")
        norm.append({k: _param_value(v, k) for k, v in sorted(c.items())})
    tasks = [(job, c, catalog_path) for c in norm]
    if threads > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            runs = list(pool.map(_search_one, tasks))
    else:
        runs = [_search_one(t) for t in tasks]
    found = any(b["status"] == ROOT_FOUND for r in runs for b in r["branches"])
    bound = any(b["status"] == BOUND_HIT for r in runs for b in r["branches"])
    code = EXIT_INCONCLUSIVE if bound and not found else EXIT_OK
    return {"command": "search", "runs": runs}, code


def run_check(job):
    payload = job.get("check")
    if not isinstance(payload, dict):
        raise JobError("missing 'check' object")
    candidate = _int_list(payload.get("candidate"), "check.candidate")
    if "local_poly" in payload:
        local = _int_list(payload["local_poly"], "check.local_poly")
    else:
        local = _int_list((job.get("field") or {}).get("defining"), "field.defining")
    modulus = (job.get("field") or {}).get("residue_modulus")
    ok = check_gsm_local(local, candidate, job["p"], job["precision"],
                         None if modulus is None else _int_list(modulus, "residue_modulus"))
    return {"command": "check", "local_poly": [str(c) for c in local],
            "candidate": [str(c) for c in candidate], "local_gsm": ok}, EXIT_OK


def load_job(path, command, precision=None):
    try:
        with open(path) as fh:
            job = json.load(fh)
    except OSError as exc:
        raise JobError(f"cannot read job file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise JobError(f"malformed JSON: {exc}") from exc
    if not isinstance(job, dict):
        raise JobError("job must be a JSON object")
    version = _int(job.get("version", SCHEMA_VERSION), "version")
    if version != SCHEMA_VERSION:
        raise JobError(f"unsupported schema version {version}")
    if job.get("command", command) != command:
        raise JobError(f"job is for {job['command']!r}, not {command!r}")
    job["p"] = _int(job.get("p"), "p")
    job["precision"] = _int(precision if precision is not None else job.get("precision", 120),
                            "precision")
    return job


def build_parser():
    parser = argparse.ArgumentParser(prog="padic-gsm",
                                     description="Root counting and parameter search over p-adic fields.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (("roots", "count the roots of a polynomial in K"),
                            ("search", "search the free parameter of a generic polynomial"),
                            ("check", "local Galois splitting model check")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--job", required=True, help="job file (JSON)")
        p.add_argument("--out", help="result file; stdout when omitted")
        p.add_argument("--precision", type=int, help="override the job's precision (base-p digits)")
        p.add_argument("--threads", type=int, default=1, help="worker processes for multi-candidate searches")
        p.add_argument("--catalog", help="generic polynomial catalog (JSON)")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        job = load_job(args.job, args.command, args.precision)
        if args.command == "roots":
            doc, code = run_roots(job)
        elif args.command == "search":
            doc, code = run_search(job, args.catalog, max(1, args.threads))
        else:
            doc, code = run_check(job)
    except (JobError, InvalidInput, ZeroDivisorDetected, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (Inconclusive, DepthExceeded, FrontierExplosion) as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except PrecisionExhausted as exc:
        print(f"precision failure: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except PadicError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    doc = {"version": SCHEMA_VERSION, **doc}
    text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
