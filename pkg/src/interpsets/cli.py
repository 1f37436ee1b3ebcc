"""Command-line surface: analyze, construct, count, verify-f, word-stats.

Exit codes: 0 when every emitted verdict holds, 1 when a verification
fails, 2 for usage errors.  All output files are written atomically and
are byte-identical across reruns with the same parameters and seeds;
timing appears only on stdout, never inside files.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from fractions import Fraction

from . import construct, counting, intsets, recurrence, words
from .intsets import atomic_write_text as _atomic_write

SCHEMA = 1


class UsageError(Exception):
    pass


def _dump(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _parse_fraction(text) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad rational {text!r}: {exc}") from exc


def _report(command, parameters, outputs, verdicts, seed=None, started=None,
            results=None):
    rep = {
        "schema": SCHEMA,
        "command": command,
        "parameters": parameters,
        "seed": seed,
        "outputs": outputs,
        "verdicts": verdicts,
    }
    if results:
        rep["results"] = results
    if started is not None:
        rep["timing_s"] = round(time.monotonic() - started, 3)
    print(_dump(rep), end="")
    return 0 if all(v.get("ok", False) for v in verdicts) else 1


def _cert_verdict(cert):
    return {"name": cert.predicate, "ok": cert.holds, "certificate": cert.to_json()}


# -- analyze -------------------------------------------------------------------


def cmd_analyze(args):
    started = time.monotonic()
    model = intsets.parse_set_spec(args.set)
    n = args.n
    verdicts = []
    extra = {}
    if args.gaps:
        gaps = intsets.gap_sequence(model, n)
        extra["gap_histogram"] = {str(g): gaps.count(g) for g in sorted(set(gaps))}
    if args.syndetic is not None:
        verdicts.append(_cert_verdict(
            intsets.syndetic_certificate(model, n, args.syndetic)))
    if args.thick is not None:
        verdicts.append(_cert_verdict(
            intsets.thick_certificate(model, n, args.thick)))
    if args.pw_syndetic is not None:
        g, run_len = args.pw_syndetic
        verdicts.append(_cert_verdict(
            intsets.piecewise_syndetic_certificate(model, n, g, run_len)))
    if args.gap_table is not None:
        verdicts.append(_cert_verdict(
            intsets.gap_syndeticity_table(model, n, args.gap_table)))
    if args.banach is not None:
        n_max = args.banach if args.banach > 0 else min(64, n // 2)
        profile = intsets.banach_density_profile(model, n, n_max=n_max)
        extra["banach"] = {
            "exact": str(profile.exact) if profile.exact is not None else None,
            "rows": [
                {"n": r.length, "count": r.count, "start": r.start,
                 "value": str(r.value)}
                for r in profile.rows
            ],
        }
    outputs = []
    if args.out:
        payload = {"schema": SCHEMA, "set": args.set, "N": n,
                   "verdicts": verdicts, **extra}
        _atomic_write(args.out, _dump(payload))
        outputs.append(args.out)
    return _report("analyze", {"set": args.set, "N": n}, outputs, verdicts,
                   started=started, results=extra)


# -- construct -----------------------------------------------------------------


def _load_problem(path):
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    try:
        model = intsets.parse_set_spec(data["set_spec"])
        k = int(data["k"])
        n = int(data["N"])
        fspec = data["f"]
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"bad problem file {path}: {exc}") from exc
    seed = None
    if "pairs" in fspec:
        f = {int(s): int(v) for s, v in fspec["pairs"]}
        problem = construct.InterpolationProblem(model, k, n, f)
    elif "seed" in fspec:
        seed = int(fspec["seed"])
        if fspec.get("distribution", "uniform") != "uniform":
            raise UsageError("only distribution=uniform is supported")
        problem = construct.random_problem(model, k, n, seed)
    else:
        raise UsageError("f must give pairs or a seed")
    return problem, data, seed


def _write_trace(out_dir, trace):
    files = {}
    for lvl in trace.levels:
        name = f"w{lvl.level}.word"
        words.write_word_file(os.path.join(out_dir, name), lvl.w)
        files[lvl.level] = name
    words.write_word_file(os.path.join(out_dir, "xu.word"), trace.result)
    doc = {
        "schema": SCHEMA,
        "kind": trace.kind,
        "alphabet": trace.alphabet_size,
        "window": trace.window,
        "set_spec": trace.set_spec,
        "result_file": "xu.word",
        "result_length": len(trace.result),
        "closing_blocks": list(trace.closing_blocks),
        "levels": [
            {
                "level": lvl.level,
                "m": lvl.m,
                "w_file": files[lvl.level],
                "t_size": len(lvl.t_sample),
                "t_prime_size": len(lvl.t_prime_sample or ()),
                "t_enum_len": lvl.t_enum_len,
                "t_prime_enum_len": lvl.t_prime_enum_len,
                "t_capped": lvl.t_capped,
                "gap_required": lvl.gap_required,
                "spacing_bound": lvl.spacing_bound,
                "density_bound": (str(lvl.density_bound)
                                  if lvl.density_bound is not None else None),
            }
            for lvl in trace.levels
        ],
    }
    path = os.path.join(out_dir, "trace.json")
    _atomic_write(path, _dump(doc))
    return [path, os.path.join(out_dir, "xu.word")]


def cmd_construct(args):
    started = time.monotonic()
    problem, data, seed = _load_problem(args.problem)
    os.makedirs(args.out_dir, exist_ok=True)
    verdicts = []
    outputs = []

    def emit_word(w, name="x.word"):
        path = os.path.join(args.out_dir, name)
        words.write_word_file(path, w)
        outputs.append(path)
        return path

    if args.kind == "zero":
        w, profile = construct.extend_zero(problem, args.profile_max)
        emit_word(w)
        ok = all(w.at(s) == v for s, v in problem.f.items())
        verdicts.append({"name": "restriction-identity", "ok": ok})
        est = words.entropy_estimate(profile)
        verdicts.append({"name": "entropy-estimate", "ok": True,
                         "h_at_max": est.at_n_max, "n_max": est.n_max})
    elif args.kind == "sturmian":
        if problem.model.kind != "sturmian":
            raise UsageError("sturmian construction needs a sturmian set_spec")
        w = construct.sturmian_interpolate(list(problem.model.cf), problem.f,
                                           problem.k, problem.n)
        emit_word(w)
        ok = all(w.at(s) == v for s, v in problem.f.items())
        verdicts.append({"name": "restriction-identity", "ok": ok})
        delta = problem.model.delta()
        bound_ok = True
        for m in range(1, min(20, len(w) // 2) + 1):
            cap = (m + 1) * problem.k ** math.ceil(m * delta)
            if words.factor_count(w, m) > cap:
                bound_ok = False
        verdicts.append({"name": "sturmian-factor-bound", "ok": bound_ok})
    elif args.kind == "mixing":
        try:
            ext = construct.mixing_extend(problem, args.l_target)
        except construct.ConstructionRefused as exc:
            verdicts.append({
                "name": "mixing-precondition", "ok": False,
                "required_run": exc.required, "available_run": exc.available,
                "certificate": exc.certificate.to_json(),
            })
            return _report("construct", {"kind": args.kind,
                                         "problem": args.problem},
                           outputs, verdicts, seed=seed, started=started)
        emit_word(ext.word)
        ok = all(ext.word.at(s) == v for s, v in problem.f.items())
        verdicts.append({"name": "restriction-identity", "ok": ok})
        verdicts.append({"name": "factor-coverage",
                         "ok": ext.l_cover == ext.l_target,
                         "l_cover": ext.l_cover, "l_target": ext.l_target})
    elif args.kind in ("minimal", "ergodic"):
        builder = (construct.totally_minimal_construct if args.kind == "minimal"
                   else construct.strictly_ergodic_construct)
        try:
            trace = builder(problem, levels=args.levels)
        except construct.LevelWindowError as exc:
            verdicts.append({
                "name": "level-window", "ok": False, "level": exc.level,
                "required_gap": exc.required_gap, "reason": str(exc),
            })
            return _report("construct", {"kind": args.kind,
                                         "problem": args.problem},
                           outputs, verdicts, seed=seed, started=started)
        outputs.extend(_write_trace(args.out_dir, trace))
        for check in construct.verify_trace(trace, problem):
            verdicts.append(check.to_json())
    else:
        raise UsageError(f"unknown construction kind {args.kind!r}")
    params = {"kind": args.kind, "problem": args.problem,
              "problem_spec": data.get("set_spec")}
    return _report("construct", params, outputs, verdicts, seed=seed,
                   started=started)


# -- count ---------------------------------------------------------------------


def _parse_m_values(args):
    if args.m is not None:
        return [args.m]
    if args.m_list:
        return [int(x) for x in args.m_list.split(",")]
    if args.m_range:
        try:
            lo, hi, step = (int(x) for x in args.m_range.split(":"))
        except ValueError as exc:
            raise UsageError("m-range must be LO:HI:STEP") from exc
        return list(range(lo, hi + 1, step))
    raise UsageError("pass --m, --m-list, or --m-range")


def cmd_count(args):
    started = time.monotonic()
    delta = _parse_fraction(args.delta)
    ms = _parse_m_values(args)
    if args.oracle:
        for m in ms:
            if args.k ** m > counting.ORACLE_LIMIT:
                raise UsageError(
                    f"--oracle refused: k^m = {args.k ** m} exceeds "
                    f"{counting.ORACLE_LIMIT}")
    profile = counting.growth_rate_profile(delta, args.k, ms)
    lines = ["m,count,log_rate,analytic_limit,inf_so_far"]
    verdicts = []
    for row, inf in zip(profile.rows, profile.running_inf):
        lines.append(f"{row.m},{row.count},{row.log_rate:.12f},"
                     f"{row.analytic_limit:.12f},{inf:.12f}")
        if args.oracle:
            oracle = counting.brute_force_count(row.m, delta, args.k)
            verdicts.append({"name": f"oracle-m{row.m}",
                             "ok": oracle == row.count})
    csv_text = "\n".join(lines) + "\n"
    outputs = []
    if args.csv:
        _atomic_write(args.csv, csv_text)
        outputs.append(args.csv)
    else:
        print(csv_text, end="")
    if not verdicts:
        verdicts = [{"name": "count", "ok": True}]
    return _report("count", {"delta": str(delta), "k": args.k, "m": ms},
                   outputs, verdicts, started=started)


# -- verify-f ------------------------------------------------------------------


def cmd_verify_f(args):
    started = time.monotonic()
    bound = args.n
    model = recurrence.build_F(bound)
    verdicts = []

    def cert_verdict(name, ok, scale, witness):
        # recurrence verdicts reuse the set-certificate schema
        return {"name": name, "ok": ok, "certificate": {
            "predicate": name, "scale": scale,
            "verdict": "holds-at-scale" if ok else "fails-at-scale",
            "witness": witness}}

    sf = recurrence.verify_sum_free(model.elements, bound)
    verdicts.append(cert_verdict(
        "sum-free", sf.ok, {"N": bound},
        {"pairs_checked": sf.pairs_checked,
         "counterexample": list(sf.counterexample) if sf.counterexample else None}))
    lo, hi = args.shifts
    for n in range(lo, hi + 1):
        rep = recurrence.verify_shift_ip(model, n, args.depth)
        verdicts.append(cert_verdict(
            f"shift-ip-{n}", rep.ok,
            {"N": bound, "n": n, "depth": args.depth},
            {"required": len(rep.required), "missing": list(rep.missing)}))
    if args.dual_oracle:
        from_digits = recurrence.digit_enumerate(bound)
        ok = from_digits == list(model.elements)
        verdicts.append(cert_verdict(
            "dual-oracle-agreement", ok, {"N": bound},
            {"members": len(model.elements)}))
    outputs = []
    if args.out_set:
        intsets.write_set_file(args.out_set, model.as_intset(), bound)
        outputs.append(args.out_set)
    if args.out:
        payload = {"schema": SCHEMA, "N": bound, "index_family":
                   "I_n = {2^(n-1)(2i-1)}", "verdicts": verdicts}
        _atomic_write(args.out, _dump(payload))
        outputs.append(args.out)
    return _report("verify-f",
                   {"N": bound, "depth": args.depth, "shifts": list(args.shifts)},
                   outputs, verdicts, started=started)


# -- word-stats ----------------------------------------------------------------


def cmd_word_stats(args):
    started = time.monotonic()
    w = words.read_word_file(args.word)
    n_max = args.n_max or min(64, len(w) // 2)
    profile = words.complexity_profile(w, n_max)
    est = words.entropy_estimate(profile)
    lines = ["n,p,h_est"]
    for n in sorted(profile.p):
        lines.append(f"{n},{profile.p[n]},{profile.h_est[n]:.12f}")
    csv_text = "\n".join(lines) + "\n"
    outputs = []
    if args.csv:
        _atomic_write(args.csv, csv_text)
        outputs.append(args.csv)
    else:
        print(csv_text, end="")
    verdicts = [{"name": "profile-invariants", "ok": not profile.violations(),
                 "h_at_max": est.at_n_max, "h_inf": est.infimum}]
    return _report("word-stats", {"word": args.word, "n_max": n_max},
                   outputs, verdicts, started=started)


# -- parser --------------------------------------------------------------------


def build_parser():
    ap = argparse.ArgumentParser(
        prog="interpsets",
        description="Interpolation-set constructions and certificates at desk scale")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="certificates and densities for a set")
    p.add_argument("--set", required=True, help="generator spec, e.g. 'kind=ap a=3 b=0'")
    p.add_argument("--n", type=int, required=True, help="window bound N")
    p.add_argument("--gaps", action="store_true")
    p.add_argument("--syndetic", type=int, metavar="G")
    p.add_argument("--thick", type=int, metavar="L")
    p.add_argument("--pw-syndetic", type=int, nargs=2, metavar=("G", "L"))
    p.add_argument("--gap-table", type=int, metavar="LEN")
    p.add_argument("--banach", type=int, nargs="?", const=0, metavar="NMAX",
                   help="density profile; bare flag picks min(64, N/2)")
    p.add_argument("--out", help="write a JSON report file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("construct", help="run an interpolation construction")
    p.add_argument("--kind", required=True,
                   choices=["zero", "sturmian", "mixing", "minimal", "ergodic"])
    p.add_argument("--problem", required=True, help="problem JSON file")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--levels", type=int, default=3)
    p.add_argument("--l-target", type=int, default=4)
    p.add_argument("--profile-max", type=int, default=None)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("count", help="exact low-weight word counts")
    p.add_argument("--delta", required=True, help="exact rational like 1/3")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--m-list")
    p.add_argument("--m-range", metavar="LO:HI:STEP")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check against the enumeration oracle")
    p.add_argument("--csv", help="write CSV here instead of stdout")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify-f", help="verify the sum-free recurrence set F")
    p.add_argument("--n", type=int, default=10 ** 6)
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--shifts", type=int, nargs=2, default=(1, 3),
                   metavar=("LO", "HI"))
    p.add_argument("--dual-oracle", action="store_true")
    p.add_argument("--out", help="JSON verdict file")
    p.add_argument("--out-set", help="write F as a set file")
    p.set_defaults(func=cmd_verify_f)

    p = sub.add_parser("word-stats", help="complexity profile of a word file")
    p.add_argument("--word", required=True)
    p.add_argument("--n-max", type=int)
    p.add_argument("--csv")
    p.set_defaults(func=cmd_word_stats)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    try:
        return args.func(args)
    except (UsageError, intsets.SpecGrammarError, construct.DomainError,
            FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (intsets.EmptyWindowError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
