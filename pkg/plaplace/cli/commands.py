import logging

import numpy as np

from plaplace.datatypes import AntiCoerciveError, ConfigError, DependenceVerdict, ExponentField
from plaplace.energy import strong_residual
from plaplace.estimates import (
    compute_constants,
    embedding_constant,
    norm_relation_coefficients,
    sharp_embedding_search,
)
from plaplace.estimates.bundle import PROVENANCE
from plaplace.estimates.embedding import SHARP_MAX_T
from plaplace.lab import regime_sweep, run_dependence
from plaplace.nonlinearity import check_H1, check_H2, check_H3, check_H4, classify_regime
from plaplace.solver import minimize, multistart
from plaplace.utils import get_unique_path, init_trace_file, logger_event, update_trace_file

from .config import load_experiment
from .writers import DEPEND_COLUMNS, SWEEP_COLUMNS, emit, to_csv, to_json

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NUMERICAL = 2

# Violations listed per hypothesis in reports
MAX_WITNESSES = 5


def _load(args):
    experiment = load_experiment(args.config)
    opts = experiment.solver
    for flag, param in (("tol", "tol"), ("max_iter", "max_iter"), ("starts", "starts"), ("seed", "seed"), ("workers", "workers")):
        value = getattr(args, flag, None)
        if value is not None:
            try:
                opts.set_param(param, value)
            except ValueError as e:
                raise ConfigError([f"--{flag.replace('_', '-')}: {e}"])
    if getattr(args, "seed", None) is not None:
        experiment.lab.set_param("seed", args.seed)
    return experiment


def _regime(inst):
    if inst.growth is None:
        return None
    bundle = compute_constants(inst.p, inst.h, inst.growth)
    return classify_regime(inst.p, inst.growth, inst.lam, bundle)


def _u_samples(experiment):
    return np.concatenate((experiment.sampling.u_samples(), experiment.instance.u.values))


def cmd_solve(args, stream):
    experiment = _load(args)
    inst, opts = experiment.instance, experiment.solver
    log_event = logger_event(logging.getLogger("plaplace.solver"))

    regime = _regime(inst)
    h3 = check_H3(inst.f, inst.T, _u_samples(experiment))
    document = {
        "instance": inst.to_dict(),
        "regime": None if regime is None else regime.to_dict(),
        "hypotheses": {"H3": h3.holds},
        "notes": [],
    }
    if not h3.holds:
        document["notes"].append("H3 fails: the trivial solution x = 0 is expected")

    uniqueness = None
    try:
        if opts.starts > 1:
            uniqueness = multistart(inst, opts, log_event)
            report = uniqueness.primary
            if report is None:
                raise uniqueness.failures[0][1]
        else:
            report = minimize(inst, None, opts, log_event)
    except AntiCoerciveError as e:
        logger.warning(str(e))
        document.update({"outcome": "anti-coercive", "error": str(e)})
        emit(to_json(document), args.out, "solve.json", stream)
        return EXIT_NUMERICAL

    residual = strong_residual(inst, report.minimizer)
    document.update(
        {
            "outcome": report.outcome.value,
            "converged": report.converged,
            "iterations": report.iterations,
            "grad_norm": report.grad_norm,
            "minimizer": report.minimizer.values,
            "energy": report.breakdown.to_dict(),
            "residual": float(np.max(np.abs(residual))),
            "uniqueness": None if uniqueness is None else uniqueness.to_dict(),
        }
    )

    if args.format == "csv":
        rows = [(k, x, r) for k, x, r in zip(inst.nodes.tolist(), report.minimizer.interior, residual)]
        emit(to_csv(("k", "x", "residual"), rows), args.out, "solve.csv", stream)
    else:
        emit(to_json(document), args.out, "solve.json", stream)

    if args.trace:
        path = get_unique_path(args.out or ".", "trace.h5")
        init_trace_file(path, attrs={"T": inst.T, "lambda": inst.lam, "objective": report.objective})
        update_trace_file(path, report.trace)
        logger.info(f"Wrote iteration trace to {path}")

    if not report.converged or (uniqueness is not None and uniqueness.anti_coercive):
        return EXIT_NUMERICAL
    return EXIT_OK


def _violations(items):
    return [item._asdict() for item in items[:MAX_WITNESSES]]


def cmd_check(args, stream):
    experiment = _load(args)
    inst, plan = experiment.instance, experiment.sampling
    requested = [h.strip().upper() for h in args.hypotheses.split(",") if h.strip()]
    unknown = set(requested) - {"H1", "H2", "H3", "H4"}
    if unknown:
        raise ConfigError([f"--hypotheses: unknown {', '.join(sorted(unknown))}"])

    results = {}
    if "H1" in requested:
        if inst.growth is None:
            results["H1"] = {"holds": None, "violations": 0, "witnesses": [], "note": "no growth data declared"}
        else:
            found = check_H1(inst.f, inst.growth, plan)
            results["H1"] = {"holds": not found, "violations": len(found), "witnesses": _violations(found)}
    for name, checker in (("H2", check_H2), ("H4", check_H4)):
        if name in requested:
            found = checker(inst.f, inst.T, plan)
            results[name] = {"holds": not found, "violations": len(found), "witnesses": _violations(found)}
    if "H3" in requested:
        h3 = check_H3(inst.f, inst.T, _u_samples(experiment))
        results["H3"] = {
            "holds": h3.holds,
            "witness": h3.witness,
            "violations": len(h3.failures),
            "witnesses": [{"k": k, "u": u} for k, u in h3.failures[:MAX_WITNESSES]],
        }

    regime = _regime(inst)
    document = {
        "hypotheses": results,
        "regime": None if regime is None else regime.to_dict(),
        "lambda_star": None if regime is None else regime.lambda_star,
        "dual_lambda_star": None if regime is None else regime.dual_lambda_star,
    }
    if regime is not None:
        logger.info(f"lambda* = {regime.lambda_star!r}, dual threshold = {regime.dual_lambda_star!r}")

    if args.format == "csv":
        rows = [(name, r["holds"], r["violations"]) for name, r in sorted(results.items())]
        emit(to_csv(("hypothesis", "holds", "violations"), rows), args.out, "check.csv", stream)
    else:
        emit(to_json(document), args.out, "check.json", stream)

    passed = all(r["holds"] is not False for r in results.values())
    return EXIT_OK if passed else EXIT_NUMERICAL


def cmd_constants(args, stream):
    T = args.T
    ms = args.m or [2.0]
    p = ExponentField(T, args.p)
    bundle = compute_constants(p, ms=ms)
    sharpen = not args.no_sharp and T <= SHARP_MAX_T
    if not args.no_sharp and not sharpen:
        logger.warning(f"Sharp constants are skipped for T > {SHARP_MAX_T}")

    rows = []
    for m in ms:
        provable = embedding_constant(m, T)
        sharp, converged = None, None
        if sharpen:
            search = sharp_embedding_search(m, T, seed=args.seed)
            sharp, converged = search.value, search.converged
        lower, upper = norm_relation_coefficients(m, T) if m >= 2 else (None, None)
        rows.append(
            {
                "m": float(m),
                "c_m": provable,
                "c_m_sharp": sharp,
                "sharp_converged": converged,
                "norm_lower": lower,
                "norm_upper": upper,
            }
        )

    document = {
        "T": T,
        "p_minus": p.minus,
        "C1": bundle.C1,
        "C2": bundle.C2,
        "constants": rows,
        "provenance": {
            "c_m": PROVENANCE["c_m"],
            "c_m_sharp": PROVENANCE["c_m_sharp"],
            "C1": bundle.provenance["C1"],
            "C2": bundle.provenance["C2"],
            "norm_relation": "((T+1)^((2-m)/(2m)), (T+1)^(1/m)) for m >= 2",
        },
    }

    if args.format == "csv":
        columns = ("m", "c_m", "c_m_sharp", "C1", "C2", "norm_lower", "norm_upper")
        table = [
            (r["m"], r["c_m"], r["c_m_sharp"], bundle.C1, bundle.C2, r["norm_lower"], r["norm_upper"])
            for r in rows
        ]
        emit(to_csv(columns, table), args.out, "constants.csv", stream)
    else:
        emit(to_json(document), args.out, "constants.json", stream)
    return EXIT_OK


def cmd_depend(args, stream):
    experiment = _load(args)
    if experiment.dependence is None:
        raise ConfigError(["dependence: the depend command needs a dependence block"])

    report = run_dependence(
        experiment.dependence,
        experiment.solver,
        experiment.lab,
        log_event=logger_event(logging.getLogger("plaplace.lab")),
    )
    logger.info(f"gamma = {report.gamma!r}, verdict = {report.verdict.value}")

    if args.format == "csv":
        rows = [tuple(r.to_dict()[c] for c in DEPEND_COLUMNS) for r in report.records]
        emit(to_csv(DEPEND_COLUMNS, rows), args.out, "depend.csv", stream)
    else:
        emit(to_json(report.to_dict()), args.out, "depend.json", stream)

    if report.verdict in (DependenceVerdict.CONVERGENT, DependenceVerdict.CONVERGENT_SUBSEQUENCE):
        return EXIT_OK
    return EXIT_NUMERICAL


def cmd_sweep(args, stream):
    experiment = _load(args)
    if experiment.sweep is None:
        raise ConfigError(["sweep: the sweep command needs a sweep block"])

    rows = regime_sweep(
        experiment.instance,
        experiment.sweep,
        experiment.solver,
        workers=experiment.solver.workers,
        log_event=logger_event(logging.getLogger("plaplace.lab")),
    )

    if args.format == "csv":
        table = [
            (r.lam, r.regime, r.converged, r.unique_consistent, r.final_energy, r.residual) for r in rows
        ]
        emit(to_csv(SWEEP_COLUMNS, table), args.out, "sweep.csv", stream)
    else:
        emit(to_json({"rows": [r.to_dict() for r in rows]}), args.out, "sweep.json", stream)

    if all(r.error is not None and not r.converged for r in rows):
        return EXIT_NUMERICAL
    return EXIT_OK


COMMANDS = {
    "solve": cmd_solve,
    "check": cmd_check,
    "constants": cmd_constants,
    "depend": cmd_depend,
    "sweep": cmd_sweep,
}
