"""Facility-location heuristics: instance models, local search, exact
baseline, experiment pipeline. Thin re-export of the compiled module."""

from uflp._core import (
    Algorithm,
    BoxStats,
    ExactResult,
    ExperimentConfig,
    FeasibilityError,
    Instance,
    ModelId,
    ParseError,
    Rng64,
    RunRecord,
    RunRow,
    SearchState,
    TracePoint,
    VerifiedSolution,
    brute_force_opt,
    brute_force_opt_naive,
    cell_seed_for,
    comparison_csv,
    derive_seed,
    evaluate_full,
    export_lp,
    generate,
    import_open_set,
    instance_seed_for,
    ls_run,
    multi_start,
    pairs_csv,
    parse_instance,
    parse_runs_csv,
    rls_run,
    run_experiment,
    runs_csv,
    summarize,
    summary_csv,
    write_instance,
)

__all__ = [
    "Algorithm",
    "BoxStats",
    "ExactResult",
    "ExperimentConfig",
    "FeasibilityError",
    "Instance",
    "ModelId",
    "ParseError",
    "Rng64",
    "RunRecord",
    "RunRow",
    "SearchState",
    "TracePoint",
    "VerifiedSolution",
    "brute_force_opt",
    "brute_force_opt_naive",
    "cell_seed_for",
    "comparison_csv",
    "derive_seed",
    "evaluate_full",
    "export_lp",
    "generate",
    "import_open_set",
    "instance_seed_for",
    "ls_run",
    "multi_start",
    "pairs_csv",
    "parse_instance",
    "parse_runs_csv",
    "rls_run",
    "run_experiment",
    "runs_csv",
    "summarize",
    "summary_csv",
    "write_instance",
]
