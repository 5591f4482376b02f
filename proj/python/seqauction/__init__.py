"""Bidding strategies for sequential first-price sealed-bid auctions."""

from ._core import (
    AStrategy,
    CapacityError,
    ConfigError,
    DomainError,
    Error,
    EvalReport,
    Instance,
    MCReport,
    MismatchError,
    ProratedStrategy,
    QStrategy,
    SequencingError,
    ValidationError,
    additive_state_count,
    brute_force_optimal,
    exact_eval,
    gen_substitutes,
    gen_three_bundles,
    max_placed_payment,
    monte_carlo,
    run_bench_csv,
    solve_additive,
    solve_prorated,
    solve_quasilinear,
    trivial_eval,
)

__all__ = [name for name in dir() if not name.startswith("_")]
