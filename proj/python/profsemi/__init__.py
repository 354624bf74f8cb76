"""Finite semirings, profinite spaces and semiring-valued measures."""

from ._core import (
    Clopen,
    ClosedSetFamily,
    ContinuousMap,
    DepthError,
    DescriptorError,
    DomainError,
    FinSuppFn,
    Measure,
    MismatchError,
    NaturalOrder,
    Point,
    ScottFn,
    Semimodule,
    Semiring,
    Space,
    atoms,
    bijection_report,
    builtin_semiring,
    check_monad_laws,
    combine,
    density,
    density_witness,
    dirac,
    empty_clopen,
    equal_to_depth,
    eval_measure,
    eval_pointwise,
    family_inside,
    family_meets,
    free_extension,
    full_clopen,
    functor_map,
    galois_holds,
    integral,
    integrate,
    make_space,
    mult,
    natural_order,
    point_in,
    pushforward,
    run_all_suites,
    saturated_three_chain_action_report,
    scale,
    self_action_report,
    self_module,
    semimodule_from_json,
    semiring_from_json,
    three_chain_module,
    separating_clopen,
    to_measure,
    unit,
    validate_semimodule,
    validate_semiring,
    validate_system,
    zero_measure,
)

__all__ = [name for name in dir() if not name.startswith("_")]
