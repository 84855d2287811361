"""negsim: deterministic multilateral negotiation under stacked alternating
offers, with model-based and baseline strategies plus a tournament harness."""

from .domain import (
    BID_SPACE_CAP,
    Bid,
    CapacityError,
    DiscreteIssue,
    Domain,
    IntegerIssue,
    UtilityProfile,
    discount,
    encode,
    encoded_length,
    encoded_matrix,
    enumerate_bids,
    generate_domain,
    generate_profile,
    load_scenario,
    save_scenario,
    scenario_from_json,
    scenario_hash,
    scenario_to_json,
    social_welfare,
    utilities_over_space,
    utility,
    validate_bid,
)
from .protocol import (
    Accept,
    Agent,
    AgentContext,
    Agreement,
    Offer,
    ProtocolViolation,
    SessionOutcome,
    TraceStep,
    TurnView,
    read_trace,
    replay,
    run_session,
    write_trace,
)
from .opponent_model import (
    LogisticModel,
    TrainingConfig,
    TrainingMode,
    TrainingSample,
    extract_samples,
    log_loss,
    model_for_turn,
    model_from_record,
    model_record,
    predict,
    predict_all,
    sgd_train,
    update_model,
)
from .herbt import (
    HerbTAgent,
    HerbTConfig,
    ScoreBreakdown,
    Scorer,
    accept_or_counter,
    expected_sw_score,
    individual_score,
    score_space,
    select_bid,
    social_score,
    threshold,
)
from .baselines import (
    AlwaysAcceptAgent,
    FrequencyAgent,
    OpeningMode,
    RandomAgent,
    TimeDependentAgent,
    random_bid,
)
from .stats import (
    DegenerateSamplesError,
    TTestResult,
    dependent_t_test,
    mean_absolute_error,
    pearson,
    regularized_incomplete_beta,
    student_t_sf,
)
from .roster import ConfigError, agent_from_config, agent_id, bind_beta
from .seeds import derive_seed, spawn_rng
from .tournament import (
    AblationResult,
    AblationRow,
    GeneratorSpec,
    MetricsRow,
    ModelQualityRow,
    SessionRecord,
    SessionTask,
    SeatStats,
    TTestRow,
    TournamentConfig,
    ablation_random_init,
    analyze_trace,
    beta_score_ttests,
    config_from_json,
    model_quality_curves,
    plan_tournament,
    read_records,
    record_from_json,
    record_to_json,
    run_tournament,
    session_beta_score,
    summarize,
    write_csv,
    write_metric_csvs,
    write_records,
)

__version__ = "0.1.0"

__all__ = [
    "BID_SPACE_CAP",
    "Bid",
    "CapacityError",
    "DiscreteIssue",
    "Domain",
    "IntegerIssue",
    "UtilityProfile",
    "discount",
    "encode",
    "encoded_length",
    "encoded_matrix",
    "enumerate_bids",
    "generate_domain",
    "generate_profile",
    "load_scenario",
    "save_scenario",
    "scenario_from_json",
    "scenario_hash",
    "scenario_to_json",
    "social_welfare",
    "utilities_over_space",
    "utility",
    "validate_bid",
    "Accept",
    "Agent",
    "AgentContext",
    "Agreement",
    "Offer",
    "ProtocolViolation",
    "SessionOutcome",
    "TraceStep",
    "TurnView",
    "read_trace",
    "replay",
    "run_session",
    "write_trace",
    "LogisticModel",
    "TrainingConfig",
    "TrainingMode",
    "TrainingSample",
    "extract_samples",
    "log_loss",
    "model_for_turn",
    "model_from_record",
    "model_record",
    "predict",
    "predict_all",
    "sgd_train",
    "update_model",
    "HerbTAgent",
    "HerbTConfig",
    "ScoreBreakdown",
    "Scorer",
    "accept_or_counter",
    "expected_sw_score",
    "individual_score",
    "score_space",
    "select_bid",
    "social_score",
    "threshold",
    "AlwaysAcceptAgent",
    "FrequencyAgent",
    "OpeningMode",
    "RandomAgent",
    "TimeDependentAgent",
    "random_bid",
    "DegenerateSamplesError",
    "TTestResult",
    "dependent_t_test",
    "mean_absolute_error",
    "pearson",
    "regularized_incomplete_beta",
    "student_t_sf",
    "ConfigError",
    "agent_from_config",
    "agent_id",
    "bind_beta",
    "derive_seed",
    "spawn_rng",
    "AblationResult",
    "AblationRow",
    "GeneratorSpec",
    "MetricsRow",
    "ModelQualityRow",
    "SessionRecord",
    "SessionTask",
    "SeatStats",
    "TTestRow",
    "TournamentConfig",
    "ablation_random_init",
    "analyze_trace",
    "beta_score_ttests",
    "config_from_json",
    "model_quality_curves",
    "plan_tournament",
    "read_records",
    "record_from_json",
    "record_to_json",
    "run_tournament",
    "session_beta_score",
    "summarize",
    "write_csv",
    "write_metric_csvs",
    "write_records",
]
