//! Numerical laboratory for divisor-sum lower bounds and the entropy /
//! third-cumulant machinery behind them.
//!
//! The crate is organised in three layers:
//!
//! - [`dist`]: finite discrete distributions on `{0, ..., m}` and on real
//!   atoms — truncated-geometric fitting, two explicit constructions that
//!   meet the `H(X) >= log2(m+1) H(delta)` entropy bound, exact weighted-sum
//!   convolution, and the sign test for the third derivative of
//!   `t -> log E[exp(-tX)]` together with the `1/(2e^{3/2})` quantile bound.
//! - [`divisor`]: exact divisor enumeration against rational thresholds
//!   `d <= n^(a/b)`, the per-prime divisor sampler, Hölder-chain checks, and
//!   explicit-constant certificates for `tau(n)^s <= C * sum tau(d)^beta`.
//! - [`mms`]: the combinatorial layer — counting nonnegative-sum k-subsets of
//!   zero-sum vectors, heuristic minimisation of that count, the subset-sum
//!   threshold functional, and exact continued-fraction lower bounds for its
//!   infimum constant.

pub mod dist;
pub mod divisor;
pub mod mms;
pub mod rational;

pub use dist::{
    binary_entropy, binary_entropy_lower_bound, binary_split_construction, cubic_form,
    entropy_bound_margin, fit_truncated_geometric, maxent_inductive, prob_at_most_mean,
    weighted_sum, CubicForm, DistError, FiniteDist, TiltedCumulantReport, ValueDist,
};
pub use divisor::{
    build_sampler, certify_constant, divisor_tau_sum, factorize, holder_chain, main_ratio,
    per_prime_check, scan_worst_ratio, ConstantCertificate, DivisorError, DivisorSampler,
    Factorization, HolderChain, PerPrimeCheck, SamplerChecks, ScanFamily, ScanReport, TauSum,
};
pub use mms::{
    cdelta_consistency, cdelta_lower_cfrac, cdelta_upper_equal, count_nonneg_ksubsets,
    search_min_nonneg_ksubsets, threshold_functional, CdeltaReport, CfracBound, MmsError,
    SubsetSearchResult, WeightVector,
};
pub use rational::RationalDelta;

/// `1/(2e^{3/2})`, the universal lower bound for `P[X <= E[X]]` over
/// nonnegative weighted sums of decreasing-pmf variables.
pub fn quantile_floor() -> f64 {
    0.5 * (-1.5f64).exp()
}
