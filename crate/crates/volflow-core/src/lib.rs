//! Volatility and information flow on minute-level market data.
//!
//! The crate covers the full pipeline from raw tick data to statistical
//! model comparison:
//!
//! - [`marketdata`]: tick ingestion, VWAP / mid-quote minute bars, log
//!   returns, signal aggregation, descriptive statistics.
//! - [`mdhsim`]: bivariate mixture-of-distributions simulator (returns and
//!   volume driven by a latent information-arrival process), used as a
//!   ground-truth oracle for the dependence estimators.
//! - [`infoflow`]: lagged cross-correlation with permutation significance,
//!   signal integration, transfer entropy / effective transfer entropy,
//!   and ADF stationarity testing.
//! - [`garchcore`]: GARCH / eGARCH / cGARCH / TGARCH filtering, maximum
//!   likelihood fitting with an optional exogenous variance term, and
//!   fixed-parameter one-step-ahead forecasting.
//! - [`evalstats`]: Mincer-Zarnowitz regression, Pearson correlation test,
//!   likelihood-ratio test, two-sample Kolmogorov-Smirnov test, and the
//!   bootstrap segment-comparison protocol.
//! - [`pipeline`]: config-driven orchestration used by the `volflow` CLI.
//!
//! Every stochastic operation takes an explicit 64-bit seed and is
//! deterministic given that seed, including under internal parallelism.

pub mod error;
pub mod evalstats;
pub mod garchcore;
pub mod infoflow;
pub mod marketdata;
pub mod mdhsim;
pub mod numeric;
pub mod pipeline;
pub mod report;
pub mod series;

pub use error::{Error, Result};
pub use series::TimeSeries;
