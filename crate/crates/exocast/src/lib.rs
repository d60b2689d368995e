//! Long-horizon forecasting benchmark built around linear baselines that
//! predict a target channel from exogenous inputs only.
//!
//! The crate is organized as a small pipeline:
//!
//! - [`dataio`] loads a multivariate CSV series, produces chronological
//!   train/validation/test splits, fits z-score statistics on the training
//!   split, and enumerates sliding (input, target) windows.
//! - [`models`] holds the forecasting strategies (`linear`, `nlinear`,
//!   `dlinear`, `persistence`) behind the [`models::Forecaster`] trait,
//!   selected by name from a [`models::ModelRegistry`].
//! - [`training`] is a deterministic mini-batch Adam loop with early
//!   stopping on validation MAE and best-checkpoint restore.
//! - [`metrics`] computes MAE/MSE (and Gaussian KL for probabilistic
//!   forecasts) in normalized space.
//! - [`verify`] provides independent oracles: a closed-form least-squares
//!   solver and central finite-difference gradients.
//! - [`bench`] orchestrates full runs and renders comparison reports;
//!   [`cli`] exposes the command-line interface.

pub mod bench;
pub mod cli;
pub mod dataio;
pub mod metrics;
pub mod models;
pub mod training;
pub mod verify;
