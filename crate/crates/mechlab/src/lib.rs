//! A desk-scale laboratory for studying how tiny decoder-only transformers
//! implement algorithmic tasks, and for predicting the correctness of their
//! outputs from internal causal features.
//!
//! The pipeline has two stages. Stage one localizes the variables of a
//! high-level causal model inside a network's residual streams: orthonormal
//! subspaces are trained with distributed interchange interventions and
//! scored by interchange intervention accuracy. Stage two turns the localized
//! variables into correctness predictors (counterfactual simulation and value
//! probing) and compares them against confidence scores and causal-agnostic
//! correctness probes under in-distribution and out-of-distribution sampling.
//!
//! Everything is CPU-only, single-threaded, and bitwise deterministic given
//! a seed. Planted models (networks constructed to implement a high-level
//! model exactly) serve as ground-truth oracles for the localization and
//! prediction machinery.

pub mod causal;
pub mod cli;
pub mod eval;
pub mod model;
pub mod numerics;
pub mod predictors;
pub mod store;
pub mod tasks;
