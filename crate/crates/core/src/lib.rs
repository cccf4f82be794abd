//! Exact character degrees of symmetric groups and the knapsack-type identities
//! between them.
//!
//! The crate is organised bottom-up:
//!
//! - [`partition`]: partitions, Young-diagram geometry, and the partition families the
//!   identities range over (`X1`/`X2` sets, hook families, rim-hook additions).
//! - [`degree`]: `f^λ` by the hook length formula, by closed forms, and by brute-force
//!   tableau counting, plus the analytic extensions `h` and `h1`.
//! - [`paths`]: Dyck, Motzkin and Riordan path counts.
//! - [`symbolic`]: polynomial and rational-function certificates for the hook-formula
//!   identities.
//! - [`identity`]: exact numeric verification with structured, serializable reports.
//! - [`search`]: exploratory equal-sum searches and the even-length scan.
//! - [`cli`]: the command surface used by the `knapsack` binary.

pub mod cli;
pub mod degree;
pub mod error;
pub mod identity;
pub mod numbers;
pub mod partition;
pub mod paths;
pub mod search;
pub mod symbolic;

pub use degree::{degree, Degree};
pub use error::{Error, Result};
pub use partition::Partition;
