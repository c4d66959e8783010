//! Engine layer of the `qeslab` workbench: parameter-plane scans, critical
//! curves, partial-parameter configuration and output formatting. The binary
//! in `main.rs` is a thin argument-parsing shell over these functions.

pub mod config;
pub mod output;
pub mod scan;

pub use config::{ConfigFile, PartialHyper, PartialQuartic, PartialSextic, PartialTrig};
pub use output::{format_complex, parse_complex};
pub use scan::{critical_curve, run_scan, CriticalBranch, ScanGrid, ScanPoint};
