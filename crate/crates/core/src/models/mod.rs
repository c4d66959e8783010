//! The built-in operator families.
//!
//! Each family ships its parameter type (with TOML/JSON serialization),
//! the gauged polynomial-coefficient operator constructor, a solver that
//! completes a partial parameter set to a certified instance, and the
//! original x-space potential used by the PT checks.
//!
//! Gauge transformations are not performed symbolically: the gauged
//! operators are entered directly in the transformed variable, and the
//! un-gauged potentials exist only as evaluators for [`pt`].

pub mod hyper;
pub mod pt;
pub mod quartic;
pub mod sextic;
pub mod trig;

pub use hyper::{hyper_operator, hyper_qes_params, HyperParams};
pub use pt::{default_grid, pt_check, pt_residual, PtFamily};
pub use quartic::{quartic_operator, QuarticParams};
pub use sextic::{sextic_operator, SexticParams};
pub use trig::{trig_operator, trig_qes_params, OffDiag, TrigParams, WaveType};
