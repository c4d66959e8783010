//! TOML configuration files: per-family tables whose fields mirror the
//! parameter types, all optional so the command line can supply or override
//! any of them.

use qeslab_core::models::trig::{OffDiag, WaveType};
use serde::Deserialize;

#[derive(Debug, Default, Clone, Deserialize)]
pub struct ConfigFile {
    #[serde(default)]
    pub sextic: PartialSextic,
    #[serde(default)]
    pub trig: PartialTrig,
    #[serde(default)]
    pub hyper: PartialHyper,
    #[serde(default)]
    pub quartic: PartialQuartic,
}

impl ConfigFile {
    pub fn load(path: &std::path::Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        toml::from_str(&text).map_err(|e| format!("bad config {}: {e}", path.display()))
    }
}

#[derive(Debug, Default, Clone, Deserialize)]
pub struct PartialSextic {
    pub m: Option<u32>,
    pub p2: Option<f64>,
    pub kappa0: Option<f64>,
}

#[derive(Debug, Default, Clone, Deserialize)]
pub struct PartialTrig {
    pub n: Option<u32>,
    pub rho: Option<f64>,
    pub m: Option<f64>,
    pub m_tilde: Option<f64>,
    pub c_re: Option<f64>,
    pub c_im: Option<f64>,
    pub c_tilde_re: Option<f64>,
    pub c_tilde_im: Option<f64>,
    pub a: Option<f64>,
    pub a_tilde: Option<f64>,
    pub wtype: Option<WaveType>,
    pub offdiag: Option<OffDiag>,
    pub d_re: Option<f64>,
    pub d_im: Option<f64>,
    pub d_tilde_re: Option<f64>,
    pub d_tilde_im: Option<f64>,
}

#[derive(Debug, Default, Clone, Deserialize)]
pub struct PartialHyper {
    pub n: Option<u32>,
    pub rho: Option<f64>,
    pub big_n: Option<f64>,
    pub big_n_tilde: Option<f64>,
    pub c_re: Option<f64>,
    pub c_im: Option<f64>,
    pub d_re: Option<f64>,
    pub d_im: Option<f64>,
    pub c_tilde_re: Option<f64>,
    pub c_tilde_im: Option<f64>,
    pub d_tilde_re: Option<f64>,
    pub d_tilde_im: Option<f64>,
}

#[derive(Debug, Default, Clone, Deserialize)]
pub struct PartialQuartic {
    pub n: Option<u32>,
    pub a: Option<f64>,
    pub b: Option<f64>,
    pub d: Option<f64>,
    pub wtilde: Option<f64>,
    pub lambda_re: Option<f64>,
    pub lambda_im: Option<f64>,
}
