//! Built-in experimental configurations.

mod correlations;
mod mach_zehnder;
mod wave;

use std::collections::BTreeMap;

pub use correlations::{bell_box, leggett_garg_chain, pair_context, pr_box, tsirelson_box};
pub use mach_zehnder::{
    detuned_convergence, detuned_which_path, mach_zehnder_case, mach_zehnder_cases, mz_atom,
    mz_counterfactual, mz_counterfactual_detuned, mz_family_member, mz_general_member, mz_space,
    DetunedConditional, DetunedConvergence, MZ_VARIABLES,
};
pub use wave::{wave_detection, WaveConfig, WaveDetection};

use crate::contextuality::ContextFamily;
use crate::error::{Error, Result};
use crate::rational::{int, parse_rational, ratio, Rational};
use crate::solver::ConstraintSystem;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scenario {
    Family(ContextFamily),
    System(ConstraintSystem),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScenarioBundle {
    pub label: String,
    pub scenario: Scenario,
}

impl ScenarioBundle {
    pub fn family(label: impl Into<String>, f: ContextFamily) -> Self {
        Self {
            label: label.into(),
            scenario: Scenario::Family(f),
        }
    }

    pub fn system(label: impl Into<String>, cs: ConstraintSystem) -> Self {
        Self {
            label: label.into(),
            scenario: Scenario::System(cs),
        }
    }

    pub fn as_family(&self) -> Option<&ContextFamily> {
        match &self.scenario {
            Scenario::Family(f) => Some(f),
            Scenario::System(_) => None,
        }
    }

    pub fn constraint_system(&self) -> ConstraintSystem {
        match &self.scenario {
            Scenario::Family(f) => f.constraint_system(),
            Scenario::System(cs) => cs.clone(),
        }
    }
}

/// Names accepted by [`builtin`]; `mz-case-N` stands for `mz-case-1` through `mz-case-8`.
pub const BUILTIN_NAMES: [&str; 6] = [
    "mz-case-N",
    "mz-counterfactual",
    "mz-detuned",
    "pr-box",
    "tsirelson",
    "lg-chain",
];

/// Default parameter key of a builtin, used when a bare value is given.
pub fn default_param_key(name: &str) -> Option<&'static str> {
    match name {
        "mz-detuned" => Some("eps"),
        "lg-chain" => Some("e"),
        _ => None,
    }
}

fn take_params(name: &str, params: &BTreeMap<String, String>, allowed: &[&str]) -> Result<()> {
    match params.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(Error::InvalidParameter(format!(
            "`{name}` takes no parameter `{k}`"
        ))),
        None => Ok(()),
    }
}

fn parse_triple(text: &str) -> Result<[Rational; 3]> {
    let parts = text
        .split(',')
        .map(|p| parse_rational(p.trim()))
        .collect::<Result<Vec<_>>>()?;
    <[Rational; 3]>::try_from(parts).map_err(|_| {
        Error::InvalidParameter(format!(
            "expected three comma-separated correlations, got `{text}`"
        ))
    })
}

/// Materializes a built-in scenario.
///
/// `mz-detuned` reads `eps` (default `1/100`); `lg-chain` reads `e` as three
/// comma-separated correlations `E(XY),E(YZ),E(XZ)` (default `1,1,-1`).
pub fn builtin(name: &str, params: &BTreeMap<String, String>) -> Result<ScenarioBundle> {
    if let Some(n) = name.strip_prefix("mz-case-") {
        take_params(name, params, &[])?;
        let n: u8 = n
            .parse()
            .map_err(|_| Error::UnknownBuiltin(name.to_string()))?;
        return Ok(ScenarioBundle::family(name, mach_zehnder_case(n)?));
    }
    match name {
        "mz-counterfactual" => {
            take_params(name, params, &[])?;
            Ok(ScenarioBundle::system(name, mz_counterfactual()))
        }
        "mz-detuned" => {
            take_params(name, params, &["eps"])?;
            let eps = match params.get("eps") {
                Some(v) => parse_rational(v)?,
                None => ratio(1, 100),
            };
            Ok(ScenarioBundle::system(
                format!("mz-detuned eps={eps}"),
                mz_counterfactual_detuned(&eps)?,
            ))
        }
        "pr-box" => {
            take_params(name, params, &[])?;
            Ok(ScenarioBundle::family(name, pr_box()))
        }
        "tsirelson" => {
            take_params(name, params, &[])?;
            Ok(ScenarioBundle::family(name, tsirelson_box()))
        }
        "lg-chain" => {
            take_params(name, params, &["e"])?;
            let [xy, yz, xz] = match params.get("e") {
                Some(v) => parse_triple(v)?,
                None => [int(1), int(1), int(-1)],
            };
            Ok(ScenarioBundle::family(
                format!("lg-chain e={xy},{yz},{xz}"),
                leggett_garg_chain(&xy, &yz, &xz)?,
            ))
        }
        _ => Err(Error::UnknownBuiltin(name.to_string())),
    }
}
