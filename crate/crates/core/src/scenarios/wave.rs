//! Classical wave through the interferometer.
//!
//! Each beamsplitter reflection and each mirror adds a quarter-period phase.
//! Signals are written as `S sin ωt + C cos ωt`, so the time average of the
//! squared wave is `(S² + C²)/2`. This is the only floating-point code in the
//! crate; use [`WaveDetection::context`] to bring its output back to rationals.

use std::f64::consts::FRAC_PI_2;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::measure::Context;
use crate::rational::{int, rationalize, to_f64, Rational};

#[derive(Clone, Debug, PartialEq)]
pub struct WaveConfig {
    pub amplitude: Rational,
    /// Phase picked up between the first beamsplitter and a mirror.
    pub phi1: f64,
    /// Phase picked up between a mirror and the second beamsplitter.
    pub phi2: f64,
    /// Extra phase on arm B.
    pub detuning: f64,
}

impl WaveConfig {
    pub fn new(amplitude: Rational, detuning: f64) -> Self {
        Self {
            amplitude,
            phi1: 0.0,
            phi2: 0.0,
            detuning,
        }
    }

    fn validate(&self) -> Result<()> {
        if !self.amplitude.is_positive() {
            return Err(Error::InvalidWaveConfig(format!(
                "amplitude {} is not positive",
                self.amplitude
            )));
        }
        for (name, v) in [
            ("phi1", self.phi1),
            ("phi2", self.phi2),
            ("detuning", self.detuning),
        ] {
            if !v.is_finite() {
                return Err(Error::InvalidWaveConfig(format!("{name} is not finite")));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WaveDetection {
    pub i_d1: f64,
    pub i_d2: f64,
    pub p_d1: f64,
    pub p_d2: f64,
}

impl WaveDetection {
    /// Single-photon context over `D1, D2`: exactly one detector fires, with
    /// `p_d1` rounded to the nearest rational of denominator at most `max_den`.
    pub fn context(&self, max_den: u64) -> Result<Context> {
        let p1 = rationalize(self.p_d1, max_den)?;
        let p2 = int(1) - &p1;
        Context::from_labels(&["D1", "D2"], &[("+-", p1), ("-+", p2)])
    }
}

#[derive(Default)]
struct Quadrature {
    s: f64,
    c: f64,
}

impl Quadrature {
    /// Adds `k sin(ωt + x)`.
    fn sin(mut self, k: f64, x: f64) -> Self {
        self.s += k * x.cos();
        self.c += k * x.sin();
        self
    }

    /// Adds `k cos(ωt + x)`.
    fn cos(mut self, k: f64, x: f64) -> Self {
        self.s -= k * x.sin();
        self.c += k * x.cos();
        self
    }

    fn intensity(&self) -> f64 {
        (self.s * self.s + self.c * self.c) / 2.0
    }
}

pub fn wave_detection(cfg: &WaveConfig) -> Result<WaveDetection> {
    cfg.validate()?;
    let half_a = to_f64(&cfg.amplitude) / 2.0;
    let phi = cfg.phi1 + cfg.phi2;
    let delta = cfg.detuning;
    let d1 = Quadrature::default()
        .sin(-half_a, phi + FRAC_PI_2)
        .cos(-half_a, phi + delta);
    let d2 = Quadrature::default()
        .sin(-half_a, phi)
        .cos(-half_a, phi + FRAC_PI_2 + delta);
    let (i_d1, i_d2) = (d1.intensity(), d2.intensity());
    let total = i_d1 + i_d2;
    if total <= 0.0 {
        return Err(Error::DegenerateGeometry);
    }
    Ok(WaveDetection {
        i_d1,
        i_d2,
        p_d1: i_d1 / total,
        p_d2: i_d2 / total,
    })
}
