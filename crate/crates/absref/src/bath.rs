//! Reservoir primitives: Bose occupations and Lorentzian-filtered spectral
//! densities shared by every solver. Energies are in units of k_B T of the
//! reference bath, hbar = k_B = 1.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Bose-Einstein occupation 1/(e^{w/T} - 1). A zero temperature is the
/// closed-channel limit: the bath can absorb but never emit, n = 0.
pub fn bose_occupation(omega: f64, temperature: f64) -> f64 {
    debug_assert!(omega > 0.0, "occupation needs a positive frequency");
    if temperature <= 0.0 {
        return 0.0;
    }
    1.0 / (omega / temperature).exp_m1()
}

/// One reservoir: its temperature and the Lorentzian filter it couples through.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Bath {
    pub temperature: f64,
    /// dimensionless coupling strength; the filter peak is 1/(gamma * omega0)
    pub gamma: f64,
    /// filter resonance position
    pub omega0: f64,
    /// hard support cutoff: the spectral density vanishes outside (0, cutoff)
    pub cutoff: f64,
}

impl Bath {
    pub fn new(temperature: f64, gamma: f64, omega0: f64, cutoff: f64) -> Result<Self> {
        if !temperature.is_finite() || temperature < 0.0 {
            return Err(Error::InvalidBath(format!(
                "temperature must be finite and >= 0, got {temperature}"
            )));
        }
        if !(gamma > 0.0) || !gamma.is_finite() {
            return Err(Error::InvalidBath(format!("gamma must be > 0, got {gamma}")));
        }
        if !(cutoff > 0.0) || !cutoff.is_finite() {
            return Err(Error::InvalidBath(format!("cutoff must be > 0, got {cutoff}")));
        }
        if !omega0.is_finite() || omega0 <= 0.0 {
            return Err(Error::InvalidBath(format!(
                "filter resonance must be > 0, got {omega0}"
            )));
        }
        Ok(Bath { temperature, gamma, omega0, cutoff })
    }

    /// Filtered spectral density K(w) = G(w) / ((w - omega0)^2 + G(w)^2) with
    /// G(w) = gamma * w, supported on 0 < w < cutoff.
    pub fn spectral_density(&self, omega: f64) -> f64 {
        if omega <= 0.0 || omega >= self.cutoff {
            return 0.0;
        }
        let g = self.gamma * omega;
        let d = omega - self.omega0;
        g / (d * d + g * g)
    }

    pub fn occupation(&self, omega: f64) -> f64 {
        bose_occupation(omega, self.temperature)
    }

    /// Absorption rate K(w) n(w): the bath hands the system a quantum.
    pub fn rate_in(&self, omega: f64) -> f64 {
        self.spectral_density(omega) * self.occupation(omega)
    }

    /// Emission rate K(w) (1 + n(w)): the system drops a quantum into the bath.
    pub fn rate_out(&self, omega: f64) -> f64 {
        self.spectral_density(omega) * (1.0 + self.occupation(omega))
    }

    /// Rate of the transition that releases `drop` into this bath. A negative
    /// drop means the bath supplies the energy instead. Handles transitions of
    /// either sign so that negative level splittings need no special casing.
    pub fn directed_rate(&self, drop: f64) -> f64 {
        if drop > 0.0 {
            self.rate_out(drop)
        } else if drop < 0.0 {
            self.rate_in(-drop)
        } else {
            0.0
        }
    }
}

/// The refrigerator's three reservoirs. L and R drive the work transitions,
/// C is the bath being cooled.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Baths {
    pub left: Bath,
    pub right: Bath,
    pub cold: Bath,
}

impl Baths {
    pub fn new(left: Bath, right: Bath, cold: Bath) -> Self {
        Baths { left, right, cold }
    }
}
