//! Atomic species data: mass, Rydberg lifetime coefficient, qubit splitting,
//! excitation schemes and reference polarizabilities.
//!
//! Built-in Cs and Rb entries ship with the library. Additional species are
//! read from TOML:
//!
//! ```toml
//! [[species]]
//! name = "Cs"
//! mass_kg = 2.2069e-25
//! tau0_ns = 3.3
//! qubit_freq_ghz = 9.1926
//!
//! [[species.schemes]]
//! label = "two-photon-5d"
//! wavelengths_nm = [852.3, 515.0]
//! signs = [1, -1]
//!
//! [[species.polarizabilities]]
//! state = "100p3/2"
//! alpha0 = 205.0   # GHz/(V/cm)^2
//! alpha2 = -17.8
//! ```

use std::f64::consts::TAU;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::units::{Frequency, CONSTANTS};

/// A set of laser fields that together drive a ground-Rydberg transition.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExcitationScheme {
    pub label: String,
    /// `(wavelength in m, propagation sign ±1)` per photon
    pub photons: Vec<(f64, i8)>,
}

impl ExcitationScheme {
    pub fn new(label: impl Into<String>, photons: Vec<(f64, i8)>) -> Result<Self> {
        let label = label.into();
        if photons.is_empty() {
            return Err(Error::Config(format!("scheme `{label}` has no photons")));
        }
        for &(lambda, sign) in &photons {
            if !(lambda.is_finite() && lambda > 0.0) {
                return Err(Error::Config(format!(
                    "scheme `{label}`: wavelength {lambda} m"
                )));
            }
            if sign != 1 && sign != -1 {
                return Err(Error::Config(format!(
                    "scheme `{label}`: sign {sign} is not ±1"
                )));
            }
        }
        Ok(ExcitationScheme { label, photons })
    }

    pub fn one_photon(label: impl Into<String>, wavelength: f64) -> Result<Self> {
        Self::new(label, vec![(wavelength, 1)])
    }

    /// Magnitude of the summed wavevector, `|Σ sᵢ 2π/λᵢ|` (1/m).
    pub fn effective_k(&self) -> f64 {
        self.photons
            .iter()
            .map(|&(lambda, sign)| f64::from(sign) * TAU / lambda)
            .sum::<f64>()
            .abs()
    }
}

/// Static scalar and tensor polarizability of a named Rydberg level,
/// in GHz/(V/cm)^2.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Polarizability {
    pub state: String,
    pub alpha0: f64,
    pub alpha2: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Species {
    pub name: String,
    /// kg
    pub mass: f64,
    /// low-ℓ radiative lifetime coefficient, τ = τ₀ n³ (s)
    pub tau0: f64,
    pub qubit_freq: Frequency,
    pub schemes: Vec<ExcitationScheme>,
    pub polarizabilities: Vec<Polarizability>,
}

/// Wavelength of the second photon that reaches the same Rydberg level as
/// a direct one-photon excitation at `direct` via an intermediate at `first`.
fn ladder_partner(direct: f64, first: f64) -> f64 {
    1.0 / (1.0 / direct - 1.0 / first)
}

impl Species {
    /// Caesium-133, clock states, `np` Rydberg levels.
    pub fn cesium() -> Self {
        let uv = 319.0e-9;
        let d1 = 894.59e-9;
        Species {
            name: "Cs".into(),
            mass: 132.905451961 * CONSTANTS.amu,
            tau0: 3.3e-9,
            qubit_freq: Frequency::from_ghz(9.1926),
            schemes: vec![
                ExcitationScheme {
                    label: "one-photon".into(),
                    photons: vec![(uv, 1)],
                },
                ExcitationScheme {
                    label: "two-photon-6p1/2".into(),
                    photons: vec![(d1, 1), (ladder_partner(uv, d1), -1)],
                },
            ],
            polarizabilities: vec![Polarizability {
                state: "100p3/2".into(),
                alpha0: 205.0,
                alpha2: -17.8,
            }],
        }
    }

    /// Rubidium-87, clock states.
    pub fn rubidium() -> Self {
        let uv = 297.0e-9;
        let d2 = 780.24e-9;
        Species {
            name: "Rb".into(),
            mass: 86.909180520 * CONSTANTS.amu,
            tau0: 2.76e-9,
            qubit_freq: Frequency::from_ghz(6.8347),
            schemes: vec![
                ExcitationScheme {
                    label: "one-photon".into(),
                    photons: vec![(uv, 1)],
                },
                ExcitationScheme {
                    label: "two-photon-5p3/2".into(),
                    photons: vec![(d2, 1), (ladder_partner(uv, d2), -1)],
                },
            ],
            polarizabilities: Vec::new(),
        }
    }

    pub fn builtin() -> Vec<Species> {
        vec![Self::cesium(), Self::rubidium()]
    }

    /// Looks a species up by case-insensitive name among the built-ins.
    pub fn by_name(name: &str) -> Option<Species> {
        Self::builtin()
            .into_iter()
            .find(|s| s.name.eq_ignore_ascii_case(name))
    }

    pub fn scheme(&self, label: &str) -> Option<&ExcitationScheme> {
        self.schemes.iter().find(|s| s.label == label)
    }

    pub fn polarizability(&self, state: &str) -> Option<&Polarizability> {
        self.polarizabilities.iter().find(|p| p.state == state)
    }

    pub fn validate(self) -> Result<Self> {
        if !(self.mass.is_finite() && self.mass > 0.0) {
            return Err(Error::Config(format!("{}: mass must be > 0", self.name)));
        }
        if !(self.tau0.is_finite() && self.tau0 > 0.0) {
            return Err(Error::Config(format!("{}: tau0 must be > 0", self.name)));
        }
        Ok(self)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SchemeConfig {
    label: String,
    wavelengths_nm: Vec<f64>,
    #[serde(default)]
    signs: Option<Vec<i8>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SpeciesConfig {
    name: String,
    mass_kg: f64,
    tau0_ns: f64,
    qubit_freq_ghz: f64,
    #[serde(default)]
    schemes: Vec<SchemeConfig>,
    #[serde(default)]
    polarizabilities: Vec<Polarizability>,
}

#[derive(Deserialize)]
struct SpeciesFile {
    #[serde(default)]
    species: Vec<SpeciesConfig>,
}

impl TryFrom<SpeciesConfig> for Species {
    type Error = Error;

    fn try_from(cfg: SpeciesConfig) -> Result<Species> {
        let schemes = cfg
            .schemes
            .into_iter()
            .map(|s| {
                let signs = s.signs.unwrap_or_else(|| vec![1; s.wavelengths_nm.len()]);
                if signs.len() != s.wavelengths_nm.len() {
                    return Err(Error::Config(format!(
                        "scheme `{}`: {} wavelengths but {} signs",
                        s.label,
                        s.wavelengths_nm.len(),
                        signs.len()
                    )));
                }
                let photons = s
                    .wavelengths_nm
                    .iter()
                    .zip(signs)
                    .map(|(&nm, sign)| (nm * 1e-9, sign))
                    .collect();
                ExcitationScheme::new(s.label, photons)
            })
            .collect::<Result<Vec<_>>>()?;
        if !cfg.qubit_freq_ghz.is_finite() {
            return Err(Error::Config(format!(
                "{}: qubit_freq_ghz not finite",
                cfg.name
            )));
        }
        Species {
            name: cfg.name,
            mass: cfg.mass_kg,
            tau0: cfg.tau0_ns * 1e-9,
            qubit_freq: Frequency::from_ghz(cfg.qubit_freq_ghz),
            schemes,
            polarizabilities: cfg.polarizabilities,
        }
        .validate()
    }
}

/// Parses every `[[species]]` table of a TOML document.
pub fn parse_species(text: &str) -> Result<Vec<Species>> {
    let file: SpeciesFile = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
    file.species.into_iter().map(Species::try_from).collect()
}

pub fn load_species(path: impl AsRef<Path>) -> Result<Vec<Species>> {
    parse_species(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_values() {
        let cs = Species::cesium();
        assert_eq!(cs.tau0, 3.3e-9);
        assert!((cs.qubit_freq.ghz() - 9.1926).abs() < 1e-12);
        assert!((Species::rubidium().qubit_freq.ghz() - 6.8347).abs() < 1e-12);
        let p = cs.polarizability("100p3/2").unwrap();
        assert_eq!((p.alpha0, p.alpha2), (205.0, -17.8));
        assert!(Species::by_name("cs").is_some());
        assert!(Species::by_name("Yb").is_none());
    }

    #[test]
    fn one_photon_k() {
        let s = ExcitationScheme::one_photon("uv", 319e-9).unwrap();
        assert!((s.effective_k() - TAU / 319e-9).abs() < 1e-6);
    }

    #[test]
    fn counterpropagating_ladder_reduces_k() {
        let cs = Species::cesium();
        let one = cs.scheme("one-photon").unwrap().effective_k();
        let two = cs.scheme("two-photon-6p1/2").unwrap().effective_k();
        assert!(two < 0.5 * one);
        // |k1 - k2| with the second leg chosen to reach the same level
        let k1 = TAU / 894.59e-9;
        let k2 = TAU / ladder_partner(319e-9, 894.59e-9);
        assert!((two - (k2 - k1)).abs() < 1e-6 * two);
    }

    #[test]
    fn parse_config() {
        let text = r#"
            [[species]]
            name = "Cs"
            mass_kg = 2.2069e-25
            tau0_ns = 3.3
            qubit_freq_ghz = 9.1926

            [[species.schemes]]
            label = "5d"
            wavelengths_nm = [852.0, 515.0]
            signs = [1, -1]

            [[species.polarizabilities]]
            state = "100p3/2"
            alpha0 = 205.0
            alpha2 = -17.8
        "#;
        let species = parse_species(text).unwrap();
        assert_eq!(species.len(), 1);
        let s = &species[0];
        assert_eq!(s.tau0, 3.3e-9);
        let k = s.scheme("5d").unwrap().effective_k();
        assert!((k - (TAU / 515e-9 - TAU / 852e-9)).abs() < 1e-6 * k);
    }

    #[test]
    fn config_errors() {
        let bad_mass = "[[species]]\nname='X'\nmass_kg=0\ntau0_ns=1\nqubit_freq_ghz=1\n";
        assert!(parse_species(bad_mass).is_err());
        let bad_signs = "[[species]]\nname='X'\nmass_kg=1\ntau0_ns=1\nqubit_freq_ghz=1\n\
                         [[species.schemes]]\nlabel='a'\nwavelengths_nm=[1.0]\nsigns=[1,1]\n";
        assert!(parse_species(bad_signs).is_err());
        let bad_sign = "[[species]]\nname='X'\nmass_kg=1\ntau0_ns=1\nqubit_freq_ghz=1\n\
                        [[species.schemes]]\nlabel='a'\nwavelengths_nm=[1.0]\nsigns=[2]\n";
        assert!(parse_species(bad_sign).is_err());
    }
}
