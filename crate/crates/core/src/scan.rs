//! Two-dimensional parameter scans with CSV output.
//!
//! A grid is written as plain CSV preceded by `#` comment lines naming the
//! quantity and the axes:
//!
//! ```text
//! # quantity,tau_vac,s
//! # x,n_code,,linear
//! # y,epsilon,,log
//! n_code,4.0000000000000000e0,...
//! 1.0000000000000000e-5,...
//! ```
//!
//! The first data row holds the x values after the x axis name; every
//! following row starts with its y value. Numbers carry 17 significant
//! digits, so a grid survives a write/parse round trip bit for bit.

use std::fmt;
use std::io::{Read, Write};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::array::required_vacuum_lifetime;
use crate::dressing::{normalized_potential, PotentialKind, PotentialParams};
use crate::error::{Error, Result};
use crate::gate::DopplerInputs;
use crate::numeric::{linspace, logspace};
use crate::rydberg::rydberg_lifetime;
use crate::species::Species;
use crate::units::Frequency;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    Linear,
    Log,
}

impl fmt::Display for Spacing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Spacing::Linear => "linear",
            Spacing::Log => "log",
        })
    }
}

impl FromStr for Spacing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "linear" | "lin" => Ok(Spacing::Linear),
            "log" => Ok(Spacing::Log),
            _ => Err(Error::Config(format!(
                "unknown spacing `{s}` (expected linear or log)"
            ))),
        }
    }
}

/// Range of one grid axis, before the quantity names it.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AxisSpec {
    pub lo: f64,
    pub hi: f64,
    pub count: usize,
    pub spacing: Spacing,
}

impl AxisSpec {
    pub fn linear(lo: f64, hi: f64, count: usize) -> Self {
        AxisSpec {
            lo,
            hi,
            count,
            spacing: Spacing::Linear,
        }
    }

    pub fn log(lo: f64, hi: f64, count: usize) -> Self {
        AxisSpec {
            lo,
            hi,
            count,
            spacing: Spacing::Log,
        }
    }

    /// A one-point axis.
    pub fn single(value: f64) -> Self {
        AxisSpec::linear(value, value, 1)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Axis {
    pub name: String,
    pub unit: String,
    pub values: Vec<f64>,
    pub spacing: Spacing,
}

impl Axis {
    pub fn new(
        name: impl Into<String>,
        unit: impl Into<String>,
        values: Vec<f64>,
        spacing: Spacing,
    ) -> Result<Self> {
        let axis = Axis {
            name: name.into(),
            unit: unit.into(),
            values,
            spacing,
        };
        let invalid = |reason: String| Error::InvalidAxis {
            axis: axis.name.clone(),
            reason,
        };
        if axis.values.is_empty() {
            return Err(invalid("no values".into()));
        }
        if let Some(v) = axis.values.iter().find(|v| !v.is_finite()) {
            return Err(invalid(format!("non-finite value {v}")));
        }
        if spacing == Spacing::Log && axis.values.iter().any(|&v| v <= 0.0) {
            return Err(invalid("log spacing needs positive values".into()));
        }
        let increasing = axis.values.windows(2).all(|w| w[1] > w[0]);
        let decreasing = axis.values.windows(2).all(|w| w[1] < w[0]);
        if !(increasing || decreasing) {
            return Err(invalid("values are not strictly monotone".into()));
        }
        Ok(axis)
    }

    pub fn from_spec(
        name: impl Into<String>,
        unit: impl Into<String>,
        spec: &AxisSpec,
    ) -> Result<Self> {
        let name = name.into();
        let invalid = |reason: String| Error::InvalidAxis {
            axis: name.clone(),
            reason,
        };
        if spec.count == 0 {
            return Err(invalid("count must be at least 1".into()));
        }
        if spec.count == 1 && spec.lo != spec.hi {
            return Err(invalid(format!(
                "a single point needs lo == hi, got [{}, {}]",
                spec.lo, spec.hi
            )));
        }
        if spec.count > 1 && spec.lo == spec.hi {
            return Err(invalid(format!(
                "empty range [{}, {}] for {} points",
                spec.lo, spec.hi, spec.count
            )));
        }
        let values = match (spec.count, spec.spacing) {
            (1, _) => vec![spec.lo],
            (n, Spacing::Linear) => linspace(spec.lo, spec.hi, n),
            (n, Spacing::Log) => {
                if !(spec.lo > 0.0 && spec.hi > 0.0) {
                    return Err(invalid("log spacing needs positive bounds".into()));
                }
                logspace(spec.lo, spec.hi, n)
            }
        };
        Axis::new(name, unit, values, spec.spacing)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Quantities a grid can be filled with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Quantity {
    /// required vacuum lifetime over (N_code, ε)
    TauVac,
    /// log₁₀(1 - F_D) over (T in μK, t in ns)
    Doppler,
    /// normalized dressing potential over (R in μm, Ω/2π in MHz)
    DressingPotential,
    /// Rydberg lifetime over (n, T in K)
    Lifetime,
}

impl Quantity {
    pub const ALL: [Quantity; 4] = [
        Quantity::TauVac,
        Quantity::Doppler,
        Quantity::DressingPotential,
        Quantity::Lifetime,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Quantity::TauVac => "tau-vac",
            Quantity::Doppler => "doppler",
            Quantity::DressingPotential => "dressing-potential",
            Quantity::Lifetime => "lifetime",
        }
    }

    /// (x name, x unit), (y name, y unit), (cell name, cell unit)
    fn labels(self) -> [(&'static str, &'static str); 3] {
        match self {
            Quantity::TauVac => [("n_code", ""), ("epsilon", ""), ("tau_vac", "s")],
            Quantity::Doppler => [
                ("temperature", "uK"),
                ("time", "ns"),
                ("log10_infidelity", ""),
            ],
            Quantity::DressingPotential => [("r", "um"), ("rabi", "MHz"), ("potential", "")],
            Quantity::Lifetime => [("n", ""), ("temperature", "K"), ("lifetime", "s")],
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Quantity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Quantity::ALL
            .into_iter()
            .find(|q| q.name() == s)
            .ok_or_else(|| Error::UnknownQuantity(s.to_string()))
    }
}

/// Parameters held fixed across a scan.
#[derive(Clone, Debug, PartialEq)]
pub struct FixedParams {
    pub species: Species,
    /// excitation scheme used for the Doppler wavevector
    pub scheme: String,
    /// QEC cycle time per code atom (s)
    pub t_qec_per_atom: f64,
    pub detuning: Frequency,
    pub defect: Frequency,
    /// m
    pub crossover: f64,
    pub potential: PotentialKind,
}

impl Default for FixedParams {
    fn default() -> Self {
        FixedParams {
            species: Species::cesium(),
            scheme: "one-photon".into(),
            t_qec_per_atom: 1e-4,
            detuning: Frequency::from_mhz(-100.0),
            defect: Frequency::from_mhz(-200.0),
            crossover: 8.1e-6,
            potential: PotentialKind::Full,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanGrid {
    pub quantity: String,
    pub unit: String,
    pub x_axis: Axis,
    pub y_axis: Axis,
    /// row-major: `cells[iy * x.len() + ix]`
    pub cells: Vec<f64>,
}

fn integer_axis(axis: &Axis, min: f64) -> Result<()> {
    match axis
        .values
        .iter()
        .find(|&&v| v.fract() != 0.0 || v < min || v > u32::MAX as f64)
    {
        Some(v) => Err(Error::InvalidAxis {
            axis: axis.name.clone(),
            reason: format!("{v} is not an integer >= {min}"),
        }),
        None => Ok(()),
    }
}

/// Fills a grid with `quantity`. Cells are evaluated in parallel and stored
/// in row-major order.
pub fn scan(
    quantity: Quantity,
    x: &AxisSpec,
    y: &AxisSpec,
    fixed: &FixedParams,
) -> Result<ScanGrid> {
    let [(xn, xu), (yn, yu), (_, cell_unit)] = quantity.labels();
    let x_axis = Axis::from_spec(xn, xu, x)?;
    let y_axis = Axis::from_spec(yn, yu, y)?;

    let eval: Box<dyn Fn(f64, f64) -> Result<f64> + Sync> = match quantity {
        Quantity::TauVac => {
            integer_axis(&x_axis, 1.0)?;
            let per_atom = fixed.t_qec_per_atom;
            Box::new(move |n, eps| required_vacuum_lifetime(n as u32, per_atom * n, eps))
        }
        Quantity::Doppler => {
            let scheme = fixed.species.scheme(&fixed.scheme).ok_or_else(|| {
                Error::Config(format!(
                    "species {} has no scheme `{}`",
                    fixed.species.name, fixed.scheme
                ))
            })?;
            let (k, mass) = (scheme.effective_k(), fixed.species.mass);
            Box::new(move |t_uk, time_ns| {
                Ok(DopplerInputs::new(k, t_uk * 1e-6, time_ns * 1e-9, mass)?
                    .infidelity()
                    .log10())
            })
        }
        Quantity::DressingPotential => {
            let (detuning, defect, crossover, kind) = (
                fixed.detuning,
                fixed.defect,
                fixed.crossover,
                fixed.potential,
            );
            Box::new(move |r_um, rabi_mhz| {
                let params = PotentialParams {
                    rabi: Frequency::try_from_hz(rabi_mhz * 1e6)?,
                    detuning,
                    defect,
                    crossover,
                };
                normalized_potential(r_um * 1e-6, &params, kind)
            })
        }
        Quantity::Lifetime => {
            integer_axis(&x_axis, 0.0)?;
            let tau0 = fixed.species.tau0;
            Box::new(move |n, temperature| rydberg_lifetime(n as u32, temperature, tau0))
        }
    };

    let nx = x_axis.len();
    let cells = (0..nx * y_axis.len())
        .into_par_iter()
        .map(|i| eval(x_axis.values[i % nx], y_axis.values[i / nx]))
        .collect::<Result<Vec<f64>>>()?;
    Ok(ScanGrid {
        quantity: quantity.labels()[2].0.to_string(),
        unit: cell_unit.to_string(),
        x_axis,
        y_axis,
        cells,
    })
}

fn num(v: f64) -> String {
    format!("{v:.16e}")
}

impl ScanGrid {
    pub fn cell(&self, ix: usize, iy: usize) -> f64 {
        self.cells[iy * self.x_axis.len() + ix]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.cells.chunks(self.x_axis.len())
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        for (tag, axis) in [("x", &self.x_axis), ("y", &self.y_axis)] {
            if tag == "x" {
                writeln!(out, "# quantity,{},{}", self.quantity, self.unit)?;
            }
            writeln!(out, "# {tag},{},{},{}", axis.name, axis.unit, axis.spacing)?;
        }
        let mut w = csv::Writer::from_writer(out);
        let header = std::iter::once(self.x_axis.name.clone())
            .chain(self.x_axis.values.iter().map(|&v| num(v)));
        w.write_record(header)?;
        for (y, row) in self.y_axis.values.iter().zip(self.rows()) {
            w.write_record(std::iter::once(num(*y)).chain(row.iter().map(|&v| num(v))))?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv output is utf-8")
    }

    pub fn read_csv<R: Read>(mut input: R) -> Result<Self> {
        let mut text = String::new();
        input.read_to_string(&mut text)?;
        text.parse()
    }
}

impl FromStr for ScanGrid {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Config(format!("scan csv: {msg}"));
        let mut meta = std::collections::HashMap::new();
        let mut body = String::new();
        for line in text.lines() {
            match line.strip_prefix('#') {
                Some(comment) => {
                    let fields: Vec<&str> = comment.trim().split(',').collect();
                    meta.insert(
                        fields[0].to_string(),
                        fields[1..]
                            .iter()
                            .map(|s| s.to_string())
                            .collect::<Vec<_>>(),
                    );
                }
                None => {
                    body.push_str(line);
                    body.push('\n');
                }
            }
        }
        let field = |key: &str, i: usize| -> Result<String> {
            meta.get(key)
                .and_then(|v| v.get(i))
                .cloned()
                .ok_or_else(|| bad(&format!("missing `{key}` preamble")))
        };
        let parse = |s: &str| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| bad(&format!("bad number `{s}`")))
        };

        let mut reader = csv::ReaderBuilder::new()
            .has_headers(false)
            .flexible(true)
            .from_reader(body.as_bytes());
        let mut records = reader.records();
        let header = records.next().ok_or_else(|| bad("no header row"))??;
        let x_values = header
            .iter()
            .skip(1)
            .map(parse)
            .collect::<Result<Vec<_>>>()?;
        let mut y_values = Vec::new();
        let mut cells = Vec::new();
        for record in records {
            let record = record?;
            if record.len() != x_values.len() + 1 {
                return Err(bad(&format!(
                    "row with {} fields, expected {}",
                    record.len(),
                    x_values.len() + 1
                )));
            }
            y_values.push(parse(&record[0])?);
            for v in record.iter().skip(1) {
                cells.push(parse(v)?);
            }
        }
        let axis = |key: &str, values| -> Result<Axis> {
            Axis::new(
                field(key, 0)?,
                field(key, 1)?,
                values,
                field(key, 2)?.parse()?,
            )
        };
        Ok(ScanGrid {
            quantity: field("quantity", 0)?,
            unit: field("quantity", 1)?,
            x_axis: axis("x", x_values)?,
            y_axis: axis("y", y_values)?,
            cells,
        })
    }
}
