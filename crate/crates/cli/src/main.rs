//! `rydberg-budget` command-line front end.
//!
//! Every flag can also come from the `[defaults]` table of a `--config`
//! TOML file, keyed by the flag's long name (`rabi-mhz = 20.0`). Flags win
//! over the file. The same file may define extra `[[species]]`.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain error, 3 reproduction
//! failure.

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rydberg_budget::array::{self, LossBudget};
use rydberg_budget::dressing::{
    self, DressingParams, PairInteraction, PotentialKind, PotentialParams, C3,
};
use rydberg_budget::gate::{self, BlockadeGateInputs, DopplerInputs, StarkConvention, StrayField};
use rydberg_budget::numeric::logspace;
use rydberg_budget::reproduce::{reproduce_with, ReproductionInputs};
use rydberg_budget::rydberg;
use rydberg_budget::scan::{self, AxisSpec, FixedParams, Quantity, Spacing};
use rydberg_budget::species::parse_species;
use rydberg_budget::{Frequency, Species};
use serde::de::DeserializeOwned;
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "rydberg-budget",
    version,
    about = "Error budgets for Rydberg-atom qubit arrays"
)]
struct Cli {
    /// TOML file with a [defaults] table and optional [[species]] entries
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    /// atomic species (built-in: Cs, Rb)
    #[arg(long, global = true)]
    species: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Vacuum-loss, reload-rate and crosstalk budgets
    #[command(subcommand)]
    Budget(BudgetCmd),
    /// Gate-error minima and experimental budgets
    #[command(subcommand, name = "gate-error")]
    GateError(GateCmd),
    /// Doppler-limited Bell fidelity, or a temperature/time grid with --scan
    #[command(allow_negative_numbers = true)]
    Doppler(DopplerArgs),
    /// Dressing potentials and figures of merit
    #[command(subcommand)]
    Dressing(DressingCmd),
    /// Rydberg-state lifetime with blackbody depopulation
    Lifetime(LifetimeArgs),
    /// Evaluate a quantity over a two-dimensional grid (CSV)
    #[command(allow_negative_numbers = true)]
    Scan(ScanArgs),
    /// Recompute all reference values and report pass/fail (JSON)
    Reproduce(ReproduceArgs),
}

#[derive(Subcommand)]
enum BudgetCmd {
    /// Vacuum lifetime keeping the per-cycle loss below epsilon
    Vacuum {
        #[arg(long)]
        n_code: Option<u32>,
        /// defaults to 0.1 ms per code atom
        #[arg(long)]
        t_qec_ms: Option<f64>,
        #[arg(long)]
        epsilon: Option<f64>,
    },
    /// Atom reload rate for a full array
    Reload {
        #[arg(long)]
        n_phys: Option<u32>,
        #[arg(long)]
        tau_vac_s: Option<f64>,
        #[arg(long)]
        epsilon: Option<f64>,
    },
    /// Probability of losing an atom during a time window
    Loss {
        #[arg(long)]
        n_code: Option<u32>,
        #[arg(long)]
        time_ms: Option<f64>,
        #[arg(long)]
        tau_vac_s: Option<f64>,
    },
    /// Monte Carlo estimate of the loss probability
    Simulate {
        #[arg(long)]
        n_code: Option<u32>,
        #[arg(long)]
        time_ms: Option<f64>,
        #[arg(long)]
        tau_vac_s: Option<f64>,
        #[arg(long)]
        trials: Option<u64>,
        /// required; the run is reproducible for a given seed
        #[arg(long)]
        seed: u64,
    },
    /// Scattered-photon crosstalk during measurement
    Crosstalk {
        #[arg(long)]
        wavelength_nm: Option<f64>,
        #[arg(long)]
        spacing_um: Option<f64>,
        #[arg(long)]
        numerical_aperture: Option<f64>,
        #[arg(long)]
        efficiency: Option<f64>,
    },
}

#[derive(Args)]
struct BlockadeArgs {
    /// blockade shift B/2π
    #[arg(long)]
    blockade_mhz: Option<f64>,
    /// Rydberg lifetime
    #[arg(long)]
    tau_us: Option<f64>,
}

#[derive(Subcommand)]
enum GateCmd {
    /// Optimal Rabi frequency and minimum error of a blockade gate
    Blockade {
        #[command(flatten)]
        gate: BlockadeArgs,
        /// also evaluate the error at this Rabi frequency Ω/2π
        #[arg(long)]
        rabi_mhz: Option<f64>,
    },
    /// Entanglement error bound 2/(Bτ)
    Bound {
        #[command(flatten)]
        gate: BlockadeArgs,
    },
    /// n-independent blockade and dressing error floors
    Floor {
        /// defaults to the species value
        #[arg(long)]
        tau0_ns: Option<f64>,
    },
    /// Weak-interaction gate limited by the qubit frequency
    Interaction {
        #[arg(long)]
        tau_us: Option<f64>,
        /// defaults to the species clock frequency
        #[arg(long)]
        qubit_ghz: Option<f64>,
        /// also evaluate at this interaction strength V/2π
        #[arg(long)]
        interaction_mhz: Option<f64>,
    },
    /// Minimum dressing-gate error at a detuning
    #[command(allow_negative_numbers = true)]
    Dressing {
        #[arg(long)]
        detuning_mhz: Option<f64>,
        #[arg(long)]
        tau_us: Option<f64>,
    },
    /// Rydberg lifetime needed for a spontaneous-emission budget
    Spontaneous {
        #[arg(long)]
        t_pi_ns: Option<f64>,
        #[arg(long)]
        epsilon: Option<f64>,
    },
    /// Detuning and stray-field budgets from a π-pulse error target
    Stark {
        #[arg(long)]
        rabi_mhz: Option<f64>,
        #[arg(long)]
        epsilon: Option<f64>,
        #[command(flatten)]
        field: StarkArgs,
    },
    /// Combined budget at an operating point
    Budget {
        #[command(flatten)]
        gate: BlockadeArgs,
        /// operating Rabi frequency; defaults to the optimum
        #[arg(long)]
        rabi_mhz: Option<f64>,
        /// atom temperature for the Doppler term
        #[arg(long)]
        temperature_uk: Option<f64>,
        /// time in the Rydberg state for the Doppler term
        #[arg(long)]
        time_ns: Option<f64>,
        #[arg(long)]
        scheme: Option<String>,
        /// stray electric field for the Stark term
        #[arg(long)]
        field_v_cm: Option<f64>,
        #[command(flatten)]
        stark: StarkArgs,
    },
}

#[derive(Args)]
struct StarkArgs {
    /// scalar polarizability α₀ in GHz/(V/cm)²
    #[arg(long)]
    alpha0_ghz_cm2_v2: Option<f64>,
    /// Rydberg state whose species polarizability to use
    #[arg(long)]
    state: Option<String>,
    #[arg(long, value_enum)]
    stark_convention: Option<ConventionArg>,
}

#[derive(Clone, Copy, ValueEnum, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
enum ConventionArg {
    /// shift = α₀E²
    Full,
    /// shift = α₀E²/2
    Half,
}

#[derive(Args)]
struct DopplerArgs {
    #[arg(long)]
    temperature_uk: Option<f64>,
    #[arg(long)]
    time_ns: Option<f64>,
    #[arg(long)]
    scheme: Option<String>,
    /// emit a log10(1 - F) grid over temperature and time as CSV
    #[arg(long)]
    scan: bool,
    #[arg(long)]
    temperature_min_uk: Option<f64>,
    #[arg(long)]
    temperature_max_uk: Option<f64>,
    #[arg(long)]
    temperature_points: Option<usize>,
    #[arg(long)]
    time_min_ns: Option<f64>,
    #[arg(long)]
    time_max_ns: Option<f64>,
    #[arg(long)]
    time_points: Option<usize>,
}

#[derive(Args)]
struct PairArgs {
    /// dressing Rabi frequency Ω/2π
    #[arg(long)]
    rabi_mhz: Option<f64>,
    /// dressing detuning Δ/2π (signed)
    #[arg(long)]
    detuning_mhz: Option<f64>,
    /// Förster defect δ/2π (signed)
    #[arg(long)]
    defect_mhz: Option<f64>,
    /// crossover radius R_c
    #[arg(long)]
    crossover_um: Option<f64>,
    /// C₃/h; used instead of --crossover-um when that is absent
    #[arg(long)]
    c3_ghz_um3: Option<f64>,
    #[arg(long)]
    angular_factor: Option<f64>,
}

#[derive(Subcommand)]
enum DressingCmd {
    /// Normalized potential curves (CSV: r_um, v_full, v_vdw, v_single)
    #[command(allow_negative_numbers = true)]
    Curve {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        r_min_um: Option<f64>,
        #[arg(long)]
        r_max_um: Option<f64>,
        #[arg(long)]
        points: Option<usize>,
    },
    /// Figures of merit in one, two and three dimensions (JSON)
    #[command(allow_negative_numbers = true)]
    Fom {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        tau_us: Option<f64>,
        /// lattice period
        #[arg(long)]
        spacing_um: Option<f64>,
    },
}

#[derive(Args)]
struct LifetimeArgs {
    /// principal quantum number
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    temperature_k: Option<f64>,
    /// defaults to the species value
    #[arg(long)]
    tau0_ns: Option<f64>,
}

#[derive(Args)]
struct ScanArgs {
    /// tau-vac, doppler, dressing-potential or lifetime
    #[arg(long)]
    quantity: Option<String>,
    #[arg(long)]
    x_min: Option<f64>,
    #[arg(long)]
    x_max: Option<f64>,
    #[arg(long)]
    x_points: Option<usize>,
    #[arg(long, value_enum)]
    x_spacing: Option<SpacingArg>,
    #[arg(long)]
    y_min: Option<f64>,
    #[arg(long)]
    y_max: Option<f64>,
    #[arg(long)]
    y_points: Option<usize>,
    #[arg(long, value_enum)]
    y_spacing: Option<SpacingArg>,
    /// excitation scheme for doppler
    #[arg(long)]
    scheme: Option<String>,
    /// QEC cycle time per code atom, for tau-vac
    #[arg(long)]
    t_qec_per_atom_ms: Option<f64>,
    /// for dressing-potential
    #[arg(long)]
    detuning_mhz: Option<f64>,
    #[arg(long)]
    defect_mhz: Option<f64>,
    #[arg(long)]
    crossover_um: Option<f64>,
    #[arg(long, value_enum)]
    potential: Option<PotentialArg>,
}

#[derive(Clone, Copy, ValueEnum, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
enum SpacingArg {
    Linear,
    Log,
}

#[derive(Clone, Copy, ValueEnum, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
enum PotentialArg {
    Full,
    Vdw,
    SingleTerm,
}

#[derive(Args)]
struct ReproduceArgs {
    /// override the species τ₀ (sensitivity check)
    #[arg(long)]
    tau0_ns: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
}

enum CliError {
    Usage(String),
    Domain(rydberg_budget::Error),
    Io(io::Error),
    ReproductionFailed,
}

impl From<rydberg_budget::Error> for CliError {
    fn from(e: rydberg_budget::Error) -> Self {
        match e {
            rydberg_budget::Error::Config(_) | rydberg_budget::Error::UnknownQuantity(_) => {
                CliError::Usage(e.to_string())
            }
            other => CliError::Domain(other),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

type CliResult<T> = Result<T, CliError>;

/// Flag values with config-file fallback.
struct Ctx {
    defaults: toml::Table,
    species: Vec<Species>,
    species_name: Option<String>,
}

impl Ctx {
    fn load(cli: &Cli) -> CliResult<Ctx> {
        let (defaults, species) = match &cli.config {
            None => (toml::Table::new(), Vec::new()),
            Some(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| {
                    CliError::Usage(format!("cannot read config {}: {e}", path.display()))
                })?;
                let mut doc: toml::Table = text
                    .parse()
                    .map_err(|e| CliError::Usage(format!("config {}: {e}", path.display())))?;
                let defaults = match doc.remove("defaults") {
                    None => toml::Table::new(),
                    Some(toml::Value::Table(t)) => t,
                    Some(_) => {
                        return Err(CliError::Usage("config: `defaults` must be a table".into()))
                    }
                };
                (defaults, parse_species(&text)?)
            }
        };
        Ok(Ctx {
            defaults,
            species,
            species_name: cli.species.clone(),
        })
    }

    fn opt<T: DeserializeOwned>(&self, flag: Option<T>, key: &str) -> CliResult<Option<T>> {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.defaults.get(key) {
            None => Ok(None),
            Some(v) => v
                .clone()
                .try_into()
                .map(Some)
                .map_err(|e| CliError::Usage(format!("config: `{key}`: {e}"))),
        }
    }

    fn get<T: DeserializeOwned>(&self, flag: Option<T>, key: &str) -> CliResult<T> {
        self.opt(flag, key)?
            .ok_or_else(|| CliError::Usage(format!("missing --{key} (flag or [defaults] entry)")))
    }

    fn or<T: DeserializeOwned>(&self, flag: Option<T>, key: &str, default: T) -> CliResult<T> {
        Ok(self.opt(flag, key)?.unwrap_or(default))
    }

    fn species(&self) -> CliResult<Species> {
        let name = match &self.species_name {
            Some(n) => n.clone(),
            None => self.or(None, "species", "Cs".to_string())?,
        };
        self.species
            .iter()
            .find(|s| s.name.eq_ignore_ascii_case(&name))
            .cloned()
            .or_else(|| Species::by_name(&name))
            .ok_or_else(|| CliError::Usage(format!("unknown species `{name}`")))
    }

    fn scheme(&self, flag: Option<String>) -> CliResult<(Species, String)> {
        let species = self.species()?;
        let default = species
            .schemes
            .first()
            .map(|s| s.label.clone())
            .unwrap_or_default();
        let label = self.or(flag, "scheme", default)?;
        if species.scheme(&label).is_none() {
            return Err(CliError::Usage(format!(
                "species {} has no scheme `{label}`",
                species.name
            )));
        }
        Ok((species, label))
    }

    fn alpha0(&self, args: &StarkArgs) -> CliResult<f64> {
        if let Some(a) = self.opt(args.alpha0_ghz_cm2_v2, "alpha0-ghz-cm2-v2")? {
            return Ok(a);
        }
        let species = self.species()?;
        let state = self.opt(args.state.clone(), "state")?;
        let pol = match state {
            Some(s) => species.polarizability(&s),
            None => species.polarizabilities.first(),
        };
        pol.map(|p| p.alpha0).ok_or_else(|| {
            CliError::Usage(format!(
                "missing --alpha0-ghz-cm2-v2 (species {} has no matching polarizability)",
                species.name
            ))
        })
    }

    fn convention(&self, flag: Option<ConventionArg>) -> CliResult<StarkConvention> {
        Ok(
            match self.or(flag, "stark-convention", ConventionArg::Full)? {
                ConventionArg::Full => StarkConvention::Full,
                ConventionArg::Half => StarkConvention::Half,
            },
        )
    }

    fn pair(&self, args: &PairArgs) -> CliResult<(Frequency, Frequency, PairInteraction)> {
        let rabi = mhz(self.get(args.rabi_mhz, "rabi-mhz")?)?;
        let detuning = mhz(self.get(args.detuning_mhz, "detuning-mhz")?)?;
        let defect = mhz(self.get(args.defect_mhz, "defect-mhz")?)?;
        let factor = self.or(
            args.angular_factor,
            "angular-factor",
            dressing::DEFAULT_ANGULAR_FACTOR,
        )?;
        let crossover = self.opt(args.crossover_um, "crossover-um")?;
        let c3 = self.opt(args.c3_ghz_um3, "c3-ghz-um3")?;
        let pair = match (crossover, c3) {
            (Some(rc), Some(c3)) => PairInteraction::with_c3_and_crossover(
                C3::from_ghz_um3(c3),
                defect,
                rc * 1e-6,
                factor,
            )?,
            (Some(rc), None) => PairInteraction::from_crossover(defect, rc * 1e-6, factor)?,
            (None, Some(c3)) => PairInteraction::from_c3(C3::from_ghz_um3(c3), defect, factor)?,
            (None, None) => {
                return Err(CliError::Usage(
                    "missing --crossover-um or --c3-ghz-um3".into(),
                ))
            }
        };
        Ok((rabi, detuning, pair))
    }
}

fn mhz(v: f64) -> CliResult<Frequency> {
    Ok(Frequency::try_from_hz(v * 1e6)?)
}

fn emit_json<T: Serialize>(value: &T) -> CliResult<()> {
    let text = serde_json::to_string_pretty(value).map_err(io::Error::other)?;
    let mut out = io::stdout().lock();
    writeln!(out, "{text}")?;
    Ok(())
}

fn emit_text(text: &str) -> CliResult<()> {
    io::stdout().lock().write_all(text.as_bytes())?;
    Ok(())
}

fn run(cli: Cli) -> CliResult<()> {
    let ctx = Ctx::load(&cli)?;
    match cli.command {
        Command::Budget(cmd) => budget(&ctx, cmd),
        Command::GateError(cmd) => gate_error(&ctx, cmd),
        Command::Doppler(args) => doppler(&ctx, args),
        Command::Dressing(cmd) => dressing_cmd(&ctx, cmd),
        Command::Lifetime(args) => lifetime(&ctx, args),
        Command::Scan(args) => scan_cmd(&ctx, args),
        Command::Reproduce(args) => reproduce_cmd(&ctx, args),
    }
}

fn budget(ctx: &Ctx, cmd: BudgetCmd) -> CliResult<()> {
    match cmd {
        BudgetCmd::Vacuum {
            n_code,
            t_qec_ms,
            epsilon,
        } => {
            let n = ctx.get(n_code, "n-code")?;
            let t_qec = match ctx.opt(t_qec_ms, "t-qec-ms")? {
                Some(ms) => ms * 1e-3,
                None => LossBudget::default_t_qec(n),
            };
            let eps = ctx.get(epsilon, "epsilon")?;
            emit_json(&serde_json::json!({
                "n_code": n,
                "t_qec_s": t_qec,
                "epsilon": eps,
                "tau_vac_s": array::required_vacuum_lifetime(n, t_qec, eps)?,
            }))
        }
        BudgetCmd::Reload {
            n_phys,
            tau_vac_s,
            epsilon,
        } => {
            let n = ctx.get(n_phys, "n-phys")?;
            let tau = ctx.get(tau_vac_s, "tau-vac-s")?;
            let eps = ctx.get(epsilon, "epsilon")?;
            emit_json(&serde_json::json!({
                "n_phys": n,
                "tau_vac_s": tau,
                "epsilon": eps,
                "reload_rate_per_s": array::required_reload_rate(n, tau, eps)?,
            }))
        }
        BudgetCmd::Loss {
            n_code,
            time_ms,
            tau_vac_s,
        } => {
            let n = ctx.get(n_code, "n-code")?;
            let t = ctx.get(time_ms, "time-ms")? * 1e-3;
            let tau = ctx.get(tau_vac_s, "tau-vac-s")?;
            let est = array::loss_probability(n, t, tau)?;
            emit_json(&serde_json::json!({
                "n_code": n,
                "time_s": t,
                "tau_vac_s": tau,
                "probability": est.probability,
                "linearized": est.linearized,
                "exact": array::exact_loss_probability(n, t, tau),
                "valid": est.valid,
            }))
        }
        BudgetCmd::Simulate {
            n_code,
            time_ms,
            tau_vac_s,
            trials,
            seed,
        } => {
            let n = ctx.get(n_code, "n-code")?;
            let t = ctx.get(time_ms, "time-ms")? * 1e-3;
            let tau = ctx.get(tau_vac_s, "tau-vac-s")?;
            let trials = ctx.or(trials, "trials", 100_000)?;
            let mc = array::simulate_loss(n, tau, t, trials, seed)?;
            emit_json(&serde_json::json!({
                "trials": mc.trials,
                "losses": mc.losses,
                "estimate": mc.estimate,
                "std_error": mc.std_error,
                "exact": array::exact_loss_probability(n, t, tau),
                "seed": seed,
            }))
        }
        BudgetCmd::Crosstalk {
            wavelength_nm,
            spacing_um,
            numerical_aperture,
            efficiency,
        } => {
            let x = array::measurement_crosstalk(
                ctx.get(wavelength_nm, "wavelength-nm")? * 1e-9,
                ctx.get(spacing_um, "spacing-um")? * 1e-6,
                ctx.get(numerical_aperture, "numerical-aperture")?,
                ctx.get(efficiency, "efficiency")?,
            )?;
            emit_json(&x)
        }
    }
}

fn blockade_inputs(ctx: &Ctx, args: &BlockadeArgs) -> CliResult<(Frequency, f64)> {
    let b = mhz(ctx.get(args.blockade_mhz, "blockade-mhz")?)?;
    let tau = ctx.get(args.tau_us, "tau-us")? * 1e-6;
    Ok((b, tau))
}

fn gate_error(ctx: &Ctx, cmd: GateCmd) -> CliResult<()> {
    match cmd {
        GateCmd::Blockade { gate: g, rabi_mhz } => {
            let (b, tau) = blockade_inputs(ctx, &g)?;
            let gate = BlockadeGateInputs::new(
                b,
                tau,
                ctx.opt(rabi_mhz, "rabi-mhz")?.map(mhz).transpose()?,
            )?;
            emit_json(&serde_json::json!({
                "blockade_mhz": b.mhz(),
                "tau_us": tau * 1e6,
                "optimal_rabi_mhz": gate::optimal_rabi(b, tau).mhz(),
                "minimum_error": gate::blockade_gate_error(b, tau),
                "rabi_mhz": gate.operating_rabi().mhz(),
                "error_at_rabi": gate::blockade_error_model(gate.operating_rabi(), b, tau),
                "entanglement_bound": gate::entanglement_error_bound(b, tau),
            }))
        }
        GateCmd::Bound { gate: g } => {
            let (b, tau) = blockade_inputs(ctx, &g)?;
            BlockadeGateInputs::new(b, tau, None)?;
            emit_json(&serde_json::json!({
                "blockade_mhz": b.mhz(),
                "tau_us": tau * 1e6,
                "entanglement_bound": gate::entanglement_error_bound(b, tau),
                "blockade_gate_error": gate::blockade_gate_error(b, tau),
            }))
        }
        GateCmd::Floor { tau0_ns } => {
            let tau0 = match ctx.opt(tau0_ns, "tau0-ns")? {
                Some(ns) => ns * 1e-9,
                None => ctx.species()?.tau0,
            };
            let n = 100;
            let dressing = gate::dressing_gate_error(
                gate::level_spacing_limit(n),
                tau0 * f64::from(n).powi(3),
            )?;
            emit_json(&serde_json::json!({
                "tau0_ns": tau0 * 1e9,
                "blockade_floor": gate::asymptotic_blockade_floor(tau0)?,
                "dressing_floor": dressing,
            }))
        }
        GateCmd::Interaction {
            tau_us,
            qubit_ghz,
            interaction_mhz,
        } => {
            let tau = ctx.get(tau_us, "tau-us")? * 1e-6;
            let wq = match ctx.opt(qubit_ghz, "qubit-ghz")? {
                Some(g) => Frequency::try_from_hz(g * 1e9)?,
                None => ctx.species()?.qubit_freq,
            };
            let (v, e) = gate::optimal_interaction_gate(tau, wq)?;
            let at = match ctx.opt(interaction_mhz, "interaction-mhz")? {
                Some(m) => Some(gate::interaction_gate_error(mhz(m)?, tau, wq)?),
                None => None,
            };
            emit_json(&serde_json::json!({
                "tau_us": tau * 1e6,
                "qubit_ghz": wq.ghz(),
                "optimal_interaction_mhz": v.mhz(),
                "minimum_error": e,
                "error_at_interaction": at,
            }))
        }
        GateCmd::Dressing {
            detuning_mhz,
            tau_us,
        } => {
            let d = mhz(ctx.get(detuning_mhz, "detuning-mhz")?)?;
            let tau = ctx.get(tau_us, "tau-us")? * 1e-6;
            let e = gate::dressing_gate_error(d, tau)?;
            emit_json(&serde_json::json!({
                "detuning_mhz": d.mhz(),
                "tau_us": tau * 1e6,
                "optimal_rabi_mhz": gate::dressing_optimal_rabi(d, tau).mhz(),
                "minimum_error": e,
            }))
        }
        GateCmd::Spontaneous { t_pi_ns, epsilon } => {
            let t_pi = ctx.get(t_pi_ns, "t-pi-ns")? * 1e-9;
            let eps = ctx.get(epsilon, "epsilon")?;
            emit_json(&serde_json::json!({
                "t_pi_ns": t_pi * 1e9,
                "epsilon": eps,
                "min_lifetime_us": gate::spontaneous_budget(t_pi, eps)? * 1e6,
            }))
        }
        GateCmd::Stark {
            rabi_mhz,
            epsilon,
            field,
        } => {
            let rabi = mhz(ctx.get(rabi_mhz, "rabi-mhz")?)?;
            let eps = ctx.get(epsilon, "epsilon")?;
            let alpha0 = ctx.alpha0(&field)?;
            let convention = ctx.convention(field.stark_convention)?;
            let s = gate::StarkBudget::compute(rabi, eps, alpha0, convention)?;
            emit_json(&serde_json::json!({
                "rabi_mhz": rabi.mhz(),
                "epsilon": eps,
                "alpha0_ghz_cm2_v2": alpha0,
                "convention": convention,
                "max_detuning_khz": s.max_detuning.khz(),
                "max_field_v_cm": s.max_field,
            }))
        }
        GateCmd::Budget {
            gate: g,
            rabi_mhz,
            temperature_uk,
            time_ns,
            scheme,
            field_v_cm,
            stark,
        } => {
            let (b, tau) = blockade_inputs(ctx, &g)?;
            let gate = BlockadeGateInputs::new(
                b,
                tau,
                ctx.opt(rabi_mhz, "rabi-mhz")?.map(mhz).transpose()?,
            )?;
            let doppler = match (
                ctx.opt(temperature_uk, "temperature-uk")?,
                ctx.opt(time_ns, "time-ns")?,
            ) {
                (Some(t), Some(time)) => {
                    let (species, label) = ctx.scheme(scheme)?;
                    let k = species.scheme(&label).expect("checked").effective_k();
                    Some(DopplerInputs::new(k, t * 1e-6, time * 1e-9, species.mass)?)
                }
                (None, None) => None,
                _ => {
                    return Err(CliError::Usage(
                        "--temperature-uk and --time-ns go together".into(),
                    ))
                }
            };
            let stray = match ctx.opt(field_v_cm, "field-v-cm")? {
                Some(f) => Some(StrayField {
                    field: f,
                    alpha0: ctx.alpha0(&stark)?,
                    convention: ctx.convention(stark.stark_convention)?,
                }),
                None => None,
            };
            let budget = gate::GateErrorBudget::compute(&gate, doppler.as_ref(), stray.as_ref())?;
            let (dominant, _) = budget.dominant();
            emit_json(&serde_json::json!({
                "rabi_mhz": budget.rabi.mhz(),
                "spontaneous": budget.spontaneous,
                "blockade_leakage": budget.blockade_leakage,
                "doppler": budget.doppler,
                "stark": budget.stark,
                "total": budget.total,
                "dominant": dominant,
            }))
        }
    }
}

fn doppler(ctx: &Ctx, args: DopplerArgs) -> CliResult<()> {
    let (species, label) = ctx.scheme(args.scheme)?;
    if args.scan {
        let x = AxisSpec::log(
            ctx.or(args.temperature_min_uk, "temperature-min-uk", 0.1)?,
            ctx.or(args.temperature_max_uk, "temperature-max-uk", 100.0)?,
            ctx.or(args.temperature_points, "temperature-points", 31)?,
        );
        let y = AxisSpec::linear(
            ctx.or(args.time_min_ns, "time-min-ns", 10.0)?,
            ctx.or(args.time_max_ns, "time-max-ns", 1000.0)?,
            ctx.or(args.time_points, "time-points", 100)?,
        );
        let fixed = FixedParams {
            species,
            scheme: label,
            ..FixedParams::default()
        };
        let grid = scan::scan(Quantity::Doppler, &x, &y, &fixed)?;
        return emit_text(&grid.to_csv_string());
    }
    let t = ctx.get(args.temperature_uk, "temperature-uk")?;
    let time = ctx.get(args.time_ns, "time-ns")?;
    let k = species.scheme(&label).expect("checked").effective_k();
    let d = DopplerInputs::new(k, t * 1e-6, time * 1e-9, species.mass)?;
    emit_json(&serde_json::json!({
        "species": species.name,
        "scheme": label,
        "temperature_uk": t,
        "time_ns": time,
        "wavevector_per_m": k,
        "fidelity": d.fidelity(),
        "infidelity": d.infidelity(),
    }))
}

#[derive(Serialize)]
struct FomRecord {
    dimension: u8,
    depth_khz: f64,
    exact_depth_khz: f64,
    decoherence_time_ms: f64,
    ops_per_atom: f64,
    atoms: f64,
    atoms_floor: u64,
    f: f64,
    f_composed: f64,
    f_prime: f64,
    f_prime_as_printed: f64,
    f_prime_per_atom: f64,
}

fn dressing_cmd(ctx: &Ctx, cmd: DressingCmd) -> CliResult<()> {
    match cmd {
        DressingCmd::Curve {
            pair,
            r_min_um,
            r_max_um,
            points,
        } => {
            let (rabi, detuning, pair) = ctx.pair(&pair)?;
            let params = PotentialParams {
                rabi,
                detuning,
                defect: pair.defect,
                crossover: pair.crossover * 1e6,
            };
            let lo = ctx.or(r_min_um, "r-min-um", 0.1)?;
            let hi = ctx.or(r_max_um, "r-max-um", 30.0)?;
            let n = ctx.or(points, "points", 200)?;
            if !(lo > 0.0 && hi > lo && n >= 2) {
                return Err(CliError::Usage(
                    "need 0 < --r-min-um < --r-max-um and --points >= 2".into(),
                ));
            }
            let curve = dressing::potential_curve(&params, &logspace(lo, hi, n))?;
            let mut out = String::from("r_um,v_full,v_vdw,v_single\n");
            for p in curve {
                out.push_str(&format!(
                    "{:.16e},{:.16e},{:.16e},{:.16e}\n",
                    p.r, p.full, p.vdw, p.single_term
                ));
            }
            emit_text(&out)
        }
        DressingCmd::Fom {
            pair,
            tau_us,
            spacing_um,
        } => {
            let (rabi, detuning, pair) = ctx.pair(&pair)?;
            let params = DressingParams {
                rabi,
                detuning,
                pair,
                lifetime: ctx.get(tau_us, "tau-us")? * 1e-6,
                spacing: ctx.get(spacing_um, "spacing-um")? * 1e-6,
            };
            let summary = dressing::figures_of_merit(&params)?;
            if !summary.weak_dressing {
                eprintln!(
                    "warning: |Ω| >= |Δ|, outside weak dressing; depths are not perturbative"
                );
            }
            let records: Vec<FomRecord> = summary
                .records
                .iter()
                .map(|r| FomRecord {
                    dimension: r.dimension,
                    depth_khz: r.depth.khz(),
                    exact_depth_khz: r.exact_depth.khz(),
                    decoherence_time_ms: r.decoherence_time * 1e3,
                    ops_per_atom: r.ops_per_atom,
                    atoms: r.atoms,
                    atoms_floor: r.atoms_floor,
                    f: r.f,
                    f_composed: r.f_composed,
                    f_prime: r.f_prime,
                    f_prime_as_printed: r.f_prime_as_printed,
                    f_prime_per_atom: r.f_prime_per_atom,
                })
                .collect();
            emit_json(&serde_json::json!({
                "blockade_radius_um": summary.blockade_radius * 1e6,
                "crossover_um": pair.crossover * 1e6,
                "weak_dressing": summary.weak_dressing,
                "records": records,
            }))
        }
    }
}

fn lifetime(ctx: &Ctx, args: LifetimeArgs) -> CliResult<()> {
    let n = ctx.get(args.n, "n")?;
    let temperature = ctx.or(args.temperature_k, "temperature-k", 300.0)?;
    let tau0 = match ctx.opt(args.tau0_ns, "tau0-ns")? {
        Some(ns) => ns * 1e-9,
        None => ctx.species()?.tau0,
    };
    let tau = rydberg::rydberg_lifetime(n, temperature, tau0)?;
    emit_json(&serde_json::json!({
        "n": n,
        "temperature_k": temperature,
        "tau0_ns": tau0 * 1e9,
        "radiative_us": rydberg::rydberg_lifetime(n, 0.0, tau0)? * 1e6,
        "blackbody_rate_per_s": rydberg::blackbody_rate(n, temperature),
        "lifetime_us": tau * 1e6,
    }))
}

fn axis(
    ctx: &Ctx,
    axis: char,
    min: Option<f64>,
    max: Option<f64>,
    points: Option<usize>,
    spacing: Option<SpacingArg>,
) -> CliResult<AxisSpec> {
    let key = |k: &str| format!("{axis}-{k}");
    let spacing = match ctx.or(spacing, &key("spacing"), SpacingArg::Linear)? {
        SpacingArg::Linear => Spacing::Linear,
        SpacingArg::Log => Spacing::Log,
    };
    Ok(AxisSpec {
        lo: ctx.get(min, &key("min"))?,
        hi: ctx.get(max, &key("max"))?,
        count: ctx.get(points, &key("points"))?,
        spacing,
    })
}

fn scan_cmd(ctx: &Ctx, args: ScanArgs) -> CliResult<()> {
    let quantity: Quantity = ctx.get(args.quantity, "quantity")?.parse()?;
    let x = axis(
        ctx,
        'x',
        args.x_min,
        args.x_max,
        args.x_points,
        args.x_spacing,
    )?;
    let y = axis(
        ctx,
        'y',
        args.y_min,
        args.y_max,
        args.y_points,
        args.y_spacing,
    )?;
    let base = FixedParams::default();
    let species = ctx.species()?;
    let scheme = match quantity {
        Quantity::Doppler => ctx.scheme(args.scheme)?.1,
        _ => species
            .schemes
            .first()
            .map(|s| s.label.clone())
            .unwrap_or_default(),
    };
    let fixed = FixedParams {
        species,
        scheme,
        t_qec_per_atom: ctx.or(
            args.t_qec_per_atom_ms,
            "t-qec-per-atom-ms",
            base.t_qec_per_atom * 1e3,
        )? * 1e-3,
        detuning: mhz(ctx.or(args.detuning_mhz, "detuning-mhz", base.detuning.mhz())?)?,
        defect: mhz(ctx.or(args.defect_mhz, "defect-mhz", base.defect.mhz())?)?,
        crossover: ctx.or(args.crossover_um, "crossover-um", base.crossover * 1e6)? * 1e-6,
        potential: match ctx.or(args.potential, "potential", PotentialArg::Full)? {
            PotentialArg::Full => PotentialKind::Full,
            PotentialArg::Vdw => PotentialKind::Vdw,
            PotentialArg::SingleTerm => PotentialKind::SingleTerm,
        },
    };
    let grid = scan::scan(quantity, &x, &y, &fixed)?;
    emit_text(&grid.to_csv_string())
}

fn reproduce_cmd(ctx: &Ctx, args: ReproduceArgs) -> CliResult<()> {
    let mut inputs = ReproductionInputs {
        species: ctx.species()?,
        ..ReproductionInputs::default()
    };
    if let Some(ns) = ctx.opt(args.tau0_ns, "tau0-ns")? {
        inputs.species.tau0 = ns * 1e-9;
    }
    if let Some(seed) = ctx.opt(args.seed, "seed")? {
        inputs.seed = seed;
    }
    let report = reproduce_with(&inputs)?;
    emit_json(&report)?;
    if report.pass {
        Ok(())
    } else {
        Err(CliError::ReproductionFailed)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    ExitCode::SUCCESS
                }
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(CliError::ReproductionFailed) => {
            eprintln!("reproduction failed");
            ExitCode::from(3)
        }
    }
}
