//! `qaffine`: command-line access to the series, tables and identity
//! verifiers of the `qaffine` library.
//!
//! Exit status: 0 on success, 2 on usage errors, 3 when a verification
//! fails, 1 for anything else.

mod config;
mod output;
mod verify;

use std::io::{ErrorKind, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qaffine::charseries::{self as cs, Grid, KostantOracle, LatticeSeries, ProductMode};
use qaffine::qseries;
use qaffine::rootdata::{build_root_datum, RootDatum, RootVec, Weight, WordH};
use qaffine::{Error, QPoly};

use config::{Format, Overrides, RunConfig, CONFIG_ENV};

const EXIT_OTHER: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_VERIFY: u8 = 3;

#[derive(Parser)]
#[command(name = "qaffine", version, about = "Exact q-deformed series over affine root systems")]
struct Cli {
    #[command(flatten)]
    opts: GlobalOpts,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args)]
struct GlobalOpts {
    /// Affine type, e.g. A1~1, A4~1, D4~1, E6~1.
    #[arg(long = "type", global = true, value_name = "TYPE")]
    affine_type: Option<String>,
    /// Largest δ-coordinate `c₀` kept.
    #[arg(long, global = true)]
    delta_cap: Option<u32>,
    /// Largest classical height `c₁ + … + cₙ` kept.
    #[arg(long, global = true)]
    height_cap: Option<u32>,
    /// Let the specialization grow the height cap until it stabilizes.
    #[arg(long, global = true)]
    adaptive: bool,
    /// Order of truncated t-series.
    #[arg(long, global = true)]
    t_order: Option<usize>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Period of the reduced word, e.g. 1,0.
    #[arg(long, global = true)]
    word: Option<String>,
    /// Dominant weight in Λ-coordinates, e.g. 1,0.
    #[arg(long, global = true)]
    lambda: Option<String>,
    /// Evaluation point u=<rational> (or q=inf, q=1, q=-1); repeatable.
    #[arg(long, global = true)]
    eval: Vec<String>,
    /// Worker threads.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// key=value config file; flags override it. Defaults to $QAFFINE_CONFIG.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Allow the large specialization instances.
    #[arg(long, global = true)]
    large: bool,
}

#[derive(Subcommand)]
enum Command {
    /// ε_{q,n}(k): coefficient of t^k in ∏(1 − u t^j)^n.
    Eps {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: usize,
    },
    /// p_{q,n}(k): coefficient of t^k in ∏((1 − u t^j)/(1 − t^j))^n.
    Pqn {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: usize,
    },
    /// Ramanujan's τ(k).
    Tau {
        #[arg(long)]
        k: usize,
    },
    /// Product over positive roots.
    Gk {
        #[arg(long, value_enum, default_value = "gk")]
        mode: ModeArg,
        /// Compute the GK series from the index-set sum instead.
        #[arg(long)]
        sum: bool,
    },
    /// H_{λ+ρ}(μ; q) for μ in the profile.
    Hpoly,
    /// K^∞_q, K^1_q or Kostant's K.
    Kostant {
        #[arg(long, value_enum, default_value = "kinf")]
        which: KostantArg,
        /// A single grade, e.g. 1,1.
        #[arg(long)]
        beta: Option<String>,
    },
    /// Weight multiplicities dim V(λ)_{λ−μ}.
    Character,
    /// Σ_μ H_ρ(kα₀ + μ) for k ≤ delta-cap, and its quotient by (1−u)^r.
    Specialize,
    /// Run one verifier, or all of them.
    Verify {
        /// A verifier id, or `all`.
        id: String,
        /// Range 0..=bound for the A1 closed-form check.
        #[arg(long, default_value_t = 20)]
        bound: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Gk,
    InverseCs,
    Cs,
    Kostant,
    Denominator,
}

impl From<ModeArg> for ProductMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Gk => ProductMode::Gk,
            ModeArg::InverseCs => ProductMode::InverseCs,
            ModeArg::Cs => ProductMode::Cs,
            ModeArg::Kostant => ProductMode::Kostant,
            ModeArg::Denominator => ProductMode::Denominator,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KostantArg {
    Kinf,
    K1,
    K,
}

enum Failure {
    Usage(String),
    Other(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnsupportedType(_) | Error::Invalid(_) | Error::Dimension { .. } | Error::NotRegularDominant(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Other(e.to_string()),
        }
    }
}

fn overrides(o: &GlobalOpts) -> Overrides {
    Overrides {
        affine_type: o.affine_type.clone(),
        delta_cap: o.delta_cap,
        height_cap: o.height_cap,
        adaptive: o.adaptive.then_some(true),
        t_order: o.t_order,
        format: o.format,
        word: o.word.clone(),
        lambda: o.lambda.clone(),
        eval: o.eval.clone(),
        jobs: o.jobs,
        large: o.large.then_some(true),
    }
}

fn datum_of(cfg: &RunConfig) -> Result<RootDatum, Failure> {
    Ok(build_root_datum(&cfg.affine_type)?)
}

fn word_of(cfg: &RunConfig, datum: &RootDatum) -> Result<WordH, Failure> {
    match &cfg.word {
        Some(w) => Ok(WordH::from_period(datum, w.clone())?),
        None => Ok(WordH::default_for(datum)),
    }
}

fn lambda_of(cfg: &RunConfig, datum: &RootDatum) -> Result<Weight, Failure> {
    match &cfg.lambda {
        Some(l) => {
            let w = datum.weight(l)?;
            if !w.is_dominant() {
                return Err(Failure::Usage(format!("--lambda {w} is not dominant")));
            }
            Ok(w)
        }
        None => Ok(Weight::zero(datum.dim())),
    }
}

fn parse_beta(s: &str, datum: &RootDatum) -> Result<RootVec, Failure> {
    let v: Vec<i64> = s
        .split(',')
        .map(|x| x.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| Failure::Usage(format!("bad --beta {s:?}")))?;
    if v.len() != datum.dim() || v.iter().any(|&c| c < 0) {
        return Err(Failure::Usage(format!(
            "--beta needs {} non-negative coordinates",
            datum.dim()
        )));
    }
    Ok(RootVec(v))
}

fn run(cli: Cli) -> Result<String, Failure> {
    let config_path = cli.opts.config.clone().or_else(|| std::env::var_os(CONFIG_ENV).map(PathBuf::from));
    let cfg = RunConfig::resolve(&overrides(&cli.opts), config_path.as_deref()).map_err(|e| Failure::Usage(e.0))?;
    if let Some(j) = cfg.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build_global()
            .map_err(|e| Failure::Other(e.to_string()))?;
    }
    let profile = cfg.profile();

    match cli.cmd {
        Command::Eps { n, k } => Ok(output::poly(&cfg, &qseries::epsilon_qn(n, k)?)),
        Command::Pqn { n, k } => Ok(output::poly(&cfg, &qseries::p_qn(n, k)?)),
        Command::Tau { k } => {
            if k == 0 {
                return Err(Failure::Usage("--k must be at least 1".into()));
            }
            Ok(qseries::ramanujan_tau(k, k)?.to_string())
        }
        Command::Gk { mode, sum } => {
            let datum = datum_of(&cfg)?;
            if sum {
                let word = word_of(&cfg, &datum)?;
                Ok(output::series(&cfg, "gk-sum", &cs::gk_sum(&datum, &word, profile)?))
            } else {
                let s = cs::gk_product(&datum, profile, mode.into());
                Ok(output::series(&cfg, "root-product", &s))
            }
        }
        Command::Hpoly => {
            let datum = datum_of(&cfg)?;
            let lambda = lambda_of(&cfg, &datum)?;
            Ok(output::series(&cfg, "h-poly", &cs::h_poly(&datum, &lambda, profile)?))
        }
        Command::Kostant { which, beta } => {
            let datum = datum_of(&cfg)?;
            let grid = Grid::new(datum.dim(), profile);
            let s = match which {
                KostantArg::Kinf => cs::gk::root_product_on(&datum, &grid, ProductMode::Gk),
                KostantArg::K1 => cs::gk::root_product_on(&datum, &grid, ProductMode::InverseCs),
                KostantArg::K => {
                    let mut oracle = KostantOracle::new(&datum, profile);
                    let mut s = LatticeSeries::zero(&grid);
                    for g in grid.grades() {
                        s.set(g, QPoly::constant(oracle.count(g)))?;
                    }
                    s
                }
            };
            match beta {
                Some(b) => {
                    let b = parse_beta(&b, &datum)?;
                    if !profile.contains(&b) {
                        return Err(Failure::Usage(format!("--beta {b} lies outside {profile}")));
                    }
                    Ok(output::poly(&cfg, &s.get(&b)))
                }
                None => Ok(output::series(&cfg, "kostant", &s)),
            }
        }
        Command::Character => {
            let datum = datum_of(&cfg)?;
            let lambda = lambda_of(&cfg, &datum)?;
            Ok(output::series(&cfg, "character", &cs::weyl_kac_character(&datum, &lambda, profile)?))
        }
        Command::Specialize => {
            let datum = datum_of(&cfg)?;
            match verify::specialization_gate(&datum, profile, cfg.large) {
                Ok(true) => {}
                Ok(false) => {
                    return Err(Failure::Usage(format!(
                        "specialization of {} is a large instance; pass --large with --delta-cap <= {}",
                        datum.label(),
                        verify::LARGE_DELTA_CAP
                    )))
                }
                Err(msg) => return Err(Failure::Usage(msg)),
            }
            let (slices, cap) = cs::specialize::h_rho_slices(&datum, profile)?;
            let r = datum.num_classical_positive() as u32;
            let quotients = slices
                .coeffs()
                .iter()
                .map(|c| c.exact_div_pow_one_minus_u(r))
                .collect::<qaffine::Result<Vec<_>>>()?;
            let q = qaffine::TSeries::from_coeffs(quotients, slices.order());
            let info = [("r", r.to_string()), ("stable_height_cap", cap.to_string())];
            let mut out = output::tseries(&cfg, "h-rho-slices", &slices, &info);
            if cfg.format != Format::Json {
                out.push_str(&format!("\n# divided by (1-u)^{r}\n"));
            } else {
                out.push('\n');
            }
            out.push_str(&output::tseries(&cfg, "h-rho-slices/(1-u)^r", &q, &info));
            Ok(out)
        }
        Command::Verify { id, bound } => {
            let datum = datum_of(&cfg)?;
            let word = word_of(&cfg, &datum)?;
            let lambdas = match &cfg.lambda {
                Some(_) => vec![lambda_of(&cfg, &datum)?],
                None => vec![Weight::zero(datum.dim()), datum.fundamental(0)],
            };
            let ctx = verify::Context {
                datum,
                word,
                profile,
                t_order: cfg.t_order,
                lambdas,
                carlitz_bound: bound,
                large: cfg.large,
            };
            let ids: Vec<&str> = if id == "all" {
                verify::IDS.to_vec()
            } else if verify::IDS.contains(&id.as_str()) {
                vec![id.as_str()]
            } else {
                return Err(Failure::Usage(format!(
                    "unknown verifier {id:?}; expected one of: all, {}",
                    verify::IDS.join(", ")
                )));
            };
            let mut reports = Vec::new();
            let mut skipped = Vec::new();
            for id in ids {
                match verify::run(id, &ctx)? {
                    verify::Outcome::Ran(rs) => reports.extend(rs),
                    verify::Outcome::Skipped(why) => skipped.push((id.to_string(), why)),
                }
            }
            let text = output::reports(&cfg, &reports, &skipped);
            if reports.iter().all(|r| r.passed()) {
                Ok(text)
            } else {
                Err(Failure::Verification(text))
            }
        }
    }
}

/// Writes `out` to stdout. A closed pipe (`qaffine ... | head`) is not an
/// error; other write failures are.
fn emit(out: &str, code: ExitCode) -> ExitCode {
    match writeln!(std::io::stdout().lock(), "{out}") {
        Ok(()) => code,
        Err(e) if e.kind() == ErrorKind::BrokenPipe => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_OTHER)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => emit(&out, ExitCode::SUCCESS),
        Err(Failure::Verification(out)) => emit(&out, ExitCode::from(EXIT_VERIFY)),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Other(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_OTHER)
        }
    }
}
