//! The verifier ids reachable from `verify <id>` and `verify all`.

use qaffine::charseries::{self as cs, TruncProfile};
use qaffine::qseries;
use qaffine::rootdata::{RootDatum, Weight, WordH};
use qaffine::{Report, Result};

/// Every id, in the order `verify all` runs them.
pub const IDS: &[&str] = &[
    "pentagonal",
    "eps-recurrence",
    "multi-eps-recurrence",
    "q-binomial",
    "gk-full",
    "gk-real",
    "gk-imag",
    "correction-factor",
    "cs-rho",
    "cs-general",
    "h-via-kinfty",
    "support-law",
    "kostant-conv",
    "kostant-recur",
    "q-kostant",
    "gr-tensor",
    "carlitz",
    "basic-specialization",
];

/// Component counts for the multi-partition recurrence.
pub const MULTI_N: &[u32] = &[1, 2, 3, 24];

/// Largest `|k|` in the per-`k` real-root check.
pub const GK_REAL_KMAX: i64 = 8;

/// Beyond this many classical positive roots, the basic specialization is
/// only run on request.
pub const SPECIALIZATION_DESK_LIMIT: usize = 3;

/// Largest δ-cap allowed for a requested large specialization.
pub const LARGE_DELTA_CAP: u32 = 2;

pub struct Context {
    pub datum: RootDatum,
    pub word: WordH,
    pub profile: TruncProfile,
    pub t_order: usize,
    pub lambdas: Vec<Weight>,
    pub carlitz_bound: u32,
    pub large: bool,
}

pub enum Outcome {
    Ran(Vec<Report>),
    Skipped(String),
}

/// Whether the basic specialization for this type must be requested
/// explicitly; `Err` carries a usage message.
pub fn specialization_gate(datum: &RootDatum, profile: TruncProfile, large: bool) -> std::result::Result<bool, String> {
    if datum.num_classical_positive() <= SPECIALIZATION_DESK_LIMIT {
        return Ok(true);
    }
    if !large {
        return Ok(false);
    }
    if profile.delta_cap > LARGE_DELTA_CAP {
        return Err(format!(
            "--large specialization of {} needs --delta-cap <= {LARGE_DELTA_CAP}",
            datum.label()
        ));
    }
    Ok(true)
}

fn per_lambda(
    ctx: &Context,
    f: fn(&RootDatum, &Weight, TruncProfile) -> Result<Report>,
) -> Result<Vec<Report>> {
    ctx.lambdas.iter().map(|l| f(&ctx.datum, l, ctx.profile)).collect()
}

pub fn run(id: &str, ctx: &Context) -> Result<Outcome> {
    let d = &ctx.datum;
    let p = ctx.profile;
    let t = ctx.t_order;
    let reports = match id {
        "pentagonal" => vec![qseries::verify_pentagonal(t)],
        "eps-recurrence" => vec![qseries::verify_single_partition_recurrence(t)],
        "multi-eps-recurrence" => MULTI_N.iter().map(|&n| qseries::verify_multi_recurrence(n, t)).collect(),
        "q-binomial" => vec![qseries::verify_q_binomial(t)?],
        "gk-full" => vec![cs::verify_gk_full(d, &ctx.word, p)?],
        "gk-real" => vec![cs::verify_gk_real(d, &ctx.word, p, GK_REAL_KMAX)?],
        "gk-imag" => {
            let mut ns = vec![1, 2];
            if d.rank() > 2 {
                ns.push(d.rank() as u32);
            }
            ns.into_iter().map(|n| cs::verify_gk_imag(n, t)).collect()
        }
        "correction-factor" => vec![cs::verify_correction_factor(d, t)?],
        "cs-rho" => vec![cs::chi_q_rho_check(d, p)?],
        "cs-general" => per_lambda(ctx, cs::verify_cs)?,
        "h-via-kinfty" => per_lambda(ctx, cs::verify_h_via_kinfty)?,
        "support-law" => per_lambda(ctx, cs::verify_support_law)?,
        "kostant-conv" => vec![cs::verify_kostant_conv(d, p)?],
        "kostant-recur" => vec![cs::verify_kostant_recur(d, p)?],
        "q-kostant" => per_lambda(ctx, cs::verify_q_kostant)?,
        "gr-tensor" => per_lambda(ctx, cs::verify_gr_tensor)?,
        "carlitz" => vec![cs::carlitz_check(ctx.carlitz_bound)?],
        "basic-specialization" => match specialization_gate(d, p, ctx.large) {
            Ok(true) => vec![cs::verify_basic_specialization(d, p)?],
            Ok(false) => return Ok(Outcome::Skipped("needs --large".to_string())),
            Err(msg) => return Err(qaffine::Error::Invalid(msg)),
        },
        other => return Err(qaffine::Error::Invalid(format!("unknown verifier id {other:?}"))),
    };
    Ok(Outcome::Ran(reports))
}
