//! The basic specialization `z^{−μ} ↦ t^{c₀(μ)}` and the identity it
//! produces for the CS product:
//!
//! ```text
//! EV_t(∏_{α>0} (1 − u z^{−α})^{mult α}) = (1−u)^r ∏_{k≥1} (1 − u t^k)^N
//! ```
//!
//! with `r` the number of classical positive roots and `N` the classical
//! dimension. Each `t^k` coefficient sums over all classical `μ`, a finite
//! but unbounded set, so results are only reported once raising the
//! classical-height cap by 4 no longer changes them.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use crate::charseries::gk::{report_header, root_product_on, ProductMode};
use crate::charseries::lattice::{Grid, LatticeSeries, TruncProfile};
use crate::error::{Error, Result};
use crate::poly::QPoly;
use crate::qseries::{epsilon_qn, euler_product, ramanujan_tau, Deform, Direction, TSeries};
use crate::report::{Check, Report};
use crate::rootdata::RootDatum;

/// Cap increment used by the stabilization test.
pub const STABILITY_STEP: u32 = 4;

/// How many times an adaptive profile may grow before giving up.
pub const MAX_ADAPTIVE_STEPS: u32 = 16;

/// Sums the coefficients of each `c₀`-slice, to `t^{delta_cap}`.
pub fn ev_specialize(series: &LatticeSeries) -> TSeries {
    let order = series.profile().delta_cap as usize;
    let mut out = vec![QPoly::zero(); order + 1];
    for (mu, c) in series.terms() {
        out[mu.delta_degree() as usize] += c;
    }
    TSeries::from_coeffs(out, order)
}

/// Specializes `build` at height caps `C` and `C + 4` and returns the
/// result once they agree. An adaptive profile keeps raising `C`.
pub fn ev_specialize_stable<F>(dim: usize, profile: TruncProfile, build: F) -> Result<(TSeries, u32)>
where
    F: Fn(&Arc<Grid>) -> Result<LatticeSeries>,
{
    let mut cap = profile.height_cap;
    let mut low = ev_specialize(&build(&Grid::new(dim, profile.with_height_cap(cap)))?);
    let mut steps = 0;
    loop {
        let high_profile = profile.with_height_cap(cap + STABILITY_STEP);
        let high = ev_specialize(&build(&Grid::new(dim, high_profile))?);
        let Some(degree) = first_difference(&low, &high) else {
            return Ok((low, cap));
        };
        if !profile.adaptive || steps == MAX_ADAPTIVE_STEPS {
            return Err(Error::NotStabilized { degree, cap });
        }
        steps += 1;
        cap += STABILITY_STEP;
        low = high;
    }
}

fn first_difference(a: &TSeries, b: &TSeries) -> Option<usize> {
    a.coeffs().iter().zip(b.coeffs()).position(|(x, y)| x != y)
}

/// `Σ_{μ classical} H_ρ(kα₀ + μ; q)` for `k ≤ delta_cap`, stabilized.
pub fn h_rho_slices(datum: &RootDatum, profile: TruncProfile) -> Result<(TSeries, u32)> {
    ev_specialize_stable(datum.dim(), profile, |grid| {
        Ok(root_product_on(datum, grid, ProductMode::Cs))
    })
}

/// The specialized CS product against `(1−u)^r ∏(1 − u t^k)^N`; exact
/// division by `(1−u)^r` giving `ε_{q,N}(k)`; and at `u = 1`, `ε_{1,N}(k)`,
/// which is `τ(k+1)` when `N = 24`.
pub fn verify_basic_specialization(datum: &RootDatum, profile: TruncProfile) -> Result<Report> {
    let order = profile.delta_cap as usize;
    let r = datum.num_classical_positive() as u32;
    let n_dim = datum.classical_dimension() as u32;
    let (slices, cap) = h_rho_slices(datum, profile)?;
    let deformed = euler_product(n_dim, Deform::WithU, Direction::Direct, order);
    let plain = euler_product(n_dim, Deform::WithoutU, Direction::Direct, order);
    let scale = QPoly::one_minus_u_pow(r);

    let mut product = Check::new("EV(H_rho) = (1-u)^r prod (1-u t^k)^N");
    let mut divisible = Check::new("divisible by (1-u)^r");
    let mut eps = Check::new("quotient = eps_{q,N}");
    let mut at_one = Check::new("quotient at u=1 = eps_{1,N}");
    let mut tau = Check::new("quotient at u=1 = tau(k+1)");
    for k in 0..=order {
        let s = &slices.coeffs()[k];
        product.compare(format!("t^{k}"), s, &(&scale * &deformed.coeffs()[k]));
        let quotient = s.exact_div_pow_one_minus_u(r);
        divisible.ensure(
            format!("t^{k}"),
            quotient.is_ok(),
            quotient.as_ref().err().map(ToString::to_string).unwrap_or_default(),
        );
        let Ok(quotient) = quotient else { continue };
        eps.compare(format!("t^{k}"), &quotient, &epsilon_qn(n_dim, k)?);
        let value = quotient.eval_int(&BigInt::one());
        at_one.compare(format!("t^{k}"), &value, &plain.coeffs()[k].constant_term());
        if n_dim == 24 {
            tau.compare(format!("t^{k}"), &value, &ramanujan_tau(k + 1, order + 1)?);
        }
    }
    let mut rep = report_header("basic-specialization", datum, profile)
        .with_param("r", r)
        .with_param("N", n_dim)
        .with_param("stable_height_cap", cap);
    rep.push(product);
    rep.push(divisible);
    rep.push(eps);
    rep.push(at_one);
    if n_dim == 24 {
        rep.push(tau);
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::build_root_datum;

    #[test]
    fn constant_series() {
        let grid = Grid::new(2, TruncProfile::new(3, 3));
        let one = LatticeSeries::one(&grid);
        let t = ev_specialize(&one);
        assert_eq!(t.coeffs()[0], QPoly::one());
        assert!(t.coeffs()[1..].iter().all(QPoly::is_zero));
    }

    #[test]
    fn a1_first_slice() {
        let a1 = build_root_datum("A1~1").unwrap();
        let (s, _) = h_rho_slices(&a1, TruncProfile::new(2, 6)).unwrap();
        let q = s.coeffs()[1].exact_div_pow_one_minus_u(1).unwrap();
        assert_eq!(q, QPoly::monomial(-3, 1));
    }

    #[test]
    fn too_small_cap_is_refused() {
        let a1 = build_root_datum("A1~1").unwrap();
        let err = h_rho_slices(&a1, TruncProfile::new(4, 1)).unwrap_err();
        assert!(matches!(err, Error::NotStabilized { .. }));
        let (_, cap) = h_rho_slices(&a1, TruncProfile::new(4, 1).adaptive()).unwrap();
        assert!(cap > 1);
    }

    #[test]
    fn a1_and_a2_pass() {
        let a1 = build_root_datum("A1~1").unwrap();
        let r = verify_basic_specialization(&a1, TruncProfile::new(4, 8)).unwrap();
        assert!(r.passed(), "{r}");
        let a2 = build_root_datum("A2~1").unwrap();
        let r = verify_basic_specialization(&a2, TruncProfile::new(2, 8).adaptive()).unwrap();
        assert!(r.passed(), "{r}");
    }
}
