//! Weight multiplicities of integrable highest-weight modules, two ways.
//!
//! [`weyl_kac_character`] divides the alternating Weyl numerator by the
//! denominator `∏ (1 − z^{−α})^{mult α}`. [`freudenthal`] runs Freudenthal's
//! recursion directly on root coordinates and shares no code with the
//! series path, so it serves as the oracle for every character claim.
//!
//! Both return `m(β) = dim V(λ)_{λ−β}` as constant coefficients of a
//! [`LatticeSeries`] graded by `β ∈ Q₊`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::charseries::gk::{root_product_on, ProductMode};
use crate::charseries::lattice::{Grid, LatticeSeries, TruncProfile};
use crate::error::Result;
use crate::poly::QPoly;
use crate::rootdata::{RootDatum, RootVec, Weight};
use crate::weyl::{enumerate_dot_terms_in, DotBound, DotTerm};

fn box_bound(p: TruncProfile) -> DotBound {
    DotBound::Box {
        delta_cap: p.delta_cap,
        height_cap: p.height_cap,
    }
}

/// The terms `((−1)^{ℓ(w)}, λ + ρ − w(λ+ρ))` inside the profile.
pub fn dot_terms_in(datum: &RootDatum, lambda: &Weight, profile: TruncProfile) -> Result<Vec<DotTerm>> {
    enumerate_dot_terms_in(datum, lambda, box_bound(profile))
}

/// `Σ_w (−1)^{ℓ(w)} z^{−(λ+ρ−w(λ+ρ))}`, graded by the shift.
pub fn weyl_numerator(datum: &RootDatum, lambda: &Weight, grid: &Arc<Grid>) -> Result<LatticeSeries> {
    let mut s = LatticeSeries::zero(grid);
    for t in dot_terms_in(datum, lambda, grid.profile())? {
        s.add_at(&t.shift, &QPoly::constant(t.sign));
    }
    Ok(s)
}

/// `dim V(λ)_{λ−β}` for `β` in the profile, by graded division of the
/// Weyl-Kac numerator by the denominator.
pub fn weyl_kac_character(datum: &RootDatum, lambda: &Weight, profile: TruncProfile) -> Result<LatticeSeries> {
    let grid = Grid::new(datum.dim(), profile);
    weyl_kac_character_on(datum, lambda, &grid)
}

pub fn weyl_kac_character_on(datum: &RootDatum, lambda: &Weight, grid: &Arc<Grid>) -> Result<LatticeSeries> {
    let numer = weyl_numerator(datum, lambda, grid)?;
    let denom = root_product_on(datum, grid, ProductMode::Denominator);
    numer.div(&denom)
}

/// `dim V(λ)_{λ−β}` by Freudenthal's recursion, with the invariant form
/// normalized by `(α_i, α_j) = A_{ij}`:
///
/// ```text
/// (2(λ+ρ, β) − (β, β)) m(β) = 2 Σ_{α>0} mult α Σ_{k≥1} ((λ, α) − (β, α) + k(α, α)) m(β − kα)
/// ```
pub fn freudenthal(datum: &RootDatum, lambda: &Weight, profile: TruncProfile) -> LatticeSeries {
    let grid = Grid::new(datum.dim(), profile);
    freudenthal_on(datum, lambda, &grid)
}

pub fn freudenthal_on(datum: &RootDatum, lambda: &Weight, grid: &Arc<Grid>) -> LatticeSeries {
    assert!(lambda.is_dominant(), "Freudenthal needs a dominant weight");
    let p = grid.profile();
    let roots = datum.positive_roots_in(p.delta_cap, p.height_cap);
    let lam = |a: &RootVec| -> i64 { a.0.iter().zip(&lambda.lambda).map(|(x, l)| x * l).sum() };
    let mut m: Vec<BigInt> = Vec::with_capacity(grid.len());
    for beta in grid.grades() {
        if beta.is_zero() {
            m.push(BigInt::from(1));
            continue;
        }
        let c = 2 * (lam(beta) + beta.height()) - datum.inner(beta, beta);
        let mut rhs = BigInt::zero();
        for (alpha, mult) in &roots {
            if !alpha.le_componentwise(beta) {
                continue;
            }
            let base = lam(alpha) - datum.inner(beta, alpha);
            let aa = datum.inner(alpha, alpha);
            let mut k = 1i64;
            let mut rest = beta - alpha;
            while rest.is_nonnegative() {
                let j = grid.position(&rest).expect("downward closed");
                if !m[j].is_zero() {
                    rhs += &m[j] * BigInt::from((base + k * aa) * (*mult as i64));
                }
                k += 1;
                rest = &rest - alpha;
            }
        }
        rhs *= 2;
        if c == 0 {
            assert!(rhs.is_zero(), "Freudenthal: zero Casimir gap with nonzero sum at {beta}");
            m.push(BigInt::zero());
        } else {
            let c = BigInt::from(c);
            assert!((&rhs % &c).is_zero(), "Freudenthal: inexact division at {beta}");
            m.push(rhs / c);
        }
    }
    let mut s = LatticeSeries::zero(grid);
    for (g, v) in grid.grades().iter().zip(m) {
        if !v.is_zero() {
            s.set(g, QPoly::constant(v)).expect("grade of the grid");
        }
    }
    s
}
