//! The polynomials `H_{λ+ρ}(μ; q)` and the deformed character identities.
//!
//! `Σ_μ H_{λ+ρ}(μ;q) z^{λ+ρ−μ}` is the alternating Weyl sum at `λ+ρ` times
//! `Σ_ν K^∞_q(ν) z^{−ν}`. All series here are graded by `μ ∈ Q₊` with the
//! factor `z^{λ+ρ}` (or `z^λ`, `z^ρ`) stripped.

use std::sync::Arc;

use crate::charseries::character::{dot_terms_in, freudenthal_on, weyl_kac_character_on, weyl_numerator};
use crate::charseries::gk::{compare_series, report_header, root_product_on, ProductMode};
use crate::charseries::lattice::{Grid, LatticeSeries, TruncProfile};
use crate::error::Result;
use crate::poly::QPoly;
use crate::report::{Check, Report};
use crate::rootdata::{RootDatum, Weight};

/// `H_{λ+ρ}(μ; q)` for `μ` in the profile, as the product of the Weyl
/// numerator and the GK product.
pub fn h_poly(datum: &RootDatum, lambda: &Weight, profile: TruncProfile) -> Result<LatticeSeries> {
    h_poly_on(datum, lambda, &Grid::new(datum.dim(), profile))
}

pub fn h_poly_on(datum: &RootDatum, lambda: &Weight, grid: &Arc<Grid>) -> Result<LatticeSeries> {
    let numer = weyl_numerator(datum, lambda, grid)?;
    numer.mul(&root_product_on(datum, grid, ProductMode::Gk))
}

/// `H_{λ+ρ}(μ; q) = Σ_w (−1)^{ℓ(w)} K^∞_q(w∘λ + μ)`, one coefficient at a
/// time.
pub fn h_poly_via_kinfty(datum: &RootDatum, lambda: &Weight, profile: TruncProfile) -> Result<LatticeSeries> {
    let grid = Grid::new(datum.dim(), profile);
    let kinf = root_product_on(datum, &grid, ProductMode::Gk);
    let terms = dot_terms_in(datum, lambda, profile)?;
    let mut out = LatticeSeries::zero(&grid);
    for mu in grid.grades() {
        let mut acc = QPoly::zero();
        for t in &terms {
            let arg = mu - &t.shift;
            if arg.is_nonnegative() {
                let k = kinf.get(&arg);
                if t.sign > 0 {
                    acc += &k;
                } else {
                    acc -= &k;
                }
            }
        }
        out.set(mu, acc)?;
    }
    Ok(out)
}

fn compare_support(check: &mut Check, lhs: &LatticeSeries, rhs: &LatticeSeries) {
    for (i, g) in lhs.grid().grades().iter().enumerate() {
        check.compare(g, &!lhs.at(i).is_zero(), &!rhs.at(i).is_zero());
    }
}

pub(crate) fn lambda_param(lambda: &Weight) -> String {
    let v: Vec<String> = lambda.lambda.iter().map(i64::to_string).collect();
    v.join(",")
}

/// Both constructions of `H_{λ+ρ}` agree.
pub fn verify_h_via_kinfty(datum: &RootDatum, lambda: &Weight, profile: TruncProfile) -> Result<Report> {
    let a = h_poly(datum, lambda, profile)?;
    let b = h_poly_via_kinfty(datum, lambda, profile)?;
    let mut check = Check::new("numerator*gk=alternating-kinf");
    compare_series(&mut check, &a, &b);
    let mut r = report_header("h-via-kinfty", datum, profile).with_param("lambda", lambda_param(lambda));
    r.push(check);
    Ok(r)
}

/// `χ_q(V(ρ)) = z^ρ ∏ (1 − u z^{−α})^{mult α}`, and its value at `u = −1`
/// is the character of `V(ρ)`.
pub fn chi_q_rho_check(datum: &RootDatum, profile: TruncProfile) -> Result<Report> {
    let grid = Grid::new(datum.dim(), profile);
    let zero = Weight::zero(datum.dim());
    let rho = datum.rho();
    let h = h_poly_on(datum, &zero, &grid)?;
    let cs = root_product_on(datum, &grid, ProductMode::Cs);
    let mut r = report_header("cs-rho", datum, profile);
    let mut a = Check::new("H_rho=product");
    compare_series(&mut a, &h, &cs);
    r.push(a);
    let at_minus_one = h.eval_int(-1);
    let mut b = Check::new("u=-1 vs Weyl-Kac");
    compare_series(&mut b, &at_minus_one, &weyl_kac_character_on(datum, &rho, &grid)?);
    r.push(b);
    let mut c = Check::new("u=-1 vs Freudenthal");
    compare_series(&mut c, &at_minus_one, &freudenthal_on(datum, &rho, &grid));
    r.push(c);
    Ok(r)
}

/// Everything needed for the deformed Casselman-Shalika checks at `λ`.
struct CsData {
    h: LatticeSeries,
    h_rho: LatticeSeries,
    m_lambda: LatticeSeries,
    m_rho: LatticeSeries,
    m_shifted: LatticeSeries,
}

fn cs_data(datum: &RootDatum, lambda: &Weight, grid: &Arc<Grid>) -> Result<CsData> {
    let rho = datum.rho();
    Ok(CsData {
        h: h_poly_on(datum, lambda, grid)?,
        h_rho: root_product_on(datum, grid, ProductMode::Cs),
        m_lambda: freudenthal_on(datum, lambda, grid),
        m_rho: freudenthal_on(datum, &rho, grid),
        m_shifted: freudenthal_on(datum, &(lambda + &rho), grid),
    })
}

fn support_checks(r: &mut Report, d: &CsData) -> Result<()> {
    let mut law = Check::new("H!=0 iff weight of V(lambda+rho)");
    compare_support(&mut law, &d.h, &d.m_shifted);
    r.push(law);
    let tensor = d.m_lambda.mul(&d.m_rho)?;
    let mut eq = Check::new("supp V(lambda)xV(rho) = supp V(lambda+rho)");
    compare_support(&mut eq, &tensor, &d.m_shifted);
    r.push(eq);
    Ok(())
}

/// `χ_q(V(λ+ρ)) = χ(V(λ)) χ_q(V(ρ))`, its evaluations at `u = 0` and
/// `u = −1`, and the two support statements. Multiplicities come from
/// Freudenthal's recursion; the Weyl-Kac quotient is checked against it.
pub fn verify_cs(datum: &RootDatum, lambda: &Weight, profile: TruncProfile) -> Result<Report> {
    let grid = Grid::new(datum.dim(), profile);
    let d = cs_data(datum, lambda, &grid)?;
    let mut r = report_header("cs-general", datum, profile).with_param("lambda", lambda_param(lambda));

    let mut wk = Check::new("Weyl-Kac=Freudenthal");
    compare_series(&mut wk, &weyl_kac_character_on(datum, lambda, &grid)?, &d.m_lambda);
    r.push(wk);

    let mut prod = Check::new("H=chi(V(lambda))*H_rho");
    compare_series(&mut prod, &d.h, &d.m_lambda.mul(&d.h_rho)?);
    r.push(prod);

    let mut inf = Check::new("u=0 gives dim V(lambda)");
    compare_series(&mut inf, &d.h.eval_int(0), &d.m_lambda);
    r.push(inf);

    let mut minus = Check::new("u=-1 gives V(lambda)xV(rho)");
    compare_series(&mut minus, &d.h.eval_int(-1), &d.m_lambda.mul(&d.m_rho)?);
    r.push(minus);

    support_checks(&mut r, &d)?;
    Ok(r)
}

/// Only the support statements of [`verify_cs`].
pub fn verify_support_law(datum: &RootDatum, lambda: &Weight, profile: TruncProfile) -> Result<Report> {
    let grid = Grid::new(datum.dim(), profile);
    let d = cs_data(datum, lambda, &grid)?;
    let mut r = report_header("support-law", datum, profile).with_param("lambda", lambda_param(lambda));
    support_checks(&mut r, &d)?;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_root_datum, RootVec};

    fn rv(v: &[i64]) -> RootVec {
        RootVec(v.to_vec())
    }

    #[test]
    fn h_rho_small_values() {
        let a1 = build_root_datum("A1~1").unwrap();
        let p = TruncProfile::new(3, 6);
        let h = h_poly(&a1, &Weight::zero(2), p).unwrap();
        assert_eq!(h.get(&rv(&[0, 0])), QPoly::one());
        let h_a0 = h.get(&rv(&[1, 0]));
        assert_eq!(h_a0, QPoly::monomial(-1, 1));
        assert_eq!(h_a0.at_q_one(), (-1).into());
        assert_eq!(h_a0.at_q_infinity(), 0.into());
        assert_eq!(h_a0.at_q_minus_one(), 1.into());
    }

    /// At `u = 1`, `H_{λ+ρ}` is the signed indicator of the dot orbit.
    #[test]
    fn h_at_one_is_orbit_indicator() {
        let a1 = build_root_datum("A1~1").unwrap();
        let p = TruncProfile::new(6, 8);
        for lambda in [a1.weight(&[0, 0]).unwrap(), a1.fundamental(0), a1.weight(&[1, 2]).unwrap()] {
            let h = h_poly(&a1, &lambda, p).unwrap().eval_int(1);
            let mut expected = LatticeSeries::zero(h.grid());
            for t in dot_terms_in(&a1, &lambda, p).unwrap() {
                expected.set(&t.shift, QPoly::constant(t.sign)).unwrap();
            }
            assert_eq!(h, expected);
        }
    }

    #[test]
    fn identities_hold_small() {
        let a1 = build_root_datum("A1~1").unwrap();
        let p = TruncProfile::new(3, 6);
        assert!(chi_q_rho_check(&a1, p).unwrap().passed());
        for lambda in [Weight::zero(2), a1.fundamental(0), a1.fundamental(1)] {
            assert!(verify_h_via_kinfty(&a1, &lambda, p).unwrap().passed());
            assert!(verify_cs(&a1, &lambda, p).unwrap().passed());
        }
        let a2 = build_root_datum("A2~1").unwrap();
        let p2 = TruncProfile::new(2, 4);
        assert!(chi_q_rho_check(&a2, p2).unwrap().passed());
        assert!(verify_cs(&a2, &a2.fundamental(1), p2).unwrap().passed());
    }
}
