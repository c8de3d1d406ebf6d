//! The correction factor `A` for simply-laced classical types, with
//! `t = z^δ`:
//!
//! ```text
//! A = ∏_i ∏_{j≥1} (1 − u^{d_i} t^j) / (1 − u^{d_i+1} t^j)
//!   = Σ_{p ∈ P(n)} Q(p) t^{|p|}
//! ```
//!
//! where `d_i` are the exponents and `Q` multiplies, over components `i`
//! and part sizes `j` present with multiplicity `m_j`, the factor
//! `(1 − q) q^{−(d_i+1) m_j} = (u − 1) u^{(d_i+1) m_j − 1}`.

use crate::error::{Error, Result};
use crate::partitions::{enumerate_multipartitions, MultiPartition};
use crate::poly::QPoly;
use crate::qseries::TSeries;
use crate::report::{Check, Report};
use crate::rootdata::{Family, RootDatum};

fn require_simply_laced(datum: &RootDatum) -> Result<()> {
    match datum.family() {
        Family::A | Family::D | Family::E => Ok(()),
        #[allow(unreachable_patterns)]
        _ => Err(Error::UnsupportedType(datum.label())),
    }
}

/// The product form to `t^order`.
pub fn correction_product(datum: &RootDatum, order: usize) -> Result<TSeries> {
    require_simply_laced(datum)?;
    let mut s = TSeries::one(order);
    for &d in datum.exponents() {
        let num = QPoly::monomial(1, d as usize);
        let den = QPoly::monomial(1, d as usize + 1);
        for j in 1..=order {
            s.mul_one_minus(&num, j);
            s.div_one_minus(&den, j);
        }
    }
    Ok(s)
}

/// `Q(p)` for a multi-partition whose components are paired with the
/// exponents in order.
pub fn correction_weight(exponents: &[u32], p: &MultiPartition) -> QPoly {
    let u_minus_one = QPoly::from_i64s(&[-1, 1]);
    let mut q = QPoly::one();
    for (part, &d) in p.components().iter().zip(exponents) {
        for (_, m) in part.multiplicities() {
            let e = (d as usize + 1) * m - 1;
            q = &q * &u_minus_one.shift(e);
        }
    }
    q
}

/// The sum form to `t^order`, by enumerating multi-partitions.
pub fn correction_sum(datum: &RootDatum, order: usize) -> Result<TSeries> {
    require_simply_laced(datum)?;
    let n = datum.rank();
    let exps = datum.exponents();
    let coeffs = (0..=order)
        .map(|k| {
            let mut acc = QPoly::zero();
            for p in enumerate_multipartitions(n, k as u32) {
                acc += &correction_weight(exps, &p);
            }
            acc
        })
        .collect();
    Ok(TSeries::from_coeffs(coeffs, order))
}

/// Product form against sum form, coefficient by coefficient.
pub fn verify_correction_factor(datum: &RootDatum, order: usize) -> Result<Report> {
    let prod = correction_product(datum, order)?;
    let sum = correction_sum(datum, order)?;
    let mut check = Check::new("product=sum");
    for k in 0..=order {
        check.compare(format!("t^{k}"), &prod.coeffs()[k], &sum.coeffs()[k]);
    }
    let mut r = Report::new("correction-factor")
        .with_param("type", datum.label())
        .with_param("order", order);
    r.push(check);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Partition;
    use crate::rootdata::build_root_datum;

    #[test]
    fn a1_low_order() {
        let a1 = build_root_datum("A1~1").unwrap();
        let p = correction_product(&a1, 3).unwrap();
        assert_eq!(p.coeffs()[0], QPoly::one());
        assert_eq!(p.coeffs()[1], QPoly::from_i64s(&[0, -1, 1]));
        let single = MultiPartition::new(vec![Partition::new(vec![1])]);
        assert_eq!(correction_weight(&[1], &single), QPoly::from_i64s(&[0, -1, 1]));
    }

    /// One factor `(1 − a t)/(1 − b t)` expands to `1 + Σ_m b^{m−1}(b − a) t^m`.
    #[test]
    fn single_factor_expansion() {
        for d in 1..4usize {
            let a = QPoly::monomial(1, d);
            let b = QPoly::monomial(1, d + 1);
            let mut s = TSeries::one(6);
            s.mul_one_minus(&a, 1);
            s.div_one_minus(&b, 1);
            for m in 1..=6u32 {
                let expect = &b.pow(m - 1) * &(&b - &a);
                assert_eq!(s.coeffs()[m as usize], expect);
            }
        }
    }

    #[test]
    fn forms_agree() {
        for label in ["A1~1", "A2~1", "A3~1", "D4~1"] {
            let d = build_root_datum(label).unwrap();
            assert!(verify_correction_factor(&d, 6).unwrap().passed(), "{label}");
        }
    }
}
