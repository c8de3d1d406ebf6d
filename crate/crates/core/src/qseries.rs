//! Truncated power series in `t` with coefficients in `ℤ[u]`, and the
//! deformed partition functions built from them.
//!
//! * `ε_{q,n}(k)`: coefficient of `tᵏ` in `Π_{k≥1} (1 - u tᵏ)ⁿ`, equivalently
//!   the sum of `κ_q` over `n`-component multi-partitions of weight `k`.
//! * `p_{q,n}(k)`: the sum of `(1-u)^{d}` over the same multi-partitions,
//!   equivalently the coefficient of `tᵏ` in `Π_k ((1-u tᵏ)/(1-tᵏ))ⁿ`.
//! * `τ(k)`: coefficient of `t^{k-1}` in `Π (1-tᵏ)^24`.
//!
//! Most quantities are available along two routes, a product expansion and
//! a partition enumeration, and the verifiers compare them.

use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partitions::partition_sums;
use crate::poly::{EvalPoint, QPoly};
use crate::report::{Check, Report};

/// Largest weight for which the enumeration route walks every partition.
pub const ENUMERATION_LIMIT: usize = 60;

/// Default truncation for the identity verifiers.
pub const DEFAULT_IDENTITY_ORDER: usize = 50;

/// Default truncation for the pentagonal and `τ` checks.
pub const DEFAULT_LONG_ORDER: usize = 200;

/// A power series `Σ_{k=0}^{T} a_k tᵏ`, known modulo `t^{T+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TSeries {
    coeffs: Vec<QPoly>,
}

impl TSeries {
    pub fn zero(order: usize) -> Self {
        TSeries {
            coeffs: vec![QPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = QPoly::one();
        s
    }

    /// Builds a series from coefficients `t⁰..t^T`, padding or truncating to
    /// the given order.
    pub fn from_coeffs(mut coeffs: Vec<QPoly>, order: usize) -> Self {
        coeffs.resize(order + 1, QPoly::zero());
        TSeries { coeffs }
    }

    /// Truncation order `T`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[QPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Result<&QPoly> {
        self.coeffs.get(k).ok_or(Error::OrderExceeded {
            requested: k,
            order: self.order(),
        })
    }

    pub fn set_coeff(&mut self, k: usize, c: QPoly) {
        if k < self.coeffs.len() {
            self.coeffs[k] = c;
        }
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs[..=order.min(self.order())].to_vec(), order.min(self.order()))
    }

    /// Multiplication by `tⁿ`.
    pub fn shift(&self, n: usize) -> Self {
        let mut out = Self::zero(self.order());
        for k in n..=self.order() {
            out.coeffs[k] = self.coeffs[k - n].clone();
        }
        out
    }

    /// In place `self ← self · (1 - c·tᵏ)`.
    pub fn mul_one_minus(&mut self, c: &QPoly, k: usize) {
        assert!(k >= 1);
        for m in (k..self.coeffs.len()).rev() {
            if self.coeffs[m - k].is_zero() {
                continue;
            }
            let t = &self.coeffs[m - k] * c;
            self.coeffs[m] -= &t;
        }
    }

    /// In place `self ← self / (1 - c·tᵏ)`.
    pub fn div_one_minus(&mut self, c: &QPoly, k: usize) {
        assert!(k >= 1);
        for m in k..self.coeffs.len() {
            if self.coeffs[m - k].is_zero() {
                continue;
            }
            let t = &self.coeffs[m - k] * c;
            self.coeffs[m] += &t;
        }
    }

    /// Multiplicative inverse by Newton iteration `g ← g(2 - f g)`.
    /// The constant term must be `±1`.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        let inv0 = if *c0 == QPoly::one() {
            QPoly::one()
        } else if *c0 == QPoly::constant(-1) {
            QPoly::constant(-1)
        } else {
            return Err(Error::NonUnitConstant);
        };
        let order = self.order();
        let mut g = TSeries::from_coeffs(vec![inv0], 0);
        let mut prec = 0usize;
        while prec < order {
            let next = (2 * prec + 1).min(order);
            let f = self.truncate(next);
            let g_ext = TSeries::from_coeffs(g.coeffs.clone(), next);
            let fg = &f * &g_ext;
            let two_minus = &(&TSeries::one(next) + &TSeries::one(next)) - &fg;
            g = &g_ext * &two_minus;
            prec = next;
        }
        Ok(TSeries::from_coeffs(g.coeffs, order))
    }

    /// Evaluates every coefficient at a point of `u`.
    pub fn map_eval_int(&self, u: &BigInt) -> Vec<BigInt> {
        self.coeffs.iter().map(|c| c.eval_int(u)).collect()
    }

    pub fn eval(&self, point: &EvalPoint) -> Vec<num_rational::BigRational> {
        self.coeffs.iter().map(|c| c.eval(point)).collect()
    }

    /// `self^n`, truncated.
    pub fn pow(&self, n: u32) -> Self {
        let mut acc = TSeries::one(self.order());
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

impl Add<&TSeries> for &TSeries {
    type Output = TSeries;
    fn add(self, rhs: &TSeries) -> TSeries {
        let order = self.order().min(rhs.order());
        TSeries {
            coeffs: (0..=order).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        }
    }
}

impl Sub<&TSeries> for &TSeries {
    type Output = TSeries;
    fn sub(self, rhs: &TSeries) -> TSeries {
        let order = self.order().min(rhs.order());
        TSeries {
            coeffs: (0..=order).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        }
    }
}

impl Mul<&TSeries> for &TSeries {
    type Output = TSeries;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &TSeries) -> TSeries {
        let order = self.order().min(rhs.order());
        let conv = |k: usize| {
            let mut acc = QPoly::zero();
            for i in 0..=k {
                let a = &self.coeffs[i];
                if a.is_zero() || rhs.coeffs[k - i].is_zero() {
                    continue;
                }
                acc += &(a * &rhs.coeffs[k - i]);
            }
            acc
        };
        let coeffs = if order >= 64 {
            (0..=order).into_par_iter().map(conv).collect()
        } else {
            (0..=order).map(conv).collect()
        };
        TSeries { coeffs }
    }
}

/// Whether the product carries the factor `u` in `(1 - u tᵏ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Deform {
    WithU,
    WithoutU,
}

/// Exponent sign of the product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Direct,
    Inverse,
}

/// `Π_{k=1}^{T} (1 - [u] tᵏ)^{±n}` truncated at `t^T`.
pub fn euler_product(n: u32, deform: Deform, direction: Direction, order: usize) -> TSeries {
    let c = match deform {
        Deform::WithU => QPoly::u(),
        Deform::WithoutU => QPoly::one(),
    };
    let mut s = TSeries::one(order);
    for k in 1..=order {
        for _ in 0..n {
            match direction {
                Direction::Direct => s.mul_one_minus(&c, k),
                Direction::Inverse => s.div_one_minus(&c, k),
            }
        }
    }
    s
}

/// `Π_k (1 + (1-u)(tᵏ + t^{2k} + …))ⁿ`, built factor by factor from the
/// geometric expansion.
#[allow(clippy::needless_range_loop)]
pub fn deformed_partition_product(n: u32, order: usize) -> TSeries {
    let one_minus_u = QPoly::one_minus_u();
    let mut acc = TSeries::one(order);
    for k in 1..=order {
        for _ in 0..n {
            // acc·(1 + (1-u) Σ_{j≥1} t^{jk}): running tail sums per residue class
            let mut tail = vec![QPoly::zero(); order + 1];
            for m in k..=order {
                tail[m] = &tail[m - k] + &acc.coeffs[m - k];
            }
            for m in k..=order {
                if !tail[m].is_zero() {
                    acc.coeffs[m] += &(&tail[m] * &one_minus_u);
                }
            }
        }
    }
    acc
}

/// `Σ_k ε_{q,n}(k) tᵏ` through the multi-partition enumeration: every
/// partition of weight `≤ order` is visited once, its `κ_q` summed per
/// weight, and the `n` components are combined.
pub fn epsilon_series_enumerated(n: u32, order: usize) -> Result<TSeries> {
    check_enumeration_order(order)?;
    let sums = partition_sums(order as u32);
    Ok(TSeries::from_coeffs(sums.kappa, order).pow(n))
}

/// `Σ_k p_{q,n}(k) tᵏ` through the multi-partition enumeration.
pub fn p_series_enumerated(n: u32, order: usize) -> Result<TSeries> {
    check_enumeration_order(order)?;
    let sums = partition_sums(order as u32);
    Ok(TSeries::from_coeffs(sums.d_weight, order).pow(n))
}

/// Multi-partition counts `p_{∞,n}(k)` by counting partitions.
pub fn multipartition_counts_enumerated(n: u32, order: usize) -> Result<Vec<BigInt>> {
    check_enumeration_order(order)?;
    let sums = partition_sums(order as u32);
    let single = TSeries::from_coeffs(sums.count.into_iter().map(QPoly::from).collect(), order);
    Ok(single.pow(n).coeffs.iter().map(QPoly::constant_term).collect())
}

fn check_enumeration_order(order: usize) -> Result<()> {
    if order > ENUMERATION_LIMIT {
        return Err(Error::Invalid(format!(
            "enumeration route limited to weight {ENUMERATION_LIMIT}, asked for {order}"
        )));
    }
    Ok(())
}

/// `ε_{q,n}(k)`. Computed from the product and, for `k ≤ ENUMERATION_LIMIT`,
/// also by enumeration; a disagreement is an error.
pub fn epsilon_qn(n: u32, k: usize) -> Result<QPoly> {
    if n == 0 {
        return Err(Error::Invalid("n must be at least 1".into()));
    }
    let product = euler_product(n, Deform::WithU, Direction::Direct, k).coeff(k)?.clone();
    if k <= ENUMERATION_LIMIT {
        let enumerated = epsilon_series_enumerated(n, k)?.coeff(k)?.clone();
        if enumerated != product {
            return Err(Error::Mismatch {
                what: "epsilon routes",
                at: format!("n={n}, k={k}"),
                lhs: product.to_string(),
                rhs: enumerated.to_string(),
            });
        }
    }
    Ok(product)
}

/// `p_{q,n}(k)`, cross-checked the same way as [`epsilon_qn`].
pub fn p_qn(n: u32, k: usize) -> Result<QPoly> {
    if n == 0 {
        return Err(Error::Invalid("n must be at least 1".into()));
    }
    let mut product = euler_product(n, Deform::WithU, Direction::Direct, k);
    for j in 1..=k {
        for _ in 0..n {
            product.div_one_minus(&QPoly::one(), j);
        }
    }
    let product = product.coeff(k)?.clone();
    if k <= ENUMERATION_LIMIT {
        let enumerated = p_series_enumerated(n, k)?.coeff(k)?.clone();
        if enumerated != product {
            return Err(Error::Mismatch {
                what: "p_qn routes",
                at: format!("n={n}, k={k}"),
                lhs: product.to_string(),
                rhs: enumerated.to_string(),
            });
        }
    }
    Ok(product)
}

/// Coefficient of `tᵏ` in `Π (1 - tᵏ)`, from the pentagonal number theorem:
/// `(-1)^m` when `k = m(3m ± 1)/2`, else `0`.
pub fn pentagonal_epsilon(k: u64) -> i64 {
    let mut m: u64 = 0;
    loop {
        let lo = m * (3 * m).saturating_sub(1) / 2;
        if lo > k {
            return 0;
        }
        let hi = m * (3 * m + 1) / 2;
        if lo == k || hi == k {
            return if m.is_multiple_of(2) { 1 } else { -1 };
        }
        m += 1;
    }
}

/// Ramanujan's `τ(k)` as the coefficient of `t^{k-1}` in `Π (1 - tᵏ)^24`,
/// with the product truncated at `t^order`.
pub fn ramanujan_tau(k: usize, order: usize) -> Result<BigInt> {
    if k == 0 {
        return Err(Error::Invalid("tau is indexed from 1".into()));
    }
    if k - 1 > order {
        return Err(Error::OrderExceeded {
            requested: k,
            order: order + 1,
        });
    }
    let s = euler_product(24, Deform::WithoutU, Direction::Direct, k - 1);
    Ok(s.coeff(k - 1)?.constant_term())
}

/// `p_q(k)` values for `k ≤ order`: by enumeration when it is cheap, else by
/// the geometric product.
fn p_series(n: u32, order: usize) -> (TSeries, &'static str) {
    if order <= ENUMERATION_LIMIT {
        (
            p_series_enumerated(n, order).expect("within enumeration limit"),
            "enumeration",
        )
    } else {
        (deformed_partition_product(n, order), "product")
    }
}

/// Checks `ε_q(k) - p_q(k) = Σ_{m≥1} (-1)^m {p_q(k - m(3m-1)/2) + p_q(k - m(3m+1)/2)}`
/// for `1 ≤ k ≤ order`.
pub fn verify_single_partition_recurrence(order: usize) -> Report {
    let eps = euler_product(1, Deform::WithU, Direction::Direct, order);
    let (p, source) = p_series(1, order);
    let p_at = |j: i64| -> QPoly {
        if j < 0 {
            QPoly::zero()
        } else {
            p.coeffs[j as usize].clone()
        }
    };
    let mut check = Check::new("eps_q(k) - p_q(k) = pentagonal sum");
    for k in 1..=order as i64 {
        let lhs = &eps.coeffs[k as usize] - &p.coeffs[k as usize];
        let mut rhs = QPoly::zero();
        let mut m = 1i64;
        while m * (3 * m - 1) / 2 <= k {
            let term = &p_at(k - m * (3 * m - 1) / 2) + &p_at(k - m * (3 * m + 1) / 2);
            if m % 2 == 0 {
                rhs += &term;
            } else {
                rhs -= &term;
            }
            m += 1;
        }
        check.compare(format!("k={k}"), &lhs, &rhs);
    }
    let mut r = Report::new("eps-recurrence")
        .with_param("t_order", order)
        .with_param("p_source", source);
    r.push(check);
    r
}

/// Checks `ε_{q,n}(k) = Σ_r ε_{1,n}(r) p_{q,n}(k-r)` for `k ≤ order`, and the
/// `u = 0` form `0 = Σ_r ε_{1,n}(r) p_{∞,n}(k-r)` for `1 ≤ k ≤ order`.
pub fn verify_multi_recurrence(n: u32, order: usize) -> Report {
    let eps_q = euler_product(n, Deform::WithU, Direction::Direct, order);
    let eps_1 = euler_product(n, Deform::WithoutU, Direction::Direct, order);
    let (p, source) = p_series(n, order);
    let counts: Vec<BigInt> = if order <= ENUMERATION_LIMIT {
        multipartition_counts_enumerated(n, order).expect("within enumeration limit")
    } else {
        euler_product(n, Deform::WithoutU, Direction::Inverse, order)
            .coeffs
            .iter()
            .map(QPoly::constant_term)
            .collect()
    };

    let mut deformed = Check::new("eps_{q,n}(k) = sum eps_{1,n}(r) p_{q,n}(k-r)");
    let mut limit = Check::new("0 = sum eps_{1,n}(r) p_{inf,n}(k-r)");
    let mut count_match = Check::new("p_{q,n}(k) at u=0 is the multi-partition count");
    for k in 0..=order {
        let mut rhs = QPoly::zero();
        let mut classical = BigInt::zero();
        for r in 0..=k {
            let e = eps_1.coeffs[r].constant_term();
            if e.is_zero() {
                continue;
            }
            rhs.add_scaled(&p.coeffs[k - r], &e);
            classical += &e * &counts[k - r];
        }
        deformed.compare(format!("k={k}"), &eps_q.coeffs[k], &rhs);
        count_match.compare(format!("k={k}"), &p.coeffs[k].at_q_infinity(), &counts[k]);
        if k >= 1 {
            limit.compare(format!("k={k}"), &classical, &BigInt::zero());
        }
    }
    let mut r = Report::new("multi-eps-recurrence")
        .with_param("n", n)
        .with_param("t_order", order)
        .with_param("p_source", source);
    r.push(deformed);
    r.push(limit);
    r.push(count_match);
    r
}

/// `Σ_{m=0}^{T} (u;t)_m / (t;t)_m · t^m`, every `(t;t)_m` inverted as a
/// truncated series.
pub fn q_pochhammer_sum(order: usize) -> Result<TSeries> {
    let mut total = TSeries::zero(order);
    let mut numer = TSeries::one(order);
    let mut denom = TSeries::one(order);
    for m in 0..=order {
        if m > 0 {
            // (u;t)_m = (u;t)_{m-1} (1 - u t^{m-1})
            if m == 1 {
                let f = QPoly::one_minus_u();
                numer = TSeries::from_coeffs(numer.coeffs.iter().map(|c| c * &f).collect(), order);
            } else {
                numer.mul_one_minus(&QPoly::u(), m - 1);
            }
            denom.mul_one_minus(&QPoly::one(), m);
        }
        let rest = order - m;
        let inv = denom.truncate(rest).reciprocal()?;
        let term = &numer.truncate(rest) * &inv;
        for k in 0..=rest {
            total.coeffs[k + m] += &term.coeffs[k];
        }
    }
    Ok(total)
}

/// Checks the `q`-binomial sum against `Σ p_q(k) tᵏ`, and its `u = 0`
/// limit `Σ tᵐ/(t;t)_m = Σ p(m) tᵐ`.
pub fn verify_q_binomial(order: usize) -> Result<Report> {
    let lhs = q_pochhammer_sum(order)?;
    let rhs = deformed_partition_product(1, order);
    let partitions = euler_product(1, Deform::WithoutU, Direction::Inverse, order);

    let mut deformed = Check::new("sum (u;t)_m/(t;t)_m t^m = sum p_q(k) t^k");
    let mut limit = Check::new("sum t^m/(t;t)_m = sum p(m) t^m");
    for k in 0..=order {
        deformed.compare(format!("k={k}"), &lhs.coeffs[k], &rhs.coeffs[k]);
    }

    // u = 0 side computed on its own: numerators collapse to 1
    let mut denom = TSeries::one(order);
    let mut limit_sum = TSeries::zero(order);
    for m in 0..=order {
        if m > 0 {
            denom.mul_one_minus(&QPoly::one(), m);
        }
        let inv = denom.truncate(order - m).reciprocal()?;
        for k in 0..=order - m {
            limit_sum.coeffs[k + m] += &inv.coeffs[k];
        }
    }
    for k in 0..=order {
        limit.compare(
            format!("k={k}"),
            &limit_sum.coeffs[k].constant_term(),
            &partitions.coeffs[k].constant_term(),
        );
        limit.compare(
            format!("k={k} (u=0 of deformed sum)"),
            &lhs.coeffs[k].at_q_infinity(),
            &partitions.coeffs[k].constant_term(),
        );
    }
    let mut r = Report::new("q-binomial").with_param("t_order", order);
    r.push(deformed);
    r.push(limit);
    Ok(r)
}

/// Checks `ε_{1,1}(k)` (product at `u = 1`) against the pentagonal closed
/// form for `k ≤ order`.
pub fn verify_pentagonal(order: usize) -> Report {
    let eps = euler_product(1, Deform::WithU, Direction::Direct, order);
    let plain = euler_product(1, Deform::WithoutU, Direction::Direct, order);
    let mut check = Check::new("eps_1(k) = pentagonal closed form");
    for k in 0..=order {
        let closed = BigInt::from(pentagonal_epsilon(k as u64));
        check.compare(format!("k={k}"), &eps.coeffs[k].at_q_one(), &closed);
        check.compare(format!("k={k} (plain)"), &plain.coeffs[k].constant_term(), &closed);
    }
    let mut r = Report::new("pentagonal").with_param("t_order", order);
    r.push(check);
    r
}

/// `τ(1..=count)` in one pass.
pub fn tau_values(count: usize) -> Vec<BigInt> {
    if count == 0 {
        return Vec::new();
    }
    euler_product(24, Deform::WithoutU, Direction::Direct, count - 1)
        .coeffs
        .iter()
        .map(QPoly::constant_term)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_multipartitions;

    fn p(cs: &[i64]) -> QPoly {
        QPoly::from_i64s(cs)
    }

    #[test]
    fn euler_product_single() {
        let s = euler_product(1, Deform::WithU, Direction::Direct, 6);
        let expected = [
            p(&[1]),
            p(&[0, -1]),
            p(&[0, -1]),
            p(&[0, -1, 1]),
            p(&[0, -1, 1]),
            p(&[0, -1, 2]),
            p(&[0, -1, 2, -1]),
        ];
        assert_eq!(s.coeffs(), &expected);
        let tau = euler_product(24, Deform::WithoutU, Direction::Direct, 2);
        assert_eq!(tau.coeffs()[2], QPoly::constant(252));
    }

    #[test]
    fn deformed_functions_at_small_arguments() {
        assert_eq!(epsilon_qn(24, 2).unwrap(), p(&[0, -24, 276]));
        assert_eq!(epsilon_qn(7, 0).unwrap(), QPoly::one());
        assert_eq!(epsilon_qn(1, 3).unwrap(), p(&[0, -1, 1]));
        let omu = QPoly::one_minus_u();
        let p24_2 = &QPoly::one_minus_u_pow(2).scale(&276.into()) + &omu.scale(&48.into());
        assert_eq!(p_qn(24, 2).unwrap(), p24_2);
        assert_eq!(p_qn(24, 1).unwrap(), omu.scale(&24.into()));
        let p1_3 = &omu.scale(&2.into()) + &QPoly::one_minus_u_pow(2);
        assert_eq!(p_qn(1, 3).unwrap(), p1_3);
        assert!(epsilon_qn(0, 3).is_err());
    }

    /// Literal sum of κ_q and (1-u)^d over every multi-partition.
    #[test]
    fn routes_agree_with_literal_enumeration() {
        for n in 1..=3usize {
            for k in 0..=7u32 {
                let (mut eps, mut pq) = (QPoly::zero(), QPoly::zero());
                for m in enumerate_multipartitions(n, k) {
                    eps += &m.kappa_q();
                    pq += &m.d_weight();
                }
                assert_eq!(epsilon_qn(n as u32, k as usize).unwrap(), eps, "eps n={n} k={k}");
                assert_eq!(p_qn(n as u32, k as usize).unwrap(), pq, "p n={n} k={k}");
            }
        }
    }

    #[test]
    fn enumeration_and_product_agree_up_to_30() {
        for n in [1u32, 2, 3, 24] {
            let prod = euler_product(n, Deform::WithU, Direction::Direct, 30);
            let enumd = epsilon_series_enumerated(n, 30).unwrap();
            assert_eq!(prod, enumd, "n={n}");
            assert_eq!(deformed_partition_product(n, 30), p_series_enumerated(n, 30).unwrap());
        }
    }

    #[test]
    fn epsilon_degree_and_constant_term() {
        for n in [1u32, 2, 5] {
            let s = euler_product(n, Deform::WithU, Direction::Direct, 25);
            for (k, c) in s.coeffs().iter().enumerate().skip(1) {
                assert!(c.degree().is_none_or(|d| d <= k));
                assert!(c.constant_term().is_zero());
            }
        }
    }

    #[test]
    fn pentagonal_values() {
        assert_eq!(pentagonal_epsilon(0), 1);
        assert_eq!(pentagonal_epsilon(1), -1);
        assert_eq!(pentagonal_epsilon(2), -1);
        assert_eq!(pentagonal_epsilon(3), 0);
        assert_eq!(pentagonal_epsilon(5), 1);
        assert_eq!(pentagonal_epsilon(7), 1);
        assert_eq!(pentagonal_epsilon(12), -1);
        assert!(verify_pentagonal(200).passed());
    }

    #[test]
    fn tau_values_and_bounds() {
        assert_eq!(ramanujan_tau(1, 10).unwrap(), BigInt::from(1));
        assert_eq!(ramanujan_tau(2, 10).unwrap(), BigInt::from(-24));
        assert_eq!(ramanujan_tau(3, 10).unwrap(), BigInt::from(252));
        assert_eq!(ramanujan_tau(11, 10).unwrap(), BigInt::from(534612));
        assert!(matches!(ramanujan_tau(12, 10), Err(Error::OrderExceeded { .. })));
        assert_eq!(tau_values(4), vec![1.into(), (-24).into(), 252.into(), (-1472).into()]);
    }

    #[test]
    fn reciprocal_inverts() {
        let f = euler_product(1, Deform::WithU, Direction::Direct, 20);
        let g = f.reciprocal().unwrap();
        assert_eq!(&f * &g, TSeries::one(20));
        let mut bad = TSeries::one(3);
        bad.set_coeff(0, QPoly::constant(2));
        assert_eq!(bad.reciprocal(), Err(Error::NonUnitConstant));
    }

    #[test]
    fn recurrences_small() {
        let r = verify_single_partition_recurrence(2);
        assert!(r.passed());
        // k = 2: (-u) - (2 - 2u) = u - 2
        let eps = euler_product(1, Deform::WithU, Direction::Direct, 2);
        let pq = p_qn(1, 2).unwrap();
        assert_eq!(&eps.coeffs()[2] - &pq, p(&[-2, 1]));
        assert!(verify_multi_recurrence(24, 6).passed());
        assert!(verify_multi_recurrence(1, 10).passed());
    }

    #[test]
    fn q_binomial_low_order() {
        let s = q_pochhammer_sum(8).unwrap();
        assert_eq!(s.coeffs()[0], QPoly::one());
        assert_eq!(s.coeffs()[1], QPoly::one_minus_u());
        assert_eq!(s.coeffs()[5].at_q_infinity(), BigInt::from(7));
        assert!(verify_q_binomial(12).unwrap().passed());
    }
}
