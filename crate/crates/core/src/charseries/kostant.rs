//! Kostant's partition function and its two deformations.
//!
//! `K^∞_q` and `K^1_q` are the coefficients of the GK product and of the
//! inverse CS product. Kostant's `K` itself is recomputed here by direct
//! vector-partition counting, sharing nothing with the series code, and
//! serves as the oracle for every identity in this module.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::charseries::character::{dot_terms_in, freudenthal_on};
use crate::charseries::gk::{report_header, root_product_on, ProductMode};
use crate::charseries::hpoly::{h_poly_on, lambda_param};
use crate::charseries::lattice::{Grid, LatticeSeries, TruncProfile};
use crate::error::Result;
use crate::poly::QPoly;
use crate::report::{Check, Report};
use crate::rootdata::{build_root_datum, RootDatum, RootVec, Weight};
use crate::weyl::DotTerm;

/// Vector partitions of `β` into positive roots, each root repeated by its
/// multiplicity (the copies count as distinct parts).
pub struct KostantOracle {
    roots: Vec<RootVec>,
    memo: HashMap<(RootVec, usize), BigInt>,
}

impl KostantOracle {
    /// Roots are those inside `profile`, which is enough for any `β` inside
    /// it.
    pub fn new(datum: &RootDatum, profile: TruncProfile) -> Self {
        let mut roots = Vec::new();
        for (alpha, mult) in datum.positive_roots_in(profile.delta_cap, profile.height_cap) {
            for _ in 0..mult {
                roots.push(alpha.clone());
            }
        }
        roots.sort();
        KostantOracle {
            roots,
            memo: HashMap::new(),
        }
    }

    /// `K(β)`; zero off `Q₊`.
    pub fn count(&mut self, beta: &RootVec) -> BigInt {
        if !beta.is_nonnegative() {
            return BigInt::zero();
        }
        self.count_from(beta, 0)
    }

    fn count_from(&mut self, beta: &RootVec, start: usize) -> BigInt {
        if beta.is_zero() {
            return BigInt::one();
        }
        if start >= self.roots.len() {
            return BigInt::zero();
        }
        let key = (beta.clone(), start);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut total = self.count_from(beta, start + 1);
        let r = self.roots[start].clone();
        if r.le_componentwise(beta) {
            total += self.count_from(&(beta - &r), start);
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// `K` on every grade of `grid`, from the oracle.
fn kostant_on(datum: &RootDatum, grid: &std::sync::Arc<Grid>) -> Vec<BigInt> {
    let mut oracle = KostantOracle::new(datum, grid.profile());
    grid.grades().iter().map(|g| oracle.count(g)).collect()
}

fn at_or_zero(s: &LatticeSeries, beta: &RootVec) -> QPoly {
    if beta.is_nonnegative() {
        s.get(beta)
    } else {
        QPoly::zero()
    }
}

/// `Σ_{0<ν<β} K^∞_q(ν) K^1_q(β−ν)`, both `ν` and `β−ν` nonzero.
fn inner_convolution(kinf: &LatticeSeries, k1: &LatticeSeries, beta: &RootVec) -> QPoly {
    let mut acc = QPoly::zero();
    for (nu, a) in kinf.terms() {
        if nu.is_zero() || nu == beta || !nu.le_componentwise(beta) {
            continue;
        }
        let b = k1.get(&(beta - nu));
        if !b.is_zero() {
            acc += &(a * &b);
        }
    }
    acc
}

/// `Σ_w (−1)^{ℓ(w)} f(w∘λ + μ)` for every `μ` of the grid.
fn alternating(terms: &[DotTerm], f: &LatticeSeries) -> LatticeSeries {
    let mut out = LatticeSeries::zero(f.grid());
    for (i, mu) in f.grid().grades().iter().enumerate() {
        let mut acc = QPoly::zero();
        for t in terms {
            let v = at_or_zero(f, &(mu - &t.shift));
            if t.sign > 0 {
                acc += &v;
            } else {
                acc -= &v;
            }
        }
        if !acc.is_zero() {
            out.set(&f.grid().grades()[i], acc).expect("grade of the grid");
        }
    }
    out
}

/// `Σ_w (−1)^{ℓ(w)} K^1_q(w∘λ + μ)` for `μ` in the profile.
pub fn alternating_k1_sum(datum: &RootDatum, lambda: &Weight, profile: TruncProfile) -> Result<LatticeSeries> {
    let grid = Grid::new(datum.dim(), profile);
    let k1 = root_product_on(datum, &grid, ProductMode::InverseCs);
    Ok(alternating(&dot_terms_in(datum, lambda, profile)?, &k1))
}

/// `K^∞_q · K^1_q = K`, and both deformations reduce to `K` (at `u = 0`
/// and `u = 1` respectively).
pub fn verify_kostant_conv(datum: &RootDatum, profile: TruncProfile) -> Result<Report> {
    let grid = Grid::new(datum.dim(), profile);
    let kinf = root_product_on(datum, &grid, ProductMode::Gk);
    let k1 = root_product_on(datum, &grid, ProductMode::InverseCs);
    let k = kostant_on(datum, &grid);
    let conv = kinf.mul(&k1)?;
    let mut c = Check::new("Kinf*K1=K");
    let mut zero = Check::new("Kinf at u=0 is K");
    let mut one = Check::new("K1 at u=1 is K");
    for (i, g) in grid.grades().iter().enumerate() {
        c.compare(g, conv.at(i), &QPoly::constant(k[i].clone()));
        zero.compare(g, &kinf.at(i).at_q_infinity(), &k[i]);
        one.compare(g, &k1.at(i).at_q_one(), &k[i]);
    }
    let mut r = report_header("kostant-conv", datum, profile);
    r.push(c);
    r.push(zero);
    r.push(one);
    Ok(r)
}

/// `K^∞_q(β) = K(β) − K^1_q(β) − Σ_{0<ν<β} K^∞_q(ν) K^1_q(β−ν)` for
/// `β > 0`, run as a recursion from `K^∞_q(0) = 1` and compared with the
/// product.
pub fn verify_kostant_recur(datum: &RootDatum, profile: TruncProfile) -> Result<Report> {
    let grid = Grid::new(datum.dim(), profile);
    let kinf = root_product_on(datum, &grid, ProductMode::Gk);
    let k1 = root_product_on(datum, &grid, ProductMode::InverseCs);
    let k = kostant_on(datum, &grid);
    let mut built = LatticeSeries::one(&grid);
    let mut check = Check::new("recursion=product");
    for (i, g) in grid.grades().iter().enumerate() {
        if g.is_zero() {
            check.compare(g, kinf.at(i), &QPoly::one());
            continue;
        }
        let mut v = QPoly::constant(k[i].clone());
        v -= k1.at(i);
        v -= &inner_convolution(&built, &k1, g);
        check.compare(g, kinf.at(i), &v);
        built.set(g, v)?;
    }
    let mut r = report_header("kostant-recur", datum, profile);
    r.push(check);
    Ok(r)
}

/// The deformed Kostant multiplicity formula and its companions at `λ`:
///
/// * `Σ_μ H_{λ+ρ}(μ;q) K^1_q(β−μ)` has degree 0 and equals `dim V(λ)_{λ−β}`;
/// * at `u = 1`, `H_{λ+ρ}` is the signed orbit indicator;
/// * `Σ_w (−1)^{ℓ(w)} K(w∘λ + β) = dim V(λ)_{λ−β}`;
/// * the expansion of `H_{λ+ρ}(μ;q)` through `K`, `K^1_q` and `K^∞_q`.
pub fn verify_q_kostant(datum: &RootDatum, lambda: &Weight, profile: TruncProfile) -> Result<Report> {
    let grid = Grid::new(datum.dim(), profile);
    let terms = dot_terms_in(datum, lambda, profile)?;
    let h = h_poly_on(datum, lambda, &grid)?;
    let kinf = root_product_on(datum, &grid, ProductMode::Gk);
    let k1 = root_product_on(datum, &grid, ProductMode::InverseCs);
    let mult = freudenthal_on(datum, lambda, &grid);
    let k = kostant_on(datum, &grid);
    let mut k_series = LatticeSeries::zero(&grid);
    for (g, v) in grid.grades().iter().zip(&k) {
        k_series.set(g, QPoly::constant(v.clone()))?;
    }

    let mut deg = Check::new("sum H*K1 has degree 0");
    let mut kmf = Check::new("sum H*K1 = mult");
    let mut orbit = Check::new("H at u=1 is orbit sign");
    let mut classical = Check::new("alternating K = mult");
    let mut expansion = Check::new("H expansion");

    let mut indicator = LatticeSeries::zero(&grid);
    for t in &terms {
        indicator.set(&t.shift, QPoly::constant(t.sign))?;
    }
    let alt_k = alternating(&terms, &k_series);
    let alt_k1 = alternating(&terms, &k1);

    for (i, beta) in grid.grades().iter().enumerate() {
        let mut s = QPoly::zero();
        for (mu, hv) in h.terms() {
            if mu.le_componentwise(beta) {
                s += &(hv * &k1.get(&(beta - mu)));
            }
        }
        deg.ensure(beta, s.is_constant(), &s);
        kmf.compare(beta, &s, mult.at(i));
        orbit.compare(beta, &h.at(i).eval_int(&BigInt::one()), &indicator.at(i).constant_term());
        classical.compare(beta, alt_k.at(i), mult.at(i));

        let mut rhs = indicator.at(i) + mult.at(i);
        rhs -= alt_k1.at(i);
        for t in &terms {
            let arg = beta - &t.shift;
            if !arg.is_nonnegative() || arg.is_zero() {
                continue;
            }
            let inner = inner_convolution(&kinf, &k1, &arg);
            if t.sign > 0 {
                rhs -= &inner;
            } else {
                rhs += &inner;
            }
        }
        expansion.compare(beta, h.at(i), &rhs);
    }

    let mut r = report_header("q-kostant", datum, profile).with_param("lambda", lambda_param(lambda));
    for c in [deg, kmf, orbit, classical, expansion] {
        r.push(c);
    }
    Ok(r)
}

/// `Σ_w (−1)^{ℓ(w)} K^∞_{−1}(w∘λ + μ) = dim (V(λ) ⊗ V(ρ))_{λ+ρ−μ}`.
pub fn verify_gr_tensor(datum: &RootDatum, lambda: &Weight, profile: TruncProfile) -> Result<Report> {
    let grid = Grid::new(datum.dim(), profile);
    let terms = dot_terms_in(datum, lambda, profile)?;
    let kinf_minus = root_product_on(datum, &grid, ProductMode::Gk).eval_int(-1);
    let lhs = alternating(&terms, &kinf_minus);
    let tensor = freudenthal_on(datum, lambda, &grid).mul(&freudenthal_on(datum, &datum.rho(), &grid))?;
    let mut check = Check::new("alternating Kinf(-1) = tensor mult");
    for (i, g) in grid.grades().iter().enumerate() {
        check.compare(g, lhs.at(i), tensor.at(i));
    }
    let mut r = report_header("gr-tensor", datum, profile).with_param("lambda", lambda_param(lambda));
    r.push(check);
    Ok(r)
}

/// Every identity above in one report.
pub fn kostant_suite(datum: &RootDatum, lambda: &Weight, profile: TruncProfile) -> Result<Report> {
    let mut r = report_header("kostant-suite", datum, profile).with_param("lambda", lambda_param(lambda));
    r.absorb("kostant-conv: ", verify_kostant_conv(datum, profile)?);
    r.absorb("kostant-recur: ", verify_kostant_recur(datum, profile)?);
    r.absorb("q-kostant: ", verify_q_kostant(datum, lambda, profile)?);
    r.absorb("gr-tensor: ", verify_gr_tensor(datum, lambda, profile)?);
    Ok(r)
}

/// For `A_1^{(1)}` and `λ = 0`, the orbit shifts are
/// `(k(k+1)/2, k(k−1)/2)`, `k ∈ ℤ`. Checks
/// `H_ρ(m,n;q) = Σ_k (−1)^k K^∞_q(m − k(k+1)/2, n − k(k−1)/2)` and
/// `0 = Σ_k (−1)^k K(⋯)` for `0 ≤ m, n ≤ bound`, `(m,n) ≠ (0,0)`.
pub fn carlitz_check(bound: u32) -> Result<Report> {
    let a1 = build_root_datum("A1~1")?;
    let profile = TruncProfile::new(bound, bound);
    let grid = Grid::new(2, profile);
    let h = h_poly_on(&a1, &Weight::zero(2), &grid)?;
    let kinf = root_product_on(&a1, &grid, ProductMode::Gk);
    let mut oracle = KostantOracle::new(&a1, profile);

    let b = i64::from(bound);
    let mut shifts = Vec::new();
    let mut k = 0i64;
    loop {
        let mut any = false;
        for kk in [k, -k - 1] {
            let s = RootVec(vec![kk * (kk + 1) / 2, kk * (kk - 1) / 2]);
            if s.0[0] <= b && s.0[1] <= b {
                shifts.push((if kk.rem_euclid(2) == 0 { 1 } else { -1 }, s));
                any = true;
            }
        }
        if !any {
            break;
        }
        k += 1;
    }

    let mut qcheck = Check::new("H_rho = alternating Kinf");
    let mut zcheck = Check::new("alternating K = 0");
    for m in 0..=b {
        for n in 0..=b {
            if m == 0 && n == 0 {
                continue;
            }
            let mu = RootVec(vec![m, n]);
            let mut q = QPoly::zero();
            let mut z = BigInt::zero();
            for (sign, s) in &shifts {
                let arg = &mu - s;
                let kv = at_or_zero(&kinf, &arg);
                let cv = oracle.count(&arg);
                if *sign > 0 {
                    q += &kv;
                    z += cv;
                } else {
                    q -= &kv;
                    z -= cv;
                }
            }
            qcheck.compare(&mu, &h.get(&mu), &q);
            zcheck.compare(&mu, &z, &BigInt::zero());
        }
    }
    let mut r = Report::new("carlitz").with_param("type", a1.label()).with_param("bound", bound);
    r.push(qcheck);
    r.push(zcheck);
    Ok(r)
}
