//! Products over positive roots and the index-set sum that equals the
//! Gindikin-Karpelevich product.
//!
//! The product side works with in-place factor updates on a
//! [`LatticeSeries`]. The sum side never touches series arithmetic until the
//! end: it walks every index triple `(c₊, c₀, c₋)` whose weight fits the
//! profile and tallies integer counts by `(grade, d)`, then forms
//! `Σ count · (1−u)^d`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::charseries::lattice::{Grid, LatticeSeries, TruncProfile};
use crate::error::Result;
use crate::partitions::{enumerate_multipartitions, MultiPartition, SupportSeq};
use crate::poly::QPoly;
use crate::qseries::TSeries;
use crate::report::{Check, Report};
use crate::rootdata::{beta_sequence, betas_in, RootDatum, RootVec, WordH};

/// Which product over `α ∈ Δ⁺` (each factor raised to `mult α`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ProductMode {
    /// `(1 − u z^α) / (1 − z^α)`; coefficients are `K^∞_q`.
    Gk,
    /// `(1 − u z^α)^{−1}`; coefficients are `K^1_q`.
    InverseCs,
    /// `1 − u z^α`.
    Cs,
    /// `(1 − z^α)^{−1}`; coefficients are Kostant's `K`.
    Kostant,
    /// `1 − z^α`, the Weyl-Kac denominator.
    Denominator,
}

/// Applies one factor of the given mode at `α`.
pub fn apply_factor(s: &mut LatticeSeries, mode: ProductMode, alpha: &RootVec) {
    let u = QPoly::u();
    let one = QPoly::one();
    match mode {
        ProductMode::Gk => {
            s.mul_one_minus(&u, alpha);
            s.div_one_minus(&one, alpha);
        }
        ProductMode::InverseCs => s.div_one_minus(&u, alpha),
        ProductMode::Cs => s.mul_one_minus(&u, alpha),
        ProductMode::Kostant => s.div_one_minus(&one, alpha),
        ProductMode::Denominator => s.mul_one_minus(&one, alpha),
    }
}

/// `∏_{α>0} factor(α)^{mult α}` on an existing grid.
pub fn root_product_on(datum: &RootDatum, grid: &Arc<Grid>, mode: ProductMode) -> LatticeSeries {
    let p = grid.profile();
    let mut s = LatticeSeries::one(grid);
    for (alpha, mult) in datum.positive_roots_in(p.delta_cap, p.height_cap) {
        for _ in 0..mult {
            apply_factor(&mut s, mode, &alpha);
        }
    }
    s
}

/// `∏_{α>0} factor(α)^{mult α}` truncated to `profile`.
pub fn gk_product(datum: &RootDatum, profile: TruncProfile, mode: ProductMode) -> LatticeSeries {
    root_product_on(datum, &Grid::new(datum.dim(), profile), mode)
}

/// An index `(c₊, c₀, c₋)`: counts on the word slots `k ≤ 0`, a
/// multi-partition with `n` components, counts on the slots `k > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CombIndex {
    pub plus: SupportSeq,
    pub zero: MultiPartition,
    pub minus: SupportSeq,
}

impl CombIndex {
    /// `d(c) = d(c₊) + d(c₀) + d(c₋)`.
    pub fn d(&self) -> usize {
        self.plus.support_size() + self.zero.distinct_sizes() + self.minus.support_size()
    }

    /// `wt(c) = Σ c(k) β_k + |c₀| δ`.
    pub fn weight(&self, datum: &RootDatum, word: &WordH) -> Result<RootVec> {
        let mut w = datum.delta().scale(self.zero.size() as i64);
        for (k, c) in self.plus.iter().chain(self.minus.iter()) {
            w = &w + &beta_sequence(datum, word, k)?.scale(c as i64);
        }
        Ok(w)
    }
}

/// Every index whose weight lies in the profile, materialized. Meant for
/// small profiles; [`gk_sum`] is the scalable path.
pub fn comb_indices(
    datum: &RootDatum,
    word: &WordH,
    profile: TruncProfile,
) -> Result<Vec<CombIndex>> {
    let betas = betas_in(datum, word, profile.delta_cap, profile.height_cap)?;
    let mut reals: Vec<(Vec<(i64, u64)>, RootVec)> = Vec::new();
    fn walk(
        betas: &[(i64, RootVec)],
        from: usize,
        chosen: &mut Vec<(i64, u64)>,
        cur: &RootVec,
        profile: &TruncProfile,
        out: &mut Vec<(Vec<(i64, u64)>, RootVec)>,
    ) {
        out.push((chosen.clone(), cur.clone()));
        for q in from..betas.len() {
            let (k, beta) = &betas[q];
            let mut next = cur + beta;
            let mut c = 1;
            while profile.contains(&next) {
                chosen.push((*k, c));
                walk(betas, q + 1, chosen, &next, profile, out);
                chosen.pop();
                next = &next + beta;
                c += 1;
            }
        }
    }
    walk(
        &betas,
        0,
        &mut Vec::new(),
        &RootVec::zero(datum.dim()),
        &profile,
        &mut reals,
    );
    let delta = datum.delta();
    let n = datum.rank();
    let mut out = Vec::new();
    for m in 0..=profile.delta_cap {
        let md = delta.scale(i64::from(m));
        if !profile.contains(&md) {
            break;
        }
        let zeros: Vec<MultiPartition> = enumerate_multipartitions(n, m).collect();
        for (chosen, w) in &reals {
            if !profile.contains(&(w + &md)) {
                continue;
            }
            let plus = SupportSeq::from_pairs(chosen.iter().copied().filter(|(k, _)| *k <= 0));
            let minus = SupportSeq::from_pairs(chosen.iter().copied().filter(|(k, _)| *k > 0));
            for z in &zeros {
                out.push(CombIndex {
                    plus: plus.clone(),
                    zero: z.clone(),
                    minus: minus.clone(),
                });
            }
        }
    }
    Ok(out)
}

/// Counts of real-root index sequences by `(grade, d)`.
type Tally = Vec<Vec<u128>>;

fn tally_real(grid: &Grid, roots: &[RootVec]) -> Tally {
    let profile = grid.profile();
    let maxd = roots.len() + 1;
    let fresh = || vec![vec![0u128; maxd]; grid.len()];
    fn walk(
        grid: &Grid,
        profile: &TruncProfile,
        roots: &[RootVec],
        from: usize,
        cur: &RootVec,
        d: usize,
        tally: &mut Tally,
    ) {
        let i = grid.position(cur).expect("inside profile");
        tally[i][d] += 1;
        for q in from..roots.len() {
            let mut next = cur + &roots[q];
            while profile.contains(&next) {
                walk(grid, profile, roots, q + 1, &next, d + 1, tally);
                next = &next + &roots[q];
            }
        }
    }
    let zero = RootVec::zero(grid.dim());
    // the empty sequence, then one task per first nonzero slot
    let mut total = fresh();
    total[0][0] += 1;
    let parts: Vec<Tally> = (0..roots.len())
        .into_par_iter()
        .map(|q| {
            let mut t = fresh();
            let mut next = &zero + &roots[q];
            while profile.contains(&next) {
                walk(grid, &profile, roots, q + 1, &next, 1, &mut t);
                next = &next + &roots[q];
            }
            t
        })
        .collect();
    for t in parts {
        for (row, add) in total.iter_mut().zip(t) {
            for (a, b) in row.iter_mut().zip(add) {
                *a += b;
            }
        }
    }
    total
}

/// Multi-partition counts with `n` components by `(|c₀|, d(c₀))`.
fn tally_imaginary(n: usize, max_weight: u32) -> Vec<BTreeMap<usize, u128>> {
    (0..=max_weight)
        .map(|m| {
            let mut by_d = BTreeMap::new();
            for mp in enumerate_multipartitions(n, m) {
                *by_d.entry(mp.distinct_sizes()).or_insert(0u128) += 1;
            }
            by_d
        })
        .collect()
}

fn from_tally(grid: &Arc<Grid>, tally: &Tally) -> LatticeSeries {
    let maxd = tally.first().map_or(0, Vec::len);
    let powers: Vec<QPoly> = (0..maxd as u32).map(QPoly::one_minus_u_pow).collect();
    let mut s = LatticeSeries::zero(grid);
    for (i, row) in tally.iter().enumerate() {
        let mut acc = QPoly::zero();
        for (d, &c) in row.iter().enumerate() {
            if c != 0 {
                acc.add_scaled(&powers[d], &BigInt::from(c));
            }
        }
        if !acc.is_zero() {
            s.set(&grid.grades()[i].clone(), acc).expect("grade of the grid");
        }
    }
    s
}

/// `Σ_{c ∈ C_> × P(n) × C_<} (1−u)^{d(c)} z^{wt(c)}` within the profile,
/// by direct enumeration of index triples.
pub fn gk_sum(datum: &RootDatum, word: &WordH, profile: TruncProfile) -> Result<LatticeSeries> {
    let grid = Grid::new(datum.dim(), profile);
    let betas: Vec<RootVec> = betas_in(datum, word, profile.delta_cap, profile.height_cap)?
        .into_iter()
        .map(|(_, b)| b)
        .collect();
    let real = tally_real(&grid, &betas);
    let imag = tally_imaginary(datum.rank(), profile.delta_cap);
    let delta = datum.delta();
    let maxd = real[0].len() + 2 * imag.len() + 1;
    let mut combined: Tally = vec![vec![0u128; maxd]; grid.len()];
    for (i, row) in real.iter().enumerate() {
        let g = &grid.grades()[i];
        for (m, by_d) in imag.iter().enumerate() {
            let Some(j) = grid.position(&(g + &delta.scale(m as i64))) else {
                continue;
            };
            for (d, &c) in row.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for (&d0, &c0) in by_d {
                    combined[j][d + d0] += c * c0;
                }
            }
        }
    }
    Ok(from_tally(&grid, &combined))
}

/// Sum over index sequences supported on the given slots of the word.
fn real_sum_on(grid: &Arc<Grid>, roots: &[RootVec]) -> LatticeSeries {
    let inside: Vec<RootVec> = roots
        .iter()
        .filter(|b| grid.profile().contains(b))
        .cloned()
        .collect();
    from_tally(grid, &tally_real(grid, &inside))
}

fn product_on(grid: &Arc<Grid>, roots: &[RootVec]) -> LatticeSeries {
    let mut s = LatticeSeries::one(grid);
    for b in roots {
        apply_factor(&mut s, ProductMode::Gk, b);
    }
    s
}

pub(crate) fn compare_series(check: &mut Check, lhs: &LatticeSeries, rhs: &LatticeSeries) {
    for (i, g) in lhs.grid().grades().iter().enumerate() {
        check.compare(g, lhs.at(i), rhs.at(i));
    }
}

/// Product over all positive roots against the index-set sum.
pub fn verify_gk_full(datum: &RootDatum, word: &WordH, profile: TruncProfile) -> Result<Report> {
    let prod = gk_product(datum, profile, ProductMode::Gk);
    let sum = gk_sum(datum, word, profile)?;
    let mut check = Check::new("product=sum");
    compare_series(&mut check, &prod, &sum);
    let mut r = report_header("gk-full", datum, profile).with_param("word", word);
    r.push(check);
    Ok(r)
}

/// For each `k` with `|k| ≤ kmax`, the product over `R(k)` against the sum
/// over sequences supported on the same slots; then the two half-sequence
/// products `R_>`, `R_<` within the profile.
pub fn verify_gk_real(
    datum: &RootDatum,
    word: &WordH,
    profile: TruncProfile,
    kmax: i64,
) -> Result<Report> {
    let grid = Grid::new(datum.dim(), profile);
    let mut r = report_header("gk-real", datum, profile)
        .with_param("word", word)
        .with_param("kmax", kmax);
    for k in -kmax..=kmax {
        let slots: Vec<i64> = if k <= 0 { (k..=0).rev().collect() } else { (1..=k).collect() };
        let roots: Vec<RootVec> = slots
            .iter()
            .map(|&j| beta_sequence(datum, word, j))
            .collect::<Result<_>>()?;
        let mut check = Check::new(format!("R({k})"));
        compare_series(&mut check, &product_on(&grid, &roots), &real_sum_on(&grid, &roots));
        r.push(check);
    }
    let all = betas_in(datum, word, profile.delta_cap, profile.height_cap)?;
    for (name, keep) in [("R_>", true), ("R_<", false)] {
        let roots: Vec<RootVec> = all
            .iter()
            .filter(|(k, _)| (*k <= 0) == keep)
            .map(|(_, b)| b.clone())
            .collect();
        let mut check = Check::new(name);
        compare_series(&mut check, &product_on(&grid, &roots), &real_sum_on(&grid, &roots));
        r.push(check);
    }
    Ok(r)
}

/// `∏_k ((1 − u t^k)/(1 − t^k))^n` against `Σ_{c₀ ∈ P(n)} (1−u)^{d(c₀)} t^{|c₀|}`
/// with `t = z^δ`.
pub fn verify_gk_imag(n: u32, order: usize) -> Report {
    let u = QPoly::u();
    let one = QPoly::one();
    let mut prod = TSeries::one(order);
    for k in 1..=order {
        for _ in 0..n {
            prod.mul_one_minus(&u, k);
            prod.div_one_minus(&one, k);
        }
    }
    let imag = tally_imaginary(n as usize, order as u32);
    let mut check = Check::new("product=sum");
    for (m, by_d) in imag.iter().enumerate() {
        let mut sum = QPoly::zero();
        for (&d, &c) in by_d {
            sum.add_scaled(&QPoly::one_minus_u_pow(d as u32), &BigInt::from(c));
        }
        check.compare(format!("t^{m}"), &prod.coeffs()[m], &sum);
    }
    let mut r = Report::new("gk-imag")
        .with_param("n", n)
        .with_param("order", order);
    r.push(check);
    r
}

pub(crate) fn report_header(id: &str, datum: &RootDatum, profile: TruncProfile) -> Report {
    Report::new(id)
        .with_param("type", datum.label())
        .with_param("delta_cap", profile.delta_cap)
        .with_param("height_cap", profile.height_cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::build_root_datum;

    fn rv(v: &[i64]) -> RootVec {
        RootVec(v.to_vec())
    }

    #[test]
    fn a1_coefficients() {
        let a1 = build_root_datum("A1~1").unwrap();
        let p = TruncProfile::new(3, 3);
        let g = gk_product(&a1, p, ProductMode::Gk);
        assert_eq!(g.get(&rv(&[0, 1])), QPoly::one_minus_u());
        let k_delta = &QPoly::one_minus_u() + &QPoly::one_minus_u_pow(2);
        assert_eq!(g.get(&rv(&[1, 1])), k_delta);
        assert_eq!(g.get(&rv(&[1, 1])).at_q_infinity(), BigInt::from(2));
        let h = WordH::default_for(&a1);
        let s = gk_sum(&a1, &h, p).unwrap();
        assert_eq!(s, g);
        let trivial = gk_product(&a1, TruncProfile::new(0, 0), ProductMode::Gk);
        assert_eq!(trivial.to_map().len(), 1);
    }

    #[test]
    fn inverse_cs_and_kostant_modes() {
        let a1 = build_root_datum("A1~1").unwrap();
        let p = TruncProfile::new(3, 3);
        let k1 = gk_product(&a1, p, ProductMode::InverseCs);
        assert_eq!(k1.get(&rv(&[1, 0])), QPoly::u());
        assert_eq!(k1.get(&rv(&[1, 1])).at_q_one(), BigInt::from(2));
        let k = gk_product(&a1, p, ProductMode::Kostant);
        assert_eq!(k.get(&rv(&[1, 1])), QPoly::constant(2));
        let mut back = gk_product(&a1, p, ProductMode::Cs);
        back = back.mul(&k1).unwrap();
        assert_eq!(back, LatticeSeries::one(k1.grid()));
    }

    /// The materialized index set gives the same sum as the tally.
    #[test]
    fn literal_indices_match_tally() {
        for label in ["A1~1", "A2~1"] {
            let d = build_root_datum(label).unwrap();
            let h = WordH::default_for(&d);
            let p = TruncProfile::new(2, 3);
            let grid = Grid::new(d.dim(), p);
            let mut literal = LatticeSeries::zero(&grid);
            let idx = comb_indices(&d, &h, p).unwrap();
            let mut seen = std::collections::HashSet::new();
            for c in &idx {
                assert!(seen.insert(c.clone()));
                let w = c.weight(&d, &h).unwrap();
                assert!(literal.add_at(&w, &QPoly::one_minus_u_pow(c.d() as u32)));
            }
            assert_eq!(literal, gk_sum(&d, &h, p).unwrap(), "{label}");
        }
    }

    #[test]
    fn verifiers_pass_small() {
        let a2 = build_root_datum("A2~1").unwrap();
        let h = WordH::default_for(&a2);
        let p = TruncProfile::new(2, 4);
        assert!(verify_gk_full(&a2, &h, p).unwrap().passed());
        assert!(verify_gk_real(&a2, &h, p, 3).unwrap().passed());
        assert!(verify_gk_imag(2, 8).passed());
    }
}
