//! Library values against brute-force recomputation.
//!
//! The oracles here expand products factor by factor over explicit lists of
//! roots and partitions, without touching the series types.

use std::collections::HashMap;

use num_bigint::BigInt;
use proptest::prelude::*;

use qaffine::charseries::{
    self as cs, character::freudenthal, gk_product, h_poly, Grid, KostantOracle, ProductMode, TruncProfile,
};
use qaffine::partitions::{enumerate_multipartitions, enumerate_partitions, Partition};
use qaffine::qseries::epsilon_qn;
use qaffine::rootdata::{build_root_datum, RootDatum, RootVec, Weight};
use qaffine::weyl::enumerate_dot_terms;
use qaffine::{EvalPoint, QPoly};

fn rv(v: &[i64]) -> RootVec {
    RootVec(v.to_vec())
}

fn roots_with_mult(d: &RootDatum, p: TruncProfile) -> Vec<RootVec> {
    let mut out = Vec::new();
    for (a, m) in d.positive_roots_in(p.delta_cap, p.height_cap) {
        out.extend(std::iter::repeat_n(a, m));
    }
    out
}

/// Every way of writing `beta` as `Σ m_i r_i`, reported as the list of
/// nonzero `m_i`.
fn vector_partitions(roots: &[RootVec], beta: &RootVec) -> Vec<Vec<u32>> {
    fn go(roots: &[RootVec], i: usize, rest: &RootVec, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest.is_zero() {
            out.push(cur.clone());
            return;
        }
        if i == roots.len() {
            return;
        }
        go(roots, i + 1, rest, cur, out);
        let mut r = rest.clone();
        let mut m = 0;
        loop {
            r = &r - &roots[i];
            m += 1;
            if !r.is_nonnegative() {
                break;
            }
            cur.push(m);
            go(roots, i + 1, &r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(roots, 0, beta, &mut Vec::new(), &mut out);
    out
}

/// `K^∞_q(β) = Σ (1−u)^{#parts used}`, `K^1_q(β) = Σ u^{Σ m}`, `K(β) = #`.
fn kostant_triple(roots: &[RootVec], beta: &RootVec) -> (QPoly, QPoly, BigInt) {
    let mut kinf = QPoly::zero();
    let mut k1 = QPoly::zero();
    let vps = vector_partitions(roots, beta);
    for vp in &vps {
        kinf += &QPoly::one_minus_u_pow(vp.len() as u32);
        k1 += &QPoly::monomial(1, vp.iter().sum::<u32>() as usize);
    }
    (kinf, k1, BigInt::from(vps.len()))
}

#[test]
fn root_products_match_vector_partitions() {
    for (label, p) in [("A1~1", TruncProfile::new(3, 5)), ("A2~1", TruncProfile::new(2, 3))] {
        let d = build_root_datum(label).unwrap();
        let roots = roots_with_mult(&d, p);
        let kinf = gk_product(&d, p, ProductMode::Gk);
        let k1 = gk_product(&d, p, ProductMode::InverseCs);
        let mut oracle = KostantOracle::new(&d, p);
        for g in Grid::new(d.dim(), p).grades() {
            let (a, b, c) = kostant_triple(&roots, g);
            assert_eq!(kinf.get(g), a, "{label} Kinf {g}");
            assert_eq!(k1.get(g), b, "{label} K1 {g}");
            assert_eq!(oracle.count(g), c, "{label} K {g}");
        }
    }
}

#[test]
fn a1_named_values() {
    let a1 = build_root_datum("A1~1").unwrap();
    let p = TruncProfile::new(2, 2);
    let kinf = gk_product(&a1, p, ProductMode::Gk);
    assert_eq!(kinf.get(&rv(&[0, 1])), QPoly::one_minus_u());
    assert_eq!(kinf.get(&rv(&[1, 1])), &QPoly::one_minus_u() + &QPoly::one_minus_u_pow(2));
    let mut oracle = KostantOracle::new(&a1, p);
    assert_eq!(oracle.count(&rv(&[1, 1])), BigInt::from(2));

    let h = h_poly(&a1, &Weight::zero(2), p).unwrap();
    let h_a0 = h.get(&rv(&[1, 0]));
    assert_eq!(h_a0, QPoly::monomial(-1, 1));
    let at = |pt: EvalPoint| h_a0.eval(&pt).to_integer();
    assert_eq!(
        (at(EvalPoint::QOne), at(EvalPoint::QInfinity), at(EvalPoint::QMinusOne)),
        (BigInt::from(-1), BigInt::from(0), BigInt::from(1))
    );
}

/// Signed orbit shifts for `λ = 0` on `A_1^{(1)}`, from the closed form.
#[test]
fn a1_orbit_closed_form() {
    let a1 = build_root_datum("A1~1").unwrap();
    let got: Vec<(i64, RootVec)> = enumerate_dot_terms(&a1, &Weight::zero(2), 3)
        .unwrap()
        .into_iter()
        .map(|t| (t.sign, t.shift))
        .collect();
    assert_eq!(got, vec![(1, rv(&[0, 0])), (-1, rv(&[0, 1])), (-1, rv(&[1, 0]))]);
}

fn partition_count(k: u32, max: u32) -> u64 {
    if k == 0 {
        return 1;
    }
    (1..=max.min(k)).map(|p| partition_count(k - p, p)).sum()
}

#[test]
fn partition_enumeration_counts() {
    for k in 0..=15 {
        assert_eq!(enumerate_partitions(k).count() as u64, partition_count(k, k), "k={k}");
    }
    let p211 = enumerate_partitions(4).find(|p| p.parts() == [2, 1, 1]).unwrap();
    assert_eq!((p211.distinct_sizes(), p211.size()), (2, 4));
    assert_eq!(Partition::new(vec![3, 2, 1]).kappa_q(), QPoly::monomial(-1, 3));
    assert_eq!(Partition::new(vec![1, 1]).kappa_q(), QPoly::zero());
}

/// `ε_{q,n}(k) = Σ_{|c| = k} κ_q(c)`, with `κ_q` recomputed from the parts.
#[test]
fn epsilon_from_kappa() {
    for n in 1..=3usize {
        for k in 0..=6u32 {
            let mut sum = QPoly::zero();
            for mp in enumerate_multipartitions(n, k) {
                let distinct = mp.components().iter().all(|p| {
                    let mut v = p.parts().to_vec();
                    v.dedup();
                    v.len() == p.parts().len()
                });
                if distinct {
                    sum += &QPoly::monomial(if mp.num_parts() % 2 == 0 { 1 } else { -1 }, mp.num_parts());
                }
            }
            assert_eq!(epsilon_qn(n as u32, k as usize).unwrap(), sum, "n={n} k={k}");
        }
    }
    assert_eq!(epsilon_qn(3, 1).unwrap(), QPoly::monomial(-3, 1));
}

#[test]
fn deformed_kostant_formula_at_simple_root() {
    let a1 = build_root_datum("A1~1").unwrap();
    let p = TruncProfile::new(1, 1);
    let h = h_poly(&a1, &Weight::zero(2), p).unwrap();
    let k1 = gk_product(&a1, p, ProductMode::InverseCs);
    let a0 = rv(&[1, 0]);
    let z = rv(&[0, 0]);
    assert_eq!(k1.get(&a0), QPoly::u());
    let total = &(&h.get(&z) * &k1.get(&a0)) + &(&h.get(&a0) * &k1.get(&z));
    assert!(total.is_zero());
}

#[test]
fn basic_representation_multiplicities() {
    // the weights Λ₀ − kδ carry p(k)
    let a1 = build_root_datum("A1~1").unwrap();
    let m = freudenthal(&a1, &a1.fundamental(0), TruncProfile::new(8, 8));
    for k in 0..=8u32 {
        let want = BigInt::from(partition_count(k, k));
        assert_eq!(m.get(&rv(&[k as i64, k as i64])).constant_term(), want);
    }
}

/// Weyl-Kac multiplicities at `u = −1` tensor product, recomputed as a
/// direct double sum over the two Freudenthal tables.
#[test]
fn tensor_with_rho_by_double_sum() {
    let a1 = build_root_datum("A1~1").unwrap();
    let p = TruncProfile::new(3, 6);
    let lambda = a1.fundamental(0);
    let ml = freudenthal(&a1, &lambda, p);
    let mr = freudenthal(&a1, &a1.rho(), p);
    let h = h_poly(&a1, &lambda, p).unwrap();
    let mut table: HashMap<RootVec, BigInt> = HashMap::new();
    for (a, x) in ml.terms() {
        for (b, y) in mr.terms() {
            let s = a + b;
            if p.contains(&s) {
                *table.entry(s).or_default() += x.constant_term() * y.constant_term();
            }
        }
    }
    for g in Grid::new(2, p).grades() {
        let want = table.get(g).cloned().unwrap_or_default();
        assert_eq!(h.get(g).eval_int(&BigInt::from(-1)), want, "{g}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// For random dominant λ on A1 and A2 all verifiers hold.
    #[test]
    fn verifiers_hold_for_random_weights(which in 0usize..2, l in proptest::collection::vec(0i64..3, 3)) {
        let (label, dim, p) = if which == 0 {
            ("A1~1", 2, TruncProfile::new(3, 5))
        } else {
            ("A2~1", 3, TruncProfile::new(2, 3))
        };
        let d = build_root_datum(label).unwrap();
        let lambda = d.weight(&l[..dim]).unwrap();
        for r in [
            cs::verify_cs(&d, &lambda, p).unwrap(),
            cs::verify_h_via_kinfty(&d, &lambda, p).unwrap(),
            cs::kostant_suite(&d, &lambda, p).unwrap(),
        ] {
            prop_assert!(r.passed(), "{}", r);
        }
    }
}
