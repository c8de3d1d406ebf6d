//! Weyl group elements, the dot action `w∘λ = w(λ+ρ) − λ − ρ`, and bounded
//! enumeration of the alternating-sum terms `((−1)^{ℓ(w)}, −(w∘λ))`.
//!
//! Elements are identified by the image `w(λ+ρ)`, which determines `w` when
//! `λ + ρ` is regular. The search grows words on the left: `s_i w` is longer
//! than `w` exactly when `⟨w(λ+ρ), h_i⟩ > 0`, and then the shift `−(w∘λ)`
//! grows by that pairing times `α_i`. Shifts therefore increase
//! componentwise along every search edge, so pruning at a downward-closed
//! cap loses nothing.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootdata::{RootDatum, RootVec, Weight};

/// A Weyl group element as a reduced word `s_{w[0]} s_{w[1]} ⋯`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct WeylElement {
    word: Vec<usize>,
}

impl WeylElement {
    pub fn identity() -> Self {
        WeylElement { word: Vec::new() }
    }

    /// Wraps a word; callers guarantee it is reduced.
    pub fn from_reduced_word(word: Vec<usize>) -> Self {
        WeylElement { word }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// `(−1)^{ℓ(w)}`.
    pub fn sign(&self) -> i64 {
        if self.word.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn act(&self, datum: &RootDatum, w: &Weight) -> Weight {
        self.word
            .iter()
            .rev()
            .fold(w.clone(), |acc, &i| datum.reflect_weight(i, &acc))
    }

    pub fn act_on_root(&self, datum: &RootDatum, beta: &RootVec) -> RootVec {
        self.word
            .iter()
            .rev()
            .fold(beta.clone(), |acc, &i| datum.reflect_root(i, &acc))
    }
}

/// `w∘λ = w(λ+ρ) − λ − ρ`.
pub fn dot_action(datum: &RootDatum, w: &WeylElement, lambda: &Weight) -> Weight {
    let lr = lambda + &datum.rho();
    &w.act(datum, &lr) - &lr
}

/// One term of `Σ_w (−1)^{ℓ(w)} z^{w(λ+ρ)}`, written relative to `λ+ρ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DotTerm {
    pub sign: i64,
    /// `−(w∘λ) = λ + ρ − w(λ+ρ) ∈ Q₊`.
    pub shift: RootVec,
    pub element: WeylElement,
}

/// Where the search stops.
#[derive(Clone, Copy, Debug)]
pub enum DotBound {
    /// Total height of the shift at most this.
    Height(i64),
    /// `c₀ ≤ delta_cap` and `Σ_{i≥1} cᵢ ≤ height_cap`.
    Box { delta_cap: u32, height_cap: u32 },
}

impl DotBound {
    fn admits(&self, shift: &RootVec) -> bool {
        match *self {
            DotBound::Height(h) => shift.height() <= h,
            DotBound::Box {
                delta_cap,
                height_cap,
            } => {
                shift.delta_degree() <= i64::from(delta_cap)
                    && shift.classical_height() <= i64::from(height_cap)
            }
        }
    }
}

fn search(
    datum: &RootDatum,
    lambda: &Weight,
    generators: &[usize],
    admits: impl Fn(&RootVec) -> bool,
) -> Result<Vec<DotTerm>> {
    let lr = lambda + &datum.rho();
    if generators.iter().any(|&i| lr.lambda[i] <= 0) {
        return Err(Error::NotRegularDominant(lr.to_string()));
    }
    let dim = datum.dim();
    let mut seen: HashSet<Weight> = HashSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(lr.clone());
    queue.push_back((lr, RootVec::zero(dim), Vec::<usize>::new()));
    while let Some((nu, shift, word)) = queue.pop_front() {
        for &i in generators {
            let c = nu.lambda[i];
            if c <= 0 {
                continue;
            }
            let mut next_shift = shift.clone();
            next_shift.0[i] += c;
            assert!(
                next_shift.height() > shift.height() && shift.le_componentwise(&next_shift),
                "shift must grow along a length-increasing edge"
            );
            if !admits(&next_shift) {
                continue;
            }
            let image = datum.reflect_weight(i, &nu);
            if seen.contains(&image) {
                continue;
            }
            seen.insert(image.clone());
            let mut next_word = Vec::with_capacity(word.len() + 1);
            next_word.push(i);
            next_word.extend_from_slice(&word);
            queue.push_back((image, next_shift, next_word));
        }
        out.push(DotTerm {
            sign: if word.len() % 2 == 0 { 1 } else { -1 },
            shift,
            element: WeylElement { word },
        });
    }
    out.sort_by(|a, b| a.shift.cmp(&b.shift));
    Ok(out)
}

/// All `(sign(w), −(w∘λ))` with shift of total height at most `cap`.
pub fn enumerate_dot_terms(datum: &RootDatum, lambda: &Weight, cap: i64) -> Result<Vec<DotTerm>> {
    let all: Vec<usize> = (0..datum.dim()).collect();
    search(datum, lambda, &all, |s| DotBound::Height(cap).admits(s))
}

/// Same, bounded by a `(δ-cap, classical-height cap)` box.
pub fn enumerate_dot_terms_in(
    datum: &RootDatum,
    lambda: &Weight,
    bound: DotBound,
) -> Result<Vec<DotTerm>> {
    let all: Vec<usize> = (0..datum.dim()).collect();
    search(datum, lambda, &all, |s| bound.admits(s))
}

/// The full finite Weyl group of the classical subsystem (`s₁ … sₙ`).
/// Only `⟨λ+ρ, h_i⟩` for `i ≥ 1` must be positive.
pub fn enumerate_classical_dot_terms(datum: &RootDatum, lambda: &Weight) -> Result<Vec<DotTerm>> {
    let cl: Vec<usize> = (1..datum.dim()).collect();
    search(datum, lambda, &cl, |_| true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::build_root_datum;
    use proptest::prelude::*;

    fn terms(v: &[DotTerm]) -> Vec<(i64, Vec<i64>)> {
        v.iter().map(|t| (t.sign, t.shift.0.clone())).collect()
    }

    #[test]
    fn dot_action_of_simple_reflections() {
        let a1 = build_root_datum("A1~1").unwrap();
        let zero = Weight::zero(2);
        let e = dot_action(&a1, &WeylElement::identity(), &zero);
        assert_eq!(a1.weight_to_root(&e), Some(RootVec(vec![0, 0])));
        for i in 0..2 {
            let w = WeylElement::from_reduced_word(vec![i]);
            let r = a1.weight_to_root(&dot_action(&a1, &w, &zero)).unwrap();
            assert_eq!(r, (-&a1.simple_root(i)));
        }
    }

    #[test]
    fn a1_terms() {
        let a1 = build_root_datum("A1~1").unwrap();
        let zero = Weight::zero(2);
        assert_eq!(terms(&enumerate_dot_terms(&a1, &zero, 0).unwrap()), vec![(1, vec![0, 0])]);
        assert_eq!(
            terms(&enumerate_dot_terms(&a1, &zero, 3).unwrap()),
            vec![(1, vec![0, 0]), (-1, vec![0, 1]), (-1, vec![1, 0])]
        );
        // shifts (k(k+1)/2, k(k−1)/2), sign (−1)^k, over all k ∈ ℤ
        let got = enumerate_dot_terms(&a1, &zero, 60).unwrap();
        let mut expected: Vec<(i64, Vec<i64>)> = (-10i64..=10)
            .map(|k| {
                let s = if k.rem_euclid(2) == 0 { 1 } else { -1 };
                (s, vec![k * (k + 1) / 2, k * (k - 1) / 2])
            })
            .filter(|(_, v)| v[0] + v[1] <= 60)
            .collect();
        expected.sort_by_key(|a| RootVec(a.1.clone()));
        assert_eq!(terms(&got), expected);
    }

    #[test]
    fn classical_groups() {
        let a1 = build_root_datum("A1~1").unwrap();
        assert_eq!(enumerate_classical_dot_terms(&a1, &Weight::zero(2)).unwrap().len(), 2);
        let a2 = build_root_datum("A2~1").unwrap();
        assert_eq!(enumerate_classical_dot_terms(&a2, &Weight::zero(3)).unwrap().len(), 6);
        let d4 = build_root_datum("D4~1").unwrap();
        assert_eq!(enumerate_classical_dot_terms(&d4, &Weight::zero(5)).unwrap().len(), 192);
    }

    #[test]
    fn rejects_non_regular() {
        let a1 = build_root_datum("A1~1").unwrap();
        let bad = Weight::new(vec![-1, 0], 0.into());
        assert!(matches!(
            enumerate_dot_terms(&a1, &bad, 3),
            Err(Error::NotRegularDominant(_))
        ));
    }

    /// Words returned are reduced, and their action reproduces the shift.
    #[test]
    fn words_reproduce_shifts() {
        let a2 = build_root_datum("A2~1").unwrap();
        let lambda = a2.fundamental(0);
        let lr = &lambda + &a2.rho();
        for t in enumerate_dot_terms(&a2, &lambda, 12).unwrap() {
            let img = t.element.act(&a2, &lr);
            let shift = a2.weight_to_root(&(&lr - &img)).unwrap();
            assert_eq!(shift, t.shift);
            assert!(t.shift.is_nonnegative());
            // the image is distinct from every shorter prefix
            let mut seen = std::collections::HashSet::new();
            let mut acc = lr.clone();
            for &i in t.element.word().iter().rev() {
                assert!(acc.lambda[i] > 0, "word not reduced");
                acc = a2.reflect_weight(i, &acc);
                assert!(seen.insert(acc.clone()));
            }
        }
    }

    proptest! {
        /// Searching to a smaller cap gives exactly the filtered larger search.
        #[test]
        fn caps_are_nested(l0 in 0i64..3, l1 in 0i64..3, l2 in 0i64..3, cap in 0i64..14) {
            let a2 = build_root_datum("A2~1").unwrap();
            let lambda = Weight::new(vec![l0, l1, l2], 0.into());
            let small = enumerate_dot_terms(&a2, &lambda, cap).unwrap();
            let big: Vec<_> = enumerate_dot_terms(&a2, &lambda, cap + 5)
                .unwrap()
                .into_iter()
                .filter(|t| t.shift.height() <= cap)
                .collect();
            prop_assert_eq!(terms(&small), terms(&big));
        }
    }
}
