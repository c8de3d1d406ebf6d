//! Series graded by the positive root lattice, truncated to a box.
//!
//! A [`TruncProfile`] keeps the grades `μ ∈ Q₊` with `c₀(μ) ≤ D` and
//! `Σ_{i≥1} cᵢ(μ) ≤ C`. The set is downward closed, so every product of
//! series computed inside it is exact on the grades it keeps.
//!
//! A [`LatticeSeries`] stores one [`QPoly`] per grade of a shared [`Grid`].
//! The grading variable is left to the caller: the same type holds
//! `Σ f(μ) z^μ` and `Σ f(μ) z^{−μ}`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::QPoly;
use crate::rootdata::RootVec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TruncProfile {
    /// Largest `c₀`.
    pub delta_cap: u32,
    /// Largest `Σ_{i≥1} cᵢ`.
    pub height_cap: u32,
    /// Whether consumers that need it may grow `height_cap` until results
    /// stop changing.
    pub adaptive: bool,
}

impl TruncProfile {
    pub fn new(delta_cap: u32, height_cap: u32) -> Self {
        TruncProfile {
            delta_cap,
            height_cap,
            adaptive: false,
        }
    }

    pub fn adaptive(mut self) -> Self {
        self.adaptive = true;
        self
    }

    pub fn contains(&self, mu: &RootVec) -> bool {
        mu.is_nonnegative()
            && mu.delta_degree() <= i64::from(self.delta_cap)
            && mu.classical_height() <= i64::from(self.height_cap)
    }

    pub fn with_height_cap(&self, height_cap: u32) -> Self {
        TruncProfile { height_cap, ..*self }
    }

    fn same_box(&self, other: &TruncProfile) -> bool {
        self.delta_cap == other.delta_cap && self.height_cap == other.height_cap
    }
}

impl fmt::Display for TruncProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D={},C={}", self.delta_cap, self.height_cap)
    }
}

/// The grades of a profile for a given number of simple roots, sorted by
/// (height, lex), with a reverse index.
#[derive(Debug)]
pub struct Grid {
    dim: usize,
    profile: TruncProfile,
    grades: Vec<RootVec>,
    index: HashMap<RootVec, usize>,
}

impl Grid {
    pub fn new(dim: usize, profile: TruncProfile) -> Arc<Grid> {
        assert!(dim >= 2, "affine data has at least two simple roots");
        let mut grades = Vec::new();
        let mut cur = vec![0i64; dim];
        fn fill(pos: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<RootVec>) {
            if pos == cur.len() {
                out.push(RootVec(cur.clone()));
                return;
            }
            for c in 0..=left {
                cur[pos] = c;
                fill(pos + 1, left - c, cur, out);
            }
            cur[pos] = 0;
        }
        for c0 in 0..=i64::from(profile.delta_cap) {
            cur[0] = c0;
            fill(1, i64::from(profile.height_cap), &mut cur, &mut grades);
        }
        grades.sort();
        let index = grades.iter().enumerate().map(|(i, g)| (g.clone(), i)).collect();
        Arc::new(Grid {
            dim,
            profile,
            grades,
            index,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn profile(&self) -> TruncProfile {
        self.profile
    }

    pub fn len(&self) -> usize {
        self.grades.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grades.is_empty()
    }

    pub fn grades(&self) -> &[RootVec] {
        &self.grades
    }

    pub fn position(&self, mu: &RootVec) -> Option<usize> {
        self.index.get(mu).copied()
    }

    /// For every grade `μ`, the position of `μ − α` if it lies in the grid.
    fn predecessor(&self, alpha: &RootVec) -> Vec<Option<usize>> {
        self.grades
            .iter()
            .map(|g| {
                let d = g - alpha;
                if d.is_nonnegative() {
                    self.position(&d)
                } else {
                    None
                }
            })
            .collect()
    }

    fn compatible(&self, other: &Grid) -> Result<()> {
        if self.dim != other.dim || !self.profile.same_box(&other.profile) {
            return Err(Error::ProfileMismatch(
                format!("{} (rank {})", self.profile, self.dim - 1),
                format!("{} (rank {})", other.profile, other.dim - 1),
            ));
        }
        Ok(())
    }
}

#[derive(Clone)]
pub struct LatticeSeries {
    grid: Arc<Grid>,
    coeffs: Vec<QPoly>,
}

impl fmt::Debug for LatticeSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms()).finish()
    }
}

impl PartialEq for LatticeSeries {
    fn eq(&self, other: &Self) -> bool {
        self.grid.compatible(&other.grid).is_ok() && self.coeffs == other.coeffs
    }
}

impl LatticeSeries {
    pub fn zero(grid: &Arc<Grid>) -> Self {
        LatticeSeries {
            grid: Arc::clone(grid),
            coeffs: vec![QPoly::zero(); grid.len()],
        }
    }

    pub fn one(grid: &Arc<Grid>) -> Self {
        let mut s = Self::zero(grid);
        s.coeffs[0] = QPoly::one();
        s
    }

    pub fn grid(&self) -> &Arc<Grid> {
        &self.grid
    }

    pub fn profile(&self) -> TruncProfile {
        self.grid.profile
    }

    /// Coefficient at `μ`; zero outside the profile.
    pub fn get(&self, mu: &RootVec) -> QPoly {
        self.grid
            .position(mu)
            .map(|i| self.coeffs[i].clone())
            .unwrap_or_else(QPoly::zero)
    }

    pub fn at(&self, i: usize) -> &QPoly {
        &self.coeffs[i]
    }

    pub fn set(&mut self, mu: &RootVec, value: QPoly) -> Result<()> {
        let i = self
            .grid
            .position(mu)
            .ok_or_else(|| Error::Invalid(format!("{mu} lies outside {}", self.grid.profile)))?;
        self.coeffs[i] = value;
        Ok(())
    }

    /// Adds `c` at `μ` if `μ` lies in the profile; returns whether it did.
    pub fn add_at(&mut self, mu: &RootVec, c: &QPoly) -> bool {
        match self.grid.position(mu) {
            Some(i) => {
                self.coeffs[i] += c;
                true
            }
            None => false,
        }
    }

    /// Nonzero terms in canonical grade order.
    pub fn terms(&self) -> impl Iterator<Item = (&RootVec, &QPoly)> + '_ {
        self.grid
            .grades
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
    }

    pub fn to_map(&self) -> BTreeMap<RootVec, QPoly> {
        self.terms().map(|(g, c)| (g.clone(), c.clone())).collect()
    }

    pub fn map(&self, f: impl Fn(&QPoly) -> QPoly + Sync + Send) -> LatticeSeries {
        LatticeSeries {
            grid: Arc::clone(&self.grid),
            coeffs: self.coeffs.par_iter().map(f).collect(),
        }
    }

    /// Substitutes an integer for `u` in every coefficient.
    pub fn eval_int(&self, u: i64) -> LatticeSeries {
        let x = BigInt::from(u);
        self.map(|c| QPoly::constant(c.eval_int(&x)))
    }

    /// In place `f ← f·(1 − c z^α)`.
    pub fn mul_one_minus(&mut self, c: &QPoly, alpha: &RootVec) {
        let pred = self.grid.predecessor(alpha);
        for i in (0..self.coeffs.len()).rev() {
            if let Some(j) = pred[i] {
                if !self.coeffs[j].is_zero() {
                    let t = &self.coeffs[j] * c;
                    self.coeffs[i] -= &t;
                }
            }
        }
    }

    /// In place `f ← f / (1 − c z^α)`.
    #[allow(clippy::needless_range_loop)]
    pub fn div_one_minus(&mut self, c: &QPoly, alpha: &RootVec) {
        let pred = self.grid.predecessor(alpha);
        for i in 0..self.coeffs.len() {
            if let Some(j) = pred[i] {
                if !self.coeffs[j].is_zero() {
                    let t = &self.coeffs[j] * c;
                    self.coeffs[i] += &t;
                }
            }
        }
    }

    /// Graded product, keeping only grades in the profile.
    pub fn mul(&self, other: &LatticeSeries) -> Result<LatticeSeries> {
        self.grid.compatible(&other.grid)?;
        let (sparse, dense) = if self.nnz() <= other.nnz() {
            (self, other)
        } else {
            (other, self)
        };
        let small: Vec<(&RootVec, &QPoly)> = sparse.terms().collect();
        let grid = &self.grid;
        let coeffs = grid
            .grades
            .par_iter()
            .map(|mu| {
                let mut acc = QPoly::zero();
                for (nu, a) in &small {
                    if !nu.le_componentwise(mu) {
                        continue;
                    }
                    if let Some(j) = grid.position(&(mu - nu)) {
                        let b = &dense.coeffs[j];
                        if !b.is_zero() {
                            acc += &(*a * b);
                        }
                    }
                }
                acc
            })
            .collect();
        Ok(LatticeSeries {
            grid: Arc::clone(grid),
            coeffs,
        })
    }

    /// Quotient by a series whose constant term is `±1`.
    pub fn div(&self, denom: &LatticeSeries) -> Result<LatticeSeries> {
        self.grid.compatible(&denom.grid)?;
        let d0 = denom.coeffs[0].clone();
        let unit = d0.is_constant() && d0.constant_term().abs().is_one();
        if !unit {
            return Err(Error::NonUnitConstant);
        }
        let negate = d0.constant_term().is_negative();
        let rest: Vec<(&RootVec, &QPoly)> = denom.terms().filter(|(g, _)| !g.is_zero()).collect();
        let mut q: Vec<QPoly> = Vec::with_capacity(self.coeffs.len());
        for (i, mu) in self.grid.grades.iter().enumerate() {
            let mut acc = self.coeffs[i].clone();
            for (nu, d) in &rest {
                if !nu.le_componentwise(mu) {
                    continue;
                }
                if let Some(j) = self.grid.position(&(mu - nu)) {
                    // j < i since ν ≠ 0 lowers the height
                    if !q[j].is_zero() {
                        acc -= &(&q[j] * *d);
                    }
                }
            }
            q.push(if negate { -acc } else { acc });
        }
        Ok(LatticeSeries {
            grid: Arc::clone(&self.grid),
            coeffs: q,
        })
    }

    pub fn nnz(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(QPoly::is_zero)
    }
}

impl std::ops::Add for &LatticeSeries {
    type Output = LatticeSeries;
    fn add(self, rhs: &LatticeSeries) -> LatticeSeries {
        self.grid.compatible(&rhs.grid).expect("profiles differ");
        LatticeSeries {
            grid: Arc::clone(&self.grid),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl std::ops::Sub for &LatticeSeries {
    type Output = LatticeSeries;
    fn sub(self, rhs: &LatticeSeries) -> LatticeSeries {
        self.grid.compatible(&rhs.grid).expect("profiles differ");
        LatticeSeries {
            grid: Arc::clone(&self.grid),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}
