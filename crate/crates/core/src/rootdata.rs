//! Untwisted affine root data of simply-laced type.
//!
//! Roots live in simple-root coordinates `(c₀, …, cₙ)`; weights live in the
//! basis `(Λ₀, …, Λₙ, δ)`. The single bridge between the two is
//! `α_i = Σ_j A_{ji} Λ_j + [i = 0] δ`.
//!
//! The real positive roots are also produced as the sequence `β_k` attached
//! to a doubly infinite periodic word `(…, i₋₁, i₀, i₁, …)`:
//!
//! ```text
//! β_k = s_{i₁} ⋯ s_{i_{k-1}} (α_{i_k})          k > 0
//! β_k = s_{i₀} s_{i₋₁} ⋯ s_{i_{k+1}} (α_{i_k})   k ≤ 0
//! ```

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A vector in the root lattice, in the basis `α₀, …, αₙ`.
///
/// Ordered by total height first, then lexicographically, which is the
/// canonical output order everywhere in the crate.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootVec(pub Vec<i64>);

impl RootVec {
    pub fn zero(dim: usize) -> Self {
        RootVec(vec![0; dim])
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = vec![0; dim];
        v[i] = 1;
        RootVec(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Membership in `Q₊`.
    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `c₀`, the pairing with the degree derivation `d`.
    pub fn delta_degree(&self) -> i64 {
        self.0[0]
    }

    /// `Σ_{i≥1} cᵢ`.
    pub fn classical_height(&self) -> i64 {
        self.0[1..].iter().sum()
    }

    pub fn scale(&self, k: i64) -> RootVec {
        RootVec(self.0.iter().map(|&c| c * k).collect())
    }

    /// Componentwise `self ≤ other`.
    pub fn le_componentwise(&self, other: &RootVec) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Ord for RootVec {
    fn cmp(&self, other: &Self) -> Ordering {
        self.height()
            .cmp(&other.height())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for RootVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &RootVec {
    type Output = RootVec;
    fn add(self, rhs: &RootVec) -> RootVec {
        RootVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RootVec {
    type Output = RootVec;
    fn sub(self, rhs: &RootVec) -> RootVec {
        RootVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RootVec {
    type Output = RootVec;
    fn neg(self) -> RootVec {
        RootVec(self.0.iter().map(|a| -a).collect())
    }
}

/// A weight `Σ λ_i Λ_i + c δ`, stored as `(λ₀, …, λₙ; c)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Weight {
    /// `⟨λ, h_i⟩` for `i = 0..=n`.
    pub lambda: Vec<i64>,
    /// Coefficient of `δ`, i.e. `λ(d)`.
    pub delta: Rational64,
}

impl Weight {
    pub fn new(lambda: Vec<i64>, delta: Rational64) -> Self {
        Weight { lambda, delta }
    }

    pub fn zero(dim: usize) -> Self {
        Weight::new(vec![0; dim], Rational64::zero())
    }

    /// `⟨λ, h_i⟩`.
    pub fn pairing(&self, i: usize) -> i64 {
        self.lambda[i]
    }

    pub fn is_dominant(&self) -> bool {
        self.lambda.iter().all(|&l| l >= 0)
    }

    pub fn is_regular_dominant(&self) -> bool {
        self.lambda.iter().all(|&l| l > 0)
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight {
            lambda: self.lambda.iter().zip(&rhs.lambda).map(|(a, b)| a + b).collect(),
            delta: self.delta + rhs.delta,
        }
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight {
            lambda: self.lambda.iter().zip(&rhs.lambda).map(|(a, b)| a - b).collect(),
            delta: self.delta - rhs.delta,
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, l) in self.lambda.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "; {}]", self.delta)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
    E,
}

/// Cartan data of an untwisted affine algebra `X_n^{(1)}`.
#[derive(Clone, Debug)]
pub struct RootDatum {
    family: Family,
    n: usize,
    /// Affine Cartan matrix, `cartan[i][j] = ⟨α_j, h_i⟩`.
    cartan: Vec<Vec<i64>>,
    /// `a_i` with `δ = Σ a_i α_i`.
    marks: Vec<i64>,
    /// `Δ⁺_cl`, as affine vectors with `c₀ = 0`, sorted.
    classical: Vec<RootVec>,
    exponents: Vec<u32>,
    /// Inverse of the classical Cartan matrix.
    classical_inverse: Vec<Vec<Rational64>>,
}

/// Parses labels such as `A1~1`, `D4~1`, `E6~1` or `A_1^(1)`.
pub fn parse_type_label(label: &str) -> Result<(Family, usize)> {
    let bad = || Error::UnsupportedType(label.to_string());
    let s = label.trim();
    let (body, twist) = if let Some((b, t)) = s.split_once('~') {
        (b.to_string(), t.to_string())
    } else if let Some((b, t)) = s.split_once("^(") {
        (b.replace('_', ""), t.trim_end_matches(')').to_string())
    } else {
        return Err(bad());
    };
    if twist != "1" {
        return Err(bad());
    }
    let mut chars = body.chars();
    let family = match chars.next() {
        Some('A') | Some('a') => Family::A,
        Some('D') | Some('d') => Family::D,
        Some('E') | Some('e') => Family::E,
        _ => return Err(bad()),
    };
    let n: usize = chars.as_str().parse().map_err(|_| bad())?;
    let ok = match family {
        Family::A => n >= 1,
        Family::D => n >= 4,
        Family::E => (6..=8).contains(&n),
    };
    if !ok {
        return Err(bad());
    }
    Ok((family, n))
}

/// Classical Cartan matrix in Bourbaki numbering (0-based rows).
fn classical_cartan(family: Family, n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i - 1][j - 1] = -1;
        a[j - 1][i - 1] = -1;
    };
    match family {
        Family::A => {
            for i in 1..n {
                link(i, i + 1);
            }
        }
        Family::D => {
            for i in 1..n - 1 {
                link(i, i + 1);
            }
            link(n - 2, n);
        }
        Family::E => {
            link(1, 3);
            link(3, 4);
            link(2, 4);
            for i in 4..n {
                link(i, i + 1);
            }
        }
    }
    a
}

fn classical_exponents(family: Family, n: usize) -> Vec<u32> {
    let n32 = n as u32;
    let mut e: Vec<u32> = match family {
        Family::A => (1..=n32).collect(),
        Family::D => (1..n32).map(|i| 2 * i - 1).chain([n32 - 1]).collect(),
        Family::E => match n {
            6 => vec![1, 4, 5, 7, 8, 11],
            7 => vec![1, 5, 7, 9, 11, 13, 17],
            _ => vec![1, 7, 11, 13, 17, 19, 23, 29],
        },
    };
    e.sort_unstable();
    e
}

fn rational_inverse(m: &[Vec<i64>]) -> Vec<Vec<Rational64>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Rational64> = row.iter().map(|&x| Rational64::from_integer(x)).collect();
            r.extend((0..n).map(|j| if i == j { Rational64::one() } else { Rational64::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("Cartan matrix of finite type is invertible");
        a.swap(col, piv);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                let pivot_row = a[col].clone();
                for (x, v) in a[r].iter_mut().zip(pivot_row) {
                    *x -= f * v;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

impl RootDatum {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        let label = format!("{family:?}{n}~1");
        parse_type_label(&label)?;
        let cl = classical_cartan(family, n);
        let dim = n + 1;

        // classical positive roots by closure under s_1..s_n
        let simple: Vec<RootVec> = (1..=n).map(|i| RootVec::unit(dim, i)).collect();
        let mut seen: HashSet<RootVec> = simple.iter().cloned().collect();
        let mut frontier = simple;
        while let Some(beta) = frontier.pop() {
            for i in 1..=n {
                let p: i64 = (1..=n).map(|j| cl[i - 1][j - 1] * beta.0[j]).sum();
                if p == 0 {
                    continue;
                }
                let mut img = beta.clone();
                img.0[i] -= p;
                if img.is_nonnegative() && !img.is_zero() && seen.insert(img.clone()) {
                    frontier.push(img);
                }
            }
        }
        let mut classical: Vec<RootVec> = seen.into_iter().collect();
        classical.sort();
        let theta = classical.last().expect("nonempty root system").clone();

        let mut marks = theta.0.clone();
        marks[0] = 1;

        let mut cartan = vec![vec![0i64; dim]; dim];
        cartan[0][0] = 2;
        for i in 1..=n {
            for j in 1..=n {
                cartan[i][j] = cl[i - 1][j - 1];
            }
            // (θ, α_i), symmetric since simply laced
            let t: i64 = (1..=n).map(|j| cl[i - 1][j - 1] * theta.0[j]).sum();
            cartan[0][i] = -t;
            cartan[i][0] = -t;
        }

        Ok(RootDatum {
            family,
            n,
            cartan,
            marks,
            classical,
            exponents: classical_exponents(family, n),
            classical_inverse: rational_inverse(&cl),
        })
    }

    /// Builds the datum for a label such as `A1~1`.
    pub fn from_label(label: &str) -> Result<Self> {
        let (family, n) = parse_type_label(label)?;
        RootDatum::new(family, n)
    }

    pub fn label(&self) -> String {
        format!("{:?}{}~1", self.family, self.n)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Classical rank `n`; also the multiplicity of every imaginary root.
    pub fn rank(&self) -> usize {
        self.n
    }

    /// Number of simple roots, `n + 1`.
    pub fn dim(&self) -> usize {
        self.n + 1
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn classical_positive_roots(&self) -> &[RootVec] {
        &self.classical
    }

    /// `r = |Δ⁺_cl|`.
    pub fn num_classical_positive(&self) -> usize {
        self.classical.len()
    }

    /// `N = dim 𝔤_cl = 2r + n`.
    pub fn classical_dimension(&self) -> usize {
        2 * self.classical.len() + self.n
    }

    /// Coxeter number `h = ht δ`.
    pub fn coxeter_number(&self) -> i64 {
        self.marks.iter().sum()
    }

    pub fn highest_root(&self) -> &RootVec {
        self.classical.last().expect("nonempty root system")
    }

    pub fn delta(&self) -> RootVec {
        RootVec(self.marks.clone())
    }

    pub fn simple_root(&self, i: usize) -> RootVec {
        RootVec::unit(self.dim(), i)
    }

    /// `(α, β)` for the normalized invariant form, `(α_i, α_j) = A_{ij}`.
    pub fn inner(&self, a: &RootVec, b: &RootVec) -> i64 {
        let mut s = 0;
        for (i, &ai) in a.0.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.0.iter().enumerate() {
                s += ai * self.cartan[i][j] * bj;
            }
        }
        s
    }

    /// `⟨β, h_i⟩`.
    pub fn coroot_pairing(&self, i: usize, beta: &RootVec) -> i64 {
        self.cartan[i].iter().zip(&beta.0).map(|(a, b)| a * b).sum()
    }

    /// `s_i(β) = β − ⟨β, h_i⟩ α_i`.
    pub fn reflect_root(&self, i: usize, beta: &RootVec) -> RootVec {
        let mut out = beta.clone();
        out.0[i] -= self.coroot_pairing(i, beta);
        out
    }

    /// Real roots have norm 2, imaginary roots norm 0.
    pub fn is_root(&self, beta: &RootVec) -> bool {
        if beta.is_zero() {
            return false;
        }
        match self.inner(beta, beta) {
            2 => true,
            0 => {
                let d = self.delta();
                let k = beta.0[0];
                k != 0 && *beta == d.scale(k)
            }
            _ => false,
        }
    }

    /// Multiplicity of a root; `0` if `beta` is not a root.
    pub fn multiplicity(&self, beta: &RootVec) -> usize {
        if !self.is_root(beta) {
            0
        } else if self.inner(beta, beta) == 0 {
            self.n
        } else {
            1
        }
    }

    /// Positive roots `(root, multiplicity)` accepted by `keep`, for every
    /// level `k ≤ max_level`, sorted by height.
    fn positive_roots_where(
        &self,
        max_level: i64,
        keep: impl Fn(&RootVec) -> bool,
    ) -> Vec<(RootVec, usize)> {
        let delta = self.delta();
        let mut out = Vec::new();
        for k in 0..=max_level {
            let kd = delta.scale(k);
            for a in &self.classical {
                let plus = &kd + a;
                if keep(&plus) {
                    out.push((plus, 1));
                }
                if k >= 1 {
                    let minus = &kd - a;
                    if keep(&minus) {
                        out.push((minus, 1));
                    }
                }
            }
            if k >= 1 && keep(&kd) {
                out.push((kd, self.n));
            }
        }
        out.sort();
        out
    }

    /// All positive roots of height at most `cap`, with multiplicities.
    pub fn positive_roots_up_to(&self, cap: i64) -> Vec<(RootVec, usize)> {
        let h = self.coxeter_number();
        self.positive_roots_where(cap / h + 1, |b| b.height() <= cap)
    }

    /// Positive roots inside a `(δ-cap, classical-height cap)` box.
    pub fn positive_roots_in(&self, delta_cap: u32, height_cap: u32) -> Vec<(RootVec, usize)> {
        self.positive_roots_where(i64::from(delta_cap), |b| {
            b.delta_degree() <= i64::from(delta_cap) && b.classical_height() <= i64::from(height_cap)
        })
    }

    /// `ρ`: `⟨ρ, h_i⟩ = 1`, `ρ(d) = 0`.
    pub fn rho(&self) -> Weight {
        Weight::new(vec![1; self.dim()], Rational64::zero())
    }

    /// Fundamental weight `Λ_i`.
    pub fn fundamental(&self, i: usize) -> Weight {
        let mut l = vec![0; self.dim()];
        l[i] = 1;
        Weight::new(l, Rational64::zero())
    }

    /// Weight with the given `⟨λ, h_i⟩` and `λ(d) = 0`.
    pub fn weight(&self, lambda: &[i64]) -> Result<Weight> {
        if lambda.len() != self.dim() {
            return Err(Error::Dimension {
                expected: self.dim(),
                got: lambda.len(),
            });
        }
        Ok(Weight::new(lambda.to_vec(), Rational64::zero()))
    }

    /// Image of a root-lattice vector in `(Λ, δ)` coordinates.
    pub fn root_to_weight(&self, beta: &RootVec) -> Weight {
        let lambda = (0..self.dim())
            .map(|j| self.coroot_pairing(j, beta))
            .collect();
        Weight::new(lambda, Rational64::from_integer(beta.0[0]))
    }

    /// Inverse of [`RootDatum::root_to_weight`]; `None` off the root lattice.
    pub fn weight_to_root(&self, w: &Weight) -> Option<RootVec> {
        if !w.delta.is_integer() {
            return None;
        }
        let c0 = w.delta.to_integer();
        let n = self.n;
        // classical system: Σ_{i≥1} A_{ji} c_i = λ_j − A_{j0} c₀
        let rhs: Vec<Rational64> = (1..=n)
            .map(|j| Rational64::from_integer(w.lambda[j] - self.cartan[j][0] * c0))
            .collect();
        let mut coords = vec![c0];
        for i in 0..n {
            let v: Rational64 = (0..n).map(|j| self.classical_inverse[i][j] * rhs[j]).sum();
            if !v.is_integer() {
                return None;
            }
            coords.push(v.to_integer());
        }
        let r = RootVec(coords);
        (self.root_to_weight(&r) == *w).then_some(r)
    }

    /// `s_i(λ) = λ − ⟨λ, h_i⟩ α_i`.
    pub fn reflect_weight(&self, i: usize, w: &Weight) -> Weight {
        let li = w.lambda[i];
        let mut out = w.clone();
        if li == 0 {
            return out;
        }
        for j in 0..self.dim() {
            out.lambda[j] -= li * self.cartan[j][i];
        }
        if i == 0 {
            out.delta -= Rational64::from_integer(li);
        }
        out
    }

    /// Level `Σ a_i ⟨λ, h_i⟩`.
    pub fn level(&self, w: &Weight) -> i64 {
        self.marks.iter().zip(&w.lambda).map(|(a, l)| a * l).sum()
    }
}

/// Builds the root datum for an affine type label.
pub fn build_root_datum(label: &str) -> Result<RootDatum> {
    RootDatum::from_label(label)
}

/// A periodic doubly infinite word `(…, i₋₁, i₀, i₁, …)`, stored as one
/// period `(j₁, …, j_L)` with `i_k = j_{((k−1) mod L) + 1}` for every `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordH {
    period: Vec<usize>,
}

impl WordH {
    /// A word from an explicit period; reducedness is checked when the
    /// sequence `β_k` is generated.
    pub fn from_period(datum: &RootDatum, period: Vec<usize>) -> Result<Self> {
        if period.is_empty() || period.iter().any(|&i| i >= datum.dim()) {
            return Err(Error::Invalid(format!("bad word period {period:?}")));
        }
        Ok(WordH { period })
    }

    /// The default word: one period is a reduced word for the translation
    /// by `−2ρ^∨`, so the two halves of the sequence together run through
    /// every real positive root exactly once.
    pub fn default_for(datum: &RootDatum) -> Self {
        let dim = datum.dim();
        let h = datum.coxeter_number();
        // columns x(α_j) = α_j + ⟨2ρ^∨, ᾱ_j⟩ δ
        let delta = datum.delta();
        let mut x: Vec<RootVec> = (0..dim)
            .map(|j| {
                let shift = if j == 0 { -2 * (h - 1) } else { 2 };
                &RootVec::unit(dim, j) + &delta.scale(shift)
            })
            .collect();
        let mut rev = Vec::new();
        while let Some(j) = (0..dim).find(|&j| !x[j].is_nonnegative()) {
            // x ← x·s_j : column i becomes x(α_i) − A_{ji} x(α_j)
            let xj = x[j].clone();
            for (i, col) in x.iter_mut().enumerate() {
                let a = datum.cartan()[j][i];
                if a != 0 {
                    *col = &*col - &xj.scale(a);
                }
            }
            rev.push(j);
        }
        rev.reverse();
        WordH { period: rev }
    }

    pub fn period(&self) -> &[usize] {
        &self.period
    }

    /// `i_k`.
    pub fn index(&self, k: i64) -> usize {
        let l = self.period.len() as i64;
        self.period[(k - 1).rem_euclid(l) as usize]
    }
}

impl fmt::Display for WordH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.period.iter().map(|i| i.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// Successive `β_k` on one side of the word, maintaining the matrix of the
/// partial product of reflections.
struct BetaWalker<'a> {
    datum: &'a RootDatum,
    word: &'a WordH,
    /// columns `w(α_j)` of the current partial product
    cols: Vec<RootVec>,
    next_k: i64,
    step: i64,
}

impl<'a> BetaWalker<'a> {
    fn new(datum: &'a RootDatum, word: &'a WordH, positive: bool) -> Self {
        let dim = datum.dim();
        BetaWalker {
            datum,
            word,
            cols: (0..dim).map(|j| RootVec::unit(dim, j)).collect(),
            next_k: if positive { 1 } else { 0 },
            step: if positive { 1 } else { -1 },
        }
    }

    fn next(&mut self) -> Result<(i64, RootVec)> {
        let k = self.next_k;
        let i = self.word.index(k);
        let beta = self.cols[i].clone();
        if !beta.is_nonnegative() {
            return Err(Error::NotReduced {
                index: k,
                detail: format!("β_{k} = {beta} is negative"),
            });
        }
        let xi = beta.clone();
        for (j, col) in self.cols.iter_mut().enumerate() {
            let a = self.datum.cartan()[i][j];
            if a != 0 {
                *col = &*col - &xi.scale(a);
            }
        }
        self.next_k += self.step;
        Ok((k, beta))
    }
}

/// `β_k` for a single signed index.
pub fn beta_sequence(datum: &RootDatum, word: &WordH, k: i64) -> Result<RootVec> {
    let mut walker = BetaWalker::new(datum, word, k > 0);
    loop {
        let (j, beta) = walker.next()?;
        if j == k {
            return Ok(beta);
        }
    }
}

/// All `(k, β_k)` whose root satisfies `inside`, generated period by period
/// on both sides until a whole period falls outside. `inside` must be
/// downward closed along the sequence (true for any box in `Q₊`).
pub fn betas_where(
    datum: &RootDatum,
    word: &WordH,
    inside: impl Fn(&RootVec) -> bool,
) -> Result<Vec<(i64, RootVec)>> {
    let l = word.period().len();
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for positive in [true, false] {
        let mut walker = BetaWalker::new(datum, word, positive);
        loop {
            let mut any = false;
            for _ in 0..l {
                let (k, beta) = walker.next()?;
                if inside(&beta) {
                    if datum.inner(&beta, &beta) != 2 || !seen.insert(beta.clone()) {
                        return Err(Error::NotReduced {
                            index: k,
                            detail: format!("β_{k} = {beta} repeats or is not a real root"),
                        });
                    }
                    out.push((k, beta));
                    any = true;
                }
            }
            if !any {
                break;
            }
        }
    }
    out.sort_by_key(|(k, _)| *k);
    Ok(out)
}

/// `β_k` inside a `(δ-cap, classical-height cap)` box.
pub fn betas_in(
    datum: &RootDatum,
    word: &WordH,
    delta_cap: u32,
    height_cap: u32,
) -> Result<Vec<(i64, RootVec)>> {
    betas_where(datum, word, |b| {
        b.delta_degree() <= i64::from(delta_cap) && b.classical_height() <= i64::from(height_cap)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn labels() {
        assert_eq!(parse_type_label("A1~1").unwrap(), (Family::A, 1));
        assert_eq!(parse_type_label("A_4^(1)").unwrap(), (Family::A, 4));
        assert_eq!(parse_type_label("E8~1").unwrap(), (Family::E, 8));
        for bad in ["B3~1", "A2~2", "D3~1", "E9~1", "A0~1", "A2"] {
            assert!(matches!(parse_type_label(bad), Err(Error::UnsupportedType(_))), "{bad}");
        }
    }

    #[test]
    fn small_data() {
        let a1 = build_root_datum("A1~1").unwrap();
        assert_eq!(a1.delta(), RootVec(vec![1, 1]));
        assert_eq!(a1.num_classical_positive(), 1);
        assert_eq!(a1.classical_dimension(), 3);
        assert_eq!(a1.exponents(), &[1]);
        assert_eq!(a1.cartan(), &[vec![2, -2], vec![-2, 2]]);
        let a4 = build_root_datum("A4~1").unwrap();
        assert_eq!(a4.num_classical_positive(), 10);
        assert_eq!(a4.classical_dimension(), 24);
        let a2 = build_root_datum("A2~1").unwrap();
        assert_eq!(a2.exponents(), &[1, 2]);
        assert_eq!(a2.delta(), RootVec(vec![1, 1, 1]));
    }

    /// Root counts, Coxeter numbers and exponent sums of every shipped type.
    #[test]
    fn classical_invariants() {
        let cases = [
            ("A3~1", 6, 4),
            ("D4~1", 12, 6),
            ("D5~1", 20, 8),
            ("E6~1", 36, 12),
            ("E7~1", 63, 18),
            ("E8~1", 120, 30),
        ];
        for (label, r, h) in cases {
            let d = build_root_datum(label).unwrap();
            assert_eq!(d.num_classical_positive(), r, "{label}");
            assert_eq!(d.coxeter_number(), h, "{label}");
            assert_eq!(d.highest_root().height() + 1, h, "{label}");
            let s: u32 = d.exponents().iter().sum();
            assert_eq!(s as usize, r, "{label}");
            assert_eq!(*d.exponents().last().unwrap() as i64, h - 1, "{label}");
            // affine: δ lies in the kernel of the Cartan matrix
            let delta = d.delta();
            assert!((0..d.dim()).all(|i| d.coroot_pairing(i, &delta) == 0));
        }
    }

    #[test]
    fn roots_by_height() {
        let a1 = build_root_datum("A1~1").unwrap();
        let r2 = a1.positive_roots_up_to(2);
        assert_eq!(
            r2,
            vec![
                (RootVec(vec![0, 1]), 1),
                (RootVec(vec![1, 0]), 1),
                (RootVec(vec![1, 1]), 1)
            ]
        );
        let a2 = build_root_datum("A2~1").unwrap();
        assert!(a2.positive_roots_up_to(3).contains(&(RootVec(vec![1, 1, 1]), 2)));
        for label in ["A1~1", "A3~1", "D4~1"] {
            let d = build_root_datum(label).unwrap();
            let simple: Vec<_> = d.positive_roots_up_to(1).into_iter().map(|r| r.0).collect();
            assert_eq!(simple.len(), d.dim());
            assert!(simple.iter().all(|r| r.height() == 1));
        }
    }

    #[test]
    fn default_word_a1() {
        let a1 = build_root_datum("A1~1").unwrap();
        let h = WordH::default_for(&a1);
        assert_eq!(h.period(), &[1, 0]);
        assert_eq!(h.index(1), 1);
        assert_eq!(h.index(0), 0);
        assert_eq!(h.index(-1), 1);
        assert_eq!(beta_sequence(&a1, &h, 1).unwrap(), RootVec(vec![0, 1]));
        assert_eq!(beta_sequence(&a1, &h, 2).unwrap(), RootVec(vec![1, 2]));
        assert_eq!(beta_sequence(&a1, &h, 0).unwrap(), RootVec(vec![1, 0]));
        assert_eq!(beta_sequence(&a1, &h, -1).unwrap(), RootVec(vec![2, 1]));
    }

    /// The word sequence exhausts the real positive roots in a box.
    #[test]
    fn betas_exhaust_real_roots() {
        for label in ["A1~1", "A2~1", "A3~1", "D4~1"] {
            let d = build_root_datum(label).unwrap();
            let h = WordH::default_for(&d);
            assert_eq!(h.period().len() as i64, {
                // ℓ(t_{2ρ^∨}) = Σ_{α>0} ⟨2ρ^∨, α⟩ = 2 Σ ht(α)
                2 * d.classical_positive_roots().iter().map(RootVec::height).sum::<i64>()
            });
            let (dc, hc) = (3, 3 * d.coxeter_number() as u32);
            let mut from_word: Vec<RootVec> =
                betas_in(&d, &h, dc, hc).unwrap().into_iter().map(|x| x.1).collect();
            from_word.sort();
            let mut real: Vec<RootVec> = d
                .positive_roots_in(dc, hc)
                .into_iter()
                .map(|x| x.0)
                .filter(|r| d.inner(r, r) == 2)
                .collect();
            real.sort();
            assert_eq!(from_word, real, "{label}");
        }
    }

    #[test]
    fn non_reduced_override_is_rejected() {
        let a1 = build_root_datum("A1~1").unwrap();
        let bad = WordH::from_period(&a1, vec![1, 1]).unwrap();
        assert!(matches!(beta_sequence(&a1, &bad, 2), Err(Error::NotReduced { .. })));
        assert!(WordH::from_period(&a1, vec![2]).is_err());
    }

    #[test]
    fn weight_bridge() {
        let a2 = build_root_datum("A2~1").unwrap();
        let a0 = a2.root_to_weight(&a2.simple_root(0));
        assert_eq!(a0.lambda, vec![2, -1, -1]);
        assert_eq!(a0.delta, Rational64::one());
        let d = a2.root_to_weight(&a2.delta());
        assert_eq!(d.lambda, vec![0, 0, 0]);
        assert_eq!(a2.weight_to_root(&a0), Some(a2.simple_root(0)));
        assert_eq!(a2.weight_to_root(&a2.rho()), None);
        assert_eq!(a2.level(&a2.rho()), 3);
    }

    fn datum_strategy() -> impl Strategy<Value = RootDatum> {
        prop::sample::select(vec!["A1~1", "A2~1", "A3~1", "D4~1", "E6~1"])
            .prop_map(|l| build_root_datum(l).unwrap())
    }

    proptest! {
        #[test]
        fn reflections_are_involutions(d in datum_strategy(), seed in prop::collection::vec(-5i64..6, 9), i in 0usize..9) {
            let beta = RootVec(seed[..d.dim()].to_vec());
            let i = i % d.dim();
            let once = d.reflect_root(i, &beta);
            prop_assert_eq!(d.reflect_root(i, &once), beta.clone());
            prop_assert_eq!(d.inner(&once, &once), d.inner(&beta, &beta));
        }

        #[test]
        fn weight_action_matches_root_action(d in datum_strategy(), seed in prop::collection::vec(-5i64..6, 9), i in 0usize..9) {
            let beta = RootVec(seed[..d.dim()].to_vec());
            let i = i % d.dim();
            let lhs = d.reflect_weight(i, &d.root_to_weight(&beta));
            let rhs = d.root_to_weight(&d.reflect_root(i, &beta));
            prop_assert_eq!(&lhs, &rhs);
            prop_assert_eq!(d.weight_to_root(&lhs), Some(d.reflect_root(i, &beta)));
        }
    }
}
