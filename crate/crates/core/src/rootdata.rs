//! Root data of the simple complex Lie algebras.
//!
//! Nodes follow the Bourbaki numbering (1-based in the mathematical notation,
//! 0-based in every vector here). Weights are stored in the basis of
//! fundamental weights, roots in the basis of simple roots.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    fn admits(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

/// A simple Lie algebra type from the isomorphism-free list
/// `A_r (r≥1), B_r (r≥2), C_r (r≥3), D_r (r≥4), E6, E7, E8, F4, G2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if family.admits(rank) {
            Ok(SimpleType { family, rank })
        } else {
            Err(Error::InadmissibleType {
                name: format!("{}{}", family.letter(), rank),
                reason: inadmissible_reason(family, rank),
            })
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Every admissible type of rank at most `max_rank`, in the canonical order.
    pub fn all_up_to(max_rank: usize) -> Vec<SimpleType> {
        let mut out: Vec<SimpleType> = Family::ALL
            .iter()
            .flat_map(|&f| (1..=max_rank).filter_map(move |r| SimpleType::new(f, r).ok()))
            .collect();
        out.sort();
        out
    }

    /// Dimension of the Lie algebra, from the classical formulas.
    pub fn algebra_dim(self) -> usize {
        let r = self.rank;
        match self.family {
            Family::A => r * (r + 2),
            Family::B | Family::C => r * (2 * r + 1),
            Family::D => r * (2 * r - 1),
            Family::E => match r {
                6 => 78,
                7 => 133,
                _ => 248,
            },
            Family::F => 52,
            Family::G => 14,
        }
    }

    /// Classical matrix-algebra name, e.g. `sl(4)`, `so(7)`, `sp(6)`, `e7`.
    pub fn classical_name(self) -> String {
        let r = self.rank;
        match self.family {
            Family::A => format!("sl({})", r + 1),
            Family::B => format!("so({})", 2 * r + 1),
            Family::C => format!("sp({})", 2 * r),
            Family::D => format!("so({})", 2 * r),
            Family::E => format!("e{r}"),
            Family::F => "f4".to_string(),
            Family::G => "g2".to_string(),
        }
    }
}

fn inadmissible_reason(family: Family, rank: usize) -> String {
    let redundant = match (family, rank) {
        (Family::B, 1) => Some("B1 is A1"),
        (Family::C, 1) => Some("C1 is A1"),
        (Family::C, 2) => Some("C2 is B2 (sp(4) = so(5))"),
        (Family::D, 2) => Some("D2 is A1+A1, not simple"),
        (Family::D, 3) => Some("D3 is A3 (so(6) = sl(4))"),
        _ => None,
    };
    match redundant {
        Some(why) => format!("{why}; only canonical types are accepted"),
        None => match family {
            Family::A => "type A needs rank >= 1".into(),
            Family::B => "type B needs rank >= 2".into(),
            Family::C => "type C needs rank >= 3".into(),
            Family::D => "type D needs rank >= 4".into(),
            Family::E => "type E exists only in ranks 6, 7, 8".into(),
            Family::F => "type F exists only in rank 4".into(),
            Family::G => "type G exists only in rank 2".into(),
        },
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::Parse("empty algebra name".into()))?;
        let family = match letter.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return Err(Error::Parse(format!("unknown algebra family in `{s}`"))),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("bad rank in algebra `{s}`")))?;
        SimpleType::new(family, rank)
    }
}

impl TryFrom<String> for SimpleType {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<SimpleType> for String {
    fn from(t: SimpleType) -> String {
        t.to_string()
    }
}

/// Integer weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The fundamental weight ω_i, with `i` 1-based.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        Weight(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    /// Applies a node permutation: coordinate `i` moves to node `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Weight {
        let mut v = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            v[perm[i]] = x;
        }
        Weight(v)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &x) in self.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            if x < 0 {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            if x.abs() != 1 {
                write!(f, "{}", x.abs())?;
            }
            write!(f, "ω{}", i + 1)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// A grading element `E = Σ e_i A^i` with `e_i ∈ {0,1}`, not all zero.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct GradingElement(Vec<u8>);

impl GradingElement {
    pub fn new(coords: Vec<u8>) -> Result<Self> {
        if let Some(bad) = coords.iter().find(|&&x| x > 1) {
            return Err(Error::InvalidGrading(format!(
                "grading coefficients must be 0 or 1, found {bad}"
            )));
        }
        if coords.iter().all(|&x| x == 0) {
            return Err(Error::InvalidGrading(
                "grading element is zero (trivial Hodge structure)".into(),
            ));
        }
        Ok(GradingElement(coords))
    }

    /// The single-node grading `A^i`, with `i` 1-based.
    pub fn node(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        GradingElement(v)
    }

    /// Grading with ones exactly at the given 1-based nodes.
    pub fn nodes(rank: usize, nodes: &[usize]) -> Self {
        let mut v = vec![0; rank];
        for &i in nodes {
            v[i - 1] = 1;
        }
        GradingElement::new(v).expect("at least one node")
    }

    /// All `2^rank - 1` nonzero grading elements in lexicographic order.
    pub fn all(rank: usize) -> Vec<GradingElement> {
        let mut out: Vec<GradingElement> = (1u32..(1u32 << rank))
            .map(|mask| {
                GradingElement(
                    (0..rank)
                        .map(|i| ((mask >> (rank - 1 - i)) & 1) as u8)
                        .collect(),
                )
            })
            .collect();
        out.sort();
        out
    }

    pub fn coords(&self) -> &[u8] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_set(&self, i: usize) -> bool {
        self.0[i] == 1
    }

    pub fn permuted(&self, perm: &[usize]) -> GradingElement {
        let mut v = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            v[perm[i]] = x;
        }
        GradingElement(v)
    }
}

impl TryFrom<Vec<u8>> for GradingElement {
    type Error = Error;

    fn try_from(v: Vec<u8>) -> Result<Self> {
        GradingElement::new(v)
    }
}

impl From<GradingElement> for Vec<u8> {
    fn from(e: GradingElement) -> Vec<u8> {
        e.0
    }
}

impl fmt::Display for GradingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &x)| x == 1)
            .map(|(i, _)| format!("A^{}", i + 1))
            .collect();
        f.write_str(&parts.join("+"))
    }
}

#[derive(Debug, Clone)]
pub struct RootDatum {
    pub ty: SimpleType,
    pub cartan: Vec<Vec<i64>>,
    pub inverse_cartan: Vec<Vec<Rational64>>,
    pub positive_roots: Vec<Vec<i64>>,
    pub highest_root: Vec<i64>,
    pub symmetrizer: Vec<i64>,
    pub rho: Weight,
    /// Positive roots in fundamental-weight coordinates, parallel to `positive_roots`.
    root_weights: Vec<Weight>,
    /// `gram_scale · (ω_i, ω_j)`, an integer matrix.
    gram: Vec<Vec<i64>>,
    gram_scale: i64,
    duality: Vec<usize>,
    automorphisms: Vec<Vec<usize>>,
}

/// Edges and squared root lengths (short roots have length² 2).
fn diagram(ty: SimpleType) -> (Vec<i64>, Vec<(usize, usize)>) {
    let r = ty.rank();
    let chain: Vec<(usize, usize)> = (1..r).map(|i| (i - 1, i)).collect();
    match ty.family() {
        Family::A => (vec![2; r], chain),
        Family::B => {
            let mut len = vec![4; r];
            len[r - 1] = 2;
            (len, chain)
        }
        Family::C => {
            let mut len = vec![2; r];
            len[r - 1] = 4;
            (len, chain)
        }
        Family::D => {
            let mut edges: Vec<(usize, usize)> = (1..r - 1).map(|i| (i - 1, i)).collect();
            edges.push((r - 3, r - 1));
            (vec![2; r], edges)
        }
        Family::E => {
            let mut edges = vec![(0, 2), (1, 3), (2, 3)];
            edges.extend((4..r).map(|i| (i - 1, i)));
            (vec![2; r], edges)
        }
        Family::F => (vec![4, 4, 2, 2], chain),
        Family::G => (vec![2, 6], chain),
    }
}

fn rational_inverse(m: &[Vec<i64>]) -> Vec<Vec<Rational64>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Rational64> = row.iter().map(|&x| Rational64::from_integer(x)).collect();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational64::one()
                } else {
                    Rational64::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("Cartan matrices are invertible");
        a.swap(col, pivot);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for row in 0..n {
            if row != col && !a[row][col].is_zero() {
                let f = a[row][col];
                for k in 0..2 * n {
                    let v = a[col][k];
                    a[row][k] -= f * v;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

fn positive_roots_by_closure(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = cartan.len();
    let simple: Vec<Vec<i64>> = (0..r)
        .map(|i| (0..r).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut known: HashSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut all = simple.clone();
    let mut level = simple;
    while !level.is_empty() {
        let mut next = Vec::new();
        for beta in &level {
            for i in 0..r {
                // Length of the α_i-string below β, then the string rule.
                let mut p = 0;
                let mut gamma = beta.clone();
                loop {
                    gamma[i] -= 1;
                    if known.contains(&gamma) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..r).map(|j| cartan[i][j] * beta[j]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    all.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    all
}

fn duality_permutation(ty: SimpleType) -> Vec<usize> {
    let r = ty.rank();
    let mut p: Vec<usize> = (0..r).collect();
    match ty.family() {
        Family::A => p.reverse(),
        Family::D if r % 2 == 1 => p.swap(r - 2, r - 1),
        Family::E if r == 6 => {
            p.swap(0, 5);
            p.swap(2, 4);
        }
        _ => {}
    }
    p
}

fn diagram_automorphisms(ty: SimpleType) -> Vec<Vec<usize>> {
    let r = ty.rank();
    let id: Vec<usize> = (0..r).collect();
    match ty.family() {
        Family::A if r >= 2 => vec![id.clone(), id.into_iter().rev().collect()],
        Family::D if r == 4 => {
            // Permutations of the three outer nodes 1, 3, 4 around node 2.
            let outer = [0usize, 2, 3];
            let perms = [
                [0, 1, 2],
                [0, 2, 1],
                [1, 0, 2],
                [1, 2, 0],
                [2, 0, 1],
                [2, 1, 0],
            ];
            perms
                .iter()
                .map(|p| {
                    let mut m = id.clone();
                    for k in 0..3 {
                        m[outer[k]] = outer[p[k]];
                    }
                    m
                })
                .collect()
        }
        Family::D => {
            let mut s = id.clone();
            s.swap(r - 2, r - 1);
            vec![id, s]
        }
        Family::E if r == 6 => vec![id, duality_permutation(ty)],
        _ => vec![id],
    }
}

/// Builds the full root datum for an admissible type.
pub fn build_root_datum(ty: SimpleType) -> RootDatum {
    let r = ty.rank();
    let (len2, edges) = diagram(ty);
    let mut form = vec![vec![0i64; r]; r];
    for i in 0..r {
        form[i][i] = len2[i];
    }
    for &(i, j) in &edges {
        let b = -len2[i].max(len2[j]) / 2;
        form[i][j] = b;
        form[j][i] = b;
    }
    let cartan: Vec<Vec<i64>> = (0..r)
        .map(|i| (0..r).map(|j| 2 * form[i][j] / form[i][i]).collect())
        .collect();
    let symmetrizer: Vec<i64> = len2.iter().map(|l| l / 2).collect();
    let inverse_cartan = rational_inverse(&cartan);

    let positive_roots = positive_roots_by_closure(&cartan);
    let highest_root = positive_roots
        .last()
        .cloned()
        .expect("nonempty root system");
    let root_weights = positive_roots
        .iter()
        .map(|a| {
            Weight(
                (0..r)
                    .map(|i| (0..r).map(|j| cartan[i][j] * a[j]).sum())
                    .collect(),
            )
        })
        .collect();

    let gram_scale = inverse_cartan
        .iter()
        .flatten()
        .fold(1i64, |acc, x| acc.lcm(x.denom()));
    let gram = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    let v = inverse_cartan[i][j] * symmetrizer[i] * gram_scale;
                    debug_assert!(v.is_integer());
                    v.to_integer()
                })
                .collect()
        })
        .collect();

    RootDatum {
        ty,
        cartan,
        inverse_cartan,
        positive_roots,
        highest_root,
        symmetrizer,
        rho: Weight(vec![1; r]),
        root_weights,
        gram,
        gram_scale,
        duality: duality_permutation(ty),
        automorphisms: diagram_automorphisms(ty),
    }
}

static CACHE: OnceLock<RwLock<HashMap<SimpleType, Arc<RootDatum>>>> = OnceLock::new();

/// Shared, memoized root datum.
pub fn root_datum(ty: SimpleType) -> Arc<RootDatum> {
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(d) = cache.read().expect("root datum cache poisoned").get(&ty) {
        return Arc::clone(d);
    }
    let built = Arc::new(build_root_datum(ty));
    let mut w = cache.write().expect("root datum cache poisoned");
    Arc::clone(w.entry(ty).or_insert(built))
}

impl RootDatum {
    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank() {
            return Err(Error::RankMismatch {
                what: "weight",
                ty: self.ty.to_string(),
                expected: self.rank(),
                found: w.rank(),
            });
        }
        Ok(())
    }

    pub fn check_grading(&self, e: &GradingElement) -> Result<()> {
        if e.rank() != self.rank() {
            return Err(Error::RankMismatch {
                what: "grading element",
                ty: self.ty.to_string(),
                expected: self.rank(),
                found: e.rank(),
            });
        }
        Ok(())
    }

    /// Simple-root coordinates of a weight.
    pub fn root_coords(&self, w: &Weight) -> Vec<Rational64> {
        self.inverse_cartan
            .iter()
            .map(|row| {
                row.iter()
                    .zip(w.coords())
                    .map(|(a, &x)| a * x)
                    .fold(Rational64::zero(), |s, t| s + t)
            })
            .collect()
    }

    /// Fundamental-weight coordinates of an element of the root lattice.
    pub fn root_to_weight(&self, root: &[i64]) -> Weight {
        let r = self.rank();
        Weight(
            (0..r)
                .map(|i| (0..r).map(|j| self.cartan[i][j] * root[j]).sum())
                .collect(),
        )
    }

    /// Positive roots in fundamental-weight coordinates.
    pub fn positive_root_weights(&self) -> &[Weight] {
        &self.root_weights
    }

    /// `w(E)`.
    pub fn eval_on_grading(&self, w: &Weight, e: &GradingElement) -> Rational64 {
        self.root_coords(w)
            .into_iter()
            .zip(e.coords())
            .filter(|(_, &ei)| ei == 1)
            .fold(Rational64::zero(), |s, (c, _)| s + c)
    }

    /// `w(T)` with `T = 2 Σ_{e_i = 0} A^i`.
    pub fn parity_element_eval(&self, w: &Weight, e: &GradingElement) -> Rational64 {
        let s = self
            .root_coords(w)
            .into_iter()
            .zip(e.coords())
            .filter(|(_, &ei)| ei == 0)
            .fold(Rational64::zero(), |s, (c, _)| s + c);
        s * 2
    }

    /// Value of the highest root on `E`.
    pub fn highest_root_eval(&self, e: &GradingElement) -> i64 {
        root_eval(&self.highest_root, e)
    }

    /// `μ* = -w₀(μ)`.
    pub fn dual_weight(&self, w: &Weight) -> Weight {
        Weight(self.duality.iter().map(|&p| w.coords()[p]).collect())
    }

    pub fn duality_permutation(&self) -> &[usize] {
        &self.duality
    }

    /// Dynkin diagram automorphisms as node permutations, identity first.
    pub fn automorphisms(&self) -> &[Vec<usize>] {
        &self.automorphisms
    }

    /// Scaled invariant form on weights: `scale · (λ, ν)`.
    pub fn scaled_form(&self, a: &Weight, b: &Weight) -> i64 {
        let (x, y) = (a.coords(), b.coords());
        let mut s = 0;
        for i in 0..x.len() {
            if x[i] == 0 {
                continue;
            }
            for j in 0..y.len() {
                s += x[i] * self.gram[i][j] * y[j];
            }
        }
        s
    }

    pub fn form_scale(&self) -> i64 {
        self.gram_scale
    }

    /// Simple reflection `s_i` on a weight.
    pub fn reflect(&self, w: &Weight, i: usize) -> Weight {
        let k = w.coords()[i];
        if k == 0 {
            return w.clone();
        }
        Weight(
            w.coords()
                .iter()
                .enumerate()
                .map(|(j, &x)| x - k * self.cartan[j][i])
                .collect(),
        )
    }

    /// Dominant representative of the Weyl orbit of `w`.
    pub fn dominant_conjugate(&self, w: &Weight) -> Weight {
        let mut v = w.clone();
        while let Some(i) = v.coords().iter().position(|&x| x < 0) {
            v = self.reflect(&v, i);
        }
        v
    }
}

/// Value of a root, given in simple-root coordinates, on `E`.
pub fn root_eval(root: &[i64], e: &GradingElement) -> i64 {
    root.iter()
        .zip(e.coords())
        .map(|(&a, &ei)| a * i64::from(ei))
        .sum()
}

/// Is the rational a half-integer (including integers)?
pub fn is_half_integer(x: &Rational64) -> bool {
    (x * 2).is_integer()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> SimpleType {
        s.parse().unwrap()
    }

    #[test]
    fn a2_cartan_and_roots() {
        let d = build_root_datum(ty("A2"));
        assert_eq!(d.cartan, vec![vec![2, -1], vec![-1, 2]]);
        assert_eq!(d.positive_roots.len(), 3);
    }

    #[test]
    fn root_counts_match_dimension() {
        for t in SimpleType::all_up_to(8) {
            let d = build_root_datum(t);
            assert_eq!(
                2 * d.positive_roots.len() + t.rank(),
                t.algebra_dim(),
                "{t}"
            );
        }
    }

    #[test]
    fn g2_and_e8_roots() {
        assert_eq!(build_root_datum(ty("G2")).positive_roots.len(), 6);
        assert_eq!(build_root_datum(ty("E8")).positive_roots.len(), 120);
    }

    #[test]
    fn inverse_is_exact() {
        for t in SimpleType::all_up_to(8) {
            let d = build_root_datum(t);
            let r = t.rank();
            for i in 0..r {
                for j in 0..r {
                    let s = (0..r).fold(Rational64::zero(), |s, k| {
                        s + d.inverse_cartan[i][k] * d.cartan[k][j]
                    });
                    assert_eq!(s, Rational64::from_integer(i64::from(i == j)), "{t}");
                }
            }
        }
    }

    #[test]
    fn symmetrized_cartan_is_symmetric_positive_definite() {
        for t in SimpleType::all_up_to(8) {
            let d = build_root_datum(t);
            let r = t.rank();
            let s: Vec<Vec<i64>> = (0..r)
                .map(|i| (0..r).map(|j| d.symmetrizer[i] * d.cartan[i][j]).collect())
                .collect();
            for i in 0..r {
                for j in 0..r {
                    assert_eq!(s[i][j], s[j][i], "{t}");
                }
            }
            // Leading principal minors via fraction-free elimination.
            let mut m: Vec<Vec<Rational64>> = s
                .iter()
                .map(|row| row.iter().map(|&x| Rational64::from_integer(x)).collect())
                .collect();
            for k in 0..r {
                assert!(m[k][k] > Rational64::zero(), "{t}");
                for i in k + 1..r {
                    let f = m[i][k] / m[k][k];
                    for j in k..r {
                        let v = m[k][j];
                        m[i][j] -= f * v;
                    }
                }
            }
            assert_eq!(d.symmetrizer.iter().min(), Some(&1));
        }
    }

    #[test]
    fn highest_root_is_unique_maximum() {
        for t in SimpleType::all_up_to(8) {
            let d = build_root_datum(t);
            for a in &d.positive_roots {
                assert!(a.iter().zip(&d.highest_root).all(|(x, h)| x <= h), "{t}");
            }
        }
    }

    #[test]
    fn inadmissible_types_are_rejected() {
        for s in ["B1", "C2", "D3", "E5", "F3", "G3", "A0"] {
            assert!(s.parse::<SimpleType>().is_err(), "{s}");
        }
        let msg = "C2".parse::<SimpleType>().unwrap_err().to_string();
        assert!(msg.contains("B2"));
    }

    #[test]
    fn evaluations() {
        let c5 = build_root_datum(ty("C5"));
        for i in 1..=5 {
            assert_eq!(
                c5.eval_on_grading(&Weight::fundamental(5, i), &GradingElement::node(5, 5)),
                Rational64::new(i as i64, 2)
            );
        }
        let e7 = build_root_datum(ty("E7"));
        assert_eq!(
            e7.eval_on_grading(&Weight::fundamental(7, 7), &GradingElement::node(7, 7)),
            Rational64::new(3, 2)
        );
        assert_eq!(e7.highest_root_eval(&GradingElement::node(7, 7)), 1);
        let g2 = build_root_datum(ty("G2"));
        assert_eq!(g2.highest_root_eval(&GradingElement::node(2, 2)), 2);
    }

    #[test]
    fn duality() {
        let a3 = build_root_datum(ty("A3"));
        assert_eq!(
            a3.dual_weight(&Weight::fundamental(3, 1)),
            Weight::fundamental(3, 3)
        );
        let e6 = build_root_datum(ty("E6"));
        assert_eq!(
            e6.dual_weight(&Weight::fundamental(6, 2)),
            Weight::fundamental(6, 2)
        );
        assert_eq!(
            e6.dual_weight(&Weight::fundamental(6, 1)),
            Weight::fundamental(6, 6)
        );
        let d5 = build_root_datum(ty("D5"));
        assert_eq!(
            d5.dual_weight(&Weight::fundamental(5, 4)),
            Weight::fundamental(5, 5)
        );
        let d6 = build_root_datum(ty("D6"));
        assert_eq!(
            d6.dual_weight(&Weight::fundamental(6, 5)),
            Weight::fundamental(6, 5)
        );
    }

    #[test]
    fn duality_matches_longest_element() {
        // -w0(μ) is the dominant conjugate of -μ.
        for t in SimpleType::all_up_to(8) {
            let d = root_datum(t);
            for i in 1..=t.rank() {
                let w = Weight::fundamental(t.rank(), i);
                assert_eq!(
                    d.dual_weight(&w),
                    d.dominant_conjugate(&w.scale(-1)),
                    "{t} ω{i}"
                );
            }
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(Weight::new(vec![1, 0, 2]).to_string(), "ω1+2ω3");
        assert_eq!(Weight::zero(2).to_string(), "0");
        assert_eq!(GradingElement::nodes(4, &[1, 4]).to_string(), "A^1+A^4");
        assert_eq!(GradingElement::all(3).len(), 7);
    }
}
