//! Weight systems of irreducible highest-weight modules and their gradings.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rootdata::{GradingElement, RootDatum, Weight};

/// Default cap on `dim U` for weight-system computations.
pub const DEFAULT_WEIGHT_CAP: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSystem {
    pub highest_weight: Weight,
    pub entries: BTreeMap<Weight, u64>,
}

impl WeightSystem {
    pub fn dim(&self) -> u128 {
        self.entries.values().map(|&m| u128::from(m)).sum()
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.entries.get(w).copied().unwrap_or(0)
    }
}

fn require_dominant(datum: &RootDatum, mu: &Weight) -> Result<()> {
    datum.check_weight(mu)?;
    if !mu.is_dominant() {
        return Err(Error::NotDominant(mu.to_string()));
    }
    Ok(())
}

/// Weyl dimension formula, evaluated exactly.
pub fn weyl_dimension(datum: &RootDatum, mu: &Weight) -> Result<u128> {
    require_dominant(datum, mu)?;
    let shifted = mu.add(&datum.rho);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for alpha in datum.positive_root_weights() {
        num *= datum.scaled_form(&shifted, alpha);
        den *= datum.scaled_form(&datum.rho, alpha);
    }
    debug_assert!((&num % &den).is_zero());
    (num / den)
        .to_u128()
        .ok_or_else(|| Error::ResourceLimit(format!("dim U({mu}) does not fit in 128 bits")))
}

/// Depth of `λ` below `μ`: the height of `μ - λ` in the root lattice.
fn depth_below(datum: &RootDatum, mu: &Weight, lambda: &Weight) -> i64 {
    let s = datum
        .root_coords(&mu.sub(lambda))
        .into_iter()
        .fold(Rational64::zero(), |a, b| a + b);
    s.to_integer()
}

/// Dominant weights of `U(μ)` with multiplicities (Freudenthal recursion).
pub fn dominant_multiplicities(datum: &RootDatum, mu: &Weight) -> BTreeMap<Weight, u64> {
    let roots = datum.positive_root_weights();

    // Every dominant weight below μ is reached from μ through dominant weights
    // by subtracting positive roots.
    let mut seen: HashSet<Weight> = HashSet::from([mu.clone()]);
    let mut queue = VecDeque::from([mu.clone()]);
    while let Some(l) = queue.pop_front() {
        for a in roots {
            let n = l.sub(a);
            if n.is_dominant() && seen.insert(n.clone()) {
                queue.push_back(n);
            }
        }
    }
    let mut order: Vec<(i64, Weight)> = seen
        .into_iter()
        .map(|l| (depth_below(datum, mu, &l), l))
        .collect();
    order.sort();

    let top = mu.add(&datum.rho);
    let top_norm = i128::from(datum.scaled_form(&top, &top));
    let mut mult: HashMap<Weight, u64> = HashMap::new();
    mult.insert(mu.clone(), 1);
    for (_, l) in order.into_iter().skip(1) {
        let mut num: i128 = 0;
        for a in roots {
            let mut n = l.add(a);
            loop {
                let dom = datum.dominant_conjugate(&n);
                match mult.get(&dom) {
                    Some(&m) => {
                        num += i128::from(datum.scaled_form(&n, a)) * i128::from(m);
                        n = n.add(a);
                    }
                    None => break,
                }
            }
        }
        let lr = l.add(&datum.rho);
        let den = top_norm - i128::from(datum.scaled_form(&lr, &lr));
        debug_assert!(den > 0 && (2 * num) % den == 0);
        let m = (2 * num / den) as u64;
        mult.insert(l, m);
    }
    mult.into_iter().collect()
}

/// Weyl orbit of a dominant weight.
pub fn weyl_orbit(datum: &RootDatum, lambda: &Weight) -> Vec<Weight> {
    let mut seen: HashSet<Weight> = HashSet::from([lambda.clone()]);
    let mut queue = VecDeque::from([lambda.clone()]);
    let mut out = Vec::new();
    while let Some(w) = queue.pop_front() {
        for i in 0..datum.rank() {
            if w.coords()[i] > 0 {
                let n = datum.reflect(&w, i);
                if seen.insert(n.clone()) {
                    queue.push_back(n);
                }
            }
        }
        out.push(w);
    }
    out
}

fn check_cap(datum: &RootDatum, mu: &Weight, cap: u128) -> Result<u128> {
    let dim = weyl_dimension(datum, mu)?;
    if dim > cap {
        return Err(Error::DimensionCap { dim, cap });
    }
    Ok(dim)
}

/// Complete weight system of `U(μ)`, provided `dim U(μ) ≤ cap`.
pub fn weight_system(datum: &RootDatum, mu: &Weight, cap: u128) -> Result<WeightSystem> {
    check_cap(datum, mu, cap)?;
    let mut entries = BTreeMap::new();
    for (l, m) in dominant_multiplicities(datum, mu) {
        for w in weyl_orbit(datum, &l) {
            entries.insert(w, m);
        }
    }
    Ok(WeightSystem {
        highest_weight: mu.clone(),
        entries,
    })
}

/// Eigenvalue decomposition of `U(μ)` under a grading element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedCharacter {
    pub eigenvalues: BTreeMap<Rational64, u64>,
    pub top: Rational64,
    pub bottom: Rational64,
}

impl GradedCharacter {
    /// Builds from a nonempty eigenvalue map, checking there are no gaps.
    pub fn from_map(eigenvalues: BTreeMap<Rational64, u64>) -> Result<Self> {
        let eigenvalues: BTreeMap<Rational64, u64> =
            eigenvalues.into_iter().filter(|(_, d)| *d > 0).collect();
        let (&bottom, _) = eigenvalues
            .first_key_value()
            .ok_or_else(|| Error::Consistency("empty graded character".into()))?;
        let (&top, _) = eigenvalues.last_key_value().expect("nonempty");
        let span = top - bottom;
        if !span.is_integer() || span.to_integer() + 1 != eigenvalues.len() as i64 {
            return Err(Error::Consistency(format!(
                "eigenvalues from {bottom} to {top} are not an unbroken unit-step progression"
            )));
        }
        Ok(GradedCharacter {
            eigenvalues,
            top,
            bottom,
        })
    }

    pub fn dim(&self) -> u128 {
        self.eigenvalues.values().map(|&d| u128::from(d)).sum()
    }

    pub fn get(&self, x: &Rational64) -> u64 {
        self.eigenvalues.get(x).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn top_dim(&self) -> u64 {
        self.get(&self.top)
    }

    /// Dimensions from the top eigenvalue down.
    pub fn dims_top_down(&self) -> Vec<u64> {
        self.eigenvalues.values().rev().copied().collect()
    }

    /// Character of the dual module: eigenvalues negated.
    pub fn dual(&self) -> GradedCharacter {
        GradedCharacter {
            eigenvalues: self.eigenvalues.iter().map(|(k, &d)| (-k, d)).collect(),
            top: -self.bottom,
            bottom: -self.top,
        }
    }

    /// Character of a tensor product: eigenvalues add, dimensions multiply.
    pub fn convolve(&self, other: &GradedCharacter) -> GradedCharacter {
        let mut out: BTreeMap<Rational64, u64> = BTreeMap::new();
        for (a, &x) in &self.eigenvalues {
            for (b, &y) in &other.eigenvalues {
                *out.entry(a + b).or_default() += x * y;
            }
        }
        GradedCharacter {
            eigenvalues: out,
            top: self.top + other.top,
            bottom: self.bottom + other.bottom,
        }
    }
}

/// Linear functional `w ↦ w(E)` as coefficients on ω-coordinates.
fn grading_functional(datum: &RootDatum, e: &GradingElement) -> Vec<Rational64> {
    let r = datum.rank();
    (0..r)
        .map(|j| {
            (0..r)
                .filter(|&a| e.is_set(a))
                .fold(Rational64::zero(), |s, a| s + datum.inverse_cartan[a][j])
        })
        .collect()
}

/// Graded character of `U(μ)` under `E`.
pub fn graded_character(
    datum: &RootDatum,
    mu: &Weight,
    e: &GradingElement,
    cap: u128,
) -> Result<GradedCharacter> {
    datum.check_grading(e)?;
    check_cap(datum, mu, cap)?;
    let f = grading_functional(datum, e);
    let eval = |w: &Weight| {
        w.coords()
            .iter()
            .zip(&f)
            .fold(Rational64::zero(), |s, (&x, c)| s + c * x)
    };
    let mut map: BTreeMap<Rational64, u64> = BTreeMap::new();
    for (l, m) in dominant_multiplicities(datum, mu) {
        for w in weyl_orbit(datum, &l) {
            *map.entry(eval(&w)).or_default() += m;
        }
    }
    GradedCharacter::from_map(map)
}

#[cfg(feature = "oracle")]
pub mod oracle {
    //! Kostant's multiplicity formula with an explicit partition function.
    //! Exponential in the rank; intended for cross-checking only.

    use super::*;

    pub const DEFAULT_ORACLE_CAP: u128 = 2000;
    pub const MAX_ORACLE_RANK: usize = 6;

    struct Partitions<'a> {
        roots: &'a [Vec<i64>],
        memo: HashMap<(Vec<i64>, usize), u64>,
    }

    impl Partitions<'_> {
        /// Ways to write `gamma` as a sum of positive roots with index ≥ `k`.
        fn count(&mut self, gamma: &[i64], k: usize) -> u64 {
            if gamma.iter().any(|&x| x < 0) {
                return 0;
            }
            if gamma.iter().all(|&x| x == 0) {
                return 1;
            }
            if k == self.roots.len() {
                return 0;
            }
            let key = (gamma.to_vec(), k);
            if let Some(&v) = self.memo.get(&key) {
                return v;
            }
            let without = self.count(gamma, k + 1);
            let rest: Vec<i64> = gamma
                .iter()
                .zip(&self.roots[k])
                .map(|(g, a)| g - a)
                .collect();
            let with = self.count(&rest, k);
            self.memo.insert(key, without + with);
            without + with
        }
    }

    /// `W·v` for regular dominant `v`, each element with the sign of its Weyl element.
    fn signed_orbit(datum: &RootDatum, v: &Weight) -> Vec<(Weight, i64)> {
        let mut seen: HashSet<Weight> = HashSet::from([v.clone()]);
        let mut frontier = vec![v.clone()];
        let mut out = vec![(v.clone(), 1)];
        let mut sign = 1;
        while !frontier.is_empty() {
            sign = -sign;
            let mut next = Vec::new();
            for w in &frontier {
                for i in 0..datum.rank() {
                    let n = datum.reflect(w, i);
                    if seen.insert(n.clone()) {
                        out.push((n.clone(), sign));
                        next.push(n);
                    }
                }
            }
            frontier = next;
        }
        out
    }

    fn integral_root_coords(datum: &RootDatum, w: &Weight) -> Vec<i64> {
        datum
            .root_coords(w)
            .into_iter()
            .map(|c| {
                assert!(c.is_integer(), "expected a root-lattice element");
                c.to_integer()
            })
            .collect()
    }

    pub fn oracle_weight_system(datum: &RootDatum, mu: &Weight, cap: u128) -> Result<WeightSystem> {
        if datum.rank() > MAX_ORACLE_RANK {
            return Err(Error::ResourceLimit(format!(
                "oracle limited to rank {MAX_ORACLE_RANK}"
            )));
        }
        check_cap(datum, mu, cap)?;
        let orbit = signed_orbit(datum, &mu.add(&datum.rho));
        let mut parts = Partitions {
            roots: &datum.positive_roots,
            memo: HashMap::new(),
        };
        // Every weight lies in μ - Q+ above the lowest weight -μ*.
        let bound = integral_root_coords(datum, &mu.add(&datum.dual_weight(mu)));
        let simple: Vec<Weight> = (0..datum.rank())
            .map(|i| {
                let mut v = vec![0; datum.rank()];
                v[i] = 1;
                datum.root_to_weight(&v)
            })
            .collect();
        let mut entries = BTreeMap::new();
        let mut k = vec![0i64; datum.rank()];
        loop {
            let lambda = k
                .iter()
                .zip(&simple)
                .fold(mu.clone(), |acc, (&ki, a)| acc.sub(&a.scale(ki)));
            let target = lambda.add(&datum.rho);
            let m: i64 = orbit
                .iter()
                .map(|(w, s)| {
                    let gamma = integral_root_coords(datum, &w.sub(&target));
                    s * parts.count(&gamma, 0) as i64
                })
                .sum();
            assert!(m >= 0, "negative Kostant multiplicity");
            if m > 0 {
                entries.insert(lambda, m as u64);
            }
            // Odometer over the box 0 ≤ k ≤ bound.
            let mut i = 0;
            while i < k.len() {
                if k[i] < bound[i] {
                    k[i] += 1;
                    break;
                }
                k[i] = 0;
                i += 1;
            }
            if i == k.len() {
                break;
            }
        }
        Ok(WeightSystem {
            highest_weight: mu.clone(),
            entries,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{root_datum, SimpleType};

    fn datum(s: &str) -> std::sync::Arc<RootDatum> {
        root_datum(s.parse::<SimpleType>().unwrap())
    }

    fn w(v: &[i64]) -> Weight {
        Weight::new(v.to_vec())
    }

    #[test]
    fn dimensions() {
        for r in 1..=6 {
            let d = datum(&format!("A{r}"));
            assert_eq!(
                weyl_dimension(&d, &Weight::fundamental(r, 1)).unwrap(),
                r as u128 + 1
            );
        }
        assert_eq!(
            weyl_dimension(&datum("E6"), &Weight::fundamental(6, 1)).unwrap(),
            27
        );
        assert_eq!(
            weyl_dimension(&datum("D6"), &Weight::fundamental(6, 6)).unwrap(),
            32
        );
        assert_eq!(
            weyl_dimension(&datum("E8"), &Weight::fundamental(8, 8)).unwrap(),
            248
        );
        assert_eq!(
            weyl_dimension(&datum("E7"), &Weight::fundamental(7, 7)).unwrap(),
            56
        );
        assert_eq!(
            weyl_dimension(&datum("F4"), &Weight::fundamental(4, 4)).unwrap(),
            26
        );
        assert_eq!(
            weyl_dimension(&datum("G2"), &Weight::fundamental(2, 1)).unwrap(),
            7
        );
        assert!(weyl_dimension(&datum("A2"), &w(&[1, -1])).is_err());
    }

    #[test]
    fn adjoint_of_a1() {
        let ws = weight_system(&datum("A1"), &w(&[2]), DEFAULT_WEIGHT_CAP).unwrap();
        let expect: BTreeMap<Weight, u64> = [(w(&[2]), 1), (w(&[0]), 1), (w(&[-2]), 1)].into();
        assert_eq!(ws.entries, expect);
    }

    #[test]
    fn adjoint_of_a2() {
        let ws = weight_system(&datum("A2"), &w(&[1, 1]), DEFAULT_WEIGHT_CAP).unwrap();
        assert_eq!(ws.entries.len(), 7);
        assert_eq!(ws.multiplicity(&w(&[0, 0])), 2);
        assert_eq!(ws.dim(), 8);
    }

    #[test]
    fn c3_omega3() {
        let ws = weight_system(&datum("C3"), &w(&[0, 0, 1]), DEFAULT_WEIGHT_CAP).unwrap();
        assert_eq!(ws.dim(), 14);
    }

    #[test]
    fn cap_is_enforced() {
        let err = weight_system(&datum("E8"), &Weight::fundamental(8, 1), 1000).unwrap_err();
        assert_eq!(
            err,
            Error::DimensionCap {
                dim: 3875,
                cap: 1000
            }
        );
    }

    #[test]
    fn graded_characters() {
        let e7 = datum("E7");
        let gc = graded_character(
            &e7,
            &Weight::fundamental(7, 1),
            &GradingElement::node(7, 7),
            DEFAULT_WEIGHT_CAP,
        )
        .unwrap();
        assert_eq!(gc.dims_top_down(), vec![27, 79, 27]);
        let d4 = datum("D4");
        let gc = graded_character(
            &d4,
            &Weight::fundamental(4, 4),
            &GradingElement::node(4, 4),
            DEFAULT_WEIGHT_CAP,
        )
        .unwrap();
        assert_eq!(gc.dims_top_down(), vec![1, 6, 1]);
    }

    #[test]
    fn gaps_are_rejected() {
        let map: BTreeMap<Rational64, u64> = [
            (Rational64::from_integer(0), 1),
            (Rational64::from_integer(2), 1),
        ]
        .into();
        assert!(GradedCharacter::from_map(map).is_err());
    }
}
