//! Bounded exhaustive search for Hodge representations with prescribed
//! Hodge numbers.
//!
//! Candidates are generated factor by factor: for every simple type, every
//! grading element up to diagram automorphisms, and every dominant weight with
//! `(μ+μ*)(E) ≤ n` and `dim U ≤` the dimension bound. Tuples are multisets of
//! candidates, with `c` normalized so that the top eigenvalue of `U ⊗ C_c`
//! is `n/2`. Results are canonicalized and deduplicated.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hodge::{self, describe_with, AlgebraFactor, HodgeDescriptor, HodgeTuple};
use crate::rational;
use crate::repdata::{graded_character, weyl_dimension, GradedCharacter, DEFAULT_WEIGHT_CAP};
use crate::rootdata::{root_datum, Family, GradingElement, RootDatum, SimpleType, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flag {
    Horizontal,
    Contact,
    NonHorizontal,
    PeriodDomain,
    Cy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum PatternEntry {
    Fixed(u64),
    Any,
}

impl PatternEntry {
    pub fn matches(self, x: u64) -> bool {
        match self {
            PatternEntry::Fixed(k) => k == x,
            PatternEntry::Any => true,
        }
    }
}

impl fmt::Display for PatternEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternEntry::Fixed(k) => write!(f, "{k}"),
            PatternEntry::Any => f.write_str("*"),
        }
    }
}

impl FromStr for PatternEntry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "*" => Ok(PatternEntry::Any),
            t => t
                .parse()
                .map(PatternEntry::Fixed)
                .map_err(|_| Error::Parse(format!("bad Hodge pattern entry `{t}`"))),
        }
    }
}

impl TryFrom<String> for PatternEntry {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<PatternEntry> for String {
    fn from(p: PatternEntry) -> String {
        p.to_string()
    }
}

/// Parses a comma-separated Hodge pattern such as `2,*,2`.
pub fn parse_pattern(s: &str) -> Result<Vec<PatternEntry>> {
    s.split(',').map(str::parse).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConstraints {
    pub weight_n: u32,
    pub hodge_pattern: Vec<PatternEntry>,
    pub require: BTreeSet<Flag>,
    pub max_rank: usize,
    pub max_factors: usize,
    pub max_dim_v: Option<u128>,
    pub require_nonzero_middle: bool,
    /// Cap on `dim U` for any weight system computed during the search.
    pub weight_cap: u128,
}

impl SearchConstraints {
    pub fn new(weight_n: u32, hodge_pattern: Vec<PatternEntry>) -> Self {
        SearchConstraints {
            weight_n,
            hodge_pattern,
            require: BTreeSet::new(),
            max_rank: 8,
            max_factors: 3,
            max_dim_v: None,
            require_nonzero_middle: false,
            weight_cap: DEFAULT_WEIGHT_CAP,
        }
    }

    pub fn with_flag(mut self, f: Flag) -> Self {
        self.require.insert(f);
        self
    }

    /// Checks the constraints and returns the effective bound on `dim V`:
    /// the smaller of `max_dim_v` and the fixed pattern sum, falling back to
    /// `weight_cap` when neither is available.
    pub fn validate(&self) -> Result<u128> {
        if self.weight_n == 0 {
            return Err(Error::Unbounded("weight must be positive".into()));
        }
        if self.hodge_pattern.len() != self.weight_n as usize + 1 {
            return Err(Error::Parse(format!(
                "Hodge pattern has {} entries; weight {} needs {}",
                self.hodge_pattern.len(),
                self.weight_n,
                self.weight_n + 1
            )));
        }
        let p = &self.hodge_pattern;
        if p.iter().zip(p.iter().rev()).any(|(a, b)| a != b) {
            return Err(Error::Parse("Hodge pattern must be palindromic".into()));
        }
        if p[0] == PatternEntry::Fixed(0) {
            return Err(Error::Parse("h^{n,0} must be positive".into()));
        }
        if self.max_rank == 0 || self.max_factors == 0 {
            return Err(Error::Unbounded(
                "max rank and max factors must be positive".into(),
            ));
        }
        let fixed_sum: Option<u128> = p
            .iter()
            .map(|e| match e {
                PatternEntry::Fixed(k) => Some(u128::from(*k)),
                PatternEntry::Any => None,
            })
            .sum();
        match (fixed_sum, self.max_dim_v) {
            (Some(s), Some(m)) => Ok(s.min(m)),
            (Some(s), None) => Ok(s),
            (None, Some(m)) => Ok(m),
            (None, None) if self.weight_cap > 0 => Ok(self.weight_cap),
            (None, None) => Err(Error::Unbounded(
                "the Hodge pattern has wildcards and the weight cap is 0, so a maximum \
                 dim V (--max-dim) is required"
                    .into(),
            )),
        }
    }

    fn needs_single_factor(&self) -> bool {
        self.require.contains(&Flag::Contact) || self.require.contains(&Flag::PeriodDomain)
    }

    fn top_bound(&self) -> Option<u64> {
        match self.hodge_pattern.first() {
            Some(PatternEntry::Fixed(k)) => Some(*k),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifiedTuple {
    pub tuple: HodgeTuple,
    pub descriptor: HodgeDescriptor,
    pub notes: Vec<String>,
}

fn factor_orbit(f: &AlgebraFactor) -> Vec<AlgebraFactor> {
    root_datum(f.ty)
        .automorphisms()
        .iter()
        .map(|p| AlgebraFactor {
            ty: f.ty,
            e: f.e.permuted(p),
            mu: f.mu.permuted(p),
        })
        .collect()
}

fn least_in_orbit(f: &AlgebraFactor) -> AlgebraFactor {
    factor_orbit(f)
        .into_iter()
        .min()
        .expect("identity is an automorphism")
}

/// Least representative under diagram automorphisms of each factor, the
/// duality `(μ, c) ↦ (μ*, -c)`, and reordering of factors.
pub fn canonicalize(t: &HodgeTuple) -> HodgeTuple {
    [t.clone(), t.dual()]
        .into_iter()
        .map(|s| {
            let mut factors: Vec<AlgebraFactor> = s.factors.iter().map(least_in_orbit).collect();
            factors.sort();
            HodgeTuple::new(factors, s.c)
        })
        .min()
        .expect("two orientations")
}

/// Hermitian (depth 1) or contact (depth 2, one-dimensional extreme piece)
/// gradings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GradingKind {
    Hermitian,
    Contact,
}

/// All `(type, E)` of the given kind with rank at most `max_rank`.
pub fn classify_gradings(kind: GradingKind, max_rank: usize) -> Vec<(SimpleType, GradingElement)> {
    let mut out = Vec::new();
    for ty in SimpleType::all_up_to(max_rank) {
        let d = root_datum(ty);
        for e in GradingElement::all(ty.rank()) {
            let f = AlgebraFactor {
                ty,
                e: e.clone(),
                mu: d.rho.clone(),
            };
            let g = hodge::adjoint_grading(&f);
            let keep = match kind {
                GradingKind::Hermitian => g.len() == 3,
                GradingKind::Contact => g.len() == 5 && g[0] == 1,
            };
            if keep {
                out.push((ty, e));
            }
        }
    }
    out
}

#[derive(Debug, Clone)]
struct Candidate {
    factor: AlgebraFactor,
    span: i64,
    mu_e: Rational64,
    dim: u128,
    top_dim: u64,
    depth: u32,
    character: GradedCharacter,
}

/// Weights `μ ≠ 0` with `(μ+μ*)(E) ≤ budget` and `dim U(μ) ≤ max_dim`.
fn bounded_weights(d: &RootDatum, e: &GradingElement, budget: i64, max_dim: u128) -> Vec<Weight> {
    let r = d.rank();
    let cost: Vec<Rational64> = (0..r)
        .map(|j| {
            let w = Weight::fundamental(r, j + 1);
            d.eval_on_grading(&w.add(&d.dual_weight(&w)), e)
        })
        .collect();
    let mut out = Vec::new();
    let mut coords = vec![0i64; r];
    fn rec(
        j: usize,
        left: Rational64,
        coords: &mut Vec<i64>,
        cost: &[Rational64],
        d: &RootDatum,
        max_dim: u128,
        out: &mut Vec<Weight>,
    ) {
        if j == coords.len() {
            let w = Weight::new(coords.clone());
            if !w.is_zero() {
                out.push(w);
            }
            return;
        }
        let mut k = 0i64;
        loop {
            let spent = cost[j] * k;
            if spent > left {
                break;
            }
            coords[j] = k;
            // Later coordinates are still zero, so this is a lower bound.
            let dim = weyl_dimension(d, &Weight::new(coords.clone())).unwrap_or(u128::MAX);
            if dim > max_dim {
                break;
            }
            rec(j + 1, left - spent, coords, cost, d, max_dim, out);
            k += 1;
        }
        coords[j] = 0;
    }
    rec(
        0,
        Rational64::from_integer(budget),
        &mut coords,
        &cost,
        d,
        max_dim,
        &mut out,
    );
    out
}

/// Dimension of the top `E`-eigenspace of `U(μ)`: the Levi module of
/// highest weight `μ`, by the Weyl formula over roots with `α(E) = 0`.
fn top_eigenspace_dim(d: &RootDatum, mu: &Weight, e: &GradingElement) -> u64 {
    let shifted = mu.add(&d.rho);
    let (mut num, mut den) = (num_bigint::BigInt::from(1), num_bigint::BigInt::from(1));
    for (root, w) in d.positive_roots.iter().zip(d.positive_root_weights()) {
        if crate::rootdata::root_eval(root, e) == 0 {
            num *= d.scaled_form(&shifted, w);
            den *= d.scaled_form(&d.rho, w);
        }
    }
    let q = num / den;
    u64::try_from(q).unwrap_or(u64::MAX)
}

fn candidates_for(
    ty: SimpleType,
    e: &GradingElement,
    sc: &SearchConstraints,
    dim_bound: u128,
) -> Result<Vec<Candidate>> {
    let d = root_datum(ty);
    let probe = AlgebraFactor {
        ty,
        e: e.clone(),
        mu: d.rho.clone(),
    };
    let grading = hodge::adjoint_grading(&probe);
    let depth = ((grading.len() - 1) / 2) as u32;
    if sc.require.contains(&Flag::Horizontal) && depth != 1 {
        return Ok(vec![]);
    }
    if sc.require.contains(&Flag::Contact) && !(depth == 2 && grading[0] == 1) {
        return Ok(vec![]);
    }
    if sc.require.contains(&Flag::PeriodDomain)
        && !matches!(ty.family(), Family::B | Family::C | Family::D)
    {
        return Ok(vec![]);
    }
    let top_bound = sc.top_bound();
    let mut out = Vec::new();
    for mu in bounded_weights(&d, e, i64::from(sc.weight_n), dim_bound) {
        let top_dim = top_eigenspace_dim(&d, &mu, e);
        if sc.require.contains(&Flag::Cy) && top_dim != 1 {
            continue;
        }
        if top_bound.is_some_and(|b| top_dim > b) {
            continue;
        }
        let dim = weyl_dimension(&d, &mu)?;
        let character = graded_character(&d, &mu, e, sc.weight_cap)?;
        debug_assert_eq!(character.top_dim(), top_dim);
        let factor = AlgebraFactor {
            ty,
            e: e.clone(),
            mu,
        };
        out.push(Candidate {
            span: factor.eigenvalue_span(),
            mu_e: d.eval_on_grading(&factor.mu, e),
            factor,
            dim,
            top_dim,
            depth,
            character,
        });
    }
    Ok(out)
}

fn matches_constraints(sc: &SearchConstraints, d: &HodgeDescriptor, dim_bound: u128) -> bool {
    if d.level != sc.weight_n || d.dim_v > dim_bound {
        return false;
    }
    if !sc
        .hodge_pattern
        .iter()
        .zip(&d.hodge_numbers)
        .all(|(p, &h)| p.matches(h))
    {
        return false;
    }
    if sc.require_nonzero_middle {
        let n = d.hodge_numbers.len();
        if n > 2 && d.hodge_numbers[1..n - 1].contains(&0) {
            return false;
        }
    }
    sc.require.iter().all(|flag| match flag {
        Flag::Horizontal => d.horizontal,
        Flag::NonHorizontal => !d.horizontal,
        Flag::Contact => d.contact,
        Flag::PeriodDomain => d.period_domain,
        Flag::Cy => d.cy_type,
    })
}

/// Notes attached to an emitted tuple: algebra aliases, self-dual modules
/// paired with a nonzero center scalar, and real-form names.
pub fn annotate(t: &HodgeTuple, d: &HodgeDescriptor) -> Result<Vec<String>> {
    let mut notes = Vec::new();
    let a1_count = t
        .factors
        .iter()
        .filter(|f| f.ty.family() == Family::A && f.ty.rank() == 1)
        .count();
    let mut seen = BTreeSet::new();
    for f in &t.factors {
        if !seen.insert(f.ty) {
            continue;
        }
        let alias = match (f.ty.family(), f.ty.rank()) {
            (Family::A, 1) => Some("sl(2) ≅ so(3) ≅ sp(2)"),
            (Family::B, 2) => Some("so(5) ≅ sp(4)"),
            (Family::A, 3) => Some("sl(4) ≅ so(6)"),
            (Family::D, 4) => Some("so(8): triality permutes ω1, ω3, ω4"),
            _ => None,
        };
        if let Some(a) = alias {
            notes.push(format!("alias: {a}"));
        }
    }
    if a1_count >= 2 {
        notes.push("alias: sl(2) ⊕ sl(2) ≅ so(4)".into());
    }
    if t.factors.len() > 1 {
        // Spans add, so eigenvalue counts of a product do not.
        let counts: Vec<String> = t
            .factors
            .iter()
            .map(|f| (f.eigenvalue_span() + 1).to_string())
            .collect();
        notes.push(format!(
            "eigenvalue count {} = {} - {}",
            t.eigenvalue_count(),
            counts.join(" + "),
            t.factors.len() - 1
        ));
    }
    if !t.c.is_zero() {
        if let Some(kind) = hodge::self_dual_type(t)? {
            notes.push(format!(
                "flag: U is self-dual of {kind} type but c = {} ≠ 0, so V = U ⊕ U*",
                rational::format(&t.c)
            ));
        }
    }
    if let Some(rf) = &d.real_form {
        notes.push(format!(
            "real form: {} with maximal compact {}",
            rf.real_form, rf.compact
        ));
    }
    Ok(notes)
}

fn assemble(
    sc: &SearchConstraints,
    chosen: &[&Candidate],
    dim_bound: u128,
) -> Result<Option<(HodgeTuple, HodgeDescriptor)>> {
    let n = Rational64::from_integer(i64::from(sc.weight_n));
    let mu_e = chosen.iter().fold(Rational64::zero(), |s, c| s + c.mu_e);
    let c = n / 2 - mu_e;
    let t = HodgeTuple::new(chosen.iter().map(|c| c.factor.clone()).collect(), c);
    let mut u = chosen[0].character.clone();
    for c in &chosen[1..] {
        u = u.convolve(&c.character);
    }
    let d = describe_with(&t, &u)?;
    if !matches_constraints(sc, &d, dim_bound) {
        return Ok(None);
    }
    Ok(Some((t, d)))
}

/// Every canonical tuple satisfying the constraints, in canonical order.
pub fn enumerate(sc: &SearchConstraints) -> Result<Vec<ClassifiedTuple>> {
    let dim_bound = sc.validate()?;
    let max_factors = if sc.needs_single_factor() {
        1
    } else {
        sc.max_factors
    };

    let partitions: Vec<(SimpleType, GradingElement)> = SimpleType::all_up_to(sc.max_rank)
        .into_iter()
        .flat_map(|ty| {
            GradingElement::all(ty.rank())
                .into_iter()
                .filter(move |e| {
                    let f = AlgebraFactor {
                        ty,
                        e: e.clone(),
                        mu: Weight::zero(ty.rank()),
                    };
                    factor_orbit(&f).iter().all(|g| g.e >= *e)
                })
                .map(move |e| (ty, e))
        })
        .collect();

    let per_partition: Vec<Vec<Candidate>> = partitions
        .par_iter()
        .map(|(ty, e)| candidates_for(*ty, e, sc, dim_bound))
        .collect::<Result<_>>()?;
    let mut cands: Vec<Candidate> = per_partition.into_iter().flatten().collect();
    cands.sort_by(|a, b| a.factor.cmp(&b.factor));

    let n = i64::from(sc.weight_n);
    let top_bound = sc.top_bound();
    let non_horizontal_required = sc.require.contains(&Flag::NonHorizontal);

    let found: Vec<(HodgeTuple, HodgeDescriptor)> = (0..cands.len())
        .into_par_iter()
        .map(|first| -> Result<Vec<(HodgeTuple, HodgeDescriptor)>> {
            let mut acc = Vec::new();
            let mut stack: Vec<usize> = vec![first];
            search(
                sc,
                &cands,
                &mut stack,
                Totals {
                    span: cands[first].span,
                    dim: cands[first].dim,
                    top: u128::from(cands[first].top_dim),
                    deep: cands[first].depth > 1,
                },
                Limits {
                    n,
                    max_factors,
                    dim_bound,
                    top_bound,
                    need_deep: non_horizontal_required,
                },
                &mut acc,
            )?;
            Ok(acc)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();

    let mut unique: BTreeMap<HodgeTuple, HodgeDescriptor> = BTreeMap::new();
    for (t, d) in found {
        let canon = canonicalize(&t);
        if let std::collections::btree_map::Entry::Vacant(slot) = unique.entry(canon) {
            let canon = slot.key();
            let d = if *canon == t {
                d
            } else {
                hodge::describe(canon, sc.weight_cap)?
            };
            slot.insert(d);
        }
    }
    unique
        .into_iter()
        .map(|(tuple, descriptor)| {
            let notes = annotate(&tuple, &descriptor)?;
            Ok(ClassifiedTuple {
                tuple,
                descriptor,
                notes,
            })
        })
        .collect()
}

#[derive(Clone, Copy)]
struct Totals {
    span: i64,
    dim: u128,
    top: u128,
    deep: bool,
}

#[derive(Clone, Copy)]
struct Limits {
    n: i64,
    max_factors: usize,
    dim_bound: u128,
    top_bound: Option<u64>,
    need_deep: bool,
}

fn search(
    sc: &SearchConstraints,
    cands: &[Candidate],
    stack: &mut Vec<usize>,
    totals: Totals,
    lim: Limits,
    acc: &mut Vec<(HodgeTuple, HodgeDescriptor)>,
) -> Result<()> {
    if !lim.need_deep || totals.deep {
        let chosen: Vec<&Candidate> = stack.iter().map(|&i| &cands[i]).collect();
        if let Some(hit) = assemble(sc, &chosen, lim.dim_bound)? {
            acc.push(hit);
        }
    }
    if stack.len() == lim.max_factors {
        return Ok(());
    }
    let last = *stack.last().expect("nonempty");
    for next in last..cands.len() {
        let c = &cands[next];
        let t = Totals {
            span: totals.span + c.span,
            dim: totals.dim.saturating_mul(c.dim),
            top: totals.top.saturating_mul(u128::from(c.top_dim)),
            deep: totals.deep || c.depth > 1,
        };
        if t.span > lim.n || t.dim > lim.dim_bound {
            continue;
        }
        if lim.top_bound.is_some_and(|b| t.top > u128::from(b)) {
            continue;
        }
        stack.push(next);
        search(sc, cands, stack, t, lim, acc)?;
        stack.pop();
    }
    Ok(())
}

/// A group of emitted tuples that differ only in the rank of the factors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyGroup {
    pub family: String,
    pub members: Vec<FamilyMember>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyMember {
    pub ranks: Vec<usize>,
    #[serde(with = "rational::serde_str")]
    pub c: Rational64,
    pub hodge_numbers: Vec<u64>,
}

fn node_label(i: usize, r: usize) -> String {
    if r >= 2 && i == r {
        "r".into()
    } else if i >= 3 && i + 1 == r {
        "r-1".into()
    } else {
        i.to_string()
    }
}

fn factor_pattern(f: &AlgebraFactor) -> String {
    let r = f.ty.rank();
    let name = match f.ty.family() {
        Family::E | Family::F | Family::G => f.ty.to_string(),
        fam => format!("{}_r", fam.letter()),
    };
    let classical = !matches!(f.ty.family(), Family::E | Family::F | Family::G);
    let label = |i: usize| {
        if classical {
            node_label(i, r)
        } else {
            i.to_string()
        }
    };
    let e: Vec<String> = (0..r)
        .filter(|&i| f.e.is_set(i))
        .map(|i| format!("A^{}", label(i + 1)))
        .collect();
    let mu: Vec<String> =
        f.mu.coords()
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, &x)| {
                if x == 1 {
                    format!("ω_{}", label(i + 1))
                } else {
                    format!("{x}ω_{}", label(i + 1))
                }
            })
            .collect();
    format!("({}, {}, {})", name, e.join("+"), mu.join("+"))
}

/// Groups instances into parametric families by their factor patterns.
pub fn group_families(results: &[ClassifiedTuple]) -> Vec<FamilyGroup> {
    let mut groups: BTreeMap<String, Vec<FamilyMember>> = BTreeMap::new();
    for ct in results {
        let key: Vec<String> = ct.tuple.factors.iter().map(factor_pattern).collect();
        groups
            .entry(key.join(" ⊕ "))
            .or_default()
            .push(FamilyMember {
                ranks: ct.tuple.factors.iter().map(|f| f.ty.rank()).collect(),
                c: ct.tuple.c,
                hodge_numbers: ct.descriptor.hodge_numbers.clone(),
            });
    }
    groups
        .into_iter()
        .map(|(family, members)| FamilyGroup { family, members })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factor(ty: &str, e: &[usize], mu: &[i64]) -> AlgebraFactor {
        let ty: SimpleType = ty.parse().unwrap();
        AlgebraFactor::new(
            ty,
            GradingElement::nodes(ty.rank(), e),
            Weight::new(mu.to_vec()),
        )
        .unwrap()
    }

    #[test]
    fn canonical_flip() {
        let t = HodgeTuple::new(vec![factor("A3", &[3], &[1, 0, 0])], Rational64::new(1, 3));
        let c = canonicalize(&t);
        assert_eq!(c.factors[0].e, GradingElement::node(3, 1));
        assert_eq!(canonicalize(&c), c);
    }

    #[test]
    fn grassmannian_pair_has_one_canonical_form() {
        let q = Rational64::new(-1, 4);
        let a = HodgeTuple::new(vec![factor("A3", &[1], &[0, 0, 1])], q);
        let b = HodgeTuple::new(vec![factor("A3", &[3], &[1, 0, 0])], q);
        assert_eq!(canonicalize(&a), canonicalize(&b));
    }

    #[test]
    fn triality() {
        let t = HodgeTuple::new(vec![factor("D4", &[4], &[0, 0, 0, 1])], Rational64::zero());
        let c = canonicalize(&t);
        assert_eq!(c.factors[0].mu, Weight::fundamental(4, 1));
        assert_eq!(c.factors[0].e, GradingElement::node(4, 1));
    }

    #[test]
    fn unbounded_is_rejected() {
        let mut sc = SearchConstraints::new(2, parse_pattern("1,*,1").unwrap());
        assert_eq!(sc.validate().unwrap(), DEFAULT_WEIGHT_CAP);
        sc.weight_cap = 0;
        assert!(matches!(enumerate(&sc), Err(Error::Unbounded(_))));
        let sc = SearchConstraints::new(2, parse_pattern("1,*,2").unwrap());
        assert!(sc.validate().is_err());
    }

    #[test]
    fn hermitian_g2_is_empty() {
        assert!(classify_gradings(GradingKind::Hermitian, 2)
            .iter()
            .all(|(t, _)| t.family() != Family::G));
    }

    #[test]
    fn weight_one_small() {
        let mut sc = SearchConstraints::new(1, parse_pattern("*,*").unwrap());
        sc.max_rank = 3;
        sc.max_dim_v = Some(8);
        sc.max_factors = 1;
        let out = enumerate(&sc).unwrap();
        assert!(out
            .iter()
            .any(|ct| ct.tuple.factors[0].ty.to_string() == "C3"
                && ct.descriptor.hodge_numbers == vec![3, 3]));
    }
}
