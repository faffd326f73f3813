//! Hodge-theoretic data of a tuple `(g, E, μ, c)`.
//!
//! `U` is the irreducible module of highest weight `μ` for the semisimple part
//! (the outer tensor product over the factors). `V` is `U` itself when `U` is
//! of real type and `c = 0`, and `U ⊕ U*` otherwise, with the center acting on
//! `U` by `c` and on `U*` by `-c`.

use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational;
use crate::repdata::{graded_character, weyl_dimension, GradedCharacter, DEFAULT_WEIGHT_CAP};
use crate::rootdata::{
    is_half_integer, root_datum, root_eval, Family, GradingElement, SimpleType, Weight,
};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlgebraFactor {
    #[serde(rename = "type")]
    pub ty: SimpleType,
    pub e: GradingElement,
    pub mu: Weight,
}

impl AlgebraFactor {
    pub fn new(ty: SimpleType, e: GradingElement, mu: Weight) -> Result<Self> {
        let d = root_datum(ty);
        d.check_grading(&e)?;
        d.check_weight(&mu)?;
        if !mu.is_dominant() {
            return Err(Error::NotDominant(mu.to_string()));
        }
        Ok(AlgebraFactor { ty, e, mu })
    }

    /// `(μ + μ*)(E)`, the number of eigenvalues of `U` minus one.
    pub fn eigenvalue_span(&self) -> i64 {
        let d = root_datum(self.ty);
        let s = d.eval_on_grading(&self.mu.add(&d.dual_weight(&self.mu)), &self.e);
        debug_assert!(s.is_integer());
        s.to_integer()
    }

    pub fn dual(&self) -> AlgebraFactor {
        let d = root_datum(self.ty);
        AlgebraFactor {
            ty: self.ty,
            e: self.e.clone(),
            mu: d.dual_weight(&self.mu),
        }
    }
}

/// Factors are ordered by type, then by the list of graded nodes, then by
/// weight with larger leading coordinates first, so `A^1` precedes `A^r`
/// and `ω_1` precedes `ω_r`.
impl Ord for AlgebraFactor {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let nodes =
            |e: &GradingElement| -> Vec<usize> { (0..e.rank()).filter(|&i| e.is_set(i)).collect() };
        self.ty
            .cmp(&other.ty)
            .then_with(|| nodes(&self.e).cmp(&nodes(&other.e)))
            .then_with(|| other.mu.coords().cmp(self.mu.coords()))
    }
}

impl PartialOrd for AlgebraFactor {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for AlgebraFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.ty, self.e, self.mu)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HodgeTuple {
    pub factors: Vec<AlgebraFactor>,
    #[serde(with = "rational::serde_str")]
    pub c: Rational64,
}

impl HodgeTuple {
    pub fn new(factors: Vec<AlgebraFactor>, c: Rational64) -> Self {
        HodgeTuple { factors, c }
    }

    pub fn simple(ty: SimpleType, e: GradingElement, mu: Weight, c: Rational64) -> Result<Self> {
        Ok(HodgeTuple {
            factors: vec![AlgebraFactor::new(ty, e, mu)?],
            c,
        })
    }

    /// `μ(E)` summed over factors.
    pub fn mu_e(&self) -> Rational64 {
        self.factors.iter().fold(Rational64::zero(), |s, f| {
            s + root_datum(f.ty).eval_on_grading(&f.mu, &f.e)
        })
    }

    /// `μ*(E)` summed over factors.
    pub fn dual_mu_e(&self) -> Rational64 {
        self.factors.iter().fold(Rational64::zero(), |s, f| {
            let d = root_datum(f.ty);
            s + d.eval_on_grading(&d.dual_weight(&f.mu), &f.e)
        })
    }

    /// `m = μ(E) + c`.
    pub fn m(&self) -> Rational64 {
        self.mu_e() + self.c
    }

    /// `m* = μ*(E) - c`.
    pub fn m_dual(&self) -> Rational64 {
        self.dual_mu_e() - self.c
    }

    /// The same Hodge representation described through `(μ*, -c)`.
    pub fn dual(&self) -> HodgeTuple {
        HodgeTuple {
            factors: self.factors.iter().map(AlgebraFactor::dual).collect(),
            c: -self.c,
        }
    }

    pub fn is_self_dual(&self) -> bool {
        self.factors.iter().all(|f| f.dual() == *f)
    }

    /// `(μ + μ*)(E) + 1`, the number of distinct eigenvalues of `E` on `U`.
    pub fn eigenvalue_count(&self) -> i64 {
        self.factors
            .iter()
            .map(AlgebraFactor::eigenvalue_span)
            .sum::<i64>()
            + 1
    }

    pub fn validate(&self) -> Result<()> {
        if self.factors.is_empty() {
            return Err(Error::InvalidTuple("no simple factors".into()));
        }
        for (i, f) in self.factors.iter().enumerate() {
            let d = root_datum(f.ty);
            d.check_grading(&f.e)?;
            d.check_weight(&f.mu)?;
            if !f.mu.is_dominant() {
                return Err(Error::NotDominant(f.mu.to_string()));
            }
            if f.mu.is_zero() {
                return Err(Error::InvalidTuple(format!(
                    "factor {} has highest weight 0: it acts trivially, so the Hodge \
                     representation is not faithful (a single such factor gives a trivial \
                     level-0 structure)",
                    i + 1
                )));
            }
        }
        let m = self.m();
        if !is_half_integer(&m) {
            return Err(Error::InvalidTuple(format!(
                "m = μ(E) + c = {} is not in ½ℤ",
                rational::format(&m)
            )));
        }
        Ok(())
    }

    pub fn to_string_compact(&self) -> String {
        let parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        format!("{} c={}", parts.join(" ⊕ "), rational::format(&self.c))
    }
}

impl fmt::Display for HodgeTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_compact())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RealityType {
    Real,
    Complex,
    Quaternionic,
}

impl fmt::Display for RealityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RealityType::Real => "real",
            RealityType::Complex => "complex",
            RealityType::Quaternionic => "quaternionic",
        })
    }
}

/// Reality type of the semisimple module `U`, ignoring `c`.
pub fn self_dual_type(t: &HodgeTuple) -> Result<Option<RealityType>> {
    if !t.is_self_dual() {
        return Ok(None);
    }
    let parity = t.factors.iter().fold(Rational64::zero(), |s, f| {
        s + root_datum(f.ty).parity_element_eval(&f.mu, &f.e)
    });
    if !parity.is_integer() {
        return Err(Error::Consistency(format!(
            "μ(T) = {} is not an integer for a self-dual weight",
            rational::format(&parity)
        )));
    }
    Ok(Some(if parity.to_integer() % 2 == 0 {
        RealityType::Real
    } else {
        RealityType::Quaternionic
    }))
}

pub fn reality_type(t: &HodgeTuple) -> Result<RealityType> {
    let inner = self_dual_type(t)?;
    if !t.c.is_zero() {
        return Ok(RealityType::Complex);
    }
    Ok(inner.unwrap_or(RealityType::Complex))
}

/// Graded character of `U` under `E` (convolution over factors).
pub fn u_character(t: &HodgeTuple, cap: u128) -> Result<GradedCharacter> {
    let mut acc: Option<GradedCharacter> = None;
    let mut dim: u128 = 1;
    for f in &t.factors {
        let d = root_datum(f.ty);
        dim = dim.saturating_mul(weyl_dimension(&d, &f.mu)?);
        if dim > cap {
            return Err(Error::DimensionCap { dim, cap });
        }
        let g = graded_character(&d, &f.mu, &f.e, cap)?;
        acc = Some(match acc {
            None => g,
            Some(a) => a.convolve(&g),
        });
    }
    acc.ok_or_else(|| Error::InvalidTuple("no simple factors".into()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HodgeNumbers {
    pub level: u32,
    /// `h^{n,0}, h^{n-1,1}, …, h^{0,n}`.
    pub h: Vec<u64>,
    pub reality: RealityType,
    pub dim_v: u128,
}

impl HodgeNumbers {
    pub fn first(&self) -> u64 {
        self.h[0]
    }
}

pub fn hodge_numbers(t: &HodgeTuple) -> Result<HodgeNumbers> {
    hodge_numbers_with(t, &u_character(t, DEFAULT_WEIGHT_CAP)?)
}

/// Hodge numbers from a precomputed character of `U`.
pub fn hodge_numbers_with(t: &HodgeTuple, u: &GradedCharacter) -> Result<HodgeNumbers> {
    t.validate()?;
    let reality = reality_type(t)?;
    let half = Rational64::new(1, 2);
    let (level2, eigen): (Rational64, Box<dyn Fn(Rational64) -> u64>) = match reality {
        RealityType::Real => {
            if !t.c.is_zero() {
                return Err(Error::InvalidTuple("a real V requires c = 0".into()));
            }
            let u = u.clone();
            (u.top * 2, Box::new(move |k| u.get(&k)))
        }
        _ => {
            let (m, ms) = (t.m(), t.m_dual());
            let c = t.c;
            let (u1, u2) = (u.clone(), u.dual());
            (
                m.max(ms) * 2,
                Box::new(move |k| u1.get(&(k - c)) + u2.get(&(k + c))),
            )
        }
    };
    if !level2.is_integer() || level2 < Rational64::one() {
        return Err(Error::Consistency(format!(
            "level {} is not a positive integer",
            rational::format(&level2)
        )));
    }
    let n = level2.to_integer();
    let h: Vec<u64> = (0..=n)
        .rev()
        .map(|p| eigen(Rational64::from_integer(p) - level2 * half))
        .collect();
    let dim_u = u.dim();
    let dim_v = if reality == RealityType::Real {
        dim_u
    } else {
        2 * dim_u
    };
    let total: u128 = h.iter().map(|&x| u128::from(x)).sum();
    if total != dim_v {
        return Err(Error::InvalidTuple(format!(
            "spectrum of V is not contained in [-n/2, n/2] for n = {n}"
        )));
    }
    if h[0] == 0 {
        return Err(Error::Consistency("h^{n,0} = 0".into()));
    }
    Ok(HodgeNumbers {
        level: n as u32,
        h,
        reality,
        dim_v,
    })
}

/// `dim g^ℓ` for `ℓ = depth, …, -depth`.
pub fn adjoint_grading(f: &AlgebraFactor) -> Vec<u64> {
    let d = root_datum(f.ty);
    let depth = d.highest_root_eval(&f.e);
    let mut dims = vec![0u64; (2 * depth + 1) as usize];
    for a in &d.positive_roots {
        let l = root_eval(a, &f.e);
        dims[(depth - l) as usize] += 1;
        dims[(depth + l) as usize] += 1;
    }
    dims[depth as usize] += d.rank() as u64;
    dims
}

pub fn depth(f: &AlgebraFactor) -> u32 {
    root_datum(f.ty).highest_root_eval(&f.e) as u32
}

pub fn is_horizontal(t: &HodgeTuple) -> bool {
    t.factors.iter().all(|f| depth(f) == 1)
}

/// Contact is only defined for a simple algebra; products report `false`.
pub fn is_contact(t: &HodgeTuple) -> bool {
    match t.factors.as_slice() {
        [f] => {
            let g = adjoint_grading(f);
            g.len() == 5 && g[0] == 1
        }
        _ => false,
    }
}

pub fn is_period_domain(t: &HodgeTuple) -> bool {
    let [f] = t.factors.as_slice() else {
        return false;
    };
    if !t.c.is_zero() {
        return false;
    }
    let r = f.ty.rank();
    if f.mu != Weight::fundamental(r, 1) {
        return false;
    }
    match f.ty.family() {
        Family::C => f.e.is_set(r - 1),
        Family::B => true,
        Family::D => f.e.is_set(r - 2) == f.e.is_set(r - 1),
        _ => false,
    }
}

/// The highest-weight-line criterion for `h^{n,0} = 1`.
///
/// The tuple is first oriented so that `m ≥ m*`; both descriptions give the
/// same Hodge representation, and the criterion is stated for the one whose
/// `U` carries the top eigenvalue.
pub fn is_cy_type(t: &HodgeTuple) -> Result<bool> {
    let reality = reality_type(t)?;
    let oriented = if t.m() < t.m_dual() {
        t.dual()
    } else {
        t.clone()
    };
    let line = oriented.factors.iter().all(|f| {
        f.mu.coords()
            .iter()
            .zip(f.e.coords())
            .all(|(&mu_i, &e_i)| e_i == 1 || mu_i == 0)
    });
    let separated = reality == RealityType::Real || oriented.m() > oriented.m_dual();
    Ok(line && separated)
}

pub fn compact_dim(t: &HodgeTuple) -> u64 {
    t.factors
        .iter()
        .map(|f| {
            let g = adjoint_grading(f);
            let depth = (g.len() - 1) / 2;
            g.iter()
                .enumerate()
                .filter(|(i, _)| (*i as i64 - depth as i64) % 2 == 0)
                .map(|(_, &x)| x)
                .sum::<u64>()
        })
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DomainTable {
    Hermitian,
    Contact,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealForm {
    pub table: DomainTable,
    pub real_form: String,
    pub compact: String,
}

/// Real form and maximal compact subalgebra for the Hermitian and contact
/// gradings of simple algebras; `None` for every other grading.
pub fn real_form(ty: SimpleType, e: &GradingElement) -> Option<RealForm> {
    let r = ty.rank();
    let nodes: Vec<usize> = (0..r).filter(|&i| e.is_set(i)).map(|i| i + 1).collect();
    let herm = |g: String, k: String| RealForm {
        table: DomainTable::Hermitian,
        real_form: g,
        compact: k,
    };
    let cont = |g: String, k: String| RealForm {
        table: DomainTable::Contact,
        real_form: g,
        compact: k,
    };
    use Family::*;
    match (ty.family(), nodes.as_slice()) {
        (A, &[a]) => {
            let b = r + 1 - a;
            Some(herm(format!("su({a},{b})"), format!("s(u({a})+u({b}))")))
        }
        (A, &[1, x]) if x == r && r >= 2 => Some(cont(
            format!("su(2,{})", r - 1),
            format!("s(u(2)+u({}))", r - 1),
        )),
        (B, &[1]) => Some(herm(
            format!("so(2,{})", 2 * r - 1),
            format!("s(o(2)+o({}))", 2 * r - 1),
        )),
        (D, &[1]) => Some(herm(
            format!("so(2,{})", 2 * r - 2),
            format!("s(o(2)+o({}))", 2 * r - 2),
        )),
        (C, &[x]) if x == r => Some(herm(format!("sp({},R)", 2 * r), format!("u({r})"))),
        (D, &[x]) if x + 1 >= r => Some(herm(format!("so*({})", 2 * r), format!("u({r})"))),
        (E, &[1]) | (E, &[6]) if r == 6 => Some(herm("E III".into(), "so(10)+R".into())),
        (E, &[7]) if r == 7 => Some(herm("E VII".into(), "e6+R".into())),
        (B, &[2]) => Some(cont(
            format!("so(4,{})", 2 * r - 3),
            format!("s(o(4)+o({}))", 2 * r - 3),
        )),
        (D, &[2]) => Some(cont(
            format!("so(4,{})", 2 * r - 4),
            format!("s(o(4)+o({}))", 2 * r - 4),
        )),
        (C, &[1]) => Some(cont(
            format!("sp(1,{})", r - 1),
            format!("sp(1)+sp({})", r - 1),
        )),
        (E, &[2]) if r == 6 => Some(cont("E II".into(), "su(6)+su(2)".into())),
        (E, &[1]) if r == 7 => Some(cont("E VI".into(), "so(12)+su(2)".into())),
        (E, &[8]) if r == 8 => Some(cont("E IX".into(), "e7+su(2)".into())),
        (F, &[1]) => Some(cont("F I".into(), "sp(3)+su(2)".into())),
        (G, &[2]) => Some(cont("G".into(), "su(2)+su(2)".into())),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenDim {
    #[serde(with = "rational::serde_str")]
    pub eigenvalue: Rational64,
    pub dim: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HodgeDescriptor {
    pub level: u32,
    pub hodge_numbers: Vec<u64>,
    pub reality: RealityType,
    pub dim_u: u128,
    pub dim_v: u128,
    /// Graded character of `U`, top eigenvalue first.
    pub u_character: Vec<EigenDim>,
    pub horizontal: bool,
    pub contact: bool,
    pub period_domain: bool,
    pub cy_type: bool,
    pub factor_depths: Vec<u32>,
    pub depth: u32,
    /// Adjoint grading per factor, `ℓ = depth, …, -depth`.
    pub adjoint_grading: Vec<Vec<u64>>,
    pub compact_dim: u64,
    pub real_form: Option<RealForm>,
}

/// Full descriptor of a tuple.
pub fn describe(t: &HodgeTuple, cap: u128) -> Result<HodgeDescriptor> {
    t.validate()?;
    let u = u_character(t, cap)?;
    describe_with(t, &u)
}

pub fn describe_with(t: &HodgeTuple, u: &GradedCharacter) -> Result<HodgeDescriptor> {
    let hn = hodge_numbers_with(t, u)?;
    let factor_depths: Vec<u32> = t.factors.iter().map(depth).collect();
    let real_form = match t.factors.as_slice() {
        [f] => real_form(f.ty, &f.e),
        _ => None,
    };
    Ok(HodgeDescriptor {
        level: hn.level,
        hodge_numbers: hn.h,
        reality: hn.reality,
        dim_u: u.dim(),
        dim_v: hn.dim_v,
        u_character: u
            .eigenvalues
            .iter()
            .rev()
            .map(|(&eigenvalue, &dim)| EigenDim { eigenvalue, dim })
            .collect(),
        horizontal: is_horizontal(t),
        contact: is_contact(t),
        period_domain: is_period_domain(t),
        cy_type: is_cy_type(t)?,
        depth: factor_depths.iter().copied().max().unwrap_or(0),
        factor_depths,
        adjoint_grading: t.factors.iter().map(adjoint_grading).collect(),
        compact_dim: compact_dim(t),
        real_form,
    })
}
