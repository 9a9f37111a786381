//! Which radicands d give a 3-class group of type (9, 3) for
//! k = Q(∛d, ζ₃).
//!
//! [`necessary_form`] runs the elimination pipeline over the decomposition
//! of d modulo 9 and reports either that d = p^e with p ≡ 1 (mod 9) (the only
//! surviving form) or the first reason that rules d out. [`classify`] adds the
//! external data (the 3-class number h_{Γ,3} of Γ and the unit index u) and
//! upgrades a surviving candidate to a certified (9, 3) verdict when
//! h_{Γ,3} = 9 and u = 1.
//!
//! Class numbers and unit indices are never computed here; they are inputs.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith;
use crate::eisenstein::{rational_cubic_symbol, CubicCharacterValue};
use crate::error::{Error, Result};
use crate::radicand::{self, residue_mod9, GerthForm, Residue9};
use crate::ramification::{self, QStar, RamificationReport};

/// Abelian 3-group as a list of cyclic factor orders, largest first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct ClassGroupShape {
    cyclic_orders: Vec<u64>,
}

impl ClassGroupShape {
    /// Validates that each order is a power of 3 that is at least 3, and
    /// that the orders are non-increasing.
    pub fn new(cyclic_orders: Vec<u64>) -> Result<Self> {
        for &n in &cyclic_orders {
            if n < 3 || arith::log3_exact(n).is_none() {
                return Err(Error::InvalidShape(format!("factor {n} is not a power of 3 above 1")));
            }
        }
        if cyclic_orders.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!(
                "orders {cyclic_orders:?} are not listed in non-increasing order"
            )));
        }
        Ok(Self { cyclic_orders })
    }

    pub fn trivial() -> Self {
        Self { cyclic_orders: Vec::new() }
    }

    pub fn cyclic(n: u64) -> Result<Self> {
        Self::new(vec![n])
    }

    pub fn type_9_3() -> Self {
        Self { cyclic_orders: vec![9, 3] }
    }

    /// Sylow-3 part of a full class-group invariant list (any order of
    /// factors, 1s and non-3 parts allowed).
    pub fn three_part_of(invariants: &[u64]) -> Result<Self> {
        let mut orders: Vec<u64> = invariants
            .iter()
            .map(|&n| 3u64.pow(arith::val3(n)))
            .filter(|&n| n > 1)
            .collect();
        orders.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(orders)
    }

    pub fn cyclic_orders(&self) -> &[u64] {
        &self.cyclic_orders
    }

    pub fn order(&self) -> u64 {
        self.cyclic_orders.iter().product()
    }

    pub fn rank(&self) -> usize {
        self.cyclic_orders.len()
    }

    pub fn is_type_9_3(&self) -> bool {
        self.cyclic_orders == [9, 3]
    }
}

impl TryFrom<Vec<u64>> for ClassGroupShape {
    type Error = Error;
    fn try_from(v: Vec<u64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<ClassGroupShape> for Vec<u64> {
    fn from(s: ClassGroupShape) -> Self {
        s.cyclic_orders
    }
}

impl fmt::Display for ClassGroupShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.cyclic_orders.iter().map(u64::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl FromStr for ClassGroupShape {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::InvalidShape(format!("expected [n, ...], got {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Self::trivial());
        }
        let orders = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::InvalidShape(format!("bad factor {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(orders)
    }
}

fn check_unit_index(u: u64) -> Result<()> {
    match u {
        1 | 3 => Ok(()),
        _ => Err(Error::InvalidUnitIndex(u)),
    }
}

/// h_k = (u/3)·h_Γ². Also valid between 3-parts.
pub fn hk_from_hgamma(h_gamma: u64, u: u64) -> Result<u64> {
    check_unit_index(u)?;
    if h_gamma == 0 {
        return Err(Error::NonIntegralClassNumber { h: h_gamma, u });
    }
    let num = (u as u128) * (h_gamma as u128) * (h_gamma as u128);
    if num % 3 != 0 {
        return Err(Error::NonIntegralClassNumber { h: h_gamma, u });
    }
    u64::try_from(num / 3).map_err(|_| Error::Overflow("class number relation"))
}

/// Input to the (9, 3) equivalence: C_{k,3} ≅ (9, 3) ⇔ C_{Γ,3} ≅ Z/9 and u = 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lemma23Input {
    /// From the 3-class group of k (and optionally a claimed u).
    Forward { c_k: ClassGroupShape, u: Option<u64> },
    /// From the 3-class group of Γ and u.
    Backward { c_gamma: ClassGroupShape, u: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Lemma23Outcome {
    /// Both sides hold.
    Equivalent {
        c_gamma: ClassGroupShape,
        u: u64,
        c_k: ClassGroupShape,
        trace: Vec<String>,
    },
    /// Backward data that rule out type (9, 3) for k.
    NotType93 { h_k3: Option<u64>, trace: Vec<String> },
    NotApplicable { reason: String },
}

pub fn lemma23(input: &Lemma23Input) -> Result<Lemma23Outcome> {
    match input {
        Lemma23Input::Forward { c_k, u } => {
            if !c_k.is_type_9_3() {
                return Ok(Lemma23Outcome::NotApplicable {
                    reason: format!("the equivalence concerns C_k,3 ≅ [9, 3]; got {c_k}"),
                });
            }
            if let Some(u) = u {
                check_unit_index(*u)?;
                if *u == 3 {
                    return Err(Error::Contradiction(
                        "u = 3 gives 27 = h_Γ,3², so 27 would be a square".into(),
                    ));
                }
            }
            let trace = vec![
                "h_k,3 = 27 = (u/3)·h_Γ,3² with u ∈ {1, 3}".to_string(),
                "u = 3 would make 27 a square, so u = 1 and h_Γ,3 = 9".to_string(),
                "C_k,3 ≅ C⁺ × C⁻ with C⁺ ≅ C_Γ,3, so |C⁻| = 27/9 = 3".to_string(),
                "C⁻ is cyclic of order 3 and C⁺ is cyclic of order 9".to_string(),
                "hence C_Γ,3 ≅ Z/9Z and u = 1".to_string(),
            ];
            Ok(Lemma23Outcome::Equivalent {
                c_gamma: ClassGroupShape::cyclic(9)?,
                u: 1,
                c_k: c_k.clone(),
                trace,
            })
        }
        Lemma23Input::Backward { c_gamma, u } => {
            check_unit_index(*u)?;
            let h_k3 = hk_from_hgamma(c_gamma.order(), *u).ok();
            if c_gamma.cyclic_orders() == [9] && *u == 1 {
                let trace = vec![
                    "|C_k,3| = (1/3)·|C_Γ,3|² = 27".to_string(),
                    "|C⁻| = 3 and C_k,3 ≅ C_Γ,3 × C⁻ ≅ Z/9Z × Z/3Z".to_string(),
                ];
                return Ok(Lemma23Outcome::Equivalent {
                    c_gamma: c_gamma.clone(),
                    u: 1,
                    c_k: ClassGroupShape::type_9_3(),
                    trace,
                });
            }
            let mut trace = Vec::new();
            if c_gamma.cyclic_orders() != [9] {
                trace.push(format!("C_Γ,3 = {c_gamma} is not cyclic of order 9"));
            }
            if *u == 3 {
                trace.push("u = 3: h_k,3 = h_Γ,3² is a square and cannot equal 27".to_string());
            }
            if let Some(h) = h_k3 {
                trace.push(format!("h_k,3 = {h}"));
            }
            Ok(Lemma23Outcome::NotType93 { h_k3, trace })
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Form {
    /// p^e, p ≡ 1 (mod 9)
    P1mod9,
    /// p^e, p ≡ 4, 7 (mod 9)
    P47mod9,
    /// 3^e·p^{e₁}, p ≡ 1 (mod 9)
    ThreeP1mod9,
    /// 3^e·p^{e₁}, p ≡ 4, 7 (mod 9)
    ThreeP47mod9,
    /// p^{e₁}q^{f₁} ≡ ±1 (mod 9), p ≡ −q ≡ 1 (mod 9)
    PQ1mod9,
    OtherExcluded,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    Certified93,
    CandidateNeedsData,
    Excluded,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Certified93 => "certified (9, 3)",
            Status::CandidateNeedsData => "candidate (needs h_Γ,3 and u)",
            Status::Excluded => "excluded",
        })
    }
}

/// What an exclusion rests on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Backing {
    /// A published theorem or an unconditional rank bound.
    Theorem,
    /// An open conjecture.
    Conjecture,
    /// The 2w + J case enumeration alone; no independent rank bound applies.
    CaseAnalysis,
    /// External class-number data.
    Data,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ReasonCode {
    /// (a) no prime ≡ 1 (mod 3) divides d
    NoSplitPrime,
    /// (b) two or more primes ≡ 1 (mod 3) divide d
    SeveralSplitPrimes,
    /// (c) d = p^e, p ≡ 4, 7 (mod 9)
    PrimeFourSevenMod9,
    /// (d) d = 3^e·p, p ≡ 1 (mod 9): ambiguous rank 2
    ThreePrimeRankTwo,
    /// (e) d = 3^e·p^{e₁}, p ≡ 4, 7 (mod 9): C_k,3 cyclic of order 3
    ThreePrimeCyclic,
    /// (f) d = p·q ≡ ±1 (mod 9), p ≡ −q ≡ 1 (mod 9): ambiguous rank 2
    PrimePairRankTwo,
    /// (g) remaining mixed forms
    Residual,
    /// the supplied (h_Γ,3, u) contradict type (9, 3)
    ExcludedByData,
}

impl ReasonCode {
    pub fn letter(self) -> &'static str {
        match self {
            ReasonCode::NoSplitPrime => "a",
            ReasonCode::SeveralSplitPrimes => "b",
            ReasonCode::PrimeFourSevenMod9 => "c",
            ReasonCode::ThreePrimeRankTwo => "d",
            ReasonCode::ThreePrimeCyclic => "e",
            ReasonCode::PrimePairRankTwo => "f",
            ReasonCode::Residual => "g",
            ReasonCode::ExcludedByData => "data",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reason {
    pub code: ReasonCode,
    pub backing: Backing,
    pub citation: String,
    pub detail: String,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) {} [{:?}; {}]",
            self.code.letter(),
            self.detail,
            self.backing,
            self.citation
        )
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassData {
    pub h_gamma3: Option<u64>,
    pub u: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    /// Canonical radicand of the field.
    pub d: u64,
    /// The radicand as supplied.
    pub input: u64,
    pub form: Form,
    pub status: Status,
    pub reasons: Vec<Reason>,
    pub trace: Vec<String>,
    pub inputs_used: Option<ClassData>,
    pub t: u32,
    pub q_star: QStar,
    pub sigma_rank: Option<u32>,
    /// (3/p)₃ for the unique prime p ≡ 1 (mod 3) dividing d, when there is one.
    pub cubic_symbol_3: Option<CubicCharacterValue>,
    /// Shape implied by the cited result that excluded d, when it gives one.
    pub predicted_shape: Option<ClassGroupShape>,
    pub certified_shape: Option<ClassGroupShape>,
    pub h_k3: Option<u64>,
}

impl Verdict {
    pub fn is_candidate(&self) -> bool {
        matches!(self.status, Status::CandidateNeedsData | Status::Certified93)
    }

    pub fn first_reason(&self) -> Option<&Reason> {
        self.reasons.first()
    }
}

struct Pipeline<'a> {
    form: &'a GerthForm,
    ram: &'a RamificationReport,
    trace: Vec<String>,
}

impl Pipeline<'_> {
    #[allow(clippy::too_many_arguments)]
    fn exclude(
        mut self,
        d: u64,
        form: Form,
        code: ReasonCode,
        backing: Backing,
        citation: &str,
        detail: String,
        symbol: Option<CubicCharacterValue>,
        predicted: Option<ClassGroupShape>,
    ) -> Verdict {
        self.trace.push(format!("excluded: {detail}"));
        Verdict {
            d,
            input: self.form.d,
            form,
            status: Status::Excluded,
            reasons: vec![Reason {
                code,
                backing,
                citation: citation.to_string(),
                detail,
            }],
            trace: self.trace,
            inputs_used: None,
            t: self.ram.t,
            q_star: self.ram.q_star,
            sigma_rank: self.ram.sigma_rank,
            cubic_symbol_3: symbol,
            predicted_shape: predicted,
            certified_shape: None,
            h_k3: None,
        }
    }
}

/// The necessary condition: CandidateNeedsData exactly when d = p^e with
/// p ≡ 1 (mod 9); otherwise Excluded with the first applicable reason.
pub fn necessary_form(d: u64) -> Result<Verdict> {
    let norm = radicand::require_cube_free(d)?;
    let canonical = norm.canonical();
    let form = radicand::gerth_decompose(d)?;
    let ram = ramification::report(d)?;
    let residue = residue_mod9(d);

    let mut trace = vec![
        format!(
            "d = {d} = {}·{}²; Q(∛{d}) = Q(∛{}), canonical radicand {canonical}",
            norm.a, norm.b, norm.conjugate_d
        ),
        form.to_string(),
        format!(
            "ramification: Γ-ramified primes {:?}, t = {}, q* = {}, rank C^(σ) = {}",
            ram.gamma_ramified,
            ram.t,
            ram.q_star,
            ram.sigma_rank.map_or("unknown".to_string(), |r| r.to_string())
        ),
        "type (9, 3) forces rank C_k,3^(σ) = 1: rank C_k,3 = 2t − s with t = s = 2 would give C_k,3 ≅ (3, 3)"
            .to_string(),
    ];
    let pipe = |trace| Pipeline { form: &form, ram: &ram, trace };

    if form.w == 0 {
        return Ok(pipe(trace).exclude(
            canonical,
            Form::OtherExcluded,
            ReasonCode::NoSplitPrime,
            Backing::Theorem,
            "Gerth 1975, Theorem 5.1",
            "w = 0: C_k,3 ≅ C_Γ,3 × C_Γ,3 has square order, but |C_k,3| = 27".into(),
            None,
            None,
        ));
    }
    if form.w >= 2 {
        let detail = if form.w >= 3 {
            format!("w = {}: 3^w divides h_Γ, contradicting 9 ∥ h_Γ", form.w)
        } else {
            "w = 2: Γ* = Γ₃⁽¹⁾ = Γ·M(p₁)·M(p₂) would have two distinct cubic subextensions, \
             but Gal(Γ₃⁽¹⁾/Γ) ≅ Z/9Z has a unique subgroup of index 3"
                .to_string()
        };
        return Ok(pipe(trace).exclude(
            canonical,
            Form::OtherExcluded,
            ReasonCode::SeveralSplitPrimes,
            Backing::Theorem,
            "genus theory (Ishida 1976) and Galois correspondence",
            detail,
            None,
            None,
        ));
    }

    let (p, _) = form.split_primes()[0];
    let sym = rational_cubic_symbol(3, p)?;
    let symbol = Some(sym);
    let two_w_j = 2 * form.w + form.j;
    trace.push(format!("exactly one prime p = {p} ≡ 1 (mod 3) divides d; 2w + J = {two_w_j}"));
    let p_one_mod9 = p % 9 == 1;

    if form.j == 0 {
        if form.e == 0 {
            if p_one_mod9 {
                trace.push(format!(
                    "d = p^e with p = {p} ≡ 1 (mod 9): the only surviving form; \
                     type (9, 3) now depends on h_Γ,3 and u"
                ));
                return Ok(Verdict {
                    d: canonical,
                    input: d,
                    form: Form::P1mod9,
                    status: Status::CandidateNeedsData,
                    reasons: Vec::new(),
                    trace,
                    inputs_used: None,
                    t: ram.t,
                    q_star: ram.q_star,
                    sigma_rank: ram.sigma_rank,
                    cubic_symbol_3: symbol,
                    predicted_shape: None,
                    certified_shape: None,
                    h_k3: None,
                });
            }
            let is_cube = sym.is_one();
            let (shape, detail) = if is_cube {
                (
                    ClassGroupShape::new(vec![3, 3])?,
                    format!("d = p^e with p = {p} ≡ {} (mod 9) and (3/p)₃ = 1: C_k,3 ≅ (3, 3)", p % 9),
                )
            } else {
                (
                    ClassGroupShape::cyclic(3)?,
                    format!(
                        "d = p^e with p = {p} ≡ {} (mod 9) and (3/p)₃ = {} ≠ 1: C_k,3 ≅ Z/3Z",
                        p % 9,
                        sym
                    ),
                )
            };
            return Ok(pipe(trace).exclude(
                canonical,
                Form::P47mod9,
                ReasonCode::PrimeFourSevenMod9,
                Backing::Conjecture,
                "Lemmermeyer's conjecture for p ≡ 4, 7 (mod 9)",
                detail,
                symbol,
                Some(shape),
            ));
        }
        if p_one_mod9 {
            debug_assert_eq!((ram.t, ram.q_star, ram.sigma_rank), (3, QStar::One, Some(2)));
            return Ok(pipe(trace).exclude(
                canonical,
                Form::ThreeP1mod9,
                ReasonCode::ThreePrimeRankTwo,
                Backing::Theorem,
                "Gerth 1976, ambiguous rank t − 2 + q*; norm criterion for ζ₃",
                format!(
                    "d = 3^e·p with p = {p} ≡ 1 (mod 9): λ, π₁, π₂ ramify (t = {}), π₁ ≡ π₂ ≡ 1 (mod λ³) so q* = 1, \
                     rank C^(σ) = {}",
                    ram.t,
                    ram.sigma_rank.unwrap_or(0)
                ),
                symbol,
                None,
            ));
        }
        return Ok(pipe(trace).exclude(
            canonical,
            Form::ThreeP47mod9,
            ReasonCode::ThreePrimeCyclic,
            Backing::Theorem,
            "Ismaili 1992, Theorem 3.5",
            format!("d = 3^e·p^e₁ with p = {p} ≡ {} (mod 9): C_k,3 is cyclic of order 3", p % 9),
            symbol,
            Some(ClassGroupShape::cyclic(3)?),
        ));
    }

    if form.j == 1 && residue == Residue9::PlusMinusOne {
        let (q, _) = form.inert_primes()[0];
        if p_one_mod9 && q % 9 == 8 {
            debug_assert_eq!((ram.t, ram.q_star, ram.sigma_rank), (3, QStar::One, Some(2)));
            return Ok(pipe(trace).exclude(
                canonical,
                Form::PQ1mod9,
                ReasonCode::PrimePairRankTwo,
                Backing::Theorem,
                "Gerth 1976, ambiguous rank t − 2 + q*; norm criterion for ζ₃",
                format!(
                    "d = p^e₁·q^f₁ ≡ ±1 (mod 9), p = {p} ≡ 1, q = {q} ≡ −1 (mod 9): π₁, π₂, q ramify (t = {}), \
                     π₁ ≡ π₂ ≡ −q ≡ 1 (mod λ³) so q* = 1, rank C^(σ) = {}",
                    ram.t,
                    ram.sigma_rank.unwrap_or(0)
                ),
                symbol,
                None,
            ));
        }
        return Ok(pipe(trace).exclude(
            canonical,
            Form::OtherExcluded,
            ReasonCode::Residual,
            Backing::CaseAnalysis,
            "Gerth 1975, Lemma 3.1 case enumeration 2w + J ∈ {1, 2, 3}",
            format!(
                "d = p^e₁·q^f₁ ≡ ±1 (mod 9) with p = {p} ≡ {}, q = {q} ≡ {} (mod 9): outside the surviving \
                 congruence pattern p ≡ −q ≡ 1 (mod 9); t = {} and q* = {} give no rank bound",
                p % 9,
                q % 9,
                ram.t,
                ram.q_star
            ),
            symbol,
            None,
        ));
    }

    // J ≥ 2, or J = 1 with 3 ramified: t ≥ 4 and rank C^(σ) ≥ t − 2 ≥ 2
    debug_assert!(ram.t >= 4);
    Ok(pipe(trace).exclude(
        canonical,
        Form::OtherExcluded,
        ReasonCode::Residual,
        Backing::Theorem,
        "Gerth 1976, ambiguous rank t − 2 + q*",
        format!(
            "2w + J = {two_w_j}: t = {} primes of k₀ ramify, so rank C^(σ) ≥ t − 2 = {} > 1",
            ram.t,
            ram.t - 2
        ),
        symbol,
        None,
    ))
}

/// Full classification of `n` (cube factors are stripped) given optional
/// external data h_Γ,3 (exact 3-part of h_Γ) and the unit index u.
pub fn classify(n: u64, h_gamma3: Option<u64>, u: Option<u64>) -> Result<Verdict> {
    if let Some(u) = u {
        check_unit_index(u)?;
    }
    if let Some(h) = h_gamma3 {
        if arith::log3_exact(h).is_none() {
            return Err(Error::NotPowerOfThree(h));
        }
    }
    let norm = radicand::normalize(n)?;
    let mut verdict = necessary_form(norm.d)?;
    verdict.input = n;
    if norm.was_stripped() {
        verdict.trace.insert(
            0,
            format!("{n} = {}³·{}: cube factor stripped", norm.cube_factor, norm.d),
        );
    }
    if h_gamma3.is_none() && u.is_none() {
        return Ok(verdict);
    }
    verdict.inputs_used = Some(ClassData { h_gamma3, u });
    if let (Some(h), Some(u)) = (h_gamma3, u) {
        match hk_from_hgamma(h, u) {
            Ok(hk) => {
                verdict.h_k3 = Some(hk);
                verdict.trace.push(format!("h_k,3 = (u/3)·h_Γ,3² = ({u}/3)·{h}² = {hk}"));
            }
            Err(_) => verdict
                .trace
                .push(format!("(u/3)·h_Γ,3² is not an integer for h_Γ,3 = {h}, u = {u}: data inconsistent")),
        }
    }

    match verdict.status {
        Status::CandidateNeedsData => certify(&mut verdict, h_gamma3, u)?,
        Status::Excluded => {
            if let (Some(shape), Some(hk)) = (&verdict.predicted_shape, verdict.h_k3) {
                let agree = shape.order() == hk;
                verdict.trace.push(format!(
                    "supplied data give h_k,3 = {hk}, {} the predicted shape {shape}",
                    if agree { "consistent with" } else { "inconsistent with" }
                ));
            }
        }
        Status::Certified93 => unreachable!("necessary_form never certifies"),
    }
    Ok(verdict)
}

fn certify(verdict: &mut Verdict, h_gamma3: Option<u64>, u: Option<u64>) -> Result<()> {
    let mut data_reasons = Vec::new();
    if let Some(h) = h_gamma3.filter(|&h| h != 9) {
        data_reasons.push(format!("h_Γ,3 = {h} ≠ 9, so C_Γ,3 is not cyclic of order 9"));
    }
    if u == Some(3) {
        data_reasons.push("u = 3: h_k,3 = h_Γ,3² is a square and cannot be 27".to_string());
    }
    if !data_reasons.is_empty() {
        let detail = data_reasons.join("; ");
        verdict.trace.push(format!("excluded by data: {detail}"));
        verdict.status = Status::Excluded;
        verdict.reasons.push(Reason {
            code: ReasonCode::ExcludedByData,
            backing: Backing::Data,
            citation: "C_k,3 ≅ (9, 3) ⇔ C_Γ,3 ≅ Z/9Z and u = 1; Barrucand–Cohn 1971, Theorem 14.1".into(),
            detail,
        });
        return Ok(());
    }
    if h_gamma3 != Some(9) || u != Some(1) {
        verdict.trace.push("still needs both h_Γ,3 and u".to_string());
        return Ok(());
    }
    let p = arith::factorize(verdict.d)[0].0;
    verdict.trace.extend([
        "u = 1 and 9 ∥ h_Γ: h_k = (u/3)·h_Γ² is exactly divisible by 27".to_string(),
        format!("9 | h_Γ for p = {p} ≡ 1 (mod 9) gives rank C_k,3 = 2 (Calegari–Emerton 2005, Lemma 5.11)"),
        "order 27 and rank 2: C_k,3 ≅ Z/9Z × Z/3Z".to_string(),
    ]);
    if let Lemma23Outcome::Equivalent { c_gamma, .. } = lemma23(&Lemma23Input::Forward {
        c_k: ClassGroupShape::type_9_3(),
        u: Some(1),
    })? {
        verdict.trace.push(format!("consequently C_Γ,3 ≅ {c_gamma}"));
    }
    if let Some(sym) = verdict.cubic_symbol_3 {
        if sym.is_one() {
            verdict.trace.push(format!("(3/{p})₃ = 1"));
        } else {
            verdict.trace.push(format!(
                "(3/{p})₃ = {sym} ≠ 1: explicit generators of C_k,3 are available from the 3-rank theory"
            ));
        }
    }
    verdict.status = Status::Certified93;
    verdict.certified_shape = Some(ClassGroupShape::type_9_3());
    verdict.h_k3 = Some(27);
    Ok(())
}

/// Classify every cube-free 2 ≤ d ≤ max_d, in ascending order of d.
pub fn scan(max_d: u64) -> Result<Vec<Verdict>> {
    (2..=max_d)
        .into_par_iter()
        .filter(|&d| arith::is_cube_free(d))
        .map(necessary_form)
        .collect()
}

pub fn candidates(verdicts: &[Verdict]) -> Vec<u64> {
    verdicts
        .iter()
        .filter(|v| v.is_candidate())
        .map(|v| v.input)
        .collect()
}
