//! Genus theory of Γ = Q(∛d): the count r of primes p ≡ 1 (mod 3) dividing
//! d, the genus number 3^r, and defining polynomials for the cyclic cubic
//! fields M(p) ⊂ Q(ζ_p) whose compositum with Γ is the genus field.
//!
//! M(p) is given by the minimal polynomial of the Gaussian period
//! η₀ = Σ_{t cube mod p} e^{2πit/p}. Its coefficients are derived exactly
//! from the primary prime π = a + bω above p (π is, up to sign, the Jacobi
//! sum J(χ, χ) of a cubic character mod p):
//!
//! ```text
//! 4p = L² + 27M²,  L = 2a − b ≡ 1 (mod 3),  M = b/3
//! f(x) = x³ + x² − (p − 1)/3 · x − ((L + 3)p − 1)/27
//! ```
//!
//! [`gaussian_periods`] evaluates the periods numerically as an independent
//! route to the same polynomial.

use std::fmt;

use num_traits::{Float, FloatConst};
use serde::{Deserialize, Serialize};

use crate::arith;
use crate::eisenstein::{factor_rational_prime, Splitting};
use crate::error::{Error, Result};
use crate::radicand;

/// Monic cubic `x³ + c2·x² + c1·x + c0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CubicPolynomial {
    pub c2: i64,
    pub c1: i64,
    pub c0: i64,
}

impl CubicPolynomial {
    pub fn new(c2: i64, c1: i64, c0: i64) -> Self {
        Self { c2, c1, c0 }
    }

    /// Coefficients from the constant term up, leading 1 included.
    pub fn coefficients(&self) -> [i64; 4] {
        [self.c0, self.c1, self.c2, 1]
    }

    pub fn eval<F: Float>(&self, x: F) -> F {
        let c = |v: i64| F::from(v).expect("coefficient representable");
        ((x + c(self.c2)) * x + c(self.c1)) * x + c(self.c0)
    }

    fn eval_mod(&self, x: u64, m: u64) -> u64 {
        let m_i = m as i128;
        let x = x as i128;
        let v = ((x + self.c2 as i128) * x % m_i + self.c1 as i128) * x % m_i + self.c0 as i128;
        v.rem_euclid(m_i) as u64
    }

    /// b²c² − 4c³ − 4b³d − 27d² + 18bcd for x³ + bx² + cx + d.
    pub fn discriminant(&self) -> i128 {
        let (b, c, d) = (self.c2 as i128, self.c1 as i128, self.c0 as i128);
        b * b * c * c - 4 * c * c * c - 4 * b * b * b * d - 27 * d * d + 18 * b * c * d
    }

    /// A monic integer cubic is reducible over Q iff it has an integer root,
    /// which must divide the constant term.
    pub fn is_irreducible_over_q(&self) -> bool {
        if self.c0 == 0 {
            return false;
        }
        let n = self.c0.unsigned_abs();
        let mut k = 1u64;
        while k * k <= n {
            if n % k == 0 {
                for dvs in [k, n / k] {
                    for s in [dvs as i128, -(dvs as i128)] {
                        let (b, c, d) = (self.c2 as i128, self.c1 as i128, self.c0 as i128);
                        if ((s + b) * s + c) * s + d == 0 {
                            return false;
                        }
                    }
                }
            }
            k += 1;
        }
        true
    }

    /// Smallest prime ℓ below `limit` modulo which the cubic has no root,
    /// hence is irreducible over F_ℓ.
    pub fn irreducibility_witness(&self, limit: u64) -> Option<u64> {
        arith::primes_up_to(limit)
            .into_iter()
            .find(|&l| (0..l).all(|x| self.eval_mod(x, l) != 0))
    }
}

impl fmt::Display for CubicPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("x^3")?;
        for (c, mono) in [(self.c2, "x^2"), (self.c1, "x"), (self.c0, "")] {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { '-' } else { '+' };
            let mag = c.unsigned_abs();
            if mag == 1 && !mono.is_empty() {
                write!(f, " {sign} {mono}")?;
            } else {
                write!(f, " {sign} {mag}{mono}")?;
            }
        }
        Ok(())
    }
}

fn check_split_prime(p: u64) -> Result<()> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p % 3 != 1 {
        return Err(Error::PrimeNotOneModThree { p, hint: "" });
    }
    Ok(())
}

/// Defining polynomial of M(p), the cubic subfield of Q(ζ_p).
pub fn period_polynomial(p: u64) -> Result<CubicPolynomial> {
    check_split_prime(p)?;
    let Splitting::Split { pi, .. } = factor_rational_prime::<i128>(p)? else {
        unreachable!("p ≡ 1 (mod 3) splits")
    };
    let primary = pi.primary_associate()?;
    let l = 2 * primary.a - primary.b;
    debug_assert_eq!(l.rem_euclid(3), 1);
    debug_assert_eq!(l * l + 3 * primary.b * primary.b, 4 * p as i128);
    let num = (l + 3) * p as i128 - 1;
    if num % 27 != 0 {
        return Err(Error::Contradiction(format!(
            "period product ((L + 3)p − 1)/27 is not integral for p = {p}"
        )));
    }
    let c1 = -(((p - 1) / 3) as i64);
    let c0 = i64::try_from(-(num / 27)).map_err(|_| Error::Overflow("period polynomial"))?;
    Ok(CubicPolynomial::new(1, c1, c0))
}

/// The three cubic Gaussian periods for p, as floating-point values.
///
/// η_j = Σ_{t ∈ C} cos(2π·n^j·t / p), where C is the subgroup of cubes and
/// n is a non-cube; the sine parts cancel because −1 is a cube.
pub fn gaussian_periods<F: Float + FloatConst>(p: u64) -> Result<[F; 3]> {
    check_split_prime(p)?;
    let cubes: Vec<u64> = {
        let mut v: Vec<u64> = (1..p).map(|x| arith::pow_mod(x, 3, p)).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let n = (2..p)
        .find(|&g| arith::pow_mod(g, (p - 1) / 3, p) != 1)
        .expect("p ≡ 1 (mod 3) has non-cubes");
    let tau = F::TAU();
    let pf = F::from(p).expect("p representable");
    let mut out = [F::zero(); 3];
    let mut shift = 1u64;
    for slot in out.iter_mut() {
        *slot = cubes.iter().fold(F::zero(), |acc, &t| {
            let k = (shift as u128 * t as u128 % p as u128) as u64;
            acc + (tau * F::from(k).expect("residue representable") / pf).cos()
        });
        shift = shift * n % p;
    }
    Ok(out)
}

/// Round the elementary symmetric functions of numeric periods back to an
/// integer cubic. Returns the polynomial and the largest rounding error.
pub fn polynomial_from_periods<F: Float>(periods: &[F; 3]) -> (CubicPolynomial, F) {
    let [x, y, z] = *periods;
    let e1 = x + y + z;
    let e2 = x * y + y * z + z * x;
    let e3 = x * y * z;
    let round = |v: F| (v.round(), (v - v.round()).abs());
    let (r1, d1) = round(-e1);
    let (r2, d2) = round(e2);
    let (r3, d3) = round(-e3);
    let to_i = |v: F| v.to_i64().expect("coefficient in range");
    (
        CubicPolynomial::new(to_i(r1), to_i(r2), to_i(r3)),
        d1.max(d2).max(d3),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Lemma21Check {
    NotApplicable,
    /// At most two primes ≡ 1 (mod 3) divide d; `r` is the actual count.
    Admissible { r: u32 },
    /// 3^r | h_Γ, so r ≥ 3 contradicts 9 ∥ h_Γ.
    Violation { r: u32 },
}

pub fn lemma21_bound(h_gamma3_exactly9: bool, r: u32) -> Lemma21Check {
    if !h_gamma3_exactly9 {
        Lemma21Check::NotApplicable
    } else if r <= 2 {
        Lemma21Check::Admissible { r }
    } else {
        Lemma21Check::Violation { r }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TriState {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusReport {
    pub d: u64,
    pub r: u32,
    pub genus_number: u64,
    pub m_fields: Vec<(u64, CubicPolynomial)>,
    /// Whether Γ* equals the Hilbert 3-class field Γ₃⁽¹⁾.
    pub hilbert_equals_genus: TriState,
    pub lemma21: Lemma21Check,
    pub notes: Vec<String>,
}

/// `(r, 3^r)` for cube-free d.
pub fn genus_number(d: u64) -> Result<(u32, u64)> {
    let g = radicand::gerth_decompose(d)?;
    let r = g.w as u32;
    Ok((r, 3u64.pow(r)))
}

pub fn genus_field_description(d: u64, h_gamma3_exactly9: bool) -> Result<GenusReport> {
    let form = radicand::gerth_decompose(d)?;
    let r = form.w as u32;
    let genus_number = 3u64.pow(r);
    let m_fields = form
        .split_primes()
        .into_iter()
        .map(|(p, _)| Ok((p, period_polynomial(p)?)))
        .collect::<Result<Vec<_>>>()?;
    let lemma21 = lemma21_bound(h_gamma3_exactly9, r);
    let hilbert_equals_genus = match (h_gamma3_exactly9, r) {
        (true, 2) => TriState::Yes,
        (true, 0 | 1) => TriState::No,
        _ => TriState::Unknown,
    };
    let mut notes = Vec::new();
    if r == 0 {
        notes.push("no prime ≡ 1 (mod 3) divides d, so Γ* = Γ".to_string());
    } else {
        let parts: Vec<String> = m_fields.iter().map(|(p, _)| format!("M({p})")).collect();
        notes.push(format!("Γ* = Γ·{}", parts.join("·")));
    }
    notes.push("Γ* is contained in the Hilbert 3-class field Γ₃⁽¹⁾, so 3^r divides h_Γ".to_string());
    match (hilbert_equals_genus, lemma21) {
        (TriState::Yes, _) => notes.push(
            "9 ∥ h_Γ and g_Γ = 9: Γ* = Γ₃⁽¹⁾, and likewise for the conjugate fields Γ′, Γ″".to_string(),
        ),
        (TriState::No, _) => notes.push(format!(
            "9 ∥ h_Γ but g_Γ = {genus_number}: Γ* is a proper subfield of Γ₃⁽¹⁾"
        )),
        (_, Lemma21Check::Violation { r }) => notes.push(format!(
            "9 ∥ h_Γ is inconsistent with r = {r}: 3^{r} would divide h_Γ"
        )),
        _ => {}
    }
    Ok(GenusReport {
        d,
        r,
        genus_number,
        m_fields,
        hilbert_equals_genus,
        lemma21,
        notes,
    })
}
