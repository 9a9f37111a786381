//! Exact arithmetic in the Eisenstein integers Z[ω], ω = ζ₃.
//!
//! Elements are stored as `a + bω` over a signed integer carrier `T`. Every
//! ring operation is checked: overflow of the carrier surfaces as
//! [`Error::Overflow`], never as wraparound. The operator impls (`+`, `-`,
//! `*`) panic on overflow; use the `checked_*` methods when inputs are not
//! known to be small.
//!
//! Conventions follow Ireland and Rosen, chapter 9: an element is *primary*
//! when it is ≡ 2 (mod 3), and cubic reciprocity holds between primary
//! primes. Some authors normalize primes to ≡ 1 (mod 3) instead; see
//! [`EisensteinInt::one_mod_three_associate`].

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{CheckedNeg, FromPrimitive, PrimInt, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};

/// Integer types that can carry Eisenstein coefficients.
pub trait Carrier:
    PrimInt
    + CheckedNeg
    + Signed
    + Integer
    + FromPrimitive
    + ToPrimitive
    + fmt::Debug
    + fmt::Display
    + Hash
    + Send
    + Sync
    + 'static
{
}

impl<T> Carrier for T where
    T: PrimInt
        + CheckedNeg
        + Signed
        + Integer
        + FromPrimitive
        + ToPrimitive
        + fmt::Debug
        + fmt::Display
        + Hash
        + Send
        + Sync
        + 'static
{
}

fn of<T: Carrier>(n: i64) -> T {
    T::from_i64(n).expect("small constant fits every carrier")
}

fn lift<T: Carrier>(n: u64) -> Result<T> {
    T::from_u64(n).ok_or(Error::Overflow("conversion into carrier"))
}

/// `a + bω` with ω² = −1 − ω.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EisensteinInt<T> {
    pub a: T,
    pub b: T,
}

impl<T: Carrier> EisensteinInt<T> {
    pub const fn new(a: T, b: T) -> Self {
        Self { a, b }
    }

    pub fn from_int(n: T) -> Self {
        Self::new(n, T::zero())
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero())
    }

    pub fn one() -> Self {
        Self::new(T::one(), T::zero())
    }

    pub fn omega() -> Self {
        Self::new(T::zero(), T::one())
    }

    /// λ = 1 − ω, the prime above 3.
    pub fn lambda() -> Self {
        Self::new(T::one(), -T::one())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// The six units ±1, ±ω, ±ω².
    pub fn units() -> [Self; 6] {
        let one = T::one();
        let zero = T::zero();
        [
            Self::new(one, zero),
            Self::new(zero, one),
            Self::new(-one, -one),
            Self::new(-one, zero),
            Self::new(zero, -one),
            Self::new(one, one),
        ]
    }

    pub fn is_unit(&self) -> bool {
        Self::units().contains(self)
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        Ok(Self::new(
            self.a.checked_add(&rhs.a).ok_or(Error::Overflow("addition"))?,
            self.b.checked_add(&rhs.b).ok_or(Error::Overflow("addition"))?,
        ))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        Ok(Self::new(
            self.a.checked_sub(&rhs.a).ok_or(Error::Overflow("subtraction"))?,
            self.b.checked_sub(&rhs.b).ok_or(Error::Overflow("subtraction"))?,
        ))
    }

    pub fn checked_neg(&self) -> Result<Self> {
        Self::zero().checked_sub(self)
    }

    /// (a + bω)(c + dω) = (ac − bd) + (ad + bc − bd)ω.
    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        let ovf = || Error::Overflow("multiplication");
        let ac = self.a.checked_mul(&rhs.a).ok_or_else(ovf)?;
        let bd = self.b.checked_mul(&rhs.b).ok_or_else(ovf)?;
        let ad = self.a.checked_mul(&rhs.b).ok_or_else(ovf)?;
        let bc = self.b.checked_mul(&rhs.a).ok_or_else(ovf)?;
        Ok(Self::new(
            ac.checked_sub(&bd).ok_or_else(ovf)?,
            ad.checked_add(&bc)
                .and_then(|s| s.checked_sub(&bd))
                .ok_or_else(ovf)?,
        ))
    }

    pub fn checked_pow(&self, mut exp: u32) -> Result<Self> {
        let mut base = *self;
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn scale(&self, k: T) -> Result<Self> {
        Ok(Self::new(
            self.a.checked_mul(&k).ok_or(Error::Overflow("scaling"))?,
            self.b.checked_mul(&k).ok_or(Error::Overflow("scaling"))?,
        ))
    }

    /// Complex conjugation τ: ω ↦ ω², i.e. (a, b) ↦ (a − b, −b).
    pub fn conjugate(&self) -> Result<Self> {
        Ok(Self::new(
            self.a
                .checked_sub(&self.b)
                .ok_or(Error::Overflow("conjugation"))?,
            self.b.checked_neg().ok_or(Error::Overflow("conjugation"))?,
        ))
    }

    /// N(a + bω) = a² − ab + b².
    pub fn norm(&self) -> Result<T> {
        let ovf = || Error::Overflow("norm");
        let aa = self.a.checked_mul(&self.a).ok_or_else(ovf)?;
        let ab = self.a.checked_mul(&self.b).ok_or_else(ovf)?;
        let bb = self.b.checked_mul(&self.b).ok_or_else(ovf)?;
        aa.checked_sub(&ab)
            .and_then(|s| s.checked_add(&bb))
            .ok_or_else(ovf)
    }

    /// The norm as a `u64`, for handing to rational-integer routines.
    pub fn norm_u64(&self) -> Result<u64> {
        self.norm()?
            .to_u64()
            .ok_or(Error::Overflow("norm conversion"))
    }

    /// `u·self` for each of the six units, in the order of [`Self::units`].
    pub fn associates(&self) -> Result<[Self; 6]> {
        let us = Self::units();
        let mut out = [*self; 6];
        for (slot, u) in out.iter_mut().zip(us.iter()) {
            *slot = self.checked_mul(u)?;
        }
        Ok(out)
    }

    /// `Some(self / rhs)` when `rhs` divides `self` exactly.
    pub fn div_exact(&self, rhs: &Self) -> Result<Option<Self>> {
        if rhs.is_zero() {
            return Err(Error::Zero("quotient by zero"));
        }
        let n = rhs.norm()?;
        let num = self.checked_mul(&rhs.conjugate()?)?;
        if num.a % n != T::zero() || num.b % n != T::zero() {
            return Ok(None);
        }
        Ok(Some(Self::new(num.a / n, num.b / n)))
    }

    pub fn divides(&self, other: &Self) -> Result<bool> {
        if self.is_zero() {
            return Ok(other.is_zero());
        }
        Ok(other.div_exact(self)?.is_some())
    }

    /// Euclidean division with nearest-lattice-point rounding; the remainder
    /// has norm strictly below `rhs.norm()`.
    pub fn div_rem(&self, rhs: &Self) -> Result<(Self, Self)> {
        if rhs.is_zero() {
            return Err(Error::Zero("quotient by zero"));
        }
        let n = rhs.norm()?;
        let num = self.checked_mul(&rhs.conjugate()?)?;
        let q = Self::new(round_div(num.a, n)?, round_div(num.b, n)?);
        let r = self.checked_sub(&q.checked_mul(rhs)?)?;
        Ok((q, r))
    }

    pub fn gcd(&self, other: &Self) -> Result<Self> {
        let (mut x, mut y) = (*self, *other);
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y)?;
            x = y;
            y = r;
        }
        Ok(x)
    }

    /// Primality in Z[ω]: the norm is a rational prime, or the square of a
    /// rational prime q ≡ 2 (mod 3) (which is then inert and `self` is an
    /// associate of q).
    pub fn is_prime(&self) -> Result<bool> {
        if self.is_zero() {
            return Ok(false);
        }
        let n = self.norm_u64()?;
        if arith::is_prime(n) {
            return Ok(true);
        }
        let q = arith::isqrt(n as u128) as u64;
        Ok(q * q == n && q % 3 == 2 && arith::is_prime(q))
    }

    /// `self ≡ other (mod m)` for a rational modulus `m`.
    pub fn is_congruent_mod(&self, other: &Self, m: T) -> Result<bool> {
        let diff = self.checked_sub(other)?;
        Ok(diff.a % m == T::zero() && diff.b % m == T::zero())
    }

    /// `self ≡ other (mod λ^k)`, decided by exact division.
    pub fn is_congruent_mod_lambda_pow(&self, other: &Self, k: u32) -> Result<bool> {
        let diff = self.checked_sub(other)?;
        let modulus = Self::lambda().checked_pow(k)?;
        modulus.divides(&diff)
    }

    /// The unique associate ≡ 2 (mod 3), i.e. a ≡ 2, b ≡ 0 (mod 3).
    pub fn primary_associate(&self) -> Result<Self> {
        let n = self.norm()?;
        if n % of::<T>(3) == T::zero() {
            return Err(Error::NoPrimaryAssociate(self.to_string()));
        }
        let three = of::<T>(3);
        for cand in self.associates()? {
            if cand.a.mod_floor(&three) == of(2) && cand.b.mod_floor(&three).is_zero() {
                return Ok(cand);
            }
        }
        unreachable!("the units are distinct modulo 3, so one associate is primary")
    }

    pub fn is_primary(&self) -> bool {
        let three = of::<T>(3);
        self.a.mod_floor(&three) == of(2) && self.b.mod_floor(&three).is_zero()
    }

    /// The associate ≡ 1 (mod 3): the negative of the primary associate.
    pub fn one_mod_three_associate(&self) -> Result<Self> {
        self.primary_associate()?.checked_neg()
    }
}

fn round_div<T: Carrier>(x: T, n: T) -> Result<T> {
    // floor((2x + n) / 2n)
    let two = of::<T>(2);
    let num = x
        .checked_mul(&two)
        .and_then(|v| v.checked_add(&n))
        .ok_or(Error::Overflow("rounded division"))?;
    let den = n.checked_mul(&two).ok_or(Error::Overflow("rounded division"))?;
    Ok(num.div_floor(&den))
}

impl<T: Carrier> Add for EisensteinInt<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(&rhs).expect("EisensteinInt overflow")
    }
}

impl<T: Carrier> Sub for EisensteinInt<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(&rhs).expect("EisensteinInt overflow")
    }
}

impl<T: Carrier> Mul for EisensteinInt<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(&rhs).expect("EisensteinInt overflow")
    }
}

impl<T: Carrier> Neg for EisensteinInt<T> {
    type Output = Self;
    fn neg(self) -> Self {
        self.checked_neg().expect("EisensteinInt overflow")
    }
}

impl<T: Carrier> fmt::Display for EisensteinInt<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = (self.a, self.b);
        if b.is_zero() {
            return write!(f, "{a}");
        }
        let coeff = |b: T| {
            if b.abs() == T::one() {
                String::new()
            } else {
                b.abs().to_string()
            }
        };
        if a.is_zero() {
            let sign = if b.is_negative() { "-" } else { "" };
            return write!(f, "{sign}{}ω", coeff(b));
        }
        let sign = if b.is_negative() { '-' } else { '+' };
        write!(f, "{a} {sign} {}ω", coeff(b))
    }
}

/// How a rational prime decomposes in Z[ω].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Splitting<T> {
    /// p ≡ 1 (mod 3): p = π·τ(π). `pi` is the associate with a > 2b > 0 and
    /// `pi_conj` is its literal conjugate.
    Split {
        pi: EisensteinInt<T>,
        pi_conj: EisensteinInt<T>,
    },
    /// q ≡ 2 (mod 3) stays prime.
    Inert { q: u64 },
    /// 3 = −ω²λ².
    Ramified { lambda: EisensteinInt<T> },
}

/// Decompose a rational prime.
pub fn factor_rational_prime<T: Carrier>(p: u64) -> Result<Splitting<T>> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 3 {
        let lambda = EisensteinInt::<T>::lambda();
        // sanity: −ω²·λ² must reassemble 3
        let minus_omega_sq = EisensteinInt::new(T::one(), T::one());
        let three = minus_omega_sq.checked_mul(&lambda.checked_pow(2)?)?;
        debug_assert_eq!(three, EisensteinInt::from_int(of(3)));
        return Ok(Splitting::Ramified { lambda });
    }
    if p % 3 == 2 {
        return Ok(Splitting::Inert { q: p });
    }
    let pi = split_prime_above::<T>(p)?;
    let pi_conj = pi.conjugate()?;
    Ok(Splitting::Split { pi, pi_conj })
}

fn split_prime_above<T: Carrier>(p: u64) -> Result<EisensteinInt<T>> {
    // a primitive cube root of unity c mod p satisfies c² + c + 1 ≡ 0, so
    // gcd(p, c − ω) has norm p
    let c = (2..p)
        .map(|g| arith::pow_mod(g, (p - 1) / 3, p))
        .find(|&c| c != 1)
        .expect("p ≡ 1 (mod 3) has a non-cube residue");
    let g = EisensteinInt::from_int(lift::<T>(p)?)
        .gcd(&EisensteinInt::new(lift::<T>(c)?, -T::one()))?;
    debug_assert_eq!(g.norm_u64()?, p);
    let mut candidates = g.associates()?.to_vec();
    candidates.extend(g.conjugate()?.associates()?);
    let two = of::<T>(2);
    candidates
        .into_iter()
        .find(|z| z.b > T::zero() && z.a > z.b * two)
        .ok_or_else(|| Error::NotEisensteinPrime(g.to_string()))
}

/// Value of a cubic residue character: 0 or a cube root of unity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CubicCharacterValue {
    Zero,
    One,
    Omega,
    OmegaSquared,
}

impl CubicCharacterValue {
    fn exponent(self) -> Option<u8> {
        match self {
            Self::Zero => None,
            Self::One => Some(0),
            Self::Omega => Some(1),
            Self::OmegaSquared => Some(2),
        }
    }

    fn from_exponent(e: u8) -> Self {
        match e % 3 {
            0 => Self::One,
            1 => Self::Omega,
            _ => Self::OmegaSquared,
        }
    }

    pub fn is_one(self) -> bool {
        self == Self::One
    }

    pub fn to_eisenstein<T: Carrier>(self) -> EisensteinInt<T> {
        match self {
            Self::Zero => EisensteinInt::zero(),
            Self::One => EisensteinInt::one(),
            Self::Omega => EisensteinInt::omega(),
            Self::OmegaSquared => EisensteinInt::new(-T::one(), -T::one()),
        }
    }
}

// values are ω^k, so multiplication adds exponents
#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for CubicCharacterValue {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        match (self.exponent(), rhs.exponent()) {
            (Some(x), Some(y)) => Self::from_exponent(x + y),
            _ => Self::Zero,
        }
    }
}

impl fmt::Display for CubicCharacterValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Zero => "0",
            Self::One => "1",
            Self::Omega => "ω",
            Self::OmegaSquared => "ω²",
        })
    }
}

fn mul_mod<T: Carrier>(x: T, y: T, m: T) -> Result<T> {
    Ok(x.checked_mul(&y)
        .ok_or(Error::Overflow("modular multiplication"))?
        .mod_floor(&m))
}

fn pow_mod_t<T: Carrier>(mut base: T, mut exp: u64, m: T) -> Result<T> {
    let mut acc = T::one().mod_floor(&m);
    base = base.mod_floor(&m);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m)?;
        }
        base = mul_mod(base, base, m)?;
        exp >>= 1;
    }
    Ok(acc)
}

/// χ_π(α): the element of {0, 1, ω, ω²} congruent to α^((N(π)−1)/3) mod π.
pub fn cubic_character<T: Carrier>(
    alpha: &EisensteinInt<T>,
    pi: &EisensteinInt<T>,
) -> Result<CubicCharacterValue> {
    if !pi.is_prime()? {
        return Err(Error::NotEisensteinPrime(pi.to_string()));
    }
    let n = pi.norm_u64()?;
    if n == 3 {
        return Err(Error::NormThreeModulus);
    }
    if arith::is_prime(n) {
        // Z[ω]/π ≅ Z/p with ω ↦ c = −a·b⁻¹
        let p = lift::<T>(n)?;
        let b_inv = pow_mod_t(pi.b, n - 2, p)?;
        let c = mul_mod(-pi.a, b_inv, p)?;
        let x = alpha
            .a
            .checked_add(&mul_mod(alpha.b, c, p)?)
            .ok_or(Error::Overflow("reduction"))?
            .mod_floor(&p);
        let r = pow_mod_t(x, (n - 1) / 3, p)?;
        let c2 = mul_mod(c, c, p)?;
        return if r.is_zero() {
            Ok(CubicCharacterValue::Zero)
        } else if r == T::one() {
            Ok(CubicCharacterValue::One)
        } else if r == c {
            Ok(CubicCharacterValue::Omega)
        } else if r == c2 {
            Ok(CubicCharacterValue::OmegaSquared)
        } else {
            Err(Error::NotEisensteinPrime(pi.to_string()))
        };
    }
    // inert: Z[ω]/q is the field F_q[ω]
    let q = lift::<T>(arith::isqrt(n as u128) as u64)?;
    let reduce = |z: EisensteinInt<T>| EisensteinInt::new(z.a.mod_floor(&q), z.b.mod_floor(&q));
    let mut base = reduce(*alpha);
    if base.is_zero() {
        return Ok(CubicCharacterValue::Zero);
    }
    let mut exp = (n - 1) / 3;
    let mut acc = EisensteinInt::one();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = reduce(acc.checked_mul(&base)?);
        }
        base = reduce(base.checked_mul(&base)?);
        exp >>= 1;
    }
    let q_minus_one = q - T::one();
    if acc == EisensteinInt::one() {
        Ok(CubicCharacterValue::One)
    } else if acc == EisensteinInt::omega() {
        Ok(CubicCharacterValue::Omega)
    } else if acc == EisensteinInt::new(q_minus_one, q_minus_one) {
        Ok(CubicCharacterValue::OmegaSquared)
    } else {
        Err(Error::NotEisensteinPrime(pi.to_string()))
    }
}

/// Cubic residue symbol (a/p)₃ for a rational prime p ≡ 1 (mod 3), taken
/// relative to the prime π above p returned by [`factor_rational_prime`].
///
/// For p ≡ 2 (mod 3) every residue is a cube and the symbol is trivially 1;
/// that case is rejected so that callers notice the degenerate input.
pub fn rational_cubic_symbol(a: i64, p: u64) -> Result<CubicCharacterValue> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p % 3 != 1 {
        return Err(Error::PrimeNotOneModThree {
            p,
            hint: "; every residue is a cube modulo such primes",
        });
    }
    let a_mod = arith::rem_euclid_u64(a as i128, p);
    if a_mod == 0 {
        return Err(Error::Divisible { a, p });
    }
    let r = arith::pow_mod(a_mod, (p - 1) / 3, p);
    if r == 1 {
        return Ok(CubicCharacterValue::One);
    }
    let Splitting::Split { pi, .. } = factor_rational_prime::<i128>(p)? else {
        unreachable!("p ≡ 1 (mod 3) splits")
    };
    let b_inv = arith::pow_mod(arith::rem_euclid_u64(pi.b, p), p - 2, p) as u128;
    let c = (arith::rem_euclid_u64(-pi.a, p) as u128 * b_inv % p as u128) as u64;
    if r == c {
        Ok(CubicCharacterValue::Omega)
    } else {
        Ok(CubicCharacterValue::OmegaSquared)
    }
}

/// Unique factorization `unit · Π primeᵉ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization<T> {
    pub unit: EisensteinInt<T>,
    pub factors: Vec<(EisensteinInt<T>, u32)>,
}

impl<T: Carrier> Factorization<T> {
    pub fn reassemble(&self) -> Result<EisensteinInt<T>> {
        self.factors.iter().try_fold(self.unit, |acc, (p, e)| {
            acc.checked_mul(&p.checked_pow(*e)?)
        })
    }
}

/// Factor a nonzero element. Primes of norm prime to 3 are listed primary;
/// the prime above 3 is listed as λ.
pub fn factor<T: Carrier>(z: &EisensteinInt<T>) -> Result<Factorization<T>> {
    if z.is_zero() {
        return Err(Error::Zero("factorization"));
    }
    let mut rem = *z;
    let mut factors = Vec::new();
    let mut strip = |rem: &mut EisensteinInt<T>, prime: EisensteinInt<T>| -> Result<()> {
        let mut e = 0;
        while let Some(q) = rem.div_exact(&prime)? {
            *rem = q;
            e += 1;
        }
        if e > 0 {
            factors.push((prime, e));
        }
        Ok(())
    };
    for (p, _) in arith::factorize(z.norm_u64()?) {
        match factor_rational_prime::<T>(p)? {
            Splitting::Ramified { lambda } => strip(&mut rem, lambda)?,
            Splitting::Inert { q } => strip(&mut rem, EisensteinInt::from_int(lift(q)?).primary_associate()?)?,
            Splitting::Split { pi, pi_conj } => {
                strip(&mut rem, pi.primary_associate()?)?;
                strip(&mut rem, pi_conj.primary_associate()?)?;
            }
        }
    }
    debug_assert!(rem.is_unit());
    Ok(Factorization { unit: rem, factors })
}

#[cfg(test)]
mod tests {
    use super::*;

    type E = EisensteinInt<i128>;

    fn e(a: i128, b: i128) -> E {
        E::new(a, b)
    }

    #[test]
    fn conjugation() {
        assert_eq!(E::omega().conjugate().unwrap(), e(-1, -1));
        let z = e(5, 2);
        assert_eq!(z.conjugate().unwrap().conjugate().unwrap(), z);
        // λ·τ(λ) = 3
        let lam = E::lambda();
        assert_eq!(lam * lam.conjugate().unwrap(), e(3, 0));
        // (1 − ω)(1 − ω²) with ω² written as −1 − ω
        assert_eq!(e(1, -1) * (E::one() - e(-1, -1)), e(3, 0));
    }

    #[test]
    fn norms() {
        assert_eq!(e(1, -1).norm().unwrap(), 3);
        assert_eq!(e(3, 1).norm().unwrap(), 7);
        assert_eq!(E::zero().norm().unwrap(), 0);
    }

    #[test]
    fn units_are_six_distinct_norm_one() {
        let us = E::units();
        for (i, u) in us.iter().enumerate() {
            assert_eq!(u.norm().unwrap(), 1);
            assert!(us[i + 1..].iter().all(|v| v != u));
        }
        assert!(us.contains(&(E::omega() * E::omega())));
    }

    #[test]
    fn overflow_is_reported() {
        let big = EisensteinInt::<i64>::new(i64::MAX / 2, 1);
        assert_eq!(big.checked_mul(&big), Err(Error::Overflow("multiplication")));
        assert!(EisensteinInt::<i64>::new(i64::MIN, 0).conjugate().is_ok());
        assert!(EisensteinInt::<i64>::new(0, i64::MIN).conjugate().is_err());
    }

    #[test]
    fn splitting_of_small_primes() {
        assert_eq!(
            factor_rational_prime::<i128>(7).unwrap(),
            Splitting::Split { pi: e(3, 1), pi_conj: e(2, -1) }
        );
        assert_eq!(factor_rational_prime::<i128>(5).unwrap(), Splitting::Inert { q: 5 });
        assert_eq!(
            factor_rational_prime::<i128>(3).unwrap(),
            Splitting::Ramified { lambda: e(1, -1) }
        );
        assert_eq!(factor_rational_prime::<i128>(9), Err(Error::NotPrime(9)));
    }

    #[test]
    fn brute_force_norm_seven() {
        // every solution of a² − ab + b² = 7 is an associate of 3 + ω or 2 − ω
        let mut sols = Vec::new();
        for a in -4i128..=4 {
            for b in -4i128..=4 {
                if a * a - a * b + b * b == 7 {
                    sols.push(e(a, b));
                }
            }
        }
        assert_eq!(sols.len(), 12);
        let assoc: Vec<E> = e(3, 1)
            .associates()
            .unwrap()
            .into_iter()
            .chain(e(2, -1).associates().unwrap())
            .collect();
        assert!(sols.iter().all(|s| assoc.contains(s)));
    }

    #[test]
    fn primary_associates() {
        assert_eq!(e(1, 3).primary_associate().unwrap(), e(-1, -3));
        // exhaustive: exactly one associate of 1 + 3ω is ≡ 2 (mod 3)
        let primaries: Vec<E> = e(1, 3)
            .associates()
            .unwrap()
            .into_iter()
            .filter(|z| z.a.rem_euclid(3) == 2 && z.b.rem_euclid(3) == 0)
            .collect();
        assert_eq!(primaries, vec![e(-1, -3)]);
        assert_eq!(e(2, 0).primary_associate().unwrap(), e(2, 0));
        assert!(matches!(e(1, -1).primary_associate(), Err(Error::NoPrimaryAssociate(_))));
        assert_eq!(e(1, 3).one_mod_three_associate().unwrap(), e(1, 3));
    }

    #[test]
    fn lambda_power_congruences() {
        let lam3 = E::lambda().checked_pow(3).unwrap();
        let z = e(1, 0) + lam3 * e(4, -7);
        assert!(z.is_congruent_mod_lambda_pow(&E::one(), 3).unwrap());
        assert!(!e(4, 0).is_congruent_mod_lambda_pow(&E::one(), 3).unwrap());
        // 4 − 1 = 3 = −ω²λ², so 4 ≡ 1 mod λ² but not mod λ³
        assert!(e(4, 0).is_congruent_mod_lambda_pow(&E::one(), 2).unwrap());
        assert!(e(4, 3).is_congruent_mod(&e(1, 0), 3).unwrap());
    }

    #[test]
    fn character_basics() {
        let pi = e(3, 1);
        for x in [e(2, 0), e(5, -3), e(0, 1)] {
            assert_eq!(cubic_character(&(pi * x), &pi).unwrap(), CubicCharacterValue::Zero);
        }
        assert_eq!(cubic_character(&E::one(), &pi).unwrap(), CubicCharacterValue::One);
        let (a, b) = (e(2, 0), e(1, 3));
        let lhs = cubic_character(&a, &pi).unwrap() * cubic_character(&b, &pi).unwrap();
        assert_eq!(lhs, cubic_character(&(a * b), &pi).unwrap());
        assert_eq!(cubic_character(&e(2, 0), &e(1, -1)), Err(Error::NormThreeModulus));
        assert!(matches!(cubic_character(&e(2, 0), &e(7, 0)), Err(Error::NotEisensteinPrime(_))));
    }

    #[test]
    fn character_of_inert_prime() {
        // Every rational integer is a cube modulo an inert q.
        let q = e(5, 0);
        for n in 1..5 {
            assert_eq!(cubic_character(&e(n, 0), &q).unwrap(), CubicCharacterValue::One);
        }
        assert_eq!(cubic_character(&e(10, 5), &q).unwrap(), CubicCharacterValue::Zero);
        // (F_25)* is cyclic of order 24; ω has order 3 so it is a cube iff 3 | 8, which fails.
        assert_ne!(cubic_character(&E::omega(), &q).unwrap(), CubicCharacterValue::One);
    }

    #[test]
    fn rational_symbol_examples() {
        for p in [61, 67, 103, 151] {
            assert!(rational_cubic_symbol(3, p).unwrap().is_one(), "p = {p}");
        }
        assert!(rational_cubic_symbol(1, 7).unwrap().is_one());
        assert_ne!(arith::pow_mod(3, 66, 199), 1);
        assert!(!rational_cubic_symbol(3, 199).unwrap().is_one());
        assert!(matches!(rational_cubic_symbol(3, 5), Err(Error::PrimeNotOneModThree { .. })));
        assert_eq!(rational_cubic_symbol(14, 7), Err(Error::Divisible { a: 14, p: 7 }));
    }

    #[test]
    fn rational_symbol_matches_character_at_canonical_prime() {
        for p in arith::primes_up_to(400).into_iter().filter(|p| p % 3 == 1) {
            let Splitting::Split { pi, .. } = factor_rational_prime::<i128>(p).unwrap() else {
                panic!()
            };
            for a in [2i64, 3, 5, 7, -4, 11] {
                if (a as i128).rem_euclid(p as i128) == 0 {
                    continue;
                }
                assert_eq!(
                    rational_cubic_symbol(a, p).unwrap(),
                    cubic_character(&e(a as i128, 0), &pi).unwrap(),
                    "a = {a}, p = {p}"
                );
            }
        }
    }

    #[test]
    fn factor_examples() {
        let f = factor(&e(21, 0)).unwrap();
        assert_eq!(f.reassemble().unwrap(), e(21, 0));
        assert_eq!(f.factors, vec![(E::lambda(), 2), (e(2, 3), 1), (e(-1, -3), 1)]);

        let u = e(-1, -1);
        let f = factor(&u).unwrap();
        assert!(f.factors.is_empty());
        assert_eq!(f.unit, u);

        let f = factor(&E::lambda().checked_pow(3).unwrap()).unwrap();
        assert_eq!(f.factors, vec![(E::lambda(), 3)]);
        assert!(f.unit.is_unit());

        assert_eq!(factor(&E::zero()), Err(Error::Zero("factorization")));
    }

    #[test]
    fn display() {
        assert_eq!(e(3, 1).to_string(), "3 + ω");
        assert_eq!(e(2, -1).to_string(), "2 - ω");
        assert_eq!(e(-1, -3).to_string(), "-1 - 3ω");
        assert_eq!(e(0, -1).to_string(), "-ω");
        assert_eq!(e(7, 0).to_string(), "7");
    }

    #[test]
    fn generic_over_carrier() {
        let z = EisensteinInt::<i64>::new(3, 1);
        assert_eq!(z.norm().unwrap(), 7);
        assert_eq!(
            factor_rational_prime::<i32>(13).unwrap(),
            Splitting::Split {
                pi: EisensteinInt::new(4, 1),
                pi_conj: EisensteinInt::new(3, -1)
            }
        );
    }
}
