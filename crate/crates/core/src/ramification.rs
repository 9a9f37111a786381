//! Ramification in Γ = Q(∛d) and in the Kummer extension k = k₀(∛d) over
//! k₀ = Q(ζ₃), and the resulting rank of the ambiguous 3-class group.
//!
//! The rank is `t − 2 + q*` where `t` counts the primes of k₀ ramified in
//! k and `q* ∈ {0, 1}` records whether ζ₃ is a norm from k. Only the
//! sufficient condition for `q* = 1` (every ramified prime other than λ is
//! ≡ ±1 mod λ³) is decided here; otherwise `q*` is reported as unknown.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::eisenstein::{factor_rational_prime, Splitting};
use crate::error::Result;
use crate::radicand::{self, residue_mod9, Residue9};
use crate::Eisenstein;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaRamification {
    /// Rational primes ramified in Γ, including 3 when it ramifies.
    pub primes: BTreeSet<u64>,
    pub three_ramified: bool,
}

/// Primes ramified in Q(∛d): every prime divisor of d, and 3 exactly when
/// `3 | d` or `d ≢ ±1 (mod 9)`.
pub fn gamma_ramified(d: u64) -> Result<GammaRamification> {
    radicand::require_cube_free(d)?;
    let mut primes: BTreeSet<u64> = crate::arith::factorize(d).into_iter().map(|(p, _)| p).collect();
    let three_ramified = d % 3 == 0 || residue_mod9(d) == Residue9::Other;
    if three_ramified {
        primes.insert(3);
    }
    Ok(GammaRamification { primes, three_ramified })
}

/// A prime of k₀ ramified in k/k₀.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum K0Prime {
    /// One of the two primes above a split p ≡ 1 (mod 3).
    SplitAbove { p: u64, pi: Eisenstein },
    /// An inert q ≡ 2 (mod 3).
    Inert { q: u64 },
    Lambda,
}

impl K0Prime {
    /// The generator normalized ≡ 1 (mod 3), or `None` for λ.
    pub fn one_mod_three_generator(&self) -> Result<Option<Eisenstein>> {
        match self {
            K0Prime::SplitAbove { pi, .. } => Ok(Some(pi.one_mod_three_associate()?)),
            K0Prime::Inert { q } => Ok(Some(Eisenstein::from_int(-(*q as i128)))),
            K0Prime::Lambda => Ok(None),
        }
    }
}

impl fmt::Display for K0Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            K0Prime::SplitAbove { p, pi } => write!(f, "({pi}) above {p}"),
            K0Prime::Inert { q } => write!(f, "({q})"),
            K0Prime::Lambda => f.write_str("λ = (1 - ω)"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum QStar {
    Zero,
    One,
    Unknown,
}

impl QStar {
    pub fn value(self) -> Option<u32> {
        match self {
            QStar::Zero => Some(0),
            QStar::One => Some(1),
            QStar::Unknown => None,
        }
    }
}

impl fmt::Display for QStar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(v) => write!(f, "{v}"),
            None => f.write_str("unknown"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamificationReport {
    pub d: u64,
    pub gamma_ramified: BTreeSet<u64>,
    pub three_ramified: bool,
    pub k0_ramified: Vec<K0Prime>,
    pub t: u32,
    pub q_star: QStar,
    pub sigma_rank: Option<u32>,
    pub notes: Vec<String>,
}

/// The primes of k₀ ramified in k/k₀: both primes above each split p | d,
/// each inert q | d, and λ when 3 ramifies in Γ.
pub fn k0_ramified(d: u64) -> Result<Vec<K0Prime>> {
    let gamma = gamma_ramified(d)?;
    let mut out = Vec::new();
    for &p in &gamma.primes {
        match factor_rational_prime::<i128>(p)? {
            Splitting::Split { pi, pi_conj } => {
                out.push(K0Prime::SplitAbove { p, pi });
                out.push(K0Prime::SplitAbove { p, pi: pi_conj });
            }
            Splitting::Inert { q } => out.push(K0Prime::Inert { q }),
            Splitting::Ramified { .. } => out.push(K0Prime::Lambda),
        }
    }
    Ok(out)
}

pub fn count_t(d: u64) -> Result<u32> {
    Ok(k0_ramified(d)?.len() as u32)
}

fn q_star_from(primes: &[K0Prime]) -> Result<QStar> {
    let one = Eisenstein::one();
    for prime in primes {
        if let Some(g) = prime.one_mod_three_generator()? {
            if !g.is_congruent_mod_lambda_pow(&one, 3)? {
                return Ok(QStar::Unknown);
            }
        }
    }
    Ok(QStar::One)
}

/// `One` when every ramified prime other than λ has a generator ≡ 1 (mod λ³);
/// `Unknown` otherwise. Never `Zero`.
pub fn q_star(d: u64) -> Result<QStar> {
    q_star_from(&k0_ramified(d)?)
}

pub fn sigma_rank(d: u64) -> Result<Option<u32>> {
    Ok(report(d)?.sigma_rank)
}

pub fn report(d: u64) -> Result<RamificationReport> {
    let gamma = gamma_ramified(d)?;
    let k0 = k0_ramified(d)?;
    let t = k0.len() as u32;
    let q_star = q_star_from(&k0)?;
    // t ≥ 1 for every d ≥ 2, and q* = 1 whenever t = 1
    let sigma_rank = q_star.value().map(|q| t + q - 2);
    let mut notes = vec![
        "every ambiguous class C satisfies C³ = N_{k/k₀}(C) = 1 since k₀ has class number 1, \
         so the ambiguous class group is elementary abelian"
            .to_string(),
    ];
    match q_star {
        QStar::One => notes.push(
            "all ramified primes other than λ are ≡ 1 (mod λ³) up to sign, so ζ₃ is a norm from k and q* = 1"
                .to_string(),
        ),
        _ => notes.push(format!(
            "q* not decided: some ramified prime is not ≡ ±1 (mod λ³); rank C^(σ) ∈ {{{}, {}}}",
            t.saturating_sub(2),
            t - 1
        )),
    }
    Ok(RamificationReport {
        d,
        gamma_ramified: gamma.primes,
        three_ramified: gamma.three_ramified,
        k0_ramified: k0,
        t,
        q_star,
        sigma_rank,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_examples() {
        let g = gamma_ramified(199).unwrap();
        assert_eq!(g.primes.into_iter().collect::<Vec<_>>(), vec![199]);
        assert!(!g.three_ramified);
        let g = gamma_ramified(21).unwrap();
        assert_eq!(g.primes.into_iter().collect::<Vec<_>>(), vec![3, 7]);
        assert!(g.three_ramified);
        let g = gamma_ramified(7).unwrap();
        assert_eq!(g.primes.into_iter().collect::<Vec<_>>(), vec![3, 7]);
        assert!(g.three_ramified);
    }

    #[test]
    fn t_examples() {
        assert_eq!(count_t(57).unwrap(), 3);
        assert_eq!(count_t(42).unwrap(), 4);
        assert_eq!(count_t(199).unwrap(), 2);
        assert_eq!(count_t(597).unwrap(), 3);
    }

    #[test]
    fn q_star_examples() {
        assert_eq!(q_star(199).unwrap(), QStar::One);
        assert_eq!(q_star(199 * 17).unwrap(), QStar::One);
        assert_eq!(q_star(7).unwrap(), QStar::Unknown);
        assert_eq!(q_star(2).unwrap(), QStar::Unknown);
        assert_eq!(q_star(3).unwrap(), QStar::One);
    }

    #[test]
    fn sigma_rank_examples() {
        assert_eq!(sigma_rank(199).unwrap(), Some(1));
        assert_eq!(sigma_rank(597).unwrap(), Some(2));
        let r = report(3383).unwrap();
        assert_eq!((r.t, r.sigma_rank), (3, Some(2)));
        assert_eq!(sigma_rank(7).unwrap(), None);
        assert_eq!(sigma_rank(3).unwrap(), Some(0));
    }

    #[test]
    fn report_lists_conjugate_pair() {
        let r = report(7).unwrap();
        assert_eq!(r.k0_ramified.len(), 3);
        assert!(r.k0_ramified.contains(&K0Prime::Lambda));
        assert!(r.notes[0].contains("elementary abelian"));
    }
}
