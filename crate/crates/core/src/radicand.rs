//! Cube-free normalization of a radicand and its decomposition by prime
//! residues modulo 9.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};

/// A cube-free radicand `d = a·b²` with `a`, `b` coprime and square-free.
///
/// `Q(∛(ab²)) = Q(∛(a²b))`, so `d` and `conjugate_d` name the same field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NormalizedRadicand {
    pub d: u64,
    pub a: u64,
    pub b: u64,
    pub conjugate_d: u64,
    /// `c` with `input = c³·d`; 1 when the input was already cube-free.
    pub cube_factor: u64,
}

impl NormalizedRadicand {
    /// Field-level key: the smaller of `a·b²` and `a²·b`.
    pub fn canonical(&self) -> u64 {
        self.d.min(self.conjugate_d)
    }

    pub fn was_stripped(&self) -> bool {
        self.cube_factor > 1
    }

    /// The same field written with the other radicand.
    pub fn conjugate(&self) -> NormalizedRadicand {
        NormalizedRadicand {
            d: self.conjugate_d,
            a: self.b,
            b: self.a,
            conjugate_d: self.d,
            cube_factor: 1,
        }
    }
}

/// Strip cube factors from `n` and split the cube-free part as `a·b²`.
pub fn normalize(n: u64) -> Result<NormalizedRadicand> {
    if n < 2 {
        return Err(Error::RadicandTooSmall(n));
    }
    let (mut a, mut b, mut c) = (1u64, 1u64, 1u64);
    for (p, e) in arith::factorize(n) {
        c *= p.pow(e / 3);
        match e % 3 {
            1 => a *= p,
            2 => b *= p,
            _ => {}
        }
    }
    if a == 1 && b == 1 {
        return Err(Error::PerfectCube(n));
    }
    let conjugate_d = (a as u128 * a as u128 * b as u128)
        .try_into()
        .map_err(|_| Error::Overflow("conjugate radicand"))?;
    Ok(NormalizedRadicand {
        d: a * b * b,
        a,
        b,
        conjugate_d,
        cube_factor: c,
    })
}

/// Strict variant: rejects inputs that carry a cube factor.
pub fn require_cube_free(d: u64) -> Result<NormalizedRadicand> {
    let norm = normalize(d)?;
    if norm.was_stripped() {
        return Err(Error::NotCubeFree(d));
    }
    Ok(norm)
}

/// `d = 3^e · Π pᵢ^{eᵢ} · Π qᵢ^{fᵢ}` with the primes sorted into their
/// classes modulo 9.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GerthForm {
    pub d: u64,
    pub e: u32,
    /// p ≡ 1 (mod 9)
    pub class1mod9: Vec<(u64, u32)>,
    /// p ≡ 4, 7 (mod 9)
    pub class47mod9: Vec<(u64, u32)>,
    /// q ≡ 8 (mod 9)
    pub class8mod9: Vec<(u64, u32)>,
    /// q ≡ 2, 5 (mod 9)
    pub class25mod9: Vec<(u64, u32)>,
    pub v: usize,
    pub w: usize,
    pub i: usize,
    pub j: usize,
}

impl GerthForm {
    pub fn recompose(&self) -> u128 {
        let mut acc = 3u128.pow(self.e);
        for &(p, e) in self
            .class1mod9
            .iter()
            .chain(&self.class47mod9)
            .chain(&self.class8mod9)
            .chain(&self.class25mod9)
        {
            acc *= (p as u128).pow(e);
        }
        acc
    }

    /// Primes ≡ 1 (mod 3) with exponents, ascending.
    pub fn split_primes(&self) -> Vec<(u64, u32)> {
        let mut v: Vec<_> = self.class1mod9.iter().chain(&self.class47mod9).copied().collect();
        v.sort_unstable();
        v
    }

    /// Primes ≡ 2 (mod 3) with exponents, ascending.
    pub fn inert_primes(&self) -> Vec<(u64, u32)> {
        let mut v: Vec<_> = self.class8mod9.iter().chain(&self.class25mod9).copied().collect();
        v.sort_unstable();
        v
    }

    pub fn residue_mod9(&self) -> Residue9 {
        residue_mod9(self.d)
    }
}

impl fmt::Display for GerthForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[(u64, u32)]| {
            let items: Vec<String> = v
                .iter()
                .map(|&(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
                .collect();
            format!("[{}]", items.join(", "))
        };
        write!(
            f,
            "d = {}: e = {}, p≡1 (9) {}, p≡4,7 (9) {}, q≡8 (9) {}, q≡2,5 (9) {}; v = {}, w = {}, I = {}, J = {}",
            self.d,
            self.e,
            list(&self.class1mod9),
            list(&self.class47mod9),
            list(&self.class8mod9),
            list(&self.class25mod9),
            self.v,
            self.w,
            self.i,
            self.j
        )
    }
}

/// Decompose a cube-free radicand.
pub fn gerth_decompose(d: u64) -> Result<GerthForm> {
    require_cube_free(d)?;
    let mut form = GerthForm {
        d,
        e: 0,
        class1mod9: Vec::new(),
        class47mod9: Vec::new(),
        class8mod9: Vec::new(),
        class25mod9: Vec::new(),
        v: 0,
        w: 0,
        i: 0,
        j: 0,
    };
    for (p, e) in arith::factorize(d) {
        if p == 3 {
            form.e = e;
            continue;
        }
        match p % 9 {
            1 => form.class1mod9.push((p, e)),
            4 | 7 => form.class47mod9.push((p, e)),
            8 => form.class8mod9.push((p, e)),
            _ => form.class25mod9.push((p, e)),
        }
    }
    form.v = form.class1mod9.len();
    form.w = form.v + form.class47mod9.len();
    form.i = form.class8mod9.len();
    form.j = form.i + form.class25mod9.len();
    Ok(form)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Residue9 {
    PlusMinusOne,
    Other,
}

pub fn residue_mod9(d: u64) -> Residue9 {
    match d % 9 {
        1 | 8 => Residue9::PlusMinusOne,
        _ => Residue9::Other,
    }
}
