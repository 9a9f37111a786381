//! Rational-integer helpers: trial-division primality and factorization,
//! modular exponentiation, and a small sieve.
//!
//! Everything here works at desk scale (inputs up to roughly 10^12); no
//! attempt is made at sub-exponential factoring.

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 || n % 3 == 0 {
        return false;
    }
    let mut f = 5u64;
    while f.saturating_mul(f) <= n {
        if n % f == 0 || n % (f + 2) == 0 {
            return false;
        }
        f += 6;
    }
    true
}

/// Prime factorization as ascending `(prime, exponent)` pairs. `factorize(1)`
/// is empty; `factorize(0)` is also empty and callers are expected to reject 0.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    for p in [2u64, 3] {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    }
    let mut f = 5u64;
    let mut step = 2u64;
    while f.saturating_mul(f) <= n {
        let mut e = 0;
        while n % f == 0 {
            n /= f;
            e += 1;
        }
        if e > 0 {
            out.push((f, e));
        }
        f += step;
        step = 6 - step;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// `base^exp mod modulus` with 128-bit intermediates.
pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut b = (base as u128) % m;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// `a mod m` for signed `a`, result in `[0, m)`.
pub fn rem_euclid_u64(a: i128, m: u64) -> u64 {
    a.rem_euclid(m as i128) as u64
}

/// True when no prime appears to the third power or higher.
pub fn is_cube_free(n: u64) -> bool {
    n >= 1 && factorize(n).iter().all(|&(_, e)| e < 3)
}

/// Primes `<= limit` by the sieve of Eratosthenes.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// `Some(k)` when `n == 3^k`.
pub fn log3_exact(n: u64) -> Option<u32> {
    if n == 0 {
        return None;
    }
    let mut k = 0;
    let mut m = n;
    while m % 3 == 0 {
        m /= 3;
        k += 1;
    }
    (m == 1).then_some(k)
}

/// 3-adic valuation of a nonzero integer.
pub fn val3(mut n: u64) -> u32 {
    let mut k = 0;
    while n != 0 && n % 3 == 0 {
        n /= 3;
        k += 1;
    }
    k
}

/// Integer square root (floor).
pub fn isqrt(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u128;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}
