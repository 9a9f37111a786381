//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero on any failure.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use purecubic::arith;
use purecubic::classifier::{self, hk_from_hgamma, lemma23, ClassGroupShape, Lemma23Input, Lemma23Outcome, Status};
use purecubic::data_bridge::{bundled_fixtures, reproduce_table, TableSource};
use purecubic::eisenstein::{cubic_character, factor_rational_prime, rational_cubic_symbol, Splitting};
use purecubic::genus::{gaussian_periods, period_polynomial, polynomial_from_periods, CubicPolynomial};
use purecubic::ramification;
use purecubic::{CubicCharacterValue, Eisenstein};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Option<Duration>, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn slow_pow(base: u64, exp: u64, m: u64) -> u64 {
    let mut acc = 1u128;
    for _ in 0..exp {
        acc = acc * base as u128 % m as u128;
    }
    acc as u64
}

fn slow_inverse(x: u64, m: u64) -> u64 {
    (1..m).find(|&y| x as u128 * y as u128 % m as u128 == 1).expect("unit")
}

fn table_rows() -> Outcome {
    let report = reproduce_table(TableSource::Fixtures(bundled_fixtures()));
    ensure(report.total() == 28, || format!("{} rows, expected 28", report.total()))?;
    for row in &report.rows {
        let v = row.verdict.as_ref().ok_or_else(|| format!("p = {}: {}", row.p, row.message))?;
        ensure(
            v.status == Status::Certified93
                && v.certified_shape == Some(ClassGroupShape::type_9_3())
                && v.h_k3 == Some(27),
            || format!("p = {}: {}", row.p, row.message),
        )?;
    }
    Ok("28/28 rows certified [9, 3] with h_k,3 = 27".into())
}

fn scan_matches_sieve() -> Outcome {
    const MAX: u64 = 10_000;
    let mut expected: Vec<u64> = Vec::new();
    for p in (2..=MAX).filter(|&n| (2..n).take_while(|k| k * k <= n).all(|k| n % k != 0)) {
        if p % 9 == 1 {
            expected.push(p);
            if p * p <= MAX {
                expected.push(p * p);
            }
        }
    }
    expected.sort_unstable();
    let got = classifier::candidates(&classifier::scan(MAX).map_err(|e| e.to_string())?);
    ensure(got == expected, || format!("scan gave {got:?}, sieve gave {expected:?}"))?;
    Ok(format!("{} candidates up to {MAX}", got.len()))
}

fn symbol_brute_force() -> Outcome {
    let mut checked = 0;
    for p in (7..2000u64).filter(|&p| p % 3 == 1 && arith::is_prime(p)) {
        let Splitting::Split { pi, .. } = factor_rational_prime::<i128>(p).map_err(|e| e.to_string())? else {
            return Err(format!("{p} did not split"));
        };
        // ω ≡ −a/b (mod π)
        let a = pi.a.rem_euclid(p as i128) as u64;
        let b = pi.b.rem_euclid(p as i128) as u64;
        let c = (p - a) * slow_inverse(b, p) % p;
        for n in [2i64, 3, 5, 7] {
            if n as u64 == p {
                continue;
            }
            let r = slow_pow(n as u64, (p - 1) / 3, p);
            let want = if r == 1 {
                CubicCharacterValue::One
            } else if r == c {
                CubicCharacterValue::Omega
            } else if r == c * c % p {
                CubicCharacterValue::OmegaSquared
            } else {
                return Err(format!("{n}^((p-1)/3) mod {p} = {r} is not a cube root of unity"));
            };
            let got = rational_cubic_symbol(n, p).map_err(|e| e.to_string())?;
            ensure(got == want, || format!("({n}/{p})_3 = {got}, brute force {want}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} symbols agree"))
}

fn three_is_cube() -> Outcome {
    for p in [61u64, 67, 103, 151] {
        let s = rational_cubic_symbol(3, p).map_err(|e| e.to_string())?;
        ensure(s.is_one(), || format!("(3/{p})_3 = {s}"))?;
    }
    Ok("(3/p)_3 = 1 for p = 61, 67, 103, 151".into())
}

fn reciprocity() -> Outcome {
    let mut primes: Vec<(u64, Eisenstein)> = Vec::new();
    for p in arith::primes_up_to(1000) {
        match factor_rational_prime::<i128>(p).map_err(|e| e.to_string())? {
            Splitting::Split { pi, pi_conj } => {
                for z in [pi, pi_conj] {
                    primes.push((p, z.primary_associate().map_err(|e| e.to_string())?));
                }
            }
            Splitting::Inert { q } if q * q < 1000 => primes.push((q, Eisenstein::from_int(q as i128))),
            _ => {}
        }
    }
    ensure(primes.iter().all(|(_, z)| z.is_primary()), || "non-primary generator".into())?;
    let mut pairs = 0;
    for (i, (p1, x)) in primes.iter().enumerate() {
        for (p2, y) in &primes[i + 1..] {
            if p1 == p2 {
                continue;
            }
            let xy = cubic_character(x, y).map_err(|e| e.to_string())?;
            let yx = cubic_character(y, x).map_err(|e| e.to_string())?;
            ensure(xy == yx, || format!("χ_{y}({x}) = {xy} but χ_{x}({y}) = {yx}"))?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs over {} primary primes", primes.len()))
}

fn ramification_values() -> Outcome {
    for (d, t) in [(199u64, 2u32), (597, 3), (42, 4)] {
        let got = ramification::count_t(d).map_err(|e| e.to_string())?;
        ensure(got == t, || format!("t({d}) = {got}, expected {t}"))?;
    }
    for (d, s) in [(199u64, 1u32), (597, 2)] {
        let got = ramification::sigma_rank(d).map_err(|e| e.to_string())?;
        ensure(got == Some(s), || format!("σ-rank({d}) = {got:?}, expected {s}"))?;
    }
    Ok("t(199, 597, 42) = 2, 3, 4; σ-rank(199, 597) = 1, 2".into())
}

fn period_polynomials() -> Outcome {
    let mut worst = 0.0f64;
    let mut count = 0;
    for p in (7..500u64).filter(|&p| p % 3 == 1 && arith::is_prime(p)) {
        let exact = period_polynomial(p).map_err(|e| e.to_string())?;
        let (numeric, err) = polynomial_from_periods(&gaussian_periods::<f64>(p).map_err(|e| e.to_string())?);
        ensure(err < 1e-6, || format!("p = {p}: rounding residual {err:e}"))?;
        ensure(numeric == exact, || format!("p = {p}: periods give {numeric}, formula gives {exact}"))?;
        let disc = exact.discriminant();
        let p2 = (p as i128) * (p as i128);
        ensure(disc > 0 && disc % p2 == 0, || format!("p = {p}: disc {disc}"))?;
        let q = (disc / p2) as u128;
        let s = arith::isqrt(q);
        ensure(s * s == q, || format!("p = {p}: disc / p² = {q} is not a square"))?;
        worst = worst.max(err);
        count += 1;
    }
    ensure(period_polynomial(7).ok() == Some(CubicPolynomial::new(1, -2, -1)), || "p = 7".into())?;
    ensure(period_polynomial(13).ok() == Some(CubicPolynomial::new(1, -4, 1)), || "p = 13".into())?;
    Ok(format!("{count} primes, max residual {worst:.1e}"))
}

fn class_number_relation() -> Outcome {
    let mut hits = Vec::new();
    for h in [3u64, 9, 27] {
        for u in [1u64, 3] {
            let hk = hk_from_hgamma(h, u).map_err(|e| e.to_string())?;
            if hk % 27 == 0 && hk % 81 != 0 {
                hits.push((h, u));
            }
        }
    }
    ensure(hits == [(9, 1)], || format!("27 exactly divides h_k,3 at {hits:?}"))?;
    let fwd = lemma23(&Lemma23Input::Forward { c_k: ClassGroupShape::type_9_3(), u: None }).map_err(|e| e.to_string())?;
    let Lemma23Outcome::Equivalent { c_gamma, u, .. } = fwd else {
        return Err(format!("forward: {fwd:?}"));
    };
    let back = lemma23(&Lemma23Input::Backward { c_gamma, u }).map_err(|e| e.to_string())?;
    let Lemma23Outcome::Equivalent { c_k, .. } = back else {
        return Err(format!("backward: {back:?}"));
    };
    ensure(c_k == ClassGroupShape::type_9_3(), || format!("forward then backward gave {c_k}"))?;
    let back = lemma23(&Lemma23Input::Backward { c_gamma: ClassGroupShape::cyclic(9).unwrap(), u: 1 })
        .map_err(|e| e.to_string())?;
    let Lemma23Outcome::Equivalent { c_k, .. } = back else {
        return Err(format!("backward: {back:?}"));
    };
    let fwd = lemma23(&Lemma23Input::Forward { c_k, u: None }).map_err(|e| e.to_string())?;
    let Lemma23Outcome::Equivalent { c_gamma, u, .. } = fwd else {
        return Err(format!("forward: {fwd:?}"));
    };
    ensure(c_gamma == ClassGroupShape::cyclic(9).unwrap() && u == 1, || format!("round trip gave {c_gamma}, u = {u}"))?;
    Ok("27 ∥ h_k,3 only at (9, 1); [9, 3] ⇄ ([9], u = 1) both ways".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("table reproduction", Some(Duration::from_secs(1)), table_rows),
        ("necessary-form scan to 10^4", Some(Duration::from_secs(30)), scan_matches_sieve),
        ("cubic residue symbol vs brute force", Some(Duration::from_secs(10)), symbol_brute_force),
        ("3 is a cube mod 61, 67, 103, 151", None, three_is_cube),
        ("cubic reciprocity, norms < 1000", Some(Duration::from_secs(10)), reciprocity),
        ("ramification counts and σ-rank", None, ramification_values),
        ("period polynomials, p < 500", Some(Duration::from_secs(5)), period_polynomials),
        ("class number relation and (9, 3) equivalence", None, class_number_relation),
    ];
    let mut failures = 0;
    for (i, (name, budget, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = match (result, budget) {
            (Ok(_), Some(b)) if elapsed > b => Err(format!("took {elapsed:.2?}, budget {b:?}")),
            (r, _) => r,
        };
        match result {
            Ok(detail) => println!("[PASS] {}. {name}: {detail} ({elapsed:.2?})", i + 1),
            Err(why) => {
                failures += 1;
                println!("[FAIL] {}. {name}: {why} ({elapsed:.2?})", i + 1);
            }
        }
    }
    println!("{}/8 criteria passed", 8 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
