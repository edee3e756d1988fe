//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always reach the output.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use partition_polys::bounds::{bo2_sandwich_holds, wachstum_holds};
use partition_polys::exactnum::parse_rational;
use partition_polys::partpoly::{colored_counts_oracle, partition_numbers};
use partition_polys::roots::{
    all_roots_float, decimal_epsilon, isolate_real_roots, largest_positive_real_root,
    largest_positive_real_root_within, FloatRootOptions,
};
use partition_polys::verify::{self, Status, VerificationReport};
use partition_polys::{Poly, PolyCache, Rational};

const TABLE1: [[&str; 10]; 10] = [
    ["3.00", "2.00", "2.00", "1.69", "1.74", "1.57", "1.59", "1.50", "1.51", "1.45"],
    ["2.00", "1.40", "1.25", "1.13", "1.09", "1.00", "1.00", "0.95", "0.92", "0.91"],
    ["2.00", "1.25", "1.24", "1.00", "1.05", "0.90", "0.94", "0.85", "0.87", "0.81"],
    ["1.69", "1.13", "1.00", "0.87", "0.86", "0.76", "0.76", "0.72", "0.69", "0.67"],
    ["1.74", "1.09", "1.05", "0.86", "0.88", "0.75", "0.79", "0.70", "0.71", "0.67"],
    ["1.57", "1.00", "0.90", "0.76", "0.75", "0.66", "0.66", "0.60", "0.60", "0.57"],
    ["1.59", "1.00", "0.94", "0.76", "0.79", "0.66", "0.69", "0.62", "0.63", "0.58"],
    ["1.50", "0.95", "0.85", "0.72", "0.70", "0.60", "0.62", "0.56", "0.55", "0.53"],
    ["1.51", "0.92", "0.87", "0.69", "0.71", "0.60", "0.63", "0.55", "0.56", "0.52"],
    ["1.45", "0.91", "0.81", "0.67", "0.67", "0.57", "0.58", "0.53", "0.52", "0.49"],
];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn q(p: i64, d: i64) -> Rational {
    Rational::new(p.into(), d.into())
}

fn within(elapsed: Duration, limit_s: u64) -> bool {
    elapsed <= Duration::from_secs(limit_s)
}

fn set(rows: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
    rows.iter().cloned().collect()
}

fn set_of(rows: &[&[i64]]) -> BTreeSet<Vec<i64>> {
    rows.iter().map(|r| r.to_vec()).collect()
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let v = f();
    (v, t.elapsed())
}

fn report_line(r: &VerificationReport) -> String {
    format!("status {}, {} exceptions, {} equalities", r.status.as_str(), r.exceptions.len(), r.equalities.len())
}

fn partition_values(cache: &mut Option<PolyCache>) -> Outcome {
    let (c, t) = timed(|| PolyCache::build(200));
    let p4 = c.eval_int(4, 1).unwrap();
    let p5 = c.eval_int(5, 1).unwrap();
    let p200 = c.eval_int(200, 1).unwrap();
    let pass = p4 == BigInt::from(5)
        && p5 == BigInt::from(7)
        && p200 == BigInt::from(3_972_999_029_388u64)
        && within(t, 60);
    *cache = Some(c);
    outcome(pass, format!("P_4(1)={p4}, P_5(1)={p5}, P_200(1)={p200}, build {t:.2?}"))
}

fn oracle_equivalence(c: &PolyCache) -> Outcome {
    let mut mismatches = 0;
    for k in 1..=5u32 {
        let table = colored_counts_oracle(k, 200);
        for n in 0..=200 {
            if c.eval_int(n, k as u64).unwrap() != table.counts[n] {
                mismatches += 1;
            }
        }
    }
    let two = colored_counts_oracle(2, 5);
    let spot = two.counts[4] == BigInt::from(20) && two.counts[5] == BigInt::from(36);
    outcome(mismatches == 0 && spot, format!("{mismatches} mismatches over n<=200, k<=5; p_-2(4)={}, p_-2(5)={}", two.counts[4], two.counts[5]))
}

fn derivative_identity(c: &PolyCache) -> Outcome {
    let bad: Vec<usize> =
        (1..=100).filter(|&n| c.derivative_formula(n).unwrap() != c.poly(n).unwrap().derivative()).collect();
    outcome(bad.is_empty(), format!("{} of 100 differ", bad.len()))
}

fn structure(c: &PolyCache) -> Outcome {
    let mut bad = Vec::new();
    for n in 0..=100usize {
        let lead = c.poly(n).unwrap().leading().cloned().unwrap();
        let fact = Rational::from_integer(c.factorial(n).unwrap().clone());
        if lead * fact != Rational::one() {
            bad.push(format!("lead {n}"));
        }
        if n >= 1 {
            match c.tilde_poly(n) {
                Ok(t) => {
                    if !t.coeffs().iter().all(|a| a.is_integer() && a.is_positive()) {
                        bad.push(format!("tilde {n}"));
                    }
                }
                Err(e) => bad.push(format!("tilde {n}: {e}")),
            }
        }
    }
    outcome(bad.is_empty(), if bad.is_empty() { "n<=100 ok".to_string() } else { bad.join("; ") })
}

fn table1(c: &PolyCache) -> Outcome {
    let tol = q(5, 1000);
    let (result, t) = timed(|| {
        let mut off = Vec::new();
        let mut digits_differ = 0;
        for a in 1..=10 {
            for b in 1..=10 {
                let printed = parse_rational(TABLE1[a - 1][b - 1]).unwrap();
                let root = largest_positive_real_root(&c.bo_poly(a, b).unwrap()).unwrap().map(|r| r.value);
                match root {
                    Some(r) => {
                        if (&r - &printed).abs() > tol {
                            off.push(format!("({a},{b})"));
                        }
                        if partition_polys::exactnum::format_fixed(&r, 2) != TABLE1[a - 1][b - 1] {
                            digits_differ += 1;
                        }
                    }
                    None => off.push(format!("({a},{b}) none")),
                }
            }
        }
        (off, digits_differ)
    });
    let (off, digits_differ) = result;
    outcome(
        off.is_empty() && within(t, 30),
        format!("{} of 100 outside 0.005, {digits_differ} two-decimal strings differ, {t:.2?} {}", off.len(), off.join(" ")),
    )
}

fn delta2_root(c: &PolyCache) -> Outcome {
    let d2 = c.delta(2).unwrap();
    let six_over_x = d2.scale(&q(6, 1)).div_rem(&Poly::x());
    let exact_form = six_over_x.1.is_zero() && six_over_x.0 == Poly::from_ints(&[-1, 6, 1]);
    let r = largest_positive_real_root_within(&d2, &decimal_epsilon(12)).unwrap().unwrap();
    let three = q(3, 1);
    let ten = q(10, 1);
    // lo <= sqrt(10) - 3 <= hi, with both shifted endpoints positive
    let lo3 = &r.lo + &three;
    let hi3 = &r.hi + &three;
    let brackets = lo3.is_positive() && &lo3 * &lo3 <= ten && &hi3 * &hi3 >= ten;
    let narrow = &r.hi - &r.lo <= decimal_epsilon(12);
    outcome(exact_form && brackets && narrow, format!("6 Delta_2/x = x^2+6x-1: {exact_form}; root in [{}, {}]", r.lo, r.hi))
}

fn bo_classical(c: &PolyCache) -> Outcome {
    let (r, t) = timed(|| verify::verify_bo_classical(c, 50).unwrap());
    let mut failures: BTreeSet<Vec<i64>> = (1..50).map(|a| vec![a, 1]).collect();
    failures.extend(set_of(&[&[2, 2], &[3, 2], &[4, 2], &[5, 2], &[3, 3], &[5, 3]]));
    let pass = r.status == Status::Verified
        && set(&r.equalities) == set_of(&[&[6, 2], &[7, 2], &[4, 3]])
        && set(&r.exceptions) == failures
        && within(t, 5);
    outcome(pass, format!("{}, {t:.2?}", report_line(&r)))
}

fn cft(c: &PolyCache) -> Outcome {
    let (r, t) = timed(|| verify::verify_cft(c, 5, 40).unwrap());
    let pass = r.status == Status::Verified
        && set(&r.exceptions) == set_of(&[&[1, 1, 2]])
        && set(&r.equalities) == set_of(&[&[2, 1, 2], &[3, 1, 2], &[1, 1, 3]])
        && r.exceptions.iter().chain(&r.equalities).all(|t| t[2] < 4)
        && within(t, 30);
    outcome(pass, format!("{}, {t:.2?}", report_line(&r)))
}

fn monotone(c: &PolyCache) -> Outcome {
    let (r, t) = timed(|| verify::verify_monotonicity(c, 100).unwrap());
    let pass = r.status == Status::Verified && r.exceptions.is_empty() && within(t, 120);
    outcome(pass, format!("{}, {t:.2?}", report_line(&r)))
}

fn main_theorem(c: &PolyCache) -> Outcome {
    let (r, t) = timed(|| verify::verify_main_theorem(c, 50).unwrap());
    let pass = r.status == Status::Verified
        && r.exceptions.is_empty()
        && r.equalities.iter().all(|e| e[0] + e[1] <= 4)
        && within(t, 300);
    outcome(pass, format!("{}, equalities {:?}, {t:.2?}", report_line(&r), r.equalities))
}

fn summand(c: &PolyCache) -> Outcome {
    let (r, t) = timed(|| verify::verify_summand(c, 33).unwrap());
    let pass = r.status == Status::Verified && r.exceptions.is_empty() && within(t, 60);
    outcome(pass, format!("{}, {t:.2?}", report_line(&r)))
}

fn growth_threshold() -> Outcome {
    let (res, t) = timed(|| {
        let at33 = wachstum_holds(33).unwrap();
        let bad: Vec<u64> = (34..=1000).filter(|&a| !wachstum_holds(a).unwrap()).collect();
        (at33, bad)
    });
    let (at33, bad) = res;
    outcome(!at33 && bad.is_empty() && within(t, 5), format!("a=33 holds: {at33}; {} failures in 34..=1000, {t:.2?}", bad.len()))
}

fn sandwich() -> Outcome {
    let (bad, t) = timed(|| {
        let p = partition_numbers(1000);
        (2..=1000u64).filter(|&m| !bo2_sandwich_holds(m, &p[m as usize]).unwrap()).count()
    });
    outcome(bad == 0 && within(t, 30), format!("{bad} failures for 2<=m<=1000, {t:.2?}"))
}

fn prime_remark(c: &PolyCache) -> Outcome {
    let (r, t) = timed(|| verify::verify_prime_remark(c, 99).unwrap());
    let primes: Vec<usize> = (3..=100).filter(|&p| (2..p).all(|d| p % d != 0)).collect();
    let rows: Vec<&Vec<String>> = r.witnesses.iter().filter(|w| w[0] == "witness").collect();
    let mut ok = rows.len() == primes.len();
    for (row, p) in rows.iter().zip(&primes) {
        let n: usize = row[1].parse().unwrap();
        let x = parse_rational(&row[2]).unwrap();
        let d = c.delta(n).unwrap();
        ok &= n + 1 == *p
            && x.is_positive()
            && x < Rational::one()
            && d.eval(&x).is_negative()
            && d.derivative().eval(&Rational::zero()).is_negative();
    }
    let pass = ok && r.status == Status::Verified && within(t, 30);
    outcome(pass, format!("{} witnesses for {} primes, {t:.2?}", rows.len(), primes.len()))
}

fn float_roots(c: &PolyCache) -> Outcome {
    let tol = 1e-6;
    let mut bad = Vec::new();
    for n in 1..=30 {
        let d = c.delta(n).unwrap();
        let exact = isolate_real_roots(&d).unwrap();
        let floats: Vec<f64> = all_roots_float(&d, FloatRootOptions::default())
            .unwrap()
            .into_iter()
            .filter(|r| r.im.abs() <= tol)
            .map(|r| r.re)
            .collect();
        let mut targets: Vec<(f64, f64)> = exact
            .exact_rational_roots
            .iter()
            .map(|r| {
                let v = partition_polys::exactnum::rational_to_f64(r).unwrap();
                (v, v)
            })
            .collect();
        targets.extend(exact.intervals.iter().map(|iv| {
            (
                partition_polys::exactnum::rational_to_f64(&iv.lo).unwrap(),
                partition_polys::exactnum::rational_to_f64(&iv.hi).unwrap(),
            )
        }));
        let matched = targets.iter().all(|(lo, hi)| floats.iter().any(|f| *f >= lo - tol && *f <= hi + tol));
        if floats.len() != targets.len() || !matched {
            bad.push(n);
        }
    }
    outcome(bad.is_empty(), format!("mismatched n: {bad:?}"))
}

fn main() -> ExitCode {
    let mut cache = None;
    let mut lines: Vec<(&str, Outcome)> = vec![("1 partition values", partition_values(&mut cache))];
    let c = cache.expect("built");
    lines.push(("2 oracle equivalence", oracle_equivalence(&c)));
    lines.push(("3 derivative identity", derivative_identity(&c)));
    lines.push(("4 structure", structure(&c)));
    lines.push(("5 root table", table1(&c)));
    lines.push(("6 Delta_2 root", delta2_root(&c)));
    lines.push(("7 classical sweep", bo_classical(&c)));
    lines.push(("8 colored sweep", cft(&c)));
    lines.push(("9 monotonicity", monotone(&c)));
    lines.push(("10 product inequality for x>2", main_theorem(&c)));
    lines.push(("11 summand check", summand(&c)));
    lines.push(("12 growth threshold", growth_threshold()));
    lines.push(("13 sandwich bounds", sandwich()));
    lines.push(("14 prime witnesses", prime_remark(&c)));
    lines.push(("float roots vs exact", float_roots(&c)));
    let mut all = true;
    for (name, o) in &lines {
        all &= o.pass;
        println!("{} criterion {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
