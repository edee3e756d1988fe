//! Analytic estimates: `mu(n)`, the sandwich bounds on `p(m)` from the first
//! Rademacher term, Lehmer's truncation bound, and the growth inequalities
//! used in the inductive arguments. Boolean answers come from certified
//! enclosures computed at increasing precision until the comparison is strict.

mod enclosure;

use num_bigint::BigInt;

pub use enclosure::{decide_greater, Enclosure};

use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::partpoly::PolyCache;

/// Working precision for returned enclosures: relative width about 2^-128.
pub const DEFAULT_BITS: u32 = 128;
const START_BITS: u32 = 64;
const MAX_BITS: u32 = 1 << 14;

fn q(p: i64, d: i64) -> Rational {
    Rational::new(p.into(), d.into())
}

fn decide<F>(f: F) -> Result<bool>
where
    F: FnMut(u32) -> (Enclosure, Enclosure),
{
    decide_greater(f, START_BITS, MAX_BITS).ok_or(Error::Undecided { bits: MAX_BITS })
}

/// Both sides of the sandwich `lower < p(m) < upper`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundPair {
    pub m: u64,
    pub lower: Enclosure,
    pub upper: Enclosure,
}

/// `mu(n) = pi/6 * sqrt(24n - 1)`.
pub fn mu(n: u64) -> Result<Enclosure> {
    mu_at(n, DEFAULT_BITS)
}

pub fn mu_at(n: u64, bits: u32) -> Result<Enclosure> {
    if n == 0 {
        return Err(Error::InvalidArgument("mu(n) needs n >= 1".into()));
    }
    let w = bits + 8;
    let root = Enclosure::exact(Rational::from_integer(BigInt::from(24 * n - 1))).sqrt(w);
    Ok(Enclosure::pi(w).mul(&root, w).mul(&Enclosure::exact(q(1, 6)), bits))
}

/// `(sqrt(3) / 12m) (1 -+ 1/sqrt(m)) e^mu(m)`.
pub fn bo2_bounds(m: u64) -> Result<BoundPair> {
    bo2_bounds_at(m, DEFAULT_BITS)
}

pub fn bo2_bounds_at(m: u64, bits: u32) -> Result<BoundPair> {
    if m == 0 {
        return Err(Error::InvalidArgument("bounds need m >= 1".into()));
    }
    let w = bits + 16;
    let mr = Enclosure::exact(Rational::from_integer(m.into()));
    let prefactor = Enclosure::int(3).sqrt(w).div(&mr.mul(&Enclosure::int(12), w), w);
    let growth = mu_at(m, w)?.exp(w);
    let base = prefactor.mul(&growth, w);
    let inv_root = mr.sqrt(w).recip(w);
    let one = Enclosure::int(1);
    let lower = if m == 1 {
        Enclosure::int(0)
    } else {
        base.mul(&one.sub(&inv_root, w), bits)
    };
    let upper = base.mul(&one.add(&inv_root, w), bits);
    Ok(BoundPair { m, lower, upper })
}

/// Certifies `lower(m) < p_m < upper(m)` for the integer `p_m`.
pub fn bo2_sandwich_holds(m: u64, p_m: &BigInt) -> Result<bool> {
    let value = Enclosure::exact(Rational::from_integer(p_m.clone()));
    let above_lower = decide(|bits| (value.clone(), bo2_bounds_at(m, bits).expect("m >= 1").lower))?;
    let below_upper = decide(|bits| (bo2_bounds_at(m, bits).expect("m >= 1").upper, value.clone()))?;
    Ok(above_lower && below_upper)
}

/// `(pi^2 N^(-2/3) / sqrt 3) ((N/mu)^3 sinh(mu/N) + 1/6 - (N/mu)^2)` with
/// `mu = mu(n)`.
pub fn lehmer_error_bound(n: u64, terms: u64) -> Result<Enclosure> {
    lehmer_error_bound_at(n, terms, DEFAULT_BITS)
}

pub fn lehmer_error_bound_at(n: u64, terms: u64, bits: u32) -> Result<Enclosure> {
    if terms == 0 {
        return Err(Error::InvalidArgument("Lehmer bound needs N >= 1".into()));
    }
    let w = bits + 32;
    let big_n = Enclosure::exact(Rational::from_integer(terms.into()));
    let m = mu_at(n, w)?;
    let ratio = big_n.div(&m, w);
    let cube = ratio.square(w).mul(&ratio, w);
    let inner = cube
        .mul(&m.div(&big_n, w).sinh(w), w)
        .add(&Enclosure::exact(q(1, 6)), w)
        .sub(&ratio.square(w), w);
    let pi2 = Enclosure::pi(w).square(w);
    let n_pow = if terms == 1 { Enclosure::int(1) } else { big_n.powr(&q(-2, 3), w) };
    let front = pi2.mul(&n_pow, w).div(&Enclosure::int(3).sqrt(w), w);
    Ok(front.mul(&inner, bits))
}

/// `e^(pi sqrt(a) / 3) > (1 + ln 2a) (1 + a) 2 / (1 - 1/sqrt a)` for `a >= 2`.
pub fn wachstum_holds(a: u64) -> Result<bool> {
    if a <= 1 {
        return Err(Error::InvalidArgument("growth inequality needs a >= 2".into()));
    }
    let ar = Enclosure::exact(Rational::from_integer(a.into()));
    decide(|bits| {
        let w = bits + 16;
        let root = ar.sqrt(w);
        let lhs = Enclosure::pi(w).mul(&root, w).div(&Enclosure::int(3), w).exp(bits);
        let log_term = Enclosure::int(1).add(&Enclosure::exact(Rational::from_integer((2 * a).into())).ln(w), w);
        let denom = Enclosure::int(1).sub(&root.recip(w), w);
        let rhs = log_term
            .mul(&Enclosure::int(1).add(&ar, w), w)
            .mul(&Enclosure::int(2), w)
            .div(&denom, bits);
        (lhs, rhs)
    })
}

/// Certifies `value > factor * (1 + ln(arg))` for `arg >= 1`.
pub fn exceeds_scaled_one_plus_ln(value: &Rational, factor: &Rational, arg: u64) -> Result<bool> {
    if arg == 0 {
        return Err(Error::InvalidArgument("ln needs a positive argument".into()));
    }
    let v = Enclosure::exact(value.clone());
    let f = Enclosure::exact(factor.clone());
    let x = Enclosure::exact(Rational::from_integer(arg.into()));
    decide(|bits| {
        let w = bits + 8;
        let rhs = f.mul(&Enclosure::int(1).add(&x.ln(w), w), bits);
        (v.clone(), rhs)
    })
}

/// `P_n(2) >= (13/4)(1 + ln 2n)`.
pub fn eq_n1_holds(cache: &PolyCache, n: usize) -> Result<bool> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let value = cache.eval(n, &q(2, 1))?;
    // the right side is irrational, so the strict comparison decides
    exceeds_scaled_one_plus_ln(&value, &q(13, 4), 2 * n as u64)
}

/// `P_n(x) - (1 + ln 2n) > 0`.
pub fn hilfs_holds(cache: &PolyCache, n: usize, x: &Rational) -> Result<bool> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let value = cache.eval(n, x)?;
    exceeds_scaled_one_plus_ln(&value, &q(1, 1), 2 * n as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partpoly::partition_numbers;
    use num_traits::Signed;

    fn f(e: &Enclosure) -> f64 {
        e.to_f64()
    }

    #[test]
    fn mu_values() {
        let pi = std::f64::consts::PI;
        assert!((f(&mu(1).unwrap()) - pi * 23f64.sqrt() / 6.0).abs() < 1e-12);
        assert!((f(&mu(5).unwrap()) - pi * 119f64.sqrt() / 6.0).abs() < 1e-12);
        let m = mu(7).unwrap();
        let sq = m.square(128);
        let expected = Enclosure::pi(128).square(128).mul(&Enclosure::exact(q(167, 36)), 128);
        let rel = (f(&sq) - f(&expected)).abs() / f(&expected);
        assert!(rel < 1e-10);
        assert!(m.width() < q(1, 1) / Rational::from_integer(num_traits::pow(BigInt::from(10), 30)));
        assert!(mu(0).is_err());
    }

    #[test]
    fn bo2_examples() {
        let b1 = bo2_bounds(1).unwrap();
        assert_eq!(b1.lower, Enclosure::int(0));
        let p = partition_numbers(200);
        assert_eq!(p[25], BigInt::from(1958));
        assert!(bo2_sandwich_holds(25, &p[25]).unwrap());
        assert_eq!(p[200], BigInt::from(3_972_999_029_388u64));
        assert!(bo2_sandwich_holds(200, &p[200]).unwrap());
        let b = bo2_bounds(25).unwrap();
        assert!(f(&b.lower) < 1958.0 && 1958.0 < f(&b.upper));
        assert!(!bo2_sandwich_holds(25, &BigInt::from(1)).unwrap());
    }

    #[test]
    fn lehmer_examples() {
        let pi = std::f64::consts::PI;
        let m = pi * 23f64.sqrt() / 6.0;
        let expected = pi * pi / 3f64.sqrt() * (m.sinh() / m.powi(3) + 1.0 / 6.0 - 1.0 / (m * m));
        let got = lehmer_error_bound(1, 1).unwrap();
        assert!((f(&got) - expected).abs() < 1e-12 * expected);
        let two = lehmer_error_bound(100, 2).unwrap();
        let one = lehmer_error_bound(100, 1).unwrap();
        assert!(two.hi() < one.lo());
        let big = lehmer_error_bound(200, 1).unwrap();
        assert!(big.lo().is_positive());
        assert!(f(&big).is_finite());
        assert!(lehmer_error_bound(5, 0).is_err());
    }

    #[test]
    fn wachstum_examples() {
        assert!(!wachstum_holds(33).unwrap());
        assert!(wachstum_holds(34).unwrap());
        assert!(wachstum_holds(85).unwrap());
        assert!(wachstum_holds(1).is_err());
        assert!(wachstum_holds(0).is_err());
    }

    #[test]
    fn eq_n1_and_hilfs_examples() {
        let cache = PolyCache::build(90);
        assert!(eq_n1_holds(&cache, 5).unwrap());
        assert!(!eq_n1_holds(&cache, 1).unwrap());
        assert!(eq_n1_holds(&cache, 86).unwrap());
        let x = q(2, 1) + q(1, 1_000_000);
        assert!(hilfs_holds(&cache, 2, &x).unwrap());
        assert!(hilfs_holds(&cache, 4, &q(1, 1)).unwrap());
        assert!(!hilfs_holds(&cache, 2, &q(0, 1)).unwrap());
        assert!(eq_n1_holds(&cache, 0).is_err());
    }
}
