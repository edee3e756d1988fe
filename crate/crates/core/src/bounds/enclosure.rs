//! Rational interval enclosures with outward dyadic rounding.
//!
//! Every operation returns an interval guaranteed to contain the exact real
//! result for every input in the argument intervals. `bits` is the relative
//! precision endpoints are rounded to.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exactnum::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enclosure {
    lo: Rational,
    hi: Rational,
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// floor(log2 |q|) up to one unit, from bit lengths.
fn approx_log2(q: &Rational) -> i64 {
    q.numer().bits() as i64 - q.denom().bits() as i64
}

fn pow2(e: i64) -> Rational {
    if e >= 0 {
        Rational::from_integer(BigInt::one() << e as u64)
    } else {
        Rational::new(BigInt::one(), BigInt::one() << (-e) as u64)
    }
}

/// Largest dyadic with about `bits` significant bits that is `<= q`.
fn round_down(q: &Rational, bits: u32) -> Rational {
    if q.is_zero() {
        return q.clone();
    }
    let shift = bits as i64 - approx_log2(q);
    let scaled = q * pow2(shift);
    scaled.floor() * pow2(-shift)
}

fn round_up(q: &Rational, bits: u32) -> Rational {
    -round_down(&-q, bits)
}

impl Enclosure {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "empty enclosure");
        Self { lo, hi }
    }

    pub fn exact(q: Rational) -> Self {
        Self { lo: q.clone(), hi: q }
    }

    pub fn int(n: i64) -> Self {
        Self::exact(rat(n))
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / rat(2)
    }

    pub fn to_f64(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }

    pub fn contains(&self, q: &Rational) -> bool {
        &self.lo <= q && q <= &self.hi
    }

    /// `Some(ordering)` once the enclosures are disjoint (or both exact and
    /// equal), `None` while they overlap.
    pub fn compare(&self, other: &Enclosure) -> Option<Ordering> {
        if self.hi < other.lo {
            Some(Ordering::Less)
        } else if self.lo > other.hi {
            Some(Ordering::Greater)
        } else if self.lo == self.hi && other.lo == other.hi && self.lo == other.lo {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    fn rounded(lo: Rational, hi: Rational, bits: u32) -> Self {
        Self { lo: round_down(&lo, bits), hi: round_up(&hi, bits) }
    }

    pub fn add(&self, o: &Enclosure, bits: u32) -> Self {
        Self::rounded(&self.lo + &o.lo, &self.hi + &o.hi, bits)
    }

    pub fn sub(&self, o: &Enclosure, bits: u32) -> Self {
        Self::rounded(&self.lo - &o.hi, &self.hi - &o.lo, bits)
    }

    pub fn neg(&self) -> Self {
        Self { lo: -&self.hi, hi: -&self.lo }
    }

    pub fn mul(&self, o: &Enclosure, bits: u32) -> Self {
        let products = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = products.iter().min().expect("nonempty").clone();
        let hi = products.iter().max().expect("nonempty").clone();
        Self::rounded(lo, hi, bits)
    }

    /// Reciprocal of an enclosure that excludes zero.
    pub fn recip(&self, bits: u32) -> Self {
        assert!(self.lo.is_positive() || self.hi.is_negative(), "reciprocal of an enclosure containing 0");
        Self::rounded(self.hi.recip(), self.lo.recip(), bits)
    }

    pub fn div(&self, o: &Enclosure, bits: u32) -> Self {
        self.mul(&o.recip(bits + 4), bits)
    }

    pub fn square(&self, bits: u32) -> Self {
        if self.lo.is_negative() && self.hi.is_positive() {
            let m = (&self.lo * &self.lo).max(&self.hi * &self.hi);
            return Self::rounded(Rational::zero(), m, bits);
        }
        let a = &self.lo * &self.lo;
        let b = &self.hi * &self.hi;
        if a <= b {
            Self::rounded(a, b, bits)
        } else {
            Self::rounded(b, a, bits)
        }
    }

    /// Square root of a nonnegative enclosure.
    pub fn sqrt(&self, bits: u32) -> Self {
        assert!(!self.lo.is_negative(), "sqrt of a negative enclosure");
        Self { lo: sqrt_down(&self.lo, bits), hi: sqrt_up(&self.hi, bits) }
    }

    pub fn exp(&self, bits: u32) -> Self {
        Self { lo: exp_bounds(&self.lo, bits).0, hi: exp_bounds(&self.hi, bits).1 }
    }

    /// Natural logarithm of a positive enclosure.
    pub fn ln(&self, bits: u32) -> Self {
        assert!(self.lo.is_positive(), "ln of a non-positive enclosure");
        Self { lo: ln_bounds(&self.lo, bits).0, hi: ln_bounds(&self.hi, bits).1 }
    }

    /// `(e^x - e^-x) / 2`.
    pub fn sinh(&self, bits: u32) -> Self {
        let w = bits + 8;
        let e = self.exp(w);
        let em = self.neg().exp(w);
        e.sub(&em, w).mul(&Enclosure::exact(Rational::new(1.into(), 2.into())), bits)
    }

    /// `x^(p/q)` for a positive enclosure.
    pub fn powr(&self, exponent: &Rational, bits: u32) -> Self {
        let w = bits + 8;
        self.ln(w).mul(&Enclosure::exact(exponent.clone()), w).exp(bits)
    }

    pub fn pi(bits: u32) -> Self {
        // Machin: pi = 16 atan(1/5) - 4 atan(1/239)
        let w = bits + 8;
        let a = atan_inv(5, w);
        let b = atan_inv(239, w);
        a.mul(&Enclosure::int(16), w).sub(&b.mul(&Enclosure::int(4), w), bits)
    }
}

fn sqrt_down(q: &Rational, bits: u32) -> Rational {
    if q.is_zero() {
        return Rational::zero();
    }
    // floor(sqrt(floor(q * 4^s))) / 2^s
    let s = (bits as i64 - approx_log2(q) / 2 + 2).max(0);
    let scaled = (q * pow2(2 * s)).floor().to_integer();
    Rational::new(scaled.sqrt(), BigInt::one() << s as u64)
}

fn sqrt_up(q: &Rational, bits: u32) -> Rational {
    if q.is_zero() {
        return Rational::zero();
    }
    let s = (bits as i64 - approx_log2(q) / 2 + 2).max(0);
    let scaled = (q * pow2(2 * s)).ceil().to_integer();
    let r = scaled.sqrt();
    let r = if &r * &r == scaled { r } else { r + 1 };
    Rational::new(r, BigInt::one() << s as u64)
}

// Series are summed in fixed point: an integer `v` stands for `v / 2^w`, and
// every truncation is a floor (lower bounds) or a ceiling (upper bounds).

fn fixed_to_rational(v: BigInt, w: u32) -> Rational {
    Rational::new(v, BigInt::one() << w)
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_ceil(b)
}

/// Bounds on `e^x` for a rational `x`.
fn exp_bounds(x: &Rational, bits: u32) -> (Rational, Rational) {
    if x.is_negative() {
        let (lo, hi) = exp_bounds(&-x, bits + 2);
        return (round_down(&hi.recip(), bits), round_up(&lo.recip(), bits));
    }
    if x.is_zero() {
        return (Rational::one(), Rational::one());
    }
    // y = x / 2^k <= 1/2 exactly, then square k times
    let k = (approx_log2(x) + 2).max(0) as u32;
    let w = bits + 2 * k + 24;
    let yn = x.numer().clone();
    let yd: BigInt = x.denom() << k;
    let (mut lo, mut hi) = exp_taylor_fixed(&yn, &yd, w);
    for _ in 0..k {
        lo = (&lo * &lo) >> w;
        hi = ceil_div(&(&hi * &hi), &(BigInt::one() << w));
    }
    (round_down(&fixed_to_rational(lo, w), bits), round_up(&fixed_to_rational(hi, w), bits))
}

/// Fixed-point Taylor bounds on `e^y`, `y = yn / yd` in `(0, 1/2]`. After the
/// term `y^N / N!` the tail is below `2 y^(N+1) / (N+1)!`.
fn exp_taylor_fixed(yn: &BigInt, yd: &BigInt, w: u32) -> (BigInt, BigInt) {
    let one = BigInt::one() << w;
    let tol = BigInt::from(16);
    let mut term_lo = one.clone();
    let mut term_hi = one.clone();
    let mut sum_lo = one.clone();
    let mut sum_hi = one;
    let mut n = 0u64;
    loop {
        n += 1;
        let d = yd * n;
        term_lo = (&term_lo * yn).div_floor(&d);
        term_hi = ceil_div(&(&term_hi * yn), &d);
        sum_lo += &term_lo;
        sum_hi += &term_hi;
        let tail = ceil_div(&(&term_hi * yn * 2u32), &(yd * (n + 1)));
        if tail < tol {
            return (sum_lo, sum_hi + tail);
        }
    }
}

/// Bounds on `ln x` for a positive rational `x`, via `x = 2^k s` with
/// `1 <= s < 2` and `ln s = 2 atanh((s-1)/(s+1))`.
fn ln_bounds(x: &Rational, bits: u32) -> (Rational, Rational) {
    let mut k = approx_log2(x);
    let mut s = x * pow2(-k);
    while s >= rat(2) {
        s /= rat(2);
        k += 1;
    }
    while s < Rational::one() {
        s *= rat(2);
        k -= 1;
    }
    let w = bits + 24 + 2 * (k.unsigned_abs().max(1).ilog2() + 1);
    let z = (&s - Rational::one()) / (&s + Rational::one());
    let (mut lo, mut hi) = atanh_fixed(z.numer(), z.denom(), w);
    lo <<= 1;
    hi <<= 1;
    if k != 0 {
        let (l2_lo, l2_hi) = atanh_fixed(&BigInt::one(), &BigInt::from(3), w);
        let kb = BigInt::from(k) * 2;
        if k > 0 {
            lo += &kb * l2_lo;
            hi += &kb * l2_hi;
        } else {
            lo += &kb * l2_hi;
            hi += &kb * l2_lo;
        }
    }
    (round_down(&fixed_to_rational(lo, w), bits), round_up(&fixed_to_rational(hi, w), bits))
}

/// Fixed-point bounds on `atanh z = sum z^(2j+1)/(2j+1)`, `z = zn / zd` in
/// `[0, 1/3]`; the tail after the power `z^(2j+1)` is below
/// `z^(2j+1) z^2 / (1 - z^2)`.
fn atanh_fixed(zn: &BigInt, zd: &BigInt, w: u32) -> (BigInt, BigInt) {
    if zn.is_zero() {
        return (BigInt::zero(), BigInt::zero());
    }
    let zn2 = zn * zn;
    let zd2 = zd * zd;
    let tail_den = &zd2 - &zn2;
    let tol = BigInt::from(16);
    let one = BigInt::one() << w;
    let mut power_lo = (&one * zn).div_floor(zd);
    let mut power_hi = ceil_div(&(&one * zn), zd);
    let mut sum_lo = BigInt::zero();
    let mut sum_hi = BigInt::zero();
    let mut j = 0u64;
    loop {
        let odd = BigInt::from(2 * j + 1);
        sum_lo += power_lo.div_floor(&odd);
        sum_hi += ceil_div(&power_hi, &odd);
        let tail = ceil_div(&(&power_hi * &zn2), &tail_den);
        if tail < tol {
            return (sum_lo, sum_hi + tail);
        }
        power_lo = (&power_lo * &zn2).div_floor(&zd2);
        power_hi = ceil_div(&(&power_hi * &zn2), &zd2);
        j += 1;
    }
}

/// Enclosure of `atan(1/m)` from the alternating series; the limit lies
/// within one further term of every partial sum.
fn atan_inv(m: i64, bits: u32) -> Enclosure {
    let w = bits + 24;
    let one = BigInt::one() << w;
    let mb = BigInt::from(m);
    let m2 = &mb * &mb;
    let tol = BigInt::from(16);
    let mut power_lo = one.div_floor(&mb);
    let mut power_hi = ceil_div(&one, &mb);
    let mut sum_lo = BigInt::zero();
    let mut sum_hi = BigInt::zero();
    let mut j = 0u64;
    loop {
        let odd = BigInt::from(2 * j + 1);
        let (t_lo, t_hi) = (power_lo.div_floor(&odd), ceil_div(&power_hi, &odd));
        if j % 2 == 0 {
            sum_lo += t_lo;
            sum_hi += t_hi;
        } else {
            sum_lo -= t_hi;
            sum_hi -= t_lo;
        }
        power_lo = power_lo.div_floor(&m2);
        power_hi = ceil_div(&power_hi, &m2);
        let next = ceil_div(&power_hi, &BigInt::from(2 * j + 3));
        if next < tol {
            let lo = fixed_to_rational(sum_lo - &next, w);
            let hi = fixed_to_rational(sum_hi + next, w);
            return Enclosure::rounded(lo, hi, bits);
        }
        j += 1;
    }
}

/// Decides `lhs(bits) > rhs(bits)` by recomputing at doubling precision until
/// the enclosures separate. Returns `None` past `max_bits`.
pub fn decide_greater<F>(mut f: F, start_bits: u32, max_bits: u32) -> Option<bool>
where
    F: FnMut(u32) -> (Enclosure, Enclosure),
{
    let mut bits = start_bits;
    while bits <= max_bits {
        let (l, r) = f(bits);
        match l.compare(&r) {
            Some(Ordering::Greater) => return Some(true),
            Some(_) => return Some(false),
            None => bits *= 2,
        }
    }
    None
}
