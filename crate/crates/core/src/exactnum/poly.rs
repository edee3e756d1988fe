use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{rational_from_f64, rational_to_f64, sign, Rational};
use crate::error::Result;

/// Dense univariate polynomial with exact rational coefficients in ascending
/// degree order. The highest stored coefficient is never zero; the zero
/// polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Self::from_coeffs(coeffs.iter().cloned().map(Rational::from_integer).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Exact value at `x`.
    ///
    /// Denominators are cleared once and the integer polynomial is evaluated
    /// homogeneously at `p/q`, so a single reduction happens at the end.
    pub fn eval(&self, x: &Rational) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        let (ints, lcm) = self.cleared();
        let (value, q_pow) = eval_homogeneous(&ints, x);
        Rational::new(value, lcm * q_pow)
    }

    /// Sign of the exact value at `x`.
    pub fn sign_at(&self, x: &Rational) -> i8 {
        sign(&self.eval(x))
    }

    /// Value at a double, computed exactly at the double's rational value and
    /// rounded once.
    pub fn eval_f64(&self, x: f64) -> Result<f64> {
        rational_to_f64(&self.eval(&rational_from_f64(x)?))
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Quotient and remainder of Euclidean division by a nonzero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&n| n >= dd) else {
            return (Poly::zero(), self.clone());
        };
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = &rem[i + dd] / &lead;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * dc;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Monic greatest common divisor; zero only if both inputs are zero.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.monic()
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Positive rational multiple with coprime integer coefficients.
    pub fn primitive_part(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        Poly::from_bigints(&self.primitive_integer_coeffs())
    }

    /// Integer coefficients of the primitive part (positive scaling, so signs
    /// are preserved everywhere).
    pub fn primitive_integer_coeffs(&self) -> Vec<BigInt> {
        let (ints, _) = self.cleared();
        let g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if g.is_zero() || g.is_one() {
            return ints;
        }
        ints.into_iter().map(|c| c / &g).collect()
    }

    /// `(L * coeffs, L)` with `L` the lcm of the denominators.
    fn cleared(&self) -> (Vec<BigInt>, BigInt) {
        let lcm = self.coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let ints = self.coeffs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
        (ints, lcm)
    }

    /// Taylor shift `p(x + a)`.
    pub fn shift(&self, a: &Rational) -> Poly {
        if a.is_zero() || self.coeffs.len() < 2 {
            return self.clone();
        }
        let (ints, lcm) = self.cleared();
        let shifted = shift_integer(&ints, a);
        // shift_integer returns v^d * p(x + u/v) with v = a.denom()
        let d = ints.len() - 1;
        let denom = lcm * num_traits::pow(a.denom().clone(), d);
        Poly::from_coeffs(shifted.into_iter().map(|c| Rational::new(c, denom.clone())).collect())
    }

    /// Writes `p = x^k * q` with `q(0) != 0` and returns `(k, q)`. The zero
    /// polynomial returns `(0, 0)`.
    pub fn split_x_power(&self) -> (usize, Poly) {
        match self.coeffs.iter().position(|c| !c.is_zero()) {
            None => (0, Poly::zero()),
            Some(k) => (k, Poly { coeffs: self.coeffs[k..].to_vec() }),
        }
    }

    /// Number of sign changes in the coefficient sequence, zeros skipped.
    pub fn sign_variations(&self) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for c in &self.coeffs {
            let s = sign(c);
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Coefficients rounded to doubles.
    pub fn to_f64_coeffs(&self) -> Result<Vec<f64>> {
        self.coeffs.iter().map(rational_to_f64).collect()
    }
}

/// `(sum c_i p^i q^(d-i), q^d)` for `x = p/q`, so the value is their ratio.
pub(crate) fn eval_homogeneous(coeffs: &[BigInt], x: &Rational) -> (BigInt, BigInt) {
    let Some(d) = coeffs.len().checked_sub(1) else {
        return (BigInt::zero(), BigInt::one());
    };
    let p = x.numer();
    let q = x.denom();
    let mut q_pow = BigInt::one();
    let mut acc = coeffs[d].clone();
    for c in coeffs[..d].iter().rev() {
        q_pow *= q;
        acc = acc * p + c * &q_pow;
    }
    (acc, q_pow)
}

/// `v^d * f(x + u/v)` for integer `f` of degree `d` and `a = u/v`, as integer
/// coefficients.
pub fn shift_integer(f: &[BigInt], a: &Rational) -> Vec<BigInt> {
    let n = f.len();
    if n == 0 {
        return Vec::new();
    }
    let d = n - 1;
    let u = a.numer();
    let v = a.denom();
    // g(y) = v^d f(y / v), then g(y + u), then substitute y = v x
    let mut vp = BigInt::one();
    let mut g: Vec<BigInt> = vec![BigInt::zero(); n];
    for i in (0..n).rev() {
        g[i] = &f[i] * &vp;
        vp *= v;
    }
    if !u.is_zero() {
        for i in 0..d {
            for j in (i..d).rev() {
                let t = &g[j + 1] * u;
                g[j] += t;
            }
        }
    }
    let mut vp = BigInt::one();
    for c in g.iter_mut() {
        *c *= &vp;
        vp *= v;
    }
    g
}

impl From<Rational> for Poly {
    fn from(c: Rational) -> Self {
        Poly::constant(c)
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Poly::from_coeffs(coeffs)
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    /// Descending-degree rendering such as `1/2*x^2 + 3/2*x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 if show_coeff => write!(f, "*x")?,
                1 => write!(f, "x")?,
                _ if show_coeff => write!(f, "*x^{i}")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}
