//! Sturm chains over primitive integer polynomials.
//!
//! Each remainder is computed by sign-preserving pseudo-division and reduced
//! by its content, so every chain element is a positive multiple of the
//! classical rational Sturm remainder.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::exactnum::{eval_homogeneous, Poly, Rational};

#[derive(Debug, Clone)]
pub(crate) struct SturmChain {
    chain: Vec<Vec<BigInt>>,
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if !g.is_zero() && g != BigInt::from(1) {
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
    }
}

/// `c * (f mod g)` for some positive integer `c`, with `g` nonzero.
pub(crate) fn positive_pseudo_rem(f: &[BigInt], g: &[BigInt]) -> Vec<BigInt> {
    let dg = g.len() - 1;
    let lead = &g[dg];
    let lead_abs = lead.abs();
    let lead_neg = lead.is_negative();
    let mut r = f.to_vec();
    trim(&mut r);
    while r.len() > dg {
        let dr = r.len() - 1;
        let top = r[dr].clone();
        let shift = dr - dg;
        for c in r.iter_mut() {
            *c *= &lead_abs;
        }
        // r <- |lead| r - sign(lead) top x^shift g, which cancels the top term
        for (j, gc) in g.iter().enumerate() {
            let t = &top * gc;
            if lead_neg {
                r[j + shift] += t;
            } else {
                r[j + shift] -= t;
            }
        }
        trim(&mut r);
    }
    make_primitive(&mut r);
    r
}

/// Primitive integer gcd of two nonzero polynomials.
pub(crate) fn integer_gcd(f: &[BigInt], g: &[BigInt]) -> Vec<BigInt> {
    let mut a = f.to_vec();
    let mut b = g.to_vec();
    trim(&mut a);
    trim(&mut b);
    make_primitive(&mut a);
    make_primitive(&mut b);
    while !b.is_empty() {
        let mut r = positive_pseudo_rem(&a, &b);
        make_primitive(&mut r);
        a = b;
        b = r;
    }
    a
}

/// Sign of `sum c_i x^i` at `x = p/q`, via the homogenized integer value.
pub(crate) fn sign_at(coeffs: &[BigInt], x: &Rational) -> i8 {
    sign_of(&eval_homogeneous(coeffs, x).0)
}

fn sign_of(v: &BigInt) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

impl SturmChain {
    /// Chain `p, p', -rem(p, p'), ...` of a nonzero polynomial.
    pub(crate) fn new(p: &Poly) -> Self {
        Self::from_ints(p.primitive_integer_coeffs())
    }

    pub(crate) fn from_ints(mut first: Vec<BigInt>) -> Self {
        trim(&mut first);
        let mut derivative: Vec<BigInt> =
            first.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect();
        make_primitive(&mut derivative);
        let mut chain = vec![first];
        if !derivative.is_empty() {
            chain.push(derivative);
            loop {
                let n = chain.len();
                let mut r = positive_pseudo_rem(&chain[n - 2], &chain[n - 1]);
                if r.is_empty() {
                    break;
                }
                for c in r.iter_mut() {
                    *c = -&*c;
                }
                make_primitive(&mut r);
                chain.push(r);
            }
        }
        Self { chain }
    }

    /// The last chain element: a primitive `gcd(p, p')`.
    #[cfg(test)]
    pub(crate) fn last(&self) -> &[BigInt] {
        self.chain.last().expect("chain is never empty")
    }

    pub(crate) fn variations_at(&self, x: &Rational) -> usize {
        variations(self.chain.iter().map(|c| sign_at(c, x)))
    }

    pub(crate) fn variations_at_pos_inf(&self) -> usize {
        variations(self.chain.iter().map(|c| sign_of(c.last().expect("nonzero"))))
    }

    pub(crate) fn variations_at_neg_inf(&self) -> usize {
        variations(self.chain.iter().map(|c| {
            let s = sign_of(c.last().expect("nonzero"));
            if (c.len() - 1) % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }

    /// Distinct roots in `(lo, hi]`; `lo` must not be a root.
    pub(crate) fn count_between(&self, lo: &Rational, hi: &Rational) -> usize {
        self.variations_at(lo).saturating_sub(self.variations_at(hi))
    }

    /// Distinct roots in `(lo, +inf)`; `lo` must not be a root.
    pub(crate) fn count_above(&self, lo: &Rational) -> usize {
        self.variations_at(lo).saturating_sub(self.variations_at_pos_inf())
    }

    /// Total number of distinct real roots.
    pub(crate) fn count_all(&self) -> usize {
        self.variations_at_neg_inf().saturating_sub(self.variations_at_pos_inf())
    }
}
