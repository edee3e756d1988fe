//! The partition polynomials `P_n(x)` and the objects derived from them.
//!
//! `P_0 = 1` and `P_n(x) = (x/n) * sum_{k=1}^{n} sigma(k) P_{n-k}(x)`; the
//! value `P_n(k)` at a positive integer `k` is the number of `k`-colored
//! partitions of `n`.
//!
//! The cache runs the recurrence on `Q_n = n! * P_n`, which has integer
//! coefficients: `Q_n = x * sum_k sigma(k) * (n-1)!/(n-k)! * Q_{n-k}`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{Poly, Rational, SigmaTable};

/// Immutable table of `P_0..=P_max_n` with the divisor sums they use.
#[derive(Debug, Clone)]
pub struct PolyCache {
    max_n: usize,
    sigma: SigmaTable,
    factorials: Vec<BigInt>,
    scaled: Vec<Vec<BigInt>>,
    polys: Vec<Poly>,
}

impl PolyCache {
    pub const DEFAULT_MAX_N: usize = 200;

    pub fn build(max_n: usize) -> Self {
        let sigma = SigmaTable::new(max_n.max(1));
        let mut factorials = vec![BigInt::one()];
        for i in 1..=max_n {
            let next = &factorials[i - 1] * BigInt::from(i);
            factorials.push(next);
        }

        let mut scaled: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        for n in 1..=max_n {
            // coefficient vector of sum_k sigma(k) ff(n-1, k-1) Q_{n-k}, degree n-1
            let mut acc = vec![BigInt::zero(); n];
            let mut falling = BigInt::one();
            for k in 1..=n {
                if k > 1 {
                    falling *= BigInt::from(n - k + 1);
                }
                let weight = &falling * BigInt::from(sigma.as_slice()[k - 1]);
                for (slot, c) in acc.iter_mut().zip(&scaled[n - k]) {
                    *slot += &weight * c;
                }
            }
            let mut q = Vec::with_capacity(n + 1);
            q.push(BigInt::zero());
            q.extend(acc);
            scaled.push(q);
        }

        let polys = scaled
            .iter()
            .zip(&factorials)
            .map(|(q, f)| {
                Poly::from_coeffs(q.iter().map(|c| Rational::new(c.clone(), f.clone())).collect())
            })
            .collect();

        Self { max_n, sigma, factorials, scaled, polys }
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn sigma(&self) -> &SigmaTable {
        &self.sigma
    }

    fn check(&self, index: usize) -> Result<()> {
        if index > self.max_n {
            Err(Error::OutOfCache { index, max_n: self.max_n })
        } else {
            Ok(())
        }
    }

    fn check_positive(n: usize, what: &str) -> Result<()> {
        if n == 0 {
            Err(Error::InvalidArgument(format!("{what} requires a positive index")))
        } else {
            Ok(())
        }
    }

    /// `P_n`.
    pub fn poly(&self, n: usize) -> Result<&Poly> {
        self.check(n)?;
        Ok(&self.polys[n])
    }

    /// Integer coefficients of `n! * P_n`.
    pub fn scaled(&self, n: usize) -> Result<&[BigInt]> {
        self.check(n)?;
        Ok(&self.scaled[n])
    }

    pub fn factorial(&self, n: usize) -> Result<&BigInt> {
        self.check(n)?;
        Ok(&self.factorials[n])
    }

    /// Exact `P_n(x)`.
    pub fn eval(&self, n: usize, x: &Rational) -> Result<Rational> {
        Ok(self.poly(n)?.eval(x))
    }

    /// `P_n(k)` at a nonnegative integer; the number of `k`-colored
    /// partitions of `n` for `k >= 1`.
    pub fn eval_int(&self, n: usize, k: u64) -> Result<BigInt> {
        let q = self.scaled(n)?;
        let k = BigInt::from(k);
        let value = q.iter().rev().fold(BigInt::zero(), |acc, c| acc * &k + c);
        Ok(value / &self.factorials[n])
    }

    /// `P_n'` via `sum_{k=1}^{n} (sigma(k)/k) P_{n-k}`.
    pub fn derivative_formula(&self, n: usize) -> Result<Poly> {
        Self::check_positive(n, "derivative formula")?;
        self.check(n)?;
        let mut acc = Poly::zero();
        for k in 1..=n {
            let w = Rational::new(self.sigma.get(k)?.into(), BigInt::from(k));
            acc = &acc + &self.polys[n - k].scale(&w);
        }
        Ok(acc)
    }

    /// `Delta_n = P_{n+1} - P_n`.
    pub fn delta(&self, n: usize) -> Result<Poly> {
        Self::check_positive(n, "delta")?;
        self.check(n + 1)?;
        Ok(&self.polys[n + 1] - &self.polys[n])
    }

    /// `P_{a,b} = P_a P_b - P_{a+b}`.
    pub fn bo_poly(&self, a: usize, b: usize) -> Result<Poly> {
        Self::check_positive(a.min(b), "bo_poly")?;
        self.check(a + b)?;
        Ok(&(&self.polys[a] * &self.polys[b]) - &self.polys[a + b])
    }

    /// `x P_n - P_{n+1}`, which equals `P_{n,1}`.
    pub fn shifted_ratio_poly(&self, n: usize) -> Result<Poly> {
        Self::check_positive(n, "shifted_ratio_poly")?;
        self.check(n + 1)?;
        Ok(&(&Poly::x() * &self.polys[n]) - &self.polys[n + 1])
    }

    /// The monic integer polynomial `n! P_n / x` of degree `n - 1`.
    ///
    /// Fails if any coefficient is not a positive integer.
    pub fn tilde_poly(&self, n: usize) -> Result<Poly> {
        Self::check_positive(n, "tilde_poly")?;
        let p = self.poly(n)?;
        let f = Rational::from_integer(self.factorials[n].clone());
        let (k, rest) = p.split_x_power();
        if k != 1 {
            return Err(Error::Structure(format!("P_{n} has x-adic order {k}, expected 1")));
        }
        let t = rest.scale(&f);
        if let Some(bad) = t.coeffs().iter().find(|c| !c.is_integer() || !c.is_positive()) {
            return Err(Error::Structure(format!("coefficient {bad} of tilde P_{n} is not a positive integer")));
        }
        if t.leading().is_some_and(|l| !l.is_one()) || t.degree() != Some(n - 1) {
            return Err(Error::Structure(format!("tilde P_{n} is not monic of degree {}", n - 1)));
        }
        Ok(t)
    }
}

/// Counts `p_{-k}(0..=N)` of `k`-colored partitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredCountTable {
    pub k: u32,
    pub counts: Vec<BigInt>,
}

/// Expands `prod_{m>=1} (1 - q^m)^{-k}` to order `q^N` by dividing the running
/// series by `(1 - q^m)` `k` times for every `m <= N`. Shares no code with the
/// polynomial recurrence.
pub fn colored_counts_oracle(k: u32, n_max: usize) -> ColoredCountTable {
    let mut counts = vec![BigInt::zero(); n_max + 1];
    counts[0] = BigInt::one();
    for m in 1..=n_max {
        for _ in 0..k {
            // multiplying by 1/(1 - q^m) is a stride-m prefix sum
            for i in m..=n_max {
                let prev = counts[i - m].clone();
                counts[i] += prev;
            }
        }
    }
    ColoredCountTable { k, counts }
}

/// Ordinary partition numbers `p(0..=N)`.
pub fn partition_numbers(n_max: usize) -> Vec<BigInt> {
    colored_counts_oracle(1, n_max).counts
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p.into(), d.into())
    }

    #[test]
    fn first_polynomials() {
        let cache = PolyCache::build(3);
        assert_eq!(cache.poly(0).unwrap(), &Poly::one());
        assert_eq!(cache.poly(1).unwrap(), &Poly::x());
        assert_eq!(cache.poly(2).unwrap(), &Poly::from_coeffs(vec![q(0, 1), q(3, 2), q(1, 2)]));
        assert_eq!(cache.poly(3).unwrap(), &Poly::from_coeffs(vec![q(0, 1), q(8, 6), q(9, 6), q(1, 6)]));
        assert!(matches!(cache.poly(4), Err(Error::OutOfCache { index: 4, max_n: 3 })));
    }

    #[test]
    fn fourth_polynomial_values() {
        let cache = PolyCache::build(5);
        let p4 = cache.poly(4).unwrap();
        assert_eq!(p4.degree(), Some(4));
        assert_eq!(p4.eval(&q(1, 1)), q(5, 1));
        assert_eq!(p4.eval(&q(2, 1)), q(20, 1));
        assert_eq!(cache.eval_int(5, 2).unwrap(), BigInt::from(36));
    }

    #[test]
    fn derivative_formula_examples() {
        let cache = PolyCache::build(10);
        assert_eq!(cache.derivative_formula(1).unwrap(), Poly::one());
        assert_eq!(cache.derivative_formula(2).unwrap(), Poly::from_coeffs(vec![q(3, 2), q(1, 1)]));
        assert_eq!(cache.derivative_formula(3).unwrap(), Poly::from_coeffs(vec![q(8, 6), q(18, 6), q(3, 6)]));
        assert!(cache.derivative_formula(0).is_err());
        for n in 1..=10 {
            assert_eq!(cache.derivative_formula(n).unwrap(), cache.poly(n).unwrap().derivative());
        }
    }

    #[test]
    fn delta_examples() {
        let cache = PolyCache::build(6);
        assert_eq!(cache.delta(1).unwrap(), Poly::from_coeffs(vec![q(0, 1), q(1, 2), q(1, 2)]));
        assert_eq!(cache.delta(2).unwrap(), Poly::from_coeffs(vec![q(0, 1), q(-1, 6), q(1, 1), q(1, 6)]));
        for n in 1..=5 {
            let d = cache.delta(n).unwrap();
            assert_eq!(d.coeff(0), q(0, 1));
            assert_eq!(d.degree(), Some(n + 1));
            // Delta_n'(0) = sigma(n+1)/(n+1) - sigma(n)/n
            let s = cache.sigma();
            let expected = q(s.get(n + 1).unwrap() as i64, n as i64 + 1) - q(s.get(n).unwrap() as i64, n as i64);
            assert_eq!(d.coeff(1), expected);
        }
        assert!(cache.delta(6).is_err());
        assert!(cache.delta(0).is_err());
    }

    #[test]
    fn bo_poly_examples() {
        let cache = PolyCache::build(12);
        assert_eq!(cache.bo_poly(1, 1).unwrap(), Poly::from_coeffs(vec![q(0, 1), q(-3, 2), q(1, 2)]));
        assert_eq!(cache.bo_poly(2, 1).unwrap(), Poly::from_coeffs(vec![q(0, 1), q(-4, 3), q(0, 1), q(1, 3)]));
        for a in 1..=6 {
            for b in 1..=6 {
                let p = cache.bo_poly(a, b).unwrap();
                assert_eq!(p.coeff(0), q(0, 1));
                let s = cache.sigma().get(a + b).unwrap() as i64;
                assert_eq!(p.coeff(1), q(-s, (a + b) as i64));
                assert_eq!(p, cache.bo_poly(b, a).unwrap());
            }
        }
        assert_eq!(cache.shifted_ratio_poly(3).unwrap(), cache.bo_poly(3, 1).unwrap());
        assert!(cache.bo_poly(7, 6).is_err());
    }

    #[test]
    fn tilde_examples() {
        let cache = PolyCache::build(30);
        assert_eq!(cache.tilde_poly(1).unwrap(), Poly::one());
        assert_eq!(cache.tilde_poly(2).unwrap(), Poly::from_ints(&[3, 1]));
        assert_eq!(cache.tilde_poly(3).unwrap(), Poly::from_ints(&[8, 9, 1]));
        for n in 1..=30 {
            assert!(cache.tilde_poly(n).is_ok());
        }
    }

    #[test]
    fn oracle_examples() {
        let one = colored_counts_oracle(1, 10);
        assert_eq!(one.counts[4], BigInt::from(5));
        assert_eq!(one.counts[5], BigInt::from(7));
        let two = colored_counts_oracle(2, 10);
        assert_eq!(two.counts[4], BigInt::from(20));
        assert_eq!(two.counts[5], BigInt::from(36));
        for k in 1..=7 {
            let t = colored_counts_oracle(k, 3);
            assert_eq!(t.counts[0], BigInt::one());
            assert_eq!(t.counts[1], BigInt::from(k));
        }
        assert_eq!(colored_counts_oracle(3, 0).counts, vec![BigInt::one()]);
    }

    #[test]
    fn oracle_matches_brute_force_enumeration() {
        // count k-colored partitions directly: multisets of (part, color)
        fn count(n: usize, max_part: usize, max_color: usize, k: usize) -> u64 {
            if n == 0 {
                return 1;
            }
            let mut total = 0;
            for part in (1..=max_part.min(n)).rev() {
                let colors = if part == max_part { max_color } else { k };
                for color in 1..=colors {
                    total += count(n - part, part, color, k);
                }
            }
            total
        }
        for k in 1..=3u32 {
            let t = colored_counts_oracle(k, 12);
            for n in 0..=12 {
                assert_eq!(t.counts[n], BigInt::from(count(n, n, k as usize, k as usize)), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn polynomial_values_match_oracle() {
        let cache = PolyCache::build(40);
        for k in 1..=4u32 {
            let t = colored_counts_oracle(k, 40);
            for n in 0..=40 {
                assert_eq!(cache.eval_int(n, k as u64).unwrap(), t.counts[n]);
                assert_eq!(cache.eval(n, &Rational::from_integer(k.into())).unwrap(), Rational::from_integer(t.counts[n].clone()));
            }
        }
    }
}
