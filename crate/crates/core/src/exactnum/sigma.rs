use crate::error::{Error, Result};

/// Sum of the positive divisors of `n`, by trial division up to `sqrt(n)`.
pub fn sigma(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::SigmaOfZero);
    }
    let mut total = 0u64;
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            total += d;
            let e = n / d;
            if e != d {
                total += e;
            }
        }
        d += 1;
    }
    Ok(total)
}

/// Divisor sums `sigma(1..=max)` computed once by an additive sieve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaTable {
    values: Vec<u64>,
}

impl SigmaTable {
    pub fn new(max: usize) -> Self {
        let mut values = vec![0u64; max + 1];
        for d in 1..=max {
            for m in (d..=max).step_by(d) {
                values[m] += d as u64;
            }
        }
        Self { values }
    }

    pub fn max(&self) -> usize {
        self.values.len() - 1
    }

    /// `sigma(n)` for `1 <= n <= max`.
    pub fn get(&self, n: usize) -> Result<u64> {
        match n {
            0 => Err(Error::SigmaOfZero),
            n if n > self.max() => Err(Error::OutOfCache { index: n, max_n: self.max() }),
            n => Ok(self.values[n]),
        }
    }

    /// Values `sigma(1), sigma(2), ...`.
    pub fn as_slice(&self) -> &[u64] {
        &self.values[1..]
    }
}
