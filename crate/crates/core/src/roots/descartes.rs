//! Descartes-rule bisection (Vincent-Collins-Akritas) on integer
//! polynomials, and a modular squarefreeness certificate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

/// Number of sign changes in a coefficient sequence, zeros skipped.
pub(crate) fn variations(a: &[BigInt]) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for c in a {
        let s = if c.is_positive() {
            1
        } else if c.is_negative() {
            -1
        } else {
            continue;
        };
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// `a(x + 1)` in place.
pub(crate) fn taylor_shift_one(a: &mut [BigInt]) {
    let n = a.len();
    for i in 0..n.saturating_sub(1) {
        for j in (i..n - 1).rev() {
            let t = a[j + 1].clone();
            a[j] += t;
        }
    }
}

/// Upper bound on the number of roots in `(0, 1)`, exact when 0 or 1:
/// sign variations of `(x + 1)^d a(1 / (x + 1))`.
fn unit_interval_bound(a: &[BigInt]) -> usize {
    let mut b: Vec<BigInt> = a.iter().rev().cloned().collect();
    taylor_shift_one(&mut b);
    variations(&b)
}

fn strip_common_twos(a: &mut [BigInt]) {
    let tz = a.iter().filter(|c| !c.is_zero()).filter_map(|c| c.trailing_zeros()).min().unwrap_or(0);
    if tz > 0 {
        for c in a.iter_mut() {
            *c >>= tz;
        }
    }
}

/// Dyadic cell `(num / 2^depth, (num + 1) / 2^depth)` of the unit interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Cell {
    pub num: BigInt,
    pub depth: u32,
}

#[derive(Debug, Default)]
pub(crate) struct UnitIsolation {
    /// Cells that each contain exactly one root.
    pub cells: Vec<Cell>,
    /// Roots hit exactly at a bisection point, as `num / 2^depth`.
    pub exact: Vec<Cell>,
}

/// Isolates the roots in `(0, 1)` of a squarefree integer polynomial with
/// `a(0) != 0` and `a(1) != 0`.
pub(crate) fn isolate_unit(a: &[BigInt]) -> UnitIsolation {
    let mut out = UnitIsolation::default();
    let mut stack = vec![(a.to_vec(), Cell { num: BigInt::zero(), depth: 0 })];
    while let Some((poly, cell)) = stack.pop() {
        match unit_interval_bound(&poly) {
            0 => continue,
            1 => {
                out.cells.push(cell);
                continue;
            }
            _ => {}
        }
        let d = poly.len() - 1;
        let mut left: Vec<BigInt> = poly.iter().enumerate().map(|(i, c)| c << (d - i)).collect();
        strip_common_twos(&mut left);
        let mut right = left.clone();
        taylor_shift_one(&mut right);
        let child_depth = cell.depth + 1;
        let left_num: BigInt = &cell.num << 1;
        let right_num: BigInt = &left_num + 1u32;
        if right[0].is_zero() {
            out.exact.push(Cell { num: right_num.clone(), depth: child_depth });
            right.remove(0);
        }
        stack.push((right, Cell { num: right_num, depth: child_depth }));
        stack.push((left, Cell { num: left_num, depth: child_depth }));
    }
    out
}

const PRIMES: [u64; 6] = [2_147_483_647, 2_147_483_629, 2_147_483_587, 1_000_000_007, 998_244_353, 1_000_000_009];

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn trim_mod(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn gcd_degree_mod(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> usize {
    trim_mod(&mut a);
    trim_mod(&mut b);
    while !b.is_empty() {
        let inv = mod_pow(*b.last().expect("nonzero"), p - 2, p);
        while a.len() >= b.len() {
            let shift = a.len() - b.len();
            let factor = a.last().expect("nonzero") * inv % p;
            for (j, bc) in b.iter().enumerate() {
                a[j + shift] = (a[j + shift] + p - factor * bc % p) % p;
            }
            trim_mod(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// `true` proves the integer polynomial squarefree over the rationals: some
/// prime not dividing the leading coefficient gives `gcd(f, f') = 1` mod p.
/// `false` is inconclusive.
pub(crate) fn certify_squarefree_modular(a: &[BigInt]) -> bool {
    if a.len() <= 2 {
        return true;
    }
    PRIMES.iter().any(|&p| {
        let pb = BigInt::from(p);
        let reduce = |c: &BigInt| c.mod_floor(&pb).to_u64().expect("reduced below p");
        let f: Vec<u64> = a.iter().map(reduce).collect();
        if f.last() == Some(&0) {
            return false;
        }
        let df: Vec<u64> = f.iter().enumerate().skip(1).map(|(i, c)| (i as u64 % p) * c % p).collect();
        gcd_degree_mod(f, df, p) == 0
    })
}
