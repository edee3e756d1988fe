//! Exhaustive sweeps over finite ranges of the inequalities, each reduced to a
//! [`VerificationReport`] that lists what was found next to what the
//! published catalogs predict.
//!
//! Every pass/fail decision is exact: polynomial values are rationals,
//! "for all x beyond a point" claims use root-count certificates from
//! [`crate::roots::tail_certificate`], and logarithms enter through certified
//! enclosures.

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{self, Enclosure};
use crate::error::{Error, Result};
use crate::exactnum::{Poly, Rational};
use crate::partpoly::{partition_numbers, PolyCache};
use crate::roots::{tail_certificate, CertMethod, TailCertificate};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Failed,
    Mismatch,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Failed => "failed",
            Status::Mismatch => "mismatch",
        }
    }
}

/// Outcome of one sweep. `exceptions` and `equalities` hold the found
/// instances in sweep order; `witnesses` holds tagged string rows such as
/// rational witnesses, certificate statistics and catalog differences
/// (`["unexpected", "exception", "3", "1"]`, `["missing", ...]`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub domain: String,
    pub status: Status,
    pub exceptions: Vec<Vec<i64>>,
    pub equalities: Vec<Vec<i64>>,
    pub witnesses: Vec<Vec<String>>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }
}

/// How a difference between found and expected exceptions is classified.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    /// Exceptions are part of the claim; a difference is a catalog mismatch.
    Catalog,
    /// Every instance must pass; an exception is a failed claim.
    Certificate,
}

struct Builder {
    claim: String,
    domain: String,
    kind: Kind,
    started: Instant,
    exceptions: Vec<Vec<i64>>,
    equalities: Vec<Vec<i64>>,
    witnesses: Vec<Vec<String>>,
}

impl Builder {
    fn new(claim: &str, domain: String, kind: Kind) -> Self {
        Builder {
            claim: claim.to_string(),
            domain,
            kind,
            started: Instant::now(),
            exceptions: Vec::new(),
            equalities: Vec::new(),
            witnesses: Vec::new(),
        }
    }

    fn witness<S: ToString>(&mut self, row: &[S]) {
        self.witnesses.push(row.iter().map(|s| s.to_string()).collect());
    }

    fn finish(mut self, expected_exceptions: &[Vec<i64>], expected_equalities: &[Vec<i64>]) -> VerificationReport {
        let exc_diff = self.diff("exception", &self.exceptions.clone(), expected_exceptions);
        let eq_diff = self.diff("equality", &self.equalities.clone(), expected_equalities);
        let status = if exc_diff && self.kind == Kind::Certificate {
            Status::Failed
        } else if exc_diff || eq_diff {
            Status::Mismatch
        } else {
            Status::Verified
        };
        VerificationReport {
            claim: self.claim,
            domain: self.domain,
            status,
            exceptions: self.exceptions,
            equalities: self.equalities,
            witnesses: self.witnesses,
            elapsed_ms: self.started.elapsed().as_millis() as u64,
        }
    }

    /// Records catalog differences as witness rows; true if any.
    fn diff(&mut self, what: &str, found: &[Vec<i64>], expected: &[Vec<i64>]) -> bool {
        let found_set: BTreeSet<&Vec<i64>> = found.iter().collect();
        let expected_set: BTreeSet<&Vec<i64>> = expected.iter().collect();
        let mut differs = false;
        for (tag, a, b) in [("unexpected", &found_set, &expected_set), ("missing", &expected_set, &found_set)] {
            for t in a.difference(b) {
                let mut row = vec![tag.to_string(), what.to_string()];
                row.extend(t.iter().map(|v| v.to_string()));
                self.witnesses.push(row);
                differs = true;
            }
        }
        differs
    }
}

fn check_capacity(cache: &PolyCache, needed: usize) -> Result<()> {
    if needed > cache.max_n() {
        return Err(Error::OutOfCache { index: needed, max_n: cache.max_n() });
    }
    Ok(())
}

fn at_least(name: &str, value: usize, min: usize) -> Result<()> {
    if value < min {
        return Err(Error::InvalidArgument(format!("{name} must be at least {min}, got {value}")));
    }
    Ok(())
}

fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// All pairs `1 <= b <= a` with `lo <= a + b <= hi`, by increasing `a + b`.
fn pairs(lo: usize, hi: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for s in lo.max(2)..=hi {
        for b in 1..=s / 2 {
            out.push((s - b, b));
        }
    }
    out
}

fn method_counts(b: &mut Builder, methods: impl IntoIterator<Item = CertMethod>) {
    let (mut d, mut s) = (0usize, 0usize);
    for m in methods {
        match m {
            CertMethod::Descartes => d += 1,
            CertMethod::Sturm => s += 1,
        }
    }
    b.witness(&["certificates", "descartes", &d.to_string(), "sturm", &s.to_string()]);
}

/// `p(a) p(b)` against `p(a+b)` for every pair with `a + b <= nmax`.
pub fn verify_bo_classical(cache: &PolyCache, nmax: usize) -> Result<VerificationReport> {
    at_least("nmax", nmax, 10)?;
    check_capacity(cache, nmax)?;
    let mut b = Builder::new("bo-classical", format!("1<=b<=a, a+b<={nmax}, x=1"), Kind::Catalog);
    let p: Vec<BigInt> = (0..=nmax).map(|n| cache.eval_int(n, 1)).collect::<Result<_>>()?;
    for (a, bb) in pairs(2, nmax) {
        let lhs = &p[a] * &p[bb];
        let rhs = &p[a + bb];
        if &lhs < rhs {
            b.exceptions.push(vec![a as i64, bb as i64]);
        } else if &lhs == rhs {
            b.equalities.push(vec![a as i64, bb as i64]);
        }
    }
    let mut expected: Vec<Vec<i64>> = (1..nmax as i64).map(|a| vec![a, 1]).collect();
    expected.extend([[2, 2], [3, 2], [4, 2], [5, 2], [3, 3], [5, 3]].iter().map(|t| t.to_vec()));
    let equalities = [vec![6, 2], vec![7, 2], vec![4, 3]];
    Ok(b.finish(&expected, &equalities))
}

/// `p_{-k}(a) p_{-k}(b)` against `p_{-k}(a+b)` for `2 <= k <= kmax`.
/// Instances are `[a, b, k]` with `a >= b`.
pub fn verify_cft(cache: &PolyCache, kmax: usize, nmax: usize) -> Result<VerificationReport> {
    at_least("kmax", kmax, 4)?;
    at_least("nmax", nmax, 8)?;
    check_capacity(cache, nmax)?;
    let mut b = Builder::new("cft", format!("2<=k<={kmax}, 1<=b<=a, a+b<={nmax}"), Kind::Catalog);
    let table: Vec<Vec<BigInt>> = (2..=kmax as u64)
        .into_par_iter()
        .map(|k| (0..=nmax).map(|n| cache.eval_int(n, k)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    for (ki, row) in table.iter().enumerate() {
        let k = ki as i64 + 2;
        for (a, bb) in pairs(2, nmax) {
            let lhs = &row[a] * &row[bb];
            let rhs = &row[a + bb];
            let t = vec![a as i64, bb as i64, k];
            if &lhs < rhs {
                b.exceptions.push(t);
            } else if &lhs == rhs {
                b.equalities.push(t);
            }
        }
    }
    let expected = [vec![1, 1, 2]];
    let equalities = [vec![2, 1, 2], vec![3, 1, 2], vec![1, 1, 3]];
    Ok(b.finish(&expected, &equalities))
}

struct MonotoneResult {
    delta: TailCertificate,
    delta_prime: TailCertificate,
    /// `None` when `P_n' - 1` vanishes identically.
    slope: Option<TailCertificate>,
}

/// Certifies `Delta_n > 0`, `Delta_n' > 0` and `P_n' >= 1` on `[1, inf)`.
/// Instances are `[n, part]` with part 1, 2, 3 for the three claims;
/// `P_n' = 1` identically is an equality.
pub fn verify_monotonicity(cache: &PolyCache, nmax: usize) -> Result<VerificationReport> {
    at_least("nmax", nmax, 1)?;
    check_capacity(cache, nmax + 1)?;
    let mut b = Builder::new("monotone", format!("1<=n<={nmax}, x>=1"), Kind::Certificate);
    let one = int(1);
    let results: Vec<MonotoneResult> = (1..=nmax)
        .into_par_iter()
        .map(|n| -> Result<MonotoneResult> {
            let delta = cache.delta(n)?;
            let slope = cache.poly(n)?.derivative() - Poly::one();
            Ok(MonotoneResult {
                delta: tail_certificate(&delta, &one)?,
                delta_prime: tail_certificate(&delta.derivative(), &one)?,
                slope: if slope.is_zero() { None } else { Some(tail_certificate(&slope, &one)?) },
            })
        })
        .collect::<Result<_>>()?;
    let mut methods = Vec::new();
    for (i, r) in results.iter().enumerate() {
        let n = i as i64 + 1;
        if !r.delta.positive_from() {
            b.exceptions.push(vec![n, 1]);
        }
        if !r.delta_prime.positive_from() {
            b.exceptions.push(vec![n, 2]);
        }
        match &r.slope {
            None => b.equalities.push(vec![n, 3]),
            Some(c) => {
                if !c.positive_beyond() || c.value_at_point.is_negative() {
                    b.exceptions.push(vec![n, 3]);
                } else if c.value_at_point.is_zero() {
                    b.equalities.push(vec![n, 3]);
                }
                methods.push(c.method);
            }
        }
        methods.extend([r.delta.method, r.delta_prime.method]);
    }
    method_counts(&mut b, methods);
    Ok(b.finish(&[], &[vec![1, 3]]))
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

const WITNESS_SCAN_DEPTH: i64 = 256;

/// For prime `n + 1` with `2 <= n <= nmax`: `Delta_n'(0) < 0` and a witness
/// `x = 2^-j` in `(0, 1)` with `Delta_n(x) < 0`. Witness rows are
/// `["witness", n, x, Delta_n'(0)]`.
pub fn verify_prime_remark(cache: &PolyCache, nmax: usize) -> Result<VerificationReport> {
    at_least("nmax", nmax, 1)?;
    check_capacity(cache, nmax + 1)?;
    let mut b = Builder::new("prime-remark", format!("n+1 prime, 2<=n<={nmax}"), Kind::Certificate);
    let d1 = cache.delta(1)?.derivative().eval(&Rational::zero());
    b.witness(&["excluded", "1", "Delta_1'(0)", &d1.to_string()]);
    let ns: Vec<usize> = (2..=nmax).filter(|n| is_prime(n + 1)).collect();
    let results: Vec<(Rational, Option<Rational>)> = ns
        .par_iter()
        .map(|&n| -> Result<_> {
            let delta = cache.delta(n)?;
            let slope = delta.derivative().eval(&Rational::zero());
            let witness = (1..=WITNESS_SCAN_DEPTH)
                .map(|j| Rational::new(BigInt::one(), BigInt::one() << j as usize))
                .find(|x| delta.sign_at(x) < 0);
            Ok((slope, witness))
        })
        .collect::<Result<_>>()?;
    for (&n, (slope, witness)) in ns.iter().zip(results) {
        match witness {
            Some(x) if slope.is_negative() => b.witness(&["witness", &n.to_string(), &x.to_string(), &slope.to_string()]),
            _ => b.exceptions.push(vec![n as i64]),
        }
    }
    Ok(b.finish(&[], &[]))
}

/// `P_{a,b} > 0` on `(2, inf)` for `3 <= a + b <= nmax`, with `P_{a,b}(2) > 0`
/// required once `a + b > 4`. Equalities are pairs with `P_{a,b}(2) = 0`.
pub fn verify_main_theorem(cache: &PolyCache, nmax: usize) -> Result<VerificationReport> {
    at_least("nmax", nmax, 3)?;
    check_capacity(cache, nmax)?;
    let mut b = Builder::new("main", format!("1<=b<=a, 3<=a+b<={nmax}, x>=2"), Kind::Certificate);
    let two = int(2);
    let ps = pairs(3, nmax);
    let certs: Vec<TailCertificate> = ps
        .par_iter()
        .map(|&(a, bb)| tail_certificate(&cache.bo_poly(a, bb)?, &two))
        .collect::<Result<_>>()?;
    for (&(a, bb), c) in ps.iter().zip(&certs) {
        let t = vec![a as i64, bb as i64];
        let boundary_ok = if a + bb > 4 { c.value_at_point.is_positive() } else { !c.value_at_point.is_negative() };
        if !c.positive_beyond() || !boundary_ok {
            b.exceptions.push(t);
        } else if c.value_at_point.is_zero() {
            b.equalities.push(t);
        }
    }
    method_counts(&mut b, certs.iter().map(|c| c.method));
    Ok(b.finish(&[], &[vec![2, 1], vec![3, 1]]))
}

/// `P_{a+b-k}(2) > (1 + ln 2a) P_{b-k}(2)` for `1 <= k < b <= a <= amax`,
/// plus the boundary case `k = b`, which reads `P_a(2) > 1 + ln 2a`.
/// Instances are `[k, b, a]`.
pub fn verify_summand(cache: &PolyCache, amax: usize) -> Result<VerificationReport> {
    at_least("amax", amax, 1)?;
    check_capacity(cache, 2 * amax)?;
    let mut b = Builder::new("summand", format!("1<=k<=b<=a<={amax}, x=2"), Kind::Certificate);
    let two = int(2);
    let values: Vec<Rational> = (0..=2 * amax).map(|n| cache.eval(n, &two)).collect::<Result<_>>()?;
    let rows: Vec<Vec<Vec<i64>>> = (1..=amax)
        .into_par_iter()
        .map(|a| -> Result<Vec<Vec<i64>>> {
            let log = Enclosure::int(1).add(&Enclosure::int(2 * a as i64).ln(128), 128);
            let mut failures = Vec::new();
            for bb in 1..=a {
                for k in 1..=bb {
                    let lhs = &values[a + bb - k];
                    let factor = &values[bb - k];
                    let rhs = log.mul(&Enclosure::exact(factor.clone()), 128);
                    let holds = if lhs > rhs.hi() {
                        true
                    } else if lhs < rhs.lo() {
                        false
                    } else {
                        bounds::exceeds_scaled_one_plus_ln(lhs, factor, 2 * a as u64)?
                    };
                    if !holds {
                        failures.push(vec![k as i64, bb as i64, a as i64]);
                    }
                }
            }
            Ok(failures)
        })
        .collect::<Result<_>>()?;
    b.exceptions = rows.into_iter().flatten().collect();
    Ok(b.finish(&[], &[]))
}

/// `x P_n(x) - P_{n+1}(x) > 0` on `(2, inf)` for `2 <= n <= nmax` and on
/// `(3, inf)` for `n = 1`. Equalities are `n` whose polynomial vanishes at
/// the left endpoint: `n = 1` at 3, and `n = 2, 3` at 2, where the value is
/// `P_n(2) P_1(2) - P_{n+1}(2)`.
pub fn verify_prop7_derivative_chain(cache: &PolyCache, nmax: usize) -> Result<VerificationReport> {
    at_least("nmax", nmax, 1)?;
    check_capacity(cache, nmax + 1)?;
    let mut b = Builder::new("prop7", format!("1<=n<={nmax}; x>3 for n=1, x>2 otherwise"), Kind::Certificate);
    let certs: Vec<(TailCertificate, Rational)> = (1..=nmax)
        .into_par_iter()
        .map(|n| -> Result<_> {
            let r = cache.shifted_ratio_poly(n)?;
            let point = int(if n == 1 { 3 } else { 2 });
            Ok((tail_certificate(&r, &point)?, r.eval(&int(3))))
        })
        .collect::<Result<_>>()?;
    for (i, (c, at3)) in certs.iter().enumerate() {
        let n = i as i64 + 1;
        let ok = c.positive_beyond() && (n == 1 || at3.is_positive());
        if !ok {
            b.exceptions.push(vec![n]);
        } else if c.value_at_point.is_zero() {
            b.equalities.push(vec![n]);
        }
    }
    method_counts(&mut b, certs.iter().map(|(c, _)| c.method));
    let expected_eq: Vec<Vec<i64>> = [1, 2, 3].iter().filter(|&&n| n <= nmax as i64).map(|&n| vec![n]).collect();
    Ok(b.finish(&[], &expected_eq))
}

/// Sizes for the analytic sweeps in [`verify_bounds`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundsSizes {
    /// Sandwich bounds for `2 <= m <= mmax`.
    pub mmax: usize,
    /// Growth inequality for `2 <= a <= amax`.
    pub amax: usize,
    /// `P_n(2)` against `(13/4)(1 + ln 2n)` for `5 <= n <= nmax`.
    pub nmax: usize,
}

impl Default for BoundsSizes {
    fn default() -> Self {
        BoundsSizes { mmax: 1000, amax: 1000, nmax: 86 }
    }
}

/// Three reports: the sandwich on `p(m)`, the growth threshold at 34, and the
/// closing inequality at `x = 2`.
pub fn verify_bounds(cache: &PolyCache, sizes: BoundsSizes) -> Result<Vec<VerificationReport>> {
    at_least("mmax", sizes.mmax, 2)?;
    at_least("amax", sizes.amax, 2)?;
    at_least("nmax", sizes.nmax, 5)?;
    check_capacity(cache, sizes.nmax)?;
    Ok(vec![bo2_sandwich_report(sizes.mmax)?, wachstum_report(sizes.amax)?, eq_n1_report(cache, sizes.nmax)?])
}

fn bo2_sandwich_report(mmax: usize) -> Result<VerificationReport> {
    let mut b = Builder::new("bo2-sandwich", format!("2<=m<={mmax}"), Kind::Certificate);
    let p = partition_numbers(mmax);
    let holds: Vec<bool> = (2..=mmax)
        .into_par_iter()
        .map(|m| bounds::bo2_sandwich_holds(m as u64, &p[m]))
        .collect::<Result<_>>()?;
    b.exceptions = (2..=mmax).zip(holds).filter(|(_, h)| !h).map(|(m, _)| vec![m as i64]).collect();
    Ok(b.finish(&[], &[]))
}

const WACHSTUM_THRESHOLD: i64 = 34;

fn wachstum_report(amax: usize) -> Result<VerificationReport> {
    let mut b = Builder::new("wachstum-threshold", format!("2<=a<={amax}, threshold {WACHSTUM_THRESHOLD}"), Kind::Catalog);
    let holds: Vec<bool> =
        (2..=amax).into_par_iter().map(|a| bounds::wachstum_holds(a as u64)).collect::<Result<_>>()?;
    b.exceptions = (2..=amax).zip(holds).filter(|(_, h)| !h).map(|(a, _)| vec![a as i64]).collect();
    let expected: Vec<Vec<i64>> = (2..WACHSTUM_THRESHOLD.min(amax as i64 + 1)).map(|a| vec![a]).collect();
    Ok(b.finish(&expected, &[]))
}

fn eq_n1_report(cache: &PolyCache, nmax: usize) -> Result<VerificationReport> {
    let mut b = Builder::new("eq-n1", format!("5<=n<={nmax}, x=2"), Kind::Certificate);
    for n in 1..5 {
        b.witness(&["below-range", &n.to_string(), &bounds::eq_n1_holds(cache, n)?.to_string()]);
    }
    let holds: Vec<bool> = (5..=nmax).into_par_iter().map(|n| bounds::eq_n1_holds(cache, n)).collect::<Result<_>>()?;
    b.exceptions = (5..=nmax).zip(holds).filter(|(_, h)| !h).map(|(n, _)| vec![n as i64]).collect();
    Ok(b.finish(&[], &[]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cache() -> PolyCache {
        PolyCache::build(60)
    }

    fn v(rows: &[&[i64]]) -> Vec<Vec<i64>> {
        rows.iter().map(|r| r.to_vec()).collect()
    }

    #[test]
    fn bo_classical_small() {
        let r = verify_bo_classical(&cache(), 20).unwrap();
        assert_eq!(r.status, Status::Verified, "{:?}", r.witnesses);
        assert_eq!(r.equalities, v(&[&[4, 3], &[6, 2], &[7, 2]]));
        assert!(r.exceptions.contains(&vec![19, 1]));
        assert!(!r.exceptions.contains(&vec![4, 4]));
        assert!(verify_bo_classical(&cache(), 9).is_err());
        assert!(verify_bo_classical(&cache(), 61).is_err());
    }

    #[test]
    fn cft_small() {
        let r = verify_cft(&cache(), 4, 12).unwrap();
        assert_eq!(r.status, Status::Verified, "{:?}", r.witnesses);
        assert_eq!(r.exceptions, v(&[&[1, 1, 2]]));
    }

    #[test]
    fn monotone_small() {
        let r = verify_monotonicity(&cache(), 20).unwrap();
        assert_eq!(r.status, Status::Verified, "{:?}", r.witnesses);
        assert_eq!(r.equalities, v(&[&[1, 3]]));
    }

    #[test]
    fn prime_remark_small() {
        let r = verify_prime_remark(&cache(), 12).unwrap();
        assert_eq!(r.status, Status::Verified);
        let ns: Vec<&str> = r.witnesses.iter().filter(|w| w[0] == "witness").map(|w| w[1].as_str()).collect();
        assert_eq!(ns, ["2", "4", "6", "10", "12"]);
        assert_eq!(r.witnesses[0], ["excluded", "1", "Delta_1'(0)", "1/2"]);
    }

    #[test]
    fn main_small() {
        let r = verify_main_theorem(&cache(), 16).unwrap();
        assert_eq!(r.status, Status::Verified, "{:?}", r.witnesses);
        assert_eq!(r.equalities, v(&[&[2, 1], &[3, 1]]));
    }

    #[test]
    fn summand_small() {
        let r = verify_summand(&cache(), 10).unwrap();
        assert_eq!(r.status, Status::Verified, "{:?}", r.exceptions);
        assert!(verify_summand(&cache(), 31).is_err());
    }

    #[test]
    fn prop7_small() {
        let r = verify_prop7_derivative_chain(&cache(), 20).unwrap();
        assert_eq!(r.status, Status::Verified, "{:?}", r.witnesses);
        assert_eq!(r.equalities, v(&[&[1], &[2], &[3]]));
    }

    #[test]
    fn bounds_small() {
        let reports = verify_bounds(&cache(), BoundsSizes { mmax: 40, amax: 60, nmax: 20 }).unwrap();
        for r in &reports {
            assert_eq!(r.status, Status::Verified, "{}: {:?}", r.claim, r.witnesses);
        }
        assert_eq!(reports[1].exceptions.len(), 32);
        assert_eq!(reports[2].witnesses[0], ["below-range", "1", "false"]);
    }

    #[test]
    fn mismatch_is_reported() {
        let mut b = Builder::new("t", "d".into(), Kind::Catalog);
        b.exceptions.push(vec![1, 1]);
        let r = b.finish(&[vec![2, 1]], &[]);
        assert_eq!(r.status, Status::Mismatch);
        assert_eq!(r.witnesses, vec![vec!["unexpected", "exception", "1", "1"], vec!["missing", "exception", "2", "1"]]);
        let mut b = Builder::new("t", "d".into(), Kind::Certificate);
        b.exceptions.push(vec![3]);
        assert_eq!(b.finish(&[], &[]).status, Status::Failed);
    }

    #[test]
    fn report_json_shape() {
        let r = verify_prime_remark(&cache(), 4).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        let keys: Vec<&str> = json.as_object().unwrap().keys().map(|k| k.as_str()).collect();
        assert_eq!(keys.len(), 7);
        for k in ["claim", "domain", "status", "exceptions", "equalities", "witnesses", "elapsed_ms"] {
            assert!(keys.contains(&k));
        }
        assert_eq!(json["status"], "verified");
    }
}
