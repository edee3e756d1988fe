//! Exact isolation and refinement of real roots, root-free tail
//! certificates, and a floating-point all-roots sweep.

mod aberth;
mod descartes;
mod sturm;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

pub use aberth::{all_roots_float, FloatRoot, FloatRootOptions};
use sturm::SturmChain;

use crate::error::{Error, Result};
use crate::exactnum::{shift_integer, sign, Poly, Rational};

/// Integers in `[-SMALL_ROOT_RANGE, SMALL_ROOT_RANGE]` are tested as exact
/// roots and divided out before Sturm isolation.
const SMALL_ROOT_RANGE: i64 = 16;

/// Rational interval `(lo, hi)` containing exactly one root of the squarefree
/// part of the query polynomial; the signs are taken on that squarefree part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
    pub sign_lo: i8,
    pub sign_hi: i8,
}

impl RootInterval {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo < x && x < &self.hi
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootReport {
    /// Roots found exactly, ascending.
    pub exact_rational_roots: Vec<Rational>,
    /// Isolating intervals of the remaining roots, ascending and disjoint.
    pub intervals: Vec<RootInterval>,
    /// Largest interval width in the report.
    pub precision: Rational,
}

impl RootReport {
    pub fn root_count(&self) -> usize {
        self.exact_rational_roots.len() + self.intervals.len()
    }
}

/// `p / gcd(p, p')`, scaled so the leading coefficient keeps the sign of `p`.
pub fn squarefree_part(p: &Poly) -> Poly {
    let ints = p.primitive_integer_coeffs();
    if descartes::certify_squarefree_modular(&ints) {
        return p.clone();
    }
    let g = sturm::integer_gcd(&ints, &p.derivative().primitive_integer_coeffs());
    if g.len() <= 1 {
        return p.clone();
    }
    let (quot, _) = p.div_rem(&Poly::from_bigints(&g));
    orient_like(&quot, p)
}

fn orient_like(p: &Poly, reference: &Poly) -> Poly {
    match (p.leading(), reference.leading()) {
        (Some(a), Some(b)) if a.is_negative() != b.is_negative() => -p,
        _ => p.clone(),
    }
}

fn linear(root: &Rational) -> Poly {
    Poly::from_coeffs(vec![-root.clone(), Rational::one()])
}

/// The squarefree polynomial whose roots are being isolated, together with
/// the exact roots already divided out of it.
struct Peeled {
    exact: Vec<Rational>,
    core: Poly,
    core_ints: Vec<BigInt>,
}

impl Peeled {
    fn new(p: &Poly) -> Self {
        let mut exact = Vec::new();
        let (k, mut core) = p.split_x_power();
        if k > 0 {
            exact.push(Rational::zero());
        }
        for r in (-SMALL_ROOT_RANGE..=SMALL_ROOT_RANGE).filter(|&r| r != 0) {
            let r = Rational::from_integer(r.into());
            let mut found = false;
            while core.degree().unwrap_or(0) > 0 && core.eval(&r).is_zero() {
                core = core.div_rem(&linear(&r)).0;
                found = true;
            }
            if found {
                exact.push(r);
            }
        }
        if core.degree().unwrap_or(0) > 0 {
            core = squarefree_part(&core);
        }
        let core_ints = core.primitive_integer_coeffs();
        Peeled { exact, core, core_ints }
    }

    fn remove_root(&mut self, r: Rational) {
        self.core = self.core.div_rem(&linear(&r)).0;
        self.core_ints = self.core.primitive_integer_coeffs();
        self.exact.push(r);
    }

    fn core_sign(&self, x: &Rational) -> i8 {
        sturm::sign_at(&self.core_ints, x)
    }

    /// Sign at `x` of `core * prod (x - r)`, a positive multiple of the
    /// squarefree part of the input.
    fn full_sign(&self, x: &Rational) -> i8 {
        self.exact
            .iter()
            .fold(self.core_sign(x), |s, r| s * sign(&(x - r)))
    }
}

/// Power of two strictly above every root modulus, from the Fujiwara bound
/// `|z| <= 2 max |a_i / a_n|^(1/(n-i))` evaluated on bit lengths.
fn root_bound_power_of_two(ints: &[BigInt]) -> BigInt {
    let n = ints.len() - 1;
    let lead_bits = ints[n].bits() as i64;
    let mut half_exp = 0i64;
    for (i, c) in ints[..n].iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        // |a_i / a_n| < 2^(bits(a_i) - bits(a_n) + 1)
        let excess = c.bits() as i64 - lead_bits + 1;
        let k = (n - i) as i64;
        half_exp = half_exp.max((excess + k - 1).div_euclid(k));
    }
    // roots satisfy |z| <= 2^(half_exp + 1); one more doubling makes it strict
    BigInt::one() << (half_exp + 2) as u64
}

/// Isolating intervals in `(-B, 0)` and `(0, B)` of a squarefree core with
/// nonzero constant term, plus the roots that landed on bisection points.
fn isolate_core(core: &Poly) -> (Vec<(Rational, Rational)>, Vec<Rational>) {
    let mut intervals = Vec::new();
    let mut exact = Vec::new();
    if core.degree().unwrap_or(0) == 0 {
        return (intervals, exact);
    }
    let ints = core.primitive_integer_coeffs();
    let bound_int = root_bound_power_of_two(&ints);
    for negative in [false, true] {
        // a(x) = core(+-B x) has its roots of interest in (0, 1)
        let mut scale = BigInt::one();
        let scaled: Vec<BigInt> = ints
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let v = c * &scale;
                scale *= &bound_int;
                if negative && i % 2 == 1 {
                    -v
                } else {
                    v
                }
            })
            .collect();
        let iso = descartes::isolate_unit(&scaled);
        let to_rational = |num: &BigInt, depth: u32| {
            let v = Rational::new(num * &bound_int, BigInt::one() << depth);
            if negative {
                -v
            } else {
                v
            }
        };
        for cell in iso.cells {
            let a = to_rational(&cell.num, cell.depth);
            let b = to_rational(&(&cell.num + 1u32), cell.depth);
            intervals.push(if negative { (b, a) } else { (a, b) });
        }
        exact.extend(iso.exact.iter().map(|c| to_rational(&c.num, c.depth)));
    }
    intervals.sort_by(|a, b| a.0.cmp(&b.0));
    (intervals, exact)
}

/// Shrinks a core-isolating interval until neither endpoint nor interior
/// meets an already known exact root. Returns the core root itself if a
/// bisection point lands on it.
fn separate_from_exact(
    peeled: &Peeled,
    mut lo: Rational,
    mut hi: Rational,
) -> std::result::Result<RootInterval, Rational> {
    let clashes = |lo: &Rational, hi: &Rational| peeled.exact.iter().any(|r| lo <= r && r <= hi);
    let two = Rational::from_integer(2.into());
    let core_lo = peeled.core_sign(&lo);
    while clashes(&lo, &hi) {
        let mid = (&lo + &hi) / &two;
        match peeled.core_sign(&mid) {
            0 => return Err(mid),
            s if s == core_lo => lo = mid,
            _ => hi = mid,
        }
    }
    let sign_lo = peeled.full_sign(&lo);
    let sign_hi = peeled.full_sign(&hi);
    Ok(RootInterval { lo, hi, sign_lo, sign_hi })
}

/// Complete, disjoint isolation of the real roots of `p`.
pub fn isolate_real_roots(p: &Poly) -> Result<RootReport> {
    if p.is_zero() {
        return Err(Error::InvalidArgument("cannot isolate roots of the zero polynomial".into()));
    }
    let mut peeled = Peeled::new(p);
    let (raw, hits) = isolate_core(&peeled.core);
    for r in hits {
        peeled.remove_root(r);
    }
    let mut intervals = Vec::with_capacity(raw.len());
    let mut found = Vec::new();
    for (lo, hi) in raw {
        match separate_from_exact(&peeled, lo, hi) {
            Ok(iv) => intervals.push(iv),
            Err(r) => found.push(r),
        }
    }
    for r in found {
        peeled.exact.push(r);
    }
    let precision = intervals.iter().map(RootInterval::width).max().unwrap_or_else(Rational::zero);
    let mut exact = peeled.exact;
    exact.sort();
    Ok(RootReport { exact_rational_roots: exact, intervals, precision })
}

/// Isolation with every interval refined to width at most `eps`.
pub fn isolate_real_roots_refined(p: &Poly, eps: &Rational) -> Result<RootReport> {
    let report = isolate_real_roots(p)?;
    let sf = squarefree_part(p).primitive_integer_coeffs();
    let intervals = report
        .intervals
        .iter()
        .map(|iv| refine_squarefree(&sf, iv, eps))
        .collect::<Result<Vec<_>>>()?;
    let precision = intervals.iter().map(RootInterval::width).max().unwrap_or_else(Rational::zero);
    Ok(RootReport { exact_rational_roots: report.exact_rational_roots, intervals, precision })
}

/// Bisects `iv` until its width is at most `eps`.
pub fn refine(p: &Poly, iv: &RootInterval, eps: &Rational) -> Result<RootInterval> {
    refine_squarefree(&squarefree_part(p).primitive_integer_coeffs(), iv, eps)
}

fn refine_squarefree(sf: &[BigInt], iv: &RootInterval, eps: &Rational) -> Result<RootInterval> {
    let sign_at = |x: &Rational| sturm::sign_at(sf, x);
    if !eps.is_positive() {
        return Err(Error::InvalidArgument("refinement width must be positive".into()));
    }
    if iv.sign_lo == iv.sign_hi || iv.sign_lo == 0 {
        return Err(Error::InvalidArgument("interval does not bracket a sign change".into()));
    }
    let two = Rational::from_integer(2.into());
    let mut cur = iv.clone();
    while &cur.width() > eps {
        let mid = cur.midpoint();
        match sign_at(&mid) {
            0 => {
                // the interval isolates a single root, so nothing else vanishes nearby
                let half = eps / &two;
                let quarter = &half / &two;
                let lo = (&mid - &quarter).max(cur.lo.clone());
                let hi = (&mid + &quarter).min(cur.hi.clone());
                let sign_lo = if lo == cur.lo { cur.sign_lo } else { sign_at(&lo) };
                let sign_hi = if hi == cur.hi { cur.sign_hi } else { sign_at(&hi) };
                return Ok(RootInterval { lo, hi, sign_lo, sign_hi });
            }
            s if s == cur.sign_lo => {
                cur.lo = mid;
            }
            _ => {
                cur.hi = mid;
            }
        }
    }
    Ok(cur)
}

/// A real root given either exactly or as the midpoint of a narrow
/// isolating interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootEstimate {
    pub value: Rational,
    pub lo: Rational,
    pub hi: Rational,
    pub exact: bool,
}

pub const DEFAULT_ROOT_WIDTH: (i64, i64) = (1, 1_000_000_000_000);

/// Largest root in `(0, inf)`, refined to width at most `1e-12`, or `None`.
pub fn largest_positive_real_root(p: &Poly) -> Result<Option<RootEstimate>> {
    let eps = Rational::new(DEFAULT_ROOT_WIDTH.0.into(), DEFAULT_ROOT_WIDTH.1.into());
    largest_positive_real_root_within(p, &eps)
}

pub fn largest_positive_real_root_within(p: &Poly, eps: &Rational) -> Result<Option<RootEstimate>> {
    if p.degree() == Some(0) {
        return Ok(None);
    }
    let report = isolate_real_roots(p)?;
    let exact = report.exact_rational_roots.iter().filter(|r| r.is_positive()).max().cloned();
    // intervals never straddle zero
    let iv = report.intervals.iter().filter(|iv| !iv.lo.is_negative()).max_by(|a, b| a.lo.cmp(&b.lo));
    let pick_exact = match (&exact, iv) {
        (None, None) => return Ok(None),
        (Some(_), None) => true,
        (None, Some(_)) => false,
        (Some(r), Some(iv)) => r > &iv.lo,
    };
    if pick_exact {
        let r = exact.expect("checked");
        return Ok(Some(RootEstimate { value: r.clone(), lo: r.clone(), hi: r, exact: true }));
    }
    let r = refine(p, iv.expect("checked"), eps)?;
    Ok(Some(RootEstimate { value: r.midpoint(), lo: r.lo, hi: r.hi, exact: false }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CertMethod {
    Descartes,
    Sturm,
}

/// Exact description of `p` on `[point, inf)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailCertificate {
    pub point: Rational,
    pub value_at_point: Rational,
    /// Multiplicity of `point` as a root of `p`.
    pub zero_order: usize,
    /// Distinct real roots in `(point, inf)`.
    pub roots_beyond: usize,
    pub leading_positive: bool,
    pub method: CertMethod,
}

impl TailCertificate {
    /// `p(x) > 0` for every `x > point`.
    pub fn positive_beyond(&self) -> bool {
        self.roots_beyond == 0 && self.leading_positive
    }

    /// `p(x) > 0` for every `x >= point`.
    pub fn positive_from(&self) -> bool {
        self.positive_beyond() && self.value_at_point.is_positive()
    }
}

/// Counts the real roots of `p` beyond `point`: Descartes' rule on the
/// shifted polynomial when it is decisive (0 or 1 sign variations), a Sturm
/// count otherwise.
pub fn tail_certificate(p: &Poly, point: &Rational) -> Result<TailCertificate> {
    if p.is_zero() {
        return Err(Error::InvalidArgument("tail certificate of the zero polynomial".into()));
    }
    let shifted = shift_integer(&p.primitive_integer_coeffs(), point);
    let zero_order = shifted.iter().position(|c| !c.is_zero()).expect("nonzero polynomial");
    let rest = shifted[zero_order..].to_vec();
    let variations = descartes::variations(&rest);
    let (roots_beyond, method) = if variations <= 1 {
        (variations, CertMethod::Descartes)
    } else {
        (SturmChain::from_ints(rest).count_above(&Rational::zero()), CertMethod::Sturm)
    };
    Ok(TailCertificate {
        point: point.clone(),
        value_at_point: p.eval(point),
        zero_order,
        roots_beyond,
        leading_positive: p.leading().is_some_and(|l| l.is_positive()),
        method,
    })
}

/// Number of distinct real roots of a nonzero `p`, counted with a Sturm
/// chain independently of the Descartes-based isolation.
pub fn sturm_root_count(p: &Poly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::InvalidArgument("root count of the zero polynomial".into()));
    }
    Ok(SturmChain::new(p).count_all())
}

/// Number of distinct real roots of `p` in `(lo, hi]`, by a Sturm chain.
pub fn sturm_root_count_between(p: &Poly, lo: &Rational, hi: &Rational) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::InvalidArgument("root count of the zero polynomial".into()));
    }
    if lo >= hi {
        return Err(Error::InvalidArgument(format!("empty interval ({lo}, {hi}]")));
    }
    if p.sign_at(lo) == 0 {
        return Err(Error::InvalidArgument(format!("left endpoint {lo} is a root")));
    }
    Ok(SturmChain::new(p).count_between(lo, hi))
}

/// Orders an exact rational against a root interval: `Less` if `x` is below
/// the interval, `Greater` if above, `Equal` if inside.
pub fn compare_to_interval(x: &Rational, iv: &RootInterval) -> Ordering {
    if x <= &iv.lo {
        Ordering::Less
    } else if x >= &iv.hi {
        Ordering::Greater
    } else {
        Ordering::Equal
    }
}

/// Rational `numer / 10^digits` helper for tolerances such as `1e-12`.
pub fn decimal_epsilon(digits: u32) -> Rational {
    Rational::new(BigInt::one(), num_traits::pow(BigInt::from(10u32), digits as usize))
}
