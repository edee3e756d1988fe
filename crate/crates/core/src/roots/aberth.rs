//! Aberth-Ehrlich simultaneous iteration in double precision.

use num_complex::Complex64;
use serde::Serialize;

use super::squarefree_part;
use crate::error::{Error, Result};
use crate::exactnum::Poly;

#[derive(Debug, Clone, Copy)]
pub struct FloatRootOptions {
    pub max_iterations: usize,
    /// Bound on the relative backward error `|p(z)| / sum |a_i| |z|^i`.
    pub residual_tolerance: f64,
}

impl Default for FloatRootOptions {
    fn default() -> Self {
        Self { max_iterations: 500, residual_tolerance: 1e-10 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FloatRoot {
    pub re: f64,
    pub im: f64,
    pub residual: f64,
    pub converged: bool,
}

impl FloatRoot {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    /// Treats the root as real when the imaginary part is negligible.
    pub fn is_real(&self, tol: f64) -> bool {
        self.im.abs() <= tol * self.re.abs().max(1.0)
    }
}

fn horner(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64, f64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    let mut scale = 0.0;
    let r = z.norm();
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
        scale = scale * r + c.abs();
    }
    (p, dp, scale)
}

/// Approximates every root of the squarefree part of `p`.
///
/// Non-convergence is reported per root through `converged`.
pub fn all_roots_float(p: &Poly, options: FloatRootOptions) -> Result<Vec<FloatRoot>> {
    if p.degree().unwrap_or(0) == 0 {
        return Err(Error::InvalidArgument("float root sweep needs degree >= 1".into()));
    }
    let sf = squarefree_part(p).monic();
    let coeffs = sf.to_f64_coeffs()?;
    let d = coeffs.len() - 1;

    // Fujiwara-type radius: 2 max |a_i|^(1/(d-i))
    let radius = coeffs[..d]
        .iter()
        .enumerate()
        .map(|(i, c)| c.abs().powf(1.0 / (d - i) as f64))
        .fold(0.0_f64, f64::max)
        .max(1e-3)
        * 2.0;
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| {
            let theta = std::f64::consts::TAU * k as f64 / d as f64 + 0.4;
            Complex64::from_polar(radius * 0.5, theta)
        })
        .collect();

    for _ in 0..options.max_iterations {
        let mut max_step = 0.0_f64;
        for k in 0..d {
            let (pv, dpv, _) = horner(&coeffs, z[k]);
            if pv.norm() == 0.0 {
                continue;
            }
            let ratio = pv / dpv;
            let repulsion: Complex64 = (0..d).filter(|&j| j != k).map(|j| (z[k] - z[j]).inv()).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[k] -= step;
                max_step = max_step.max(step.norm() / z[k].norm().max(1.0));
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }

    let mut roots: Vec<FloatRoot> = z
        .into_iter()
        .map(|zk| {
            let (pv, _, scale) = horner(&coeffs, zk);
            let residual = if scale > 0.0 { pv.norm() / scale } else { 0.0 };
            FloatRoot { re: zk.re, im: zk.im, residual, converged: residual <= options.residual_tolerance }
        })
        .collect();
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partpoly::PolyCache;

    #[test]
    fn unit_imaginary_pair() {
        let roots = all_roots_float(&Poly::from_ints(&[1, 0, 1]), FloatRootOptions::default()).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots.iter().all(|r| r.converged));
        assert!(roots.iter().any(|r| (r.value() - Complex64::new(0.0, 1.0)).norm() < 1e-12));
        assert!(roots.iter().any(|r| (r.value() - Complex64::new(0.0, -1.0)).norm() < 1e-12));
    }

    #[test]
    fn delta_two_is_totally_real() {
        let cache = PolyCache::build(3);
        let roots = all_roots_float(&cache.delta(2).unwrap(), FloatRootOptions::default()).unwrap();
        let expected = [-3.0 - 10f64.sqrt(), 0.0, 10f64.sqrt() - 3.0];
        assert_eq!(roots.len(), 3);
        for (r, e) in roots.iter().zip(expected) {
            assert!(r.is_real(1e-9));
            assert!((r.re - e).abs() < 1e-10, "{r:?} vs {e}");
        }
    }

    #[test]
    fn repeated_roots_collapse() {
        let lin = Poly::from_ints(&[-2, 1]);
        let roots = all_roots_float(&(&lin * &lin), FloatRootOptions::default()).unwrap();
        assert_eq!(roots.len(), 1);
        assert!((roots[0].re - 2.0).abs() < 1e-12);
    }

    #[test]
    fn constant_is_rejected() {
        assert!(all_roots_float(&Poly::one(), FloatRootOptions::default()).is_err());
    }
}
