//! Complex polynomial root finding by Durand–Kerner simultaneous iteration.

use super::{AlgebraError, ComplexNum};

#[derive(Clone, Copy, Debug)]
pub struct RootConfig {
    pub max_iterations: usize,
    /// Stop when the largest per-root step falls below this.
    pub step_tolerance: f64,
    /// Accepted normalized residual |p(root)| / (1 + Σ|c_i|).
    pub residual_tolerance: f64,
}

impl Default for RootConfig {
    fn default() -> Self {
        RootConfig {
            max_iterations: 1000,
            step_tolerance: 1e-12,
            residual_tolerance: 1e-10,
        }
    }
}

fn eval(coeffs: &[ComplexNum], z: ComplexNum) -> ComplexNum {
    let mut acc = ComplexNum::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

/// All complex roots of `c_0 + c_1 x + … + c_d x^d` (coefficients in
/// ascending order), deterministically seeded with powers of 0.4 + 0.9i.
pub fn find_roots(coeffs: &[ComplexNum]) -> Result<Vec<ComplexNum>, AlgebraError> {
    find_roots_with(coeffs, RootConfig::default())
}

pub fn find_roots_with(
    coeffs: &[ComplexNum],
    cfg: RootConfig,
) -> Result<Vec<ComplexNum>, AlgebraError> {
    if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
        return Err(AlgebraError::NonFinite);
    }
    let degree = coeffs.len().saturating_sub(1);
    if degree < 1 {
        return Err(AlgebraError::BadPolynomial("degree must be >= 1".into()));
    }
    let lead = coeffs[degree];
    if lead.norm() <= 1e-12 {
        return Err(AlgebraError::BadPolynomial(
            "leading coefficient magnitude <= 1e-12".into(),
        ));
    }
    let monic: Vec<ComplexNum> = coeffs.iter().map(|&c| c / lead).collect();

    let seed = ComplexNum::new(0.4, 0.9);
    let mut roots: Vec<ComplexNum> = (0..degree).map(|k| seed.powu(k as u32)).collect();

    let mut converged = false;
    for _ in 0..cfg.max_iterations {
        let mut max_step = 0.0f64;
        for k in 0..degree {
            let zk = roots[k];
            let mut denom = ComplexNum::new(1.0, 0.0);
            for (j, &zj) in roots.iter().enumerate() {
                if j != k {
                    denom *= zk - zj;
                }
            }
            if denom.norm() < 1e-300 {
                // Coincident iterates; nudge apart deterministically.
                roots[k] += ComplexNum::new(1e-6, 1e-6) * (k as f64 + 1.0);
                max_step = f64::MAX;
                continue;
            }
            let step = eval(&monic, zk) / denom;
            roots[k] = zk - step;
            max_step = max_step.max(step.norm());
        }
        if max_step < cfg.step_tolerance {
            converged = true;
            break;
        }
    }

    let scale = 1.0 + coeffs.iter().map(|c| c.norm()).sum::<f64>();
    let worst = roots
        .iter()
        .map(|&r| eval(coeffs, r).norm() / scale)
        .fold(0.0f64, f64::max);
    if !converged || worst > cfg.residual_tolerance {
        return Err(AlgebraError::NoConvergence {
            iterations: cfg.max_iterations,
            residual: worst,
        });
    }
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> ComplexNum {
        ComplexNum::new(re, im)
    }

    fn sort_roots(mut v: Vec<ComplexNum>) -> Vec<ComplexNum> {
        v.sort_by(|a, b| {
            a.re.partial_cmp(&b.re)
                .unwrap()
                .then(a.im.partial_cmp(&b.im).unwrap())
        });
        v
    }

    #[test]
    fn quadratic_real_roots() {
        // x^2 - 1
        let roots = sort_roots(find_roots(&[c(-1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]).unwrap());
        assert!((roots[0] - c(-1.0, 0.0)).norm() < 1e-10);
        assert!((roots[1] - c(1.0, 0.0)).norm() < 1e-10);
    }

    #[test]
    fn quadratic_imaginary_roots() {
        // x^2 + 1
        let roots = sort_roots(find_roots(&[c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]).unwrap());
        assert!((roots[0] - c(0.0, -1.0)).norm() < 1e-10);
        assert!((roots[1] - c(0.0, 1.0)).norm() < 1e-10);
    }

    #[test]
    fn degree_six_residual_and_reconstruction() {
        // Fixed "random" degree-6 polynomial; oracle: re-evaluation residual
        // and reconstruction of the coefficients from the roots.
        let coeffs = vec![
            c(0.7, -0.3),
            c(-1.2, 0.4),
            c(0.5, 0.9),
            c(2.0, -1.1),
            c(-0.8, 0.2),
            c(0.3, 0.6),
            c(1.5, -0.5),
        ];
        let roots = find_roots(&coeffs).unwrap();
        assert_eq!(roots.len(), 6);
        let scale = 1.0 + coeffs.iter().map(|x| x.norm()).sum::<f64>();
        for &r in &roots {
            assert!(eval(&coeffs, r).norm() / scale <= 1e-10);
        }
        // lead * ∏ (x - r_i) reproduces the coefficients.
        let mut recon = vec![c(1.0, 0.0)];
        for &r in &roots {
            let mut next = vec![c(0.0, 0.0); recon.len() + 1];
            for (i, &a) in recon.iter().enumerate() {
                next[i + 1] += a;
                next[i] -= a * r;
            }
            recon = next;
        }
        let lead = coeffs[6];
        for (i, &a) in recon.iter().enumerate() {
            let got = a * lead;
            assert!(
                (got - coeffs[i]).norm() <= 1e-8 * (1.0 + coeffs[i].norm()),
                "coefficient {i} mismatch: {got} vs {}",
                coeffs[i]
            );
        }
    }

    #[test]
    fn rejects_tiny_leading_coefficient() {
        let err = find_roots(&[c(1.0, 0.0), c(1e-13, 0.0)]).unwrap_err();
        assert!(matches!(err, AlgebraError::BadPolynomial(_)));
    }
}
