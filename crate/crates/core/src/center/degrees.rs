//! Irreducible character degrees from the class algebra.
//!
//! For an irreducible character `χ`, the central character
//! `ω(j) = |C_j| χ(g_j) / χ(1)` is a simultaneous eigenvector of all class
//! matrices `(M_j)_{l,k} = a_{jlk}` (with `ω(identity class) = 1`), and
//! `Σ_j |ω(j)|² / |C_j| = |H| / χ(1)²`. A generic combination of the class
//! matrices has simple spectrum, so its eigenvectors are exactly these `ω`.

use nalgebra::{Complex, DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use std::sync::Arc;

use super::CenterError;
use crate::class_fusion::build_ring;
use crate::group::FiniteGroup;

pub const DEFAULT_SEED: u64 = 0x5eed;
pub const DEGREE_TOLERANCE: f64 = 1e-6;
pub const MAX_ATTEMPTS: usize = 5;
const INVERSE_ITERATION_STEPS: usize = 4;

/// Degrees of the irreducible complex characters of `h`, ascending.
pub fn irrep_degrees(h: &Arc<FiniteGroup>, seed: u64) -> Result<Vec<u64>, CenterError> {
    let ring = build_ring(h);
    let k = ring.num_classes();
    let order = h.order() as u64;
    let sizes: Vec<f64> = ring.classes().iter().map(|c| c.size() as f64).collect();
    let matrices: Vec<DMatrix<f64>> = (0..k)
        .map(|j| DMatrix::from_fn(k, k, |l, m| ring.coefficient(j, l, m) as f64))
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last_failure = String::new();
    for _ in 0..MAX_ATTEMPTS {
        let weights: Vec<f64> = (0..k).map(|_| rng.random_range(-1.0..1.0)).collect();
        let combined = matrices
            .iter()
            .zip(&weights)
            .fold(DMatrix::<f64>::zeros(k, k), |acc, (m, &w)| acc + m * w);
        match attempt(&combined, &matrices, &sizes, order) {
            Ok(mut degrees) => {
                degrees.sort_unstable();
                check_postconditions(h, &degrees, k)?;
                return Ok(degrees);
            }
            Err(reason) => last_failure = reason,
        }
    }
    Err(CenterError::DegreeRecoveryFailed(format!(
        "no usable combination after {MAX_ATTEMPTS} attempts: {last_failure}"
    )))
}

fn attempt(
    combined: &DMatrix<f64>,
    matrices: &[DMatrix<f64>],
    sizes: &[f64],
    order: u64,
) -> Result<Vec<u64>, String> {
    let k = combined.nrows();
    let eigenvalues: Vec<Complex<f64>> = combined.complex_eigenvalues().iter().copied().collect();
    let scale = 1.0 + eigenvalues.iter().map(|z| z.norm()).fold(0.0, f64::max);
    for i in 0..k {
        for j in i + 1..k {
            if (eigenvalues[i] - eigenvalues[j]).norm() < DEGREE_TOLERANCE * scale {
                return Err("eigenvalues cluster".into());
            }
        }
    }

    let complex = combined.map(|x| Complex::new(x, 0.0));
    let mut degrees = Vec::with_capacity(k);
    for &lambda in &eigenvalues {
        let omega = eigenvector(&complex, lambda, scale)?;
        let residual = matrices
            .iter()
            .enumerate()
            .map(|(j, m)| {
                let mv = m.map(|x| Complex::new(x, 0.0)) * &omega;
                (mv - &omega * omega[j]).norm()
            })
            .fold(0.0, f64::max);
        if residual > DEGREE_TOLERANCE * scale * (k as f64) {
            return Err(format!("eigenvector residual {residual:e}"));
        }
        let norm: f64 = omega.iter().zip(sizes).map(|(w, s)| w.norm_sqr() / s).sum();
        let d = (order as f64 / norm).sqrt();
        let rounded = d.round();
        if (d - rounded).abs() > DEGREE_TOLERANCE || rounded < 1.0 {
            return Err(format!("degree estimate {d} is not an integer"));
        }
        degrees.push(rounded as u64);
    }
    Ok(degrees)
}

/// Inverse iteration, normalized so the identity-class coordinate is 1.
fn eigenvector(m: &DMatrix<Complex<f64>>, lambda: Complex<f64>, scale: f64) -> Result<DVector<Complex<f64>>, String> {
    let k = m.nrows();
    let shift = lambda + Complex::new(1e-9 * scale, 1e-9 * scale);
    let lu = (m - DMatrix::<Complex<f64>>::identity(k, k) * shift).lu();
    let mut v = DVector::from_element(k, Complex::new(1.0, 0.0));
    for _ in 0..INVERSE_ITERATION_STEPS {
        v = lu.solve(&v).ok_or("singular shifted matrix")?;
        let n = v.norm();
        if !n.is_finite() || n == 0.0 {
            return Err("inverse iteration diverged".into());
        }
        v /= Complex::new(n, 0.0);
    }
    if v[0].norm() < DEGREE_TOLERANCE {
        return Err("eigenvector vanishes on the identity class".into());
    }
    let v0 = v[0];
    Ok(v.map(|x| x / v0))
}

fn check_postconditions(h: &Arc<FiniteGroup>, degrees: &[u64], classes: usize) -> Result<(), CenterError> {
    let order = h.order() as u64;
    if degrees.len() != classes {
        return Err(CenterError::DegreeRecoveryFailed(format!(
            "{} degrees for {classes} classes",
            degrees.len()
        )));
    }
    let sum: u64 = degrees.iter().map(|d| d * d).sum();
    if sum != order {
        return Err(CenterError::DegreeRecoveryFailed(format!(
            "sum of squared degrees is {sum}, expected {order}"
        )));
    }
    let linear = degrees.iter().filter(|&&d| d == 1).count() as u64;
    let abelianization = order / h.derived_subgroup().order() as u64;
    if linear != abelianization {
        return Err(CenterError::DegreeRecoveryFailed(format!(
            "{linear} linear characters, expected {abelianization}"
        )));
    }
    Ok(())
}
