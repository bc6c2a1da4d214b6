//! Poisson problems `L u = f` on connected graph Laplacians.
//!
//! `L` is singular with the constants as its kernel, so solutions are
//! reported as the minimum-norm representative `u = L^+ f`, built from the
//! eigendecomposition.

use nalgebra::{DMatrix, DVector};
use num_bigint::BigInt;

use crate::bitspace::OrderingScheme;
use crate::cubegraphs::{tricube_laplacian, GraphMatrix};
use crate::error::{Error, Result};
use crate::predicates::Rational;
use crate::spectra::{symmetric_eigen, ZERO_EIGEN_TOL};

/// Largest n accepted by [`min_energy_search`]; n = 4 already has 12870 patterns.
pub const MAX_SEARCH_DIM: usize = 4;
/// Energies within this of the minimum count as ties.
pub const ENERGY_TIE_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct PoissonSolution {
    pub u: Vec<f64>,
    /// `||L u - f||_2`; nonzero when `f` has a component along the constants.
    pub residual: f64,
    /// Dirichlet energy `1/2 u^T L u`.
    pub energy: f64,
    pub norm_l2: f64,
    /// The +-1 source pattern, when the right-hand side came from one.
    pub pattern: Option<Vec<i8>>,
}

fn check_square(l: &GraphMatrix, len: usize) -> Result<()> {
    if l.dim() != len {
        return Err(Error::DimensionMismatch { expected: l.dim(), actual: len });
    }
    Ok(())
}

/// Unit vector spanning the kernel of a connected-graph Laplacian.
pub fn kernel_basis(l: &GraphMatrix) -> Result<Vec<DVector<f64>>> {
    let (values, vectors) = symmetric_eigen(&l.entries)?;
    let zero: Vec<usize> = (0..values.len())
        .filter(|&i| values[i].abs() <= ZERO_EIGEN_TOL)
        .collect();
    if zero.len() != 1 {
        return Err(Error::Structure(format!(
            "a connected Laplacian: kernel has dimension {}",
            zero.len()
        )));
    }
    let mut v = vectors.column(zero[0]).into_owned();
    if v.sum() < 0.0 {
        v = -v;
    }
    let size = l.dim() as f64;
    let constant = DVector::from_element(l.dim(), 1.0 / size.sqrt());
    if (&v - &constant).amax() > 1e-8 || (&l.entries * &v).norm() > ZERO_EIGEN_TOL {
        return Err(Error::Structure("a Laplacian: kernel is not the constants".into()));
    }
    Ok(vec![constant])
}

/// Moore-Penrose pseudoinverse of a symmetric matrix; eigenvalues at or
/// below the zero tolerance are dropped.
pub fn pseudoinverse(m: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    let (values, vectors) = symmetric_eigen(m)?;
    let n = m.nrows();
    let mut out = DMatrix::zeros(n, n);
    for (i, &lambda) in values.iter().enumerate() {
        if lambda.abs() > ZERO_EIGEN_TOL {
            let v = vectors.column(i);
            out += (v * v.transpose()) / lambda;
        }
    }
    Ok(out)
}

fn solution_from(l: &GraphMatrix, pinv: &DMatrix<f64>, f: &[f64]) -> PoissonSolution {
    let fv = DVector::from_column_slice(f);
    let u = pinv * &fv;
    let lu = &l.entries * &u;
    PoissonSolution {
        residual: (&lu - &fv).norm(),
        energy: 0.5 * u.dot(&lu),
        norm_l2: u.norm(),
        u: u.iter().copied().collect(),
        pattern: None,
    }
}

/// Minimum-norm solution of `L u = f`; a least-squares solution with a
/// reported residual when `f` is not orthogonal to the constants.
pub fn solve_min_norm(l: &GraphMatrix, f: &[f64]) -> Result<PoissonSolution> {
    check_square(l, f.len())?;
    Ok(solution_from(l, &pseudoinverse(&l.entries)?, f))
}

/// `+1` on odd-weight addresses, `-1` on even ones, in binary vertex order.
pub fn parity_pattern(n: usize) -> Vec<i8> {
    (0..1usize << n)
        .map(|v| if v.count_ones() % 2 == 1 { 1 } else { -1 })
        .collect()
}

/// 1-based vertex numbers carrying `+1`.
pub fn positive_vertices(pattern: &[i8]) -> Vec<usize> {
    (0..pattern.len()).filter(|&i| pattern[i] > 0).map(|i| i + 1).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct EnergySearch {
    pub n: usize,
    pub best_energy: f64,
    /// Minimizing patterns in binary vertex order, lexicographically sorted.
    pub best_patterns: Vec<Vec<i8>>,
    pub best_solution: PoissonSolution,
    /// Energy of every balanced pattern, in enumeration order.
    pub energies: Vec<f64>,
}

impl EnergySearch {
    pub fn best_energy_rational(&self) -> Option<Rational> {
        recognize_rational(self.best_energy, 10_000, 1e-10)
    }
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Exhaustive search over balanced `+-1` right-hand sides on the
/// triangulated n-cube for the least Dirichlet energy of `L^+ f`.
pub fn min_energy_search(n: usize) -> Result<EnergySearch> {
    if !(1..=MAX_SEARCH_DIM).contains(&n) {
        return Err(Error::invalid(format!(
            "exhaustive search needs 1 <= n <= {MAX_SEARCH_DIM}, got {n}"
        )));
    }
    let l = tricube_laplacian(n, &OrderingScheme::Binary)?;
    let pinv = pseudoinverse(&l.entries)?;
    let size = 1usize << n;
    let mut comb: Vec<usize> = (0..size / 2).collect();
    let mut energies = Vec::new();
    let mut patterns = Vec::new();
    loop {
        let mut f = vec![-1i8; size];
        for &i in &comb {
            f[i] = 1;
        }
        let fv = DVector::from_iterator(size, f.iter().map(|&x| f64::from(x)));
        energies.push(0.5 * fv.dot(&(&pinv * &fv)));
        patterns.push(f);
        if !next_combination(&mut comb, size) {
            break;
        }
    }
    let best_energy = energies.iter().copied().fold(f64::INFINITY, f64::min);
    let mut best_patterns: Vec<Vec<i8>> = patterns
        .into_iter()
        .zip(&energies)
        .filter(|(_, &e)| e - best_energy <= ENERGY_TIE_TOL)
        .map(|(p, _)| p)
        .collect();
    best_patterns.sort();
    let first = &best_patterns[0];
    let mut best_solution = solution_from(
        &l,
        &pinv,
        &first.iter().map(|&x| f64::from(x)).collect::<Vec<_>>(),
    );
    best_solution.pattern = Some(first.clone());
    Ok(EnergySearch { n, best_energy, best_patterns, best_solution, energies })
}

/// Best rational approximation with denominator at most `max_den`, accepted
/// only when it lies within `tol` of `x`.
pub fn recognize_rational(x: f64, max_den: i64, tol: f64) -> Option<Rational> {
    if !x.is_finite() {
        return None;
    }
    // continued-fraction convergents h/k
    let (mut h0, mut h1) = (0i64, 1i64);
    let (mut k0, mut k1) = (1i64, 0i64);
    let mut r = x;
    for _ in 0..64 {
        let a = r.floor();
        if a.abs() > 1e15 {
            return None;
        }
        let a = a as i64;
        let h2 = a.checked_mul(h1)?.checked_add(h0)?;
        let k2 = a.checked_mul(k1)?.checked_add(k0)?;
        if k2 > max_den {
            break;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        if (x - h1 as f64 / k1 as f64).abs() <= tol {
            return Some(Rational::new(BigInt::from(h1), BigInt::from(k1)));
        }
        let frac = r - a as f64;
        if frac.abs() < 1e-300 {
            break;
        }
        r = 1.0 / frac;
    }
    None
}
