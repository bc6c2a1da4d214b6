//! Symmetric eigensolving, multiplicity clustering and the spectral checks
//! built on top of it: lattice classification, Cantoni-Butler block
//! diagonalization, Ramanujan bounds and the eigenvector determinant identity.

use std::collections::BTreeMap;

use faer::{Mat, Side};
use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::bitspace::OrderingScheme;
use crate::cubegraphs::{Family, GraphMatrix, MatrixKind};
use crate::error::{Error, Result};

/// Absolute tolerance for grouping eigenvalues into one multiplicity class.
pub const DEFAULT_CLUSTER_TOL: f64 = 1e-6;

/// Largest asymmetry accepted by the eigensolver.
pub const SYMMETRY_TOL: f64 = 1e-10;

/// Eigenvalues at or below this magnitude count as zero.
pub const ZERO_EIGEN_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MatrixMeta {
    pub family: Family,
    pub kind: MatrixKind,
    pub n: usize,
    pub ordering: OrderingScheme,
    pub dim: usize,
}

impl From<&GraphMatrix> for MatrixMeta {
    fn from(m: &GraphMatrix) -> Self {
        MatrixMeta {
            family: m.family,
            kind: m.kind,
            n: m.n,
            ordering: m.ordering.clone(),
            dim: m.dim(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Cluster {
    /// Mean of the member eigenvalues.
    pub value: f64,
    pub multiplicity: usize,
    pub min: f64,
    pub max: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    /// Ascending.
    pub values: Vec<f64>,
    pub clusters: Vec<Cluster>,
    pub tol: f64,
    pub source: Option<MatrixMeta>,
    /// Orthonormal eigenvectors as columns, matching `values`.
    pub vectors: Option<DMatrix<f64>>,
}

impl Spectrum {
    /// Sorts `values` and groups them greedily: a value joins the current
    /// cluster while it stays within `tol` of the cluster's smallest member.
    pub fn from_values(mut values: Vec<f64>, tol: f64) -> Self {
        values.sort_by(f64::total_cmp);
        let mut clusters: Vec<Cluster> = Vec::new();
        let mut start = 0;
        for i in 0..=values.len() {
            let split = i == values.len() || values[i] - values[start] > tol;
            if split && i > start {
                let members = &values[start..i];
                clusters.push(Cluster {
                    value: members.iter().sum::<f64>() / members.len() as f64,
                    multiplicity: members.len(),
                    min: members[0],
                    max: members[members.len() - 1],
                });
                start = i;
            }
        }
        Spectrum {
            values,
            clusters,
            tol,
            source: None,
            vectors: None,
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `(representative, multiplicity)` pairs in ascending order.
    pub fn multiplicities(&self) -> Vec<(f64, usize)> {
        self.clusters
            .iter()
            .map(|c| (c.value, c.multiplicity))
            .collect()
    }

    pub fn multiplicity_near(&self, value: f64, tol: f64) -> usize {
        self.values
            .iter()
            .filter(|&&v| (v - value).abs() <= tol)
            .count()
    }

    pub fn min(&self) -> Option<f64> {
        self.values.first().copied()
    }

    pub fn max(&self) -> Option<f64> {
        self.values.last().copied()
    }

    /// Largest `|M v - lambda v|` over the stored eigenpairs.
    pub fn max_residual(&self, m: &DMatrix<f64>) -> Option<f64> {
        let vecs = self.vectors.as_ref()?;
        Some(
            self.values
                .iter()
                .enumerate()
                .map(|(i, &lambda)| {
                    let v = vecs.column(i);
                    (m * v - v * lambda).norm()
                })
                .fold(0.0, f64::max),
        )
    }
}

fn to_faer(m: &DMatrix<f64>) -> Mat<f64> {
    Mat::from_fn(m.nrows(), m.ncols(), |i, j| m[(i, j)])
}

fn check_symmetric(m: &DMatrix<f64>) -> Result<()> {
    if !m.is_square() {
        return Err(Error::Structure("square".into()));
    }
    let n = m.nrows();
    for i in 0..n {
        for j in (i + 1)..n {
            if (m[(i, j)] - m[(j, i)]).abs() > SYMMETRY_TOL {
                return Err(Error::Structure("symmetric".into()));
            }
        }
    }
    Ok(())
}

/// Ascending eigenvalues of a symmetric matrix.
pub fn symmetric_eigenvalues(m: &DMatrix<f64>) -> Result<Vec<f64>> {
    check_symmetric(m)?;
    if m.nrows() == 0 {
        return Ok(Vec::new());
    }
    to_faer(m)
        .self_adjoint_eigenvalues(Side::Lower)
        .map_err(|e| Error::Eigen(format!("{e:?}")))
}

/// Ascending eigenvalues with orthonormal eigenvectors as columns.
pub fn symmetric_eigen(m: &DMatrix<f64>) -> Result<(Vec<f64>, DMatrix<f64>)> {
    check_symmetric(m)?;
    let n = m.nrows();
    if n == 0 {
        return Ok((Vec::new(), DMatrix::zeros(0, 0)));
    }
    let evd = to_faer(m)
        .self_adjoint_eigen(Side::Lower)
        .map_err(|e| Error::Eigen(format!("{e:?}")))?;
    let s = evd.S();
    let u = evd.U();
    let values = (0..n).map(|i| s[i]).collect();
    Ok((values, DMatrix::from_fn(n, n, |i, j| u[(i, j)])))
}

/// Full eigendecomposition; `tol` is the clustering tolerance.
pub fn eig_sym(m: &GraphMatrix, tol: f64) -> Result<Spectrum> {
    let (values, vectors) = symmetric_eigen(&m.entries)?;
    let mut spec = Spectrum::from_values(values, tol);
    spec.source = Some(m.into());
    spec.vectors = Some(vectors);
    Ok(spec)
}

/// Eigenvalues only. Faster than [`eig_sym`] for large matrices.
pub fn eigenvalues(m: &GraphMatrix, tol: f64) -> Result<Spectrum> {
    let mut spec = Spectrum::from_values(symmetric_eigenvalues(&m.entries)?, tol);
    spec.source = Some(m.into());
    Ok(spec)
}

/// Multiplicities of `k * unit`, or `None` if some eigenvalue is farther than
/// `tol` from every lattice point.
pub fn classify_lattice(spec: &Spectrum, unit: f64, tol: f64) -> Option<BTreeMap<i64, usize>> {
    if unit <= 0.0 {
        return None;
    }
    let mut map = BTreeMap::new();
    for &v in &spec.values {
        let k = (v / unit).round();
        if (v - k * unit).abs() > tol {
            return None;
        }
        *map.entry(k as i64).or_insert(0) += 1;
    }
    Some(map)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectralStats {
    pub radius: f64,
    /// Smallest gap between consecutive distinct eigenvalues.
    pub eigengap: Option<f64>,
    /// Gap between the two largest distinct eigenvalues.
    pub spectral_gap: Option<f64>,
    pub trace: f64,
}

pub fn spectral_stats(spec: &Spectrum) -> Result<SpectralStats> {
    if spec.is_empty() {
        return Err(Error::invalid("empty spectrum"));
    }
    let reps: Vec<f64> = spec.clusters.iter().map(|c| c.value).collect();
    let eigengap = reps
        .windows(2)
        .map(|w| w[1] - w[0])
        .min_by(f64::total_cmp);
    let spectral_gap = (reps.len() >= 2).then(|| reps[reps.len() - 1] - reps[reps.len() - 2]);
    Ok(SpectralStats {
        radius: spec.values.iter().map(|v| v.abs()).fold(0.0, f64::max),
        eigengap,
        spectral_gap,
        trace: spec.values.iter().sum(),
    })
}

/// Diagonal blocks of `K M K^T` for a bisymmetric `M`.
#[derive(Debug, Clone)]
pub struct CentroBlocks {
    /// `A - JC`; eigenvalues of the antisymmetric eigenvectors (`Jx = -x`).
    pub minus_block: DMatrix<f64>,
    /// `A + JC`, bordered by the centre row and column in odd dimension;
    /// eigenvalues of the symmetric eigenvectors (`Jx = x`).
    pub plus_block: DMatrix<f64>,
    /// Frobenius norm of the off-diagonal block of `K M K^T`.
    pub off_diagonal_norm: f64,
    pub transform: DMatrix<f64>,
}

/// The orthogonal `K = (1/sqrt 2) [[I, -J], [I, J]]`, with a unit centre
/// entry inserted when `size` is odd.
pub fn centro_transform(size: usize) -> DMatrix<f64> {
    let h = size / 2;
    let odd = size % 2 == 1;
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let mut k = DMatrix::zeros(size, size);
    for i in 0..h {
        // [I, -J] rows, then [I, J] rows
        k[(i, i)] = s;
        k[(i, size - 1 - i)] = -s;
        let row = size - h + i;
        k[(row, i)] = s;
        k[(row, size - 1 - i)] = s;
    }
    if odd {
        k[(h, h)] = 1.0;
    }
    k
}

pub fn centro_block_diagonalize(m: &GraphMatrix) -> Result<CentroBlocks> {
    if !m.is_bisymmetric(SYMMETRY_TOL) {
        return Err(Error::Structure("bisymmetric".into()));
    }
    let size = m.dim();
    let h = size / 2;
    let k = centro_transform(size);
    let o = &k * &m.entries * k.transpose();
    let minus_block = o.view((0, 0), (h, h)).into_owned();
    let plus_block = o.view((h, h), (size - h, size - h)).into_owned();
    let off_diagonal_norm = o.view((0, h), (h, size - h)).norm() * std::f64::consts::SQRT_2;
    Ok(CentroBlocks {
        minus_block,
        plus_block,
        off_diagonal_norm,
        transform: k,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RamanujanReport {
    pub degree: usize,
    pub max_nontrivial: f64,
    pub bound: f64,
    pub is_ramanujan: bool,
}

/// Eigenvalues of magnitude within this of the degree are trivial.
const TRIVIAL_EIGEN_TOL: f64 = 1e-8;

/// Checks `max |lambda| <= 2 sqrt(d - 1)` over eigenvalues with `|lambda| != d`.
pub fn ramanujan_check(adj: &GraphMatrix, degree: usize) -> Result<RamanujanReport> {
    let m = &adj.entries;
    let regular = m
        .row_iter()
        .all(|r| r.iter().all(|&x| x == 0.0 || x == 1.0) && r.sum() == degree as f64);
    if !regular || degree == 0 {
        return Err(Error::Structure(format!("a {degree}-regular adjacency matrix")));
    }
    let values = symmetric_eigenvalues(m)?;
    let d = degree as f64;
    let max_nontrivial = values
        .iter()
        .map(|v| v.abs())
        .filter(|a| (a - d).abs() > TRIVIAL_EIGEN_TOL)
        .fold(0.0, f64::max);
    let bound = 2.0 * (d - 1.0).sqrt();
    Ok(RamanujanReport {
        degree,
        max_nontrivial,
        bound,
        is_ramanujan: max_nontrivial <= bound + 1e-9,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IdentityCheck {
    /// `det(B^T L B)`.
    pub lhs: f64,
    /// `prod(nonzero eigenvalues) * det([B | x])^2`.
    pub rhs: f64,
    pub nonzero_product: f64,
    pub agree: bool,
}

/// Determinant identity for a Laplacian with a simple zero eigenvalue:
/// `det(B^T L B) = (prod of nonzero eigenvalues) * det([B | x])^2`, where `x`
/// is the unit kernel vector and `B` is any `N x (N-1)` matrix.
pub fn eig_identity_check(l: &GraphMatrix, b: &DMatrix<f64>) -> Result<IdentityCheck> {
    let size = l.dim();
    if b.nrows() != size || b.ncols() + 1 != size {
        return Err(Error::DimensionMismatch {
            expected: size,
            actual: b.nrows(),
        });
    }
    let (values, vectors) = symmetric_eigen(&l.entries)?;
    let zeros: Vec<usize> = (0..size)
        .filter(|&i| values[i].abs() <= ZERO_EIGEN_TOL * size as f64)
        .collect();
    if zeros.len() != 1 {
        return Err(Error::Structure(format!(
            "singular with a simple zero eigenvalue (found {} zero eigenvalues)",
            zeros.len()
        )));
    }
    let nonzero_product: f64 = (0..size)
        .filter(|&i| i != zeros[0])
        .map(|i| values[i])
        .product();
    let x = vectors.column(zeros[0]);
    let lhs = (b.transpose() * &l.entries * b).determinant();
    let mut bx = DMatrix::zeros(size, size);
    bx.view_mut((0, 0), (size, size - 1)).copy_from(b);
    bx.column_mut(size - 1).copy_from(&x);
    let rhs = nonzero_product * bx.determinant().powi(2);
    let agree = (lhs - rhs).abs() <= 1e-6 * lhs.abs().max(rhs.abs()).max(1.0);
    Ok(IdentityCheck {
        lhs,
        rhs,
        nonzero_product,
        agree,
    })
}

/// Unit eigenvectors spanning the numerical kernel.
pub fn kernel_vectors(m: &DMatrix<f64>) -> Result<Vec<DVector<f64>>> {
    let (values, vectors) = symmetric_eigen(m)?;
    let scale = m.nrows().max(1) as f64;
    Ok(values
        .iter()
        .enumerate()
        .filter(|(_, v)| v.abs() <= ZERO_EIGEN_TOL * scale)
        .map(|(i, _)| vectors.column(i).into_owned())
        .collect())
}
