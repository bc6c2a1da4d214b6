//! Dense matrices of the four cube families, face counts of the glued
//! 2^n-cube structure and Eulerian circuits of the regular triangulated cube.

use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::bitspace::{binary_order, pow3, ternary_ordering, ternary_vertex, OrderingScheme};
use crate::error::{Error, Result};

/// Largest `n` for which a dense `2^n x 2^n` matrix is built.
pub const MAX_DENSE_BINARY: usize = 12;
/// Largest `n` for which a dense `3^n x 3^n` matrix is built.
pub const MAX_DENSE_TERNARY: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// Plain n-cube graph.
    NCube,
    /// Complete graph on `{0,1}^n` weighted by Hamming distance.
    HammingCube,
    /// n-cube with triangulated 2-faces.
    TriCube,
    /// Triangulated n-cube with both 2-face diagonals as edges.
    RegularTriCube,
    /// 2^n unit cubes glued at the origin (3^n vertices).
    PowCube,
    /// Triangulated variant of `PowCube`.
    PowTriCube,
    /// Hamming-weighted variant of `PowCube`.
    PowHammingCube,
    /// An arbitrary triangle mesh.
    Mesh,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::NCube => "ncube",
            Family::HammingCube => "hamming",
            Family::TriCube => "tricube",
            Family::RegularTriCube => "regtricube",
            Family::PowCube => "powcube",
            Family::PowTriCube => "powtri",
            Family::PowHammingCube => "powhamming",
            Family::Mesh => "mesh",
        }
    }

    pub fn is_ternary(&self) -> bool {
        matches!(
            self,
            Family::PowCube | Family::PowTriCube | Family::PowHammingCube
        )
    }

    /// The matrix kind each family is built as by [`build`].
    pub fn default_kind(&self) -> MatrixKind {
        match self {
            Family::NCube | Family::RegularTriCube | Family::PowCube => MatrixKind::Adjacency,
            Family::HammingCube | Family::PowHammingCube => MatrixKind::Distance,
            Family::TriCube | Family::PowTriCube | Family::Mesh => MatrixKind::Laplacian,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "ncube" => Family::NCube,
            "hamming" | "hammingcube" => Family::HammingCube,
            "tricube" => Family::TriCube,
            "regtricube" | "regular-tricube" => Family::RegularTriCube,
            "powcube" => Family::PowCube,
            "powtri" | "powtricube" => Family::PowTriCube,
            "powhamming" | "powhammingcube" => Family::PowHammingCube,
            "mesh" => Family::Mesh,
            _ => return Err(Error::Parse(format!("unknown family {s:?}"))),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MatrixKind {
    Adjacency,
    Distance,
    Laplacian,
}

impl MatrixKind {
    pub fn name(&self) -> &'static str {
        match self {
            MatrixKind::Adjacency => "adjacency",
            MatrixKind::Distance => "distance",
            MatrixKind::Laplacian => "laplacian",
        }
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A dense symmetric matrix tagged with the graph it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphMatrix {
    pub family: Family,
    pub kind: MatrixKind,
    pub n: usize,
    pub ordering: OrderingScheme,
    pub entries: DMatrix<f64>,
}

impl GraphMatrix {
    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn trace(&self) -> f64 {
        self.entries.trace()
    }

    pub fn row_sums(&self) -> Vec<f64> {
        self.entries.row_iter().map(|r| r.sum()).collect()
    }

    pub fn max_asymmetry(&self) -> f64 {
        let m = &self.entries;
        let n = m.nrows();
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in (i + 1)..n {
                worst = worst.max((m[(i, j)] - m[(j, i)]).abs());
            }
        }
        worst
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        self.entries.is_square() && self.max_asymmetry() <= tol
    }

    /// Largest `|M - J M J|` entry, `J` the exchange matrix.
    pub fn max_centro_defect(&self) -> f64 {
        let m = &self.entries;
        let n = m.nrows();
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                worst = worst.max((m[(i, j)] - m[(n - 1 - i, n - 1 - j)]).abs());
            }
        }
        worst
    }

    pub fn is_centrosymmetric(&self, tol: f64) -> bool {
        self.max_centro_defect() <= tol
    }

    pub fn is_bisymmetric(&self, tol: f64) -> bool {
        self.is_symmetric(tol) && self.is_centrosymmetric(tol)
    }

    /// Checks the structural invariant of the matrix kind.
    pub fn validate(&self, tol: f64) -> Result<()> {
        if !self.is_symmetric(tol) {
            return Err(Error::Structure("symmetric".into()));
        }
        let m = &self.entries;
        let n = m.nrows();
        match self.kind {
            MatrixKind::Distance => {
                if (0..n).any(|i| m[(i, i)] != 0.0) || m.iter().any(|&x| x < 0.0) {
                    return Err(Error::Structure("a hollow nonnegative distance matrix".into()));
                }
            }
            MatrixKind::Adjacency => {
                if (0..n).any(|i| m[(i, i)] != 0.0) || m.iter().any(|&x| x != 0.0 && x != 1.0) {
                    return Err(Error::Structure("a 0/1 hollow adjacency matrix".into()));
                }
            }
            MatrixKind::Laplacian => {
                if self.row_sums().iter().any(|s| s.abs() > tol * n as f64) {
                    return Err(Error::Structure("a Laplacian with zero row sums".into()));
                }
            }
        }
        Ok(())
    }

    /// Sign-flipped copy, turning the positive-weight Laplacian into its
    /// negative-weight counterpart.
    pub fn negated(&self) -> GraphMatrix {
        GraphMatrix {
            entries: -&self.entries,
            ..self.clone()
        }
    }

    /// Common degree if every row has the same number of unit entries.
    pub fn regular_degree(&self) -> Option<usize> {
        let degrees: Vec<usize> = self
            .entries
            .row_iter()
            .map(|r| r.iter().filter(|&&x| x != 0.0).count())
            .collect();
        let first = *degrees.first()?;
        degrees.iter().all(|&d| d == first).then_some(first)
    }
}

fn check_dim(n: usize, max: usize) -> Result<()> {
    if n == 0 || n > max {
        return Err(Error::invalid(format!("dimension {n} outside 1..={max}")));
    }
    Ok(())
}

fn binary_matrix(
    family: Family,
    kind: MatrixKind,
    n: usize,
    ordering: &OrderingScheme,
    entry: impl Fn(usize, usize) -> f64,
) -> Result<GraphMatrix> {
    check_dim(n, MAX_DENSE_BINARY)?;
    let order = binary_order(n, ordering)?;
    let size = order.len();
    Ok(GraphMatrix {
        family,
        kind,
        n,
        ordering: ordering.clone(),
        entries: DMatrix::from_fn(size, size, |i, j| entry(order[i], order[j])),
    })
}

fn distance(a: usize, b: usize) -> u32 {
    (a ^ b).count_ones()
}

/// n-cube adjacency: 1 between addresses at Hamming distance 1.
pub fn ncube_adjacency(n: usize, ordering: &OrderingScheme) -> Result<GraphMatrix> {
    binary_matrix(Family::NCube, MatrixKind::Adjacency, n, ordering, |a, b| {
        f64::from(u8::from(distance(a, b) == 1))
    })
}

/// Full Hamming distance matrix of `{0,1}^n`.
pub fn hamming_distance_matrix(n: usize, ordering: &OrderingScheme) -> Result<GraphMatrix> {
    binary_matrix(
        Family::HammingCube,
        MatrixKind::Distance,
        n,
        ordering,
        |a, b| f64::from(distance(a, b)),
    )
}

/// Combinatorial cotan Laplacian of the triangulated n-cube: `n I - E`.
pub fn tricube_laplacian(n: usize, ordering: &OrderingScheme) -> Result<GraphMatrix> {
    binary_matrix(Family::TriCube, MatrixKind::Laplacian, n, ordering, |a, b| {
        match distance(a, b) {
            0 => n as f64,
            1 => -1.0,
            _ => 0.0,
        }
    })
}

/// Cube edges plus both diagonals of every 2-face; regular of degree
/// `n + n(n-1)/2`.
pub fn regular_tricube_adjacency(n: usize, ordering: &OrderingScheme) -> Result<GraphMatrix> {
    if n < 2 {
        return Err(Error::invalid("the regular triangulated cube needs n >= 2"));
    }
    binary_matrix(
        Family::RegularTriCube,
        MatrixKind::Adjacency,
        n,
        ordering,
        |a, b| f64::from(u8::from(matches!(distance(a, b), 1 | 2))),
    )
}

struct TernaryLayout {
    order: Vec<usize>,
    coords: Vec<Vec<i8>>,
    addresses: Vec<u64>,
}

fn ternary_layout(n: usize, ordering: &OrderingScheme) -> Result<TernaryLayout> {
    check_dim(n, MAX_DENSE_TERNARY)?;
    let order = ternary_ordering(n, ordering)?;
    let (coords, addresses) = (0..pow3(n))
        .map(|m| ternary_vertex(n, m).map(|v| (v.coords, v.address.bits())))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .unzip();
    Ok(TernaryLayout {
        order,
        coords,
        addresses,
    })
}

fn ternary_matrix(
    family: Family,
    kind: MatrixKind,
    n: usize,
    ordering: &OrderingScheme,
    entry: impl Fn(&TernaryLayout, usize, usize) -> f64,
) -> Result<GraphMatrix> {
    let layout = ternary_layout(n, ordering)?;
    let size = layout.order.len();
    let entries = DMatrix::from_fn(size, size, |i, j| {
        entry(&layout, layout.order[i], layout.order[j])
    });
    Ok(GraphMatrix {
        family,
        kind,
        n,
        ordering: ordering.clone(),
        entries,
    })
}

/// Edge of the glued structure: one axis changes, by exactly one, and the
/// other axes agree. `-1 <-> +1` is not an edge.
fn pow_edge(a: &[i8], b: &[i8]) -> bool {
    let mut diffs = a.iter().zip(b).filter(|(x, y)| x != y);
    match (diffs.next(), diffs.next()) {
        (Some((x, y)), None) => (x - y).abs() == 1,
        _ => false,
    }
}

pub fn pow_cube_adjacency(n: usize, ordering: &OrderingScheme) -> Result<GraphMatrix> {
    ternary_matrix(
        Family::PowCube,
        MatrixKind::Adjacency,
        n,
        ordering,
        |l, a, b| f64::from(u8::from(pow_edge(&l.coords[a], &l.coords[b]))),
    )
}

/// Kirchhoff Laplacian `G - E` of the glued structure. Vertex degree is
/// `n` plus the number of zero coordinates.
pub fn pow_tricube_laplacian(n: usize, ordering: &OrderingScheme) -> Result<GraphMatrix> {
    ternary_matrix(
        Family::PowTriCube,
        MatrixKind::Laplacian,
        n,
        ordering,
        |l, a, b| {
            if a == b {
                (n + l.coords[a].iter().filter(|&&c| c == 0).count()) as f64
            } else if pow_edge(&l.coords[a], &l.coords[b]) {
                -1.0
            } else {
                0.0
            }
        },
    )
}

/// Hamming distances between the (non-unique) addresses of the 3^n vertices.
pub fn pow_hamming_matrix(n: usize, ordering: &OrderingScheme) -> Result<GraphMatrix> {
    ternary_matrix(
        Family::PowHammingCube,
        MatrixKind::Distance,
        n,
        ordering,
        |l, a, b| f64::from((l.addresses[a] ^ l.addresses[b]).count_ones()),
    )
}

/// Builds the default matrix kind of a family.
pub fn build(family: Family, n: usize, ordering: &OrderingScheme) -> Result<GraphMatrix> {
    match family {
        Family::NCube => ncube_adjacency(n, &ordering.for_binary()),
        Family::HammingCube => hamming_distance_matrix(n, &ordering.for_binary()),
        Family::TriCube => tricube_laplacian(n, &ordering.for_binary()),
        Family::RegularTriCube => regular_tricube_adjacency(n, &ordering.for_binary()),
        Family::PowCube => pow_cube_adjacency(n, &ordering.for_ternary()),
        Family::PowTriCube => pow_tricube_laplacian(n, &ordering.for_ternary()),
        Family::PowHammingCube => pow_hamming_matrix(n, &ordering.for_ternary()),
        Family::Mesh => Err(Error::invalid("mesh matrices are built from a TriMesh")),
    }
}

const MAX_FACE_DIM: usize = 50;

/// Number of k-faces of the glued 2^n-cube structure:
/// `C(n,k) 3^(n-k) 2^k`.
pub fn face_count(n: usize, k: usize) -> Result<u128> {
    if k > n {
        return Err(Error::invalid(format!("face dimension {k} exceeds n = {n}")));
    }
    if n > MAX_FACE_DIM {
        return Err(Error::invalid(format!("n = {n} too large for exact u128 counts")));
    }
    let binom = (0..k as u128).fold(1u128, |acc, i| acc * (n as u128 - i) / (i + 1));
    Ok(binom * 3u128.pow((n - k) as u32) * 2u128.pow(k as u32))
}

/// Sum of all face counts; equals `5^n`.
pub fn face_total(n: usize) -> Result<u128> {
    (0..=n).map(|k| face_count(n, k)).sum()
}

/// Vertex degree of the regular triangulated cube.
pub fn regular_tricube_degree(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Largest `n` for which [`eulerian_circuit`] builds the graph.
pub const MAX_EULER_DIM: usize = 12;

/// Hierholzer circuit over the regular triangulated n-cube, as binary vertex
/// values. `None` when the common degree `n(n+1)/2` is odd.
pub fn eulerian_circuit(n: usize) -> Result<Option<Vec<usize>>> {
    if !(2..=MAX_EULER_DIM).contains(&n) {
        return Err(Error::invalid(format!(
            "eulerian circuits are built for 2 <= n <= {MAX_EULER_DIM}"
        )));
    }
    if regular_tricube_degree(n) % 2 == 1 {
        return Ok(None);
    }
    let count = 1usize << n;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); count];
    for a in 0..count {
        for b in (a + 1)..count {
            if matches!(distance(a, b), 1 | 2) {
                incident[a].push(edges.len());
                incident[b].push(edges.len());
                edges.push((a, b));
            }
        }
    }

    let mut used = vec![false; edges.len()];
    let mut cursor = vec![0usize; count];
    let mut stack = vec![0usize];
    let mut circuit = Vec::with_capacity(edges.len() + 1);
    while let Some(&v) = stack.last() {
        // skip edges consumed from the other endpoint
        while cursor[v] < incident[v].len() && used[incident[v][cursor[v]]] {
            cursor[v] += 1;
        }
        if let Some(&e) = incident[v].get(cursor[v]) {
            used[e] = true;
            let (a, b) = edges[e];
            stack.push(if a == v { b } else { a });
        } else {
            circuit.push(v);
            stack.pop();
        }
    }
    circuit.reverse();
    Ok(Some(circuit))
}

/// True iff `walk` is closed and uses every edge of the regular triangulated
/// n-cube exactly once.
pub fn is_eulerian_circuit(n: usize, walk: &[usize]) -> bool {
    let count = 1usize << n;
    let edge_total = count * regular_tricube_degree(n) / 2;
    if walk.len() != edge_total + 1 || walk.first() != walk.last() {
        return false;
    }
    let mut seen = std::collections::HashSet::with_capacity(edge_total);
    walk.windows(2).all(|w| {
        let (a, b) = (w[0].min(w[1]), w[0].max(w[1]));
        b < count && matches!(distance(a, b), 1 | 2) && seen.insert((a, b))
    }) && seen.len() == edge_total
}

#[cfg(test)]
mod tests {
    use super::*;

    const BIN: OrderingScheme = OrderingScheme::Binary;
    const GRAY: OrderingScheme = OrderingScheme::Gray;
    const TNAT: OrderingScheme = OrderingScheme::TernaryNatural;
    const TGRAY: OrderingScheme = OrderingScheme::TernaryGray;

    fn rows(m: &GraphMatrix) -> Vec<Vec<f64>> {
        m.entries
            .row_iter()
            .map(|r| r.iter().copied().collect())
            .collect()
    }

    #[test]
    fn ncube_examples() {
        let a = ncube_adjacency(1, &BIN).unwrap();
        assert_eq!(rows(&a), [[0.0, 1.0], [1.0, 0.0]]);
        let a = ncube_adjacency(2, &BIN).unwrap();
        assert!(a.row_sums().iter().all(|&s| s == 2.0));
        let g = ncube_adjacency(3, &GRAY).unwrap();
        for i in 0..8 {
            assert_eq!(g.entries[(i, 7 - i)], 1.0);
        }
        assert!(ncube_adjacency(0, &BIN).is_err());
        a.validate(0.0).unwrap();
    }

    #[test]
    fn hamming_examples() {
        let d = hamming_distance_matrix(2, &BIN).unwrap();
        assert_eq!(
            rows(&d),
            [
                [0.0, 1.0, 1.0, 2.0],
                [1.0, 0.0, 2.0, 1.0],
                [1.0, 2.0, 0.0, 1.0],
                [2.0, 1.0, 1.0, 0.0]
            ]
        );
        for n in 1..=6 {
            let d = hamming_distance_matrix(n, &BIN).unwrap();
            let size = d.dim();
            assert!((0..size).all(|i| d.entries[(i, size - 1 - i)] == n as f64));
            assert_eq!(d.trace(), 0.0);
            d.validate(0.0).unwrap();
            let g = hamming_distance_matrix(n, &GRAY).unwrap();
            assert!((0..size).all(|i| g.entries[(i, size - 1 - i)] == 1.0));
            assert_eq!(g.trace(), 0.0);
        }
    }

    #[test]
    fn hamming_triangle_inequality() {
        for n in 1..=4 {
            let d = hamming_distance_matrix(n, &GRAY).unwrap().entries;
            let s = d.nrows();
            for l in 0..s {
                for m in 0..s {
                    for k in 0..s {
                        assert!(d[(l, m)] <= d[(l, k)] + d[(k, m)]);
                    }
                }
            }
        }
    }

    #[test]
    fn centrosymmetric_distance_matrices() {
        for n in 1..=8 {
            for o in [&BIN, &GRAY] {
                let d = hamming_distance_matrix(n, o).unwrap();
                assert!(d.is_centrosymmetric(0.0), "n = {n}, {o}");
            }
        }
    }

    #[test]
    fn custom_ordering_breaks_centrosymmetry_but_not_symmetry() {
        let d = hamming_distance_matrix(2, &OrderingScheme::Custom(vec![0, 1, 3, 2])).unwrap();
        assert!(d.is_symmetric(0.0));
        let g = hamming_distance_matrix(2, &GRAY).unwrap();
        assert_eq!(d.entries, g.entries);
        let swapped =
            hamming_distance_matrix(3, &OrderingScheme::Custom(vec![0, 1, 2, 3, 4, 5, 7, 6]))
                .unwrap();
        assert!(swapped.is_symmetric(0.0));
        assert!(!swapped.is_centrosymmetric(0.0));
    }

    #[test]
    fn tricube_laplacian_is_n_identity_minus_adjacency() {
        for n in 1..=6 {
            for o in [&BIN, &GRAY] {
                let l = tricube_laplacian(n, o).unwrap();
                let e = ncube_adjacency(n, o).unwrap();
                let expect = DMatrix::identity(l.dim(), l.dim()) * n as f64 - &e.entries;
                assert_eq!(l.entries, expect);
                assert_eq!(l.trace(), (n << n) as f64);
                assert!(l.row_sums().iter().all(|&s| s == 0.0));
                assert!(l.entries.iter().all(|x| x.fract() == 0.0));
                assert!(l.is_bisymmetric(0.0));
            }
        }
    }

    #[test]
    fn regular_tricube_degree_is_triangular() {
        for n in 2..=7 {
            let a = regular_tricube_adjacency(n, &BIN).unwrap();
            assert_eq!(a.regular_degree(), Some(regular_tricube_degree(n)));
        }
        assert!(regular_tricube_adjacency(1, &BIN).is_err());
    }

    #[test]
    fn pow_cube_examples() {
        let a = pow_cube_adjacency(1, &TNAT).unwrap();
        assert_eq!(
            rows(&a),
            [[0.0, 1.0, 0.0], [1.0, 0.0, 1.0], [0.0, 1.0, 0.0]]
        );
        let a3 = pow_cube_adjacency(3, &TNAT).unwrap();
        assert_eq!(a3.entries.row(13).sum(), 6.0);
        a3.validate(0.0).unwrap();
        // -1 <-> +1 never joined
        assert_eq!(a.entries[(0, 2)], 0.0);
    }

    // Cartesian product of the 3-vertex path, built independently with
    // Kronecker sums.
    fn path_product(n: usize) -> DMatrix<f64> {
        let p = DMatrix::from_row_slice(3, 3, &[0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0]);
        let mut acc = p.clone();
        for _ in 1..n {
            let size = acc.nrows();
            // new axis is the most significant digit
            acc = p.kronecker(&DMatrix::identity(size, size))
                + DMatrix::<f64>::identity(3, 3).kronecker(&acc);
        }
        acc
    }

    #[test]
    fn pow_cube_is_cartesian_power_of_path() {
        for n in 1..=5 {
            assert_eq!(pow_cube_adjacency(n, &TNAT).unwrap().entries, path_product(n));
        }
    }

    #[test]
    fn pow_cube_is_bipartite() {
        for n in 1..=7 {
            let a = pow_cube_adjacency(n, &TNAT).unwrap();
            let parity: Vec<i32> = (0..a.dim())
                .map(|m| {
                    ternary_vertex(n, m)
                        .unwrap()
                        .coords
                        .iter()
                        .map(|&c| c as i32)
                        .sum::<i32>()
                        .rem_euclid(2)
                })
                .collect();
            for i in 0..a.dim() {
                for j in 0..a.dim() {
                    if a.entries[(i, j)] != 0.0 {
                        assert_ne!(parity[i], parity[j]);
                    }
                }
            }
        }
    }

    #[test]
    fn pow_tricube_examples() {
        let l = pow_tricube_laplacian(1, &TNAT).unwrap();
        assert_eq!(
            rows(&l),
            [[1.0, -1.0, 0.0], [-1.0, 2.0, -1.0], [0.0, -1.0, 1.0]]
        );
        for n in 1..=5 {
            let l = pow_tricube_laplacian(n, &TNAT).unwrap();
            let diag: Vec<f64> = l.entries.diagonal().iter().copied().collect();
            let lo = diag.iter().cloned().fold(f64::INFINITY, f64::min);
            let hi = diag.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            assert_eq!((lo, hi), (n as f64, 2.0 * n as f64));
            assert!(l.row_sums().iter().all(|&s| s == 0.0));
            assert_eq!(l.dim() % 2, 1);
        }
    }

    #[test]
    fn bisymmetric_laplacians() {
        for n in 1..=6 {
            assert!(tricube_laplacian(n, &BIN).unwrap().is_bisymmetric(0.0));
            assert!(pow_tricube_laplacian(n, &TNAT).unwrap().is_bisymmetric(0.0));
            assert!(pow_tricube_laplacian(n, &TGRAY).unwrap().is_bisymmetric(0.0));
        }
    }

    #[test]
    fn pow_hamming_examples() {
        let d = pow_hamming_matrix(3, &TNAT).unwrap();
        assert_eq!(d.entries[(0, 26)], 0.0);
        let d1 = pow_hamming_matrix(1, &TNAT).unwrap();
        assert_eq!(
            rows(&d1),
            [[0.0, 1.0, 0.0], [1.0, 0.0, 1.0], [0.0, 1.0, 0.0]]
        );
        assert_eq!(
            pow_hamming_matrix(2, &TNAT).unwrap().entries,
            pow_hamming_matrix(2, &TGRAY).unwrap().entries
        );
    }

    #[test]
    fn face_counts() {
        assert_eq!(face_count(3, 0).unwrap(), 27);
        assert_eq!(face_count(3, 3).unwrap(), 8);
        assert_eq!(face_total(3).unwrap(), 125);
        assert!(face_count(3, 4).is_err());
        for n in 0..=10 {
            assert_eq!(face_total(n).unwrap(), 5u128.pow(n as u32));
        }
    }

    #[test]
    fn eulerian_examples() {
        let c3 = eulerian_circuit(3).unwrap().unwrap();
        assert_eq!(c3.len(), 25);
        assert!(is_eulerian_circuit(3, &c3));
        let c4 = eulerian_circuit(4).unwrap().unwrap();
        assert_eq!(c4.len(), 81);
        assert!(is_eulerian_circuit(4, &c4));
        assert!(eulerian_circuit(5).unwrap().is_none());
        assert!(eulerian_circuit(6).unwrap().is_none());
        for n in [7, 8] {
            let c = eulerian_circuit(n).unwrap().unwrap();
            assert!(is_eulerian_circuit(n, &c));
        }
    }

    #[test]
    fn gray_circuit_listed_for_three_cube() {
        // 1-based Gray positions of a 24-edge circuit on the [3]-cube.
        let walk: Vec<usize> = "3627128768158465431423573"
            .chars()
            .map(|c| crate::bitspace::gray_code(c.to_digit(10).unwrap() as usize - 1))
            .collect();
        assert!(is_eulerian_circuit(3, &walk));
        let mut repeated = walk.clone();
        repeated[2] = repeated[0];
        assert!(!is_eulerian_circuit(3, &repeated));
        assert!(!is_eulerian_circuit(3, &walk[..24]));
    }
}
