//! Cotan Laplacians assembled from triangle geometry.
//!
//! Edge weights come from the angles opposite each edge:
//! `w_ij = 1/2 (cot a + cot b)`, or `1/2 cot a` on a boundary edge. The
//! triangulated n-cube has cube edges lying in `n - 1` faces at once; there
//! every opposite angle is `pi/4` and the weight is the cotangent of that
//! common angle (see [`cotan_weight`]).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use nalgebra::{DMatrix, DVector};

use crate::bitspace::OrderingScheme;
use crate::cubegraphs::{Family, GraphMatrix, MatrixKind};
use crate::error::{Error, Result};

/// Angles closer than this are treated as equal when several triangles share an edge.
pub const ANGLE_TOL: f64 = 1e-12;
/// Largest n for the geometric cube construction.
pub const MAX_GEOMETRIC_DIM: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignConvention {
    /// Positive diagonal, nonpositive off-diagonal (positive semidefinite).
    OLP,
    /// The negation of `OLP`.
    OLN,
}

impl SignConvention {
    fn factor(self) -> f64 {
        match self {
            SignConvention::OLP => 1.0,
            SignConvention::OLN => -1.0,
        }
    }
}

impl FromStr for SignConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "olp" => Ok(SignConvention::OLP),
            "oln" => Ok(SignConvention::OLN),
            _ => Err(Error::Parse(format!("unknown sign convention '{s}'"))),
        }
    }
}

/// Which diagonal each square 2-face of the cube receives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Arrangement {
    /// Diagonal between the two even-weight corners of every face.
    Even,
    /// Diagonal between the two odd-weight corners.
    Odd,
    /// Both diagonals: the Even and Odd triangulations overlaid.
    Both,
}

impl Arrangement {
    pub const ALL: [Arrangement; 3] = [Arrangement::Even, Arrangement::Odd, Arrangement::Both];

    pub fn name(&self) -> &'static str {
        match self {
            Arrangement::Even => "even",
            Arrangement::Odd => "odd",
            Arrangement::Both => "both",
        }
    }
}

impl fmt::Display for Arrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Arrangement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Arrangement::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown arrangement '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TriMesh {
    pub vertices: Vec<Vec<f64>>,
    pub triangles: Vec<[usize; 3]>,
}

fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl TriMesh {
    pub fn new(vertices: Vec<Vec<f64>>, triangles: Vec<[usize; 3]>) -> Result<Self> {
        let mesh = TriMesh { vertices, triangles };
        mesh.validate()?;
        Ok(mesh)
    }

    pub fn validate(&self) -> Result<()> {
        let dim = self.vertices.first().map_or(0, Vec::len);
        if let Some(v) = self.vertices.iter().find(|v| v.len() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, actual: v.len() });
        }
        for (t, tri) in self.triangles.iter().enumerate() {
            if let Some(&i) = tri.iter().find(|&&i| i >= self.vertices.len()) {
                return Err(Error::invalid(format!("triangle {t} references vertex {i}")));
            }
            // Gram determinant of the two edge vectors is (2 area)^2.
            let u = sub(&self.vertices[tri[1]], &self.vertices[tri[0]]);
            let v = sub(&self.vertices[tri[2]], &self.vertices[tri[0]]);
            let gram = dot(&u, &u) * dot(&v, &v) - dot(&u, &v).powi(2);
            if gram <= 1e-24 * dot(&u, &u).max(1.0) * dot(&v, &v).max(1.0) {
                return Err(Error::invalid(format!("triangle {t} is degenerate")));
            }
        }
        Ok(())
    }

    /// Interior angle at corner `at` of triangle `tri`.
    pub fn angle(&self, tri: &[usize; 3], at: usize) -> f64 {
        let c = &self.vertices[tri[at]];
        let u = sub(&self.vertices[tri[(at + 1) % 3]], c);
        let v = sub(&self.vertices[tri[(at + 2) % 3]], c);
        let cos = dot(&u, &v) / (dot(&u, &u) * dot(&v, &v)).sqrt();
        cos.clamp(-1.0, 1.0).acos()
    }

    /// Opposite angles collected per undirected edge `(i, j)`, `i < j`.
    pub fn edge_angles(&self) -> BTreeMap<(usize, usize), Vec<f64>> {
        let mut map: BTreeMap<(usize, usize), Vec<f64>> = BTreeMap::new();
        for tri in &self.triangles {
            for at in 0..3 {
                let (a, b) = (tri[(at + 1) % 3], tri[(at + 2) % 3]);
                map.entry((a.min(b), a.max(b)))
                    .or_default()
                    .push(self.angle(tri, at));
            }
        }
        map
    }

    /// Plain-text form: one vertex per line, a blank line, one triangle per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in &self.vertices {
            let row: Vec<String> = v.iter().map(|x| format!("{x}")).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out.push('\n');
        for t in &self.triangles {
            out.push_str(&format!("{} {} {}\n", t[0], t[1], t[2]));
        }
        out
    }
}

impl FromStr for TriMesh {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines().enumerate();
        let mut vertices = Vec::new();
        for (no, line) in lines.by_ref() {
            if line.trim().is_empty() {
                break;
            }
            let v = line
                .split_whitespace()
                .map(|tok| tok.parse::<f64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::Parse(format!("line {}: {e}", no + 1)))?;
            vertices.push(v);
        }
        let mut triangles = Vec::new();
        for (no, line) in lines {
            if line.trim().is_empty() {
                continue;
            }
            let idx = line
                .split_whitespace()
                .map(|tok| tok.parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::Parse(format!("line {}: {e}", no + 1)))?;
            let tri: [usize; 3] = idx
                .try_into()
                .map_err(|_| Error::Parse(format!("line {}: expected 3 indices", no + 1)))?;
            triangles.push(tri);
        }
        TriMesh::new(vertices, triangles)
    }
}

/// Cotan weight of an edge from its opposite angles.
///
/// One or two angles: `1/2 sum cot`. More than two (a cube edge shared by
/// several faces): the angles must coincide and the weight is the cotangent
/// of the common angle, i.e. the two-triangle value of any representative pair.
pub fn cotan_weight(alphas: &[f64], sign: SignConvention) -> Result<f64> {
    if alphas.is_empty() {
        return Err(Error::invalid("no opposite angles"));
    }
    if let Some(a) = alphas.iter().find(|a| !(**a > 0.0 && **a < std::f64::consts::PI)) {
        return Err(Error::invalid(format!("angle {a} outside (0, pi)")));
    }
    let cot = |a: f64| a.cos() / a.sin();
    let w = if alphas.len() <= 2 {
        0.5 * alphas.iter().map(|&a| cot(a)).sum::<f64>()
    } else {
        let first = alphas[0];
        if alphas.iter().any(|a| (a - first).abs() > ANGLE_TOL) {
            return Err(Error::AmbiguousWeight(format!(
                "{} triangles share an edge with unequal opposite angles {alphas:?}",
                alphas.len()
            )));
        }
        cot(first)
    };
    Ok(sign.factor() * w)
}

fn assemble(size: usize, weights: &BTreeMap<(usize, usize), f64>) -> DMatrix<f64> {
    let mut m = DMatrix::zeros(size, size);
    for (&(i, j), &w) in weights {
        m[(i, j)] -= w;
        m[(j, i)] -= w;
        m[(i, i)] += w;
        m[(j, j)] += w;
    }
    m
}

fn mesh_weights(mesh: &TriMesh, sign: SignConvention, strict: bool) -> Result<BTreeMap<(usize, usize), f64>> {
    mesh.edge_angles()
        .into_iter()
        .map(|(edge, angles)| {
            if strict && angles.len() > 2 {
                return Err(Error::Structure(format!(
                    "a manifold mesh: edge {edge:?} has {} incident triangles",
                    angles.len()
                )));
            }
            Ok((edge, cotan_weight(&angles, sign)?))
        })
        .collect()
}

/// Weakly defined discrete Laplace matrix of a mesh with at most two
/// triangles per edge.
pub fn build_wdm(mesh: &TriMesh, sign: SignConvention) -> Result<GraphMatrix> {
    mesh.validate()?;
    let weights = mesh_weights(mesh, sign, true)?;
    Ok(GraphMatrix {
        family: Family::Mesh,
        kind: MatrixKind::Laplacian,
        n: mesh.vertices.first().map_or(0, Vec::len),
        ordering: OrderingScheme::Binary,
        entries: assemble(mesh.vertices.len(), &weights),
    })
}

fn check_cube_dim(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::invalid("a cube needs n >= 2 to have triangulated 2-faces"));
    }
    if n > MAX_GEOMETRIC_DIM {
        return Err(Error::invalid(format!("n = {n} exceeds {MAX_GEOMETRIC_DIM}")));
    }
    Ok(())
}

fn face_triangles(n: usize, layer: Arrangement, out: &mut Vec<[usize; 3]>) {
    for i in 0..n {
        for j in (i + 1)..n {
            let (bi, bj) = (1usize << i, 1usize << j);
            for base in (0..1usize << n).filter(|b| b & (bi | bj) == 0) {
                let corners = [base, base | bi, base | bj, base | bi | bj];
                let even = corners[0].count_ones() % 2 == 0;
                // [base, base+ij] share parity, as do [base+i, base+j]
                let (d, others) = if even == (layer == Arrangement::Even) {
                    ((corners[0], corners[3]), (corners[1], corners[2]))
                } else {
                    ((corners[1], corners[2]), (corners[0], corners[3]))
                };
                out.push([d.0, d.1, others.0]);
                out.push([d.0, d.1, others.1]);
            }
        }
    }
}

/// Unit n-cube with every square 2-face split along its diagonal(s).
/// Vertex `i` sits at the point whose coordinate `k` is bit `k` of `i`.
pub fn cube_face_triangulation(n: usize, arrangement: Arrangement) -> Result<TriMesh> {
    check_cube_dim(n)?;
    let vertices = (0..1usize << n)
        .map(|v| (0..n).map(|k| ((v >> k) & 1) as f64).collect())
        .collect();
    let mut triangles = Vec::new();
    match arrangement {
        Arrangement::Both => {
            face_triangles(n, Arrangement::Even, &mut triangles);
            face_triangles(n, Arrangement::Odd, &mut triangles);
        }
        layer => face_triangles(n, layer, &mut triangles),
    }
    TriMesh::new(vertices, triangles)
}

fn snap_half_integers(m: &mut DMatrix<f64>) {
    for x in m.iter_mut() {
        let snapped = (*x * 2.0).round() / 2.0;
        if (*x - snapped).abs() <= ANGLE_TOL * x.abs().max(1.0) {
            *x = snapped;
        }
    }
}

/// Max absolute entrywise difference.
pub fn max_entry_diff(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
    (a - b).abs().max()
}

fn layer_laplacian(n: usize, layer: Arrangement, sign: SignConvention) -> Result<DMatrix<f64>> {
    let mesh = cube_face_triangulation(n, layer)?;
    let weights = mesh_weights(&mesh, sign, false)?;
    Ok(assemble(mesh.vertices.len(), &weights))
}

/// Cotan Laplacian of the triangulated n-cube computed from geometry, in
/// binary vertex order.
///
/// With `Both`, the Even and Odd triangulations are weighted separately and
/// must agree entrywise; pooling all four triangles of a face would count
/// every boundary edge twice at n = 2.
pub fn build_cube_cotan_geometric(
    n: usize,
    arrangement: Arrangement,
    sign: SignConvention,
) -> Result<GraphMatrix> {
    check_cube_dim(n)?;
    let mut entries = match arrangement {
        Arrangement::Both => {
            let even = layer_laplacian(n, Arrangement::Even, sign)?;
            let odd = layer_laplacian(n, Arrangement::Odd, sign)?;
            let diff = max_entry_diff(&even, &odd);
            if diff > ANGLE_TOL {
                return Err(Error::AmbiguousWeight(format!(
                    "even and odd triangulations disagree by {diff:e}"
                )));
            }
            even
        }
        layer => layer_laplacian(n, layer, sign)?,
    };
    snap_half_integers(&mut entries);
    Ok(GraphMatrix {
        family: Family::TriCube,
        kind: MatrixKind::Laplacian,
        n,
        ordering: OrderingScheme::Binary,
        entries,
    })
}

/// `1/2 u^T L u`.
pub fn dirichlet_energy(l: &GraphMatrix, u: &[f64]) -> Result<f64> {
    if u.len() != l.dim() {
        return Err(Error::DimensionMismatch { expected: l.dim(), actual: u.len() });
    }
    let u = DVector::from_column_slice(u);
    Ok(0.5 * u.dot(&(&l.entries * &u)))
}

/// An interior edge is Delaunay iff its opposite angles sum to at most pi.
pub fn is_delaunay_edge(alpha: f64, beta: f64) -> bool {
    alpha + beta <= std::f64::consts::PI + ANGLE_TOL
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubegraphs::tricube_laplacian;
    use crate::spectra::eig_sym;
    use std::f64::consts::PI;

    fn approx(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-12
    }

    fn unit_square() -> TriMesh {
        TriMesh::new(
            vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0], vec![1.0, 1.0]],
            vec![[0, 3, 1], [0, 3, 2]],
        )
        .unwrap()
    }

    #[test]
    fn weight_examples() {
        assert!(approx(cotan_weight(&[PI / 4.0, PI / 4.0], SignConvention::OLP).unwrap(), 1.0));
        assert!(approx(cotan_weight(&[PI / 2.0, PI / 2.0], SignConvention::OLP).unwrap(), 0.0));
        assert!(approx(cotan_weight(&[PI / 4.0], SignConvention::OLP).unwrap(), 0.5));
        assert!(approx(cotan_weight(&[PI / 4.0], SignConvention::OLN).unwrap(), -0.5));
        assert!(approx(cotan_weight(&[PI / 4.0; 5], SignConvention::OLP).unwrap(), 1.0));
        assert!(matches!(
            cotan_weight(&[PI / 4.0, PI / 4.0, PI / 3.0], SignConvention::OLP),
            Err(Error::AmbiguousWeight(_))
        ));
        assert!(cotan_weight(&[], SignConvention::OLP).is_err());
        assert!(cotan_weight(&[PI], SignConvention::OLP).is_err());
    }

    #[test]
    fn single_triangle_rows_vanish() {
        let mesh = TriMesh::new(
            vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0]],
            vec![[0, 1, 2]],
        )
        .unwrap();
        let l = build_wdm(&mesh, SignConvention::OLP).unwrap();
        for s in l.row_sums() {
            assert!(s.abs() < 1e-12);
        }
    }

    #[test]
    fn unit_square_spectrum() {
        let l = build_wdm(&unit_square(), SignConvention::OLP).unwrap();
        let spec = eig_sym(&l, 1e-8).unwrap();
        for (got, want) in spec.values.iter().zip([0.0, 1.0, 1.0, 2.0]) {
            assert!((got - want).abs() < 1e-10, "{:?}", spec.values);
        }
        // the shared diagonal is flat: opposite angles pi/2, pi/2
        assert!(l.entries[(0, 3)].abs() < 1e-12);
    }

    #[test]
    fn wdm_rejects_nonmanifold_edge() {
        // at n = 3 each cube edge lies in two faces; at n = 4 in three
        let mesh = cube_face_triangulation(3, Arrangement::Even).unwrap();
        assert!(build_wdm(&mesh, SignConvention::OLP).is_ok());
        let mesh = cube_face_triangulation(4, Arrangement::Even).unwrap();
        assert!(matches!(build_wdm(&mesh, SignConvention::OLP), Err(Error::Structure(_))));
    }

    #[test]
    fn triangle_counts() {
        assert_eq!(cube_face_triangulation(2, Arrangement::Even).unwrap().triangles.len(), 2);
        assert_eq!(cube_face_triangulation(3, Arrangement::Even).unwrap().triangles.len(), 12);
        assert_eq!(cube_face_triangulation(3, Arrangement::Both).unwrap().triangles.len(), 24);
        assert!(cube_face_triangulation(1, Arrangement::Even).is_err());
    }

    #[test]
    fn even_diagonals_join_even_corners() {
        let mesh = cube_face_triangulation(3, Arrangement::Even).unwrap();
        let angles = mesh.edge_angles();
        for &(a, b) in angles.keys() {
            let d = (a ^ b).count_ones();
            assert!(d == 1 || d == 2);
            if d == 2 {
                assert_eq!(a.count_ones() % 2, 0);
                assert_eq!(angles[&(a, b)].len(), 2);
            } else {
                assert_eq!(angles[&(a, b)].len(), 2); // n - 1 faces
            }
        }
        let odd = cube_face_triangulation(3, Arrangement::Odd).unwrap();
        assert!(odd.edge_angles().keys().all(|&(a, b)| (a ^ b).count_ones() == 1 || a.count_ones() % 2 == 1));
    }

    #[test]
    fn theorem_one_all_arrangements() {
        for n in 3..=6 {
            let combinatorial = tricube_laplacian(n, &OrderingScheme::Binary).unwrap();
            for arr in Arrangement::ALL {
                let l = build_cube_cotan_geometric(n, arr, SignConvention::OLP).unwrap();
                assert!(max_entry_diff(&l.entries, &combinatorial.entries) <= 1e-12, "n={n} {arr}");
            }
        }
    }

    #[test]
    fn pooled_both_mesh_agrees_for_n_ge_3() {
        // every cube edge then carries 2(n-1) angles of pi/4
        for n in 3..=5 {
            let mesh = cube_face_triangulation(n, Arrangement::Both).unwrap();
            let pooled = assemble(mesh.vertices.len(), &mesh_weights(&mesh, SignConvention::OLP, false).unwrap());
            let l = tricube_laplacian(n, &OrderingScheme::Binary).unwrap();
            assert!(max_entry_diff(&pooled, &l.entries) <= 1e-12);
        }
    }

    #[test]
    fn boundary_square_spectrum() {
        for arr in Arrangement::ALL {
            let l = build_cube_cotan_geometric(2, arr, SignConvention::OLP).unwrap();
            let spec = eig_sym(&l, 1e-8).unwrap();
            for (got, want) in spec.values.iter().zip([0.0, 1.0, 1.0, 2.0]) {
                assert!((got - want).abs() < 1e-10, "{arr}: {:?}", spec.values);
            }
        }
    }

    #[test]
    fn sign_conventions_semidefinite() {
        for n in 2..=5 {
            let p = build_cube_cotan_geometric(n, Arrangement::Even, SignConvention::OLP).unwrap();
            let m = build_cube_cotan_geometric(n, Arrangement::Even, SignConvention::OLN).unwrap();
            assert_eq!(p.entries, -&m.entries);
            let sp = eig_sym(&p, 1e-8).unwrap();
            let sm = eig_sym(&m, 1e-8).unwrap();
            assert!(sp.min().unwrap() > -1e-10);
            assert!(sm.max().unwrap() < 1e-10);
            // kernel is exactly the constants
            assert_eq!(sp.values.iter().filter(|v| v.abs() < 1e-9).count(), 1);
            for i in 0..p.dim() {
                let off: f64 = (0..p.dim()).filter(|&j| j != i).map(|j| -p.entries[(i, j)]).sum();
                assert!((p.entries[(i, i)] - off).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn energy_examples() {
        let l = tricube_laplacian(3, &OrderingScheme::Binary).unwrap();
        assert!(approx(dirichlet_energy(&l, &[2.5; 8]).unwrap(), 0.0));
        let parity: Vec<f64> = (0..8u32).map(|i| if i.count_ones() % 2 == 1 { 1.0 } else { -1.0 }).collect();
        assert!(approx(dirichlet_energy(&l, &parity).unwrap(), 24.0));
        assert!(dirichlet_energy(&l, &[1.0; 3]).is_err());

        // path 0 - 1 - 2 with weights 1/2 and 3/2
        let mut m = DMatrix::zeros(3, 3);
        for (i, j, w) in [(0, 1, 0.5), (1, 2, 1.5)] {
            m[(i, j)] -= w;
            m[(j, i)] -= w;
            m[(i, i)] += w;
            m[(j, j)] += w;
        }
        let path = GraphMatrix { entries: m, ..l.clone() };
        let u = [1.0, -2.0, 0.5];
        let hand = 0.5 * (0.5 * 9.0 + 1.5 * 6.25);
        assert!(approx(dirichlet_energy(&path, &u).unwrap(), hand));
    }

    #[test]
    fn delaunay_examples() {
        assert!(is_delaunay_edge(PI / 2.0, PI / 2.0));
        assert!(is_delaunay_edge(PI / 3.0, PI / 3.0));
        assert!(!is_delaunay_edge(2.0 * PI / 3.0, 2.0 * PI / 3.0));
    }

    #[test]
    fn text_round_trip() {
        let mesh = cube_face_triangulation(3, Arrangement::Odd).unwrap();
        let back: TriMesh = mesh.to_text().parse().unwrap();
        assert_eq!(back, mesh);
        assert!("0 0\n1 0\n\n0 1 5\n".parse::<TriMesh>().is_err());
        assert!("0 0\n1 0\n2 0\n\n0 1 2\n".parse::<TriMesh>().is_err());
        assert!("0 0\n1 0\n\n0 1\n".parse::<TriMesh>().is_err());
    }
}
