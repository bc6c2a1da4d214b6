//! Claim-by-claim verification report.
//!
//! Every claim is checked per dimension `n` against an oracle that does not
//! share code with the construction it checks: brute-force enumeration,
//! binomial counts, pinned values or an independent identity. The report is
//! deterministic (no timestamps, fixed claim and `n` order) so two runs with
//! the same arguments serialize to identical bytes.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::bitspace::OrderingScheme;
use crate::cubegraphs::{
    eulerian_circuit, hamming_distance_matrix, is_eulerian_circuit, pow_cube_adjacency, pow_hamming_matrix,
    pow_tricube_laplacian, regular_tricube_adjacency, regular_tricube_degree, tricube_laplacian, GraphMatrix,
};
use crate::error::{Error, Result};
use crate::harmonic::{self, parity_pattern};
use crate::meshcotan::{build_cube_cotan_geometric, max_entry_diff, Arrangement, SignConvention};
use crate::oeis;
use crate::predicates::{binomial, caf, enumeration, n_related, n_shared, Rational};
use crate::sequences::{self, exact_sqrt, fine_structure, pow_hamming_extremes, SequenceId};
use crate::spectra::{
    centro_block_diagonalize, classify_lattice, eig_identity_check, eig_sym, ramanujan_check, spectral_stats,
    symmetric_eigenvalues, Spectrum, DEFAULT_CLUSTER_TOL,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Claim {
    Theorem1,
    Theorem2,
    Theorem3,
    Theorem4,
    Theorem5,
    Theorem6,
    Theorem7,
    PropertiesL,
    PropertiesD,
    Sequences,
    Extremes,
    Euler,
    Poisson,
    Caf,
    Identity,
}

impl Claim {
    pub const ALL: [Claim; 15] = [
        Claim::Theorem1,
        Claim::Theorem2,
        Claim::Theorem3,
        Claim::Theorem4,
        Claim::Theorem5,
        Claim::Theorem6,
        Claim::Theorem7,
        Claim::PropertiesL,
        Claim::PropertiesD,
        Claim::Sequences,
        Claim::Extremes,
        Claim::Euler,
        Claim::Poisson,
        Claim::Caf,
        Claim::Identity,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Claim::Theorem1 => "theorem1",
            Claim::Theorem2 => "theorem2",
            Claim::Theorem3 => "theorem3",
            Claim::Theorem4 => "theorem4",
            Claim::Theorem5 => "theorem5",
            Claim::Theorem6 => "theorem6",
            Claim::Theorem7 => "theorem7",
            Claim::PropertiesL => "properties-L",
            Claim::PropertiesD => "properties-D",
            Claim::Sequences => "sequences",
            Claim::Extremes => "extremes",
            Claim::Euler => "euler",
            Claim::Poisson => "poisson",
            Claim::Caf => "caf",
            Claim::Identity => "identity",
        }
    }

    /// Every `n` the claim can be checked at.
    pub fn domain(&self) -> RangeInclusive<usize> {
        match self {
            Claim::Theorem1 => 2..=8,
            Claim::Theorem2 => 1..=10,
            Claim::Theorem3 => 2..=10,
            Claim::Theorem4 => 0..=8,
            Claim::Theorem5 | Claim::Theorem6 => 1..=7,
            Claim::Theorem7 => 1..=8,
            Claim::PropertiesL => 1..=8,
            Claim::PropertiesD => 1..=10,
            Claim::Sequences => SEQUENCE_TERMS..=SEQUENCE_TERMS,
            Claim::Extremes => 2..=7,
            Claim::Euler => 2..=10,
            Claim::Poisson => 1..=4,
            Claim::Caf => 1..=6,
            Claim::Identity => 2..=4,
        }
    }

    /// Range used when none is requested.
    pub fn default_range(&self) -> RangeInclusive<usize> {
        match self {
            Claim::Theorem1 => 2..=6,
            Claim::Theorem2 => 2..=8,
            Claim::Theorem3 => 2..=10,
            Claim::Theorem4 => 0..=5,
            Claim::Theorem5 | Claim::Theorem6 => 1..=7,
            Claim::Theorem7 => 1..=6,
            Claim::PropertiesL => 1..=6,
            Claim::PropertiesD => 1..=8,
            Claim::Sequences => SEQUENCE_TERMS..=SEQUENCE_TERMS,
            Claim::Extremes => 2..=6,
            Claim::Euler => 2..=6,
            Claim::Poisson => 1..=4,
            Claim::Caf => 1..=5,
            Claim::Identity => 2..=3,
        }
    }

    pub fn parse_list(s: &str) -> Result<Vec<Claim>> {
        let mut out = Vec::new();
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            if tok == "all" {
                out.extend(Claim::ALL);
            } else {
                out.push(tok.parse()?);
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Claim::ALL
            .into_iter()
            .find(|c| c.id().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownClaim(s.to_string()))
    }
}

impl Serialize for Claim {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

/// Number of terms compared per generator in the `sequences` claim.
pub const SEQUENCE_TERMS: usize = 15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// A known disagreement with the published statement; never a failure.
    DiscrepancyNoted,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::DiscrepancyNoted => "discrepancy-noted",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Entry {
    pub claim: Claim,
    pub n: usize,
    pub status: Status,
    pub max_abs_err: f64,
    pub details: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub discrepancy_noted: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub entries: Vec<Entry>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    pub fn get(&self, claim: Claim, n: usize) -> Option<&Entry> {
        self.entries.iter().find(|e| e.claim == claim && e.n == n)
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Allowed distance of an eigenvalue from its exact value.
    pub tol: f64,
    pub offline: bool,
    pub cache_dir: PathBuf,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            tol: 1e-8,
            offline: true,
            cache_dir: oeis::default_cache_dir(),
        }
    }
}

/// Runs each claim over `range` intersected with the claim's domain, or over
/// its default range when `range` is `None`. Errors only on an empty plan;
/// a check that errors is recorded as a failure.
pub fn run(claims: &[Claim], range: Option<RangeInclusive<usize>>, opts: &VerifyOptions) -> Result<VerificationReport> {
    let mut claims = claims.to_vec();
    claims.sort();
    claims.dedup();
    let mut entries = Vec::new();
    for claim in claims {
        let dom = claim.domain();
        let wanted = range.clone().unwrap_or_else(|| claim.default_range());
        let lo = *wanted.start().max(dom.start());
        let hi = *wanted.end().min(dom.end());
        for n in lo..=hi {
            entries.push(check(claim, n, opts));
        }
    }
    if entries.is_empty() {
        return Err(Error::invalid("no (claim, n) pair falls inside the claims' domains"));
    }
    let count = |s| entries.iter().filter(|e| e.status == s).count();
    let summary = Summary {
        pass: count(Status::Pass),
        fail: count(Status::Fail),
        discrepancy_noted: count(Status::DiscrepancyNoted),
    };
    Ok(VerificationReport { entries, summary })
}

/// One `(claim, n)` check.
pub fn check(claim: Claim, n: usize, opts: &VerifyOptions) -> Entry {
    let outcome = match claim {
        Claim::Theorem1 => theorem1(n),
        Claim::Theorem2 => theorem2(n, opts.tol),
        Claim::Theorem3 => theorem3(n),
        Claim::Theorem4 => theorem4(n),
        Claim::Theorem5 => theorem5(n, opts.tol),
        Claim::Theorem6 => theorem6(n, opts.tol),
        Claim::Theorem7 => theorem7(n),
        Claim::PropertiesL => properties_l(n, opts.tol),
        Claim::PropertiesD => properties_d(n, opts.tol),
        Claim::Sequences => sequence_suite(n, opts),
        Claim::Extremes => extremes(n),
        Claim::Euler => euler(n),
        Claim::Poisson => poisson(n),
        Claim::Caf => caf_claim(n),
        Claim::Identity => identity(n),
    };
    match outcome {
        Ok(o) => Entry { claim, n, status: o.status, max_abs_err: o.err, details: o.details },
        Err(e) => Entry { claim, n, status: Status::Fail, max_abs_err: 0.0, details: format!("error: {e}") },
    }
}

struct Outcome {
    status: Status,
    err: f64,
    details: String,
}

/// Collects named sub-checks; the entry passes iff all of them hold.
#[derive(Default)]
struct Checks {
    failed: Vec<String>,
    notes: Vec<String>,
    err: f64,
}

impl Checks {
    fn expect(&mut self, ok: bool, what: impl Into<String>) {
        let what = what.into();
        if !ok {
            self.failed.push(what);
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn err(&mut self, e: f64) {
        // NaN would not serialize; keep it visible as a failure instead
        if e.is_nan() {
            self.failed.push("NaN error".into());
        } else {
            self.err = self.err.max(e);
        }
    }

    fn finish(self) -> Outcome {
        let status = if self.failed.is_empty() { Status::Pass } else { Status::Fail };
        let mut parts = Vec::new();
        if !self.failed.is_empty() {
            parts.push(format!("FAILED: {}", self.failed.join("; ")));
        }
        parts.extend(self.notes);
        Outcome { status, err: self.err, details: parts.join("; ") }
    }
}

fn fmt_map(m: &BTreeMap<i64, usize>) -> String {
    let items: Vec<String> = m.iter().map(|(k, v)| format!("{k}:{v}")).collect();
    format!("{{{}}}", items.join(","))
}

/// Largest distance from an eigenvalue to the nearest multiple of `unit`.
fn lattice_err(spec: &Spectrum, unit: f64) -> f64 {
    spec.values
        .iter()
        .map(|v| (v - (v / unit).round() * unit).abs())
        .fold(0.0, f64::max)
}

/// Compares a spectrum with an expected multiset on the lattice `unit * Z`.
fn lattice_check(c: &mut Checks, spec: &Spectrum, unit: f64, tol: f64, expected: &BTreeMap<i64, usize>) {
    let err = lattice_err(spec, unit);
    c.err(err);
    c.expect(err <= tol, format!("eigenvalue off lattice by {err:e}"));
    match classify_lattice(spec, unit, DEFAULT_CLUSTER_TOL) {
        Some(got) => {
            c.expect(&got == expected, format!("multiplicities {} != expected {}", fmt_map(&got), fmt_map(expected)));
            c.note(format!("spectrum {}", fmt_map(&got)));
        }
        None => c.expect(false, "spectrum does not cluster on the lattice"),
    }
}

fn theorem1(n: usize) -> Result<Outcome> {
    let mut c = Checks::default();
    let layers: Vec<GraphMatrix> = Arrangement::ALL
        .iter()
        .map(|&a| build_cube_cotan_geometric(n, a, SignConvention::OLP))
        .collect::<Result<_>>()?;
    for (a, m) in Arrangement::ALL.iter().zip(&layers).skip(1) {
        let d = max_entry_diff(&layers[0].entries, &m.entries);
        c.err(d);
        c.expect(d <= 1e-12, format!("{} differs from even by {d:e}", a.name()));
    }
    if n == 2 {
        // a single square: boundary edges carry half weight
        let values = symmetric_eigenvalues(&layers[0].entries)?;
        let err = values
            .iter()
            .zip([0.0, 1.0, 1.0, 2.0])
            .map(|(v, e)| (v - e).abs())
            .fold(0.0, f64::max);
        c.err(err);
        c.expect(err <= 1e-10, format!("square spectrum {values:?} != {{0,1,1,2}}"));
        c.note("square spectrum {0,1,1,2}");
    } else {
        let combinatorial = tricube_laplacian(n, &OrderingScheme::Binary)?;
        let d = max_entry_diff(&layers[0].entries, &combinatorial.entries);
        c.err(d);
        c.expect(d <= 1e-12, format!("geometric L differs from nI - E by {d:e}"));
        c.note("even = odd = both = nI - E");
    }
    Ok(c.finish())
}

fn theorem2(n: usize, tol: f64) -> Result<Outcome> {
    let mut c = Checks::default();
    let spec = eig_sym(&tricube_laplacian(n, &OrderingScheme::Binary)?, DEFAULT_CLUSTER_TOL)?;
    let expected: BTreeMap<i64, usize> = (0..=n)
        .map(|k| (k as i64, binomial(n as u64, k as u64).try_into().unwrap_or(usize::MAX)))
        .collect();
    lattice_check(&mut c, &spec, 2.0, tol, &expected);
    Ok(c.finish())
}

/// Degree `n(n+1)/2` regular tricube: Ramanujan iff `n < 6`, and the
/// largest nontrivial eigenvalue magnitude is `|n(n-3)/2|`, attained by
/// `n(n-3)/2` itself.
fn theorem3(n: usize) -> Result<Outcome> {
    let mut c = Checks::default();
    let adj = regular_tricube_adjacency(n, &OrderingScheme::Binary)?;
    let degree = regular_tricube_degree(n);
    let rep = ramanujan_check(&adj, degree)?;
    c.expect(rep.is_ramanujan == (n < 6), format!("is_ramanujan = {} at n = {n}", rep.is_ramanujan));
    c.note(format!(
        "degree {degree}, max nontrivial {:.6}, bound {:.6}, ramanujan {}",
        rep.max_nontrivial, rep.bound, rep.is_ramanujan
    ));

    let values = symmetric_eigenvalues(&adj.entries)?;
    let formula = (n as f64) * (n as f64 - 3.0) / 2.0;
    let magnitude_err = (rep.max_nontrivial - formula.abs()).abs();
    let attained = values.iter().any(|v| (v - formula).abs() <= 1e-8);
    let formula_ok = magnitude_err <= 1e-8 && attained;
    c.err(if formula_ok { magnitude_err } else { 0.0 });
    let mut out = c;
    if formula_ok {
        out.note(format!("n(n-3)/2 = {formula} matches"));
        return Ok(out.finish());
    }
    let msg = format!(
        "formula n(n-3)/2 = {formula} vs oracle max nontrivial magnitude {:.6}",
        rep.max_nontrivial
    );
    if n == 3 && out.failed.is_empty() {
        out.note(msg);
        let mut o = out.finish();
        o.status = Status::DiscrepancyNoted;
        return Ok(o);
    }
    out.expect(false, msg);
    Ok(out.finish())
}

/// `k`-th integral Ramanujan bound and its dimension.
fn theorem4(k: usize) -> Result<Outcome> {
    const BOUNDS: [i64; 5] = [0, 6, 36, 210, 1224];
    const DIMS: [i64; 5] = [1, 4, 25, 148, 865];
    let mut c = Checks::default();
    let bound = sequences::term(SequenceId::A075848, k as u64)?.to_integer();
    let dim = sequences::term(SequenceId::A072221, k as u64)?.to_integer();
    if k < BOUNDS.len() {
        c.expect(bound == BigInt::from(BOUNDS[k]), format!("A075848({k}) = {bound}, expected {}", BOUNDS[k]));
        c.expect(dim == BigInt::from(DIMS[k]), format!("A072221({k}) = {dim}, expected {}", DIMS[k]));
    }
    // 2 sqrt(d - 1) with d = n(n+1)/2 must be the integer bound exactly
    let d_minus_1 = &dim * (&dim + 1) / 2 - 1;
    match exact_sqrt(&d_minus_1) {
        Some(r) => c.expect(&r * 2 == bound, format!("2 sqrt(d-1) = {} != {bound}", &r * 2)),
        None => c.expect(false, format!("d - 1 = {d_minus_1} is not a square")),
    }
    c.note(format!("n = {dim}, 2 sqrt(d-1) = {bound}"));
    Ok(c.finish())
}

/// Multiset of coordinate sums over `alphabet^n`, by direct enumeration.
fn tuple_sum_counts(alphabet: &[i64], n: usize) -> BTreeMap<i64, usize> {
    let mut counts = BTreeMap::new();
    let base = alphabet.len();
    for mut idx in 0..base.pow(n as u32) {
        let mut s = 0;
        for _ in 0..n {
            s += alphabet[idx % base];
            idx /= base;
        }
        *counts.entry(s).or_insert(0) += 1;
    }
    counts
}

fn theorem5(n: usize, tol: f64) -> Result<Outcome> {
    let mut c = Checks::default();
    let spec = eig_sym(&pow_cube_adjacency(n, &OrderingScheme::TernaryNatural)?, DEFAULT_CLUSTER_TOL)?;
    let expected = tuple_sum_counts(&[-1, 0, 1], n);
    let row = sequences::triangle_row(SequenceId::Trinomial, n as u64)?;
    let row_ok = expected.values().zip(&row).all(|(&m, t)| BigInt::from(m) == *t) && row.len() == expected.len();
    c.expect(row_ok, "trinomial row disagrees with enumeration");
    lattice_check(&mut c, &spec, std::f64::consts::SQRT_2, tol, &expected);
    let asym = spec
        .values
        .iter()
        .zip(spec.values.iter().rev())
        .map(|(a, b)| (a + b).abs())
        .fold(0.0, f64::max);
    c.expect(asym <= tol, format!("spectrum not symmetric about 0 ({asym:e})"));
    Ok(c.finish())
}

fn theorem6(n: usize, tol: f64) -> Result<Outcome> {
    let mut c = Checks::default();
    let spec = eig_sym(&pow_tricube_laplacian(n, &OrderingScheme::TernaryNatural)?, DEFAULT_CLUSTER_TOL)?;
    let expected = tuple_sum_counts(&[0, 1, 3], n);
    lattice_check(&mut c, &spec, 1.0, tol, &expected);
    let missing = 3 * n as i64 - 1;
    c.expect(!expected.contains_key(&missing), format!("{missing} present in oracle"));
    let near = spec.values.iter().any(|v| (v - missing as f64).abs() < 0.5);
    c.expect(!near, format!("eigenvalue {missing} present"));
    c.note(format!("3n-1 = {missing} absent"));
    Ok(c.finish())
}

fn theorem7(n: usize) -> Result<Outcome> {
    let mut c = Checks::default();
    let natural = pow_hamming_matrix(n, &OrderingScheme::TernaryNatural)?;
    let gray = pow_hamming_matrix(n, &OrderingScheme::TernaryGray)?;
    let d = max_entry_diff(&natural.entries, &gray.entries);
    c.err(d);
    c.expect(natural.entries == gray.entries, format!("matrices differ by {d}"));
    c.note(format!("{0}x{0} matrices identical", natural.dim()));
    Ok(c.finish())
}

fn centro_check(c: &mut Checks, m: &GraphMatrix, spec: &Spectrum, label: &str) -> Result<()> {
    let blocks = centro_block_diagonalize(m)?;
    c.err(blocks.off_diagonal_norm);
    c.expect(blocks.off_diagonal_norm <= 1e-9, format!("{label} off-diagonal norm {:e}", blocks.off_diagonal_norm));
    let mut joined = symmetric_eigenvalues(&blocks.minus_block)?;
    joined.extend(symmetric_eigenvalues(&blocks.plus_block)?);
    joined.sort_by(f64::total_cmp);
    let d = joined
        .iter()
        .zip(&spec.values)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    c.err(d);
    c.expect(d <= 1e-9, format!("{label} block spectra differ by {d:e}"));
    Ok(())
}

/// Structure of the two Laplacians: bisymmetry, Kirchhoff rows, trace,
/// spectral radius, gaps and the centrosymmetric block split.
fn properties_l(n: usize, tol: f64) -> Result<Outcome> {
    let mut c = Checks::default();
    let l = tricube_laplacian(n, &OrderingScheme::Binary)?;
    let spec = eig_sym(&l, DEFAULT_CLUSTER_TOL)?;
    let st = spectral_stats(&spec)?;
    let nf = n as f64;
    c.expect(l.is_bisymmetric(0.0), "tricube L not bisymmetric");
    c.expect(l.row_sums().iter().all(|&s| s == 0.0), "tricube row sums nonzero");
    c.expect(l.trace() == nf * (1u64 << n) as f64, format!("trace {} != n 2^n", l.trace()));
    c.err((st.radius - 2.0 * nf).abs());
    c.expect((st.radius - 2.0 * nf).abs() <= tol, format!("radius {} != 2n", st.radius));
    let gap = st.eigengap.unwrap_or(f64::NAN);
    c.expect((gap - 2.0).abs() <= tol, format!("eigengap {gap} != 2"));
    c.expect(spec.values[0] >= -tol, "tricube L not semidefinite");
    centro_check(&mut c, &l, &spec, "tricube")?;
    c.note(format!("tricube: radius {}, eigengap {gap:.6}, trace {}", st.radius, l.trace()));

    if n <= 5 {
        let p = pow_tricube_laplacian(n, &OrderingScheme::TernaryNatural)?;
        let spec = eig_sym(&p, DEFAULT_CLUSTER_TOL)?;
        let st = spectral_stats(&spec)?;
        c.expect(p.is_bisymmetric(0.0), "pow-tri L not bisymmetric");
        c.expect(p.row_sums().iter().all(|&s| s == 0.0), "pow-tri row sums nonzero");
        c.err((st.radius - 3.0 * nf).abs());
        c.expect((st.radius - 3.0 * nf).abs() <= tol, format!("pow-tri radius {} != 3n", st.radius));
        let sg = st.spectral_gap.unwrap_or(f64::NAN);
        c.expect((sg - 2.0).abs() <= tol, format!("pow-tri spectral gap {sg} != 2"));
        centro_check(&mut c, &p, &spec, "pow-tri")?;
        c.note(format!("pow-tri: radius {}, spectral gap {sg:.6}", st.radius));
    }
    Ok(c.finish())
}

/// Hamming distance matrix of `{0,1}^n`: `n 2^(n-1)` once, `-2^(n-1)` n
/// times, zero otherwise.
fn properties_d(n: usize, tol: f64) -> Result<Outcome> {
    let mut c = Checks::default();
    let d = hamming_distance_matrix(n, &OrderingScheme::Binary)?;
    let spec = eig_sym(&d, DEFAULT_CLUSTER_TOL)?;
    let half = 1i64 << (n - 1);
    let mut expected = BTreeMap::new();
    expected.insert(n as i64 * half, 1);
    expected.insert(-half, n);
    let zeros = (1usize << n) - n - 1;
    if zeros > 0 {
        expected.insert(0, zeros);
    }
    // eigenvalues grow like n 2^(n-1); scale the tolerance with them
    let scaled = tol * (n as f64 * half as f64).max(1.0);
    lattice_check(&mut c, &spec, 1.0, scaled, &expected);
    c.expect(d.is_bisymmetric(0.0), "distance matrix not bisymmetric");
    Ok(c.finish())
}

fn sequence_suite(count: usize, opts: &VerifyOptions) -> Result<Outcome> {
    let mut c = Checks::default();
    for id in SequenceId::ALL {
        match oeis::check_generator(id, count, opts.offline, &opts.cache_dir) {
            Ok(Some(g)) => {
                let ok = g.comparison.is_match() && g.comparison.overlap >= count;
                let why = match &g.comparison.first_mismatch {
                    Some(m) => format!("index {}: {} != {}", m.index, m.local, m.remote),
                    None => format!("overlap {}", g.comparison.overlap),
                };
                c.expect(ok, format!("{} vs {} ({why})", g.id, g.anum));
                c.note(format!("{}={} {}/{} ({})", g.id, g.anum, g.comparison.matched, count, g.source));
            }
            Ok(None) => c.note(format!("{} has no OEIS entry", id.tag())),
            Err(e) => c.expect(false, format!("{}: {e}", id.tag())),
        }
    }
    let alpha = fine_structure(std::f64::consts::PI);
    let err = (alpha - 137.036_303_776).abs();
    c.err(err);
    c.expect(err <= 1e-9, format!("fine_structure(pi) = {alpha}"));
    c.note(format!("fine_structure(pi) = {alpha:.9}"));
    Ok(c.finish())
}

/// `{2^n}`-cube distance matrix: extremes match the closed forms, `-4 3^(n-2)`
/// has multiplicity at least `n - 1`, zero has `3^n - n - 1`.
fn extremes(n: usize) -> Result<Outcome> {
    let mut c = Checks::default();
    let ex = pow_hamming_extremes(n)?;
    let spec = eig_sym(&pow_hamming_matrix(n, &OrderingScheme::TernaryNatural)?, DEFAULT_CLUSTER_TOL)?;
    let (lo, hi) = (spec.min().unwrap_or(f64::NAN), spec.max().unwrap_or(f64::NAN));
    let rel = |a: f64, b: f64| (a - b).abs() / b.abs().max(1.0);
    let (e_lo, e_hi) = (rel(lo, ex.lambda_min), rel(hi, ex.lambda_max));
    c.err(e_lo.max(e_hi));
    c.expect(e_lo <= 1e-6, format!("lambda_min {lo} vs {}", ex.lambda_min));
    c.expect(e_hi <= 1e-6, format!("lambda_max {hi} vs {}", ex.lambda_max));
    let sum: f64 = ex.sum.to_string().parse().unwrap_or(f64::NAN);
    let product: f64 = ex.product.to_string().parse().unwrap_or(f64::NAN);
    c.expect(rel(lo + hi, sum) <= 1e-6, format!("lambda_min + lambda_max = {} vs {sum}", lo + hi));
    c.expect(rel(lo * hi, product) <= 1e-6, format!("lambda_min lambda_max = {} vs {product}", lo * hi));

    let neg = -4.0 * 3f64.powi(n as i32 - 2);
    let m_neg = spec.multiplicity_near(neg, DEFAULT_CLUSTER_TOL);
    c.expect(m_neg + 1 >= n, format!("{neg} has multiplicity {m_neg} < n - 1"));
    let m_zero = spec.multiplicity_near(0.0, DEFAULT_CLUSTER_TOL);
    let want_zero = 3usize.pow(n as u32) - n - 1;
    c.expect(m_zero == want_zero, format!("0 has multiplicity {m_zero}, expected {want_zero}"));
    c.note(format!(
        "lambda_min {lo:.6}, lambda_max {hi:.6}, mult({neg}) = {m_neg}, mult(0) = {m_zero}"
    ));

    if n == 4 {
        let s7 = sequences::term(SequenceId::A120908, 7)?.to_integer();
        let p4 = sequences::term(SequenceId::ProdSeq, 4)?.to_integer();
        let k = BigInt::from(5832);
        c.expect(s7 == k && p4 == -k.clone(), format!("sum(7) = {s7}, product(4) = {p4}"));
        c.note("|sum(7)| = |product(4)| = 5832");
    }
    Ok(c.finish())
}

/// A circuit exists iff the degree `n(n+1)/2` is even; when it does, every
/// edge is used once.
fn euler(n: usize) -> Result<Outcome> {
    let mut c = Checks::default();
    let degree = regular_tricube_degree(n);
    let edges = (1usize << n) * degree / 2;
    match eulerian_circuit(n)? {
        Some(walk) => {
            c.expect(degree.is_multiple_of(2), format!("circuit returned for odd degree {degree}"));
            c.expect(is_eulerian_circuit(n, &walk), "walk is not an Eulerian circuit");
            c.expect(walk.len() == edges + 1, format!("walk covers {} of {edges} edges", walk.len() - 1));
            c.note(format!("circuit over {edges} edges"));
        }
        None => {
            c.expect(degree % 2 == 1, format!("no circuit despite even degree {degree}"));
            c.note(format!("none: odd degree {degree}"));
        }
    }
    Ok(c.finish())
}

/// Least Dirichlet energy over balanced +-1 loads is `2^(n-2)/n`, reached by
/// the parity pattern and its negation only.
fn poisson(n: usize) -> Result<Outcome> {
    let mut c = Checks::default();
    let search = harmonic::min_energy_search(n)?;
    let expected = (1u64 << n) as f64 / 4.0 / n as f64;
    let err = (search.best_energy - expected).abs();
    c.err(err);
    c.expect(err <= 1e-10, format!("best energy {} != {expected}", search.best_energy));
    let want_q = Rational::new(BigInt::from(1u64 << n), BigInt::from(4 * n as u64));
    match search.best_energy_rational() {
        Some(q) => c.expect(q == want_q, format!("recognized {q}, expected {want_q}")),
        None => c.expect(false, "best energy not recognized as rational"),
    }
    let parity = parity_pattern(n);
    let plus = harmonic::positive_vertices(&parity);
    let mut want: Vec<Vec<i8>> = vec![parity.iter().map(|x| -x).collect(), parity];
    want.sort();
    c.expect(search.best_patterns == want, format!("{} minimizing patterns, expected parity pair", search.best_patterns.len()));
    c.note(format!(
        "energy {want_q}, parity pattern +1 at {plus:?} (1-based) and its negation, norm_l2 {:.6}",
        search.best_solution.norm_l2
    ));
    Ok(c.finish())
}

fn caf_claim(n: usize) -> Result<Outcome> {
    let mut c = Checks::default();
    let total = 1u64 << n;
    let q = |a: u64, b: u64| Rational::new(BigInt::from(a), BigInt::from(b));
    // every predicate of full rank contains all vertices
    for p in 1..=total {
        c.expect(caf(n, total, p)? == q(1, 1), format!("caf({n}, {total}, {p}) != 1"));
    }
    // a single active vertex meets r of the 2^n positions
    for r in 1..=total {
        c.expect(caf(n, r, 1)? == q(r, total), format!("caf({n}, {r}, 1) != {r}/{total}"));
    }
    for r in 1..=total {
        for p in 1..=total {
            let a = caf(n, r, p)?;
            let b = caf(n, r, p.saturating_sub(1).max(1))?;
            c.expect(a >= b, format!("caf not monotone in p at r = {r}, p = {p}"));
        }
    }
    if n <= enumeration::MAX_ENUM_DIM {
        let (t, v) = (total as u32, total);
        for p in 1..=t {
            let sets = enumeration::vertex_sets(n, p)?;
            for r in 0..=t {
                // Ugly Duckling: the shared count does not depend on which p vertices
                let shared: Vec<u64> =
                    sets.iter().map(|&s| enumeration::count_containing(n, r, s)).collect::<Result<_>>()?;
                let invariant = shared.iter().all(|&x| x == shared[0]);
                c.expect(invariant, format!("shared count varies over vertex sets at r = {r}, p = {p}"));
                if p <= r {
                    c.expect(
                        BigInt::from(shared[0]) == n_shared(n, r as u64, p as u64)?,
                        format!("n_shared({n}, {r}, {p}) != enumeration"),
                    );
                }
                if r >= 1 {
                    let meeting = enumeration::count_meeting(n, r, sets[0])?;
                    c.expect(
                        BigInt::from(meeting) == n_related(n, r as u64, p as u64)?,
                        format!("n_related({n}, {r}, {p}) != enumeration"),
                    );
                    let ratio = Rational::new(BigInt::from(meeting), binomial(v, r as u64));
                    c.expect(ratio == caf(n, r as u64, p as u64)?, format!("caf({n}, {r}, {p}) != enumeration"));
                }
            }
        }
        c.note("enumeration oracle and vertex-set invariance checked");
    }
    c.note(format!("caf({n}, r, 1) = r/{total}, caf({n}, {total}, p) = 1"));
    Ok(c.finish())
}

/// Seed for the `identity` claim's random matrices at dimension `n`.
pub fn identity_seed(n: usize) -> u64 {
    0x5eed_0000 + n as u64
}

pub const IDENTITY_SAMPLES: usize = 10;

/// `det(B^T L B) = prod(nonzero eigenvalues) det([B | x])^2` for random `B`.
fn identity(n: usize) -> Result<Outcome> {
    let mut c = Checks::default();
    let l = tricube_laplacian(n, &OrderingScheme::Binary)?;
    let size = l.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(identity_seed(n));
    let mut agreed = 0;
    for i in 0..IDENTITY_SAMPLES {
        let b = DMatrix::from_fn(size, size - 1, |_, _| rng.random_range(-1.0..=1.0));
        let r = eig_identity_check(&l, &b)?;
        let rel = (r.lhs - r.rhs).abs() / r.lhs.abs().max(r.rhs.abs()).max(1.0);
        c.err(rel);
        c.expect(r.agree, format!("sample {i}: lhs {} rhs {}", r.lhs, r.rhs));
        agreed += usize::from(r.agree);
    }
    c.note(format!("{agreed}/{IDENTITY_SAMPLES} random B agree (seed {:#x})", identity_seed(n)));
    Ok(c.finish())
}
