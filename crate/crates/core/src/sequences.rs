//! Closed-form generators for the integer sequences and scalar formulas tied
//! to the cube families: spectrum multiplicity triangles, eigenvalue
//! extremes of the {2^n}-cube, Pell-type Ramanujan constants, n-ball
//! coefficients and vector-equilibrium counts.
//!
//! Everything is exact (big integers or big rationals) except the ball
//! measures and the closed-form eigenvalue extremes, which involve pi and
//! square roots.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::predicates::{binomial, Rational};

/// Cap on generated terms or rows; triangles grow quadratically.
pub const MAX_COUNT: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SequenceId {
    /// Coefficients of (1+x+x^2)^n, by rows.
    Trinomial,
    /// Coefficients of (1+x+x^3)^n, by rows: n-tuples over {0,1,3} with a given sum.
    PowTriMult,
    /// binomial(n,k) 2^k, by rows.
    A013609,
    /// binomial(n,k) 3^(n-k) 2^k, by rows.
    A038220,
    /// n(n-3)/2, n >= 0.
    A080956Neg,
    /// Integral Ramanujan bounds 2 sqrt(d-1) of the regular tricube.
    A075848,
    /// Dimensions n at which those bounds are integral.
    A072221,
    /// 4(n-1) 3^(n-2), n >= 2.
    A120908,
    /// -2n 3^(2n-2), n >= 1.
    ProdSeq,
    /// -4 3^(n-2), n >= 2.
    A003946Neg,
    /// 3^n - n - 1, n >= 0.
    A060188,
    /// n(n+1), n >= 0.
    A279019,
    /// f_0 = 1, f_1 = 2, f_n = 2 f_(n-2) / n.
    BallCoeff,
}

/// How a local sequence lines up with an OEIS entry: the remote term at
/// index `i + shift` equals the local term at `i`, negated when `negate`.
/// Triangles are compared flattened, indexed from 0 on both sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OeisLink {
    pub anum: &'static str,
    pub shift: i64,
    pub negate: bool,
}

impl SequenceId {
    pub const ALL: [SequenceId; 13] = [
        SequenceId::Trinomial,
        SequenceId::PowTriMult,
        SequenceId::A013609,
        SequenceId::A038220,
        SequenceId::A080956Neg,
        SequenceId::A075848,
        SequenceId::A072221,
        SequenceId::A120908,
        SequenceId::ProdSeq,
        SequenceId::A003946Neg,
        SequenceId::A060188,
        SequenceId::A279019,
        SequenceId::BallCoeff,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            SequenceId::Trinomial => "Trinomial",
            SequenceId::PowTriMult => "PowTriMult",
            SequenceId::A013609 => "A013609",
            SequenceId::A038220 => "A038220",
            SequenceId::A080956Neg => "A080956Neg",
            SequenceId::A075848 => "A075848",
            SequenceId::A072221 => "A072221",
            SequenceId::A120908 => "A120908",
            SequenceId::ProdSeq => "ProdSeq",
            SequenceId::A003946Neg => "A003946Neg",
            SequenceId::A060188 => "A060188",
            SequenceId::A279019 => "A279019",
            SequenceId::BallCoeff => "BallCoeff",
        }
    }

    pub fn is_triangle(&self) -> bool {
        matches!(
            self,
            SequenceId::Trinomial
                | SequenceId::PowTriMult
                | SequenceId::A013609
                | SequenceId::A038220
        )
    }

    /// First valid index (row index for triangles).
    pub fn first_index(&self) -> u64 {
        match self {
            SequenceId::A120908 | SequenceId::A003946Neg => 2,
            SequenceId::ProdSeq => 1,
            _ => 0,
        }
    }

    pub fn oeis(&self) -> Option<OeisLink> {
        let link = |anum, shift, negate| Some(OeisLink { anum, shift, negate });
        match self {
            SequenceId::Trinomial => link("A027907", 0, false),
            SequenceId::PowTriMult => link("A038717", 0, false),
            SequenceId::A013609 => link("A013609", 0, false),
            SequenceId::A038220 => link("A038220", 0, false),
            // A080956(k) = (k+1)(2-k)/2, so n(n-3)/2 = -A080956(n-1)
            SequenceId::A080956Neg => link("A080956", -1, true),
            SequenceId::A075848 => link("A075848", 0, false),
            SequenceId::A072221 => link("A072221", 0, false),
            SequenceId::A120908 => link("A120908", 0, false),
            // A003946(k) = 4 3^(k-1) for k >= 1
            SequenceId::A003946Neg => link("A003946", -1, true),
            SequenceId::A060188 => link("A060188", 0, false),
            SequenceId::A279019 => link("A279019", 0, false),
            SequenceId::ProdSeq | SequenceId::BallCoeff => None,
        }
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for SequenceId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SequenceId::ALL
            .iter()
            .find(|id| id.tag().eq_ignore_ascii_case(s))
            .copied()
            .ok_or_else(|| Error::Parse(format!("unknown sequence id '{s}'")))
    }
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn pow3(e: u64) -> BigInt {
    BigInt::from(3u8).pow(e as u32)
}

fn poly_power(base: &[u64], n: u64) -> Vec<BigInt> {
    let mut acc = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = vec![BigInt::zero(); acc.len() + base.len() - 1];
        for (i, a) in acc.iter().enumerate() {
            for (j, &b) in base.iter().enumerate() {
                if b != 0 {
                    next[i + j] += a * b;
                }
            }
        }
        acc = next;
    }
    acc
}

/// Row `n` of a triangle sequence.
pub fn triangle_row(id: SequenceId, n: u64) -> Result<Vec<BigInt>> {
    Ok(match id {
        SequenceId::Trinomial => poly_power(&[1, 1, 1], n),
        SequenceId::PowTriMult => poly_power(&[1, 1, 0, 1], n),
        SequenceId::A013609 => (0..=n)
            .map(|k| binomial(n, k) * (BigInt::one() << k))
            .collect(),
        SequenceId::A038220 => (0..=n)
            .map(|k| binomial(n, k) * pow3(n - k) * (BigInt::one() << k))
            .collect(),
        other => return Err(Error::invalid(format!("{other} is not a triangle"))),
    })
}

pub fn triangle_rows(id: SequenceId, rows: usize) -> Result<Vec<Vec<BigInt>>> {
    check_count(rows)?;
    (0..rows as u64).map(|n| triangle_row(id, n)).collect()
}

fn check_count(count: usize) -> Result<()> {
    if count == 0 || count > MAX_COUNT {
        return Err(Error::invalid(format!(
            "count must be in 1..={MAX_COUNT}, got {count}"
        )));
    }
    Ok(())
}

fn pell_like(count: usize, a0: i64, a1: i64, constant: i64) -> Vec<BigInt> {
    let mut out = vec![big(a0), big(a1)];
    while out.len() < count {
        let k = out.len();
        let next = &out[k - 1] * 6 - &out[k - 2] + constant;
        out.push(next);
    }
    out.truncate(count);
    out
}

fn ball_coefficients(count: usize) -> Vec<Rational> {
    let mut f = vec![Rational::one(), Rational::from_integer(big(2))];
    while f.len() < count {
        let n = f.len();
        let next = &f[n - 2] * Rational::new(big(2), big(n as i64));
        f.push(next);
    }
    f.truncate(count);
    f
}

/// Term `n` of a scalar sequence. Errors below the sequence's first index.
pub fn term(id: SequenceId, n: u64) -> Result<Rational> {
    if id.is_triangle() {
        return Err(Error::invalid(format!("{id} is a triangle; use triangle_row")));
    }
    if n < id.first_index() {
        return Err(Error::invalid(format!(
            "{id} is only integral from n = {}, got {n}",
            id.first_index()
        )));
    }
    let ni = big(n as i64);
    let v = match id {
        SequenceId::A080956Neg => (&ni * (&ni - 3)) / 2,
        SequenceId::A075848 => return Ok(pell_like(n as usize + 1, 0, 6, 0)[n as usize].clone().into()),
        SequenceId::A072221 => return Ok(pell_like(n as usize + 1, 1, 4, 2)[n as usize].clone().into()),
        SequenceId::A120908 => (&ni - 1) * 4 * pow3(n - 2),
        SequenceId::ProdSeq => -(pow3(2 * n - 2) * &ni * 2u8),
        SequenceId::A003946Neg => -(pow3(n - 2) * 4u8),
        SequenceId::A060188 => pow3(n) - &ni - 1,
        SequenceId::A279019 => &ni * (&ni + 1),
        SequenceId::BallCoeff => return Ok(ball_coefficients(n as usize + 1)[n as usize].clone()),
        _ => unreachable!("triangles handled above"),
    };
    Ok(Rational::from_integer(v))
}

/// First `count` terms. Scalar sequences start at their first index;
/// triangles are read row by row from row 0.
pub fn generate(id: SequenceId, count: usize) -> Result<Vec<Rational>> {
    Ok(indexed(id, count)?.into_iter().map(|(_, v)| v).collect())
}

/// Like [`generate`], paired with the local index of each term (the flat
/// position for triangles).
pub fn indexed(id: SequenceId, count: usize) -> Result<Vec<(u64, Rational)>> {
    check_count(count)?;
    if id.is_triangle() {
        let mut out = Vec::with_capacity(count);
        let mut row = 0;
        while out.len() < count {
            for v in triangle_row(id, row)? {
                if out.len() == count {
                    break;
                }
                out.push((out.len() as u64, Rational::from_integer(v)));
            }
            row += 1;
        }
        return Ok(out);
    }
    let first = id.first_index();
    let last = first + count as u64;
    let values: Vec<Rational> = match id {
        SequenceId::A075848 => pell_like(last as usize, 0, 6, 0)
            .into_iter()
            .skip(first as usize)
            .map(Rational::from_integer)
            .collect(),
        SequenceId::A072221 => pell_like(last as usize, 1, 4, 2)
            .into_iter()
            .skip(first as usize)
            .map(Rational::from_integer)
            .collect(),
        SequenceId::BallCoeff => ball_coefficients(last as usize)
            .into_iter()
            .skip(first as usize)
            .collect(),
        _ => (first..last).map(|n| term(id, n)).collect::<Result<_>>()?,
    };
    Ok((first..last).zip(values).collect())
}

/// Integer view of a generated list; errors on a non-integral term.
pub fn to_integers(values: &[Rational]) -> Result<Vec<BigInt>> {
    values
        .iter()
        .map(|v| {
            if v.is_integer() {
                Ok(v.to_integer())
            } else {
                Err(Error::invalid(format!("{v} is not an integer")))
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct Extremes {
    pub n: usize,
    pub lambda_min: f64,
    pub lambda_max: f64,
    /// lambda_min + lambda_max = 4(n-1) 3^(n-2), exact.
    pub sum: BigInt,
    /// lambda_min lambda_max = -2n 3^(2n-2), exact.
    pub product: BigInt,
}

/// Extreme eigenvalues of the {2^n}-cube distance matrix:
/// `[2(n-1) -/+ sqrt(2(2n+1)(n+2))] 3^(n-2)`.
pub fn pow_hamming_extremes(n: usize) -> Result<Extremes> {
    if !(2..=40).contains(&n) {
        return Err(Error::invalid(format!("extremes need 2 <= n <= 40, got {n}")));
    }
    let nf = n as f64;
    let scale = 3f64.powi(n as i32 - 2);
    let root = (2.0 * (2.0 * nf + 1.0) * (nf + 2.0)).sqrt();
    let sum = term(SequenceId::A120908, n as u64)?.to_integer();
    let product = term(SequenceId::ProdSeq, n as u64)?.to_integer();
    Ok(Extremes {
        n,
        lambda_min: (2.0 * (nf - 1.0) - root) * scale,
        lambda_max: (2.0 * (nf - 1.0) + root) * scale,
        sum,
        product,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BallMeasures {
    pub volume: f64,
    pub surface: f64,
}

pub fn ball_coefficient(n: usize) -> Rational {
    ball_coefficients(n + 1).swap_remove(n)
}

/// Volume and surface of the n-ball of radius `r`:
/// `V = pi^floor(n/2) f_n r^n`, `S = n pi^floor(n/2) f_n r^(n-1)`.
pub fn ball_measures(n: usize, r: f64) -> Result<BallMeasures> {
    if !r.is_finite() || r <= 0.0 {
        return Err(Error::invalid(format!("radius must be positive, got {r}")));
    }
    let f = crate::predicates::rational_to_f64(&ball_coefficient(n));
    let pi_pow = std::f64::consts::PI.powi((n / 2) as i32);
    Ok(BallMeasures {
        volume: pi_pow * f * r.powi(n as i32),
        surface: n as f64 * pi_pow * f * r.powi(n as i32 - 1),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VectorEquilibrium {
    pub n: i64,
    pub v_count: i64,
    pub kissing_known: Option<u64>,
    pub cartesian_embeddable: bool,
}

/// Known kissing numbers; only these dimensions are settled.
pub const KISSING: [(i64, u64); 6] = [(1, 2), (2, 6), (3, 12), (4, 24), (8, 240), (24, 196_560)];

pub fn vector_equilibrium(n: i64) -> Result<VectorEquilibrium> {
    if !(-1..=62).contains(&n) {
        return Err(Error::invalid(format!("n must be in -1..=62, got {n}")));
    }
    // |v(n)| = |v(n-1)| + 2n from |v(-1)| = 0
    let v_count = (0..=n).fold(0i64, |acc, k| acc + 2 * k);
    debug_assert_eq!(v_count, n * (n + 1));
    let cartesian_embeddable = n >= 0 && n * n - n + 2 == 1i64 << n;
    Ok(VectorEquilibrium {
        n,
        v_count,
        kissing_known: KISSING.iter().find(|(d, _)| *d == n).map(|&(_, k)| k),
        cartesian_embeddable,
    })
}

/// `4x^3 + x^2 + x`; at `x = pi` this lands near the inverse fine-structure constant.
pub fn fine_structure(x: f64) -> f64 {
    4.0 * x.powi(3) + x * x + x
}

/// Integer square root when `v` is a perfect square.
pub fn exact_sqrt(v: &BigInt) -> Option<BigInt> {
    if v.is_negative() {
        return None;
    }
    let r = v.sqrt();
    (&r * &r == *v).then_some(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitspace::OrderingScheme;
    use crate::cubegraphs::pow_hamming_matrix;
    use crate::spectra::eig_sym;
    use proptest::prelude::*;

    fn ints(id: SequenceId, count: usize) -> Vec<i64> {
        use num_traits::ToPrimitive;
        to_integers(&generate(id, count).unwrap())
            .unwrap()
            .iter()
            .map(|v| v.to_i64().unwrap())
            .collect()
    }

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(big(a), big(b))
    }

    #[test]
    fn trinomial_rows() {
        assert_eq!(triangle_row(SequenceId::Trinomial, 2).unwrap(), vec![big(1), big(2), big(3), big(2), big(1)]);
        assert_eq!(ints(SequenceId::Trinomial, 9), vec![1, 1, 1, 1, 1, 2, 3, 2, 1]);
    }

    #[test]
    fn pell_examples() {
        assert_eq!(ints(SequenceId::A075848, 5), vec![0, 6, 36, 210, 1224]);
        assert_eq!(ints(SequenceId::A072221, 5), vec![1, 4, 25, 148, 865]);
    }

    #[test]
    fn pell_matches_closed_form() {
        // (3/(2 sqrt 2)) [(3+2sqrt2)^k - (3-2sqrt2)^k], in floating point
        let s = 2f64.sqrt();
        let got = ints(SequenceId::A075848, 10);
        for (k, v) in got.iter().enumerate() {
            let c = 3.0 / (2.0 * s) * ((3.0 + 2.0 * s).powi(k as i32) - (3.0 - 2.0 * s).powi(k as i32));
            assert!((c - *v as f64).abs() < 1e-6 * c.abs().max(1.0), "k={k}");
        }
    }

    #[test]
    fn ramanujan_bound_integral_at_pell_dims() {
        let dims = to_integers(&generate(SequenceId::A072221, 9).unwrap()).unwrap();
        let bounds = to_integers(&generate(SequenceId::A075848, 9).unwrap()).unwrap();
        for (n, b) in dims.iter().zip(&bounds) {
            let inner = n * (n + 1) / 2 - 1;
            let root = exact_sqrt(&inner).expect("perfect square");
            assert_eq!(root * 2, *b);
        }
    }

    #[test]
    fn ball_coefficients_examples() {
        let f = generate(SequenceId::BallCoeff, 6).unwrap();
        assert_eq!(f, vec![q(1, 1), q(2, 1), q(1, 1), q(4, 3), q(1, 2), q(8, 15)]);
    }

    #[test]
    fn scalar_examples() {
        assert_eq!(ints(SequenceId::A080956Neg, 6), vec![0, -1, -1, 0, 2, 5]);
        assert_eq!(ints(SequenceId::A120908, 3), vec![4, 24, 108]);
        assert_eq!(ints(SequenceId::ProdSeq, 3), vec![-2, -36, -486]);
        assert_eq!(ints(SequenceId::A003946Neg, 3), vec![-4, -12, -36]);
        assert_eq!(ints(SequenceId::A060188, 4), vec![0, 1, 6, 23]);
        assert_eq!(ints(SequenceId::A279019, 4), vec![0, 2, 6, 12]);
    }

    #[test]
    fn domain_errors() {
        assert!(term(SequenceId::A120908, 1).is_err());
        assert!(term(SequenceId::A003946Neg, 1).is_err());
        assert!(term(SequenceId::ProdSeq, 0).is_err());
        assert!(term(SequenceId::Trinomial, 0).is_err());
        assert!(generate(SequenceId::A060188, 0).is_err());
        assert!(triangle_row(SequenceId::A060188, 0).is_err());
    }

    #[test]
    fn triangle_sums() {
        for n in 0..=10u64 {
            let five: BigInt = triangle_row(SequenceId::A038220, n).unwrap().into_iter().sum();
            assert_eq!(five, BigInt::from(5u8).pow(n as u32));
            let three: BigInt = triangle_row(SequenceId::A013609, n).unwrap().into_iter().sum();
            assert_eq!(three, pow3(n));
            let row = triangle_row(SequenceId::Trinomial, n).unwrap();
            assert_eq!(row.iter().sum::<BigInt>(), pow3(n));
            let mut rev = row.clone();
            rev.reverse();
            assert_eq!(rev, row);
        }
    }

    #[test]
    fn pow_tri_multiplicities() {
        for n in 1..=10u64 {
            let row = triangle_row(SequenceId::PowTriMult, n).unwrap();
            assert_eq!(row.len() as u64, 3 * n + 1);
            assert!(row[(3 * n - 1) as usize].is_zero());
            assert!(row[0].is_one() && row[(3 * n) as usize].is_one());
            assert_eq!(row.iter().sum::<BigInt>(), pow3(n));
        }
    }

    #[test]
    fn pow_tri_matches_enumeration() {
        for n in 0..=6u32 {
            let mut counts = vec![0i64; 3 * n as usize + 1];
            for m in 0..3usize.pow(n) {
                let (mut s, mut x) = (0, m);
                for _ in 0..n {
                    s += [0, 1, 3][x % 3];
                    x /= 3;
                }
                counts[s] += 1;
            }
            let row = triangle_row(SequenceId::PowTriMult, n as u64).unwrap();
            assert_eq!(row, counts.into_iter().map(big).collect::<Vec<_>>());
        }
    }

    #[test]
    fn extremes_examples() {
        let e = pow_hamming_extremes(2).unwrap();
        let r = 2.0 * 10f64.sqrt();
        assert!((e.lambda_min - (2.0 - r)).abs() < 1e-12);
        assert!((e.lambda_max - (2.0 + r)).abs() < 1e-12);
        assert_eq!(e.sum, big(4));
        assert_eq!(e.product, big(-36));
        assert_eq!(pow_hamming_extremes(7).unwrap().sum.abs(), big(5832));
        assert_eq!(pow_hamming_extremes(4).unwrap().product.abs(), big(5832));
        assert!(pow_hamming_extremes(1).is_err());
        for n in 2..=12 {
            let e = pow_hamming_extremes(n).unwrap();
            let fsum = e.lambda_min + e.lambda_max;
            let fprod = e.lambda_min * e.lambda_max;
            let s: f64 = e.sum.to_string().parse().unwrap();
            let p: f64 = e.product.to_string().parse().unwrap();
            assert!((fsum - s).abs() <= 1e-9 * s.abs());
            assert!((fprod - p).abs() <= 1e-9 * p.abs());
        }
    }

    #[test]
    fn extremes_match_eigensolve() {
        for n in 2..=6 {
            let m = pow_hamming_matrix(n, &OrderingScheme::TernaryNatural).unwrap();
            let spec = eig_sym(&m, 1e-6).unwrap();
            let e = pow_hamming_extremes(n).unwrap();
            let (lo, hi) = (spec.min().unwrap(), spec.max().unwrap());
            assert!((lo - e.lambda_min).abs() <= 1e-6 * e.lambda_min.abs(), "n={n}");
            assert!((hi - e.lambda_max).abs() <= 1e-6 * e.lambda_max.abs(), "n={n}");
        }
    }

    #[test]
    fn ball_examples() {
        use std::f64::consts::PI;
        let b = ball_measures(3, 1.0).unwrap();
        assert!((b.volume - 4.0 * PI / 3.0).abs() < 1e-12);
        assert!((b.surface - 4.0 * PI).abs() < 1e-12);
        assert!((ball_measures(4, 1.0).unwrap().volume - PI * PI / 2.0).abs() < 1e-12);
        let r = 1.7;
        let b2 = ball_measures(2, r).unwrap();
        assert!((b2.surface - 2.0 * PI * r * ball_measures(0, r).unwrap().volume).abs() < 1e-12);
        assert!(ball_measures(2, 0.0).is_err());
    }

    proptest! {
        #[test]
        fn surface_recurrence(n in 2usize..30, r in 0.1f64..3.0) {
            let s = ball_measures(n, r).unwrap().surface;
            let v = ball_measures(n - 2, r).unwrap().volume;
            prop_assert!((s - 2.0 * std::f64::consts::PI * r * v).abs() <= 1e-9 * s.abs().max(1.0));
        }
    }

    #[test]
    fn equilibrium_examples() {
        let v3 = vector_equilibrium(3).unwrap();
        assert_eq!((v3.v_count, v3.kissing_known, v3.cartesian_embeddable), (12, Some(12), true));
        let v4 = vector_equilibrium(4).unwrap();
        assert_eq!((v4.v_count, v4.kissing_known, v4.cartesian_embeddable), (20, Some(24), false));
        assert_eq!(vector_equilibrium(8).unwrap().v_count, 72);
        assert_eq!(vector_equilibrium(-1).unwrap().v_count, 0);
        let embeddable: Vec<i64> = (0..=40)
            .filter(|&n| vector_equilibrium(n).unwrap().cartesian_embeddable)
            .collect();
        assert_eq!(embeddable, vec![1, 2, 3]);
        for n in 0..=40 {
            assert_eq!(
                vector_equilibrium(n).unwrap().v_count,
                ints(SequenceId::A279019, 41)[n as usize]
            );
        }
    }

    #[test]
    fn fine_structure_examples() {
        assert!((fine_structure(std::f64::consts::PI) - 137.036_303_776).abs() < 1e-9);
        assert_eq!(fine_structure(0.0), 0.0);
        assert_eq!(fine_structure(4.0) / 2.0 - 1.0, 137.0);
    }

    #[test]
    fn ids_round_trip() {
        for id in SequenceId::ALL {
            assert_eq!(id.tag().parse::<SequenceId>().unwrap(), id);
            assert_eq!(id.oeis().is_none(), matches!(id, SequenceId::ProdSeq | SequenceId::BallCoeff));
        }
        assert!("A999999".parse::<SequenceId>().is_err());
    }
}
