//! Compound-predicate counts on `{0,1}^n` and the activation function built
//! from them, in exact big-integer arithmetic.
//!
//! A compound predicate is any subset of the `2^n` vertices; its rank is the
//! subset size. Binomials use the falling-factorial convention, so
//! `C(a, b) = 0` whenever `b > a`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Largest `n` accepted; `2^n` vertices must stay a practical binomial argument.
pub const MAX_PREDICATE_DIM: usize = 16;

/// One `(n, r, p)` query point; [`PredicateCounts::new`] enforces the ranges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PredicateCounts {
    pub n: usize,
    pub r: u64,
    pub p: u64,
}

impl PredicateCounts {
    pub fn new(n: usize, r: u64, p: u64) -> Result<Self> {
        let total = vertex_count(n)?;
        if r > total || !(1..=total).contains(&p) {
            return Err(Error::invalid(format!(
                "need 0 <= r <= {total} and 1 <= p <= {total}, got r = {r}, p = {p}"
            )));
        }
        Ok(PredicateCounts { n, r, p })
    }

    pub fn shared(&self) -> Result<BigInt> {
        n_shared(self.n, self.r, self.p)
    }

    pub fn related(&self) -> Result<BigInt> {
        n_related(self.n, self.r, self.p)
    }

    pub fn activation(&self) -> Result<Rational> {
        caf(self.n, self.r, self.p)
    }
}

pub fn binomial(a: u64, b: u64) -> BigInt {
    if b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}

fn vertex_count(n: usize) -> Result<u64> {
    if n == 0 || n > MAX_PREDICATE_DIM {
        return Err(Error::invalid(format!(
            "dimension {n} outside 1..={MAX_PREDICATE_DIM}"
        )));
    }
    Ok(1u64 << n)
}

/// Rank-`r` predicates containing a fixed set of `p` vertices:
/// `C(2^n - p, r - p)`. Identical for every choice of the `p` vertices.
pub fn n_shared(n: usize, r: u64, p: u64) -> Result<BigInt> {
    let total = vertex_count(n)?;
    if p > r {
        return Err(Error::invalid(format!("p = {p} exceeds rank r = {r}")));
    }
    if r > total {
        return Err(Error::invalid(format!("rank {r} exceeds 2^{n}")));
    }
    Ok(binomial(total - p, r - p))
}

/// Rank-`r` predicates meeting at least one of `p` fixed vertices:
/// `sum_{l=1..p} C(2^n - l, r - 1)`.
pub fn n_related(n: usize, r: u64, p: u64) -> Result<BigInt> {
    let total = vertex_count(n)?;
    if !(1..=total).contains(&r) || !(1..=total).contains(&p) {
        return Err(Error::invalid(format!(
            "need 1 <= r, p <= {total}, got r = {r}, p = {p}"
        )));
    }
    Ok((1..=p).map(|l| binomial(total - l, r - 1)).sum())
}

/// Fraction of rank-`r` predicates related to `p` active vertices.
pub fn caf(n: usize, r: u64, p: u64) -> Result<Rational> {
    if r == 0 {
        return Err(Error::invalid("activation is undefined at rank 0"));
    }
    let related = n_related(n, r, p)?;
    let total = vertex_count(n)?;
    Ok(Rational::new(related, binomial(total, r)))
}

/// Atomic predicates left after `c` independent implicational constraints:
/// `(3/4)^c 2^n = 3^c 2^(n-2c)`.
pub fn ict_count(n: usize, c: usize) -> Result<BigInt> {
    if 2 * c > n {
        return Err(Error::invalid(format!(
            "{c} constraints on n = {n} leave a non-integer count"
        )));
    }
    Ok(BigInt::from(3u8).pow(c as u32) * (BigInt::one() << (n - 2 * c)))
}

pub fn logistic(x: f64, mu: f64) -> f64 {
    1.0 / ((-mu * x).exp() + 1.0)
}

pub fn rational_to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

/// Brute-force predicate counts by enumerating every subset of the `2^n`
/// vertices. Only feasible for `n <= 3` (`2^8` subsets).
pub mod enumeration {
    use crate::error::{Error, Result};

    pub const MAX_ENUM_DIM: usize = 3;

    fn vertices(n: usize) -> Result<u32> {
        if n == 0 || n > MAX_ENUM_DIM {
            return Err(Error::invalid(format!(
                "enumeration only for 1 <= n <= {MAX_ENUM_DIM}"
            )));
        }
        Ok(1 << n)
    }

    fn subsets(n: usize) -> Result<impl Iterator<Item = u32>> {
        let v = vertices(n)?;
        Ok(0..(1u32 << v))
    }

    /// Rank-`r` predicates containing every vertex in `chosen` (a vertex bitmask).
    pub fn count_containing(n: usize, r: u32, chosen: u32) -> Result<u64> {
        Ok(subsets(n)?
            .filter(|s| s.count_ones() == r && s & chosen == chosen)
            .count() as u64)
    }

    /// Rank-`r` predicates sharing at least one vertex with `chosen`.
    pub fn count_meeting(n: usize, r: u32, chosen: u32) -> Result<u64> {
        Ok(subsets(n)?
            .filter(|s| s.count_ones() == r && s & chosen != 0)
            .count() as u64)
    }

    /// All vertex bitmasks of size `p`.
    pub fn vertex_sets(n: usize, p: u32) -> Result<Vec<u32>> {
        Ok(subsets(n)?.filter(|s| s.count_ones() == p).collect())
    }
}
