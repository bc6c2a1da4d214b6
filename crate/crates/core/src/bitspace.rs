//! Vertex address spaces: `{0,1}^n` under binary and Gray orderings, and the
//! `{-1,0,1}^n` vertex set of the 3^n-vertex families.
//!
//! Internal indices are 0-based. Bit `k` of an address corresponds to axis `k`,
//! which for ternary vertices is the `3^k` digit position.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest dimension accepted when enumerating `{0,1}^n`.
pub const MAX_ADDRESS_BITS: usize = 24;

/// A vertex address in `{0,1}^n`. Bit `k` is the truth value of predicate `Q_k`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitAddress {
    bits: u64,
    len: usize,
}

impl BitAddress {
    pub fn new(bits: u64, len: usize) -> Result<Self> {
        if len > 64 {
            return Err(Error::invalid(format!("address length {len} exceeds 64")));
        }
        if len < 64 && bits >> len != 0 {
            return Err(Error::invalid(format!(
                "bits {bits:#b} do not fit in {len} positions"
            )));
        }
        Ok(Self { bits, len })
    }

    pub fn from_bools(bools: &[bool]) -> Result<Self> {
        let bits = bools
            .iter()
            .enumerate()
            .fold(0u64, |acc, (k, &b)| acc | (u64::from(b) << k));
        Self::new(bits, bools.len())
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bit(&self, k: usize) -> bool {
        k < self.len && (self.bits >> k) & 1 == 1
    }

    /// Number of set bits, the address "k-norm".
    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.len).map(|k| self.bit(k)).collect()
    }
}

/// Most significant position first, so `BitAddress::new(0b011, 3)` prints `011`.
impl fmt::Display for BitAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in (0..self.len).rev() {
            f.write_str(if self.bit(k) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitAddress({self})")
    }
}

impl FromStr for BitAddress {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut bits = 0u64;
        let len = s.len();
        if len > 64 {
            return Err(Error::Parse(format!("address {s:?} longer than 64 bits")));
        }
        for (pos, ch) in s.chars().enumerate() {
            let k = len - 1 - pos;
            match ch {
                '0' => {}
                '1' => bits |= 1 << k,
                _ => return Err(Error::Parse(format!("bad address digit {ch:?} in {s:?}"))),
            }
        }
        Self::new(bits, len)
    }
}

/// Vertex ordering used to lay out a matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderingScheme {
    Binary,
    Gray,
    TernaryNatural,
    TernaryGray,
    /// `perm[position]` is the natural vertex index shown at that position.
    Custom(Vec<usize>),
}

impl OrderingScheme {
    pub fn name(&self) -> &'static str {
        match self {
            OrderingScheme::Binary => "binary",
            OrderingScheme::Gray => "gray",
            OrderingScheme::TernaryNatural => "ternary-natural",
            OrderingScheme::TernaryGray => "ternary-gray",
            OrderingScheme::Custom(_) => "custom",
        }
    }

    /// Maps the binary/Gray pair onto its ternary counterpart and back, so a
    /// single `--ordering` flag can serve both vertex sets.
    pub fn for_ternary(&self) -> OrderingScheme {
        match self {
            OrderingScheme::Binary => OrderingScheme::TernaryNatural,
            OrderingScheme::Gray => OrderingScheme::TernaryGray,
            other => other.clone(),
        }
    }

    pub fn for_binary(&self) -> OrderingScheme {
        match self {
            OrderingScheme::TernaryNatural => OrderingScheme::Binary,
            OrderingScheme::TernaryGray => OrderingScheme::Gray,
            other => other.clone(),
        }
    }
}

impl fmt::Display for OrderingScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            // ';' keeps the permutation inside a single CSV cell
            OrderingScheme::Custom(perm) => {
                let items: Vec<String> = perm.iter().map(usize::to_string).collect();
                write!(f, "custom:{}", items.join(";"))
            }
            other => f.write_str(other.name()),
        }
    }
}

impl FromStr for OrderingScheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "binary" | "bin" => Ok(OrderingScheme::Binary),
            "gray" => Ok(OrderingScheme::Gray),
            "ternary-natural" | "ternary" | "natural" => Ok(OrderingScheme::TernaryNatural),
            "ternary-gray" => Ok(OrderingScheme::TernaryGray),
            other => {
                // custom:3,0,1,2 (';' and spaces also separate)
                if let Some(list) = other.strip_prefix("custom:") {
                    let perm = list
                        .split([',', ';', ' '])
                        .filter(|t| !t.is_empty())
                        .map(|t| t.parse::<usize>())
                        .collect::<std::result::Result<Vec<_>, _>>()
                        .map_err(|e| Error::Parse(format!("custom permutation: {e}")))?;
                    Ok(OrderingScheme::Custom(perm))
                } else {
                    Err(Error::Parse(format!("unknown ordering {s:?}")))
                }
            }
        }
    }
}

/// Standard binary reflected Gray code of `i`.
pub fn gray_code(i: usize) -> usize {
    i ^ (i >> 1)
}

fn check_permutation(perm: &[usize], vertices: usize) -> Result<()> {
    if perm.len() != vertices {
        return Err(Error::UnsupportedOrdering {
            scheme: format!("custom permutation of length {}", perm.len()),
            vertices,
        });
    }
    let mut seen = vec![false; vertices];
    for &p in perm {
        if p >= vertices || std::mem::replace(&mut seen[p], true) {
            return Err(Error::UnsupportedOrdering {
                scheme: "custom (not a bijection)".into(),
                vertices,
            });
        }
    }
    Ok(())
}

fn check_binary_dim(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ADDRESS_BITS {
        return Err(Error::invalid(format!(
            "dimension {n} outside 1..={MAX_ADDRESS_BITS}"
        )));
    }
    Ok(())
}

/// Position-to-vertex map for the 2^n-vertex families. Entry `p` is the binary
/// value of the address shown at position `p`.
pub fn binary_order(n: usize, scheme: &OrderingScheme) -> Result<Vec<usize>> {
    check_binary_dim(n)?;
    let count = 1usize << n;
    match scheme {
        OrderingScheme::Binary => Ok((0..count).collect()),
        OrderingScheme::Gray => Ok((0..count).map(gray_code).collect()),
        OrderingScheme::Custom(perm) => {
            check_permutation(perm, count)?;
            Ok(perm.clone())
        }
        other => Err(Error::UnsupportedOrdering {
            scheme: other.name().into(),
            vertices: count,
        }),
    }
}

/// All `2^n` addresses in binary or Gray order.
pub fn enumerate_addresses(n: usize, scheme: &OrderingScheme) -> Result<Vec<BitAddress>> {
    if !matches!(scheme, OrderingScheme::Binary | OrderingScheme::Gray) {
        return Err(Error::UnsupportedOrdering {
            scheme: scheme.name().into(),
            vertices: 1usize << n.min(MAX_ADDRESS_BITS),
        });
    }
    binary_order(n, scheme)?
        .into_iter()
        .map(|v| BitAddress::new(v as u64, n))
        .collect()
}

pub fn hamming(a: &BitAddress, b: &BitAddress) -> Result<usize> {
    if a.len != b.len {
        return Err(Error::DimensionMismatch {
            expected: a.len,
            actual: b.len,
        });
    }
    Ok((a.bits ^ b.bits).count_ones() as usize)
}

/// Largest dimension accepted for `{-1,0,1}^n`.
pub const MAX_TERNARY_DIM: usize = 12;

pub(crate) fn pow3(k: usize) -> usize {
    3usize.pow(k as u32)
}

/// A vertex of the 3^n-vertex structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TernaryVertex {
    pub index: usize,
    /// Base-3 digits, least significant (axis 0) first.
    pub digits: Vec<u8>,
    /// `digit - 1` per axis.
    pub coords: Vec<i8>,
    /// Bit `k` set iff `coords[k] != 0`.
    pub address: BitAddress,
}

impl TernaryVertex {
    /// Number of nonzero coordinates.
    pub fn norm(&self) -> usize {
        self.address.weight()
    }

    pub fn from_digits(digits: &[u8]) -> Result<Self> {
        if digits.iter().any(|&d| d > 2) {
            return Err(Error::invalid("ternary digits must be 0, 1 or 2"));
        }
        let index = digits
            .iter()
            .rev()
            .fold(0usize, |acc, &d| acc * 3 + d as usize);
        ternary_vertex(digits.len(), index)
    }
}

fn check_ternary_dim(n: usize) -> Result<()> {
    if n == 0 || n > MAX_TERNARY_DIM {
        return Err(Error::invalid(format!(
            "dimension {n} outside 1..={MAX_TERNARY_DIM}"
        )));
    }
    Ok(())
}

pub fn ternary_vertex(n: usize, m: usize) -> Result<TernaryVertex> {
    check_ternary_dim(n)?;
    if m >= pow3(n) {
        return Err(Error::invalid(format!("index {m} out of range for 3^{n}")));
    }
    let mut digits = Vec::with_capacity(n);
    let mut rest = m;
    for _ in 0..n {
        digits.push((rest % 3) as u8);
        rest /= 3;
    }
    let coords: Vec<i8> = digits.iter().map(|&d| d as i8 - 1).collect();
    let bits = coords
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .fold(0u64, |acc, (k, _)| acc | 1 << k);
    Ok(TernaryVertex {
        index: m,
        digits,
        coords,
        address: BitAddress::new(bits, n)?,
    })
}

/// Position-to-vertex map for the 3^n-vertex families.
///
/// `TernaryGray` is the reflected ternary Gray sequence: a digit is mirrored
/// (`d -> 2 - d`) whenever the digits above it sum to an odd number, so
/// consecutive positions differ in exactly one digit by one.
pub fn ternary_ordering(n: usize, scheme: &OrderingScheme) -> Result<Vec<usize>> {
    check_ternary_dim(n)?;
    let count = pow3(n);
    match scheme {
        OrderingScheme::TernaryNatural => Ok((0..count).collect()),
        OrderingScheme::TernaryGray => Ok((0..count).map(|i| ternary_gray(n, i)).collect()),
        OrderingScheme::Custom(perm) => {
            check_permutation(perm, count)?;
            Ok(perm.clone())
        }
        other => Err(Error::UnsupportedOrdering {
            scheme: other.name().into(),
            vertices: count,
        }),
    }
}

fn ternary_gray(n: usize, i: usize) -> usize {
    let mut out = 0usize;
    let mut higher_sum = 0usize;
    for k in (0..n).rev() {
        let d = (i / pow3(k)) % 3;
        let g = if higher_sum % 2 == 1 { 2 - d } else { d };
        out += g * pow3(k);
        higher_sum += d;
    }
    out
}
