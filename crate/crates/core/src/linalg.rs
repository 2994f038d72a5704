//! Exact matrix rank over GF(2), GF(p) and the rationals.
//!
//! Matrices arrive column-sparse with small integer entries (boundary maps
//! have entries in {-1, 0, 1}).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficient field for homology and regularity computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub enum Field {
    #[default]
    Gf2,
    /// GF(p) for a prime `p`.
    Gfp(u32),
    Rational,
}

impl Field {
    /// Validated GF(p).
    pub fn gfp(p: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::domain(format!("{p} is not prime")));
        }
        Ok(if p == 2 { Field::Gf2 } else { Field::Gfp(p) })
    }

    pub fn characteristic(self) -> u32 {
        match self {
            Field::Gf2 => 2,
            Field::Gfp(p) => p,
            Field::Rational => 0,
        }
    }

    pub fn validate(self) -> Result<Field> {
        match self {
            Field::Gfp(p) => Field::gfp(p),
            other => Ok(other),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Gf2 => f.write_str("gf2"),
            Field::Gfp(p) => write!(f, "gfp:{p}"),
            Field::Rational => f.write_str("q"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        match s {
            "gf2" => Ok(Field::Gf2),
            "q" => Ok(Field::Rational),
            _ => {
                let p = s
                    .strip_prefix("gfp:")
                    .and_then(|p| p.parse::<u32>().ok())
                    .ok_or_else(|| Error::domain(format!("unknown field {s:?}")))?;
                Field::gfp(p)
            }
        }
    }
}

impl Serialize for Field {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Field {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = u64::from(p);
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A sparse integer matrix stored by columns as `(row, value)` pairs.
#[derive(Clone, Debug, Default)]
pub struct SparseColumns {
    pub rows: usize,
    pub cols: Vec<Vec<(usize, i64)>>,
}

impl SparseColumns {
    pub fn new(rows: usize) -> Self {
        SparseColumns {
            rows,
            cols: Vec::new(),
        }
    }

    pub fn push_column(&mut self, col: Vec<(usize, i64)>) {
        self.cols.push(col);
    }

    pub fn rank(&self, field: Field) -> usize {
        if self.rows == 0 || self.cols.is_empty() {
            return 0;
        }
        match field {
            Field::Gf2 => rank_gf2(self),
            Field::Gfp(p) => rank_gfp(self, u64::from(p)),
            Field::Rational => rank_rational(self),
        }
    }
}

fn rank_gf2(m: &SparseColumns) -> usize {
    let words = m.rows.div_ceil(64);
    // pivots[r] holds a reduced column whose highest set bit is r.
    let mut pivots: Vec<Option<Vec<u64>>> = vec![None; m.rows];
    let mut rank = 0;
    for col in &m.cols {
        let mut v = vec![0u64; words];
        for &(r, x) in col {
            if x & 1 == 1 {
                v[r / 64] ^= 1 << (r % 64);
            }
        }
        while let Some(top) = highest_bit(&v) {
            match &pivots[top] {
                Some(p) => v.iter_mut().zip(p).for_each(|(a, b)| *a ^= b),
                None => {
                    pivots[top] = Some(v);
                    rank += 1;
                    break;
                }
            }
        }
        if rank == m.rows {
            break;
        }
    }
    rank
}

fn highest_bit(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .rev()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + 63 - w.leading_zeros() as usize)
}

fn rank_gfp(m: &SparseColumns, p: u64) -> usize {
    let reduce = |x: i64| -> u64 { x.rem_euclid(p as i64) as u64 };
    let mut pivots: Vec<Option<Vec<u64>>> = vec![None; m.rows];
    let mut rank = 0;
    for col in &m.cols {
        let mut v = vec![0u64; m.rows];
        for &(r, x) in col {
            v[r] = (v[r] + reduce(x)) % p;
        }
        loop {
            let Some(top) = v.iter().rposition(|&x| x != 0) else { break };
            match &pivots[top] {
                Some(piv) => {
                    // piv[top] == 1 after normalisation.
                    let factor = v[top];
                    for (a, &b) in v.iter_mut().zip(piv) {
                        *a = (*a + p - factor * b % p) % p;
                    }
                }
                None => {
                    let inv = mod_pow(v[top], p - 2, p);
                    v.iter_mut().for_each(|a| *a = *a * inv % p);
                    pivots[top] = Some(v);
                    rank += 1;
                    break;
                }
            }
        }
        if rank == m.rows {
            break;
        }
    }
    rank
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Integer arithmetic for fraction-free elimination.
trait Exact: Clone + Sized {
    fn from_i64(x: i64) -> Self;
    fn is_zero(&self) -> bool;
    /// `(a*d - b*c) / e`, exact by Sylvester's identity; `None` on overflow.
    fn bareiss(a: &Self, d: &Self, b: &Self, c: &Self, e: &Self) -> Option<Self>;
}

impl Exact for i128 {
    fn from_i64(x: i64) -> Self {
        i128::from(x)
    }

    fn is_zero(&self) -> bool {
        *self == 0
    }

    fn bareiss(a: &Self, d: &Self, b: &Self, c: &Self, e: &Self) -> Option<Self> {
        let num = a.checked_mul(*d)?.checked_sub(b.checked_mul(*c)?)?;
        Some(num / e)
    }
}

impl Exact for BigInt {
    fn from_i64(x: i64) -> Self {
        BigInt::from(x)
    }

    fn is_zero(&self) -> bool {
        *self == BigInt::from(0)
    }

    fn bareiss(a: &Self, d: &Self, b: &Self, c: &Self, e: &Self) -> Option<Self> {
        Some((a * d - b * c) / e)
    }
}

fn rank_rational(m: &SparseColumns) -> usize {
    bareiss_rank::<i128>(m).unwrap_or_else(|| {
        bareiss_rank::<BigInt>(m).expect("big integers cannot overflow")
    })
}

/// Fraction-free (Bareiss) elimination; rows of the dense matrix are the columns
/// of `m`, which leaves the rank unchanged.
fn bareiss_rank<T: Exact>(m: &SparseColumns) -> Option<usize> {
    let width = m.rows;
    let mut rows: Vec<Vec<T>> = m
        .cols
        .iter()
        .map(|col| {
            let mut r = vec![T::from_i64(0); width];
            for &(i, x) in col {
                r[i] = T::from_i64(x);
            }
            r
        })
        .collect();
    let height = rows.len();
    let mut prev = T::from_i64(1);
    let mut rank = 0;
    for c in 0..width {
        if rank == height {
            break;
        }
        let Some(pivot_row) = (rank..height).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let pivot = rows[rank][c].clone();
        for r in rank + 1..height {
            let lead = rows[r][c].clone();
            for k in c + 1..width {
                let updated = T::bareiss(&pivot, &rows[r][k], &lead, &rows[rank][k], &prev)?;
                rows[r][k] = updated;
            }
            rows[r][c] = T::from_i64(0);
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}
