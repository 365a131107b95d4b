//! Exact integer scalars for the hot enumeration loops: machine integers
//! with overflow detection, and `BigInt` as the fallback that never fails.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Arithmetic overflowed the machine representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Overflow;

pub(crate) trait Exact: Clone + PartialEq + core::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_u32(x: u32) -> Self;
    fn is_zero(&self) -> bool;
    fn neg(&self) -> Result<Self, Overflow>;
    fn add(&self, rhs: &Self) -> Result<Self, Overflow>;
    fn sub(&self, rhs: &Self) -> Result<Self, Overflow>;
    fn mul(&self, rhs: &Self) -> Result<Self, Overflow>;
    /// `self / rhs` where the division is known to be exact.
    fn div_exact(&self, rhs: &Self) -> Self;
    /// Non-negative gcd.
    fn gcd(&self, rhs: &Self) -> Self;
}

impl Exact for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn from_u32(x: u32) -> Self {
        i64::from(x)
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn neg(&self) -> Result<Self, Overflow> {
        self.checked_neg().ok_or(Overflow)
    }
    fn add(&self, rhs: &Self) -> Result<Self, Overflow> {
        self.checked_add(*rhs).ok_or(Overflow)
    }
    fn sub(&self, rhs: &Self) -> Result<Self, Overflow> {
        self.checked_sub(*rhs).ok_or(Overflow)
    }
    fn mul(&self, rhs: &Self) -> Result<Self, Overflow> {
        self.checked_mul(*rhs).ok_or(Overflow)
    }
    fn div_exact(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn gcd(&self, rhs: &Self) -> Self {
        Integer::gcd(self, rhs)
    }
}

impl Exact for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_u32(x: u32) -> Self {
        BigInt::from(x)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn neg(&self) -> Result<Self, Overflow> {
        Ok(-self)
    }
    fn add(&self, rhs: &Self) -> Result<Self, Overflow> {
        Ok(self + rhs)
    }
    fn sub(&self, rhs: &Self) -> Result<Self, Overflow> {
        Ok(self - rhs)
    }
    fn mul(&self, rhs: &Self) -> Result<Self, Overflow> {
        Ok(self * rhs)
    }
    fn div_exact(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn gcd(&self, rhs: &Self) -> Self {
        Integer::gcd(self, rhs)
    }
}

/// Bareiss determinant with overflow detection.
pub(crate) fn det<T: Exact>(mut a: Vec<Vec<T>>) -> Result<T, Overflow> {
    let n = a.len();
    if n == 0 {
        return Ok(T::one());
    }
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    negate = !negate;
                }
                None => return Ok(T::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i][j].mul(&a[k][k])?.sub(&a[i][k].mul(&a[k][j])?)?;
                a[i][j] = v.div_exact(&prev);
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        Ok(d)
    }
}

pub(crate) fn dot<T: Exact>(a: &[T], b: &[u32]) -> Result<T, Overflow> {
    let mut acc = T::zero();
    for (x, &y) in a.iter().zip(b) {
        if y != 0 {
            acc = acc.add(&x.mul(&T::from_u32(y))?)?;
        }
    }
    Ok(acc)
}

/// Rows in echelon form over the rationals, grown and shrunk one vector at
/// a time. Each stored row is primitive and vanishes on the pivot columns of
/// all rows stored before it.
#[derive(Debug, Clone)]
pub(crate) struct IncrementalBasis<T> {
    width: usize,
    rows: Vec<(usize, Vec<T>)>,
}

impl<T: Exact> IncrementalBasis<T> {
    pub(crate) fn new(width: usize) -> Self {
        IncrementalBasis {
            width,
            rows: Vec::with_capacity(width),
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` if it is independent of the stored rows. Returns whether it
    /// was added.
    pub(crate) fn push(&mut self, v: &[u32]) -> Result<bool, Overflow> {
        let mut w: Vec<T> = v.iter().map(|&x| T::from_u32(x)).collect();
        for (p, row) in &self.rows {
            if w[*p].is_zero() {
                continue;
            }
            let g = row[*p].gcd(&w[*p]);
            let (sr, sw) = (w[*p].div_exact(&g), row[*p].div_exact(&g));
            for (x, y) in w.iter_mut().zip(row) {
                *x = x.mul(&sw)?.sub(&y.mul(&sr)?)?;
            }
        }
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let g = w.iter().fold(T::zero(), |g, x| g.gcd(x));
        for x in w.iter_mut() {
            *x = x.div_exact(&g);
        }
        self.rows.push((p, w));
        Ok(true)
    }

    pub(crate) fn pop(&mut self) {
        self.rows.pop();
    }

    /// For exactly `width - 1` independent rows: a nonzero vector orthogonal
    /// to all of them, by cofactor expansion along a virtual extra row.
    pub(crate) fn normal(&self) -> Result<Vec<T>, Overflow> {
        debug_assert_eq!(self.rows.len() + 1, self.width);
        let mut n = Vec::with_capacity(self.width);
        for k in 0..self.width {
            let minor: Vec<Vec<T>> = self
                .rows
                .iter()
                .map(|(_, r)| {
                    r.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != k)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let c = det(minor)?;
            n.push(if k % 2 == 0 { c } else { c.neg()? });
        }
        Ok(n)
    }
}
