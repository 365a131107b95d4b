//! Monomials as exponent vectors, canonical monomial sets, and the Borel
//! partial order.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// A monomial `x_1^{a_1} ... x_d^{a_d}` stored as its exponent vector.
///
/// Variables are 0-based internally: position `i` holds the exponent of
/// `x_{i+1}`. Display and parsing use the 1-based names.
///
/// `Ord` is the canonical output order: lexicographic with
/// `x_1 > x_2 > ... > x_d`, greatest monomial first. Sorting a slice of
/// monomials therefore lists `x_1^2` before `x_1 x_2` before `x_2^2`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(dim: usize) -> Self {
        Monomial {
            exps: alloc::vec![0; dim],
        }
    }

    /// The variable `x_{i+1}` in `dim` variables.
    pub fn var(dim: usize, i: usize) -> Self {
        let mut m = Self::one(dim);
        m.exps[i] = 1;
        m
    }

    /// Builds a monomial from a list of 0-based variable indices, with
    /// repetition: `[0, 0, 2]` is `x_1^2 x_3`.
    pub fn from_indices(dim: usize, indices: &[usize]) -> Self {
        let mut m = Self::one(dim);
        for &i in indices {
            m.exps[i] += 1;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// 0-based indices of the variables dividing the monomial.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.exps[i] > 0).collect()
    }

    pub fn support_len(&self) -> usize {
        self.exps.iter().filter(|&&e| e > 0).count()
    }

    /// The weakly increasing sequence of variable indices `i_1 <= ... <= i_r`
    /// with `u = x_{i_1} ... x_{i_r}`.
    pub fn indices(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.degree() as usize);
        for (i, &e) in self.exps.iter().enumerate() {
            out.extend(core::iter::repeat(i).take(e as usize));
        }
        out
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.dim() == other.dim() && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.dim(), other.dim());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    /// `self / other`, or `None` if `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|a| a * k).collect(),
        }
    }

    /// `x_to * (self / x_from)`, or `None` if `x_from` does not divide.
    pub fn exchange(&self, from: usize, to: usize) -> Option<Monomial> {
        if self.exps[from] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[from] -= 1;
        exps[to] += 1;
        Some(Monomial { exps })
    }

    /// Parses `x1^2*x3`, `x2`, or `1` in `dim` variables.
    pub fn parse_product(dim: usize, s: &str) -> Result<Monomial> {
        let s = s.trim();
        let mut m = Monomial::one(dim);
        if s == "1" {
            return Ok(m);
        }
        for token in s.split('*') {
            let token = token.trim();
            let body = token
                .strip_prefix('x')
                .ok_or_else(|| bad_token(token, "expected x<i>[^<e>]"))?;
            let (var, exp) = match body.split_once('^') {
                Some((v, e)) => (v, e.parse::<u32>().map_err(|_| bad_token(token, "bad exponent"))?),
                None => (body, 1),
            };
            let var: usize = var.parse().map_err(|_| bad_token(token, "bad variable index"))?;
            if var == 0 || var > dim {
                return Err(bad_token(token, "variable index out of range"));
            }
            m.exps[var - 1] += exp;
        }
        Ok(m)
    }

    /// Writes the monomial with variables named `{prefix}1, {prefix}2, ...`.
    pub fn fmt_with(&self, prefix: &str, f: &mut impl fmt::Write) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_char('*')?;
            }
            first = false;
            write!(f, "{}{}", prefix, i + 1)?;
            if e > 1 {
                write!(f, "^{}", e)?;
            }
        }
        if first {
            f.write_char('1')?;
        }
        Ok(())
    }
}

fn bad_token(token: &str, why: &str) -> Error {
    let mut msg = String::new();
    let _ = fmt::write(&mut msg, format_args!("token `{}`: {}", token, why));
    Error::InvalidArgument(msg)
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other.exps.cmp(&self.exps)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with("x", f)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// `u ⪯ v` in the Borel order: writing both as weakly increasing index
/// sequences, `u`'s `k`-th index is at most `v`'s `k`-th index for every `k`.
pub fn borel_leq(u: &Monomial, v: &Monomial) -> Result<bool> {
    check_comparable(u, v)?;
    let (iu, iv) = (u.indices(), v.indices());
    Ok(iu.iter().zip(&iv).all(|(a, b)| a <= b))
}

/// Tail-sum form of the Borel order. With `v = x_{i_1}^{c_1} ... x_{i_s}^{c_s}`
/// (`i_1 < ... < i_s`, all `c_j > 0`) and `u = x^a`, `u` is not below `v`
/// exactly when some `j` has `a_{i_j+1} + ... + a_d >= c_{j+1} + ... + c_s + 1`.
///
/// Returns the 0-based variable index `i_j` of the first such `j`, or `None`
/// when `u ⪯ v`.
pub fn borel_violation(u: &Monomial, v: &Monomial) -> Result<Option<usize>> {
    check_comparable(u, v)?;
    let support = v.support();
    for (j, &ij) in support.iter().enumerate() {
        let tail_u: u32 = u.exps()[ij + 1..].iter().sum();
        let tail_v: u32 = support[j + 1..].iter().map(|&k| v.exp(k)).sum();
        if tail_u > tail_v {
            return Ok(Some(ij));
        }
    }
    Ok(None)
}

fn check_comparable(u: &Monomial, v: &Monomial) -> Result<()> {
    if u.dim() != v.dim() {
        return Err(Error::AmbientMismatch {
            left: u.dim(),
            right: v.dim(),
        });
    }
    if u.degree() != v.degree() {
        return Err(Error::DegreeMismatch {
            left: u.degree(),
            right: v.degree(),
        });
    }
    Ok(())
}

/// A deduplicated set of monomials in a common number of variables, kept in
/// canonical order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialSet {
    dim: usize,
    elems: Vec<Monomial>,
}

impl MonomialSet {
    pub fn new(dim: usize, elems: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut elems: Vec<Monomial> = elems.into_iter().collect();
        if let Some(bad) = elems.iter().find(|m| m.dim() != dim) {
            return Err(Error::AmbientMismatch {
                left: dim,
                right: bad.dim(),
            });
        }
        elems.sort_unstable();
        elems.dedup();
        Ok(MonomialSet { dim, elems })
    }

    /// Parses a whitespace- or comma-separated list of product strings.
    pub fn parse(dim: usize, s: &str) -> Result<Self> {
        let elems = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| Monomial::parse_product(dim, t))
            .collect::<Result<Vec<_>>>()?;
        Self::new(dim, elems)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Monomial> {
        self.elems.iter()
    }

    pub fn as_slice(&self) -> &[Monomial] {
        &self.elems
    }

    pub fn into_vec(self) -> Vec<Monomial> {
        self.elems
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.elems.binary_search(m).is_ok()
    }

    /// The common degree of all members.
    pub fn common_degree(&self) -> Result<u32> {
        let first = self.elems.first().ok_or(Error::Empty)?.degree();
        match self.elems.iter().map(Monomial::degree).find(|&e| e != first) {
            Some(other) => Err(Error::MixedDegrees { first, other }),
            None => Ok(first),
        }
    }

    /// Exponent matrix: one column per member, in canonical order.
    pub fn log_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.dim, self.elems.len(), |i, j| i64::from(self.elems[j].exp(i)))
    }

    pub fn difference(&self, other: &MonomialSet) -> MonomialSet {
        MonomialSet {
            dim: self.dim,
            elems: self.elems.iter().filter(|m| !other.contains(m)).cloned().collect(),
        }
    }
}

impl<'a> IntoIterator for &'a MonomialSet {
    type Item = &'a Monomial;
    type IntoIter = core::slice::Iter<'a, Monomial>;

    fn into_iter(self) -> Self::IntoIter {
        self.elems.iter()
    }
}

impl fmt::Display for MonomialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, m) in self.elems.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", m)?;
        }
        f.write_str("}")
    }
}

/// `K[g_1, ..., g_n]` for distinct monomials `g_i` of one positive degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialAlgebra {
    gens: MonomialSet,
    degree: u32,
    duplicates_removed: usize,
}

impl MonomialAlgebra {
    /// Duplicate generators are dropped (see [`Self::duplicates_removed`]);
    /// mixed degrees are rejected.
    pub fn new(dim: usize, gens: Vec<Monomial>) -> Result<Self> {
        let given = gens.len();
        let gens = MonomialSet::new(dim, gens)?;
        let degree = gens.common_degree()?;
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        Ok(MonomialAlgebra {
            duplicates_removed: given - gens.len(),
            gens,
            degree,
        })
    }

    pub fn from_set(gens: MonomialSet) -> Result<Self> {
        let degree = gens.common_degree()?;
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        Ok(MonomialAlgebra {
            gens,
            degree,
            duplicates_removed: 0,
        })
    }

    pub fn dim(&self) -> usize {
        self.gens.dim()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn gens(&self) -> &MonomialSet {
        &self.gens
    }

    pub fn duplicates_removed(&self) -> usize {
        self.duplicates_removed
    }

    pub fn log_matrix(&self) -> IntMatrix {
        self.gens.log_matrix()
    }
}
