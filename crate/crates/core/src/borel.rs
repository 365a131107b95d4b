//! Borel (strongly stable) monomial sets.
//!
//! A set of monomials of one degree is strongly stable when, for every
//! member `u`, every `x_j` dividing `u` and every `i < j`, the monomial
//! `x_i u / x_j` is again a member. Its Borel generators are the members that
//! are maximal for the Borel order [`borel_leq`].

use alloc::format;
use alloc::vec::Vec;

use hashbrown::HashSet;

use crate::error::{Error, Result};
use crate::monomial::{borel_leq, Monomial, MonomialSet};

/// A strongly stable set of monomials of degree `degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorelSet {
    members: MonomialSet,
    degree: u32,
}

impl BorelSet {
    /// Wraps `members` after checking that it is nonempty, equigenerated and
    /// strongly stable.
    pub fn new(members: MonomialSet) -> Result<Self> {
        let degree = members.common_degree()?;
        if !is_strongly_stable(&members) {
            return Err(Error::NotStronglyStable);
        }
        Ok(BorelSet { members, degree })
    }

    pub fn dim(&self) -> usize {
        self.members.dim()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn members(&self) -> &MonomialSet {
        &self.members
    }

    pub fn into_members(self) -> MonomialSet {
        self.members
    }
}

/// The smallest Borel set containing `seed`.
pub fn borel_closure(seed: &MonomialSet) -> Result<BorelSet> {
    let degree = seed.common_degree()?;
    let mut seen: HashSet<Monomial> = seed.iter().cloned().collect();
    let mut work: Vec<Monomial> = seed.iter().cloned().collect();
    while let Some(u) = work.pop() {
        for j in 1..u.dim() {
            if u.exp(j) == 0 {
                continue;
            }
            for i in 0..j {
                let v = u.exchange(j, i).expect("x_j divides u");
                if !seen.contains(&v) {
                    seen.insert(v.clone());
                    work.push(v);
                }
            }
        }
    }
    let members = MonomialSet::new(seed.dim(), seen)?;
    Ok(BorelSet { members, degree })
}

/// The first `(u, x_i u / x_j)` with the second monomial missing from `set`,
/// scanning members in canonical order.
pub fn first_missing_move(set: &MonomialSet) -> Option<(Monomial, Monomial)> {
    for u in set {
        for j in 1..u.dim() {
            if u.exp(j) == 0 {
                continue;
            }
            // adjacent moves generate all the others
            let v = u.exchange(j, j - 1).expect("x_j divides u");
            if !set.contains(&v) {
                return Some((u.clone(), v));
            }
        }
    }
    None
}

pub fn is_strongly_stable(set: &MonomialSet) -> bool {
    first_missing_move(set).is_none()
}

/// The Borel-maximal members of a strongly stable set. Fails with
/// [`Error::Internal`] if their closure does not give back `set`.
pub fn borel_generators(set: &MonomialSet) -> Result<MonomialSet> {
    set.common_degree()?;
    if !is_strongly_stable(set) {
        return Err(Error::NotStronglyStable);
    }
    let indices: Vec<Vec<usize>> = set.iter().map(Monomial::indices).collect();
    let below = |a: &[usize], b: &[usize]| a.iter().zip(b).all(|(x, y)| x <= y);
    let maximal =
        (0..indices.len()).filter(|&k| !(0..indices.len()).any(|l| l != k && below(&indices[k], &indices[l])));
    let gens = MonomialSet::new(set.dim(), maximal.map(|k| set.as_slice()[k].clone()))?;
    let closure = borel_closure(&gens)?;
    if closure.members() != set {
        return Err(Error::Internal(format!(
            "closure of the Borel-maximal elements {} has {} members, expected {}",
            gens,
            closure.members().len(),
            set.len()
        )));
    }
    Ok(gens)
}

/// Whether `set` is a principal Borel set: exactly one Borel generator.
pub fn is_principal(set: &MonomialSet) -> Result<bool> {
    Ok(borel_generators(set)?.len() == 1)
}

/// Borel generator of the Gauss algebra of the principal Borel algebra
/// generated by `m`, by the closed form
///
/// `m' = m^{i_s} / (x_{i_1}^{i_1 - 1} x_{i_2}^{i_2 - i_1} ... x_{i_s}^{i_s - i_{s-1} + 1})`
///
/// where `i_1 < ... < i_s` is the support of `m` (1-based). With a single
/// support variable the denominator is `x_{i_1}^{i_1}`, the reading under
/// which the denominator always has total degree `i_s`.
///
/// The largest support index must be the last variable, otherwise the
/// algebra has dimension `i_s < d`.
pub fn principal_gauss_generator(m: &Monomial) -> Result<Monomial> {
    let d = m.dim();
    let support = m.support();
    let Some(&last) = support.last() else {
        return Err(Error::InvalidArgument(
            "Borel generator must have positive degree".into(),
        ));
    };
    if last + 1 != d {
        return Err(Error::DimensionDeficient {
            dim: last + 1,
            ambient: d,
        });
    }
    let mut exps = alloc::vec![0u32; d];
    let mut prev = 1usize;
    for &i in &support {
        exps[i] = (i + 1 - prev) as u32;
        prev = i + 1;
    }
    exps[last] += 1;
    let denominator = Monomial::new(exps);
    let result = m
        .pow(d as u32)
        .div(&denominator)
        .ok_or_else(|| Error::Internal(format!("{} does not divide {}^{}", denominator, m, d)))?;
    let expected = (m.degree() - 1) * d as u32;
    if result.degree() != expected {
        return Err(Error::Internal(format!(
            "{} has degree {}, expected {}",
            result,
            result.degree(),
            expected
        )));
    }
    Ok(result)
}

/// Whether `u` is Borel-maximal in `set`.
pub fn is_borel_maximal(u: &Monomial, set: &MonomialSet) -> Result<bool> {
    for v in set {
        if v != u && borel_leq(u, v)? {
            return Ok(false);
        }
    }
    Ok(true)
}
