//! Squarefree Veronese sets, the families `Mon(t, r)` of degree-`r`
//! monomials with support of size at least `t`, and the polymatroid exchange
//! property.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialSet};

/// All monomials of degree `r` in `d` variables.
pub fn monomials_of_degree(r: u32, d: usize) -> MonomialSet {
    fn go(prefix: &mut Vec<u32>, d: usize, left: u32, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == d {
            prefix.push(left);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in 0..=left {
            prefix.push(e);
            go(prefix, d, left - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if d > 0 {
        go(&mut Vec::with_capacity(d), d, r, &mut out);
    }
    MonomialSet::new(d, out).expect("generated in d variables")
}

/// The `C(d, r)` squarefree monomials of degree `r`.
pub fn squarefree_veronese(r: u32, d: usize) -> Result<MonomialSet> {
    if r == 0 || r as usize > d {
        return Err(Error::InvalidArgument(format!(
            "squarefree Veronese needs 1 <= r <= d, got r = {}, d = {}",
            r, d
        )));
    }
    let all = monomials_of_degree(r, d);
    MonomialSet::new(d, all.into_vec().into_iter().filter(Monomial::is_squarefree))
}

/// `Mon(t, r)`: degree-`r` monomials in `d` variables with at least `t`
/// variables in their support.
pub fn mon_min_support(t: usize, r: u32, d: usize) -> Result<MonomialSet> {
    if t > d {
        return Err(Error::InvalidArgument(format!(
            "support bound t = {} exceeds d = {}",
            t, d
        )));
    }
    let all = monomials_of_degree(r, d);
    MonomialSet::new(d, all.into_vec().into_iter().filter(|m| m.support_len() >= t))
}

/// Result of [`polymatroid_exchange_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExchangeOutcome {
    Holds,
    /// `deg_i(u) > deg_i(v)`, yet no `j` with `deg_j(u) < deg_j(v)` has
    /// `x_j u / x_i` in the set. `i` is 0-based.
    Violation {
        u: Monomial,
        v: Monomial,
        i: usize,
    },
}

/// Whether `(u, v, i)` violates the exchange property in `set`.
pub fn is_exchange_violation(set: &MonomialSet, u: &Monomial, v: &Monomial, i: usize) -> bool {
    if u.exp(i) <= v.exp(i) {
        return false;
    }
    !(0..u.dim()).any(|j| u.exp(j) < v.exp(j) && set.contains(&u.exchange(i, j).expect("deg_i(u) > 0")))
}

/// Exhaustive check of the exchange property, `O(|G|^2 d log |G|)`.
///
/// Reports the first violation found scanning `u` in canonical order, `v`
/// from the lexicographically smallest exponent vector upwards, and `i`
/// ascending.
pub fn polymatroid_exchange_check(set: &MonomialSet) -> Result<ExchangeOutcome> {
    set.common_degree()?;
    for u in set {
        for v in set.as_slice().iter().rev() {
            for i in 0..set.dim() {
                if is_exchange_violation(set, u, v, i) {
                    return Ok(ExchangeOutcome::Violation {
                        u: u.clone(),
                        v: v.clone(),
                        i,
                    });
                }
            }
        }
    }
    Ok(ExchangeOutcome::Holds)
}

/// The Gauss generating set of the squarefree quadratic Veronese algebra in
/// `d >= 4` variables: `Mon(3, 4)` without `x_1 x_2 x_3 x_4` for `d = 4`,
/// and `Mon(3, d)` for `d >= 5`.
pub fn expected_gauss_squarefree2(d: usize) -> Result<MonomialSet> {
    if d < 4 {
        return Err(Error::InvalidArgument(format!(
            "expected Gauss set is stated for d >= 4, got {}",
            d
        )));
    }
    let family = mon_min_support(3, d as u32, d)?;
    if d == 4 {
        let all_vars = MonomialSet::new(4, [Monomial::new(alloc::vec![1, 1, 1, 1])])?;
        return Ok(family.difference(&all_vars));
    }
    Ok(family)
}

/// Monomials of `Mon(r + 1, (r - 1) d)` whose exponents are all at most
/// `d - 2`; contains the Gauss generators of the squarefree `r`-Veronese
/// algebra whenever `d >= r + 2`.
pub fn squarefree_gauss_container(r: u32, d: usize) -> Result<MonomialSet> {
    if r == 0 || d < r as usize + 2 {
        return Err(Error::InvalidArgument(format!(
            "container needs d >= r + 2, got r = {}, d = {}",
            r, d
        )));
    }
    let family = mon_min_support(r as usize + 1, (r - 1) * d as u32, d)?;
    let cap = d as u32 - 2;
    MonomialSet::new(
        d,
        family
            .into_vec()
            .into_iter()
            .filter(|m| m.exps().iter().all(|&e| e <= cap)),
    )
}
