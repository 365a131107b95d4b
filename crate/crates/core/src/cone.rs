//! Rational polyhedral cones spanned by exponent vectors, described by their
//! facet inequalities.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::matrix::make_primitive;
use crate::scalar::{self, IncrementalBasis};
use crate::subsets::Combinations;

/// The cone `R_{>=0} g_1 + ... + R_{>=0} g_n` of non-negative integer
/// vectors. Membership is decided for points of the linear span only.
#[derive(Debug, Clone)]
pub(crate) struct RationalCone {
    /// Coordinates on which projection is injective on the linear span.
    coords: Vec<usize>,
    /// Inequalities `n . p >= 0` on the projected coordinates.
    facets: Vec<Vec<BigInt>>,
}

impl RationalCone {
    pub(crate) fn spanned_by(dim: usize, gens: &[Vec<u32>]) -> Self {
        let mut rows = IncrementalBasis::<BigInt>::new(gens.len());
        let mut coords = Vec::new();
        for i in 0..dim {
            let row: Vec<u32> = gens.iter().map(|g| g[i]).collect();
            if rows.push(&row).expect("BigInt never overflows") {
                coords.push(i);
            }
        }
        let projected: Vec<Vec<BigInt>> = gens
            .iter()
            .map(|g| coords.iter().map(|&i| BigInt::from(g[i])).collect())
            .collect();
        let k = coords.len();
        let mut facets: Vec<Vec<BigInt>> = Vec::new();
        for subset in Combinations::new(projected.len(), k.saturating_sub(1)) {
            if k == 0 {
                break;
            }
            let mut normal = Vec::with_capacity(k);
            for col in 0..k {
                let minor: Vec<Vec<BigInt>> = subset
                    .iter()
                    .map(|&g| {
                        projected[g]
                            .iter()
                            .enumerate()
                            .filter(|&(j, _)| j != col)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let c = scalar::det(minor).expect("BigInt never overflows");
                normal.push(if col % 2 == 0 { c } else { -c });
            }
            if normal.iter().all(Zero::is_zero) {
                continue;
            }
            let values: Vec<BigInt> = projected.iter().map(|g| inner(&normal, g)).collect();
            let nonneg = values.iter().all(|v| !v.is_negative());
            if !nonneg && values.iter().any(|v| v.is_positive()) {
                continue;
            }
            if !nonneg {
                for x in normal.iter_mut() {
                    *x = -&*x;
                }
            }
            make_primitive(&mut normal);
            if !facets.contains(&normal) {
                facets.push(normal);
            }
        }
        RationalCone { coords, facets }
    }

    pub(crate) fn contains(&self, p: &[u32]) -> bool {
        let projected: Vec<BigInt> = self.coords.iter().map(|&i| BigInt::from(p[i])).collect();
        self.facets.iter().all(|n| !inner(n, &projected).is_negative())
    }

    #[cfg(test)]
    pub(crate) fn facet_count(&self) -> usize {
        self.facets.len()
    }
}

fn inner(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
