//! Integer lattices in row Hermite normal form.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// A sublattice of `Z^ambient`, stored as the nonzero rows of its Hermite
/// normal form: pivot columns strictly increase down the rows, pivots are
/// positive, and entries above a pivot lie in `[0, pivot)`.
///
/// Two bases span the same lattice iff their stored rows are equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LatticeBasis {
    ambient: usize,
    rows: Vec<Vec<BigInt>>,
}

impl LatticeBasis {
    pub fn from_generators(ambient: usize, gens: impl IntoIterator<Item = Vec<BigInt>>) -> Result<Self> {
        let mut rows = Vec::new();
        for g in gens {
            if g.len() != ambient {
                return Err(Error::AmbientMismatch {
                    left: ambient,
                    right: g.len(),
                });
            }
            rows.push(g);
        }
        let rank = echelon_unimodular(&mut rows, ambient);
        rows.truncate(rank);
        reduce_above_pivots(&mut rows);
        Ok(LatticeBasis { ambient, rows })
    }

    pub fn from_i64_generators<R: AsRef<[i64]>>(ambient: usize, gens: &[R]) -> Result<Self> {
        Self::from_generators(
            ambient,
            gens.iter()
                .map(|g| g.as_ref().iter().map(|&x| BigInt::from(x)).collect()),
        )
    }

    /// The lattice spanned by the rows of `m`.
    pub fn row_lattice(m: &IntMatrix) -> Self {
        Self::from_generators(m.cols(), m.to_row_vecs()).expect("rows have matrix width")
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn to_matrix(&self) -> IntMatrix {
        IntMatrix::from_big_rows(self.ambient, self.rows.clone())
    }

    /// Membership test by reduction against the echelon rows.
    pub fn contains(&self, v: &[BigInt]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        let mut v = v.to_vec();
        for row in &self.rows {
            let c = pivot_col(row).expect("basis rows are nonzero");
            if v[..c].iter().any(|x| !x.is_zero()) {
                return false;
            }
            let (q, r) = v[c].div_rem(&row[c]);
            if !r.is_zero() {
                return false;
            }
            if !q.is_zero() {
                for (x, y) in v.iter_mut().zip(row) {
                    *x -= &q * y;
                }
            }
        }
        v.iter().all(Zero::is_zero)
    }
}

/// Whether two bases generate the same subgroup of `Z^d`.
pub fn lattice_equal(a: &LatticeBasis, b: &LatticeBasis) -> Result<bool> {
    if a.ambient != b.ambient {
        return Err(Error::AmbientMismatch {
            left: a.ambient,
            right: b.ambient,
        });
    }
    Ok(a.rows == b.rows)
}

/// The integer kernel `{v in Z^cols : M v = 0}` in Hermite normal form.
///
/// Row-reduces `[M^T | I]` unimodularly on the first block; the identity
/// parts of the rows whose first block vanished form a Z-basis of the kernel.
pub fn kernel_lattice(m: &IntMatrix) -> LatticeBasis {
    let (rows, cols) = (m.rows(), m.cols());
    let mut aug: Vec<Vec<BigInt>> = (0..cols)
        .map(|j| {
            let mut r = m.column(j);
            r.extend((0..cols).map(|k| BigInt::from(i64::from(k == j))));
            r
        })
        .collect();
    let rank = echelon_unimodular(&mut aug, rows);
    let kernel = aug.split_off(rank).into_iter().map(|mut r| r.split_off(rows));
    LatticeBasis::from_generators(cols, kernel).expect("kernel vectors have width cols")
}

fn pivot_col(row: &[BigInt]) -> Option<usize> {
    row.iter().position(|x| !x.is_zero())
}

/// Unimodular row echelon on the first `pivot_cols` columns. Returns the
/// number of pivot rows; rows below it vanish on those columns.
pub(crate) fn echelon_unimodular(a: &mut [Vec<BigInt>], pivot_cols: usize) -> usize {
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == a.len() {
            break;
        }
        let mut found = false;
        loop {
            let best = (r..a.len())
                .filter(|&i| !a[i][c].is_zero())
                .min_by(|&i, &j| a[i][c].abs().cmp(&a[j][c].abs()));
            let Some(p) = best else { break };
            found = true;
            a.swap(r, p);
            let (head, tail) = a.split_at_mut(r + 1);
            let pivot = &head[r];
            let mut clean = true;
            for row in tail.iter_mut() {
                if row[c].is_zero() {
                    continue;
                }
                let q = row[c].div_floor(&pivot[c]);
                for (x, y) in row.iter_mut().zip(pivot) {
                    *x -= &q * y;
                }
                clean &= row[c].is_zero();
            }
            if clean {
                break;
            }
        }
        if found {
            if a[r][c].is_negative() {
                for x in a[r].iter_mut() {
                    *x = -&*x;
                }
            }
            r += 1;
        }
    }
    r
}

fn reduce_above_pivots(rows: &mut [Vec<BigInt>]) {
    for k in 0..rows.len() {
        let c = pivot_col(&rows[k]).expect("echelon rows are nonzero");
        let (head, tail) = rows.split_at_mut(k);
        let pivot = &tail[0];
        for row in head.iter_mut() {
            let q = row[c].div_floor(&pivot[c]);
            if !q.is_zero() {
                for (x, y) in row.iter_mut().zip(pivot) {
                    *x -= &q * y;
                }
            }
        }
    }
}
