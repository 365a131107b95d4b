//! Gauss generating sets by pruned subset enumeration, and what can be read
//! off them: dimension, relation lattice, birationality, saturation gaps.

use alloc::vec::Vec;
use core::ops::Range;
use portable_atomic::{AtomicU64, Ordering};

use hashbrown::HashSet;
use num_bigint::BigInt;
use num_traits::Signed;

use crate::cone::RationalCone;
use crate::error::{Error, Result};
use crate::lattice::{kernel_lattice, lattice_equal, LatticeBasis};
use crate::monomial::{Monomial, MonomialAlgebra, MonomialSet};
use crate::scalar::{self, Exact, IncrementalBasis, Overflow};

/// Default cap on the number of `d`-subsets examined by [`gauss_generators`].
pub const DEFAULT_SUBSET_LIMIT: u64 = 10_000_000;

/// Default level bound for [`normality_probe`].
pub const DEFAULT_LEVEL_BOUND: u32 = 3;

/// Number of leaf visits a worker accumulates before publishing them to the
/// shared counter.
const FLUSH_EVERY: u64 = 1 << 12;

/// Counts examined `d`-subsets across one or more enumeration workers.
#[derive(Debug)]
pub struct SubsetBudget {
    limit: Option<u64>,
    used: AtomicU64,
}

impl SubsetBudget {
    pub fn new(limit: Option<u64>) -> Self {
        SubsetBudget {
            limit,
            used: AtomicU64::new(0),
        }
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    fn charge(&self, n: u64) -> Result<(), Exhausted> {
        let total = self.used.fetch_add(n, Ordering::Relaxed) + n;
        match self.limit {
            Some(limit) if total > limit => Err(Exhausted),
            _ => Ok(()),
        }
    }

    fn error(&self) -> Error {
        Error::LimitExceeded {
            limit: self.limit.unwrap_or(u64::MAX),
        }
    }
}

#[derive(Debug)]
struct Exhausted;

#[derive(Debug)]
enum Stop {
    Overflow,
    Exhausted,
}

impl From<Overflow> for Stop {
    fn from(_: Overflow) -> Self {
        Stop::Overflow
    }
}

impl From<Exhausted> for Stop {
    fn from(_: Exhausted) -> Self {
        Stop::Exhausted
    }
}

/// The Gauss generating set of a monomial algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussResult {
    /// Distinct monomials `(g_{i_1} ... g_{i_d}) / (x_1 ... x_d)` over the
    /// `d`-subsets with nonsingular exponent matrix, canonically sorted.
    pub gens: MonomialSet,
    pub source_degree: u32,
    pub dim: usize,
    /// Number of complete `d`-subsets reached by the enumeration; subsets cut
    /// off by rank pruning are not counted.
    pub subsets_examined: u64,
}

impl GaussResult {
    /// Degree `(r - 1) d` shared by every generator.
    pub fn degree(&self) -> u32 {
        (self.source_degree - 1) * self.dim as u32
    }
}

/// The products found by one enumeration worker, before the division by
/// `x_1 ... x_d`.
#[derive(Debug, Default)]
pub struct GaussPart {
    products: HashSet<Vec<u32>>,
    examined: u64,
}

impl GaussPart {
    pub fn merge(&mut self, other: GaussPart) {
        self.products.extend(other.products);
        self.examined += other.examined;
    }
}

/// Colexicographic enumeration of `d`-subsets of the generators with
/// incremental rank pruning. The subset space is partitioned by the largest
/// index of a subset so that disjoint ranges can run on separate workers.
#[derive(Debug, Clone)]
pub struct GaussEnumerator {
    dim: usize,
    degree: u32,
    cols: Vec<Vec<u32>>,
}

impl GaussEnumerator {
    pub fn new(alg: &MonomialAlgebra) -> Result<Self> {
        let dim = alg.dim();
        let rank = alg.log_matrix().rank();
        if rank < dim {
            return Err(Error::DimensionDeficient {
                dim: rank,
                ambient: dim,
            });
        }
        Ok(GaussEnumerator {
            dim,
            degree: alg.degree(),
            cols: alg.gens().iter().map(|g| g.exps().to_vec()).collect(),
        })
    }

    /// Valid values for the largest index of a `d`-subset.
    pub fn tops(&self) -> Range<usize> {
        self.dim.saturating_sub(1)..self.cols.len()
    }

    /// Enumerates the subsets whose largest index lies in `tops`.
    pub fn run(&self, tops: Range<usize>, budget: &SubsetBudget) -> Result<GaussPart> {
        match self.run_with::<i64>(tops.clone(), budget) {
            Ok(part) => Ok(part),
            Err(Stop::Exhausted) => Err(budget.error()),
            Err(Stop::Overflow) => {
                // Machine integers overflowed somewhere; redo the range exactly.
                // Subsets already charged in the failed attempt stay charged.
                self.run_with::<BigInt>(tops, budget).map_err(|stop| match stop {
                    Stop::Exhausted => budget.error(),
                    Stop::Overflow => unreachable!("BigInt arithmetic cannot overflow"),
                })
            }
        }
    }

    pub fn finish(&self, part: GaussPart) -> GaussResult {
        let gens = part
            .products
            .into_iter()
            .map(|p| Monomial::new(p.into_iter().map(|e| e - 1).collect()))
            .collect::<Vec<_>>();
        GaussResult {
            gens: MonomialSet::new(self.dim, gens).expect("products share the ambient dimension"),
            source_degree: self.degree,
            dim: self.dim,
            subsets_examined: part.examined,
        }
    }

    fn run_with<T: Exact>(&self, tops: Range<usize>, budget: &SubsetBudget) -> Result<GaussPart, Stop> {
        let mut walk = Walk {
            cols: &self.cols,
            basis: IncrementalBasis::<T>::new(self.dim),
            sums: alloc::vec![alloc::vec![0u32; self.dim]; self.dim + 1],
            part: GaussPart::default(),
            pending: 0,
            budget,
        };
        let tops = tops.start.max(self.tops().start)..tops.end.min(self.cols.len());
        for top in tops {
            walk.descend(self.dim, top + 1, top)?;
        }
        budget.charge(walk.pending)?;
        walk.part.examined += walk.pending;
        Ok(walk.part)
    }
}

struct Walk<'a, T> {
    cols: &'a [Vec<u32>],
    basis: IncrementalBasis<T>,
    /// `sums[k]` is the exponent sum of the columns chosen at depth `k`.
    sums: Vec<Vec<u32>>,
    part: GaussPart,
    pending: u64,
    budget: &'a SubsetBudget,
}

impl<T: Exact> Walk<'_, T> {
    /// Chooses `remaining` more columns with indices below `bound`; when
    /// `only` is given, the next column is fixed to it.
    fn descend(&mut self, remaining: usize, bound: usize, only: usize) -> Result<(), Stop> {
        let depth = self.basis.len();
        if remaining == 1 {
            return self.leaves(bound, only);
        }
        let range = if only < bound {
            only..only + 1
        } else {
            remaining - 1..bound
        };
        for i in range {
            if !self.basis.push(&self.cols[i])? {
                continue;
            }
            let (lo, hi) = self.sums.split_at_mut(depth + 1);
            for ((s, &p), &c) in hi[0].iter_mut().zip(&lo[depth]).zip(&self.cols[i]) {
                *s = p + c;
            }
            let r = self.descend(remaining - 1, i, usize::MAX);
            self.basis.pop();
            r?;
        }
        Ok(())
    }

    fn leaves(&mut self, bound: usize, only: usize) -> Result<(), Stop> {
        let depth = self.basis.len();
        let range = if only < bound { only..only + 1 } else { 0..bound };
        let normal = if range.is_empty() {
            Vec::new()
        } else {
            self.basis.normal()?
        };
        let mut product = alloc::vec![0u32; self.sums[depth].len()];
        for i in range {
            self.pending += 1;
            if self.pending == FLUSH_EVERY {
                self.budget.charge(self.pending)?;
                self.part.examined += self.pending;
                self.pending = 0;
            }
            for ((s, &p), &c) in product.iter_mut().zip(&self.sums[depth]).zip(&self.cols[i]) {
                *s = p + c;
            }
            if self.part.products.contains(product.as_slice()) {
                continue;
            }
            if !scalar::dot(&normal, &self.cols[i])?.is_zero() {
                self.part.products.insert(product.clone());
            }
        }
        Ok(())
    }
}

/// The Gauss generating set of `alg`, enumerated on the calling thread.
///
/// Fails with [`Error::DimensionDeficient`] when the exponent matrix has rank
/// below the number of variables, and with [`Error::LimitExceeded`] when more
/// than `limit` complete subsets would be examined.
pub fn gauss_generators(alg: &MonomialAlgebra, limit: Option<u64>) -> Result<GaussResult> {
    let walk = GaussEnumerator::new(alg)?;
    let budget = SubsetBudget::new(limit);
    let part = walk.run(walk.tops(), &budget)?;
    Ok(walk.finish(part))
}

/// Krull dimension of `alg`: the rank of its exponent matrix.
pub fn algebra_dimension(alg: &MonomialAlgebra) -> usize {
    alg.log_matrix().rank()
}

/// Relations among an equigenerated monomial set `y_1, ..., y_e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub dim: usize,
    pub edim: usize,
    pub kernel_rank: usize,
    /// When the relation lattice has rank one: the binomial
    /// `y^{u+} - y^{u-}` read off its Hermite-normal generator, as two
    /// monomials in the `edim` variables `y_i`.
    pub hypersurface_witness: Option<(Monomial, Monomial)>,
    pub kernel: LatticeBasis,
}

impl RelationReport {
    pub fn is_hypersurface(&self) -> bool {
        self.kernel_rank == 1
    }
}

pub fn relation_report(gens: &MonomialSet) -> Result<RelationReport> {
    gens.common_degree()?;
    let log = gens.log_matrix();
    let dim = log.rank();
    let kernel = kernel_lattice(&log);
    let kernel_rank = kernel.rank();
    let hypersurface_witness = (kernel_rank == 1).then(|| split_binomial(&kernel.rows()[0]));
    Ok(RelationReport {
        dim,
        edim: gens.len(),
        kernel_rank,
        hypersurface_witness,
        kernel,
    })
}

fn split_binomial(v: &[BigInt]) -> (Monomial, Monomial) {
    let part = |keep: fn(&BigInt) -> bool| {
        Monomial::new(
            v.iter()
                .map(|x| {
                    if keep(x) {
                        u32::try_from(x.magnitude()).expect("relation exponent fits u32")
                    } else {
                        0
                    }
                })
                .collect(),
        )
    };
    (part(|x| x.is_positive()), part(|x| x.is_negative()))
}

/// The lattice generated by `log(u) - log(v)` over members `u, v`.
pub fn quotient_lattice(set: &MonomialSet) -> Result<LatticeBasis> {
    let base = set.iter().next().ok_or(Error::Empty)?;
    LatticeBasis::from_generators(
        set.dim(),
        set.iter().skip(1).map(|g| {
            g.exps()
                .iter()
                .zip(base.exps())
                .map(|(&a, &b)| BigInt::from(a) - BigInt::from(b))
                .collect()
        }),
    )
}

/// Whether `Proj A --> Proj K[G]` is birational for the equigenerated set
/// `G`: the degree-zero quotient lattices of `A` and `G` coincide.
pub fn is_birational(alg: &MonomialAlgebra, gauss: &MonomialSet) -> Result<bool> {
    if alg.dim() != gauss.dim() {
        return Err(Error::AmbientMismatch {
            left: alg.dim(),
            right: gauss.dim(),
        });
    }
    gauss.common_degree()?;
    lattice_equal(&quotient_lattice(alg.gens())?, &quotient_lattice(gauss)?)
}

/// Outcome of [`normality_probe`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NormalityProbe {
    /// No saturation gap up to and including `levels`. Not a proof of
    /// normality.
    Clean { levels: u32 },
    /// `point` lies in the group and the cone generated by the exponent
    /// vectors, has degree `level * r`, and is not a sum of `level`
    /// generators. Proves the algebra is not normal.
    Gap { level: u32, point: Monomial },
}

/// Searches levels `1..=level_bound` for a saturation gap. At each level the
/// candidate points are visited in canonical monomial order and the first gap
/// is reported.
pub fn normality_probe(alg: &MonomialAlgebra, level_bound: u32) -> Result<NormalityProbe> {
    if level_bound < 1 {
        return Err(Error::InvalidArgument("level bound must be at least 1".into()));
    }
    let dim = alg.dim();
    let gens: Vec<Vec<u32>> = alg.gens().iter().map(|g| g.exps().to_vec()).collect();
    let group = LatticeBasis::from_generators(dim, gens.iter().map(|g| g.iter().map(|&x| BigInt::from(x)).collect()))?;
    let cone = RationalCone::spanned_by(dim, &gens);
    let mut sums: HashSet<Vec<u32>> = gens.iter().cloned().collect();
    for level in 1..=level_bound {
        if level > 1 {
            let mut next = HashSet::with_capacity(sums.len() * gens.len());
            for s in &sums {
                for g in &gens {
                    next.insert(s.iter().zip(g).map(|(a, b)| a + b).collect::<Vec<u32>>());
                }
            }
            sums = next;
        }
        let mut gap = None;
        for_each_composition(dim, level * alg.degree(), &mut |p| {
            if gap.is_some() || sums.contains(p) {
                return;
            }
            let big: Vec<BigInt> = p.iter().map(|&x| BigInt::from(x)).collect();
            if group.contains(&big) && cone.contains(p) {
                gap = Some(Monomial::new(p.to_vec()));
            }
        });
        if let Some(point) = gap {
            return Ok(NormalityProbe::Gap { level, point });
        }
    }
    Ok(NormalityProbe::Clean { levels: level_bound })
}

/// Visits every non-negative vector of length `dim` and coordinate sum
/// `total`, lexicographically largest first.
fn for_each_composition(dim: usize, total: u32, f: &mut impl FnMut(&[u32])) {
    fn go(buf: &mut Vec<u32>, dim: usize, left: u32, f: &mut impl FnMut(&[u32])) {
        if buf.len() + 1 == dim {
            buf.push(left);
            f(buf);
            buf.pop();
            return;
        }
        for e in (0..=left).rev() {
            buf.push(e);
            go(buf, dim, left - e, f);
            buf.pop();
        }
    }
    if dim == 0 {
        return;
    }
    go(&mut Vec::with_capacity(dim), dim, total, f);
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn set(d: usize, s: &str) -> MonomialSet {
        MonomialSet::parse(d, s).unwrap()
    }

    fn alg(d: usize, s: &str) -> MonomialAlgebra {
        MonomialAlgebra::from_set(set(d, s)).unwrap()
    }

    #[test]
    fn quadratic_veronese_in_two_variables() {
        let a = alg(2, "x1^2 x1*x2 x2^2");
        let g = gauss_generators(&a, None).unwrap();
        assert_eq!(g.gens, set(2, "x1^2 x1*x2 x2^2"));
        assert_eq!(g.degree(), 2);
        assert!(is_birational(&a, &g.gens).unwrap());
    }

    #[test]
    fn borel_worked_example() {
        let a = alg(4, "x1^2 x1*x2 x2^2 x1*x3 x2*x3 x1*x4");
        let g = gauss_generators(&a, None).unwrap();
        assert_eq!(
            g.gens,
            set(4, "x1^4 x1^3*x2 x1^2*x2^2 x1*x2^3 x1^3*x3 x1^2*x2*x3 x1*x2^2*x3")
        );
    }

    #[test]
    fn dimension_deficient_is_an_error() {
        // 4-cycle edge ring: bipartite, rank 3
        let a = alg(4, "x1*x2 x2*x3 x3*x4 x1*x4");
        assert_eq!(algebra_dimension(&a), 3);
        assert_eq!(
            gauss_generators(&a, None),
            Err(Error::DimensionDeficient { dim: 3, ambient: 4 })
        );
    }

    #[test]
    fn budget_is_enforced_not_truncated() {
        let a = alg(4, "x1*x2 x1*x3 x1*x4 x2*x3 x2*x4 x3*x4");
        let full = gauss_generators(&a, None).unwrap();
        assert_eq!(full.gens.len(), 12);
        let n = full.subsets_examined;
        assert!(n > 0 && n <= 15);
        assert_eq!(gauss_generators(&a, Some(n)).unwrap(), full);
        assert_eq!(
            gauss_generators(&a, Some(n - 1)),
            Err(Error::LimitExceeded { limit: n - 1 })
        );
    }

    #[test]
    fn partitioned_runs_merge_to_the_whole() {
        let a = alg(4, "x1^2 x1*x2 x2^2 x1*x3 x2*x3 x1*x4");
        let e = GaussEnumerator::new(&a).unwrap();
        let budget = SubsetBudget::new(None);
        let mut part = GaussPart::default();
        for top in e.tops() {
            part.merge(e.run(top..top + 1, &budget).unwrap());
        }
        assert_eq!(e.finish(part), gauss_generators(&a, None).unwrap());
    }

    #[test]
    fn degree_one_generators_give_the_constant() {
        let a = alg(3, "x1 x2 x3");
        let g = gauss_generators(&a, None).unwrap();
        assert_eq!(g.gens, set(3, "1"));
    }

    #[test]
    fn single_variable() {
        let a = alg(1, "x1^3");
        let g = gauss_generators(&a, None).unwrap();
        assert_eq!(g.gens, set(1, "x1^2"));
    }

    #[test]
    fn relation_report_even_cycle_with_loop() {
        // generators in the order of the easy-cycle list for d = 4
        let gens = [vec![2, 0, 1, 1], vec![2, 1, 1, 0], vec![3, 0, 0, 1], vec![3, 1, 0, 0]];
        let s = MonomialSet::new(4, gens.iter().cloned().map(Monomial::new)).unwrap();
        let r = relation_report(&s).unwrap();
        assert_eq!((r.dim, r.edim, r.kernel_rank), (3, 4, 1));
        let (plus, minus) = r.hypersurface_witness.unwrap();
        // the witness must vanish on the generators, whatever their order
        let image = |m: &Monomial| {
            let mut acc = vec![0u32; 4];
            for (k, g) in s.iter().enumerate() {
                for (a, &x) in acc.iter_mut().zip(g.exps()) {
                    *a += x * m.exp(k);
                }
            }
            acc
        };
        assert_eq!(image(&plus), image(&minus));
        assert_eq!(plus.degree(), 2);
        assert_eq!(minus.degree(), 2);
    }

    #[test]
    fn relation_report_path_with_two_loops() {
        let s = set(3, "x1^2*x2 x2*x3^2 x1*x3^2 x1^2*x3");
        let r = relation_report(&s).unwrap();
        assert_eq!((r.dim, r.edim, r.kernel_rank), (3, 4, 1));
        // canonical order: y1 = x1^2x2, y2 = x1^2x3, y3 = x1x3^2, y4 = x2x3^2;
        // x1^2x2 * (x1x3^2)^2 = x1^4x2x3^4 = x2x3^2 * (x1^2x3)^2
        let (plus, minus) = r.hypersurface_witness.unwrap();
        let mut pair = [plus.exps().to_vec(), minus.exps().to_vec()];
        pair.sort();
        assert_eq!(pair, [vec![0, 2, 0, 1], vec![1, 0, 2, 0]]);
    }

    #[test]
    fn non_normal_plane_curve_has_level_one_gap() {
        let a = alg(2, "x1^6 x1^5*x2 x1^4*x2^2 x1^3*x2^3 x2^6");
        assert_eq!(
            normality_probe(&a, 2).unwrap(),
            NormalityProbe::Gap {
                level: 1,
                point: Monomial::new(vec![2, 4])
            }
        );
    }

    #[test]
    fn veronese_and_polynomial_ring_are_clean() {
        let v8 = MonomialAlgebra::new(2, (0..=8).map(|i| Monomial::new(vec![8 - i, i])).collect()).unwrap();
        assert_eq!(normality_probe(&v8, 3).unwrap(), NormalityProbe::Clean { levels: 3 });
        let poly = alg(2, "x1 x2");
        assert_eq!(normality_probe(&poly, 4).unwrap(), NormalityProbe::Clean { levels: 4 });
        assert!(normality_probe(&poly, 0).is_err());
    }

    #[test]
    fn gap_needs_the_cone_not_just_the_group() {
        // (1, 2) is in the group and the cone of x1^3, x1^2x2, x2^3 but is
        // not a generator
        let a = alg(2, "x1^3 x1^2*x2 x2^3");
        assert_eq!(
            normality_probe(&a, 1).unwrap(),
            NormalityProbe::Gap {
                level: 1,
                point: Monomial::new(vec![1, 2])
            }
        );
    }

    #[test]
    fn compositions_are_lex_descending() {
        let mut seen = Vec::new();
        for_each_composition(2, 3, &mut |p| seen.push(p.to_vec()));
        assert_eq!(seen, vec![vec![3, 0], vec![2, 1], vec![1, 2], vec![0, 3]]);
    }
}
