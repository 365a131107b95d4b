use num_traits::Zero;
use proptest::prelude::*;

use toric_gauss_core::borel::{borel_closure, borel_generators, is_borel_maximal};
use toric_gauss_core::gauss::{gauss_generators, is_birational, relation_report};
use toric_gauss_core::monomial::{borel_leq, borel_violation};
use toric_gauss_core::veronese::{monomials_of_degree, squarefree_gauss_container, squarefree_veronese};
use toric_gauss_core::{IntMatrix, Monomial, MonomialAlgebra, MonomialSet};

/// Gauss set by plain subset enumeration with a determinant per subset.
fn brute_gauss(gens: &MonomialSet) -> MonomialSet {
    let d = gens.dim();
    let g = gens.as_slice();
    let mut out = Vec::new();
    let mut pick = Vec::new();
    fn rec(g: &[Monomial], d: usize, from: usize, pick: &mut Vec<usize>, out: &mut Vec<Monomial>) {
        if pick.len() == d {
            let m = IntMatrix::from_fn(d, d, |i, j| i64::from(g[pick[j]].exp(i)));
            if !m.det_exact().unwrap().is_zero() {
                let prod = pick.iter().fold(Monomial::one(d), |acc, &k| acc.mul(&g[k]));
                out.push(prod.div(&Monomial::new(vec![1; d])).unwrap());
            }
            return;
        }
        for k in from..g.len() {
            pick.push(k);
            rec(g, d, k + 1, pick, out);
            pick.pop();
        }
    }
    rec(g, d, 0, &mut pick, &mut out);
    MonomialSet::new(d, out).unwrap()
}

fn tail_sums(m: &Monomial) -> Vec<u32> {
    let mut acc = 0;
    let mut out: Vec<u32> = m
        .exps()
        .iter()
        .rev()
        .map(|&e| {
            acc += e;
            acc
        })
        .collect();
    out.reverse();
    out
}

/// Full-rank equigenerated generator lists in 2 to 4 variables.
fn algebra_gens() -> impl Strategy<Value = (usize, Vec<Monomial>)> {
    (2usize..=4, 1u32..=3)
        .prop_flat_map(|(d, r)| {
            let pool = monomials_of_degree(r, d).into_vec();
            let n = pool.len();
            (Just(d), prop::sample::subsequence(pool, d.min(n)..=n.min(9)))
        })
        .prop_filter("full rank", |(d, gens)| {
            MonomialSet::new(*d, gens.iter().cloned()).unwrap().log_matrix().rank() == *d
        })
}

fn same_degree_pair() -> impl Strategy<Value = (Monomial, Monomial, Monomial)> {
    (1usize..=5, 1u32..=4).prop_flat_map(|(d, r)| {
        let pool = monomials_of_degree(r, d).into_vec();
        (
            prop::sample::select(pool.clone()),
            prop::sample::select(pool.clone()),
            prop::sample::select(pool),
        )
    })
}

proptest! {
    #[test]
    fn gauss_matches_subset_enumeration((d, gens) in algebra_gens()) {
        let set = MonomialSet::new(d, gens.iter().cloned()).unwrap();
        let alg = MonomialAlgebra::from_set(set.clone()).unwrap();
        let res = gauss_generators(&alg, None).unwrap();
        prop_assert_eq!(&res.gens, &brute_gauss(&set));
        let r = alg.degree();
        prop_assert!(res.gens.iter().all(|g| g.degree() == (r - 1) * d as u32));
    }

    #[test]
    fn gauss_ignores_generator_order((d, gens) in algebra_gens().prop_flat_map(|(d, g)| (Just(d), Just(g).prop_shuffle()))) {
        let alg = MonomialAlgebra::new(d, gens.clone()).unwrap();
        let mut reversed = gens;
        reversed.reverse();
        let other = MonomialAlgebra::new(d, reversed).unwrap();
        prop_assert_eq!(gauss_generators(&alg, None).unwrap().gens, gauss_generators(&other, None).unwrap().gens);
    }

    #[test]
    fn an_algebra_is_birational_to_itself((d, gens) in algebra_gens()) {
        let alg = MonomialAlgebra::new(d, gens).unwrap();
        prop_assert!(is_birational(&alg, alg.gens()).unwrap());
    }

    #[test]
    fn hypersurface_witness_is_balanced((d, gens) in algebra_gens()) {
        let set = MonomialSet::new(d, gens).unwrap();
        let report = relation_report(&set).unwrap();
        prop_assert_eq!(report.dim + report.kernel_rank, set.len());
        if let Some((plus, minus)) = report.hypersurface_witness {
            let weigh = |w: &Monomial| {
                set.iter().zip(w.exps()).fold(Monomial::one(d), |acc, (g, &e)| acc.mul(&g.pow(e)))
            };
            prop_assert_eq!(weigh(&plus), weigh(&minus));
        }
    }

    #[test]
    fn borel_order_is_the_tail_sum_order((u, v, w) in same_degree_pair()) {
        let leq = borel_leq(&u, &v).unwrap();
        let tails = tail_sums(&u).iter().zip(tail_sums(&v)).all(|(a, b)| *a <= b);
        prop_assert_eq!(leq, tails);
        prop_assert_eq!(borel_violation(&u, &v).unwrap().is_none(), leq);
        prop_assert!(borel_leq(&u, &u).unwrap());
        if leq && borel_leq(&v, &u).unwrap() {
            prop_assert_eq!(&u, &v);
        }
        if leq && borel_leq(&v, &w).unwrap() {
            prop_assert!(borel_leq(&u, &w).unwrap());
        }
    }

    #[test]
    fn borel_fixed_algebras_have_full_dimension(
        (d, seed) in (2usize..=5, 1u32..=3).prop_flat_map(|(d, r)| {
            let pool = monomials_of_degree(r, d).into_vec();
            let most = pool.len().min(3);
            (Just(d), prop::sample::subsequence(pool, 1..=most))
        })
    ) {
        let closure = borel_closure(&MonomialSet::new(d, seed).unwrap()).unwrap();
        let alg = MonomialAlgebra::from_set(closure.members().clone()).unwrap();
        let touches_last = closure.members().iter().any(|g| g.exp(d - 1) > 0);
        prop_assert_eq!(alg.log_matrix().rank() == d, touches_last);
        let gens = borel_generators(closure.members()).unwrap();
        for g in &gens {
            prop_assert!(is_borel_maximal(g, closure.members()).unwrap());
        }
    }
}

#[test]
fn squarefree_veronese_gauss_sets_lie_in_the_container() {
    for (r, d) in [(2u32, 4usize), (2, 5), (3, 5)] {
        let alg = MonomialAlgebra::from_set(squarefree_veronese(r, d).unwrap()).unwrap();
        let gens = gauss_generators(&alg, None).unwrap().gens;
        let container = squarefree_gauss_container(r, d).unwrap();
        assert!(gens.iter().all(|g| container.contains(g)), "r = {}, d = {}", r, d);
        if r == 2 {
            assert!(gens.iter().all(|g| g.support_len() >= 3));
        }
    }
}
