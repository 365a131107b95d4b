//! The worked examples and stated values for Gauss algebras of toric
//! algebras, recomputed from scratch.

use num_bigint::BigInt;
use num_traits::Zero;

use toric_gauss_core::borel::{
    borel_closure, borel_generators, is_principal, is_strongly_stable, principal_gauss_generator,
};
use toric_gauss_core::gauss::{algebra_dimension, is_birational, normality_probe, relation_report, NormalityProbe};
use toric_gauss_core::graphs::{
    cycle_generators, edge_ring, gauss_from_forests, nonbipartite_gauss_supports, odd_cycle_every_component,
    path_lambda, rooted_spanning_forests, spanning_tree_count, LoopedGraph,
};
use toric_gauss_core::veronese::{
    expected_gauss_squarefree2, mon_min_support, polymatroid_exchange_check, squarefree_veronese, ExchangeOutcome,
};
use toric_gauss_core::{Error, Monomial, MonomialAlgebra, MonomialSet};

use crate::parallel;

/// Outcome of one reproduced example.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub outcome: Result<String, String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.outcome.is_ok()
    }
}

type Outcome = Result<String, String>;
type Example = (&'static str, fn(&Runner) -> Outcome);

fn set(d: usize, s: &str) -> MonomialSet {
    MonomialSet::parse(d, s).expect("literal monomial list")
}

fn alg(d: usize, s: &str) -> MonomialAlgebra {
    MonomialAlgebra::from_set(set(d, s)).expect("literal generating set")
}

fn err(e: Error) -> String {
    e.to_string()
}

fn expect_eq<T: PartialEq + std::fmt::Display>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{}: got {}, expected {}", what, got, want))
    }
}

struct Runner {
    threads: usize,
}

impl Runner {
    fn gauss(&self, a: &MonomialAlgebra) -> Result<MonomialSet, String> {
        parallel::gauss_generators(a, None, self.threads)
            .map(|r| r.gens)
            .map_err(err)
    }

    fn squarefree_veronese_gauss(&self) -> Outcome {
        let mut counts = Vec::new();
        for d in [4usize, 5, 6] {
            let a = MonomialAlgebra::from_set(squarefree_veronese(2, d).map_err(err)?).map_err(err)?;
            let g = self.gauss(&a)?;
            let want = expected_gauss_squarefree2(d).map_err(err)?;
            expect_eq(&format!("d = {} generator count", d), g.len(), want.len())?;
            if g != want {
                return Err(format!("d = {}: Gauss set differs from the predicted family", d));
            }
            counts.push(g.len().to_string());
        }
        Ok(format!(
            "d = 4, 5, 6 give {} generators as predicted",
            counts.join(", ")
        ))
    }

    fn quadratic_veronese(&self) -> Outcome {
        let a = alg(2, "x1^2 x1*x2 x2^2");
        expect_eq("Gauss set", self.gauss(&a)?, a.gens().clone())?;
        Ok("K[x^2, xy, y^2] is its own Gauss algebra".into())
    }

    fn borel_example(&self) -> Outcome {
        let a = alg(4, "x1^2 x1*x2 x2^2 x1*x3 x2*x3 x1*x4");
        let g = self.gauss(&a)?;
        expect_eq(
            "Gauss set",
            &g,
            &set(4, "x1^4 x1^3*x2 x1^2*x2^2 x1*x2^3 x1^3*x3 x1^2*x2*x3 x1*x2^2*x3"),
        )?;
        expect_eq(
            "Borel generators of A",
            &borel_generators(a.gens()).map_err(err)?,
            &set(4, "x2*x3 x1*x4"),
        )?;
        expect_eq(
            "Borel generators of G(A)",
            &borel_generators(&g).map_err(err)?,
            &set(4, "x1*x2^2*x3"),
        )?;
        if !is_strongly_stable(&g) {
            return Err("Gauss set is not strongly stable".into());
        }
        if is_principal(a.gens()).map_err(err)? {
            return Err("A should have two Borel generators".into());
        }
        let gdim = algebra_dimension(&MonomialAlgebra::from_set(g.clone()).map_err(err)?);
        if gdim != 3 {
            return Err(format!("Gauss algebra has dimension {}, expected 3", gdim));
        }
        if is_birational(&a, &g).map_err(err)? {
            return Err("Gauss map of a dimension-dropping algebra reported birational".into());
        }
        Ok("7 generators, single Borel generator x1*x2^2*x3, Gauss dimension 3".into())
    }

    fn borel_closure_example(&self) -> Outcome {
        let c = borel_closure(&set(4, "x1*x3 x2*x4")).map_err(err)?;
        expect_eq(
            "closure",
            c.members(),
            &set(4, "x1^2 x1*x2 x1*x3 x1*x4 x2^2 x2*x3 x2*x4"),
        )?;
        Ok("closure of {x1*x3, x2*x4} has 7 members".into())
    }

    fn veronese_is_principal(&self) -> Outcome {
        for (d, r) in [(3usize, 2u32), (3, 3), (4, 2)] {
            let top = Monomial::new((0..d).map(|i| if i + 1 == d { r } else { 0 }).collect());
            let full = borel_closure(&MonomialSet::new(d, [top.clone()]).map_err(err)?).map_err(err)?;
            expect_eq(
                &format!("Borel generators of the {}-Veronese in {} variables", r, d),
                &borel_generators(full.members()).map_err(err)?,
                &MonomialSet::new(d, [top.clone()]).map_err(err)?,
            )?;
            let want = Monomial::new(
                (0..d)
                    .map(|i| if i + 1 == d { (r - 1) * d as u32 } else { 0 })
                    .collect(),
            );
            expect_eq(
                "principal formula",
                principal_gauss_generator(&top).map_err(err)?,
                want.clone(),
            )?;
            let g = self.gauss(&MonomialAlgebra::from_set(full.into_members()).map_err(err)?)?;
            expect_eq(
                "Gauss Borel generator",
                &borel_generators(&g).map_err(err)?,
                &MonomialSet::new(d, [want]).map_err(err)?,
            )?;
        }
        Ok("r-Veronese algebras are principal with Gauss algebra the (r-1)d-Veronese".into())
    }

    fn dimensions(&self) -> Outcome {
        let c4 = LoopedGraph::cycle(4).map_err(err)?;
        expect_eq(
            "incidence determinant of the 4-cycle",
            c4.incidence_matrix().det_exact().map_err(err)?,
            BigInt::from(0),
        )?;
        expect_eq(
            "dimension of the 4-cycle edge ring",
            algebra_dimension(&edge_ring(&c4).map_err(err)?),
            3,
        )?;
        let looped = c4.with_loops([0]).map_err(err)?;
        expect_eq(
            "dimension with a loop",
            algebra_dimension(&edge_ring(&looped).map_err(err)?),
            4,
        )?;
        Ok("4-cycle edge ring has dimension 3, and 4 with a loop".into())
    }

    fn veronese_relations(&self) -> Outcome {
        let a = MonomialAlgebra::from_set(squarefree_veronese(2, 5).map_err(err)?).map_err(err)?;
        let g = self.gauss(&a)?;
        let r = relation_report(&g).map_err(err)?;
        expect_eq("edim", r.edim, 81)?;
        expect_eq("dim", r.dim, 5)?;
        expect_eq("kernel rank", r.kernel_rank, 76)?;
        if r.hypersurface_witness.is_some() {
            return Err("unexpected hypersurface witness".into());
        }
        for d in [4usize, 5] {
            let a = MonomialAlgebra::from_set(squarefree_veronese(2, d).map_err(err)?).map_err(err)?;
            if !is_birational(&a, &self.gauss(&a)?).map_err(err)? {
                return Err(format!("d = {}: Gauss map is not birational", d));
            }
        }
        Ok("d = 5: edim 81, dim 5, kernel rank 76; birational for d = 4, 5".into())
    }

    fn normality(&self) -> Outcome {
        let bad = alg(2, "x1^6 x1^5*x2 x1^4*x2^2 x1^3*x2^3 x2^6");
        expect_eq(
            "probe",
            format!("{:?}", normality_probe(&bad, 2).map_err(err)?),
            format!(
                "{:?}",
                NormalityProbe::Gap {
                    level: 1,
                    point: Monomial::new(vec![2, 4])
                }
            ),
        )?;
        let v8 = MonomialAlgebra::new(2, (0..=8).map(|k| Monomial::new(vec![8 - k, k])).collect()).map_err(err)?;
        expect_eq(
            "8-Veronese probe",
            format!("{:?}", normality_probe(&v8, 3).map_err(err)?),
            format!("{:?}", NormalityProbe::Clean { levels: 3 }),
        )?;
        Ok("gap at (2,4) on level 1; 8-Veronese clean to level 3".into())
    }

    fn mon_families(&self) -> Outcome {
        expect_eq("|Mon(3, 4)|", mon_min_support(3, 4, 4).map_err(err)?.len(), 13)?;
        expect_eq("|Mon(3, 5)|", mon_min_support(3, 5, 5).map_err(err)?.len(), 81)?;
        expect_eq(
            "|expected d = 4|",
            expected_gauss_squarefree2(4).map_err(err)?.len(),
            12,
        )?;
        expect_eq(
            "|expected d = 5|",
            expected_gauss_squarefree2(5).map_err(err)?.len(),
            81,
        )?;
        if polymatroid_exchange_check(&mon_min_support(3, 4, 4).map_err(err)?).map_err(err)? != ExchangeOutcome::Holds {
            return Err("Mon(3, 4) fails the exchange property".into());
        }
        Ok("13 and 81 monomials; Mon(3, 4) is polymatroidal".into())
    }

    fn odd_cycles(&self) -> Outcome {
        let tri = LoopedGraph::cycle(3).map_err(err)?;
        let two = LoopedGraph::simple(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).map_err(err)?;
        let c4 = LoopedGraph::cycle(4).map_err(err)?;
        for (name, g, want) in [
            ("triangle", &tri, true),
            ("two triangles", &two, true),
            ("4-cycle", &c4, false),
        ] {
            expect_eq(name, odd_cycle_every_component(g), want)?;
            expect_eq(name, !g.incidence_matrix().det_exact().map_err(err)?.is_zero(), want)?;
        }
        if nonbipartite_gauss_supports(&c4) != Err(Error::Bipartite) {
            return Err("4-cycle should be rejected as bipartite".into());
        }
        Ok("odd cycles in every component exactly when the determinant is nonzero".into())
    }

    fn forests(&self) -> Outcome {
        let k22 = LoopedGraph::complete_bipartite(2, 2);
        expect_eq(
            "rooted spanning trees of K_{2,2}",
            rooted_spanning_forests(&k22, &[0]).map_err(err)?.len(),
            4,
        )?;
        expect_eq(
            "spanning trees of K_{2,2}",
            spanning_tree_count(&k22).map_err(err)?,
            BigInt::from(4),
        )?;
        let looped = k22.with_loops([0]).map_err(err)?;
        expect_eq(
            "K_{2,2} with a loop",
            &gauss_from_forests(&looped).map_err(err)?,
            &set(4, "x1^3*x3 x1^3*x4 x1^2*x2*x3 x1^2*x2*x4"),
        )?;
        let path = LoopedGraph::path(3).with_loops([0, 2]).map_err(err)?;
        expect_eq(
            "path with loops at 1 and 3",
            &gauss_from_forests(&path).map_err(err)?,
            &set(3, "x1^2*x2 x2*x3^2 x1*x3^2 x1^2*x3"),
        )?;
        let c4 = LoopedGraph::cycle(4).map_err(err)?.with_loops([0]).map_err(err)?;
        let want = MonomialSet::new(4, cycle_generators(4).map_err(err)?).map_err(err)?;
        expect_eq("4-cycle with a loop", &gauss_from_forests(&c4).map_err(err)?, &want)?;
        expect_eq(
            "4-cycle with a loop, by enumeration",
            &self.gauss(&edge_ring(&c4).map_err(err)?)?,
            &want,
        )?;
        Ok("forest generators for K_{2,2}, the path and the 4-cycle".into())
    }

    fn lambda(&self) -> Outcome {
        let listed = [1u32, 3, 8, 21, 55, 144, 377];
        for (d, &v) in (1..).zip(&listed) {
            expect_eq(&format!("lambda_{}", d), path_lambda(d).map_err(err)?, BigInt::from(v))?;
        }
        Ok("1, 3, 8, 21, 55, 144, 377".into())
    }

    fn cycles(&self) -> Outcome {
        for d in [4usize, 5, 6] {
            let g = LoopedGraph::cycle(d).map_err(err)?.with_loops([0]).map_err(err)?;
            let r = relation_report(&self.gauss(&edge_ring(&g).map_err(err)?)?).map_err(err)?;
            let want_dim = if d % 2 == 0 { d - 1 } else { d };
            expect_eq(&format!("d = {} dimension", d), r.dim, want_dim)?;
            expect_eq(&format!("d = {} kernel rank", d), r.kernel_rank, 1)?;
        }
        Ok("even cycles: hypersurfaces of dimension d - 1; the 5-cycle: dimension 5".into())
    }

    fn complete_bipartite(&self) -> Outcome {
        for (n, m) in [(2usize, 2usize), (2, 3), (3, 3)] {
            let g = LoopedGraph::complete_bipartite(n, m).with_loops([0]).map_err(err)?;
            let gens = self.gauss(&edge_ring(&g).map_err(err)?)?;
            let edim = binomial(n + m - 2, n - 1) * binomial(n + m - 2, m - 1);
            expect_eq(&format!("K_{{{},{}}} edim", n, m), gens.len() as u64, edim)?;
            let trees = spanning_tree_count(&g).map_err(err)?;
            expect_eq(
                &format!("K_{{{},{}}} spanning trees", n, m),
                trees,
                BigInt::from(n).pow(m as u32 - 1) * BigInt::from(m).pow(n as u32 - 1),
            )?;
        }
        Ok("edim C(n+m-2, n-1) C(n+m-2, m-1) and n^(m-1) m^(n-1) spanning trees".into())
    }
}

fn binomial(n: usize, k: usize) -> u64 {
    (0..k as u64).fold(1, |acc, i| acc * (n as u64 - i) / (i + 1))
}

/// Runs every example, in a fixed order.
pub fn checks(threads: usize) -> Vec<Check> {
    let r = Runner { threads };
    let checks: [Example; 15] = [
        ("squarefree 2-Veronese Gauss sets", Runner::squarefree_veronese_gauss),
        ("quadratic Veronese in two variables", Runner::quadratic_veronese),
        ("Borel worked example", Runner::borel_example),
        ("Borel closure of {x1*x3, x2*x4}", Runner::borel_closure_example),
        ("Veronese algebras are principal Borel", Runner::veronese_is_principal),
        ("edge ring dimensions", Runner::dimensions),
        (
            "squarefree 2-Veronese relations and birationality",
            Runner::veronese_relations,
        ),
        ("normality probe", Runner::normality),
        ("Mon(t, r) families", Runner::mon_families),
        ("odd cycles and nonsingular incidence matrices", Runner::odd_cycles),
        ("rooted forests and forest generators", Runner::forests),
        ("path sequence lambda", Runner::lambda),
        ("cycle hypersurfaces", Runner::cycles),
        ("complete bipartite graphs", Runner::complete_bipartite),
        ("squarefree Veronese with d = 4 excluded product", |_| {
            let g = expected_gauss_squarefree2(4).map_err(err)?;
            match polymatroid_exchange_check(&g).map_err(err)? {
                ExchangeOutcome::Violation { u, v, i } => {
                    Ok(format!("exchange fails at u = {}, v = {}, i = {}", u, v, i + 1))
                }
                ExchangeOutcome::Holds => Err("exchange property unexpectedly holds".into()),
            }
        }),
    ];
    checks
        .into_iter()
        .map(|(name, f)| Check { name, outcome: f(&r) })
        .collect()
}
