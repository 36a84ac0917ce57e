use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use legvar_core::chern::{codegree_pair, resultant_degree, resultant_rlm, VarietyChernData};
use legvar_core::chowring::{GradedAlgebraSpec, GradedElem};
use legvar_core::exactalg::{int, Rational};
use legvar_core::roots::{phi_p_plus, ParabolicChoice, RootSystem, RootType};
use proptest::prelude::*;

fn factorial(k: i64) -> Rational {
    int((1..=k).product())
}

/// `T = L1 + L2 + L3` on a threefold with Chern roots `x1, x2, x3`.
fn split_threefold(a: [i64; 3], b: [i64; 3], c: [i64; 3]) -> (Arc<GradedAlgebraSpec>, Vec<GradedElem>) {
    let alg = GradedAlgebraSpec::with_table(&[("u", 2), ("v", 2), ("w", 2)], 6, &[]).unwrap();
    let gens: Vec<GradedElem> = ["u", "v", "w"].iter().map(|s| GradedElem::symbol(&alg, s).unwrap()).collect();
    let lin = |k: [i64; 3]| (0..3).fold(GradedElem::zero(&alg), |acc, i| acc.add(&gens[i].scale(&int(k[i]))).unwrap());
    let roots = vec![lin(a), lin(b), lin(c)];
    (alg, roots)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Newton's identities against the splitting principle: with Chern roots
    /// `x_i`, `c_k = e_k(x)` and `ch_k = sum x_i^k / k!`.
    #[test]
    fn newton_round_trip(a in prop::array::uniform3(-3i64..4), b in prop::array::uniform3(-3i64..4), c in prop::array::uniform3(-3i64..4)) {
        let (alg, x) = split_threefold(a, b, c);
        let e1 = x[0].add(&x[1]).unwrap().add(&x[2]).unwrap();
        let e2 = x[0].mul(&x[1]).unwrap().add(&x[0].mul(&x[2]).unwrap()).unwrap().add(&x[1].mul(&x[2]).unwrap()).unwrap();
        let e3 = x[0].mul(&x[1]).unwrap().mul(&x[2]).unwrap();
        let power = |k: u32| {
            let s = x.iter().fold(GradedElem::zero(&alg), |acc, r| acc.add(&r.pow(k)).unwrap());
            s.scale(&(Rational::from_integer(1.into()) / factorial(k as i64)))
        };
        let h = GradedElem::symbol(&alg, "u").unwrap();

        let from_c: BTreeMap<String, GradedElem> =
            [("c1", e1.clone()), ("c2", e2.clone()), ("c3", e3.clone())].into_iter().map(|(k, v)| (k.to_string(), v)).collect();
        let v = VarietyChernData::new("split", 3, &alg, from_c, h.clone()).unwrap();
        for k in 1..=3 {
            prop_assert_eq!(v.ch(k).unwrap(), power(k as u32));
        }

        let from_ch: BTreeMap<String, GradedElem> =
            (1..=3).map(|k| (format!("ch{k}"), power(k))).collect();
        let w = VarietyChernData::new("split", 3, &alg, from_ch, h).unwrap();
        prop_assert_eq!(w.c(1).unwrap(), e1);
        prop_assert_eq!(w.c(2).unwrap(), e2);
        prop_assert_eq!(w.c(3).unwrap(), e3);
    }

    /// On any surface table, `katz - legendrian` is the integrated `sigma_2`,
    /// computed here by hand from the intersection numbers.
    #[test]
    fn codegree_difference_is_sigma2(
        q in prop::array::uniform3(-4i64..5),
        c1 in prop::array::uniform2(-3i64..4),
        h in prop::array::uniform2(-3i64..4),
        c2 in -30i64..31,
    ) {
        prop_assume!(h != [0, 0]);
        let alg = GradedAlgebraSpec::with_table(
            &[("a", 2), ("b", 2), ("p", 4)],
            4,
            &[("a^2", q[0]), ("a*b", q[1]), ("b^2", q[2]), ("p", 1)],
        ).unwrap();
        let lin = |k: [i64; 2]| {
            GradedElem::symbol(&alg, "a").unwrap().scale(&int(k[0]))
                .add(&GradedElem::symbol(&alg, "b").unwrap().scale(&int(k[1]))).unwrap()
        };
        let classes: BTreeMap<String, GradedElem> = [
            ("c1".to_string(), lin(c1)),
            ("c2".to_string(), GradedElem::symbol(&alg, "p").unwrap().scale(&int(c2))),
        ].into_iter().collect();
        let v = VarietyChernData::new("table", 2, &alg, classes, lin(h)).unwrap();
        let r = codegree_pair(&v).unwrap();
        let dot = |u: [i64; 2], w: [i64; 2]| u[0] * w[0] * q[0] + (u[0] * w[1] + u[1] * w[0]) * q[1] + u[1] * w[1] * q[2];
        let (c1h, hh, c1c1) = (dot(c1, h), dot(h, h), dot(c1, c1));
        prop_assert_eq!(r.katz.clone(), int(c2 - 2 * c1h + 3 * hh));
        prop_assert_eq!(r.legendrian.clone(), int(3 * c2 - c1c1));
        // 2 ch_2 = c_1^2 - 2 c_2.
        prop_assert_eq!(r.sigma2.clone(), int(c1c1 - 2 * c2 - 2 * c1h + 3 * hh));
        prop_assert_eq!(&r.katz - &r.legendrian, r.sigma2);
    }
}

#[test]
fn r12_is_homogeneous_for_every_rank() {
    assert_eq!(resultant_degree(1, 2), 16);
    for n in 2..=10 {
        let r = resultant_rlm(1, 2, n).unwrap();
        assert!(!r.is_zero(), "n={n}");
        assert!(r.is_homogeneous_of(16), "n={n}");
    }
}

fn random_system() -> impl Strategy<Value = RootSystem> {
    prop_oneof![
        (1usize..7).prop_map(|r| RootSystem::new(RootType::A, r).unwrap()),
        (2usize..6).prop_map(|r| RootSystem::new(RootType::B, r).unwrap()),
        (2usize..6).prop_map(|r| RootSystem::new(RootType::C, r).unwrap()),
        (3usize..7).prop_map(|r| RootSystem::new(RootType::D, r).unwrap()),
        (6usize..8).prop_map(|r| RootSystem::new(RootType::E, r).unwrap()),
        Just(RootSystem::new(RootType::F, 4).unwrap()),
        Just(RootSystem::new(RootType::G, 2).unwrap()),
    ]
}

fn system_and_nodes() -> impl Strategy<Value = (RootSystem, Vec<usize>)> {
    random_system().prop_flat_map(|rs| {
        let r = rs.rank();
        (Just(rs), prop::collection::btree_set(1..=r, 1..=r).prop_map(|s| s.into_iter().collect()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    /// Simple reflections permute `Phi` and preserve the form.
    #[test]
    fn reflections_preserve_the_root_system(rs in random_system()) {
        let pos: BTreeSet<Vec<i64>> = rs.positive_roots().iter().cloned().collect();
        prop_assert_eq!(pos.len(), rs.expected_positive_count());
        for a in rs.positive_roots() {
            let va = rs.root_vector(a);
            for i in 0..rs.rank() {
                let s = rs.reflect(a, i);
                let neg: Vec<i64> = s.iter().map(|x| -x).collect();
                prop_assert!(pos.contains(&s) || pos.contains(&neg), "{} s{} {:?}", rs.label(), i + 1, a);
                let vs = rs.root_vector(&s);
                prop_assert_eq!(rs.inner(&vs, &vs), rs.inner(&va, &va));
            }
        }
    }

    /// `sum Phi_P^+` is a positive combination of exactly the marked
    /// fundamental weights.
    #[test]
    fn first_chern_class_support((rs, nodes) in system_and_nodes()) {
        let pc = ParabolicChoice::new(rs.clone(), &nodes).unwrap();
        let roots = phi_p_plus(&pc, None).unwrap();
        let mut sum = vec![0i64; rs.rank()];
        for a in &roots {
            for (s, x) in sum.iter_mut().zip(a) {
                *s += x;
            }
        }
        let w = rs.weight_coordinates(&sum);
        let support: Vec<usize> = (0..rs.rank()).filter(|&j| w[j] != 0).map(|j| j + 1).collect();
        prop_assert_eq!(&support, &nodes);
        prop_assert!(w.iter().all(|&x| x >= 0));
    }
}
