use std::collections::BTreeSet;

use ncfact_core::top_poset::{
    circ_quotient, circ_upper_set, circular_skeleton, lower_set, multiset_inverse, multiset_product,
    skeleton, stratum_complex, subfact_leq, upper_set_phi, upper_set_phi_inv, TopPosetPoint,
};
use ncfact_core::weighted_complexes::position::pos;
use ncfact_core::weighted_complexes::{build_interval_complex, simplex_distance, Multiset};
use ncfact_core::{Group, MarkedGroup};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn lower_sets_match_pointwise_enumeration() {
    let mg = MarkedGroup::symmetric(4).unwrap();
    let support = [pos(1, 3), pos(2, 3)];
    let points = skeleton(&mg, &mg.delta(), &support).unwrap();
    for u in points.iter().step_by(7) {
        let down = lower_set(&mg, u).unwrap();
        let expected: BTreeSet<_> = points
            .iter()
            .filter(|x| subfact_leq(&mg, x, u).unwrap())
            .cloned()
            .collect();
        let got: BTreeSet<_> = down.items().iter().cloned().collect();
        assert_eq!(got, expected);
        let product: usize = [pos(0, 1), pos(1, 3), pos(2, 3), pos(1, 1)]
            .iter()
            .map(|s| mg.interval(&u.label(&mg, s)).unwrap().len())
            .product();
        assert_eq!(down.len(), product);
        for i in 0..down.len() {
            for j in 0..down.len() {
                assert_eq!(down.leq(i, j), subfact_leq(&mg, down.item(i), down.item(j)).unwrap());
            }
        }
    }
}

fn check_phi<G: Group>(mg: &MarkedGroup<G>, g: &G::Elem) {
    let support = [pos(1, 2)];
    let points = skeleton(mg, g, &support).unwrap();
    for v in &points {
        let h_prime = mg.complement(&v.rho(mg), g).unwrap();
        let targets: BTreeSet<_> = skeleton(mg, &h_prime, &support).unwrap().into_iter().collect();
        let up: Vec<_> = points.iter().filter(|u| subfact_leq(mg, v, u).unwrap()).collect();
        let images: Vec<_> = up.iter().map(|u| upper_set_phi(mg, v, u).unwrap()).collect();
        assert_eq!(images.iter().cloned().collect::<BTreeSet<_>>(), targets);
        assert_eq!(images.len(), targets.len());
        for (u, w) in up.iter().zip(&images) {
            assert_eq!(&&upper_set_phi_inv(mg, v, w).unwrap(), u);
            assert_eq!(w.rho(mg), mg.mul(&mg.inv(&v.rho(mg)), &u.rho(mg)));
        }
        for (i, u1) in up.iter().enumerate() {
            for (j, u2) in up.iter().enumerate() {
                assert_eq!(
                    subfact_leq(mg, u1, u2).unwrap(),
                    subfact_leq(mg, &images[i], &images[j]).unwrap()
                );
            }
        }
    }
}

#[test]
fn phi_is_an_isomorphism_on_fixed_supports() {
    for d in 2..=4 {
        let mg = MarkedGroup::symmetric(d).unwrap();
        check_phi(&mg, &mg.delta());
    }
    check_phi(&MarkedGroup::integers(), &3);
}

#[test]
fn upper_set_of_a_rank_one_composition_is_a_copy_of_rank_two() {
    let z = MarkedGroup::integers();
    let support = [pos(1, 4), pos(1, 2), pos(3, 4)];
    let v = TopPosetPoint::from_points(&z, 3, vec![(pos(1, 2), 1)]).unwrap();
    let up = skeleton(&z, &3, &support)
        .unwrap()
        .into_iter()
        .filter(|u| subfact_leq(&z, &v, u).unwrap())
        .count();
    assert_eq!(up, skeleton(&z, &2, &support).unwrap().len());
}

fn brute_leq(mg: &MarkedGroup<impl Group<Elem = ncfact_core::Permutation>>, x: &Multiset<ncfact_core::Permutation>, y: &Multiset<ncfact_core::Permutation>) -> bool {
    let support: BTreeSet<_> = x.support().chain(y.support()).cloned().collect();
    support.iter().all(|s| {
        let top = y.label(mg, s);
        mg.interval(&top).unwrap().items().contains(&x.label(mg, s))
    })
}

#[test]
fn division_preserves_order() {
    let mg = MarkedGroup::symmetric(4).unwrap();
    let points = skeleton(&mg, &mg.delta(), &[pos(1, 3), pos(2, 3)]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    while checked < 500 {
        let v = &points[rng.gen_range(0..points.len())];
        let above: Vec<_> = points.iter().filter(|u| subfact_leq(&mg, v, u).unwrap()).collect();
        let u = above[rng.gen_range(0..above.len())];
        let w = above[rng.gen_range(0..above.len())];
        let vi = multiset_inverse(&mg, v.labels());
        let (a, b) = (multiset_product(&mg, &vi, u.labels()), multiset_product(&mg, &vi, w.labels()));
        assert_eq!(brute_leq(&mg, u.labels(), w.labels()), brute_leq(&mg, &a, &b));
        checked += 1;
    }
}

#[test]
fn maximal_stratum_is_the_interval_complex() {
    for d in 2..=4 {
        let mg = MarkedGroup::symmetric(d).unwrap();
        let s = stratum_complex(&mg, &mg.delta(), d - 1).unwrap();
        let k = build_interval_complex(&mg, &mg.delta()).unwrap();
        assert_eq!(s.summary.dims, k.dims);
        assert_eq!(s.summary.faces, k.faces);
    }
}

#[test]
fn strata_conserve_cells() {
    for d in 3..=4 {
        let mg = MarkedGroup::symmetric(d).unwrap();
        for r in 0..d {
            let s = stratum_complex(&mg, &mg.delta(), r).unwrap();
            // Sum over orbit representatives of (orbit size) x (cells of O_h).
            let mut seen = BTreeSet::new();
            let mut total = vec![0; s.cells_before_quotient().len()];
            for sheet in &s.sheets {
                if !seen.insert(sheet.h.clone()) {
                    continue;
                }
                let mut x = sheet.h.clone();
                for _ in 0..sheet.k {
                    seen.insert(x.clone());
                    x = mg.conjugate(&mg.delta(), &x);
                }
                for (j, n) in sheet.dims.iter().enumerate() {
                    total[j] += sheet.k * n;
                }
            }
            assert_eq!(total, s.cells_before_quotient());
            assert_eq!(s.summary.euler, i64::from(r == 0), "d={d} r={r}");
        }
    }
}

#[test]
fn circular_upper_sets() {
    let mg = MarkedGroup::symmetric(3).unwrap();
    let d = mg.delta();
    let a = ncfact_core::Permutation::parse(3, "(1 2)").unwrap();
    let b = mg.complement(&a, &d).unwrap();
    let support = [pos(1, 3), pos(1, 2), pos(2, 3)];
    let u = TopPosetPoint::from_points(&mg, d.clone(), vec![(pos(1, 2), a)]).unwrap();
    let map = circ_upper_set(&mg, &circ_quotient(&mg, &u), &support).unwrap();
    let target = circular_skeleton(&mg, &b, &support).unwrap();
    assert_eq!(map.len(), target.classes().len());
    let mut ranks: Vec<usize> = map.iter().map(|(_, t)| t.rank(&mg).unwrap()).collect();
    ranks.sort();
    let mut expected: Vec<usize> = target.classes().iter().map(|c| c.rank(&mg).unwrap()).collect();
    expected.sort();
    assert_eq!(ranks, expected);

    let bottom = TopPosetPoint::new(&mg, d.clone(), Multiset::empty()).unwrap();
    let whole = circ_upper_set(&mg, &circ_quotient(&mg, &bottom), &support).unwrap();
    assert_eq!(whole.len(), circular_skeleton(&mg, &d, &support).unwrap().classes().len());

    let top = TopPosetPoint::from_points(&mg, d.clone(), vec![(pos(1, 2), d.clone())]).unwrap();
    assert_eq!(circ_upper_set(&mg, &circ_quotient(&mg, &top), &support).unwrap().len(), 1);
}

#[test]
fn phi_is_not_an_orthoscheme_isometry() {
    let z = MarkedGroup::integers();
    let v = TopPosetPoint::from_points(&z, 2, vec![(pos(1, 2), 1)]).unwrap();
    let u1 = TopPosetPoint::from_points(&z, 2, vec![(pos(1, 5), 1), (pos(1, 2), 1)]).unwrap();
    let u2 = TopPosetPoint::from_points(&z, 2, vec![(pos(1, 2), 1), (pos(4, 5), 1)]).unwrap();
    let (w1, w2) = (upper_set_phi(&z, &v, &u1).unwrap(), upper_set_phi(&z, &v, &u2).unwrap());
    let before = simplex_distance(&z, &u1.weighted(&z), &u2.weighted(&z)).unwrap();
    let after = simplex_distance(&z, &w1.weighted(&z), &w2.weighted(&z)).unwrap();
    assert!((before - 0.18f64.sqrt()).abs() < 1e-12);
    assert!((after - 0.6).abs() < 1e-12);

    // Pairs whose extra points all sit on one side of v keep their distance.
    let u3 = TopPosetPoint::from_points(&z, 2, vec![(pos(1, 10), 1), (pos(1, 2), 1)]).unwrap();
    let w3 = upper_set_phi(&z, &v, &u3).unwrap();
    let before = simplex_distance(&z, &u1.weighted(&z), &u3.weighted(&z)).unwrap();
    let after = simplex_distance(&z, &w1.weighted(&z), &w3.weighted(&z)).unwrap();
    assert!((before - after).abs() < 1e-12);
}
