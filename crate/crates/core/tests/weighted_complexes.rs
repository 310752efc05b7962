use ncfact_core::factor_posets::{composition, enumerate_linear};
use ncfact_core::poset::binomial;
use ncfact_core::weighted_complexes::{
    build_interval_complex, build_order_complex, face_shape, position::pos, simplex_distance,
    Position, WeightedLinearFactorization,
};
use ncfact_core::MarkedGroup;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn order_complex_cells_count_chains() {
    for d in 2..=4 {
        let mg = MarkedGroup::symmetric(d).unwrap();
        let o = build_order_complex(&mg, &mg.delta()).unwrap();
        let interval = mg.interval(&mg.delta()).unwrap();
        let chains = interval.nonempty_chains(1 << 20).unwrap();
        let mut by_len = vec![0; d];
        for c in chains {
            by_len[c.len() - 1] += 1;
        }
        assert_eq!(o.dims, by_len);
    }
}

#[test]
fn interval_complexes_have_zero_euler_characteristic() {
    for d in 2..=5 {
        let mg = MarkedGroup::symmetric(d).unwrap();
        let k = build_interval_complex(&mg, &mg.delta()).unwrap();
        assert_eq!(k.euler, 0, "d={d}");
        assert_eq!(k.dims[0], 1);
    }
    let mg = MarkedGroup::symmetric(4).unwrap();
    let k = build_interval_complex(&mg, &mg.delta()).unwrap();
    let maximal = mg.interval(&mg.delta()).unwrap().maximal_chain_count();
    assert_eq!(maximal, 16);
    assert_eq!(k.dims[3] as u128, maximal);
}

#[test]
fn gluing_is_well_defined_for_compositions() {
    let z = MarkedGroup::integers();
    for n in 0..=6 {
        let k = build_interval_complex(&z, &n).unwrap();
        for (j, &c) in k.dims.iter().enumerate() {
            // Circular compositions of n with j inner parts: z >= 0 then a
            // composition of n - z into j positive parts.
            let expected: usize = (0..=n as usize)
                .map(|z| if j == 0 { usize::from(z == n as usize) } else if n as usize - z >= j { binomial(n as usize - z - 1, j - 1) } else { 0 })
                .sum();
            assert_eq!(c, expected, "n={n} j={j}");
        }
    }
}

#[test]
fn table_one_face_shapes() {
    let c = |v: Vec<i64>| composition(v).unwrap();
    let z = MarkedGroup::integers();
    let top = c(vec![0, 1, 1, 0]);
    // Faces are named by the vertices they keep out of {1, 2, 3}.
    let faces: Vec<(Vec<usize>, Vec<i64>)> = (0..=2)
        .map(|p| {
            let keep: Vec<usize> = (1..=3).filter(|&v| v != p + 1).collect();
            (keep, face_shape(&top.merge(&z, p).unwrap()))
        })
        .collect();
    assert_eq!(faces[0], (vec![2, 3], vec![1]));
    assert_eq!(faces[1], (vec![1, 3], vec![2]));
    assert_eq!(faces[2], (vec![1, 2], vec![1]));
}

fn random_ts(rng: &mut ChaCha8Rng, k: usize) -> Vec<Position> {
    let mut ts: Vec<Position> = (0..k).map(|_| pos(rng.gen_range(0..=8), 8)).collect();
    ts.sort();
    ts
}

#[test]
fn simplex_distance_is_a_metric_on_each_simplex() {
    let mg = MarkedGroup::symmetric(4).unwrap();
    let p = enumerate_linear(&mg, &mg.delta()).unwrap();
    let tops = p.maximal();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let f = p.item(tops[rng.gen_range(0..tops.len())]);
        let pts: Vec<_> = (0..3)
            .map(|_| WeightedLinearFactorization::in_closed_simplex(&mg, f, &random_ts(&mut rng, 3)).unwrap())
            .collect();
        let dist = |i: usize, j: usize| simplex_distance(&mg, &pts[i], &pts[j]).unwrap();
        for i in 0..3 {
            assert_eq!(dist(i, i), 0.0);
            for j in 0..3 {
                assert!((dist(i, j) - dist(j, i)).abs() < 1e-12);
                if pts[i] != pts[j] {
                    assert!(dist(i, j) > 0.0);
                }
            }
        }
        assert!(dist(0, 2) <= dist(0, 1) + dist(1, 2) + 1e-12);
    }
}
