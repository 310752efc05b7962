use rand::seq::index::sample;
use rand::Rng;

use crate::error::{Error, Result};
use crate::marked_group::{biane_psi, biane_psi_inv, Group, MarkedGroup, Permutation, SymmetricGroup};
use crate::top_poset::{circ_quotient, CircularClass, TopPosetPoint};
use crate::weighted_complexes::position::{pos, zero};

use super::NcsPartition;

/// Sends `0^z s_1^{x_1} ... 1^1` in `F(S_d, δ, S)` to the partition with
/// the orbits of `z` at `0` and the orbits of `x_i` at `s_i`.
pub fn psi_big(mg: &MarkedGroup<SymmetricGroup>, c: &CircularClass<Permutation>) -> Result<NcsPartition> {
    let delta = mg.delta();
    if *c.ambient() != delta {
        return Err(Error::Domain(format!("ambient {} is not {delta}", c.ambient())));
    }
    let mut parts = vec![(zero(), biane_psi(c.fold()))];
    parts.extend(c.interior().iter().map(|(s, x)| (s.clone(), biane_psi(x))));
    let p = NcsPartition::new(delta.degree(), parts)?;
    if !p.is_valid() {
        return Err(Error::Invariant(format!("image {p} of {c:?} is crossing")));
    }
    Ok(p)
}

pub fn psi_big_inv(mg: &MarkedGroup<SymmetricGroup>, p: &NcsPartition) -> Result<CircularClass<Permutation>> {
    let delta = mg.delta();
    if p.d() != delta.degree() {
        return Err(Error::Domain(format!(
            "partition of degree {} used in degree {}",
            p.d(),
            delta.degree()
        )));
    }
    p.validate()?;
    let points = p
        .parts()
        .iter()
        .map(|(s, part)| Ok((s.clone(), biane_psi_inv(part, p.d())?)))
        .collect::<Result<Vec<_>>>()?;
    let u = TopPosetPoint::from_points(mg, delta, points)
        .map_err(|e| Error::Invariant(format!("preimage of {p} is not a point: {e}")))?;
    Ok(circ_quotient(mg, &u))
}

/// A random reduced word of `x` in the transpositions, built one
/// letter at a time from the transpositions below the remainder.
pub fn random_reduced_word<R: Rng>(
    mg: &MarkedGroup<SymmetricGroup>,
    x: &Permutation,
    rng: &mut R,
) -> Result<Vec<Permutation>> {
    let transpositions = mg.group().generators();
    let mut rest = x.clone();
    let mut word = Vec::new();
    while !mg.is_identity(&rest) {
        let below: Vec<&Permutation> = transpositions
            .iter()
            .map(|t| mg.leq(t, &rest).map(|ok| ok.then_some(t)))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        let t = below[rng.gen_range(0..below.len())].clone();
        rest = mg.mul(&mg.inv(&t), &rest);
        word.push(t);
    }
    Ok(word)
}

/// A random point of `F(S_d, δ, I)` on the grid `{0, 1/60, ..., 1}`.
pub fn random_point<R: Rng>(mg: &MarkedGroup<SymmetricGroup>, rng: &mut R) -> Result<TopPosetPoint<Permutation>> {
    let delta = mg.delta();
    let word: Vec<Permutation> = random_reduced_word(mg, &delta, rng)?
        .into_iter()
        .filter(|_| rng.gen_bool(0.5))
        .collect();
    let k = rng.gen_range(1..=word.len().clamp(1, 6));
    let mut grid: Vec<usize> = sample(rng, 61, k).into_vec();
    grid.sort_unstable();
    let mut cuts: Vec<usize> = (1..k).map(|_| rng.gen_range(0..=word.len())).collect();
    cuts.sort_unstable();
    cuts.insert(0, 0);
    cuts.push(word.len());
    let points = grid
        .iter()
        .enumerate()
        .map(|(i, &n)| (pos(n as i64, 60), mg.product(&word[cuts[i]..cuts[i + 1]])))
        .collect();
    TopPosetPoint::from_points(mg, delta, points)
}

/// A random partition of the circle, through [`psi_big`].
pub fn random_ncs<R: Rng>(mg: &MarkedGroup<SymmetricGroup>, rng: &mut R) -> Result<NcsPartition> {
    let u = random_point(mg, rng)?;
    psi_big(mg, &circ_quotient(mg, &u))
}

/// A random point below `u`: each label is replaced by a random subword of
/// one of its reduced words.
pub fn random_below<R: Rng>(
    mg: &MarkedGroup<SymmetricGroup>,
    u: &TopPosetPoint<Permutation>,
    rng: &mut R,
) -> Result<TopPosetPoint<Permutation>> {
    let mut points = Vec::new();
    for (s, x) in u.labels().iter() {
        let word: Vec<Permutation> = random_reduced_word(mg, x, rng)?
            .into_iter()
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        points.push((s.clone(), mg.product(&word)));
    }
    TopPosetPoint::from_points(mg, u.ambient().clone(), points)
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::marked_group::SetPartition;
    use crate::top_poset::{circular_skeleton, subfact_leq};

    #[test]
    fn example_point() {
        let mg = MarkedGroup::symmetric(3).unwrap();
        let a = Permutation::parse(3, "(1 2)").unwrap();
        let b = Permutation::parse(3, "(2 3)").unwrap();
        let u = TopPosetPoint::from_points(
            &mg,
            mg.delta(),
            vec![(zero(), mg.identity()), (pos(1, 3), a), (pos(2, 3), b)],
        )
        .unwrap();
        let c = circ_quotient(&mg, &u);
        let p = psi_big(&mg, &c).unwrap();
        let expect = NcsPartition::new(
            3,
            vec![
                (pos(1, 3), SetPartition::new(3, vec![vec![1, 2], vec![3]]).unwrap()),
                (pos(2, 3), SetPartition::new(3, vec![vec![1], vec![2, 3]]).unwrap()),
            ],
        )
        .unwrap();
        assert_eq!(p, expect);
        assert_eq!(psi_big_inv(&mg, &p).unwrap(), c);
    }

    #[test]
    fn random_round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for d in 2..=6 {
            let mg = MarkedGroup::symmetric(d).unwrap();
            for _ in 0..40 {
                let u = random_point(&mg, &mut rng).unwrap();
                let c = circ_quotient(&mg, &u);
                let p = psi_big(&mg, &c).unwrap();
                assert!(p.is_valid_brute());
                assert_eq!(p.total_criticality(), c.rank(&mg).unwrap());
                assert_eq!(psi_big_inv(&mg, &p).unwrap(), c);
                let v = random_below(&mg, &u, &mut rng).unwrap();
                assert!(subfact_leq(&mg, &v, &u).unwrap());
                let q = psi_big(&mg, &circ_quotient(&mg, &v)).unwrap();
                assert!(q.refinement_leq(&p));
            }
        }
    }

    #[test]
    fn order_matches_on_a_skeleton() {
        let mg = MarkedGroup::symmetric(3).unwrap();
        let support = vec![pos(1, 3), pos(2, 3)];
        let sk = circular_skeleton(&mg, &mg.delta(), &support).unwrap();
        let images: Vec<NcsPartition> = sk.classes().iter().map(|c| psi_big(&mg, c).unwrap()).collect();
        for i in 0..images.len() {
            for j in 0..images.len() {
                assert_eq!(sk.leq(&mg, i, j).unwrap(), images[i].refinement_leq(&images[j]), "{i} {j}");
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        let mg = MarkedGroup::symmetric(4).unwrap();
        let crossing = NcsPartition::new(4, vec![(zero(), SetPartition::new(4, vec![vec![1, 3], vec![2, 4]]).unwrap())])
            .unwrap();
        assert!(matches!(psi_big_inv(&mg, &crossing), Err(Error::Domain(_))));
        assert!(psi_big_inv(&mg, &NcsPartition::discrete(3)).is_err());
    }
}
