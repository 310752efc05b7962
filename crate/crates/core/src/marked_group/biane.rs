use super::{Permutation, SetPartition};
use crate::error::{Error, Result};
use crate::ncs::is_noncrossing;

/// The orbit partition of a permutation.
pub fn biane_psi(p: &Permutation) -> SetPartition {
    SetPartition::new(p.degree(), p.cycles(true)).expect("cycles partition the ground set")
}

/// The permutation cycling each block in increasing order. Defined on
/// noncrossing partitions, where it inverts [`biane_psi`] on `[1, δ]`.
pub fn biane_psi_inv(partition: &SetPartition, degree: usize) -> Result<Permutation> {
    if partition.ground() != degree {
        return Err(Error::Domain(format!(
            "partition of {} points used as a partition of {degree}",
            partition.ground()
        )));
    }
    if !is_noncrossing(partition) {
        return Err(Error::Domain(format!("{partition} is crossing")));
    }
    Permutation::from_cycles(degree, partition.blocks())
}

#[cfg(test)]
mod tests {
    use super::super::MarkedGroup;
    use super::*;

    #[test]
    fn psi_examples() {
        assert_eq!(biane_psi(&Permutation::delta(3)).to_string(), "{{1,2,3}}");
        let a = Permutation::parse(3, "(1 2)").unwrap();
        assert_eq!(biane_psi(&a).to_string(), "{{1,2},{3}}");
    }

    #[test]
    fn psi_inverse_example() {
        let pi = SetPartition::new(4, vec![vec![1, 3], vec![2], vec![4]]).unwrap();
        let p = biane_psi_inv(&pi, 4).unwrap();
        assert_eq!(p, Permutation::parse(4, "(1 3)").unwrap());
        assert_eq!(biane_psi(&p), pi);
        let s4 = MarkedGroup::symmetric(4).unwrap();
        assert!(s4.leq(&p, &s4.delta()).unwrap());
    }

    #[test]
    fn crossing_partition_rejected() {
        let pi = SetPartition::new(4, vec![vec![1, 3], vec![2, 4]]).unwrap();
        assert!(matches!(biane_psi_inv(&pi, 4), Err(Error::Domain(_))));
    }

    #[test]
    fn psi_is_an_order_isomorphism_on_the_noncrossing_interval() {
        for d in 1..=5 {
            let sd = MarkedGroup::symmetric(d).unwrap();
            let delta = sd.delta();
            let iv = sd.interval(&delta).unwrap();
            let images: Vec<SetPartition> = iv.items().iter().map(biane_psi).collect();
            let nc: Vec<SetPartition> =
                SetPartition::all(d).into_iter().filter(is_noncrossing).collect();
            let mut sorted = images.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), images.len(), "psi injective on [1,δ_{d}]");
            let mut nc_sorted = nc.clone();
            nc_sorted.sort();
            assert_eq!(sorted, nc_sorted, "psi onto NC({d})");
            for (i, x) in iv.items().iter().enumerate() {
                assert_eq!(&biane_psi_inv(&images[i], d).unwrap(), x);
                for (j, y) in iv.items().iter().enumerate() {
                    assert_eq!(sd.leq(x, y).unwrap(), images[i].refines(&images[j]), "{x} vs {y}");
                }
            }
        }
    }
}
