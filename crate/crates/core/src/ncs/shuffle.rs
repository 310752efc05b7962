use crate::error::{Error, Result};
use crate::marked_group::{biane_psi, Group, MarkedGroup, Permutation, SetPartition, SymmetricGroup};

use super::noncrossing::is_noncrossing;

/// The k-shuffle of `parts`: point `m` of part `j` becomes `(m - 1) k + j`.
pub fn shuffle(parts: &[SetPartition]) -> Result<SetPartition> {
    let k = parts.len();
    let Some(d) = parts.first().map(SetPartition::ground) else {
        return Ok(SetPartition::singletons(0));
    };
    if parts.iter().any(|p| p.ground() != d) {
        return Err(Error::Domain("shuffled partitions must share a ground set".into()));
    }
    let blocks = parts
        .iter()
        .enumerate()
        .flat_map(|(j, p)| {
            p.blocks()
                .iter()
                .map(move |b| b.iter().map(|&m| (m - 1) * k + j + 1).collect::<Vec<_>>())
        })
        .collect();
    SetPartition::new(d * k, blocks)
}

/// Recovers the `k` parts of a k-shuffle partition.
pub fn unshuffle(p: &SetPartition, k: usize) -> Result<Vec<SetPartition>> {
    if k == 0 || !p.ground().is_multiple_of(k) {
        return Err(Error::Domain(format!(
            "a partition of {} points is not a {k}-shuffle",
            p.ground()
        )));
    }
    let d = p.ground() / k;
    let mut parts = vec![Vec::new(); k];
    for block in p.blocks() {
        let j = (block[0] - 1) % k;
        if block.iter().any(|&x| (x - 1) % k != j) {
            return Err(Error::Domain(format!("block {block:?} mixes residues mod {k}")));
        }
        parts[j].push(block.iter().map(|&x| (x - 1) / k + 1).collect());
    }
    parts.into_iter().map(|blocks| SetPartition::new(d, blocks)).collect()
}

/// Both sides of the shuffle criterion for `x_1, ..., x_k` in `[1, δ]`:
/// whether the shuffle of their orbit partitions is noncrossing, and
/// whether `x_1 ... x_k` is a length-additive factorization of an element
/// of `[1, δ]`.
pub fn armstrong_check(mg: &MarkedGroup<SymmetricGroup>, xs: &[Permutation]) -> Result<(bool, bool)> {
    let delta = mg.delta();
    for x in xs {
        if !mg.leq(x, &delta)? {
            return Err(Error::Order(format!("{x} is not below {delta}")));
        }
    }
    let parts: Vec<SetPartition> = xs.iter().map(biane_psi).collect();
    let lhs = is_noncrossing(&shuffle(&parts)?);
    let product = mg.product(xs);
    let total: usize = xs.iter().map(|x| mg.length(x)).sum::<Result<usize>>()?;
    let rhs = total == mg.length(&product)? && mg.leq(&product, &delta)?;
    Ok((lhs, rhs))
}

/// Only the length condition, without asking the product to lie below δ.
pub fn lengths_add<G: Group>(mg: &MarkedGroup<G>, xs: &[G::Elem]) -> Result<bool> {
    let total: usize = xs.iter().map(|x| mg.length(x)).sum::<Result<usize>>()?;
    Ok(total == mg.length(&mg.product(xs))?)
}
